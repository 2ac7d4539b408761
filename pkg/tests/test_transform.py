import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from surftri import transform as tr
from surftri.canon import are_equivalent, canonical_code
from surftri.catalog import (
    bipyramid,
    icosahedron,
    k6_projective_plane,
    k7_torus,
    octahedron,
    tetrahedron,
)
from surftri.errors import TriangulationError
from surftri.generate import brute_force_triangulations
from surftri.surface import SPHERE
from surftri.triangulation import Triangulation

from conftest import random_triangulation


def count_3cycles_through(t, a, b):
    """Independent oracle: 3-cycles through edge ab by common-neighbor scan."""
    return sum(1 for c in range(t.n)
               if c not in (a, b) and t.has_edge(a, c) and t.has_edge(b, c))


class TestContraction:
    def test_icosahedron_all_edges_contractible(self, icosa):
        for e in icosa.edges:
            assert count_3cycles_through(icosa, *e) == 2
            assert tr.is_contractible(icosa, e)

    def test_k7_no_edge_contractible(self, k7):
        for e in k7.edges:
            assert count_3cycles_through(k7, *e) == 5
            assert not tr.is_contractible(k7, e)

    def test_k4_exception(self, tetra):
        for e in tetra.edges:
            assert count_3cycles_through(tetra, *e) == 2  # criterion alone would say yes
            assert not tr.is_contractible(tetra, e)
        with pytest.raises(TriangulationError) as exc:
            tr.contract(tetra, (0, 1))
        assert exc.value.code == "NOT_CONTRACTIBLE"

    def test_missing_edge(self, octa):
        with pytest.raises(TriangulationError) as exc:
            tr.is_contractible(octa, (0, 3))
        assert exc.value.code == "NO_SUCH_EDGE"

    def test_octahedron_contracts_to_unique_five_vertex(self, octa):
        five = brute_force_triangulations(SPHERE, 5)
        assert len(five) == 1
        got = tr.contract(octa, octa.edges[0])
        assert got.n == octa.n - 1
        assert are_equivalent(got, five[0])

    def test_irreducibility(self, tetra, k7, icosa, k6):
        assert tr.is_irreducible(tetra)
        assert tr.is_irreducible(k7)
        assert tr.is_irreducible(k6)
        assert not tr.is_irreducible(icosa)

    def test_contract_to_irreducible(self, icosa, tetra, k7):
        assert are_equivalent(tr.contract_to_irreducible(icosa), tetra)
        assert tr.contract_to_irreducible(k7) is k7

    def test_fast_path_agrees_with_perform_and_validate(self):
        for seed in range(12):
            t = random_triangulation(seed, splits=4, base="projective")
            for e in t.edges:
                fast = t.n > 4 and count_3cycles_through(t, *e) == 2
                assert fast == tr.is_contractible(t, e)


class TestSplitting:
    def test_tetrahedron_sites(self, tetra):
        for v in range(4):
            sites = tr.enumerate_splits(tetra, v)
            assert len(sites) == 3
            for site in sites:
                u = tr.split_vertex(tetra, site)
                Triangulation.from_faces(u.n, u.faces)
                assert are_equivalent(u, bipyramid())

    def test_site_count_bound(self):
        for seed in range(8):
            t = random_triangulation(seed, splits=3, base="torus")
            for v in range(t.n):
                d = t.degree(v)
                assert len(tr.enumerate_splits(t, v)) <= d * (d - 1) // 2

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**9), st.sampled_from(["sphere", "torus", "projective"]))
    def test_split_contract_duality(self, seed, base):
        rng = random.Random(seed)
        t = random_triangulation(seed, splits=3, base=base)
        v = rng.randrange(t.n)
        site = rng.choice(tr.enumerate_splits(t, v))
        u = tr.split_vertex(t, site)
        Triangulation.from_faces(u.n, u.faces)  # split output re-validates
        assert u.n == t.n + 1
        assert u.surface_of() == t.surface_of()
        back = tr.contract(u, (site.vertex, t.n))
        assert are_equivalent(back, t)

    def test_illegal_site(self, octa):
        with pytest.raises(TriangulationError) as exc:
            tr.split_vertex(octa, tr.SplitSite(vertex=0, b=1, c=3, moved=()))
        assert exc.value.code == "ILLEGAL_SITE"


class TestFlip:
    def test_k4_not_flippable(self, tetra):
        assert all(not tr.is_flippable(tetra, e) for e in tetra.edges)
        with pytest.raises(TriangulationError) as exc:
            tr.flip(tetra, (0, 1))
        assert exc.value.code == "NOT_FLIPPABLE"

    def test_octahedron_all_flippable(self, octa):
        # opposite vertices are the only nonadjacent pairs
        for e in octa.edges:
            assert tr.is_flippable(octa, e)

    def test_flip_involution_and_invariants(self, octa):
        f = tr.flip(octa, (0, 1))
        Triangulation.from_faces(f.n, f.faces)
        assert (f.n, f.num_edges, len(f.faces)) == (octa.n, octa.num_edges, len(octa.faces))
        assert f.euler_characteristic() == 2 and f.is_orientable()
        assert tr.flip(f, (2, 5)).faces == octa.faces

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**9))
    def test_flip_preserves_surface(self, seed):
        rng = random.Random(seed)
        t = random_triangulation(seed, splits=3, base="torus")
        flippable = [e for e in t.edges if tr.is_flippable(t, e)]
        if not flippable:
            return
        f = tr.flip(t, rng.choice(flippable))
        Triangulation.from_faces(f.n, f.faces)
        assert f.surface_of() == t.surface_of()


class TestJoins:
    def test_two_tetrahedra(self, tetra):
        out = tr.join_at_faces(tetra, (1, 2, 3), tetra, (1, 2, 3), {1: 1, 2: 2, 3: 3})
        assert out.n == 5
        assert are_equivalent(out, bipyramid())

    def test_euler_genus_adds(self, k7, k6):
        out = tr.join_at_faces(k7, k7.faces[0], k6, k6.faces[0],
                               dict(zip(k7.faces[0], k6.faces[0])))
        assert 2 - out.euler_characteristic() == 2 + 1
        assert not out.is_orientable()
        assert out.n == 7 + 6 - 3

    def test_self_join_octahedron_opposite_faces_invalid(self, octa):
        for m in tr.triangle_matchings((0, 1, 2), (3, 4, 5)):
            with pytest.raises(TriangulationError):
                tr.self_join_at_faces(octa, (0, 1, 2), (3, 4, 5), m, want_orientable=True)

    def _first_self_join(self, seeds=range(30), splits=8):
        for seed in seeds:
            t = random_triangulation(seed, splits=splits, base="sphere")
            for f1, f2 in combinations(t.faces, 2):
                if set(f1) & set(f2):
                    continue
                for m in tr.triangle_matchings(f1, f2):
                    for want in (True, False):
                        try:
                            r = tr.self_join_at_faces(t, f1, f2, m, want_orientable=want)
                        except TriangulationError:
                            continue
                        return t, f1, f2, m, want, r
        return None

    def test_self_join_genus_steps(self):
        hit = self._first_self_join()
        assert hit is not None, "expected a valid self-join on some 12-vertex sphere"
        t, f1, f2, m, want, r = hit
        assert r.n == t.n - 3
        assert 2 - r.euler_characteristic() == 2
        assert r.is_orientable() == want

    def test_wrong_orientability_error(self):
        hit = self._first_self_join()
        assert hit is not None
        t, f1, f2, m, want, _ = hit
        with pytest.raises(TriangulationError) as exc:
            tr.self_join_at_faces(t, f1, f2, m, want_orientable=not want)
        assert exc.value.code == "WRONG_ORIENTABILITY"

    def test_shared_vertex_fold_rejected(self):
        # a fold along a shared edge can validate as a complex, but it is not
        # the 3-merge surgery; the operation must reject it
        raised = {}
        for seed in range(20):
            t = random_triangulation(seed, splits=6, base="sphere")
            for f1, f2 in combinations(t.faces, 2):
                if not set(f1) & set(f2):
                    continue
                for m in tr.triangle_matchings(f1, f2):
                    try:
                        tr.self_join_at_faces(t, f1, f2, m, want_orientable=True)
                        pytest.fail("shared-vertex join must never succeed")
                    except TriangulationError as exc:
                        raised[exc.code] = raised.get(exc.code, 0) + 1
        assert set(raised) <= {"INVALID_RESULT", "WRONG_ORIENTABILITY"}


class TestCrosscap:
    def test_wrong_degree(self, octa):
        with pytest.raises(TriangulationError) as exc:
            tr.crosscap_identify(octa, 0)
        assert exc.value.code == "WRONG_DEGREE"

    def test_crosscap_adds_one_genus(self):
        # walk sphere triangulations (result needs n - 4 >= 6) until one
        # degree-6 star identifies cleanly
        from surftri.generate import splitting_closure

        for t in splitting_closure(tetrahedron(), 11):
            if t.n < 10:
                continue
            for v in range(t.n):
                if t.degree(v) != 6:
                    continue
                try:
                    r = tr.crosscap_identify(t, v)
                except TriangulationError:
                    continue
                assert r.n == t.n - 4
                assert 2 - r.euler_characteristic() == 1
                assert not r.is_orientable()
                return
        pytest.fail("no crosscap succeeded in the sphere closure")


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["sphere", "torus", "projective"]))
def test_transforms_always_emit_valid_complexes(seed, base):
    rng = random.Random(seed)
    t = random_triangulation(seed, splits=4, base=base)
    v = rng.randrange(t.n)
    u = tr.split_vertex(t, rng.choice(tr.enumerate_splits(t, v)))
    Triangulation.from_faces(u.n, u.faces)
    contractible = [e for e in u.edges if tr.is_contractible(u, e)]
    if contractible:
        c = tr.contract(u, rng.choice(contractible))
        Triangulation.from_faces(c.n, c.faces)
    flippable = [e for e in u.edges if tr.is_flippable(u, e)]
    if flippable:
        f = tr.flip(u, rng.choice(flippable))
        Triangulation.from_faces(f.n, f.faces)
