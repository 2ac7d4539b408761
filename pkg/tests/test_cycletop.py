import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from surftri import cycletop as ct
from surftri.catalog import (
    bipyramid,
    k6_projective_plane,
    k7_torus,
    octahedron,
    tetrahedron,
)
from surftri.errors import SearchExhausted, TriangulationError
from surftri.surface import SurfaceDescriptor

from conftest import random_triangulation


def brute_cycle_count(t, max_len):
    """Independent oracle: normalized vertex sequences over all permutations."""
    found = set()
    for k in range(3, max_len + 1):
        for perm in permutations(range(t.n), k):
            if all(t.has_edge(perm[i], perm[(i + 1) % k]) for i in range(k)):
                found.add(ct.normalize_cycle(perm))
    return len(found)


class TestEnumeration:
    def test_tetrahedron_counts(self, tetra):
        assert sum(1 for _ in ct.enumerate_cycles(tetra, 3)) == 4
        assert sum(1 for _ in ct.enumerate_cycles(tetra, 4)) == 7
        assert brute_cycle_count(tetra, 4) == 7

    def test_k7_triangles(self, k7):
        assert sum(1 for _ in ct.enumerate_cycles(k7, 3)) == 35

    def test_unique_normalized_and_ordered(self, octa):
        seen = set()
        last_len = 3
        for c in ct.enumerate_cycles(octa, 6):
            assert len(c) >= last_len
            last_len = len(c)
            assert c == ct.normalize_cycle(c)
            assert c not in seen
            seen.add(c)
        assert len(seen) == brute_cycle_count(octa, 6)

    def test_bad_bound(self, octa):
        with pytest.raises(TriangulationError):
            list(ct.enumerate_cycles(octa, 2))


class TestCutting:
    def test_bipyramid_equator(self):
        bip = bipyramid()
        cx = ct.cut_along_cycle(bip, (0, 1, 2))
        assert len(cx.boundaries) == 2
        parts = cx.components()
        assert len(parts) == 2
        for p in parts:
            assert len(p.boundaries) == 1
            assert p.capped() == (0, True)  # both sides are disks
        assert cx.euler_characteristic() == bip.euler_characteristic()

    def test_k7_nonfacial_cut(self, k7):
        faceset = set(k7.faces)
        c = next(c for c in ct.enumerate_cycles(k7, 3) if tuple(sorted(c)) not in faceset)
        cx = ct.cut_along_cycle(k7, c)
        assert len(cx.components()) == 1
        assert len(cx.boundaries) == 2
        assert cx.euler_characteristic() == 0

    def test_k6_one_sided_cut(self, k6):
        w = ct.find_nonseparating_of_type(k6, "one", "orientable")
        cx = ct.cut_along_cycle(k6, w)
        assert len(cx.boundaries) == 1
        assert len(cx.boundaries[0]) == 2 * len(w)
        assert cx.euler_characteristic() == 1

    def test_invalid_cycle(self, octa):
        with pytest.raises(TriangulationError) as exc:
            ct.cut_along_cycle(octa, (0, 1, 3))  # 0-3 not an edge
        assert exc.value.code == "INVALID_CYCLE"
        with pytest.raises(TriangulationError):
            ct.cut_along_cycle(octa, (0, 1, 1, 2))


class TestClassification:
    def test_facial_cycles_contractible(self, tetra, k7, k6):
        for t in (tetra, k7, k6):
            cls = ct.classify_cycle(t, t.faces[0])
            assert cls.separating and cls.contractible and cls.sided == "two"

    def test_k7_nonfacial(self, k7):
        faceset = set(k7.faces)
        c = next(c for c in ct.enumerate_cycles(k7, 3) if tuple(sorted(c)) not in faceset)
        cls = ct.classify_cycle(k7, c)
        assert not cls.separating
        assert cls.sided == "two" and cls.leaving == "orientable"
        assert cls.components == ((0, True),)

    def test_k6_types(self, k6):
        cls = ct.classify_cycle(k6, ct.find_nonseparating_of_type(k6, "one", "orientable"))
        assert (cls.sided, cls.leaving) == ("one", "orientable")
        assert not cls.separating and cls.components == ((0, True),)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**9), st.sampled_from(["sphere", "torus", "projective"]))
    def test_classification_bookkeeping(self, seed, base):
        rng = random.Random(seed)
        t = random_triangulation(seed, splits=3, base=base)
        eg = 2 - t.euler_characteristic()
        cycles = list(ct.enumerate_cycles(t, min(t.n, 5)))
        for c in rng.sample(cycles, min(6, len(cycles))):
            cls = ct.classify_cycle(t, c)
            caps = [g for g, _ in cls.components]
            if cls.separating:
                assert len(cls.components) == 2
                assert sum(caps) == eg
                assert cls.sided == "two"
            else:
                assert len(cls.components) == 1
                assert caps[0] == eg - (2 if cls.sided == "two" else 1)
            if cls.sided == "one":
                assert not t.is_orientable()
            if cls.contractible:
                assert cls.separating and 0 in caps
            # fast predicates agree with the full cut
            sep, contractible = ct._classify_separating_fast(t, c)
            assert sep == cls.separating and contractible == cls.contractible


class TestSearches:
    def test_edge_width_none_certified(self, tetra, k7, k6):
        for t in (tetra, k7, k6):
            assert ct.edge_width(t) is None

    def test_edge_width_bounded_exhaustion(self, k7):
        with pytest.raises(SearchExhausted) as exc:
            ct.edge_width(k7, max_length=5)
        assert exc.value.bound == 5

    def test_nsc_bad_h(self, k7):
        with pytest.raises(TriangulationError) as exc:
            ct.find_nsc_with_genera(k7, 0)
        assert exc.value.code == "BAD_H"
        with pytest.raises(TriangulationError):
            ct.find_nsc_with_genera(k7, 2)

    def test_impossible_types(self, k7, tetra, k6):
        for args in ((k7, "one", "orientable"), (k7, "one", "nonorientable"),
                     (k7, "two", "nonorientable"), (tetra, "two", "orientable"),
                     (k6, "one", "nonorientable"), (k6, "two", "orientable")):
            with pytest.raises(TriangulationError) as exc:
                ct.find_nonseparating_of_type(*args)
            assert exc.value.code == "IMPOSSIBLE_TYPE"

    def test_k7_two_sided_witness(self, k7):
        w = ct.find_nonseparating_of_type(k7, "two", "orientable")
        assert w is not None and len(w) == 3

    def test_nonseparating_3cycles(self, tetra, k7):
        assert all(ct.nonseparating_3cycles_at(tetra, v) == 0 for v in range(4))
        assert all(ct.nonseparating_3cycles_at(k7, v) >= 2 for v in range(7))

    def test_min_genus_split_on_join(self):
        """A torus joined to a projective plane has an NSC splitting 3 = 1 + 2."""
        from surftri.transform import join_at_faces

        k7 = k7_torus()
        k6 = k6_projective_plane()
        t = join_at_faces(k7, k7.faces[0], k6, k6.faces[0],
                          dict(zip(k7.faces[0], k6.faces[0])))
        w = ct.find_nsc_with_genera(t, 1)
        assert w is not None and len(w) == 3  # the seam itself qualifies
        cls = ct.classify_cycle(t, w)
        assert cls.separating and not cls.contractible
        req = (SurfaceDescriptor(False, 1), SurfaceDescriptor(True, 1))
        assert ct.find_nsc_with_genera(t, 1, req) is not None
