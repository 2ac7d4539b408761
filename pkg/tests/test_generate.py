import collections

import pytest

from surftri import generate as gen
from surftri.canon import are_equivalent, canonical_code
from surftri.catalog import k6_projective_plane, k7_torus, tetrahedron
from surftri.errors import TriangulationError
from surftri.surface import SPHERE, SurfaceDescriptor
from surftri.transform import is_irreducible


class TestOracle:
    @pytest.mark.parametrize("n,count", [(4, 1), (5, 1), (6, 2), (7, 5), (8, 14)])
    def test_sphere_counts(self, n, count):
        assert len(gen.brute_force_triangulations(SPHERE, n)) == count

    def test_projective_n6(self):
        got = gen.brute_force_triangulations(SurfaceDescriptor(False, 1), 6)
        assert len(got) == 1
        assert are_equivalent(got[0], k6_projective_plane())
        assert [t for t in got if is_irreducible(t)] == got

    def test_torus_n7(self):
        got = gen.brute_force_triangulations(SurfaceDescriptor(True, 1), 7)
        assert len(got) == 1
        assert are_equivalent(got[0], k7_torus())

    def test_no_tiny_triangulations(self):
        assert gen.brute_force_triangulations(SPHERE, 3) == []
        assert gen.brute_force_triangulations(SurfaceDescriptor(False, 1), 5) == []


class TestClosure:
    def test_matches_oracle_at_six(self):
        members = list(gen.splitting_closure(tetrahedron(), 6))
        assert [m.n for m in members] == [4, 5, 6, 6]
        six = {canonical_code(t) for t in gen.brute_force_triangulations(SPHERE, 6)}
        assert {canonical_code(m) for m in members if m.n == 6} == six

    def test_identity_cap(self):
        members = list(gen.splitting_closure(tetrahedron(), 4))
        assert len(members) == 1 and members[0].faces == tetrahedron().faces

    def test_monotone_in_cap(self):
        sizes = [sum(1 for _ in gen.splitting_closure(tetrahedron(), cap)) for cap in (4, 5, 6, 7)]
        assert sizes == sorted(sizes)
        assert sizes == [1, 2, 4, 9]  # 1+1+2+5 cumulative

    def test_projective_closure_counts(self):
        # the union over the two irreducible seeds is the full census
        # (oracle cross-check at n = 7 and 8 below)
        n1 = gen.generate_irreducible(gen.GenerationJob(target=SurfaceDescriptor(False, 1)))
        merged = collections.Counter()
        seen = set()
        for seed in n1:
            for m in gen.splitting_closure(seed, 9):
                c = canonical_code(m)
                if c not in seen:
                    seen.add(c)
                    merged[m.n] += 1
        assert dict(merged) == {6: 1, 7: 3, 8: 16, 9: 134}
        for n in (7, 8):
            oracle = gen.brute_force_triangulations(SurfaceDescriptor(False, 1), n)
            assert len(oracle) == merged[n]


class TestGeneration:
    def test_sphere_base_case(self):
        got = gen.generate_irreducible(gen.GenerationJob(target=SPHERE))
        assert len(got) == 1
        assert are_equivalent(next(iter(got)), tetrahedron())

    def test_n1_census(self, n1_set):
        assert [t.n for t in n1_set] == [6, 7]
        assert all(is_irreducible(t) for t in n1_set)
        assert all(t.surface_of() == SurfaceDescriptor(False, 1) for t in n1_set)
        assert any(are_equivalent(t, k6_projective_plane()) for t in n1_set)

    def test_s1_at_cap_8(self):
        got = gen.generate_irreducible(gen.GenerationJob(target=SurfaceDescriptor(True, 1), cap=8))
        hist = collections.Counter(t.n for t in got)
        assert dict(hist) == {7: 1, 8: 4}

    def test_incomplete_seeds(self):
        with pytest.raises(TriangulationError) as exc:
            gen.generate_irreducible(gen.GenerationJob(target=SurfaceDescriptor(False, 2)))
        assert exc.value.code == "INCOMPLETE_SEEDS"

    def test_determinism_across_jobs(self, n1_set):
        job1 = gen.GenerationJob(target=SurfaceDescriptor(False, 1), jobs=1)
        job2 = gen.GenerationJob(target=SurfaceDescriptor(False, 1), jobs=2)
        a = sorted(canonical_code(t) for t in gen.generate_irreducible(job1))
        b = sorted(canonical_code(t) for t in gen.generate_irreducible(job2))
        assert a == b == sorted(canonical_code(t) for t in n1_set)

    def test_pure_engine_matches_kernels(self, monkeypatch):
        monkeypatch.setenv("SURFTRI_PURE", "1")
        monkeypatch.setattr(gen, "_KERNELS_FLAG", None)
        pure = gen.generate_irreducible(gen.GenerationJob(target=SurfaceDescriptor(False, 1)))
        monkeypatch.delenv("SURFTRI_PURE")
        monkeypatch.setattr(gen, "_KERNELS_FLAG", None)
        fast = gen.generate_irreducible(gen.GenerationJob(target=SurfaceDescriptor(False, 1)))
        assert sorted(map(canonical_code, pure)) == sorted(map(canonical_code, fast))

    def test_checkpoint_resume(self, tmp_path):
        target = SurfaceDescriptor(False, 1)
        job = gen.GenerationJob(target=target, checkpoint_dir=tmp_path)
        first = gen.generate_irreducible(job)
        assert (tmp_path / "done.log").exists()
        assert (tmp_path / "partial.tri").exists()
        done = (tmp_path / "done.log").read_text().splitlines()
        assert done == ["N1:crosscap:S0"]
        # a resumed run skips the unit and reloads the records
        again = gen.generate_irreducible(gen.GenerationJob(target=target, checkpoint_dir=tmp_path))
        assert sorted(map(canonical_code, again)) == sorted(map(canonical_code, first))


class TestReduceGenus:
    def test_k7_reduces_to_k4(self):
        reduced = gen.reduce_genus(k7_torus())
        assert len(reduced) == 1
        assert are_equivalent(reduced[0], tetrahedron())

    def test_k6_has_no_two_sided_reduction(self):
        # every nonseparating 3-cycle in the projective plane is one-sided
        assert gen.reduce_genus(k6_projective_plane()) == []

    def test_preconditions(self):
        with pytest.raises(TriangulationError):
            gen.reduce_genus(tetrahedron())
