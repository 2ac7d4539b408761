import random

import pytest
from hypothesis import given, settings, strategies as st

from surftri.catalog import k6_projective_plane, k7_torus, octahedron, tetrahedron
from surftri.errors import InvalidTriangulation
from surftri.triangulation import Triangulation, format_record, parse_record

from conftest import random_triangulation


def test_tetrahedron_valid():
    t = Triangulation.from_faces(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert t.n == 4 and len(t.faces) == 4 and t.num_edges == 6


def test_duplicate_face_rejected():
    with pytest.raises(InvalidTriangulation) as exc:
        Triangulation.from_faces(3, [(0, 1, 2), (2, 1, 0)])
    assert exc.value.code == "SHARED_EDGES"


def test_edge_in_three_faces_rejected():
    # two tetrahedra sharing face 012, with the shared face kept
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4), (0, 2, 4), (1, 2, 4)]
    with pytest.raises(InvalidTriangulation) as exc:
        Triangulation.from_faces(5, faces)
    assert exc.value.code == "EDGE_DEGREE"


def test_repeated_vertex_rejected():
    with pytest.raises(InvalidTriangulation) as exc:
        Triangulation.from_faces(4, [(0, 1, 1), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.code == "NON_TRIANGLE"


def test_label_range_rejected():
    with pytest.raises(InvalidTriangulation) as exc:
        Triangulation.from_faces(3, [(0, 1, 3), (0, 1, 2), (0, 2, 3), (1, 2, 3)])
    assert exc.value.code == "LABEL_RANGE"


def test_unused_vertex_rejected():
    with pytest.raises(InvalidTriangulation) as exc:
        Triangulation.from_faces(5, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.code == "DISCONNECTED"


def test_pinched_complex_rejected():
    # two tetrahedra meeting in the single vertex 0
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
             (0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6)]
    with pytest.raises(InvalidTriangulation) as exc:
        Triangulation.from_faces(7, faces)
    assert exc.value.code == "PINCHED"


def test_euler_characteristic_examples():
    assert tetrahedron().euler_characteristic() == 2
    assert k7_torus().euler_characteristic() == 0
    assert k6_projective_plane().euler_characteristic() == 1


def test_orientability_examples():
    assert tetrahedron().is_orientable()
    assert k7_torus().is_orientable()
    assert not k6_projective_plane().is_orientable()


def test_surface_of_examples():
    assert tetrahedron().surface_of().name == "S0"
    assert k7_torus().surface_of().name == "S1"
    assert k6_projective_plane().surface_of().name == "N1"
    assert octahedron().surface_of().name == "S0"


def test_links_are_cycles():
    t = k7_torus()
    for v in range(7):
        link = t.link(v)
        assert len(link) == 6 and set(link) == t.neighbors(v)
        pos = t.link_position(v)
        for i, w in enumerate(link):
            assert pos[w] == i


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_validation_label_permutation_invariant(seed):
    rng = random.Random(seed)
    t = random_triangulation(seed, splits=4)
    perm = list(range(t.n))
    rng.shuffle(perm)
    relabeled = [tuple(perm[v] for v in f) for f in t.faces]
    u = Triangulation.from_faces(t.n, relabeled)
    assert u.euler_characteristic() == t.euler_characteristic()
    assert u.is_orientable() == t.is_orientable()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["sphere", "torus", "projective"]))
def test_record_round_trip(seed, base):
    t = random_triangulation(seed, splits=3, base=base)
    again = parse_record(format_record(t))
    assert again.faces == t.faces and again.n == t.n


def test_sphere_is_orientable_property():
    # chi == 2 forces orientability; any failure is an orientation-propagation bug
    for seed in range(25):
        t = random_triangulation(seed, splits=6, base="sphere")
        assert t.euler_characteristic() == 2
        assert t.is_orientable()


def test_compact_round_trips():
    for base in ("sphere", "torus", "projective"):
        t = random_triangulation(7, splits=4, base=base)
        assert Triangulation.from_bytes(t.to_bytes()).faces == t.faces
        u = Triangulation.from_linkbytes(t.to_linkbytes())
        assert u.faces == t.faces
        for v in range(u.n):
            assert u.link(v) == t.link(v)
