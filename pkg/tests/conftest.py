import random

import pytest

from surftri.catalog import (
    bipyramid,
    icosahedron,
    k6_projective_plane,
    k7_torus,
    octahedron,
    tetrahedron,
)
from surftri.generate import GenerationJob, generate_irreducible
from surftri.surface import SurfaceDescriptor
from surftri.transform import enumerate_splits, split_vertex


@pytest.fixture
def tetra():
    return tetrahedron()


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture
def icosa():
    return icosahedron()


@pytest.fixture
def k7():
    return k7_torus()


@pytest.fixture
def k6():
    return k6_projective_plane()


@pytest.fixture(scope="session")
def n1_set():
    return sorted(
        generate_irreducible(GenerationJob(target=SurfaceDescriptor(False, 1))),
        key=lambda t: t.n,
    )


@pytest.fixture(scope="session")
def s1_set():
    return sorted(
        generate_irreducible(GenerationJob(target=SurfaceDescriptor(True, 1), jobs=2)),
        key=lambda t: t.n,
    )


@pytest.fixture(scope="session")
def n2_set():
    return sorted(
        generate_irreducible(GenerationJob(target=SurfaceDescriptor(False, 2), jobs=2)),
        key=lambda t: t.n,
    )


def random_triangulation(seed: int, splits: int = 5, base: str = "sphere"):
    """A pseudorandom triangulation made by random vertex splits of a seed."""
    rng = random.Random(seed)
    t = {
        "sphere": tetrahedron,
        "torus": k7_torus,
        "projective": k6_projective_plane,
    }[base]()
    for _ in range(splits):
        v = rng.randrange(t.n)
        sites = enumerate_splits(t, v)
        t = split_vertex(t, rng.choice(sites))
    return t
