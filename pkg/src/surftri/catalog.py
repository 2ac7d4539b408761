"""Standard small triangulations used as seeds, oracles, and test fixtures."""

from __future__ import annotations

from .triangulation import Triangulation


def tetrahedron() -> Triangulation:
    """K_4 on the sphere, the unique irreducible sphere triangulation."""
    return Triangulation.from_faces(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def bipyramid() -> Triangulation:
    """The unique 5-vertex sphere triangulation: equator 0,1,2 and apexes 3,4."""
    return Triangulation.from_faces(
        5,
        [(0, 1, 3), (1, 2, 3), (0, 2, 3), (0, 1, 4), (1, 2, 4), (0, 2, 4)],
    )


def octahedron() -> Triangulation:
    # Opposite (nonadjacent) pairs: (0,3), (1,4), (2,5).
    return Triangulation.from_faces(
        6,
        [
            (0, 1, 2), (0, 1, 5), (0, 4, 2), (0, 4, 5),
            (3, 1, 2), (3, 1, 5), (3, 4, 2), (3, 4, 5),
        ],
    )


def icosahedron() -> Triangulation:
    faces = [(0, i, i % 5 + 1) for i in range(1, 6)]
    faces += [(11, i, (i - 5) % 5 + 6) for i in range(6, 11)]
    # antiprism band between pentagons 1..5 and 6..10
    band = [
        (1, 6, 7), (1, 7, 2), (2, 7, 8), (2, 8, 3), (3, 8, 9),
        (3, 9, 4), (4, 9, 10), (4, 10, 5), (5, 10, 6), (5, 6, 1),
    ]
    faces += band
    return Triangulation.from_faces(12, faces)


def k7_torus() -> Triangulation:
    """The standard triangular embedding of K_7 in the torus (vertices Z_7)."""
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 2) % 7, (i + 3) % 7))
    return Triangulation.from_faces(7, faces)


def k6_projective_plane() -> Triangulation:
    """K_6 in the projective plane (the antipodal quotient of the icosahedron)."""
    return Triangulation.from_faces(
        6,
        [
            (0, 1, 3), (1, 2, 4), (0, 2, 3), (1, 3, 4), (0, 2, 4),
            (0, 1, 5), (1, 2, 5), (2, 3, 5), (3, 4, 5), (0, 4, 5),
        ],
    )
