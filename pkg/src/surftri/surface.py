"""Closed-surface descriptors and closed-form vertex-count bounds.

A surface is named by (orientable, genus): ``S_g`` is the sphere with g
handles, ``N_g`` the sphere with g crosscaps (g >= 1).  Everything here is a
pure function of that pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TriangulationError


@dataclass(frozen=True, order=True)
class SurfaceDescriptor:
    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise TriangulationError("BAD_G", "genus must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise TriangulationError("BAD_G", "nonorientable surfaces need genus >= 1")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_characteristic

    @property
    def name(self) -> str:
        return f"{'S' if self.orientable else 'N'}{self.genus}"

    @classmethod
    def parse(cls, name: str) -> "SurfaceDescriptor":
        """Parse "S2" / "N3" style names (as used in CLI flags and file headers)."""
        name = name.strip()
        if len(name) < 2 or name[0] not in "SN" or not name[1:].isdigit():
            raise TriangulationError("UNSUPPORTED_SURFACE", f"cannot parse surface name {name!r}")
        return cls(orientable=name[0] == "S", genus=int(name[1:]))

    def __repr__(self):
        return f"SurfaceDescriptor({self.name})"


SPHERE = SurfaceDescriptor(True, 0)
TORUS = SurfaceDescriptor(True, 1)
PROJECTIVE_PLANE = SurfaceDescriptor(False, 1)
KLEIN_BOTTLE = SurfaceDescriptor(False, 2)


def euler_genus(s: SurfaceDescriptor) -> int:
    """Euler genus 2 - chi: twice the genus for S_g, the genus itself for N_g."""
    return s.euler_genus


# Surfaces whose minimal triangulations have one vertex more than the
# square-root formula predicts.
_VMIN_EXCEPTIONS = {SurfaceDescriptor(False, 2), SurfaceDescriptor(False, 3), SurfaceDescriptor(True, 2)}


def v_min(s: SurfaceDescriptor) -> int:
    """Minimum vertex count of a triangulation of s.

    ceil((7 + sqrt(49 - 24*chi)) / 2), evaluated exactly: the answer is the
    least v with (2v - 7)^2 >= 49 - 24*chi.  N_2, N_3 and S_2 need one vertex
    more than the formula gives.
    """
    d = 49 - 24 * s.euler_characteristic
    v = 4
    while (2 * v - 7) ** 2 < d:
        v += 1
    if s in _VMIN_EXCEPTIONS:
        v += 1
    return v


def v_max_lower_bound(s: SurfaceDescriptor) -> int:
    """Lower bound for the maximum vertex count of an irreducible triangulation.

    floor(17g/2) for S_g and floor(11g/2) for N_g, realized by explicit joins
    of punctured maximal triangulations (see analyze.build_large_irreducible).
    Not defined for the sphere.
    """
    if s.genus < 1:
        raise TriangulationError("UNSUPPORTED_SURFACE", "no lower-bound construction for S0")
    return (17 * s.genus) // 2 if s.orientable else (11 * s.genus) // 2
