"""Set-level studies: almost-irreducibility, flip classes, explicit maximal
constructions, and the theorem checks run over generated censuses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_code, canonical_form
from .errors import TriangulationError
from .surface import SurfaceDescriptor, v_max_lower_bound
from .transform import (
    contract,
    flip,
    is_contractible,
    is_flippable,
    is_irreducible,
    join_at_faces,
    triangle_matchings,
)
from .triangulation import Triangulation
from . import cycletop, generate


# -- contractible-edge bookkeeping ---------------------------------------------

def contractible_edges(t: Triangulation) -> list:
    return [e for e in t.edges if is_contractible(t, e)]


def is_almost_irreducible(t: Triangulation) -> bool:
    """Reducible, with every contractible edge on one face."""
    edges = contractible_edges(t)
    if not edges:
        return False
    need = set(edges)
    for a, b, c in t.faces:
        if need <= {(a, b), (a, c), (b, c)}:
            return True
    return False


# -- flip graph ---------------------------------------------------------------

def _flip_neighbors(t: Triangulation):
    for e in t.edges:
        if is_flippable(t, e):
            yield flip(t, e)


def is_pseudo_minimal(t: Triangulation) -> bool:
    """Irreducible, and diagonal flips only ever reach irreducible triangulations.

    Breadth-first over the flip class by canonical code; exits at the first
    reducible triangulation reached.
    """
    if not is_irreducible(t):
        return False
    seen = {canonical_code(t)}
    queue = [t]
    while queue:
        cur = queue.pop()
        for nxt in _flip_neighbors(cur):
            code = canonical_code(nxt)
            if code in seen:
                continue
            if not is_irreducible(nxt):
                return False
            seen.add(code)
            queue.append(nxt)
    return True


def flip_equivalence_classes(ts) -> list[list[Triangulation]]:
    """Partition the input under flip reachability.

    Exploration may pass through triangulations outside the input set;
    membership is decided by canonical code.  All inputs must share one
    surface and vertex count.
    """
    members = list(ts)
    if not members:
        return []
    n = members[0].n
    surf = members[0].surface_of()
    for t in members[1:]:
        if t.n != n or t.surface_of() != surf:
            raise TriangulationError("MIXED_INPUT", "inputs differ in surface or vertex count")
    input_by_code = {}
    for t in members:
        input_by_code.setdefault(canonical_code(t), t)
    classes = []
    assigned = set()
    for code in sorted(input_by_code):
        if code in assigned:
            continue
        component = {code}
        queue = [input_by_code[code]]
        while queue:
            cur = queue.pop()
            for nxt in _flip_neighbors(cur):
                c = canonical_code(nxt)
                if c not in component:
                    component.add(c)
                    queue.append(nxt)
        group = [input_by_code[c] for c in sorted(component) if c in input_by_code]
        assigned.update(c for c in component if c in input_by_code)
        classes.append(group)
    return classes


# -- explicit constructions -----------------------------------------------------

@dataclass(frozen=True)
class BorderedBase:
    """A sphere triangulation with marked faces to be removed at join time.

    Completing it (keeping the marked faces) gives a valid sphere
    triangulation in which every edge lies on a marked face, so gluing a
    punctured triangulation over each marked face leaves no contractible
    edge on the base.
    """

    n: int
    faces: tuple  # faces kept
    removed: tuple  # faces marked for joining

    def completed(self) -> Triangulation:
        return Triangulation.from_faces(self.n, list(self.faces) + list(self.removed))


@lru_cache(maxsize=None)
def build_M() -> Triangulation:
    """The 7-vertex irreducible triangulation of the projective plane."""
    irr = generate.generate_irreducible(generate.GenerationJob(target=SurfaceDescriptor(False, 1)))
    return max(irr, key=lambda t: t.n)


def build_base(g: int) -> BorderedBase:
    """The sphere base with g removed faces used for the large constructions.

    g = 3: the tetrahedron with three faces removed; g = 4: a six-vertex
    sphere triangulation with four pairwise edge-disjoint faces removed;
    even g > 4 joins copies of the 4-base at removed faces, odd g joins the
    3-base to the (g-1)-base.
    """
    if g < 3:
        raise TriangulationError("BAD_G", "base needs g >= 3")
    if g == 3:
        return BorderedBase(
            n=4,
            faces=((0, 1, 3),),
            removed=((0, 2, 3), (1, 2, 3), (0, 1, 2)),
        )
    if g == 4:
        return BorderedBase(
            n=6,
            faces=((0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)),
            removed=((0, 3, 4), (1, 3, 5), (2, 4, 5), (0, 1, 2)),
        )
    if g % 2 == 0:
        return _join_bases(build_base(g - 2), build_base(4))
    return _join_bases(build_base(g - 1), build_base(3))


def _join_bases(b1: BorderedBase, b2: BorderedBase) -> BorderedBase:
    t1 = b1.completed()
    t2 = b2.completed()
    f1 = b1.removed[0]
    f2 = b2.removed[0]
    joined, map1, map2 = _join_tracking(t1, f1, t2, f2)
    removed = tuple(sorted(
        [tuple(sorted(map1[v] for v in f)) for f in b1.removed[1:]]
        + [tuple(sorted(map2[v] for v in f)) for f in b2.removed[1:]]
    ))
    faces = tuple(sorted(set(joined.faces) - set(removed)))
    return BorderedBase(n=joined.n, faces=faces, removed=removed)


def _join_tracking(t1: Triangulation, f1, t2: Triangulation, f2):
    """join_at_faces under the lexicographically least valid matching,
    returning the vertex maps of both inputs into the result."""
    for m in triangle_matchings(tuple(sorted(f1)), tuple(sorted(f2))):
        try:
            joined = join_at_faces(t1, f1, t2, f2, m)
        except TriangulationError:
            continue
        # Rebuild the relabeling used by join_at_faces: t2 shifted by t1.n,
        # matched vertices collapse onto their f1 partner, then labels close up.
        shift = t1.n
        glue = {m[x] + shift: x for x in f1}
        raw2 = {v: glue.get(v + shift, v + shift) for v in range(t2.n)}
        used = sorted(set(range(t1.n)) | set(raw2.values()))
        pack = {v: i for i, v in enumerate(used)}
        map1 = {v: pack[v] for v in range(t1.n)}
        map2 = {v: pack[raw2[v]] for v in range(t2.n)}
        return joined, map1, map2
    raise TriangulationError("INVALID_RESULT", "no valid matching for base join")


def build_large_irreducible(s: SurfaceDescriptor, m: Triangulation | None = None) -> Triangulation:
    """An irreducible triangulation of s with floor(11g/2) resp. floor(17g/2)
    vertices: two punctured copies of the maximal building block joined
    (genus 2), or the g-base joined with g punctured copies (genus >= 3).

    For nonorientable targets the block is the 7-vertex projective-plane
    triangulation; for orientable targets the 10-vertex maximal torus
    triangulation (pass it as ``m`` to skip regenerating the torus census).
    """
    g = s.genus
    if g < 2:
        raise TriangulationError("UNSUPPORTED_SURFACE", f"no construction for {s.name}")
    if m is None:
        if s.orientable:
            torus = generate.generate_irreducible(
                generate.GenerationJob(target=SurfaceDescriptor(True, 1))
            )
            m = max(torus, key=lambda t: t.n)
        else:
            m = build_M()
    if g == 2:
        result = _double(m)
    else:
        base = build_base(g)
        current = base.completed()
        pending = list(base.removed)
        while pending:
            f = pending.pop(0)
            current, map1, _ = _join_tracking(current, f, m, m.faces[0])
            pending = [tuple(sorted(map1[v] for v in fr)) for fr in pending]
        result = current
    if result.surface_of() != s or not is_irreducible(result) or result.n != v_max_lower_bound(s):
        raise TriangulationError("INVALID_RESULT", f"construction for {s.name} failed")
    return canonical_form(result)


def _double(m: Triangulation) -> Triangulation:
    for f1 in m.faces:
        for f2 in m.faces:
            for match in triangle_matchings(f1, f2):
                try:
                    cand = join_at_faces(m, f1, m, f2, match)
                except TriangulationError:
                    continue
                if is_irreducible(cand):
                    return cand
    raise TriangulationError("INVALID_RESULT", "no irreducible doubling")


def build_counterexample_join(torus_member: Triangulation | None = None) -> Triangulation:
    """A triangulation of N3 with no separating cycle realizing (N1, N2) or
    (N1, S1): the 7-vertex projective-plane triangulation joined to a
    7-vertex torus triangulation."""
    from .catalog import k7_torus

    m = build_M()
    t = torus_member if torus_member is not None else k7_torus()
    for f1 in m.faces:
        for f2 in t.faces:
            for match in triangle_matchings(f1, f2):
                try:
                    return join_at_faces(m, f1, t, f2, match)
                except TriangulationError:
                    continue
    raise TriangulationError("INVALID_RESULT", "join failed")


# -- histograms and theorem checks ------------------------------------------------

def vertex_histogram(ts) -> dict[int, int]:
    out: dict[int, int] = {}
    for t in ts:
        out[t.n] = out.get(t.n, 0) + 1
    return dict(sorted(out.items()))


def edge_width_histogram(ts) -> dict[tuple[int, int | None], int]:
    """Counts keyed by (vertex count, edge width); width None = no NSC."""
    out: dict[tuple[int, int | None], int] = {}
    for t in ts:
        key = (t.n, cycletop.edge_width(t))
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items(), key=lambda kv: (kv[0][0], kv[0][1] if kv[0][1] is not None else -1)))


@dataclass
class TheoremReport:
    theorem: str
    total: int
    violators: list

    @property
    def passed(self) -> bool:
        return not self.violators


def verify_theorems(ts, theorem: str) -> TheoremReport:
    """Check a witness-existence claim on every member of a census.

    Supported ids:
      ``nsc-exists``                 every member has a noncontractible
                                     separating cycle
      ``nsc-genera:<h>``             every member has an NSC splitting the
                                     Euler genus into h and g-h
      ``nonsep-type:<sided>,<leaving>``  every member has a nonseparating
                                     cycle of that type
      ``nonsep-3cycles:<k>``         every vertex lies on at least k
                                     nonseparating 3-cycles
    """
    members = list(ts)
    violators = []
    if theorem == "nsc-exists":
        for t in members:
            if cycletop.edge_width(t) is None:
                violators.append(t)
    elif theorem.startswith("nsc-genera:"):
        h = int(theorem.split(":", 1)[1])
        for t in members:
            if cycletop.find_nsc_with_genera(t, h) is None:
                violators.append(t)
    elif theorem.startswith("nonsep-type:"):
        sided, leaving = theorem.split(":", 1)[1].split(",")
        for t in members:
            if cycletop.find_nonseparating_of_type(t, sided, leaving) is None:
                violators.append(t)
    elif theorem.startswith("nonsep-3cycles:"):
        k = int(theorem.split(":", 1)[1])
        for t in members:
            if any(cycletop.nonseparating_3cycles_at(t, v) < k for v in range(t.n)):
                violators.append(t)
    else:
        raise TriangulationError("IMPOSSIBLE_TYPE", f"unknown theorem id {theorem!r}")
    return TheoremReport(theorem=theorem, total=len(members), violators=violators)
