"""Local operations and surgeries on triangulations.

Edge contraction and its inverse (vertex splitting), the diagonal flip, and
the three genus-changing surgeries: joining two triangulations at removed
faces, self-joining one triangulation at two removed faces (adds a handle or
crosshandle), and the crosscap identification at a degree-6 vertex.

All functions return new triangulations; inputs are never mutated.
Contractibility is decided by perform-and-validate; the 3-cycle count serves
as a fast necessary filter (an edge on more than two 3-cycles cannot be
contracted without creating multiple edges, and K_4 on the sphere contracts
to nothing valid).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import InvalidTriangulation, TriangulationError
from .triangulation import Face, Triangulation


# -- contraction ------------------------------------------------------------

def _fast_contractible(t: Triangulation, a: int, c: int) -> bool:
    """3-cycle criterion: exactly the two facial 3-cycles through the edge.

    Valid for every triangulation except K_4 in the sphere (n == 4), where
    contraction always fails.
    """
    if t.n == 4:
        return False
    return len(t.neighbors(a) & t.neighbors(c)) == 2


def _contract_faces(t: Triangulation, a: int, c: int):
    """Face set after merging c into a (a < c) and relabeling contiguously."""
    out = []
    for f in t.faces:
        if a in f and c in f:
            continue  # the two faces collapsing onto the merged edge star
        g = tuple(a if v == c else v for v in f)
        out.append(tuple(v - 1 if v > c else v for v in g))
    return out


def contract(t: Triangulation, edge) -> Triangulation:
    """Contract an edge: delete it, identify its endpoints, drop duplicates.

    Keeps the smaller endpoint label, then relabels to 0..n-2.  Raises
    NOT_CONTRACTIBLE when the result would not be a triangulation of the
    same surface.
    """
    a, b = edge
    t.faces_of_edge(a, b)  # NO_SUCH_EDGE
    a, c = (a, b) if a < b else (b, a)
    if not _fast_contractible(t, a, c):
        raise TriangulationError("NOT_CONTRACTIBLE", f"edge ({a}, {c})")
    try:
        result = Triangulation.from_faces(t.n - 1, _contract_faces(t, a, c))
    except InvalidTriangulation as exc:
        raise TriangulationError("NOT_CONTRACTIBLE", f"edge ({a}, {c}): {exc}") from None
    return result


def is_contractible(t: Triangulation, edge) -> bool:
    """True when contracting the edge yields a valid triangulation."""
    a, b = edge
    t.faces_of_edge(a, b)  # NO_SUCH_EDGE
    a, c = (a, b) if a < b else (b, a)
    if not _fast_contractible(t, a, c):
        return False
    # Perform-and-validate stays authoritative.
    try:
        Triangulation.from_faces(t.n - 1, _contract_faces(t, a, c))
    except InvalidTriangulation:
        return False
    return True


def is_irreducible(t: Triangulation) -> bool:
    """No edge is contractible."""
    if t.n == 4:
        return True
    adj = [t.neighbors(v) for v in range(t.n)]
    for a, b in t._edge_faces:
        if len(adj[a] & adj[b]) == 2:
            return False
    return True


def contract_to_irreducible(t: Triangulation) -> Triangulation:
    """Contract the lexicographically least contractible edge until none remains."""
    while True:
        if t.n == 4:
            return t
        target = None
        for e in t.edges:
            if _fast_contractible(t, *e):
                target = e
                break
        if target is None:
            return t
        t = contract(t, target)


# -- vertex splitting ---------------------------------------------------------

@dataclass(frozen=True)
class SplitSite:
    """A legal vertex split: split ``vertex`` along its edges to b and c.

    ``moved`` is the open arc of the link between b and c (in the stored link
    direction from b to c); those neighbors rewire to the new vertex.  The
    complementary arc stays put.  Swapping the arcs gives an equivalent
    result, so one assignment per unordered pair {b, c} suffices.
    """

    vertex: int
    b: int
    c: int
    moved: tuple[int, ...]


def enumerate_splits(t: Triangulation, v: int) -> list[SplitSite]:
    """All split sites at v, one per unordered pair of its neighbors."""
    if not 0 <= v < t.n:
        raise TriangulationError("NO_SUCH_EDGE", f"vertex {v}")
    cyc = t.link(v)
    d = len(cyc)
    sites = []
    for i in range(d):
        for k in range(i + 1, d):
            b, c = cyc[i], cyc[k]
            if b > c:
                b, c = c, b
                i2, k2 = k, i
            else:
                i2, k2 = i, k
            moved = tuple(cyc[(i2 + s) % d] for s in range(1, (k2 - i2) % d))
            sites.append(SplitSite(v, b, c, moved))
    return sites


def split_vertex(t: Triangulation, site: SplitSite) -> Triangulation:
    """Split site.vertex: new vertex n, new faces {v,n,b} and {v,n,c}.

    The new vertex takes over the faces along the moved arc.  A split of a
    valid triangulation is always valid (the new vertex is fresh, so no
    multi-edge can appear); the site is still checked for well-formedness.
    """
    v, b, c = site.vertex, site.b, site.c
    nbrs = t.neighbors(v)
    if b == c or b not in nbrs or c not in nbrs:
        raise TriangulationError("ILLEGAL_SITE", f"{site}")
    chain = (b,) + site.moved + (c,)
    pos = t.link_position(v)
    if any(w not in pos for w in site.moved):
        raise TriangulationError("ILLEGAL_SITE", f"{site}")
    new = t.n
    moved_faces = set()
    for x, y in zip(chain, chain[1:]):
        f = tuple(sorted((v, x, y)))
        moved_faces.add(f)
    faces = []
    for f in t.faces:
        if f in moved_faces:
            faces.append(tuple(new if w == v else w for w in f))
        else:
            faces.append(f)
    faces.append((v, new, b))
    faces.append((v, new, c))
    return Triangulation._trusted_from_faces(t.n + 1, faces)


# -- diagonal flip ------------------------------------------------------------

def _flip_quad(t: Triangulation, a: int, c: int):
    f1, f2 = t.faces_of_edge(a, c)
    b = next(v for v in f1 if v != a and v != c)
    d = next(v for v in f2 if v != a and v != c)
    return b, d, f1, f2


def is_flippable(t: Triangulation, edge) -> bool:
    """An edge flips iff the opposite diagonal of its quadrilateral is absent."""
    a, c = edge
    b, d, _, _ = _flip_quad(t, a, c)
    return not t.has_edge(b, d)


def flip(t: Triangulation, edge) -> Triangulation:
    """Replace faces abc, acd by abd, bcd (delete ac, add bd)."""
    a, c = edge
    b, d, f1, f2 = _flip_quad(t, a, c)
    if t.has_edge(b, d):
        raise TriangulationError("NOT_FLIPPABLE", f"edge ({a}, {c})")
    faces = [f for f in t.faces if f != f1 and f != f2]
    faces.append(tuple(sorted((a, b, d))))
    faces.append(tuple(sorted((b, c, d))))
    return Triangulation._trusted_from_faces(t.n, faces)


# -- joins and crosscaps ------------------------------------------------------

def triangle_matchings(f1: Face, f2: Face):
    """The six vertex bijections f1 -> f2 (3 rotations x 2 reflections)."""
    return [dict(zip(f1, p)) for p in permutations(f2)]


def _relabel_contiguous(faces):
    used = sorted({v for f in faces for v in f})
    remap = {v: i for i, v in enumerate(used)}
    return len(used), [tuple(remap[v] for v in f) for f in faces]


def join_at_faces(t1: Triangulation, f1: Face, t2: Triangulation, f2: Face,
                  matching: dict) -> Triangulation:
    """Remove one face from each triangulation and glue the boundary cycles.

    ``matching`` maps the vertices of f1 to the vertices of f2.  The result
    has n1 + n2 - 3 vertices; Euler genus adds, and the result is
    nonorientable iff either input is.
    """
    f1 = tuple(sorted(f1))
    f2 = tuple(sorted(f2))
    if f1 not in t1.faces or f2 not in t2.faces:
        raise TriangulationError("INVALID_RESULT", "face not in triangulation")
    if sorted(matching) != list(f1) or sorted(matching.values()) != list(f2):
        raise TriangulationError("INVALID_RESULT", f"matching {matching} is not a bijection f1 -> f2")
    shift = t1.n
    glue = {matching[x] + shift: x for x in f1}
    faces = [f for f in t1.faces if f != f1]
    for g in t2.faces:
        if g == f2:
            continue
        faces.append(tuple(glue.get(v + shift, v + shift) for v in g))
    n, faces = _relabel_contiguous(faces)
    try:
        return Triangulation.from_faces(n, faces)
    except InvalidTriangulation as exc:
        raise TriangulationError("INVALID_RESULT", str(exc)) from None


def self_join_at_faces(t: Triangulation, f1: Face, f2: Face, matching: dict,
                       want_orientable: bool) -> Triangulation:
    """Remove two faces of one triangulation and identify their boundaries.

    Drops 3 vertices and raises the Euler genus by 2: a handle when the
    result is orientable, a crosshandle when not.  The caller states which
    one it wants; the other outcome raises WRONG_ORIENTABILITY.  Faces may
    share vertices; validation decides such cases.
    """
    f1 = tuple(sorted(f1))
    f2 = tuple(sorted(f2))
    if f1 == f2 or f1 not in t.faces or f2 not in t.faces:
        raise TriangulationError("INVALID_RESULT", "need two distinct faces of t")
    if sorted(matching) != list(f1) or sorted(matching.values()) != list(f2):
        raise TriangulationError("INVALID_RESULT", f"matching {matching} is not a bijection f1 -> f2")
    merge = {}
    for x in f1:
        y = matching[x]
        if x != y:
            lo, hi = (x, y) if x < y else (y, x)
            merge[hi] = lo
    def root(v):
        while v in merge:
            v = merge[v]
        return v
    faces = []
    for g in t.faces:
        if g == f1 or g == f2:
            continue
        faces.append(tuple(root(v) for v in g))
    n, faces = _relabel_contiguous(faces)
    try:
        result = Triangulation.from_faces(n, faces)
    except InvalidTriangulation as exc:
        raise TriangulationError("INVALID_RESULT", str(exc)) from None
    if result.n != t.n - 3:
        # A fold along shared vertices can validate, but it keeps or halves
        # the Euler-genus step instead of attaching a handle or crosshandle.
        raise TriangulationError("INVALID_RESULT", "faces share vertices; not a genus surgery")
    if result.is_orientable() != want_orientable:
        raise TriangulationError(
            "WRONG_ORIENTABILITY",
            f"got {'orientable' if result.is_orientable() else 'nonorientable'}",
        )
    return result


def crosscap_identify(t: Triangulation, v: int) -> Triangulation:
    """Swap the star of a degree-6 vertex for a crosscap.

    Removes v and its six faces, leaving a hexagonal hole, and identifies the
    three pairs of opposite boundary vertices.  Drops 4 vertices, raises the
    Euler genus by 1, and the result is always nonorientable.
    """
    if not 0 <= v < t.n:
        raise TriangulationError("NO_SUCH_EDGE", f"vertex {v}")
    hexagon = t.link(v)
    if len(hexagon) != 6:
        raise TriangulationError("WRONG_DEGREE", f"deg({v}) = {len(hexagon)}")
    merge = {}
    for i in range(3):
        x, y = hexagon[i], hexagon[i + 3]
        lo, hi = (x, y) if x < y else (y, x)
        merge[hi] = lo
    faces = []
    for g in t.faces:
        if v in g:
            continue
        faces.append(tuple(merge.get(w, w) for w in g))
    n, faces = _relabel_contiguous(faces)
    try:
        result = Triangulation.from_faces(n, faces)
    except InvalidTriangulation as exc:
        raise TriangulationError("INVALID_RESULT", str(exc)) from None
    return result
