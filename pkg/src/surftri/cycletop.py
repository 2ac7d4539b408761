"""Cycle topology: cutting along cycles and classifying what the cut leaves.

A cycle embedded in the surface is separating when the cut surface is
disconnected and contractible when one side is a disk.  Sidedness falls out
of the boundary count of the cut (one boundary of doubled length for a
one-sided curve, two boundaries otherwise), and the component genera come
from capping each boundary with a disk.  Absence results (no cycle of some
kind) are certified by exhausting all simple cycles up to length n, which is
the longest a simple cycle can be.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SearchExhausted, TriangulationError
from .triangulation import Triangulation

Cycle = tuple[int, ...]


def normalize_cycle(seq) -> Cycle:
    """Least vertex first, then the direction with the smaller second vertex."""
    k = len(seq)
    i = min(range(k), key=lambda j: seq[j])
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    rev = tuple(seq[(i - j) % k] for j in range(k))
    return fwd if fwd[1] <= rev[1] else rev


def check_cycle(t: Triangulation, cycle) -> Cycle:
    c = tuple(cycle)
    if len(c) < 3 or len(set(c)) != len(c):
        raise TriangulationError("INVALID_CYCLE", f"{c}")
    for i, v in enumerate(c):
        w = c[(i + 1) % len(c)]
        if not (0 <= v < t.n) or not t.has_edge(v, w):
            raise TriangulationError("INVALID_CYCLE", f"({v}, {w}) is not an edge")
    return normalize_cycle(c)


# -- cutting ------------------------------------------------------------------

@dataclass(frozen=True)
class BorderedComplex:
    """The result of cutting a triangulation along a cycle.

    Faces live in a new label space; ``origin[v]`` maps a new label back to
    the vertex it copies.  Boundary edges lie in exactly one face, interior
    edges in two, and every vertex link is a single arc or cycle.
    """

    faces: tuple
    boundaries: tuple[Cycle, ...]
    origin: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.origin)

    def euler_characteristic(self) -> int:
        edges = {e for f in self.faces for e in _face_edges(f)}
        return self.n - len(edges) + len(self.faces)

    def components(self) -> list["BorderedComplex"]:
        """Split into connected pieces, each keeping its own boundaries."""
        parent = list(range(self.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for f in self.faces:
            a = find(f[0])
            for v in f[1:]:
                parent[find(v)] = a
        groups: dict[int, list] = {}
        for f in self.faces:
            groups.setdefault(find(f[0]), []).append(f)
        out = []
        for root, faces in sorted(groups.items()):
            verts = sorted({v for f in faces for v in f})
            remap = {v: i for i, v in enumerate(verts)}
            bounds = tuple(
                normalize_cycle(tuple(remap[v] for v in b))
                for b in self.boundaries
                if find(b[0]) == root
            )
            out.append(
                BorderedComplex(
                    faces=tuple(sorted(tuple(sorted(remap[v] for v in f)) for f in faces)),
                    boundaries=bounds,
                    origin=tuple(self.origin[v] for v in verts),
                )
            )
        return out

    def is_orientable(self) -> bool:
        return _faces_orientable(self.faces)

    def capped(self) -> tuple[int, bool]:
        """(Euler genus, orientability) after capping every boundary with a disk."""
        chi = self.euler_characteristic() + len(self.boundaries)
        return 2 - chi, self.is_orientable()


def _face_edges(f):
    a, b, c = f
    return (a, b), (a, c), (b, c)


def _faces_orientable(faces) -> bool:
    edge_faces: dict = {}
    for i, f in enumerate(faces):
        for e in _face_edges(f):
            edge_faces.setdefault(e, []).append(i)
    oriented = {}
    for seed in range(len(faces)):
        if seed in oriented:
            continue
        oriented[seed] = faces[seed]
        stack = [seed]
        while stack:
            i = stack.pop()
            x, y, z = oriented[i]
            for u, v in ((x, y), (y, z), (z, x)):
                e = (u, v) if u < v else (v, u)
                for j in edge_faces[e]:
                    if j == i:
                        continue
                    w = next(s for s in faces[j] if s != u and s != v)
                    if j in oriented:
                        gx, gy, gz = oriented[j]
                        if (v, u) not in ((gx, gy), (gy, gz), (gz, gx)):
                            return False
                    else:
                        oriented[j] = (v, u, w)
                        stack.append(j)
    return True


def cut_along_cycle(t: Triangulation, cycle) -> BorderedComplex:
    """Duplicate the cycle's vertices and edges so each face keeps its side.

    At each cycle vertex the link is cut at the two incident cycle edges; the
    two resulting fans become two copies of the vertex.  A two-sided cut
    leaves two boundary cycles of the original length, a one-sided cut a
    single boundary of twice the length; the Euler characteristic of the
    complex equals that of t either way.
    """
    c = check_cycle(t, cycle)
    k = len(c)
    on_cycle = {v: i for i, v in enumerate(c)}
    # side of each face at each cycle vertex: faces in link positions
    # [pos(prev), pos(next)) form one fan, the rest the other
    copy_of: list[dict] = [dict() for _ in range(k)]  # face -> 0/1 per cycle vertex
    for i, v in enumerate(c):
        prev, nxt = c[(i - 1) % k], c[(i + 1) % k]
        cyc = t.link(v)
        pos = t.link_position(v)
        d = len(cyc)
        p, q = pos[prev], pos[nxt]
        j = p
        side = 0
        fans = copy_of[i]
        while True:
            f = tuple(sorted((v, cyc[j], cyc[(j + 1) % d])))
            fans[f] = side
            j = (j + 1) % d
            if j == q:
                side = 1
            if j == p:
                break
    n0 = t.n
    second_copy = {v: n0 + i for i, v in enumerate(c)}  # labels for side-1 copies
    faces = []
    for f in t.faces:
        g = []
        for v in f:
            i = on_cycle.get(v)
            if i is None:
                g.append(v)
            elif copy_of[i][f] == 0:
                g.append(v)
            else:
                g.append(second_copy[v])
        faces.append(tuple(sorted(g)))
    origin = list(range(n0)) + [c[i] for i in range(k)]
    # boundary cycles: edges in exactly one face
    edge_faces: dict = {}
    for f in faces:
        for e in _face_edges(f):
            edge_faces.setdefault(e, 0)
            edge_faces[e] += 1
    boundary_adj: dict[int, list] = {}
    for (a, b), cnt in edge_faces.items():
        if cnt == 1:
            boundary_adj.setdefault(a, []).append(b)
            boundary_adj.setdefault(b, []).append(a)
    boundaries = []
    seen = set()
    for start in sorted(boundary_adj):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            a, b = boundary_adj[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            walk.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        boundaries.append(normalize_cycle(walk))
    return BorderedComplex(
        faces=tuple(sorted(faces)),
        boundaries=tuple(sorted(boundaries)),
        origin=tuple(origin),
    )


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class CycleClassification:
    separating: bool
    contractible: bool
    sided: str  # "one" | "two"
    leaving: str  # "orientable" | "nonorientable"
    components: tuple[tuple[int, bool], ...]  # (capped Euler genus, orientable)


def classify_cycle(t: Triangulation, cycle) -> CycleClassification:
    complex_ = cut_along_cycle(t, cycle)
    parts = complex_.components()
    sided = "one" if len(complex_.boundaries) == 1 else "two"
    separating = len(parts) == 2
    caps = tuple(sorted(p.capped() for p in parts))
    contractible = separating and any(
        len(p.boundaries) == 1 and p.capped()[0] == 0 for p in parts
    )
    leaving = "orientable" if all(orient for _, orient in caps) else "nonorientable"
    return CycleClassification(
        separating=separating,
        contractible=contractible,
        sided=sided,
        leaving=leaving,
        components=caps,
    )


# -- fast predicates used by searches ------------------------------------------

def _cycle_edges(c: Cycle):
    k = len(c)
    out = set()
    for i in range(k):
        a, b = c[i], c[(i + 1) % k]
        out.add((a, b) if a < b else (b, a))
    return out


def _separation(t: Triangulation, c: Cycle):
    """(separating, [component face lists]) via face adjacency off the cycle.

    Cutting only disconnects faces across cycle edges, so the components of
    the cut complex are the components of the face graph with those edges
    removed.
    """
    cedges = _cycle_edges(c)
    t._ensure_links()
    index = {f: i for i, f in enumerate(t.faces)}
    seen = [False] * len(t.faces)
    comps = []
    for seed in range(len(t.faces)):
        if seen[seed]:
            continue
        seen[seed] = True
        stack = [seed]
        comp = []
        while stack:
            i = stack.pop()
            comp.append(t.faces[i])
            for e in _face_edges(t.faces[i]):
                if e in cedges:
                    continue
                g1, g2 = t._edge_faces[e]
                for g in (g1, g2):
                    j = index[g]
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
        comps.append(comp)
    return len(comps) > 1, comps


def _component_chi(faces, cycle_vertices, cedges, k):
    """Euler characteristic of a cut piece given its face list."""
    verts = {v for f in faces for v in f}
    interior_v = len(verts - cycle_vertices)
    edges = {e for f in faces for e in _face_edges(f)}
    interior_e = len(edges - cedges)
    # Every cut piece bordered by the full cycle carries k boundary vertices
    # and k boundary edges, which cancel in chi.
    return interior_v + k - (interior_e + k) + len(faces)


def is_separating(t: Triangulation, cycle) -> bool:
    c = check_cycle(t, cycle)
    return _separation(t, c)[0]


def _classify_separating_fast(t: Triangulation, c: Cycle):
    """(separating, contractible) without building the cut complex."""
    sep, comps = _separation(t, c)
    if not sep:
        return False, False
    cedges = _cycle_edges(c)
    cverts = set(c)
    k = len(c)
    for faces in comps:
        if _component_chi(faces, cverts, cedges, k) == 1:
            return True, True
    return True, False


# -- enumeration ----------------------------------------------------------------

def enumerate_cycles(t: Triangulation, max_len: int):
    """Every simple cycle of length 3..max_len exactly once, shortest first.

    Cycles come out in normal form: the walk starts at the least vertex, all
    other vertices are larger, and the second vertex is smaller than the
    last.
    """
    if max_len < 3:
        raise TriangulationError("INVALID_CYCLE", "max_len must be >= 3")
    t._ensure_links()
    adj = [sorted(t._adj[v]) for v in range(t.n)]
    adjset = t._adj
    max_len = min(max_len, t.n)
    for length in range(3, max_len + 1):
        for start in range(t.n):
            path = [start]
            used = {start}

            def dfs(v, depth):
                if depth == length - 1:
                    if start in adjset[v] and path[1] < v:
                        yield tuple(path)
                    return
                for w in adj[v]:
                    if w > start and w not in used:
                        used.add(w)
                        path.append(w)
                        yield from dfs(w, depth + 1)
                        path.pop()
                        used.remove(w)

            yield from dfs(start, 0)


# -- searches --------------------------------------------------------------------

def edge_width(t: Triangulation, max_length: int | None = None):
    """Length of the shortest noncontractible separating cycle.

    Returns None when no NSC exists, certified by exhausting all simple
    cycles (length <= n).  With an explicit smaller bound, exhaustion without
    a witness raises SearchExhausted instead.
    """
    bound = t.n if max_length is None else min(max_length, t.n)
    for c in enumerate_cycles(t, bound):
        sep, contractible = _classify_separating_fast(t, c)
        if sep and not contractible:
            return len(c)
    if bound >= t.n:
        return None
    raise SearchExhausted(bound)


def find_nsc_with_genera(t: Triangulation, h: int, require=None):
    """A noncontractible separating cycle whose halves have Euler genera {h, g-h}.

    ``require`` optionally pins the two capped surfaces (a pair of
    SurfaceDescriptor).  Returns None only after exhausting all simple
    cycles.
    """
    g = 2 - t.euler_characteristic()
    if not 1 <= h < g:
        raise TriangulationError("BAD_H", f"need 1 <= h < {g}, got {h}")
    want_genera = sorted((h, g - h))
    want = None
    if require is not None:
        s1, s2 = require
        want = sorted([(s1.euler_genus, s1.orientable), (s2.euler_genus, s2.orientable)])
    for c in enumerate_cycles(t, t.n):
        sep, contractible = _classify_separating_fast(t, c)
        if not sep or contractible:
            continue
        cls = classify_cycle(t, c)
        genera = sorted(eg for eg, _ in cls.components)
        if genera != want_genera:
            continue
        if want is not None and sorted(cls.components) != want:
            continue
        return c
    return None


_TYPE_NAMES = {"one", "two"}
_LEAVING_NAMES = {"orientable", "nonorientable"}


def type_is_possible(t: Triangulation, sided: str, leaving: str) -> bool:
    """Whether a nonseparating cycle of this type can exist on t's surface."""
    eg = 2 - t.euler_characteristic()
    orientable = t.is_orientable()
    if eg == 0:
        return False  # every cycle on the sphere separates
    if orientable:
        return sided == "two" and leaving == "orientable"
    if sided == "one":
        return (eg - 1) % 2 == 0 if leaving == "orientable" else eg - 1 >= 1
    return eg % 2 == 0 if leaving == "orientable" else eg - 2 >= 1


def find_nonseparating_of_type(t: Triangulation, sided: str, leaving: str,
                               max_len: int | None = None):
    """A nonseparating cycle of the requested sidedness and leaving type.

    Returns None at the bound; the search is exhaustive when max_len >= n.
    """
    if sided not in _TYPE_NAMES or leaving not in _LEAVING_NAMES:
        raise TriangulationError("IMPOSSIBLE_TYPE", f"({sided}, {leaving})")
    if not type_is_possible(t, sided, leaving):
        raise TriangulationError("IMPOSSIBLE_TYPE", f"({sided}, {leaving}) on {t.surface_of().name}")
    bound = t.n if max_len is None else min(max_len, t.n)
    for c in enumerate_cycles(t, bound):
        if _separation(t, c)[0]:
            continue
        cls = classify_cycle(t, c)
        if cls.sided == sided and cls.leaving == leaving:
            return c
    return None


def nonseparating_3cycles_at(t: Triangulation, v: int) -> int:
    """How many nonseparating 3-cycles pass through v."""
    if not 0 <= v < t.n:
        raise TriangulationError("NO_SUCH_EDGE", f"vertex {v}")
    count = 0
    nbrs = sorted(t.neighbors(v))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if t.has_edge(x, y):
                c = normalize_cycle((v, x, y))
                if not _separation(t, c)[0]:
                    count += 1
    return count
