"""The core value type: a simple triangulation of a closed surface.

A triangulation is stored as a face set over contiguous vertex labels
0..n-1.  Construction validates the whole closed-surface structure (every
edge in exactly two faces, every vertex link a single cycle, connectivity,
simplicity); a validated face set determines the embedding up to
equivalence, so no explicit rotation system is stored.  Operations that need
local cyclic order read it off the vertex links.

Instances are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidTriangulation, TriangulationError
from .surface import SurfaceDescriptor

Face = tuple[int, int, int]
Edge = tuple[int, int]

# Vertex labels are kept byte-sized so canonical codes and compact records
# can use one byte per label.
MAX_VERTICES = 254


def _sorted_face(face) -> Face:
    a, b, c = face
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
        if a > b:
            a, b = b, a
    return (a, b, c)


class Triangulation:
    __slots__ = (
        "n",
        "faces",
        "_edge_faces",
        "_links",
        "_pos",
        "_adj",
        "_orientable",
        "_code",
        "_canon_faces",
    )

    def __init__(self, n: int, faces, _trusted: bool = False):
        if not _trusted:
            raise TypeError("use Triangulation.from_faces()")
        self.n = n
        self.faces = faces  # sorted tuple of ascending vertex triples
        self._edge_faces = None
        self._links = None
        self._pos = None
        self._adj = None
        self._orientable = None
        self._code = None
        self._canon_faces = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Sequence[int]]) -> "Triangulation":
        """Validate a face list and build the triangulation.

        Raises InvalidTriangulation with one of the codes NON_TRIANGLE,
        LABEL_RANGE, SHARED_EDGES, EDGE_DEGREE, DISCONNECTED, PINCHED.
        """
        if n < 1 or n > MAX_VERTICES:
            raise InvalidTriangulation("LABEL_RANGE", f"vertex count {n} outside 1..{MAX_VERTICES}")
        normalized = []
        for face in faces:
            if len(face) != 3:
                raise InvalidTriangulation("NON_TRIANGLE", f"face {tuple(face)} is not a triple")
            f = _sorted_face(face)
            a, b, c = f
            if a == b or b == c:
                raise InvalidTriangulation("NON_TRIANGLE", f"repeated vertex in face {tuple(face)}")
            if a < 0 or c >= n:
                raise InvalidTriangulation("LABEL_RANGE", f"face {tuple(face)} outside 0..{n - 1}")
            normalized.append(f)
        face_set = frozenset(normalized)
        if len(face_set) != len(normalized):
            # For triangles, sharing two edges means sharing all three vertices.
            raise InvalidTriangulation("SHARED_EDGES", "duplicate face triple")
        t = cls(n, tuple(sorted(face_set)), _trusted=True)
        t._validate()
        return t

    @classmethod
    def _trusted_from_faces(cls, n: int, faces) -> "Triangulation":
        """Build without validation.  Caller guarantees a valid complex.

        Used by transforms whose outputs are valid by construction; the
        property-based tests re-validate randomized outputs.
        """
        return cls(n, tuple(sorted(_sorted_face(f) for f in faces)), _trusted=True)

    def _validate(self):
        n = self.n
        edge_faces: dict[Edge, list[Face]] = {}
        for f in self.faces:
            a, b, c = f
            for e in ((a, b), (a, c), (b, c)):
                edge_faces.setdefault(e, []).append(f)
        for e, fs in edge_faces.items():
            if len(fs) != 2:
                raise InvalidTriangulation("EDGE_DEGREE", f"edge {e} lies in {len(fs)} faces")
        seen = [False] * n
        for f in self.faces:
            for v in f:
                seen[v] = True
        if not all(seen):
            raise InvalidTriangulation("DISCONNECTED", f"vertex {seen.index(False)} lies in no face")
        self._edge_faces = edge_faces
        self._build_links()  # raises PINCHED on non-cycle links
        # Graph connectivity: walk the adjacency built from the links.
        stack = [0]
        reach = [False] * n
        reach[0] = True
        count = 1
        adj = self._adj
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not reach[w]:
                    reach[w] = True
                    count += 1
                    stack.append(w)
        if count != n:
            raise InvalidTriangulation("DISCONNECTED", "face complex is not connected")

    def _build_links(self):
        """Compute each vertex link as a single closed cycle of neighbors.

        The link of v collects one edge (a, b) per face {v, a, b}; the complex
        is pinch-free exactly when those edges form one cycle per vertex.
        """
        n = self.n
        link_adj: list[dict[int, list[int]]] = [dict() for _ in range(n)]
        for a, b, c in self.faces:
            for v, x, y in ((a, b, c), (b, a, c), (c, a, b)):
                d = link_adj[v]
                d.setdefault(x, []).append(y)
                d.setdefault(y, []).append(x)
        links = []
        positions = []
        for v in range(n):
            d = link_adj[v]
            for partners in d.values():
                if len(partners) != 2:
                    raise InvalidTriangulation("PINCHED", f"link of {v} is not 2-regular")
            start = min(d)
            second = min(d[start])
            cycle = [start, second]
            prev, cur = start, second
            while True:
                p, q = d[cur]
                nxt = q if p == prev else p
                if nxt == start:
                    break
                cycle.append(nxt)
                prev, cur = cur, nxt
            if len(cycle) != len(d):
                raise InvalidTriangulation("PINCHED", f"link of {v} splits into several cycles")
            links.append(tuple(cycle))
            positions.append({w: i for i, w in enumerate(cycle)})
        self._links = tuple(links)
        self._pos = tuple(positions)
        self._adj = tuple(frozenset(l) for l in links)

    # -- basic structure ---------------------------------------------------

    def _ensure_links(self):
        if self._links is None:
            edge_faces: dict[Edge, list[Face]] = {}
            for f in self.faces:
                a, b, c = f
                for e in ((a, b), (a, c), (b, c)):
                    edge_faces.setdefault(e, []).append(f)
            self._edge_faces = edge_faces
            self._build_links()

    @property
    def edges(self) -> tuple[Edge, ...]:
        self._ensure_links()
        return tuple(sorted(self._edge_faces))

    @property
    def num_edges(self) -> int:
        return 3 * len(self.faces) // 2

    def edge_count(self) -> int:
        return self.num_edges

    def has_edge(self, a: int, b: int) -> bool:
        self._ensure_links()
        return b in self._adj[a] if 0 <= a < self.n else False

    def faces_of_edge(self, a: int, b: int) -> tuple[Face, Face]:
        self._ensure_links()
        if a > b:
            a, b = b, a
        try:
            f1, f2 = self._edge_faces[(a, b)]
        except KeyError:
            raise TriangulationError("NO_SUCH_EDGE", f"({a}, {b})") from None
        return f1, f2

    def link(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in cyclic order around v (direction unspecified)."""
        self._ensure_links()
        return self._links[v]

    def link_position(self, v: int) -> dict[int, int]:
        self._ensure_links()
        return self._pos[v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._ensure_links()
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._ensure_links()
        return len(self._links[v])

    def degrees(self) -> tuple[int, ...]:
        self._ensure_links()
        return tuple(len(l) for l in self._links)

    # -- topology ----------------------------------------------------------

    def euler_characteristic(self) -> int:
        return self.n - self.num_edges + len(self.faces)

    def is_orientable(self) -> bool:
        """Propagate face orientations across edges and watch for conflicts."""
        if self._orientable is None:
            self._ensure_links()
            # A face oriented as (x, y, z) traverses directed edges xy, yz, zx;
            # its neighbor across {x, y} must traverse (y, x).
            first = self.faces[0]
            oriented: dict[Face, tuple[int, int, int]] = {first: first}
            stack = [first]
            ok = True
            while stack and ok:
                f = stack.pop()
                x, y, z = oriented[f]
                for u, v in ((x, y), (y, z), (z, x)):
                    e = (u, v) if u < v else (v, u)
                    g1, g2 = self._edge_faces[e]
                    g = g2 if g1 == f else g1
                    w = next(t for t in g if t != u and t != v)
                    want = (v, u, w)
                    if g in oriented:
                        gx, gy, gz = oriented[g]
                        got = ((gx, gy), (gy, gz), (gz, gx))
                        if (v, u) not in got:
                            ok = False
                            break
                    else:
                        oriented[g] = want
                        stack.append(g)
            self._orientable = ok
        return self._orientable

    def surface_of(self) -> SurfaceDescriptor:
        chi = self.euler_characteristic()
        eg = 2 - chi
        if self.is_orientable():
            if eg % 2:
                raise TriangulationError("PARITY", "orientable complex with odd Euler genus")
            return SurfaceDescriptor(True, eg // 2)
        return SurfaceDescriptor(False, eg)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.n == other.n and self.faces == other.faces

    def __hash__(self):
        return hash((self.n, self.faces))

    def __repr__(self):
        return f"Triangulation(n={self.n}, F={len(self.faces)}, chi={self.euler_characteristic()})"

    # -- compact encoding (worker transfer, spooling) ----------------------

    def to_bytes(self) -> bytes:
        out = bytearray([self.n])
        for f in self.faces:
            out.extend(f)
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Triangulation":
        n = data[0]
        faces = [tuple(data[i:i + 3]) for i in range(1, len(data), 3)]
        return cls(n, tuple(faces), _trusted=True)

    def to_linkbytes(self) -> bytes:
        """Pack as [n, degrees, link rows]; the row order fixes the cyclic
        structure, which downstream site indices rely on."""
        self._ensure_links()
        out = bytearray([self.n])
        out.extend(len(l) for l in self._links)
        for l in self._links:
            out.extend(l)
        return bytes(out)

    @classmethod
    def from_linkbytes(cls, data: bytes) -> "Triangulation":
        """Rebuild from packed links, keeping the packed rows as the link
        representation (positions stay aligned with the packing)."""
        n = data[0]
        degs = data[1:1 + n]
        rows = []
        p = 1 + n
        for v in range(n):
            rows.append(tuple(data[p:p + degs[v]]))
            p += degs[v]
        faces = set()
        for v, row in enumerate(rows):
            d = len(row)
            for i in range(d):
                x, y = row[i], row[(i + 1) % d]
                if v < x and v < y:
                    faces.add((v, x, y) if x < y else (v, y, x))
        t = cls(n, tuple(sorted(faces)), _trusted=True)
        t._links = tuple(rows)
        t._pos = tuple({w: i for i, w in enumerate(row)} for row in rows)
        t._adj = tuple(frozenset(row) for row in rows)
        edge_faces: dict[Edge, list[Face]] = {}
        for f in t.faces:
            a, b, c = f
            for e in ((a, b), (a, c), (b, c)):
                edge_faces.setdefault(e, []).append(f)
        t._edge_faces = edge_faces
        return t


# -- one-record TRI serialization -------------------------------------------

def format_record(t: Triangulation) -> str:
    """One line: ascending comma-joined triples, sorted, space-separated."""
    return " ".join(f"{a},{b},{c}" for a, b, c in t.faces)


def parse_record(line: str) -> Triangulation:
    faces = []
    for chunk in line.split():
        parts = chunk.split(",")
        if len(parts) != 3:
            raise InvalidTriangulation("NON_TRIANGLE", f"bad face field {chunk!r}")
        try:
            faces.append(tuple(int(p) for p in parts))
        except ValueError:
            raise InvalidTriangulation("LABEL_RANGE", f"bad face field {chunk!r}") from None
    if not faces:
        raise InvalidTriangulation("DISCONNECTED", "empty record")
    n = max(max(f) for f in faces) + 1
    return Triangulation.from_faces(n, faces)
