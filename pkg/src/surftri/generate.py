"""Isomorph-free generation of irreducible triangulations.

The pipeline grows a surface's irreducible triangulations out of the
irreducible triangulations of surfaces with smaller Euler genus:

* handle / crosshandle: take every triangulation in the splitting closure of
  a lower-genus seed, remove two faces, and glue the boundary cycles with
  the orientability the target requires (drops 3 vertices, Euler genus +2);
* crosscap: in every closure member, swap the star of a degree-6 vertex for
  a crosscap (drops 4 vertices, Euler genus +1).

Keep the valid results that are irreducible triangulations of the target
within the vertex cap, deduplicated by canonical code.  Closure caps are
cap+3 (join path) and cap+4 (crosscap path): intermediates above that cannot
produce an in-cap result.  No other pruning is applied, so full regeneration
is practical for S1, N1 and N2; higher-genus targets are long-run jobs.

A brute-force backtracking enumerator over face sets doubles as an
independent oracle for small vertex counts.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_code, canonical_form
from .errors import InvalidTriangulation, TriangulationError
from .surface import SPHERE, SurfaceDescriptor
from .transform import (
    crosscap_identify,
    enumerate_splits,
    is_irreducible,
    contract_to_irreducible,
    self_join_at_faces,
    split_vertex,
    triangle_matchings,
)
from .triangulation import Triangulation
from . import cycletop

# Largest vertex counts in the known irreducible sets, used as default caps.
DEFAULT_CAPS = {
    SurfaceDescriptor(True, 1): 10,
    SurfaceDescriptor(True, 2): 17,
    SurfaceDescriptor(False, 1): 7,
    SurfaceDescriptor(False, 2): 11,
    SurfaceDescriptor(False, 3): 16,
    SurfaceDescriptor(False, 4): 22,
}

# Targets whose full generation is desk scale; anything else requires the
# caller to opt in (CLI flag --allow-long).
DESK_SCALE = {
    SurfaceDescriptor(True, 0),
    SurfaceDescriptor(True, 1),
    SurfaceDescriptor(False, 1),
    SurfaceDescriptor(False, 2),
}


_KERNELS_FLAG: bool | None = None


def _kernels_enabled() -> bool:
    """Compiled kernels are used when importable and not disabled via
    SURFTRI_PURE=1; the pure path is the reference either way."""
    global _KERNELS_FLAG
    if _KERNELS_FLAG is None:
        if os.environ.get("SURFTRI_PURE"):
            _KERNELS_FLAG = False
        else:
            try:
                from . import _kernels  # noqa: F401

                _KERNELS_FLAG = True
            except Exception:
                _KERNELS_FLAG = False
    return _KERNELS_FLAG


# -- brute-force oracle -------------------------------------------------------

def brute_force_triangulations(s: SurfaceDescriptor, n: int) -> list[Triangulation]:
    """All triangulations of s with exactly n vertices, up to equivalence.

    Backtracking over face sets: always complete the least edge that lies in
    exactly one face, introducing fresh vertex labels in increasing order.
    Intended for small n (the search is exponential).  Results are canonical
    forms sorted by code.
    """
    chi = s.euler_characteristic
    target_f = 2 * (n - chi)
    if n < 4 or target_f <= 0 or 3 * (n - chi) > n * (n - 1) // 2:
        return []
    results: dict[bytes, Triangulation] = {}
    faces = [(0, 1, 2)]
    face_set = {(0, 1, 2)}
    edge_count = {(0, 1): 1, (0, 2): 1, (1, 2): 1}

    def backtrack(max_used: int):
        open_edge = None
        for e, cnt in edge_count.items():
            if cnt == 1 and (open_edge is None or e < open_edge):
                open_edge = e
        if open_edge is None:
            if len(faces) == target_f:
                try:
                    t = Triangulation.from_faces(n, faces)
                except InvalidTriangulation:
                    return
                if t.surface_of() == s:
                    results[canonical_code(t)] = canonical_form(t)
            return
        if len(faces) == target_f:
            return
        a, b = open_edge
        for c in range(min(max_used + 1, n - 1) + 1):
            if c == a or c == b:
                continue
            f = (a, b, c) if c > b else ((a, c, b) if c > a else (c, a, b))
            if f in face_set:
                continue
            e1 = (a, c) if a < c else (c, a)
            e2 = (b, c) if b < c else (c, b)
            if edge_count.get(e1, 0) >= 2 or edge_count.get(e2, 0) >= 2:
                continue
            faces.append(f)
            face_set.add(f)
            edge_count[open_edge] = 2
            edge_count[e1] = edge_count.get(e1, 0) + 1
            edge_count[e2] = edge_count.get(e2, 0) + 1
            backtrack(max_used if c <= max_used else c)
            edge_count[open_edge] = 1
            if edge_count[e1] == 1:
                del edge_count[e1]
            else:
                edge_count[e1] -= 1
            if edge_count[e2] == 1:
                del edge_count[e2]
            else:
                edge_count[e2] -= 1
            faces.pop()
            face_set.remove(f)

    backtrack(2)
    return [results[c] for c in sorted(results)]


# -- splitting closure ----------------------------------------------------------

def splitting_closure(t: Triangulation, max_vertices: int):
    """Every triangulation reachable from t by vertex splits, within the cap.

    Yields canonical forms, each exactly once, by increasing vertex count
    (code order within a level).  Splits only add vertices, so deduplication
    is per level.
    """
    if max_vertices < t.n:
        return
    level = {canonical_code(t): canonical_form(t)}
    while level:
        for code in sorted(level):
            yield level[code]
        nxt: dict[bytes, Triangulation] = {}
        if min(m.n for m in level.values()) + 1 > max_vertices:
            break
        for member in level.values():
            for child in _split_children(member):
                c = canonical_code(child)
                if c not in nxt:
                    nxt[c] = canonical_form(child)
        level = nxt


def _split_children(t: Triangulation):
    for v in range(t.n):
        for site in enumerate_splits(t, v):
            yield split_vertex(t, site)


# -- surgery scans ---------------------------------------------------------------

def _self_join_results(t: Triangulation, want_orientable: bool):
    """All valid self-joins of t, filtered before validation.

    Pair-level filter: identified vertices may not be adjacent and may not
    share a neighbor off the two faces (either would force a loop or a
    multiple edge), so any edge between the non-shared parts of the two
    faces kills all six matchings; matchings must fix shared vertices.
    """
    faces = t.faces
    adj = [t.neighbors(v) for v in range(t.n)]
    nf = len(faces)
    for i in range(nf):
        f1 = faces[i]
        s1 = set(f1)
        for j in range(i + 1, nf):
            f2 = faces[j]
            s2 = set(f2)
            shared = s1 & s2
            a1 = s1 - shared
            a2 = s2 - shared
            if any(y in adj[x] for x in a1 for y in a2):
                continue
            both = s1 | s2
            for m in triangle_matchings(f1, f2):
                if any(m[s] != s for s in shared):
                    continue
                ok = True
                for x in f1:
                    y = m[x]
                    if x != y and (adj[x] & adj[y]) - both:
                        ok = False
                        break
                if not ok:
                    continue
                try:
                    yield self_join_at_faces(t, f1, f2, m, want_orientable)
                except TriangulationError:
                    continue


def _crosscap_results(t: Triangulation):
    """All valid crosscap identifications at degree-6 vertices of t.

    Filters: a chord between non-consecutive hexagon vertices always ends in
    a loop or a multiple edge, as does a common neighbor of an antipodal
    pair outside the closed star.
    """
    for v in range(t.n):
        if t.degree(v) != 6:
            continue
        hexagon = t.link(v)
        if _hexagon_ok(t, v, hexagon):
            try:
                yield crosscap_identify(t, v)
            except TriangulationError:
                continue


def _hexagon_ok(t: Triangulation, v: int, hexagon) -> bool:
    star = set(hexagon)
    star.add(v)
    for i in range(6):
        x = hexagon[i]
        nx = t.neighbors(x)
        for k in (2, 3):
            if hexagon[(i + k) % 6] in nx:
                return False  # chord
        if (nx & t.neighbors(hexagon[(i + 3) % 6])) - star:
            return False  # multi-edge after identification
    return True


# -- generation jobs ---------------------------------------------------------------

@dataclass
class GenerationJob:
    """One irreducible-census run for a target surface.

    ``seeds`` maps lower-genus surfaces to their complete irreducible sets;
    S0 is built in.  ``cap`` defaults to the known maximum vertex count.
    """

    target: SurfaceDescriptor
    cap: int | None = None
    seeds: dict = field(default_factory=dict)
    checkpoint_dir: str | os.PathLike | None = None
    jobs: int = 1

    def effective_cap(self) -> int:
        if self.cap is not None:
            return self.cap
        if self.target in DEFAULT_CAPS:
            return DEFAULT_CAPS[self.target]
        raise TriangulationError("INCOMPLETE_SEEDS", f"no default cap for {self.target.name}")


def _seed_surfaces_join(target: SurfaceDescriptor) -> list[SurfaceDescriptor]:
    g = target.genus
    if target.orientable:
        return [SurfaceDescriptor(True, g - 1)] if g >= 1 else []
    out = []
    if g % 2 == 0 and g // 2 - 1 >= 0:
        out.append(SurfaceDescriptor(True, g // 2 - 1))
    if g - 2 >= 1:
        out.append(SurfaceDescriptor(False, g - 2))
    return out


def _seed_surfaces_crosscap(target: SurfaceDescriptor) -> list[SurfaceDescriptor]:
    if target.orientable:
        return []
    g = target.genus
    out = []
    if (g - 1) % 2 == 0:
        out.append(SurfaceDescriptor(True, (g - 1) // 2))
    if g - 1 >= 1:
        out.append(SurfaceDescriptor(False, g - 1))
    return out


def required_seed_surfaces(target: SurfaceDescriptor) -> list[SurfaceDescriptor]:
    seen = []
    for s in _seed_surfaces_join(target) + _seed_surfaces_crosscap(target):
        if s not in seen and s != SPHERE:
            seen.append(s)
    return seen


class _ResultSet:
    """Canonical-deduped irreducible triangulations of the target within cap."""

    def __init__(self, target: SurfaceDescriptor, cap: int):
        self.target = target
        self.cap = cap
        self.found: dict[bytes, Triangulation] = {}

    def offer(self, t: Triangulation):
        if t.n > self.cap:
            return
        if t.surface_of() != self.target:
            return
        if not is_irreducible(t):
            return
        code = canonical_code(t)
        if code not in self.found:
            self.found[code] = canonical_form(t)

    def merge_records(self, ts):
        for t in ts:
            self.offer(t)

    def as_set(self) -> set[Triangulation]:
        return set(self.found.values())

    def sorted_list(self) -> list[Triangulation]:
        return [self.found[c] for c in sorted(self.found)]


def grow_handle_or_crosshandle(seeds, target: SurfaceDescriptor, cap: int,
                               jobs: int = 1) -> set[Triangulation]:
    """Handle/crosshandle growth over the seeds' splitting closures."""
    out = _ResultSet(target, cap)
    _run_join_unit(list(seeds), target, cap, out, jobs)
    return out.as_set()


def grow_crosscap(seeds, target: SurfaceDescriptor, cap: int,
                  jobs: int = 1) -> set[Triangulation]:
    """Crosscap growth over the seeds' splitting closures."""
    if target.orientable:
        raise TriangulationError("INCOMPLETE_SEEDS", "crosscap growth needs a nonorientable target")
    out = _ResultSet(target, cap)
    _run_crosscap_unit(list(seeds), target, cap, out, jobs)
    return out.as_set()


def generate_irreducible(job: GenerationJob) -> set[Triangulation]:
    """Union of all growth paths for the target, checkpointed when asked.

    The final set is deterministic: independent of worker count, schedule,
    and checkpoint resume points.
    """
    target = job.target
    if target == SPHERE:
        from .catalog import tetrahedron

        return {canonical_form(tetrahedron())}
    cap = job.effective_cap()
    seeds = dict(job.seeds)
    from .catalog import tetrahedron

    seeds.setdefault(SPHERE, (canonical_form(tetrahedron()),))
    for s in required_seed_surfaces(target):
        if s not in seeds or not seeds[s]:
            raise TriangulationError("INCOMPLETE_SEEDS", f"need irreducible set for {s.name}")

    units = []
    for s in _seed_surfaces_join(target):
        units.append(("join", s))
    for s in _seed_surfaces_crosscap(target):
        units.append(("crosscap", s))

    checkpoint = _Checkpoint(job.checkpoint_dir, target) if job.checkpoint_dir else None
    out = _ResultSet(target, cap)
    if checkpoint:
        out.merge_records(checkpoint.existing_records())
    for path, seed_surface in units:
        unit_id = f"{target.name}:{path}:{seed_surface.name}"
        if checkpoint and checkpoint.is_done(unit_id):
            continue
        unit_out = _ResultSet(target, cap)
        if path == "join":
            _run_join_unit(list(seeds[seed_surface]), target, cap, unit_out, job.jobs)
        else:
            _run_crosscap_unit(list(seeds[seed_surface]), target, cap, unit_out, job.jobs)
        out.merge_records(unit_out.as_set())
        if checkpoint:
            checkpoint.complete_unit(unit_id, unit_out.sorted_list())
    return out.as_set()


# -- unit runners -------------------------------------------------------------------

def _closure_levels(seed_list, intermediate_cap):
    """Level-by-level closure over all seeds (same surface), deduped by code."""
    by_n: dict[int, dict[bytes, Triangulation]] = {}
    for s in seed_list:
        by_n.setdefault(s.n, {})[canonical_code(s)] = canonical_form(s)
    if not by_n:
        return
    n = min(by_n)
    level = by_n.pop(n)
    while True:
        yield n, level
        if n + 1 > intermediate_cap:
            break
        nxt = by_n.pop(n + 1, {})
        for member in level.values():
            for child in _split_children(member):
                code = canonical_code(child)
                if code not in nxt:
                    nxt[code] = canonical_form(child)
        n += 1
        level = nxt
        if not level and not by_n:
            break
        if not level:
            n = min(by_n)
            level = by_n.pop(n)


def _run_join_unit(seed_list, target, cap, out: _ResultSet, jobs: int):
    _grow(seed_list, target, cap, "join", jobs, out)


def _run_crosscap_unit(seed_list, target, cap, out: _ResultSet, jobs: int):
    _grow(seed_list, target, cap, "crosscap", jobs, out)


# -- engines ------------------------------------------------------------------
#
# An engine works on packed-links handles (bytes) so levels stay compact and
# worker transfer is cheap.  The pure engine is the reference; the kernel
# engine runs the same algorithms compiled, re-attempting every surgery
# survivor through the checked pure operations.

def _keep_result(r: Triangulation, target: SurfaceDescriptor, cap: int) -> bool:
    """Worker-side filter: in cap, irreducible, right surface.  Cheap tests
    first; most surgery outputs die on a contractible edge."""
    return r.n <= cap and is_irreducible(r) and r.surface_of() == target


class _PureEngine:
    def code(self, packed: bytes) -> bytes:
        return canonical_code(Triangulation.from_linkbytes(packed))

    def expand(self, packed: bytes):
        out = []
        for child in _split_children(Triangulation.from_linkbytes(packed)):
            out.append((canonical_code(child), child.to_linkbytes()))
        return out

    def surgery_results(self, packed: bytes, surgery: str, want_orientable: bool,
                        target: SurfaceDescriptor, cap: int):
        t = Triangulation.from_linkbytes(packed)
        if surgery == "join":
            found = _self_join_results(t, want_orientable)
        else:
            found = _crosscap_results(t)
        return [r.to_bytes() for r in found if _keep_result(r, target, cap)]

    def terminal_results(self, packed: bytes, target: SurfaceDescriptor, cap: int):
        out = []
        for child in _split_children(Triangulation.from_linkbytes(packed)):
            out.extend(r.to_bytes() for r in _crosscap_results(child)
                       if _keep_result(r, target, cap))
        return out


def _parse_linkbytes(packed: bytes):
    n = packed[0]
    degs = packed[1:1 + n]
    rows = []
    p = 1 + n
    for v in range(n):
        rows.append(tuple(packed[p:p + degs[v]]))
        p += degs[v]
    return n, rows


def _split_child_from_rows(n, rows, a, i, j) -> Triangulation:
    """The split child exactly as the site kernel builds it: positions i < j
    in a's packed row, the arc strictly between them rewired to the new
    vertex n."""
    row = rows[a]
    b, c = row[i], row[j]
    newv = n
    moved = set()
    for k in range(i, j):
        moved.add(tuple(sorted((a, row[k], row[k + 1]))))
    faces = set()
    for v, r in enumerate(rows):
        d = len(r)
        for k in range(d):
            x, y = r[k], r[(k + 1) % d]
            if v < x and v < y:
                f = (v, x, y) if x < y else (v, y, x)
                if f in moved:
                    f = tuple(sorted((newv,) + tuple(w for w in f if w != a)))
                faces.add(f)
    faces.add(tuple(sorted((a, newv, b))))
    faces.add(tuple(sorted((a, newv, c))))
    return Triangulation._trusted_from_faces(n + 1, faces)


class _KernelEngine:
    def __init__(self):
        from . import _kernels

        self._perms = _kernels.PERMS3
        self._buf = _kernels.KernelBuffers()
        # warm the JIT before any pool fork
        from .catalog import tetrahedron

        seed = tetrahedron().to_linkbytes()
        warm_target = SurfaceDescriptor(True, 1)
        self.code(seed)
        self.expand(seed)
        self.surgery_results(seed, "join", True, warm_target, 4)
        self.surgery_results(seed, "crosscap", False, warm_target, 4)
        self.terminal_results(seed, warm_target, 4)

    def code(self, packed: bytes) -> bytes:
        return self._buf.code(packed)

    def expand(self, packed: bytes):
        return self._buf.expand(packed)

    def surgery_results(self, packed: bytes, surgery: str, want_orientable: bool,
                        target: SurfaceDescriptor, cap: int):
        if surgery == "join":
            survivors = self._buf.join_pairs(packed, want_orientable)
            if not survivors:
                return []
            t = Triangulation.from_linkbytes(packed)
            n, rows = _parse_linkbytes(packed)
            faces = _faces_in_row_order(n, rows)
            out = []
            for fi, fj, p in survivors:
                f1, f2 = faces[fi], faces[fj]
                perm = self._perms[p]
                matching = {f1[k]: f2[perm[k]] for k in range(3)}
                try:
                    r = self_join_at_faces(t, f1, f2, matching, want_orientable)
                except TriangulationError:
                    continue
                if _keep_result(r, target, cap):
                    out.append(r.to_bytes())
            return out
        vertices = self._buf.crosscap_vertices(packed)
        if not vertices:
            return []
        t = Triangulation.from_linkbytes(packed)
        out = []
        for v in vertices:
            try:
                r = crosscap_identify(t, v)
            except TriangulationError:
                continue
            if _keep_result(r, target, cap):
                out.append(r.to_bytes())
        return out

    def terminal_results(self, packed: bytes, target: SurfaceDescriptor, cap: int):
        sites = self._buf.crosscap_sites(packed)
        if not sites:
            return []
        n, rows = _parse_linkbytes(packed)
        out = []
        for a, i, j, v in sites:
            child = _split_child_from_rows(n, rows, int(a), int(i), int(j))
            try:
                r = crosscap_identify(child, int(v))
            except TriangulationError:
                continue
            if _keep_result(r, target, cap):
                out.append(r.to_bytes())
        return out


def _faces_in_row_order(n, rows):
    """Faces enumerated the way the kernels index them."""
    out = []
    for v, r in enumerate(rows):
        d = len(r)
        for k in range(d):
            x, y = r[k], r[(k + 1) % d]
            if v < x and v < y:
                out.append((v, x, y))
    return out


def _make_engine():
    return _KernelEngine() if _kernels_enabled() else _PureEngine()


# -- level orchestration ---------------------------------------------------------

_WORKER_ENGINE = None


def _pool_init(use_kernels: bool):
    global _WORKER_ENGINE
    os.environ.setdefault("SURFTRI_PURE", "" if use_kernels else "1")
    _WORKER_ENGINE = _KernelEngine() if use_kernels else _PureEngine()


def _task_work(engine, members, surgery, want_orientable, expand, terminal, target, cap):
    children = []
    results = []
    for packed in members:
        results.extend(engine.surgery_results(packed, surgery, want_orientable, target, cap))
        if expand:
            children.extend(engine.expand(packed))
        if terminal:
            results.extend(engine.terminal_results(packed, target, cap))
    return children, results


def _pool_task(args):
    """Worker entry: children cross the pipe as two fixed-stride blobs, since
    code and packed lengths are constant within one closure level."""
    members, surgery, want_orientable, expand, terminal, target, cap = args
    children, results = _task_work(_WORKER_ENGINE, members, surgery, want_orientable,
                                   expand, terminal, target, cap)
    if not children:
        return 0, 0, b"", b"", results
    clen = len(children[0][0])
    plen = len(children[0][1])
    codes = b"".join(c for c, _ in children)
    packs = b"".join(p for _, p in children)
    return clen, plen, codes, packs, results


def _iter_children(clen, plen, codes, packs):
    count = len(codes) // clen if clen else 0
    for k in range(count):
        yield codes[k * clen:(k + 1) * clen], packs[k * plen:(k + 1) * plen]


def _grow(seed_list, target, cap, surgery, jobs, out: _ResultSet):
    """Run one growth path over the merged closure of same-surface seeds.

    Levels are deduplicated by canonical code; for the crosscap path the top
    closure level is streamed (children scanned site-by-site, never stored),
    which cannot change the deduplicated result set.
    """
    want_orientable = target.orientable
    intermediate = cap + (3 if surgery == "join" else 4)
    engine = _make_engine()
    by_n: dict[int, dict[bytes, bytes]] = {}
    for s in seed_list:
        if s.n > intermediate:
            continue
        packed = s.to_linkbytes()
        if surgery == "crosscap" and s.n == intermediate:
            for compact in engine.surgery_results(packed, surgery, want_orientable, target, cap):
                out.offer(Triangulation.from_bytes(compact))
            continue
        by_n.setdefault(s.n, {})[engine.code(packed)] = packed
    if not by_n:
        return
    pool = None
    if jobs > 1:
        ctx = multiprocessing.get_context("fork")
        pool = ctx.Pool(jobs, initializer=_pool_init, initargs=(_kernels_enabled(),))
    try:
        n = min(by_n)
        level = by_n.pop(n)
        while True:
            members = [level[k] for k in sorted(level)]
            expand = (surgery == "join" and n < intermediate) or (
                surgery == "crosscap" and n < intermediate - 1
            )
            terminal = surgery == "crosscap" and n == intermediate - 1
            next_level = by_n.pop(n + 1, {})
            if pool is None:
                children, results = _task_work(engine, members, surgery, want_orientable,
                                               expand, terminal, target, cap)
                for compact in results:
                    out.offer(Triangulation.from_bytes(compact))
                for code, packed in children:
                    if code not in next_level:
                        next_level[code] = packed
            else:
                chunk = max(1, min(256, (len(members) + jobs * 16 - 1) // (jobs * 16)))
                tasks = (
                    (members[k:k + chunk], surgery, want_orientable, expand, terminal,
                     target, cap)
                    for k in range(0, len(members), chunk)
                )
                for clen, plen, codes, packs, results in pool.imap_unordered(
                        _pool_task, tasks, chunksize=1):
                    for compact in results:
                        out.offer(Triangulation.from_bytes(compact))
                    for code, packed in _iter_children(clen, plen, codes, packs):
                        if code not in next_level:
                            next_level[code] = packed
            if n + 1 > intermediate:
                break
            if not next_level:
                if not by_n:
                    break
                n = min(by_n)
                level = by_n.pop(n)
            else:
                n += 1
                level = next_level
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()



# -- genus reduction (sanity path) -----------------------------------------------------

def reduce_genus(t: Triangulation) -> list[Triangulation]:
    """Cut each nonseparating two-sided 3-cycle, cap, and contract down.

    Returns the deduplicated lower-genus irreducible triangulations reached.
    One-sided 3-cycles are skipped.  Raises NO_NONSEPARATING_3CYCLE when no
    nonseparating 3-cycle exists at all (irreducible inputs always have
    some).
    """
    if 2 - t.euler_characteristic() < 1:
        raise TriangulationError("NO_NONSEPARATING_3CYCLE", "already genus 0")
    if not is_irreducible(t):
        raise TriangulationError("NOT_CONTRACTIBLE", "input must be irreducible")
    found: dict[bytes, Triangulation] = {}
    any_nonseparating = False
    for c in cycletop.enumerate_cycles(t, 3):
        if cycletop.is_separating(t, c):
            continue
        any_nonseparating = True
        complex_ = cycletop.cut_along_cycle(t, c)
        if len(complex_.boundaries) != 2:
            continue  # one-sided
        faces = list(complex_.faces)
        for b in complex_.boundaries:
            faces.append(tuple(sorted(b)))
        try:
            capped = Triangulation.from_faces(complex_.n, faces)
        except InvalidTriangulation:
            continue
        reduced = contract_to_irreducible(capped)
        found[canonical_code(reduced)] = canonical_form(reduced)
    if not any_nonseparating:
        raise TriangulationError("NO_NONSEPARATING_3CYCLE", "no nonseparating 3-cycle")
    return [found[c] for c in sorted(found)]


# -- checkpointing ------------------------------------------------------------------

class _Checkpoint:
    """Append-only unit log: done.log holds unit ids, partial.tri the records."""

    def __init__(self, directory, target: SurfaceDescriptor):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.done_path = self.dir / "done.log"
        self.partial_path = self.dir / "partial.tri"
        self._done = set()
        if self.done_path.exists():
            self._done = {line.strip() for line in self.done_path.read_text().splitlines() if line.strip()}

    def is_done(self, unit_id: str) -> bool:
        return unit_id in self._done

    def existing_records(self):
        from .triangulation import parse_record

        if not self.partial_path.exists():
            return []
        out = []
        for line in self.partial_path.read_text().splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(parse_record(line))
        return out

    def complete_unit(self, unit_id: str, records):
        from .triangulation import format_record

        with self.partial_path.open("a") as fh:
            for t in records:
                fh.write(format_record(t) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        with self.done_path.open("a") as fh:
            fh.write(unit_id + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        self._done.add(unit_id)
