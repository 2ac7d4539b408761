"""Canonical codes and equivalence testing for triangulations.

Two triangulations are equivalent when a vertex bijection carries edges to
edges and faces to faces; orientation-reversing maps count, so a code and its
mirror always agree.

Code scheme ("degree-interleaved BFS code", fixed and relied on by the
canonical TRI serialization):

* A start is a directed edge (u, v) plus one of the two senses of the link
  cycle at u.  The walk relabels u -> 0, v -> 1 and processes vertices in
  label order.  Each vertex's link is read starting just after the edge to
  its parent, in the direction induced across the shared face, emitting one
  byte per neighbor: the neighbor's label, followed by its degree when this
  is its first appearance.  The stream starts with deg(u), deg(v).
* The emitted stream has length exactly 2E and reconstructs the face set,
  so equal streams mean equal (relabeled) triangulations.
* canonical_code(t) is the lexicographic minimum over all starts.  Since a
  stream begins with (deg u, deg v), only starts minimizing that pair can
  win, and only those are walked.

Cost is O(E) per walk over O(E) candidate starts, with early abort against
the best stream found so far.
"""

from __future__ import annotations

from .triangulation import Triangulation

_FRESH = -1


def _walk(links, pos, deg, u0, v0, sense, best):
    """Emit the code stream for one start; None when it exceeds ``best``.

    Returns (stream, labels, strictly_smaller).
    """
    n = len(links)
    labels = [_FRESH] * n
    labels[u0] = 0
    labels[v0] = 1
    order = [u0, v0]
    # parent edge and the link element just before the vertex in the parent's
    # rotation; both determine the induced direction of the vertex's own link
    anchor = [None] * n
    anchor[v0] = (u0, links[u0][(pos[u0][v0] + sense) % deg[u0]])
    out = bytearray((deg[u0], deg[v0]))
    smaller = False
    if best is not None and not smaller:
        b0, b1 = best[0], best[1]
        if out[0] != b0 or out[1] != b1:
            if out[0] > b0 or (out[0] == b0 and out[1] > b1):
                return None
            smaller = True
    idx = 2
    qi = 0
    while qi < len(order):
        x = order[qi]
        row = pos[x]
        cyc = links[x]
        d = deg[x]
        if qi == 0:
            parent, dirx = v0, sense
        else:
            parent, prev = anchor[x]
            i = row[parent]
            dirx = 1 if cyc[(i + 1) % d] == prev else -1
        i0 = row[parent]
        for j in range(1, d):
            w = cyc[(i0 + dirx * j) % d]
            lw = labels[w]
            if lw == _FRESH:
                lw = len(order)
                labels[w] = lw
                order.append(w)
                anchor[w] = (x, cyc[(i0 + dirx * (j - 1)) % d])
                out.append(lw)
                if not smaller and best is not None:
                    b = best[idx]
                    if lw != b:
                        if lw > b:
                            return None
                        smaller = True
                idx += 1
                dw = deg[w]
                out.append(dw)
                if not smaller and best is not None:
                    b = best[idx]
                    if dw != b:
                        if dw > b:
                            return None
                        smaller = True
                idx += 1
            else:
                out.append(lw)
                if not smaller and best is not None:
                    b = best[idx]
                    if lw != b:
                        if lw > b:
                            return None
                        smaller = True
                idx += 1
        qi += 1
    return out, labels, smaller


def _code_and_labels(t: Triangulation):
    t._ensure_links()
    links = t._links
    pos = t._pos
    deg = [len(l) for l in links]
    # Only starts minimizing (deg u, deg v) can yield the minimal stream.
    best_pair = None
    starts = []
    for u in range(t.n):
        du = deg[u]
        if best_pair is not None and du > best_pair[0]:
            continue
        for v in links[u]:
            pair = (du, deg[v])
            if best_pair is None or pair < best_pair:
                best_pair = pair
                starts = [(u, v)]
            elif pair == best_pair:
                starts.append((u, v))
    best = None
    best_labels = None
    for u, v in starts:
        for sense in (1, -1):
            res = _walk(links, pos, deg, u, v, sense, best)
            if res is None:
                continue
            out, labels, smaller = res
            if best is None or smaller:
                best = out
                best_labels = labels
    return bytes(best), best_labels


def canonical_code(t: Triangulation) -> bytes:
    """Total-order key: equal exactly for equivalent triangulations."""
    if t._code is None:
        code, labels = _code_and_labels(t)
        t._code = code
        t._canon_faces = tuple(
            sorted(tuple(sorted((labels[a], labels[b], labels[c]))) for a, b, c in t.faces)
        )
    return t._code


def canonical_form(t: Triangulation) -> Triangulation:
    """Relabel by the winning walk.  Idempotent and bit-stable across runs."""
    canonical_code(t)
    if t._canon_faces == t.faces:
        return t
    out = Triangulation._trusted_from_faces(t.n, t._canon_faces)
    out._code = t._code
    out._canon_faces = out.faces
    return out


def are_equivalent(t1: Triangulation, t2: Triangulation) -> bool:
    if t1.n != t2.n or len(t1.faces) != len(t2.faces):
        return False
    return canonical_code(t1) == canonical_code(t2)
