"""Compiled kernels for the generator's hot loops.

Everything here mirrors the pure-Python reference semantics exactly:

* the canonical-code walk is the same degree-interleaved BFS as canon.py
  (tested byte-for-byte equal);
* split enumeration patches the parent's link structure in place per site
  and undoes the patch, instead of rebuilding the complex;
* the surgery scans only run the proven-sound rejection filters; survivors
  are re-attempted through the checked pure operations by the caller.

Triangulations cross this boundary in "packed links" form:
``[n, deg_0..deg_{n-1}, row_0 bytes, row_1 bytes, ...]`` with one byte per
label (labels < 255).
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAXN = 40
MAXD = 40
MAXF = 2 * MAXN
MAXCH = 1024
CODE_MAX = 256
PACK_MAX = 1 + MAXN + CODE_MAX

# index permutations of a 3-element tuple: identity first, then the rest
PERMS3 = np.array(
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]], dtype=np.int64
)


@njit(cache=True)
def _unpack(buf, off, deg, links):
    """Read one packed-links record at ``off``; returns (n, end_offset)."""
    n = np.int64(buf[off])
    p = off + 1
    for v in range(n):
        deg[v] = np.int64(buf[p])
        p += 1
    for v in range(n):
        for i in range(deg[v]):
            links[v, i] = np.int64(buf[p])
            p += 1
    return n, p


@njit(cache=True)
def _pack(n, deg, links, out, off):
    out[off] = n
    p = off + 1
    for v in range(n):
        out[p] = deg[v]
        p += 1
    for v in range(n):
        for i in range(deg[v]):
            out[p] = links[v, i]
            p += 1
    return p


@njit(cache=True)
def _build_pos(n, deg, links, pos):
    for v in range(n):
        for i in range(deg[v]):
            pos[v, links[v, i]] = i


@njit(cache=True)
def _build_adjmask(n, deg, links, adjmask):
    for v in range(n):
        m = np.int64(0)
        for i in range(deg[v]):
            m |= np.int64(1) << links[v, i]
        adjmask[v] = m


@njit(cache=True)
def _walk(n, deg, links, pos, u0, v0, sense, have_best, best, cur, labels, order, ancp, ancq):
    """One code walk.  Returns -1 (worse than best), 0 (equal), 1 (smaller)."""
    for t in range(n):
        labels[t] = -1
    labels[u0] = 0
    labels[v0] = 1
    order[0] = u0
    order[1] = v0
    cnt = 2
    ancp[v0] = u0
    ancq[v0] = links[u0, (pos[u0, v0] + sense) % deg[u0]]
    cur[0] = deg[u0]
    cur[1] = deg[v0]
    state = 0
    if have_best:
        for k in range(2):
            if state == 0:
                if cur[k] > best[k]:
                    return -1
                if cur[k] < best[k]:
                    state = 1
    idx = 2
    qi = 0
    while qi < cnt:
        x = order[qi]
        d = deg[x]
        if qi == 0:
            parent = v0
            dirx = sense
        else:
            parent = ancp[x]
            prev = ancq[x]
            dirx = 1 if links[x, (pos[x, parent] + 1) % d] == prev else -1
        i0 = pos[x, parent]
        for j in range(1, d):
            w = links[x, (i0 + dirx * j) % d]
            lw = labels[w]
            if lw < 0:
                lw = cnt
                labels[w] = cnt
                order[cnt] = w
                ancp[w] = x
                ancq[w] = links[x, (i0 + dirx * (j - 1)) % d]
                cnt += 1
                cur[idx] = lw
                if state == 0 and have_best:
                    if lw > best[idx]:
                        return -1
                    if lw < best[idx]:
                        state = 1
                idx += 1
                cur[idx] = deg[w]
                if state == 0 and have_best:
                    if deg[w] > best[idx]:
                        return -1
                    if deg[w] < best[idx]:
                        state = 1
                idx += 1
            else:
                cur[idx] = lw
                if state == 0 and have_best:
                    if lw > best[idx]:
                        return -1
                    if lw < best[idx]:
                        state = 1
                idx += 1
        qi += 1
    return state


@njit(cache=True)
def _code(n, deg, links, pos, best, cur, labels, order, ancp, ancq):
    """Canonical code into ``best``;  returns its length (2E)."""
    clen = 0
    for v in range(n):
        clen += deg[v]
    bd0 = 1 << 30
    bd1 = 1 << 30
    for u in range(n):
        du = deg[u]
        if du > bd0:
            continue
        for i in range(du):
            dv = deg[links[u, i]]
            if du < bd0 or (du == bd0 and dv < bd1):
                bd0 = du
                bd1 = dv
    have_best = False
    for u in range(n):
        if deg[u] != bd0:
            continue
        for i in range(deg[u]):
            v = links[u, i]
            if deg[v] != bd1:
                continue
            for s in range(2):
                sense = 1 if s == 0 else -1
                r = _walk(n, deg, links, pos, u, v, sense,
                          have_best, best, cur, labels, order, ancp, ancq)
                if r < 0:
                    continue
                if (not have_best) or r == 1:
                    for k in range(clen):
                        best[k] = cur[k]
                    have_best = True
    return clen


@njit(cache=True)
def _apply_split(n, deg, links, pos, a, i, j):
    """Patch the structure in place for the split of ``a`` at link positions
    i < j; the new vertex is n.  Returns nothing; _undo_split reverses it
    given the saved parent rows."""
    d = deg[a]
    b = links[a, i]
    c = links[a, j]
    m = j - i - 1
    newv = n
    # new vertex row: [a, b, moved..., c]
    links[newv, 0] = a
    links[newv, 1] = b
    for k in range(m):
        links[newv, 2 + k] = links[a, i + 1 + k]
    links[newv, 2 + m] = c
    deg[newv] = m + 3
    for k in range(deg[newv]):
        pos[newv, links[newv, k]] = k
    # moved rows: a -> newv
    for k in range(m):
        x = links[a, i + 1 + k]
        pa = pos[x, a]
        links[x, pa] = newv
        pos[x, newv] = pa
    # b: insert newv between a and the moved-side partner links[a, i+1]
    partner_b = links[a, i + 1]  # equals c when the moved arc is empty
    _insert_after(deg, links, pos, b, a, partner_b, newv)
    # c: insert newv between a and links[a, j-1]
    partner_c = links[a, j - 1]  # equals b when the moved arc is empty
    _insert_after(deg, links, pos, c, a, partner_c, newv)
    # a's own row: [b, newv, c] + tail positions j+1..i-1 (cyclic)
    tail = d - m - 2
    buf = np.empty(MAXD, dtype=np.int64)
    for k in range(tail):
        buf[k] = links[a, (j + 1 + k) % d]
    links[a, 0] = b
    links[a, 1] = newv
    links[a, 2] = c
    for k in range(tail):
        links[a, 3 + k] = buf[k]
    deg[a] = tail + 3
    for k in range(deg[a]):
        pos[a, links[a, k]] = k


@njit(cache=True)
def _insert_after(deg, links, pos, v, x, y, newv):
    """In v's row, insert newv between adjacent entries x and y."""
    d = deg[v]
    px = pos[v, x]
    if links[v, (px + 1) % d] == y:
        at = (px + 1) % d
    else:
        at = px  # y sits before x; newv replaces the slot at x, shifting x right
    for k in range(d, at, -1):
        links[v, k] = links[v, k - 1]
    links[v, at] = newv
    deg[v] = d + 1
    for k in range(at, d + 1):
        pos[v, links[v, k]] = k


@njit(cache=True)
def _restore_rows(deg, links, pos, deg0, links0, a, i, j):
    """Undo _apply_split using the pristine parent copies (deg0/links0)."""
    _restore_one(deg, links, pos, deg0, links0, a)
    _restore_one(deg, links, pos, deg0, links0, links0[a, i])
    _restore_one(deg, links, pos, deg0, links0, links0[a, j])
    for k in range(j - i - 1):
        _restore_one(deg, links, pos, deg0, links0, links0[a, i + 1 + k])


@njit(cache=True)
def _restore_one(deg, links, pos, deg0, links0, v):
    deg[v] = deg0[v]
    for k in range(deg0[v]):
        links[v, k] = links0[v, k]
        pos[v, links[v, k]] = k


@njit(cache=True)
def expand_parent(buf, off, scratch_deg, scratch_links, scratch_pos,
                  deg0, links0, best, cur, labels, order, ancp, ancq,
                  out_codes, out_packed, out_meta):
    """All split children of one packed parent.

    Writes per child: canonical code (out_codes row), packed links
    (out_packed row), and (a, i, j, code_len, pack_len) into out_meta.
    Returns the child count.
    """
    n, _ = _unpack(buf, off, deg0, links0)
    for v in range(n):
        scratch_deg[v] = deg0[v]
        for k in range(deg0[v]):
            scratch_links[v, k] = links0[v, k]
    _build_pos(n, scratch_deg, scratch_links, scratch_pos)
    cnt = 0
    for a in range(n):
        d = deg0[a]
        for i in range(d):
            for j in range(i + 1, d):
                _apply_split(n, scratch_deg, scratch_links, scratch_pos, a, i, j)
                clen = _code(n + 1, scratch_deg, scratch_links, scratch_pos,
                             best, cur, labels, order, ancp, ancq)
                for k in range(clen):
                    out_codes[cnt, k] = best[k]
                plen = _pack(n + 1, scratch_deg, scratch_links, out_packed[cnt], 0)
                out_meta[cnt, 0] = a
                out_meta[cnt, 1] = i
                out_meta[cnt, 2] = j
                out_meta[cnt, 3] = clen
                out_meta[cnt, 4] = plen
                cnt += 1
                _restore_rows(scratch_deg, scratch_links, scratch_pos, deg0, links0, a, i, j)
    return cnt


@njit(cache=True)
def code_packed(buf, off, deg, links, pos, best, cur, labels, order, ancp, ancq):
    n, _ = _unpack(buf, off, deg, links)
    _build_pos(n, deg, links, pos)
    return _code(n, deg, links, pos, best, cur, labels, order, ancp, ancq), n


@njit(cache=True)
def _faces_from_links(n, deg, links, faces):
    nf = 0
    for v in range(n):
        d = deg[v]
        for i in range(d):
            x = links[v, i]
            y = links[v, (i + 1) % d]
            if v < x and v < y:
                faces[nf, 0] = v
                faces[nf, 1] = x
                faces[nf, 2] = y
                nf += 1
    return nf








@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _quotient_ok(nv, qfaces, nq, want_orientable, check_orientability,
                 ecount, eface1, eface2, touched, nbrs, part_a, part_b, nnbr,
                 stack, seen, adjm, fsign, fseen):
    """Validate a quotient face list and reject reducible results.

    Checks: every edge in exactly two faces, no duplicate faces, one link
    cycle per vertex, connectivity, no contractible edge (the tetrahedron
    special case cannot occur at these sizes), and, when asked, that the
    complex orients exactly as requested.  Labels need not be contiguous.
    """
    ntouch = 0
    ok = True
    # edge counts and the two faces of each edge
    for fi in range(nq):
        a = qfaces[fi, 0]
        b = qfaces[fi, 1]
        c = qfaces[fi, 2]
        if a == b or b == c or a == c:
            ok = False
            break
        for k in range(3):
            if k == 0:
                x, y = (a, b) if a < b else (b, a)
            elif k == 1:
                x, y = (a, c) if a < c else (c, a)
            else:
                x, y = (b, c) if b < c else (c, b)
            cnt = ecount[x, y]
            if cnt == 0:
                touched[ntouch, 0] = x
                touched[ntouch, 1] = y
                ntouch += 1
                eface1[x, y] = fi
            elif cnt == 1:
                eface2[x, y] = fi
            else:
                ok = False
                break
            ecount[x, y] = cnt + 1
        if not ok:
            break
    if ok:
        for t in range(ntouch):
            if ecount[touched[t, 0], touched[t, 1]] != 2:
                ok = False
                break
    # vertex links: one closed cycle each
    if ok:
        for v in range(nv):
            nnbr[v] = 0
        for fi in range(nq):
            a = qfaces[fi, 0]
            b = qfaces[fi, 1]
            c = qfaces[fi, 2]
            for k in range(3):
                if k == 0:
                    v, x, y = a, b, c
                elif k == 1:
                    v, x, y = b, a, c
                else:
                    v, x, y = c, a, b
                # register link edge (x, y) at v
                for half in range(2):
                    w = x if half == 0 else y
                    other = y if half == 0 else x
                    slot = -1
                    for s in range(nnbr[v]):
                        if nbrs[v, s] == w:
                            slot = s
                            break
                    if slot < 0:
                        slot = nnbr[v]
                        if slot >= MAXD:
                            ok = False
                            break
                        nbrs[v, slot] = w
                        part_a[v, slot] = other
                        part_b[v, slot] = -1
                        nnbr[v] += 1
                    else:
                        if part_b[v, slot] != -1:
                            ok = False
                            break
                        part_b[v, slot] = other
                if not ok:
                    break
            if not ok:
                break
    if ok:
        for v in range(nv):
            d = nnbr[v]
            if d == 0:
                continue
            for s in range(d):
                if part_b[v, s] == -1:
                    ok = False
                    break
            if not ok:
                break
            # walk the link from nbrs[v,0]
            start = nbrs[v, 0]
            prev = start
            cur = part_a[v, 0]
            length = 1
            while cur != start:
                slot = -1
                for s in range(d):
                    if nbrs[v, s] == cur:
                        slot = s
                        break
                nxt = part_b[v, slot] if part_a[v, slot] == prev else part_a[v, slot]
                prev = cur
                cur = nxt
                length += 1
                if length > d:
                    break
            if length != d:
                ok = False
                break
    # connectivity over vertices with faces
    if ok:
        root = -1
        active = 0
        for v in range(nv):
            seen[v] = False
            if nnbr[v] > 0:
                active += 1
                if root < 0:
                    root = v
        top = 0
        stack[top] = root
        top += 1
        seen[root] = True
        reached = 1
        while top > 0:
            top -= 1
            v = stack[top]
            for s in range(nnbr[v]):
                w = nbrs[v, s]
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack[top] = w
                    top += 1
        if reached != active:
            ok = False
    # irreducibility: no edge with exactly two common neighbors
    if ok:
        one = np.int64(1)
        for v in range(nv):
            m = np.int64(0)
            for s in range(nnbr[v]):
                m |= one << nbrs[v, s]
            adjm[v] = m
        for t in range(ntouch):
            x = touched[t, 0]
            y = touched[t, 1]
            if _popcount(adjm[x] & adjm[y]) == 2:
                ok = False
                break
    # orientability propagation when the caller cares
    if ok and check_orientability:
        for fi in range(nq):
            fseen[fi] = False
        fsign[0] = 1
        fseen[0] = True
        top = 0
        stack[top] = 0
        top += 1
        orientable = True
        while top > 0 and orientable:
            top -= 1
            fi = stack[top]
            a = qfaces[fi, 0]
            b = qfaces[fi, 1]
            c = qfaces[fi, 2]
            # oriented boundary of (a,b,c) with sign s: (a->b->c) or reversed
            s = fsign[fi]
            for k in range(3):
                if k == 0:
                    u, w = a, b
                elif k == 1:
                    u, w = b, c
                else:
                    u, w = c, a
                if s < 0:
                    u, w = w, u
                x, y = (u, w) if u < w else (w, u)
                gj = eface2[x, y] if eface1[x, y] == fi else eface1[x, y]
                # neighbor must traverse (w, u): its sign is forced
                ga = qfaces[gj, 0]
                gb = qfaces[gj, 1]
                gc = qfaces[gj, 2]
                fwd = ((ga == w and gb == u) or (gb == w and gc == u) or (gc == w and ga == u))
                need = 1 if fwd else -1
                if fseen[gj]:
                    if fsign[gj] != need:
                        orientable = False
                        break
                else:
                    fseen[gj] = True
                    fsign[gj] = need
                    stack[top] = gj
                    top += 1
        if orientable != want_orientable:
            ok = False
    # clear the touched edge cells for the next call
    for t in range(ntouch):
        ecount[touched[t, 0], touched[t, 1]] = 0
    return ok


@njit(cache=True)
def _join_quotient(faces, nf, fi, fj, perm, qfaces):
    """Quotient face list for a self-join candidate: drop the two faces and
    merge matched vertices onto the smaller label.  Returns the face count."""
    m0 = np.empty(3, dtype=np.int64)
    m1 = np.empty(3, dtype=np.int64)
    for k in range(3):
        m0[k] = faces[fi, k]
        m1[k] = faces[fj, perm[k]]
    nq = 0
    for g in range(nf):
        if g == fi or g == fj:
            continue
        for k in range(3):
            v = faces[g, k]
            for t in range(3):
                if v == m0[t] and m1[t] < v:
                    v = m1[t]
                elif v == m1[t] and m0[t] < v:
                    v = m0[t]
            qfaces[nq, k] = v
        nq += 1
    return nq


@njit(cache=True)
def join_scan_full(buf, off, deg, links, adjmask, faces, perms, qfaces,
                   ecount, eface1, eface2, touched, nbrs, part_a, part_b, nnbr,
                   stack, seen, adjm, fsign, fseen, want_orientable, out):
    """Self-join candidates that survive full in-kernel validation, including
    irreducibility and the requested orientability."""
    n, _ = _unpack(buf, off, deg, links)
    _build_adjmask(n, deg, links, adjmask)
    nf = _faces_from_links(n, deg, links, faces)
    cnt = 0
    one = np.int64(1)
    for fi in range(nf):
        m1 = (one << faces[fi, 0]) | (one << faces[fi, 1]) | (one << faces[fi, 2])
        for fj in range(fi + 1, nf):
            m2 = (one << faces[fj, 0]) | (one << faces[fj, 1]) | (one << faces[fj, 2])
            if m1 & m2:
                continue  # shared vertices cannot give the 3-merge surgery
            cross = np.int64(0)
            for k in range(3):
                cross |= adjmask[faces[fi, k]]
            if cross & m2:
                continue
            both = m1 | m2
            for p in range(6):
                ok = True
                for k in range(3):
                    x = faces[fi, k]
                    y = faces[fj, perms[p, k]]
                    if adjmask[x] & adjmask[y] & ~both:
                        ok = False
                        break
                if not ok:
                    continue
                nq = _join_quotient(faces, nf, fi, fj, perms[p], qfaces)
                if _quotient_ok(n, qfaces, nq, want_orientable, True,
                                ecount, eface1, eface2, touched, nbrs, part_a,
                                part_b, nnbr, stack, seen, adjm, fsign, fseen):
                    out[cnt, 0] = fi
                    out[cnt, 1] = fj
                    out[cnt, 2] = p
                    cnt += 1
    return cnt


@njit(cache=True)
def _crosscap_quotient(n, deg, links, v, faces_buf, qfaces):
    """Quotient for the crosscap at degree-6 vertex v: drop its star and
    identify antipodal hexagon vertices.  Returns the face count."""
    nf = _faces_from_links(n, deg, links, faces_buf)
    h0 = links[v, 0]
    h1 = links[v, 1]
    h2 = links[v, 2]
    h3 = links[v, 3]
    h4 = links[v, 4]
    h5 = links[v, 5]
    nq = 0
    for g in range(nf):
        a = faces_buf[g, 0]
        b = faces_buf[g, 1]
        c = faces_buf[g, 2]
        if a == v or b == v or c == v:
            continue
        for k in range(3):
            w = faces_buf[g, k]
            if w == h0 or w == h3:
                w = h0 if h0 < h3 else h3
            elif w == h1 or w == h4:
                w = h1 if h1 < h4 else h4
            elif w == h2 or w == h5:
                w = h2 if h2 < h5 else h5
            qfaces[nq, k] = w
        nq += 1
    return nq


@njit(cache=True)
def _crosscap_candidates_full(n, deg, links, adjmask, faces_buf, qfaces,
                              ecount, eface1, eface2, touched, nbrs, part_a,
                              part_b, nnbr, stack, seen, adjm, fsign, fseen,
                              out, base):
    """Vertices whose crosscap identification validates and is irreducible."""
    cnt = 0
    one = np.int64(1)
    for v in range(n):
        if deg[v] != 6:
            continue
        star = one << v
        for i in range(6):
            star |= one << links[v, i]
        ok = True
        for i in range(6):
            x = links[v, i]
            y2 = links[v, (i + 2) % 6]
            y3 = links[v, (i + 3) % 6]
            if adjmask[x] & ((one << y2) | (one << y3)):
                ok = False
                break
            if adjmask[x] & adjmask[y3] & ~star:
                ok = False
                break
        if not ok:
            continue
        nq = _crosscap_quotient(n, deg, links, v, faces_buf, qfaces)
        if _quotient_ok(n, qfaces, nq, False, False,
                        ecount, eface1, eface2, touched, nbrs, part_a,
                        part_b, nnbr, stack, seen, adjm, fsign, fseen):
            out[base + cnt] = v
            cnt += 1
    return cnt


@njit(cache=True)
def crosscap_scan_full(buf, off, deg, links, adjmask, faces_buf, qfaces,
                       ecount, eface1, eface2, touched, nbrs, part_a, part_b,
                       nnbr, stack, seen, adjm, fsign, fseen, out):
    n, _ = _unpack(buf, off, deg, links)
    _build_adjmask(n, deg, links, adjmask)
    return _crosscap_candidates_full(n, deg, links, adjmask, faces_buf, qfaces,
                                     ecount, eface1, eface2, touched, nbrs,
                                     part_a, part_b, nnbr, stack, seen, adjm,
                                     fsign, fseen, out, 0)


@njit(cache=True)
def crosscap_site_scan_full(buf, off, deg0, links0, scratch_deg, scratch_links,
                            scratch_pos, adjmask, faces_buf, qfaces,
                            ecount, eface1, eface2, touched, nbrs, part_a,
                            part_b, nnbr, stack, seen, adjm, fsign, fseen,
                            vbuf, out):
    """Terminal stream with full validation: split children are checked
    site-by-site; only sites whose crosscap truly yields an irreducible
    triangulation are emitted."""
    n, _ = _unpack(buf, off, deg0, links0)
    for v in range(n):
        scratch_deg[v] = deg0[v]
        for k in range(deg0[v]):
            scratch_links[v, k] = links0[v, k]
    _build_pos(n, scratch_deg, scratch_links, scratch_pos)
    cnt = 0
    for a in range(n):
        d = deg0[a]
        for i in range(d):
            for j in range(i + 1, d):
                _apply_split(n, scratch_deg, scratch_links, scratch_pos, a, i, j)
                _build_adjmask(n + 1, scratch_deg, scratch_links, adjmask)
                hits = _crosscap_candidates_full(
                    n + 1, scratch_deg, scratch_links, adjmask, faces_buf,
                    qfaces, ecount, eface1, eface2, touched, nbrs, part_a,
                    part_b, nnbr, stack, seen, adjm, fsign, fseen, vbuf, 0)
                for h in range(hits):
                    out[cnt, 0] = a
                    out[cnt, 1] = i
                    out[cnt, 2] = j
                    out[cnt, 3] = vbuf[h]
                    cnt += 1
                _restore_rows(scratch_deg, scratch_links, scratch_pos, deg0, links0, a, i, j)
    return cnt


class KernelBuffers:
    """Preallocated scratch for one worker process."""

    def __init__(self):
        self.deg = np.zeros(MAXN, dtype=np.int64)
        self.links = np.zeros((MAXN, MAXD), dtype=np.int64)
        self.pos = np.zeros((MAXN, MAXN), dtype=np.int64)
        self.deg0 = np.zeros(MAXN, dtype=np.int64)
        self.links0 = np.zeros((MAXN, MAXD), dtype=np.int64)
        self.best = np.zeros(CODE_MAX, dtype=np.uint8)
        self.cur = np.zeros(CODE_MAX, dtype=np.uint8)
        self.labels = np.zeros(MAXN, dtype=np.int64)
        self.order = np.zeros(MAXN, dtype=np.int64)
        self.ancp = np.zeros(MAXN, dtype=np.int64)
        self.ancq = np.zeros(MAXN, dtype=np.int64)
        self.adjmask = np.zeros(MAXN, dtype=np.int64)
        self.faces = np.zeros((MAXF, 3), dtype=np.int64)
        self.vbuf = np.zeros(MAXN, dtype=np.int64)
        self.out_codes = np.zeros((MAXCH, CODE_MAX), dtype=np.uint8)
        self.out_packed = np.zeros((MAXCH, PACK_MAX), dtype=np.uint8)
        self.out_meta = np.zeros((MAXCH, 5), dtype=np.int64)
        self.out_pairs = np.zeros((MAXCH, 3), dtype=np.int64)
        self.out_sites = np.zeros((8 * MAXCH, 4), dtype=np.int64)
        # quotient validator scratch
        self.qfaces = np.zeros((MAXF, 3), dtype=np.int64)
        self.ecount = np.zeros((MAXN, MAXN), dtype=np.int64)
        self.eface1 = np.zeros((MAXN, MAXN), dtype=np.int64)
        self.eface2 = np.zeros((MAXN, MAXN), dtype=np.int64)
        self.touched = np.zeros((3 * MAXF, 2), dtype=np.int64)
        self.nbrs = np.zeros((MAXN, MAXD), dtype=np.int64)
        self.part_a = np.zeros((MAXN, MAXD), dtype=np.int64)
        self.part_b = np.zeros((MAXN, MAXD), dtype=np.int64)
        self.nnbr = np.zeros(MAXN, dtype=np.int64)
        self.stack = np.zeros(MAXN + MAXF, dtype=np.int64)
        self.seen = np.zeros(MAXN, dtype=np.bool_)
        self.adjm = np.zeros(MAXN, dtype=np.int64)
        self.fsign = np.zeros(MAXF, dtype=np.int64)
        self.fseen = np.zeros(MAXF, dtype=np.bool_)

    def expand(self, packed: bytes):
        buf = np.frombuffer(packed, dtype=np.uint8)
        cnt = expand_parent(buf, 0, self.deg, self.links, self.pos,
                            self.deg0, self.links0, self.best, self.cur,
                            self.labels, self.order, self.ancp, self.ancq,
                            self.out_codes, self.out_packed, self.out_meta)
        out = []
        meta = self.out_meta
        for k in range(cnt):
            clen = meta[k, 3]
            plen = meta[k, 4]
            out.append((self.out_codes[k, :clen].tobytes(),
                        self.out_packed[k, :plen].tobytes()))
        return out

    def code(self, packed: bytes) -> bytes:
        buf = np.frombuffer(packed, dtype=np.uint8)
        clen, _ = code_packed(buf, 0, self.deg, self.links, self.pos,
                              self.best, self.cur, self.labels, self.order,
                              self.ancp, self.ancq)
        return self.best[:clen].tobytes()

    def join_pairs(self, packed: bytes, want_orientable: bool):
        buf = np.frombuffer(packed, dtype=np.uint8)
        cnt = join_scan_full(buf, 0, self.deg, self.links, self.adjmask,
                             self.faces, PERMS3, self.qfaces,
                             self.ecount, self.eface1, self.eface2,
                             self.touched, self.nbrs, self.part_a, self.part_b,
                             self.nnbr, self.stack, self.seen, self.adjm,
                             self.fsign, self.fseen, want_orientable,
                             self.out_pairs)
        return [(int(self.out_pairs[k, 0]), int(self.out_pairs[k, 1]),
                 int(self.out_pairs[k, 2])) for k in range(cnt)]

    def crosscap_vertices(self, packed: bytes):
        buf = np.frombuffer(packed, dtype=np.uint8)
        cnt = crosscap_scan_full(buf, 0, self.deg, self.links, self.adjmask,
                                 self.faces, self.qfaces,
                                 self.ecount, self.eface1, self.eface2,
                                 self.touched, self.nbrs, self.part_a,
                                 self.part_b, self.nnbr, self.stack, self.seen,
                                 self.adjm, self.fsign, self.fseen, self.vbuf)
        return [int(self.vbuf[k]) for k in range(cnt)]

    def crosscap_sites(self, packed: bytes):
        buf = np.frombuffer(packed, dtype=np.uint8)
        cnt = crosscap_site_scan_full(buf, 0, self.deg0, self.links0, self.deg,
                                      self.links, self.pos, self.adjmask,
                                      self.faces, self.qfaces,
                                      self.ecount, self.eface1, self.eface2,
                                      self.touched, self.nbrs, self.part_a,
                                      self.part_b, self.nnbr, self.stack,
                                      self.seen, self.adjm, self.fsign,
                                      self.fseen, self.vbuf, self.out_sites)
        return [(int(self.out_sites[k, 0]), int(self.out_sites[k, 1]),
                 int(self.out_sites[k, 2]), int(self.out_sites[k, 3]))
                for k in range(cnt)]
