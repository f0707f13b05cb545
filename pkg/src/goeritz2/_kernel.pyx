# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled normalization kernel.

Same contract as goeritz2._kernel_py (the reference implementation); the
static tables are copied from there at import so the two cannot drift.
"""

from libc.stdlib cimport malloc, free

from . import _kernel_py as _ref

BACKEND = "cython"

cdef int EC[12]          # edge -> curve
cdef int OTH[48]         # e*4 + h -> other hexagon, -1 if not adjacent
cdef int HCS[24]         # h*6 + curve -> the edge of that curve in h
cdef int NBR0[48]        # h*12 + e -> previous side, -1
cdef int NBR1[48]        # h*12 + e -> next side, -1
cdef int SPOS[48]        # h*12 + e -> side position, -1


def _init_tables():
    cdef int e, h, c
    for e in range(12):
        EC[e] = _ref._EDGE_CURVE[e]
        for h in range(4):
            OTH[e * 4 + h] = _ref._OTHER_HEX[e][h]
    for h in range(4):
        for c in range(6):
            HCS[h * 6 + c] = _ref._HEX_CURVE_SIDE[h][c]
        for e in range(12):
            NBR0[h * 12 + e] = _ref._NEIGHBORS[h][e][0]
            NBR1[h * 12 + e] = _ref._NEIGHBORS[h][e][1]
            SPOS[h * 12 + e] = _ref._SIDE_POS[h][e]


_init_tables()


cdef int _spur_pass(int* es, int* hs, int n):
    """Remove spur pairs until none remain; returns the new length."""
    cdef int i, j, k
    cdef bint again = True
    while again and n >= 2:
        again = False
        for i in range(n):
            j = i + 1
            if j == n:
                j = 0
            if es[i] == es[j]:
                if j > i:
                    for k in range(j + 1, n):
                        es[k - 2] = es[k]
                        hs[k - 2] = hs[k]
                    # shift the part before i stays; close the gap at i
                    # (elements i and j removed; j == i+1)
                else:
                    # wrap: remove last and first
                    for k in range(1, n - 1):
                        es[k - 1] = es[k]
                        hs[k - 1] = hs[k]
                n -= 2
                again = True
                break
    return n


cdef bint _runs_pass(int* es, int* hs, int* n_io, int* scratch_e, int* scratch_h):
    """Find one bigon run and slide it; True if a slide happened."""
    cdef int n = n_io[0]
    cdef int i, k, nk, f, d, curve, cur, dside, g, other_fence, m, idx, cnt, hb, fp
    cdef int nb0, nb1
    for i in range(n):
        d = es[i]
        curve = EC[d]
        cur = hs[i]
        k = i
        m = 0  # number of fence crossings so far
        while True:
            nk = k + 1
            if nk == n:
                nk = 0
            if nk == i:
                break
            f = es[nk]
            dside = HCS[cur * 6 + curve]
            if m == 0:
                nb0 = NBR0[cur * 12 + dside]
                nb1 = NBR1[cur * 12 + dside]
                if f == nb0 or f == nb1:
                    m = 1
                    scratch_e[0] = nk
                    cur = hs[nk]
                    k = nk
                    continue
                break
            if f == dside:
                # run complete: i .. nk with m fences recorded in scratch_e[0:m]
                _slide(es, hs, n, i, scratch_e, m, nk, scratch_h)
                n_io[0] = n - 2
                return True
            g = es[k]
            nb0 = NBR0[cur * 12 + dside]
            nb1 = NBR1[cur * 12 + dside]
            other_fence = -1
            if nb1 == g:
                other_fence = nb0
            elif nb0 == g:
                other_fence = nb1
            if f == other_fence:
                if m >= n:
                    break
                scratch_e[m] = nk
                m += 1
                cur = hs[nk]
                k = nk
                continue
            break
    return False


cdef void _slide(int* es, int* hs, int n, int i, int* fences, int m, int end,
                 int* tmp):
    """Rewrite the run as the mirrored fence path; result written back (n-2)."""
    cdef int hb = OTH[es[i] * 4 + hs[i]]
    cdef int cur = hb
    cdef int t = 0
    cdef int k = end + 1
    if k == n:
        k = 0
    while k != i:
        tmp[2 * t] = es[k]
        tmp[2 * t + 1] = hs[k]
        t += 1
        k += 1
        if k == n:
            k = 0
    cdef int j, fp
    for j in range(m):
        fp = es[fences[j]] ^ 1
        cur = OTH[fp * 4 + cur]
        tmp[2 * t] = fp
        tmp[2 * t + 1] = cur
        t += 1
    for j in range(t):
        es[j] = tmp[2 * j]
        hs[j] = tmp[2 * j + 1]


def normalize_steps(es_list, hs_list):
    """Spur and bigon removal to a fixed point.  May return empty lists."""
    cdef int n = len(es_list)
    if n == 0:
        return [], []
    cdef int cap = n + 8
    cdef int* es = <int*> malloc(cap * sizeof(int))
    cdef int* hs = <int*> malloc(cap * sizeof(int))
    cdef int* fe = <int*> malloc(cap * sizeof(int))
    cdef int* tmp = <int*> malloc(2 * cap * sizeof(int))
    if not es or not hs or not fe or not tmp:
        raise MemoryError()
    cdef int i
    try:
        for i in range(n):
            es[i] = es_list[i]
            hs[i] = hs_list[i]
        while True:
            n = _spur_pass(es, hs, n)
            if n == 0:
                return [], []
            if not _runs_pass(es, hs, &n, fe, tmp):
                break
        return [es[i] for i in range(n)], [hs[i] for i in range(n)]
    finally:
        free(es)
        free(hs)
        free(fe)
        free(tmp)


def canonicalize_corners(es_list, hs_list):
    """Unguarded corner-pass rewrite (see _kernel_py for the contract notes)."""
    cdef int n = len(es_list)
    if n == 0:
        return [], []
    cdef int* es = <int*> malloc(n * sizeof(int))
    cdef int* hs = <int*> malloc(n * sizeof(int))
    if not es or not hs:
        raise MemoryError()
    cdef int i, j, h, p1, p2, diff, d, hp, e1p, e2p, h1p, h2p
    cdef bint again = True
    try:
        for i in range(n):
            es[i] = es_list[i]
            hs[i] = hs_list[i]
        while again:
            again = False
            for i in range(n):
                j = i + 1
                if j == n:
                    j = 0
                h = hs[i]
                p1 = SPOS[h * 12 + es[i]]
                p2 = SPOS[h * 12 + es[j]]
                diff = (p1 - p2 + 6) % 6
                if diff != 1 and diff != 5:
                    continue
                d = es[i] if EC[es[i]] < 3 else es[j]
                if not (d & 1):
                    continue
                hp = OTH[es[i] * 4 + hs[i]]
                e1p = es[j] ^ 1
                e2p = es[i] ^ 1
                h1p = OTH[e1p * 4 + hp]
                if h1p < 0:
                    raise AssertionError("corner slide broke the chain")
                h2p = OTH[e2p * 4 + h1p]
                if h2p != hs[j]:
                    raise AssertionError("corner slide broke the chain")
                es[i] = e1p
                hs[i] = h1p
                es[j] = e2p
                hs[j] = h2p
                again = True
                break
        return [es[i] for i in range(n)], [hs[i] for i in range(n)]
    finally:
        free(es)
        free(hs)
