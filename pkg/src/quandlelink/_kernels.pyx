# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled coloring kernels. Mirrors quandlelink._fallback exactly,
including the order in which colorings are listed.

All arrays are 0-based int32. Relation r reads
``col[uo[r]] == col[ui[r]] ▷^{sg[r]} col[ov[r]]``.
"""
import numpy as np


cdef inline int _fwd(int[:, ::1] op, int[:, ::1] inv, int a, int b, int s) nogil:
    if s > 0:
        return op[a, b]
    return inv[a, b]


cdef inline int _back(int[:, ::1] op, int[:, ::1] inv, int a, int b, int s) nogil:
    if s > 0:
        return inv[a, b]
    return op[a, b]


def oracle_count(int n_arcs, int t, int[::1] ui, int[::1] ov, int[::1] uo,
                 int[::1] sg, int[:, ::1] op, int[:, ::1] inv, bint retain):
    """Test every one of t**n_arcs assignments, first arc most significant."""
    cdef int[::1] col = np.zeros(n_arcs, dtype=np.int32)
    cdef Py_ssize_t nrel = ui.shape[0]
    cdef Py_ssize_t r
    cdef int a
    cdef bint ok
    cdef long long count = 0
    out = [] if retain else None
    while True:
        ok = True
        for r in range(nrel):
            if _fwd(op, inv, col[ui[r]], col[ov[r]], sg[r]) != col[uo[r]]:
                ok = False
                break
        if ok:
            count += 1
            if retain:
                out.append(tuple([col[a] + 1 for a in range(n_arcs)]))
        a = n_arcs - 1
        while a >= 0:
            col[a] += 1
            if col[a] < t:
                break
            col[a] = 0
            a -= 1
        if a < 0:
            break
    return count, out


cdef class _Search:
    cdef int n_arcs, t, nrel, nseeds, trail_len
    cdef int[::1] ui, ov, uo, sg, seeds, col, trail, inc_ptr, inc_idx
    cdef int[:, ::1] op, inv, cand
    cdef long long count
    cdef bint retain
    cdef list out

    def __init__(self, int n_arcs, int t, ui, ov, uo, sg, op, inv, seeds, bint retain):
        self.n_arcs = n_arcs
        self.t = t
        self.ui, self.ov, self.uo, self.sg = ui, ov, uo, sg
        self.op, self.inv = op, inv
        self.seeds = seeds
        self.nrel = ui.shape[0]
        self.nseeds = seeds.shape[0]
        self.col = np.full(n_arcs, -1, dtype=np.int32)
        self.trail = np.zeros(n_arcs, dtype=np.int32)
        self.trail_len = 0
        self.cand = np.zeros((n_arcs + 1, t), dtype=np.int32)
        self.count = 0
        self.retain = retain
        self.out = [] if retain else None
        # relations incident to each arc, CSR layout
        incident = [[] for _ in range(n_arcs)]
        for r in range(self.nrel):
            for a in {int(ui[r]), int(ov[r]), int(uo[r])}:
                incident[a].append(r)
        ptr = np.zeros(n_arcs + 1, dtype=np.int32)
        for a in range(n_arcs):
            ptr[a + 1] = ptr[a] + len(incident[a])
        self.inc_ptr = ptr
        self.inc_idx = np.array([r for rs in incident for r in rs] or [0], dtype=np.int32)

    cdef inline void _assign(self, int arc, int v):
        self.col[arc] = v
        self.trail[self.trail_len] = arc
        self.trail_len += 1

    cdef inline void _undo(self, int mark):
        while self.trail_len > mark:
            self.trail_len -= 1
            self.col[self.trail[self.trail_len]] = -1

    cdef bint _propagate(self):
        cdef bint changed = True
        cdef int r, ci, co, cu, v
        while changed:
            changed = False
            for r in range(self.nrel):
                co = self.col[self.ov[r]]
                if co < 0:
                    continue
                ci = self.col[self.ui[r]]
                cu = self.col[self.uo[r]]
                if ci >= 0:
                    v = _fwd(self.op, self.inv, ci, co, self.sg[r])
                    if cu < 0:
                        self._assign(self.uo[r], v)
                        changed = True
                    elif cu != v:
                        return False
                elif cu >= 0:
                    self._assign(self.ui[r], _back(self.op, self.inv, cu, co, self.sg[r]))
                    changed = True
        return True

    cdef int _candidates(self, int arc, int depth):
        cdef int v, k, r, ci, co, cu, n = 0
        cdef bint ok
        for v in range(self.t):
            ok = True
            for k in range(self.inc_ptr[arc], self.inc_ptr[arc + 1]):
                r = self.inc_idx[k]
                ci = v if self.ui[r] == arc else self.col[self.ui[r]]
                co = v if self.ov[r] == arc else self.col[self.ov[r]]
                cu = v if self.uo[r] == arc else self.col[self.uo[r]]
                if ci < 0 or co < 0 or cu < 0:
                    continue
                if _fwd(self.op, self.inv, ci, co, self.sg[r]) != cu:
                    ok = False
                    break
            if ok:
                self.cand[depth, n] = v
                n += 1
        return n

    cdef void _search(self, int depth, int seed_pos):
        cdef int arc = -1, n, best_n, a, i, mark
        while seed_pos < self.nseeds and self.col[self.seeds[seed_pos]] >= 0:
            seed_pos += 1
        if seed_pos < self.nseeds:
            arc = self.seeds[seed_pos]
        else:
            best_n = self.t + 1
            for a in range(self.n_arcs):
                if self.col[a] < 0:
                    n = self._candidates(a, depth)
                    if n < best_n:
                        best_n = n
                        arc = a
                        if n == 0:
                            return
            if arc < 0:
                self.count += 1
                if self.retain:
                    self.out.append(tuple([self.col[a] + 1 for a in range(self.n_arcs)]))
                return
        n = self._candidates(arc, depth)
        for i in range(n):
            mark = self.trail_len
            self._assign(arc, self.cand[depth, i])
            if self._propagate():
                self._search(depth + 1, seed_pos)
            self._undo(mark)

    def run(self):
        if self._propagate():
            self._search(0, 0)
        return self.count, self.out


def propagate_count(int n_arcs, int t, int[::1] ui, int[::1] ov, int[::1] uo,
                    int[::1] sg, int[:, ::1] op, int[:, ::1] inv,
                    int[::1] seeds, bint retain):
    """Seeded branch-and-propagate search with minimum-remaining-values branching."""
    return _Search(n_arcs, t, ui, ov, uo, sg, op, inv, seeds, retain).run()
