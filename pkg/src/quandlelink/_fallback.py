"""Pure-Python coloring kernels, used when the compiled extension is absent.

Same signatures, counts and listing order as ``quandlelink._kernels``.
"""
from __future__ import annotations

import numpy as np

CHUNK = 1 << 18


def oracle_count(n_arcs, t, ui, ov, uo, sg, op, inv, retain):
    """Test every one of t**n_arcs assignments, first arc most significant."""
    total = t ** n_arcs
    ui, ov, uo = (np.asarray(x, dtype=np.intp) for x in (ui, ov, uo))
    tables = np.stack([np.asarray(inv), np.asarray(op)])
    which = (np.asarray(sg) > 0).astype(np.intp)
    place = t ** np.arange(n_arcs - 1, -1, -1, dtype=np.int64)
    count = 0
    out = [] if retain else None
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        col = (idx[:, None] // place[None, :]) % t
        ok = np.ones(len(idx), dtype=bool)
        for r in range(len(ui)):
            ok &= tables[which[r]][col[:, ui[r]], col[:, ov[r]]] == col[:, uo[r]]
        count += int(ok.sum())
        if retain:
            out.extend(tuple(int(c) + 1 for c in row) for row in col[ok])
    return count, out


class _Search:
    def __init__(self, n_arcs, t, ui, ov, uo, sg, op, inv, seeds, retain):
        self.n_arcs = n_arcs
        self.t = t
        self.rels = [(int(a), int(b), int(c), int(s)) for a, b, c, s in zip(ui, ov, uo, sg)]
        self.op = np.asarray(op).tolist()
        self.inv = np.asarray(inv).tolist()
        self.seeds = [int(s) for s in seeds]
        self.col = [-1] * n_arcs
        self.trail: list[int] = []
        self.count = 0
        self.out = [] if retain else None
        self.incident = [[] for _ in range(n_arcs)]
        for r, (a, b, c, _) in enumerate(self.rels):
            for arc in sorted({a, b, c}):
                self.incident[arc].append(r)

    def _fwd(self, a, b, s):
        return self.op[a][b] if s > 0 else self.inv[a][b]

    def _assign(self, arc, v):
        self.col[arc] = v
        self.trail.append(arc)

    def _undo(self, mark):
        while len(self.trail) > mark:
            self.col[self.trail.pop()] = -1

    def _propagate(self):
        col = self.col
        changed = True
        while changed:
            changed = False
            for a, b, c, s in self.rels:
                co = col[b]
                if co < 0:
                    continue
                ci, cu = col[a], col[c]
                if ci >= 0:
                    v = self._fwd(ci, co, s)
                    if cu < 0:
                        self._assign(c, v)
                        changed = True
                    elif cu != v:
                        return False
                elif cu >= 0:
                    self._assign(a, self._fwd(cu, co, -s))
                    changed = True
        return True

    def _candidates(self, arc):
        col = self.col
        found = []
        for v in range(self.t):
            for r in self.incident[arc]:
                a, b, c, s = self.rels[r]
                ci = v if a == arc else col[a]
                co = v if b == arc else col[b]
                cu = v if c == arc else col[c]
                if ci >= 0 and co >= 0 and cu >= 0 and self._fwd(ci, co, s) != cu:
                    break
            else:
                found.append(v)
        return found

    def _search(self, seed_pos):
        while seed_pos < len(self.seeds) and self.col[self.seeds[seed_pos]] >= 0:
            seed_pos += 1
        if seed_pos < len(self.seeds):
            arc = self.seeds[seed_pos]
            cands = self._candidates(arc)
        else:
            arc, cands = -1, None
            for a in range(self.n_arcs):
                if self.col[a] < 0:
                    c = self._candidates(a)
                    if cands is None or len(c) < len(cands):
                        arc, cands = a, c
                        if not c:
                            return
            if arc < 0:
                self.count += 1
                if self.out is not None:
                    self.out.append(tuple(v + 1 for v in self.col))
                return
        for v in cands:
            mark = len(self.trail)
            self._assign(arc, v)
            if self._propagate():
                self._search(seed_pos)
            self._undo(mark)

    def run(self):
        if self._propagate():
            self._search(0)
        return self.count, self.out


def propagate_count(n_arcs, t, ui, ov, uo, sg, op, inv, seeds, retain):
    """Seeded branch-and-propagate search with minimum-remaining-values branching."""
    return _Search(n_arcs, t, ui, ov, uo, sg, op, inv, seeds, retain).run()
