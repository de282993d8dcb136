"""Finite quandles given by operation matrices.

Elements are the integers ``1..n``. The entry in row ``i``, column ``j`` of
an operation matrix is ``i ▷ j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Matrix = tuple[tuple[int, ...], ...]


class MalformedMatrixError(ValueError):
    """The matrix is not square or has entries outside ``1..n``."""


class QuandleAxiomError(ValueError):
    """A well-formed matrix that fails at least one quandle axiom."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            shown += f"; ... ({more} more)"
        super().__init__(f"not a quandle: {shown}")


@dataclass(frozen=True)
class Violation:
    """One failed instance of axiom 1, 2 or 3.

    ``witness`` is ``(a,)`` for axiom 1, ``(a, b)`` for axiom 2 (no unique
    ``c`` with ``c ▷ b = a``) and ``(a, b, c)`` for axiom 3.
    """

    axiom: int
    witness: tuple[int, ...]
    detail: str = ""

    def __str__(self):
        roman = {1: "i", 2: "ii", 3: "iii"}[self.axiom]
        s = f"axiom ({roman}) fails at {self.witness}"
        return f"{s}: {self.detail}" if self.detail else s


def _as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    if n == 0:
        raise MalformedMatrixError("empty matrix")
    for i, row in enumerate(m, 1):
        if len(row) != n:
            raise MalformedMatrixError(f"row {i} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row, 1):
            if not 1 <= x <= n:
                raise MalformedMatrixError(f"entry ({i},{j}) = {x} is outside 1..{n}")
    return m


def check_axioms(rows: Iterable[Iterable[int]]) -> list[Violation]:
    """Return every axiom violation of the operation matrix (empty if none).

    Raises MalformedMatrixError when the matrix is not an n×n table over 1..n.
    """
    m = _as_matrix(rows)
    n = len(m)
    found: list[Violation] = []

    for a in range(1, n + 1):
        if m[a - 1][a - 1] != a:
            found.append(Violation(1, (a,), f"{a}▷{a} = {m[a - 1][a - 1]}"))

    for b in range(1, n + 1):
        preimages: dict[int, list[int]] = {a: [] for a in range(1, n + 1)}
        for c in range(1, n + 1):
            preimages[m[c - 1][b - 1]].append(c)
        for a, cs in preimages.items():
            if len(cs) != 1:
                detail = f"column {b}: {len(cs)} solutions c of c▷{b} = {a}"
                found.append(Violation(2, (a, b), detail))

    # full triple enumeration; the quandles we care about are small
    for a in range(n):
        for b in range(n):
            ab = m[a][b] - 1
            for c in range(n):
                lhs = m[ab][c]
                rhs = m[m[a][c] - 1][m[b][c] - 1]
                if lhs != rhs:
                    found.append(Violation(3, (a + 1, b + 1, c + 1), f"{lhs} != {rhs}"))
    return found


@dataclass(frozen=True, eq=False)
class Quandle:
    """A verified finite quandle. Build through :func:`verify_quandle`."""

    matrix: Matrix
    dual: Matrix
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.matrix)

    def op(self, a: int, b: int) -> int:
        return self.matrix[a - 1][b - 1]

    def inv(self, a: int, b: int) -> int:
        return self.dual[a - 1][b - 1]

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """0-based ``(op, inv)`` tables as read-only int32 arrays."""
        op = np.asarray(self.matrix, dtype=np.int32) - 1
        inv = np.asarray(self.dual, dtype=np.int32) - 1
        op.setflags(write=False)
        inv.setflags(write=False)
        return op, inv

    def __eq__(self, other):
        return isinstance(other, Quandle) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        label = self.name or "Quandle"
        return f"<{label} of order {self.order}>"


def verify_quandle(rows: Iterable[Iterable[int]], name: str = "") -> Quandle:
    """Check the axioms and return the quandle with its dual table.

    Raises MalformedMatrixError for shape or range problems and
    QuandleAxiomError (carrying the full violation list) otherwise.
    """
    m = _as_matrix(rows)
    violations = check_axioms(m)
    if violations:
        raise QuandleAxiomError(violations)
    n = len(m)
    dual = [[0] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            # c ▷ b = a  <=>  a ▷⁻¹ b = c
            dual[m[c][b] - 1][b] = c + 1
    return Quandle(m, tuple(tuple(r) for r in dual), name)


def make_trivial(n: int) -> Quandle:
    """T_n: every element acts trivially, a ▷ b = a."""
    if n < 1:
        raise ValueError(f"trivial quandle needs n >= 1, got {n}")
    return verify_quandle([[i] * n for i in range(1, n + 1)], name=f"T_{n}")


def make_xn(n: int) -> Quandle:
    """X_n on 1..n+1: element n+1 shifts 1..n cyclically, all else is trivial."""
    if n < 2:
        raise ValueError(f"X_n is defined for n >= 2, got {n}")
    rows = []
    for a in range(1, n + 1):
        rows.append([a] * n + [a % n + 1])
    rows.append([n + 1] * (n + 1))
    return verify_quandle(rows, name=f"X_{n}")


def make_dihedral(n: int) -> Quandle:
    """Dihedral quandle R_n on Z/n with a ▷ b = 2b - a, relabelled to 1..n."""
    if n < 1:
        raise ValueError(f"dihedral quandle needs n >= 1, got {n}")
    rows = [[(2 * b - a) % n + 1 for b in range(n)] for a in range(n)]
    return verify_quandle(rows, name=f"R_{n}")


@dataclass(frozen=True)
class OrbitDecomposition:
    orbit_of: dict[int, int]
    orbits: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.orbits)


def orbits(q: Quandle) -> OrbitDecomposition:
    """Orbits under right translations, ordered by their least element."""
    n = q.order
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(1, n + 1):
        for x in range(1, n + 1):
            ra, rb = find(a), find(q.op(a, x))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    groups: dict[int, list[int]] = {}
    for a in range(1, n + 1):
        groups.setdefault(find(a), []).append(a)
    ordered = tuple(tuple(g) for _, g in sorted(groups.items()))
    orbit_of = {a: i for i, g in enumerate(ordered) for a in g}
    return OrbitDecomposition(orbit_of, ordered)


def is_connected(q: Quandle) -> bool:
    return len(orbits(q)) == 1


def is_trivial_orbit_quandle(q: Quandle) -> bool:
    """True when every orbit acts trivially on itself."""
    for orbit in orbits(q).orbits:
        if any(q.op(a, b) != a for a in orbit for b in orbit):
            return False
    return True


def subquandle(q: Quandle, elements: Iterable[int], name: str = "") -> Quandle:
    """Restrict ``q`` to a closed subset, relabelled 1..k in increasing order."""
    elems = sorted(set(elements))
    index = {a: i + 1 for i, a in enumerate(elems)}
    rows = []
    for a in elems:
        row = []
        for b in elems:
            c = q.op(a, b)
            if c not in index:
                raise ValueError(f"{elems} is not closed: {a}▷{b} = {c}")
            row.append(index[c])
        rows.append(row)
    return verify_quandle(rows, name=name)


def parse_matrix(text: str) -> Matrix:
    """Read the matrix file format: ``n`` then ``n`` rows of ``n`` integers.

    ``#`` starts a comment that runs to the end of the line.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise MalformedMatrixError("no matrix data")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise MalformedMatrixError(f"line {lineno}: expected the order, got {head!r}") from None
    if n < 1:
        raise MalformedMatrixError(f"line {lineno}: order must be positive")
    rows = lines[1:]
    if len(rows) != n:
        raise MalformedMatrixError(f"expected {n} rows, found {len(rows)}")
    out = []
    for lineno, body in rows:
        try:
            out.append([int(tok) for tok in body.split()])
        except ValueError:
            raise MalformedMatrixError(f"line {lineno}: non-integer entry") from None
    return _as_matrix(out)


def format_matrix(q: Quandle | Matrix) -> str:
    m = q.matrix if isinstance(q, Quandle) else q
    width = len(str(len(m)))
    body = "\n".join(" ".join(str(x).rjust(width) for x in row) for row in m)
    return f"{len(m)}\n{body}\n"
