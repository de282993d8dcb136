"""Signed Gauss codes for oriented virtual link diagrams.

One line per component, tokens like ``O3+`` or ``U12-``. A blank line is a
component without classical crossings, ``#`` starts a comment line, and ``/``
may separate components on a single line. Virtual crossings are never
written down.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

_TOKEN = re.compile(r"([OU])(\d+)([+-])")


class Role(str, Enum):
    OVER = "O"
    UNDER = "U"


class GaussCodeError(ValueError):
    pass


class GaussSyntaxError(GaussCodeError):
    def __init__(self, msg: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {msg}")


@dataclass(frozen=True)
class Passage:
    crossing: int
    role: Role
    sign: int

    def __str__(self):
        return f"{self.role.value}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class SignedGaussCode:
    components: tuple[tuple[Passage, ...], ...]

    def __post_init__(self):
        _validate(self.components)

    @classmethod
    def from_lists(cls, components: Iterable[Iterable[Passage]]) -> "SignedGaussCode":
        return cls(tuple(tuple(c) for c in components))

    def __str__(self):
        return serialize(self)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def crossing_count(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def crossing_ids(self) -> list[int]:
        return sorted({p.crossing for comp in self.components for p in comp})

    def locate(self) -> dict[int, dict[Role, tuple[int, int]]]:
        """crossing id -> {role: (component index, position)}."""
        where: dict[int, dict[Role, tuple[int, int]]] = {}
        for ci, comp in enumerate(self.components):
            for pos, p in enumerate(comp):
                where.setdefault(p.crossing, {})[p.role] = (ci, pos)
        return where

    def sign_of(self, crossing: int) -> int:
        for comp in self.components:
            for p in comp:
                if p.crossing == crossing:
                    return p.sign
        raise KeyError(crossing)

    def interlinked_crossing_count(self) -> int:
        return sum(1 for roles in self.locate().values()
                   if roles[Role.OVER][0] != roles[Role.UNDER][0])


def _validate(components: Sequence[Sequence[Passage]]):
    if not components:
        raise GaussCodeError("a link needs at least one component")
    seen: dict[int, list[Passage]] = {}
    for comp in components:
        for p in comp:
            if p.crossing < 1:
                raise GaussCodeError(f"crossing ids must be positive, got {p.crossing}")
            if p.sign not in (1, -1):
                raise GaussCodeError(f"crossing {p.crossing}: sign must be +1 or -1")
            seen.setdefault(p.crossing, []).append(p)
    for k, ps in sorted(seen.items()):
        if len(ps) != 2:
            raise GaussCodeError(f"crossing {k} occurs {len(ps)} times, expected 2")
        if ps[0].role == ps[1].role:
            raise GaussCodeError(f"crossing {k} is {ps[0].role.name} twice")
        if ps[0].sign != ps[1].sign:
            raise GaussCodeError(f"sign mismatch on crossing {k}")


def parse(text: str) -> SignedGaussCode:
    lines = text.split("\n")
    if len(lines) > 1 and lines[-1] == "":
        lines.pop()  # trailing newline terminates the last line
    components: list[list[Passage]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r")
        if line.lstrip().startswith("#"):
            continue
        current: list[Passage] = []
        col = 0
        for m in re.finditer(r"\S+", line):
            tok, col = m.group(), m.start() + 1
            if tok == "/":
                components.append(current)
                current = []
                continue
            tm = _TOKEN.fullmatch(tok)
            if tm is None:
                raise GaussSyntaxError(f"bad token {tok!r}", lineno, col)
            role, num, sign = tm.groups()
            if int(num) == 0:
                raise GaussSyntaxError("crossing ids start at 1", lineno, col)
            current.append(Passage(int(num), Role(role), 1 if sign == "+" else -1))
        components.append(current)
    return SignedGaussCode.from_lists(components)


def serialize(code: SignedGaussCode) -> str:
    return "".join(" ".join(str(p) for p in comp) + "\n" for comp in code.components)


@dataclass(frozen=True)
class CrossingArcs:
    over_arc: int
    under_in: int
    under_out: int
    sign: int
    over_component: int
    under_component: int


@dataclass(frozen=True)
class ArcTable:
    """Arcs of a diagram, numbered from 1.

    ``component_arcs[c]`` lists the arc ids of component ``c``;
    ``passage_arcs[c][p]`` is ``(incoming, outgoing)`` for passage ``p``
    (equal for over passages); ``crossings`` maps crossing id to its arcs.
    """

    component_arcs: tuple[tuple[int, ...], ...]
    passage_arcs: tuple[tuple[tuple[int, int], ...], ...]
    crossings: dict[int, CrossingArcs]

    @property
    def arc_count(self) -> int:
        return sum(len(a) for a in self.component_arcs)

    def arc_component(self) -> tuple[int, ...]:
        """Component index of each arc, indexed by ``arc id - 1``."""
        out = [0] * self.arc_count
        for ci, arcs in enumerate(self.component_arcs):
            for a in arcs:
                out[a - 1] = ci
        return tuple(out)


def arcs(code: SignedGaussCode) -> ArcTable:
    """Split each component into arcs at its under passages.

    Arc numbering starts, per component, with the arc leaving its first
    under passage; an under-free component is a single arc.
    """
    component_arcs = []
    passage_arcs = []
    next_id = 1
    for comp in code.components:
        unders = [i for i, p in enumerate(comp) if p.role is Role.UNDER]
        k = max(len(unders), 1)
        ids = tuple(range(next_id, next_id + k))
        next_id += k
        component_arcs.append(ids)
        rows = []
        if not unders:
            rows = [(ids[0], ids[0])] * len(comp)
        else:
            # arc j runs from under passage j to under passage j+1
            current = k - 1  # passages before the first under lie on the last arc
            for p in comp:
                if p.role is Role.UNDER:
                    nxt = (current + 1) % k
                    rows.append((ids[current], ids[nxt]))
                    current = nxt
                else:
                    rows.append((ids[current], ids[current]))
        passage_arcs.append(tuple(rows))

    crossings = {}
    for k, roles in code.locate().items():
        oc, op = roles[Role.OVER]
        uc, up = roles[Role.UNDER]
        u_in, u_out = passage_arcs[uc][up]
        crossings[k] = CrossingArcs(
            over_arc=passage_arcs[oc][op][0],
            under_in=u_in,
            under_out=u_out,
            sign=code.components[oc][op].sign,
            over_component=oc,
            under_component=uc,
        )
    return ArcTable(tuple(component_arcs), tuple(passage_arcs), dict(sorted(crossings.items())))


def rotate(code: SignedGaussCode, component: int, steps: int) -> SignedGaussCode:
    """Cyclically rotate one component's passage sequence."""
    comps = list(code.components)
    c = comps[component]
    if c:
        s = steps % len(c)
        comps[component] = c[s:] + c[:s]
    return SignedGaussCode(tuple(comps))


def relabel(code: SignedGaussCode) -> SignedGaussCode:
    """Renumber crossings 1..k in order of first appearance."""
    mapping: dict[int, int] = {}
    for comp in code.components:
        for p in comp:
            mapping.setdefault(p.crossing, len(mapping) + 1)
    return SignedGaussCode.from_lists(
        [Passage(mapping[p.crossing], p.role, p.sign) for p in comp]
        for comp in code.components
    )

