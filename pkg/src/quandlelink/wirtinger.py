"""Knot quandle presentations: one generator per arc, one relation per crossing.

Convention: walking the under strand through a positive crossing applies
``▷ over``, through a negative crossing ``▷⁻¹ over``. Swapping it globally
presents the mirror diagram.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gauss import SignedGaussCode, arcs


@dataclass(frozen=True)
class CrossingRelation:
    """``under_out = under_in ▷^sign over`` (arc ids are 1-based)."""

    under_in: int
    over: int
    under_out: int
    sign: int
    crossing: int = 0

    def __str__(self):
        op = "▷" if self.sign > 0 else "▷⁻¹"
        return f"a{self.under_out} = a{self.under_in} {op} a{self.over}"


@dataclass(frozen=True)
class KnotQuandlePresentation:
    generator_component: tuple[int, ...]
    relations: tuple[CrossingRelation, ...]

    @property
    def generator_count(self) -> int:
        return len(self.generator_component)

    @property
    def component_count(self) -> int:
        return len(set(self.generator_component))

    def seeds(self) -> list[int]:
        """Lowest-numbered arc of each component, in component order."""
        first: dict[int, int] = {}
        for arc, comp in enumerate(self.generator_component, 1):
            first.setdefault(comp, arc)
        return [first[c] for c in sorted(first)]

    def dump(self) -> str:
        lines = [f"generators: {self.generator_count}"]
        for arc, comp in enumerate(self.generator_component, 1):
            lines.append(f"  a{arc}  component {comp + 1}")
        lines.append(f"relations: {len(self.relations)}")
        for r in self.relations:
            lines.append(f"  {r}    (crossing {r.crossing})")
        return "\n".join(lines) + "\n"


def presentation(code: SignedGaussCode) -> KnotQuandlePresentation:
    table = arcs(code)
    rels = tuple(
        CrossingRelation(c.under_in, c.over_arc, c.under_out, c.sign, k)
        for k, c in table.crossings.items()
    )
    return KnotQuandlePresentation(table.arc_component(), rels)
