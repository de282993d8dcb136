"""Counting colorings, i.e. homomorphisms from a knot quandle to a finite quandle.

Two engines: ``oracle`` tries every assignment and exists as ground truth;
``propagate`` seeds one arc per component, pushes colors through crossings
and branches on the most constrained arc when stuck.

The kernels come from the compiled ``_kernels`` extension when it is built,
otherwise from ``_fallback``. Set ``QUANDLELINK_PURE=1`` to force the latter.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from types import ModuleType

import numpy as np

from . import _fallback
from .quandle import Quandle, orbits, subquandle
from .wirtinger import KnotQuandlePresentation

DEFAULT_BUDGET = 10**8
_MAX_BUDGET = 2**63 - 1


def _load_backend() -> ModuleType:
    if os.environ.get("QUANDLELINK_PURE"):
        return _fallback
    try:
        from . import _kernels
    except ImportError:
        return _fallback
    return _kernels


backend = _load_backend()
BACKENDS = {"fallback": _fallback}
if backend is not _fallback:
    BACKENDS["compiled"] = backend


class OracleBudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"oracle budget exceeded: {needed} assignments > {budget}")


@dataclass(frozen=True)
class ColoringReport:
    count: int
    method: str
    target_order: int
    arcs: int
    colorings: tuple[tuple[int, ...], ...] | None = None

    def as_dict(self) -> dict:
        d = {"count": self.count, "method": self.method,
             "arcs": self.arcs, "target_order": self.target_order}
        if self.colorings is not None:
            d["colorings"] = [list(c) for c in self.colorings]
        return d


def _kernel_args(p: KnotQuandlePresentation, t: Quandle):
    rel = np.array([(r.under_in - 1, r.over - 1, r.under_out - 1, r.sign) for r in p.relations],
                   dtype=np.int32).reshape(-1, 4)
    ui, ov, uo, sg = (np.ascontiguousarray(rel[:, i]) for i in range(4))
    op, inv = (np.array(x, dtype=np.int32, order="C") for x in t.tables)
    return p.generator_count, t.order, ui, ov, uo, sg, op, inv


def _pick(engine: str | ModuleType | None) -> ModuleType:
    if engine is None:
        return backend
    if isinstance(engine, str):
        return BACKENDS[engine]
    return engine


def count_oracle(p: KnotQuandlePresentation, t: Quandle, *, retain: bool = False,
                 budget: int = DEFAULT_BUDGET, engine=None) -> ColoringReport:
    """Exact count by exhaustive enumeration of all |T|^arcs assignments."""
    budget = min(budget, _MAX_BUDGET)
    needed = t.order ** p.generator_count
    if needed > budget:
        raise OracleBudgetExceeded(needed, budget)
    count, found = _pick(engine).oracle_count(*_kernel_args(p, t), retain)
    return ColoringReport(int(count), "oracle", t.order, p.generator_count,
                          tuple(found) if retain else None)


def count_propagate(p: KnotQuandlePresentation, t: Quandle, *, retain: bool = False,
                    engine=None) -> ColoringReport:
    """Exact count by seeded propagation with backtracking."""
    seeds = np.array([s - 1 for s in p.seeds()], dtype=np.int32)
    count, found = _pick(engine).propagate_count(*_kernel_args(p, t), seeds, retain)
    return ColoringReport(int(count), "propagate", t.order, p.generator_count,
                          tuple(found) if retain else None)


def count(p: KnotQuandlePresentation, t: Quandle, method: str = "propagate", **kw) -> ColoringReport:
    if method == "oracle":
        return count_oracle(p, t, **kw)
    if method == "propagate":
        return count_propagate(p, t, **kw)
    raise ValueError(f"unknown method {method!r}")


def count_decomposition_check(p: KnotQuandlePresentation, t: Quandle,
                              method: str = "propagate") -> bool:
    """For a knot, the count into ``t`` equals the sum of counts into its orbits."""
    if p.component_count != 1:
        raise ValueError("the orbit-sum identity is only stated for knots (one component)")
    whole = count(p, t, method).count
    parts = sum(count(p, subquandle(t, orb), method).count for orb in orbits(t).orbits)
    return whole == parts
