"""Reidemeister I and II insertions on signed Gauss codes.

Components and positions are 0-based; a position is an insertion index into
the component's passage list, so ``len(component)`` appends.
Purely virtual moves leave a Gauss code unchanged and need no code here.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from .gauss import GaussCodeError, Passage, Role, SignedGaussCode


@dataclass(frozen=True)
class R1Insert:
    component: int
    position: int
    sign: int
    over_first: bool
    kind: str = "R1"


@dataclass(frozen=True)
class R2Insert:
    under_component: int
    under_position: int
    over_component: int
    over_position: int
    sign: int
    kind: str = "R2"


Move = R1Insert | R2Insert


def _fresh(code: SignedGaussCode) -> int:
    return max(code.crossing_ids(), default=0) + 1


def _check_slot(code: SignedGaussCode, component: int, position: int):
    if not 0 <= component < code.component_count:
        raise IndexError(f"component {component} out of range")
    if not 0 <= position <= len(code.components[component]):
        raise IndexError(f"position {position} out of range for component {component}")


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


def apply_r1(code: SignedGaussCode, component: int, position: int, sign: int = 1,
             over_first: bool = True) -> SignedGaussCode:
    """Add a kink: an adjacent O_k/U_k pair with a fresh crossing id."""
    _check_slot(code, component, position)
    _check_sign(sign)
    k = _fresh(code)
    pair = [Passage(k, Role.OVER, sign), Passage(k, Role.UNDER, sign)]
    if not over_first:
        pair.reverse()
    comps = [list(c) for c in code.components]
    comps[component][position:position] = pair
    return SignedGaussCode.from_lists(comps)


def remove_r1(code: SignedGaussCode, component: int, position: int) -> SignedGaussCode:
    """Undo a kink whose two passages sit at ``position`` and ``position + 1``."""
    comp = code.components[component]
    if position + 1 >= len(comp) or comp[position].crossing != comp[position + 1].crossing:
        raise GaussCodeError(f"no kink at component {component}, position {position}")
    comps = [list(c) for c in code.components]
    del comps[component][position:position + 2]
    return SignedGaussCode.from_lists(comps)


def apply_r2(code: SignedGaussCode, strand_a: tuple[int, int], strand_b: tuple[int, int],
             sign: int = 1) -> SignedGaussCode:
    """Push strand b over strand a, creating a bigon.

    Inserts ``U_k U_l`` at ``strand_a`` and ``O_l O_k`` at ``strand_b`` with
    fresh ids, crossing k signed ``sign`` and l signed ``-sign``. When both
    insertion points coincide the under pair goes first.
    """
    _check_slot(code, *strand_a)
    _check_slot(code, *strand_b)
    _check_sign(sign)
    k = _fresh(code)
    l = k + 1
    unders = [Passage(k, Role.UNDER, sign), Passage(l, Role.UNDER, -sign)]
    overs = [Passage(l, Role.OVER, -sign), Passage(k, Role.OVER, sign)]
    comps = [list(c) for c in code.components]
    (ca, pa), (cb, pb) = strand_a, strand_b
    # insert at the later slot first so the earlier index stays valid
    if ca == cb and pb >= pa:
        comps[cb][pb:pb] = overs
        comps[ca][pa:pa] = unders
    else:
        comps[ca][pa:pa] = unders
        comps[cb][pb:pb] = overs
    return SignedGaussCode.from_lists(comps)


def apply_move(code: SignedGaussCode, move: Move) -> SignedGaussCode:
    if isinstance(move, R1Insert):
        return apply_r1(code, move.component, move.position, move.sign, move.over_first)
    return apply_r2(code, (move.under_component, move.under_position),
                    (move.over_component, move.over_position), move.sign)


def apply_script(code: SignedGaussCode, script: list[Move]) -> SignedGaussCode:
    for move in script:
        code = apply_move(code, move)
    return code


def random_perturb(code: SignedGaussCode, seed: int,
                   move_budget: int) -> tuple[SignedGaussCode, list[Move]]:
    """Apply ``move_budget`` uniformly chosen R1/R2 insertions, reproducibly."""
    if move_budget < 0:
        raise ValueError("move budget must be non-negative")
    rng = random.Random(seed)
    script: list[Move] = []

    def slot():
        c = rng.randrange(code.component_count)
        return c, rng.randint(0, len(code.components[c]))

    for _ in range(move_budget):
        sign = rng.choice((1, -1))
        if rng.random() < 0.5:
            c, p = slot()
            move: Move = R1Insert(c, p, sign, rng.random() < 0.5)
        else:
            (ca, pa), (cb, pb) = slot(), slot()
            move = R2Insert(ca, pa, cb, pb, sign)
        code = apply_move(code, move)
        script.append(move)
    return code, script


def script_to_json(script: list[Move]) -> list[dict]:
    return [asdict(m) for m in script]
