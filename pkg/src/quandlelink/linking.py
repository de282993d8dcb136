"""Virtual linking numbers, the closed form of X_n counts, and |lk| recovery.

Only two-component links are handled by the closed form and the recovery.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Mapping

from .gauss import Role, SignedGaussCode


class ComponentCountError(ValueError):
    pass


class InvalidCountsError(ValueError):
    pass


@dataclass(frozen=True)
class LinkingProfile:
    lk_over: int   # signs of crossings where component i passes over j
    lk_under: int  # signs of crossings where component j passes over i
    components: tuple[int, int] = (1, 2)

    @property
    def lk_classical(self) -> Fraction:
        return Fraction(self.lk_over + self.lk_under, 2)


def virtual_linking_numbers(code: SignedGaussCode, i: int = 1, j: int = 2) -> LinkingProfile:
    """lk_{i/j} and lk_{j/i}; components are numbered from 1."""
    m = code.component_count
    if m < 2:
        raise ComponentCountError(f"linking numbers need two components, got {m}")
    for c in (i, j):
        if not 1 <= c <= m:
            raise ComponentCountError(f"component {c} out of range 1..{m}")
    if i == j:
        raise ComponentCountError("need two distinct components")
    over = under = 0
    for k, roles in code.locate().items():
        oc, uc = roles[Role.OVER][0] + 1, roles[Role.UNDER][0] + 1
        s = code.components[oc - 1][roles[Role.OVER][1]].sign
        if (oc, uc) == (i, j):
            over += s
        elif (oc, uc) == (j, i):
            under += s
    return LinkingProfile(over, under, (i, j))


def require_two_components(code: SignedGaussCode):
    if code.component_count != 2:
        raise ComponentCountError(
            f"this operation needs a two-component link, got {code.component_count} components")


def xn_count_closed_form(lk12: int, lk21: int, n: int) -> int:
    """#Hom(Q(L), X_n) for a two-component link with the given virtual linking numbers."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n * n + 1 + n * (abs(lk12) % n == 0) + n * (abs(lk21) % n == 0)


def classify_count(n: int, count: int) -> str:
    if count == (n + 1) ** 2:
        return "(n+1)^2"
    if count == (n + 1) ** 2 - n:
        return "(n+1)^2-n"
    if count == n * n + 1:
        return "n^2+1"
    return "other"


class Evidence(str, Enum):
    BOTH_ZERO = "both_zero"
    NONCLASSICAL = "nonclassical_evidence"
    NONE = "none"


def classify_splitness_evidence(profile: LinkingProfile) -> Evidence:
    if profile.lk_over == 0 and profile.lk_under == 0:
        return Evidence.BOTH_ZERO
    if profile.lk_over != profile.lk_under:
        return Evidence.NONCLASSICAL
    return Evidence.NONE


@dataclass(frozen=True)
class RecoveryResult:
    s: frozenset[int]
    s_prime: frozenset[int]
    bound: int
    abs_lk: int
    branch: str  # "zero", "unit" or "max"
    classical: bool
    counts: dict[int, int] = field(default_factory=dict, compare=False)

    @property
    def max_s(self) -> int | None:
        return max(self.s) if self.s else None

    @property
    def max_s_prime(self) -> int | None:
        return max(self.s_prime) if self.s_prime else None

    def as_dict(self) -> dict:
        return {
            "abs_lk": self.abs_lk,
            "branch": self.branch,
            "N": self.bound,
            "S": sorted(self.s),
            "S_prime": sorted(self.s_prime),
            "max_S": self.max_s,
            "max_S_prime": self.max_s_prime,
            "classical_consistent": self.classical,
            "counts": [{"n": n, "count": c, "class": classify_count(n, c)}
                       for n, c in sorted(self.counts.items())],
        }


def recover_abs_linking(counts: Mapping[int, int], bound: int | None = None) -> RecoveryResult:
    """Recover |lk| of a classical two-component link from its X_n counts, n = 2..bound.

    The bound must be at least the number of crossings between the two
    components; then a full S means both linking numbers vanish.
    """
    if bound is None:
        bound = max(counts, default=1)
    if bound < 2:
        raise InvalidCountsError("need counts for at least n = 2")
    missing = [n for n in range(2, bound + 1) if n not in counts]
    if missing:
        raise InvalidCountsError(f"missing counts for n = {missing}")
    table = {n: int(counts[n]) for n in range(2, bound + 1)}
    for n, c in table.items():
        if classify_count(n, c) == "other":
            raise InvalidCountsError(f"count {c} at n = {n} is not one of (n+1)^2, (n+1)^2-n, n^2+1")
    s = frozenset(n for n, c in table.items() if c == (n + 1) ** 2)
    s_prime = frozenset(n for n, c in table.items() if c == (n + 1) ** 2 - n)
    if not s:
        abs_lk, branch = 1, "unit"
    elif len(s) == len(table):
        abs_lk, branch = 0, "zero"
    else:
        abs_lk, branch = max(s), "max"
    return RecoveryResult(s, s_prime, bound, abs_lk, branch, not s_prime, table)


def default_bound(code: SignedGaussCode) -> int:
    return max(2, code.interlinked_crossing_count())


def recover_from_code(code: SignedGaussCode, counter: Callable[[SignedGaussCode, int], int],
                      bound: int | None = None) -> RecoveryResult:
    """Run ``counter(code, n)`` for n = 2..bound and recover |lk| from the counts."""
    require_two_components(code)
    if bound is None:
        bound = default_bound(code)
    return recover_abs_linking({n: counter(code, n) for n in range(2, bound + 1)}, bound)
