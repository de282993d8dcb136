"""Named diagrams and random code generators used by the test and benchmark suites."""
from __future__ import annotations

import random

from .gauss import Passage, Role, SignedGaussCode, parse

UNKNOT = "\n"
UNLINK = "\n\n"
HOPF = "O1+ U2+\nU1+ O2+\n"
VIRTUAL_HOPF = "O1+ U2-\nU1+ O2-\n"  # lk_{1/2} = +1, lk_{2/1} = -1
TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+\n"
FIGURE_EIGHT = "O1- U2+ O3- U4+ O2+ U1- O4+ U3-\n"
VIRTUAL_TREFOIL = "O1+ U2+ U1+ O2+\n"
# two components with lk_{1/2} = 6 and lk_{2/1} = -2
PAPER_EXAMPLE = "O1+ O2+ O3+ O4+ O5+ O6+ U7- U8-\nU1+ U2+ U3+ U4+ U5+ U6+ O7- O8-\n"
MIXED_TWO_COMPONENT = "O1- U2+ O3+ U4- O5+\nU1- O2+ U3+ O4- U5+\n"
THREE_COMPONENT = "O1+ U3+\nU1+ O2+\nU2+ O3+\n"


def torus_2_2m(m: int) -> str:
    """Two-component torus-style code with lk_{1/2} = lk_{2/1} = m (m >= 0)."""
    first, second = [], []
    for k in range(1, 2 * m + 1):
        if k % 2:
            first.append(f"O{k}+")
            second.append(f"U{k}+")
        else:
            first.append(f"U{k}+")
            second.append(f"O{k}+")
    return " ".join(first) + "\n" + " ".join(second) + "\n"


CORPUS: dict[str, str] = {
    "unknot": UNKNOT,
    "unlink": UNLINK,
    "hopf": HOPF,
    "virtual_hopf": VIRTUAL_HOPF,
    "trefoil": TREFOIL,
    "figure_eight": FIGURE_EIGHT,
    "virtual_trefoil": VIRTUAL_TREFOIL,
    "torus_2_4": torus_2_2m(2),
    "torus_2_6": torus_2_2m(3),
    "paper_example": PAPER_EXAMPLE,
    "mixed_two_component": MIXED_TWO_COMPONENT,
    "three_component": THREE_COMPONENT,
}


def load(name: str) -> SignedGaussCode:
    return parse(CORPUS[name])


def random_code(rng: random.Random, crossings: int, components: int = 2) -> SignedGaussCode:
    """A uniformly shuffled signed Gauss code; every such code is a virtual link."""
    passages = []
    for k in range(1, crossings + 1):
        s = rng.choice((1, -1))
        passages += [Passage(k, Role.OVER, s), Passage(k, Role.UNDER, s)]
    rng.shuffle(passages)
    cuts = sorted(rng.randint(0, len(passages)) for _ in range(components - 1))
    bounds = [0, *cuts, len(passages)]
    return SignedGaussCode.from_lists(passages[a:b] for a, b in zip(bounds, bounds[1:]))
