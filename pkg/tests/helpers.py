"""Independent reference computations for the test-suite.

Nothing here imports the arc, presentation or engine code under test.
"""
import itertools
import re

# (criterion, passed, detail) lines printed in the terminal summary
ACCEPTANCE: list[tuple[str, bool, str]] = []


def tokens(text):
    """Components as lists of (crossing, role, sign) straight from the text."""
    comps = []
    for line in text.replace("/", "\n").split("\n"):
        comps.append([(int(k), r, 1 if s == "+" else -1)
                      for r, k, s in re.findall(r"([OU])(\d+)([+-])", line)])
    if text.endswith("\n"):
        comps.pop()
    return comps


def naive_relations(text):
    """Trace each component, labelling a new arc after every under passage."""
    comps = tokens(text)
    label = {}  # (component, position) -> arc on which the passage sits (incoming arc)
    next_arc = 0
    arc_of_component = []
    for ci, comp in enumerate(comps):
        n_under = sum(1 for _, r, _ in comp if r == "U")
        base = next_arc
        k = max(n_under, 1)
        next_arc += k
        arc_of_component.append(list(range(base, base + k)))
        # start walking just after the last under passage so the first arc is complete
        seen = 0
        start = max((i for i, (_, r, _) in enumerate(comp) if r == "U"), default=-1)
        order = [(start + 1 + j) % len(comp) for j in range(len(comp))] if comp else []
        for pos in order:
            label[ci, pos] = base + seen % k
            if comp[pos][1] == "U":
                seen += 1
    info = {}
    for ci, comp in enumerate(comps):
        for pos, (k, r, s) in enumerate(comp):
            info.setdefault(k, {})[r] = (ci, pos, s)
    rels = []
    for k, d in info.items():
        oc, op, s = d["O"]
        uc, up, _ = d["U"]
        n_under = len(arc_of_component[uc])
        a_in = label[uc, up]
        idx = arc_of_component[uc].index(a_in)
        a_out = arc_of_component[uc][(idx + 1) % n_under]
        rels.append((a_in, label[oc, op], a_out, s))
    return next_arc, rels


def naive_count(text, matrix):
    """Brute-force #Hom(Q(L), T) with T given as a 1-based operation matrix."""
    n = len(matrix)
    inv = [[0] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            inv[matrix[c][b] - 1][b] = c
    arcs, rels = naive_relations(text)
    total = 0
    for col in itertools.product(range(n), repeat=arcs):
        if all((matrix[col[a]][col[o]] - 1 if s > 0 else inv[col[a]][col[o]]) == col[u]
               for a, o, u, s in rels):
            total += 1
    return total


def naive_xn(n):
    rows = [[a] * n + [a % n + 1] for a in range(1, n + 1)]
    rows.append([n + 1] * (n + 1))
    return rows


def isomorphic(m1, m2):
    """Brute-force quandle isomorphism for small orders."""
    n = len(m1)
    if n != len(m2) or n > 6:
        raise ValueError("only for equal orders up to 6")
    for perm in itertools.permutations(range(n)):
        if all(perm[m1[a][b] - 1] == m2[perm[a]][perm[b]] - 1
               for a in range(n) for b in range(n)):
            return True
    return False
