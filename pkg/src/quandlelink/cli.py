"""Command line interface.

Exit codes: 0 success, 1 invalid quandle reported by ``check``, 2 usage error
or missing file, 3 parse error, 4 oracle budget exceeded, 5 wrong number of
link components.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import gauss, homcount, linking, moves, quandle
from .wirtinger import presentation

EXIT_INVALID, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_COMPONENTS = 1, 2, 3, 4, 5
N_LIMIT = 64


class CliError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.is_file():
        raise CliError(f"no such file: {path}", EXIT_USAGE)
    return p.read_text()


def load_link(path: str) -> gauss.SignedGaussCode:
    try:
        return gauss.parse(_read(path))
    except gauss.GaussCodeError as e:
        raise CliError(f"{path}: {e}", EXIT_PARSE) from None


def load_quandle(spec: str) -> quandle.Quandle:
    """``Xn:k``, ``Tn:k``, ``Rn:k`` (dihedral) or a matrix file."""
    m = re.fullmatch(r"([XTR])n:(\d+)", spec)
    if m:
        makers = {"X": quandle.make_xn, "T": quandle.make_trivial, "R": quandle.make_dihedral}
        try:
            return makers[m.group(1)](int(m.group(2)))
        except ValueError as e:
            raise CliError(str(e), EXIT_USAGE) from None
    try:
        return quandle.verify_quandle(quandle.parse_matrix(_read(spec)), name=Path(spec).stem)
    except quandle.MalformedMatrixError as e:
        raise CliError(f"{spec}: {e}", EXIT_PARSE) from None
    except quandle.QuandleAxiomError as e:
        raise CliError(f"{spec}: {e}", EXIT_INVALID) from None


def two_components(code: gauss.SignedGaussCode):
    try:
        linking.require_two_components(code)
    except linking.ComponentCountError as e:
        raise CliError(str(e), EXIT_COMPONENTS) from None


def counter_for(method: str, budget: int):
    """Return ``f(code, n) -> #Hom(Q(L), X_n)`` for the chosen method."""
    if method == "closed":
        def closed(code, n):
            prof = linking.virtual_linking_numbers(code)
            return linking.xn_count_closed_form(prof.lk_over, prof.lk_under, n)
        return closed

    def engine(code, n):
        p = presentation(code)
        kw = {"budget": budget} if method == "oracle" else {}
        return homcount.count(p, quandle.make_xn(n), method, **kw).count
    return engine


@dataclass
class Output:
    """One result rendered as table, csv or json."""

    data: dict
    columns: list[str] | None = None
    rows: list[list] | None = None
    text: str | None = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dump_json(self.data)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if self.rows is not None:
                w.writerow(self.columns)
                w.writerows(self.rows)
            else:
                scalars = {k: v for k, v in self.data.items() if not isinstance(v, (list, dict))}
                w.writerow(scalars.keys())
                w.writerow(scalars.values())
            return buf.getvalue()
        if self.text is not None:
            return self.text
        if self.rows is not None:
            return _table(self.columns, self.rows)
        return "".join(f"{k}: {v}\n" for k, v in self.data.items())


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _table(columns, rows) -> str:
    cells = [[str(c) for c in columns]] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _fmt_lk(x) -> int | float:
    return int(x) if x.denominator == 1 else float(x)


def cmd_check(args) -> tuple[Output, int]:
    if re.fullmatch(r"[XTR]n:\d+", args.quandle):
        rows = load_quandle(args.quandle).matrix
    else:
        try:
            rows = quandle.parse_matrix(_read(args.quandle))
        except quandle.MalformedMatrixError as e:
            raise CliError(f"{args.quandle}: {e}", EXIT_PARSE) from None
    violations = quandle.check_axioms(rows)
    if violations:
        data = {"valid": False, "violations": [
            {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail} for v in violations]}
        text = "quandle: invalid\n" + "".join(f"  {v}\n" for v in violations)
        return Output(data, text=text), EXIT_INVALID
    q = quandle.verify_quandle(rows)
    orbs = quandle.orbits(q).orbits
    toq = quandle.is_trivial_orbit_quandle(q)
    data = {"valid": True, "order": q.order, "orbits": [list(o) for o in orbs],
            "connected": len(orbs) == 1, "toq": toq}
    shown = ",".join("{" + ",".join(map(str, o)) + "}" for o in orbs)
    text = f"quandle: valid; orbits: {shown}; TOQ: {'yes' if toq else 'no'}\n"
    return Output(data, text=text), 0


def cmd_present(args) -> tuple[Output, int]:
    p = presentation(load_link(args.link))
    data = {"generators": [{"arc": i, "component": c + 1}
                           for i, c in enumerate(p.generator_component, 1)],
            "relations": [{"crossing": r.crossing, "under_in": r.under_in, "over": r.over,
                           "under_out": r.under_out, "sign": r.sign} for r in p.relations]}
    cols = ["crossing", "under_out", "under_in", "op", "over"]
    rows = [[r.crossing, f"a{r.under_out}", f"a{r.under_in}", "▷" if r.sign > 0 else "▷⁻¹",
             f"a{r.over}"] for r in p.relations]
    return Output(data, cols, rows, text=p.dump()), 0


def cmd_linking(args) -> tuple[Output, int]:
    code = load_link(args.link)
    two_components(code)
    prof = linking.virtual_linking_numbers(code)
    data = {"lk12": prof.lk_over, "lk21": prof.lk_under, "lk": _fmt_lk(prof.lk_classical),
            "evidence": linking.classify_splitness_evidence(prof).value}
    return Output(data), 0


def cmd_hom_count(args) -> tuple[Output, int]:
    p = presentation(load_link(args.link))
    q = load_quandle(args.quandle)
    kw = {"retain": args.list}
    if args.method == "oracle":
        kw["budget"] = args.budget
    rep = homcount.count(p, q, args.method, **kw)
    data = rep.as_dict()
    if args.list:
        cols = [f"a{i}" for i in range(1, rep.arcs + 1)]
        return Output(data, cols, [list(c) for c in rep.colorings]), 0
    return Output(data), 0


def _sweep(code, ns, method, budget) -> list[dict]:
    if method == "closed":
        two_components(code)
    f = counter_for(method, budget)
    out = []
    for n in ns:
        c = f(code, n)
        out.append({"n": n, "count": c, "class": linking.classify_count(n, c)})
    return out


def _check_n(n: int, flag: str):
    if not 2 <= n <= N_LIMIT:
        raise CliError(f"{flag} must lie in 2..{N_LIMIT}", EXIT_USAGE)


def cmd_invariants(args) -> tuple[Output, int]:
    code = load_link(args.link)
    _check_n(args.n_min, "--n-min")
    _check_n(args.n_max, "--n-max")
    if args.n_min > args.n_max:
        raise CliError("--n-min exceeds --n-max", EXIT_USAGE)
    rows = _sweep(code, range(args.n_min, args.n_max + 1), args.method, args.budget)
    data = {"link": args.link, "method": args.method, "rows": rows}
    return Output(data, ["n", "count", "class"], [[r["n"], r["count"], r["class"]] for r in rows]), 0


def cmd_recover(args) -> tuple[Output, int]:
    code = load_link(args.link)
    two_components(code)
    need = linking.default_bound(code)
    bound = need if args.max_n is None else args.max_n
    if bound < need:
        raise CliError(f"--max-n must be at least {need}, the number of crossings "
                       "between the two components", EXIT_USAGE)
    _check_n(bound, "--max-n")
    res = linking.recover_from_code(code, counter_for(args.method, args.budget), bound)
    data = res.as_dict()
    data["method"] = args.method
    rows = [[r["n"], r["count"], r["class"]] for r in data["counts"]]
    text = (f"|lk| = {res.abs_lk} ({res.branch})\nN = {res.bound}\n"
            f"S = {sorted(res.s)}\nS' = {sorted(res.s_prime)}\n\n"
            + _table(["n", "count", "class"], rows))
    return Output(data, ["n", "count", "class"], rows, text=text), 0


def cmd_perturb(args) -> tuple[Output, int]:
    code = load_link(args.link)
    try:
        new, script = moves.random_perturb(code, args.seed, args.budget)
    except ValueError as e:
        raise CliError(str(e), EXIT_USAGE) from None
    data = {"code": gauss.serialize(new), "crossings": new.crossing_count,
            "script": moves.script_to_json(script)}
    text = gauss.serialize(new) + "".join(f"# {m}\n" for m in script)
    rows = [[m["kind"], json.dumps({k: v for k, v in m.items() if k != "kind"}, sort_keys=True)]
            for m in data["script"]]
    return Output(data, ["kind", "args"], rows, text=text), 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default="table")
    common.add_argument("--quiet", action="store_true", help="suppress normal output")

    parser = argparse.ArgumentParser(prog="quandlelink", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "verify a quandle matrix and show its orbits")
    sp.add_argument("--quandle", required=True, help="matrix file, Xn:k, Tn:k or Rn:k")

    sp = add("present", cmd_present, "print the knot quandle presentation")
    sp.add_argument("--link", required=True, help="Gauss code file, or - for stdin")

    sp = add("linking", cmd_linking, "virtual and classical linking numbers")
    sp.add_argument("--link", required=True)

    sp = add("hom-count", cmd_hom_count, "count colorings by a finite quandle")
    sp.add_argument("--link", required=True)
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--method", choices=["oracle", "propagate"], default="propagate")
    sp.add_argument("--list", action="store_true", help="also list every coloring")
    sp.add_argument("--budget", type=int, default=homcount.DEFAULT_BUDGET)

    sp = add("invariants", cmd_invariants, "table of #Hom(Q(L), X_n) over a range of n")
    sp.add_argument("--link", required=True)
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=7)
    sp.add_argument("--method", choices=["closed", "oracle", "propagate"], default="propagate")
    sp.add_argument("--budget", type=int, default=homcount.DEFAULT_BUDGET)

    sp = add("recover", cmd_recover, "recover |lk| from X_n counts")
    sp.add_argument("--link", required=True)
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--method", choices=["closed", "oracle", "propagate"], default="propagate")
    sp.add_argument("--budget", type=int, default=homcount.DEFAULT_BUDGET)

    sp = add("perturb", cmd_perturb, "apply random Reidemeister I/II insertions")
    sp.add_argument("--link", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=3)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except CliError as e:
        print(f"quandlelink: {e}", file=sys.stderr)
        return e.code
    except homcount.OracleBudgetExceeded as e:
        print(f"quandlelink: {e}", file=sys.stderr)
        return EXIT_BUDGET
    if not args.quiet:
        sys.stdout.write(out.render(args.format))
    return code
