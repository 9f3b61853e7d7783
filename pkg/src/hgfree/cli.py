"""Command-line front end.

Usage:
    hgfree analyze --p 13 --e 1 --r 12 --t 5 --json
    hgfree sweep --p 5 --r 4 --e-min 1 --e-max 2
    hgfree verify --suite all --p-max 20
    hgfree cf --num 60 --den 13
    hgfree circle --p 13 --a 8
    hgfree tateoort --p 5 --precision 6

Exit codes: 0 ok, 1 I/O or usage error, 2 invalid parameters,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from hgfree import __version__, contfrac, structmat, tateoort, verify
from hgfree.errors import InternalInvariant, InvalidParameters
from hgfree.params import Regime
from hgfree.verdict import SWEEP_HEADER, Analysis, analyze, sweep

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class AnalyzeReport:
    params: dict
    derived: dict
    cf: Optional[dict]
    exponents: Optional[dict]
    verdict: dict
    matrices: Optional[dict] = None
    tateoort: Optional[dict] = None
    warnings: tuple = ()

    @classmethod
    def from_analysis(cls, an: Analysis, matrices: bool = False, with_tateoort: bool = False):
        p = an.params
        d = an.derived
        cf = None
        if an.cf is not None:
            conv = contfrac.convergents(an.cf)
            cf = {
                "quotients": list(an.cf.partial_quotients),
                "n": an.cf.n,
                "expansion": str(an.cf),
                "q": list(conv.q),
            }
        exps = None
        if an.table is not None:
            exps = an.table.to_json()
            exps["basis"] = [f"pi_K^-{n} w^{i}" for i, n in enumerate(an.table.n_exp)]
        mat = None
        if matrices:
            if d.regime is Regime.TYPICAL_BOUNDARY:
                mat = structmat.matrix_verdict(p, d, an.table).to_json()
            else:
                mat = {"note": f"no matrix data in the {d.regime.value} regime"}
        to = tateoort.summary(p.p) if with_tateoort else None
        return cls(
            params={"p": p.p, "e": p.e, "r": p.r, "t": p.t},
            derived={
                "c": d.c,
                "b": d.b,
                "ell": d.ell,
                "a": d.a,
                "a0": d.a0,
                "regime": d.regime.value,
                "coprimality_warning": d.coprimality_warning,
            },
            cf=cf,
            exponents=exps,
            verdict=an.verdict.to_json(),
            matrices=mat,
            tateoort=to,
            warnings=tuple(an.warnings),
        )

    def to_json(self) -> dict:
        out = {
            "hgfree_version": __version__,
            "params": self.params,
            "derived": self.derived,
            "cf": self.cf,
            "exponents": self.exponents,
            "verdict": self.verdict,
            "warnings": list(self.warnings),
        }
        if self.matrices is not None:
            out["matrices"] = self.matrices
        if self.tateoort is not None:
            out["tateoort"] = self.tateoort
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AnalyzeReport":
        return cls(
            params=data["params"],
            derived=data["derived"],
            cf=data["cf"],
            exponents=data["exponents"],
            verdict=data["verdict"],
            matrices=data.get("matrices"),
            tateoort=data.get("tateoort"),
            warnings=tuple(data.get("warnings", ())),
        )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def _text_report(rep: AnalyzeReport) -> str:
    v = rep.verdict
    lines = [
        "params: " + " ".join(f"{k}={val}" for k, val in rep.params.items()),
        "derived: " + " ".join(f"{k}={val}" for k, val in rep.derived.items()),
    ]
    if rep.cf is not None:
        lines.append(f"ell/p = {rep.cf['expansion']} (n = {rep.cf['n']})")
    if rep.exponents is not None:
        lines.append(f"nu = {rep.exponents['nu']}")
        lines.append(f"n  = {rep.exponents['n']}")
        lines.append(f"precision = {rep.exponents['precision']}, E = {rep.exponents['E']}")
    lines.append(f"clause: {v['clause']}")
    lines.append(f"free: {'yes' if v['free'] else 'no'}")
    for note in v["notes"]:
        lines.append(f"  {note}")
    for w in rep.warnings:
        lines.append(f"warning: {w}")
    if rep.matrices is not None:
        lines.append("matrices: " + json.dumps(rep.matrices.get("certificate", rep.matrices)))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    an = analyze(args.p, args.e, args.r, args.t, strict=args.strict)
    rep = AnalyzeReport.from_analysis(an, matrices=args.matrices, with_tateoort=args.tateoort)
    print(dumps(rep.to_json()) if args.json else _text_report(rep))
    return EXIT_OK


def _write_csv(rows, header, out_path: Optional[str]) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    if out_path is None or out_path == "-":
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        print(f"cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_sweep(args) -> int:
    p = args.p
    e_max = args.e_max if args.e_max is not None else args.e_min
    t_min = args.t_min
    if args.t_max is not None:
        t_max = args.t_max
    elif p > 1:
        t_max = (args.r * p * e_max) // (p - 1)
    else:
        t_max = 0
    rows = sweep(
        p,
        args.r,
        range(args.e_min, e_max + 1),
        range(t_min, t_max + 1),
        strict=args.strict,
        typical_only=args.typical_only,
    )
    return _write_csv([row.as_csv_fields() for row in rows], SWEEP_HEADER, args.csv_out)


def cmd_verify(args) -> int:
    if args.p_max < 3:
        print("--p-max must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    checks = verify.run_suite(args.suite, args.p_max)
    for c in checks:
        print(c.line())
    blocking = [c for c in checks if c.blocking]
    print(f"{len(checks) - len(blocking)}/{len(checks)} checks without blocking failures")
    return EXIT_INVARIANT if blocking else EXIT_OK


def cmd_cf(args) -> int:
    try:
        cf = contfrac.cf_expand(args.num, args.den)
    except (ZeroDivisionError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    conv = contfrac.convergents(cf)
    print(dumps({
        "num": cf.numerator,
        "den": cf.denominator,
        "quotients": list(cf.partial_quotients),
        "n": cf.n,
        "expansion": str(cf),
        "convergents": {"p": list(conv.p), "q": list(conv.q)},
    }))
    return EXIT_OK


def cmd_circle(args) -> int:
    if args.p < 2 or not 0 < args.a < args.p:
        print("need p >= 2 and 0 < a < p", file=sys.stderr)
        return EXIT_INVALID
    rows = [(h, res, args.p) for h, res in contfrac.circle_points(args.a, args.p)]
    return _write_csv(rows, ("h", "residue", "denominator"), args.csv_out)


def cmd_tateoort(args) -> int:
    from hgfree.params import is_prime

    if not is_prime(args.p) or args.p == 2 or args.precision < 1:
        print("need an odd prime p and precision >= 1", file=sys.stderr)
        return EXIT_INVALID
    print(dumps(tateoort.summary(args.p, args.precision)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hgfree", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hgfree {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="decide freeness for one tuple")
    for flag in ("p", "e", "r", "t"):
        a.add_argument(f"--{flag}", type=int, required=True)
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--matrices", action="store_true", help="add the matrix certificate")
    a.add_argument("--tateoort", action="store_true", help="add the b_i table for p")
    a.add_argument("--strict", action="store_true", help="reject gcd(c, r) > 1")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="tabulate verdicts over ranges of e and t")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--e-min", type=int, default=1)
    s.add_argument("--e-max", type=int, default=None)
    s.add_argument("--t-min", type=int, default=1)
    s.add_argument("--t-max", type=int, default=None,
                   help="default: floor(r*p*e_max/(p-1))")
    s.add_argument("--csv-out", default=None, help="output path, default stdout")
    s.add_argument("--strict", action="store_true", help="skip tuples with gcd(c, r) > 1")
    s.add_argument("--typical-only", action="store_true", help="skip maximally ramified tuples")
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run exhaustive cross-check suites")
    v.add_argument("--suite", choices=verify.SUITES, default="all")
    v.add_argument("--p-max", type=int, default=20)
    v.add_argument("--seed", type=int, default=None,
                   help="accepted for interface stability; suites are exhaustive")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cf", help="continued fraction of num/den as JSON")
    c.add_argument("--num", type=int, required=True)
    c.add_argument("--den", type=int, required=True)
    c.set_defaults(func=cmd_cf)

    ci = sub.add_parser("circle", help="points h*a/p on the unit circle as CSV")
    ci.add_argument("--p", type=int, required=True)
    ci.add_argument("--a", type=int, required=True)
    ci.add_argument("--csv-out", default=None)
    ci.set_defaults(func=cmd_circle)

    to = sub.add_parser("tateoort", help="b_i table and epsilon for the group algebra")
    to.add_argument("--p", type=int, required=True)
    to.add_argument("--precision", type=int, default=tateoort.DEFAULT_PRECISION)
    to.set_defaults(func=cmd_tateoort)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameters as exc:
        print("invalid parameters:", file=sys.stderr)
        for v in exc.violations:
            print(f"  - {v}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInvariant as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
