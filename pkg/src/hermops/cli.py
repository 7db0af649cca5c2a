"""Command-line interface.

Subcommands:

    qpoly     emit the coefficient polynomials of the diagonal operator
    reality   emit the real-rootedness table of those coefficients
    ratios    emit the finite-difference ratio scan as CSV
    verify    run the exact identity suites and report PASS/FAIL lines
    examples  reproduce the packaged worked examples

All output is deterministic: the same invocation produces byte-identical
bytes.  Configuration errors print a one-line JSON object to stderr and exit
with status 2; check failures exit with status 1.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .classify import coefficient_reality_table
from .demos import DEMO_IDS, run_demo
from .diffop import build_operator, check_diagonal_action, check_operator_equivalence, check_standard_basis_limit
from .hermite import check_identities
from .jensen import (
    GammaSeq,
    check_difference_reconstruction,
    check_shift_recurrence,
    check_sum_interchange,
    histogram_bins,
    ratio_csv_lines,
    ratio_sequence,
)
from .laguerre import LaguerreParam, check_eigen_action
from .ratpoly import parse_rat, rat_str
from .sequences import factored_from_json, make_sequence

DEFAULT_KMAX_CAP = 2000


def _kmax_cap() -> int:
    return int(os.environ.get("HERMOPS_KMAX_CAP", str(DEFAULT_KMAX_CAP)))


class ConfigError(ValueError):
    pass


def _resolve_sequence(args) -> GammaSeq:
    has_seq = getattr(args, "seq", None) is not None
    has_factored = getattr(args, "factored", None) is not None
    if has_seq == has_factored:
        raise ConfigError("exactly one of --seq or --factored is required")
    if has_seq:
        return make_sequence(args.seq)
    spec = factored_from_json(args.factored)
    return GammaSeq.from_lpplus(spec, name="factored")


def _check_kmax(kmax: int) -> int:
    cap = _kmax_cap()
    if kmax < 0:
        raise ConfigError("kmax must be nonnegative")
    if kmax > cap:
        raise ConfigError(f"kmax {kmax} exceeds the configured cap {cap} (HERMOPS_KMAX_CAP)")
    return kmax


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _cmd_qpoly(args) -> int:
    seq = _resolve_sequence(args)
    kmax = _check_kmax(args.kmax)
    alpha = parse_rat(args.alpha)
    op = build_operator(alpha, seq, kmax, args.p)
    if args.format == "json":
        _emit(_json_text(op.to_json_dict()), args.output)
    else:
        lines = ["k,coeffs"]
        for k, q in enumerate(op.qpolys):
            lines.append(f"{k},{' '.join(rat_str(c) for c in q.coeffs)}")
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_reality(args) -> int:
    seq = _resolve_sequence(args)
    kmax = _check_kmax(args.kmax)
    alpha = parse_rat(args.alpha)
    if alpha <= 0:
        raise ConfigError("reality tables require alpha > 0")
    table = coefficient_reality_table(alpha, seq, kmax, args.p)
    if args.format == "json":
        _emit(_json_text(table.to_json_dict()), args.output)
    else:
        lines = ["k,real_rooted"]
        lines.extend(f"{row.k},{'true' if row.real_rooted else 'false'}" for row in table.rows)
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_ratios(args) -> int:
    seq = _resolve_sequence(args)
    kmax = _check_kmax(args.kmax)
    if kmax < 1:
        raise ConfigError("ratio scans need kmax >= 1")
    rows = ratio_sequence(seq, kmax, args.p)
    lines = ratio_csv_lines(rows)
    if args.histogram is not None:
        if args.histogram < 1:
            raise ConfigError("histogram bin count must be positive")
        defined = [v for _, v in rows if v is not None]
        lines.append("")
        lines.append("bin,lo,hi,count")
        for i, (lo, hi, count) in enumerate(histogram_bins(defined, args.histogram)):
            lines.append(f"{i},{float(lo):.12g},{float(hi):.12g},{count}")
    _emit("\n".join(lines), args.output)
    return 0


def _verify_suites():
    const1 = make_sequence("const1")
    linear3 = make_sequence("linear(3)")
    ex311 = make_sequence("example311")
    bessel = make_sequence("besselJ0")

    yield check_difference_reconstruction(const1, 10)
    yield check_difference_reconstruction(ex311, 10)
    yield check_difference_reconstruction(bessel, 10)
    for seq in (ex311, bessel, linear3):
        yield check_shift_recurrence(seq, 8, 4)
    table = {(k, i): Fraction((k + 1) * (i + 2), 3) for k in range(10) for i in range(10)}
    for j in range(3):
        yield check_sum_interchange(8, j, table)
    yield check_identities(12, Fraction(1))
    for seq in (const1, linear3, ex311, bessel):
        yield check_diagonal_action(Fraction(1), seq, 10)
        yield check_operator_equivalence(Fraction(1), seq, 8)
    yield check_standard_basis_limit(bessel, 6)
    yield check_standard_basis_limit(ex311, 6)
    for alpha in (Fraction(0), Fraction(1), Fraction(2)):
        yield check_eigen_action(LaguerreParam(alpha, alpha + 1), 10)


def _cmd_verify(_args) -> int:
    all_passed = True
    for report in _verify_suites():
        print(report.line())
        all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def _cmd_examples(args) -> int:
    ids = DEMO_IDS if args.id == "all" else (args.id,)
    all_passed = True
    for demo_id in ids:
        report = run_demo(demo_id)
        print(report.line())
        for note in report.notes:
            print(f"  {note}")
        if demo_id == "table1" and report.passed:
            for k, value in report.data["ratios"]:
                print(f"  k={k}: {rat_str(value)}")
        if demo_id == "geom-family":
            for row in report.data["rows"]:
                print(
                    f"  r={row['r']}: Q_2 real-rooted={row['q2_real_rooted']}, "
                    f"Q_4 real-rooted={row['q4_real_rooted']}"
                )
        all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermops",
        description="Exact diagonal differential operators on the Hermite basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sequence_options(p):
        p.add_argument("--seq", help="named sequence selector, e.g. besselJ0 or linear(3)")
        p.add_argument(
            "--factored",
            help='factored generator as JSON, e.g. \'{"sigma": "1/2", "zeros": ["1", "1"]}\'',
        )
        p.add_argument("--p", type=int, default=0, help="index offset (default 0)")
        p.add_argument("--output", help="write to this path instead of stdout")

    q = sub.add_parser("qpoly", help="coefficient polynomials of the diagonal operator")
    add_sequence_options(q)
    q.add_argument("--alpha", required=True, help="Hermite parameter, e.g. 1 or 1/2")
    q.add_argument("--kmax", type=int, required=True, help="highest coefficient index")
    q.add_argument("--format", choices=("json", "csv"), default="json")
    q.set_defaults(func=_cmd_qpoly)

    r = sub.add_parser("reality", help="real-rootedness table of the coefficients")
    add_sequence_options(r)
    r.add_argument("--alpha", required=True)
    r.add_argument("--kmax", type=int, required=True)
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.set_defaults(func=_cmd_reality)

    t = sub.add_parser("ratios", help="finite-difference ratio scan as CSV")
    add_sequence_options(t)
    t.add_argument("--kmax", type=int, required=True)
    t.add_argument("--histogram", type=int, help="append equal-width bin counts")
    t.set_defaults(func=_cmd_ratios)

    v = sub.add_parser("verify", help="run the exact identity suites")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("examples", help="reproduce the packaged worked examples")
    e.add_argument("--id", default="all", choices=("all",) + DEMO_IDS)
    e.set_defaults(func=_cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
