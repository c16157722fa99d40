"""Command-line front end.

Exit codes: 0 success, 1 mathematical inconsistency, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import SUPERSINGULAR_PRIMES, __version__
from .arith import PRIME_LIMIT, is_prime, smallest_factor
from .harness import (
    COMPOSITE_INDEX_NOTES,
    ConditionReport,
    VerifyConfig,
    condition_report,
    validate_monster_constant,
    verify_coincidence,
)
from .jacobi import JacobiDimension, jacobi_cusp_dim
from .modcurve import GenusProfile, genus_profile
from .supersingular import SupersingularReport, supersingular_report

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2
MAX_PRIME_CAP = 10**6

CSV_FIELDS = (
    "p", "c1_monster", "c2_genus_plus_zero", "c3_ss_rational", "c4_jacobi_zero",
    "consistent", "in_S", "genus_x0", "fricke_fixed_points", "genus_plus",
    "jacobi_dim", "ss_expected", "ss_in_fp", "kodaira",
)


def genus_dict(g: GenusProfile) -> dict:
    return {
        "p": g.p,
        "index_mu": g.index_mu,
        "nu2": g.nu2,
        "nu3": g.nu3,
        "nu_inf": g.nu_inf,
        "genus": g.genus,
        "fricke_fixed_points": g.fricke_fixed_points,
        "genus_plus": g.genus_plus,
        "dim_weight2_plus": g.dim_weight2_plus,
    }


def jacobi_dict(jd: JacobiDimension, terms: bool = False) -> dict:
    out = {"p": jd.p, "dim": jd.dim}
    if terms:
        out["terms"] = list(jd.terms)
    return out


def ss_dict(ss: SupersingularReport) -> dict:
    return {
        "p": ss.p,
        "expected_count": ss.expected_count,
        "found_in_fp": ss.j_values,
        "all_rational": ss.all_rational,
    }


def record_dict(rec: ConditionReport) -> dict:
    return {
        "p": rec.p,
        "c1_monster": rec.c1_monster,
        "c2_genus_plus_zero": rec.c2_genus_plus_zero,
        "c3_ss_rational": rec.c3_ss_rational,
        "c4_jacobi_zero": rec.c4_jacobi_zero,
        "consistent": rec.consistent,
        "in_S": rec.in_S,
        "kodaira": rec.kodaira.value,
        "genus": genus_dict(rec.genus),
        "jacobi": jacobi_dict(rec.jacobi),
        "supersingular": ss_dict(rec.supersingular),
    }


def csv_row(rec: ConditionReport) -> list[str]:
    def b(x: bool) -> str:
        return "true" if x else "false"

    return [
        str(rec.p),
        b(rec.c1_monster), b(rec.c2_genus_plus_zero), b(rec.c3_ss_rational), b(rec.c4_jacobi_zero),
        b(rec.consistent), b(rec.in_S),
        str(rec.genus.genus), str(rec.genus.fricke_fixed_points), str(rec.genus.genus_plus),
        str(rec.jacobi.dim),
        str(rec.supersingular.expected_count), str(len(rec.supersingular.found_in_fp)),
        rec.kodaira.value,
    ]


def render_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for rec in records:
        w.writerow(csv_row(rec))
    return buf.getvalue()


def render_table(records) -> str:
    cols = ("p", "c1", "c2", "c3", "c4", "ok", "in_S", "g0", "fix", "g+", "Jdim", "ss", "ssFp", "kodaira")
    widths = (7, 3, 3, 3, 3, 3, 5, 5, 4, 4, 5, 4, 5, 15)
    lines = ["".join(c.rjust(w) for c, w in zip(cols, widths))]
    for rec in records:
        row = csv_row(rec)
        row[1:7] = ["T" if v == "true" else "F" for v in row[1:7]]
        lines.append("".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def summary_line(summary) -> str:
    status = "OK" if summary.ok else "FAIL"
    return (
        f"summary: {status} checked={summary.checked} "
        f"inconsistencies={summary.inconsistencies} zero_set={summary.zero_set}"
    )


def cmd_verify(args) -> int:
    summary = verify_coincidence(VerifyConfig(bound=args.max_prime, workers=args.workers))
    out = sys.stdout
    if args.format == "json":
        doc = {
            "meta": {"tool": "sscoincidence", "version": __version__, "bound": args.max_prime},
            "records": [record_dict(r) for r in summary.records],
            "summary": {
                "checked": summary.checked,
                "inconsistencies": summary.inconsistencies,
                "zero_set": summary.zero_set,
                "ok": summary.ok,
            },
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        out.write(render_csv(summary.records))
        print(summary_line(summary), file=sys.stderr)
    else:
        out.write(f"# sscoincidence {__version__} verify max_prime={args.max_prime}\n")
        out.write(render_table(summary.records))
        out.write(summary_line(summary) + "\n")
        out.write(kodaira_partition_text(summary.records))
    return EXIT_OK if summary.ok else EXIT_INCONSISTENT


def kodaira_partition_text(records) -> str:
    groups: dict[str, list[int]] = {}
    for rec in records:
        groups.setdefault(rec.kodaira.value, []).append(rec.p)
    lines = ["kodaira classification of A_p (prime p):"]
    for tag in ("Unirational", "NonNegativeOpen", "GeneralType"):
        ps = groups.get(tag, [])
        shown = ps if len(ps) <= 20 else ps[:10] + ["..."] + ps[-3:]
        lines.append(f"  {tag}: {len(ps)} primes {shown}")
    lines.append("composite index (context only):")
    lines.extend(f"  {note}" for note in COMPOSITE_INDEX_NOTES)
    return "\n".join(lines) + "\n"


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    elif fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        flat = {k: v for k, v in obj.items() if not isinstance(v, (dict, list))}
        w.writerow(flat)
        w.writerow(_csv_value(v) for v in flat.values())
    else:
        for k, v in obj.items():
            print(f"{k:>22}: {v}")


def _csv_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def cmd_prime_detail(args) -> int:
    p = args.p
    if args.command == "genus":
        obj = genus_dict(genus_profile(p))
    elif args.command == "jacobi":
        obj = jacobi_dict(jacobi_cusp_dim(p), terms=args.terms)
    elif args.command == "supersingular":
        obj = ss_dict(supersingular_report(p))
        if not args.list:
            obj["found_in_fp"] = len(obj["found_in_fp"])
    else:
        rec = condition_report(p)
        obj = record_dict(rec)
        if args.format == "csv":
            sys.stdout.write(render_csv([rec]))
            return EXIT_OK if rec.consistent else EXIT_INCONSISTENT
    _emit(obj, args.format)
    if args.command == "conditions" and not obj["consistent"]:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_monster_check(args) -> int:
    ok = validate_monster_constant()
    print(f"monster order constant: {'OK' if ok else 'MISMATCH'}; prime divisors = {list(SUPERSINGULAR_PRIMES)}")
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _max_prime(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 2 <= n <= MAX_PRIME_CAP:
        raise argparse.ArgumentTypeError(f"must lie in [2, {MAX_PRIME_CAP}], got {n}")
    return n


def _prime(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 2 <= n < PRIME_LIMIT:
        raise argparse.ArgumentTypeError(f"p must lie in [2, 2**32), got {n}")
    if not is_prime(n):
        raise argparse.ArgumentTypeError(f"{n} is composite (divisible by {smallest_factor(n)})")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sscoincidence",
        description="Cross-check the characterizations of the supersingular primes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="evaluate all conditions for every prime up to a bound")
    v.add_argument("--max-prime", type=_max_prime, default=1000)
    v.add_argument("--format", choices=("table", "json", "csv"), default="table")
    v.add_argument("--workers", type=int, default=1, help="process pool size (default: serial)")
    v.set_defaults(func=cmd_verify)

    for name, help_ in (
        ("genus", "genus of X_0(p), Fricke fixed points and quotient genus"),
        ("jacobi", "dimension of weight-2 index-p Jacobi cusp forms"),
        ("supersingular", "supersingular j-invariants lying in F_p"),
        ("conditions", "all four conditions and the Kodaira status for p"),
    ):
        d = sub.add_parser(name, help=help_)
        d.add_argument("p", type=_prime)
        d.add_argument("--format", choices=("table", "json", "csv"), default="table")
        if name == "supersingular":
            d.add_argument("--list", action="store_true", help="print the j-values")
        if name == "jacobi":
            d.add_argument("--terms", action="store_true", help="include the per-j terms")
        d.set_defaults(func=cmd_prime_detail)

    m = sub.add_parser("monster-check", help="validate the stored Monster order")
    m.set_defaults(func=cmd_monster_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
