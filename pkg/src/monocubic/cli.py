"""
monocubic: monogenicity and equivalence of cubic trinomials.

Exit codes: 0 success / affirmative, 1 negative verdict (equiv only),
2 usage error, 3 indeterminate.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import re
import sys

from . import output
from .families import family_member
from .jks import Verdict, monogenicity_report
from .numfield import IndeterminateError, express_root
from .polycore import Cubic, GaloisType, Trinomial, galois_type_cubic, generic_cubic_discriminant
from .scan import FilterError, default_threads, parse_filter, scan_form
from .verify import run_all

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3

CSV_HELP = (
    "CSV columns: family -> " + ",".join(output.FAMILY_COLUMNS)
    + "; search -> " + ",".join(output.SEARCH_COLUMNS)
)


class UsageError(Exception):
    pass


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(x(?:\s*(?:\^|\*\*)\s*(\d+))?)?")


def parse_cubic(text: str) -> Cubic:
    """Accept ``a,b,c`` (for x^3+ax^2+bx+c) or a polynomial like ``x^3-3x+1``."""
    s = text.replace(" ", "")
    if re.fullmatch(r"-?\d+,-?\d+,-?\d+", s):
        a, b, c = map(int, s.split(","))
        return Cubic(a, b, c)
    coeffs = [0, 0, 0, 0]
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise UsageError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        deg = 0 if not m.group(3) else int(m.group(4) or 1)
        if deg > 3:
            raise UsageError(f"{text!r} is not a cubic")
        coeffs[deg] += sign * coef
        pos = m.end()
    if coeffs[3] != 1:
        raise UsageError(f"{text!r} is not a monic cubic")
    return Cubic(coeffs[2], coeffs[1], coeffs[0])


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _print_report(r, out) -> None:
    print(str(r.trinomial), file=out)
    print(f"  discriminant: {r.discriminant}", file=out)
    print(f"  irreducible:  {r.irreducible.value}", file=out)
    if r.cyclic_cubic is not None:
        print(f"  cyclic cubic: {str(r.cyclic_cubic).lower()}", file=out)
    for a in r.prime_analyses:
        status = {True: "index-free", False: "divides index", None: "undecided"}[a.index_free]
        print(f"  q={a.q:<8} {a.case.value:<15} {status}", file=out)
    line = f"  verdict: {r.verdict.value}"
    if r.reason:
        line += f" ({r.reason})"
    print(line, file=out)


def cmd_check(args, out) -> int:
    try:
        t = Trinomial(args.n, args.m, args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    r = monogenicity_report(t)
    if args.json:
        inp = {"N": t.N, "M": t.M, "A": t.A, "B": t.B}
        print(output.record("check", inp, output.report_payload(r)), file=out)
    else:
        _print_report(r, out)
    return EXIT_INDETERMINATE if r.verdict is Verdict.UNKNOWN else EXIT_OK


def cmd_family(args, out) -> int:
    if args.k_min > args.k_max:
        raise UsageError("k_min must not exceed k_max")
    members = [family_member(args.family, k) for k in range(args.k_min, args.k_max + 1)]
    if args.only_members:
        members = [m for m in members if m.in_family_set]
    if args.csv:
        out.write(output.csv_lines(output.FAMILY_COLUMNS, map(output.member_row, members)))
    elif args.json:
        inp = {"family": args.family, "k_min": args.k_min, "k_max": args.k_max}
        for m in members:
            print(output.record("family", inp, output.member_payload(m)), file=out)
    else:
        for m in members:
            flag = "member" if m.in_family_set else "-"
            print(f"F{args.family} k={m.k:<6} delta={m.delta:<10} {str(m.trinomial):<32} "
                  f"disc={m.discriminant:<14} squarefree={str(m.delta_squarefree).lower():<5} {flag}",
                  file=out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    try:
        parse_filter(args.filter)
    except FilterError as exc:
        raise UsageError(f"bad filter: {exc}") from exc
    if args.a_min > args.a_max or args.b_min > args.b_max:
        raise UsageError("empty coefficient range")
    results = scan_form(
        args.m, (args.a_min, args.a_max), (args.b_min, args.b_max), args.filter,
        prune=not args.no_prune, threads=args.threads,
    )
    if args.csv:
        out.write(output.csv_lines(output.SEARCH_COLUMNS, map(output.scan_row, results)))
    elif args.json:
        inp = {"m": args.m, "a_min": args.a_min, "a_max": args.a_max,
               "b_min": args.b_min, "b_max": args.b_max}
        if args.filter:
            inp["filter"] = args.filter
        for res in results:
            print(output.record("search", inp, output.scan_payload(res)), file=out)
    else:
        for res in results:
            fam = f" {res.family[0].value}(k={res.family[1]})" if res.family else ""
            print(f"{str(res.trinomial):<34} disc={res.report.discriminant:<14} "
                  f"{res.report.verdict.value:<13} [{' '.join(sorted(res.tags))}]{fam}", file=out)
    return EXIT_OK


def cmd_equiv(args, out) -> int:
    f, g = parse_cubic(args.f), parse_cubic(args.g)
    for c in (f, g):
        if galois_type_cubic(c) is not GaloisType.C3:
            raise UsageError(f"{c} is not an irreducible cyclic cubic")
    df, dg = generic_cubic_discriminant(f), generic_cubic_discriminant(g)
    try:
        elem = express_root(g, f)
    except IndeterminateError as exc:
        elem, status = None, "indeterminate"
        print(f"indeterminate: {exc}", file=sys.stderr)
    else:
        status = "equivalent" if elem is not None else "not_equivalent"
    if args.json:
        result = {"discriminant_f": str(df), "discriminant_g": str(dg),
                  "equal_discriminant": df == dg, "status": status}
        if status != "indeterminate":
            result["fields_equal"] = elem is not None
        if elem is not None:
            result["root_of_g"] = str(elem)
        print(output.record("equiv", {"f": str(f), "g": str(g)}, result), file=out)
    else:
        print(f"f = {f}    disc {df}", file=out)
        print(f"g = {g}    disc {dg}", file=out)
        print(f"equal discriminant: {str(df == dg).lower()}", file=out)
        if status == "indeterminate":
            print("fields equal: indeterminate", file=out)
        else:
            print(f"fields equal: {str(elem is not None).lower()}", file=out)
        if elem is not None:
            print(f"root of g in Q(a), f(a) = 0: {elem}", file=out)
    return {"equivalent": EXIT_OK, "not_equivalent": EXIT_NEGATIVE}.get(status, EXIT_INDETERMINATE)


def cmd_verify_paper(args, out) -> int:
    ok = True
    for res in run_all(args.bound, args.k_range, args.sweep_bound, args.threads):
        ok &= res.passed
        if args.json:
            payload = {"check": res.name, "passed": res.passed, "detail": res.detail}
            inp = {"bound": args.bound, "k_min": args.k_range[0], "k_max": args.k_range[1]}
            print(output.record("verify-paper", inp, payload), file=out)
        else:
            print(f"{'PASS' if res.passed else 'FAIL'}  {res.name}: {res.detail}", file=out)
        out.flush()
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="monocubic",
        description="Monogenicity, cyclicity and equivalence of cubic trinomials.",
        epilog=CSV_HELP,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write results to this file instead of standard output")
    common.add_argument("--threads", type=int, default=None,
                        help="cap on worker processes (MONOCUBIC_THREADS overrides)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="monogenicity report for x^N + A x^M + B")
    for name in ("n", "m", "a", "b"):
        c.add_argument(name, type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("family", parents=[common], help="rows of F1 or F2 over a k range",
                       epilog="CSV columns: " + ",".join(output.FAMILY_COLUMNS))
    f.add_argument("family", type=int, choices=(1, 2))
    f.add_argument("k_min", type=int)
    f.add_argument("k_max", type=int)
    f.add_argument("--only-members", action="store_true", help="drop rows outside the family set")
    fmt = f.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("search", parents=[common], help="scan x^3 + A x^m + B over a box",
                       epilog="CSV columns: " + ",".join(output.SEARCH_COLUMNS)
                       + ". Filter tags: monogenic, cyclic, in_F1, in_F2, exceptional; "
                         "combine with & | ! and parentheses.")
    s.add_argument("m", type=int, choices=(1, 2))
    for name in ("a_min", "a_max", "b_min", "b_max"):
        s.add_argument(name, type=int)
    s.add_argument("--filter", default=None)
    s.add_argument("--no-prune", action="store_true", help="disable necessary-condition pruning")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("equiv", parents=[common], help="do two cyclic cubics share a splitting field",
                       epilog="Cubics as 'a,b,c' for x^3+ax^2+bx+c or as 'x^3-3x+1'.")
    e.add_argument("f")
    e.add_argument("g")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_equiv)

    v = sub.add_parser("verify-paper", parents=[common], help="run the full reproduction suite")
    v.add_argument("--bound", type=int, default=1000, help="|A|,|B| bound for the x^3+Ax^2+B scan")
    v.add_argument("--k-range", type=_range, default=(-200, 200), metavar="LO:HI")
    v.add_argument("--sweep-bound", type=int, default=60, help="box for the JKS/Dedekind sweep")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    raw = list(sys.argv[1:] if argv is None else argv)
    # argparse reads "-50:50" as an option flag; glue it to --k-range
    argv = []
    while raw:
        a = raw.pop(0)
        if a == "--k-range" and raw and raw[0].startswith("-"):
            a = f"--k-range={raw.pop(0)}"
        argv.append(a)
    args = parser.parse_args(argv)
    if args.threads is None or "MONOCUBIC_THREADS" in os.environ:
        args.threads = default_threads()
    try:
        with contextlib.ExitStack() as stack:
            out = sys.stdout
            if args.out:
                out = stack.enter_context(open(args.out, "w", encoding="utf-8", newline="\n"))
            return args.func(args, out)
    except UsageError as exc:
        print(f"monocubic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
