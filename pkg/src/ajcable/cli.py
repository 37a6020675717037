"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage error.
Reports are deterministic JSON (sorted keys) or CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .jones import (
    EvenR,
    cable_jones,
    cable_jones_direct,
    cable_step,
    demo_exp_sequence,
    constant_sequence,
    jones_fig8,
    odd_jones,
    sequence_from_descriptor,
)
from .laurent import LaurentPoly1, poly_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _range(text: str) -> list[int]:
    try:
        a, b = text.split(":")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _window(text: str) -> tuple[int, int]:
    ns = _range(text)
    return ns[0], ns[-1]


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------------


def cmd_jones(args) -> int:
    if args.cable is not None and args.odd:
        raise UsageError("--cable and --odd are mutually exclusive")
    if args.cable is not None:
        p = cable_jones(args.cable, args.n)
    elif args.odd:
        p = odd_jones(args.n)
    else:
        p = jones_fig8(args.n)
    text = _dump(poly_to_json(p)) if args.format == "json" else repr(p) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_check_aj(args) -> int:
    from .apoly import check_aj
    from .recurrence import AnnihilationFailure

    try:
        rep = check_aj(args.r, args.n_check, threads=args.threads)
    except AnnihilationFailure as exc:
        _emit(_dump({"r": args.r, "proportional": False, "error": str(exc)}), args.out)
        return EXIT_FAIL
    _emit(_dump(rep.to_json()), args.out)
    if args.out:
        sys.stdout.write(f"r={args.r} proportional={str(rep.proportional).lower()} checked=1..{args.n_check}\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def _verify_cm(args) -> dict:
    from .recurrence import cm_operator, fit_adaptive
    from .jones import fig8_sequence

    fit = fit_adaptive(cm_operator(), fig8_sequence())
    expected = LaurentPoly1({-2: 2, 2: -2})
    ok = fit.at_M_equal_1() == expected
    return {"ok": ok, "window": list(fit.window), "verified_on": fit.verified_on, "rho_at_M1": repr(fit.at_M_equal_1())}


def _verify_factorization(args) -> dict:
    from .recurrence import factorization_sides

    lhs, rhs = factorization_sides()
    return {"ok": (lhs - rhs).is_zero()}


def _verify_cable_step(args) -> dict:
    rs = args.r_list or ([args.r] if args.r is not None else [9])
    bad = []
    for r in rs:
        value = LaurentPoly1()
        for n in range(0, args.n_max):
            value = cable_step(r, n, value_at_n=value)
            if value != cable_jones_direct(r, n + 1):
                bad.append([r, n + 1])
    return {"ok": not bad, "r": rs, "n_max": args.n_max, "failures": bad}


def _verify_symmetry(args) -> dict:
    bad = []
    for n in range(0, args.n_max + 1):
        v = jones_fig8(n)
        if jones_fig8(-n) != -v:
            bad.append(["odd", n])
        if v.subs_power(-1) != v:
            bad.append(["t->1/t", n])
    return {"ok": not bad, "n_max": args.n_max, "failures": bad}


def _verify_degrees(args) -> dict:
    from .probes import degree_sweep, fig8_degree_rows

    rs = args.r_list or ([args.r] if args.r is not None else [5, -5, 7, -7, 9, -9, 11, -11, 13, -13])
    table = degree_sweep(rs, args.n_max)
    knot = [row for row in fig8_degree_rows(args.n_max) if row[1] != row[2] or row[3] != row[4]]
    bad = [[m.r, m.n] for m in table.mismatches()]
    return {"ok": not bad and not knot, "r": rs, "n_max": args.n_max, "cable_mismatches": bad, "knot_mismatches": knot}


def _verify_breadth(args) -> dict:
    from .jones import odd_fig8_sequence
    from .probes import breadth_fit

    abc = breadth_fit(odd_fig8_sequence(), range(1, args.n_max + 1))
    return {"ok": abc == (32, 24, 0), "fit": [str(x) for x in abc], "n_max": args.n_max}


_SUITES = {
    "cm": _verify_cm,
    "factorization": _verify_factorization,
    "cable-step": _verify_cable_step,
    "symmetry": _verify_symmetry,
    "degrees": _verify_degrees,
    "breadth": _verify_breadth,
}


def cmd_verify(args) -> int:
    result = _SUITES[args.which](args)
    result["suite"] = args.which
    _emit(_dump(result), args.out)
    return EXIT_OK if result["ok"] else EXIT_FAIL


def cmd_guess(args) -> int:
    from .recurrence import search_annihilators

    try:
        seq = sequence_from_descriptor(args.seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = search_annihilators(seq, args.ldeg, args.window, args.n)
    if args.format == "json":
        _emit(_dump(rep.to_json()), args.out)
    else:
        lines = [f"# searched: {rep.bounds}; rows n={rep.rows_used[0]}..{rep.rows_used[-1]}; {rep.certificate}"]
        lines += [repr(c) for c in rep.candidates] or ["none"]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_probe(args) -> int:
    from .probes import breadth_fit, mm_probe

    if args.kind == "mm":
        try:
            res = mm_probe(args.z, args.n or [10, 20, 40])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value_re", "value_im", "error"])
        w.writerows(res.to_rows())
        _emit(buf.getvalue(), args.out)
        return EXIT_OK
    try:
        seq = sequence_from_descriptor(args.seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ns = args.range or list(range(1, 11))
    _emit(",".join(str(x) for x in breadth_fit(seq, ns)) + "\n", args.out)
    return EXIT_OK


def _seed_demo() -> int:
    for name, seq in (("const", constant_sequence()), ("demo-exp", demo_exp_sequence())):
        sys.stdout.write(f"{name}: " + ", ".join(repr(seq(n)) for n in range(1, 5)) + ", ...\n")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ajcable", description="Colored Jones recurrences for cables of the figure-eight knot.")
    p.add_argument("--threads", type=int, default=1, help="worker threads for independent checks")
    p.add_argument("--seed-demo", action="store_true", help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command")

    j = sub.add_parser("jones", help="print a colored Jones polynomial")
    j.add_argument("--n", type=int, required=True)
    j.add_argument("--cable", type=int, metavar="R", help="use the (R, 2)-cable")
    j.add_argument("--odd", action="store_true", help="print J(2n + 1)")
    j.add_argument("--format", choices=["text", "json"], default="text")
    j.add_argument("--out")
    j.set_defaults(func=cmd_jones)

    c = sub.add_parser("check-aj", help="build S for the (r, 2)-cable and compare with the A-polynomial")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n-check", type=int, default=12)
    c.add_argument("--out")
    c.set_defaults(func=cmd_check_aj)

    v = sub.add_parser("verify", help="run a named invariant suite")
    v.add_argument("--which", choices=sorted(_SUITES), required=True)
    v.add_argument("--r", type=int)
    v.add_argument("--r-list", type=_int_list)
    v.add_argument("--n-max", type=int, default=10)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("guess", help="bounded search for annihilating operators")
    g.add_argument("--seq", required=True, help="fig8, odd-fig8, qint, const, demo-exp or cable:<r>")
    g.add_argument("--ldeg", type=int, required=True)
    g.add_argument("--window", type=_window, required=True, metavar="A:B")
    g.add_argument("--n", type=_range, required=True, metavar="A:B")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.add_argument("--out")
    g.set_defaults(func=cmd_guess)

    pr = sub.add_parser("probe", help="numerical probes")
    psub = pr.add_subparsers(dest="kind", required=True)
    mm = psub.add_parser("mm", help="Melvin-Morton limit")
    mm.add_argument("--z", type=_complex, required=True)
    mm.add_argument("--n", type=_int_list)
    mm.add_argument("--out")
    br = psub.add_parser("breadth", help="quadratic fit of the breadth")
    br.add_argument("--seq", required=True)
    br.add_argument("--n", dest="range", type=_range, metavar="A:B")
    br.add_argument("--out")
    pr.set_defaults(func=cmd_probe)
    return p


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--window -8:8" would otherwise be read as two flags
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a.startswith("--") and "=" not in a and i + 1 < len(argv) and argv[i + 1].startswith("-") and ":" in argv[i + 1]:
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.seed_demo:
        return _seed_demo()
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.threads < 1:
        sys.stderr.write("ajcable: --threads must be positive\n")
        return EXIT_USAGE
    from .recurrence import WindowTooSmall

    try:
        return args.func(args)
    except WindowTooSmall as exc:
        sys.stderr.write(f"ajcable: {exc}\n")
        return EXIT_FAIL
    except (UsageError, EvenR, ValueError) as exc:
        sys.stderr.write(f"ajcable: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
