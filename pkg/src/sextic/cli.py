"""Command-line interface.

Subcommands: classify, resolvent, discriminant, audit, search, quintic.
Machine-readable JSON by default (rationals always serialized as exact
"p/q" strings, never floats); --format text for aligned human output.
Exit codes: 0 success, 1 usage or parse error, 2 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import mpmath as mp

from .classify import ClassificationReport, Solvable, classify
from .errors import NumericFailure, SexticError, ZeroD
from .exact import RatPoly, rational_roots
from .quintic import (
    DEFAULT_HEIGHT_BOUND,
    QuinticParams,
    params_from_ab,
    radical_roots,
    search_quintics,
)
from .resolvents import (
    F_REFERENCE_TABLE,
    G_REFERENCE_TABLE,
    ReducedSextic,
    ResolventKind,
    discriminant_exact,
    discriminant_reduced,
    f_reduced,
    g_reduced,
    reconstruct_reduced,
    resolvent_numeric_in_frame,
)

_KINDS = {"j": ResolventKind.MATCHING, "k": ResolventKind.PARTITION}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the interface contract says 1."""

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(1 if status else 0)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _coeff_list(text: str) -> RatPoly:
    try:
        parts = [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list: {text!r}") from exc
    if not parts or parts[0] == 0:
        raise argparse.ArgumentTypeError("leading coefficient must be nonzero")
    return RatPoly(parts[::-1])


def _poly_from_args(args, parser) -> RatPoly:
    if args.coeffs is not None:
        if args.d is not None or args.e is not None:
            parser.error("--coeffs and --d/--e are mutually exclusive")
        return args.coeffs
    if args.d is None or args.e is None:
        parser.error("provide either --coeffs or both --d and --e")
    return ReducedSextic(args.d, args.e).to_poly()


def _poly_strings(p: RatPoly) -> list:
    return [str(c) for c in reversed(p.coeffs)]


def _report_dict(report: ClassificationReport) -> dict:
    return {
        "input": _poly_strings(report.input),
        "irreducible": report.irreducible,
        "f_roots": [str(r) for r in sorted(report.f_roots)],
        "g_roots": [str(r) for r in sorted(report.g_roots)],
        "discriminant": str(report.discriminant),
        "sqrt_discriminant": None
        if report.sqrt_discriminant is None
        else str(report.sqrt_discriminant),
        "bound": report.bound.value,
        "solvable": report.solvable.value,
        "notes": list(report.notes),
    }


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data))
        return
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:")
            for item in value:
                print("  " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            print(f"{key}: {value}")


def _complex_dict(z, digits: int = 30) -> dict:
    return {"re": mp.nstr(mp.mpf(z.real), digits), "im": mp.nstr(mp.mpf(z.imag), digits)}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_classify(args, parser) -> int:
    poly = _poly_from_args(args, parser)
    report = classify(poly, args.precision_bits)
    _emit(_report_dict(report), args.format)
    return 0


def _cmd_resolvent(args, parser) -> int:
    kind = _KINDS[args.kind]
    reduced = None
    if args.coeffs is None and args.d is not None and args.e is not None:
        reduced = ReducedSextic(args.d, args.e)
    poly = _poly_from_args(args, parser)
    out = {"kind": args.kind, "method": args.method}
    closed = numeric = None
    if args.method in ("closed", "both"):
        if reduced is None:
            parser.error("--method closed needs the reduced --d/--e form")
        closed = f_reduced(reduced) if kind is ResolventKind.MATCHING else g_reduced(reduced)
        out["closed"] = _poly_strings(closed)
    if args.method in ("numeric", "both"):
        numeric = resolvent_numeric_in_frame(poly, kind, args.precision_bits)
        out["numeric"] = _poly_strings(numeric)
    if args.method == "both":
        diff = []
        for power in range(kind.degree, -1, -1):
            if closed[power] != numeric[power]:
                diff.append(
                    {"x_power": power, "closed": str(closed[power]), "numeric": str(numeric[power])}
                )
        out["diff"] = diff
    if args.roots:
        target = numeric if numeric is not None else closed
        out["rational_roots"] = [str(r) for r in sorted(rational_roots(target))]
    _emit(out, args.format)
    return 0


def _cmd_discriminant(args, parser) -> int:
    poly = _poly_from_args(args, parser)
    out = {"input": _poly_strings(poly), "exact": str(discriminant_exact(poly))}
    if args.coeffs is None:
        out["reduced_formula"] = str(discriminant_reduced(ReducedSextic(args.d, args.e)))
    _emit(out, args.format)
    return 0


def _cmd_audit(args, parser) -> int:
    kinds = [args.kind] if args.kind else ["j", "k"]
    documents = []
    for label in kinds:
        report = reconstruct_reduced(_KINDS[label], args.precision_bits)
        terms = []
        for (x_power, d_power, e_power), match in sorted(report.printed_match.items()):
            ref = _table_cell(report, x_power, d_power, e_power, reference=True)
            fit = _table_cell(report, x_power, d_power, e_power, reference=False)
            terms.append(
                {
                    "x_power": x_power,
                    "d_power": d_power,
                    "e_power": e_power,
                    "reference": ref,
                    "fitted": fit,
                    "match": match,
                }
            )
        documents.append(
            {
                "kind": label,
                "matches_reference": report.matches_reference(),
                "discrepancy_count": len(report.discrepancies),
                "notes": list(report.notes),
                "holdout_points": [list(pt) for pt in report.holdout_points],
                "terms": terms,
            }
        )
    if args.format == "json":
        print(json.dumps(documents))
        return 0
    for doc in documents:
        print(f"kind {doc['kind']}: matches reference: {doc['matches_reference']}")
        for note in doc["notes"]:
            print(f"  note: {note}")
        for term in doc["terms"]:
            if not term["match"]:
                print(
                    f"  x^{term['x_power']} d^{term['d_power']} e^{term['e_power']}: "
                    f"reference {term['reference']}, fitted {term['fitted']}"
                )
    return 0


def _table_cell(report, x_power, d_power, e_power, reference: bool) -> int:
    if reference:
        table = F_REFERENCE_TABLE if report.kind is ResolventKind.MATCHING else G_REFERENCE_TABLE
    else:
        table = report.fitted
    return table.get(x_power, {}).get((d_power, e_power), 0)


def _parse_range(text: str) -> list:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"range must be LO:HI or LO:HI:STEP, got {text!r}")
    lo, hi = Fraction(parts[0]), Fraction(parts[1])
    step = Fraction(parts[2]) if len(parts) == 3 else Fraction(1)
    if step <= 0:
        raise argparse.ArgumentTypeError("range step must be positive")
    out = []
    v = lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def _search_point(task):
    d, e, precision = task
    try:
        report = classify(ReducedSextic(d, e).to_poly(), precision)
    except SexticError as exc:
        return ("error", f"d={d} e={e}: {type(exc).__name__}: {exc}")
    if report.irreducible and report.solvable is Solvable.YES:
        line = {"d": str(d), "e": str(e), "report": _report_dict(report)}
        return ("hit", json.dumps(line))
    return ("miss", "")


def _cmd_search(args, parser) -> int:
    if args.quintic:
        if args.box is None:
            parser.error("--quintic needs --box N")
        for a, b in search_quintics(args.box, args.height_bound, args.precision_bits):
            params = params_from_ab(a, b, args.height_bound)
            print(
                json.dumps(
                    {
                        "a": str(a),
                        "b": str(b),
                        "params": {
                            "epsilon": params.epsilon,
                            "c": str(params.c),
                            "e": str(params.e),
                        },
                    }
                )
            )
        return 0
    if args.d_range is None or args.e_range is None:
        parser.error("provide --d-range and --e-range (or --quintic --box N)")
    tasks = [(d, e, args.precision_bits) for d in args.d_range for e in args.e_range]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_search_point, tasks, chunksize=8))
    else:
        results = [_search_point(t) for t in tasks]
    for status, payload in results:
        if status == "hit":
            print(payload)
        elif status == "error":
            print(payload, file=sys.stderr)
    return 0


def _cmd_quintic(args, parser) -> int:
    if args.params is not None:
        try:
            eps_s, c_s, e_s = args.params.split(",")
            params = QuinticParams(int(eps_s), Fraction(c_s), Fraction(e_s))
        except (ValueError, ZeroDivisionError) as exc:
            parser.error(f"bad --params (want eps,c,e): {exc}")
    else:
        if args.a is None or args.b is None:
            parser.error("provide --a and --b, or --params eps,c,e")
        if args.a == 0:
            parser.error("--a must be nonzero")
        params = params_from_ab(args.a, args.b, args.height_bound)
        if params is None:
            _emit(
                {
                    "a": str(args.a),
                    "b": str(args.b),
                    "found": False,
                    "height_bound": args.height_bound,
                },
                args.format,
            )
            return 0
    tower = radical_roots(params, args.precision_bits)
    out = {
        "a": str(tower.a),
        "b": str(tower.b),
        "found": True,
        "params": {"epsilon": params.epsilon, "c": str(params.c), "e": str(params.e)},
        "roots": [_complex_dict(z) for z in tower.roots],
        "residual": mp.nstr(tower.residual, 8),
    }
    _emit(out, args.format)
    return 0


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------


def _add_poly_flags(sub):
    sub.add_argument("--coeffs", type=_coeff_list, help="c6,c5,c4,c3,c2,c1,c0 with rationals as p/q")
    sub.add_argument("--d", type=_fraction, help="reduced-form linear coefficient")
    sub.add_argument("--e", type=_fraction, help="reduced-form constant coefficient")


def build_parser() -> _Parser:
    default_bits = int(os.environ.get("SEXTIC_PRECISION_BITS", "256"))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision-bits",
        type=int,
        default=default_bits,
        help="starting working precision (default 256, env SEXTIC_PRECISION_BITS)",
    )
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(prog="sextic", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", parents=[common], help="solvability report for a sextic")
    _add_poly_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = subs.add_parser(
        "resolvent", parents=[common], help="resolvent polynomial by closed form or root orbit"
    )
    _add_poly_flags(p)
    p.add_argument("--kind", choices=("j", "k"), required=True,
                   help="j: degree-15 matching resolvent, k: degree-10 partition resolvent")
    p.add_argument("--method", choices=("closed", "numeric", "both"), default="both")
    p.add_argument("--roots", action="store_true", help="also list rational roots")
    p.set_defaults(func=_cmd_resolvent)

    p = subs.add_parser(
        "discriminant", parents=[common], help="exact discriminant (and reduced-form formula)"
    )
    _add_poly_flags(p)
    p.set_defaults(func=_cmd_discriminant)

    p = subs.add_parser(
        "audit", parents=[common], help="re-derive closed-form tables and diff the transcription"
    )
    p.add_argument("--kind", choices=("j", "k"))
    p.set_defaults(func=_cmd_audit)

    p = subs.add_parser(
        "search", parents=[common], help="scan reduced sextics or Bring-Jerrard quintics"
    )
    p.add_argument("--d-range", type=_parse_range,
                   help="LO:HI[:STEP]; write --d-range=-3:3 for a negative LO")
    p.add_argument("--e-range", type=_parse_range,
                   help="LO:HI[:STEP]; write --e-range=-3:3 for a negative LO")
    p.add_argument("--quintic", action="store_true")
    p.add_argument("--box", type=int)
    p.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = subs.add_parser(
        "quintic", parents=[common], help="parameters and radical roots for x^5 + a x + b"
    )
    p.add_argument("--a", type=_fraction)
    p.add_argument("--b", type=_fraction)
    p.add_argument(
        "--params",
        help="eps,c,e with epsilon in {1,-1}, c > 0, e != 0; "
        "use --params=-1,1/2,1 for a leading minus",
    )
    p.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND)
    p.set_defaults(func=_cmd_quintic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, parser)
    except SystemExit as exc:  # parser.error inside a subcommand
        return int(exc.code or 0)
    except NumericFailure as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ZeroD, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
