"""Command-line front end: barely {count,expect,classify,scan,aq,verify}.

Exit status is 0 on success, 1 when a verification fails (or output cannot
be written) and 2 on usage errors such as an unparsable shape.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import aq, cde, qverify, tableaux
from .report import dumps, emit_report, rational
from .shapes import (
    SHIFTED,
    STRAIGHT,
    Diagram,
    DomainError,
    check_shape,
    classify,
    format_shape,
    make_family,
    parse_shape,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _kind(args) -> str:
    return SHIFTED if getattr(args, "shifted", False) else STRAIGHT


def _family_arg(text: str):
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x.strip())
    return int(text)


def _shape(args, kind: str | None = None):
    kind = kind or _kind(args)
    if getattr(args, "family", None):
        name, _, rest = args.family.partition(":")
        # "delta-sum:2,9,4", or ";"-separated when an argument is itself a shape
        parts = rest.split(";") if ";" in rest else rest.split(",")
        try:
            vals = [_family_arg(x) for x in parts if x.strip()]
            return check_shape(make_family(name.strip(), *vals), kind)
        except (ValueError, TypeError) as exc:
            if isinstance(exc, DomainError):
                raise
            raise UsageError(f"bad family {args.family!r}: {exc}") from None
    if args.shape is None:
        raise UsageError("--shape (or --family) is required")
    return parse_shape(args.shape, kind)


def _print(obj) -> None:
    print(dumps(obj))


# -- subcommands -----------------------------------------------------------------


def cmd_count(args) -> int:
    kind = _kind(args)
    lam = _shape(args)
    d = Diagram(kind, lam)
    if args.what == "syt":
        n = tableaux.count_syt_formula(lam, kind) if args.method == "formula" else tableaux.enumerate_syt(d)
    elif args.method == "formula":
        n = tableaux.count_sbt_shifted(lam) if kind == SHIFTED else tableaux.count_sbt_straight(lam)
    else:
        n = tableaux.enumerate_sbt(d).total
    print(n)
    return EXIT_OK


_EXPECT_METHODS = {
    "formula": ("dp", "formula"),
    "interval": ("enumerate", "chains"),
    "sbt": ("enumerate", "sbt"),
}


def cmd_expect(args) -> int:
    kind = _kind(args)
    lam = _shape(args)
    xm, ym = _EXPECT_METHODS[args.method]
    ex = cde.expectations(lam, kind, xm, ym)
    _print({"E_X": rational(ex.e_x), "E_Y": rational(ex.e_y), "cde": ex.cde})
    return EXIT_OK


def cmd_classify(args) -> int:
    kind = _kind(args)
    lam = _shape(args)
    cls = classify(lam, kind)
    cf = cde.closed_form(lam, kind)
    _print(
        {
            "shape": format_shape(lam),
            "kind": kind,
            "classification": cls.label,
            "predicted_cde": cls.predicted_cde,
            "closed_form": None if cf is None else rational(cf.value),
            "sources": [] if cf is None else list(cf.sources),
        }
    )
    return EXIT_OK


def cmd_scan(args) -> int:
    kind = _kind(args)
    bad = []

    def report(rec):
        bad.append(rec)
        print(
            f"counterexample: {format_shape(rec.shape)} E_X={rational(rec.e_x)} "
            f"E_Y={rational(rec.e_y)} classification={rec.classification}",
            file=sys.stderr,
            flush=True,
        )

    records = cde.scan(args.max_size, kind, args.jobs, args.min_size, report)
    try:
        if args.out:
            with open(args.out, "w", newline="") as fh:
                n = emit_report(records, args.format, fh)
        else:
            n = emit_report(records, args.format, sys.stdout)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"{n} shapes, {len(bad)} counterexamples", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_aq(args) -> int:
    lam = _shape(args, STRAIGHT)
    e = aq.aq_expect(lam)
    out = {"shape": format_shape(lam), "expect": str(e.reduced()), "expect_terms": e.reduced().to_json()}
    code = EXIT_OK
    if args.check_conjecture:
        v = aq.verify_conjecture(lam)
        out.update(
            {
                "balanced": v.balanced,
                "product": str(v.product.reduced()),
                "equal": v.equal,
                "forms_agree": v.forms_agree,
                "conjugate_equal": v.conjugate_equal,
            }
        )
        if v.balanced and not v.equal:
            code = EXIT_MISMATCH
    _print(out)
    return code


def _parse_value(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return Fraction(text)


def _from_json(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, list):
        return [_from_json(x) for x in v]
    return v


def parse_params(text: str | None) -> dict:
    """Either a JSON object or "k=v,k=v" with integer or fraction values."""
    if not text:
        return {}
    text = text.strip()
    try:
        if text.startswith("{"):
            return {k: _from_json(v) for k, v in json.loads(text).items()}
        out = {}
        for item in text.split(","):
            k, sep, v = item.partition("=")
            if not sep:
                raise UsageError(f"bad parameter {item!r}; expected key=value")
            out[k.strip()] = _parse_value(v)
        return out
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse parameters {text!r}: {exc}") from None


def _q_pairs(params: dict) -> dict:
    # q-parameters arrive as [coef, exponent] lists
    return {k: tuple(v) if isinstance(v, list) else v for k, v in params.items()}


def cmd_verify(args) -> int:
    results = []
    if args.identity:
        params = _q_pairs(parse_params(args.params))
        try:
            results.append(qverify.check_identity(args.identity, params))
        except TypeError as exc:
            raise UsageError(f"bad parameters for {args.identity}: {exc}") from None
    elif args.bijection:
        results.append(qverify.check_bijection(args.bijection, _shape(args, SHIFTED)))
    elif args.integrals:
        results.extend(qverify.check_integral_formulas(_shape(args, SHIFTED), args.i))
    elif args.lemmas:
        results.extend(qverify.check_lemmas(_shape(args, SHIFTED)))
    elif args.alternant:
        lam = _shape(args, SHIFTED)
        nu = [int(x) for x in args.nu.split(",")] if args.nu else []
        results.append(qverify.check_gf_alternant(lam, nu, args.order))
    else:
        raise UsageError("choose one of --identity, --bijection, --integrals, --lemmas, --alternant")
    for r in results:
        _print(r.to_json())
    return EXIT_OK if all(r.equal for r in results) else EXIT_MISMATCH


# -- parser ---------------------------------------------------------------------------


def _add_shape(p, shifted=True):
    p.add_argument("--shape", help='parts separated by commas, e.g. "4,2"')
    p.add_argument("--family", help='named family with integer arguments, e.g. "delta-sum:2,9,4"')
    if shifted:
        p.add_argument("--shifted", action="store_true", help="treat the shape as a shifted diagram")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="barely", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count standard or barely set-valued tableaux")
    _add_shape(p)
    p.add_argument("--what", choices=["syt", "sbt"], default="syt")
    p.add_argument("--method", choices=["formula", "enumerate"], default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("expect", help="down-degree expectations E(X) and E(Y)")
    _add_shape(p)
    p.add_argument("--method", choices=sorted(_EXPECT_METHODS), default="formula")
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("classify", help="shape classification and predicted closed form")
    _add_shape(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="check CDE against the predicted families for all shapes")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--min-size", type=int, default=1)
    p.add_argument("--shifted", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output is identical for any value")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("aq", help="the a;q-weighted expectation as a rational function")
    _add_shape(p, shifted=False)
    p.add_argument("--check-conjecture", action="store_true")
    p.set_defaults(func=cmd_aq)

    p = sub.add_parser("verify", help="exact identity, bijection and integral checks")
    _add_shape(p, shifted=False)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--identity", choices=sorted(list(qverify.SHAPE_IDENTITIES) + list(qverify.CLASSICAL)))
    g.add_argument("--bijection", choices=["k2", "k1", "diag"])
    g.add_argument("--integrals", action="store_true")
    g.add_argument("--lemmas", action="store_true")
    g.add_argument("--alternant", action="store_true")
    p.add_argument("--params", help='"k=v,..." or a JSON object; q-parameters as [coef, exponent]')
    p.add_argument("--i", type=int, help="single index for --integrals")
    p.add_argument("--nu", help="diagonal partition for --alternant")
    p.add_argument("--order", type=int, default=20, help="series truncation for --alternant")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)
