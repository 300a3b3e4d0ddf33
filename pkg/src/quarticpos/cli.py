"""Command-line front end.

    quarticpos check 1 0 0 0 1
    quarticpos invariants --json "1 0 1/3 0 1"
    quarticpos verify
    quarticpos fuzz --count 1000 --seed 7 --profile uniform
    quarticpos transform 1 0 0 0 1 --matrix 2,0,0,1
    quarticpos diagrams

Exit status for ``check``: 0 positive, 1 not positive, 2 bad input or
internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .algebra import format_rational
from .invariants import FormCoefficients, compute_invariants
from .oracle import PROFILES, read_forms
from .positivity import TheoremDisagreement, decide
from .tensor import BasisChange, diagram_listing
from .verify import criterion_equivalence_fuzz, law_comparison, run_identity_suite, transformed_form

EXIT_POSITIVE, EXIT_NOT_POSITIVE, EXIT_ERROR = 0, 1, 2

# argparse takes "-1/3" for an option; a leading space keeps it positional
_NEG_FRACTION = re.compile(r"^-\d+/\d+$")


class InputError(Exception):
    pass


def _fmt(v) -> str:
    return "-" if v is None else format_rational(v)


def _form_from_tokens(tokens, monomial: bool) -> FormCoefficients:
    text = " ".join(tokens)
    try:
        form = FormCoefficients.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return FormCoefficients.from_monomial(*form) if monomial else form


def _forms(args) -> list[FormCoefficients]:
    if args.file:
        if args.coeffs:
            raise InputError("give coefficients inline or with --file, not both")
        try:
            forms = read_forms(args.file)
        except (OSError, ValueError) as exc:
            raise InputError(str(exc)) from None
        return [FormCoefficients.from_monomial(*f) if args.monomial else f for f in forms]
    if not args.coeffs:
        raise InputError("no coefficients given")
    return [_form_from_tokens(args.coeffs, args.monomial)]


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_check(args) -> int:
    records, status = [], EXIT_POSITIVE
    for form in _forms(args):
        try:
            verdict = decide(form)
        except TheoremDisagreement as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if not verdict.positive:
            status = EXIT_NOT_POSITIVE
        if args.json:
            records.append({"form": [format_rational(a) for a in form], "version": __version__,
                            **verdict.to_record()})
            continue
        word = "positive" if verdict.positive else "not positive"
        print(f"{form}: {word} ({verdict.path})")
        if args.invariants:
            for key, value in verdict.invariants.to_record().items():
                print(f"  {key} = {'-' if value is None else value}")
    if args.json:
        _emit_json(records[0] if len(records) == 1 and not args.file else records)
    return status


def cmd_invariants(args) -> int:
    records = []
    for form in _forms(args):
        record = compute_invariants(form).to_record()
        if args.json:
            records.append({"form": [format_rational(a) for a in form], "version": __version__,
                            "invariants": record})
            continue
        print(form)
        for key, value in record.items():
            print(f"  {key} = {'-' if value is None else value}")
    if args.json:
        _emit_json(records[0] if len(records) == 1 and not args.file else records)
    return 0


def cmd_verify(args) -> int:
    report = run_identity_suite()
    if args.json:
        _emit_json({"version": __version__, **report.to_record()})
    else:
        print(report.render(timings=args.timings))
    return 0 if report.ok else 1


def cmd_fuzz(args) -> int:
    report = criterion_equivalence_fuzz(args.count, args.seed, args.profile, fixture_path=args.fixtures)
    if args.json:
        _emit_json({
            "version": __version__, "profile": args.profile, "seed": args.seed,
            "tested": report.tested, "positive": report.positives,
            "disagreements": [{"index": i, "form": [format_rational(a) for a in c],
                               "T41": t41, "T42": t42, "oracle": truth}
                              for i, c, t41, t42, truth in report.disagreements],
            "seconds": round(report.seconds, 3),
        })
    else:
        if args.list or args.profile == "boundary":
            from .verify import check_form
            from .oracle import FormGenerator, form_at
            gen = FormGenerator(args.seed, args.profile)
            for i in range(args.count):
                c = form_at(gen, i)
                t41, t42, truth = check_form(c)
                print(f"{i:>6}  {c}: T41={t41} T42={t42} oracle={truth}")
        print(f"{report.tested} tested, {len(report.disagreements)} disagreements "
              f"({report.positives} positive, {report.rate:.0f} forms/s)")
        for i, c, t41, t42, truth in report.disagreements:
            print(f"  index {i}: {c}  T41={t41} T42={t42} oracle={truth}")
        if report.disagreements:
            print(f"failing forms appended to {args.fixtures}")
    return 0 if report.ok else 1


def _parse_matrix(text: str) -> BasisChange:
    tokens = text.replace(",", " ").split()
    if len(tokens) != 4:
        raise InputError("--matrix needs four entries a,b,c,d (row-major S)")
    try:
        entries = FormCoefficients.parse(" ".join(tokens + ["0"])).as_tuple()[:4]
    except ValueError as exc:
        raise InputError(f"bad matrix entry: {exc}") from None
    try:
        return BasisChange.from_entries(*entries)
    except ValueError as exc:
        raise InputError(f"singular matrix: {exc}") from None


def cmd_transform(args) -> int:
    basis = _parse_matrix(args.matrix)
    records, status = [], 0
    for form in _forms(args):
        new = transformed_form(form, basis)
        laws = law_comparison(form, basis)
        try:
            before, after = decide(form).positive, decide(new).positive
        except TheoremDisagreement as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        held = all(v[3] for v in laws.values()) and before == after
        status = status if held else 1
        if args.json:
            records.append({
                "version": __version__,
                "form": [format_rational(a) for a in form],
                "matrix": [format_rational(x) for row in basis.S for x in row],
                "transformed": [format_rational(a) for a in new],
                "detS": format_rational(basis.detS),
                "laws": {k: {"old": _fmt(o), "new": _fmt(n), "factor": _fmt(f), "holds": h}
                         for k, (o, n, f, h) in laws.items()},
                "positive": {"old": before, "new": after},
            })
            continue
        print(f"form:        {form}")
        print(f"transformed: {new}")
        print(f"det S = {format_rational(basis.detS)}")
        for k, (o, n, f, h) in laws.items():
            print(f"  {k:<5} {_fmt(o)} -> {_fmt(n)}  factor (det S)^m = {_fmt(f)}  "
                  f"{'law holds' if h else 'LAW BROKEN'}")
        print(f"  positive {before} -> {after}")
    if args.json:
        _emit_json(records[0] if len(records) == 1 and not args.file else records)
    return status


def cmd_diagrams(args) -> int:
    print(diagram_listing())
    return 0


def _positive_count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("count must be at least 1")
    return n


def _seed(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quarticpos",
                                     description="Positivity of binary quartic forms.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", action="store_true", help="structured output")

    form = argparse.ArgumentParser(add_help=False)
    form.add_argument("coeffs", nargs="*", help="A1111 A1112 A1122 A1222 A2222 (rationals)")
    form.add_argument("--file", metavar="PATH", help="one form per line, '#' comments")
    form.add_argument("--monomial", action="store_true",
                      help="inputs are monomial coefficients; divide by 1,4,6,4,1")

    p = sub.add_parser("check", parents=[out, form], help="decide positivity")
    p.add_argument("--invariants", action="store_true", help="also print every parameter")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", parents=[out, form], help="print every parameter")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", parents=[out], help="run the identity suite")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", parents=[out], help="compare both criteria with the Sturm oracle")
    p.add_argument("--count", type=_positive_count, default=1000)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--profile", choices=PROFILES, default="uniform")
    p.add_argument("--fixtures", default="fuzz-failures.txt", metavar="PATH",
                   help="where disagreeing forms are appended")
    p.add_argument("--list", action="store_true", help="print every form with its verdicts")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("transform", parents=[out, form], help="change basis and compare invariants")
    p.add_argument("--matrix", required=True, metavar="a,b,c,d",
                   help="direct transition matrix S, row-major")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("diagrams", help="dump the contraction-diagram table")
    p.set_defaults(func=cmd_diagrams)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEG_FRACTION.match(a) else a for a in argv]
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
