"""Command-line front end.

Machine output is JSON on stdout (or ``--out``); human summaries go to
stderr.  Exit codes: 0 success or affirmative verdict, 1 negative verdict,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, families
from .digraph import DigraphError, parse_graph
from .spectral import SCHEMA, InvariantViolation, profile
from .swr import DEFAULT_LMAX, DIRECT, DIVISIBILITY, SwrCertificate, check_direct, check_divisibility, exponent_set

EXIT_OK, EXIT_NO, EXIT_ERR = 0, 1, 2


class InputError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str):
    try:
        return parse_graph(_read(path))
    except DigraphError as e:
        raise InputError(f"{path}: {e}") from None


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_construct(args) -> int:
    try:
        spec = families.parse_family(args.family)
        g = families.build(spec)
        facts = families.expected_facts(spec)
    except families.FamilyError as e:
        raise InputError(str(e)) from None
    _emit(g.to_text(args.format), args.out)
    print(f"{args.family}: {json.dumps(facts.summary(), sort_keys=True)}", file=sys.stderr)
    return EXIT_OK


def cmd_analyze(args) -> int:
    p = profile(_load(args.path))
    _emit(dumps(p.to_json()), args.out)
    return EXIT_OK


def _certify(g, l: int) -> SwrCertificate | None:
    """Certificate from both routes when a Hoffman polynomial exists; they must agree."""
    d = check_direct(g, l)
    p = profile(g)
    if p.hoffman is None:
        return d
    w = check_divisibility(p, l)
    if (d is None) != (w is None) or (d is not None and d.params != w.certificate().params):
        raise InvariantViolation(f"direct and divisibility checks disagree at l={l}")
    return None if d is None else SwrCertificate(l, d.lam, d.mu, d.nu, (DIVISIBILITY, DIRECT))


def cmd_check(args) -> int:
    if args.l <= 1:
        raise InputError("walk length must exceed 1")
    cert = _certify(_load(args.path), args.l)
    if cert is None:
        _emit(dumps({"schema": SCHEMA, "kind": "verdict", "l": args.l, "strongly_walk_regular": False}), args.out)
        return EXIT_NO
    _emit(dumps(cert.to_json()), args.out)
    return EXIT_OK


def cmd_exponents(args) -> int:
    if args.lmax < 2:
        raise InputError("--lmax must be at least 2")
    exps = exponent_set(_load(args.path), args.lmax)
    _emit(dumps(exps.to_json()), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        flt = census.EnumFilter(args.n, args.k, args.strongly_connected, allow_large=args.allow_large)
    except census.CensusLimitError as e:
        raise InputError(str(e)) from None
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", encoding="utf-8")
    count = 0
    try:
        for rec in census.enumerate_census(flt, args.lmax, args.jobs):
            out.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
            count += 1
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"{count} isomorphism classes", file=sys.stderr)
    return EXIT_OK


def _parse_params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise InputError(f"parameter must be key=value, got {item!r}")
        try:
            out[key] = json.loads(val)
        except json.JSONDecodeError:
            out[key] = val.split(",") if key == "extra" else val
    return out


def cmd_verify(args) -> int:
    if args.claim == "list":
        for name in census.claim_names():
            print(name, json.dumps(census.claim_defaults(name), sort_keys=True))
        return EXIT_OK
    try:
        rep = census.verify_claim(args.claim, _parse_params(args.param), jobs=args.jobs)
    except (census.UnknownClaim, ValueError) as e:
        raise InputError(str(e).strip("'\"")) from None
    _emit(dumps(rep.to_json()), args.out)
    print(f"{args.claim}: {'pass' if rep.passed else 'FAIL'} {json.dumps(rep.counts, sort_keys=True)}", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dswr", description="Strongly walk-regular digraph toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def out_flag(p):
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("construct", help="build a digraph from a family spec")
    p.add_argument("family", help="e.g. cycle:g=6, lvl-odd:m=3,k=2, blowup-complement:base=mate:1,q=3")
    p.add_argument("--format", choices=("matrix", "edges"), default="matrix")
    out_flag(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="spectral profile of a graph file")
    p.add_argument("path", help="graph file, or - for stdin")
    out_flag(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="decide strong l-walk-regularity")
    p.add_argument("path")
    p.add_argument("l", type=int)
    out_flag(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("exponents", help="all admissible l up to a bound")
    p.add_argument("path")
    p.add_argument("--lmax", type=int, default=DEFAULT_LMAX)
    out_flag(p)
    p.set_defaults(func=cmd_exponents)

    p = sub.add_parser("enumerate", help="census of k-regular digraphs as NDJSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strongly-connected", action="store_true")
    p.add_argument("--lmax", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help=f"raise the size limit to {census.OVERRIDE_MAX_N}")
    out_flag(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a registered claim ('list' shows them)")
    p.add_argument("claim")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="override a claim parameter")
    p.add_argument("--jobs", type=int, default=1)
    out_flag(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERR


if __name__ == "__main__":
    sys.exit(main())
