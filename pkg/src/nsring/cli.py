"""Command-line entry point: ``nsring <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import degrees, endo, herzog, roots, scan
from .errors import NsringError
from .ideal import RelativeIdeal
from .semigroup import NumericalSemigroup

EXIT_USAGE = 1


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _semigroup(text: str) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(_int_list(text))


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print("\n".join(lines))


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


# -- subcommands -------------------------------------------------------------

def cmd_info(args) -> int:
    H = _semigroup(args.generators)
    payload = {
        "generators": list(H.generators),
        "F": H.frobenius,
        "c": H.conductor,
        "genus": H.genus,
        "gaps": list(H.gaps),
        "PF": list(H.pseudo_frobenius),
        "type": H.type,
        "multiplicity": H.multiplicity,
        "symmetric": H.is_symmetric,
    }
    _emit(args, payload, [f"{k:>12}: {v}" for k, v in payload.items()])
    return 0


def _apply_op(E: RelativeIdeal, op: str):
    H = E.semigroup
    name, _, arg = op.partition(":")
    if name == "bidual":
        return E.bidual()
    if name == "trace":
        return E.trace()
    if name == "normalize":
        return E.normalize()
    if name == "mingens":
        return E.minimal_generators
    if name == "colon":
        return E.colon(RelativeIdeal.from_generators(H, _int_list(arg)))
    if name == "power":
        return E.power(int(arg))
    raise NsringError(f"unknown op {op!r}")


def cmd_ideal(args) -> int:
    H = _semigroup(args.generators)
    E = RelativeIdeal.from_generators(H, _int_list(args.ideal))
    result = _apply_op(E, args.op)
    if isinstance(result, tuple):
        payload = {"semigroup": list(H.generators), "ideal": str(E), "op": args.op,
                   "mingens": list(result)}
        _emit(args, payload, [_fmt_set(result)])
        return 0
    payload = {
        "semigroup": list(H.generators),
        "ideal": str(E),
        "op": args.op,
        "result": str(result),
        "small_values": list(result.small_values()),
        "conductor": result.conductor,
    }
    _emit(args, payload, [str(result)])
    return 0


def cmd_degrees(args) -> int:
    H = _semigroup(args.generators)
    rep = degrees.degree_report(H)
    d = rep.to_dict()
    _emit(args, d, [f"{k:>18}  {v}" for k, v in d.items()])
    return 0


def cmd_roots(args) -> int:
    H = _semigroup(args.generators)
    ws = roots.rootset(H, args.guard)
    payload = {
        "generators": list(H.generators),
        "rootset": [w.exponent for w in ws],
        "witnesses": [w.to_dict() for w in ws],
    }
    lines = [f"rootset of {H}: {_fmt_set(payload['rootset'])}"]
    lines += [f"  tau={w.exponent}  L={w.ideal}  red(L)={w.red_L}" for w in ws]
    _emit(args, payload, lines)
    return 0


def cmd_endo(args) -> int:
    H = _semigroup(args.generators)
    H2 = endo.endo_semigroup(H)
    tc = endo.tcdeg_identity(H)
    ec = endo.endo_checks(H)
    payload = {
        "generators": list(H.generators),
        "endo_generators": list(H2.generators),
        "endo_report": degrees.degree_report(H2).to_dict(),
        "tcdeg": {"lhs": tc.lhs, "rhs": tc.rhs, "ok": tc.ok, "applicable": tc.applicable},
        "nu_A": ec.nu_A,
        "nu_ok": ec.nu_ok,
        "canonical_of_endo_ok": ec.canonical_of_endo_ok,
        "red_D": ec.red_D,
        "applicable": ec.applicable,
    }
    lines = [f"m:m of {H} is {H2}"]
    lines += [f"  {k:>18}  {v}" for k, v in payload["endo_report"].items()]
    lines.append(f"cdeg(A) = {tc.lhs}, cdeg(R) + e0(m) - 2r = {tc.rhs}: {'ok' if tc.ok else 'FAIL'}")
    lines.append(f"nu(A) = {ec.nu_A} (r+1 = {H.type + 1}): {'ok' if ec.nu_ok else 'FAIL'}")
    lines.append(f"mK canonical over m:m: {ec.canonical_of_endo_ok}, red(D) = {ec.red_D}")
    _emit(args, payload, lines)
    return 0


def cmd_herzog(args) -> int:
    cf = herzog.closed_form_degrees(args.a, args.b, args.c)
    d = cf.to_dict()
    h = cf.herzog
    lines = [
        f"<{args.a},{args.b},{args.c}>: a1={h.a1} a2={h.a2} b1={h.b1} b2={h.b2} c1={h.c1} c2={h.c2}",
        f"cdeg:  formula a2*b2*c2 = {cf.cdeg_formula}, engine = {cf.cdeg_engine}, match = {cf.cdeg_match}",
        f"bideg: formula a1*b2*c2 = {cf.bideg_formula}, engine = {cf.bideg_engine}, match = {cf.bideg_match}",
    ]
    if h.multiple_solutions:
        lines.append(f"multiple consistent exponent sets: {h.solutions}")
    _emit(args, d, lines)
    return 0


def cmd_herzog_corpus(args) -> int:
    summary = herzog.corpus_summary(args.max_frobenius)
    lines = [f"3-generated non-symmetric semigroups with F <= {args.max_frobenius}"]
    lines += [f"  {k:>26}  {v}" for k, v in summary["counts"].items()]
    _emit(args, summary, lines)
    return 0


def cmd_scan(args) -> int:
    if args.checks is None:
        checks = scan.DEFAULT_CHECKS
    elif args.checks == "all":
        checks = scan.ALL_CHECKS
    else:
        checks = tuple(c for c in args.checks.split(",") if c)
    config = scan.ScanConfig(
        max_genus=args.max_genus,
        checks=checks,
        out=Path(args.out),
        format=args.format,
        strict=args.strict,
        jobs=args.jobs,
    )
    summary = scan.run_scan(config)
    if args.json:
        print(json.dumps(summary))
    else:
        print(f"rows written: {summary['rows_written']} -> {args.out}")
        for name, n in summary["violations_by_check"].items():
            print(f"  {name:>16}: {n} violation(s)")
        print(f"conjecture counterexamples: {len(summary['conjecture_counterexamples'])}")
        for prov in summary["conjecture_counterexamples"]:
            print("  " + json.dumps(prov))
    return summary["exit_code"]


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsring", description="Invariants of numerical semigroup rings.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(func=func)
        return sp

    sp = add("info", cmd_info, "basic data of H")
    sp.add_argument("generators", help="e.g. 5,7,9")

    sp = add("ideal", cmd_ideal, "relative ideal arithmetic")
    sp.add_argument("generators")
    sp.add_argument("--ideal", required=True, help="generators of the ideal, e.g. 0,2")
    sp.add_argument("--op", required=True,
                    help="bidual | trace | colon:<w,..> | power:<n> | mingens | normalize")

    sp = add("degrees", cmd_degrees, "cdeg, bideg, tdeg, rho, e1, ...")
    sp.add_argument("generators")

    sp = add("roots", cmd_roots, "rootset of the canonical ideal (monomial roots)")
    sp.add_argument("generators")
    sp.add_argument("--guard", type=int, default=roots.DEFAULT_GUARD, help="largest genus to search")

    sp = add("endo", cmd_endo, "the ring m:m and its identities")
    sp.add_argument("generators")

    sp = add("herzog", cmd_herzog, "Herzog matrix exponents and closed forms")
    for name in "abc":
        sp.add_argument(name, type=int)

    sp = add("herzog-corpus", cmd_herzog_corpus, "closed-form verdicts over 3-generated semigroups")
    sp.add_argument("--max-frobenius", type=int, default=30)

    sp = add("scan", cmd_scan, "scan all semigroups up to a genus bound")
    sp.add_argument("--max-genus", type=int, default=10)
    sp.add_argument("--checks", default=None,
                    help=f"comma-separated subset of {','.join(scan.ALL_CHECKS)}, or 'all'")
    sp.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sp.add_argument("--out", required=True)
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, argparse.ArgumentTypeError, OSError) as exc:
        # NsringError is a ValueError
        print(f"nsring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
