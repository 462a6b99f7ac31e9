"""Command-line front end.

Exit codes: 0 success, 1 a duality verdict failed, 2 inadmissible Euler or
flux number, 3 invalid (or, where K-theory is required, torsion) base,
4 bad parameters or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial

from . import __version__
from .ahss import twisted_k, untwisted_k
from .catalog import get_base, load_base_file
from .chern import ChernContext, d_squared_check, odd_series_coefficients, twisted_closure_sign
from .errors import (BadArguments, BadTruncation, InadmissibleEuler, InvalidBase,
                     TorsionBase, TwistKError)
from .fgab import AbelianGroup
from .graded import parity_parts, twisted_cohomology
from .gysin import BundleWithFlux, total_space_cohomology
from .tduality import DualityReport, dualize, verify_cohomology_duality, verify_k_duality

EXIT_OK, EXIT_VERDICT, EXIT_ADMISSIBILITY, EXIT_BASE, EXIT_PARAMS = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twistk", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def bundle_args(p, need_h):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--base", help="catalog name, e.g. S6 or S2xS4")
        src.add_argument("--base-file", help="JSON base description")
        p.add_argument("--n", type=int, help="half dimension of the base (checked)")
        p.add_argument("--e", type=int, required=True, help="Euler number")
        p.add_argument("--h", type=int, default=0 if not need_h else None,
                       required=need_h, help="flux number")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    bundle_args(sub.add_parser("bundle-cohomology", help="H^*(Z; Z) degree by degree"), False)
    bundle_args(sub.add_parser("twisted", help="twisted cohomology and twisted K"), True)
    bundle_args(sub.add_parser("tdual", help="spherical T-dual and duality verdicts"), True)

    p = sub.add_parser("chern-verify", help="check the formal Chern-character identities")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("batch", help="run a JSON list of argument lists")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=4)
    return parser


def _bundle(args) -> BundleWithFlux:
    base = load_base_file(args.base_file) if args.base_file else get_base(args.base)
    if args.n is not None and args.n != base.half_dim:
        raise BadArguments(f"--n {args.n} does not match {base.name} (n={base.half_dim})")
    return BundleWithFlux(base, e=args.e, h=args.h)


def _inputs(B: BundleWithFlux) -> dict:
    return {"base": B.base.name, "n": B.n, "e": B.e, "h": B.h}


def _report(r: DualityReport) -> dict:
    return {"lhs_even": r.lhs_even, "lhs_odd": r.lhs_odd,
            "rhs_even": r.rhs_even, "rhs_odd": r.rhs_odd, "ok": r.ok}


def cmd_bundle_cohomology(args) -> dict:
    B = _bundle(args)
    HZ = total_space_cohomology(B)
    even, odd = parity_parts(HZ)
    return {
        "command": "bundle-cohomology",
        "inputs": _inputs(B),
        "results": {
            "degrees": [{"degree": d, "group": g} for d, g in enumerate(HZ.groups)],
            "even": even,
            "odd": odd,
        },
    }


def cmd_twisted(args) -> dict:
    B = _bundle(args)
    HZ = total_space_cohomology(B)
    even_H, odd_H = twisted_cohomology(HZ, B.h)
    results = {"twisted_cohomology": {"even": even_H, "odd": odd_H},
               "twisted_k": None, "agree": None, "notice": None}
    if B.base.torsion_free:
        K0, K1 = twisted_k(HZ, B.n, B.h)
        results["twisted_k"] = {"K0": K0, "K1": K1}
        results["agree"] = K0 == even_H and K1 == odd_H
        if B.h == 0:
            Keven, Kodd = untwisted_k(HZ, B.n)
            results["untwisted_k"] = {"Keven": Keven, "Kodd": Kodd}
    else:
        results["notice"] = "base has torsion: twisted K-theory not computed"
    return {"command": "twisted", "inputs": _inputs(B), "results": results}


def cmd_tdual(args) -> dict:
    B = _bundle(args)
    dual = dualize(B)
    coh = verify_cohomology_duality(B)
    kth = verify_k_duality(B)
    return {
        "command": "tdual",
        "inputs": _inputs(B),
        "results": {
            "dual": {"e": dual.e, "h": dual.h},
            "cohomology": _report(coh),
            "ktheory": _report(kth),
            "ok": coh.ok and kth.ok,
        },
    }


def cmd_chern_verify(args) -> dict:
    ctx = ChernContext(args.k, args.N)
    eps = twisted_closure_sign(ctx)
    seeds = [Fraction(1, factorial(m)) for m in range(1, ctx.k + 1)]
    odd = odd_series_coefficients(ctx, eps, seeds)
    factorial_ok = all(a == Fraction(1, factorial(n)) for n, a in enumerate(odd.coefficients, 1))
    return {
        "command": "chern-verify",
        "inputs": {"k": ctx.k, "N": ctx.N},
        "results": {
            "d_squared_zero": d_squared_check(ctx),
            "closure_sign": eps,
            "stated_sign": 1,
            "sign_agrees": eps == 1,
            "odd_coefficients": list(odd.coefficients),
            "odd_series_closes": odd.closes,
            "odd_coefficients_are_inverse_factorials": factorial_ok,
            "lambda_weighted_closes": odd.lambda_weighted_closes,
            "lambda_weighted_first_failure": odd.first_failure,
        },
    }


COMMANDS = {
    "bundle-cohomology": cmd_bundle_cohomology,
    "twisted": cmd_twisted,
    "tdual": cmd_tdual,
    "chern-verify": cmd_chern_verify,
}


# -- serialisation ----------------------------------------------------------

def _encode(obj):
    if isinstance(obj, AbelianGroup):
        return obj.to_dict()
    if isinstance(obj, Fraction):
        return {"fraction": str(obj)}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _decode(doc: dict):
    if set(doc) == {"rank", "torsion"}:
        return AbelianGroup.from_dict(doc)
    if set(doc) == {"fraction"}:
        return Fraction(doc["fraction"])
    return doc


def dumps(document) -> str:
    return json.dumps(document, default=_encode, indent=2)


def loads(text: str):
    return json.loads(text, object_hook=_decode)


def exit_code_for(document: dict) -> int:
    if document.get("command") == "tdual" and not document["results"]["ok"]:
        return EXIT_VERDICT
    return EXIT_OK


def _exit_code_for_error(exc: Exception) -> int:
    if isinstance(exc, InadmissibleEuler):
        return EXIT_ADMISSIBILITY
    if isinstance(exc, (InvalidBase, TorsionBase)):
        return EXIT_BASE
    return EXIT_PARAMS


# -- text rendering ---------------------------------------------------------

def _table(rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def render_text(doc: dict) -> str:
    cmd, inp, res = doc["command"], doc["inputs"], doc["results"]
    head = " ".join(f"{k}={v}" for k, v in inp.items())
    lines = [f"{cmd}: {head}"]
    if cmd == "bundle-cohomology":
        rows = [("degree", "group", "rank", "torsion")]
        for row in res["degrees"]:
            g = row["group"]
            rows.append((str(row["degree"]), str(g), str(g.rank),
                         ",".join(map(str, g.torsion)) or "-"))
        lines += [_table(rows), f"even: {res['even']}", f"odd:  {res['odd']}"]
    elif cmd == "twisted":
        tc = res["twisted_cohomology"]
        rows = [("invariant", "even", "odd"), ("H_h", str(tc["even"]), str(tc["odd"]))]
        if res["twisted_k"] is not None:
            tk = res["twisted_k"]
            rows.append(("K_h", str(tk["K0"]), str(tk["K1"])))
        if "untwisted_k" in res:
            uk = res["untwisted_k"]
            rows.append(("K", str(uk["Keven"]), str(uk["Kodd"])))
        lines.append(_table(rows))
        if res["agree"] is not None:
            lines.append(f"agree: {str(res['agree']).lower()}")
        if res["notice"]:
            lines.append(f"notice: {res['notice']}")
    elif cmd == "tdual":
        lines.append(f"dual: e={res['dual']['e']} h={res['dual']['h']}")
        rows = [("invariant", "Z even", "Z odd", "dual even", "dual odd", "verdict")]
        for name in ("cohomology", "ktheory"):
            r = res[name]
            rows.append((name, str(r["lhs_even"]), str(r["lhs_odd"]), str(r["rhs_even"]),
                         str(r["rhs_odd"]), "ok" if r["ok"] else "FAIL"))
        lines.append(_table(rows))
    elif cmd == "chern-verify":
        coeffs = ", ".join(str(a) for a in res["odd_coefficients"])
        lines += [
            f"d^2 = 0: {str(res['d_squared_zero']).lower()}",
            f"closure sign: {res['closure_sign']:+d} (stated +1: "
            f"{'agrees' if res['sign_agrees'] else 'DISAGREES'})",
            f"odd coefficients: {coeffs}",
            f"odd series closes: {str(res['odd_series_closes']).lower()}",
            f"lambda(n,k)/n! weights close: {str(res['lambda_weighted_closes']).lower()}"
            + (f" (first failure at m={res['lambda_weighted_first_failure']})"
               if res["lambda_weighted_first_failure"] else ""),
        ]
    return "\n".join(lines)


# -- entry points -----------------------------------------------------------

def execute(argv: list[str]) -> tuple[int, dict | None, str | None]:
    """Run one command; returns ``(exit code, document, error message)``."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT_PARAMS, None, f"usage error: {exc}"
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0), None, None
    if args.command == "batch":
        return EXIT_PARAMS, None, "batch cannot be nested"
    try:
        doc = COMMANDS[args.command](args)
    except TwistKError as exc:
        return _exit_code_for_error(exc), None, f"{type(exc).__name__}: {exc}"
    return exit_code_for(doc), doc, None


def _run_batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            requests = json.load(fh)
        if not isinstance(requests, list) or not all(
                isinstance(r, list) and all(isinstance(a, str) for a in r) for r in requests):
            raise ValueError("expected a JSON list of argument lists")
    except (OSError, ValueError) as exc:
        print(f"batch: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        outcomes = list(pool.map(execute, requests))
    out = [{"argv": argv, "exit": code, "document": doc, "error": err}
           for argv, (code, doc, err) in zip(requests, outcomes)]
    print(dumps(out))
    return next((code for code, _, _ in outcomes if code), EXIT_OK)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"twistk: usage error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    if args.command == "batch":
        return _run_batch(args)
    code, doc, err = execute(argv)
    if err:
        print(err, file=sys.stderr)
        return code
    print(dumps(doc) if args.json else render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
