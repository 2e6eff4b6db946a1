"""Command-line front end.

Exit codes: 0 on success, 1 on input or domain errors (including bad
flags), 2 when the property suite reports a failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import SystemProfile, bound_report
from .harness import BOUND_NAMES, SECTIONS, SuiteConfig, gallery, run_suite
from .identities import nss_search, perron_search, solve_triangular
from .logval import DEFAULT_PRECISION, log2_interval
from .parsing import ParseError, parse_points, parse_poly, parse_system
from .poly import format_poly, max_abs_coeff, term_list
from .validation import check_precision
from .variety import (
    build_rur,
    certify_value,
    chow_form,
    find_separating_form,
    is_separating,
    monomial_basis,
    remainder,
    NotSeparatingError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _system(args):
    if not args.system:
        raise UsageError("--system is required")
    return parse_system(_read(args.system))


def _points(args):
    if not args.points:
        raise UsageError("--points is required")
    return parse_points(_read(args.points))


def _poly(args, nvars):
    if not args.poly:
        raise UsageError("--poly is required")
    return parse_poly(args.poly, nvars)


def _profile(args, system):
    idx = args.distinguished
    if idx is not None and not 1 <= idx <= len(system):
        raise ValueError(f"--distinguished must lie in 1..{len(system)}")
    return SystemProfile.from_system(system, idx, args.precision)


# ---------------------------------------------------------------------------
# subcommands

def cmd_bounds(args):
    system = _system(args)
    prof = _profile(args, system)
    d_p = h_p = None
    if args.poly:
        p = parse_poly(args.poly, prof.n)
        if not p.is_integer():
            raise ValueError("--poly must have integer coefficients")
        d_p = p.degree() if p else 0
        h_p = log2_interval(max_abs_coeff(p), args.precision) if p else 0
    return bound_report(prof, args.precision, d_p, h_p).to_json()


def cmd_rur(args):
    V = _points(args)
    if args.u:
        u = tuple(int(v) for v in args.u.split(","))
        if len(u) != V.n:
            raise ValueError(f"--u needs {V.n} entries")
        if not is_separating(V, u):
            raise NotSeparatingError("omega_0 not squarefree")
    else:
        u = find_separating_form(V)
    chow = chow_form(V)
    rur = build_rur(V, u, chow)
    out = rur.to_json()
    out["chow_form"] = term_list(chow.form)
    out["D"] = V.D
    return out


def cmd_remainder(args):
    V = _points(args)
    p = _poly(args, V.n)
    rur = build_rur(V, find_separating_form(V))
    B = monomial_basis(V)
    rem = remainder(V, rur, B, p)
    out = rem.to_json()
    out["remainder"] = format_poly(rem.pbar)
    out["delta"] = B.delta
    return out


def cmd_nss(args):
    system = _system(args)
    delta_max = args.delta_max if args.delta_max is not None else 12
    ident = nss_search(system, delta_max)
    if ident is None:
        return {"found": False, "delta_max": delta_max}
    out = ident.to_json()
    out["found"] = True
    return out


def cmd_perron(args):
    system = _system(args)
    rels = perron_search(system)
    return {"relations": [{"relation": term_list(r.P), "text": format_poly(r.P, [f"y{i + 1}" for i in range(r.P.nvars)])}
                          for r in rels]}


def cmd_certify(args):
    system = _system(args)
    prof = _profile(args, system)
    p = _poly(args, prof.n)
    if args.approx is None or args.err is None:
        raise UsageError("--approx and --err are required")
    verdict = certify_value(prof, p, Fraction(args.approx), Fraction(args.err), args.precision)
    return {"verdict": verdict}


def cmd_solve_triangular(args):
    V = solve_triangular(_system(args))
    return {"points": [[str(c) for c in z] for z in V.points], "D": V.D}


def cmd_suite(args):
    kw = {"seed": args.seed if args.seed is not None else 0, "precision": args.precision}
    if args.varieties is not None:
        kw["n_varieties"] = args.varieties
    if args.sections:
        kw["sections"] = tuple(args.sections.split(","))
    if args.tamper:
        pairs = []
        for item in args.tamper:
            name, _, amount = item.partition("=")
            pairs.append((name, Fraction(amount or 1000)))
        kw["tamper"] = tuple(pairs)
    report = run_suite(SuiteConfig(**kw))
    return report.to_json(), (0 if report.passed else 2)


def cmd_gallery(args):
    out = []
    for case in gallery():
        out.append({
            "name": case.name,
            "kind": case.kind,
            "params": case.params,
            "anchor": case.anchor,
            "system": [format_poly(f) for f in case.system],
            "points": None if case.points is None else [[str(c) for c in z] for z in case.points],
            "expected": {k: str(v) for k, v in case.expected.items()},
        })
    return {"cases": out}


COMMANDS = {
    "bounds": cmd_bounds,
    "rur": cmd_rur,
    "remainder": cmd_remainder,
    "nss": cmd_nss,
    "perron": cmd_perron,
    "certify": cmd_certify,
    "solve-triangular": cmd_solve_triangular,
    "suite": cmd_suite,
    "gallery": cmd_gallery,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zerodim", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--system", help="file with one polynomial per line ('-' for stdin)")
    parser.add_argument("--points", help="file with one comma-separated point per line")
    parser.add_argument("--poly", help="polynomial expression, e.g. 'x1^2 - 3*x2'")
    parser.add_argument("--distinguished", type=int, help="1-based index of the distinguished polynomial")
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="bits of precision")
    parser.add_argument("--delta-max", type=int, dest="delta_max", help="largest certificate degree to try")
    parser.add_argument("--seed", type=int, help="suite seed")
    parser.add_argument("--varieties", type=int, help="number of random varieties in the suite")
    parser.add_argument("--sections", help=f"comma-separated suite sections from {','.join(SECTIONS)}")
    parser.add_argument("--tamper", action="append", metavar="NAME=AMOUNT",
                        help=f"lower a bound in the suite; names: {', '.join(BOUND_NAMES)}")
    parser.add_argument("--u", help="separating vector for rur, e.g. '1,0'")
    parser.add_argument("--approx", help="rational approximation of p(zeta) for certify")
    parser.add_argument("--err", help="error radius of the approximation for certify")
    parser.add_argument("--json", action="store_true", help="emit JSON (default)")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser.add_argument("--out", help="write the report to this file instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.precision = check_precision(args.precision)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ParseError, NotSeparatingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, ArithmeticError, OSError, RecursionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    text = json.dumps(result, indent=2 if args.pretty else None, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
