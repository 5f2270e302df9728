"""Command-line interface.

Subcommands classify pairs of polynomials, materialize and verify witness
maps, and scan one-parameter families.  Output is deterministic JSON on
stdout; errors are machine-readable JSON on stderr.  Exit codes for the
classification commands encode the verdict: 0 equivalent, 1 not equivalent,
2 unknown, 3 and above for errors.  The environment variable
QHLIP_PRECISION_BITS overrides the default interval refinement (80 bits)
used when converting exact values to floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .lipclass import classify_pair
from .parser import ParseError, parse_bi, parse_rational, parse_uni, print_bi, print_uni
from .qhdecide import (
    BetaMismatchError,
    BetaRangeError,
    DegreeMismatchError,
    NotQuasihomogeneousError,
    QHPoly,
    decide,
    infer_beta,
    validate_qh,
)
from .witness import (
    GridSpec,
    InverseBetaTransform,
    asymptotic_shell_decay,
    verify_asymptotic,
    verify_conjugacy,
    verify_lipschitz,
)

EXIT_EQUIVALENT = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3

_VERDICT_EXIT = {"equivalent": 0, "not_equivalent": 1, "unknown": 2}


class CliError(Exception):
    def __init__(self, message: str, code: str = "invalid_input"):
        super().__init__(message)
        self.code = code


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _fail(exc: Exception, code: str) -> int:
    print(json.dumps({"error": {"code": code, "message": str(exc)}}), file=sys.stderr)
    return EXIT_ERROR


def _parse_lets(items: list[str] | None) -> dict[str, Fraction]:
    bindings: dict[str, Fraction] = {}
    for item in items or []:
        if "=" not in item:
            raise CliError(f"--let expects name=rational, got {item!r}")
        name, _, raw = item.partition("=")
        name = name.strip()
        if not name.isidentifier():
            raise CliError(f"invalid parameter name {name!r}")
        bindings[name] = parse_rational(raw)
    return bindings


def _parse_beta(raw: str) -> tuple[int, int]:
    b = parse_rational(raw)
    if b <= 1:
        raise CliError("beta must be a rational greater than 1", "beta_out_of_range")
    return b.numerator, b.denominator


def _qh_from_args(text: str, args, bindings) -> QHPoly:
    F = parse_bi(text, bindings)
    if args.beta is not None:
        r, s = _parse_beta(args.beta)
        return validate_qh(F, r, s)
    inf = infer_beta(F)
    if inf.ambiguous:
        raise CliError(
            "beta is ambiguous for a monomial; pass --beta explicitly", "beta_ambiguous"
        )
    if not inf.matches:
        raise CliError("no admissible beta > 1 fits this polynomial", "beta_unavailable")
    r, s, _ = inf.matches[0]
    return validate_qh(F, r, s)


def _add_beta_flags(sp) -> None:
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--beta", help="weights r/s with r > s > 0, e.g. 2/1")
    group.add_argument(
        "--infer-beta", action="store_true", help="infer the unique admissible beta"
    )


def _add_lets(sp) -> None:
    sp.add_argument(
        "--let",
        action="append",
        metavar="NAME=RATIONAL",
        help="bind a parameter before parsing (repeatable)",
    )


def cmd_classify1(args) -> int:
    bindings = _parse_lets(args.let)
    f = parse_uni(args.f, bindings)
    g = parse_uni(args.g, bindings)
    verdict = classify_pair(f, g)
    out = {
        "f": print_uni(f),
        "g": print_uni(g),
    }
    out.update(jsonio.verdict1_json(verdict))
    _emit(out)
    return EXIT_EQUIVALENT if verdict.equivalent else EXIT_NOT_EQUIVALENT


def cmd_classify2(args) -> int:
    bindings = _parse_lets(args.let)
    F = _qh_from_args(args.F, args, bindings)
    G = _qh_from_args(args.G, args, bindings)
    verdict = decide(F, G)
    out = {
        "F": print_bi(F.poly),
        "G": print_bi(G.poly),
        "beta": f"{F.r}/{F.s}",
        "degree": F.d,
    }
    out.update(jsonio.verdict2_json(verdict))
    _emit(out)
    return _VERDICT_EXIT[verdict.kind]


def cmd_witness(args) -> int:
    bindings = _parse_lets(args.let)
    F = _qh_from_args(args.F, args, bindings)
    G = _qh_from_args(args.G, args, bindings)
    verdict = decide(F, G)
    out = {
        "F": print_bi(F.poly),
        "G": print_bi(G.poly),
        "beta": f"{F.r}/{F.s}",
        "degree": F.d,
    }
    out.update(jsonio.verdict2_json(verdict))
    if verdict.kind == "equivalent":
        T = InverseBetaTransform(verdict.certificate.zygothety, F.r, F.s)
        x_count = max(1, args.samples // (2 * 100))
        grid = GridSpec(x_count=x_count, t_count=100, delta=args.delta)
        rep = verify_conjugacy(F, G, T, grid, tol=args.tol)
        rmin, rmax = verify_lipschitz(T, samples=2000, delta=args.delta)
        rep.lipschitz_ratio_min = rmin
        rep.lipschitz_ratio_max = rmax
        lam_est, k_est, tail = verify_asymptotic(verdict.certificate.zygothety.phi1)
        shell4, shell6 = asymptotic_shell_decay(verdict.certificate.zygothety.phi1)
        rep.asymptotic = {
            "lambda_est": lam_est,
            "k_est": k_est,
            "alpha_tail_max": tail,
            "shell_1e4": shell4,
            "shell_1e6": shell6,
        }
        out["report"] = jsonio.report_json(rep)
        _emit(out)
        return EXIT_EQUIVALENT if rep.conjugacy_pass else EXIT_ERROR
    _emit(out)
    return _VERDICT_EXIT[verdict.kind]


def cmd_scan(args) -> int:
    base_bindings = _parse_lets(args.let)
    values = [parse_rational(v) for v in args.values.split(",")]
    polys: list[QHPoly] = []
    for v in values:
        bindings = dict(base_bindings)
        bindings[args.param] = v
        polys.append(_qh_from_args(args.family, args, bindings))
    n = len(polys)
    verdicts: dict[tuple[int, int], str] = {}
    for i in range(n):
        for j in range(i + 1, n):
            verdicts[(i, j)] = decide(polys[i], polys[j]).kind

    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (i, j), kind in verdicts.items():
        if kind == "equivalent":
            parent[find(i)] = find(j)
    classes: dict[int, list[int]] = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    partition = sorted((sorted(c) for c in classes.values()), key=lambda c: c[0])
    # all-pairs decisions double as a transitivity check of the engine
    for cls in partition:
        for a in range(len(cls)):
            for b in range(a + 1, len(cls)):
                if verdicts[(cls[a], cls[b])] != "equivalent":
                    raise AssertionError(
                        "equivalence relation from decide() is not transitive"
                    )
    unknown_pairs = sorted(k for k, v in verdicts.items() if v == "unknown")
    _emit(
        {
            "family": args.family,
            "param": args.param,
            "values": [str(v) for v in values],
            "partition": partition,
            "unknown_pairs": [list(p) for p in unknown_pairs],
        }
    )
    return 0


def cmd_infer_beta(args) -> int:
    F = parse_bi(args.F, _parse_lets(args.let))
    inf = infer_beta(F)
    _emit(
        {
            "F": print_bi(F),
            "matches": [
                {"beta": f"{r}/{s}", "degree": d} for (r, s, d) in inf.matches
            ],
            "ambiguous": inf.ambiguous,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qhlip",
        description=(
            "Exact Lipschitz classification of univariate polynomial functions "
            "and quasihomogeneous polynomials in two variables"
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify1", help="Lipschitz equivalence of f(t), g(t)")
    sp.add_argument("f")
    sp.add_argument("g")
    _add_lets(sp)
    sp.set_defaults(func=cmd_classify1)

    sp = sub.add_parser("classify2", help="equivalence of F(X,Y), G(X,Y)")
    sp.add_argument("F")
    sp.add_argument("G")
    _add_beta_flags(sp)
    _add_lets(sp)
    sp.set_defaults(func=cmd_classify2)

    sp = sub.add_parser("witness", help="classify2 plus numeric witness verification")
    sp.add_argument("F")
    sp.add_argument("G")
    _add_beta_flags(sp)
    _add_lets(sp)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--samples", type=int, default=10000)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("scan", help="pairwise classification over a parameter family")
    sp.add_argument("family")
    sp.add_argument("--param", required=True)
    sp.add_argument("--values", required=True, help="comma-separated rationals")
    _add_beta_flags(sp)
    _add_lets(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("infer-beta", help="admissible beta values for F(X,Y)")
    sp.add_argument("F")
    _add_lets(sp)
    sp.set_defaults(func=cmd_infer_beta)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(exc, "parse_error")
    except (NotQuasihomogeneousError,) as exc:
        return _fail(exc, "not_quasihomogeneous")
    except (BetaRangeError,) as exc:
        return _fail(exc, "beta_out_of_range")
    except (BetaMismatchError,) as exc:
        return _fail(exc, "beta_mismatch")
    except (DegreeMismatchError,) as exc:
        return _fail(exc, "degree_mismatch")
    except CliError as exc:
        return _fail(exc, exc.code)


if __name__ == "__main__":
    sys.exit(main())
