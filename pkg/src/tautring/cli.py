"""Command-line front end: ``tautring {localize,homomorphism,verify-paper,echo-manifold}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .errors import NotInvariant, TautringError
from .homomorphism import GeneratorMap, conjugated_hom, connected_sum_hom
from .localization import fibre_integrate
from .manifolds import load_manifold, manifold_to_json
from .parsing import parse_class
from .reps import to_rep_basis
from .verify import CP2_TABLE, run_all

DEFAULT_MAX_DEGREE = 16

EXIT_OK = 0
EXIT_DIAGNOSTIC = 1


def _default_max_degree() -> int:
    raw = os.environ.get("TAUTRING_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"tautring: TAUTRING_MAX_DEGREE must be an integer, got {raw!r}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _diagnostic(exc: TautringError, fmt: str, out) -> int:
    if fmt == "json":
        payload = {"error": type(exc).__name__, "message": str(exc)}
        remainder = getattr(exc, "remainder", None)
        if remainder is not None:
            payload["remainder"] = str(remainder)
        print(_dump(payload), file=out)
    else:
        print(f"error: {type(exc).__name__}: {exc}", file=out)
    return EXIT_DIAGNOSTIC


# localize


def cmd_localize(args, out=sys.stdout) -> int:
    try:
        M = load_manifold(args.manifold)
        c = parse_class(args.cls, M.n)
        integral = fibre_integrate(M, c)
    except TautringError as exc:
        return _diagnostic(exc, args.format, out)
    try:
        q = to_rep_basis(integral, M.chart.rep)
    except NotInvariant as exc:
        q, failure = None, exc
    if args.format == "json":
        payload = {
            "manifold": M.name,
            "rank": M.n,
            "class": c.to_json(),
            "integral": {
                "text": integral.to_text(),
                "terms": [
                    {"exponents": list(e), "coeff": str(v)} for e, v in integral.sorted_terms()
                ],
            },
            "kappa_pullback": None if q is None else q.to_json(),
        }
        if q is None:
            payload["error"] = {"error": "NotInvariant", "message": str(failure)}
        print(_dump(payload), file=out)
    elif args.format == "latex":
        rhs = r"\text{not expressible}" if q is None else q.to_latex()
        print(rf"\kappa_{{{_latex_generator(c)}}} \longmapsto {rhs}", file=out)
    else:
        print(f"integral: {integral}", file=out)
        if q is None:
            print(f"error: NotInvariant: {failure}", file=out)
        else:
            print(f"class: {q}", file=out)
    return EXIT_OK if q is not None else EXIT_DIAGNOSTIC


def _latex_generator(c) -> str:
    text = c.to_latex()
    return text if len(c) == 1 else f"({text})"


# homomorphism


def render_map(g: GeneratorMap, fmt: str) -> str:
    if fmt == "json":
        return _dump(g.to_json())
    lines = []
    if fmt == "latex":
        lines.append(r"\begin{align*}")
        lines.append(rf"R^*(\mathrm{{{g.manifold}}} \# N, \star) &\longrightarrow R^*(N, \star)\\")
        for gen, img in sorted(g.entries.items(), key=lambda kv: kv[0].sort_key()):
            lines.append(rf"{gen.to_latex()} &\longmapsto {img.to_latex()}\\")
        lines.append(r"\end{align*}")
        lines.append(f"% point classes: {g.point_class_status}")
        return "\n".join(lines)
    lines.append(f"source: {g.source}")
    lines.append(f"target: {g.target}")
    lines.append(f"max_degree: {g.max_degree}")
    if g.conjugated:
        lines.append("variant: conjugated")
    lines.append(f"point_class_status: {g.point_class_status}")
    for gen, img in sorted(g.entries.items(), key=lambda kv: kv[0].sort_key()):
        lines.append(f"{gen.to_text()} -> {img.to_text()}")
    return "\n".join(lines)


def cmd_homomorphism(args, out=sys.stdout) -> int:
    try:
        M = load_manifold(args.manifold)
        g = connected_sum_hom(M, args.max_degree)
        if args.conjugated:
            g = conjugated_hom(g)
    except TautringError as exc:
        return _diagnostic(exc, args.format, out)
    print(render_map(g, args.format), file=out)
    return EXIT_OK


# verify-paper


def cmd_verify_paper(args, out=sys.stdout) -> int:
    checks = run_all(seed=args.seed)
    ok = all(ch.passed for ch in checks)
    if args.format == "json":
        print(_dump({
            "passed": ok,
            "checks": [
                {"criterion": ch.criterion, "name": ch.name, "passed": ch.passed, "detail": ch.detail}
                for ch in checks
            ],
        }), file=out)
    else:
        for ch in checks:
            print(ch.line(), file=out)
        if args.format == "latex":
            from .charclass import CharClass
            from .localization import kappa_pullback
            from .manifolds import projective_space

            M = projective_space(2)
            e, p1 = CharClass.euler(2), CharClass.pontryagin(2, 1)
            print(r"\begin{align*}", file=out)
            for a, b in CP2_TABLE:
                q = kappa_pullback(M, e ** a * p1 ** b)
                print(rf"q_{{{a},{b}}} &= {q.to_latex()}\\", file=out)
            print(r"\end{align*}", file=out)
        passed = sum(ch.passed for ch in checks)
        print(f"{passed}/{len(checks)} checks passed", file=out)
    return EXIT_OK if ok else EXIT_DIAGNOSTIC


# echo-manifold


def cmd_echo_manifold(args, out=sys.stdout) -> int:
    try:
        M = load_manifold(args.manifold)
    except TautringError as exc:
        return _diagnostic(exc, "text", out)
    print(manifold_to_json(M), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tautring",
        description="Localization and connected-sum maps for tautological rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, manifold=True):
        if manifold:
            p.add_argument("--manifold", required=True,
                           help="builtin:<s2k|s2axs2b|cpn> or a manifold JSON file")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--seed", type=int, default=0, help="oracle RNG seed")

    p = sub.add_parser("localize", help="integrate a class over a torus manifold")
    common(p)
    p.add_argument("--class", dest="cls", required=True, help='class expression, e.g. "e*p1"')
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("homomorphism", help="print the connected-sum generator map")
    common(p)
    p.add_argument("--max-degree", type=int, default=_default_max_degree())
    p.add_argument("--conjugated", action="store_true",
                   help="use the variant with c -> conj(r_c)")
    p.set_defaults(func=cmd_homomorphism)

    p = sub.add_parser("verify-paper", help="replay every reproduced identity")
    common(p, manifold=False)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("echo-manifold", help="print a manifold as JSON")
    p.add_argument("--manifold", required=True)
    p.set_defaults(func=cmd_echo_manifold)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
