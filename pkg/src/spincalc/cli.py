"""Command-line interface.

Subcommands::

    spincalc eval "<expr>" [--json]   homology, cohomology, chi, pi_1, validation
    spincalc chirality "<expr>"       chirality verdict with reason trace
    spincalc degrees "<expr>"         what is known about D(M)
    spincalc table1 --p <prime>       all 7-dimensional iterated spinnings of N(p)
    spincalc verify --theorem main|main2 --m <m> --p <p>
    spincalc validate "<expr>"        realizability cross-checks

Exit codes: 0 success, 1 verification mismatch or violation, 2 parse or
semantic error.  Passing ``-`` as the expression reads one expression
per line from stdin (batch mode).
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import permutations

from .abelian import Z, cyclic
from .analysis import chirality_verdict, degree_set
from .construct import (
    ManifoldDescriptor,
    dehn_rhs,
    iterated_spin,
    pipeline_main,
    pipeline_main2,
)
from .dsl import ParseError, evaluate_text
from .graded import GradedGroup, check_poincare_duality
from .manifold import HyperbolicThreeManifoldGroup, validate_realizability

SCHEMA = "1"


def _expressions(arg: str) -> list[str]:
    if arg == "-":
        return [line.strip() for line in sys.stdin if line.strip()]
    return [arg]


def _descriptor_report(m: ManifoldDescriptor, as_json: bool) -> str:
    cohomology = m.cohomology()
    violations = validate_realizability(m)
    duality = check_poincare_duality(m.homology, m.dim)
    if as_json:
        payload = {
            "schema": SCHEMA,
            **m.to_json(),
            "cohomology": cohomology.to_json(),
            "euler_characteristic": m.homology.euler_characteristic(),
            "duality": bool(duality),
            "violations": [{"code": v.code, "message": v.message} for v in violations],
        }
        return json.dumps(payload, indent=2)
    lines = [
        f"expression:    {m.expr}",
        f"dimension:     {m.dim}",
        f"pi_1:          {m.pi1.describe()}",
        f"connectivity:  {m.connectivity}",
        f"euler char:    {m.homology.euler_characteristic()}",
        "homology H_i:",
        _indent(str(m.homology)),
        "cohomology H^i:",
        _indent(str(cohomology)),
        f"duality check: {'ok' if duality else 'FAILED: ' + duality.message}",
    ]
    if m.facts:
        lines.append("facts:")
        lines.extend(f"  - {f.describe()}" for f in sorted(m.facts, key=lambda f: f.describe()))
    if violations:
        lines.append("violations:")
        lines.extend(f"  - [{v.code}] {v.message}" for v in violations)
    else:
        lines.append("violations:    none")
    return "\n".join(lines)


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


def _cmd_eval(args: argparse.Namespace) -> int:
    for text in _expressions(args.expr):
        print(_descriptor_report(evaluate_text(text), args.json))
    return 0


def _cmd_chirality(args: argparse.Namespace) -> int:
    for text in _expressions(args.expr):
        verdict = chirality_verdict(evaluate_text(text))
        if args.json:
            print(json.dumps({"schema": SCHEMA, "expr": text, **verdict.to_json()}, indent=2))
        else:
            print(f"{text}: {verdict.describe()}")
    return 0


def _cmd_degrees(args: argparse.Namespace) -> int:
    for text in _expressions(args.expr):
        ds = degree_set(evaluate_text(text))
        if args.json:
            print(json.dumps({"schema": SCHEMA, "expr": text, **ds.to_json()}, indent=2))
        else:
            print(f"D({text}) = {ds.describe()}")
    return 0


def _partitions_of(n: int) -> list[tuple[int, ...]]:
    """Descending partitions with at least two parts, largest-first rows last."""

    def rec(total: int, max_part: int):
        if total == 0:
            yield ()
            return
        for k in range(min(total, max_part), 0, -1):
            for rest in rec(total - k, k):
                yield (k,) + rest

    parts = [p for p in rec(n, n) if len(p) >= 2]
    parts.sort(key=lambda p: (-len(p), tuple(-x for x in p)))
    return parts


def _cmd_table1(args: argparse.Namespace) -> int:
    p = args.p
    rows = []
    for radii in _partitions_of(4):
        base = dehn_rhs(p)
        spun = iterated_spin(list(radii), base)
        # order independence: every permutation must give identical homology
        for perm in set(permutations(radii)):
            other = iterated_spin(list(perm), dehn_rhs(p))
            if other.homology != spun.homology:
                print(
                    f"order-independence FAILED for {radii} vs {perm}", file=sys.stderr
                )
                return 1
        label = "".join(f"sigma_{r} " for r in radii) + f"(N({p}))"
        rows.append((label, spun.homology.group(3)))
    width = max(len(label) for label, _ in rows)
    print(f"7-dimensional iterated spinnings of N({p}):")
    for label, h3 in rows:
        print(f"  {label.ljust(width)}   H_3 = {h3}")
    return 0


def _expected_homology(theorem: str, m: int, p: int) -> GradedGroup:
    dim = 4 * m + 3
    groups = {0: Z, dim: Z}
    torsion_degrees = {1, 2 * m + 1, 4 * m + 1} if theorem == "main" else {2 * m + 1}
    for i in torsion_degrees:
        groups[i] = cyclic(2 * p)
    return GradedGroup.from_dict(groups, dim)


def _cmd_verify(args: argparse.Namespace) -> int:
    build = pipeline_main if args.theorem == "main" else pipeline_main2
    result = build(args.m, args.p)
    expected = _expected_homology(args.theorem, args.m, args.p)
    failures = []
    if result.homology != expected:
        failures.append(f"homology mismatch:\n  got\n{_indent(str(result.homology))}\n  expected\n{_indent(str(expected))}")
    verdict = chirality_verdict(result)
    if not verdict.is_strongly_chiral:
        failures.append(f"chirality verdict is {verdict.kind}, expected strong chirality")
    if not isinstance(result.pi1, HyperbolicThreeManifoldGroup):
        failures.append(f"pi_1 tag is {result.pi1.describe()}, expected a hyperbolic 3-manifold group")
    name = f"{args.theorem}(m={args.m}, p={args.p})"
    if failures:
        print(f"{name}: FAILED")
        for f in failures:
            print(f"  {f}")
        return 1
    print(f"{name}: ok (dim {result.dim}, pi_1 = {result.pi1.describe()})")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    status = 0
    for text in _expressions(args.expr):
        violations = validate_realizability(evaluate_text(text))
        if violations:
            status = 1
            print(f"{text}: {len(violations)} violation(s)")
            for v in violations:
                print(f"  - [{v.code}] {v.message}")
        else:
            print(f"{text}: ok")
    return status


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincalc",
        description="Exact homology and chirality analysis of constructed manifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression and print its descriptor")
    p_eval.add_argument("expr")
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=_cmd_eval)

    p_chi = sub.add_parser("chirality", help="chirality verdict with reason trace")
    p_chi.add_argument("expr")
    p_chi.add_argument("--json", action="store_true")
    p_chi.set_defaults(func=_cmd_chirality)

    p_deg = sub.add_parser("degrees", help="known self-mapping degree set")
    p_deg.add_argument("expr")
    p_deg.add_argument("--json", action="store_true")
    p_deg.set_defaults(func=_cmd_degrees)

    p_tab = sub.add_parser("table1", help="7-dimensional iterated spinnings of N(p)")
    p_tab.add_argument("--p", type=int, required=True)
    p_tab.set_defaults(func=_cmd_table1)

    p_ver = sub.add_parser("verify", help="check a named pipeline against its closed form")
    p_ver.add_argument("--theorem", choices=["main", "main2"], required=True)
    p_ver.add_argument("--m", type=int, required=True)
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.set_defaults(func=_cmd_verify)

    p_val = sub.add_parser("validate", help="realizability cross-checks")
    p_val.add_argument("expr")
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
