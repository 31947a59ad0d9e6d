"""Command line surface: build towers, analyze algebras, verify, search.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or
construction errors. The enumeration budget can be overridden with
--budget or the CDRINGS_ENUM_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import ast
import itertools
import json
import math
import os
import sys

from .algebra import (
    is_alternative,
    is_associative,
    is_commutative,
    is_right_alternative,
)
from .analysis import center, essentiality_data
from .document import algebra_to_document, dumps_document, load_algebra
from .doubling import TowerSpec, build_tower
from .errors import AlgebraError, EnumerationBudgetExceeded
from .essentiality import (
    is_centrally_essential,
    is_left_n_essential,
    is_right_n_essential,
)
from .residue import DEFAULT_ENUMERATION_BUDGET
from .suites import SUITES, run_suite

SEARCH_FLAGS = (
    "associative",
    "commutative",
    "alternative",
    "right_alternative",
    "centrally_essential",
    "left_n_essential",
    "right_n_essential",
)


def _budget_from(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get("CDRINGS_ENUM_BUDGET")
    if env:
        return int(env)
    return DEFAULT_ENUMERATION_BUDGET


def _parse_params(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def _parse_range(text: str) -> list[int]:
    """Accept '2..9' or a comma list '2,3,4'."""
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",")]


def _flag_summary(algebra) -> dict[str, bool]:
    return {
        "associative": is_associative(algebra),
        "commutative": is_commutative(algebra),
        "alternative": is_alternative(algebra),
        "right_alternative": is_right_alternative(algebra),
    }


def cmd_build(args) -> int:
    budget = _budget_from(args)
    try:
        stages = build_tower(TowerSpec(args.base, _parse_params(args.params)))
    except AlgebraError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 2
    wanted = stages if args.all_stages else [stages[-1]]
    for idx, alg in enumerate(wanted):
        provenance = {
            "kind": "tower",
            "base": args.base,
            "params": list(_parse_params(args.params))[: alg.rank.bit_length() - 1],
            "name": alg.name,
        }
        flags = _flag_summary(alg)
        size = alg.modulus**alg.rank
        flag_text = ", ".join(k for k, v in flags.items() if v) or "none"
        print(f"{alg.name}: rank {alg.rank}, |R| = {size}, flags: {flag_text}")
        try:
            ce = is_centrally_essential(alg, budget=budget)
            print(f"  centrally essential: {ce.verdict} (definitional)")
        except EnumerationBudgetExceeded:
            print("  centrally essential: skipped (over enumeration budget)")
        if args.out:
            path = args.out
            if args.all_stages:
                path = f"{args.out}.stage{idx}" if len(wanted) > 1 else args.out
            with open(path, "w") as fh:
                fh.write(dumps_document(algebra_to_document(alg, provenance)))
            print(f"  wrote {path}")
    return 0


def cmd_analyze(args) -> int:
    budget = _budget_from(args)
    try:
        alg = load_algebra(args.document)
    except (AlgebraError, ValueError, OSError) as exc:
        print(f"cannot load document: {exc}", file=sys.stderr)
        return 2
    rep = center(alg)
    data = essentiality_data(alg)
    print(f"{alg.name}: rank {alg.rank} over Z{alg.modulus}")
    sizes = rep.sizes()
    print(f"  |N| = {sizes['N']}, |K| = {sizes['K']}, |Z| = {sizes['Z']}")
    dsz = data.sizes()
    print(
        f"  |C| = {dsz['C']}, |[A,A]| = {dsz['[A,A]']}, |I| = {dsz['I']},"
        f" |B| = {dsz['B']}, |J| = {dsz['J']}"
    )
    for key, value in _flag_summary(alg).items():
        print(f"  {key}: {value}")
    for label, check in (
        ("centrally essential", is_centrally_essential),
        ("left N-essential", is_left_n_essential),
        ("right N-essential", is_right_n_essential),
    ):
        try:
            verdict = check(alg, budget=budget)
            line = f"  {label}: {verdict.verdict} [{verdict.method}]"
            if verdict.witness is not None and not verdict.verdict:
                line += f" witness {verdict.witness}"
            print(line)
        except EnumerationBudgetExceeded as exc:
            print(f"  {label}: skipped ({exc})")
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite in ("thm-1.3", "thm-1.4"):
        if args.bases:
            kwargs["bases"] = tuple(_parse_range(args.bases))
        if args.depth:
            kwargs["depth"] = args.depth
        kwargs["budget"] = _budget_from(args)
    elif args.suite in ("prop-5.2", "prop-5.3"):
        if args.n_range:
            kwargs["n_range"] = _parse_range(args.n_range)
        kwargs["budget"] = _budget_from(args)
    elif args.suite == "lemma-5.1":
        if args.n_range:
            kwargs["n_range"] = _parse_range(args.n_range)
    elif args.suite == "remark-2.5":
        if args.bases:
            kwargs["bases"] = tuple(_parse_range(args.bases))
        if args.depth:
            kwargs["depth"] = args.depth
    elif args.suite in ("thm-1.5", "lemma-2.1"):
        kwargs["budget"] = _budget_from(args)
    try:
        report = run_suite(args.suite, **kwargs)
    except AlgebraError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True, indent=1))
    else:
        print(report.render())
    return 0 if report.passed else 1


class _FlagExpression:
    """Boolean filter over search flags: names, !, &, |, parentheses."""

    def __init__(self, text: str):
        self.text = text
        source = text.replace("!", " not ").replace("&", " and ").replace("|", " or ")
        try:
            tree = ast.parse(source, mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"bad filter expression {text!r}: {exc}") from exc
        for node in ast.walk(tree):
            if isinstance(node, ast.Name):
                if node.id not in SEARCH_FLAGS:
                    raise ValueError(
                        f"unknown flag {node.id!r}; choose from {', '.join(SEARCH_FLAGS)}"
                    )
            elif not isinstance(
                node, (ast.Expression, ast.BoolOp, ast.UnaryOp, ast.Not, ast.And, ast.Or, ast.Load)
            ):
                raise ValueError(f"unsupported syntax in filter {text!r}")
        self.code = compile(tree, "<filter>", "eval")
        self.names = {
            node.id for node in ast.walk(tree) if isinstance(node, ast.Name)
        }

    def evaluate(self, flags: dict[str, bool]) -> bool:
        return bool(eval(self.code, {"__builtins__": {}}, dict(flags)))


def _search_flags(algebra, budget: int) -> tuple[dict[str, bool], list[str]]:
    flags = _flag_summary(algebra)
    skipped = []
    for name, check in (
        ("centrally_essential", is_centrally_essential),
        ("left_n_essential", is_left_n_essential),
        ("right_n_essential", is_right_n_essential),
    ):
        try:
            flags[name] = check(algebra, budget=budget).verdict
        except EnumerationBudgetExceeded:
            skipped.append(name)
    return flags, skipped


def cmd_search(args) -> int:
    budget = _budget_from(args)
    try:
        expr = _FlagExpression(args.filter) if args.filter else None
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    bases = _parse_range(args.bases)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for base in bases:
            units = [u for u in range(1, base) if math.gcd(u, base) == 1]
            for depth in range(0, args.depth + 1):
                for params in itertools.product(units, repeat=depth):
                    try:
                        stages = build_tower(TowerSpec(base, params))
                    except AlgebraError as exc:
                        row = {
                            "base": base,
                            "params": list(params),
                            "skipped": True,
                            "reason": f"construction failed: {exc}",
                        }
                        print(json.dumps(row, sort_keys=True), file=out)
                        continue
                    alg = stages[-1]
                    flags, skipped = _search_flags(alg, budget)
                    row = {
                        "base": base,
                        "params": list(params),
                        "rank": alg.rank,
                        "flags": flags,
                    }
                    if expr is not None and expr.names & set(skipped):
                        row["skipped"] = True
                        row["reason"] = (
                            "filter needs "
                            + ",".join(sorted(expr.names & set(skipped)))
                            + " but the definitional scan exceeds the budget"
                        )
                        print(json.dumps(row, sort_keys=True), file=out)
                        continue
                    if skipped:
                        row["flags_skipped"] = skipped
                    if expr is None or expr.evaluate(flags):
                        print(json.dumps(row, sort_keys=True), file=out)
    finally:
        if args.out:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdrings",
        description="Finite doubling towers over Z/nZ: construction and analysis",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="enumeration budget (elements); default 2**20 or CDRINGS_ENUM_BUDGET",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a doubling tower")
    p_build.add_argument("--base", type=int, required=True, help="base modulus n")
    p_build.add_argument(
        "--params", default="", help="comma-separated doubling parameters, e.g. 1,1,1"
    )
    p_build.add_argument("--out", default=None, help="write the algebra document here")
    p_build.add_argument(
        "--all-stages", action="store_true", help="emit every stage, not just the last"
    )
    p_build.set_defaults(func=cmd_build)

    p_analyze = sub.add_parser("analyze", help="analyze a saved algebra document")
    p_analyze.add_argument("document", help="path to an algebra document")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES), help="suite name")
    p_verify.add_argument("--n-range", default=None, help="modulus sweep, e.g. 2..9")
    p_verify.add_argument("--bases", default=None, help="tower bases, e.g. 2,3,4")
    p_verify.add_argument("--depth", type=int, default=None, help="tower depth")
    p_verify.add_argument("--json", action="store_true", help="emit a JSON report")
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser(
        "search", help="sweep unit-parameter towers and filter by property flags"
    )
    p_search.add_argument("--bases", required=True, help="bases, e.g. 2..5 or 2,3,4")
    p_search.add_argument("--depth", type=int, default=3, help="maximum tower depth")
    p_search.add_argument(
        "--filter",
        default=None,
        help="boolean flag expression, e.g. 'centrally_essential & !associative'",
    )
    p_search.add_argument("--out", default=None, help="write JSONL rows here")
    p_search.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
