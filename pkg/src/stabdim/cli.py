"""Command-line front end.

Subcommands: ``analyze`` (configuration fast path), ``verify`` (fast path
plus exact oracle), ``enumerate`` (weight-<=2 stabilizer elements), ``gen``
(emit a family or seeded random graph), ``selftest`` (built-in worked
examples).

Exit codes: 0 success, 1 usage error, 2 parse error, 3 constraint violation
(disconnected input without --components, size caps), 4 internal consistency
failure (a route disagreement, which always means a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import oracle
from .configurations import (
    Configuration,
    components_with_configurations,
    detect_configurations,
    lie_generator,
)
from .errors import ConsistencyError, ConstraintError, GraphParseError
from .graphs import (
    FAMILIES,
    Graph,
    connected_components,
    encode_edge_list,
    encode_graph6,
    generate,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .pauli import DEFAULT_BRUTE_CAP, g2_rank, low_weight_elements
from .theorem import check_equivalence


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    m: int
    connected: bool
    configurations: list[Configuration]
    dimension: int
    g2: int
    theorem_holds: bool
    oracle_nullity: int | None
    oracle_agrees: bool | None
    source_format: str
    source_name: str
    components_mode: bool


def format_report(report: AnalysisReport, mode: str = "text") -> str:
    if mode == "machine":
        record = {
            "n": report.n,
            "m": report.m,
            "connected": report.connected,
            "dimension": report.dimension,
            "g2": report.g2,
            "theorem_holds": report.theorem_holds,
            "configurations": [
                {"kind": c.kind, "a": c.a, "b": c.b} for c in report.configurations
            ],
        }
        if report.oracle_nullity is not None:
            record["oracle_nullity"] = report.oracle_nullity
        if report.oracle_agrees is not None:
            record["oracle_agrees"] = report.oracle_agrees
        return json.dumps(record, separators=(",", ":"))
    if mode != "text":
        raise ValueError(f"unknown report mode {mode!r}")

    yes_no = {True: "yes", False: "no"}
    lines = [
        f"source: {report.source_format} {report.source_name}",
        f"n: {report.n}",
        f"m: {report.m}",
        f"connected: {yes_no[report.connected]}",
    ]
    if report.components_mode:
        lines.append("mode: component-sum extension")
    if report.configurations:
        lines.append("configurations:")
        lines += [
            f"  {c.kind} a={c.a} b={c.b} generator {lie_generator(c)}"
            for c in report.configurations
        ]
    else:
        lines.append("configurations: none")
    lines.append(f"dimension: {report.dimension}")
    # local unitary group has dimension 3n+1; the orbit gets the rest
    lines.append(f"orbit_dimension: {3 * report.n + 1 - report.dimension} (derived)")
    lines.append(f"g2: {report.g2}")
    note = " (expected boundary for n = 2)" if report.n == 2 and not report.theorem_holds else ""
    lines.append(f"theorem_holds: {yes_no[report.theorem_holds]}{note}")
    if report.oracle_nullity is not None:
        lines.append(f"oracle_nullity: {report.oracle_nullity}")
    if report.oracle_agrees is not None:
        lines.append(f"oracle_agrees: {yes_no[report.oracle_agrees]}")
    return "\n".join(lines) + "\n"


def _load_graph(args) -> tuple[Graph, str, str]:
    chosen = [
        name
        for name in ("file", "graph6", "family")
        if getattr(args, name, None) is not None
    ]
    if len(chosen) != 1:
        raise UsageError("exactly one input source required: --file, --graph6, or --family")
    source = chosen[0]
    if source == "file":
        try:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {args.file}: {exc}") from None
        return parse_edge_list(text), "edge-list", args.file
    if source == "graph6":
        return parse_graph6(args.graph6), "graph6", args.graph6
    if args.n is None:
        raise UsageError("--family requires --n")
    if args.family == "gnp":
        if args.p is None:
            raise UsageError("family gnp requires --p")
    elif args.p is not None:
        raise UsageError(f"--p only applies to family gnp, not {args.family}")
    g = generate(args.family, args.n, p=args.p, seed=args.seed)
    detail = f"n={args.n}"
    if args.p is not None:
        detail += f",p={args.p}"
    if args.family in ("tree", "gnp"):
        detail += f",seed={args.seed}"
    return g, "family", f"{args.family}({detail})"


def _build_report(
    g: Graph,
    source_format: str,
    source_name: str,
    components: bool,
    with_oracle: bool,
    oracle_cap: int,
) -> AnalysisReport:
    connected = is_connected(g)
    if components:
        return _components_report(
            g, source_format, source_name, connected, with_oracle, oracle_cap
        )
    if not connected:
        raise ConstraintError("graph is disconnected; pass --components to sum per component")
    rep = check_equivalence(g, with_oracle=with_oracle, oracle_cap=oracle_cap)
    return AnalysisReport(
        n=g.n,
        m=g.m,
        connected=True,
        configurations=detect_configurations(g),
        dimension=rep.dimension,
        g2=rep.g2,
        theorem_holds=rep.holds,
        oracle_nullity=rep.oracle_nullity,
        oracle_agrees=rep.oracle_agrees,
        source_format=source_format,
        source_name=source_name,
        components_mode=False,
    )


def _components_report(
    g: Graph,
    source_format: str,
    source_name: str,
    connected: bool,
    with_oracle: bool,
    oracle_cap: int,
) -> AnalysisReport:
    dimension, configs = components_with_configurations(g)
    g2 = 0
    for comp in connected_components(g):
        if len(comp) == 1:
            g2 += 1
        else:
            sub = g.induced_subgraph(comp)
            g2 += g2_rank(e for e, _ in low_weight_elements(sub, mode="fast"))
    # The component extension is only empirically gated, so cross-check the
    # oracle whenever it is in reach.
    nullity = None
    if with_oracle:
        nullity = oracle.local_algebra_nullity(g, cap=oracle_cap)
    elif g.n <= oracle.DEFAULT_ORACLE_CAP:
        nullity = oracle.local_algebra_nullity(g)
    agrees = None if nullity is None else nullity == dimension
    return AnalysisReport(
        n=g.n,
        m=g.m,
        connected=connected,
        configurations=configs,
        dimension=dimension,
        g2=g2,
        theorem_holds=dimension == g2,
        oracle_nullity=nullity,
        oracle_agrees=agrees,
        source_format=source_format,
        source_name=source_name,
        components_mode=True,
    )


def _emit(report: AnalysisReport, fmt: str) -> None:
    text = format_report(report, fmt)
    if fmt == "machine":
        text += "\n"
    sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    g, fmt, name = _load_graph(args)
    report = _build_report(g, fmt, name, args.components, False, oracle.DEFAULT_ORACLE_CAP)
    _emit(report, args.format)
    return 4 if report.oracle_agrees is False else 0


def _cmd_verify(args) -> int:
    g, fmt, name = _load_graph(args)
    if g.n > args.oracle_max_n:
        raise ConstraintError(f"oracle cap is n={args.oracle_max_n}, got n={g.n}")
    report = _build_report(g, fmt, name, args.components, True, args.oracle_max_n)
    _emit(report, args.format)
    return 4 if report.oracle_agrees is False else 0


def _cmd_enumerate(args) -> int:
    g, _, _ = _load_graph(args)
    modes = ("brute", "fast") if args.mode == "both" else (args.mode,)
    if "brute" in modes and g.n > args.enumerate_max_n:
        raise ConstraintError(f"enumeration cap is n={args.enumerate_max_n}, got n={g.n}")
    results = {mode: low_weight_elements(g, mode=mode, cap=args.enumerate_max_n) for mode in modes}
    if len(results) == 2 and results["brute"] != results["fast"]:
        raise ConsistencyError("brute and fast enumerations disagree")
    elements = results[modes[0]]
    for e, p in elements:
        bits = "".join("1" if (e >> i) & 1 else "0" for i in range(g.n))
        sys.stdout.write(f"{bits} {p}\n")
    return 0


def _cmd_gen(args) -> int:
    if args.family is None or args.n is None:
        raise UsageError("gen requires --family and --n")
    if args.family == "gnp" and args.p is None:
        raise UsageError("family gnp requires --p")
    if args.family != "gnp" and args.p is not None:
        raise UsageError(f"--p only applies to family gnp, not {args.family}")
    g = generate(args.family, args.n, p=args.p, seed=args.seed)
    if args.format == "graph6":
        sys.stdout.write(encode_graph6(g) + "\n")
    else:
        sys.stdout.write(encode_edge_list(g))
    return 0


def _cmd_selftest(args) -> int:
    del args
    failures = 0

    def check(label: str, ok: bool) -> None:
        nonlocal failures
        if ok:
            sys.stdout.write(f"ok - {label}\n")
        else:
            failures += 1
            sys.stdout.write(f"FAIL - {label}\n")

    k2 = generate("complete", 2)
    rep2 = check_equivalence(k2, with_oracle=True)
    check("2-qubit graph state has stabilizer dimension 3", rep2.dimension == 3)
    check("2-qubit oracle nullity agrees", rep2.oracle_agrees is True)
    check("2-qubit boundary: g2 = 2, theorem_holds false", rep2.g2 == 2 and not rep2.holds)
    expected = {("X", 0, "Z", 1), ("X", 1, "Z", 0), ("Y", 0, "Y", 1)}
    got = set()
    for c in detect_configurations(k2):
        pair = lie_generator(c)
        got.add((pair.p[1], pair.p[0], pair.q[1], pair.q[0]))
    check("2-qubit generators are X(0)-Z(1), X(1)-Z(0), Y(0)-Y(1)", got == expected)

    star7 = generate("star", 7)
    rep7 = check_equivalence(star7, with_oracle=True)
    check("7-vertex star has dimension n-1 = 6", rep7.dimension == 6)
    check("7-vertex star: oracle and g2 agree", rep7.oracle_agrees is True and rep7.g2 == 6)

    c5 = generate("cycle", 5)
    rep5 = check_equivalence(c5, with_oracle=True, element_mode="brute")
    check("5-cycle has dimension 0 and no weight-<=2 elements", rep5.dimension == 0 and rep5.g2 == 0)
    check("5-cycle oracle nullity is 0", rep5.oracle_nullity == 0)

    agree = all(
        low_weight_elements(g, mode="brute") == low_weight_elements(g, mode="fast")
        for g in (k2, star7, c5, generate("path", 6), generate("complete", 5))
    )
    check("brute and fast enumerations agree on sample graphs", agree)
    return 4 if failures else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_source_options(parser, include_file=True):
    if include_file:
        parser.add_argument("--file", help="edge-list file path")
        parser.add_argument("--graph6", help="graph6 string")
    parser.add_argument("--family", choices=FAMILIES, help="named graph family")
    parser.add_argument("--n", type=int, help="vertex count for --family")
    parser.add_argument("--p", type=float, help="edge probability (gnp only)")
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed (tree/gnp)")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stabdim", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="configuration fast path")
    _add_source_options(analyze)
    analyze.add_argument("--components", action="store_true", help="sum over components")
    analyze.add_argument("--format", choices=("text", "machine"), default="text")
    analyze.set_defaults(func=_cmd_analyze)

    verify = sub.add_parser("verify", help="fast path plus exact oracle")
    _add_source_options(verify)
    verify.add_argument("--components", action="store_true", help="sum over components")
    verify.add_argument("--format", choices=("text", "machine"), default="text")
    verify.add_argument("--oracle-max-n", type=int, default=oracle.DEFAULT_ORACLE_CAP)
    verify.set_defaults(func=_cmd_verify)

    enum = sub.add_parser("enumerate", help="list weight-<=2 stabilizer elements")
    _add_source_options(enum)
    enum.add_argument("--mode", choices=("brute", "fast", "both"), default="both")
    enum.add_argument("--enumerate-max-n", type=int, default=DEFAULT_BRUTE_CAP)
    enum.set_defaults(func=_cmd_enumerate)

    gen = sub.add_parser("gen", help="emit a family or seeded random graph")
    _add_source_options(gen, include_file=False)
    gen.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")
    gen.set_defaults(func=_cmd_gen)

    selftest = sub.add_parser("selftest", help="run the built-in worked examples")
    selftest.set_defaults(func=_cmd_selftest)
    return parser


def run(argv=None) -> int:
    """Execute one subcommand; returns the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ConstraintError as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 4


def main(argv=None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
