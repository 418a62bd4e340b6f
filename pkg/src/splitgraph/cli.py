"""Command-line front end: parse descriptions, run builds and audits, emit reports.

Exit codes: 0 on success, 1 on any error (including usage errors), and
2 when the ``audit`` command confirms an ill-definedness witness, so
harnesses can detect that outcome without parsing output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .audit import (
    SweepReport,
    Verdict,
    audit_pair,
    classify_order8,
    dihedral_description,
    klein_swap_description,
    policy_sweep,
    reproduce_counterexample,
)
from .gamma import DEFAULT_POLICY, InterpretationPolicy, build_gamma
from .invariants import degree_sequence, export_dot, graph_report
from .presentation import (
    DEFAULT_CONDITION_BOUND,
    ParseError,
    SplitDescription,
    check_generator_condition,
    parse_split_description,
    realize,
)

__all__ = ["main"]


class _CliError(Exception):
    """User-facing error; message goes to stderr, exit status 1."""


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for the audit
    # witness outcome, so route usage errors through status 1 instead.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="splitgraph",
        description="Build word-support graphs on split-extension groups and audit their well-definedness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_policy(p):
        p.add_argument(
            "--policy",
            default=None,
            metavar="STR",
            help="interpretation policy as a canonical key=value string",
        )

    def add_format(p, choices):
        p.add_argument("--format", default="text", choices=choices, help="output format")

    p_graph = sub.add_parser("graph", help="build the graph of one description")
    p_graph.add_argument("inputs", nargs=1, metavar="FILE")
    add_policy(p_graph)
    add_format(p_graph, ("text", "json", "dot"))
    p_graph.add_argument(
        "--max-word-len",
        type=int,
        default=DEFAULT_CONDITION_BOUND,
        metavar="N",
        help="bound for the generator-condition word search",
    )

    p_ds = sub.add_parser("ds", help="print the degree sequence of one description")
    p_ds.add_argument("inputs", nargs=1, metavar="FILE")
    add_policy(p_ds)
    add_format(p_ds, ("text", "json"))

    p_audit = sub.add_parser("audit", help="compare two descriptions under one policy")
    p_audit.add_argument("inputs", nargs=2, metavar="FILE")
    add_policy(p_audit)
    add_format(p_audit, ("text", "json"))

    p_cex = sub.add_parser(
        "counterexample", help="audit the two built-in descriptions of the order-8 dihedral group"
    )
    add_format(p_cex, ("text", "json"))

    p_classify = sub.add_parser("classify", help="verify the order-8 classification")
    add_format(p_classify, ("text", "json"))

    p_sweep = sub.add_parser(
        "sweep", help="audit a pair under every interpretation policy (built-ins when no files given)"
    )
    p_sweep.add_argument("inputs", nargs="*", metavar="FILE")
    add_format(p_sweep, ("text", "json"))

    return parser


def _load_description(path: str) -> SplitDescription:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_split_description(text, label=path)
    except ParseError as exc:
        raise _CliError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from exc


def _parse_policy(text: str | None) -> InterpretationPolicy:
    if text is None:
        return DEFAULT_POLICY
    try:
        return InterpretationPolicy.from_string(text)
    except ValueError as exc:
        raise _CliError(f"bad --policy value: {exc}") from exc


def _realize_checked(d: SplitDescription):
    try:
        return realize(d)
    except ValueError as exc:
        raise _CliError(f"{d.label}: {exc}") from exc


def _envelope(command: str, inputs: list[str], policy: InterpretationPolicy | None, results: dict) -> str:
    payload = {
        "command": command,
        "inputs": inputs,
        "policy": policy.to_string() if policy is not None else None,
        "results": results,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_graph(args) -> tuple[int, str]:
    policy = _parse_policy(args.policy)
    d = _load_description(args.inputs[0])
    r = _realize_checked(d)
    g = build_gamma(r, policy)
    condition = check_generator_condition(r, max_len=args.max_word_len)
    if args.format == "dot":
        return 0, export_dot(g)
    report = graph_report(g)
    report["generator_condition"] = {
        "max_len": condition.max_len,
        "checked": condition.checked,
        "passed": condition.passed,
        "violations": [
            {"generator": gen, "witness": str(word)} for gen, word in condition.violations
        ],
    }
    if args.format == "json":
        return 0, _envelope("graph", list(args.inputs), policy, report)
    lines = [
        f"description: {d.label}",
        f"policy: {policy.to_string()}",
        f"order: {report['order']}",
        f"vertices: {', '.join(report['vertices'])}",
        f"edges ({report['edge_count']}):",
    ]
    lines += [f"  {a} -- {b}" for a, b in report["edges"]]
    lines += [
        f"degree sequence: {report['degree_sequence']}",
        f"connected: {report['connected']}, diameter: {report['diameter']}",
    ]
    if condition.passed:
        lines.append(
            f"generator condition: pass (no generator is an ordered product of the others, "
            f"checked {condition.checked} words up to length {condition.max_len})"
        )
    else:
        lines.append("generator condition: VIOLATED")
        lines += [f"  {gen} = {word}" for gen, word in condition.violations]
    return 0, "\n".join(lines) + "\n"


def _cmd_ds(args) -> tuple[int, str]:
    policy = _parse_policy(args.policy)
    d = _load_description(args.inputs[0])
    g = build_gamma(_realize_checked(d), policy)
    ds = degree_sequence(g)
    if args.format == "json":
        return 0, _envelope("ds", list(args.inputs), policy, {"degree_sequence": ds})
    return 0, f"{ds}\n"


def _audit_text(report) -> str:
    lines = [
        f"descriptions: {report.labels[0]}  vs  {report.labels[1]}",
        f"policy: {report.policy.to_string()}",
        f"groups isomorphic: {report.groups_isomorphic}",
        f"degree sequence 1: {list(report.degree_sequences[0])}",
        f"degree sequence 2: {list(report.degree_sequences[1])}",
        f"edge counts: {list(report.edge_counts)}",
        f"invariants equal: {report.invariants_equal}",
        f"verdict: {report.verdict.value}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_audit(args) -> tuple[int, str]:
    policy = _parse_policy(args.policy)
    d1 = _load_description(args.inputs[0])
    d2 = _load_description(args.inputs[1])
    try:
        report = audit_pair(d1, d2, policy)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    code = 2 if report.verdict is Verdict.ILL_DEFINED_WITNESS else 0
    if args.format == "json":
        return code, _envelope("audit", list(args.inputs), policy, report.to_payload())
    return code, _audit_text(report)


def _cmd_counterexample(args) -> tuple[int, str]:
    report = reproduce_counterexample()
    if args.format == "json":
        return 0, _envelope("counterexample", [], report.policy, report.to_payload())
    return 0, _audit_text(report)


def _cmd_classify(args) -> tuple[int, str]:
    report = classify_order8()
    if args.format == "json":
        return 0, _envelope("classify", [], None, report.to_payload())
    lines = [f"order-8 classes: {', '.join(report.names)}"]
    lines.append(f"nonabelian: {', '.join(report.nonabelian)}")
    lines.append(
        "involutions: "
        + ", ".join(f"{name}={count}" for name, count in report.involution_counts.items())
    )
    lines.append(f"pairwise non-isomorphic: {report.pairwise_nonisomorphic}")
    lines.append(f"nonabelian classes have an order-4 element: {report.nonabelian_have_order4_element}")
    lines.append(f"involutions in the embedded Klein kernel: {report.klein_kernel_involutions}")
    lines.append(f"constructible order-8 corpus ({len(report.corpus)} groups):")
    lines += [f"  {label} ~= {match}" for label, match in report.corpus]
    lines.append(f"all matched: {report.all_corpus_matched}")
    lines.append(f"passed: {report.passed}")
    return 0, "\n".join(lines) + "\n"


def _sweep_text(report: SweepReport) -> str:
    lines = [f"policies swept: {len(report.reports)}", f"scope: {report.scope}"]
    for r in report.reports:
        lines.append(
            f"  [{r.policy.to_string()}] "
            f"DS1={list(r.degree_sequences[0])} DS2={list(r.degree_sequences[1])} "
            f"verdict={r.verdict.value}"
        )
    lines.append(f"any policy consistent: {report.any_consistent}")
    return "\n".join(lines) + "\n"


def _cmd_sweep(args) -> tuple[int, str]:
    if len(args.inputs) == 0:
        d1, d2 = dihedral_description(), klein_swap_description()
    elif len(args.inputs) == 2:
        d1 = _load_description(args.inputs[0])
        d2 = _load_description(args.inputs[1])
    else:
        raise _CliError("sweep takes exactly two description files, or none for the built-ins")
    try:
        report = policy_sweep(d1, d2, InterpretationPolicy.all_policies())
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    if args.format == "json":
        return 0, _envelope("sweep", list(args.inputs), None, report.to_payload())
    return 0, _sweep_text(report)


_COMMANDS = {
    "graph": _cmd_graph,
    "ds": _cmd_ds,
    "audit": _cmd_audit,
    "counterexample": _cmd_counterexample,
    "classify": _cmd_classify,
    "sweep": _cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = _COMMANDS[args.command](args)
    except _CliError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"reference result not reproduced: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
