"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors (validation failures, report
mismatches, ...), 2 on usage errors.  The environment variable WFC_SEED
overrides any --seed flag.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import formats
from .compose import Operator, compose
from .errors import WfcError
from .generators import FAMILIES, build_family
from .graphs import LanguageBounds, bounded_language
from .metrics import MEASURE_IDS, MEASURES, MetricConfig, MetricValue
from .net import WorkflowNet
from .properties import (
    HarnessConfig,
    PROPERTY_IDS,
    check,
    compare_to_expected,
    full_report,
    load_expected_table,
)


def _load_net(path: str) -> WorkflowNet:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if path.endswith(".pnml"):
        return formats.parse_pnml_subset(text)
    return formats.parse_native(text)


def _format_value(value: MetricValue, mode: str, digits: int = 10):
    if mode == "structured":
        if isinstance(value.value, Fraction):
            payload = {"num": value.value.numerator, "den": value.value.denominator}
        else:
            payload = {"real": value.value}
        if value.special_case_applied:
            payload["special_case"] = True
        return payload
    return f"{float(value.value):.{digits}f}".rstrip("0").rstrip(".") or "0"


def _cmd_score(args) -> int:
    net = _load_net(args.net)
    measures = args.measure or list(MEASURE_IDS)
    for mid in measures:
        if mid not in MEASURES:
            print(f"error: unknown measure {mid!r}", file=sys.stderr)
            return 2
    config = MetricConfig()
    if args.format == "structured":
        out = {}
        for mid in measures:
            value = MEASURES[mid](net, config)
            out[mid] = _format_value(value, "structured")
        print(json.dumps({"net": args.net, "scores": out}, indent=2))
    else:
        for mid in measures:
            value = MEASURES[mid](net, config)
            text = _format_value(value, "text")
            if isinstance(value.value, Fraction) and value.value.denominator != 1:
                text += f" ({value.value})"
            flag = "  [special case]" if value.special_case_applied else ""
            print(f"{mid} = {text}{flag}")
    return 0


def _cmd_compose(args) -> int:
    operands = [_load_net(path) for path in args.nets]
    result = compose(Operator.from_string(args.op), operands)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(formats.write_native(result, name=f"{args.op}-composition"))
    print(f"wrote {args.output}")
    return 0


def _cmd_validate(args) -> int:
    net = _load_net(args.net)
    print(f"valid workflow net: {len(net.places)} places, "
          f"{len(net.transitions)} transitions, {len(net.arcs)} arcs, "
          f"source={net.source}, sink={net.sink}")
    return 0


def _cmd_generate(args) -> int:
    params: dict[str, int] = {}
    for item in args.param or []:
        if "=" not in item:
            print(f"error: bad --param {item!r}, expected k=v", file=sys.stderr)
            return 2
        key, _, value = item.partition("=")
        try:
            params[key] = int(value)
        except ValueError:
            print(f"error: parameter {key!r} needs an integer value", file=sys.stderr)
            return 2
    net = build_family(args.family, **params)
    name = args.family + "_" + "_".join(f"{k}{v}" for k, v in sorted(params.items()))
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(formats.write_native(net, name=name))
    print(f"wrote {args.output}")
    return 0


def _cmd_language(args) -> int:
    net = _load_net(args.net)
    bounds = LanguageBounds(max_visible_length=args.max_len)
    language, truncated = bounded_language(net, bounds)
    for trace in sorted(language, key=lambda t: (len(t), t)):
        print("<" + ",".join(trace) + ">" if trace else "<>")
    if truncated:
        print("(truncated: exploration hit a bound)", file=sys.stderr)
    return 0


def _seed(args) -> int:
    env = os.environ.get("WFC_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _cmd_properties(args) -> int:
    if args.measure not in MEASURE_IDS:
        print(f"error: unknown measure {args.measure!r}", file=sys.stderr)
        return 2
    if args.property not in PROPERTY_IDS:
        print(f"error: unknown property {args.property!r}", file=sys.stderr)
        return 2
    config = HarnessConfig(search_budget=args.budget, seed=_seed(args))
    verdict = check(args.measure, args.property, config)
    print(f"{verdict.measure}/{verdict.prop}: {verdict.status}")
    if verdict.per_operator:
        for op, status in verdict.per_operator.items():
            print(f"  {op}: {status}")
    for line in verdict.evidence:
        print(f"  evidence: {line}")
    if verdict.info:
        print(f"  note: {verdict.info}")
    return 0


def _cmd_report(args) -> int:
    config = HarnessConfig(search_budget=args.budget, seed=_seed(args))
    report = full_report(config)
    if args.format == "structured":
        print(report.to_json(), end="")
    else:
        print(report.to_text(), end="")
    if args.out_dir:
        from .report_render import write_report_files

        files = write_report_files(report, args.out_dir)
        for path in files:
            print(f"wrote {path}", file=sys.stderr)
    if args.expected:
        expected = load_expected_table(args.expected)
        mismatches = compare_to_expected(report, expected)
        if mismatches:
            print(f"{len(mismatches)} mismatches against expected table:", file=sys.stderr)
            for mismatch in mismatches:
                print(f"  {mismatch}", file=sys.stderr)
            return 1
        print("report matches the expected table", file=sys.stderr)
    return 0


def _cmd_export_dot(args) -> int:
    net = _load_net(args.net)
    print(formats.export_dot(net), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfc",
        description="Workflow-net complexity measures and property checking",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="compute complexity measures for a net")
    p.add_argument("net")
    p.add_argument("--measure", action="append", choices=list(MEASURE_IDS))
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("compose", help="combine nets with a block operator")
    p.add_argument("--op", required=True, choices=[op.value for op in Operator])
    p.add_argument("-o", "--output", required=True)
    p.add_argument("nets", nargs="+")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("validate", help="check the workflow-net invariants")
    p.add_argument("net")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("generate", help="instantiate a parametric net family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--param", action="append", metavar="k=v")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("language", help="enumerate the bounded visible language")
    p.add_argument("net")
    p.add_argument("--max-len", type=int, default=12)
    p.set_defaults(func=_cmd_language)

    p = sub.add_parser("properties", help="check one measure/property cell")
    p.add_argument("--measure", required=True)
    p.add_argument("--property", required=True)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_properties)

    p = sub.add_parser("report", help="populate the full verdict grid")
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--expected", help="expected-table fixture to compare against")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--out-dir", help="also write report.csv/report.json/verdicts.png")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("export-dot", help="emit DOT text for a net")
    p.add_argument("net")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WfcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
