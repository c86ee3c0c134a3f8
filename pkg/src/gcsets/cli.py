"""Command-line interface.

Four subcommands bind the generators, the analyzer and the verification
harness to files::

    gcsets generate --family principal --degree 3 -o set.json
    gcsets analyze set.json [-o report.json] [--svg diagram.svg]
    gcsets verify set.json --check nline [--assume-gm] [-o report.json]
    gcsets scan --config corpus.json -o report.json

Exit codes: 0 when every check passes or is inapplicable, 1 when at least
one fail verdict was produced (a counterexample candidate), 2 on usage or
input errors.  Outputs are byte-identical across runs for fixed seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import FAMILIES, GeneratorConfig, generate
from .errors import GenerationError
from .harness import CHECK_NAMES, analyze, corpus_run, verify_set
from .serialize import (
    line_from_dict,
    node_set_from_dict,
    node_set_to_dict,
    pretty_dumps,
)
from .svg import render_svg

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _load_node_set(path: str):
    return node_set_from_dict(_load_json(path))


def _cmd_generate(args: argparse.Namespace) -> int:
    config = GeneratorConfig(
        family=args.family,
        degree=args.degree,
        seed=args.seed,
        bound=args.bound,
        affine=args.affine,
    )
    lines = None
    if args.lines:
        lines = [line_from_dict(d) for d in _load_json(args.lines)]
    points = generate(config, lines=lines)
    _write_output(pretty_dumps(node_set_to_dict(points)), args.output)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    points = _load_node_set(args.input)
    report = analyze(points)
    _write_output(pretty_dumps(report), args.output)
    if args.svg:
        Path(args.svg).write_text(render_svg(points))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    points = _load_node_set(args.input)
    verdicts = verify_set(points, [args.check], assume_gm=args.assume_gm)
    tally = {"pass": 0, "fail": 0, "inapplicable": 0}
    for v in verdicts:
        tally[v.status] += 1
    report = {
        "fingerprint": verdicts[0].set_fingerprint if verdicts else None,
        "check": args.check,
        "verdicts": [v.to_dict() for v in verdicts],
        "summary": tally,
    }
    _write_output(pretty_dumps(report), args.output)
    return EXIT_FINDING if tally["fail"] else EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    spec = _load_json(args.config)
    configs = []
    for entry in spec.get("generators", []):
        count = int(entry.pop("count", 1))
        base_seed = int(entry.get("seed", 0))
        for i in range(count):
            configs.append(
                GeneratorConfig(
                    family=entry["family"],
                    degree=int(entry.get("degree", 3)),
                    seed=base_seed + i,
                    bound=int(entry.get("bound", 10)),
                    affine=bool(entry.get("affine", False)),
                )
            )
    checks = spec.get("checks", ["all"])
    report = corpus_run(configs, checks, assume_gm=bool(spec.get("assume_gm", False)))
    _write_output(pretty_dumps(report), args.output)
    return EXIT_FINDING if report["summary"]["fail"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcsets",
        description="Construct and verify poised / GC interpolation node sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a node set as JSON")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--degree", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--bound", type=int, default=10)
    gen.add_argument("--affine", action="store_true", help="apply a random affine map")
    gen.add_argument("--lines", help="JSON file with explicit generating lines")
    gen.add_argument("-o", "--output", default=None)
    gen.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", help="full structural report of a node set")
    ana.add_argument("input")
    ana.add_argument("-o", "--output", default=None)
    ana.add_argument("--svg", help="also write an incidence diagram")
    ana.set_defaults(func=_cmd_analyze)

    ver = sub.add_parser("verify", help="run one family of theorem checks")
    ver.add_argument("input")
    ver.add_argument("--check", required=True, choices=CHECK_NAMES + ("all",))
    ver.add_argument("--assume-gm", action="store_true", dest="assume_gm")
    ver.add_argument("-o", "--output", default=None)
    ver.set_defaults(func=_cmd_verify)

    scan = sub.add_parser("scan", help="run checks over a generated corpus")
    scan.add_argument("--config", required=True)
    scan.add_argument("-o", "--output", default=None)
    scan.set_defaults(func=_cmd_scan)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError, GenerationError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
