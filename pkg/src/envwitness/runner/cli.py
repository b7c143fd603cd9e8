"""Command line entry point: run, list-scenarios, verify, describe."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..qmat import ContractError
from .catalog import CATALOG, DESCRIPTIONS, catalog_document
from .execute import RunError, run_scenario, write_outputs
from .families import bound_regime
from .scenario import ScenarioError, load_scenario

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_INVALID, EXIT_CHECK_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="envwitness", description="Trace-distance witnesses for correlated environments.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    run = sub.add_parser("run", help="run a scenario from a JSON file, or a catalog id")
    run.add_argument("config", help="path to a scenario JSON file, or a catalog id such as fig2a")
    run.add_argument("--out", default="out", help="output directory (default: ./out)")
    sub.add_parser("list-scenarios", help="list the built-in scenarios")
    ver = sub.add_parser("verify", help="run the oracle battery")
    ver.add_argument("--json", action="store_true", help="emit the report as JSON")
    desc = sub.add_parser("describe", help="print a built-in scenario")
    desc.add_argument("id")
    return parser


def _load(config: str):
    path = Path(config)
    if path.is_file():
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ScenarioError(f"cannot read {path}: {exc}") from exc
        return load_scenario(text)
    if config in CATALOG:
        return load_scenario(json.dumps(catalog_document(config)))
    raise ScenarioError(f"{config}: no such file or catalog scenario")


def _cmd_run(args) -> int:
    spec = _load(args.config)
    record = run_scenario(spec)
    csv_path, meta_path = write_outputs(record, args.out)
    w = record.witness
    print(f"{spec.id}: maxGrowth={w.max_growth:.6g} bound({record.regime})={w.bound:.6g} "
          f"gap={w.tightness_gap:.3g} verdict={w.verdict}")
    print(f"wrote {csv_path}")
    print(f"wrote {meta_path}")
    return EXIT_OK


def _cmd_list(args) -> int:
    for sid in CATALOG:
        doc = CATALOG[sid]
        print(f"{sid:15s} {doc['family']:7s} {doc['case']:25s} {DESCRIPTIONS[sid]}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .verify import verify

    report = verify()
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_describe(args) -> int:
    doc = catalog_document(args.id)
    print(DESCRIPTIONS[args.id])
    print(f"bound regime: {bound_regime(doc['family'], doc['case'])}")
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


_COMMANDS = {"run": _cmd_run, "list-scenarios": _cmd_list, "verify": _cmd_verify, "describe": _cmd_describe}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_INVALID
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except (ScenarioError, ContractError) as exc:
        print(f"invalid scenario: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (RunError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
