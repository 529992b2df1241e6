"""Command-line interface: run a scenario, explain a factor, or validate.

Exit codes: 0 success, 2 scenario/validation error, 3 numerical failure.
Scenario paths that do not exist as given are searched for in the
directories listed in ``AAMCBA_SCENARIO_DIR`` (``os.pathsep`` separated);
``default`` or no ``--scenario`` at all uses the bundled scenario.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import yaml

from .engine import RunManifest, evaluate, explain, run
from .forecast import ForecastError
from .ingest import (
    FACTOR_IDS,
    TOGGLE_DEFAULTS,
    ScenarioError,
    default_scenario_path,
    load_scenario,
    validate_scenario,
)

_EMIT_KINDS = ("csv", "json", "plotdata")


def find_scenario(spec: str | None) -> Path:
    """Resolve a scenario argument to a file path."""
    if spec is None or spec == "default":
        return default_scenario_path()
    path = Path(spec)
    if path.is_file():
        return path
    if not path.is_absolute():
        for entry in os.environ.get("AAMCBA_SCENARIO_DIR", "").split(os.pathsep):
            if not entry:
                continue
            for candidate in (Path(entry) / spec, Path(entry) / f"{spec}.yaml"):
                if candidate.is_file():
                    return candidate
    raise ScenarioError(f"scenario file not found: {spec}")


def _parse_factors(text: str | None) -> tuple[str, ...]:
    if text is None:
        return FACTOR_IDS
    names = [part.strip().upper() for part in text.replace(",", " ").split()]
    if not names:
        raise ScenarioError("--factors given but empty")
    unknown = [n for n in names if n not in FACTOR_IDS]
    if unknown:
        raise ScenarioError(
            f"unknown benefit factors: {unknown}; valid: {', '.join(FACTOR_IDS)}"
        )
    return tuple(f for f in FACTOR_IDS if f in set(names))


def _parse_toggles(pairs: list[str] | None) -> dict:
    toggles: dict = {}
    for pair in pairs or []:
        key, sep, raw = pair.partition("=")
        if not sep:
            raise ScenarioError(f"--toggle needs key=value, got {pair!r}")
        key = key.strip()
        if key not in TOGGLE_DEFAULTS:
            raise ScenarioError(
                f"unknown toggle '{key}'; valid: {', '.join(sorted(TOGGLE_DEFAULTS))}"
            )
        toggles[key] = yaml.safe_load(raw.strip())
    return toggles


def _parse_emit(text: str | None) -> frozenset[str]:
    if text is None:
        return frozenset(_EMIT_KINDS)
    kinds = {part.strip().lower() for part in text.replace(",", " ").split()}
    unknown = kinds - set(_EMIT_KINDS)
    if unknown:
        raise ScenarioError(
            f"unknown emit kinds: {sorted(unknown)}; valid: {', '.join(_EMIT_KINDS)}"
        )
    if not kinds:
        raise ScenarioError("--emit given but empty")
    return frozenset(kinds)


def _add_scenario_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--scenario",
        default=None,
        help="scenario file (YAML/JSON); 'default' or omitted = bundled scenario",
    )
    parser.add_argument(
        "--factors",
        default=None,
        help="comma-separated subset of BF1..BF9 (default: all)",
    )
    parser.add_argument(
        "--pin-orders",
        action="store_true",
        help="use the scenario's pinned (p,d,q) orders where given "
        "instead of automatic identification",
    )
    parser.add_argument(
        "--best-effort",
        action="store_true",
        help="keep forecasts whose residuals fail whiteness checks "
        "(warn instead of abort)",
    )
    parser.add_argument(
        "--toggle",
        action="append",
        metavar="KEY=VALUE",
        help="override a policy toggle (repeatable); "
        f"toggles: {', '.join(sorted(TOGGLE_DEFAULTS))}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aamcba",
        description="Scenario-driven cost-benefit analysis for advanced air mobility.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_parser = sub.add_parser(
        "run", help="evaluate a scenario and write reports"
    )
    _add_scenario_options(run_parser)
    run_parser.add_argument(
        "--out", default="aamcba_out", help="output directory (default: aamcba_out)"
    )
    run_parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed recorded in the summary for simulation-backed diagnostics; "
        "the current pipeline is deterministic, so it does not change results",
    )
    run_parser.add_argument(
        "--emit",
        default=None,
        help="comma-separated subset of csv,json,plotdata (default: all)",
    )

    explain_parser = sub.add_parser(
        "explain", help="print the derivation of one factor in one year"
    )
    explain_parser.add_argument("factor", help="factor id, e.g. BF5")
    explain_parser.add_argument("year", type=int, help="horizon year, e.g. 2022")
    _add_scenario_options(explain_parser)

    validate_parser = sub.add_parser(
        "validate", help="check a scenario without running it"
    )
    validate_parser.add_argument("--scenario", default=None)
    validate_parser.add_argument("--factors", default=None)
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    manifest = RunManifest(
        scenario_path=find_scenario(args.scenario),
        output_dir=Path(args.out),
        enabled_factors=_parse_factors(args.factors),
        seed=args.seed,
        emit=_parse_emit(args.emit),
        pin_orders=args.pin_orders,
        best_effort=args.best_effort,
        toggles=_parse_toggles(args.toggle),
    )
    result = run(manifest)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    first, last = result.annual[0], result.annual[-1]
    print(f"scenario: {result.scenario.name}")
    print(f"factors: {', '.join(result.factors)}")
    print(
        f"net positive gain, {first.year}: {first.npi.mean:,.0f} "
        f"[{first.npi.lower:,.0f} .. {first.npi.upper:,.0f}]"
    )
    print(
        f"net positive gain, {last.year}: {last.npi.mean:,.0f} "
        f"[{last.npi.lower:,.0f} .. {last.npi.upper:,.0f}]"
    )
    print(f"outputs written to {manifest.output_dir}")
    return 0


def _cmd_explain(args: argparse.Namespace) -> int:
    scenario = load_scenario(find_scenario(args.scenario))
    toggles = _parse_toggles(args.toggle)
    if toggles:
        scenario = scenario.with_overrides(toggles=toggles)
    factor = args.factor.strip().upper()
    factors = _parse_factors(args.factors) if args.factors else None
    if factors is not None and factor not in factors:
        raise ScenarioError(f"factor {factor} not in --factors selection")
    result = evaluate(
        scenario,
        factors if factors is not None else (factor,),
        pin_orders=args.pin_orders,
        best_effort=args.best_effort,
    )
    print(explain(result, factor, args.year))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = load_scenario(find_scenario(args.scenario))
    warnings = validate_scenario(scenario, _parse_factors(args.factors))
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(f"scenario '{scenario.name}' is valid")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": _cmd_run, "explain": _cmd_explain, "validate": _cmd_validate}
    try:
        return handlers[args.command](args)
    except ScenarioError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ForecastError as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return 3
    except (FloatingPointError, ZeroDivisionError, ValueError) as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
