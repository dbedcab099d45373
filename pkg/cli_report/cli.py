"""Command-line surface: compute, divergence, verify, bounds, oracle and list.

Exit codes: 0 on success, 1 when a verification campaign finds a
violation, 2 on usage, input or validation errors.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

from cli_report.io_utils import load_distribution, rows_as_records, save_as_csv, save_as_json
from cli_report.sweeps import is_range, parse_range, sweep_check
from config import DEFAULT_NODES, DEFAULT_TOL, LOG_LEVEL
from deformed_math import KernelSpec, q_log, qlog_quadrature_oracle
from divergence_kernels import DIVERGENCE_REGISTRY, dispatch_divergence
from entropy_kernels import ENTROPY_REGISTRY, MeasureParams, dispatch_entropy
from errors import BadParameter, QEntropyError
from inequality_suite import CampaignConfig, list_checks, run_campaign
from simplex import DivergencePair

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

MEASURE_FLAGS = ("q", "r", "alpha", "kernel", "mode")


def _kernel_spec(args) -> Optional[KernelSpec]:
    extras = {"exponent": args.exponent, "q": args.kernel_q, "r": args.kernel_r}
    if args.kernel is None:
        given = [name for name, value in extras.items() if value is not None]
        if given:
            raise BadParameter("kernel", None, f"--kernel to go with the kernel flags {', '.join(given)}")
        return None
    return KernelSpec(family=args.kernel, **{name: value for name, value in extras.items() if value is not None})


def _measure_params(args, measure: str, accepted: Sequence[str]) -> MeasureParams:
    kernel = _kernel_spec(args)
    supplied = {"q": args.q, "r": args.r, "alpha": args.alpha, "kernel": kernel, "mode": args.mode}
    for name in MEASURE_FLAGS:
        if supplied[name] is not None and name not in accepted:
            raise BadParameter(name, supplied[name], f"no {name} for measure {measure}")
    return MeasureParams(**{name: value for name, value in supplied.items() if value is not None})


def _lookup(registry: Dict[str, object], measure: str):
    handler = registry.get(measure)
    if handler is None:
        raise BadParameter("measure", measure, "one of " + ", ".join(sorted(registry)))
    return handler


def cmd_compute(args) -> int:
    handler = _lookup(ENTROPY_REGISTRY, args.measure)
    params = _measure_params(args, args.measure, handler.parameters)
    p = load_distribution(args.input)
    value = dispatch_entropy(args.measure, p, params)
    save_as_json({"measure": args.measure, "params": params.used(handler.parameters), "value": value}, args.output)
    return EXIT_OK


def cmd_divergence(args) -> int:
    handler = _lookup(DIVERGENCE_REGISTRY, args.measure)
    params = _measure_params(args, args.measure, handler.parameters)
    pair = DivergencePair(load_distribution(args.p), load_distribution(args.r_path))
    value = dispatch_divergence(args.measure, pair, params)
    save_as_json({"measure": args.measure, "params": params.used(handler.parameters), "value": value}, args.output)
    return EXIT_OK


def _campaign_fields(args) -> Dict[str, object]:
    fields: Dict[str, object] = {"checks": [name for item in args.checks for name in item.split(",") if name]}
    for name in ("trials", "seed", "band", "tol", "floor", "workers"):
        if getattr(args, name) is not None:
            fields[name] = getattr(args, name)
    if args.n is not None:
        fields["n_range"] = parse_range(args.n, int)
    for name in ("q_range", "r_range", "x_range", "v_range"):
        if getattr(args, name) is not None:
            fields[name] = parse_range(getattr(args, name))
    return fields


def cmd_verify(args) -> int:
    cfg = CampaignConfig.build(**_campaign_fields(args))
    report = run_campaign(cfg, timing=args.timing)
    save_as_json(report.to_document(), args.report)
    if not report.passed:
        logger.warning(f"Verification failed: {report.violations} violations, {report.skipped} skipped trials")
        return EXIT_VIOLATION
    logger.info(f"Verification passed for {len(report.checks)} checks")
    return EXIT_OK


def cmd_bounds(args) -> int:
    scalars = {"x": args.x, "q": args.q, "r": args.index_r, "v": args.v}
    sweeps = {name: text for name, text in scalars.items() if text is not None and is_range(text)}
    if len(sweeps) != 1:
        raise BadParameter("sweep", sorted(sweeps), "exactly one of --x, --q, --index-r, --v given as lo..hi")
    (variable, text), = sweeps.items()
    lo, hi = parse_range(text)
    fixed = {name: float(text) for name, text in scalars.items() if text is not None and name != variable}

    distributions: List[List[float]] = []
    for path in (args.p, args.r_path):
        if path is not None:
            distributions.append(load_distribution(path).to_list())

    table = sweep_check(args.check, variable, lo, hi, args.steps, fixed, distributions, _kernel_spec(args), args.tol)
    if args.format == "json":
        doc = table.to_document()
        doc["records"] = rows_as_records(table.header, table.rows)
        save_as_json(doc, args.output)
    else:
        save_as_csv(table.header, table.rows, args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    quadrature = qlog_quadrature_oracle(args.x, args.q, args.nodes)
    closed_form = float(q_log(args.x, args.q))
    save_as_json(
        {"x": args.x, "q": args.q, "nodes": args.nodes, "closed_form": closed_form, "quadrature": quadrature, "abs_diff": abs(closed_form - quadrature)},
        args.output,
    )
    return EXIT_OK


def cmd_list(args) -> int:
    names = [name for item in args.checks for name in item.split(",") if name]
    infos = list_checks(names or None)
    if args.format == "json":
        save_as_json([info.model_dump() for info in infos], args.output)
        return EXIT_OK
    for info in infos:
        params = "; ".join(info.parameters.values()) or "-"
        kernels = f" kernels={','.join(info.kernels)}" if info.kernels else ""
        print(f"{info.check_id}\t{info.family}\t{params}{kernels}\t{info.description}")
    return EXIT_OK


def _add_measure_flags(parser: argparse.ArgumentParser, r_flags: Sequence[str]):
    parser.add_argument("--measure", required=True)
    parser.add_argument("--q", type=float)
    parser.add_argument(*r_flags, dest="r", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--mode", choices=["plain", "tsallis", "biparam"])
    _add_kernel_flags(parser)
    parser.add_argument("--output")


def _add_kernel_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--kernel", choices=["log", "power", "qlog", "bilog"])
    parser.add_argument("--exponent", type=float)
    parser.add_argument("--kernel-q", type=float)
    parser.add_argument("--kernel-r", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qentropy", description="Deformed entropies, divergences and their inequalities.")
    parser.add_argument("--log-level", default=None, help=f"logging level (default {LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate an entropy")
    _add_measure_flags(compute, ("--r", "--index-r"))
    compute.add_argument("--input", required=True, help='JSON file {"weights": [...]}')
    compute.set_defaults(handler=cmd_compute)

    divergence = sub.add_parser("divergence", help="evaluate a divergence D(p||r)")
    _add_measure_flags(divergence, ("--index-r",))
    divergence.add_argument("--p", required=True)
    divergence.add_argument("--r", dest="r_path", required=True)
    divergence.set_defaults(handler=cmd_divergence)

    verify = sub.add_parser("verify", help="run a seeded verification campaign")
    verify.add_argument("--checks", nargs="+", default=["all"], help="check ids, family names or all")
    verify.add_argument("--trials", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--n", help="n range lo..hi")
    verify.add_argument("--q-range")
    verify.add_argument("--r-range")
    verify.add_argument("--x-range")
    verify.add_argument("--v-range")
    verify.add_argument("--band", type=float)
    verify.add_argument("--tol", type=float)
    verify.add_argument("--floor", type=float)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--report", help="report path (default stdout)")
    verify.add_argument("--timing", action="store_true", help="add per-check runtimes under a separate key")
    verify.set_defaults(handler=cmd_verify)

    bounds = sub.add_parser("bounds", help="tabulate chain terms along a sweep")
    bounds.add_argument("--check", required=True)
    bounds.add_argument("--x")
    bounds.add_argument("--q")
    bounds.add_argument("--index-r")
    bounds.add_argument("--v")
    bounds.add_argument("--steps", type=int, default=10)
    bounds.add_argument("--p")
    bounds.add_argument("--r", dest="r_path")
    _add_kernel_flags(bounds)
    bounds.add_argument("--tol", type=float, default=DEFAULT_TOL)
    bounds.add_argument("--format", choices=["csv", "json"], default="csv")
    bounds.add_argument("--output")
    bounds.set_defaults(handler=cmd_bounds)

    oracle = sub.add_parser("oracle", help="compare ln_q x with its Gauss-Legendre integral form")
    oracle.add_argument("--x", type=float, required=True)
    oracle.add_argument("--q", type=float, required=True)
    oracle.add_argument("--nodes", type=int, default=DEFAULT_NODES)
    oracle.add_argument("--output")
    oracle.set_defaults(handler=cmd_oracle)

    catalog = sub.add_parser("list", help="print the check catalog")
    catalog.add_argument("--checks", nargs="*", default=[])
    catalog.add_argument("--format", choices=["text", "json"], default="text")
    catalog.add_argument("--output")
    catalog.set_defaults(handler=cmd_list)
    return parser


def _one_line(error: Exception) -> str:
    return " ".join(line.strip() for line in str(error).splitlines() if line.strip())


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR
    try:
        if args.log_level:
            logging.getLogger().setLevel(args.log_level.upper())
        return args.handler(args)
    except (QEntropyError, ValidationError, OSError, ValueError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {_one_line(e)}", file=sys.stderr)
        return EXIT_ERROR
