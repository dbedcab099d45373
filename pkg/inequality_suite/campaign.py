"""Seeded randomized campaigns over the check catalog."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Dict, Optional, Tuple

from config import MAX_REDRAWS
from errors import DomainError, EmptyCheckSet, ParameterOutOfDomain
from inequality_suite.checks import BaseCheck, CheckResult
from inequality_suite.models import CampaignConfig, CampaignReport, CheckInstance, CheckReport
from inequality_suite.registry import get_check, resolve_ids
from inequality_suite.seeding import trial_rng

logger = logging.getLogger(__name__)


def _draw_and_evaluate(check: BaseCheck, cfg: CampaignConfig, trial: int) -> Tuple[Optional[CheckInstance], Optional[CheckResult], int]:
    """Sample until an instance evaluates in double precision; returns (instance, result, redraws)."""
    rng = trial_rng(cfg.seed, check.check_id, trial)
    for attempt in range(MAX_REDRAWS):
        inst = check.sample(rng, cfg)
        try:
            return inst, check.evaluate(inst, cfg.tol), attempt
        except (DomainError, ParameterOutOfDomain) as e:
            logger.debug(f"{check.check_id} trial {trial}: redraw {attempt + 1} ({e})")
    return None, None, MAX_REDRAWS


def run_check_campaign(check: BaseCheck, cfg: CampaignConfig) -> CheckReport:
    """Run one check for cfg.trials trials.

    A trial whose draws all fail to evaluate is skipped. Skipped trials fail
    the check just as violations do.
    """
    violations = redraws = skipped = 0
    worst: Optional[Tuple[CheckInstance, CheckResult]] = None
    for trial in range(cfg.trials):
        inst, result, used = _draw_and_evaluate(check, cfg, trial)
        redraws += used
        if result is None:
            skipped += 1
            continue
        if not result.passed:
            violations += 1
        if worst is None or (result.passed, result.slack) < (worst[1].passed, worst[1].slack):
            worst = (inst, result)

    if violations:
        logger.warning(f"{check.check_id}: {violations} of {cfg.trials} trials violated the inequality")
    if skipped:
        logger.warning(f"{check.check_id}: {skipped} of {cfg.trials} trials never evaluated in {MAX_REDRAWS} draws")
    if not violations and not skipped:
        logger.info(f"{check.check_id}: {cfg.trials} trials passed ({redraws} redraws)")

    return CheckReport(
        id=check.check_id,
        family=check.family,
        trials=cfg.trials,
        passed=violations == 0 and skipped == 0,
        violations=violations,
        redraws=redraws,
        skipped=skipped,
        min_slack=worst[1].slack if worst else None,
        worst_instance=worst[0] if worst else None,
        worst_chains=[chain.to_dict() for chain in worst[1].chains] if worst else [],
    )


def _timed_check_campaign(check: BaseCheck, cfg: CampaignConfig) -> Tuple[CheckReport, float]:
    start = time.perf_counter()
    report = run_check_campaign(check, cfg)
    return report, time.perf_counter() - start


def run_campaign(cfg: CampaignConfig, timing: bool = False) -> CampaignReport:
    """Run every selected check for cfg.trials trials.

    Trial t of check c draws from a generator keyed on (seed, c, t) alone,
    so the report does not depend on the worker count or check order.
    With workers > 1 the checks run in a process pool.
    """
    if not cfg.checks:
        raise EmptyCheckSet()
    checks = [get_check(check_id) for check_id in resolve_ids(cfg.checks)]
    logger.info(f"Running {len(checks)} checks x {cfg.trials} trials with seed {cfg.seed}")

    start = time.perf_counter()
    if cfg.workers == 1 or len(checks) == 1:
        results = [_timed_check_campaign(check, cfg) for check in checks]
    else:
        with ProcessPoolExecutor(max_workers=min(cfg.workers, len(checks))) as pool:
            results = list(pool.map(_timed_check_campaign, checks, repeat(cfg)))
    total = time.perf_counter() - start

    reports = [report for report, _ in results]
    elapsed: Dict[str, float] = {report.id: seconds for report, seconds in results}
    return CampaignReport(
        seed=cfg.seed,
        config=cfg,
        checks=reports,
        passed=all(report.passed for report in reports),
        timing={**elapsed, "total": total} if timing else None,
    )
