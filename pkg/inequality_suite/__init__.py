from inequality_suite.campaign import run_campaign, run_check_campaign
from inequality_suite.chain import BoundChain, Relation
from inequality_suite.checks import BaseCheck, CheckResult, ParamSpec
from inequality_suite.models import CampaignConfig, CampaignReport, CheckInfo, CheckInstance, CheckReport
from inequality_suite.registry import CHECK_REGISTRY, families, get_check, list_checks, resolve, resolve_ids, run_check
from inequality_suite.seeding import trial_rng

__all__ = [
    "run_campaign",
    "run_check_campaign",
    "BoundChain",
    "Relation",
    "BaseCheck",
    "CheckResult",
    "ParamSpec",
    "CampaignConfig",
    "CampaignReport",
    "CheckInfo",
    "CheckInstance",
    "CheckReport",
    "CHECK_REGISTRY",
    "families",
    "get_check",
    "list_checks",
    "resolve",
    "resolve_ids",
    "run_check",
    "trial_rng",
]
