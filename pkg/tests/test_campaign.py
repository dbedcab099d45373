import json

import pytest

from errors import BadConfig, EmptyCheckSet, UnknownCheck
from inequality_suite import CampaignConfig, run_campaign


def document(report) -> str:
    return json.dumps(report.to_document(), sort_keys=True)


class TestCampaignConfig:
    def test_defaults(self):
        cfg = CampaignConfig.build(checks=["all"])
        assert cfg.trials == 1000 and cfg.seed == 42
        assert cfg.n_range == (2, 16)

    @pytest.mark.parametrize(
        "fields",
        [
            {"trials": 0},
            {"seed": -1},
            {"n_range": (1, 4)},
            {"q_range": (2.0, 1.0)},
            {"v_range": (0.1, 1.0)},
            {"band": 0.0},
            {"tol": 0.0},
            {"floor": 0.1},
            {"workers": 0},
        ],
    )
    def test_rejects_invalid_fields(self, fields):
        with pytest.raises(BadConfig):
            CampaignConfig.build(checks=["all"], **fields)


class TestRunCampaign:
    def test_scalar_family_passes(self):
        report = run_campaign(CampaignConfig(checks=["lemma_2_1", "lemma_3_3"], trials=200, seed=3))
        assert report.passed
        assert [check.id for check in report.checks][:4] == ["lemma_2_1_I_i", "lemma_2_1_I_ii", "lemma_2_1_II_i", "lemma_2_1_II_ii"]
        for check in report.checks:
            assert check.violations == 0
            assert check.worst_instance is not None
            assert check.min_slack is not None

    def test_whole_catalog_passes(self):
        report = run_campaign(CampaignConfig(checks=["all"], trials=25, seed=42))
        failing = [(check.id, check.worst_chains) for check in report.checks if check.violations]
        assert failing == []
        assert report.passed
        assert all(check.skipped == 0 for check in report.checks)

    def test_identities_hold_tightly(self):
        ids = ["id_eq17", "id_eq18", "id_eq21", "id_eq12", "id_eq13", "id_S_convex", "id_hat_convex", "id_fd_decomp", "id_arimoto"]
        report = run_campaign(CampaignConfig(checks=ids, trials=200, seed=11))
        assert report.passed

    def test_deterministic(self):
        cfg = CampaignConfig(checks=["lemma_2_1_I_ii"], trials=100, seed=7)
        assert document(run_campaign(cfg)) == document(run_campaign(cfg))

    def test_workers_do_not_change_the_report(self):
        checks = ["prop_2_2", "thm_4_1", "thm_5_2", "id_S_limit"]
        serial = run_campaign(CampaignConfig(checks=checks, trials=30, seed=5, workers=1))
        pooled = run_campaign(CampaignConfig(checks=checks, trials=30, seed=5, workers=4))
        serial_doc = serial.to_document()
        pooled_doc = pooled.to_document()
        assert serial_doc["checks"] == pooled_doc["checks"]
        assert serial_doc["pass"] == pooled_doc["pass"]

    def test_seed_changes_instances(self):
        a = run_campaign(CampaignConfig(checks=["thm_5_1"], trials=10, seed=1))
        b = run_campaign(CampaignConfig(checks=["thm_5_1"], trials=10, seed=2))
        assert a.checks[0].worst_instance != b.checks[0].worst_instance

    def test_timing_is_separate(self):
        cfg = CampaignConfig(checks=["js_quarter"], trials=5)
        assert "timing" not in run_campaign(cfg).to_document()
        timed = run_campaign(cfg, timing=True).to_document()
        assert set(timed["timing"]) == {"js_quarter", "total"}

    def test_violations_are_counted(self, broken_check):
        report = run_campaign(CampaignConfig(checks=[broken_check.check_id, "thm_5_1"], trials=12))
        assert not report.passed
        assert report.violations == 12
        broken = report.checks[0]
        assert broken.violations == 12
        assert broken.min_slack == -1.0
        assert broken.worst_chains[0]["labels"] == ["one", "zero"]
        assert not broken.passed
        assert report.checks[1].passed

    def test_unevaluated_trials_fail_the_check(self, overflowing_check):
        report = run_campaign(CampaignConfig(checks=[overflowing_check.check_id, "thm_5_1"], trials=5))
        assert not report.passed
        assert report.violations == 0
        assert report.skipped == 5
        check = report.checks[0]
        assert not check.passed
        assert check.skipped == 5
        assert check.min_slack is None
        assert check.worst_instance is None
        assert report.checks[1].passed
        assert report.to_document()["pass"] is False

    def test_empty_selection(self):
        with pytest.raises(EmptyCheckSet):
            run_campaign(CampaignConfig(checks=[]))

    def test_unknown_check(self):
        with pytest.raises(UnknownCheck):
            run_campaign(CampaignConfig(checks=["nosuch"]))

    def test_range_outside_check_domain(self):
        with pytest.raises(BadConfig):
            run_campaign(CampaignConfig(checks=["lemma_2_1_I_ii"], q_range=(0.1, 0.5), trials=1))
