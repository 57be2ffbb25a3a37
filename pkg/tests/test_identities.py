"""
单元测试：恒等式注册表与验证报告
"""

import pytest
from pydantic import ValidationError

from conftest import DEFAULT_SEED, EXTRA_SEEDS
from swalg.grassmann import (
    IDENTITY_REGISTRY,
    IdentityReport,
    InstanceResult,
    get_identity,
    register_identity,
    verify_identities,
    verify_identity,
)

ALL_IDS = list("abcdefghij")


def test_registry_has_all_identities():
    assert sorted(IDENTITY_REGISTRY) == ALL_IDS


def test_get_identity_unknown():
    with pytest.raises(KeyError, match="可用恒等式"):
        get_identity("z")


@pytest.mark.parametrize("identity_id", ALL_IDS)
def test_identity_holds_small_t(identity_id):
    report = verify_identity(identity_id, (3, 5), seed=DEFAULT_SEED)
    assert report.passed, report.first_counterexample
    assert report.results, "至少运行一个实例"
    assert all(r.t >= get_identity(identity_id).t_min for r in report.results)


@pytest.mark.parametrize("seed", EXTRA_SEEDS)
def test_randomized_identities_across_seeds(seed):
    """随机化的恒等式在多个种子下都成立"""
    reports = verify_identities(["a", "i", "j"], (3, 5), seed=seed)
    for report in reports:
        assert report.passed, f"({report.identity_id}) {report.first_counterexample}"


def test_t_min_clamps_range():
    report = verify_identity("g", (3, 5))
    assert report.t_range == (4, 5)
    assert [r.t for r in report.results] == [4, 5]


def test_default_range_starts_where_each_identity_is_checked():
    """未给出范围时 (d) 从 t=2 开始，其余从 3 开始，都到 10 为止"""
    assert verify_identity("d").t_range == (2, 10)
    assert verify_identity("b", (None, 4)).t_range == (3, 4)
    assert verify_identity("d", (None, 4)).t_range == (2, 4)
    assert [r.t for r in verify_identity("d", (1, 3)).results] == [2, 3]
    assert get_identity("g").default_t_min == 4


def test_same_seed_same_results():
    first = verify_identity("j", (4, 4), seed=DEFAULT_SEED)
    second = verify_identity("j", (4, 4), seed=DEFAULT_SEED)
    assert first.passed == second.passed
    assert first.results[0].counterexample == second.results[0].counterexample


def test_parallel_matches_serial():
    serial = verify_identities(["b", "c", "e"], (3, 6), n_workers=1)
    pooled = verify_identities(["b", "c", "e"], (3, 6), n_workers=2)
    assert [r.passed for r in serial] == [r.passed for r in pooled]
    assert [[i.t for i in r.results] for r in serial] == [[i.t for i in r.results] for r in pooled]


@pytest.mark.slow
@pytest.mark.parametrize("identity_id", ALL_IDS)
def test_identity_holds_up_to_t8(identity_id):
    report = verify_identity(identity_id, (6, 8), seed=DEFAULT_SEED)
    assert report.passed, report.first_counterexample


@pytest.mark.slow
def test_identities_hold_at_t9_and_t10():
    reports = verify_identities(ALL_IDS, (9, 10), seed=DEFAULT_SEED)
    for report in reports:
        assert report.passed, f"({report.identity_id}) {report.first_counterexample}"
        assert [r.t for r in report.results] == [9, 10]


def test_failure_is_reported_not_raised():
    @register_identity("_broken", "always fails", t_min=3)
    def broken(t, rng):
        return f"t={t} 故意失败"

    try:
        report = verify_identity("_broken", (3, 4))
        assert not report.passed
        assert report.first_counterexample == "t=3: t=3 故意失败"
    finally:
        IDENTITY_REGISTRY.pop("_broken")


def test_failed_instance_requires_counterexample():
    with pytest.raises(ValidationError):
        InstanceResult(t=3, passed=False)


def test_report_passed_with_no_failures():
    report = IdentityReport(identity_id="b", description="", t_range=(3, 3),
                            results=[InstanceResult(t=3, passed=True)])
    assert report.passed
    assert report.first_counterexample is None
