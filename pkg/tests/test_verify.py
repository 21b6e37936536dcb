import pytest

from dicirculant.config import OracleBudget
from dicirculant.exceptions import BudgetExceededError, InconsistentCountError
from dicirculant.schema import Provenance
from dicirculant.verify import verify_formulas, verify_outdegree_expansion


@pytest.mark.parametrize("p", (3, 5))
def test_odd_primes_pass(p):
    report = verify_formulas(p)
    assert report.passed, report.failures()
    names = {comparison.name for comparison in report.comparisons}
    assert {"total", "connected total", "circulant total"} <= names
    assert f"k={4 * p - 1}" in names
    assert f"circulant k={2 * p - 1}" in names
    assert "published connected total" in names


def test_disconnected_constants_are_confirmed():
    report = verify_formulas(3)
    checked = [c for c in report.comparisons if c.name.startswith("disconnected outside")]
    assert [c.actual for c in checked] == [1, 2, 1]
    assert all(c.passed for c in checked)


def test_quaternion_passes_against_published_values():
    report = verify_formulas(2)
    assert report.passed
    binding = [c for c in report.comparisons if not c.informational]
    assert all(c.expected_source == Provenance.PUBLISHED_TABLE for c in binding)
    assert any(c.informational for c in report.comparisons)
    assert any("alpha-family has 8 members" in note for note in report.notes)


def test_budget_errors_propagate():
    with pytest.raises(BudgetExceededError):
        verify_formulas(7)
    with pytest.raises(BudgetExceededError):
        verify_formulas(5, OracleBudget(max_work=2**20))


@pytest.mark.slow
def test_seven_passes_with_a_larger_budget():
    report = verify_formulas(7, OracleBudget(max_work=2**34, partitions=4))
    assert report.passed, report.failures()
    assert any("deviates from Q(x)" in note for note in report.notes)


def test_odd_primes_check_both_expansion_readings():
    report = verify_formulas(3)
    names = {comparison.name for comparison in report.comparisons}
    assert {f"expansion k={k}" for k in range(12)} <= names
    assert not any(c.informational for c in report.comparisons)
    assert any("agrees with Q(x) for every k" in note for note in report.notes)


@pytest.mark.parametrize("p", (3, 5))
def test_printed_expansion_holds_for_small_primes(p):
    report = verify_outdegree_expansion(p)
    assert report.passed
    assert len(report.comparisons) == 4 * p
    assert any("agrees with Q(x)" in note for note in report.notes)


@pytest.mark.parametrize("p", (7, 11, 13))
def test_printed_expansion_deviations_are_informational(p):
    report = verify_outdegree_expansion(p)
    assert report.passed, report.failures()
    printed = [c for c in report.comparisons if c.name.startswith("printed expansion")]
    assert printed
    assert all(c.informational and not c.passed for c in printed)
    assert any("deviates from Q(x)" in note for note in report.notes)
    assert all(c.expected == c.actual for c in report.comparisons if not c.informational)


def test_uncomputable_counts_become_failures(monkeypatch):
    def inconsistent(p):
        raise InconsistentCountError(f"p={p}: closed form gives 271, cycle index at 2 gives 272")

    monkeypatch.setattr("dicirculant.verify.count_total", inconsistent)
    report = verify_formulas(3)
    assert not report.passed
    (failure,) = [c for c in report.failures() if c.name == "total"]
    assert failure.expected is None
    assert failure.actual == 272
    assert "closed form gives 271" in failure.error
