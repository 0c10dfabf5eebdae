from math import comb

import pytest
from hypothesis import given
from hypothesis.strategies import integers
from pydantic import ValidationError

from config.settings import settings
from src.arith.errors import CapacityError, InvalidArgumentError
from src.arith.numtheory import isqrt
from src.arith.repdigit import classify
from src.oracle.brute import brute_force, count_tilde_d1, repdigit_by_digits, verify_record
from src.search.core import search_base, small_phase
from src.search.models import OutputRecord, Solution


def test_repdigit_by_digits():
    assert repdigit_by_digits(1106, 23) == (2, 3)
    assert repdigit_by_digits(7, 10) == (7, 1)
    assert repdigit_by_digits(12, 10) is None
    assert repdigit_by_digits(100, 10) is None


@given(integers(min_value=2, max_value=300), integers(min_value=1, max_value=10**30))
def test_repdigit_by_digits_agrees_with_classify(g, n):
    rd = classify(n, g)
    assert repdigit_by_digits(n, g) == (None if rd is None else rd.as_pair())


def test_brute_force_g23():
    found = brute_force(23, 100)
    assert [s.key for s in found] == [(65, 17, 7)]
    assert found[0].witnesses == ((5, 2), (19, 2), (2, 3))
    assert brute_force(23, 60) == []


def test_brute_force_g2():
    assert brute_force(2, 10**5) == []


@pytest.mark.parametrize("g, a_max", [(1, 10), (10, 2)])
def test_brute_force_rejects(g, a_max):
    with pytest.raises(InvalidArgumentError):
        brute_force(g, a_max)


@pytest.mark.parametrize("g", range(2, 31))
def test_small_phase_matches_oracle(g):
    assert small_phase(g, 2001) == brute_force(g, 2000)


@pytest.mark.slow
@pytest.mark.parametrize("g", range(2, 41))
def test_search_matches_oracle(g):
    searched = [s for s in search_base(g) if s.a <= 5000]
    assert searched == brute_force(g, 5000)


# Single-digit census

def _census_by_enumeration(g):
    return sum(
        1
        for a in range(3, g)
        for b in range(2, a)
        if a * b <= g - 2
        for c in range(1, b)
    )


def test_count_tilde_d1_small():
    assert count_tilde_d1(5) == 0
    for g in range(5, 80):
        assert count_tilde_d1(g) == _census_by_enumeration(g)


@pytest.mark.parametrize("g", [50, 100, 102, 500, 1000, 5000, 12345])
def test_count_tilde_d1_lower_bound(g):
    assert count_tilde_d1(g) >= comb(isqrt(g - 2), 3)


def test_count_tilde_d1_102():
    assert count_tilde_d1(102) >= 120


@pytest.mark.parametrize("g", [10**4, 10**5])
def test_count_tilde_d1_scaling(g):
    ratio = count_tilde_d1(g) / g**1.5
    assert 0.4 < ratio < 0.7


@pytest.mark.parametrize("g", [500, 1000, 2000])
def test_count_tilde_d1_fourfold_growth(g):
    ratio = count_tilde_d1(4 * g) / count_tilde_d1(g)
    assert 6 <= ratio <= 10


def test_count_tilde_d1_rejects_small_base():
    with pytest.raises(InvalidArgumentError):
        count_tilde_d1(4)


def test_count_tilde_d1_capacity(monkeypatch):
    monkeypatch.setattr(settings, "oracle_census_limit", 1000)
    with pytest.raises(CapacityError):
        count_tilde_d1(1001)


# Record verification

def test_verify_record():
    record = OutputRecord.from_solution(Solution.from_triple(42, 136, 93, 6))
    assert verify_record(record)


@pytest.mark.parametrize(
    "fields",
    [
        {"g": "23", "a": "65", "b": "17", "c": "7", "witnesses": [(5, 2), (19, 2), (3, 3)]},
        {"g": "23", "a": "65", "b": "17", "c": "8", "witnesses": [(5, 2), (19, 2), (2, 3)]},
        {"g": "23", "a": "17", "b": "65", "c": "7", "witnesses": [(5, 2), (19, 2), (2, 3)]},
        {"g": "1", "a": "65", "b": "17", "c": "7", "witnesses": [(5, 2), (19, 2), (2, 3)]},
    ],
)
def test_verify_record_rejects(fields):
    assert not verify_record(OutputRecord(**fields))


@pytest.mark.parametrize("digits", ["²", "٧", "７", "7.0", ""])
def test_output_record_rejects_non_ascii_digits(digits):
    with pytest.raises(ValidationError):
        OutputRecord(g="23", a="65", b="17", c=digits, witnesses=[(5, 2), (19, 2), (2, 3)])
