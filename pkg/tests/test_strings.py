import itertools

import pytest
from hypothesis import given, strategies as st

from fibrun.errors import BudgetExceededError, LengthMismatchError, NotRunConstrainedError
from fibrun.strings import (
    complement,
    count_vertices,
    enumerate_vertices,
    fibonacci,
    from_code,
    hamming,
    is_run_constrained,
    is_vertex,
    one_runs,
    runs,
    to_code,
    validate_vertex,
    vertex_codes,
)

from conftest import EX21_BETA, EX21_GAMMA, EX28_ALPHA, EX28_BETA

bits = st.text(alphabet="01", max_size=40)


def brute_vertices(n):
    return ["".join(t) for t in itertools.product("01", repeat=n) if is_run_constrained("".join(t) + "00")]


def test_runs_basic():
    assert runs("1110010") == [(1, 3), (0, 2), (1, 1), (0, 1)]
    assert runs("") == []


def test_runs_example_beta():
    # the printed string decomposes into 8 runs
    assert [length for _, length in runs(EX21_BETA)] == [1, 2, 2, 3, 3, 5, 3, 2]


@given(bits)
def test_runs_round_trip(s):
    rl = runs(s)
    assert "".join(str(b) * k for b, k in rl) == s
    assert all(a[0] != b[0] for a, b in zip(rl, rl[1:]))


def test_one_runs():
    assert one_runs("0110111") == [(1, 3), (4, 7)]


@pytest.mark.parametrize(
    "s, ok",
    [("100100", True), ("1100", False), ("000000", True), ("", True), ("1", False), ("10", False), ("100", True)],
)
def test_is_run_constrained(s, ok):
    assert is_run_constrained(s) is ok


@pytest.mark.parametrize("s, n, ok", [("1001", 4, True), ("11", 2, False), ("110", 3, True), ("1001", 5, False)])
def test_is_vertex(s, n, ok):
    assert is_vertex(s, n) is ok


def test_validate_vertex_errors_are_distinct():
    with pytest.raises(LengthMismatchError):
        validate_vertex("1001", 5)
    with pytest.raises(NotRunConstrainedError, match="coordinate 1"):
        validate_vertex("11", 2)
    with pytest.raises(NotRunConstrainedError, match="coordinate 4"):
        validate_vertex("00011", 5)
    with pytest.raises(ValueError):
        validate_vertex("10a", 3)


def test_enumerate_small():
    assert enumerate_vertices(0) == [""]
    assert enumerate_vertices(2) == ["00", "01", "10"]
    three = enumerate_vertices(3)
    assert len(three) == 5 and "110" in three


@pytest.mark.parametrize("n", range(0, 15))
def test_enumerate_matches_brute_force(n):
    assert enumerate_vertices(n) == brute_vertices(n)


def test_count_values():
    assert [count_vertices(n) for n in range(3)] == [1, 2, 3]
    assert count_vertices(25) == 196418 == fibonacci(27)


def test_count_is_exact_for_large_n():
    assert count_vertices(200) == fibonacci(202)


def test_enumeration_is_sorted_and_valid():
    vs = enumerate_vertices(12)
    assert vs == sorted(set(vs))
    assert all(is_vertex(v, 12) for v in vs)


def test_suffixes_of_vertices_are_vertices():
    for v in enumerate_vertices(11):
        for i in range(len(v) + 1):
            assert is_vertex(v[i:], len(v) - i)


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        vertex_codes(30, max_count=1000)
    with pytest.raises(BudgetExceededError):
        vertex_codes(63)


def test_hamming():
    assert hamming("1001", "0110") == 4
    assert hamming(EX28_ALPHA, EX28_BETA) == 18
    assert hamming(EX21_BETA, EX21_GAMMA) == 8
    with pytest.raises(LengthMismatchError):
        hamming("1", "10")


@given(bits)
def test_code_round_trip(s):
    assert from_code(to_code(s), len(s)) == s
    assert complement(complement(s)) == s
