import threading
from fractions import Fraction

import pytest

from fubini_kit.stirling import (StirlingCache, degenerate_exp_series, stirling1, stirling2,
                                 stirling2_degenerate, stirling2_r)


def set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_r_stirling(n, k, r):
    """Partitions of {0..n-1} into k blocks with 0..r-1 in distinct blocks."""
    count = 0
    for part in set_partitions(list(range(n))):
        if len(part) != k:
            continue
        if all(sum(1 for e in block if e < r) <= 1 for block in part):
            count += 1
    return count


def test_first_kind_row_three():
    assert [stirling1(3, k) for k in range(4)] == [0, 2, -3, 1]
    assert stirling1(4, 4) == 1
    assert stirling1(5, 0) == 0 and stirling1(0, 0) == 1


def test_first_kind_matches_falling_factorial():
    for n in range(8):
        coeffs = [1]
        for j in range(n):
            coeffs = [(coeffs[i - 1] if i else 0) - j * (coeffs[i] if i < len(coeffs) else 0)
                      for i in range(len(coeffs) + 1)]
        assert [stirling1(n, k) for k in range(n + 1)] == coeffs


def test_second_kind_by_enumeration():
    assert stirling2(4, 2) == 7
    for n in range(8):
        for k in range(n + 1):
            assert stirling2(n, k) == brute_r_stirling(n, k, 0)
    assert stirling2(6, 0) == 0 and stirling2(3, 3) == 1


def test_r_stirling_by_enumeration():
    assert stirling2_r(3, 2, 1) == 3
    assert stirling2_r(3, 2, 2) == 2
    for r in range(4):
        for n in range(r, 8):
            for k in range(n + 1):
                assert stirling2_r(n, k, r) == brute_r_stirling(n, k, r), (n, k, r)


def test_r_stirling_table_cases():
    for r in range(5):
        for k in range(7):
            assert stirling2_r(r, k, r) == int(k == r)
            for n in range(r):
                assert stirling2_r(n, k, r) == 0


def test_shift_identity_fails_below_r():
    # {1 1}_2 = 0 but {1 1}_1 - 1*{0 1}_1 = 1: the shift needs n >= r
    assert stirling2_r(1, 1, 2) == 0
    assert stirling2_r(1, 1, 1) - stirling2_r(0, 1, 1) == 1


def test_degenerate_values():
    lam = Fraction(1, 3)
    assert stirling2_degenerate(2, 1, lam) == 1 - lam
    for n in range(7):
        assert stirling2_degenerate(n, n, Fraction(-2, 5)) == 1
        for k in range(n + 1):
            assert stirling2_degenerate(n, k, 0) == stirling2(n, k)


def test_degenerate_exp_series_at_zero_is_exp():
    s = degenerate_exp_series(0, 6)
    assert s.coeffs == [Fraction(1, 1)] + [Fraction(1, f) for f in (1, 2, 6, 24, 120, 720)]


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_cache_is_thread_safe():
    cache = StirlingCache()
    results = []

    def work():
        results.append([cache.stirling2(20, k) for k in range(21)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0] == [stirling2(20, k) for k in range(21)]
