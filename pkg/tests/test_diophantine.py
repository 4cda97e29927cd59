import itertools
import math

import pytest
from hypothesis import given, strategies as st

from collatz_patterns.core import extract_pattern
from collatz_patterns.diophantine import NoSolutionError, base_pair, normalized_xy, solve_linear


def brute_normalized(s1, q1, s2):
    """Scan every y in (0, 2**(q1+s2)) for an integer x."""
    a, b, c = 2 ** (q1 + s2), 3**s1, 2**q1 - 1
    sols = [((c + b * y) // a, y) for y in range(1, a) if (c + b * y) % a == 0]
    return sols


@pytest.mark.parametrize("a, b, c", [(4, 3, 1), (2, 3, 1), (7, 5, 0), (5, 7, 3), (6, 4, 2), (3, 3, 9)])
def test_solve_linear_examples(a, b, c):
    x, y = solve_linear(a, b, c)
    assert a * x - b * y == c


def test_solve_linear_brute_force_examples():
    # smallest x >= 0 found by scanning
    assert next((x, (4 * x - 1) // 3) for x in range(10) if (4 * x - 1) % 3 == 0) == (1, 1)
    assert next((x, (2 * x - 1) // 3) for x in range(10) if (2 * x - 1) % 3 == 0) == (2, 1)


def test_solve_linear_zero_rhs():
    assert solve_linear(12, 5, 0) == (0, 0)


def test_solve_linear_no_solution():
    with pytest.raises(NoSolutionError):
        solve_linear(4, 6, 1)


def test_solve_linear_rejects_nonpositive():
    with pytest.raises(ValueError):
        solve_linear(0, 3, 1)


@given(
    st.integers(min_value=1, max_value=10**60),
    st.integers(min_value=1, max_value=10**60),
    st.integers(min_value=-(10**60), max_value=10**60),
)
def test_solve_linear_exact(a, b, c):
    if c % math.gcd(a, b):
        with pytest.raises(NoSolutionError):
            solve_linear(a, b, c)
    else:
        x, y = solve_linear(a, b, c)
        assert a * x - b * y == c


def test_solve_linear_huge_powers():
    a, b = 2**5000, 3**3000
    x, y = solve_linear(a, b, 2**17 - 1)
    assert a * x - b * y == 2**17 - 1


@pytest.mark.parametrize(
    "triple, expected", [((1, 1, 1), (1, 1)), ((2, 1, 1), (7, 3)), ((1, 2, 1), (3, 7)), ((1, 1, 2), (2, 5))]
)
def test_normalized_xy_examples(triple, expected):
    assert brute_normalized(*triple) == [expected]
    assert tuple(normalized_xy(*triple)) == expected


def test_normalized_xy_properties():
    for s1, q1, s2 in itertools.product(range(1, 7), repeat=3):
        x0, y0 = normalized_xy(s1, q1, s2)
        assert 2 ** (q1 + s2) * x0 - 3**s1 * y0 == 2**q1 - 1
        assert y0 % 2 == 1
        assert 0 < y0 < 2 ** (q1 + s2)
        assert 0 < x0 <= 3**s1


def test_normalized_xy_unique():
    for triple in itertools.product(range(1, 5), repeat=3):
        assert brute_normalized(*triple) == [tuple(normalized_xy(*triple))]


@pytest.mark.parametrize(
    "triple, expected", [((1, 1, 1), (1, 1)), ((2, 1, 1), (3, 7)), ((1, 1, 2), (13, 5))]
)
def test_base_pair_examples(triple, expected):
    assert tuple(base_pair(*triple)) == expected


def test_base_pair_properties():
    for s, q, sn in itertools.product(range(1, 7), repeat=3):
        m, mt = base_pair(s, q, sn)
        assert m % 2 == 1 and mt % 2 == 1
        assert 2 ** (q + sn) * mt - 3**s * m == 2**q - 1
        assert m < 2 ** (q + sn + 1)
        assert mt <= 2 * 3**s


def test_base_pair_seeds_realize_triple():
    for s1, q1, s2 in itertools.product(range(1, 5), repeat=3):
        m1, m2 = base_pair(s1, q1, s2)
        n = 2**s1 * m1 - 1
        # walk the raw map: s1 odd/even pairs, then q1 halvings
        v = n
        for _ in range(2 * s1 + q1):
            v = 3 * v + 1 if v % 2 else v // 2
        assert v == 2**s2 * m2 - 1
        assert extract_pattern(n, 3) == [s1, q1, s2]
