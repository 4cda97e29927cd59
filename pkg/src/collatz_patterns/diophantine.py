"""Linear Diophantine equations ``a*x - b*y = c`` over the integers.

The instances that matter here are ``2**(q1+s2) * x - 3**s1 * y = 2**q1 - 1``,
which tie the seed multiplier ``m1`` of an odd number ``2**s1 * m1 - 1`` to
the multiplier ``m2`` of the odd number reached after one s- and one
q-evolution.
"""

from __future__ import annotations

from typing import NamedTuple


class NoSolutionError(ValueError):
    """gcd(a, b) does not divide c."""


class DiophParticular(NamedTuple):
    x0: int
    y0: int


class BasePair(NamedTuple):
    m_base: int
    m_tilde: int


def solve_linear(a: int, b: int, c: int) -> tuple[int, int]:
    """Return one integer solution ``(x, y)`` of ``a*x - b*y = c``.

    Runs the remainder descent on ``(a, b)`` down to a zero coefficient and
    then substitutes back up.  The result may be negative; callers normalize.
    """
    if a <= 0 or b <= 0:
        raise ValueError(f"coefficients must be positive, got a={a}, b={b}")
    # Each frame records which coefficient was reduced and by what quotient.
    frames: list[tuple[bool, int]] = []
    while a and b:
        if a < b:
            q, b = divmod(b, a)
            frames.append((False, q))
        else:
            q, a = divmod(a, b)
            frames.append((True, q))
    if b == 0:
        x, rem = divmod(c, a)
        y = 0
    else:
        y, rem = divmod(-c, b)
        x = 0
    if rem:
        raise NoSolutionError(f"no integer solution: gcd does not divide {c}")
    for reduced_a, q in reversed(frames):
        if reduced_a:
            y += q * x
        else:
            x += q * y
    return x, y


def normalized_xy(s1: int, q1: int, s2: int) -> DiophParticular:
    """The unique solution with ``0 < y0 < 2**(q1+s2)`` and ``0 < x0 <= 3**s1``."""
    if min(s1, q1, s2) < 1:
        raise ValueError(f"exponents must be positive, got {(s1, q1, s2)}")
    a = 1 << (q1 + s2)
    b = 3**s1
    c = (1 << q1) - 1
    _, y = solve_linear(a, b, c)
    y0 = y % a
    x0, rem = divmod(c + b * y0, a)
    if rem or not (0 < y0 < a and 0 < x0 <= b):
        raise ArithmeticError(f"solver returned a non-solution for {(s1, q1, s2)}")
    return DiophParticular(x0, y0)


def base_pair(s: int, q: int, s_next: int) -> BasePair:
    """Smallest odd ``(m, m_tilde)`` with ``2**(q+s_next)*m_tilde - 3**s*m = 2**q - 1``.

    ``y0`` is always odd; when ``x0`` is even both components are shifted
    once along the solution line, which fixes the parity of ``x0`` and keeps
    ``y0`` odd.
    """
    x0, y0 = normalized_xy(s, q, s_next)
    if x0 & 1:
        return BasePair(y0, x0)
    return BasePair(y0 + (1 << (q + s_next)), x0 + 3**s)
