"""Collatz map, the odd/even decompositions and fast-forward pattern extraction.

An odd number ``n = 2**s * m - 1`` (m odd) runs through ``2*s`` steps of the
map and lands on the even number ``3**s * m - 1``; an even number
``2**q * m`` reaches the odd ``m`` after ``q`` halvings.  Alternating the two
jumps gives the evolution pattern ``s1, q1, s2, q2, ...`` of an odd number
without walking the trajectory one step at a time.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

# Exponents are plain ints; anything above this is treated as a caller error.
MAX_EXPONENT = 2**32


class PatternError(ValueError):
    """Malformed evolution pattern or pattern prefix."""


class OddForm(NamedTuple):
    """``n = 2**s * m - 1`` with ``m`` odd."""

    s: int
    m: int

    @property
    def value(self) -> int:
        return (self.m << self.s) - 1


class EvenForm(NamedTuple):
    """``n = 2**q * m`` with ``m`` odd."""

    q: int
    m: int

    @property
    def value(self) -> int:
        return self.m << self.q


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def _check_exponent(e: int) -> int:
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds cap {MAX_EXPONENT}")
    return e


def collatz_step(n: int) -> int:
    _check_positive(n)
    return 3 * n + 1 if n & 1 else n >> 1


def trajectory(n: int, steps: int) -> list[int]:
    """Return ``[n, f(n), ..., f^steps(n)]``."""
    _check_positive(n)
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    out = [n]
    for _ in range(steps):
        n = collatz_step(n)
        out.append(n)
    return out


def decompose_even(n: int) -> EvenForm:
    _check_positive(n)
    if n & 1:
        raise ValueError(f"decompose_even needs an even number, got {n}")
    q = _check_exponent((n & -n).bit_length() - 1)
    return EvenForm(q, n >> q)


def decompose_odd(n: int) -> OddForm:
    _check_positive(n)
    if not n & 1:
        raise ValueError(f"decompose_odd needs an odd number, got {n}")
    s, m = decompose_even(n + 1)
    return OddForm(s, m)


def s_evolution(form: OddForm) -> int:
    """Value reached ``2*s`` steps after ``2**s * m - 1``: ``3**s * m - 1`` (even)."""
    return 3**form.s * form.m - 1


def q_evolution(form: EvenForm) -> int:
    """Odd value reached ``q`` halvings after ``2**q * m``."""
    return form.m


def extract_pattern(n: int, count: int) -> list[int]:
    """First ``count`` entries ``s1, q1, s2, ...`` of the evolution pattern of odd ``n``.

    Entries are counted individually, so the result ends on an s-entry for
    odd ``count`` and on a q-entry for even ``count``.
    """
    _check_positive(n)
    if not n & 1:
        raise ValueError(f"evolution patterns are defined for odd numbers, got {n}")
    if count < 1:
        raise ValueError("count must be at least 1")
    entries: list[int] = []
    value = n
    while True:
        odd = decompose_odd(value)
        entries.append(odd.s)
        if len(entries) == count:
            return entries
        even = decompose_even(s_evolution(odd))
        entries.append(even.q)
        if len(entries) == count:
            return entries
        value = q_evolution(even)


def validate_prefix(entries: Sequence[int]) -> tuple[int, ...]:
    """Check a pattern prefix (any nonempty run of positive exponents)."""
    out = tuple(entries)
    if not out:
        raise PatternError("pattern is empty")
    for e in out:
        if not isinstance(e, int) or isinstance(e, bool):
            raise PatternError(f"pattern entry {e!r} is not an integer")
        if e < 1:
            raise PatternError(f"pattern entries must be positive, got {e}")
        if e > MAX_EXPONENT:
            raise PatternError(f"pattern entry {e} exceeds cap {MAX_EXPONENT}")
    return out


def validate_pattern(entries: Sequence[int]) -> tuple[int, ...]:
    """Check a finite pattern ``s1, q1, ..., s_r, q_r, s_{r+1}`` (odd length)."""
    out = validate_prefix(entries)
    if len(out) % 2 == 0:
        raise PatternError(
            f"a finite pattern must end on an s-entry (odd length), got length {len(out)}"
        )
    return out
