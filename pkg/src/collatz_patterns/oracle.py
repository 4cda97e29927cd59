"""Independent checks built on nothing but the raw Collatz map.

The extractor here never decomposes a number: it walks the trajectory and
counts.  An odd value followed by ``3n+1`` and one halving is one unit of
the current s-entry as long as the result is odd again; once it comes out
even, halvings are counted up to the next odd value for the q-entry.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import realizer
from .core import collatz_step, validate_pattern, validate_prefix


def _entries(n: int) -> Iterator[int]:
    if n < 1 or not n & 1:
        raise ValueError(f"stepwise extraction needs an odd positive number, got {n}")
    value = n
    while True:
        s = 0
        while True:
            value = collatz_step(collatz_step(value))
            s += 1
            if not value & 1:
                break
        yield s
        q = 0
        while not value & 1:
            value = collatz_step(value)
            q += 1
        yield q


def stepwise_extract(n: int, count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be at least 1")
    return list(itertools.islice(_entries(n), count))


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    index: int | None = None
    expected: int | None = None
    actual: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "OK"
        return (
            f"mismatch at index {self.index}: expected {self.expected}, "
            f"actual {self.actual}"
        )


def verify(n: int, pattern: Sequence[int]) -> VerifyReport:
    """Stepwise check that odd ``n`` has ``pattern`` as its pattern prefix."""
    p = validate_prefix(pattern)
    actual = stepwise_extract(n, len(p))
    for i, (want, got) in enumerate(zip(p, actual)):
        if want != got:
            return VerifyReport(False, i, want, got)
    return VerifyReport(True)


def _matches(n: int, pattern: tuple[int, ...]) -> bool:
    # stops at the first differing entry
    return all(a == b for a, b in zip(_entries(n), pattern))


def _search_chunk(args: tuple[tuple[int, ...], int, int]) -> list[int]:
    pattern, lo, hi = args
    if not lo & 1:
        lo += 1
    return [n for n in range(lo, hi + 1, 2) if _matches(n, pattern)]


def _chunks(bound: int, jobs: int) -> list[tuple[int, int]]:
    pieces = max(1, jobs * 4)
    size = max(1, -(-bound // pieces))
    return [(lo, min(lo + size - 1, bound)) for lo in range(1, bound + 1, size)]


def brute_force_search(pattern: Sequence[int], bound: int, jobs: int = 1) -> list[int]:
    """All odd ``n <= bound`` whose stepwise pattern prefix equals ``pattern``, ascending.

    With ``jobs > 1`` the range is split into contiguous chunks searched in
    worker processes; chunk results are concatenated in range order, so the
    output does not depend on scheduling.
    """
    p = validate_prefix(pattern)
    if bound < 1:
        return []
    if jobs <= 1:
        return _search_chunk((p, 1, bound))
    work = [(p, lo, hi) for lo, hi in _chunks(bound, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_search_chunk, work))
    return [n for part in parts for n in part]


@dataclass
class FamilyCheck:
    pattern: tuple[int, ...]
    family: realizer.RealizationFamily
    predicted: list[int]
    found: list[int]
    missing: list[int] = field(default_factory=list)
    extra: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra


def cross_check_family(pattern: Sequence[int], multiples: int, jobs: int = 1) -> FamilyCheck:
    """Compare the predicted progression against an exhaustive search up to its ``multiples``-th member."""
    p = validate_pattern(pattern)
    if multiples < 1:
        raise ValueError("multiples must be at least 1")
    family = realizer.realize(p)
    predicted = [realizer.nth_realizer(family, k) for k in range(multiples + 1)]
    found = brute_force_search(p, predicted[-1], jobs=jobs)
    want, got = set(predicted), set(found)
    return FamilyCheck(
        pattern=p,
        family=family,
        predicted=predicted,
        found=found,
        missing=sorted(want - got),
        extra=sorted(got - want),
    )
