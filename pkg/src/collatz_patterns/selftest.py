"""Property suites run by ``collatz-patterns selftest``.

Every suite counts passes and failures instead of stopping at the first
problem; an exception raised while checking a case counts as a failure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import core, diophantine, oracle, realizer

# completeness search cost grows like 2**(sum of entries); keep it bounded
COMPLETENESS_MAX_ENTRY = 3
COMPLETENESS_MAX_R = 2
AGREEMENT_LIMIT = 10**4


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.passed} passed, {self.failed} failed"
        if self.first_failure:
            text += f" (first failure: {self.first_failure})"
        return text


def all_patterns(max_entry: int, max_r: int) -> Iterator[tuple[int, ...]]:
    """Every finite pattern with entries in ``[1, max_entry]`` and ``r <= max_r``."""
    for r in range(max_r + 1):
        yield from itertools.product(range(1, max_entry + 1), repeat=2 * r + 1)


def random_pattern(rng: random.Random, max_entry: int, max_r: int) -> tuple[int, ...]:
    r = rng.randint(0, max_r)
    return tuple(rng.randint(1, max_entry) for _ in range(2 * r + 1))


def expected_exponents(pattern: tuple[int, ...]) -> tuple[int, int]:
    """``(Q_r, S_r)`` summed straight from the pattern."""
    s = pattern[0::2]
    q = pattern[1::2]
    r = len(q)
    return sum(q) + sum(s[1 : r + 1]), sum(s[:r])


def _run(name: str, cases: Iterable, check: Callable[[object], str | None]) -> SuiteResult:
    result = SuiteResult(name)
    for case in cases:
        try:
            problem = check(case)
        except Exception as exc:  # noqa: BLE001 - any crash is a failed case
            problem = f"{type(exc).__name__}: {exc}"
        if problem is None:
            result.passed += 1
        else:
            result.failed += 1
            if result.first_failure is None:
                result.first_failure = f"{case}: {problem}"
    return result


def _roundtrip(pattern: tuple[int, ...]) -> str | None:
    family = realizer.realize(pattern)
    for t in (0, 1, 2):
        n = realizer.nth_realizer(family, t)
        got = core.extract_pattern(n, len(pattern))
        if tuple(got) != pattern:
            return f"t={t}, n={n} has prefix {got}"
        report = oracle.verify(n, pattern)
        if not report:
            return f"t={t}, n={n}: {report.describe()}"
    return None


def _normalized(triple: tuple[int, int, int]) -> str | None:
    s1, q1, s2 = triple
    x0, y0 = diophantine.normalized_xy(s1, q1, s2)
    a, b = 1 << (q1 + s2), 3**s1
    if a * x0 - b * y0 != (1 << q1) - 1:
        return f"({x0}, {y0}) does not solve the equation"
    if not y0 & 1:
        return f"y0={y0} is even"
    if not (0 < y0 < a and 0 < x0 <= b):
        return f"({x0}, {y0}) out of bounds"
    return None


def _unique(triple: tuple[int, int, int]) -> str | None:
    s1, q1, s2 = triple
    a = 1 << (q1 + s2)
    hits = [y for y in range(1, a) if (3**s1 * y + (1 << q1) - 1) % a == 0]
    y0 = diophantine.normalized_xy(s1, q1, s2).y0
    if hits != [y0]:
        return f"brute force found {hits}, solver gave {y0}"
    return None


def _base_pair_odd(triple: tuple[int, int, int]) -> str | None:
    m, mt = diophantine.base_pair(*triple)
    if not (m & 1 and mt & 1):
        return f"base pair ({m}, {mt}) not odd"
    return None


def _complete(pattern: tuple[int, ...]) -> str | None:
    check = oracle.cross_check_family(pattern, 3)
    if not check.passed:
        return f"missing {check.missing}, extra {check.extra}"
    return None


def _exponents(pattern: tuple[int, ...]) -> str | None:
    family = realizer.realize(pattern)
    want = expected_exponents(pattern)
    if (family.q_exp, family.s_exp) != want:
        return f"(Q, S) = {(family.q_exp, family.s_exp)}, expected {want}"
    return None


def _agree(n: int) -> str | None:
    fast = core.extract_pattern(n, 8)
    slow = oracle.stepwise_extract(n, 8)
    if fast != slow:
        return f"fast {fast} vs stepwise {slow}"
    return None


def run_selftest(
    max_entry: int = 4, max_r: int = 4, trials: int = 200, seed: int = 42
) -> list[SuiteResult]:
    rng = random.Random(seed)
    randoms = [random_pattern(rng, max_entry, max_r) for _ in range(trials)]
    cube6 = list(itertools.product(range(1, 7), repeat=3))
    cube4 = list(itertools.product(range(1, 5), repeat=3))
    small = list(
        all_patterns(
            min(max_entry, COMPLETENESS_MAX_ENTRY), min(max_r, COMPLETENESS_MAX_R)
        )
    )
    results = []
    if trials:
        results.append(_run("roundtrip", randoms, _roundtrip))
        results.append(_run("exponents-random", randoms, _exponents))
    results += [
        _run("normalized-solution", cube6, _normalized),
        _run("uniqueness", cube4, _unique),
        _run("base-pair-odd", cube6, _base_pair_odd),
        _run("exponents", small, _exponents),
        _run("family-completeness", small, _complete),
        _run("oracle-agreement", range(1, AGREEMENT_LIMIT, 2), _agree),
    ]
    return results
