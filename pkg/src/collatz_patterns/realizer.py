"""Seeds realizing a prescribed finite evolution pattern.

For a pattern ``s1, q1, s2, ..., s_r, q_r, s_{r+1}`` the odd seeds
``n = 2**s1 * m1 - 1`` whose pattern starts that way form one arithmetic
progression.  Each overlapping triple ``(s_i, q_i, s_{i+1})`` contributes a
two-variable Diophantine equation; the triples are chained left to right,
each step merging the running progression of ``m1`` with the new equation.

Bookkeeping exponents (``Q`` and ``S`` below)::

    Q_r = q_1 + ... + q_r + s_2 + ... + s_{r+1}
    S_r = s_1 + ... + s_r

After folding the whole pattern, ``m1 = m1_base + 2**(Q_r+1) * t`` and the
multiplier of the last odd value is ``m_last_base + 2 * 3**S_r * t`` for the
same ``t >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import diophantine
from .core import validate_pattern


@dataclass(frozen=True)
class ChainState:
    m1_base: int
    q_exp: int
    m_last_base: int
    s_exp: int


@dataclass(frozen=True)
class RealizationFamily:
    pattern: tuple[int, ...]
    s1: int
    q_exp: int
    s_exp: int
    m1_base: int
    m1_stride: int
    n_base: int
    n_stride: int
    m_last_base: int
    m_last_stride: int

    def member(self, t: int) -> int:
        return nth_realizer(self, t)


def chain_init(s1: int, q1: int, s2: int) -> ChainState:
    m_base, m_tilde = diophantine.base_pair(s1, q1, s2)
    return ChainState(m1_base=m_base, q_exp=q1 + s2, m_last_base=m_tilde, s_exp=s1)


def chain_step(state: ChainState, s_r: int, q_r: int, s_next: int) -> ChainState:
    """Extend the chain by the triple ``(s_r, q_r, s_next)``.

    ``s_r`` must be the last s-entry already consumed.  The running family
    ``m_r = m_last_base + 2*3**s_exp * t_prev`` is intersected with the new
    triple's family ``m_r = M + 2**(q_r+s_next) * 2*t``, giving
    ``2**(q_r+s_next) * t - 3**s_exp * t_prev = (m_last_base - M) / 2``.
    """
    m_new, m_tilde_new = diophantine.base_pair(s_r, q_r, s_next)
    a = 1 << (q_r + s_next)
    b = 3**state.s_exp
    c = (state.m_last_base - m_new) // 2  # both odd, so exact
    _, t_prev = diophantine.solve_linear(a, b, c)
    t_prev %= a
    t, rem = divmod(c + b * t_prev, a)
    if rem:
        raise ArithmeticError("chain step produced a non-solution")
    return ChainState(
        m1_base=state.m1_base + (t_prev << (state.q_exp + 1)),
        q_exp=state.q_exp + q_r + s_next,
        m_last_base=m_tilde_new + 2 * 3**s_r * t,
        s_exp=state.s_exp + s_r,
    )


def fold(pattern: Sequence[int]) -> ChainState:
    """Chain every triple of a pattern with ``r >= 1``."""
    p = validate_pattern(pattern)
    if len(p) < 3:
        raise ValueError("fold needs at least one (s, q, s) triple")
    state = chain_init(p[0], p[1], p[2])
    for i in range(2, len(p) - 1, 2):
        state = chain_step(state, p[i], p[i + 1], p[i + 2])
    return state


def realize(pattern: Sequence[int]) -> RealizationFamily:
    """Arithmetic progression of every odd seed whose pattern begins with ``pattern``."""
    p = validate_pattern(pattern)
    s1 = p[0]
    if len(p) == 1:
        # any odd m works
        state = ChainState(m1_base=1, q_exp=0, m_last_base=1, s_exp=0)
    else:
        state = fold(p)
    m1_stride = 1 << (state.q_exp + 1)
    return RealizationFamily(
        pattern=p,
        s1=s1,
        q_exp=state.q_exp,
        s_exp=state.s_exp,
        m1_base=state.m1_base,
        m1_stride=m1_stride,
        n_base=(state.m1_base << s1) - 1,
        n_stride=m1_stride << s1,
        m_last_base=state.m_last_base,
        m_last_stride=2 * 3**state.s_exp,
    )


def nth_realizer(family: RealizationFamily, t: int) -> int:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return family.n_base + t * family.n_stride
