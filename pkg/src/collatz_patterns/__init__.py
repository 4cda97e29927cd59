"""Collatz evolution patterns: extraction from odd numbers and constructive realization."""

from .core import (
    EvenForm,
    OddForm,
    PatternError,
    collatz_step,
    decompose_even,
    decompose_odd,
    extract_pattern,
    q_evolution,
    s_evolution,
    trajectory,
)
from .diophantine import BasePair, DiophParticular, NoSolutionError, base_pair, normalized_xy, solve_linear
from .realizer import ChainState, RealizationFamily, chain_init, chain_step, nth_realizer, realize

__all__ = [
    "BasePair",
    "ChainState",
    "DiophParticular",
    "EvenForm",
    "NoSolutionError",
    "OddForm",
    "PatternError",
    "RealizationFamily",
    "base_pair",
    "chain_init",
    "chain_step",
    "collatz_step",
    "decompose_even",
    "decompose_odd",
    "extract_pattern",
    "normalized_xy",
    "nth_realizer",
    "q_evolution",
    "realize",
    "s_evolution",
    "solve_linear",
    "trajectory",
]
