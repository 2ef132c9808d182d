"""Shared fixtures and randomized-fixture helpers."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from maxitive import (
    INF,
    DiscreteChain,
    ExtNonneg,
    MaxMeasure,
    MeasurableFn,
    Minimum,
    Space,
    StandardProduct,
)

LABELS = "abcdefghij"


def float_times(s: float, t: float) -> float:
    """The product on floats with the 0 · ∞ = 0 convention made explicit.

    IEEE arithmetic yields nan at (0, ∞), which would violate the
    annihilator axiom; a well-formed custom operation must decide it."""
    return 0.0 if s == 0.0 or t == 0.0 else s * t


@pytest.fixture
def times():
    return StandardProduct()


@pytest.fixture
def minimum():
    return Minimum()


@pytest.fixture
def chain():
    """The standard finite-frontier fixture: {0, 1, 2, ∞} with clamped products."""
    return DiscreteChain.clamped_product(["0", "1", "2", "inf"])


@pytest.fixture
def space3():
    return Space(["a", "b", "c"])


# -- randomized fixtures (seeded, exact) ------------------------------------

def rand_mass(rng: random.Random, allow_inf=False, allow_zero=True,
              num_max=12, den_max=6) -> ExtNonneg:
    if allow_inf and rng.random() < 0.15:
        return INF
    lo = 0 if allow_zero else 1
    return ExtNonneg(Fraction(rng.randint(lo, num_max), rng.randint(1, den_max)))


def rand_space(rng: random.Random, lo=1, hi=6) -> Space:
    return Space(list(LABELS[: rng.randint(lo, hi)]))


def rand_measure(rng: random.Random, space: Space, **kw) -> MaxMeasure:
    return MaxMeasure(space, [rand_mass(rng, **kw) for _ in space.atoms])


def rand_fn(rng: random.Random, space: Space, **kw) -> MeasurableFn:
    return MeasurableFn(space, [rand_mass(rng, **kw) for _ in space.atoms])


# -- hypothesis strategies ---------------------------------------------------

finite_extnn = st.fractions(min_value=0, max_value=64, max_denominator=16).map(ExtNonneg)
extnn = st.one_of(st.just(INF), finite_extnn)
