"""Exact Bayesian succession probabilities for two-color urns.

An urn holds G balls, each white or black. A prior over the number of
white balls is updated on the evidence "the first k draws were all
white", and the object of interest is the chance that the next draw is
white too. Everything is computed in exact rational arithmetic; a Monte
Carlo simulator provides an independent statistical check.

Priors: uniform over the possible compositions, or binomial from G fair
coin flips. Draws happen with or without replacement. In the classical
G -> infinity limit the uniform prior reproduces the rule of succession
(k+1)/(k+2); the binomial prior pins the posterior at 1/2 regardless of
the evidence.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DegenerateEvidence, KExceedsPopulation, NoConditioningEvents


class Prior(enum.Enum):
    UNIFORM = "uniform"
    BINOMIAL = "binomial"


class Replacement(enum.Enum):
    WITH = "with"
    WITHOUT = "without"


def posterior(
    priors: Sequence[Fraction | int], likelihoods: Sequence[Fraction | int]
) -> list[Fraction]:
    """Normalized products prior * likelihood; exact Bayes update."""
    if len(priors) != len(likelihoods) or not priors:
        raise ValueError("priors and likelihoods must be equal-length, nonempty")
    priors = [Fraction(p) for p in priors]
    likelihoods = [Fraction(l) for l in likelihoods]
    if any(p < 0 for p in priors) or any(l < 0 for l in likelihoods):
        raise ValueError("priors and likelihoods must be nonnegative")
    weights = [p * l for p, l in zip(priors, likelihoods)]
    total = sum(weights)
    if total == 0:
        raise DegenerateEvidence("all posterior weights are zero")
    return [w / total for w in weights]


def _check_population(G: int, k: int) -> None:
    if G < 1:
        raise ValueError("population size G must be at least 1")
    if k < 0:
        raise ValueError("number of observed draws k must be nonnegative")


# power sums and their Bernoulli closed form; 0^0 counts as 1 throughout


def _check_summation_range(k: int, G: int) -> None:
    # unlike the urn operations, the power-sum identities allow G = 0
    if G < 0:
        raise ValueError("summation bound G must be nonnegative")
    if k < 0:
        raise ValueError("exponent k must be nonnegative")


def power_sum(k: int, G: int) -> int:
    """sum_{i=0}^{G} i^k, directly."""
    _check_summation_range(k, G)
    return sum(i**k for i in range(G + 1))


@lru_cache(maxsize=None)
def bernoulli_number(j: int) -> Fraction:
    """B_j with the B_1 = -1/2 convention, by the defining recurrence."""
    if j == 0:
        return Fraction(1)
    # sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1
    acc = Fraction(0)
    for i in range(j):
        acc += math.comb(j + 1, i) * bernoulli_number(i)
    return -acc / (j + 1)


def bernoulli_polynomial(j: int, x: Fraction) -> Fraction:
    """B_j(x) = sum_i C(j, i) B_i x^(j-i)."""
    x = Fraction(x)
    return sum(
        math.comb(j, i) * bernoulli_number(i) * x ** (j - i) for i in range(j + 1)
    )


def bernoulli_form(k: int, G: int) -> Fraction:
    """Closed form of power_sum: (B_{k+1}(G+1) - B_{k+1}) / (k+1)."""
    _check_summation_range(k, G)
    return (bernoulli_polynomial(k + 1, Fraction(G + 1)) - bernoulli_number(k + 1)) / (
        k + 1
    )


# with replacement


def succ_uniform_rep(G: int, k: int) -> Fraction:
    """P(draw k+1 white | first k white), uniform prior, with replacement.

    Equals sum_i i^(k+1) / (G * sum_i i^k); the prior weight cancels.
    """
    _check_population(G, k)
    return Fraction(power_sum(k + 1, G), G * power_sum(k, G))


def succ_binom_rep(G: int, k: int) -> Fraction:
    """Same conditional under the binomial prior C(G, i) / 2^G."""
    _check_population(G, k)
    num = sum(math.comb(G, i) * i ** (k + 1) for i in range(G + 1))
    den = G * sum(math.comb(G, i) * i**k for i in range(G + 1))
    return Fraction(num, den)


# without replacement: k+1 draws need k < G


def succ_norep(G: int, k: int, prior: Prior) -> Fraction:
    """P(draw k+1 white | first k white) without replacement.

    Independent of G under both priors: (k+1)/(k+2) for the uniform
    prior, 1/2 for the binomial prior.
    """
    _check_population(G, k)
    if k >= G:
        raise KExceedsPopulation(f"cannot draw {k + 1} balls from {G} without replacement")
    if prior is Prior.UNIFORM:
        return Fraction(k + 1, k + 2)
    return Fraction(1, 2)


def joint_norep(G: int, k: int, prior: Prior) -> Fraction:
    """Weight of 'first k draws all white' without replacement.

    Uses the prior weightings under which the conditionals above arise:
    1/(G-k+1) over the feasible compositions for the uniform case, so the
    value is (G+1) / ((G-k+1)(k+1)); the binomial case gives 1/2^k.
    """
    _check_population(G, k)
    if k >= G:
        raise KExceedsPopulation(f"cannot draw {k} balls from {G} without replacement")
    if prior is Prior.UNIFORM:
        return Fraction(G + 1, (G - k + 1) * (k + 1))
    return Fraction(1, 2**k)


def limit_succession(k: int, prior: Prior) -> Fraction:
    """G -> infinity limit of the with-replacement conditional."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if prior is Prior.UNIFORM:
        return Fraction(k + 1, k + 2)
    return Fraction(1, 2)


# Monte Carlo oracle


@dataclass(frozen=True)
class UrnModel:
    G: int
    prior: Prior
    replacement: Replacement

    def __post_init__(self):
        if self.G < 1:
            raise ValueError("population size G must be at least 1")


@dataclass(frozen=True)
class SimulationResult:
    estimate: float
    stderr: float
    successes: int
    conditioning_events: int
    trials: int


def simulate_urn(model: UrnModel, k: int, trials: int, seed: int | None = None) -> SimulationResult:
    """Estimate the succession conditional by direct simulation.

    Each trial samples a composition from the prior, draws k balls, and
    only trials where all k came up white count as conditioning events;
    among those, the k+1st draw is tallied. The standard error is the
    usual binomial estimate over conditioning events.
    """
    _check_population(model.G, k)
    if trials < 1:
        raise ValueError("need at least one trial")
    if model.replacement is Replacement.WITHOUT and k >= model.G:
        raise KExceedsPopulation(
            f"cannot draw {k + 1} balls from {model.G} without replacement"
        )
    rng = random.Random(seed)
    G = model.G
    conditioning = 0
    successes = 0
    for _ in range(trials):
        if model.prior is Prior.UNIFORM:
            white = rng.randint(0, G)
        else:
            white = rng.getrandbits(G).bit_count()
        if model.replacement is Replacement.WITH:
            if all(rng.randint(1, G) <= white for _ in range(k)):
                conditioning += 1
                if rng.randint(1, G) <= white:
                    successes += 1
        else:
            remaining_white, remaining = white, G
            ok = True
            for _ in range(k):
                if rng.randint(1, remaining) <= remaining_white:
                    remaining_white -= 1
                    remaining -= 1
                else:
                    ok = False
                    break
            if ok:
                conditioning += 1
                if rng.randint(1, remaining) <= remaining_white:
                    successes += 1
    if conditioning == 0:
        raise NoConditioningEvents(
            f"no trial produced {k} white draws; try more than {trials} trials"
        )
    p = successes / conditioning
    stderr = math.sqrt(max(p * (1.0 - p), 0.0) / conditioning)
    return SimulationResult(
        estimate=p,
        stderr=stderr,
        successes=successes,
        conditioning_events=conditioning,
        trials=trials,
    )
