"""Analytic simulation of Grover search with an unknown solution count.

The search state never leaves the plane spanned by the uniform superposition
of solutions and of non-solutions, where each Grover iteration is a rotation
by 2*theta with sin(theta) = sqrt(t/N). A round that runs k iterations and
measures therefore succeeds with probability sin((2k+1)*theta)^2 exactly, so
the simulator samples round outcomes from that formula instead of evolving a
state vector.

Rounds follow the classic unknown-count schedule: the iteration count of each
round is drawn uniformly from [0, M) with M growing geometrically from 1 (and
never beyond sqrt(N)), until a measurement hits a solution or a hard cap of
ceil(cap_multiplier * sqrt(N)) total iterations is spent. Each round charges
its iterations plus one verification evaluation; with no solutions the full
cap is charged, mirroring a real run that cannot stop early.

The simulator privately evaluates the predicate on the whole domain to learn
the solution count; those meta-evaluations are never charged, and the count
never reaches the caller through the outcome.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from .ledger import QueryLedger


@dataclass(frozen=True)
class GroverConfig:
    """Schedule knobs: total-iteration cap multiplier and per-round growth."""

    cap_multiplier: float = 3.0
    growth_factor: float = 8 / 7

    def __post_init__(self) -> None:
        if self.cap_multiplier <= 0:
            raise ValueError("cap multiplier must be positive")
        if self.growth_factor <= 1:
            raise ValueError("growth factor must exceed 1")


DEFAULT_GROVER_CONFIG = GroverConfig()

# rounds are cheap; this only guards against astronomically unlucky streams
_ROUND_LIMIT_FLOOR = 64


@dataclass(frozen=True)
class RoundTrace:
    iterations: int
    success_probability: float


@dataclass
class GroverOutcome:
    found: Optional[int]
    iterations_used: int
    rounds: list[RoundTrace] = field(default_factory=list)


def round_success_probability(k: int, theta: float) -> float:
    """Probability that measuring after k iterations yields a solution."""
    return math.sin((2 * k + 1) * theta) ** 2


def _round_caps(m_max: float, growth: float) -> Iterator[int]:
    """Per-round draw bounds ceil(M); shared by the sampler and the exact
    analysis so both see the identical schedule, float drift included."""
    m = 1.0
    while True:
        yield math.ceil(m)
        m = min(m * growth, m_max)


def _iteration_cap(domain_size: int, config: GroverConfig) -> int:
    return math.ceil(config.cap_multiplier * math.sqrt(domain_size))


def grover_search(
    domain_size: int,
    predicate: Callable[[int], bool],
    rng: random.Random,
    cost_per_call: int = 1,
    ledger: Optional[QueryLedger] = None,
    config: GroverConfig = DEFAULT_GROVER_CONFIG,
) -> GroverOutcome:
    """Search [0, domain_size) for an index where predicate holds.

    Every charged predicate evaluation costs cost_per_call input queries on
    the ledger: k + 1 per round (k iterations plus the verification
    measurement), or the flat iteration cap when there are no solutions. On
    success the returned index is uniform over the solutions.
    """
    if domain_size < 1:
        raise ValueError("domain must be nonempty")
    solutions = [i for i in range(domain_size) if predicate(i)]
    t = len(solutions)
    cap = _iteration_cap(domain_size, config)

    if t == 0:
        if ledger is not None:
            ledger.charge_predicate(cap)
            ledger.charge_quantum(cap * cost_per_call)
        return GroverOutcome(found=None, iterations_used=cap, rounds=[])

    theta = math.asin(math.sqrt(t / domain_size))
    caps = _round_caps(math.sqrt(domain_size), config.growth_factor)
    round_limit = max(_ROUND_LIMIT_FLOOR, 4 * cap)
    used = 0
    rounds: list[RoundTrace] = []
    found: Optional[int] = None
    while used < cap and len(rounds) < round_limit:
        k = min(rng.randrange(next(caps)), cap - used)
        p = round_success_probability(k, theta)
        rounds.append(RoundTrace(k, p))
        used += k
        if ledger is not None:
            ledger.charge_predicate(k + 1)
            ledger.charge_quantum((k + 1) * cost_per_call)
        if rng.random() < p:
            found = solutions[rng.randrange(t)]
            break
    return GroverOutcome(found=found, iterations_used=used, rounds=rounds)


def schedule_success_probability(
    domain_size: int,
    solution_count: int,
    config: GroverConfig = DEFAULT_GROVER_CONFIG,
    tol: float = 1e-14,
) -> float:
    """Exact overall success probability of grover_search for a given
    solution count, by dynamic programming over consumed iterations.

    Tracks the probability mass still searching at each iteration budget and
    folds in each round's uniform draw; draws that would overrun the cap are
    truncated and end the search, exactly as in the sampler. Used to verify
    the schedule's error bound and as the reference for empirical found-rate
    tests.
    """
    if domain_size < 1:
        raise ValueError("domain must be nonempty")
    if not 0 <= solution_count <= domain_size:
        raise ValueError("solution count out of range")
    if solution_count == 0:
        return 0.0
    theta = math.asin(math.sqrt(solution_count / domain_size))
    cap = _iteration_cap(domain_size, config)
    p = np.array([round_success_probability(k, theta) for k in range(cap + 1)])

    budgets = np.arange(cap)
    fail_at_cap = 1.0 - p[cap - budgets]  # truncated draw from budget b runs cap-b
    running = np.zeros(cap)
    running[0] = 1.0
    failed = 0.0
    caps = _round_caps(math.sqrt(domain_size), config.growth_factor)
    for _ in range(max(_ROUND_LIMIT_FLOOR, 4 * cap)):
        if running.sum() <= tol:
            break
        draw_bound = next(caps)
        weight = 1.0 / draw_bound
        new = np.zeros(cap)
        for k in range(min(draw_bound, cap)):
            new[k:cap] += running[: cap - k] * ((1.0 - p[k]) * weight)
        truncated_draws = np.clip(draw_bound - (cap - budgets), 0, None)
        failed += weight * float((running * fail_at_cap * truncated_draws).sum())
        running = new
    return 1.0 - failed - float(running.sum())
