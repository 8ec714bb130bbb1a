"""Monte Carlo engine and exact-DP trend experiments.

Sampling is exact: letters are drawn by comparing 64 random bits against
rational cumulative probabilities, so a seed determines the sample sequence
bit for bit.  Monte Carlo estimates are floats; every reference value they
are compared against is exact rational computed elsewhere in the package.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .characters import ProbVector, require_condition, schur
from .errors import InvalidInputError, SamplingFailureError
from .kinds import (
    HOOK,
    STRICT,
    AlgebraKind,
    Shape,
    Weight,
    Word,
    check_shape,
    in_semigroup,
    pi_weight,
    shape_from_weight,
)
from .markov import green, pi_shape
from .multiplicities import f_count, f_skew

_BITS = 64
_SCALE = 1 << _BITS


@dataclass
class RngStream:
    """Deterministic random stream: same (seed, index) gives the same draws."""

    seed: int
    index: int = 0
    _rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        self._rng = random.Random((self.seed & ((1 << 64) - 1)) * 0x9E3779B97F4A7C15 + self.index)

    def spawn(self, index: int) -> "RngStream":
        return RngStream(self.seed, index)

    def draw_bits(self) -> int:
        return self._rng.getrandbits(_BITS)


def _pick(cumulative: Sequence[tuple[int, Fraction]], bits: int):
    """Inverse CDF over exact rational cumulative weights."""
    for item, cum in cumulative:
        if bits * cum.denominator < cum.numerator * _SCALE:
            return item
    return cumulative[-1][0]


def _cumulative(pairs):
    total = Fraction(0)
    out = []
    for item, prob in pairs:
        total += prob
        out.append((item, total))
    return out


@dataclass(frozen=True)
class EstimateReport:
    """Monte Carlo point estimates with their standard errors.

    For the indicator frequencies reported here the standard error is the
    sample standard deviation over the square root of the count.
    """

    estimates: dict
    stderrs: dict
    count: int
    config: dict


def _frequency_stderr(estimate: float, count: int) -> float:
    return math.sqrt(max(estimate * (1.0 - estimate), 1e-30) / count)


def estimate_letter_frequencies(
    kind: AlgebraKind, p: ProbVector, paths: int, length: int, rng: RngStream
) -> EstimateReport:
    """Empirical letter frequencies of sampled walks."""
    counts = {letter: 0 for letter in kind.alphabet}
    for _ in range(paths):
        for x in sample_walk(kind, p, length, rng):
            counts[x] += 1
    total = paths * length
    estimates = {f"letter {letter}": c / total for letter, c in counts.items()}
    return EstimateReport(
        estimates=estimates,
        stderrs={k: _frequency_stderr(v, total) for k, v in estimates.items()},
        count=total,
        config={"kind": kind.kind, "n": kind.n, "m": kind.m,
                "paths": paths, "length": length, "seed": rng.seed},
    )


def estimate_shape_law(
    kind: AlgebraKind, p: ProbVector, paths: int, length: int, rng: RngStream
) -> EstimateReport:
    """Empirical end-shape distribution of the sampled shape process."""
    counts: dict[Shape, int] = {}
    for _ in range(paths):
        chain = sample_shape_chain(kind, p, length, rng)
        counts[chain[-1]] = counts.get(chain[-1], 0) + 1
    estimates = {
        "shape " + ",".join(map(str, lam)): c / paths
        for lam, c in sorted(counts.items())
    }
    return EstimateReport(
        estimates=estimates,
        stderrs={k: _frequency_stderr(v, paths) for k, v in estimates.items()},
        count=paths,
        config={"kind": kind.kind, "n": kind.n, "m": kind.m,
                "paths": paths, "length": length, "seed": rng.seed},
    )


def estimate_conditioned_acceptance(
    kind: AlgebraKind,
    p: ProbVector,
    length: int,
    horizon: int,
    paths: int,
    rng: RngStream,
) -> EstimateReport:
    """Rejection-sampling acceptance rate of the conditioned walk."""
    ensemble = sample_conditioned_ensemble(kind, p, length, horizon, paths, rng)
    rate = ensemble.acceptance_rate
    return EstimateReport(
        estimates={"acceptance": rate},
        stderrs={"acceptance": _frequency_stderr(rate, ensemble.attempts)},
        count=ensemble.attempts,
        config={"kind": kind.kind, "n": kind.n, "m": kind.m, "paths": paths,
                "length": length, "horizon": horizon, "seed": rng.seed},
    )


# ---------------------------------------------------------------------------
# Samplers
# ---------------------------------------------------------------------------

def sample_walk(kind: AlgebraKind, p: ProbVector, length: int, rng: RngStream) -> Word:
    """IID letters with law p, by exact inverse CDF."""
    cum = _cumulative(zip(kind.alphabet, p.values))
    return tuple(_pick(cum, rng.draw_bits()) for _ in range(length))


def sample_shape_chain(
    kind: AlgebraKind, p: ProbVector, length: int, rng: RngStream
) -> tuple[Shape, ...]:
    """Markov chain of the shape process sampled directly from its kernel."""
    kernel = pi_shape(kind, p)
    state: Shape = ()
    out = []
    for _ in range(length):
        rows = kernel.successors(state)
        state = _pick(_cumulative(rows), rng.draw_bits())
        out.append(state)
    return tuple(out)


def sample_conditioned_walk(
    kind: AlgebraKind,
    p: ProbVector,
    length: int,
    horizon: int,
    rng: RngStream,
    max_attempts: int = 10**6,
) -> tuple[Shape, ...]:
    """Rejection-sample the walk conditioned to stay in the shape lattice
    up to the horizon; returns the first ``length`` shapes."""
    if horizon < length:
        raise InvalidInputError("horizon must be at least the requested length")
    require_condition(p)
    cum = _cumulative(list(enumerate(p.values)))
    attempts = 0
    while attempts < max_attempts:
        attempts += 1
        weight = [0] * kind.N
        trail: list[Weight] = []
        alive = True
        for _ in range(horizon):
            i = _pick(cum, rng.draw_bits())
            weight[i] += 1
            if not in_semigroup(kind, weight):
                alive = False
                break
            trail.append(tuple(weight))
        if alive:
            return tuple(shape_from_weight(kind, w) for w in trail[:length])
    raise SamplingFailureError(
        f"no accepted path in {max_attempts} attempts", attempts=max_attempts, accepted=0
    )


@dataclass(frozen=True)
class ConditionedEnsemble:
    """Accepted-path statistics from conditioned-walk rejection sampling."""

    paths: int
    attempts: int
    transition_counts: dict[tuple[Shape, Shape], int]
    visit_counts: dict[Shape, int]

    @property
    def acceptance_rate(self) -> float:
        return self.paths / self.attempts


def sample_conditioned_ensemble(
    kind: AlgebraKind,
    p: ProbVector,
    length: int,
    horizon: int,
    paths: int,
    rng: RngStream,
    max_attempts: int | None = None,
) -> ConditionedEnsemble:
    """Collect transitions over the first ``length`` steps of many accepted paths."""
    if horizon < length:
        raise InvalidInputError("horizon must be at least the requested length")
    require_condition(p)
    cum = _cumulative(list(enumerate(p.values)))
    limit = max_attempts if max_attempts is not None else 400 * paths
    transition_counts: dict[tuple[Shape, Shape], int] = {}
    visit_counts: dict[Shape, int] = {}
    accepted = 0
    attempts = 0
    while accepted < paths:
        if attempts >= limit:
            raise SamplingFailureError(
                f"only {accepted} accepted paths in {attempts} attempts",
                attempts=attempts,
                accepted=accepted,
            )
        attempts += 1
        weight = [0] * kind.N
        prefix: list[Weight] = []
        alive = True
        for step in range(horizon):
            i = _pick(cum, rng.draw_bits())
            weight[i] += 1
            if not in_semigroup(kind, weight):
                alive = False
                break
            if step < length:
                prefix.append(tuple(weight))
        if not alive:
            continue
        accepted += 1
        prev: Shape = ()
        for w in prefix:
            cur = shape_from_weight(kind, w)
            visit_counts[prev] = visit_counts.get(prev, 0) + 1
            key = (prev, cur)
            transition_counts[key] = transition_counts.get(key, 0) + 1
            prev = cur
    return ConditionedEnsemble(
        paths=accepted,
        attempts=attempts,
        transition_counts=transition_counts,
        visit_counts=visit_counts,
    )


# ---------------------------------------------------------------------------
# Drift discretization
# ---------------------------------------------------------------------------

def nearest_shape(kind: AlgebraKind, vector: Sequence[Fraction]) -> Shape:
    """Nearest valid lattice shape to a drift multiple.

    Rounds each pi coordinate (ties to even), then repairs to validity by
    minimal decrements left to right inside each block.
    """
    coords = [int(round(Fraction(v))) for v in vector]
    if len(coords) != kind.N:
        raise InvalidInputError(f"vector has length {len(coords)}, expected {kind.N}")
    if kind.kind == HOOK:
        barred = _repair_decreasing(coords[: kind.m])
        unbarred = _repair_decreasing(coords[kind.m:])
        cap = barred[-1]
        unbarred = [v if i + 1 <= cap else 0 for i, v in enumerate(unbarred)]
        weight = tuple(barred + unbarred)
    elif kind.kind == STRICT:
        weight = tuple(_repair_decreasing(coords, strict=True))
    else:
        weight = tuple(_repair_decreasing(coords))
    return shape_from_weight(kind, weight)


def _repair_decreasing(coords: list[int], strict: bool = False) -> list[int]:
    out: list[int] = []
    for c in coords:
        c = max(c, 0)
        if out:
            cap = out[-1] - 1 if strict and out[-1] > 0 else out[-1]
            c = min(c, max(cap, 0))
        out.append(c)
    return out


def drift_shape(kind: AlgebraKind, p: ProbVector, scale: int) -> Shape:
    """Nearest valid shape to ``scale`` times the drift vector."""
    return nearest_shape(kind, [scale * v for v in p.values])


# ---------------------------------------------------------------------------
# Exact-DP trend experiments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrendRow:
    step: int
    shape: Shape
    value: Fraction | None

    def value_float(self) -> float | None:
        return None if self.value is None else float(self.value)


@dataclass(frozen=True)
class TrendReport:
    rows: tuple[TrendRow, ...]
    target: Fraction
    final_quartile_deviation: float

    def deviations(self) -> list[float]:
        return [
            abs(float(r.value) - float(self.target))
            for r in self.rows
            if r.value is not None
        ]


def _final_quartile_deviation(rows, target: Fraction) -> float:
    start = (3 * len(rows)) // 4
    devs = [
        abs(float(r.value) - float(target))
        for r in rows[start:]
        if r.value is not None
    ]
    return max(devs) if devs else math.inf


def quotient_llt_experiment(
    kind: AlgebraKind,
    p: ProbVector,
    gamma: Sequence[int],
    l_max: int,
) -> TrendReport:
    """Exact Green-function ratio along the drift, trending to one.

    For each step the ratio Gamma(0, g - gamma) / Gamma(0, g) is computed by
    dynamic programming at g = nearest valid shape to step * drift; the ratio
    is None when g - gamma leaves the shape lattice.
    """
    require_condition(p)
    gamma = tuple(gamma)
    if len(gamma) != kind.N:
        raise InvalidInputError(f"gamma has length {len(gamma)}, expected {kind.N}")
    rows = []
    for step in range(1, l_max + 1):
        g = drift_shape(kind, p, step)
        reduced = tuple(a - b for a, b in zip(pi_weight(kind, g), gamma))
        try:
            shifted = shape_from_weight(kind, reduced)
        except InvalidInputError:
            rows.append(TrendRow(step, g, None))
            continue
        denom = green(kind, p, (), g)
        if denom == 0:
            rows.append(TrendRow(step, g, None))
            continue
        rows.append(TrendRow(step, g, green(kind, p, (), shifted) / denom))
    rows = tuple(rows)
    return TrendReport(rows, Fraction(1), _final_quartile_deviation(rows, Fraction(1)))


def asympt_multiplicity_experiment(
    kind: AlgebraKind,
    p: ProbVector,
    mu: Sequence[int],
    l_max: int,
) -> TrendReport:
    """Exact skew/straight chain-count ratio along the drift, trending to s_mu(p)."""
    require_condition(p)
    mu = check_shape(kind, mu)
    target = schur(kind, mu, p)
    rows = []
    for step in range(1, l_max + 1):
        g = drift_shape(kind, p, step)
        denom = f_count(kind, g)
        if denom == 0:
            rows.append(TrendRow(step, g, None))
            continue
        rows.append(TrendRow(step, g, Fraction(f_skew(kind, g, mu), denom)))
    rows = tuple(rows)
    return TrendReport(rows, target, _final_quartile_deviation(rows, target))
