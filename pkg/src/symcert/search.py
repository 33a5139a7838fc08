"""Randomized exploration with exact confirmation.

Candidates come from seeded floating-point sampling, but nothing is ever
reported from float evidence: every would-be witness is rationalized by
continued fractions and re-verified in exact arithmetic first.  Sampling
is keyed per iteration, so identical (seed, budget, parameters) produce
identical reports for any worker count.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from .certificate import theta_for
from .core import RationalLike, as_rational, sigma_all
from .gaps import linear_combo_gap

_SEED_STRIDE = 1_000_003
_DENOMINATOR_BOUND = 10**6
_CHUNK = 64
_WITNESS_CAP = 10

T = TypeVar("T")


class CertificateViolation(RuntimeError):
    """An observed ratio fell below the certified theta.

    This would contradict the proved quantitative bound, so the run
    aborts loudly instead of folding the sample into a summary.
    """


class AllSamplesDegenerate(RuntimeError):
    """Every sampled ratio had a vanishing denominator."""


def _worker_count() -> int:
    raw = os.environ.get("SYMCERT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_indexed(fn: Callable[[int], T], count: int) -> list[T]:
    """fn over 0..count-1, output in index order.

    Honors SYMCERT_THREADS; results are identical for any worker count
    because every iteration derives its own generator from (seed, i).
    """
    workers = _worker_count()
    if workers <= 1 or count < 2:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def _rng_for(seed: int, iteration: int) -> random.Random:
    return random.Random(seed * _SEED_STRIDE + iteration)


def _sample_entry(rng: random.Random, negative_rate: float = 0.35) -> Fraction:
    """Signed log-uniform magnitude exp(U[-3, 3]), rationalized by
    continued fractions with denominators capped at 10^6."""
    magnitude = math.exp(rng.uniform(-3.0, 3.0))
    if rng.random() < negative_rate:
        magnitude = -magnitude
    return Fraction(magnitude).limit_denominator(_DENOMINATOR_BOUND)


@dataclass(frozen=True)
class Witness:
    """A confirmed finding.  The gap (or ratio) field is recomputed in
    exact arithmetic from the stored rational inputs before a witness is
    ever emitted."""

    x: tuple[Fraction, ...]
    coeffs: Optional[tuple[Fraction, ...]]
    alpha: Optional[Fraction]
    k: Optional[int]
    gap: Fraction
    context: str
    seed: int
    iteration: int

    def to_json_dict(self) -> dict:
        return {
            "x": [str(v) for v in self.x],
            "coeffs": None if self.coeffs is None else [str(c) for c in self.coeffs],
            "alpha": None if self.alpha is None else str(self.alpha),
            "k": self.k,
            "gap": str(self.gap),
            "context": self.context,
            "seed": self.seed,
            "iteration": self.iteration,
        }


# -- hunting violations of the linear-combination conjecture --------------


def _anchor_candidates(m: int, n: int) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """Deterministic first probes; the known violating family (weights on
    the odd slots, a point mixing a scale with its reciprocal) leads."""
    if m < 3 or n < 2:
        return []
    coeffs = tuple(Fraction(1) if j % 2 == 0 else Fraction(0) for j in range(m))
    half = n // 2
    point = (Fraction(4),) * (n - half) + (Fraction(1, 4),) * half
    return [(coeffs, point)]


def _sample_coeffs(rng: random.Random, m: int) -> tuple[Fraction, ...]:
    """Sparse sign patterns first: slots are zero half the time, unit
    +/-1 most of the rest, occasionally a sampled magnitude."""
    while True:
        out = []
        for _ in range(m):
            roll = rng.random()
            if roll < 0.5:
                out.append(Fraction(0))
            elif roll < 0.85:
                out.append(Fraction(rng.choice((1, -1))))
            else:
                out.append(_sample_entry(rng))
        if any(out):
            return tuple(out)


def _float_combo_gap(point: Sequence[Fraction], coeffs: Sequence[Fraction]) -> float:
    means = [float(v) for v in sigma_all(point).e_list()]
    n = len(point)

    def mean_at(j: int) -> float:
        return means[j] if 0 <= j <= n else 0.0

    cs = [float(c) for c in coeffs]
    mid = sum(c * mean_at(j) for j, c in enumerate(cs, start=1))
    low = sum(c * mean_at(j - 1) for j, c in enumerate(cs, start=1))
    high = sum(c * mean_at(j + 1) for j, c in enumerate(cs, start=1))
    return mid * mid - low * high


def _refine_point(
    rng: random.Random,
    point: tuple[Fraction, ...],
    coeffs: tuple[Fraction, ...],
    steps: int = 60,
) -> tuple[Fraction, ...]:
    """Greedy coordinate perturbation on the float estimate; the caller
    re-verifies whatever comes back."""
    best = list(float(v) for v in point)
    best_gap = _float_combo_gap([Fraction(v).limit_denominator(_DENOMINATOR_BOUND) for v in best], coeffs)
    current = list(best)
    for _ in range(steps):
        idx = rng.randrange(len(current))
        saved = current[idx]
        current[idx] = saved * math.exp(rng.gauss(0.0, 0.3))
        candidate = [Fraction(v).limit_denominator(_DENOMINATOR_BOUND) for v in current]
        gap = _float_combo_gap(candidate, coeffs)
        if gap < best_gap:
            best_gap = gap
            best = list(current)
        else:
            current[idx] = saved
    return tuple(Fraction(v).limit_denominator(_DENOMINATOR_BOUND) for v in best)


def find_counterexample_15(m: int, n: int, seed: int, budget: int) -> Optional[Witness]:
    """Search for a point and coefficient vector with a negative
    linear-combination gap; None is a valid outcome.

    Deterministic given (m, n, seed, budget).  Anchor candidates are
    probed first, then seeded random sampling with greedy refinement of
    promising candidates; any hit is confirmed exactly before return.
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 coefficients and n >= 1 entries")
    anchors = _anchor_candidates(m, n)

    def probe(iteration: int) -> Optional[Witness]:
        if iteration < len(anchors):
            coeffs, point = anchors[iteration]
        else:
            rng = _rng_for(seed, iteration)
            coeffs = _sample_coeffs(rng, m)
            point = tuple(_sample_entry(rng) for _ in range(n))
            estimate = _float_combo_gap(point, coeffs)
            if estimate >= 0:
                scale = abs(estimate) + sum(abs(float(v)) for v in point) + 1.0
                if estimate > 0.02 * scale:
                    return None
                point = _refine_point(rng, point, coeffs)
        report = linear_combo_gap(point, coeffs)
        if report.gap < 0:
            return Witness(point, coeffs, None, None, report.gap, "Conjecture15", seed, iteration)
        return None

    done = 0
    while done < budget:
        block = min(_CHUNK, budget - done)
        offset = done
        results = _map_indexed(lambda j: probe(offset + j), block)
        for witness in results:
            if witness is not None:
                return witness
        done += block
    return None


# -- bracketing the quantitative constant from above -----------------------


@dataclass(frozen=True)
class ThetaSummary:
    n: int
    k: int
    samples: int
    skipped: int
    certified: Fraction
    min_ratio: Optional[Fraction]
    argmin: Optional[Witness]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "samples": self.samples,
            "skipped": self.skipped,
            "certified_theta": str(self.certified),
            "min_ratio": None if self.min_ratio is None else str(self.min_ratio),
            "argmin": None if self.argmin is None else self.argmin.to_json_dict(),
        }


def empirical_theta(n: int, k: int, samples: int, seed: int) -> ThetaSummary:
    """Observe ratio = 1 - [a s_{k-1} + s_k][a s_{k+1} + s_{k+2}] / (a s_k + s_{k+1})^2
    over sampled (x, alpha), exactly.

    Samples with a vanishing denominator are skipped and counted (the
    ratio is undefined where the squared term collapses).  Every observed
    ratio must clear the certified theta; anything lower raises
    CertificateViolation.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if n < 3 or not 0 <= k <= n - 1:
        raise ValueError(f"need n >= 3 and 0 <= k <= n-1, got ({n}, {k})")
    certified = theta_for(n, k)

    def sample(i: int) -> Optional[tuple[Fraction, tuple[Fraction, ...], Fraction]]:
        rng = _rng_for(seed, i)
        alpha = _sample_entry(rng, negative_rate=0.5)
        if i % 8 == 7:
            # probe near the equality family: most entries at -alpha
            tail = _sample_entry(rng)
            jitter = Fraction(rng.randint(-1, 1), 10**4)
            point = (-alpha + jitter,) + (-alpha,) * (n - 2) + (tail,)
        else:
            point = tuple(_sample_entry(rng, negative_rate=0.5) for _ in range(n))
        s = sigma_all(point).sigma_at
        denominator = alpha * s(k) + s(k + 1)
        if denominator == 0:
            return None
        ratio = 1 - (alpha * s(k - 1) + s(k)) * (alpha * s(k + 1) + s(k + 2)) / denominator**2
        return ratio, point, alpha

    results = _map_indexed(sample, samples)
    skipped = 0
    min_ratio: Optional[Fraction] = None
    argmin: Optional[Witness] = None
    for i, result in enumerate(results):
        if result is None:
            skipped += 1
            continue
        ratio, point, alpha = result
        if ratio < certified:
            raise CertificateViolation(
                f"ratio {ratio} below certified theta {certified} at (n, k) = ({n}, {k}); "
                f"x = {[str(v) for v in point]}, alpha = {alpha}"
            )
        if min_ratio is None or ratio < min_ratio:
            min_ratio = ratio
            argmin = Witness(point, None, alpha, k, ratio, "ThetaRatio", seed, i)
    if min_ratio is None:
        raise AllSamplesDegenerate(
            f"all {samples} samples had a vanishing denominator at (n, k) = ({n}, {k})"
        )
    return ThetaSummary(n, k, samples, skipped, certified, min_ratio, argmin)


# -- structured coefficient-family scans -----------------------------------

FAMILIES = ("one-hot", "two-adjacent", "alternating-signs", "all-ones")


@dataclass(frozen=True)
class ScanGrid:
    """Grid values for scan points (two-block patterns u..u v..v) and for
    the sliding coefficient in the two-adjacent family."""

    values: tuple[Fraction, ...] = (
        Fraction(4),
        Fraction(2),
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 4),
    )

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> "ScanGrid":
        return cls(tuple(as_rational(v) for v in values))


@dataclass(frozen=True)
class ScanReport:
    family: str
    n: int
    evaluated: int
    positive: int
    zero: int
    negative: int
    witnesses: tuple[Witness, ...]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "evaluated": self.evaluated,
            "positive": self.positive,
            "zero": self.zero,
            "negative": self.negative,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


def _family_vectors(family: str, m: int, grid: ScanGrid) -> list[tuple[Fraction, ...]]:
    if family == "one-hot":
        return [
            tuple(Fraction(1) if i == j else Fraction(0) for i in range(m)) for j in range(m)
        ]
    if family == "all-ones":
        return [tuple(Fraction(1) for _ in range(m))]
    if family == "alternating-signs":
        # support on every other slot, all sign choices on the support
        support = [j for j in range(m) if j % 2 == 0]
        vectors = []
        for mask in range(2 ** len(support)):
            vec = [Fraction(0)] * m
            for bit, j in enumerate(support):
                vec[j] = Fraction(1) if (mask >> bit) & 1 == 0 else Fraction(-1)
            vectors.append(tuple(vec))
        return vectors
    if family == "two-adjacent":
        vectors = []
        for j in range(m - 1):
            for a in grid.values:
                vec = [Fraction(0)] * m
                vec[j] = a
                vec[j + 1] = Fraction(1)
                vectors.append(tuple(vec))
        return vectors
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def _grid_points(length: int, grid: ScanGrid) -> list[tuple[Fraction, ...]]:
    points = []
    for u in grid.values:
        for v in grid.values:
            for p in range(1, length):
                points.append((u,) * p + (v,) * (length - p))
    return points


def structured_scan(family: str, n: int, grid: Optional[ScanGrid] = None) -> ScanReport:
    """Grid-evaluate the linear-combination gap over one coefficient
    family (m = n coefficients, points of length n + 1), tabulating the
    sign regions.  Purely exploratory; no sign is asserted.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    grid = grid or ScanGrid()
    positive = zero = negative = 0
    witnesses: list[Witness] = []
    evaluated = 0
    for coeffs in _family_vectors(family, n, grid):
        for point in _grid_points(n + 1, grid):
            report = linear_combo_gap(point, coeffs)
            if report.gap > 0:
                positive += 1
            elif report.gap == 0:
                zero += 1
            else:
                negative += 1
                if len(witnesses) < _WITNESS_CAP:
                    witnesses.append(
                        Witness(point, coeffs, None, None, report.gap, "Conjecture15", 0, evaluated)
                    )
            evaluated += 1
    return ScanReport(family, n, evaluated, positive, zero, negative, tuple(witnesses))
