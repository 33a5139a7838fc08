"""Reduction of an n-tuple to its associated real-rooted cubic.

Starting from P(t) = prod (t - x_i), repeated partial differentiation of
the homogenization F(t, s) preserves real-rootedness, and the mixed
partials of total order n-3 are proportional to the cubics

    E_{k-1} t^3 - 3 E_k t^2 s + 3 E_{k+1} t s^2 - E_{k+2} s^3,

one for each window k = 1..n-2.  Real-rootedness is decided exactly
(Sturm chains / discriminant signs over rationals); floating-point roots
are a convenience output only and never feed an exact check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import polys
from .core import RationalLike, as_point, as_rational, as_triple, binomial, e_all, sigma_all

ROOT_DIGITS = 40
_NEWTON_DEN_BOUND = 10**80
_BISECTION_WIDTH = Fraction(1, 10**45)


class Branch(Enum):
    CASE_A = "CaseA"
    CASE_B = "CaseB"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class Cubic:
    """Coefficients c0 t^3 + c1 t^2 + c2 t + c3 with
    (c0, c1, c2, c3) = (E_{k-1}, -3 E_k, 3 E_{k+1}, -E_{k+2})."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def as_poly(self) -> polys.Poly:
        # lowest power first, for the polynomial utilities
        return polys.trim([self.c3, self.c2, self.c1, self.c0])

    def to_json_dict(self) -> dict:
        return {"coefficients": [str(c) for c in self.coefficients()]}


def associated_cubic(x: Iterable[RationalLike], k: int) -> Cubic:
    point = as_point(x)
    n = len(point)
    if n < 3 or not 1 <= k <= n - 2:
        raise ValueError(f"need n >= 3 and 1 <= k <= n-2, got k={k}, n={n}")
    e = sigma_all(point).e_at
    return Cubic(e(k - 1), -3 * e(k), 3 * e(k + 1), -e(k + 2))


def cubic_discriminant(cubic: Cubic | Sequence[RationalLike]) -> Fraction:
    """Exact discriminant of the (degree-reduced) polynomial.

    Nonnegative certifies all-real roots at degrees 2 and 3; degrees
    below 2 are vacuously real-rooted and report 1.  Coefficients are
    highest power first when a plain sequence is given.
    """
    if isinstance(cubic, Cubic):
        coeffs = list(cubic.coefficients())
    else:
        coeffs = [as_rational(c) for c in cubic]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        raise ValueError("the zero polynomial has no discriminant")
    deg = len(coeffs) - 1
    if deg == 3:
        a, b, c, d = coeffs
        return (
            18 * a * b * c * d
            - 4 * b**3 * d
            + b**2 * c**2
            - 4 * a * c**3
            - 27 * a**2 * d**2
        )
    if deg == 2:
        a, b, c = coeffs
        return b**2 - 4 * a * c
    return Fraction(1)


@dataclass(frozen=True)
class CascadeResult:
    """Derivative cascade of the homogenized point polynomial.

    levels[l][j] holds the coefficients (highest power in t first, up to
    a nonzero constant factor) of the order-l mixed partial with j
    derivatives in s: sum_m (-1)^m C(n-l, m) E_{j+m} t^(n-l-m) s^m
    dehomogenized at s = 1.  The final level contains the n-2 cubics.
    """

    n: int
    levels: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def cubics(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.levels[-1]

    def all_polynomials(self) -> list[tuple[Fraction, ...]]:
        return [p for level in self.levels for p in level]


def derivative_cascade(x: Iterable[RationalLike]) -> CascadeResult:
    """Materialize every cascade level down to the cubics, certifying
    each nonzero polynomial real-rooted by an exact Sturm count."""
    point = as_point(x)
    n = len(point)
    if n < 3:
        raise ValueError(f"the cascade needs n >= 3, got n={n}")
    means = sigma_all(point).e_list()
    levels = []
    for order in range(n - 2):
        deg = n - order
        row = []
        for j in range(order + 1):
            coeffs = tuple(
                Fraction((-1) ** m * binomial(deg, m)) * means[j + m] for m in range(deg + 1)
            )
            low_first = list(reversed(coeffs))
            if polys.degree(low_first) >= 1 and not polys.is_real_rooted(low_first):
                raise ArithmeticError(
                    f"cascade polynomial at order {order}, offset {j} lost real-rootedness"
                )
            row.append(coeffs)
        levels.append(tuple(row))
    return CascadeResult(n, tuple(levels))


@dataclass(frozen=True)
class RootTriple:
    """Roots and exact moments of the normalized associated cubic.

    vieta_moments are the exact (E_1, E_2, E_3) of the roots read off the
    coefficient ratios; they carry no approximation error regardless of
    the quality of the decimal root strings.  In the degenerate branch
    (both window ends vanish) there is no cubic to normalize, and
    degenerate_means stores the surviving pair (E_k, E_{k+1}) instead.
    """

    branch: Branch
    vieta_moments: Optional[tuple[Fraction, Fraction, Fraction]]
    roots: Optional[tuple[str, str, str]]
    precision: int
    degenerate_means: Optional[tuple[Fraction, Fraction]] = None

    def to_json_dict(self) -> dict:
        return {
            "branch": self.branch.value,
            "vieta_moments": None
            if self.vieta_moments is None
            else [str(m) for m in self.vieta_moments],
            "roots": None if self.roots is None else list(self.roots),
            "precision": self.precision,
            "degenerate_means": None
            if self.degenerate_means is None
            else [str(m) for m in self.degenerate_means],
        }


def reduce_to_three(x: Iterable[RationalLike], k: int) -> RootTriple:
    """Normalize the window-k cubic and extract its three real roots.

    E_{k-1} != 0 divides through by the leading mean; E_{k-1} = 0 with
    E_{k+2} != 0 uses the reversed polynomial instead; if both vanish the
    branch is degenerate and the direct gap (see degenerate_direct_gap)
    applies.
    """
    point = as_point(x)
    n = len(point)
    if n < 3 or not 1 <= k <= n - 2:
        raise ValueError(f"need n >= 3 and 1 <= k <= n-2, got k={k}, n={n}")
    e = sigma_all(point).e_at
    if e(k - 1) != 0:
        lead = e(k - 1)
        moments = (e(k) / lead, e(k + 1) / lead, e(k + 2) / lead)
        branch = Branch.CASE_A
    elif e(k + 2) != 0:
        lead = e(k + 2)
        moments = (e(k + 1) / lead, e(k) / lead, e(k - 1) / lead)
        branch = Branch.CASE_B
    else:
        return RootTriple(
            Branch.DEGENERATE, None, None, ROOT_DIGITS, degenerate_means=(e(k), e(k + 1))
        )
    m1, m2, m3 = moments
    roots = real_cubic_roots(-3 * m1, 3 * m2, -m3)
    return RootTriple(branch, moments, tuple(_decimal_str(r) for r in roots), ROOT_DIGITS)


def degenerate_direct_gap(
    e_k: RationalLike, e_k1: RationalLike, alpha: RationalLike
) -> Fraction:
    """Two-term gap when both window ends vanish, written as an explicit
    sum of three nonnegative pieces:
    (a E_k + E_{k+1})^2/2 + a^2 E_k^2/2 + E_{k+1}^2/2."""
    ek = as_rational(e_k)
    ek1 = as_rational(e_k1)
    a = as_rational(alpha)
    return (a * ek + ek1) ** 2 / 2 + a**2 * ek**2 / 2 + ek1**2 / 2


def gap_from_moments(
    m1: RationalLike, m2: RationalLike, m3: RationalLike, alpha: RationalLike
) -> Fraction:
    """Three-variable two-term gap evaluated on exact moments (E_0 = 1):
    (a m1 + m2)^2 - (a + m1)(a m2 + m3).

    For a CaseA reduction this times E_{k-1}^2 reproduces the original
    two-term gap exactly.
    """
    a = as_rational(alpha)
    v1, v2, v3 = as_rational(m1), as_rational(m2), as_rational(m3)
    return (a * v1 + v2) ** 2 - (a + v1) * (a * v2 + v3)


def lemma21_identity_residual(
    z: Iterable[RationalLike], alpha: RationalLike
) -> tuple[Fraction, Fraction]:
    """Three-variable square identity: 18 times the two-term gap equals a
    sum of three squares of pairwise products of the shifted entries.

    Returns (gap, residual); the residual is identically zero and the gap
    therefore nonnegative for every real triple and alpha.
    """
    z1, z2, z3 = as_triple(z)
    a = as_rational(alpha)
    means = e_all((z1, z2, z3))
    gap = 18 * (a * means[1] + means[2]) ** 2 - 18 * (a * means[0] + means[1]) * (
        a * means[2] + means[3]
    )
    u = (z1 + a) * (z2 + a)
    v = (z1 + a) * (z3 + a)
    w = (z2 + a) * (z3 + a)
    squares = (u - v) ** 2 + (u - w) ** 2 + (v - w) ** 2
    return gap, gap - squares


# -- real root extraction for monic cubics --------------------------------


def real_cubic_roots(b: RationalLike, c: RationalLike, d: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """High-precision rational approximations (exact where roots repeat)
    to the three real roots of t^3 + b t^2 + c t + d, ascending.

    Raises ValueError if the cubic has a nonreal pair.  Distinct roots
    come from the closed-form trigonometric seeds polished by one exact
    Newton step; ill-conditioned cases fall back to Sturm bisection.
    """
    b = as_rational(b)
    c = as_rational(c)
    d = as_rational(d)
    shift = b / 3
    # depressed form u^3 + P u + Q with u = t + b/3
    P = c - b**2 / 3
    Q = 2 * b**3 / 27 - b * c / 3 + d
    disc = -4 * P**3 - 27 * Q**2
    if disc < 0:
        raise ValueError("cubic has a nonreal root pair")
    if disc == 0:
        if P == 0:
            r = -shift
            return (r, r, r)
        simple = 3 * Q / P - shift
        double = -3 * Q / (2 * P) - shift
        ordered = sorted([simple, double, double])
        return (ordered[0], ordered[1], ordered[2])
    poly = [d, c, b, Fraction(1)]
    roots = _trig_seeds_polished(poly, P, Q, shift)
    if roots is None or not _roots_acceptable(poly, roots):
        roots = _bisection_roots(poly)
    ordered = sorted(roots)
    return (ordered[0], ordered[1], ordered[2])


def _trig_seeds_polished(
    poly: polys.Poly, P: Fraction, Q: Fraction, shift: Fraction
) -> Optional[list[Fraction]]:
    try:
        p_f = float(P)
        q_f = float(Q)
        radius = 2.0 * math.sqrt(-p_f / 3.0)
        if radius == 0.0 or not math.isfinite(radius):
            return None
        arg = 3.0 * q_f / (p_f * radius)
        arg = max(-1.0, min(1.0, arg))
        angle = math.acos(arg) / 3.0
        seeds = [radius * math.cos(angle - 2.0 * math.pi * j / 3.0) for j in range(3)]
    except (OverflowError, ValueError, ZeroDivisionError):
        return None
    deriv = polys.derivative(poly)
    roots = []
    for seed in seeds:
        r = Fraction(seed).limit_denominator(10**17) - shift
        slope = polys.evaluate(deriv, r)
        if slope == 0:
            return None
        r = r - polys.evaluate(poly, r) / slope
        roots.append(r.limit_denominator(_NEWTON_DEN_BOUND))
    return roots


def _roots_acceptable(poly: polys.Poly, roots: Sequence[Fraction]) -> bool:
    if len(set(roots)) != 3:
        return False
    scale = max(abs(c) for c in poly)
    tol = scale / 10**20
    return all(abs(polys.evaluate(poly, r)) <= tol * max(1, abs(r)) ** 3 for r in roots)


def _bisection_roots(poly: polys.Poly) -> list[Fraction]:
    """Exact Sturm isolation and bisection for a monic cubic with three
    distinct real roots, followed by one Newton polish each."""
    chain = polys.sturm_chain(poly)
    bound = Fraction(1) + max(abs(c) for c in poly)
    while polys.evaluate(poly, bound) == 0 or polys.evaluate(poly, -bound) == 0:
        bound += 1
    stack = [(-bound, bound)]
    roots: list[Fraction] = []
    while stack:
        lo, hi = stack.pop()
        count = polys.count_roots_between(chain, lo, hi)
        if count == 0:
            continue
        if count == 1:
            roots.append(_tighten_root(poly, chain, lo, hi))
            continue
        mid = _nonroot_point(poly, lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))
    return roots


def _nonroot_point(poly: polys.Poly, lo: Fraction, hi: Fraction) -> Fraction:
    span = hi - lo
    point = lo + span / 2
    step = span / 1_000_003
    while polys.evaluate(poly, point) == 0:
        point += step
    return point


def _tighten_root(
    poly: polys.Poly, chain: Sequence[polys.Poly], lo: Fraction, hi: Fraction
) -> Fraction:
    while hi - lo > _BISECTION_WIDTH:
        mid = (lo + hi) / 2
        if polys.evaluate(poly, mid) == 0:
            return mid
        if polys.count_roots_between(chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    r = ((lo + hi) / 2).limit_denominator(_NEWTON_DEN_BOUND)
    slope = polys.evaluate(polys.derivative(poly), r)
    if slope != 0:
        r = (r - polys.evaluate(poly, r) / slope).limit_denominator(_NEWTON_DEN_BOUND)
    return r


def _decimal_str(value: Fraction, digits: int = ROOT_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))
