"""The explicit quantitative certificate: binomial quadruple, split
constants, the exact sum-of-nonnegatives decomposition of the reduced
three-variable gap, and the integer scans behind its positivity lemmas.

For n >= 4 and 1 <= k <= n-2, writing (a, b, c, d) for the four
consecutive binomials C(n, k-1)..C(n, k+2), the three-variable gap

    L(z) = (alpha*b*s1 + c*s2)^2 - (3*alpha*a + b*s1)(alpha*c*s2 + 3*d*s3)

decomposes exactly as theta1*(alpha*b*s1 + c*s2)^2 + theta2*W(z, t) + V(z)
with W a sum of three squares and V a positive-definite quadratic form in
(alpha*z_i, z_p*z_q).  theta1 is then an admissible quantitative constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import polys
from .core import RationalLike, as_point, as_rational, as_triple, binomial, sigma_all


def _check_general_range(n: int, k: int) -> None:
    if n < 4 or not 1 <= k <= n - 2:
        raise ValueError(f"need n >= 4 and 1 <= k <= n-2, got (n, k) = ({n}, {k})")


@dataclass(frozen=True)
class BinomQuad:
    """Four consecutive binomials a = C(n,k-1) .. d = C(n,k+2)."""

    n: int
    k: int
    a: int
    b: int
    c: int
    d: int


def binom_quad(n: int, k: int) -> BinomQuad:
    _check_general_range(n, k)
    return BinomQuad(
        n, k, binomial(n, k - 1), binomial(n, k), binomial(n, k + 1), binomial(n, k + 2)
    )


@dataclass(frozen=True)
class CertConstants:
    n: int
    k: int
    quad: BinomQuad
    theta1: Fraction
    theta2: Fraction
    t: Fraction
    A1: Fraction
    A2: Fraction
    A3: Fraction

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "binomials": {"a": self.quad.a, "b": self.quad.b, "c": self.quad.c, "d": self.quad.d},
            "theta1": str(self.theta1),
            "theta2": str(self.theta2),
            "t": str(self.t),
            "A1": str(self.A1),
            "A2": str(self.A2),
            "A3": str(self.A3),
        }


@lru_cache(maxsize=None)
def cert_constants(n: int, k: int) -> CertConstants:
    """Solve the three coefficient-matching equations for (theta1, theta2, t)
    and form the leftover quadratic-form coefficients A1, A2, A3:

        theta1 = 3(2ac^3 + 2b^3d - b^2c^2 - 3abcd) / (6ac^3 + 6b^3d - 4b^2c^2)
        theta2 = c^2 (3ac - b^2)^2 / (6ac^3 + 6b^3d - 4b^2c^2)
        t      = b (3bd - c^2) / (c (3ac - b^2))
        A1     = b^2 (1 - theta1) - 2 theta2
        A2     = c^2 (1 - theta1) - 2 t^2 theta2
        A3     = 18 t theta2 - 9 a d

    The denominators are strictly positive throughout the admissible
    range (see lemma31_check), so everything here is a plain rational.
    """
    quad = binom_quad(n, k)
    a, b, c, d = quad.a, quad.b, quad.c, quad.d
    den = 6 * a * c**3 + 6 * b**3 * d - 4 * b**2 * c**2
    theta1 = Fraction(3 * (2 * a * c**3 + 2 * b**3 * d - b**2 * c**2 - 3 * a * b * c * d), den)
    theta2 = Fraction(c**2 * (3 * a * c - b**2) ** 2, den)
    t = Fraction(b * (3 * b * d - c**2), c * (3 * a * c - b**2))
    A1 = b**2 * (1 - theta1) - 2 * theta2
    A2 = c**2 * (1 - theta1) - 2 * t**2 * theta2
    A3 = 18 * t * theta2 - 9 * a * d
    return CertConstants(n, k, quad, theta1, theta2, t, A1, A2, A3)


def _sigma123(z: tuple[Fraction, Fraction, Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    z1, z2, z3 = z
    return z1 + z2 + z3, z1 * z2 + z1 * z3 + z2 * z3, z1 * z2 * z3


def w_value(z: Iterable[RationalLike], alpha: RationalLike, t: RationalLike) -> Fraction:
    """W(z, t) = sum over pairs of (z_i - z_j)^2 (alpha + t z_l)^2, the
    manifestly nonnegative square form."""
    z1, z2, z3 = as_triple(z)
    a = as_rational(alpha)
    t = as_rational(t)
    return (
        (z1 - z2) ** 2 * (a + t * z3) ** 2
        + (z1 - z3) ** 2 * (a + t * z2) ** 2
        + (z2 - z3) ** 2 * (a + t * z1) ** 2
    )


def w_value_expanded(z: Iterable[RationalLike], alpha: RationalLike, t: RationalLike) -> Fraction:
    """W through its expanded sigma form:

        2 a^2 sum z_i^2 - 2 a^2 s2 + 2 a t s1 s2
        + 2 t^2 sum_{p<q} z_p^2 z_q^2 - 2 t^2 s1 s3 - 18 a t s3

    Agreement with w_value is itself a checked identity.
    """
    triple = as_triple(z)
    a = as_rational(alpha)
    t = as_rational(t)
    s1, s2, s3 = _sigma123(triple)
    z1, z2, z3 = triple
    sum_sq = z1**2 + z2**2 + z3**2
    pair_sq = z1**2 * z2**2 + z1**2 * z3**2 + z2**2 * z3**2
    return (
        2 * a**2 * sum_sq
        - 2 * a**2 * s2
        + 2 * a * t * s1 * s2
        + 2 * t**2 * pair_sq
        - 2 * t**2 * s1 * s3
        - 18 * a * t * s3
    )


def v_value(z: Iterable[RationalLike], alpha: RationalLike, consts: CertConstants) -> Fraction:
    """V(z) = A1 a^2 sum z_i^2 + A2 sum_{p<q} z_p^2 z_q^2 + A3 a s3.

    Nonnegative for in-range constants: A1 a^2 z_i^2 + A2 z_p^2 z_q^2 >=
    2 sqrt(A1 A2) |a s3| > |A3 a s3| / 3 for each of the three pairings.
    """
    z1, z2, z3 = as_triple(z)
    a = as_rational(alpha)
    sum_sq = z1**2 + z2**2 + z3**2
    pair_sq = z1**2 * z2**2 + z1**2 * z3**2 + z2**2 * z3**2
    s3 = z1 * z2 * z3
    return consts.A1 * a**2 * sum_sq + consts.A2 * pair_sq + consts.A3 * a * s3


def l_value(z: Iterable[RationalLike], alpha: RationalLike, n: int, k: int) -> Fraction:
    """The reduced three-variable gap
    (alpha*b*s1 + c*s2)^2 - (3*alpha*a + b*s1)(alpha*c*s2 + 3*d*s3)."""
    quad = binom_quad(n, k)
    triple = as_triple(z)
    a = as_rational(alpha)
    s1, s2, s3 = _sigma123(triple)
    return (a * quad.b * s1 + quad.c * s2) ** 2 - (3 * a * quad.a + quad.b * s1) * (
        a * quad.c * s2 + 3 * quad.d * s3
    )


def decomposition_residual(
    z: Iterable[RationalLike], alpha: RationalLike, n: int, k: int
) -> Fraction:
    """L(z) - theta1*(alpha*b*s1 + c*s2)^2 - theta2*W(z, t) - V(z).

    Identically zero: the constants were solved to make it so, and the
    tests confirm this both at random points and by full coefficient
    matching.
    """
    consts = cert_constants(n, k)
    quad = consts.quad
    triple = as_triple(z)
    a = as_rational(alpha)
    s1, s2, _ = _sigma123(triple)
    head = (a * quad.b * s1 + quad.c * s2) ** 2
    return (
        l_value(triple, a, n, k)
        - consts.theta1 * head
        - consts.theta2 * w_value(triple, a, consts.t)
        - v_value(triple, a, consts)
    )


def decomposition_coefficient_match(n: int, k: int) -> bool:
    """Expand the decomposition residual symbolically in (z1, z2, z3, alpha)
    and verify that every monomial coefficient vanishes.

    Conclusive where random-point sampling could in principle miss a
    measure-zero discrepancy.
    """
    consts = cert_constants(n, k)
    quad = consts.quad
    z1, z2, z3, al = (polys.mp_var(i) for i in range(4))

    s1 = polys.mp_add(polys.mp_add(z1, z2), z3)
    s2 = polys.mp_add(
        polys.mp_add(polys.mp_mul(z1, z2), polys.mp_mul(z1, z3)), polys.mp_mul(z2, z3)
    )
    s3 = polys.mp_mul(polys.mp_mul(z1, z2), z3)

    head = polys.mp_add(polys.mp_scale(polys.mp_mul(al, s1), quad.b), polys.mp_scale(s2, quad.c))
    head_sq = polys.mp_mul(head, head)
    left = polys.mp_add(polys.mp_scale(al, 3 * quad.a), polys.mp_scale(s1, quad.b))
    right = polys.mp_add(
        polys.mp_scale(polys.mp_mul(al, s2), quad.c), polys.mp_scale(s3, 3 * quad.d)
    )
    big_l = polys.mp_sub(head_sq, polys.mp_mul(left, right))

    def shifted_square(zi: polys.MPoly) -> polys.MPoly:
        term = polys.mp_add(al, polys.mp_scale(zi, consts.t))
        return polys.mp_mul(term, term)

    def diff_square(za: polys.MPoly, zb: polys.MPoly) -> polys.MPoly:
        diff = polys.mp_sub(za, zb)
        return polys.mp_mul(diff, diff)

    w_poly = polys.mp_add(
        polys.mp_add(
            polys.mp_mul(diff_square(z1, z2), shifted_square(z3)),
            polys.mp_mul(diff_square(z1, z3), shifted_square(z2)),
        ),
        polys.mp_mul(diff_square(z2, z3), shifted_square(z1)),
    )

    sum_sq = polys.mp_add(polys.mp_add(polys.mp_mul(z1, z1), polys.mp_mul(z2, z2)), polys.mp_mul(z3, z3))
    pair_sq = polys.mp_add(
        polys.mp_add(
            polys.mp_mul(polys.mp_mul(z1, z1), polys.mp_mul(z2, z2)),
            polys.mp_mul(polys.mp_mul(z1, z1), polys.mp_mul(z3, z3)),
        ),
        polys.mp_mul(polys.mp_mul(z2, z2), polys.mp_mul(z3, z3)),
    )
    al_sq = polys.mp_mul(al, al)
    v_poly = polys.mp_add(
        polys.mp_add(
            polys.mp_scale(polys.mp_mul(al_sq, sum_sq), consts.A1),
            polys.mp_scale(pair_sq, consts.A2),
        ),
        polys.mp_scale(polys.mp_mul(al, s3), consts.A3),
    )

    residual = polys.mp_sub(
        polys.mp_sub(
            polys.mp_sub(big_l, polys.mp_scale(head_sq, consts.theta1)),
            polys.mp_scale(w_poly, consts.theta2),
        ),
        v_poly,
    )
    return polys.mp_is_zero(residual)


@dataclass(frozen=True)
class Lemma31Report:
    """The three exact positivity quantities: 3bd - c^2, 3ac - b^2, and
    2ac^3 + 2b^3d - b^2c^2 - 3abcd."""

    n: int
    k: int
    bd_term: int
    ac_term: int
    mixed_term: int

    @property
    def all_positive(self) -> bool:
        return self.bd_term > 0 and self.ac_term > 0 and self.mixed_term > 0

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "3bd-c2": self.bd_term,
            "3ac-b2": self.ac_term,
            "2ac3+2b3d-b2c2-3abcd": self.mixed_term,
            "pass": self.all_positive,
        }


def lemma31_check(n: int, k: int) -> Lemma31Report:
    quad = binom_quad(n, k)
    a, b, c, d = quad.a, quad.b, quad.c, quad.d
    return Lemma31Report(
        n,
        k,
        3 * b * d - c**2,
        3 * a * c - b**2,
        2 * a * c**3 + 2 * b**3 * d - b**2 * c**2 - 3 * a * b * c * d,
    )


@dataclass(frozen=True)
class Lemma32Report:
    """Positivity of A1, A2 and the discriminant combination A1 A2 - A3^2/36."""

    n: int
    k: int
    A1: Fraction
    A2: Fraction
    discriminant_combo: Fraction

    @property
    def all_positive(self) -> bool:
        return self.A1 > 0 and self.A2 > 0 and self.discriminant_combo > 0

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "A1": str(self.A1),
            "A2": str(self.A2),
            "A1A2-A3^2/36": str(self.discriminant_combo),
            "pass": self.all_positive,
        }


def lemma32_check(n: int, k: int) -> Lemma32Report:
    consts = cert_constants(n, k)
    combo = consts.A1 * consts.A2 - consts.A3**2 / 36
    return Lemma32Report(n, k, consts.A1, consts.A2, combo)


# Auxiliary integer polynomials whose positivity on k = 1..n-2 underpins
# the lemmas.  Endpoints: f1(1) = f2(1) = f2(n-2) = f3(1) = f3(n-2) =
# f4(1) = f4(n-2) = 3(n-3), while f1(n-2) = n-3.


def f1(n: int, k: int) -> int:
    return -2 * k**2 + 2 * (n - 2) * k + (n - 3)


def f2(n: int, k: int) -> int:
    return -(k**3) + (n - 5) * k**2 + (3 * n - 2) * k - n - 1


def f3(n: int, k: int) -> int:
    return k**3 - (2 * n + 2) * k**2 + (n**2 + 3 * n - 5) * k - n**2 + 2 * n - 3


def f4(n: int, k: int) -> int:
    return -(n + 5) * k**2 + (n**2 + 4 * n - 5) * k - n**2 + 1


@dataclass(frozen=True)
class FScanRow:
    k: int
    f1: int
    f2: int
    f3: int
    f4: int

    @property
    def all_positive(self) -> bool:
        return self.f1 > 0 and self.f2 > 0 and self.f3 > 0 and self.f4 > 0

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "f1": self.f1,
            "f2": self.f2,
            "f3": self.f3,
            "f4": self.f4,
            "pass": self.all_positive,
        }


def f_scan(n: int) -> list[FScanRow]:
    """Evaluate f1..f4 at every integer k in [1, n-2]; all must be > 0."""
    if n < 4:
        raise ValueError(f"f_scan needs n >= 4, got {n}")
    return [FScanRow(k, f1(n, k), f2(n, k), f3(n, k), f4(n, k)) for k in range(1, n - 1)]


class SpecialCase(Enum):
    K0 = "K0"
    KN1 = "KN1"
    N3K1 = "N3K1"


def special_case_gap(
    x: Iterable[RationalLike], alpha: RationalLike, case: SpecialCase
) -> Fraction:
    """Quantitative gap at theta = 1/2 in the three special windows.

    K0:   (1/2)(a + s1)^2 - (a s1 + s2)            = a^2/2 + (sum x_i^2)/2
    KN1:  (1/2)(a s_{n-1} + s_n)^2 - (a s_{n-2} + s_{n-1}) a s_n
    N3K1: (1/2)(a s1 + s2)^2 - (a + s1)(a s2 + s3)   for 3-tuples
    """
    point = as_point(x)
    a = as_rational(alpha)
    n = len(point)
    s = sigma_all(point).sigma_at
    half = Fraction(1, 2)
    if case is SpecialCase.K0:
        return half * (a + s(1)) ** 2 - (a * s(1) + s(2))
    if case is SpecialCase.KN1:
        return half * (a * s(n - 1) + s(n)) ** 2 - (a * s(n - 2) + s(n - 1)) * a * s(n)
    if case is SpecialCase.N3K1:
        if n != 3:
            raise ValueError(f"N3K1 needs a 3-tuple, got length {n}")
        return half * (a * s(1) + s(2)) ** 2 - (a + s(1)) * (a * s(2) + s(3))
    raise ValueError(f"unknown special case {case!r}")


def theta_for(n: int, k: int) -> Fraction:
    """Certified admissible theta for the quantitative gap: 1/2 at k = 0,
    k = n-1, and (n, k) = (3, 1); theta1(n, k) otherwise.

    Admissible, not claimed optimal.
    """
    if n < 3 or not 0 <= k <= n - 1:
        raise ValueError(f"theta_for needs n >= 3 and 0 <= k <= n-1, got ({n}, {k})")
    if k == 0 or k == n - 1 or (n, k) == (3, 1):
        return Fraction(1, 2)
    return cert_constants(n, k).theta1
