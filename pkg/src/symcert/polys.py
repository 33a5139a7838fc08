"""Polynomial helpers over exact rationals.

Univariate polynomials are dense coefficient lists, lowest power first.
The Sturm-chain utilities decide real-rootedness exactly; floating point
never enters a verdict.  A small four-variable polynomial type supports
exact coefficient matching of algebraic identities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

Poly = List[Fraction]
MPoly = Dict[Tuple[int, int, int, int], Fraction]


def trim(p: Sequence[Fraction]) -> Poly:
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def degree(p: Sequence[Fraction]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(p)) - 1


def evaluate(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def derivative(p: Sequence[Fraction]) -> Poly:
    return [i * c for i, c in enumerate(p)][1:]


def poly_divmod(num: Sequence[Fraction], den: Sequence[Fraction]) -> tuple[Poly, Poly]:
    den = trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    rem = list(trim(num))
    if len(rem) < len(den):
        return [], rem
    quot = [Fraction(0)] * (len(rem) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(rem) - len(den), -1, -1):
        coef = rem[shift + len(den) - 1] / lead
        if coef:
            quot[shift] = coef
            for i, dc in enumerate(den):
                rem[shift + i] -= coef * dc
    return trim(quot), trim(rem)


def poly_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = trim(p), trim(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def square_free_part(p: Sequence[Fraction]) -> Poly:
    q = trim(p)
    if degree(q) < 1:
        return q
    g = poly_gcd(q, derivative(q))
    if degree(g) < 1:
        return q
    part, _ = poly_divmod(q, g)
    return part


def sturm_chain(p: Sequence[Fraction]) -> list[Poly]:
    p0 = trim(p)
    chain = [p0]
    if degree(p0) < 1:
        return chain
    chain.append(trim(derivative(p0)))
    while chain[-1]:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _sign_changes(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _signs_at_infinity(chain: Sequence[Sequence[Fraction]], direction: int) -> list[int]:
    out = []
    for q in chain:
        d = degree(q)
        if d < 0:
            out.append(0)
            continue
        s = _sign(q[d])
        if direction < 0 and d % 2 == 1:
            s = -s
        out.append(s)
    return out


def sign_changes_at(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    return _sign_changes([_sign(evaluate(q, x)) for q in chain])


def count_roots_between(chain: Sequence[Sequence[Fraction]], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi] by Sturm's theorem."""
    return sign_changes_at(chain, lo) - sign_changes_at(chain, hi)


def count_distinct_real_roots(p: Sequence[Fraction]) -> int:
    q = trim(p)
    if degree(q) < 1:
        return 0
    chain = sturm_chain(q)
    return _sign_changes(_signs_at_infinity(chain, -1)) - _sign_changes(
        _signs_at_infinity(chain, +1)
    )


def is_real_rooted(p: Sequence[Fraction]) -> bool:
    """Whether every complex root is real; degree < 1 counts vacuously."""
    part = square_free_part(p)
    d = degree(part)
    if d < 1:
        return True
    return count_distinct_real_roots(part) == d


def real_root_count_with_multiplicity(p: Sequence[Fraction]) -> int:
    q = trim(p)
    if degree(q) < 1:
        return 0
    g = poly_gcd(q, derivative(q))
    part, _ = poly_divmod(q, g)
    return count_distinct_real_roots(part) + real_root_count_with_multiplicity(g)


# -- four-variable polynomials for exact coefficient matching -------------
#
# Exponent keys are (z1, z2, z3, alpha); coefficients are Fractions and
# zero coefficients are never stored.


def mp_zero() -> MPoly:
    return {}


def mp_const(c) -> MPoly:
    c = Fraction(c)
    return {(0, 0, 0, 0): c} if c else {}


def mp_var(index: int) -> MPoly:
    key = [0, 0, 0, 0]
    key[index] = 1
    return {tuple(key): Fraction(1)}


def mp_add(a: MPoly, b: MPoly) -> MPoly:
    out = dict(a)
    for key, coef in b.items():
        new = out.get(key, Fraction(0)) + coef
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def mp_neg(a: MPoly) -> MPoly:
    return {key: -coef for key, coef in a.items()}


def mp_sub(a: MPoly, b: MPoly) -> MPoly:
    return mp_add(a, mp_neg(b))


def mp_scale(a: MPoly, c) -> MPoly:
    c = Fraction(c)
    if not c:
        return {}
    return {key: coef * c for key, coef in a.items()}


def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    out: MPoly = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
            new = out.get(key, Fraction(0)) + ca * cb
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def mp_pow(a: MPoly, exponent: int) -> MPoly:
    out = mp_const(1)
    for _ in range(exponent):
        out = mp_mul(out, a)
    return out


def mp_is_zero(a: MPoly) -> bool:
    return all(coef == 0 for coef in a.values())
