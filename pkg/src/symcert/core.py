"""Exact arithmetic core: rational scalars, binomial coefficients, and
elementary symmetric functions.

Every scalar in this package is a ``fractions.Fraction``; nothing here
ever rounds.  Out-of-range symmetric-function indices follow the
convention sigma_j = 0 for j < 0 or j > n (with sigma_0 = 1), which
keeps the edge formulas elsewhere in the package total.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

# sigma_naive enumerates 2^n subsets; refuse anything bigger than this.
NAIVE_LIMIT = 20


def as_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction, or string to an exact Fraction.

    Strings may be "p/q" fractions or decimal literals; decimals such as
    "0.25" convert exactly (1/4), never through binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as an exact rational") from exc
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Canonical lossless string form, "p/q" or "p" for integers."""
    return str(value)


def as_point(entries: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    """Normalize an iterable of rational-likes to an exact point tuple."""
    point = tuple(as_rational(v) for v in entries)
    if not point:
        raise ValueError("a point needs at least one entry")
    return point


def as_triple(entries: Iterable[RationalLike]) -> tuple[Fraction, Fraction, Fraction]:
    point = as_point(entries)
    if len(point) != 3:
        raise ValueError(f"expected exactly 3 entries, got {len(point)}")
    return point  # type: ignore[return-value]


def parse_point(text: str) -> tuple[Fraction, ...]:
    """Parse the tuple literal format: a JSON array of strings.

    Example: ["4", "4", "1/4", "0.25"].  Integer JSON numbers are also
    accepted; floats are rejected because they do not round-trip.
    """
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("tuple literal must be a JSON array")
    entries = []
    for item in data:
        if isinstance(item, float):
            raise ValueError(
                f"float {item!r} in tuple literal; write it as a string to keep it exact"
            )
        if not isinstance(item, (str, int)):
            raise ValueError(f"bad tuple entry {item!r}")
        entries.append(as_rational(item))
    return as_point(entries)


def format_point(point: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in point]


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class SymProfile:
    """All sigma_0..sigma_n of one point, with sigma_j = 0 off the ends."""

    n: int
    sigma: tuple[Fraction, ...]

    def sigma_at(self, j: int) -> Fraction:
        if j < 0 or j > self.n:
            return Fraction(0)
        return self.sigma[j]

    def e_at(self, j: int) -> Fraction:
        """Symmetric mean E_j = sigma_j / C(n, j), zero off the ends."""
        if j < 0 or j > self.n:
            return Fraction(0)
        return self.sigma[j] / binomial(self.n, j)

    def e_list(self) -> list[Fraction]:
        return [self.e_at(j) for j in range(self.n + 1)]


def sigma_all(x: Iterable[RationalLike]) -> SymProfile:
    """Evaluate sigma_0..sigma_n by the single-pass recurrence
    sigma_k += x_i * sigma_{k-1}, k descending for each new element.
    """
    point = as_point(x)
    n = len(point)
    sig = [Fraction(0)] * (n + 1)
    sig[0] = Fraction(1)
    for i, v in enumerate(point):
        for k in range(min(i + 1, n), 0, -1):
            sig[k] += v * sig[k - 1]
    return SymProfile(n, tuple(sig))


def sigma_naive(x: Iterable[RationalLike]) -> SymProfile:
    """Testing oracle: sigma_k by explicit enumeration of all k-subsets.

    Entries are scaled to a common denominator so the inner products run
    on plain integers; the result is identical to ``sigma_all``.
    """
    point = as_point(x)
    n = len(point)
    if n > NAIVE_LIMIT:
        raise ValueError(f"sigma_naive enumerates 2^n subsets; refusing n={n} > {NAIVE_LIMIT}")
    scale = math.lcm(*(v.denominator for v in point))
    ints = [int(v * scale) for v in point]
    sig = [Fraction(1)]
    for k in range(1, n + 1):
        total = sum(math.prod(c) for c in combinations(ints, k))
        sig.append(Fraction(total, scale**k))
    return SymProfile(n, tuple(sig))


def e_all(x: Iterable[RationalLike]) -> list[Fraction]:
    """Elementary symmetric means E_0..E_n (E_k = sigma_k / C(n, k))."""
    return sigma_all(x).e_list()


def garding_membership(x: Iterable[RationalLike], k: int) -> bool:
    """Whether x lies in the cone where sigma_1..sigma_k are all positive."""
    point = as_point(x)
    n = len(point)
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    profile = sigma_all(point)
    return all(profile.sigma[m] > 0 for m in range(1, k + 1))
