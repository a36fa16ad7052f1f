"""Exact arbitrary-precision arithmetic helpers.

Counts and identity values are kept exact everywhere: nonnegative integers
are plain Python ints (``Nat``), rationals are ``fractions.Fraction``
(``Rat``, always in lowest terms with positive denominator).  On top of
those this module provides factorials, binomial coefficients (including
generalized binomial coefficients with rational entries), Catalan numbers,
and a small symbolic Gamma-product type with an exact reducer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Nat = int
Rat = Fraction

RatLike = Fraction | int


def factorial(n: int) -> Nat:
    """n! for a machine-size nonnegative integer n."""
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> Nat:
    """C(n, k) with the convention C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}) with negative argument")
    return math.comb(n, k)


def catalan(n: int) -> Nat:
    """The n-th Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan of negative {n}")
    q, r = divmod(math.comb(2 * n, n), n + 1)
    assert r == 0
    return q


def gbinom_lower_int(x: RatLike, y: int) -> Rat:
    """Generalized binomial C(x, y) for rational x and integer y >= 0.

    Computed as the falling product x(x-1)...(x-y+1) / y!, which is a
    polynomial in x; y = 0 gives 1.
    """
    if y < 0:
        raise ValueError(f"gbinom_lower_int with negative lower entry {y}")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(y):
        num *= x - i
    return num / factorial(y)


def gbinom_int_diff(x: RatLike, y: RatLike) -> Rat:
    """Generalized binomial C(x, y) for rational x, y with x - y in {0, 1, ...}.

    Exactly evaluable because Gamma(x+1)/Gamma(y+1) collapses to the rising
    product (y+1)(y+2)...(y + (x-y)); the result is that product over (x-y)!.
    Requires y > -1 so the product never crosses a Gamma pole.
    """
    x = Fraction(x)
    y = Fraction(y)
    diff = x - y
    if diff.denominator != 1 or diff < 0:
        raise ValueError(f"gbinom_int_diff requires x - y a nonnegative integer, got {diff}")
    if y <= -1:
        raise ValueError(f"gbinom_int_diff requires y > -1, got {y}")
    d = int(diff)
    num = Fraction(1)
    for i in range(1, d + 1):
        num *= y + i
    return num / factorial(d)


def _frac_part(a: Fraction) -> Fraction:
    return a - (a.numerator // a.denominator)


def _pochhammer_ratio(p: Fraction, q: Fraction) -> Fraction:
    """Gamma(p)/Gamma(q) for p - q an integer, as an exact rational."""
    diff = p - q
    assert diff.denominator == 1
    d = int(diff)
    out = Fraction(1)
    if d >= 0:
        for i in range(d):
            out *= q + i
    else:
        for i in range(-d):
            out /= p + i
    return out


@dataclass(frozen=True)
class GammaProduct:
    """A formal product coeff * prod Gamma(a) / prod Gamma(b), all a, b > 0.

    Immutable; combine with ``times``/``over`` and collapse with
    :func:`gamma_product_reduce`.
    """

    coeff: Rat
    numer: tuple[Rat, ...] = ()
    denom: tuple[Rat, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        numer = tuple(sorted(Fraction(a) for a in self.numer))
        denom = tuple(sorted(Fraction(a) for a in self.denom))
        for a in numer + denom:
            if a <= 0:
                raise ValueError(f"Gamma argument {a} is not positive")
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "denom", denom)

    def times(self, other: "GammaProduct") -> "GammaProduct":
        return GammaProduct(
            self.coeff * other.coeff,
            self.numer + other.numer,
            self.denom + other.denom,
        )

    def over(self, other: "GammaProduct") -> "GammaProduct":
        if other.coeff == 0:
            raise ZeroDivisionError("division by GammaProduct with zero coefficient")
        return GammaProduct(
            self.coeff / other.coeff,
            self.numer + other.denom,
            self.denom + other.numer,
        )

    def scaled(self, c: RatLike) -> "GammaProduct":
        return GammaProduct(self.coeff * Fraction(c), self.numer, self.denom)

    def equals(self, other: "GammaProduct") -> bool:
        """Exact equality: the quotient must reduce to the rational 1."""
        if self.coeff == 0 or other.coeff == 0:
            return self.coeff == other.coeff
        return gamma_product_reduce(self.over(other)) == 1


def gamma_product_reduce(gp: GammaProduct) -> Rat | GammaProduct:
    """Collapse a GammaProduct to an exact rational where possible.

    Numerator/denominator arguments sharing a fractional part pair up and
    each pair becomes a rational Pochhammer factor.  A leftover Gamma at a
    positive integer argument is a bare factorial and is folded in as well.
    Any pairing order yields the same value, since each pair contributes
    exactly Gamma(p)/Gamma(q).  Returns the irreducible remainder when
    non-integer arguments cannot all be paired.
    """
    coeff = gp.coeff
    if coeff == 0:
        return Fraction(0)
    groups: dict[Fraction, tuple[list[Fraction], list[Fraction]]] = {}
    for a in gp.numer:
        groups.setdefault(_frac_part(a), ([], []))[0].append(a)
    for b in gp.denom:
        groups.setdefault(_frac_part(b), ([], []))[1].append(b)

    left_numer: list[Fraction] = []
    left_denom: list[Fraction] = []
    for frac, (nums, dens) in groups.items():
        nums.sort()
        dens.sort()
        npaired = min(len(nums), len(dens))
        for p, q in zip(nums[:npaired], dens[:npaired]):
            coeff *= _pochhammer_ratio(p, q)
        rest_n, rest_d = nums[npaired:], dens[npaired:]
        if frac == 0:
            for a in rest_n:
                coeff *= factorial(int(a) - 1)
            for b in rest_d:
                coeff /= factorial(int(b) - 1)
        else:
            left_numer.extend(rest_n)
            left_denom.extend(rest_d)

    if not left_numer and not left_denom:
        return coeff
    return GammaProduct(coeff, tuple(left_numer), tuple(left_denom))
