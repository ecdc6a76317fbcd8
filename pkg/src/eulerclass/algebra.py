"""Exact rational and cyclotomic arithmetic.

Scalars are ``fractions.Fraction`` (aliased ``Rational``): arbitrary
precision, always stored reduced with positive denominator, so equality is
structural.  Cyclotomic integers live in Q(zeta_m) represented on the power
basis 1, x, ..., x^(phi(m)-1) modulo the m-th cyclotomic polynomial Phi_m;
a :class:`CycElement` is the coefficient vector of that representation.
There is no implicit coercion between different m -- use
:func:`embed_into` (valid because zeta_m = zeta_M^(M/m) when m | M).

Everything here is immutable and pure; all operations are exact except
:func:`embed_complex`, the single deliberate bridge to floating point via
zeta_m -> exp(2*pi*i/m).
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NotRationalError

Rational = Fraction

# Reported in place of ord_p(0) for exactly-zero differences in convergence
# profiles; chosen far above any valuation reachable at desk scale.
ORD_INFINITY = 10**9


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


def _ordp_int(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ordp_rational(q: Rational | int, p: int) -> int:
    """ord_p(q), normalized by ord_p(p) = 1, for q != 0 and odd prime p."""
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    q = Fraction(q)
    if q == 0:
        raise InputError("valuation of zero undefined")
    if q.numerator % p == 0:
        return _ordp_int(q.numerator, p)
    return -_ordp_int(q.denominator, p)


def totient(m: int) -> int:
    phi = 1
    n = m
    f = 2
    while f * f <= n:
        if n % f == 0:
            phi *= f - 1
            n //= f
            while n % f == 0:
                phi *= f
                n //= f
        f += 1
    if n > 1:
        phi *= n - 1
    return phi


# ---------------------------------------------------------------------------
# Integer polynomials and cyclotomic polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i.

    The leading coefficient is nonzero (zero polynomial is disallowed here:
    every instance produced by this module divides some x^m - 1).
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _int_poly_divmod(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Long division over Z for a monic divisor."""
    assert den[-1] == 1
    num = list(num)
    d = len(den) - 1
    quo = [0] * max(len(num) - d, 0)
    for i in range(len(num) - d - 1, -1, -1):
        c = num[i + d]
        if c:
            quo[i] = c
            for k in range(d + 1):
                num[i + k] -= c * den[k]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quo, num


def _divisors(m: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= m:
        if m % f == 0:
            small.append(f)
            if f != m // f:
                large.append(m // f)
        f += 1
    return small + large[::-1]


@functools.cache
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """Phi_m, monic of degree phi(m), by dividing x^m - 1 by all Phi_d, d | m, d < m."""
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in _divisors(m):
        if d < m:
            poly, rem = _int_poly_divmod(poly, cyclotomic_polynomial(d).coeffs)
            assert rem == [0]
    return IntPolynomial(tuple(poly))


@functools.cache
def _ring(m: int) -> "_CycRing":
    return _CycRing(m)


class _CycRing:
    """Shared context for Q(zeta_m): Phi_m and reductions of x^k.

    ``xpow[k]`` holds the integer coefficient vector of x^k mod Phi_m for
    0 <= k <= max(m - 1, 2*deg - 2), covering both root-of-unity exponents
    and products of two reduced elements.  Built once; never mutated.
    """

    def __init__(self, m: int):
        self.m = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = self.modulus.degree
        d = self.degree
        top = tuple(-c for c in self.modulus.coeffs[:d])  # x^d mod Phi_m
        xpow = [None] * (max(m - 1, 2 * d - 2) + 1)
        cur = [1] + [0] * (d - 1)
        xpow[0] = tuple(cur)
        for k in range(1, len(xpow)):
            lead = cur[d - 1]
            cur = [0] + cur[: d - 1]
            if lead:
                for i in range(d):
                    cur[i] += lead * top[i]
            xpow[k] = tuple(cur)
        self.xpow: list[tuple[int, ...]] = xpow

    def reduce_int_vector(self, vec: list[int]) -> list[int]:
        """Reduce an integer coefficient vector of any supported length."""
        d = self.degree
        out = list(vec[:d]) + [0] * max(d - len(vec), 0)
        for k in range(d, len(vec)):
            c = vec[k]
            if c:
                xk = self.xpow[k]
                for i in range(d):
                    out[i] += c * xk[i]
        return out


# ---------------------------------------------------------------------------
# Cyclotomic elements


@dataclass(frozen=True)
class CycElement:
    """Element of Q(zeta_m) as phi(m) power-basis coefficients, reduced mod Phi_m."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != _ring(self.order).degree:
            raise InputError(
                f"need {_ring(self.order).degree} coefficients for order {self.order}, "
                f"got {len(self.coeffs)}"
            )

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "CycElement") -> "CycElement":
        return ring_add(self, other)

    def __sub__(self, other: "CycElement") -> "CycElement":
        return ring_add(self, ring_negate(other))

    def __neg__(self) -> "CycElement":
        return ring_negate(self)

    def __mul__(self, other) -> "CycElement":
        if isinstance(other, CycElement):
            return ring_multiply(self, other)
        return self.scale(Fraction(other))

    __rmul__ = __mul__

    def scale(self, q: Rational) -> "CycElement":
        return CycElement(self.order, tuple(c * q for c in self.coeffs))


def cyc_zero(m: int) -> CycElement:
    return cyc_from_rational(m, Fraction(0))


def cyc_one(m: int) -> CycElement:
    return cyc_from_rational(m, Fraction(1))


def cyc_from_rational(m: int, q: Rational | int) -> CycElement:
    d = _ring(m).degree
    return CycElement(m, (Fraction(q),) + (Fraction(0),) * (d - 1))


def root_of_unity_power(m: int, k: int) -> CycElement:
    """zeta_m^k, i.e. x^(k mod m) reduced modulo Phi_m."""
    ring = _ring(m)
    return CycElement(m, tuple(Fraction(c) for c in ring.xpow[k % m]))


def _check_same_order(a: CycElement, b: CycElement) -> None:
    if a.order != b.order:
        raise InputError(f"mixed cyclotomic orders {a.order} and {b.order}; embed explicitly")


def ring_add(a: CycElement, b: CycElement) -> CycElement:
    _check_same_order(a, b)
    return CycElement(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def ring_negate(a: CycElement) -> CycElement:
    return CycElement(a.order, tuple(-x for x in a.coeffs))


def _int_vector(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    """Clear denominators: return (integer vector, common denominator)."""
    den = math.lcm(*(c.denominator for c in coeffs))
    return [int(c * den) for c in coeffs], den


def ring_multiply(a: CycElement, b: CycElement) -> CycElement:
    """Exact product reduced mod Phi_m.

    Runs fraction-free: denominators are cleared once, the convolution and
    reduction happen over plain integers, and the common denominator is
    divided back out at the end.
    """
    _check_same_order(a, b)
    ring = _ring(a.order)
    d = ring.degree
    va, da = _int_vector(a.coeffs)
    vb, db = _int_vector(b.coeffs)
    conv = [0] * (2 * d - 1)
    for i, ca in enumerate(va):
        if ca:
            for j, cb in enumerate(vb):
                if cb:
                    conv[i + j] += ca * cb
    reduced = ring.reduce_int_vector(conv)
    den = da * db
    return CycElement(a.order, tuple(Fraction(c, den) for c in reduced))


def cyc_from_exponent_weights(m: int, weights: dict[int, Fraction]) -> CycElement:
    """Sum of w_k * zeta_m^k over a weight table, reduced once.

    This is the workhorse behind character sums: accumulating weights by
    exponent and reducing a single integer vector is much cheaper than
    adding reduced elements one at a time.
    """
    ring = _ring(m)
    den = math.lcm(*(w.denominator for w in weights.values())) if weights else 1
    vec = [0] * max(m, ring.degree)
    for k, w in weights.items():
        vec[k % m] += int(w * den)
    reduced = ring.reduce_int_vector(vec)
    return CycElement(m, tuple(Fraction(c, den) for c in reduced))


def as_rational(z: CycElement) -> Fraction:
    """Constant coefficient, provided every other coefficient is exactly zero.

    Raises :class:`NotRationalError` carrying the first offending degree
    otherwise; this is the rationality certificate used before any p-adic
    valuation is taken.
    """
    for i in range(1, len(z.coeffs)):
        if z.coeffs[i] != 0:
            raise NotRationalError(i)
    return z.coeffs[0]


def galois_apply(z: CycElement, k: int) -> CycElement:
    """Image of z under the automorphism zeta_m -> zeta_m^k, gcd(k, m) = 1."""
    m = z.order
    if math.gcd(k, m) != 1:
        raise InputError(f"k = {k} is not coprime to m = {m}")
    weights: dict[int, Fraction] = {}
    for i, c in enumerate(z.coeffs):
        if c:
            e = (i * k) % m
            weights[e] = weights.get(e, Fraction(0)) + c
    return cyc_from_exponent_weights(m, weights)


def embed_into(z: CycElement, big_order: int) -> CycElement:
    """Rewrite z in Q(zeta_M) for m | M, via zeta_m = zeta_M^(M/m)."""
    m = z.order
    if big_order % m != 0:
        raise InputError(f"{m} does not divide {big_order}")
    scale = big_order // m
    weights: dict[int, Fraction] = {}
    for i, c in enumerate(z.coeffs):
        if c:
            e = (i * scale) % big_order
            weights[e] = weights.get(e, Fraction(0)) + c
    return cyc_from_exponent_weights(big_order, weights)


def embed_complex(z: CycElement) -> complex:
    """Horner evaluation of the coefficient vector at exp(2*pi*i/m)."""
    zeta = cmath.exp(2j * cmath.pi / z.order)
    acc = 0j
    for c in reversed(z.coeffs):
        acc = acc * zeta + c
    return acc


# ---------------------------------------------------------------------------
# Canonical serialization ("num/den" strings and {"m", "coeffs"} records)


def rational_to_str(q: Rational | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


def cyc_to_record(z: CycElement) -> dict:
    return {"m": z.order, "coeffs": [rational_to_str(c) for c in z.coeffs]}


def cyc_from_record(record: dict) -> CycElement:
    return CycElement(int(record["m"]), tuple(rational_from_str(c) for c in record["coeffs"]))
