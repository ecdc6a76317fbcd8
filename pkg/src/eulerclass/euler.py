"""Euler and Bernoulli polynomials, and generalized Euler numbers.

Conventions: E_n(x) are the coefficients of 2e^(xt)/(e^t+1), B_n(x) those of
te^(xt)/(e^t-1) (so B_1(0) = -1/2).  Both are computed by the binomial
recurrences obtained from multiplying through by the denominator, entirely
in exact rationals.

For a character chi evaluated primitively at its (odd) conductor f, the
generalized Euler number is the finite sum

    E_{n,chi} = f^n * sum_{a=1..f} (-1)^a chi(a) E_n(a/f),

an element of Q(chi); for n = 0 this is sum (-1)^a chi(a).  The alternating
series 2*sum (-1)^l chi(l) l^n is only a formal rewriting and is never
summed directly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import CycElement, Rational, cyc_from_exponent_weights
from .characters import DirichletCharacter, _group, _level_of, conductor
from .errors import InputError


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial over Q; coeffs[i] is the coefficient of x^i,
    trailing zeros trimmed (the zero polynomial is the empty tuple)."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(coeffs) -> "RationalPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RationalPolynomial(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Rational | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RationalPolynomial.make(x + y for x, y in zip(a, b))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for k, b in enumerate(other.coeffs):
                    out[i + k] += a * b
        return RationalPolynomial.make(out)

    def scale(self, q: Rational | int) -> "RationalPolynomial":
        return RationalPolynomial.make(c * Fraction(q) for c in self.coeffs)

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """self(inner(x)), by Horner over polynomials."""
        acc = RationalPolynomial(())
        for c in reversed(self.coeffs):
            acc = acc * inner + RationalPolynomial.make([c])
        return acc


X = RationalPolynomial.make([0, 1])


def _x_power(n: int) -> RationalPolynomial:
    return RationalPolynomial.make([0] * n + [1])


@functools.cache
def euler_polynomial(n: int) -> RationalPolynomial:
    """E_n(x), via E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x)."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    acc = _x_power(n)
    for k in range(n):
        acc = acc - euler_polynomial(k).scale(Fraction(comb(n, k), 2))
    return acc


@functools.cache
def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(x), via B_n(x) = x^n - (1/(n+1)) sum_{k<n} C(n+1,k) B_k(x)."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    acc = _x_power(n)
    for k in range(n):
        acc = acc - bernoulli_polynomial(k).scale(Fraction(comb(n + 1, k), n + 1))
    return acc


def generalized_euler_number(n: int, chi: DirichletCharacter) -> CycElement:
    """E_{n,chi} as an element of the ring of order m = phi(p^e).

    chi is evaluated primitively at its conductor f, so the sum has exactly
    f terms; values of characters of smaller conductor still land in the
    common order-m ring.
    """
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    f = conductor(chi)
    m = chi.m
    poly = euler_polynomial(n)
    fn = Fraction(f) ** n
    weights: dict[int, Fraction] = {}
    if f == 1:
        # Trivial character: single term a = 1, chi(1) = 1.
        weights[0] = -fn * poly(Fraction(1))
    else:
        group = _group(chi.p, chi.e)
        t = _level_of(chi.p, f)
        ind_t = group.ind[t]
        for a in range(1, f + 1):
            if a % chi.p == 0:
                continue
            k = (chi.j * ind_t[a % f]) % m
            w = fn * poly(Fraction(a, f))
            if a % 2:
                w = -w
            if w:
                weights[k] = weights.get(k, Fraction(0)) + w
    return cyc_from_exponent_weights(m, weights)
