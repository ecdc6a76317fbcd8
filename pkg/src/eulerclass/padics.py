"""Riemann sums for the Volkenborn and fermionic p-adic integrals.

The Volkenborn sum at depth N is p^(-N) * sum_{a=0..p^N-1} f(a) and
converges to B_n(x) on the monomials (x+a)^n; the fermionic sum is
sum_{a=0..p^N-1} (-1)^a f(a) and converges to E_n(x) on the same
integrands.  Both are evaluated exactly, so convergence can be *measured*
in ord_p rather than estimated: :func:`convergence_profile` reports the
valuations of consecutive differences, with :data:`ORD_INFINITY` standing
in for exactly-zero steps.

For a character integrand of conductor f > 1, the fermionic sum at any
depth p^N >= level is exactly E_{0,chi} (blocks of length f cancel
pairwise, and the odd block count leaves a single copy).  The constant and
trivial-character integrands do not enjoy that identity: their fermionic
sums are 1, while E_{0,chi_0} = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    ORD_INFINITY,
    CycElement,
    Rational,
    as_rational,
    cyc_from_exponent_weights,
    is_odd_prime,
    ordp_rational,
)
from .characters import DirichletCharacter, _group, _level_of, conductor
from .errors import InputError

_RATIONAL_KINDS = ("monomial_shift", "constant")


@dataclass(frozen=True)
class Integrand:
    """Function on Z_p restricted to the residues 0 .. p^N - 1.

    Build instances with :func:`monomial_shift`, :func:`character`,
    :func:`character_power` or :func:`constant`.
    """

    kind: str
    n: int = 0
    x: Fraction = Fraction(0)
    chi: DirichletCharacter | None = None
    c: Fraction = Fraction(0)

    def rational_valued(self) -> bool:
        if self.kind in _RATIONAL_KINDS:
            return True
        # Character values are rational exactly when the character is
        # trivial or quadratic.
        return self.chi.order <= 2

    def ring_order(self) -> int | None:
        return None if self.kind in _RATIONAL_KINDS else self.chi.m


def monomial_shift(n: int, x: Rational | int = 0) -> Integrand:
    """a |-> (x + a)^n."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    return Integrand(kind="monomial_shift", n=n, x=Fraction(x))


def character(chi: DirichletCharacter) -> Integrand:
    """a |-> chi(a), evaluated primitively at the conductor of chi."""
    return Integrand(kind="character", chi=chi)


def character_power(chi: DirichletCharacter, n: int) -> Integrand:
    """a |-> chi(a) * a^n."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    return Integrand(kind="character_power", chi=chi, n=n)


def constant(c: Rational | int) -> Integrand:
    return Integrand(kind="constant", c=Fraction(c))


def _rational_block_sum(f: Integrand, length: int, fermionic: bool) -> Fraction:
    """sum over a = 0 .. length-1 of (+-1)^a f(a) for rational-valued kinds."""
    if f.kind == "constant":
        if not fermionic:
            return f.c * length
        return f.c * (length % 2)  # alternating signs cancel pairwise
    n, x = f.n, f.x
    if x.denominator == 1:
        # Integer shift: accumulate in plain ints, convert once.
        x0 = x.numerator
        total = 0
        if fermionic:
            for a in range(length):
                v = (x0 + a) ** n
                total += -v if a % 2 else v
        else:
            for a in range(length):
                total += (x0 + a) ** n
        return Fraction(total)
    total_f = Fraction(0)
    for a in range(length):
        v = (x + a) ** n
        if fermionic and a % 2:
            total_f -= v
        else:
            total_f += v
    return total_f


def _character_block_sum(f: Integrand, length: int, fermionic: bool) -> CycElement:
    """Exponent-accumulated sum of (+-1)^a chi(a) a^n over a block."""
    chi = f.chi
    m = chi.m
    fc = conductor(chi)
    weights: dict[int, Fraction] = {}
    power = f.n if f.kind == "character_power" else 0
    if fc == 1:
        for a in range(length):
            w = Fraction(a**power) if power else Fraction(1)
            if fermionic and a % 2:
                w = -w
            if w:
                weights[0] = weights.get(0, Fraction(0)) + w
    else:
        group = _group(chi.p, chi.e)
        t = _level_of(chi.p, fc)
        ind_t = group.ind[t]
        j = chi.j
        for a in range(length):
            r = a % fc
            if r % chi.p == 0:
                continue
            k = (j * ind_t[r]) % m
            w = Fraction(a**power) if power else Fraction(1)
            if fermionic and a % 2:
                w = -w
            weights[k] = weights.get(k, Fraction(0)) + w
    return cyc_from_exponent_weights(m, weights)


def _raw_sum(f: Integrand, p: int, depth: int, fermionic: bool):
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    if depth < 1:
        raise InputError(f"depth must be >= 1, got {depth}")
    length = p**depth
    if f.kind in _RATIONAL_KINDS:
        return _rational_block_sum(f, length, fermionic)
    return _character_block_sum(f, length, fermionic)


def volkenborn_sum(f: Integrand, p: int, depth: int):
    """p^(-depth) * sum_{a < p^depth} f(a), exact (Fraction or CycElement)."""
    total = _raw_sum(f, p, depth, fermionic=False)
    scale = Fraction(1, p**depth)
    if isinstance(total, CycElement):
        return total.scale(scale)
    return total * scale


def fermionic_sum(f: Integrand, p: int, depth: int):
    """sum_{a < p^depth} (-1)^a f(a), exact (Fraction or CycElement)."""
    return _raw_sum(f, p, depth, fermionic=True)


DEFAULT_DEPTH = {3: 8, 5: 6, 7: 5}


def default_depth(p: int) -> int:
    """Depth keeping p^N around 10^7 summands; see DEFAULT_DEPTH."""
    return DEFAULT_DEPTH.get(p, 5)


def convergence_profile(f: Integrand, p: int, n_max: int, kind: str = "fermionic") -> list[int]:
    """[ord_p(S_{N+1} - S_N)] for N = 1 .. n_max-1, ORD_INFINITY for zero steps.

    Restricted to rational-valued integrands (monomials, constants, and
    trivial/quadratic characters): profiling cyclotomic values would require
    choosing a p-adic embedding, which this package deliberately avoids.
    """
    if kind not in ("fermionic", "volkenborn"):
        raise InputError(f"kind must be 'fermionic' or 'volkenborn', got {kind!r}")
    if not f.rational_valued():
        raise InputError("convergence profiles require a rational-valued integrand")
    if n_max < 2:
        raise InputError(f"n_max must be >= 2, got {n_max}")
    sum_fn = fermionic_sum if kind == "fermionic" else volkenborn_sum
    values = []
    for depth in range(1, n_max + 1):
        v = sum_fn(f, p, depth)
        if isinstance(v, CycElement):
            v = as_rational(v)
        values.append(v)
    profile = []
    for prev, cur in zip(values, values[1:]):
        delta = cur - prev
        profile.append(ORD_INFINITY if delta == 0 else ordp_rational(delta, p))
    return profile
