"""Growth-law fitting and Iwasawa invariants.

The valuation sequence ord_p h_minus(p, n) is expected to satisfy
v(n) = m*p^n + lambda*n + c for all n past some threshold n0.  The fit is an
exact rational 3x3 solve on the basis {p^n, n, 1}: no least squares, because
the model is exact when it holds and floating arithmetic would mask whether
the recovered triple is integral.  A window is *stable* when at least one
held-out later point is reproduced exactly; the solver slides the window
start forward to the first stable position.

Also here: the valuation-sequence invariants (m, lambda) of a power series
given by its coefficient valuations, and the growth of the p-part of the
residue groups above 2, ord_p((2^f - 1)^r) with f the order of 2 mod
p^(n+1) and r = phi(p^(n+1))/f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ORD_INFINITY, _ordp_int, is_odd_prime, totient
from .errors import ConsistencyError, InputError

NOTE_OK = ""
NOTE_INSUFFICIENT = "insufficient data"
NOTE_NOT_REACHED = "n0 not reached within computed range"


@dataclass(frozen=True)
class IwasawaFit:
    m: Fraction
    lam: Fraction
    c: Fraction
    n0: int
    residuals: tuple[Fraction, ...]
    stable: bool
    note: str = NOTE_OK

    def is_integral(self) -> bool:
        return all(q.denominator == 1 for q in (self.m, self.lam, self.c))

    def predict(self, p: int, n: int) -> Fraction:
        return self.m * p**n + self.lam * n + self.c


def _solve_window(p: int, ns: tuple[int, int, int], vals) -> tuple[Fraction, Fraction, Fraction]:
    """Exact Cramer solve of m*p^n + lambda*n + c = val on three points."""
    rows = [(Fraction(p**n), Fraction(n), Fraction(1)) for n in ns]
    b = [Fraction(v) for v in vals]

    def det3(col0, col1, col2):
        return (
            col0[0] * (col1[1] * col2[2] - col1[2] * col2[1])
            - col1[0] * (col0[1] * col2[2] - col0[2] * col2[1])
            + col2[0] * (col0[1] * col1[2] - col0[2] * col1[1])
        )

    cols = list(zip(*rows))
    d = det3(*cols)
    # Distinct n with p >= 2 make the system nonsingular (Vandermonde-like).
    assert d != 0
    m = det3(b, cols[1], cols[2]) / d
    lam = det3(cols[0], b, cols[2]) / d
    c = det3(cols[0], cols[1], b) / d
    return m, lam, c


def fit_affine_model(seq: list[int], p: int, n0: int = 0) -> IwasawaFit:
    """Fit v(n) = m*p^n + lambda*n + c to seq, where seq[i] is the value at n = n0 + i.

    The first stable window (exact on every later point, at least one such
    point) is reported.  With no stable window the fit at the requested n0
    is returned with ``stable=False`` and a note: "insufficient data" when
    there is no held-out point at all, otherwise "n0 not reached within
    computed range".
    """
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    if len(seq) < 3:
        raise InputError(f"need at least 3 points, got {len(seq)}")

    def fit_at(offset: int) -> IwasawaFit:
        start = n0 + offset
        ns = (start, start + 1, start + 2)
        m, lam, c = _solve_window(p, ns, seq[offset : offset + 3])
        residuals = tuple(
            Fraction(seq[i]) - (m * p ** (n0 + i) + lam * (n0 + i) + c)
            for i in range(offset + 3, len(seq))
        )
        stable = bool(residuals) and all(r == 0 for r in residuals)
        return IwasawaFit(m=m, lam=lam, c=c, n0=start, residuals=residuals, stable=stable)

    for offset in range(len(seq) - 2):
        fit = fit_at(offset)
        if fit.stable:
            return fit
    base = fit_at(0)
    note = NOTE_INSUFFICIENT if len(seq) == 3 else NOTE_NOT_REACHED
    return IwasawaFit(
        m=base.m,
        lam=base.lam,
        c=base.c,
        n0=base.n0,
        residuals=base.residuals,
        stable=False,
        note=note,
    )


@dataclass(frozen=True)
class PowerSeriesInvariants:
    m: int
    lam: int
    precision_insufficient: bool


def power_series_invariants(coeff_ords: list[int], precision: int | None = None) -> PowerSeriesInvariants:
    """Invariants of a power series from its coefficient valuations.

    m is the minimal valuation and lambda the first index attaining it
    (f = p^m (c_0 + ... + c_lambda X^lambda + ...) with c_lambda a unit and
    earlier coefficients non-units).  ORD_INFINITY entries mark zero
    coefficients.  When the minimum first occurs at the final index the
    result is flagged: more coefficients could lower lambda's sibling tail.
    """
    ords = list(coeff_ords[:precision] if precision is not None else coeff_ords)
    if not ords:
        raise InputError("empty coefficient list")
    finite = [v for v in ords if v < ORD_INFINITY]
    if not finite:
        raise InputError("zero series: all coefficient valuations infinite")
    m = min(finite)
    lam = ords.index(m)
    return PowerSeriesInvariants(m=m, lam=lam, precision_insufficient=lam == len(ords) - 1)


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a in (Z/modulus)*, via the divisors of phi(modulus)."""
    if math.gcd(a, modulus) != 1:
        raise InputError(f"{a} is not a unit mod {modulus}")
    phi = totient(modulus)
    f = 1
    divisors = []
    while f * f <= phi:
        if phi % f == 0:
            divisors.append(f)
            divisors.append(phi // f)
        f += 1
    for d in sorted(divisors):
        if pow(a, d, modulus) == 1:
            return d
    raise ConsistencyError(f"order of {a} mod {modulus} not found")  # unreachable


def two_part_valuation(p: int, n: int) -> int:
    """ord_p((2^f - 1)^r): growth of the p-part of the residue groups above 2.

    f is the multiplicative order of 2 mod p^(n+1) (residue degree of the
    primes above 2) and r = phi(p^(n+1))/f their number.
    """
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    modulus = p ** (n + 1)
    f = multiplicative_order(2, modulus)
    r = totient(modulus) // f
    return r * _ordp_int(2**f - 1, p)
