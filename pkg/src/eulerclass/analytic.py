"""Complex-analytic evaluation and verification of the zeta decompositions.

Numerical methods, with their documented accuracy targets:

* :func:`hurwitz_zeta` -- Euler-Maclaurin with 30 direct terms and
  Bernoulli corrections through B_6; absolute error well under 1e-10 for
  Re(s) >= 1.5 and x in (0, 1].
* :func:`alternating_series_sum` -- the iterated-average (Euler transform)
  scheme on partial sums; for smooth totally-monotone-like terms the error
  is far below 1e-10 with the default 48 terms.  This backs the direct
  route of :func:`euler_L` and the eta-relation check.
* Euler products are truncated at a prime cutoff and multiplied in
  ascending prime order; all summation orders are fixed, so identical
  inputs give bit-identical outputs.

Analytic continuation below Re(s) = 0 is deliberately not implemented: the
special-value identity L_E(-j, chi) = E_{j,chi} is certified through the
generating-function comparison in :func:`special_value_consistency`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import embed_complex, is_odd_prime, totient
from .characters import DirichletCharacter, character_table, chi_eval, conductor
from .errors import ConsistencyError, InputError
from .euler import bernoulli_polynomial, generalized_euler_number
from .iwasawa import multiplicative_order

_EM_TERMS = 30
_EM_BERNOULLI = [float(bernoulli_polynomial(2 * j)(0)) for j in range(1, 4)]  # B2, B4, B6
_CROSS_CHECK_TOL = 1e-8  # route (a) vs route (b) agreement in euler_L


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(n**0.5) + 1):
        if sieve[q]:
            start = q * q
            sieve[start : n + 1 : q] = bytearray(len(range(start, n + 1, q)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pochhammer(s: complex, r: int) -> complex:
    acc = complex(1)
    for i in range(r):
        acc *= s + i
    return acc


def hurwitz_zeta(s: complex, x) -> complex:
    """zeta(s, x) = sum_{k>=0} (k+x)^(-s) for x in (0, 1], s != 1."""
    s = complex(s)
    x = float(x)
    if not 0 < x <= 1:
        raise InputError(f"x must lie in (0, 1], got {x}")
    if s == 1:
        raise InputError("pole at s = 1")
    direct = sum((x + k) ** -s for k in range(_EM_TERMS))
    big = x + _EM_TERMS
    tail = big ** (1 - s) / (s - 1) + 0.5 * big**-s
    for j, b2j in enumerate(_EM_BERNOULLI, start=1):
        tail += (
            b2j
            / math.factorial(2 * j)
            * _pochhammer(s, 2 * j - 1)
            * big ** (1 - s - 2 * j)
        )
    return direct + tail


def _hurwitz_finite_part_at_1(x) -> float:
    """lim_{s->1} [zeta(s, x) - 1/(s-1)], i.e. -digamma(x), by Euler-Maclaurin."""
    x = float(x)
    direct = sum(1.0 / (x + k) for k in range(_EM_TERMS))
    big = x + _EM_TERMS
    tail = -math.log(big) + 0.5 / big
    for j, b2j in enumerate(_EM_BERNOULLI, start=1):
        tail += b2j / (2 * j) * big ** (-2 * j)
    return direct + tail


def _chi_complex_values(chi: DirichletCharacter) -> list[complex]:
    """[chi(a) for a = 0 .. f] primitively, embedded; index by a."""
    f = conductor(chi)
    return [embed_complex(chi_eval(chi, a, primitive=True)) for a in range(f + 1)]


def dirichlet_L(s: complex, chi: DirichletCharacter) -> complex:
    """L(s, chi) of the primitive character inducing chi, via Hurwitz zetas.

    Finite at s = 1 for nontrivial chi (the simple poles of the Hurwitz
    zetas cancel because the character values sum to zero); the trivial
    character propagates the pole error.
    """
    s = complex(s)
    f = conductor(chi)
    values = _chi_complex_values(chi)
    if s == 1:
        if chi.j == 0:
            raise InputError("pole at s = 1")
        return sum(values[a] * _hurwitz_finite_part_at_1(Fraction(a, f)) for a in range(1, f + 1)) / f
    return f**-s * sum(
        values[a] * hurwitz_zeta(s, Fraction(a, f)) for a in range(1, f + 1)
    )


def alternating_series_sum(term, terms: int = 48) -> complex:
    """sum_{j>=0} (-1)^j term(j) by iterated averaging of partial sums."""
    sums = []
    acc = complex(0)
    sign = 1
    for j in range(terms):
        acc += sign * term(j)
        sign = -sign
        sums.append(acc)
    while len(sums) > 1:
        sums = [(a + b) / 2 for a, b in zip(sums, sums[1:])]
    return sums[0]


def euler_L(s: complex, chi: DirichletCharacter) -> complex:
    """L_E(s, chi) = 2 sum (-1)^n chi(n) n^(-s), computed two ways.

    Route (a) groups the series into conductor-length blocks (f odd makes
    consecutive blocks alternate) and accelerates the block series; route
    (b) is -2 (1 - chi(2) 2^(1-s)) L(s, chi).  Route (b) is returned after
    asserting the two agree to 1e-8.
    """
    s = complex(s)
    f = conductor(chi)
    values = _chi_complex_values(chi)

    def block(j: int) -> complex:
        base = j * f
        total = complex(0)
        for a in range(1, f + 1):
            v = values[a]
            if v:
                term = v * (a + base) ** -s
                total += -term if a % 2 else term
        return total

    direct = 2 * alternating_series_sum(block)
    chi2 = values[2 % f]  # f = 1 hits chi(0) = 1, the trivial character
    via_relation = -2 * (1 - chi2 * 2 ** (1 - s)) * dirichlet_L(s, chi)
    if abs(direct - via_relation) >= _CROSS_CHECK_TOL:
        raise ConsistencyError(
            f"euler_L cross-check failed at s={s}, chi_{chi.j} mod {chi.modulus}: "
            f"|{direct} - {via_relation}| = {abs(direct - via_relation):.3e}"
        )
    return via_relation


# ---------------------------------------------------------------------------
# Verification reports


@dataclass(frozen=True)
class VerificationReport:
    lhs: complex
    rhs: complex
    abs_error: float
    rel_error: float
    tolerance: float
    passed: bool
    params: dict
    extras: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        def enc(z):
            if isinstance(z, complex):
                return {"re": z.real, "im": z.imag}
            return z

        return {
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "params": {k: enc(v) for k, v in self.params.items()},
            "extras": {k: enc(v) for k, v in self.extras.items()},
        }


def _report(lhs: complex, rhs: complex, tol: float, params: dict, extras: dict | None = None,
            absolute: bool = False) -> VerificationReport:
    abs_error = abs(lhs - rhs)
    rel_error = abs_error / abs(rhs) if rhs != 0 else float("inf")
    # Relative comparison, falling back to absolute when the reference is
    # small (or when the caller's contract is stated absolutely).
    if absolute or abs(rhs) < 1:
        passed = abs_error < tol
    else:
        passed = rel_error < tol
    return VerificationReport(
        lhs=lhs,
        rhs=rhs,
        abs_error=abs_error,
        rel_error=rel_error,
        tolerance=tol,
        passed=passed,
        params=params,
        extras=extras or {},
    )


# ---------------------------------------------------------------------------
# The refined zeta function and its decomposition


def zeta_ST_euler_product(
    s: complex, p: int, n: int, prime_cutoff: int, flip_t_factor: bool = False
) -> complex:
    """Truncated Euler product for the 2-refined zeta function of Q(mu_{p^(n+1)}).

    Local factors (1 - q^(-f_q s))^(-r_q) for unramified q with residue
    degree f_q = ord(q mod p^(n+1)) and r_q = phi/f_q primes above q, the
    ramified factor (1 - p^(-s))^(-1), the 2-adic local factor
    (1 - 2^(-f_2 s))^(-r_2), and the refinement factor
    (1 - 2^((1-s) f_2))^(r_2).  ``flip_t_factor`` negates the refinement
    factor; it exists purely as an injected-fault control for the
    decomposition check.
    """
    s = complex(s)
    if s.real <= 1:
        raise InputError(f"Re(s) must exceed 1, got {s}")
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    modulus = p ** (n + 1)
    m = totient(modulus)
    product = complex(1)
    for q in primes_up_to(prime_cutoff):
        if q == 2:
            continue
        if q == p:
            product *= 1 / (1 - p**-s)
            continue
        f_q = multiplicative_order(q, modulus)
        # Beyond this point the factor is 1.0 to machine precision.
        if f_q * s.real * math.log(q) > 60:
            continue
        r_q = m // f_q
        product *= (1 - q ** (-f_q * s)) ** -r_q
    f_2 = multiplicative_order(2, modulus)
    r_2 = m // f_2
    t_factor = (1 - 2 ** ((1 - s) * f_2)) ** r_2
    if flip_t_factor:
        t_factor = -t_factor
    zeta_2_factor = (1 - 2 ** (-f_2 * s)) ** -r_2
    return product * t_factor * zeta_2_factor


def verify_decomposition(
    s: complex,
    p: int,
    n: int,
    prime_cutoff: int,
    tol: float,
    flip_t_factor: bool = False,
) -> VerificationReport:
    """Check zeta_{S,2}(s) against prod_chi (1/2) L_E(s, chi) over all chi mod p^(n+1).

    The report's extras carry the even-character subproduct with its sign
    (-1)^(phi/2), the analogous quantity for the maximal real subfield.
    """
    s = complex(s)
    lhs = zeta_ST_euler_product(s, p, n, prime_cutoff, flip_t_factor=flip_t_factor)
    table = character_table(p, n + 1)
    rhs = complex(1)
    even_part = complex(1)
    for chi in table:
        half_le = euler_L(s, chi) / 2
        rhs *= half_le
        if chi.j % 2 == 0:
            even_part *= half_le
    phi = len(table)
    even_sign = -1 if (phi // 2) % 2 else 1
    params = {
        "s": s,
        "p": p,
        "n": n,
        "prime_cutoff": prime_cutoff,
        "tol": tol,
        "flip_t_factor": flip_t_factor,
    }
    extras = {"even_character_subproduct": even_sign * even_part, "even_sign": even_sign}
    return _report(lhs, rhs, tol, params, extras)


def special_value_consistency(
    chi: DirichletCharacter, t: float, truncation: int, tol: float | None = None
) -> VerificationReport:
    """Certify L_E(-j, chi) = E_{j,chi} through the generating function.

    Compares sum_a (-1)^a chi(a) 2 e^((1-a/f) f t) / (e^(f t) + 1), the
    closed form of 2 sum (-1)^n chi(n) e^(-n t), against the Taylor
    polynomial sum_{j<=J} E_{j,chi} (-t)^j / j!.  The defect is the Taylor
    tail, bounded by C * t^(J+1) with

        C = (8 / sqrt(f)) * (f / pi)^(J+2) / (1 - f t / pi),

    from the pole structure of the generating function: the radius of
    convergence is pi/f and the nearest residues have size 2/sqrt(f) (a
    Gauss sum over the conductor), doubled here for safety.  Pass/fail is
    judged on the *absolute* error against ``tol`` (default C * t^(J+1)).
    """
    if not 0 <= t <= 0.2:
        raise InputError(f"t must lie in [0, 0.2], got {t}")
    if not 0 <= truncation <= 12:
        raise InputError(f"truncation order must lie in 0 .. 12, got {truncation}")
    f = conductor(chi)
    if tol is None:
        if f * t >= math.pi:
            raise InputError(
                f"f*t = {f * t:.3f} >= pi: outside the series' radius of convergence"
            )
        c_bound = (8 / math.sqrt(f)) * (f / math.pi) ** (truncation + 2) / (1 - f * t / math.pi)
        tol = c_bound * t ** (truncation + 1) if t > 0 else 1e-12
    values = _chi_complex_values(chi)
    ft = f * t
    denom = math.exp(ft) + 1
    lhs = complex(0)
    for a in range(1, f + 1):
        v = values[a]
        if v:
            term = v * 2 * math.exp((1 - a / f) * ft) / denom
            lhs += -term if a % 2 else term
    rhs = complex(0)
    for j in range(truncation + 1):
        e_j = embed_complex(generalized_euler_number(j, chi))
        rhs += e_j * (-t) ** j / math.factorial(j)
    params = {"p": chi.p, "e": chi.e, "j": chi.j, "t": t, "truncation": truncation, "tol": tol}
    return _report(lhs, rhs, tol, params, absolute=True)


def verify_eta_relation(s: complex, tol: float = 1e-10) -> VerificationReport:
    """Check sum (-1)^(n-1) n^(-s) = (1 - 2^(1-s)) zeta(s) for Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise InputError(f"Re(s) must exceed 1, got {s}")
    lhs = alternating_series_sum(lambda j: (j + 1) ** -s)
    rhs = (1 - 2 ** (1 - s)) * hurwitz_zeta(s, 1)
    return _report(lhs, rhs, tol, {"s": s, "tol": tol})
