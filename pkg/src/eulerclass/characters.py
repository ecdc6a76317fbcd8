"""Dirichlet characters modulo p^e for odd p.

The unit group mod p^e is cyclic of order m = phi(p^e); fixing the smallest
primitive root g identifies each character with an index j via
chi_j(a) = zeta_m^(j * ind(a)), where ind is the discrete log base g.
All values are returned in the single ring Q(zeta_m) regardless of the
character's actual order, so products across conductors share one modulus.

Primitive evaluation (``chi_eval(..., primitive=True)``) evaluates chi_j
through its conductor f = p^t, using the discrete log base g mod p^t; this
is the evaluation the generalized Euler numbers and L-functions need.  The
conductor-1 (trivial) character evaluates primitively to the constant 1,
matching L(s, chi_0) = zeta(s).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .algebra import CycElement, cyc_from_rational, cyc_zero, is_odd_prime, root_of_unity_power
from .errors import ConsistencyError, InputError


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int, e: int = 1) -> int:
    """Smallest g >= 2 generating the units mod p^e (p odd)."""
    _validate_modulus(p, e)
    modulus = p**e
    m = p ** (e - 1) * (p - 1)
    checks = [m // q for q in _prime_factors(m)]
    g = 2
    while True:
        if modulus % g != 0 and all(pow(g, c, modulus) != 1 for c in checks):
            return g
        g += 1


def _validate_modulus(p: int, e: int) -> None:
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    if e < 1:
        raise InputError(f"level e must be >= 1, got {e}")


class _UnitGroup:
    """Discrete-log tables for (Z/p^t)* at every level t <= e, base g mod p^t."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.m = p ** (e - 1) * (p - 1)
        self.g = primitive_root(p, e)
        # ind[t][a] for t = 1..e; -1 marks non-units.  Level t uses g mod p^t,
        # not the smallest primitive root mod p^t: evaluation through the
        # conductor must agree with evaluation at the full level.
        self.ind: dict[int, list[int]] = {}
        for t in range(1, e + 1):
            q = p**t
            table = [-1] * q
            cur = 1
            for s in range(p ** (t - 1) * (p - 1)):
                table[cur] = s
                cur = cur * self.g % q
            self.ind[t] = table


@functools.cache
def _group(p: int, e: int) -> _UnitGroup:
    _validate_modulus(p, e)
    return _UnitGroup(p, e)


@dataclass(frozen=True)
class DirichletCharacter:
    """chi_j modulo p^e; j = 0 is the trivial character."""

    p: int
    e: int
    j: int

    def __post_init__(self):
        if not 0 <= self.j < _group(self.p, self.e).m:
            raise InputError(f"index {self.j} out of range for modulus {self.p}^{self.e}")

    @property
    def modulus(self) -> int:
        return self.p**self.e

    @property
    def m(self) -> int:
        """Order of the unit group mod p^e (the cyclotomic order of all values)."""
        return _group(self.p, self.e).m

    @property
    def g(self) -> int:
        return _group(self.p, self.e).g

    @property
    def ind(self) -> list[int]:
        return _group(self.p, self.e).ind[self.e]

    @property
    def order(self) -> int:
        return self.m // math.gcd(self.m, self.j)


def character_table(p: int, e: int) -> list[DirichletCharacter]:
    """All phi(p^e) characters mod p^e, indexed j = 0 .. m-1."""
    m = _group(p, e).m
    return [DirichletCharacter(p, e, j) for j in range(m)]


def conductor(chi: DirichletCharacter) -> int:
    """Smallest p^t (or 1) through which chi factors."""
    if chi.j == 0:
        return 1
    v = 0
    j = chi.j
    while j % chi.p == 0:
        j //= chi.p
        v += 1
    return chi.p ** (chi.e - min(v, chi.e - 1))


def chi_eval(chi: DirichletCharacter, a: int, primitive: bool = False) -> CycElement:
    """chi(a) as an element of Q(zeta_m), m = phi(p^e).

    Plain evaluation is 0 whenever p | a and zeta_m^(j*ind(a)) otherwise.
    Primitive evaluation uses the conductor-level discrete log, vanishing
    only when gcd(a, conductor) > 1; in particular the trivial character
    evaluates to 1 everywhere.
    """
    group = _group(chi.p, chi.e)
    m = group.m
    if primitive:
        f = conductor(chi)
        if f == 1:
            return cyc_from_rational(m, 1)
        t = _level_of(chi.p, f)
        r = a % f
        if r % chi.p == 0:
            return cyc_zero(m)
        return root_of_unity_power(m, chi.j * group.ind[t][r])
    r = a % chi.modulus
    if r % chi.p == 0:
        return cyc_zero(m)
    return root_of_unity_power(m, chi.j * group.ind[chi.e][r])


def _level_of(p: int, f: int) -> int:
    t = 0
    while f > 1:
        f //= p
        t += 1
    return t


def parity(chi: DirichletCharacter) -> str:
    """"odd" iff chi(-1) = -1; verified against the cyclic-construction rule (-1)^j."""
    value = chi_eval(chi, -1)
    expected = cyc_from_rational(chi.m, -1 if chi.j % 2 else 1)
    if value != expected:
        raise ConsistencyError(f"chi_{chi.j} mod {chi.modulus}: chi(-1) disagrees with (-1)^j")
    return "odd" if chi.j % 2 else "even"


def is_odd(chi: DirichletCharacter) -> bool:
    return parity(chi) == "odd"


def char_to_record(chi: DirichletCharacter) -> dict:
    return {
        "j": chi.j,
        "order": chi.order,
        "conductor": conductor(chi),
        "parity": parity(chi),
    }
