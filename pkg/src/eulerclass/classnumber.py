"""2-refined relative class numbers of the p^(n+1)-th cyclotomic fields.

With S the infinite places and T the places above 2, the relative refined
class number factors through generalized Euler numbers:

    h_minus(p, n) = | (-1)^(phi/2) * 2^(1-phi) * prod_{chi odd} E_{0,chi} |,

the product over the odd characters mod p^(n+1), each evaluated primitively,
with phi = phi(p^(n+1)).  Every E_{0,chi} is computed in the single ring of
order phi, the product is certified rational by :func:`as_rational`, and the
result is asserted to be a nonzero integer with the predicted sign -- the
central sanity gate.  (The signed expression is negative exactly for
p = 7 mod 8; regulator-orientation conventions, not arithmetic, decide
that sign, so the class number is its absolute value.)

Per-conductor slices of the product are Galois stable, so their rational
valuations Delta_t are well defined and ord_p h_minus = sum_t Delta_t
exactly (the prefactor is a signed power of 2, invisible to ord_p).

Results are cached on disk as JSON keyed by (p, n); the cache directory is
``EULERCLASS_CACHE_DIR`` or ~/.cache/eulerclass, and writes are atomic
(write to a temp file, then rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .algebra import (
    CycElement,
    as_rational,
    is_odd_prime,
    ordp_rational,
    rational_from_str,
    rational_to_str,
    ring_multiply,
)
from .characters import character_table, conductor
from .errors import ConsistencyError, InputError, ResourceLimitError
from .euler import generalized_euler_number

SIZE_BOUND = 1000  # largest allowed phi(p^(n+1)); keeps ring degrees modest

ENV_CACHE_DIR = "EULERCLASS_CACHE_DIR"


@dataclass(frozen=True)
class HMinusResult:
    p: int
    n: int
    value: Fraction
    ordp: int
    conductor_increments: tuple[tuple[int, int], ...]
    character_count: int


def _validate(p: int, n: int) -> int:
    if not is_odd_prime(p):
        raise InputError(f"p must be an odd prime, got {p}")
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    phi = p**n * (p - 1)
    if phi > SIZE_BOUND:
        raise ResourceLimitError(
            f"phi(p^(n+1)) = {phi} exceeds the size bound {SIZE_BOUND} for (p, n) = ({p}, {n})"
        )
    return phi


def _odd_e0_by_conductor(p: int, n: int) -> dict[int, list[CycElement]]:
    """E_{0,chi} for every odd chi mod p^(n+1), grouped by conductor exponent t."""
    slices: dict[int, list[CycElement]] = {t: [] for t in range(1, n + 2)}
    for chi in character_table(p, n + 1):
        if chi.j % 2 == 0:
            continue
        f = conductor(chi)
        if f == 1:
            raise ConsistencyError("odd character with conductor 1")
        t = 0
        while f > 1:
            f //= p
            t += 1
        slices[t].append(generalized_euler_number(0, chi))
    return slices


def _certified_product(values: list[CycElement]) -> Fraction:
    product = reduce(ring_multiply, values)
    rational = as_rational(product)  # Galois-stable set, must collapse
    if rational == 0:
        raise ConsistencyError("odd-character product vanished")
    return rational


def odd_product_by_conductor(p: int, n: int, t: int) -> Fraction:
    """prod of E_{0,chi} over odd chi mod p^(n+1) with conductor exactly p^t."""
    _validate(p, n)
    if not 1 <= t <= n + 1:
        raise InputError(f"conductor exponent t = {t} outside 1 .. {n + 1}")
    return _certified_product(_odd_e0_by_conductor(p, n)[t])


def h_minus(p: int, n: int, cache_dir: str | None = None) -> HMinusResult:
    """Exact h_minus(p, n) with per-conductor valuation increments."""
    phi = _validate(p, n)
    cached = _cache_load(p, n, cache_dir)
    if cached is not None:
        return cached

    slices = _odd_e0_by_conductor(p, n)
    slice_products = {t: _certified_product(vals) for t, vals in slices.items()}
    product = reduce(lambda a, b: a * b, slice_products.values())
    sign = -1 if (phi // 2) % 2 else 1
    signed = sign * product / Fraction(2) ** (phi - 1)

    # The analytic prefactor's sign convention depends on regulator
    # orientation and comes out negated exactly when p = 7 (mod 8): the
    # conjugate-pair factors are totally positive, so the product's sign is
    # that of E_0 for the quadratic character, which is -sign(1 - 2*(2|p)).
    # The class number is |signed|; the sign law is still asserted so a
    # genuine sign bug cannot hide behind the absolute value.
    if signed.denominator != 1 or signed == 0:
        raise ConsistencyError(
            f"h_minus({p}, {n}) is not a nonzero integer: {rational_to_str(signed)}"
        )
    if (signed < 0) != (p % 8 == 7):
        raise ConsistencyError(
            f"h_minus({p}, {n}) violates the sign law: got {rational_to_str(signed)}"
        )
    value = abs(signed)
    increments = tuple((t, ordp_rational(q, p)) for t, q in sorted(slice_products.items()))
    ordp = ordp_rational(value, p)
    if ordp != sum(d for _, d in increments):
        raise ConsistencyError("ord_p bookkeeping violated: prefactor must be a p-adic unit")
    result = HMinusResult(
        p=p,
        n=n,
        value=value,
        ordp=ordp,
        conductor_increments=increments,
        character_count=phi // 2,
    )
    _cache_store(result, cache_dir)
    return result


def ordp_h_minus_sequence(p: int, n_max: int, cache_dir: str | None = None) -> list[int]:
    """[ord_p h_minus(p, n)] for n = 0 .. n_max."""
    if n_max < 0:
        raise InputError(f"n_max must be >= 0, got {n_max}")
    return [ordp_rational(h_minus(p, n, cache_dir).value, p) for n in range(n_max + 1)]


# ---------------------------------------------------------------------------
# Disk cache


def result_to_record(result: HMinusResult) -> dict:
    return {
        "p": result.p,
        "n": result.n,
        "h_minus": rational_to_str(result.value),
        "ordp": result.ordp,
        "increments": [[t, d] for t, d in result.conductor_increments],
        "characters": result.character_count,
    }


def result_from_record(record: dict) -> HMinusResult:
    return HMinusResult(
        p=int(record["p"]),
        n=int(record["n"]),
        value=rational_from_str(record["h_minus"]),
        ordp=int(record["ordp"]),
        conductor_increments=tuple((int(t), int(d)) for t, d in record["increments"]),
        character_count=int(record["characters"]),
    )


def default_cache_dir() -> str:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "eulerclass")


def _cache_path(p: int, n: int, cache_dir: str | None) -> str:
    base = cache_dir or default_cache_dir()
    return os.path.join(base, f"h_minus_p{p}_n{n}.json")


def _cache_load(p: int, n: int, cache_dir: str | None) -> HMinusResult | None:
    path = _cache_path(p, n, cache_dir)
    try:
        with open(path, encoding="utf-8") as fh:
            record = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    result = result_from_record(record)
    if result.p != p or result.n != n:
        return None
    return result


def _cache_store(result: HMinusResult, cache_dir: str | None) -> None:
    path = _cache_path(result.p, result.n, cache_dir)
    directory = os.path.dirname(path)
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(result_to_record(result), fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)  # atomic: concurrent writers produce identical bytes
    except OSError:
        pass  # cache is an optimization; computation already succeeded
