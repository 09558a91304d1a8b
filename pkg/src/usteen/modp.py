"""Mod-p binomial arithmetic via Lucas' theorem.

All binomials here use the extended convention: ``C(a, b) = 0`` whenever
``a < 0``, ``b < 0`` or ``b > a``.  The negative-top case is what makes the
relation polynomials collapse to ``R(0,0,0) = z(0,-1)*z(0,0)`` and
``S(1,0,0) = z(1,0)*z(1,0)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import IndexOverflow, NegativeInput, NegativeTop, NotOddPrime

INT64_MAX = 2**63 - 1
DEFAULT_FUEL = 10**6
DEFAULT_INDEX_BOUND = 2**48


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime together with the global limits used by the rewriting engine."""

    p: int
    fuel: int = DEFAULT_FUEL
    index_bound: int = DEFAULT_INDEX_BOUND

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotOddPrime(f"p must be an integer, got {self.p!r}")
        if self.p < 3 or not _is_prime(self.p):
            raise NotOddPrime(f"{self.p} is not an odd prime")
        if self.fuel < 1:
            raise ValueError("fuel must be positive")
        if self.index_bound < 1:
            raise ValueError("index_bound must be positive")

    def check_index(self, k: int) -> int:
        if abs(k) > self.index_bound:
            raise IndexOverflow(f"index {k} exceeds bound {self.index_bound}")
        return k


def validate_prime(p: int, **limits) -> PrimeContext:
    return PrimeContext(p, **limits)


def padic_digits(m: int, ctx: PrimeContext) -> list[int]:
    """Base-p digits of ``m``, least significant first, with no trailing zeros."""
    if m < 0:
        raise NegativeInput(f"p-adic expansion needs m >= 0, got {m}")
    digits = []
    while m:
        m, r = divmod(m, ctx.p)
        digits.append(r)
    return digits


def binom_exact(a: int, b: int) -> int:
    """Exact binomial coefficient; the oracle for :func:`binom_ext`."""
    if a < 0:
        raise NegativeTop(f"binom_exact requires a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _small_binom_table(p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(math.comb(a, b) % p for b in range(p)) for a in range(p))


_TABLES: dict[int, tuple[tuple[int, ...], ...]] = {}


def binom_ext(a: int, b: int, ctx: PrimeContext) -> int:
    """``C(a, b) mod p`` under the extended convention, digit by digit (Lucas)."""
    if a < 0 or b < 0 or b > a:
        return 0
    p = ctx.p
    table = _TABLES.get(p)
    if table is None:
        table = _TABLES.setdefault(p, _small_binom_table(p))
    result = 1
    while b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        if db > da:
            return 0
        result = result * table[da][db] % p
    return result


def a_coeff(k: int, j: int, ctx: PrimeContext) -> int:
    """The coefficient ``A(k, j) = C((p-1)(k-j) - 1, j)`` mod p."""
    return binom_ext((ctx.p - 1) * (k - j) - 1, j, ctx)


def alpha(s: int, ctx: PrimeContext) -> int:
    """``(p^s - 1) / (p - 1)``, i.e. ``1 + p + ... + p^(s-1)``."""
    if s < 0:
        raise NegativeInput(f"alpha needs s >= 0, got {s}")
    ps = ctx.p**s
    if ps > INT64_MAX:
        raise IndexOverflow(f"p^s = {ctx.p}^{s} overflows 64 bits")
    return (ps - 1) // (ctx.p - 1)


def sign(e: int, p: int) -> int:
    """``(-1)^e`` as an element of F_p."""
    return 1 if e % 2 == 0 else p - 1
