"""Reduction of free-algebra polynomials to the admissible basis.

Each step picks one word with a non-admissible adjacent pair and replaces that
pair using the generalized Adem relation whose leading term it is.  The engine
runs on an explicit fuel budget and raises :class:`FuelExhausted` instead of
looping.
"""

from __future__ import annotations

import heapq
import itertools
import random
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

from .algebra import ONE, Letter, Poly, Word, is_admissible, relation_R, relation_S, word_key
from .errors import AlreadyAdmissible, FuelExhausted
from .modp import PrimeContext


@dataclass(frozen=True)
class Strategy:
    kind: str = "leftmost"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("leftmost", "rightmost", "random"):
            raise ValueError(f"unknown strategy {self.kind!r}")

    @classmethod
    def parse(cls, name: str, seed: int = 0) -> "Strategy":
        return cls(name, seed)


LEFTMOST = Strategy("leftmost")
RIGHTMOST = Strategy("rightmost")


@dataclass
class ReductionStats:
    steps: int = 0
    peak_terms: int = 0
    cache_hits: int = 0
    fuel_left: int = 0

    def to_obj(self) -> dict:
        return {
            "steps": self.steps,
            "peak_terms": self.peak_terms,
            "cache_hits": self.cache_hits,
            "fuel_left": self.fuel_left,
        }


def _violations(w: Word, p: int) -> list:
    return [i for i in range(len(w) - 1) if w[i].k < p * w[i + 1].k + w[i + 1].eps]


def first_violation(
    w: Word, strategy: Strategy, ctx: PrimeContext, rng: Optional[random.Random] = None
) -> Optional[int]:
    """Position of a non-admissible adjacent pair chosen by ``strategy``, or None."""
    p = ctx.p
    if strategy.kind == "leftmost":
        for i in range(len(w) - 1):
            if w[i].k < p * w[i + 1].k + w[i + 1].eps:
                return i
        return None
    if strategy.kind == "rightmost":
        for i in range(len(w) - 2, -1, -1):
            if w[i].k < p * w[i + 1].k + w[i + 1].eps:
                return i
        return None
    found = _violations(w, p)
    if not found:
        return None
    if rng is None:
        rng = random.Random(strategy.seed)
    return rng.choice(found)


def rewrite_pair(a: Letter, b: Letter, ctx: PrimeContext) -> Poly:
    """Rewrite the non-admissible word ``a*b`` as a combination of other words.

    Uses R(a.eps, b.k, p*b.k - 1 - a.k) when ``b.eps == 0`` and
    S(a.eps, b.k, p*b.k - a.k) when ``b.eps == 1``; the pair is the leading
    term of that relation, so it equals minus the remaining terms.
    """
    p = ctx.p
    if a.k >= p * b.k + b.eps:
        raise AlreadyAdmissible(f"{a}{b} is already admissible")
    if b.eps == 0:
        rel = relation_R(a.eps, b.k, p * b.k - 1 - a.k, ctx)
    else:
        rel = relation_S(a.eps, b.k, p * b.k - a.k, ctx)
    lead = (Letter(*a), Letter(*b))
    assert rel.coefficient(lead) == 1
    return Poly(p, {w: p - c for w, c in rel.items() if w != lead})


class PairCache:
    """Memo table for :func:`rewrite_pair`, keyed by ``(p, a, b)``.

    Unbounded unless ``maxsize`` is given, in which case least recently used
    entries are evicted.  Concurrent callers may compute the same entry twice;
    the values are identical so either write wins.
    """

    def __init__(self, maxsize: Optional[int] = None):
        self.maxsize = maxsize
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._data)

    def clear(self):
        with self._lock:
            self._data.clear()

    def lookup(self, a: Letter, b: Letter, ctx: PrimeContext):
        """Return ``(items, hit)`` where items is a tuple of ``(word, coef)``."""
        key = (ctx.p, a, b)
        with self._lock:
            val = self._data.get(key)
            if val is not None:
                if self.maxsize is not None:
                    self._data.move_to_end(key)
                return val, True
        val = tuple(rewrite_pair(a, b, ctx).items())
        with self._lock:
            self._data[key] = val
            if self.maxsize is not None and len(self._data) > self.maxsize:
                self._data.popitem(last=False)
        return val, False


DEFAULT_CACHE = PairCache()


def _order_key(w: Word):
    # flat (len, k1, e1, k2, e2, ...) compares faster than nested tuples
    key = [len(w)]
    for l in w:
        key += l[1], l[0]
    return tuple(key)


def normal_form(
    x: Poly,
    ctx: PrimeContext,
    strategy: Strategy = LEFTMOST,
    fuel: Optional[int] = None,
    cache: Optional[PairCache] = None,
) -> tuple:
    """Express ``x`` as a combination of admissible words; returns ``(poly, stats)``."""
    p = ctx.p
    budget = ctx.fuel if fuel is None else fuel
    cache = DEFAULT_CACHE if cache is None else cache
    rng = random.Random(strategy.seed) if strategy.kind == "random" else None
    stats = ReductionStats(fuel_left=budget)

    # Every rewrite strictly raises the word in the lexicographic (k, eps)
    # order, so popping the smallest pending word first expands each word once,
    # after all of its contributions have been collected.
    done: dict = {}
    pending: dict = dict(x.items())
    heap = [(_order_key(w), w) for w in pending]
    heapq.heapify(heap)
    stats.peak_terms = len(pending)

    while heap:
        _, w = heapq.heappop(heap)
        c = pending.pop(w, None)
        if c is None:
            continue
        i = first_violation(w, strategy, ctx, rng)
        if i is None:
            done[w] = c
            continue
        if stats.fuel_left == 0:
            pending[w] = c
            partial = Poly(p, itertools.chain(done.items(), pending.items()))
            raise FuelExhausted(
                f"fuel of {budget} rewrites exhausted with {len(pending)} pending words",
                stats=stats,
                partial=partial,
            )
        items, hit = cache.lookup(w[i], w[i + 1], ctx)
        stats.steps += 1
        stats.fuel_left -= 1
        stats.cache_hits += hit
        left, right = w[:i], w[i + 2 :]
        for mid, m in items:
            nw = left + mid + right
            old = pending.get(nw)
            if old is None:
                pending[nw] = c * m % p
                heapq.heappush(heap, (_order_key(nw), nw))
            else:
                nc = (old + c * m) % p
                if nc:
                    pending[nw] = nc
                else:
                    del pending[nw]
        size = len(pending) + len(done)
        if size > stats.peak_terms:
            stats.peak_terms = size

    return Poly(p, done), stats


def reduce(x: Poly, ctx: PrimeContext, **kw) -> Poly:
    """:func:`normal_form` without the stats."""
    return normal_form(x, ctx, **kw)[0]


def equal_in_Q(x: Poly, y: Poly, ctx: PrimeContext, **kw) -> bool:
    return reduce(x - y, ctx, **kw).is_zero()


def _admissible_words(length: int, lo: int, hi: int, pattern, p: int, prefix: tuple):
    if len(prefix) == length:
        yield prefix
        return
    pos = len(prefix)
    eps_choices = (pattern[pos],) if pattern is not None else (0, 1)
    for e in eps_choices:
        top = hi
        if prefix:
            # prev.k >= p*k + e  <=>  k <= (prev.k - e) // p
            top = min(hi, (prefix[-1].k - e) // p)
        for k in range(lo, top + 1):
            yield from _admissible_words(length, lo, hi, pattern, p, prefix + (Letter(e, k),))


def enumerate_admissible(length: int, lo: int, hi: int, ctx: PrimeContext, pattern=None) -> list:
    """All admissible words of ``length`` with indices in ``[lo, hi]``, canonically ordered."""
    if lo > hi:
        raise ValueError(f"empty index window [{lo}, {hi}]")
    if pattern is not None:
        pattern = tuple(pattern)
        if len(pattern) != length:
            raise ValueError(f"epsilon pattern {pattern} does not have length {length}")
    if length == 0:
        return [ONE]
    out = list(_admissible_words(length, lo, hi, pattern, ctx.p, ()))
    out.sort(key=word_key)
    return out
