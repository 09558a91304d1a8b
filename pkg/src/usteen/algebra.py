"""Letters, words and sparse polynomials in the free algebra F_p<z(e,k)>.

A word is a plain tuple of :class:`Letter`; the empty tuple is the unit.
:class:`Poly` is a normalized ``{word: coefficient}`` map, so two polynomials
are equal exactly when their term maps are equal.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Union

from .errors import Inhomogeneous, NegativeN, WrongLength
from .modp import PrimeContext, a_coeff, binom_ext, sign


class Letter(NamedTuple):
    eps: int
    k: int

    def __str__(self):
        return f"z({self.eps},{self.k})"


Word = tuple  # tuple[Letter, ...]
ONE: Word = ()


def word(*pairs) -> Word:
    """Build a word from ``(eps, k)`` pairs: ``word((0, -1), (0, 0))``."""
    out = []
    for eps, k in pairs:
        if eps not in (0, 1):
            raise ValueError(f"epsilon must be 0 or 1, got {eps}")
        out.append(Letter(eps, k))
    return tuple(out)


def word_key(w: Word):
    """Sort key for the canonical order: shorter first, then letterwise (eps, k)."""
    return (len(w), w)


def canonical_compare(w1: Word, w2: Word) -> int:
    """-1, 0 or 1 as ``w1`` is less than, equal to or greater than ``w2``."""
    a, b = word_key(w1), word_key(w2)
    return (a > b) - (a < b)


class Poly:
    """An element of the free algebra over F_p with nonzero coefficients only."""

    __slots__ = ("p", "_terms", "_hash")

    def __init__(self, p: int, terms=None):
        self.p = p
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                c = (clean.get(w, 0) + c) % p
                if c:
                    clean[tuple(w)] = c
                else:
                    clean.pop(tuple(w), None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, p: int, terms: dict) -> "Poly":
        # terms must already be reduced with no zero entries
        obj = cls.__new__(cls)
        obj.p = p
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls._raw(p, {})

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls._raw(p, {ONE: 1})

    @classmethod
    def monomial(cls, w: Word, p: int, coef: int = 1) -> "Poly":
        return cls(p, {tuple(w): coef})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self) -> list:
        return sorted(self._terms, key=word_key)

    def sorted_terms(self) -> list:
        return [(w, self._terms[w]) for w in self.words()]

    def coefficient(self, w: Word) -> int:
        return self._terms.get(tuple(w), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "Poly"):
        if other.p != self.p:
            raise ValueError(f"mixing primes {self.p} and {other.p}")

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == Poly(self.p, {ONE: other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly(self.p, {ONE: other})
        self._check(other)
        out = dict(self._terms)
        p = self.p
        for w, c in other._terms.items():
            c = (out.get(w, 0) + c) % p
            if c:
                out[w] = c
            else:
                out.pop(w, None)
        return Poly._raw(p, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly._raw(p, {w: p - c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly(self.p, {ONE: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Poly":
        p = self.p
        c %= p
        if not c:
            return Poly.zero(p)
        return Poly._raw(p, {w: v * c % p for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        p = self.p
        out: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = (out.get(w, 0) + c1 * c2) % p
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
        return Poly._raw(p, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        from .exprio import print_poly

        return f"Poly(p={self.p}, {print_poly(self)!r})"


def add(x: Poly, y: Poly) -> Poly:
    return x + y


def scale(c: int, x: Poly) -> Poly:
    return x.scale(c)


def mul(x: Poly, y: Poly) -> Poly:
    """Product in the free algebra: concatenation, no Adem reduction."""
    return x * y


def is_admissible(w: Word, ctx: PrimeContext) -> bool:
    p = ctx.p
    return all(a.k >= p * b.k + b.eps for a, b in zip(w, w[1:]))


def length(x: Union[Word, Poly]) -> int:
    """Word length, or the common length of a homogeneous polynomial.

    The zero polynomial has no well-defined length and reports 0.
    """
    if isinstance(x, Poly):
        lengths = {len(w) for w in x}
        if len(lengths) > 1:
            raise Inhomogeneous(f"terms of lengths {sorted(lengths)}")
        return lengths.pop() if lengths else 0
    return len(x)


def internal_degree(w: Word, ctx: PrimeContext) -> int:
    return sum(2 * l.k * (ctx.p - 1) + l.eps for l in w)


class RelationId(NamedTuple):
    family: str  # "R" or "S"
    eps: int
    k: int
    n: int

    def __str__(self):
        return f"{self.family}({self.eps},{self.k},{self.n})"


def relation_R(eps: int, k: int, n: int, ctx: PrimeContext) -> Poly:
    """The generalized Adem relation R(eps, k, n) as a free-algebra polynomial."""
    if n < 0:
        raise NegativeN(f"n must be >= 0, got {n}")
    p = ctx.p
    chk = ctx.check_index
    terms = {(Letter(eps, chk(p * k - 1 - n)), Letter(0, chk(k))): 1}
    # C((p-1)(n-j)-1, j) vanishes once j > ((p-1)n - 1) / p
    jmax = ((p - 1) * n - 1) // p
    for j in range(0, jmax + 1):
        c = binom_ext((p - 1) * (n - j) - 1, j, ctx)
        if c:
            w = (Letter(eps, chk(p * k - 1 - j)), Letter(0, chk(k - n + j)))
            terms[w] = (terms.get(w, 0) + sign(j, p) * c) % p
    return Poly(p, terms)


def relation_S(eps: int, k: int, n: int, ctx: PrimeContext, flip_first_sum: bool = False) -> Poly:
    """The generalized Adem relation S(eps, k, n) as a free-algebra polynomial.

    The ``z(eps, pk-j) z(1, k-n+j)`` summands carry the sign ``(-1)^j`` and the
    ``z(1, pk-j) z(0, k-n+j)`` summands ``(-1)^(j+1)``.  With
    ``flip_first_sum=True`` the first family gets ``(-1)^(j+1)`` instead; that
    variant is kept only to demonstrate that it makes straightening depend on
    the rewrite order (so admissibles would not be independent).
    """
    if n < 0:
        raise NegativeN(f"n must be >= 0, got {n}")
    p = ctx.p
    chk = ctx.check_index
    terms = {(Letter(eps, chk(p * k - n)), Letter(1, chk(k))): 1}

    first = 1 if flip_first_sum else 0

    def put(w, c):
        terms[w] = (terms.get(w, 0) + c) % p

    for j in range(0, ((p - 1) * n - 1) // p + 1):
        c = binom_ext((p - 1) * (n - j) - 1, j, ctx)
        if c:
            put((Letter(eps, chk(p * k - j)), Letter(1, chk(k - n + j))), sign(j + first, p) * c)
    if eps == 0:
        # C((p-1)(n-j), j) vanishes once j > (p-1)n / p
        for j in range(0, (p - 1) * n // p + 1):
            c = binom_ext((p - 1) * (n - j), j, ctx)
            if c:
                put((Letter(1, chk(p * k - j)), Letter(0, chk(k - n + j))), sign(j + 1, p) * c)
    return Poly(p, terms)


def relation(rid: RelationId, ctx: PrimeContext) -> Poly:
    if rid.family == "R":
        return relation_R(rid.eps, rid.k, rid.n, ctx)
    if rid.family == "S":
        return relation_S(rid.eps, rid.k, rid.n, ctx)
    raise ValueError(f"unknown relation family {rid.family!r}")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _candidates(w: Word, p: int) -> Iterable[RelationId]:
    (e1, a), (e2, c) = w
    if e2 == 0:
        # leading term of R(e1, c, n)
        n = p * c - 1 - a
        if n >= 0:
            yield RelationId("R", e1, c, n)
        # summand of R(e1, k, n): j = pk-1-a, n-j = k-c
        for k in range(_ceil_div(a + 1, p), a - (p - 1) * c + 1):
            yield RelationId("R", e1, k, (p + 1) * k - 1 - a - c)
        if e1 == 1:
            # second sum of S(0, k, n): j = pk-a, n-j = k-c
            for k in range(_ceil_div(a, p), a - (p - 1) * c + 1):
                yield RelationId("S", 0, k, (p + 1) * k - a - c)
    else:
        n = p * c - a
        if n >= 0:
            yield RelationId("S", e1, c, n)
        # first sum of S(e1, k, n): j = pk-a, n-j = k-c
        for k in range(_ceil_div(a, p), a - (p - 1) * c):
            yield RelationId("S", e1, k, (p + 1) * k - a - c)


def relations_containing(w: Word, ctx: PrimeContext) -> list:
    """Every relation R(e,k,n) / S(e,k,n) in which ``w`` has a nonzero coefficient.

    The candidate list comes from solving the index equations of each summand;
    a candidate is kept only if the coefficient of ``w`` really is nonzero.
    """
    if len(w) != 2:
        raise WrongLength(f"expected a word of length 2, got length {len(w)}")
    w = tuple(Letter(*l) for l in w)
    found = set()
    for rid in _candidates(w, ctx.p):
        if rid.n >= 0 and relation(rid, ctx).coefficient(w):
            found.add(rid)
    return sorted(found)
