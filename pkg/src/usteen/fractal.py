"""The index-scaling endomorphisms Phi, Psi, Lambda, Theta and their verifiers.

On letters::

    Phi    z(0,k) -> z(0, pk-1)        (eps = 0 only)
    Psi    z(1,k) -> z(1, pk)          (eps = 1 only)
    Lambda z(e,k) -> z(e, pk-1)
    Theta  z(e,k) -> z(e, pk)

extended multiplicatively over words and linearly over polynomials.  The
``s``-th power of Phi or Lambda sends k to ``p^s k - alpha_s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .algebra import (
    Letter,
    Poly,
    Word,
    is_admissible,
    relation,
    relation_R,
    relation_S,
    relations_containing,
)
from .errors import ClosureViolation, DomainViolation, NegativeInput, NegativeN, NotInSubspace
from .modp import PrimeContext, a_coeff, alpha, sign
from .straighten import reduce

MAP_NAMES = ("Phi", "Psi", "Lambda", "Theta")
_DOMAIN = {"Phi": (0,), "Psi": (1,), "Lambda": (0, 1), "Theta": (0, 1)}


def _canon_name(name: str) -> str:
    for m in MAP_NAMES:
        if name.lower() == m.lower():
            return m
    raise ValueError(f"unknown map {name!r}; expected one of {', '.join(MAP_NAMES)}")


def map_index(name: str, k: int, s: int, ctx: PrimeContext) -> int:
    """Image of the index ``k`` under the ``s``-th power of ``name``."""
    ps = ctx.p**s
    if name in ("Phi", "Lambda"):
        return ps * k - alpha(s, ctx)
    return ps * k


def apply_map(name: str, x: Poly, power: int, ctx: PrimeContext) -> Poly:
    name = _canon_name(name)
    if power < 1:
        raise ValueError(f"power must be >= 1, got {power}")
    domain = _DOMAIN[name]
    out = {}
    for w, c in x.items():
        img = []
        for l in w:
            if l.eps not in domain:
                raise DomainViolation(f"{name} is not defined on {l}")
            img.append(Letter(l.eps, ctx.check_index(map_index(name, l.k, power, ctx))))
        out[tuple(img)] = c
    # letterwise maps are injective on words, so no coefficients combine
    return Poly(x.p, out)


class SubspaceId(NamedTuple):
    kind: str  # "Q0", "Q1" or "V"
    s: int

    def __str__(self):
        return f"{self.kind}({self.s})"


def in_subspace(w: Word, sid: SubspaceId, ctx: PrimeContext) -> bool:
    """Whether the word's label has the shape of a spanning word of Q0(s), Q1(s) or V(s)."""
    kind, s = sid
    if s < 0:
        raise NegativeInput(f"s must be >= 0, got {s}")
    ps = ctx.p**s
    if kind == "Q1":
        return all(l.eps == 1 and l.k % ps == 0 for l in w)
    shift = alpha(s, ctx)
    if kind == "Q0":
        return all(l.eps == 0 and (l.k + shift) % ps == 0 for l in w)
    if kind == "V":
        return (
            len(w) >= 2
            and w[0].eps == 1
            and all(l.eps == 0 for l in w[1:])
            and all((l.k + shift) % ps == 0 for l in w)
        )
    raise ValueError(f"unknown subspace kind {kind!r}")


def poly_in_subspace(x: Poly, sid: SubspaceId, ctx: PrimeContext) -> bool:
    return all(in_subspace(w, sid, ctx) for w in x)


# Reduced forms of the rescaled relations -----------------------------------


def reduced_relation_R(eps: int, k: int, n: int, s: int, ctx: PrimeContext) -> Poly:
    """The claimed form of ``R(eps, p^s k - alpha_s, p^s n)`` with coefficients A(n, j)."""
    if n < 0:
        raise NegativeN(f"n must be >= 0, got {n}")
    if s < 1:
        raise ValueError("s must be >= 1")
    p, ps, a = ctx.p, ctx.p**s, alpha(s, ctx)
    chk = ctx.check_index
    terms = {(Letter(eps, chk(ps * (p * k - 1 - n) - a)), Letter(0, chk(ps * k - a))): 1}
    for j in range(0, n + 1):
        c = a_coeff(n, j, ctx)
        if c:
            w = (Letter(eps, chk(ps * (p * k - 1 - j) - a)), Letter(0, chk(ps * (k - n + j) - a)))
            terms[w] = (terms.get(w, 0) + sign(j, p) * c) % p
    return Poly(p, terms)


def reduced_relation_S(k: int, n: int, s: int, ctx: PrimeContext) -> Poly:
    """The claimed form of ``S(1, p^s k, p^s n)`` with coefficients A(n, j).

    The summands carry ``(-1)^j``, matching the sign used by :func:`relation_S`.
    """
    if n < 0:
        raise NegativeN(f"n must be >= 0, got {n}")
    if s < 1:
        raise ValueError("s must be >= 1")
    p, ps = ctx.p, ctx.p**s
    chk = ctx.check_index
    terms = {(Letter(1, chk(ps * (p * k - n))), Letter(1, chk(ps * k))): 1}
    for j in range(0, n + 1):
        c = a_coeff(n, j, ctx)
        if c:
            w = (Letter(1, chk(ps * (p * k - j))), Letter(1, chk(ps * (k - n + j))))
            terms[w] = (terms.get(w, 0) + sign(j, p) * c) % p
    return Poly(p, terms)


def verify_reduction_R(eps: int, k: int, n: int, s: int, ctx: PrimeContext) -> bool:
    ps = ctx.p**s
    return relation_R(eps, ps * k - alpha(s, ctx), ps * n, ctx) == reduced_relation_R(eps, k, n, s, ctx)


def verify_reduction_S(k: int, n: int, s: int, ctx: PrimeContext) -> bool:
    ps = ctx.p**s
    return relation_S(1, ps * k, ps * n, ctx) == reduced_relation_S(k, n, s, ctx)


def verify_map_relation(name: str, k: int, n: int, s: int, ctx: PrimeContext) -> bool:
    """Phi^s(R(0,k,n)) == R(0, p^s k - alpha_s, p^s n), or Psi^s(S(1,k,n)) == S(1, p^s k, p^s n)."""
    name = _canon_name(name)
    ps = ctx.p**s
    if name == "Phi":
        return apply_map("Phi", relation_R(0, k, n, ctx), s, ctx) == relation_R(
            0, ps * k - alpha(s, ctx), ps * n, ctx
        )
    if name == "Psi":
        return apply_map("Psi", relation_S(1, k, n, ctx), s, ctx) == relation_S(1, ps * k, ps * n, ctx)
    raise ValueError(f"verify_map_relation covers Phi and Psi only, got {name}")


# Module structure on V_s ----------------------------------------------------


def right_action(v: Poly, q: Poly, s: int, ctx: PrimeContext, **nf) -> Poly:
    """``v . q`` for ``v`` in V_s and ``q`` in Q0_s, reduced to admissible form."""
    for w in v:
        if not in_subspace(w, SubspaceId("V", s), ctx):
            raise NotInSubspace(f"{w} is not a spanning word of V({s})")
    for w in q:
        if not in_subspace(w, SubspaceId("Q0", s), ctx):
            raise NotInSubspace(f"{w} is not a word of Q0({s})")
    result = reduce(v * q, ctx, **nf)
    for w in result:
        if not in_subspace(w, SubspaceId("V", s), ctx):
            raise ClosureViolation(f"right action left V({s}): produced {w}")
    return result


def verify_K_morphism(v: Poly, q: Poly, s: int, ctx: PrimeContext, **nf) -> bool:
    """Check ``lambda(v . q) == lambda(v) . phi(q)`` in the quotient."""
    lhs = reduce(apply_map("Lambda", right_action(v, q, s, ctx, **nf), 1, ctx), ctx, **nf)
    rhs = right_action(apply_map("Lambda", v, 1, ctx), apply_map("Phi", q, 1, ctx), s + 1, ctx, **nf)
    return lhs == reduce(rhs, ctx, **nf)


# Obstructions ---------------------------------------------------------------


@dataclass
class ObstructionReport:
    name: str
    p: int
    image: Poly
    not_member: bool
    witnesses: list = field(default_factory=list)
    single_admissible: Optional[bool] = None
    scanned: int = 0

    def to_obj(self) -> dict:
        from .exprio import poly_to_obj

        obj = {
            "check": self.name,
            "p": self.p,
            "image": poly_to_obj(self.image),
            "not_member": self.not_member,
            "witnesses": [str(r) for r in self.witnesses],
        }
        if self.single_admissible is not None:
            obj["single_admissible"] = self.single_admissible
            obj["scanned"] = self.scanned
        return obj


def _proportional(x: Poly, y: Poly) -> bool:
    if set(x) != set(y) or x.is_zero():
        return False
    w = next(iter(x))
    ratio = y.coefficient(w) * pow(x.coefficient(w), -1, x.p) % x.p
    return x.scale(ratio) == y


def check_theta_obstruction(ctx: PrimeContext) -> ObstructionReport:
    """Theta(R(0,0,0)) = z(0,-p) z(0,0) is not (a multiple of) any relation.

    Every relation sharing a word with the image is enumerated; none of them
    is proportional to the image.
    """
    image = apply_map("Theta", relation_R(0, 0, 0, ctx), 1, ctx)
    witnesses = set()
    for w in image:
        witnesses.update(relations_containing(w, ctx))
    witnesses = sorted(witnesses)
    member = any(_proportional(relation(r, ctx), image) for r in witnesses)
    return ObstructionReport("theta", ctx.p, image, not member, witnesses)


def check_lambda_S00(ctx: PrimeContext, kmax: int = 6, nmax: int = 12) -> ObstructionReport:
    """Lambda(S(1,0,0)) is a single admissible word, while every relation has a non-admissible word."""
    image = apply_map("Lambda", relation_S(1, 0, 0, ctx), 1, ctx)
    single = len(image) == 1 and is_admissible(next(iter(image)), ctx)
    scanned = 0
    all_have_bad = True
    for fam in (relation_R, relation_S):
        for eps in (0, 1):
            for k in range(-kmax, kmax + 1):
                for n in range(nmax + 1):
                    scanned += 1
                    if all(is_admissible(w, ctx) for w in fam(eps, k, n, ctx)):
                        all_have_bad = False
    return ObstructionReport(
        "lambda-s", ctx.p, image, single and all_have_bad, [], single_admissible=single, scanned=scanned
    )
