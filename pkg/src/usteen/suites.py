"""Verification sweeps backing ``usteen verify`` and the acceptance tests.

Each suite returns a :class:`SuiteReport` whose cases are sorted by their
parameters, so reports are reproducible byte for byte for a given seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import Letter, Poly, internal_degree, is_admissible, length, relation_R, relation_S, word
from .errors import FuelExhausted, Inhomogeneous
from .exprio import print_poly
from .fractal import (
    apply_map,
    check_lambda_S00,
    check_theta_obstruction,
    verify_K_morphism,
    verify_map_relation,
    verify_reduction_R,
    verify_reduction_S,
)
from .modp import PrimeContext, a_coeff, alpha, binom_exact, binom_ext
from .straighten import LEFTMOST, RIGHTMOST, Strategy, normal_form

SUITES = ("lucas", "divisibility", "reduction", "phi-rel", "psi-rel", "kmodule", "theta", "lambda-s", "confluence")


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.cases)

    @property
    def failures(self) -> list:
        return [c for c in self.cases if not c["passed"]]

    def add(self, passed: bool, **params):
        self.cases.append({**params, "passed": bool(passed)})

    def to_obj(self) -> dict:
        return {"suite": self.suite, "params": self.params, "cases": self.cases, "passed": self.passed}

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} ({len(self.cases) - len(self.failures)}/{len(self.cases)} cases)"


def _ctx(p: int, fuel=None) -> PrimeContext:
    return PrimeContext(p) if fuel is None else PrimeContext(p, fuel=fuel)


def lucas(primes=(3, 5, 7), amax=300, congruence_primes=(3, 5), lmax=40) -> SuiteReport:
    """Lucas digitwise binomials against exact integers, plus C(pl-h, pt) = C(l-1, t)."""
    rep = SuiteReport("lucas", params={"primes": list(primes), "amax": amax, "lmax": lmax})
    ctxs = [_ctx(p) for p in primes]
    rows: dict = {p: [] for p in primes}
    for a in range(amax + 1):
        exact = [binom_exact(a, b) for b in range(a + 1)]
        for ctx in ctxs:
            p = ctx.p
            rows[p].append(all(binom_ext(a, b, ctx) == e % p for b, e in enumerate(exact)))
    for p in primes:
        for a, ok in enumerate(rows[p]):
            rep.add(ok, check="oracle", p=p, a=a)
    for p in congruence_primes:
        ctx = _ctx(p)
        bad = [
            (l, t, h)
            for l in range(lmax + 1)
            for t in range(lmax + 1)
            for h in range(1, p + 1)
            if binom_ext(p * l - h, p * t, ctx) != binom_ext(l - 1, t, ctx)
        ]
        rep.add(not bad, check="scaled-top", p=p, counterexamples=bad[:5])
    return rep


def divisibility(primes=(3, 5), smax=3, nmax=8) -> SuiteReport:
    """A(p^s n, j) = 0 mod p whenever p^s does not divide j."""
    rep = SuiteReport("divisibility", params={"primes": list(primes), "smax": smax, "nmax": nmax})
    for p in primes:
        ctx = _ctx(p)
        for s in range(1, smax + 1):
            ps = p**s
            for n in range(1, nmax + 1):
                js = [j for j in range(1, (p - 1) * ps * n + 1) if j % ps]
                bad = [j for j in js if a_coeff(ps * n, j, ctx)]
                rep.add(not bad, p=p, s=s, n=n, checked=len(js), counterexamples=bad[:5])
    return rep


def reduction(primes=(3, 5), kmax=3, nmax=6, smax=2, anchor_primes=(3, 5, 7)) -> SuiteReport:
    """Anchor values R(0,0,0), S(1,0,0) and the rescaled-relation identities."""
    rep = SuiteReport("reduction", params={"primes": list(primes), "kmax": kmax, "nmax": nmax, "smax": smax})
    for p in anchor_primes:
        ctx = _ctx(p)
        r = relation_R(0, 0, 0, ctx)
        rep.add(r == Poly.monomial(word((0, -1), (0, 0)), p), check="anchor-R000", p=p, value=print_poly(r))
        s_ = relation_S(1, 0, 0, ctx)
        rep.add(s_ == Poly.monomial(word((1, 0), (1, 0)), p), check="anchor-S100", p=p, value=print_poly(s_))
    for p in primes:
        ctx = _ctx(p)
        for s in range(1, smax + 1):
            for k in range(-kmax, kmax + 1):
                for n in range(nmax + 1):
                    for eps in (0, 1):
                        rep.add(verify_reduction_R(eps, k, n, s, ctx), check="R", p=p, s=s, k=k, n=n, eps=eps)
                    rep.add(verify_reduction_S(k, n, s, ctx), check="S", p=p, s=s, k=k, n=n, eps=1)
    return rep


def _map_relation_suite(name, primes, kmax, nmax, smax, hmax) -> SuiteReport:
    suite = "phi-rel" if name == "Phi" else "psi-rel"
    rep = SuiteReport(suite, params={"primes": list(primes), "kmax": kmax, "nmax": nmax, "smax": smax, "hmax": hmax})
    eps = 0 if name == "Phi" else 1
    offset = 0 if name == "Phi" else 1
    for p in primes:
        ctx = _ctx(p)
        for s in range(1, smax + 1):
            for k in range(-kmax, kmax + 1):
                for n in range(nmax + 1):
                    rep.add(verify_map_relation(name, k, n, s, ctx), check="relation", p=p, s=s, k=k, n=n)
        # image admissibility iff h_i >= p h_(i+1) (+1 for Psi)
        for s in (1, 2):
            for m in (2, 3):
                bad = []
                for hs in itertools.product(range(-hmax, hmax + 1), repeat=m):
                    w = tuple(Letter(eps, h) for h in hs)
                    img = next(iter(apply_map(name, Poly.monomial(w, p), s, ctx)))
                    crit = all(a >= p * b + offset for a, b in zip(hs, hs[1:]))
                    if is_admissible(img, ctx) != crit:
                        bad.append(list(hs))
                rep.add(not bad, check="admissibility-iff", p=p, s=s, length=m, counterexamples=bad[:5])
    return rep


def phi_rel(primes=(3, 5), kmax=3, nmax=6, smax=2, hmax=5) -> SuiteReport:
    return _map_relation_suite("Phi", primes, kmax, nmax, smax, hmax)


def psi_rel(primes=(3, 5), kmax=3, nmax=6, smax=2, hmax=5) -> SuiteReport:
    return _map_relation_suite("Psi", primes, kmax, nmax, smax, hmax)


def _random_module_pair(rng, p, s, hmax):
    ps, a = p**s, (p**s - 1) // (p - 1)
    m = rng.choice((2, 3))
    v = (Letter(1, ps * rng.randint(-hmax, hmax) - a),) + tuple(
        Letter(0, ps * rng.randint(-hmax, hmax) - a) for _ in range(m - 1)
    )
    q = tuple(Letter(0, ps * rng.randint(-hmax, hmax) - a) for _ in range(rng.randint(0, 2)))
    return Poly.monomial(v, p), Poly.monomial(q, p)


def kmodule(samples=200, samples_s1=50, seed=0, p=3, hmax=4, hmax_s1=2, fuel=None) -> SuiteReport:
    """lambda(v.q) == lambda(v).phi(q) on seeded samples at s = 0 and s = 1."""
    rep = SuiteReport(
        "kmodule",
        params={"samples": samples, "samples_s1": samples_s1, "seed": seed, "p": p, "hmax": hmax, "hmax_s1": hmax_s1},
    )
    ctx = _ctx(p, fuel)
    rng = random.Random(seed)
    for s, count, h in ((0, samples, hmax), (1, samples_s1, hmax_s1)):
        for i in range(count):
            v, q = _random_module_pair(rng, p, s, h)
            try:
                ok = verify_K_morphism(v, q, s, ctx)
                err = None
            except FuelExhausted as exc:
                ok, err = False, str(exc)
            case = dict(s=s, sample=i, v=print_poly(v), q=print_poly(q))
            if err:
                case["error"] = err
            rep.add(ok, **case)
    return rep


def theta(primes=(3, 5, 7)) -> SuiteReport:
    rep = SuiteReport("theta", params={"primes": list(primes)})
    for p in primes:
        r = check_theta_obstruction(_ctx(p))
        expected = [f"R(0,0,{p - 1})"]
        ok = r.not_member and [str(w) for w in r.witnesses] == expected
        rep.add(ok, p=p, image=print_poly(r.image), not_member=r.not_member, witnesses=[str(w) for w in r.witnesses])
    return rep


def lambda_s(primes=(3, 5, 7), kmax=6, nmax=12) -> SuiteReport:
    rep = SuiteReport("lambda-s", params={"primes": list(primes), "kmax": kmax, "nmax": nmax})
    for p in primes:
        r = check_lambda_S00(_ctx(p), kmax, nmax)
        target = Poly.monomial(word((1, -1), (1, -1)), p)
        ok = r.not_member and r.single_admissible and r.image == target
        rep.add(ok, p=p, image=print_poly(r.image), single_admissible=r.single_admissible, scanned=r.scanned)
    return rep


def _homogeneous_degree(x: Poly, ctx):
    degs = {internal_degree(w, ctx) for w in x}
    return degs.pop() if len(degs) == 1 else (None if degs else "empty")


def random_word(rng, max_len=3, lo=-6, hi=6, min_len=1):
    return tuple(Letter(rng.randint(0, 1), rng.randint(lo, hi)) for _ in range(rng.randint(min_len, max_len)))


def confluence(samples=1000, seed=0, p=3, kmax=6, rel_kmax=4, rel_nmax=8, fuel=None) -> SuiteReport:
    """Normal forms of random words: admissible, idempotent, graded, strategy independent."""
    rep = SuiteReport(
        "confluence",
        params={"samples": samples, "seed": seed, "p": p, "kmax": kmax, "rel_kmax": rel_kmax, "rel_nmax": rel_nmax},
    )
    ctx = _ctx(p, fuel)
    rng = random.Random(seed)
    strategies = (LEFTMOST, RIGHTMOST, Strategy("random", seed + 1), Strategy("random", seed + 2))
    for i in range(samples):
        w = random_word(rng, 3, -kmax, kmax)
        x = Poly.monomial(w, p)
        case = {"sample": i, "word": print_poly(x)}
        try:
            forms = [normal_form(x, ctx, st)[0] for st in strategies]
            nf = forms[0]
            checks = {
                "admissible": all(is_admissible(u, ctx) for u in nf),
                "idempotent": normal_form(nf, ctx)[0] == nf,
                "strategy_independent": all(f == nf for f in forms[1:]),
                "length": nf.is_zero() or length(nf) == len(w),
                "degree": nf.is_zero() or _homogeneous_degree(nf, ctx) == internal_degree(w, ctx),
            }
        except (FuelExhausted, Inhomogeneous) as exc:
            checks = {"error": False}
            case["error"] = f"{type(exc).__name__}: {exc}"
        failed = [k for k, v in checks.items() if not v]
        if failed:
            case["failed"] = failed
        rep.add(not failed, **case)
    for fam, name in ((relation_R, "R"), (relation_S, "S")):
        for eps in (0, 1):
            for k in range(-rel_kmax, rel_kmax + 1):
                for n in range(rel_nmax + 1):
                    try:
                        ok = normal_form(fam(eps, k, n, ctx), ctx)[0].is_zero()
                    except FuelExhausted:
                        ok = False
                    rep.add(ok, check="relation-vanishes", relation=f"{name}({eps},{k},{n})")
    return rep


def run_suite(name: str, **kw) -> SuiteReport:
    table = {
        "lucas": lucas,
        "divisibility": divisibility,
        "reduction": reduction,
        "phi-rel": phi_rel,
        "psi-rel": psi_rel,
        "kmodule": kmodule,
        "theta": theta,
        "lambda-s": lambda_s,
        "confluence": confluence,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    return table[name](**kw)
