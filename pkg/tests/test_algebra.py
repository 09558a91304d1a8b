import pytest
from hypothesis import given, settings, strategies as st

import oracles
from usteen import (
    ONE,
    Letter,
    Poly,
    PrimeContext,
    RelationId,
    canonical_compare,
    internal_degree,
    is_admissible,
    length,
    relation_R,
    relation_S,
    relations_containing,
    word,
)
from usteen.algebra import add, mul, scale
from usteen.errors import IndexOverflow, Inhomogeneous, NegativeN, WrongLength


def mono(p, *pairs, coef=1):
    return Poly.monomial(word(*pairs), p, coef)


class TestAdmissibility:
    def test_examples(self, ctx3):
        assert not is_admissible(word((0, -1), (0, 0)), ctx3)
        assert is_admissible(word((1, -1), (1, -1)), ctx3)
        assert is_admissible(ONE, ctx3)
        assert is_admissible(word((0, -100)), ctx3)

    def test_epsilon_of_right_letter_counts(self, ctx3):
        assert is_admissible(word((0, 3), (0, 1)), ctx3)
        assert not is_admissible(word((0, 3), (1, 1)), ctx3)
        assert is_admissible(word((1, 4), (1, 1)), ctx3)


class TestGradings:
    def test_length(self):
        assert length(word((0, 5), (0, -1))) == 2
        assert length(ONE) == 0
        assert length(mono(3, (0, 1)) + mono(3, (0, 3))) == 1
        with pytest.raises(Inhomogeneous):
            length(mono(3, (0, 1)) + mono(3, (0, 2), (0, 0)))

    @pytest.mark.parametrize(
        "w, expected", [(word((1, 0)), 1), (word((0, 2), (0, 2)), 16), (ONE, 0), (word((1, -1), (0, 3)), -4 + 1 + 12)]
    )
    def test_internal_degree(self, ctx3, w, expected):
        assert internal_degree(w, ctx3) == expected


class TestPolyOps:
    def test_examples(self):
        assert add(mono(3, (0, 1)), mono(3, (0, 1), coef=2)).is_zero()
        assert mul(mono(3, (1, 0)), mono(3, (0, 2))) == mono(3, (1, 0), (0, 2))
        assert scale(0, mono(3, (1, 0)) + mono(3, (0, 0))).is_zero()

    def test_normalization(self):
        x = Poly(5, {word((0, 1)): 7, word((0, 2)): 5, ONE: -1})
        assert x.terms == {word((0, 1)): 2, ONE: 4}
        assert Poly(3, [(word((0, 1)), 1), (word((0, 1)), 2)]).is_zero()

    def test_equality_is_structural(self):
        a = mono(3, (0, 1)) + mono(3, (1, 2))
        b = mono(3, (1, 2)) + mono(3, (0, 1))
        assert a == b and hash(a) == hash(b)
        assert mono(3, (0, 1)) != mono(5, (0, 1))

    def test_unit(self):
        x = mono(3, (0, 1)) + 2 * mono(3, (1, 4), (0, 0))
        one = Poly.one(3)
        assert one * x == x == x * one

    def test_mixed_primes_rejected(self):
        with pytest.raises(ValueError):
            mono(3, (0, 1)) + mono(5, (0, 1))


letters = st.builds(Letter, st.integers(0, 1), st.integers(-20, 20))
words = st.lists(letters, max_size=3).map(tuple)


@st.composite
def polys(draw, p=3):
    return Poly(p, draw(st.lists(st.tuples(words, st.integers(-10, 10)), max_size=5)))


@settings(max_examples=200)
@given(polys(), polys(), polys(), st.integers(-5, 5), st.integers(-5, 5))
def test_ring_axioms(x, y, z, a, b):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (a * x + b * y) * z == a * (x * z) + b * (y * z)
    assert (x - x).is_zero()


class TestRelations:
    def test_anchor_values(self, ctx):
        assert relation_R(0, 0, 0, ctx) == mono(ctx.p, (0, -1), (0, 0))
        assert relation_S(1, 0, 0, ctx) == mono(ctx.p, (1, 0), (1, 0))

    def test_R_examples(self, ctx3):
        assert relation_R(0, 0, 2, ctx3) == (
            mono(3, (0, -3), (0, 0)) + mono(3, (0, -1), (0, -2)) + 2 * mono(3, (0, -2), (0, -1))
        )
        assert relation_R(0, 2, 3, ctx3) == mono(3, (0, 2), (0, 2)) + mono(3, (0, 5), (0, -1))

    def test_S_examples(self, ctx3):
        assert relation_S(0, 1, 0, ctx3) == mono(3, (0, 3), (1, 1)) + 2 * mono(3, (1, 3), (0, 1))
        # the z(e,pk-j)z(1,k-n+j) sum carries (-1)^j: +C(1,0) at j = 0
        assert relation_S(1, 1, 1, ctx3) == mono(3, (1, 2), (1, 1)) + mono(3, (1, 3), (1, 0))
        assert relation_S(1, 1, 1, ctx3, flip_first_sum=True) == mono(3, (1, 2), (1, 1)) + 2 * mono(3, (1, 3), (1, 0))

    def test_S_commutation_relation(self, ctx3):
        assert relation_S(0, 0, 0, ctx3) == mono(3, (0, 0), (1, 0)) + 2 * mono(3, (1, 0), (0, 0))

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_against_literal_oracle(self, p):
        ctx = PrimeContext(p)
        for eps in (0, 1):
            for k in range(-4, 5):
                for n in range(0, 13):
                    assert oracles.as_dict(relation_R(eps, k, n, ctx)) == oracles.relation_R(eps, k, n, p)
                    assert oracles.as_dict(relation_S(eps, k, n, ctx)) == oracles.relation_S(eps, k, n, p)

    @pytest.mark.parametrize("p", [3, 5])
    def test_homogeneity(self, p):
        ctx = PrimeContext(p)
        for eps in (0, 1):
            for k in range(-4, 5):
                for n in range(9):
                    r = relation_R(eps, k, n, ctx)
                    assert length(r) == 2
                    assert {internal_degree(w, ctx) for w in r} == {2 * (p - 1) * (p * k - 1 - n + k) + eps}
                    s = relation_S(eps, k, n, ctx)
                    assert length(s) == 2
                    assert {internal_degree(w, ctx) for w in s} == {2 * (p - 1) * (p * k - n + k) + eps + 1}

    def test_every_relation_has_a_nonadmissible_leading_term(self, ctx):
        for eps in (0, 1):
            for k in range(-3, 4):
                for n in range(6):
                    lead_r = word((eps, ctx.p * k - 1 - n), (0, k))
                    lead_s = word((eps, ctx.p * k - n), (1, k))
                    assert relation_R(eps, k, n, ctx).coefficient(lead_r) == 1
                    assert relation_S(eps, k, n, ctx).coefficient(lead_s) == 1
                    assert not is_admissible(lead_r, ctx) and not is_admissible(lead_s, ctx)

    def test_negative_n(self, ctx3):
        with pytest.raises(NegativeN):
            relation_R(0, 0, -1, ctx3)
        with pytest.raises(NegativeN):
            relation_S(0, 0, -1, ctx3)

    def test_index_overflow(self):
        small = PrimeContext(3, index_bound=10)
        with pytest.raises(IndexOverflow):
            relation_R(0, 5, 0, small)


class TestRelationsContaining:
    def test_examples(self, ctx3):
        assert relations_containing(word((0, -3), (0, 0)), ctx3) == [RelationId("R", 0, 0, 2)]
        assert relations_containing(word((1, 0), (1, 0)), ctx3) == [RelationId("S", 1, 0, 0)]
        assert RelationId("R", 0, 2, 0) in relations_containing(word((0, 5), (0, 2)), ctx3)

    def test_wrong_length(self, ctx3):
        with pytest.raises(WrongLength):
            relations_containing(word((0, 1)), ctx3)

    def test_sound_and_complete_against_scan(self, ctx3):
        kmax, nmax = 10, 30
        index = oracles.relation_index(3, kmax, nmax)
        for e1 in (0, 1):
            for e2 in (0, 1):
                for a in range(-12, 13):
                    for c in range(-12, 13):
                        w = word((e1, a), (e2, c))
                        found = relations_containing(w, ctx3)
                        for rid in found:
                            rel = oracles.relation_R if rid.family == "R" else oracles.relation_S
                            assert rel(rid.eps, rid.k, rid.n, 3).get(((e1, a), (e2, c)))
                        inside = {tuple(r) for r in found if abs(r.k) <= kmax and r.n <= nmax}
                        assert inside == index.get(((e1, a), (e2, c)), set()), w


class TestCanonicalOrder:
    def test_examples(self):
        assert canonical_compare(word((0, 1)), word((0, 1), (0, 0))) == -1
        assert canonical_compare(word((0, 5)), word((1, -9))) == -1
        assert canonical_compare(word((0, 2)), word((0, 2))) == 0
        assert canonical_compare(word((0, -1), (0, -2)), word((0, -2), (0, -1))) == 1

    @given(words, words, words)
    def test_total_order(self, a, b, c):
        assert canonical_compare(a, b) == -canonical_compare(b, a)
        if canonical_compare(a, b) <= 0 and canonical_compare(b, c) <= 0:
            assert canonical_compare(a, c) <= 0
        assert (canonical_compare(a, b) == 0) == (a == b)
