import json

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from usteen import ONE, Letter, Poly, PrimeContext, RelationId, word
from usteen.errors import BadEpsilon, ExprSyntaxError, IndexOverflow
from usteen.exprio import (
    POLY_SCHEMA,
    RELATION_SCHEMA,
    REPORT_SCHEMA,
    decode_json,
    encode_json,
    parse_poly,
    print_poly,
)
from usteen.suites import theta


def mono(p, *pairs, coef=1):
    return Poly.monomial(word(*pairs), p, coef)


class TestParse:
    def test_examples(self, ctx3):
        assert parse_poly("z(0,-1)*z(0,0)", ctx3) == mono(3, (0, -1), (0, 0))
        assert parse_poly("2*z(1,3) - z(1,3)", ctx3) == mono(3, (1, 3))
        with pytest.raises(BadEpsilon):
            parse_poly("z(2,0)", ctx3)

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("0", Poly.zero(3)),
            ("1", Poly.one(3)),
            ("5", 2 * Poly.one(3)),
            ("-z(0,1)", 2 * mono(3, (0, 1))),
            ("  z ( 1 , -4 ) * z(0, +2) ", mono(3, (1, -4), (0, 2))),
            ("2*1*z(0,1)*1", 2 * mono(3, (0, 1))),
            ("z(0,1) + 0", mono(3, (0, 1))),
            ("4*z(0,1) + 2*z(0,1)", Poly.zero(3)),
        ],
    )
    def test_grammar(self, ctx3, text, expected):
        assert parse_poly(text, ctx3) == expected

    @pytest.mark.parametrize("text", ["", "z(0,1)*", "z(0 1)", "z(0,1) z(0,2)", "3*", "2*3", "z(0,1)+", "y(0,1)", "z(0,)"])
    def test_syntax_errors(self, ctx3, text):
        with pytest.raises(ExprSyntaxError) as info:
            parse_poly(text, ctx3)
        assert info.value.position is not None

    def test_error_reports_expected_tokens(self, ctx3):
        with pytest.raises(ExprSyntaxError) as info:
            parse_poly("z(0 1)", ctx3)
        assert info.value.position == 4
        assert "','" in info.value.expected

    def test_index_overflow(self):
        with pytest.raises(IndexOverflow):
            parse_poly("z(0,1000)", PrimeContext(3, index_bound=999))


class TestPrint:
    def test_examples(self, ctx3):
        assert print_poly(Poly.zero(3)) == "0"
        x = 2 * mono(3, (0, -2), (0, -1)) + mono(3, (0, -1), (0, -2))
        assert print_poly(x) == "2*z(0,-2)*z(0,-1) + z(0,-1)*z(0,-2)"
        assert print_poly(Poly(3, {ONE: 2})) == "2"
        assert print_poly(Poly.one(3) + mono(3, (1, 0))) == "1 + z(1,0)"

    def test_coefficients_never_negative(self, ctx3):
        assert print_poly(parse_poly("-z(0,1) - 2*z(0,2)", ctx3)) == "2*z(0,1) + z(0,2)"


@st.composite
def polys(draw):
    p = draw(st.sampled_from([3, 5, 7]))
    letters = st.builds(Letter, st.integers(0, 1), st.integers(-100, 100))
    words = st.lists(letters, max_size=4).map(tuple)
    return Poly(p, draw(st.lists(st.tuples(words, st.integers(-20, 20)), max_size=6)))


@settings(max_examples=300)
@given(polys())
def test_round_trip(x):
    ctx = PrimeContext(x.p)
    text = print_poly(x)
    assert parse_poly(text, ctx) == x
    assert print_poly(parse_poly(text, ctx)) == text


@settings(max_examples=200)
@given(polys(), st.randoms(use_true_random=False))
def test_printing_is_insertion_order_independent(x, rnd):
    items = list(x.items())
    rnd.shuffle(items)
    assert print_poly(Poly(x.p, items)) == print_poly(x)


class TestJson:
    def test_examples(self):
        assert json.loads(encode_json(Poly.zero(3))) == {"p": 3, "terms": []}
        assert json.loads(encode_json(mono(3, (1, 0), (1, 0)))) == {
            "p": 3,
            "terms": [{"coef": 1, "word": [[1, 0], [1, 0]]}],
        }
        report = json.loads(encode_json(theta()))
        assert report["passed"] is True and len(report["cases"]) == 3
        jsonschema.validate(report, REPORT_SCHEMA)

    @settings(max_examples=200)
    @given(polys())
    def test_poly_round_trip(self, x):
        obj = json.loads(encode_json(x))
        jsonschema.validate(obj, POLY_SCHEMA)
        assert decode_json(encode_json(x)) == x

    def test_relation_round_trip(self):
        rid = RelationId("S", 1, -3, 4)
        obj = json.loads(encode_json(rid))
        jsonschema.validate(obj, RELATION_SCHEMA)
        assert decode_json(encode_json(rid)) == rid

    def test_terms_in_canonical_order(self):
        x = mono(3, (0, 1), (0, 0)) + mono(3, (0, 4)) + mono(3, (0, -2), (1, 0))
        words = [t["word"] for t in json.loads(encode_json(x))["terms"]]
        assert words == [[[0, 4]], [[0, -2], [1, 0]], [[0, 1], [0, 0]]]
