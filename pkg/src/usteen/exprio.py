"""Text grammar, canonical printer and JSON encoding.

Grammar (whitespace-insensitive)::

    poly   := term (('+'|'-') term)* | '0'
    term   := [coef '*'] factor ('*' factor)* | coef
    factor := 'z' '(' eps ',' int ')' | '1'

A leading sign before the first term is also accepted.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .algebra import ONE, Letter, Poly, RelationId, word_key
from .errors import BadEpsilon, ExprSyntaxError
from .modp import PrimeContext

_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|([()+\-*,]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        num, z, punct = m.groups()
        start = m.start(1 if num else 2 if z else 3)
        if num:
            tokens.append(("int", int(num), start))
        elif z:
            tokens.append(("z", "z", start))
        else:
            tokens.append((punct, punct, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: PrimeContext):
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.i]

    def take(self, *kinds):
        tok = self.toks[self.i]
        if tok[0] not in kinds:
            shown = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"unexpected {shown}", tok[2], [repr(k) if k != "int" else "integer" for k in kinds])
        self.i += 1
        return tok

    def poly(self) -> Poly:
        p = self.ctx.p
        out = Poly.zero(p)
        negate = False
        if self.peek()[0] in ("+", "-"):
            negate = self.take("+", "-")[0] == "-"
        while True:
            t = self.term()
            out = out - t if negate else out + t
            if self.peek()[0] == "end":
                return out
            negate = self.take("+", "-")[0] == "-"

    def term(self) -> Poly:
        kind = self.peek()[0]
        coef = 1
        w = []
        if kind == "int":
            tok = self.take("int")
            if self.peek()[0] != "*":
                return Poly(self.ctx.p, {ONE: tok[1]})
            coef = tok[1]
            self.take("*")
        w.extend(self.factor())
        while self.peek()[0] == "*":
            self.take("*")
            w.extend(self.factor())
        return Poly(self.ctx.p, {tuple(w): coef})

    def factor(self):
        kind = self.peek()[0]
        if kind == "int":
            tok = self.take("int")
            if tok[1] != 1:
                raise ExprSyntaxError("only '1' may appear as a bare factor", tok[2], ["'z'", "'1'"])
            return []
        self.take("z")
        self.take("(")
        tok = self.take("int")
        if tok[1] not in (0, 1):
            raise BadEpsilon(f"epsilon must be 0 or 1, got {tok[1]}", tok[2])
        eps = tok[1]
        self.take(",")
        neg = False
        if self.peek()[0] in ("-", "+"):
            neg = self.take("-", "+")[0] == "-"
        k = self.take("int")[1]
        self.take(")")
        k = -k if neg else k
        return [Letter(eps, self.ctx.check_index(k))]


def parse_poly(text: str, ctx: PrimeContext) -> Poly:
    return _Parser(text, ctx).poly()


def format_word(w) -> str:
    return "*".join(f"z({l.eps},{l.k})" for l in w)


def print_poly(x: Poly, ctx: PrimeContext | None = None) -> str:
    """Canonical text: terms in canonical word order, coefficient 1 omitted."""
    if x.is_zero():
        return "0"
    parts = []
    for w, c in x.sorted_terms():
        if not w:
            parts.append(str(c))
        elif c == 1:
            parts.append(format_word(w))
        else:
            parts.append(f"{c}*{format_word(w)}")
    return " + ".join(parts)


# JSON ----------------------------------------------------------------------

_WORD_SCHEMA = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"enum": [0, 1]}, {"type": "integer"}],
        "minItems": 2,
        "maxItems": 2,
    },
}

POLY_SCHEMA = {
    "type": "object",
    "required": ["p", "terms"],
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coef", "word"],
                "properties": {
                    "coef": {"type": "integer", "minimum": 1},
                    "word": _WORD_SCHEMA,
                },
            },
        },
    },
}

RELATION_SCHEMA = {
    "type": "object",
    "required": ["family", "eps", "k", "n"],
    "properties": {
        "family": {"enum": ["R", "S"]},
        "eps": {"enum": [0, 1]},
        "k": {"type": "integer"},
        "n": {"type": "integer", "minimum": 0},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "cases", "passed"],
    "properties": {
        "suite": {"type": "string"},
        "cases": {"type": "array", "items": {"type": "object", "required": ["passed"]}},
        "passed": {"type": "boolean"},
    },
}


def poly_to_obj(x: Poly) -> dict:
    return {
        "p": x.p,
        "terms": [{"coef": c, "word": [[l.eps, l.k] for l in w]} for w, c in x.sorted_terms()],
    }


def poly_from_obj(obj: dict) -> Poly:
    return Poly(
        obj["p"],
        [(tuple(Letter(e, k) for e, k in t["word"]), t["coef"]) for t in obj["terms"]],
    )


def _to_obj(value: Any) -> Any:
    if isinstance(value, Poly):
        return poly_to_obj(value)
    if isinstance(value, RelationId):
        return {"family": value.family, "eps": value.eps, "k": value.k, "n": value.n}
    if hasattr(value, "to_obj"):
        return value.to_obj()
    return value


def encode_json(value: Any) -> str:
    return json.dumps(_to_obj(value), sort_keys=False, separators=(",", ":"))


def decode_json(text: str) -> Any:
    """Inverse of :func:`encode_json` for polynomials and relation ids; reports stay dicts."""
    obj = json.loads(text)
    if isinstance(obj, dict):
        if "terms" in obj and "p" in obj:
            return poly_from_obj(obj)
        if set(obj) == {"family", "eps", "k", "n"}:
            return RelationId(obj["family"], obj["eps"], obj["k"], obj["n"])
    return obj
