"""Command-line front end: ``usteen -p PRIME <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .algebra import RelationId, relation_R, relation_S, relations_containing
from .errors import FuelExhausted, SteenrodError
from .exprio import encode_json, format_word, parse_poly, poly_to_obj, print_poly
from .fractal import apply_map
from .modp import DEFAULT_FUEL, PrimeContext
from .straighten import PairCache, Strategy, enumerate_admissible, normal_form


def _pattern(text: str):
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad epsilon pattern {text!r}")
    if any(v not in (0, 1) for v in vals):
        raise argparse.ArgumentTypeError("epsilon pattern entries must be 0 or 1")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="usteen", description="Generalized Adem relations and admissible normal forms.")
    ap.add_argument("-p", "--prime", type=int, required=True, help="odd prime")
    ap.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="rewrite budget per normal form")
    ap.add_argument("--strategy", choices=("leftmost", "rightmost", "random"), default="leftmost")
    ap.add_argument("--output", choices=("text", "json"), default="text")
    ap.add_argument("--seed", type=int, default=0, help="seed for the random strategy and sampled suites")
    sub = ap.add_subparsers(dest="command", required=True)

    rel = sub.add_parser("relation", help="print R(eps,k,n) or S(eps,k,n)")
    rel.add_argument("family", choices=("R", "S"))
    rel.add_argument("--eps", type=int, choices=(0, 1), required=True)
    rel.add_argument("--k", type=int, required=True)
    rel.add_argument("--n", type=int, required=True)

    nf = sub.add_parser("nf", help="admissible normal form of an expression")
    nf.add_argument("expr")

    mp = sub.add_parser("map", help="apply phi, psi, lambda or theta")
    mp.add_argument("--name", choices=("phi", "psi", "lambda", "theta"), required=True)
    mp.add_argument("--power", type=int, default=1)
    mp.add_argument("expr")

    bs = sub.add_parser("basis", help="admissible words of a given length in an index window")
    bs.add_argument("--length", type=int, required=True)
    bs.add_argument("--min", type=int, required=True, dest="lo")
    bs.add_argument("--max", type=int, required=True, dest="hi")
    bs.add_argument("--pattern", type=_pattern, default=None, help="comma-separated epsilons, e.g. 0,0")

    ct = sub.add_parser("contains", help="relations in which a length-2 word occurs")
    ct.add_argument("expr")

    vf = sub.add_parser(
        "verify",
        help="run a verification sweep",
        description="Multi-prime suites use their own prime sets; kmodule and confluence use --prime.",
    )
    vf.add_argument("--suite", choices=suites.SUITES + ("all",), required=True)
    vf.add_argument("--kmax", type=int)
    vf.add_argument("--nmax", type=int)
    vf.add_argument("--smax", type=int)
    vf.add_argument("--samples", type=int)
    return ap


def _suite_kwargs(name: str, args, ctx: PrimeContext) -> dict:
    given = {k: getattr(args, k) for k in ("kmax", "nmax", "smax", "samples") if getattr(args, k) is not None}
    kw: dict = {}
    if name == "lucas":
        if "nmax" in given:
            kw["amax"] = given["nmax"]
    elif name == "divisibility":
        kw.update({k: v for k, v in given.items() if k in ("smax", "nmax")})
    elif name in ("reduction", "phi-rel", "psi-rel"):
        kw.update({k: v for k, v in given.items() if k in ("kmax", "nmax", "smax")})
    elif name == "kmodule":
        kw.update(seed=args.seed, p=ctx.p, fuel=ctx.fuel)
        if "samples" in given:
            kw["samples"] = given["samples"]
            kw["samples_s1"] = max(1, given["samples"] // 4)
    elif name == "confluence":
        kw.update(seed=args.seed, p=ctx.p, fuel=ctx.fuel)
        kw.update({k: v for k, v in given.items() if k in ("samples", "kmax")})
    elif name == "lambda-s":
        kw.update({k: v for k, v in given.items() if k in ("kmax", "nmax")})
    return kw


def _emit(args, text: str, obj) -> None:
    if args.output == "json":
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(text)


def _run(args, out_err) -> int:
    ctx = PrimeContext(args.prime, fuel=args.fuel)
    strategy = Strategy(args.strategy, args.seed)

    if args.command == "relation":
        fam = relation_R if args.family == "R" else relation_S
        rel = fam(args.eps, args.k, args.n, ctx)
        obj = poly_to_obj(rel)
        obj["relation"] = json.loads(encode_json(RelationId(args.family, args.eps, args.k, args.n)))
        _emit(args, print_poly(rel), obj)
        return 0

    if args.command == "nf":
        x = parse_poly(args.expr, ctx)
        # fresh cache so the reported stats depend only on the input
        result, stats = normal_form(x, ctx, strategy, cache=PairCache())
        obj = poly_to_obj(result)
        obj["stats"] = stats.to_obj()
        _emit(args, print_poly(result), obj)
        if args.output == "text":
            s = stats
            print(f"steps={s.steps} peak_terms={s.peak_terms} cache_hits={s.cache_hits} fuel_left={s.fuel_left}", file=out_err)
        return 0

    if args.command == "map":
        x = parse_poly(args.expr, ctx)
        img = apply_map(args.name, x, args.power, ctx)
        _emit(args, print_poly(img), poly_to_obj(img))
        return 0

    if args.command == "basis":
        words = enumerate_admissible(args.length, args.lo, args.hi, ctx, args.pattern)
        text = "\n".join(format_word(w) or "1" for w in words)
        obj = {"p": ctx.p, "words": [[[l.eps, l.k] for l in w] for w in words]}
        _emit(args, text, obj)
        return 0

    if args.command == "contains":
        x = parse_poly(args.expr, ctx)
        if len(x) != 1:
            raise SteenrodError("contains expects a single word")
        w = next(iter(x))
        rels = relations_containing(w, ctx)
        obj = {
            "p": ctx.p,
            "word": [[l.eps, l.k] for l in w],
            "relations": [json.loads(encode_json(r)) for r in rels],
        }
        _emit(args, "\n".join(str(r) for r in rels), obj)
        return 0

    if args.command == "verify":
        names = suites.SUITES if args.suite == "all" else (args.suite,)
        reports = [suites.run_suite(n, **_suite_kwargs(n, args, ctx)) for n in names]
        if args.suite == "all":
            passed = all(r.passed for r in reports)
            obj = {"suite": "all", "cases": [r.to_obj() for r in reports], "passed": passed}
        else:
            passed = reports[0].passed
            obj = reports[0].to_obj()
        lines = []
        for r in reports:
            lines.append(r.summary())
            for case in r.failures[:20]:
                lines.append("  failed: " + json.dumps(case, separators=(",", ":")))
            if r.suite == "theta":
                for case in r.cases:
                    lines.append(f"  p={case['p']}: not_member={case['not_member']} witnesses={','.join(case['witnesses'])}")
        _emit(args, "\n".join(lines), obj)
        return 0 if passed else 1

    raise AssertionError(args.command)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _run(args, sys.stderr)
    except FuelExhausted as exc:
        print(f"usteen: {exc}", file=sys.stderr)
        if exc.stats is not None:
            print(json.dumps(exc.stats.to_obj()), file=sys.stderr)
        return 1
    except SteenrodError as exc:
        print(f"usteen: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
