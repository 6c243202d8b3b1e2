"""Command-line front end.

Subcommands: ``expand``, ``map``, ``reg``, ``eval``, ``verify``, ``rank``,
``table``, ``list``.  Exit codes: 0 all verifications passed / command
succeeded, 1 at least one verification failed, 2 usage or parse error.

Expressions use a small grammar: terms are words over {x, y} or indices like
``(2,1)``, optionally scaled by an exact rational, joined with ``+``/``-``;
for example ``xy + 2*xyy`` or ``1/2*(3,1) - (4)``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import catalog, generating, maps, numerics, products, regularization, relations
from .config import get_config
from .words import (
    WordSum,
    format_word_sum,
    in_h0,
    zagier_d,
)


class ParseError(ValueError):
    """Expression text does not match the grammar; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<word>[xy]+)|(?P<int>\d+)|(?P<sym>[()+\-*/,]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "word":
            tokens.append(("word", m.group("word"), m.start("word")))
        elif m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if kind and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        if value and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> WordSum:
        total = WordSum.zero()
        sign = 1
        if self.peek()[:2] == ("sym", "-"):
            self.take()
            sign = -1
        total = total + self.term().scale(sign)
        while self.peek()[0] != "end":
            kind, val, pos = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                total = total + self.term().scale(1 if val == "+" else -1)
            else:
                raise ParseError(f"expected '+' or '-', found {val!r}", pos)
        return total

    def term(self) -> WordSum:
        coeff = Fraction(1)
        kind, val, pos = self.peek()
        negative = False
        if kind == "sym" and val == "-":
            self.take()
            negative = True
        if self.peek()[0] == "int":
            num = int(self.take()[1])
            den = 1
            if self.peek()[:2] == ("sym", "/"):
                self.take()
                den = int(self.take("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", pos)
            coeff = Fraction(num, den)
            self.take("sym", "*")
        elif negative:
            raise ParseError("a sign must precede a rational coefficient", pos)
        if negative:
            coeff = -coeff
        return self.atom().scale(coeff)

    def atom(self) -> WordSum:
        kind, val, pos = self.peek()
        if kind == "word":
            self.take()
            return WordSum.word(val)
        if kind == "sym" and val == "(":
            self.take()
            parts = []
            if self.peek()[:2] == ("sym", ")"):
                self.take()
                return WordSum.one()
            while True:
                parts.append(int(self.take("int")[1]))
                nxt = self.take("sym")
                if nxt[1] == ")":
                    break
                if nxt[1] != ",":
                    raise ParseError(f"expected ',' or ')', found {nxt[1]!r}", nxt[2])
            return WordSum.from_index(parts)
        raise ParseError(f"expected a word or an index, found {val!r}", pos)


def parse(text: str) -> WordSum:
    """Parse the expression mini-language into a word sum."""
    if text.strip() == "0":
        return WordSum.zero()
    return _Parser(text).parse()


# -- subcommand helpers ------------------------------------------------------------

def _parse_params(text: str | None) -> dict:
    """Parse ``k=4,n=2,star=true,index=(2,1),a=(1,2)`` into keyword arguments."""
    out: dict = {}
    if not text:
        return out
    for chunk in re.findall(r"[^,=]+=\([^)]*\)|[^,=]+=[^,()]+", text):
        key, _, val = chunk.partition("=")
        key = key.strip()
        val = val.strip()
        if val.startswith("("):
            inner = val[1:-1].strip()
            out[key] = tuple(int(v) for v in inner.split(",")) if inner else ()
        elif val.lower() in ("true", "false"):
            out[key] = val.lower() == "true"
        else:
            try:
                out[key] = int(val)
            except ValueError:
                out[key] = val
        continue
    return out


def _apply_map(name: str, ws: WordSum) -> WordSum:
    if ":" in name:
        base, _, arg = name.partition(":")
        if base not in maps.PARAMETRIC_MAP_NAMES:
            raise ValueError(f"unknown map {name!r}")
        return maps.PARAMETRIC_MAP_NAMES[base](int(arg), ws)
    if name not in maps.MAP_NAMES:
        raise ValueError(f"unknown map {name!r}")
    return maps.MAP_NAMES[name](ws)


def _render_value(value, ws: WordSum, digits: int) -> str:
    from mpmath import mp, workdps
    with workdps(digits + numerics.GUARD_DIGITS):
        text = mp.nstr(value, digits)
        try:
            weight = ws.homogeneous_weight()
        except ValueError:
            weight = -1
        if weight >= 0:
            hit = numerics.recognize_pi_power(value, weight, digits)
            if hit is not None and hit.q.denominator <= 10**9:
                return f"{text}  =  {hit}"
        return text


def _mode_kinds(mode: str) -> tuple[str, ...]:
    return {
        "symbolic": ("symbolic",),
        "member": ("membership",),
        "numeric": ("numeric",),
        "all": ("symbolic", "membership", "numeric"),
    }[mode]


# -- dispatch -------------------------------------------------------------------------

def _build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mzv", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="multiply two expressions under a product")
    p.add_argument("--product", required=True,
                   choices=("shuffle", "stuffle", "star-shuffle", "star-stuffle"))
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--indices", action="store_true", help="render h1 terms as indices")

    p = sub.add_parser("map", help="apply a linear map to an expression")
    p.add_argument("--name", required=True,
                   help="S, Sinv, stilde, stildeinv, tau, sigma, sigmainv, "
                        "dn:N, dnstar:N, ohno:M, ohnobar:M, ohnostar:M, ohnobarstar:M")
    p.add_argument("expr")
    p.add_argument("--indices", action="store_true")

    p = sub.add_parser("reg", help="regularized decomposition of an h1 expression")
    p.add_argument("--product", default="shuffle",
                   choices=("shuffle", "stuffle", "star-shuffle", "star-stuffle"))
    p.add_argument("expr")

    p = sub.add_parser("eval", help="evaluate an admissible expression numerically")
    p.add_argument("expr")
    p.add_argument("--digits", type=int, default=40)
    p.add_argument("--star", action="store_true",
                   help="evaluate the star value (compose with S)")

    p = sub.add_parser("verify", help="run catalog verification tasks")
    p.add_argument("name", help="identity name from `mzv list`, or gen:<check>")
    p.add_argument("--params", default="", help="e.g. k=4,n=2,star=true")
    p.add_argument("--mode", default="all",
                   choices=("symbolic", "member", "numeric", "all"))
    p.add_argument("--digits", type=int, default=40)
    p.add_argument("--truncation", type=int, default=6)
    p.add_argument("--families", default="RDS_IV")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("rank", help="echelon rank of relation families at a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--families", default="RDS_IV")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="dimension table over a weight range")
    p.add_argument("--weights", default="2-8", help="e.g. 2-10 or 3,5,7")
    p.add_argument("--families", default="RDS_IV")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")

    sub.add_parser("list", help="list identities, maps and generating checks")
    return ap


def _parse_weights(spec: str) -> list[int]:
    if "-" in spec:
        lo, hi = spec.split("-")
        return list(range(int(lo), int(hi) + 1))
    return [int(w) for w in spec.split(",")]


def dispatch(argv) -> tuple[int, str]:
    """Run one command; returns (exit_code, report_text)."""
    ap = _build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code in (0, None) else 2), ""

    try:
        return _run(args)
    except (ParseError, ValueError, KeyError) as exc:
        return 2, f"error: {exc}"


def _run(args) -> tuple[int, str]:
    cap = get_config()["weight_cap"]

    if args.command == "expand":
        prod = products.PRODUCTS[args.product.replace("-", "_")]
        out = prod(parse(args.left), parse(args.right))
        return 0, format_word_sum(out, indices=args.indices)

    if args.command == "map":
        out = _apply_map(args.name, parse(args.expr))
        return 0, format_word_sum(out, indices=args.indices)

    if args.command == "reg":
        tag = args.product.replace("-", "_")
        dec = regularization.reg_decompose(parse(args.expr), tag)
        lines = [f"{args.expr} = {dec}", f"reg = {dec.reg}"]
        return 0, "\n".join(lines)

    if args.command == "eval":
        ws = parse(args.expr)
        if not ws.in_h0():
            return 2, "error: eval needs an admissible (h0) expression"
        fn = numerics.evaluate_star_word_sum if args.star else numerics.evaluate_word_sum
        value = fn(ws, args.digits)
        return 0, _render_value(value, ws, args.digits)

    if args.command == "verify":
        families = tuple(args.families.split(","))
        if args.name.startswith("gen:"):
            report = generating.generating_check(args.name[4:], args.truncation,
                                                 args.digits,
                                                 **_parse_params(args.params))
            text = json.dumps(report.as_json(), sort_keys=True) if args.json else (
                f"{report.name} trunc={report.truncation} "
                f"max_deviation={report.max_deviation} "
                f"{'PASS' if report.passed else 'FAIL'}")
            return (0 if report.passed else 1), text
        tasks = catalog.build(args.name, **_parse_params(args.params))
        kinds = _mode_kinds(args.mode)
        results = [t.run(digits=args.digits, families=families)
                   for t in tasks if t.kind in kinds]
        if not results:
            return 2, f"error: no {args.mode} task for identity {args.name!r}"
        if args.json:
            text = json.dumps([r.as_json() for r in results], sort_keys=True)
        else:
            text = "\n".join(
                f"{r.name} {r.params} [{r.kind}] {r.verdict} "
                f"(residue_or_delta={r.residue_or_delta}, {r.millis:.1f} ms)"
                for r in results)
        return (0 if all(r.ok for r in results) else 1), text

    if args.command == "rank":
        if args.weight < 2 or args.weight > cap:
            return 2, f"error: weight must lie in [2, {cap}]"
        families = tuple(args.families.split(","))
        report = relations.dimension_report([args.weight], families)[0]
        if args.json:
            return 0, json.dumps(report, sort_keys=True)
        return 0, (f"weight {report['weight']}: generators={report['generators']} "
                   f"rank={report['rank']} quotient_dim={report['quotient_dim']} "
                   f"d_k={report['d_k']} match={report['match']}")

    if args.command == "table":
        weights = _parse_weights(args.weights)
        if any(w < 2 or w > cap for w in weights):
            return 2, f"error: weights must lie in [2, {cap}]"
        families = tuple(args.families.split(","))
        report = relations.dimension_report(weights, families)
        ok = all(row["match"] for row in report)
        if args.json:
            return (0 if ok else 1), json.dumps(report, sort_keys=True)
        if args.csv:
            return (0 if ok else 1), relations.dimension_csv(report)
        lines = ["weight generators rank quotient_dim d_k match"]
        for row in report:
            lines.append(f"{row['weight']:6d} {row['generators']:10d} {row['rank']:4d} "
                         f"{row['quotient_dim']:12d} {row['d_k']:3d} {row['match']}")
        return (0 if ok else 1), "\n".join(lines)

    if args.command == "list":
        lines = ["identities:"]
        lines += [f"  {name}" for name in catalog.catalog_names()]
        lines.append("generating checks (verify gen:<name>):")
        lines += [f"  {name}" for name in sorted(generating.GENERATING_CHECKS)]
        lines.append("maps:")
        lines += [f"  {name}" for name in sorted(maps.MAP_NAMES)]
        lines += [f"  {name}:N" for name in sorted(maps.PARAMETRIC_MAP_NAMES)]
        return 0, "\n".join(lines)

    return 2, "error: unknown command"


def main(argv=None) -> int:
    code, text = dispatch(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
