"""Recursive-descent parser for the polynomial text grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := int ('/' uint)? | 'i' | var | '(' expr ')'

Whitespace is insignificant. A leading sign is accepted so that rendered
output (``-y^2 + x``) parses back.
"""

import json
import re
from fractions import Fraction

from ..errors import InputError, ParseError
from .numbers import GaussRational
from .polynomial import Polynomial, RingContext

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or (m.group(0).strip() == "" and m.end() >= len(text)):
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _add(a, b, sign=1):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + (c if sign > 0 else -c)
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.names = names
        self.n = len(names)
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] if tok[1] is not None else 'end of input'!r}",
                             self.text, tok[2])
        return tok

    def const(self, c):
        return {(0,) * self.n: GaussRational(c)} if c else {}

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", self.text, tok[2])
        return result

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = _add({}, self.term(), sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = _add(acc, self.term(), sign)
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = _mul(acc, self.factor())
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            result = self.const(1)
            for _ in range(tok[1]):
                result = _mul(result, base)
            return result
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            q = Fraction(val)
            if self.peek()[0] == "/":
                self.take()
                den = self.expect("int")
                if den[1] == 0:
                    raise ParseError("zero denominator", self.text, den[2])
                q = Fraction(val, den[1])
            return self.const(q)
        if kind == "name":
            if val == "i":
                return self.const(GaussRational(0, 1))
            if val not in self.names:
                raise ParseError(f"unknown identifier {val!r}", self.text, pos)
            e = [0] * self.n
            e[self.names.index(val)] = 1
            return {tuple(e): GaussRational(1)}
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", self.text, pos)


def parse_polynomial(text, ring):
    """Parse ``text`` into a canonical :class:`Polynomial` over ``ring``."""
    terms = _Parser(text, ring.names).parse()
    return Polynomial(ring, terms)


def parse_coefficient(text):
    """Parse a scalar such as ``-1/2``, ``3*i`` or ``1/2 + i``."""
    terms = _Parser(text, ()).parse()
    return terms.get((), GaussRational(0))


def split_list(text):
    """Split ``[a, b, c]`` (brackets optional) at top-level commas."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s.strip():
        return []
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    if any(not p for p in parts):
        raise InputError(f"empty entry in list {text!r}")
    return parts


def parse_polynomial_list(text, ring):
    return [parse_polynomial(p, ring) for p in split_list(text)]


def _natural_key(name):
    m = re.match(r"(.*?)(\d*)\Z", name)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def infer_ring(*texts):
    """Ring whose variables are the identifiers occurring in ``texts``, naturally sorted."""
    names = set()
    for t in texts:
        names.update(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", t))
    names.discard("i")
    if not names:
        names = {"x"}
    return RingContext(tuple(sorted(names, key=_natural_key)))


def ring_from_json(obj):
    if not isinstance(obj, dict) or "vars" not in obj:
        raise InputError("ring must be an object with a 'vars' list")
    try:
        return RingContext(tuple(obj["vars"]))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
