"""Text syntax for field elements.

Grammar: integers, ``a`` (the generator α), ``i`` (only when α² = -1),
``t``, the operators ``+ - * / ^`` (integer exponents) and parentheses.
"""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, K):
        self.text = text
        self.K = K
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs:
                    self.error("division by zero", tok)
                value = value / rhs
        return value

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be an integer", tok)
            exp = sign * int(tok[1])
            if exp < 0 and not base:
                self.error("zero to a negative power", tok)
            return base ** exp
        return base

    def atom(self):
        tok = self.take()
        kind, text, _ = tok
        K = self.K
        spec = K.spec
        if kind == "int":
            return K(Fraction(int(text)))
        if kind == "name":
            if text == "t":
                if not spec.has_t:
                    self.error("symbol 't' is not in this field", tok)
                return K.t
            if text == "a":
                if not spec.quadratic:
                    self.error("symbol 'a' is not in this field", tok)
                return K.alpha
            if text == "i":
                if not spec.symbol_i:
                    self.error("symbol 'i' needs α² = -1", tok)
                return K.alpha
            self.error(f"unknown symbol {text!r}", tok)
        if kind == "op" and text == "(":
            value = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return value
        self.error(f"unexpected {text or 'end of input'!r}", tok)


def parse(text: str, K):
    """Parse ``text`` into an element of the valued field ``K``."""
    return _Parser(str(text), K).parse()


def _base_str(B, x, sym: str) -> str:
    a, b = x
    parts = []
    if a:
        parts.append(str(a))
    if b:
        if b == 1:
            parts.append(sym)
        elif B.q == 0 and b == -1:
            parts.append("-" + sym)
        else:
            parts.append(f"{b}*{sym}")
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        out += part if part.startswith("-") else "+" + part
    return out


def _poly_str(K, f) -> str:
    B = K.B
    sym = "i" if K.spec.symbol_i else "a"
    terms = []
    for k, c in enumerate(f):
        if c == B.zero:
            continue
        coef = _base_str(B, c, sym)
        if k == 0:
            terms.append(coef)
            continue
        mono = "t" if k == 1 else f"t^{k}"
        if coef == "1":
            terms.append(mono)
        elif coef == "-1":
            terms.append("-" + mono)
        elif c[0] and c[1]:
            terms.append(f"({coef})*{mono}")
        else:
            terms.append(f"{coef}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def format_elem(x) -> str:
    num = _poly_str(x.K, x.num)
    if x.den == (x.K.B.one,):
        return num
    return f"({num})/({_poly_str(x.K, x.den)})"
