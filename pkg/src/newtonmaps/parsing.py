"""Text format for rational maps.

Two polynomial forms are accepted, freely mixed through the usual
arithmetic: expression syntax ("z^3 - 1", "(z^5-1)/z^3", "2z(z+1)") and
coefficient lists, highest degree first ("(1,0,0,-1)").  The coefficient
list is the bit-exact interchange form.  Implicit multiplication by
juxtaposition is allowed ("2z", "z(z+2)") except between two variables
("z z" is rejected).
"""

from __future__ import annotations

import re

from .poly import Poly
from .rational import RationalMap

__all__ = ["ParseError", "parse_map", "parse_complex"]


class ParseError(ValueError):
    """Raised for any malformed map text."""


_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?i?)
      | (?P<i>i)
      | (?P<z>z)
      | (?P<op>[+\-*/^(),]|−|·)
    )""",
    re.VERBOSE,
)

_OP_CANON = {"−": "-", "·": "*"}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            raise ParseError(f"unexpected character at position {pos}: {text[pos]!r}")
        pos = m.end()
        if m.lastgroup == "num":
            lit = m.group("num")
            if lit.endswith("i"):
                tokens.append(("num", complex(0.0, float(lit[:-1]))))
            else:
                tokens.append(("num", complex(float(lit))))
        elif m.lastgroup == "i":
            tokens.append(("var_i", 1j))
        elif m.lastgroup == "z":
            tokens.append(("var_z", None))
        else:
            op = _OP_CANON.get(m.group("op"), m.group("op"))
            tokens.append(("op", op))
    tail = text[pos:].strip()
    if tail:
        raise ParseError(f"trailing input: {tail!r}")
    return tokens


class _Rat:
    """Working value: a polynomial fraction, reduced only at the end."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = den if den is not None else Poly([1])

    @classmethod
    def const(cls, value):
        return cls(Poly([value]))

    def __add__(self, o):
        return _Rat(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _Rat(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _Rat(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.num.is_zero:
            raise ParseError("division by zero")
        return _Rat(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return _Rat(-self.num, self.den)

    def __pow__(self, k):
        if k >= 0:
            return _Rat(self.num ** k, self.den ** k)
        if self.num.is_zero:
            raise ParseError("zero to a negative power")
        return _Rat(self.den ** (-k), self.num ** (-k))

    @property
    def is_constant(self):
        return self.num.is_constant and self.den.is_constant

    def constant_value(self):
        return self.num.c[0] / self.den.c[0]


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self):
        if self.k < len(self.tokens):
            return self.tokens[self.k]
        return (None, None)

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    # expr := term (('+'|'-') term)*
    def expr(self):
        kind, val = self.peek()
        acc = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    # term := factor (('*'|'/')? factor)*; a missing operator means '*'
    def term(self):
        acc = self.factor()
        last_var = self._last_was_var
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                acc = acc * rhs if val == "*" else acc / rhs
                last_var = self._last_was_var
            elif kind in ("num", "var_z", "var_i") or (kind == "op" and val == "("):
                if last_var and kind in ("var_z", "var_i"):
                    raise ParseError("juxtaposed variables need an explicit operator")
                acc = acc * self.factor()
                last_var = self._last_was_var
            else:
                return acc

    # factor := ('+'|'-') factor | atom ('^' signed-integer)?
    def factor(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            f = self.factor()
            return f if val == "+" else -f
        a = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            a = a ** self._integer()
            self._last_was_var = False
        return a

    def _integer(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        kind, val = self.take()
        if kind != "num" or val.imag != 0 or val.real != int(val.real):
            raise ParseError("exponent must be an integer")
        return sign * int(val.real)

    # atom := number | i | z | '(' expr (',' expr)* ')'
    def atom(self):
        kind, val = self.take()
        self._last_was_var = False
        if kind == "num":
            return _Rat.const(val)
        if kind == "var_i":
            self._last_was_var = True
            return _Rat.const(1j)
        if kind == "var_z":
            self._last_was_var = True
            return _Rat(Poly([1, 0]))
        if kind == "op" and val == "(":
            first = self.expr()
            items = [first]
            while True:
                kind, val = self.peek()
                if kind == "op" and val == ",":
                    self.take()
                    items.append(self.expr())
                else:
                    break
            self.expect_op(")")
            self._last_was_var = False
            if len(items) == 1:
                return first
            # a comma list is a coefficient vector, highest degree first
            coeffs = []
            for item in items:
                if not item.is_constant:
                    raise ParseError("coefficient list entries must be constants")
                coeffs.append(item.constant_value())
            return _Rat(Poly(coeffs))
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input")


def parse_map(text):
    """Parse map text into a reduced RationalMap."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty map text")
    parser = _Parser(_tokenize(text))
    value = parser.expr()
    if parser.k != len(parser.tokens):
        kind, val = parser.peek()
        raise ParseError(f"unexpected token {val!r}")
    if value.num.is_zero:
        return RationalMap(Poly([0]), Poly([1]), reduce=False)
    return RationalMap(value.num, value.den)


def parse_complex(text):
    """Parse "re,im" (or a bare real) into a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ParseError(f"cannot parse complex value {text!r}; expected re,im")
