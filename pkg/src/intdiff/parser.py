"""Surface syntax for operators.

Grammar (whitespace insensitive, no implicit multiplication)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor | '/' INT)*
    factor  := primary ['^' INT]
    primary := INT ['/' INT] | symbol | 'e' '(' INT ',' INT ')'
             | '(' expr ')' | '[' expr ',' expr ']'

Symbols: ``H``, ``x``, ``D`` (alias ``∂``), ``Int`` (alias ``∫``), ``one``;
``Dinv`` only in the B1 dialect, ``e(i,j)`` only in the I1 dialect.  A
trailing ``/ q`` is stored as multiplication by the literal ``1/q``, which
keeps ``parse(to_text(ast)) == ast``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .base import HPoly, scalar_str
from .b1 import B1Elem
from .errors import DialectError, ParseError
from .iop import DER, H_OP, INT, IOp, commutator, generator, mul, power

DIALECTS = ("I1", "B1", "poly")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class E:
    i: int
    j: int


@dataclass(frozen=True)
class Add:
    terms: tuple


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Comm:
    left: object
    right: object


ALIASES = {"∂": "D", "∫": "Int"}
SYMBOLS = {
    "I1": {"H", "x", "D", "Int", "one"},
    "B1": {"H", "x", "D", "Int", "one", "Dinv"},
    "poly": {"x"},
}

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*|∂|∫)|(.)", re.S)


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        start = pos
        if m.group(1):
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("NAME", ALIASES.get(m.group(2), m.group(2)), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, dialect: str):
        if dialect not in DIALECTS:
            raise ValueError(f"unknown dialect {dialect!r}")
        self.tokens = tokenize(text)
        self.k = 0
        self.dialect = dialect

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            shown = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {shown}", tok[2])
        self.k += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        terms = []
        if self.peek()[0] == "-":
            self.take()
            terms.append(Neg(self.term()))
        else:
            terms.append(self.term())
        while self.peek()[0] in "+-":
            op = self.take()[0]
            t = self.term()
            terms.append(Neg(t) if op == "-" else t)
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            if op == "*":
                node = Mul(node, self.factor())
            else:
                q = self.take("INT")[1]
                if q == 0:
                    raise ParseError("division by zero", pos)
                node = Mul(node, Num(Fraction(1, q)))
        return node

    def factor(self):
        node = self.primary()
        if self.peek()[0] == "^":
            self.take()
            node = Pow(node, self.take("INT")[1])
        return node

    def primary(self):
        kind, value, pos = self.peek()
        if kind == "INT":
            self.take()
            if self.peek()[0] == "/" and self.tokens[self.k + 1][0] == "INT":
                self.take()
                q = self.take()[1]
                if q == 0:
                    raise ParseError("division by zero", pos)
                return Num(Fraction(value, q))
            return Num(Fraction(value))
        if kind == "NAME":
            self.take()
            if value == "e":
                if self.dialect != "I1":
                    raise DialectError(f"e(i,j) is not available in the {self.dialect} dialect", pos)
                self.take("(")
                i = self.take("INT")[1]
                self.take(",")
                j = self.take("INT")[1]
                self.take(")")
                return E(i, j)
            if value not in SYMBOLS[self.dialect]:
                if any(value in names for names in SYMBOLS.values()):
                    raise DialectError(f"{value} is not available in the {self.dialect} dialect", pos)
                raise ParseError(f"unknown symbol {value!r}", pos)
            return Sym(value)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "[":
            if self.dialect == "poly":
                raise DialectError("commutators are not polynomials", pos)
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Comm(left, right)
        shown = "end of input" if kind == "EOF" else repr(value)
        raise ParseError(f"unexpected {shown}", pos)


def parse(text: str, dialect: str = "I1"):
    return _Parser(text, dialect).parse()


# -- printing --------------------------------------------------------------

def _is_primary(node) -> bool:
    return isinstance(node, (Num, Sym, E, Comm))


def _term_text(node) -> str:
    if isinstance(node, (Add, Neg)):
        return f"({to_text(node)})"
    return to_text(node)


def to_text(node) -> str:
    if isinstance(node, Num):
        return scalar_str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, E):
        return f"e({node.i},{node.j})"
    if isinstance(node, Comm):
        return f"[{to_text(node.left)},{to_text(node.right)}]"
    if isinstance(node, Pow):
        base = to_text(node.base) if _is_primary(node.base) else f"({to_text(node.base)})"
        return f"{base}^{node.exp}"
    if isinstance(node, Mul):
        right = node.right
        rtext = to_text(right) if _is_primary(right) or isinstance(right, Pow) else f"({to_text(right)})"
        return f"{_term_text(node.left)}*{rtext}"
    if isinstance(node, Neg):
        return f"-{_term_text(node.arg)}"
    if isinstance(node, Add):
        out = []
        for k, t in enumerate(node.terms):
            if isinstance(t, Neg):
                out.append(("-" if k == 0 else " - ") + _term_text(t.arg))
            else:
                out.append(("" if k == 0 else " + ") + _term_text(t))
        return "".join(out)
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------

def _eval_i1(node) -> IOp:
    if isinstance(node, Num):
        return IOp.const(node.value)
    if isinstance(node, Sym):
        return {"H": H_OP, "D": DER, "Int": INT, "one": IOp.const(1), "x": generator("x")}[node.name]
    if isinstance(node, E):
        return generator("e", node.i, node.j)
    if isinstance(node, Add):
        acc = IOp()
        for t in node.terms:
            acc = acc + _eval_i1(t)
        return acc
    if isinstance(node, Neg):
        return -_eval_i1(node.arg)
    if isinstance(node, Mul):
        return mul(_eval_i1(node.left), _eval_i1(node.right))
    if isinstance(node, Pow):
        return power(_eval_i1(node.base), node.exp)
    if isinstance(node, Comm):
        return commutator(_eval_i1(node.left), _eval_i1(node.right))
    raise TypeError(f"not an expression node: {node!r}")


_B1_SYMBOLS = {
    "H": B1Elem.H(),
    "D": B1Elem.der(1),
    "Dinv": B1Elem.der(-1),
    "Int": B1Elem.der(-1),
    "one": B1Elem.const(1),
    "x": B1Elem({-1: HPoly((-1, 1))}),  # image of x = Int*H = (H-1)*Int
}


def _eval_b1(node) -> B1Elem:
    if isinstance(node, Num):
        return B1Elem.const(node.value)
    if isinstance(node, Sym):
        return _B1_SYMBOLS[node.name]
    if isinstance(node, Add):
        acc = B1Elem()
        for t in node.terms:
            acc = acc + _eval_b1(t)
        return acc
    if isinstance(node, Neg):
        return -_eval_b1(node.arg)
    if isinstance(node, Mul):
        return _eval_b1(node.left) * _eval_b1(node.right)
    if isinstance(node, Pow):
        base = _eval_b1(node.base)
        acc = B1Elem.const(1)
        for _ in range(node.exp):
            acc = acc * base
        return acc
    if isinstance(node, Comm):
        a, b = _eval_b1(node.left), _eval_b1(node.right)
        return a * b - b * a
    raise DialectError(f"{node!r} is not an element of B1")


def _eval_poly(node) -> HPoly:
    # commutative polynomial in x; HPoly serves as a generic univariate type
    if isinstance(node, Num):
        return HPoly.const(node.value)
    if isinstance(node, Sym):
        return HPoly((0, 1))
    if isinstance(node, Add):
        acc = HPoly()
        for t in node.terms:
            acc = acc + _eval_poly(t)
        return acc
    if isinstance(node, Neg):
        return -_eval_poly(node.arg)
    if isinstance(node, Mul):
        return _eval_poly(node.left) * _eval_poly(node.right)
    if isinstance(node, Pow):
        base = _eval_poly(node.base)
        acc = HPoly.const(1)
        for _ in range(node.exp):
            acc = acc * base
        return acc
    raise DialectError(f"{node!r} is not a polynomial in x")


def eval_ast(node, dialect: str = "I1"):
    if dialect == "I1":
        return _eval_i1(node)
    if dialect == "B1":
        return _eval_b1(node)
    if dialect == "poly":
        return _eval_poly(node)
    raise ValueError(f"unknown dialect {dialect!r}")


def evaluate(text: str, dialect: str = "I1"):
    return eval_ast(parse(text, dialect), dialect)


def parse_poly(text: str) -> list:
    """Monomial-basis coefficients of a polynomial written in x."""
    return list(evaluate(text, "poly").coeffs)


# -- canonical text for kernel values ----------------------------------------

def _hpoly_terms(p: HPoly, var: str = "H"):
    # (sign, magnitude text) pairs, highest degree first
    out = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if not mono:
            text = scalar_str(mag)
        elif mag == 1:
            text = mono
        else:
            text = f"{scalar_str(mag)}*{mono}"
        out.append((c < 0, text))
    return out


def _join(terms) -> str:
    if not terms:
        return "0"
    out = []
    for k, (negative, text) in enumerate(terms):
        if k == 0:
            out.append(("-" if negative else "") + text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)


def _coeff_times(p: HPoly, word: str):
    terms = _hpoly_terms(p)
    if len(terms) == 1:
        negative, text = terms[0]
        if text == "1":
            return [(negative, word)]
        return [(negative, f"{text}*{word}")]
    return [(False, f"({_join(terms)})*{word}")]


def format_iop(a: IOp) -> str:
    """Parseable text whose evaluation is ``a``."""
    terms = []
    for i, p in sorted(a.towers.items(), reverse=True):
        if i == 0:
            terms.extend(_hpoly_terms(p))
            continue
        word = "Int" if i == 1 else ("D" if i == -1 else (f"Int^{i}" if i > 0 else f"D^{-i}"))
        terms.extend(_coeff_times(p, word))
    for (k, l), c in a.fpart.entries.items():
        mag = abs(c)
        word = f"e({k},{l})"
        terms.append((c < 0, word if mag == 1 else f"{scalar_str(mag)}*{word}"))
    return _join(terms)


def format_b1(b: B1Elem) -> str:
    terms = []
    for k, p in sorted(b.components.items(), reverse=True):
        if k == 0:
            terms.extend(_hpoly_terms(p))
            continue
        word = "D" if k == 1 else ("Dinv" if k == -1 else (f"D^{k}" if k > 0 else f"Dinv^{-k}"))
        terms.extend(_coeff_times(p, word))
    return _join(terms)
