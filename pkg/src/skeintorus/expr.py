"""Text grammar, evaluation, and normal-form printing for algebra elements.

Grammar (whitespace is insignificant)::

    expr    := term (("+" | "-") term)*
    term    := factor (["*"] factor)*          juxtaposition multiplies: 2t^-1
    factor  := ("-" | "+") factor | primary
    primary := INT | "t" ["^" ["-"] INT] | "(" expr ")" | atom
    atom    := "T(" p "," q ")" | "P(" d ";" p "," q ")" | "JW(" n ";" p "," q ")"
             | "e(" p "," q ")" | "a(" n ")" | "A(" n ")"

Every expression is parsed for a declared kind: ``skein`` (T, P, JW atoms),
``nc`` (e atoms) or ``solid`` (a = alpha^n, A = T_n(alpha)).  Scalars are
Laurent polynomials and promote to multiples of the unit.  The solid torus
module has no product, so two non-scalar solid factors cannot be multiplied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .laurent import LaurentPoly
from .lens import LensElement
from .nc_torus import NTElement
from .skein import EMPTY, SkeinElement, curve_class, multicurve_to_T
from .jones_wenzl import jw_expand
from .solid_torus import SolidTorusElement, alpha_T, alpha_power

__all__ = [
    "ParseError",
    "ExpressionSyntaxError",
    "KindMismatch",
    "Expression",
    "parse_element",
    "eval_expression",
    "parse_and_eval",
    "format_element",
    "to_json_data",
    "element_from_json",
    "KINDS",
]

KINDS = ("skein", "nc", "solid")

# atom name -> (kind, number of integer arguments, separator after first arg)
ATOMS = {
    "T": ("skein", 2, ","),
    "P": ("skein", 3, ";"),
    "JW": ("skein", 3, ";"),
    "e": ("nc", 2, ","),
    "a": ("solid", 1, None),
    "A": ("solid", 1, None),
}

Element = Union[SkeinElement, NTElement, SolidTorusElement]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (column {pos})")
        self.pos = pos


class ExpressionSyntaxError(ParseError):
    pass


class KindMismatch(ParseError):
    pass


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int
    scalar = True


@dataclass(frozen=True)
class TPow:
    exponent: int
    pos: int
    scalar = True


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple[int, ...]
    pos: int
    scalar = False


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int

    @property
    def scalar(self) -> bool:
        return self.operand.scalar


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int

    @property
    def scalar(self) -> bool:
        return self.left.scalar and self.right.scalar


@dataclass(frozen=True)
class Expression:
    root: object
    kind: str


# -- tokenizer & parser ------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(("int", m.group(1), col))
        elif m.group(2):
            tokens.append(("ident", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*^(),;":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", col)
            tokens.append(("op", ch, col))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, kind: str):
        if kind not in KINDS:
            raise ValueError(f"unknown element kind {kind!r}")
        self.tokens = _tokenize(text)
        self.i = 0
        self.kind = kind

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value or tok[0] == "int":
            raise ExpressionSyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self) -> Expression:
        root = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExpressionSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return Expression(root, self.kind)

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, pos = self.next()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.next()
            elif kind == "ident" or (kind == "op" and val == "("):
                pass
            else:
                return node
            right = self.factor()
            if self.kind == "solid" and not node.scalar and not right.scalar:
                raise KindMismatch("solid-torus elements cannot be multiplied together", pos)
            node = BinOp("*", node, right, pos)

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "op" and val in ("-", "+"):
            self.next()
            operand = self.factor()
            return Neg(operand, pos) if val == "-" else operand
        return self.primary()

    def signed_int(self) -> int:
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in ("-", "+"):
            sign = -1 if self.next()[1] == "-" else 1
        kind, val, pos = self.next()
        if kind != "int":
            raise ExpressionSyntaxError(f"expected an integer, found {val or 'end of input'!r}", pos)
        return sign * int(val)

    def primary(self):
        kind, val, pos = self.next()
        if kind == "int":
            return Num(int(val), pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "ident":
            if val == "t":
                if self.peek()[1] == "^" and self.peek()[0] == "op":
                    self.next()
                    return TPow(self.signed_int(), pos)
                return TPow(1, pos)
            if val in ATOMS:
                return self.atom(val, pos)
            raise ExpressionSyntaxError(f"unknown name {val!r}", pos)
        raise ExpressionSyntaxError(f"unexpected {val or 'end of input'!r}", pos)

    def atom(self, name: str, pos: int) -> Atom:
        atom_kind, nargs, sep = ATOMS[name]
        if atom_kind != self.kind:
            raise KindMismatch(f"{name}(...) is a {atom_kind} atom in a {self.kind} expression", pos)
        self.expect("(")
        args = [self.signed_int()]
        for i in range(1, nargs):
            self.expect(sep if i == 1 else ",")
            args.append(self.signed_int())
        self.expect(")")
        return Atom(name, tuple(args), pos)


def parse_element(text: str, kind: str) -> Expression:
    return _Parser(text, kind).parse()


# -- evaluation --------------------------------------------------------------


def _unit(kind: str, c: LaurentPoly) -> Element:
    if kind == "skein":
        return SkeinElement({EMPTY: c})
    if kind == "nc":
        return NTElement({(0, 0): c})
    return SolidTorusElement([c])


def _atom_value(node: Atom) -> Element:
    args = node.args
    if node.name == "T":
        return curve_class(*args)
    if node.name == "P":
        return multicurve_to_T(*args)
    if node.name == "JW":
        return jw_expand(*args)
    if node.name == "e":
        return NTElement.basis(*args)
    if args[0] < 0:
        raise ExpressionSyntaxError("degree must be nonnegative", node.pos)
    if node.name == "a":
        return alpha_power(args[0])
    return alpha_T(args[0])


def _eval(node):
    if isinstance(node, Num):
        return LaurentPoly.coerce(node.value)
    if isinstance(node, TPow):
        return LaurentPoly.monomial(node.exponent)
    if isinstance(node, Atom):
        return _atom_value(node)
    if isinstance(node, Neg):
        return -_eval(node.operand)
    left, right = _eval(node.left), _eval(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def eval_expression(E: Expression) -> Element:
    value = _eval(E.root)
    if isinstance(value, LaurentPoly):
        value = _unit(E.kind, value)
    return value


def parse_and_eval(text: str, kind: str) -> Element:
    return eval_expression(parse_element(text, kind))


# -- formatting --------------------------------------------------------------


def _numeric(c: LaurentPoly, z: complex) -> complex:
    v = c.evaluate(z)
    # round-off from roots of unity; relative to the coefficient size
    eps = 1e-12 * max(1.0, sum(abs(x) for _, x in c.items()))
    re = 0.0 if abs(v.real) < eps else v.real
    im = 0.0 if abs(v.imag) < eps else v.imag
    return complex(re, im)


def _coeff_text(c, z) -> str:
    if z is None:
        return str(c)
    v = _numeric(c, z)
    return f"{v.real:.12g}{v.imag:+.12g}i"


def _coeff_json(c, z):
    if z is None:
        return c.to_json()
    v = _numeric(c, z)
    return [v.real, v.imag]


def _term_text(c: LaurentPoly, atom: str | None, z) -> str:
    if atom is None:
        if z is None and c == 1:
            return "1"
        return f"({_coeff_text(c, z)})"
    if z is None and c == 1:
        return atom
    return f"({_coeff_text(c, z)})*{atom}"


def _terms(v) -> list[tuple[LaurentPoly, str | None]]:
    if isinstance(v, SkeinElement):
        return [(c, None if k == EMPTY else f"T({k[0]},{k[1]})") for k, c in v.items()]
    if isinstance(v, NTElement):
        return [(c, f"e({k[0]},{k[1]})") for k, c in v.items()]
    if isinstance(v, SolidTorusElement):
        return [(c, None if n == 0 else f"a({n})") for n, c in enumerate(v.coeffs) if c]
    if isinstance(v, LensElement):
        return [(c, f"(1 (x) a^{k})") for k, c in enumerate(v.coeffs) if c]
    raise TypeError(f"cannot format {type(v).__name__}")


def to_json_data(v, z: complex | None = None):
    """JSON-ready data; with ``z`` coefficients become ``[re, im]`` pairs."""
    if isinstance(v, LaurentPoly):
        return _coeff_json(v, z)
    if isinstance(v, (SkeinElement, NTElement)):
        return [{"p": k[0], "q": k[1], "coeff": _coeff_json(c, z)} for k, c in v.items()]
    if isinstance(v, SolidTorusElement):
        return [[n, _coeff_json(c, z)] for n, c in enumerate(v.coeffs) if c]
    if isinstance(v, LensElement):
        return [_coeff_json(c, z) for c in v.coeffs]
    if isinstance(v, int):
        return v
    raise TypeError(f"cannot serialise {type(v).__name__}")


def format_element(v, mode: str = "text", z: complex | None = None) -> str:
    """Deterministic text or JSON rendering; ``parse_element`` reads the text back."""
    import json

    if mode == "json":
        return json.dumps(to_json_data(v, z))
    if mode != "text":
        raise ValueError(f"unknown format {mode!r}")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, LaurentPoly):
        return _coeff_text(v, z)
    parts = [_term_text(c, atom, z) for c, atom in _terms(v)]
    return " + ".join(parts) if parts else "0"


def element_from_json(data, kind: str) -> Element:
    if kind == "solid":
        out = SolidTorusElement()
        for n, c in data:
            out = out + alpha_power(int(n), LaurentPoly.from_json(c))
        return out
    if kind == "nc":
        return NTElement(((int(d["p"]), int(d["q"])), LaurentPoly.from_json(d["coeff"])) for d in data)
    if kind == "skein":
        out = SkeinElement()
        for d in data:
            p, q, c = int(d["p"]), int(d["q"]), LaurentPoly.from_json(d["coeff"])
            out = out + (SkeinElement({EMPTY: c}) if (p, q) == (0, 0) else curve_class(p, q, c))
        return out
    raise ValueError(f"unknown element kind {kind!r}")
