"""Exact Laurent polynomials in ``t`` with integer coefficients.

A :class:`LaurentPoly` is an immutable sparse map ``exponent -> coefficient``
kept in canonical form (no zero coefficients), so ``==`` decides equality in
``Z[t, t^-1]``.  Coefficients are Python ints and therefore unbounded.

>>> t = LaurentPoly.t()
>>> (t + t**-1) * (t - t**-1)
LaurentPoly('t^2 - t^-2')
"""

from __future__ import annotations

import cmath
from typing import Iterable, Mapping, Union

from .errors import NotAUnit, ZeroEvaluationPoint

__all__ = [
    "LaurentPoly",
    "lp_arith",
    "lp_div_unit",
    "lp_eval",
    "quantum_int",
    "delta",
    "LOOP",
    "KINK",
    "root_of_unity",
]

Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[int, int] = {}
        for e, c in items:
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # Caller guarantees canonical form.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls._raw({1: 1})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls._raw({0: x} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            c += out.get(e, 0)
            if c:
                out[e] = c
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> LaurentPoly:
        return self

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(b) == 1:
            (f, d), = b.items()
            return LaurentPoly._raw({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            (e, c), = a.items()
            return LaurentPoly._raw({f + e: d * c for f, d in b.items()})
        out: dict[int, int] = {}
        for e, c in a.items():
            for f, d in b.items():
                k = e + f
                out[k] = out.get(k, 0) + c * d
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NotAUnit(f"negative power of non-unit {self}")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({e * n: c ** (-n)})
        result = LaurentPoly._raw({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """The involution ``t -> t^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def div_unit(self, u: LaurentPoly) -> LaurentPoly:
        if not isinstance(u, LaurentPoly) or not u.is_unit():
            raise NotAUnit(f"{u} is not a unit of Z[t, t^-1]")
        (e, c), = u._terms.items()
        return LaurentPoly._raw({k - e: v * c for k, v in self._terms.items()})

    def evaluate(self, z: complex) -> complex:
        if z == 0:
            raise ZeroEvaluationPoint("cannot evaluate a Laurent polynomial at 0")
        z = complex(z)
        return sum((c * z**e for e, c in self._terms.items()), 0j)

    # -- comparison & display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in data)


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def lp_div_unit(a: LaurentPoly, u: LaurentPoly) -> LaurentPoly:
    return a.div_unit(u)


def lp_eval(a: LaurentPoly, z: complex) -> complex:
    return a.evaluate(z)


def quantum_int(n: int) -> LaurentPoly:
    """``[n] = (t^2n - t^-2n) / (t^2 - t^-2)``, expanded exactly.

    >>> quantum_int(3)
    LaurentPoly('t^4 + 1 + t^-4')
    """
    if n < 0:
        raise ValueError("quantum_int expects n >= 0")
    return LaurentPoly._raw({2 * n - 2 - 4 * j: 1 for j in range(n)})


def delta(k: int) -> LaurentPoly:
    """Loop value of the k-th Jones-Wenzl idempotent, ``(-1)^k [k+1]``."""
    if k < 0:
        raise ValueError("delta expects k >= 0")
    q = quantum_int(k + 1)
    return -q if k % 2 else q


def root_of_unity(r: int) -> complex:
    """The evaluation point ``exp(i*pi/(2r))``."""
    return cmath.exp(1j * cmath.pi / (2 * r))


# value of a trivial 0-framed loop and of a positive kink
LOOP = LaurentPoly({2: -1, -2: -1})
KINK = LaurentPoly({-3: -1})
