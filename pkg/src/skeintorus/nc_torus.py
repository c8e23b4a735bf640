"""Laurent polynomials on the noncommutative torus.

Elements are finite combinations of basis vectors ``e(p,q)`` with Laurent
coefficients and product ``e(p,q) * e(r,s) = t^(ps - qr) e(p+r, q+s)``.
``e(0,0)`` is the unit.  :func:`nt_theta` is the involution
``e(p,q) -> e(-p,-q)``; its fixed points form the subalgebra that receives
the skein algebra of the torus.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import LaurentPoly

__all__ = ["NTElement", "e", "nt_mul", "nt_theta", "nt_is_symmetric"]

_ONE = LaurentPoly.coerce(1)


class NTElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[tuple[int, int], LaurentPoly] = {}
        for key, c in items:
            key = (int(key[0]), int(key[1]))
            c = LaurentPoly.coerce(c)
            if key in out:
                c = out[key] + c
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        self._terms = out

    @classmethod
    def basis(cls, p: int, q: int, coeff=1) -> NTElement:
        return cls({(p, q): coeff})

    @classmethod
    def one(cls) -> NTElement:
        return cls({(0, 0): 1})

    @property
    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, p: int, q: int) -> LaurentPoly:
        return self._terms.get((p, q), LaurentPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _combine(self, other: NTElement, sign: int) -> NTElement:
        out = dict(self._terms)
        for k, c in other._terms.items():
            if sign < 0:
                c = -c
            if k in out:
                c = out[k] + c
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        obj = NTElement.__new__(NTElement)
        obj._terms = out
        return obj

    @staticmethod
    def _lift(x) -> NTElement | None:
        if isinstance(x, NTElement):
            return x
        if isinstance(x, (int, LaurentPoly)):
            return NTElement({(0, 0): x})
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return NTElement({k: -c for k, c in self._terms.items()})

    def scale(self, c) -> NTElement:
        c = LaurentPoly.coerce(c)
        return NTElement({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, NTElement):
            return NotImplemented
        return nt_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "NTElement(0)"
        body = " + ".join(f"({c})*e{k}" for k, c in self.items())
        return f"NTElement({body})"


def e(p: int, q: int, coeff=1) -> NTElement:
    return NTElement.basis(p, q, coeff)


def nt_mul(A: NTElement, B: NTElement) -> NTElement:
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (p, q), a in A._terms.items():
        for (r, s), b in B._terms.items():
            c = (a * b).shift(p * s - q * r)
            key = (p + r, q + s)
            if key in acc:
                acc[key] = acc[key] + c
            else:
                acc[key] = c
    return NTElement(acc)


def nt_theta(A: NTElement) -> NTElement:
    return NTElement({(-p, -q): c for (p, q), c in A._terms.items()})


def nt_is_symmetric(A: NTElement) -> bool:
    return all(A._terms.get((-p, -q)) == c for (p, q), c in A._terms.items())
