"""The Kauffman bracket skein algebra of the torus in the ``(p,q)_T`` basis.

``(p,q)_T`` is the Chebyshev polynomial ``T_gcd(p,q)`` evaluated at the
primitive curve ``(p/g, q/g)``.  Curves are unoriented, so ``(p,q)_T`` and
``(-p,-q)_T`` coincide; a class is stored under its normal key with ``p > 0``
or ``p == 0, q > 0``.  The key ``(0, 0)`` is reserved for the empty skein,
the unit of the algebra.  A raw ``(0,0)_T`` is ``T_0 = 2`` times the empty
skein and is folded in on construction.

Multiplication is the product-to-sum rule

    (p,q)_T * (r,s)_T = t^D (p+r, q+s)_T + t^-D (p-r, q-s)_T,   D = ps - qr.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from .chebyshev import power_to_T
from .errors import NotPrimitive, NotSymmetric
from .laurent import LaurentPoly
from .nc_torus import NTElement, nt_is_symmetric

__all__ = [
    "EMPTY",
    "SkeinElement",
    "normalize_curve",
    "curve_class",
    "T",
    "empty",
    "sk_mul",
    "sk_embed",
    "sk_unembed",
    "multicurve_to_T",
    "intersection_number",
    "trig_eval",
]

EMPTY = (0, 0)


def normalize_curve(p: int, q: int) -> tuple[tuple[int, int], int]:
    """Return ``(key, factor)`` with ``(p,q)_T == factor * basis[key]``."""
    if p == 0 and q == 0:
        return EMPTY, 2
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q), 1
    return (p, q), 1


class SkeinElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly] | Iterable = ()):
        # keys are taken as already-normal class keys, (0, 0) meaning Empty
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[tuple[int, int], LaurentPoly] = {}
        for key, c in items:
            key = (int(key[0]), int(key[1]))
            if key != EMPTY and normalize_curve(*key) != (key, 1):
                raise ValueError(f"{key} is not a normalised curve key")
            c = LaurentPoly.coerce(c)
            if key in out:
                c = out[key] + c
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict) -> SkeinElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def one(cls) -> SkeinElement:
        return cls._raw({EMPTY: LaurentPoly.coerce(1)})

    @property
    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    def items(self):
        """Terms in display order: the empty skein first, then by (p, q)."""
        return sorted(self._terms.items())

    def coeff(self, p: int, q: int) -> LaurentPoly:
        key, factor = normalize_curve(p, q)
        if factor != 1:
            return self._terms.get(EMPTY, LaurentPoly())
        return self._terms.get(key, LaurentPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @staticmethod
    def _lift(x) -> SkeinElement | None:
        if isinstance(x, SkeinElement):
            return x
        if isinstance(x, (int, LaurentPoly)):
            return SkeinElement({EMPTY: x})
        return None

    def _accumulate(self, other: SkeinElement, sign: int) -> SkeinElement:
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
        return SkeinElement._raw(out)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._accumulate(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._accumulate(other, -1)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return SkeinElement._raw({k: -c for k, c in self._terms.items()})

    def scale(self, c) -> SkeinElement:
        c = LaurentPoly.coerce(c)
        if not c:
            return SkeinElement()
        return SkeinElement._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return sk_mul(self, other)

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
            return "SkeinElement(0)"
        parts = []
        for k, c in self.items():
            atom = "1" if k == EMPTY else f"T{k}"
            parts.append(f"({c})*{atom}")
        return f"SkeinElement({' + '.join(parts)})"


def curve_class(p: int, q: int, c=1) -> SkeinElement:
    """``c * (p,q)_T`` in normal form.

    >>> curve_class(-1, 2)
    SkeinElement((1)*T(1, -2))
    >>> curve_class(0, 0)
    SkeinElement((2)*1)
    """
    key, factor = normalize_curve(p, q)
    return SkeinElement({key: LaurentPoly.coerce(c) * factor})


T = curve_class


def empty(c=1) -> SkeinElement:
    return SkeinElement({EMPTY: c})


def _add_into(acc: dict, key, c: LaurentPoly) -> None:
    if key in acc:
        acc[key] = acc[key] + c
    else:
        acc[key] = c


def sk_mul(A: SkeinElement, B: SkeinElement) -> SkeinElement:
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (p, q), a in A._terms.items():
        for (r, s), b in B._terms.items():
            ab = a * b
            if (p, q) == EMPTY:
                _add_into(acc, (r, s), ab)
                continue
            if (r, s) == EMPTY:
                _add_into(acc, (p, q), ab)
                continue
            D = p * s - q * r
            k1, f1 = normalize_curve(p + r, q + s)
            k2, f2 = normalize_curve(p - r, q - s)
            _add_into(acc, k1, ab.shift(D) * f1)
            _add_into(acc, k2, ab.shift(-D) * f2)
    return SkeinElement._raw({k: c for k, c in acc.items() if c})


def sk_embed(A: SkeinElement) -> NTElement:
    out = []
    for (p, q), c in A._terms.items():
        if (p, q) == EMPTY:
            out.append(((0, 0), c))
        else:
            out.append(((p, q), c))
            out.append(((-p, -q), c))
    return NTElement(out)


def sk_unembed(N: NTElement) -> SkeinElement:
    if not nt_is_symmetric(N):
        raise NotSymmetric("element is not fixed by the involution e(p,q) -> e(-p,-q)")
    out = {}
    for (p, q), c in N.items():
        if (p, q) == (0, 0):
            out[EMPTY] = c
        elif p > 0 or (p == 0 and q > 0):
            out[(p, q)] = c
    return SkeinElement._raw(out)


def multicurve_to_T(d: int, p: int, q: int) -> SkeinElement:
    """``d`` parallel copies of the primitive curve ``(p,q)`` in the T basis.

    >>> multicurve_to_T(3, 1, 1)
    SkeinElement((3)*T(1, 1) + (1)*T(3, 3))
    """
    if math.gcd(p, q) != 1:
        raise NotPrimitive(f"({p},{q}) is not a primitive curve")
    if d < 1:
        raise ValueError("multicurve_to_T expects d >= 1")
    out = SkeinElement()
    for k, c in power_to_T(d).items():
        out = out + curve_class(k * p, k * q, int(c))
    return out


def intersection_number(A: SkeinElement, B: SkeinElement) -> int:
    """Largest geometric intersection number between terms of ``A`` and ``B``.

    For ``(P,Q)_T`` and ``(R,S)_T`` this is ``|PS - QR|``, which equals
    ``m n |p's' - q'r'|`` for the primitive decompositions.  The empty skein
    meets nothing.
    """
    best = 0
    for (p, q) in A._terms:
        for (r, s) in B._terms:
            best = max(best, abs(p * s - q * r))
    return best


def trig_eval(A: SkeinElement, x: float, y: float, t: complex = 1.0) -> complex:
    """Evaluate ``A`` with ``(p,q)_T -> 2 cos(2π(px + qy))`` and ``1 -> 1``.

    At ``t = 1`` this is the classical character map, so it turns
    :func:`sk_mul` into a pointwise product.
    """
    total = 0j
    for (p, q), c in A._terms.items():
        val = c.evaluate(t)
        if (p, q) == EMPTY:
            total += val
        else:
            total += val * 2.0 * math.cos(2.0 * math.pi * (p * x + q * y))
    return total
