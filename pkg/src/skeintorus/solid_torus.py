"""The skein module of the solid torus as a quotient of the torus algebra.

The module is the polynomial ring in the core curve ``alpha``.  The
meridian ``(0,1)`` bounds a disk and the longitude ``(1,0)`` is the core, so
the quotient map sends ``(p,q)_T`` to a polynomial ``x(p,q)`` of degree
``|p|`` built from

    x(p+1, q) = t^-q * alpha * x(p, q) - t^-2q * x(p-1, q)
    x(0, q)   = (-t^2)^q + (-t^-2)^q
    x(1, q)   = (-t^-3)^q * alpha

and ``x(p, q) = x(-p, -q)``.  ``x(1, 1) = -t^-3 alpha`` is the framing
relation of a curve with one negative twist.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .chebyshev import cheb_T
from .laurent import LaurentPoly
from .skein import EMPTY, SkeinElement, empty, multicurve_to_T, sk_mul

__all__ = [
    "SolidTorusElement",
    "alpha_power",
    "alpha_T",
    "st_x",
    "st_pi",
    "st_lift",
    "st_act",
    "st_ideal_member",
    "IDEAL_GENERATORS",
]

_ZERO = LaurentPoly()
_ONE = LaurentPoly.coerce(1)


class SolidTorusElement:
    """A polynomial in ``alpha`` with Laurent coefficients, dense by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [LaurentPoly.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[LaurentPoly, ...]:
        return self._coeffs

    def degree(self) -> int:
        return len(self._coeffs) - 1

    def leading(self) -> LaurentPoly:
        return self._coeffs[-1] if self._coeffs else _ZERO

    def __getitem__(self, n: int) -> LaurentPoly:
        return self._coeffs[n] if 0 <= n < len(self._coeffs) else _ZERO

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    @staticmethod
    def _lift(x):
        if isinstance(x, SolidTorusElement):
            return x
        if isinstance(x, (int, LaurentPoly)):
            return SolidTorusElement([x])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self), len(other))
        return SolidTorusElement(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return SolidTorusElement(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> SolidTorusElement:
        c = LaurentPoly.coerce(c)
        return SolidTorusElement(a * c for a in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def times_alpha(self) -> SolidTorusElement:
        if not self._coeffs:
            return self
        return SolidTorusElement((_ZERO,) + self._coeffs)

    def shift(self, k: int) -> SolidTorusElement:
        """Multiply every coefficient by ``t**k``."""
        return SolidTorusElement(c.shift(k) for c in self._coeffs)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        if not self._coeffs:
            return "SolidTorusElement(0)"
        parts = [f"({c})*a^{n}" for n, c in enumerate(self._coeffs) if c]
        return f"SolidTorusElement({' + '.join(parts)})"


def alpha_power(n: int, c=1) -> SolidTorusElement:
    return SolidTorusElement([0] * n + [c])


def alpha_T(n: int) -> SolidTorusElement:
    """``alpha_n = T_n(alpha)``."""
    return SolidTorusElement(cheb_T(n))


@lru_cache(maxsize=None)
def _y(p: int, q: int) -> SolidTorusElement:
    # p >= 0; x(p,q) = t^(-pq) y(p,q) turns the shifted recurrence into a
    # plain Chebyshev one.
    sign = -1 if q % 2 else 1
    if p == 0:
        return SolidTorusElement([LaurentPoly.monomial(2 * q, sign) + LaurentPoly.monomial(-2 * q, sign)])
    if p == 1:
        return alpha_power(1, LaurentPoly.monomial(-2 * q, sign))
    return _y(p - 1, q).times_alpha() - _y(p - 2, q)


def st_x(p: int, q: int) -> SolidTorusElement:
    """Image of ``(p,q)_T`` in the solid torus.

    >>> st_x(1, 1)
    SolidTorusElement((-t^-3)*a^1)
    """
    if p < 0:
        p, q = -p, -q
    for k in range(2, p, 64):  # fill the cache in strides, bounding recursion depth
        _y(k, q)
    return _y(p, q).shift(-p * q)


def st_pi(A: SkeinElement) -> SolidTorusElement:
    out = SolidTorusElement()
    for (p, q), c in A.terms.items():
        if (p, q) == EMPTY:
            out = out + SolidTorusElement([c])
        else:
            out = out + st_x(p, q).scale(c)
    return out


def st_lift(u: SolidTorusElement) -> SkeinElement:
    """A preimage of ``u`` under :func:`st_pi`: ``alpha^n`` -> n parallel cores."""
    out = SkeinElement()
    for n, c in enumerate(u.coeffs):
        if not c:
            continue
        piece = empty() if n == 0 else multicurve_to_T(n, 1, 0)
        out = out + piece.scale(c)
    return out


def st_act(A: SkeinElement, u: SolidTorusElement) -> SolidTorusElement:
    """Left action of the torus algebra, ``A . u = pi(A * lift(u))``."""
    return st_pi(sk_mul(A, st_lift(u)))


def st_ideal_member(A: SkeinElement) -> bool:
    return st_pi(A).is_zero()


def _generators() -> tuple[SkeinElement, SkeinElement]:
    from .skein import curve_class

    g1 = curve_class(0, 1) + LaurentPoly({2: 1, -2: 1})
    g2 = curve_class(1, 1) + curve_class(1, 0, LaurentPoly.monomial(-3))
    return g1, g2


# (0,1) + t^2 + t^-2  and  (1,1) + t^-3 (1,0)
IDEAL_GENERATORS = _generators()
