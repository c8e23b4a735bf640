"""Skein modules of lens spaces.

``L(p,q)`` is glued from two solid tori along the matrix with columns
``(a,b)`` and ``(p,q)`` and determinant ``aq - bp = -1``; the curve ``(m,n)``
on the first boundary becomes ``(am + pn, bm + qn)`` on the second.  Every
element ``1 (x) u`` is reduced to the span ``V`` of ``1 (x) alpha^k`` with
``k <= p // 2``.

Notation: ``X(m, k)`` is the class of ``1 (x) x(ma + kp, mb + kq)``.  The
reduction uses

* ``X(0, k) = (-t^2)^k + (-t^-2)^k`` (the curve is a meridian of the first
  torus, taken ``k`` times through ``T_k``);
* ``X(1, k) = c_k * x(a, b)`` with ``c_k`` from :func:`lens_c`;
* for ``m >= 2`` the product-to-sum rule applied to the splitting
  ``u = (a,b) + (k-k0)(p,q)``, ``v = (m-1)(a,b) + k0 (p,q)`` with
  ``det(u, v) = D = (m-1)(k-k0) - k0``:

      X(m,k) = t^-D c_{k-k0} (t^-k0 X(m,k0) + t^k0 X(m-2,k0)) - t^-2D X(m-2, 2k0-k)

  where ``k0`` makes ``|ma + k0 p| <= p // 2`` so ``X(m, k0)`` lies in ``V``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadDeterminant, NoDecomposition
from .laurent import LaurentPoly
from .solid_torus import SolidTorusElement, alpha_power, st_x

__all__ = [
    "GluingMatrix",
    "LensElement",
    "lens_normalize",
    "lens_c",
    "lens_x_in_V",
    "lens_reduce",
    "lens_reduce_monomial",
]

_ZERO = LaurentPoly()
_LOOP_T = LaurentPoly({2: -1, -2: -1})


@dataclass(frozen=True)
class GluingMatrix:
    a: int
    b: int
    p: int
    q: int

    @property
    def det(self) -> int:
        return self.a * self.q - self.b * self.p

    def check(self) -> GluingMatrix:
        if self.det != -1:
            raise BadDeterminant(f"gluing matrix {self} has determinant {self.det}, expected -1")
        return self

    @property
    def span_size(self) -> int:
        return abs(self.p) // 2 + 1

    def __str__(self):
        return f"{self.a},{self.b},{self.p},{self.q}"

    @classmethod
    def parse(cls, text: str) -> GluingMatrix:
        parts = [int(s) for s in text.split(",")]
        if len(parts) != 4:
            raise ValueError("gluing matrix needs four integers a,b,p,q")
        return cls(*parts)


@dataclass(frozen=True)
class LensElement:
    """``sum_k coeffs[k] * (1 (x) alpha^k)`` for ``k = 0 .. p // 2``."""

    matrix: GluingMatrix
    coeffs: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.matrix.span_size:
            raise ValueError("coefficient vector must have length p // 2 + 1")

    def as_solid(self) -> SolidTorusElement:
        return SolidTorusElement(self.coeffs)

    def is_scalar(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def __add__(self, other: LensElement) -> LensElement:
        if self.matrix != other.matrix:
            raise ValueError("cannot add elements of different lens spaces")
        return LensElement(self.matrix, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        terms = [f"({c}) * (1 (x) a^{k})" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def lens_normalize(M: GluingMatrix) -> GluingMatrix:
    """Column-reduce ``(a,b)`` by multiples of ``(p,q)`` until ``|a| <= p/2``.

    A negative ``p`` is fixed by negating both columns (curves are
    unoriented).  Ties at ``|a| = p/2`` go to ``a >= 0``.
    """
    M.check()
    a, b, p, q = M.a, M.b, M.p, M.q
    if p == 0:
        raise BadDeterminant("p = 0 (S^2 x S^1) has no finite spanning set of this form")
    if p < 0:
        a, b, p, q = -a, -b, -p, -q
    r = a % p
    if 2 * r > p:
        r -= p
    k = (r - a) // p
    return GluingMatrix(r, b + k * q, p, q)


def lens_c(M: GluingMatrix, k: int) -> LaurentPoly:
    """Scalar ``c_k`` with ``1 (x) ((a+kp, b+kq) . u) = c_k (1 (x) ((a,b) . u))``.

    Runs ``c_k = t^d (-t^2 - t^-2) c_{k-1} - t^2d c_{k-2}`` (``d = aq - bp``)
    from ``c_0 = 1``, ``c_1 = -t^-3`` in whichever direction ``k`` lies.
    """
    d = M.check().det
    prev, cur = LaurentPoly.coerce(1), LaurentPoly.monomial(-3, -1)
    if k == 0:
        return prev
    if k > 0:
        for _ in range(k - 1):
            prev, cur = cur, (_LOOP_T * cur).shift(d) - prev.shift(2 * d)
        return cur
    # backwards: c_{k-2} = t^-2d (t^d L c_{k-1} - c_k)
    nxt, cur = cur, prev
    for _ in range(-k):
        nxt, cur = cur, ((_LOOP_T * cur).shift(d) - nxt).shift(-2 * d)
    return cur


class _Reducer:
    """Memo tables for one reduction; not shared between calls."""

    def __init__(self, M: GluingMatrix):
        self.M = M
        self.h = M.p // 2
        self._x: dict[tuple[int, int], tuple] = {}
        self._mono: dict[int, tuple] = {}
        self._c: dict[int, LaurentPoly] = {}

    def c(self, k: int) -> LaurentPoly:
        if k not in self._c:
            self._c[k] = lens_c(self.M, k)
        return self._c[k]

    def embed(self, u: SolidTorusElement) -> list:
        if u.degree() > self.h:
            raise AssertionError("polynomial is not inside the spanning set")
        return [u[i] for i in range(self.h + 1)]

    def k0(self, m: int) -> int:
        a, p = self.M.a, self.M.p
        r = (m * a) % p
        if 2 * r > p:
            r -= p
        return (r - m * a) // p

    def x_in_V(self, m: int, k: int) -> list:
        key = (m, k)
        if key in self._x:
            return list(self._x[key])
        a, b, p, q = self.M.a, self.M.b, self.M.p, self.M.q
        N = m * a + k * p
        if m == 0:
            sign = -1 if k % 2 else 1
            val = LaurentPoly.monomial(2 * k, sign) + LaurentPoly.monomial(-2 * k, sign)
            out = [val] + [_ZERO] * self.h
        elif m == 1:
            ck = self.c(k)
            out = [c * ck for c in self.embed(st_x(a, b))]
        elif abs(N) <= self.h:
            out = self.embed(st_x(N, m * b + k * q))
        else:
            k0 = self.k0(m)
            D = (m - 1) * (k - k0) - k0
            ck = self.c(k - k0)
            top = self.x_in_V(m, k0)
            mid = self.x_in_V(m - 2, k0)
            low = self.x_in_V(m - 2, 2 * k0 - k)
            out = [
                (ck * (x.shift(-k0) + y.shift(k0))).shift(-D) - z.shift(-2 * D)
                for x, y, z in zip(top, mid, low)
            ]
        self._x[key] = tuple(out)
        return out

    def decompose(self, N: int, m: int | None = None) -> tuple[int, int]:
        a, p = self.M.a, self.M.p
        if math.gcd(a, p) != 1:
            raise NoDecomposition(f"gcd({a},{p}) does not divide {N}")
        if m is None:
            m = 0 if p == 1 else (N * pow(a, -1, p)) % p
        if m < 0 or (N - m * a) % p:
            raise NoDecomposition(f"{N} is not {m}*{a} + k*{p}")
        return m, (N - m * a) // p

    def monomial(self, N: int, m: int | None = None) -> list:
        if N <= self.h:
            out = [_ZERO] * (self.h + 1)
            out[N] = LaurentPoly.coerce(1)
            return out
        if m is None and N in self._mono:
            return list(self._mono[N])
        m_, k = self.decompose(N, m)
        poly = st_x(N, m_ * self.M.b + k * self.M.q)
        lead = poly.leading()
        acc = self.x_in_V(m_, k)
        for n in range(N):
            c = poly[n]
            if c:
                acc = [x - c * y for x, y in zip(acc, self.monomial(n))]
        out = [x.div_unit(lead) for x in acc]
        if m is None:
            self._mono[N] = tuple(out)
        return out

    def reduce(self, u: SolidTorusElement) -> list:
        acc = [_ZERO] * (self.h + 1)
        for n, c in enumerate(u.coeffs):
            if c:
                acc = [x + c * y for x, y in zip(acc, self.monomial(n))]
        return acc


def lens_x_in_V(M: GluingMatrix, m: int, k: int) -> LensElement:
    """``1 (x) x(ma + kp, mb + kq)`` in the spanning set; needs ``|a| <= p/2``."""
    M.check()
    if M.p < 1 or 2 * abs(M.a) > M.p:
        raise ValueError("lens_x_in_V needs a normalised matrix (see lens_normalize)")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return LensElement(M, tuple(_Reducer(M).x_in_V(m, k)))


def lens_reduce(M: GluingMatrix, u: SolidTorusElement | int | LaurentPoly) -> LensElement:
    """Class of ``1 (x) u`` in ``K(L(p,q))`` over ``1 (x) alpha^k``, ``k <= p // 2``.

    >>> lens_reduce(GluingMatrix(0, 1, 1, 0), alpha_power(1))
    LensElement(matrix=GluingMatrix(a=0, b=1, p=1, q=0), coeffs=(LaurentPoly('-t^2 - t^-2'),))
    """
    M = lens_normalize(M)
    if not isinstance(u, SolidTorusElement):
        u = SolidTorusElement([u])
    return LensElement(M, tuple(_Reducer(M).reduce(u)))


def lens_reduce_monomial(M: GluingMatrix, N: int, m: int | None = None) -> LensElement:
    """Reduce ``1 (x) alpha^N`` using the decomposition ``N = m a + k p``.

    With ``m=None`` the smallest nonnegative ``m`` is used, as in
    :func:`lens_reduce`; other choices must give the same answer.
    """
    M = lens_normalize(M)
    return LensElement(M, tuple(_Reducer(M).monomial(N, m)))
