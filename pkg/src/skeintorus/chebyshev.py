"""Chebyshev polynomials normalised with ``T_0 = 2``, ``T_1 = x``.

With this normalisation ``T_n(2 cos θ) = 2 cos(nθ)`` and
``T_m T_n = T_{m+n} + T_{|m-n|}``.  Polynomials in ``x`` are plain lists of
ints indexed by degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = ["cheb_T", "power_to_T", "cheb_eval_trig", "poly_mul", "poly_add", "poly_trim", "T_to_power"]

IntPolynomial = list


def poly_trim(c: list[int]) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a, b) -> list[int]:
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


@lru_cache(maxsize=None)
def _cheb(n: int) -> tuple[int, ...]:
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    prev, cur = _cheb(n - 2), _cheb(n - 1)
    nxt = [0] + list(cur)
    for i, c in enumerate(prev):
        nxt[i] -= c
    return tuple(nxt)


def cheb_T(n: int) -> IntPolynomial:
    """Coefficient list of ``T_n`` (index = power of x).

    >>> cheb_T(3)
    [0, -3, 0, 1]
    """
    if n < 0:
        raise ValueError("cheb_T expects n >= 0")
    if n > 2:
        _cheb(n - 2)  # warm the cache bottom-up, keeps recursion shallow
    return list(_cheb(n))


def power_to_T(n: int) -> dict[int, int]:
    """Coefficients ``c_k`` with ``x^n = sum_k c_k T_k``.

    Writing ``x = z + 1/z`` gives ``c_k = C(n, (n-k)/2)`` for ``k > 0``; the
    constant ``C(n, n/2)`` is carried by ``T_0 = 2``, so ``c_0`` is half of it.
    That half is an integer for every ``n >= 1``; for ``n = 0`` the only
    solution is ``c_0 = 1/2``, returned as a :class:`~fractions.Fraction`.

    >>> power_to_T(3)
    {3: 1, 1: 3}
    """
    if n < 0:
        raise ValueError("power_to_T expects n >= 0")
    if n == 0:
        return {0: Fraction(1, 2)}
    out = {}
    for j in range(n // 2 + 1):
        k = n - 2 * j
        c = math.comb(n, j)
        if k == 0:
            assert c % 2 == 0
            c //= 2
        out[k] = c
    return out


def T_to_power(coeffs: dict[int, int]) -> list:
    """Expand ``sum_k c_k T_k`` back into the monomial basis."""
    total: list = []
    for k, c in coeffs.items():
        total = poly_add(total, [c * a for a in cheb_T(k)])
    return total


def cheb_eval_trig(n: int, theta: float) -> float:
    """Evaluate ``T_n`` at ``x = 2 cos(theta)``.

    Uses the three-term recurrence; Horner on the monomial coefficients
    cancels catastrophically for ``n`` in the thirties.
    """
    if n < 0:
        raise ValueError("cheb_eval_trig expects n >= 0")
    x = 2.0 * math.cos(theta)
    prev, cur = 2.0, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur
