"""Jones-Wenzl idempotents placed on torus curves.

``JW(n; p, q)`` is ``n`` parallel copies of the primitive ``(p,q)`` curve
decorated with the n-th Jones-Wenzl idempotent.  These satisfy the Chebyshev
recurrence ``JW(n) = (p,q) * JW(n-1) - JW(n-2)`` with ``JW(0) = 1``, so they
telescope to ``(np,nq)_T + ((n-2)p,(n-2)q)_T + ...``, ending in the empty
skein (not ``T_0 = 2``) when ``n`` is even.
"""

from __future__ import annotations

import math

from .errors import IdempotentUndefined, NotPrimitive
from .laurent import LaurentPoly, quantum_int, root_of_unity
from .skein import EMPTY, SkeinElement, curve_class, empty, sk_mul

__all__ = [
    "jw_expand",
    "jw_via_recurrence",
    "jw_trace",
    "jw_trace_via_expansion",
    "jw_evaluate",
    "check_idempotent_defined",
]


def _check_primitive(p: int, q: int) -> None:
    if math.gcd(p, q) != 1:
        raise NotPrimitive(f"({p},{q}) is not a primitive curve")


def jw_expand(n: int, p: int, q: int) -> SkeinElement:
    """Closed form of ``JW(n; p, q)`` in the ``(p,q)_T`` basis.

    >>> jw_expand(2, 1, 0)
    SkeinElement((1)*1 + (1)*T(2, 0))
    """
    _check_primitive(p, q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = SkeinElement()
    for j in range(n // 2 + 1):
        m = n - 2 * j
        out = out + (curve_class(m * p, m * q) if m else empty())
    return out


def jw_via_recurrence(n: int, p: int, q: int) -> SkeinElement:
    _check_primitive(p, q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    curve = curve_class(p, q)
    prev, cur = empty(), curve
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, sk_mul(curve, cur) - prev
    return cur


def jw_trace(n: int) -> LaurentPoly:
    """``(-1)^n [n+1]``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = quantum_int(n + 1)
    return -q if n % 2 else q


def jw_trace_via_expansion(n: int, p: int, q: int) -> LaurentPoly:
    """Substitute ``(kp,kq)_T -> (-t^2)^k + (-t^-2)^k`` and ``1 -> 1`` in the expansion."""
    total = LaurentPoly()
    for (a, b), c in jw_expand(n, p, q).terms.items():
        if (a, b) == EMPTY:
            total = total + c
            continue
        k = math.gcd(a, b)
        sign = -1 if k % 2 else 1
        total = total + c * LaurentPoly({2 * k: sign, -2 * k: sign})
    return total


def check_idempotent_defined(n: int, r: int) -> None:
    if r < 2:
        raise ValueError("root-of-unity order r must be at least 2")
    if not 0 <= n <= r - 2:
        raise IdempotentUndefined(f"f^({n}) is not defined at t = exp(i*pi/{2 * r}); need 0 <= n <= {r - 2}")


def jw_evaluate(n: int, p: int, q: int, r: int) -> dict[tuple[int, int], complex]:
    """Coefficients of :func:`jw_expand` evaluated at ``t = exp(i pi / 2r)``."""
    check_idempotent_defined(n, r)
    z = root_of_unity(r)
    return {k: c.evaluate(z) for k, c in jw_expand(n, p, q).items()}
