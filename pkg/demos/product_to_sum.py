"""Multiplying curves on the torus."""

from skeintorus import T, format_element, sk_embed, sk_mul, trig_eval, nt_mul

a, b = T(1, 0), T(0, 1)
ab = sk_mul(a, b)
print("(1,0) * (0,1)   =", format_element(ab))
print("(0,1) * (1,0)   =", format_element(sk_mul(b, a)))  # t <-> t^-1, not commutative

# (1,0)_T squared: the empty skein carries T_0 = 2
print("(1,0)^2         =", format_element(sk_mul(a, a)))

# same product inside the noncommutative torus
print("embedded        =", format_element(sk_embed(ab)))
assert sk_embed(ab) == nt_mul(sk_embed(a), sk_embed(b))

# t = 1 is the classical limit: 2cos A * 2cos B = 2cos(A+B) + 2cos(A-B)
x, y = 0.13, 0.71
print("trig check      =", trig_eval(ab, x, y), "vs", trig_eval(a, x, y) * trig_eval(b, x, y))

# a non-primitive class and its multicurve
c = sk_mul(T(2, 1), T(4, 2))
print("(2,1) * (4,2)   =", format_element(c))
