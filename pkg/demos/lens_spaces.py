"""Reducing solid torus elements in lens spaces."""

from skeintorus import GluingMatrix, alpha_power, format_element, lens_normalize, lens_reduce

# S^3: every alpha^n collapses to a scalar, the bracket of an n-component unlink
S3 = GluingMatrix(0, 1, 1, 0)
for n in range(4):
    print(f"S^3   a^{n} ->", format_element(lens_reduce(S3, alpha_power(n))))

# L(5,2): everything lands in the span of 1, a, a^2
M = GluingMatrix(2, 1, 5, 2)
print("normalized:", lens_normalize(M))
for n in range(3, 7):
    print(f"L(5,2) a^{n} ->", format_element(lens_reduce(M, alpha_power(n))))

# reduction is idempotent
r = lens_reduce(M, alpha_power(6))
assert lens_reduce(M, r.as_solid()) == r
