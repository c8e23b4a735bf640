"""Jones-Wenzl idempotents on torus curves, and evaluation at roots of unity."""

from skeintorus import format_element, jw_evaluate, jw_expand, jw_trace, sk_embed
from skeintorus.laurent import root_of_unity

for n in range(5):
    print(f"JW({n};2,1) =", format_element(jw_expand(n, 2, 1)))

# telescopes to a sum of single exponentials
print("embedded JW(3;2,1) =", format_element(sk_embed(jw_expand(3, 2, 1))))

# loop value (-1)^n [n+1]
r = 5
z = root_of_unity(r)
for n in range(r - 1):
    print(f"trace f^({n}) =", format_element(jw_trace(n)), " at r=5:", format_element(jw_trace(n), z=z))

print(jw_evaluate(3, 1, 0, r))
try:
    jw_evaluate(r - 1, 1, 0, r)
except ValueError as exc:  # f^(r-1) is undefined there
    print("error:", exc)
