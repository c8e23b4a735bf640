"""The solid torus as a module over the torus algebra."""

from skeintorus import IDEAL_GENERATORS, T, alpha_T, format_element, st_act, st_pi, st_x

# the longitude (1,0) is the core alpha; the meridian (0,1) bounds a disk
print("pi(1,0) =", format_element(st_pi(T(1, 0))))
print("pi(0,1) =", format_element(st_pi(T(0, 1))))  # a trivial loop
print("pi(1,1) =", format_element(st_pi(T(1, 1))))  # one kink

for p, q in [(2, 1), (3, -1), (3, 2)]:
    x = st_x(p, q)
    print(f"x({p},{q}) = {format_element(x)}   leading {x.leading()}")

# alpha_n = T_n(alpha) behaves like cos(n theta) under the longitude
for n in range(1, 4):
    lhs = st_act(T(1, 0), alpha_T(n))
    print(f"(1,0).alpha_{n} = alpha_{n + 1} + alpha_{n - 1}:", lhs == alpha_T(n + 1) + alpha_T(n - 1))

# the kernel of pi is generated by these two
for g in IDEAL_GENERATORS:
    print(format_element(g), "->", format_element(st_pi(g)))
