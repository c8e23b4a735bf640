"""Acceptance criteria 1-8.

Each test times its own body, prints one ``PASS``/``FAIL`` line, and fails
if either the mathematics or the time budget is off.  The lines are also
collected into the terminal summary.
"""

import cmath
import json
import math
import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_LINES
from skeintorus import (
    IDEAL_GENERATORS,
    LaurentPoly,
    NTElement,
    SkeinElement,
    SolidTorusElement,
    alpha_power,
    alpha_T,
    cheb_T,
    curve_class,
    format_element,
    jw_expand,
    jw_trace,
    jw_trace_via_expansion,
    jw_via_recurrence,
    lens_c,
    lens_normalize,
    lens_reduce,
    lens_reduce_monomial,
    lp_eval,
    nt_mul,
    power_to_T,
    quantum_int,
    sk_embed,
    sk_mul,
    st_act,
    st_pi,
    st_x,
    trig_eval,
)
from skeintorus.chebyshev import T_to_power, poly_add, poly_mul
from skeintorus.cli import EXIT_DOMAIN, EXIT_PARSE, main
from skeintorus.expr import element_from_json, parse_and_eval
from skeintorus.laurent import root_of_unity
from skeintorus.lens import GluingMatrix

t = LaurentPoly.t()
T = curve_class


@contextmanager
def criterion(number: int, title: str, budget: float):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        note = "" if within else f" (over budget {budget:g}s)"
        line = f"criterion {number}: {status}  {title}  [{elapsed:.2f}s / {budget:g}s]{note}"
        print(line)
        ACCEPTANCE_LINES.append(line)
    assert within, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"


def random_poly(rng, terms=2, exp=4, coeff=5):
    return LaurentPoly({rng.randint(-exp, exp): rng.randint(-coeff, coeff) for _ in range(terms)})


def random_skein(rng, terms=3, bound=5):
    out = SkeinElement()
    for _ in range(rng.randint(0, terms)):
        out = out + T(rng.randint(-bound, bound), rng.randint(-bound, bound), random_poly(rng))
    return out


def random_nc(rng, terms=3, bound=5):
    return NTElement(
        ((rng.randint(-bound, bound), rng.randint(-bound, bound)), random_poly(rng)) for _ in range(rng.randint(0, terms))
    )


def random_solid(rng, degree=5):
    return SolidTorusElement(random_poly(rng) for _ in range(rng.randint(0, degree + 1)))


def test_1_morphism():
    rng = random.Random(1)
    with criterion(1, "sk_embed is an algebra morphism (1000 pairs, indices in [-20,20])", 5.0):
        for _ in range(1000):
            A = T(*(rng.randint(-20, 20) for _ in range(2)))
            B = T(*(rng.randint(-20, 20) for _ in range(2)))
            assert sk_embed(sk_mul(A, B)) == nt_mul(sk_embed(A), sk_embed(B))


def test_2_chebyshev():
    with criterion(2, "T_m T_n = T_{m+n} + T_{|m-n|} for m,n <= 50; power_to_T round trip n <= 60", 2.0):
        for m in range(51):
            for n in range(51):
                assert poly_mul(cheb_T(m), cheb_T(n)) == poly_add(cheb_T(m + n), cheb_T(abs(m - n)))
        for n in range(61):
            assert T_to_power(power_to_T(n)) == [0] * n + [1]


def test_3_trig_oracle():
    rng = random.Random(3)
    points = [(rng.random(), rng.random()) for _ in range(50)]
    with criterion(3, "t = 1 character map is multiplicative (200 products x 50 points, 1e-9)", 2.0):
        for _ in range(200):
            A = random_skein(rng, terms=2, bound=6)
            B = random_skein(rng, terms=2, bound=6)
            AB = sk_mul(A, B)
            for x, y in points:
                lhs = trig_eval(AB, x, y)
                rhs = trig_eval(A, x, y) * trig_eval(B, x, y)
                assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_4_solid_torus():
    rng = random.Random(4)
    with criterion(4, "st_pi is a module map (500 pairs); x(p,q) unit-leading; ideal generators vanish", 5.0):
        for _ in range(500):
            A = T(rng.randint(-6, 6), rng.randint(-6, 6), random_poly(rng))
            B = random_skein(rng, terms=2, bound=6)
            assert st_pi(sk_mul(A, B)) == st_act(A, st_pi(B))
        for p in range(-30, 31):
            for q in range(-10, 11):
                x = st_x(p, q)
                assert x.degree() == abs(p)
                if p:
                    assert x.leading().is_unit()
        g1, g2 = IDEAL_GENERATORS
        assert g1 == T(0, 1) + t**2 + t**-2
        assert g2 == T(1, 1) + T(1, 0, t**-3)
        assert st_pi(g1).is_zero() and st_pi(g2).is_zero()


def test_5_corrected_action():
    with criterion(5, "(1,0)_T . alpha_n = alpha_{n+1} + alpha_{n-1} for 1 <= n <= 20", 1.0):
        for n in range(1, 21):
            assert st_act(T(1, 0), alpha_T(n)) == alpha_T(n + 1) + alpha_T(n - 1)


def test_6_lens():
    loop = -(t**2) - t**-2
    with criterion(6, "lens reductions: S^3 values, L(p,1) bound/idempotence/independence/identity", 30.0):
        S3 = GluingMatrix(0, 1, 1, 0)
        assert lens_reduce(S3, alpha_power(1)).coeffs == (loop,)
        assert lens_reduce(S3, alpha_power(2)).coeffs == (loop * loop,)
        for n in range(10):
            assert lens_reduce(S3, alpha_power(n)).is_scalar()
        rng = random.Random(6)
        for p in range(2, 9):
            M = lens_normalize(GluingMatrix(-1, 0, p, 1))
            for n in range(3 * p + 1):
                r = lens_reduce(M, alpha_power(n))
                assert len(r.coeffs) == p // 2 + 1
                assert lens_reduce(M, r.as_solid()) == r
                if n > p // 2:
                    m0 = (n * pow(M.a, -1, p)) % p
                    for j in (1, 2):
                        assert lens_reduce_monomial(M, n, m0 + j * p) == lens_reduce_monomial(M, n)
            for k in range(-2, 3):
                u = random_solid(rng, degree=3)
                lhs = lens_reduce(M, st_act(T(M.a + k * M.p, M.b + k * M.q), u))
                rhs = lens_reduce(M, st_act(T(M.a, M.b), u))
                assert lhs.coeffs == tuple(lens_c(M, k) * c for c in rhs.coeffs)


def test_7_jones_wenzl():
    primitive = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 2)]
    with criterion(7, "JW closed form = recurrence, telescoping image, traces, r = 4 value", 2.0):
        for p, q in primitive:
            for n in range(13):
                J = jw_expand(n, p, q)
                assert J == jw_via_recurrence(n, p, q)
                assert sk_embed(J) == NTElement(((m * p, m * q), 1) for m in range(-n, n + 1, 2))
                trace = jw_trace_via_expansion(n, p, q)
                assert trace == (-quantum_int(n + 1) if n % 2 else quantum_int(n + 1))
                assert trace == jw_trace(n)
        z = root_of_unity(4)
        assert abs(z - cmath.exp(1j * math.pi / 8)) < 1e-15
        assert jw_trace(2) == t**4 + 1 + t**-4
        assert abs(lp_eval(jw_trace(2), z) - (1 + 2 * math.cos(math.pi / 2))) < 1e-9


MALFORMED = [
    ["eval", "T(1,0"],
    ["eval", "T(1,0) + e(0,1)"],
    ["eval", "--kind", "nc", "e(1,2"],
    ["eval", "--kind", "solid", "a(1) a(2)"],
    ["eval", "[{oops"],
    ["eval", "T(1 # 0)"],
    ["lens", "--matrix", "1,2", "reduce", "a(1)"],
]
DOMAIN = [
    ["unembed", "e(1,0)"],
    ["eval", "P(3;2,4)"],
    ["lens", "--matrix", "3,1,2,1", "reduce", "a(1)"],
    ["jw-expand", "5", "1", "0", "--eval-at", "4"],
]


def test_8_cli(capsys):
    rng = random.Random(8)
    makers = {"skein": random_skein, "nc": random_nc, "solid": random_solid}
    with criterion(8, "format/parse round trip (200 per kind, text + JSON); exit codes 2 and 3", 2.0):
        for kind, make in makers.items():
            for _ in range(200):
                v = make(rng)
                text = format_element(v)
                assert parse_and_eval(text, kind) == v
                assert format_element(parse_and_eval(text, kind)) == text
                assert element_from_json(json.loads(format_element(v, "json")), kind) == v
        for argv in MALFORMED:
            assert main(argv) == EXIT_PARSE, argv
        for argv in DOMAIN:
            assert main(argv) == EXIT_DOMAIN, argv
        capsys.readouterr()
