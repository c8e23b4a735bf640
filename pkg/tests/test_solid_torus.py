import pytest
from hypothesis import given

from skeintorus import (
    IDEAL_GENERATORS,
    LaurentPoly,
    SolidTorusElement,
    alpha_power,
    alpha_T,
    curve_class,
    empty,
    sk_mul,
    st_act,
    st_ideal_member,
    st_lift,
    st_pi,
    st_x,
)

from strategies import skein_elements, solid_elements

t = LaurentPoly.t()
T = curve_class
alpha = alpha_power(1)
LOOP = -(t**2) - t**-2


class TestX:
    def test_meridian(self):
        assert st_x(0, 1) == SolidTorusElement([LOOP])

    def test_framing(self):
        assert st_x(1, 1) == alpha_power(1, -(t**-3))
        assert st_x(1, -1) == alpha_power(1, -(t**3))

    def test_core_squared(self):
        assert st_x(2, 0) == alpha_power(2) - 2

    def test_cores_are_chebyshev(self):
        for n in range(0, 12):
            assert st_x(n, 0) == alpha_T(n)

    def test_symmetry(self):
        for p in range(-6, 7):
            for q in range(-4, 5):
                assert st_x(p, q) == st_x(-p, -q)
                assert st_pi(T(p, q)) == st_x(p, q)

    def test_degree_and_unit_lead(self):
        for p in range(-30, 31):
            for q in range(-10, 11):
                x = st_x(p, q)
                assert x.degree() == abs(p)
                if p:
                    assert x.leading().is_unit()
                if p > 0:
                    sign = -1 if q % 2 else 1
                    assert x.leading() == LaurentPoly.monomial(-p * q - 2 * q, sign)

    @pytest.mark.parametrize("q", [-3, -1, 0, 1, 2, 5])
    def test_recurrence_in_x_space(self, q):
        # x(p+1) = t^-q alpha x(p) - t^-2q x(p-1), run from the two seeds
        xs = [st_x(0, q), st_x(1, q)]
        for p in range(1, 20):
            xs.append(xs[p].times_alpha().shift(-q) - xs[p - 1].shift(-2 * q))
        for p, x in enumerate(xs):
            assert x == st_x(p, q)


class TestPi:
    def test_examples(self):
        assert st_pi(T(0, 1)) == SolidTorusElement([LOOP])
        assert st_pi(T(1, 1)) == alpha_power(1, -(t**-3))
        assert st_pi(T(1, 0)) == alpha
        assert st_pi(empty(t)) == SolidTorusElement([t])

    def test_generators_in_kernel(self):
        g1, g2 = IDEAL_GENERATORS
        assert st_ideal_member(g1)
        assert st_ideal_member(g2)
        assert not st_ideal_member(T(1, 0))

    @given(skein_elements(), skein_elements())
    def test_kernel_is_left_ideal(self, a, b):
        assert st_pi(sk_mul(a, b)) == st_act(a, st_pi(b))

    @given(solid_elements(max_degree=6))
    def test_lift_is_section(self, u):
        assert st_pi(st_lift(u)) == u

    def test_restriction_to_cores_is_injective(self):
        for n in range(1, 10):
            assert st_pi(T(n, 0)) == alpha_T(n)


class TestAction:
    def test_core_acts_by_alpha(self):
        for n in range(1, 21):
            assert st_act(T(1, 0), alpha_T(n)) == alpha_T(n + 1) + alpha_T(n - 1)

    def test_meridian_on_unit(self):
        assert st_act(T(0, 1), SolidTorusElement([1])) == SolidTorusElement([LOOP])

    @given(solid_elements())
    def test_unit_acts_trivially(self, u):
        assert st_act(empty(), u) == u

    def test_corrected_product_formula(self):
        # (p,q)_T . alpha_n = t^-nq x(p+n, q) + t^nq x(p-n, q)
        for p in range(-3, 4):
            for q in range(-3, 4):
                if (p, q) == (0, 0):
                    continue
                for n in range(1, 6):
                    lhs = st_act(T(p, q), alpha_T(n))
                    rhs = st_x(p + n, q).shift(-n * q) + st_x(p - n, q).shift(n * q)
                    assert lhs == rhs

    @given(skein_elements(max_terms=2, bound=4), skein_elements(max_terms=2, bound=4), solid_elements(max_degree=6))
    def test_module_axiom(self, a, b, u):
        assert st_act(sk_mul(a, b), u) == st_act(a, st_act(b, u))
