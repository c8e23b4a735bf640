"""Exact computer algebra for the Kauffman bracket skein algebra of the torus.

The coefficient ring is ``Z[t, t^-1]`` (:class:`LaurentPoly`).  The main
objects are

* :class:`SkeinElement` -- the skein algebra of the torus in the ``(p,q)_T``
  basis, multiplied by the product-to-sum rule;
* :class:`NTElement` -- Laurent polynomials on the noncommutative torus, the
  target of :func:`sk_embed`;
* :class:`SolidTorusElement` -- the solid torus module, reached by :func:`st_pi`;
* :class:`LensElement` -- reductions in lens spaces (:func:`lens_reduce`);
* Jones-Wenzl expansions (:func:`jw_expand`).
"""

from .errors import (
    BadDeterminant,
    DomainError,
    IdempotentUndefined,
    NoDecomposition,
    NotAUnit,
    NotPrimitive,
    NotSymmetric,
    ZeroEvaluationPoint,
)
from .laurent import LaurentPoly, delta, lp_arith, lp_div_unit, lp_eval, quantum_int, root_of_unity
from .chebyshev import cheb_eval_trig, cheb_T, power_to_T
from .nc_torus import NTElement, e, nt_is_symmetric, nt_mul, nt_theta
from .skein import (
    EMPTY,
    SkeinElement,
    T,
    curve_class,
    empty,
    intersection_number,
    multicurve_to_T,
    sk_embed,
    sk_mul,
    sk_unembed,
    trig_eval,
)
from .solid_torus import (
    IDEAL_GENERATORS,
    SolidTorusElement,
    alpha_power,
    alpha_T,
    st_act,
    st_ideal_member,
    st_lift,
    st_pi,
    st_x,
)
from .lens import (
    GluingMatrix,
    LensElement,
    lens_c,
    lens_normalize,
    lens_reduce,
    lens_reduce_monomial,
    lens_x_in_V,
)
from .jones_wenzl import jw_evaluate, jw_expand, jw_trace, jw_trace_via_expansion, jw_via_recurrence
from .expr import element_from_json, eval_expression, format_element, parse_and_eval, parse_element

t = LaurentPoly.t()

__version__ = "0.1.0"
