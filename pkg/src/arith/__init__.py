"""Exact coefficient domains: finite fields, polynomials, rational functions, rationals."""

from .finite_field import FieldParams, FFElement, FieldMismatchError, make_field, ff_arith
from .polynomial import Poly, ZERO_DEGREE, parse_poly, poly_arith
from .ratfunc import RatFunc, parse_ratfunc, ratfunc_arith
from .rational import BigRational, rational_arith
from .lucas import binomial_mod_p, multinomial_mod_p, multinomial
from .compositions import iter_multisets

__all__ = [
    'FieldParams',
    'FFElement',
    'FieldMismatchError',
    'make_field',
    'ff_arith',
    'Poly',
    'ZERO_DEGREE',
    'parse_poly',
    'poly_arith',
    'RatFunc',
    'parse_ratfunc',
    'ratfunc_arith',
    'BigRational',
    'rational_arith',
    'binomial_mod_p',
    'multinomial_mod_p',
    'multinomial',
    'iter_multisets',
]
