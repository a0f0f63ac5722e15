from .numbers import ONE, ZERO, GaussRational, Rational, conjugate, format_coeff
from .parsing import infer_ring, parse_coefficient, parse_polynomial, parse_polynomial_list
from .polynomial import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    RingContext,
    block_order,
    coefficient_vector,
    from_coefficient_vector,
    monomials_of_degree,
    order_from_name,
)


def field_ops(a, b, op):
    """Dispatch one of ``add``, ``sub``, ``mul``, ``div`` on two Gaussian rationals."""
    a = a if isinstance(a, GaussRational) else GaussRational(a)
    b = b if isinstance(b, GaussRational) else GaussRational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def leading_term(p, order=GREVLEX):
    return p.leading_term(order)
