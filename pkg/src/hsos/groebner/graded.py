"""Graded pieces of homogeneous ideals by exact linear algebra (no Groebner bases)."""

from ..core.linalg import Echelon, sparse
from ..core.polynomial import coefficient_vector, monomials_of_degree
from ..errors import NonHomogeneousError


def require_homogeneous(I):
    for g in I.generators:
        if not g.is_homogeneous():
            raise NonHomogeneousError(f"generator {g} is not homogeneous")


def _products(generators, d, max_gen_degree=None):
    """Coefficient vectors of g*u for generators g of degree e <= d, u of degree d-e."""
    for g in generators:
        e = g.degree()
        if e > d or (max_gen_degree is not None and e > max_gen_degree):
            continue
        for u in monomials_of_degree(g.ring, d - e):
            yield sparse(coefficient_vector(g.mul_term(u, 1), d))


def graded_span(I, d):
    """Echelon basis of the degree-d component I_d."""
    require_homogeneous(I)
    return Echelon(_products(I.generators, d))


def graded_piece_dim(I, d):
    return graded_span(I, d).rank


def graded_containment(I, J, d):
    """True iff J_d is contained in I_d (J's degree-d products lie in the span of I_d)."""
    require_homogeneous(J)
    span = graded_span(I, d)
    return all(span.contains(v) for v in _products(J.generators, d))


def graded_member(I, f):
    """Membership of a form f in I by linear algebra in degree deg f."""
    if not f:
        return True
    if not f.is_homogeneous():
        raise NonHomogeneousError(f"{f} is not homogeneous")
    d = f.degree()
    return graded_span(I, d).contains(sparse(coefficient_vector(f, d)))


def minimal_generator_count(I):
    """Sum over degrees e of dim I_e / (m I)_e."""
    require_homogeneous(I)
    degrees = sorted({g.degree() for g in I.generators})
    total = 0
    for e in degrees:
        full = Echelon(_products(I.generators, e)).rank
        lower = Echelon(_products(I.generators, e, max_gen_degree=e - 1)).rank
        total += full - lower
    return total
