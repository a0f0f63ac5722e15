"""Built-in instances for the containment/colon equivalence and necessity checks."""

import random
from fractions import Fraction

from ..core.linalg import Echelon, sparse
from ..core.parsing import parse_polynomial
from ..core.polynomial import Polynomial, RingContext, coefficient_vector, monomials_of_degree
from ..groebner import Ideal, contains
from ..hermitian import form_from_maps, squared_norm_of_map
from .theorem import EXAMPLE_G, EXAMPLE_GENERATORS, find_scaling, scaled_form

# (variables, generators of I, g)
FIXED = [
    (("z1", "z2", "z3", "z4"), EXAMPLE_GENERATORS, EXAMPLE_G),
    (("z1", "z2", "z3", "z4"), EXAMPLE_GENERATORS, "z1^2"),
    (("z1", "z2", "z3", "z4"), EXAMPLE_GENERATORS, "z1*z2"),
    (("x", "y"), ("x^2", "y^2"), "x*y"),
    (("x", "y"), ("x^2", "x*y"), "y^2"),
    (("x", "y"), ("x^2",), "y^2"),
    (("x", "y"), ("x",), "y"),
    (("x", "y", "z"), ("x^2", "y^2", "z^2"), "x*y"),
    (("x", "y", "z"), ("x*y", "y*z", "x*z"), "x^2"),
    (("x", "y", "z"), ("x^2", "y^2", "z^2", "x*y", "y*z"), "x*z"),
    (("x", "y", "z"), ("x^2", "x*y", "x*z", "y^2", "y*z"), "z^2"),
    (("x", "y", "z"), ("x", "y"), "z"),
    (("x", "y", "z"), ("x^2 - y*z", "y^2 - x*z"), "z^2"),
    (("x", "y"), ("x^3", "y^3", "x^2*y"), "x*y^2"),
    (("x", "y"), ("x^2 + i*y^2", "x*y"), "y^2"),
    (("z1", "z2", "z3", "z4"), ("z1^2", "z2^2", "z3^2", "z4^2", "z1*z2", "z3*z4", "z1*z3", "z2*z4", "z1*z4"), "z2*z3"),
]


def _random_form(rng, ring, m, coeffs=(-2, -1, 0, 1, 2), density=0.5):
    monos = monomials_of_degree(ring, m)
    while True:
        terms = {e: rng.choice(coeffs) for e in monos if rng.random() < density}
        p = Polynomial(ring, terms)
        if p:
            return p


def random_instances(count=10, seed=20240601):
    """Random (I, g) with g a form of the generators' degree and g not in I."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice((2, 3, 4))
        m = rng.choice((1, 2)) if n > 2 else 2
        ring = RingContext.standard(n)
        P = rng.randint(1, min(n + 1, len(monomials_of_degree(ring, m)) - 1))
        gens = [_random_form(rng, ring, m) for _ in range(P)]
        g = _random_form(rng, ring, m)
        ech = Echelon(sparse(coefficient_vector(f, m)) for f in gens)
        if ech.rank != P or ech.contains(sparse(coefficient_vector(g, m))):
            continue
        out.append((ring.names, tuple(str(f) for f in gens), str(g)))
    return out


def containment_corpus(random_count=10, seed=20240601):
    """Parsed (I, g) pairs: the fixed list followed by seeded random instances."""
    out = []
    for names, gens, g in FIXED + random_instances(random_count, seed):
        ring = RingContext(names)
        I = Ideal(ring, [parse_polynomial(t, ring) for t in gens])
        out.append((I, parse_polynomial(g, ring)))
    return out


def form_corpus(seed=7):
    """BiForms exercising both sides of the squared-norm necessity check."""
    forms = []
    z = RingContext.standard(2).gens()
    forms.append(squared_norm_of_map(z))
    forms.append(form_from_maps([z[0]], [z[1]]))
    forms.append(form_from_maps([z[0] * z[0], z[1] * z[1]], [z[0] * z[1]]))
    r4 = RingContext.standard(4)
    fgens = [parse_polynomial(t, r4) for t in EXAMPLE_GENERATORS]
    g = parse_polynomial(EXAMPLE_G, r4)
    for C in (1, 2, 4, 8, 16, 64):
        forms.append(scaled_form(fgens, g, Fraction(C)))
    # containment-true instances from the fixed corpus, at their certified scale
    for I, gg in containment_corpus(0):
        fg = list(I.generators)
        if len(fg) >= 1 and not contains(I, gg):
            res = find_scaling(fg, gg) if _independent(fg + [gg]) else None
            if res is not None and res.status == "found":
                forms.append(scaled_form(fg, gg, res.C))
                forms.append(scaled_form(fg, gg, res.C / 2))
    rng = random.Random(seed)
    for _ in range(8):
        ring = RingContext.standard(rng.choice((2, 3)))
        m = rng.choice((1, 2))
        plus = [_random_form(rng, ring, m) for _ in range(rng.randint(1, 3))]
        minus = [_random_form(rng, ring, m) for _ in range(rng.randint(0, 1))]
        r = form_from_maps(plus, minus, ring=ring, m=m)
        if not r.is_zero():
            forms.append(r)
    return forms


def _independent(polys):
    m = polys[0].degree()
    return Echelon(sparse(coefficient_vector(p, m)) for p in polys).rank == len(polys)
