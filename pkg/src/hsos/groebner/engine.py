"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Internally a polynomial is a plain ``dict`` of terms; the public functions
take and return :class:`~hsos.core.Polynomial`.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core.numbers import ONE
from ..core.polynomial import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from ..errors import ZeroPolynomialError


def _lt(terms, key):
    e = max(terms, key=key)
    return e, terms[e]


def _sub_scaled(p, a, shift, g):
    """p -= a * z^shift * g, in place."""
    for ge, gc in g.items():
        e = mono_mul(ge, shift)
        s = p.get(e)
        if s is None:
            p[e] = -a * gc
        else:
            s = s - a * gc
            if s:
                p[e] = s
            else:
                del p[e]


def _normal_form(terms, reducers, key):
    """Full reduction of ``terms`` by ``reducers`` = [(lm, lc, terms)], first-divisor rule."""
    p = dict(terms)
    r = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for lm, lc, g in reducers:
            if mono_divides(lm, e):
                _sub_scaled(p, c / lc, mono_div(e, lm), g)
                break
        else:
            r[e] = p.pop(e)
    return r


def _monic(terms, key):
    e, c = _lt(terms, key)
    if c == ONE:
        return dict(terms)
    inv = c.inverse()
    return {k: v * inv for k, v in terms.items()}


def _spoly(f, g, key):
    ef, cf = _lt(f, key)
    eg, cg = _lt(g, key)
    lcm = mono_lcm(ef, eg)
    out = {}
    _sub_scaled(out, -cf.inverse(), mono_div(lcm, ef), f)
    _sub_scaled(out, cg.inverse(), mono_div(lcm, eg), g)
    return out


def s_polynomial(f, g, order=GREVLEX):
    """(L/LT(f))*f - (L/LT(g))*g with L = lcm of the leading monomials."""
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    f._check(g)
    return Polynomial._raw(f.ring, _spoly(f.terms, g.terms, order.key))


def normal_form(f, G, order=GREVLEX):
    """Remainder of f on division by G.

    The reducer is always the first element of G (in the given order) whose
    leading monomial divides the current leading term; irreducible leading
    terms move to the remainder, so the result is fully reduced.
    """
    key = order.key
    reducers = []
    for g in G:
        if not g:
            raise ZeroPolynomialError("cannot divide by the zero polynomial")
        f._check(g)
        lm, lc = _lt(g.terms, key)
        reducers.append((lm, lc, g.terms))
    return Polynomial._raw(f.ring, _normal_form(f.terms, reducers, key))


def exact_divide(p, g, order=GREVLEX):
    """p / g when g divides p exactly; ValueError otherwise."""
    if not g:
        raise ZeroPolynomialError("division by the zero polynomial")
    key = order.key
    lm, lc = _lt(g.terms, key)
    rem = dict(p.terms)
    quot = {}
    while rem:
        e, c = _lt(rem, key)
        if not mono_divides(lm, e):
            raise ValueError(f"{g} does not divide {p}")
        q = mono_div(e, lm)
        a = c / lc
        quot[q] = a
        _sub_scaled(rem, a, q, g.terms)
    return Polynomial._raw(p.ring, quot)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis, sorted by ascending leading monomial."""

    ring: object
    order: MonomialOrder
    basis: tuple

    def reduce(self, f):
        return normal_form(f, self.basis, self.order)

    def contains(self, f):
        return not self.reduce(f)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    @property
    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def _update(polys, lms, G, B, h):
    """Gebauer-Moeller installation of the new element ``h`` (an index)."""
    lh = lms[h]
    C = [(h, g) for g in G]
    lcm_of = {}
    for pair in C:
        lcm_of[pair] = mono_lcm(lh, lms[pair[1]])
    D = []
    while C:
        pair = C.pop(0)
        g = pair[1]
        lc = lcm_of[pair]
        if mono_coprime(lh, lms[g]):
            D.append(pair)
            continue
        if any(mono_divides(lcm_of[q], lc) for q in C) or any(mono_divides(lcm_of[q], lc) for q in D):
            continue
        D.append(pair)
    E = [p for p in D if not mono_coprime(lh, lms[p[1]])]
    B_new = []
    for (g1, g2, l12) in B:
        if (mono_divides(lh, l12) and mono_lcm(lms[g1], lh) != l12
                and mono_lcm(lh, lms[g2]) != l12):
            continue
        B_new.append((g1, g2, l12))
    B_new.extend((g, hh, lcm_of[(hh, g)]) for hh, g in E)
    G_new = [g for g in G if not mono_divides(lh, lms[g])]
    G_new.append(h)
    return G_new, B_new


def _interreduce(polys, key):
    polys = sorted(polys, key=lambda t: key(_lt(t, key)[0]))
    lms = [_lt(t, key)[0] for t in polys]
    keep = []
    for j, lm in enumerate(lms):
        if not any(k != j and mono_divides(lms[k], lm) and (lms[k] != lm or k < j) for k in range(len(lms))):
            keep.append(j)
    minimal = [polys[j] for j in keep]
    out = []
    for j, f in enumerate(minimal):
        others = [(_lt(g, key)[0], ONE, g) for k, g in enumerate(minimal) if k != j]
        lm, lc = _lt(f, key)
        tail = dict(f)
        del tail[lm]
        r = _normal_form(tail, others, key)
        r[lm] = lc
        out.append(_monic(r, key))
    out.sort(key=lambda t: key(_lt(t, key)[0]))
    return out


def buchberger(generators, order=GREVLEX, ring=None):
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pair selection is the normal strategy: smallest lcm (by degree, then by
    the monomial order) first, ties broken by index.
    """
    gens = [g for g in generators if g]
    if ring is None:
        if not gens:
            raise ValueError("need a ring for the zero ideal")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            gens[0]._check(g)
    key = order.key
    if not gens:
        return GroebnerBasis(ring, order, ())
    polys, lms = [], []
    G, B = [], []

    # constants short-circuit to the unit ideal
    if any(g.is_constant() for g in gens):
        return GroebnerBasis(ring, order, (Polynomial.constant(ring, 1),))

    for g in gens:
        reducers = [(lms[k], ONE, polys[k]) for k in G]
        t = _normal_form(g.terms, reducers, key)
        if not t:
            continue
        t = _monic(t, key)
        polys.append(t)
        lms.append(_lt(t, key)[0])
        G, B = _update(polys, lms, G, B, len(polys) - 1)

    while B:
        best = min(range(len(B)), key=lambda k: (sum(B[k][2]), key(B[k][2]), B[k][0], B[k][1]))
        g1, g2, _ = B.pop(best)
        s = _spoly(polys[g1], polys[g2], key)
        reducers = [(lms[k], ONE, polys[k]) for k in G]
        h = _normal_form(s, reducers, key)
        if not h:
            continue
        h = _monic(h, key)
        polys.append(h)
        lms.append(_lt(h, key)[0])
        if not any(h_e for h_e in lms[-1]):
            return GroebnerBasis(ring, order, (Polynomial.constant(ring, 1),))
        G, B = _update(polys, lms, G, B, len(polys) - 1)

    reduced = _interreduce([polys[k] for k in G], key)
    return GroebnerBasis(ring, order, tuple(Polynomial._raw(ring, t) for t in reduced))


def closure_defects(basis, order=GREVLEX):
    """Pairs (j, k) whose S-polynomial does not reduce to 0 (empty for a Groebner basis)."""
    defects = []
    b = list(basis)
    for j in range(len(b)):
        for k in range(j + 1, len(b)):
            if normal_form(s_polynomial(b[j], b[k], order), b, order):
                defects.append((j, k))
    return defects
