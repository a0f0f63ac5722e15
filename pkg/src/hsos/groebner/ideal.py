"""Ideals and ideal-theoretic operations built on the Groebner engine."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core.parsing import load_json, parse_polynomial, ring_from_json
from ..core.polynomial import GREVLEX, Polynomial, block_order, order_from_name
from ..errors import (
    InputError,
    NonMinimalGeneratorsError,
    RingMismatchError,
    UnitIdealError,
    ZeroPolynomialError,
)
from .engine import buchberger, exact_divide
from .graded import minimal_generator_count, require_homogeneous

IDEAL_SCHEMA = "hsos.ideal/1"


class Ideal:
    """An ideal given by generators; the generator list is kept as given minus exact zeros."""

    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in ring {ring.names}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    @classmethod
    def from_text(cls, ring, texts):
        return cls(ring, [parse_polynomial(t, ring) for t in texts])

    @classmethod
    def maximal(cls, ring):
        """The homogeneous maximal ideal generated by all variables."""
        return cls(ring, ring.gens())

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "generators" not in obj:
            raise InputError("ideal JSON needs 'ring' and 'generators'")
        ring = ring_from_json(obj.get("ring"))
        return cls.from_text(ring, obj["generators"])

    @classmethod
    def load(cls, path):
        return cls.from_json(load_json(path))

    def to_json(self):
        return {"schema": IDEAL_SCHEMA, "ring": self.ring.to_json(),
                "generators": [str(g) for g in self.generators]}

    def gb(self, order=GREVLEX):
        if isinstance(order, str):
            order = order_from_name(order)
        basis = self._gb.get(order)
        if basis is None:
            basis = buchberger(self.generators, order, ring=self.ring)
            self._gb[order] = basis
        return basis

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return self.gb().is_unit

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def __contains__(self, f):
        return contains(self, f)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def __str__(self):
        return "⟨" + ", ".join(map(str, self.generators)) + "⟩"


def contains(I, f):
    """Ideal membership via the normal form against the reduced Groebner basis."""
    if f.ring != I.ring:
        raise RingMismatchError(f"{f} is not in ring {I.ring.names}")
    if not f:
        return True
    return I.gb().contains(f)


def ideal_equal(I, J):
    I._check(J)
    return I.gb().basis == J.gb().basis


def canonical(I, order=GREVLEX):
    """The ideal re-generated by its reduced Groebner basis, largest leading monomial first."""
    return Ideal(I.ring, reversed(I.gb(order).basis))


def _fresh_name(ring, stem="_t"):
    k = 0
    while f"{stem}{k}" in ring.names:
        k += 1
    return f"{stem}{k}"


def intersect(I, J, order=GREVLEX):
    """I cap J by eliminating t from t*I + (1 - t)*J under a block order with t first."""
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    big = ring.extend((_fresh_name(ring),))
    t = Polynomial.variable(big, 0)
    one_minus_t = Polynomial.constant(big, 1) - t
    gens = [t * f.embed(big, 1) for f in I.generators]
    gens += [one_minus_t * g.embed(big, 1) for g in J.generators]
    elim = block_order(1) if order.kind != "lex" else order
    basis = buchberger(gens, elim, ring=big)
    kept = [g.restrict(ring, 1) for g in basis if not any(e[0] for e in g.terms)]
    return Ideal(ring, kept)


def colon_poly(I, g):
    """I : <g>, as (I cap <g>) / g."""
    if g.ring != I.ring:
        raise RingMismatchError(f"{g} is not in ring {I.ring.names}")
    if not g:
        raise ZeroPolynomialError("colon by the zero polynomial")
    if I.is_zero():
        return Ideal(I.ring)
    if contains(I, g):
        return Ideal(I.ring, [Polynomial.constant(I.ring, 1)])
    meet = intersect(I, Ideal(I.ring, [g]))
    quotients = [exact_divide(h, g) for h in meet.generators]
    return canonical(Ideal(I.ring, quotients))


def colon_ideal(I, J):
    """I : J as the intersection of I : <j> over the generators j of J."""
    I._check(J)
    if J.is_zero():
        raise ZeroPolynomialError("colon by the zero ideal")
    result = None
    for j in J.generators:
        c = colon_poly(I, j)
        result = c if result is None else canonical(intersect(result, c))
    return result


def _require_proper(I):
    if I.is_unit():
        raise UnitIdealError("the unit ideal is not proper")


@dataclass(frozen=True)
class SocleTest:
    """Outcome of the test whether the maximal ideal is associated to R/I."""

    associated: bool
    witness: Polynomial | None
    colon: Ideal


def maximal_ideal_associated(I):
    """Socle test: m is associated to R/I iff I : m strictly contains I.

    On success the witness is a minimal-degree generator of I : m outside I,
    so that I : witness = m.
    """
    require_homogeneous(I)
    _require_proper(I)
    m = Ideal.maximal(I.ring)
    Q = colon_ideal(I, m)
    outside = [q for q in Q.gb().basis if not contains(I, q)]
    if not outside:
        return SocleTest(False, None, Q)
    outside.sort(key=lambda q: (q.degree(), [GREVLEX.key(e) for e, _ in q.sorted_terms()]))
    return SocleTest(True, outside[0], Q)


def krull_dimension(I):
    """dim R/I: size of a largest variable set S with in(I) cap k[S] = 0."""
    _require_proper(I)
    n = I.ring.n
    supports = [frozenset(j for j, k in enumerate(lm) if k) for lm in I.gb().leading_monomials()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def codimension(I):
    return I.ring.n - krull_dimension(I)


def is_complete_intersection(I):
    """True iff the codimension equals the number of (minimal) generators."""
    require_homogeneous(I)
    _require_proper(I)
    mu = minimal_generator_count(I)
    if mu != len(I.generators):
        raise NonMinimalGeneratorsError(len(I.generators), mu)
    return codimension(I) == mu
