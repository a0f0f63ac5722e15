"""Multivariate polynomials over Q(i), monomial orders, and graded-piece helpers.

Monomials are plain exponent tuples. Polynomials are immutable sparse maps
``exponent tuple -> GaussRational`` with no zero coefficients stored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from ..errors import NonHomogeneousError, RingMismatchError, ZeroPolynomialError
from .numbers import ONE, GaussRational, _coerce, format_coeff

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    """Q(i)[names...]; the variable order is the order of ``names``."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for v in names:
            if not _IDENT.match(v) or v == "i":
                raise ValueError(f"invalid variable name {v!r}")

    @classmethod
    def standard(cls, n, prefix="z"):
        """``z1, ..., zn``."""
        return cls(tuple(f"{prefix}{j}" for j in range(1, n + 1)))

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def gens(self):
        return [Polynomial.variable(self, j) for j in range(self.n)]

    def extend(self, front):
        """A ring with extra variables prepended (used for elimination)."""
        return RingContext(tuple(front) + self.names)

    def to_json(self):
        return {"vars": list(self.names)}


# monomials


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block``.

    ``block`` with size b compares the first b variables by grevlex, then
    breaks ties with grevlex on the remaining variables; any monomial with
    larger degree in the first block is larger (an elimination order).
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive block size")

    def key(self, e):
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        b = self.block
        return (_grevlex_key(e[:b]), _grevlex_key(e[b:]))

    def __str__(self):
        return f"block({self.block})" if self.kind == "block" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(size):
    return MonomialOrder("block", size)


def order_from_name(name):
    if name.startswith("block(") and name.endswith(")"):
        return block_order(int(name[6:-1]))
    return MonomialOrder(name)


@lru_cache(maxsize=None)
def _monomials(n, d):
    monos = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for j in combo:
            e[j] += 1
        monos.append(tuple(e))
    monos.sort(key=_grevlex_key, reverse=True)
    return tuple(monos)


def monomials_of_degree(ring, d):
    """All monomials of total degree d, grevlex-descending (the fixed basis order)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return _monomials(ring.n, d)


@lru_cache(maxsize=None)
def _monomial_index(n, d):
    return {m: k for k, m in enumerate(_monomials(n, d))}


def monomial_index(ring, d):
    """Map monomial -> position in :func:`monomials_of_degree`."""
    return _monomial_index(ring.n, d)


def render_monomial(ring, e):
    parts = []
    for name, k in zip(ring.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != ring.n:
                    raise ValueError(f"exponent {e} has wrong length for {ring.n} variables")
                c = _coerce(c)
                if c is NotImplemented:
                    raise TypeError(f"bad coefficient {c!r}")
                if c:
                    clean[e] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        """Trusted constructor: terms already clean (tuple keys, nonzero GaussRational)."""
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, ring):
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.n: c})

    @classmethod
    def variable(cls, ring, j):
        if isinstance(j, str):
            j = ring.index(j)
        e = [0] * ring.n
        e[j] = 1
        return cls._raw(ring, {tuple(e): ONE})

    @classmethod
    def monomial(cls, ring, e, c=ONE):
        return cls(ring, {tuple(e): c})

    # structure

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, e):
        return self.terms.get(tuple(e), GaussRational(0))

    def degree(self):
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        """True for nonzero forms; the zero polynomial counts as homogeneous of every degree."""
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(j for j, k in enumerate(e) if k)
        return used

    def sorted_terms(self, order=GREVLEX):
        """Terms in decreasing order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order=GREVLEX):
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=GREVLEX):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=GREVLEX):
        return self.leading_term(order)[1]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        return self.scale(self.leading_coefficient(order).inverse())

    # arithmetic

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return Polynomial.constant(self.ring, c)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, e, c):
        """self * c * z^e."""
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {mono_mul(k, e): v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_coefficients(self):
        return Polynomial._raw(self.ring, {e: c.conjugate() for e, c in self.terms.items()})

    def embed(self, ring, offset):
        """Reinterpret in ``ring`` whose variables ``offset:offset+n`` are ours."""
        pad_l = (0,) * offset
        pad_r = (0,) * (ring.n - offset - self.ring.n)
        return Polynomial._raw(ring, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def restrict(self, ring, offset):
        """Inverse of :meth:`embed`; the dropped variables must not occur."""
        out = {}
        for e, c in self.terms.items():
            if any(e[:offset]) or any(e[offset + ring.n:]):
                raise ValueError("polynomial involves eliminated variables")
            out[e[offset:offset + ring.n]] = c
        return Polynomial._raw(ring, out)

    # comparison

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self == Polynomial.constant(self.ring, c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __getstate__(self):
        return (self.ring, self.terms)

    def __setstate__(self, state):
        self.ring, self.terms = state
        self._hash = None

    # rendering

    def render(self, order=GREVLEX):
        if not self.terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms(order)):
            mono = render_monomial(self.ring, e)
            negative = c.is_real and c.re < 0 or (not c.re and c.im < 0)
            mag = -c if negative else c
            cs = format_coeff(mag)
            if mono == "1":
                body = cs
            elif mag == ONE:
                body = mono
            else:
                body = f"{cs}*{mono}"
            if k == 0:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def coefficient_vector(p, d):
    """Coordinates of a degree-d form in the basis :func:`monomials_of_degree`."""
    if not p.is_homogeneous() or (p.terms and p.degree() != d):
        raise NonHomogeneousError(f"{p} is not a form of degree {d}")
    index = monomial_index(p.ring, d)
    vec = [GaussRational(0)] * len(index)
    for e, c in p.terms.items():
        vec[index[e]] = c
    return vec


def from_coefficient_vector(ring, d, vec):
    monos = monomials_of_degree(ring, d)
    return Polynomial(ring, {m: c for m, c in zip(monos, vec)})
