"""Bihomogeneous Hermitian forms r(z, zbar) and exact inertia over Q(i).

A form of bidegree (m, m) is stored through its Hermitian coefficient map
``(alpha, beta) -> c`` with ``r = sum c[alpha, beta] z^alpha conj(z)^beta``.
Only pairs with ``index(alpha) <= index(beta)`` are stored; the mirror
entry is the conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core.numbers import ONE, ZERO, GaussRational
from .core.parsing import load_json, parse_coefficient, parse_polynomial, ring_from_json
from .core.polynomial import Polynomial, monomial_index, monomials_of_degree, render_monomial
from .errors import InputError, NonHomogeneousError, NotHermitianError, NotPSDError, RingMismatchError

BIFORM_SCHEMA = "hsos.biform/1"


class BiForm:
    def __init__(self, ring, m, coeffs=None):
        """``coeffs`` maps (alpha, beta) to a scalar; mirrors may be given or implied.

        Raises NotHermitianError when both mirrors are present and disagree
        or a diagonal coefficient is not real.
        """
        self.ring = ring
        self.m = m
        index = monomial_index(ring, m)
        stored = {}
        seen = {}
        for (a, b), c in (coeffs or {}).items():
            a, b = tuple(a), tuple(b)
            if a not in index or b not in index:
                raise InputError(f"monomial pair {a}, {b} is not of bidegree ({m}, {m})")
            c = GaussRational(c)
            if (b, a) in seen and seen[(b, a)] != c.conjugate():
                raise NotHermitianError(f"coefficients at {a},{b} and {b},{a} are not conjugate")
            if (a, b) in seen and seen[(a, b)] != c:
                raise InputError(f"coefficient at {a},{b} given twice")
            seen[(a, b)] = c
            if index[a] > index[b]:
                a, b, c = b, a, c.conjugate()
            if a == b and not c.is_real:
                raise NotHermitianError(f"diagonal coefficient at {a} is not real")
            if c:
                stored[(a, b)] = c
        self._coeffs = stored

    @classmethod
    def _raw(cls, ring, m, stored):
        obj = object.__new__(cls)
        obj.ring, obj.m, obj._coeffs = ring, m, stored
        return obj

    def coeff(self, a, b):
        """c[alpha, beta], using the Hermitian mirror when needed."""
        index = monomial_index(self.ring, self.m)
        a, b = tuple(a), tuple(b)
        if index[a] <= index[b]:
            return self._coeffs.get((a, b), ZERO)
        return self._coeffs.get((b, a), ZERO).conjugate()

    def items(self):
        """All nonzero (alpha, beta, c) including mirrors."""
        for (a, b), c in self._coeffs.items():
            yield a, b, c
            if a != b:
                yield b, a, c.conjugate()

    def stored_items(self):
        return self._coeffs.items()

    def is_zero(self):
        return not self._coeffs

    def __eq__(self, other):
        return (isinstance(other, BiForm) and self.ring == other.ring and self.m == other.m
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.ring, self.m, frozenset(self._coeffs.items())))

    def _combine(self, other, sign):
        if self.ring != other.ring or self.m != other.m:
            raise RingMismatchError("forms live in different rings or bidegrees")
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = out.get(k, ZERO) + (c if sign > 0 else -c)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiForm._raw(self.ring, self.m, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c):
        """Real multiple (a complex multiple would break Hermitian symmetry)."""
        c = Fraction(c)
        if not c:
            return BiForm._raw(self.ring, self.m, {})
        return BiForm._raw(self.ring, self.m, {k: v * c for k, v in self._coeffs.items()})

    def to_json(self):
        terms = []
        for (a, b), c in sorted(self._coeffs.items(), key=_pair_sort_key(self.ring, self.m)):
            terms.append({"a": render_monomial(self.ring, a), "b": render_monomial(self.ring, b), "c": str(c)})
        return {"schema": BIFORM_SCHEMA, "ring": self.ring.to_json(), "m": self.m, "terms": terms}

    @classmethod
    def from_json(cls, obj):
        try:
            ring = ring_from_json(obj["ring"])
            m = int(obj["m"])
            coeffs = {}
            for t in obj["terms"]:
                a = _parse_monomial(t["a"], ring)
                b = _parse_monomial(t["b"], ring)
                c = parse_coefficient(str(t["c"]))
                if (a, b) in coeffs:
                    raise InputError(f"duplicate term {t}")
                coeffs[(a, b)] = c
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed BiForm JSON: {exc}") from exc
        return cls(ring, m, coeffs)

    @classmethod
    def load(cls, path):
        return cls.from_json(load_json(path))

    def render(self):
        if not self._coeffs:
            return "0"
        parts = []
        for a, b, c in sorted(self.items(), key=lambda t: _pair_sort_key(self.ring, self.m)(((t[0], t[1]), t[2]))):
            parts.append(f"({c})*{render_monomial(self.ring, a)}*conj({render_monomial(self.ring, b)})")
        return " + ".join(parts)

    def __repr__(self):
        return f"BiForm(m={self.m}, {self.render()})"


def _pair_sort_key(ring, m):
    index = monomial_index(ring, m)
    return lambda item: (index[item[0][0]], index[item[0][1]])


def _parse_monomial(text, ring):
    p = parse_polynomial(text, ring)
    if len(p.terms) != 1 or next(iter(p.terms.values())) != ONE:
        raise InputError(f"{text!r} is not a monomial")
    return next(iter(p.terms))


@dataclass(frozen=True)
class HermitianMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(GaussRational(c) for c in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if any(len(r) != len(rows) for r in rows):
            raise InputError("matrix is not square")

    @property
    def dimension(self):
        return len(self.entries)

    def __getitem__(self, jk):
        return self.entries[jk[0]][jk[1]]

    def is_hermitian(self):
        n = self.dimension
        return all(self.entries[j][k] == self.entries[k][j].conjugate() for j in range(n) for k in range(j, n))

    def quadratic_value(self, v):
        """v^* H v (a real Fraction)."""
        n = self.dimension
        total = ZERO
        for j in range(n):
            if not v[j]:
                continue
            row = self.entries[j]
            s = sum((row[k] * v[k] for k in range(n) if v[k]), ZERO)
            total = total + GaussRational(v[j]).conjugate() * s
        assert not total.im
        return total.re

    def congruent(self, S):
        """S^* H S."""
        n = self.dimension
        HS = [[sum((self.entries[j][l] * S[l][k] for l in range(n)), ZERO) for k in range(n)] for j in range(n)]
        return HermitianMatrix(tuple(
            tuple(sum((GaussRational(S[l][j]).conjugate() * HS[l][k] for l in range(n)), ZERO) for k in range(n))
            for j in range(n)))

    def to_float(self):
        import numpy as np
        return np.array([[complex(c) for c in row] for row in self.entries])


@dataclass(frozen=True)
class Inertia:
    P: int
    N: int
    Z: int

    @property
    def rank(self):
        return self.P + self.N

    def __iter__(self):
        return iter((self.P, self.N, self.Z))


@dataclass(frozen=True)
class HoloDecomposition:
    """r = sum_j weights[j] * |forms[j]|^2 with linearly independent forms."""

    weights: tuple
    forms: tuple

    @property
    def positive(self):
        return [f for w, f in zip(self.weights, self.forms) if w > 0]

    @property
    def negative(self):
        return [f for w, f in zip(self.weights, self.forms) if w < 0]


def coefficient_matrix(r):
    monos = monomials_of_degree(r.ring, r.m)
    return HermitianMatrix(tuple(tuple(r.coeff(a, b) for b in monos) for a in monos))


@dataclass
class Congruence:
    """Exact diagonalization ``S^* H S = diag(d)`` with ``A = S^{-*}``, so ``H = A diag(d) A^*``.

    When the sweep stopped early on a failed PSD check, ``failure`` holds the
    certificate and ``d`` is partial.
    """

    d: list
    S: list
    A: list
    failure: "PSDCertificate | None" = None


@dataclass(frozen=True)
class PSDCertificate:
    """Evidence for or against positive semidefiniteness.

    kind is ``congruence`` (PSD: S^* H S diagonal and nonnegative),
    ``negative-pivot`` or ``zero-pivot-minor`` (not PSD). Not-PSD
    certificates carry a vector v with v^* H v = value < 0; for
    ``zero-pivot-minor`` the 2x2 principal minor of the reduced matrix is
    given as well.
    """

    psd: bool
    kind: str
    diagonal: tuple = ()
    S: tuple = ()
    vector: tuple = ()
    value: Fraction | None = None
    minor: tuple = ()

    def check(self, H):
        """Re-verify the certificate against H by direct multiplication."""
        if self.psd:
            D = H.congruent([list(r) for r in self.S]).entries
            n = H.dimension
            return all((D[j][k] == (self.diagonal[j] if j == k else 0)) for j in range(n) for k in range(n)) \
                and all(x >= 0 for x in self.diagonal)
        return self.value is not None and self.value < 0 and H.quadratic_value(self.vector) == self.value


def _identity(n):
    return [[ONE if j == k else ZERO for k in range(n)] for j in range(n)]


def congruence_diagonalize(H, stop_on_negative=False):
    """Symmetric-pivoting congruence diagonalization over Q(i).

    A nonzero diagonal pivot is used whenever one remains. Otherwise a
    nonzero off-diagonal entry a[j][k] is folded into the diagonal by adding
    a[j][k] times row/column k to row/column j, which makes a[j][j] =
    2|a[j][k]|^2 > 0.
    """
    if not H.is_hermitian():
        raise NotHermitianError("matrix is not Hermitian")
    n = H.dimension
    M = [list(r) for r in H.entries]
    T = _identity(n)  # T H T^* = current M
    A = _identity(n)  # A = T^{-1}
    d = [ZERO] * n
    remaining = list(range(n))

    def add_multiple(j, k, c):
        # row_j += c row_k ; col_j += conj(c) col_k ; T <- E T ; A <- A E^{-1}
        cc = c.conjugate()
        for l in range(n):
            M[j][l] = M[j][l] + c * M[k][l]
        for l in range(n):
            M[l][j] = M[l][j] + cc * M[l][k]
        for l in range(n):
            T[j][l] = T[j][l] + c * T[k][l]
        for l in range(n):
            A[l][k] = A[l][k] - c * A[l][j]

    def S_of():
        return [[T[k][j].conjugate() for k in range(n)] for j in range(n)]

    def vector_for(w):
        # v = S w = T^* w
        return tuple(sum((T[k][j].conjugate() * w[k] for k in range(n)), ZERO) for j in range(n))

    failure = None
    while remaining:
        p = next((j for j in remaining if M[j][j]), None)
        if p is None:
            pair = next(((j, k) for j in remaining for k in remaining if k != j and M[j][k]), None)
            if pair is None:
                break
            j, k = pair
            if stop_on_negative:
                a = M[j][k]
                akk = M[k][k].re
                s = (abs(akk) + 1) / a.norm_sq()
                w = [ZERO] * n
                w[j] = -a * s
                w[k] = ONE
                value = akk - 2 * s * a.norm_sq()
                failure = PSDCertificate(False, "zero-pivot-minor", vector=vector_for(w), value=value,
                                         minor=((M[j][j], M[j][k]), (M[k][j], M[k][k])))
                break
            add_multiple(j, k, M[j][k])
            p = j
        piv = M[p][p]
        if stop_on_negative and piv.re < 0:
            w = [ZERO] * n
            w[p] = ONE
            failure = PSDCertificate(False, "negative-pivot", vector=vector_for(w), value=piv.re)
            break
        d[p] = piv
        remaining.remove(p)
        inv = piv.inverse()
        for i in remaining:
            if M[i][p]:
                add_multiple(i, p, -(M[i][p] * inv))
    S = S_of()
    return Congruence([x.re for x in d], S, A, failure)


def inertia(H):
    """(P, N, Z) by exact congruence diagonalization (Sylvester's law)."""
    d = congruence_diagonalize(H).d
    return Inertia(sum(1 for x in d if x > 0), sum(1 for x in d if x < 0), sum(1 for x in d if x == 0))


def is_psd(H):
    """(bool, PSDCertificate)."""
    result = congruence_diagonalize(H, stop_on_negative=True)
    if result.failure is not None:
        return False, result.failure
    return True, PSDCertificate(True, "congruence", diagonal=tuple(result.d),
                                S=tuple(tuple(r) for r in result.S))


def holomorphic_decomposition(r):
    """Weights d_j and independent forms L_j with r = sum d_j |L_j|^2."""
    H = coefficient_matrix(r)
    result = congruence_diagonalize(H)
    monos = monomials_of_degree(r.ring, r.m)
    weights, forms = [], []
    for j, w in enumerate(result.d):
        if not w:
            continue
        col = {monos[l]: result.A[l][j] for l in range(len(monos)) if result.A[l][j]}
        weights.append(w)
        forms.append(Polynomial(r.ring, col))
    return HoloDecomposition(tuple(weights), tuple(forms))


def expand_decomposition(dec, ring, m):
    """Re-expand sum d_j |L_j|^2 into a BiForm (independent of the diagonalization)."""
    total = BiForm(ring, m)
    for w, f in zip(dec.weights, dec.forms):
        total = total + squared_norm_of_map([f], ring=ring, m=m).scale(w)
    return total


def multiply_by_norm(r):
    """r(z, zbar) * sum_j |z_j|^2, of bidegree (m+1, m+1)."""
    n = r.ring.n
    out = {}
    for a, b, c in r.items():
        for j in range(n):
            aj = a[:j] + (a[j] + 1,) + a[j + 1:]
            bj = b[:j] + (b[j] + 1,) + b[j + 1:]
            out[(aj, bj)] = out.get((aj, bj), ZERO) + c
    return BiForm(r.ring, r.m + 1, {k: v for k, v in out.items() if v})


def squared_norm_of_map(h, ring=None, m=None):
    """||h||^2 = sum_k |h_k|^2 for forms h_k of a common degree."""
    h = [p for p in h]
    if not h:
        if ring is None:
            raise InputError("the empty map needs an explicit ring")
        return BiForm(ring, m or 0)
    ring = ring or h[0].ring
    degs = set()
    for p in h:
        if p.ring != ring:
            raise RingMismatchError("components live in different rings")
        if not p.is_homogeneous():
            raise NonHomogeneousError(f"component {p} is not homogeneous")
        if p:
            degs.add(p.degree())
    if len(degs) > 1:
        raise NonHomogeneousError(f"components have mixed degrees {sorted(degs)}")
    deg = degs.pop() if degs else (m or 0)
    if m is not None and deg != m:
        raise NonHomogeneousError(f"components have degree {deg}, expected {m}")
    index = monomial_index(ring, deg)
    out = {}
    for p in h:
        for a, ca in p.terms.items():
            for b, cb in p.terms.items():
                if index[a] <= index[b]:
                    out[(a, b)] = out.get((a, b), ZERO) + ca * cb.conjugate()
    return BiForm._raw(ring, deg, {k: v for k, v in out.items() if v})


def squared_norm_rank(r):
    """rho: rank of a PSD coefficient matrix; raises NotPSDError otherwise."""
    H = coefficient_matrix(r)
    ok, cert = is_psd(H)
    if not ok:
        raise NotPSDError(cert)
    return sum(1 for x in cert.diagonal if x)


def form_from_maps(plus, minus=(), ring=None, m=None):
    """sum |f|^2 - sum |g|^2."""
    ring = ring or (plus[0].ring if plus else minus[0].ring)
    if m is None:
        m = (list(plus) + list(minus))[0].degree()
    return squared_norm_of_map(plus, ring=ring, m=m) - squared_norm_of_map(minus, ring=ring, m=m)
