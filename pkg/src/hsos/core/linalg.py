"""Exact sparse linear algebra over Q or Q(i).

Vectors are dicts ``column -> value`` with integer columns and no zeros.
Real Gaussian rationals are lowered to ``Fraction`` on entry because
Fraction arithmetic is several times faster.
"""

from fractions import Fraction

from .numbers import GaussRational


def lower(c):
    if isinstance(c, GaussRational):
        return c.re if c.is_real else c
    if isinstance(c, int):
        return Fraction(c)
    return c


def sparse(vec):
    """Dense sequence -> sparse dict."""
    return {j: lower(c) for j, c in enumerate(vec) if c}


def _axpy(v, a, row):
    """v - a*row, in place; returns v."""
    for j, c in row.items():
        s = v.get(j)
        if s is None:
            v[j] = -a * c
        else:
            s = s - a * c
            if s:
                v[j] = s
            else:
                del v[j]
    return v


class Echelon:
    """Incrementally maintained row-echelon basis of a subspace.

    Each stored row has its minimal column as pivot, normalized to 1, and
    distinct rows have distinct pivots.
    """

    def __init__(self, rows=()):
        self.rows = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self):
        return len(self.rows)

    def _leading_reduce(self, v):
        v = {j: lower(c) for j, c in v.items() if c}
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                return v, p
            _axpy(v, v[p], row)
        return v, None

    def add(self, v):
        """Insert v; returns True when it was independent of the current span."""
        v, p = self._leading_reduce(v)
        if p is None:
            return False
        inv = 1 / v[p]
        self.rows[p] = {j: c * inv for j, c in v.items()}
        return True

    def contains(self, v):
        return self._leading_reduce(v)[1] is None

    def reduce(self, v):
        """Canonical remainder of v modulo the span (a linear map)."""
        v = {j: lower(c) for j, c in v.items() if c}
        out = {}
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                out[p] = v.pop(p)
            else:
                _axpy(v, v[p], row)
        return out


def rank(rows):
    return Echelon(rows).rank


def left_kernel(rows, ncols):
    """Basis of {c : sum_k c_k rows[k] = 0}, each as a dict ``k -> c_k``."""
    ech = Echelon()
    for k, r in enumerate(rows):
        aug = {j: c for j, c in r.items() if c}
        if any(j >= ncols for j in aug):
            raise ValueError("column index out of range")
        aug[ncols + k] = 1
        ech.add(aug)
    kernel = []
    for p in sorted(ech.rows):
        if p >= ncols:
            kernel.append({j - ncols: c for j, c in ech.rows[p].items()})
    return kernel
