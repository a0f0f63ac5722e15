"""Koszul complex K(f_1, ..., f_k) with homological indexing.

K_i = Lambda^i(R^k) has basis e_S for i-subsets S of {0..k-1}, listed in
colexicographic order. The differential d_i : K_i -> K_{i-1} is

    d_i(e_{j_1} ^ ... ^ e_{j_i}) = sum_{p=1}^{i} (-1)^p f_{j_p} e_{S - j_p},

with the sign starting at (-1)^1 as written; d_{i-1} d_i = 0 either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core.linalg import Echelon
from .core.polynomial import Polynomial, monomial_index, monomials_of_degree
from .errors import InputError, NonHomogeneousError, RingMismatchError

KOSZUL_SCHEMA = "hsos.koszul/1"


def colex_subsets(k, i):
    return sorted(combinations(range(k), i), key=lambda s: tuple(reversed(s)))


@dataclass(frozen=True)
class KoszulComplex:
    ring: object
    inputs: tuple
    bases: tuple  # bases[i] = colex list of i-subsets
    differentials: tuple  # differentials[i] = d_i as rows x cols of Polynomial; index 0 unused

    @property
    def k(self):
        return len(self.inputs)

    @property
    def ranks(self):
        return tuple(len(b) for b in self.bases)

    def d(self, i):
        return self.differentials[i]

    def to_json(self):
        return {
            "schema": KOSZUL_SCHEMA,
            "ring": self.ring.to_json(),
            "inputs": [str(f) for f in self.inputs],
            "ranks": list(self.ranks),
            "differentials": {str(i): [[str(p) for p in row] for row in self.differentials[i]]
                              for i in range(1, self.k + 1)},
        }


def build(f):
    f = tuple(f)
    if not f:
        raise InputError("the Koszul complex needs at least one element")
    ring = f[0].ring
    for p in f:
        if p.ring != ring:
            raise RingMismatchError("inputs live in different rings")
        if not p:
            raise InputError("Koszul complex of a zero element")
    k = len(f)
    bases = tuple(colex_subsets(k, i) for i in range(k + 1))
    zero = Polynomial.zero(ring)
    diffs = [None]
    for i in range(1, k + 1):
        rows = {T: r for r, T in enumerate(bases[i - 1])}
        mat = [[zero] * len(bases[i]) for _ in bases[i - 1]]
        for col, S in enumerate(bases[i]):
            for p, j in enumerate(S, start=1):
                T = S[:p - 1] + S[p:]
                mat[rows[T]][col] = f[j] if p % 2 == 0 else -f[j]
        diffs.append(tuple(tuple(r) for r in mat))
    return KoszulComplex(ring, f, bases, tuple(diffs))


def compose(A, B):
    """Matrix product of polynomial matrices."""
    ring = A[0][0].ring if A and A[0] else B[0][0].ring
    out = []
    for row in A:
        new = []
        for c in range(len(B[0])):
            acc = Polynomial.zero(ring)
            for l, a in enumerate(row):
                if a and B[l][c]:
                    acc = acc + a * B[l][c]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def verify_dd_zero(K):
    """True iff every composite d_{i-1} d_i vanishes identically."""
    for i in range(2, K.k + 1):
        prod = compose(K.differentials[i - 1], K.differentials[i])
        if any(p for row in prod for p in row):
            return False
    return True


def _stage_degrees(K, i):
    degs = [p.degree() for p in K.inputs]
    return [sum(degs[j] for j in S) for S in K.bases[i]]


def _graded_rank(K, i, d):
    """(dim of K_i in degree d, rank of d_i on that piece)."""
    if i < 0 or i > K.k:
        return 0, 0
    shifts = _stage_degrees(K, i)
    columns = [(c, u) for c, s in enumerate(shifts) if d >= s for u in monomials_of_degree(K.ring, d - s)]
    if i == 0:
        return len(columns), 0
    target_shifts = _stage_degrees(K, i - 1)
    offsets, total = [], 0
    for s in target_shifts:
        offsets.append(total)
        total += len(monomials_of_degree(K.ring, d - s)) if d >= s else 0
    mat = K.differentials[i]
    ech = Echelon()
    for c, u in columns:
        vec = {}
        for r in range(len(mat)):
            entry = mat[r][c]
            if not entry:
                continue
            index = monomial_index(K.ring, d - target_shifts[r])
            for e, coef in entry.terms.items():
                mono = tuple(a + b for a, b in zip(e, u))
                vec[offsets[r] + index[mono]] = coef
        ech.add(vec)
    return len(columns), ech.rank


def graded_homology_dim(K, i, d):
    """dim_{Q(i)} H_i(K)_d = dim ker(d_i)_d - rank(d_{i+1})_d; stages 0..k."""
    for p in K.inputs:
        if not p.is_homogeneous():
            raise NonHomogeneousError(f"{p} is not homogeneous")
    if i < 0 or i > K.k:
        raise InputError(f"stage {i} outside 0..{K.k}")
    if d < 0:
        return 0
    dim_i, rank_i = _graded_rank(K, i, d)
    _, rank_next = _graded_rank(K, i + 1, d) if i < K.k else (0, 0)
    return dim_i - rank_i - rank_next


def with_flipped_sign(K, i, row, col):
    """Copy of K with one differential entry negated (fault injection)."""
    diffs = list(K.differentials)
    mat = [list(r) for r in diffs[i]]
    mat[row][col] = -mat[row][col]
    diffs[i] = tuple(tuple(r) for r in mat)
    return KoszulComplex(K.ring, K.inputs, K.bases, tuple(diffs))


def stage_ranks_expected(k):
    return tuple(comb(k, i) for i in range(k + 1))
