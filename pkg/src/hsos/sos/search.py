"""Exhaustive search for (I+, g) with <g>_{m+1} in I+_{m+1} among small forms.

Candidate forms have coefficients from a finite set and are normalized so
their first nonzero coordinate is 1 (an ideal only depends on the span of
its degree-m generators). For every linearly independent P-tuple the socle
{g in R_m : z_j g in I_{m+1} for all j} is computed by linear algebra; when
it is strictly larger than span(f) a violation is recorded, with g taken
from the candidate pool when possible.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from ..core.linalg import Echelon, left_kernel
from ..core.polynomial import RingContext, from_coefficient_vector, monomial_index, monomials_of_degree
from ..errors import BudgetExceededError, InputError
from ..groebner import Ideal

DEFAULT_BUDGET = 10 ** 6


def candidate_pool(n, m, coeffs, max_terms=None):
    """Normalized nonzero coefficient vectors of degree-m forms, deduplicated up to scaling."""
    coeffs = sorted({Fraction(c) for c in coeffs})
    dim = comb(n + m - 1, m)
    seen = set()
    pool = []
    for vec in product(coeffs, repeat=dim):
        support = [j for j, c in enumerate(vec) if c]
        if not support or (max_terms is not None and len(support) > max_terms):
            continue
        lead = vec[support[0]]
        norm = tuple(c / lead for c in vec)
        if norm not in seen:
            seen.add(norm)
            pool.append(norm)
    pool.sort(key=lambda v: (sum(1 for c in v if c), [(-1 if c else 0, c) for c in v]))
    return pool


def search_space_size(n, m, P, coeffs, max_terms=None):
    return comb(len(candidate_pool(n, m, coeffs, max_terms)), P)


def _shift_tables(n, m):
    """For each degree-m monomial index and variable j, the index of z_j * monomial in degree m+1."""
    lo = monomials_of_degree(RingContext.standard(n), m)
    hi_index = monomial_index(RingContext.standard(n), m + 1)
    table = []
    for e in lo:
        row = []
        for j in range(n):
            f = list(e)
            f[j] += 1
            row.append(hi_index[tuple(f)])
        table.append(row)
    return table, len(hi_index)


def _products(vec, table, n):
    """Sparse vectors of z_j * f in degree m+1, j = 0..n-1."""
    out = [dict() for _ in range(n)]
    for k, c in enumerate(vec):
        if c:
            for j in range(n):
                out[j][table[k][j]] = c
    return out


def _sparse(vec):
    return {k: c for k, c in enumerate(vec) if c}


def _shard(args):
    n, m, P, pool, shard, nshards = args
    table, dim_hi = _shift_tables(n, m)
    dim_lo = len(table)
    prods = [_products(v, table, n) for v in pool]
    unit_rows = [[{table[k][j]: Fraction(1)} for j in range(n)] for k in range(dim_lo)]
    stats = {"tuples": 0, "independent": 0, "distinct_spans": 0, "socle_excess": 0}
    seen = set()
    found = []
    # spans are routed to shards by their RREF key so that equal spans
    # always meet in the same shard and the output does not depend on nshards
    for combo in combinations(range(len(pool)), P):
        mine = combo[0] % nshards == shard
        stats["tuples"] += mine
        span = Echelon()
        if not all(span.add(_sparse(pool[k])) for k in combo):
            continue
        stats["independent"] += mine
        key = _rref_key(span)
        if hash(key) % nshards != shard or key in seen:
            continue
        seen.add(key)
        stats["distinct_spans"] += 1
        high = Echelon()
        for k in combo:
            for v in prods[k]:
                high.add(v)
        rows = []
        for k in range(dim_lo):
            row = {}
            for j in range(n):
                for col, c in high.reduce(unit_rows[k][j]).items():
                    row[j * dim_hi + col] = c
            rows.append(row)
        socle_dim = dim_lo - Echelon(rows).rank
        if socle_dim <= P:
            continue
        stats["socle_excess"] += 1
        hits = []
        for gk, gvec in enumerate(pool):
            if span.contains(_sparse(gvec)):
                continue
            if all(high.contains(v) for v in prods[gk]):
                hits.append((gvec, True))
        if not hits:
            for kv in left_kernel(rows, n * dim_hi):
                gvec = tuple(kv.get(k, Fraction(0)) for k in range(dim_lo))
                if not span.contains(_sparse(gvec)):
                    hits.append((gvec, False))
                    break
        for gvec, in_pool in hits:
            found.append((tuple(pool[k] for k in combo), gvec, in_pool))
    return stats, found


def _rref_key(ech):
    key = []
    for p in sorted(ech.rows):
        row = dict(ech.rows[p])
        del row[p]
        reduced = ech.reduce(row)
        key.append((p, tuple(sorted(reduced.items()))))
    return tuple(key)


@dataclass(frozen=True)
class Violation:
    fgens: tuple
    g: str
    g_in_coefficient_set: bool
    key: tuple


@dataclass
class SearchResult:
    n: int
    m: int
    P: int
    coeffs: tuple
    max_terms: int | None
    pool_size: int
    stats: dict
    violations: list = field(default_factory=list)

    def contains_pair(self, fgens, g):
        key = canonical_key(Ideal(fgens[0].ring, fgens), g)
        return any(v.key == key for v in self.violations)

    def to_json(self):
        from .report import SEARCH_SCHEMA
        return {
            "schema": SEARCH_SCHEMA,
            "n": self.n, "m": self.m, "P": self.P,
            "coeffs": [str(c) for c in self.coeffs],
            "max_terms": self.max_terms,
            "pool_size": self.pool_size,
            "stats": dict(sorted(self.stats.items())),
            "violations": [{"iplus": list(v.fgens), "g": v.g, "g_in_coefficient_set": v.g_in_coefficient_set}
                           for v in self.violations],
        }


def canonical_key(Iplus, g):
    """Reduced Groebner basis of I+ together with the monic normal form of g."""
    G = Iplus.gb()
    nf = G.reduce(g).monic()
    return tuple(str(b) for b in G.basis), str(nf)


def _threads(threads):
    if threads is None:
        threads = int(os.environ.get("HSOS_THREADS", "1") or 1)
    return max(1, threads)


def exhaustive_small_search(n, m, P, coeffs=(-1, 0, 1), budget=DEFAULT_BUDGET, max_terms=None, threads=None):
    """Every (I+, g) in the finite space with g not in I+ and <g>_{m+1} in I+_{m+1}.

    For n <= 3 and P < n the expected answer is the empty list.
    """
    if n < 1 or m < 0 or P < 1:
        raise InputError("need n >= 1, m >= 0, P >= 1")
    pool = candidate_pool(n, m, coeffs, max_terms)
    estimate = comb(len(pool), P)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    nshards = _threads(threads)
    jobs = [(n, m, P, pool, s, nshards) for s in range(nshards)]
    if nshards == 1:
        outputs = [_shard(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=nshards) as ex:
            outputs = list(ex.map(_shard, jobs))
    stats = {}
    raw = []
    for st, found in outputs:
        for k, v in st.items():
            stats[k] = stats.get(k, 0) + v
        raw.extend(found)
    ring = RingContext.standard(n)
    violations = {}
    for fvecs, gvec, in_pool in raw:
        fgens = [from_coefficient_vector(ring, m, v) for v in fvecs]
        g = from_coefficient_vector(ring, m, gvec)
        key = canonical_key(Ideal(ring, fgens), g)
        if key not in violations or (in_pool and not violations[key].g_in_coefficient_set):
            violations[key] = Violation(tuple(str(f) for f in fgens), str(g), in_pool, key)
    result = SearchResult(n, m, P, tuple(sorted({Fraction(c) for c in coeffs})), max_terms, len(pool), stats)
    result.violations = [violations[k] for k in sorted(violations)]
    return result
