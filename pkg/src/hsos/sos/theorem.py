"""Executable forms of the squared-norm results: containment, scaling certificates,
and the four-variable example with P = 3 < n."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..core.linalg import Echelon, sparse
from ..core.parsing import parse_polynomial
from ..core.polynomial import RingContext, coefficient_vector
from ..errors import HsosError, HypothesisError, InputError, StageFailure
from ..groebner import Ideal, colon_poly, contains, graded_containment, ideal_equal
from ..hermitian import (
    coefficient_matrix,
    holomorphic_decomposition,
    inertia,
    is_psd,
    multiply_by_norm,
    squared_norm_of_map,
)
from .bounds import classify_rank
from .report import SosReport

EXAMPLE_GENERATORS = ("z4^2", "z2*z3 + z1*z4", "z2^2 + z2*z4")
EXAMPLE_G = "z2^2"
SCALING_CAP = 2 ** 64


def ideals_from_form(r):
    """(I+, I-, m) generated by the positive- and negative-weight forms of r."""
    if r.is_zero():
        raise InputError("the zero form has no holomorphic decomposition")
    dec = holomorphic_decomposition(r)
    return Ideal(r.ring, dec.positive), Ideal(r.ring, dec.negative), r.m


def _check_degree(gens, m):
    for g in gens:
        if not g.is_homogeneous() or g.degree() != m:
            raise HypothesisError(f"{g} is not a form of degree {m}")


def check_independent(polys, m):
    """Raise HypothesisError unless the degree-m forms are linearly independent."""
    ech = Echelon()
    for p in polys:
        if not ech.add(sparse(coefficient_vector(p, m))):
            raise HypothesisError(f"{p} lies in the span of the preceding forms")


def _validate(Iplus, Iminus, m):
    if Iplus.ring != Iminus.ring:
        raise HypothesisError("I+ and I- live in different rings")
    _check_degree(Iplus.generators, m)
    _check_degree(Iminus.generators, m)
    ech = Echelon(sparse(coefficient_vector(f, m)) for f in Iplus.generators)
    if ech.rank != len(Iplus.generators):
        raise HypothesisError("the generators of I+ are linearly dependent")
    check_independent(list(Iplus.generators) + list(Iminus.generators), m)


def containment_pair(Iplus, Iminus, m):
    """(graded containment in degree m+1, colon-equals-m result or None)."""
    _validate(Iplus, Iminus, m)
    graded = graded_containment(Iplus, Iminus, m + 1)
    colon = None
    if len(Iminus.generators) == 1:
        colon = ideal_equal(colon_poly(Iplus, Iminus.generators[0]), Ideal.maximal(Iplus.ring))
        if colon != graded:
            raise HsosError(f"graded containment ({graded}) disagrees with the colon test ({colon})")
    return graded, colon


def containment_check(Iplus, Iminus, m):
    """I-_{m+1} contained in I+_{m+1}; cross-checked against I+ : g = m when I- = <g>."""
    return containment_pair(Iplus, Iminus, m)[0]


@dataclass(frozen=True)
class NecessaryCondition:
    psd: bool
    containment: bool
    certificate: object

    @property
    def implication_holds(self):
        return self.containment or not self.psd


def necessary_condition(r):
    """Evaluate both sides of: r*||z||^2 PSD  implies  I-_{m+1} in I+_{m+1}."""
    Iplus, Iminus, m = ideals_from_form(r)
    ok, cert = is_psd(coefficient_matrix(multiply_by_norm(r)))
    contained = graded_containment(Iplus, Iminus, m + 1)
    return NecessaryCondition(ok, contained, cert)


@dataclass
class ScalingResult:
    status: str  # "found" | "impossible" | "cap-reached"
    C: Fraction | None = None
    certificate: object = None
    path: list = field(default_factory=list)  # (C, psd) along the doubling sequence


def scaled_form(fgens, g, C):
    """C*||f||^2 - |g|^2."""
    m = g.degree()
    return squared_norm_of_map(fgens, ring=g.ring, m=m).scale(C) - squared_norm_of_map([g], ring=g.ring, m=m)


def find_scaling(fgens, g, cap=SCALING_CAP):
    """Smallest C in 1, 2, 4, ... with (C||f||^2 - |g|^2)||z||^2 PSD.

    Reports ``impossible`` without searching when the degree m+1
    containment fails, since containment is necessary for every C.
    """
    fgens = list(fgens)
    if not g:
        raise HypothesisError("g must be nonzero")
    m = g.degree()
    _check_degree(fgens + [g], m)
    check_independent(fgens + [g], m)
    ring = g.ring
    if not containment_check(Ideal(ring, fgens), Ideal(ring, [g]), m):
        return ScalingResult("impossible")
    A = multiply_by_norm(squared_norm_of_map(fgens, ring=ring, m=m))
    B = multiply_by_norm(squared_norm_of_map([g], ring=ring, m=m))
    path = []
    C = Fraction(1)
    while C <= cap:
        ok, cert = is_psd(coefficient_matrix(A.scale(C) - B))
        path.append((C, ok))
        if ok:
            return ScalingResult("found", C, cert, path)
        C *= 2
    return ScalingResult("cap-reached", None, None, path)


STAGES = (
    "g-not-in-I+",
    "linear-independence",
    "colon-equals-m",
    "graded-containment",
    "psd-scaling",
    "signature",
)


def verify_paper_example(n=4, g_text=EXAMPLE_G, generators=EXAMPLE_GENERATORS, log=None):
    """Check, in order, the six stages for I+ = <z4^2, z2 z3 + z1 z4, z2^2 + z2 z4>, g = z2^2.

    Each stage is logged through ``log`` (a callable taking one line). A
    failing stage raises StageFailure naming it; malformed input (for
    instance n < 4, where z4 does not exist) raises InputError first.
    """
    say = log or (lambda line: None)
    ring = RingContext.standard(n)
    fgens = [parse_polynomial(t, ring) for t in generators]
    g = parse_polynomial(g_text, ring)
    m = g.degree()
    Iplus = Ideal(ring, fgens)
    maxideal = Ideal.maximal(ring)
    report = SosReport(n=n, m=m, iplus=[str(f) for f in fgens], iminus=[str(g)])
    say(f"I+ = {Iplus}, g = {g}, n = {n}, m = {m}")

    def stage(k, passed, detail):
        name = STAGES[k]
        report.stages.append({"stage": name, "passed": bool(passed), "detail": detail})
        say(f"[{k + 1}/6] {name:<20} {'PASS' if passed else 'FAIL'}  {detail}")
        if not passed:
            exc = StageFailure(name, detail)
            exc.report = report
            raise exc

    stage(0, not contains(Iplus, g), f"normal form of g modulo I+ is {Iplus.gb().reduce(g)}")

    try:
        check_independent(fgens + [g], m)
        independent = True
    except HypothesisError:
        independent = False
    stage(1, independent, f"rank of the {len(fgens) + 1} coefficient vectors in degree {m}")

    colon = colon_poly(Iplus, g)
    report.colon = ideal_equal(colon, maxideal)
    stage(2, report.colon, f"I+ : g = {colon}")

    report.containment = graded_containment(Iplus, Ideal(ring, [g]), m + 1)
    stage(3, report.containment, f"<g>_{m + 1} in I+_{m + 1}")

    scaling = find_scaling(fgens, g)
    report.scaling = scaling
    stage(4, scaling.status == "found",
          f"C = {scaling.C}" if scaling.C is not None else f"scaling search: {scaling.status}")

    r = scaled_form(fgens, g, scaling.C)
    sig = inertia(coefficient_matrix(r))
    report.inertia = sig
    rho = sum(1 for x in scaling.certificate.diagonal if x)
    report.rho = rho
    report.classification = str(classify_rank(n, rho))
    stage(5, sig.P == len(fgens) and sig.N == 1 and sig.P < n,
          f"inertia of C*||f||^2 - |g|^2 is ({sig.P}, {sig.N}, {sig.Z}); P = {sig.P} < n = {n}")
    report.verified = True
    return report
