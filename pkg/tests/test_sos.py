import json
from fractions import Fraction

import pytest

from hsos.core import RingContext, parse_polynomial
from hsos.errors import BudgetExceededError, HypothesisError, InputError, StageFailure
from hsos.groebner import Ideal
from hsos.hermitian import coefficient_matrix, form_from_maps, inertia, is_psd, multiply_by_norm
from hsos.sos import (
    classify_rank,
    compute_bounds,
    compute_k0,
    containment_check,
    exhaustive_small_search,
    find_scaling,
    ideals_from_form,
    necessary_condition,
    scaled_form,
    verify_paper_example,
)
from hsos.sos.corpus import containment_corpus, form_corpus
from hsos.sos.report import dumps
from hsos.sos.search import candidate_pool, search_space_size

R2 = RingContext.standard(2)
R4 = RingContext.standard(4)


def polys(ring, *texts):
    return [parse_polynomial(t, ring) for t in texts]


def brute_bounds(n):
    k0 = max(k for k in range(n + 1) if k * (k + 1) / 2 < n - 1)
    threshold = (k0 + 1) * n - k0 * (k0 + 1) // 2
    bands = [(n * k - k * (k - 1) // 2, n * k) for k in range(k0 + 1)]
    return k0, threshold, bands


def test_bounds_examples():
    b = compute_bounds(4)
    assert (b.k0, b.threshold) == (1, 7)
    assert b.bands == ((0, 0), (4, 4))
    assert compute_bounds(2).k0 == 0 and compute_bounds(2).threshold == 2
    with pytest.raises(InputError):
        compute_bounds(1)


@pytest.mark.parametrize("n", range(2, 101))
def test_bounds_match_brute_force(n):
    b = compute_bounds(n)
    k0, threshold, bands = brute_bounds(n)
    assert (b.k0, b.threshold, list(b.bands)) == (k0, threshold, bands)
    assert compute_k0(n) == k0


def test_classify_examples():
    assert str(classify_rank(4, 2)) == "gap-violation"
    assert str(classify_rank(4, 4)) == "in-band(1)"
    assert str(classify_rank(4, 0)) == "in-band(0)"
    assert str(classify_rank(4, 7)) == "above-threshold"
    assert str(classify_rank(4, 12)) == "above-threshold"
    with pytest.raises(InputError):
        classify_rank(4, -1)


def test_classify_consistent_with_bands():
    for n in range(2, 31):
        b = compute_bounds(n)
        for rho in range(0, b.threshold + 3):
            c = classify_rank(n, rho)
            in_band = [k for k, (lo, hi) in enumerate(b.bands) if lo <= rho <= hi]
            if rho >= b.threshold:
                assert c.kind == "above-threshold"
            elif in_band:
                assert c.kind == "in-band" and c.band == in_band[0]
            else:
                assert c.kind == "gap-violation"


def test_ideals_from_form():
    x, y = R2.gens()
    Ip, Im, m = ideals_from_form(form_from_maps([x], [y]))
    assert m == 1 and Ip.generators == (x,) and Im.generators == (y,)
    with pytest.raises(InputError):
        ideals_from_form(form_from_maps([], [], ring=R2, m=1))


def test_containment_check_examples():
    x, y = R2.gens()
    Ip = Ideal(R2, [x * x, x * y])
    assert not containment_check(Ip, Ideal(R2, [y * y]), 2)
    Ip = Ideal(R2, polys(R2, "z1^2", "z2^2"))
    assert containment_check(Ip, Ideal(R2, polys(R2, "z1*z2")), 2)
    # dependent: z1^2 + z2^2 lies in the span of <z1^2, z1 z2, z2^2>
    with pytest.raises(HypothesisError):
        containment_check(Ideal(R2, polys(R2, "z1^2", "z1*z2", "z2^2")), Ideal(R2, polys(R2, "z1^2 + z2^2")), 2)


def test_containment_corpus_agreement():
    pairs = containment_corpus()
    assert len(pairs) >= 20
    for Ip, g in pairs:
        # containment_check raises if the graded and colon answers disagree
        containment_check(Ip, Ideal(Ip.ring, [g]), g.degree())


def test_necessary_condition_examples():
    x, y = R2.gens()
    nc = necessary_condition(form_from_maps([x], [y]))
    assert not nc.psd and not nc.containment and nc.implication_holds
    # 2|z1^2|^2 + 2|z2^2|^2 - |z1 z2|^2 times ||z||^2 is PSD
    r = form_from_maps(polys(R2, "z1^2", "z2^2"), polys(R2, "z1*z2"))
    r = r + form_from_maps(polys(R2, "z1^2", "z2^2"), [], ring=R2, m=2)
    nc = necessary_condition(r)
    assert nc.psd and nc.containment


def test_necessary_condition_corpus():
    seen_psd = 0
    for r in form_corpus():
        if r.is_zero():
            continue
        nc = necessary_condition(r)
        assert nc.implication_holds
        seen_psd += nc.psd
    assert seen_psd > 0


def test_find_scaling_rejects_dependent():
    with pytest.raises(HypothesisError):
        find_scaling(polys(R2, "z1^2", "z2^2"), parse_polynomial("z1^2 - z2^2", R2))


def test_find_scaling_impossible():
    res = find_scaling(polys(R2, "z1^2"), parse_polynomial("z2^2", R2))
    assert res.status == "impossible" and res.C is None


def test_find_scaling_simple():
    res = find_scaling(polys(R2, "z1^2", "z2^2"), parse_polynomial("z1*z2", R2))
    assert res.status == "found"
    assert res.certificate.check(coefficient_matrix(multiply_by_norm(scaled_form(
        polys(R2, "z1^2", "z2^2"), parse_polynomial("z1*z2", R2), res.C))))


def test_find_scaling_cap():
    res = find_scaling(polys(R2, "z1^2", "z2^2"), parse_polynomial("z1*z2", R2), cap=Fraction(1, 2))
    assert res.status == "cap-reached" and res.path == []


def test_example_scaling_and_signature():
    f = polys(R4, "z4^2", "z2*z3 + z1*z4", "z2^2 + z2*z4")
    g = parse_polynomial("z2^2", R4)
    res = find_scaling(f, g)
    assert res.status == "found" and res.C == 8
    assert [ok for _, ok in res.path] == [False, False, False, True]
    for C in (res.C, 2 * res.C, 16 * res.C, Fraction(1000)):
        ok, cert = is_psd(coefficient_matrix(multiply_by_norm(scaled_form(f, g, C))))
        assert ok and cert.check(coefficient_matrix(multiply_by_norm(scaled_form(f, g, C))))
    for C in (Fraction(1, 2), 1, 8, 100):
        sig = inertia(coefficient_matrix(scaled_form(f, g, C)))
        assert (sig.P, sig.N) == (3, 1)


def test_verify_paper_example():
    lines = []
    rep = verify_paper_example(log=lines.append)
    assert rep.verified and len(rep.stages) == 6
    assert all(s["passed"] for s in rep.stages)
    assert tuple(rep.inertia)[:2] == (3, 1)
    assert rep.scaling.C == 8
    assert rep.rho == 12 and rep.classification == "above-threshold"
    assert sum("PASS" in l for l in lines) == 6
    assert dumps(rep.to_json()) == dumps(verify_paper_example().to_json())
    json.loads(dumps(rep.to_json()))


def test_verify_paper_example_failures():
    with pytest.raises(StageFailure) as info:
        verify_paper_example(g_text="z1^2")
    assert info.value.stage == "colon-equals-m"
    assert [s["passed"] for s in info.value.report.stages] == [True, True, False]
    with pytest.raises(StageFailure) as info:
        verify_paper_example(g_text="z4^2")
    assert info.value.stage == "g-not-in-I+"
    with pytest.raises(InputError):
        verify_paper_example(n=3)


def test_candidate_pool_normalized():
    pool = candidate_pool(2, 1, (-1, 0, 1))
    # nonzero vectors in {-1,0,1}^2 up to sign
    assert len(pool) == 4
    assert all(next(c for c in v if c) == 1 for v in pool)
    assert search_space_size(2, 1, 1, (-1, 0, 1)) == 4


@pytest.mark.parametrize("n,m,P", [(2, 0, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 1, 2), (3, 2, 1)])
def test_search_finds_nothing_below_n(n, m, P):
    res = exhaustive_small_search(n, m, P)
    assert res.violations == []


def test_search_detects_violation_when_P_equals_n():
    res = exhaustive_small_search(2, 2, 2)
    assert res.violations
    assert res.contains_pair(polys(R2, "z1^2", "z2^2"), parse_polynomial("z1*z2", R2))


def test_search_budget():
    with pytest.raises(BudgetExceededError) as info:
        exhaustive_small_search(4, 2, 3)
    assert info.value.estimate > 10 ** 6


def test_search_json_deterministic():
    a = dumps(exhaustive_small_search(2, 2, 2).to_json())
    b = dumps(exhaustive_small_search(2, 2, 2, threads=2).to_json())
    assert a == b
    assert json.loads(a)["schema"] == "hsos.search-result/1"


@pytest.mark.slow
def test_search_finds_example_pair_at_n4():
    res = exhaustive_small_search(4, 2, 3, coeffs=(0, 1), max_terms=2)
    assert res.contains_pair(polys(R4, "z4^2", "z2*z3 + z1*z4", "z2^2 + z2*z4"), parse_polynomial("z2^2", R4))
