"""``hsos`` command line: one subcommand per library operation.

Exit codes: 0 verified/true, 1 checked-false, 2 input error, 3 internal or
budget error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import koszul
from .core.parsing import infer_ring, load_json, parse_polynomial, parse_polynomial_list, ring_from_json, split_list
from .core.polynomial import RingContext, order_from_name
from .errors import BudgetExceededError, HsosError, InputError, NotPSDError, StageFailure
from .groebner import (
    Ideal,
    canonical,
    colon_ideal,
    colon_poly,
    contains,
    graded_containment,
    graded_piece_dim,
    intersect,
    is_complete_intersection,
    krull_dimension,
    maximal_ideal_associated,
)
from .hermitian import (
    BiForm,
    coefficient_matrix,
    form_from_maps,
    holomorphic_decomposition,
    inertia,
    is_psd,
    multiply_by_norm,
    squared_norm_rank,
)
from .sos import (
    DEFAULT_BUDGET,
    classify_rank,
    compute_bounds,
    containment_check,
    dumps,
    exhaustive_small_search,
    find_scaling,
    verify_paper_example,
)

CLI_SCHEMA = "hsos.cli/1"

OK, FALSE, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


class Context:
    """Resolves the ring and parses inputs for one invocation."""

    def __init__(self, args):
        self.args = args
        self._ring = None

    def texts(self):
        out = []
        for name in ("ideal", "other", "by", "by_ideal", "poly", "sub", "f", "g", "plus", "minus"):
            v = getattr(self.args, name, None)
            if v:
                out.append(v)
        return out

    def ring(self, file_ring=None):
        if self._ring is None:
            if self.args.vars:
                self._ring = RingContext(tuple(v.strip() for v in self.args.vars.split(",")))
            elif file_ring is not None:
                self._ring = file_ring
            else:
                self._ring = infer_ring(*self.texts())
        return self._ring

    def ideal(self, text_attr="ideal", file_attr="ideal_file"):
        path = getattr(self.args, file_attr, None)
        if path:
            obj = load_json(path)
            ring = self.ring(ring_from_json(obj.get("ring")))
            I = Ideal.from_text(ring, obj.get("generators", []))
            return I
        text = getattr(self.args, text_attr, None)
        if text is None:
            raise InputError(f"missing --{text_attr.replace('_', '-')}")
        return Ideal(self.ring(), parse_polynomial_list(text, self.ring()))

    def poly(self, attr):
        text = getattr(self.args, attr, None)
        if text is None:
            raise InputError(f"missing --{attr.replace('_', '-')}")
        return parse_polynomial(text, self.ring())

    def polys(self, attr):
        text = getattr(self.args, attr, None)
        if text is None:
            return []
        return parse_polynomial_list(text, self.ring())

    def form(self):
        if self.args.form:
            r = BiForm.load(self.args.form)
            self.ring(r.ring)
            return r
        plus, minus = self.polys("plus"), self.polys("minus")
        if not plus and not minus:
            raise InputError("give --form FILE or --plus/--minus lists")
        r = form_from_maps(plus, minus, ring=self.ring())
        if self.args.scale:
            r = r.scale(Fraction(self.args.scale))
        return r

    @property
    def order(self):
        return order_from_name(getattr(self.args, "order", "grevlex") or "grevlex")


def _ideal_text(I):
    return "⟨" + ", ".join(str(g) for g in I.generators) + "⟩"


def _emit(args, payload, text):
    if args.json:
        payload = {"schema": CLI_SCHEMA, "command": args.command, **payload}
        sys.stdout.write(dumps(payload))
    else:
        print(text)


def _bool_exit(value):
    return OK if value else FALSE


# subcommands


def cmd_gb(ctx):
    I = ctx.ideal()
    G = I.gb(ctx.order)
    basis = [g.render(ctx.order) for g in G.basis]
    _emit(ctx.args, {"order": str(ctx.order), "ring": list(I.ring.names), "basis": basis},
          "⟨" + ", ".join(basis) + "⟩")
    return OK


def cmd_nf(ctx):
    I = ctx.ideal()
    f = ctx.poly("poly")
    r = I.gb(ctx.order).reduce(f)
    _emit(ctx.args, {"normal_form": str(r)}, str(r))
    return OK


def cmd_member(ctx):
    I = ctx.ideal()
    polys = ctx.polys("poly")
    if not polys:
        raise InputError("missing --poly")
    results = [contains(I, f) for f in polys]
    _emit(ctx.args, {"member": results}, "\n".join(f"{f}: {'yes' if ok else 'no'}" for f, ok in zip(polys, results)))
    return _bool_exit(all(results))


def cmd_colon(ctx):
    I = ctx.ideal()
    if ctx.args.by_ideal:
        J = Ideal(ctx.ring(), parse_polynomial_list(ctx.args.by_ideal, ctx.ring()))
        Q = colon_ideal(I, J)
    else:
        Q = colon_poly(I, ctx.poly("by"))
    Q = canonical(Q)
    _emit(ctx.args, {"colon": [str(g) for g in Q.generators]}, _ideal_text(Q))
    return OK


def cmd_intersect(ctx):
    I = ctx.ideal()
    J = ctx.ideal("other", "other_file")
    K = canonical(intersect(I, J))
    _emit(ctx.args, {"intersection": [str(g) for g in K.generators]}, _ideal_text(K))
    return OK


def cmd_dim(ctx):
    I = ctx.ideal()
    d = krull_dimension(I)
    _emit(ctx.args, {"dimension": d, "codimension": I.ring.n - d}, f"dim R/I = {d}, codim = {I.ring.n - d}")
    return OK


def cmd_ci(ctx):
    ok = is_complete_intersection(ctx.ideal())
    _emit(ctx.args, {"complete_intersection": ok}, "complete intersection" if ok else "not a complete intersection")
    return _bool_exit(ok)


def cmd_socle(ctx):
    res = maximal_ideal_associated(ctx.ideal())
    w = None if res.witness is None else str(res.witness)
    _emit(ctx.args, {"associated": res.associated, "witness": w,
                     "colon": [str(g) for g in res.colon.generators]},
          f"m is associated; witness {w}" if res.associated else "m is not associated")
    return _bool_exit(res.associated)


def cmd_graded_dim(ctx):
    d = graded_piece_dim(ctx.ideal(), ctx.args.degree)
    _emit(ctx.args, {"degree": ctx.args.degree, "dimension": d}, str(d))
    return OK


def cmd_contain(ctx):
    I = ctx.ideal()
    J = Ideal(ctx.ring(), ctx.polys("sub"))
    if ctx.args.degree is not None:
        ok = graded_containment(I, J, ctx.args.degree)
        degree = ctx.args.degree
    else:
        if not J.generators:
            raise InputError("--sub is empty")
        m = J.generators[0].degree()
        ok = containment_check(I, J, m)
        degree = m + 1
    _emit(ctx.args, {"degree": degree, "contained": ok},
          f"J_{degree} {'is' if ok else 'is not'} contained in I_{degree}")
    return _bool_exit(ok)


def cmd_inertia(ctx):
    r = ctx.form()
    sig = inertia(coefficient_matrix(r))
    _emit(ctx.args, {"P": sig.P, "N": sig.N, "Z": sig.Z}, f"(P, N, Z) = ({sig.P}, {sig.N}, {sig.Z})")
    return OK


def cmd_decompose(ctx):
    r = ctx.form()
    dec = holomorphic_decomposition(r)
    terms = [{"weight": str(w), "form": str(f)} for w, f in zip(dec.weights, dec.forms)]
    _emit(ctx.args, {"terms": terms}, "\n".join(f"{t['weight']} * |{t['form']}|^2" for t in terms) or "0")
    return OK


def cmd_mulnorm(ctx):
    out = multiply_by_norm(ctx.form())
    sys.stdout.write(dumps(out.to_json()))
    return OK


def _certificate_json(cert):
    out = {"psd": cert.psd, "kind": cert.kind}
    if cert.psd:
        out["diagonal"] = [str(x) for x in cert.diagonal]
    else:
        out["vector"] = [str(x) for x in cert.vector]
        out["value"] = str(cert.value)
    return out


def cmd_psd(ctx):
    r = ctx.form()
    if ctx.args.times_norm:
        r = multiply_by_norm(r)
    ok, cert = is_psd(coefficient_matrix(r))
    text = "PSD" if ok else f"not PSD ({cert.kind}): v^*Hv = {cert.value} for v = ({', '.join(map(str, cert.vector))})"
    _emit(ctx.args, {"certificate": _certificate_json(cert)}, text)
    return _bool_exit(ok)


def cmd_rank(ctx):
    r = ctx.form()
    if ctx.args.times_norm:
        r = multiply_by_norm(r)
    try:
        rho = squared_norm_rank(r)
    except NotPSDError as exc:
        _emit(ctx.args, {"rank": None, "certificate": _certificate_json(exc.certificate)}, str(exc))
        return FALSE
    _emit(ctx.args, {"rank": rho}, str(rho))
    return OK


def cmd_bounds(ctx):
    b = compute_bounds(ctx.args.n)
    bands = [list(x) for x in b.bands]
    _emit(ctx.args, {"n": b.n, "k0": b.k0, "threshold": b.threshold, "bands": bands},
          f"n={b.n} k0={b.k0} threshold={b.threshold} bands=" + " ".join(f"[{lo},{hi}]" for lo, hi in b.bands))
    return OK


def cmd_classify(ctx):
    c = classify_rank(ctx.args.n, ctx.args.rho)
    _emit(ctx.args, {"classification": str(c)}, str(c))
    return FALSE if c.kind == "gap-violation" else OK


def cmd_scale(ctx):
    fgens = ctx.polys("f")
    g = ctx.poly("g")
    res = find_scaling(fgens, g)
    payload = {"status": res.status, "C": None if res.C is None else str(res.C),
               "path": [{"C": str(c), "psd": ok} for c, ok in res.path]}
    _emit(ctx.args, payload, f"C = {res.C}" if res.status == "found" else res.status)
    return {"found": OK, "impossible": FALSE}.get(res.status, INTERNAL_ERROR)


def cmd_koszul(ctx):
    K = koszul.build(ctx.polys("f"))
    ok = koszul.verify_dd_zero(K)
    if ctx.args.json:
        sys.stdout.write(dumps({**K.to_json(), "dd_zero": ok}))
    else:
        print(f"ranks {list(K.ranks)}; d o d = 0: {ok}")
        for i in range(1, K.k + 1):
            print(f"d_{i}:")
            for row in K.d(i):
                print("  [" + ", ".join(str(p) for p in row) + "]")
    return _bool_exit(ok)


def cmd_homology(ctx):
    K = koszul.build(ctx.polys("f"))
    degrees = [ctx.args.degree] if ctx.args.degree is not None else list(range(ctx.args.max_degree + 1))
    dims = {d: koszul.graded_homology_dim(K, ctx.args.stage, d) for d in degrees}
    _emit(ctx.args, {"stage": ctx.args.stage, "dims": {str(d): v for d, v in dims.items()}},
          "\n".join(f"H_{ctx.args.stage} degree {d}: {v}" for d, v in dims.items()))
    return OK


def cmd_verify_example(ctx):
    a = ctx.args
    log = None if a.json else print
    try:
        report = verify_paper_example(n=a.n, g_text=a.g or "z2^2", log=log)
    except StageFailure as exc:
        report = getattr(exc, "report", None)
        if report is not None and a.report:
            with open(a.report, "w") as fh:
                fh.write(dumps(report.to_json()))
        if a.json and report is not None:
            sys.stdout.write(dumps(report.to_json()))
        print(f"FAILED at stage {exc.stage}", file=sys.stderr)
        return FALSE
    if a.report:
        with open(a.report, "w") as fh:
            fh.write(dumps(report.to_json()))
    if a.json:
        sys.stdout.write(dumps(report.to_json()))
    else:
        print("all six stages passed")
    return OK


def cmd_search(ctx):
    a = ctx.args
    coeffs = [Fraction(c) for c in split_list(a.coeffs)]
    res = exhaustive_small_search(a.n, a.m, a.P, coeffs, budget=a.budget, max_terms=a.max_terms,
                                  threads=a.threads)
    if a.json:
        sys.stdout.write(dumps(res.to_json()))
    elif not res.violations:
        print(f"examined {res.stats['tuples']} tuples; no violations found (theorem consistent)")
    else:
        print(f"examined {res.stats['tuples']} tuples; {len(res.violations)} pairs with containment:")
        for v in res.violations:
            print(f"  I+ = <{', '.join(v.fgens)}>, g = {v.g}")
    return OK


COMMANDS = {
    "gb": cmd_gb, "nf": cmd_nf, "member": cmd_member, "colon": cmd_colon, "intersect": cmd_intersect,
    "dim": cmd_dim, "ci": cmd_ci, "socle": cmd_socle, "graded-dim": cmd_graded_dim, "contain": cmd_contain,
    "inertia": cmd_inertia, "decompose": cmd_decompose, "mulnorm": cmd_mulnorm, "psd": cmd_psd,
    "rank": cmd_rank, "bounds": cmd_bounds, "classify": cmd_classify, "scale": cmd_scale,
    "koszul": cmd_koszul, "homology": cmd_homology, "verify-example": cmd_verify_example,
    "search": cmd_search,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INPUT_ERROR)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names (default: inferred)")
    common.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    common.add_argument("--json", action="store_true", help="emit JSON")

    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("--ideal", help="generator list, e.g. '[x^2, x*y]'")
    ideal.add_argument("--ideal-file", help="ideal JSON file")

    form = argparse.ArgumentParser(add_help=False)
    form.add_argument("--form", help="BiForm JSON file")
    form.add_argument("--plus", help="forms f_j of sum |f_j|^2")
    form.add_argument("--minus", help="forms g_k of - sum |g_k|^2")
    form.add_argument("--scale", help="rational factor applied to the whole form")

    p = _Parser(prog="hsos", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, parents, help_):
        return sub.add_parser(name, parents=[common] + parents, help=help_)

    add("gb", [ideal], "reduced Groebner basis")
    s = add("nf", [ideal], "normal form")
    s.add_argument("--poly", required=True)
    s = add("member", [ideal], "ideal membership")
    s.add_argument("--poly", required=True, help="polynomial or list")
    s = add("colon", [ideal], "colon ideal I : g or I : J")
    s.add_argument("--by")
    s.add_argument("--by-ideal")
    s = add("intersect", [ideal], "intersection of two ideals")
    s.add_argument("--other")
    s.add_argument("--other-file")
    add("dim", [ideal], "Krull dimension of R/I")
    add("ci", [ideal], "complete intersection test")
    add("socle", [ideal], "is the maximal ideal associated to R/I")
    s = add("graded-dim", [ideal], "dimension of I_d")
    s.add_argument("--degree", type=int, required=True)
    s = add("contain", [ideal], "graded containment J_d in I_d")
    s.add_argument("--sub", required=True, help="generators of J")
    s.add_argument("--degree", type=int)
    add("inertia", [form], "signature (P, N, Z) of the coefficient matrix")
    add("decompose", [form], "holomorphic decomposition")
    add("mulnorm", [form], "r * ||z||^2 as BiForm JSON")
    for name, help_ in (("psd", "PSD test with certificate"), ("rank", "squared-norm rank")):
        s = add(name, [form], help_)
        s.add_argument("--times-norm", action="store_true", help="apply to r * ||z||^2")
    s = add("bounds", [], "conjecture bounds k0, threshold, bands")
    s.add_argument("--n", type=int, required=True)
    s = add("classify", [], "classify a rank against the bounds")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--rho", type=int, required=True)
    s = add("scale", [], "find C with (C||f||^2 - |g|^2)||z||^2 PSD")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s = add("koszul", [], "Koszul complex and d o d = 0 check")
    s.add_argument("--f", required=True)
    s = add("homology", [], "graded homology dimensions of the Koszul complex")
    s.add_argument("--f", required=True)
    s.add_argument("--stage", type=int, required=True)
    s.add_argument("--degree", type=int)
    s.add_argument("--max-degree", type=int, default=6)
    s = add("verify-example", [], "verify the four-variable example with P = 3 < n")
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--g", help="replace g = z2^2")
    s.add_argument("--report", help="write the JSON report here")
    s = add("search", [], "exhaustive search for containment with P < n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--P", type=int, required=True)
    s.add_argument("--coeffs", default="-1,0,1")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--max-terms", type=int)
    s.add_argument("--threads", type=int, help="worker processes (default HSOS_THREADS or 1)")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR
    try:
        return COMMANDS[args.command](Context(args))
    except BudgetExceededError as exc:
        print(f"error: {exc} (refusing; raise --budget or restrict --max-terms)", file=sys.stderr)
        return INTERNAL_ERROR
    except (InputError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except HsosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
