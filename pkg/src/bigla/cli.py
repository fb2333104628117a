"""Command line entry point.

Exit codes: 0 all checks passed, 1 a semantic check failed (axiom
violations, a failed identity), 2 malformed input or bad usage.  Output is
deterministic; wall-clock timing only appears under --timing so that equal
inputs produce byte-identical output otherwise.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import schema
from .catalog import (catalog, so3_group_automorphism, so3_group_elements,
                      so3_standard_rep)
from .deformed import (EvenOddPoly, character_at, parse_poly, star_product,
                       star_vs_pointwise_distinguisher, to_complex)
from .equivalence import (SuperLieAlgebraWithInvolution,
                          jacobiator_alpha_check, rebraid, unbraid)
from .errors import BiglaError, InputNotLie
from .hc import (Functional, bch_product, convolution_commutes,
                 equivariant_hom_basis, inner_automorphism_check,
                 trivial_module)
from .lie import BiGradedAssocAlgebra, BiGradedLieAlgebra, check_lie
from .linear import Vector
from .scalars import CycloScalar, ONE, sign_deligne
from .uea import (EnvelopingAlgebra, TensorElement, antipode, counit, delta,
                  delta_slot, normal_form, pbw_dims, uea_multiply, weyl_map)


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        return schema.load_path(path)
    except OSError as exc:
        raise _Fail(2, f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _Fail(2, f"{path}: {exc}") from exc


def _load_lie(path: str) -> BiGradedLieAlgebra:
    a = _load(path)
    if not isinstance(a, BiGradedLieAlgebra):
        raise _Fail(2, f"{path}: expected kind {schema.KIND_LIE}")
    return a


def _labels(space, idx) -> str:
    return ",".join(space.labels[k] for k in idx)


def _parse_word(U: EnvelopingAlgebra, text: str):
    try:
        return U.word_from_labels(lab.strip() for lab in text.split(","))
    except KeyError as exc:
        raise _Fail(2, f"unknown basis label in word: {exc}") from exc


def _parse_vector(space, text: str) -> Vector:
    coeffs: dict[int, CycloScalar] = {}
    for term in text.split(","):
        term = term.strip()
        if not term:
            raise _Fail(2, f"empty term in vector {text!r}")
        if "*" in term:
            coef_s, lab = term.split("*", 1)
            try:
                c = Fraction(coef_s.strip())
            except ValueError as exc:
                raise _Fail(2, f"bad coefficient {coef_s!r}") from exc
        else:
            c, lab = Fraction(1), term
        lab = lab.strip()
        try:
            k = space.index(lab)
        except KeyError as exc:
            raise _Fail(2, str(exc)) from exc
        prev = coeffs.get(k, CycloScalar.zero())
        coeffs[k] = prev + CycloScalar.from_rational(c)
    return Vector(space, coeffs)


def _emit(args, result: dict, lines: list[str], elapsed: float):
    if args.timing:
        result["elapsed_s"] = round(elapsed, 3)
        lines = lines + [f"elapsed: {elapsed:.3f}s"]
    if args.json:
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# command handlers, each returns (exit code, json result, human lines)

def cmd_check(args):
    a = _load(args.file)
    selected = [w for w in ("antisymmetry", "jacobi", "homogeneity")
                if getattr(args, w)]
    if isinstance(a, BiGradedAssocAlgebra):
        if selected and selected != ["homogeneity"]:
            raise _Fail(2, "only --homogeneity applies to an associative table")
        report = {"homogeneity": a.product.check_homogeneity()}
        if not selected:
            report["associativity"] = a.check_associativity()
            report["unit"] = a.check_unit()
        kind = schema.KIND_ASSOC
    elif isinstance(a, SuperLieAlgebraWithInvolution):
        report = a.check()
        if selected:
            report = {k: v for k, v in report.items() if k in selected}
        kind = schema.KIND_SUPER
        a = a.algebra
    else:
        report = check_lie(a, sign_deligne)
        if selected:
            report = {k: v for k, v in report.items() if k in selected}
        kind = schema.KIND_LIE

    result = {"file": args.file, "kind": kind, "name": a.name, "checks": {}}
    lines = []
    ok = True
    for key in sorted(report):
        bad = report[key]
        items = []
        for entry in bad:
            if key == "involution":
                items.append(f"{entry[0]}: {_labels(a.space, entry[1:])}")
            elif isinstance(entry, tuple):
                items.append(_labels(a.space, entry))
            else:
                items.append(a.space.labels[entry])
        result["checks"][key] = items
        if items:
            ok = False
            lines.append(f"{key}: {len(items)} violation(s)")
            lines.extend(f"  {it}" for it in items)
        else:
            lines.append(f"{key}: ok")
    result["ok"] = ok
    return (0 if ok else 1), result, lines


def cmd_unbraid(args):
    g = _load_lie(args.file)
    try:
        s = unbraid(g)
    except InputNotLie as exc:
        return 1, {"ok": False, "error": str(exc)}, [f"not a Lie table: {exc}"]
    text = schema.dumps(s)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        return 0, {"ok": True, "written": args.output}, [f"wrote {args.output}"]
    return 0, schema.to_doc(s), [text.rstrip("\n")]


def cmd_rebraid(args):
    a = _load(args.file)
    if not isinstance(a, SuperLieAlgebraWithInvolution):
        raise _Fail(2, f"{args.file}: expected kind {schema.KIND_SUPER}")
    g = rebraid(a)
    text = schema.dumps(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        return 0, {"ok": True, "written": args.output}, [f"wrote {args.output}"]
    return 0, schema.to_doc(g), [text.rstrip("\n")]


def cmd_alpha_check(args):
    g = _load_lie(args.file)
    n = g.dim
    plus = minus = 0
    failures = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                r = jacobiator_alpha_check(g, a, b, c)
                if r.alpha_sign == 1:
                    plus += 1
                else:
                    minus += 1
                if not r.identity_holds:
                    failures.append(_labels(g.space, (a, b, c)))
    ok = not failures
    result = {"file": args.file, "triples": n ** 3, "alpha_plus": plus,
              "alpha_minus": minus, "failures": failures, "ok": ok}
    lines = [f"triples checked: {n ** 3} (alpha +1 on {plus}, -1 on {minus})",
             "twist transfer identity: ok" if ok
             else f"twist transfer identity fails on {len(failures)} triple(s)"]
    lines.extend(f"  {f}" for f in failures)
    return (0 if ok else 1), result, lines


def cmd_uea_nf(args):
    g = _load_lie(args.file)
    U = EnvelopingAlgebra(g)
    word = _parse_word(U, args.word)
    elt = normal_form(U, word)
    terms = [{"word": [g.space.labels[k] for k in w],
              "coeff": schema.scalar_to_json(c)}
             for w, c in elt.sorted_terms()]
    result = {"word": [g.space.labels[k] for k in word], "terms": terms,
              "pretty": elt.pretty()}
    return 0, result, [elt.pretty()]


def _hopf_failures(U: EnvelopingAlgebra, max_len: int) -> dict[str, list[str]]:
    labels = U.g.space.labels

    def wname(w):
        return "*".join(labels[k] for k in w) if w else "1"

    fails = {"coassociativity": [], "counit": [], "antipode": [],
             "cocommutativity": [], "multiplicativity": [], "weyl": []}
    words = U.normal_words_up_to(max_len)
    for w in words:
        elt = U.element({w: ONE})
        dw = delta(elt)
        if delta_slot(dw, 0) != delta_slot(dw, 1):
            fails["coassociativity"].append(wname(w))
        left = U.zero()
        right = U.zero()
        for (u, v), c in dw.terms.items():
            left = left + U.element({v: counit(U.element({u: ONE})) * c})
            right = right + U.element({u: counit(U.element({v: ONE})) * c})
        if left != elt or right != elt:
            fails["counit"].append(wname(w))
        acc_l = U.zero()
        acc_r = U.zero()
        for (u, v), c in dw.terms.items():
            acc_l = acc_l + uea_multiply(antipode(U.element({u: ONE})),
                                         U.element({v: ONE})).scale(c)
            acc_r = acc_r + uea_multiply(U.element({u: ONE}),
                                         antipode(U.element({v: ONE}))).scale(c)
        unit_part = U.one().scale(counit(elt))
        if acc_l != unit_part or acc_r != unit_part:
            fails["antipode"].append(wname(w))
        if dw.flip() != dw:
            fails["cocommutativity"].append(wname(w))
    for u in words:
        for v in words:
            if len(u) + len(v) > max_len:
                continue
            eu, ev = U.element({u: ONE}), U.element({v: ONE})
            if delta(uea_multiply(eu, ev)) != delta(eu) * delta(ev):
                fails["multiplicativity"].append(f"{wname(u)} | {wname(v)}")
    S = U.sym()
    for w in words:
        s = S.element({w: ONE})
        lhs = delta(weyl_map(U, s))
        rhs_terms = {}
        for (u, v), c in delta(s).terms.items():
            wu = weyl_map(U, S.element({u: ONE}))
            wv = weyl_map(U, S.element({v: ONE}))
            for uu, cu in wu.terms.items():
                for vv, cv in wv.terms.items():
                    key = (uu, vv)
                    prev = rhs_terms.get(key, CycloScalar.zero())
                    rhs_terms[key] = prev + c * cu * cv
        if lhs != TensorElement(U, 2, rhs_terms):
            fails["weyl"].append(wname(w))
    return fails


def cmd_uea_hopf_check(args):
    g = _load_lie(args.file)
    U = EnvelopingAlgebra(g)
    fails = _hopf_failures(U, args.max_len)
    ok = not any(fails.values())
    nwords = len(U.normal_words_up_to(args.max_len))
    result = {"file": args.file, "max_len": args.max_len, "words": nwords,
              "failures": fails, "ok": ok}
    lines = [f"words up to length {args.max_len}: {nwords}"]
    for key in sorted(fails):
        bad = fails[key]
        lines.append(f"{key}: ok" if not bad else f"{key}: {len(bad)} failure(s)")
        lines.extend(f"  {b}" for b in bad)
    return (0 if ok else 1), result, lines


def cmd_pbw_dims(args):
    g = _load_lie(args.file)
    U = EnvelopingAlgebra(g)
    counted, formula = pbw_dims(U, args.n)
    ok = counted == formula
    result = {"file": args.file, "n": args.n, "enumerated": counted,
              "formula": formula, "match": ok}
    lines = [f"degree {n}: {c} normal words, formula {f}"
             for n, (c, f) in enumerate(zip(counted, formula))]
    lines.append("enumeration matches the formula" if ok
                 else "MISMATCH between enumeration and formula")
    return (0 if ok else 1), result, lines


def cmd_hc_hom_dim(args):
    g = _load_lie(args.file)
    U = EnvelopingAlgebra(g)
    module = trivial_module(g)
    basis = equivariant_hom_basis(U, module, args.n)
    result = {"file": args.file, "module": args.module, "truncation": args.n,
              "dimension": len(basis)}
    return 0, result, [f"equivariant functional dimension at truncation "
                       f"{args.n}: {len(basis)}"]


def _random_functional(U, module, truncation, rng) -> Functional:
    words = U.normal_words_up_to(truncation)
    target = U.word_degree(words[rng.randrange(len(words))])
    vals = {}
    for w in words:
        if U.word_degree(w) == target and rng.random() < 0.6:
            c = CycloScalar.from_rational(Fraction(rng.randint(-3, 3)))
            if c:
                vals[w] = module.space.basis_vector(0).scale(c)
    return Functional(U, module, truncation, vals)


def cmd_hc_conv_check(args):
    g = _load_lie(args.file)
    U = EnvelopingAlgebra(g)
    module = trivial_module(g)
    rng = random.Random(args.seed)
    checked = 0
    failures = 0
    while checked < args.trials:
        phi = _random_functional(U, module, args.n, rng)
        psi = _random_functional(U, module, args.n, rng)
        if phi.shift() is None or psi.shift() is None:
            continue
        if not convolution_commutes(phi, psi):
            failures += 1
        checked += 1
    ok = failures == 0
    result = {"file": args.file, "n": args.n, "trials": checked,
              "failures": failures, "ok": ok}
    return (0 if ok else 1), result, [
        f"convolution commutativity: {checked} random pairs, "
        + ("all commute" if ok else f"{failures} FAILED")]


def cmd_hc_bch(args):
    g = _load_lie(args.file)
    U = EnvelopingAlgebra(g)
    x = _parse_vector(g.space, args.x)
    y = _parse_vector(g.space, args.y)
    res = bch_product(U, x, y, args.n)
    result = {"file": args.file, "n": args.n, "log": res.log.pretty(),
              "primitive": res.primitive}
    lines = [f"log(exp(x) exp(y)) to order {args.n}: {res.log.pretty()}",
             "result is primitive" if res.primitive
             else "result is NOT primitive"]
    return (0 if res.primitive else 1), result, lines


def cmd_hc_inner_check(args):
    if args.rep != "so3-std":
        raise _Fail(2, f"unknown representation {args.rep!r}")
    rep = so3_standard_rep()
    elements = so3_group_elements()
    if args.element not in elements:
        raise _Fail(2, f"unknown group element {args.element!r}; "
                       f"choices: {', '.join(sorted(elements))}")
    expected = so3_group_automorphism(args.element)
    bad = inner_automorphism_check(rep, elements[args.element], expected)
    labels = [rep.space.labels[k] for k in bad]
    ok = not bad
    result = {"rep": args.rep, "element": args.element,
              "target": "degree involution", "violations": labels, "ok": ok}
    lines = [f"conjugation by {args.element} implements the degree involution"
             if ok else
             f"conjugation by {args.element} does not implement the degree "
             f"involution (moves {', '.join(labels)} wrong)"]
    return (0 if ok else 1), result, lines


def cmd_appendix_star(args):
    try:
        f = parse_poly(args.f)
        h = parse_poly(args.g)
        out = star_product(f, h)
    except (ValueError, BiglaError) as exc:
        raise _Fail(2, str(exc)) from exc
    result = {"f": f.pretty(), "g": h.pretty(), "star": out.pretty(),
              "pointwise": f.pointwise_mul(h).pretty()}
    return 0, result, [out.pretty()]


def cmd_appendix_iso_check(args):
    rng = random.Random(args.seed)

    def rand_poly():
        return EvenOddPoly({k: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                            for k in range(args.degree + 1)
                            if rng.random() < 0.7})

    failures = 0
    for _ in range(args.trials):
        f, h = rand_poly(), rand_poly()
        if to_complex(star_product(f, h)) != to_complex(f) * to_complex(h):
            failures += 1
    cert = star_vs_pointwise_distinguisher(3)
    ok = failures == 0 and cert.separates
    result = {"trials": args.trials, "degree": args.degree,
              "failures": failures,
              "distinguisher": {"star_square": cert.star_square.pretty(),
                                "pointwise_square": cert.pointwise_square.pretty(),
                                "separates": cert.separates},
              "ok": ok}
    lines = [f"untwisting is multiplicative on {args.trials} random pairs"
             if failures == 0 else f"{failures} multiplicativity FAILURES",
             f"star square of x: {cert.star_square.pretty()} vs pointwise "
             f"{cert.pointwise_square.pretty()} "
             + ("(products differ)" if cert.separates else "(no separation!)")]
    return (0 if ok else 1), result, lines


def cmd_appendix_character(args):
    try:
        f = parse_poly(args.f)
        a = Fraction(args.a)
    except ValueError as exc:
        raise _Fail(2, str(exc)) from exc
    value, tag = character_at(f, a)
    result = {"f": f.pretty(), "a": str(a), "value": value.pretty(),
              "residue": tag}
    return 0, result, [f"character at {a}: {value.pretty()}  [{tag}]"]


def cmd_examples_list(args):
    rows = []
    for name, (kind, ctor) in sorted(catalog().items()):
        a = ctor()
        rows.append({"name": name, "kind": kind, "dim": a.space.dim})
    result = {"examples": rows}
    width = max(len(r["name"]) for r in rows)
    lines = [f"{r['name']:<{width}}  {r['kind']:<5}  dim {r['dim']}"
             for r in rows]
    return 0, result, lines


def cmd_examples_export(args):
    entries = catalog()
    if args.name not in entries:
        raise _Fail(2, f"unknown example {args.name!r}; "
                       f"run 'bigla examples list'")
    _, ctor = entries[args.name]
    text = schema.dumps(ctor())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        return 0, {"ok": True, "written": args.output}, [f"wrote {args.output}"]
    return 0, schema.to_doc(ctor()), [text.rstrip("\n")]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bigla",
        description="Exact checks and constructions for bi-graded Lie algebras.")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized checks (default 0)")
    p.add_argument("--timing", action="store_true",
                   help="append elapsed wall time to the output")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("check", help="run axiom checks on an algebra file")
    q.add_argument("file")
    q.add_argument("--antisymmetry", action="store_true")
    q.add_argument("--jacobi", action="store_true")
    q.add_argument("--homogeneity", action="store_true")
    q.set_defaults(fn=cmd_check)

    q = sub.add_parser("unbraid", help="twist a bi-graded table to its super companion")
    q.add_argument("file")
    q.add_argument("-o", "--output")
    q.set_defaults(fn=cmd_unbraid)

    q = sub.add_parser("rebraid", help="invert the twist using the stored involution")
    q.add_argument("file")
    q.add_argument("-o", "--output")
    q.set_defaults(fn=cmd_rebraid)

    q = sub.add_parser("alpha-check",
                       help="compare Jacobi defects across the twist on all triples")
    q.add_argument("file")
    q.set_defaults(fn=cmd_alpha_check)

    uea = sub.add_parser("uea", help="enveloping algebra operations")
    usub = uea.add_subparsers(dest="subcommand", required=True)
    q = usub.add_parser("nf", help="normal form of a word")
    q.add_argument("file")
    q.add_argument("--word", required=True, help="comma-separated labels")
    q.set_defaults(fn=cmd_uea_nf)
    q = usub.add_parser("hopf-check", help="coproduct, counit, antipode axioms")
    q.add_argument("file")
    q.add_argument("--max-len", type=int, default=3)
    q.set_defaults(fn=cmd_uea_hopf_check)

    pbw = sub.add_parser("pbw", help="basis counting")
    psub = pbw.add_subparsers(dest="subcommand", required=True)
    q = psub.add_parser("dims", help="normal word counts against the formula")
    q.add_argument("file")
    q.add_argument("--n", type=int, default=4)
    q.set_defaults(fn=cmd_pbw_dims)

    hc = sub.add_parser("hc", help="functionals on the enveloping algebra")
    hsub = hc.add_subparsers(dest="subcommand", required=True)
    q = hsub.add_parser("hom-dim", help="dimension of equivariant functionals")
    q.add_argument("file")
    q.add_argument("--module", choices=["trivial"], default="trivial")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(fn=cmd_hc_hom_dim)
    q = hsub.add_parser("conv-check", help="convolution commutativity sweep")
    q.add_argument("file")
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--trials", type=int, default=20)
    q.set_defaults(fn=cmd_hc_conv_check)
    q = hsub.add_parser("bch", help="truncated log of a product of exponentials")
    q.add_argument("file")
    q.add_argument("--x", required=True, help="vector, e.g. 'e1' or '1/2*e1,e2'")
    q.add_argument("--y", required=True)
    q.add_argument("--n", type=int, default=2)
    q.set_defaults(fn=cmd_hc_bch)
    q = hsub.add_parser("inner-check",
                        help="does conjugation implement the degree involution")
    q.add_argument("--rep", default="so3-std")
    q.add_argument("--element", required=True)
    q.set_defaults(fn=cmd_hc_inner_check)

    ap = sub.add_parser("appendix", help="deformed one-variable products")
    asub = ap.add_subparsers(dest="subcommand", required=True)
    q = asub.add_parser("star", help="star product of two polynomials")
    q.add_argument("--f", required=True)
    q.add_argument("--g", required=True)
    q.set_defaults(fn=cmd_appendix_star)
    q = asub.add_parser("iso-check", help="untwisting isomorphism sweep")
    q.add_argument("--degree", type=int, default=8)
    q.add_argument("--trials", type=int, default=200)
    q.set_defaults(fn=cmd_appendix_iso_check)
    q = asub.add_parser("character", help="evaluation character at a point")
    q.add_argument("--f", required=True)
    q.add_argument("--a", required=True)
    q.set_defaults(fn=cmd_appendix_character)

    ex = sub.add_parser("examples", help="shipped example algebras")
    esub = ex.add_subparsers(dest="subcommand", required=True)
    q = esub.add_parser("list", help="list names, kinds, dimensions")
    q.set_defaults(fn=cmd_examples_list)
    q = esub.add_parser("export", help="write an example as JSON")
    q.add_argument("name")
    q.add_argument("-o", "--output")
    q.set_defaults(fn=cmd_examples_export)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        code, result, lines = args.fn(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BiglaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, result, lines, time.perf_counter() - t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
