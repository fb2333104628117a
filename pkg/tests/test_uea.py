"""Enveloping-algebra rewriting, the Hopf structure, and PBW bookkeeping."""

import random
from fractions import Fraction

import pytest

from bigla.catalog import algebra_B, catalog_lie, odd_pair, so3, unitary_example
from bigla.errors import AlgebraMismatch, BadBasisOrder, TruncationExceeded
from bigla.lie import commutator_lie
from bigla.linalg import Echelon
from bigla.scalars import ONE, ZETA, CycloScalar
from bigla.uea import (EnvelopingAlgebra, TensorElement, antipode, counit,
                       delta, delta_slot, normal_form, normal_form_random,
                       pbw_dims, pbw_factorize, primitive_vector, uea_multiply,
                       weyl_map)


def _so3_ctx():
    return EnvelopingAlgebra(so3())


def _unitary_ctx():
    return EnvelopingAlgebra(unitary_example())


def _random_element(ctx, rng, n_words=3, max_len=3):
    terms = {}
    for _ in range(n_words):
        w = tuple(rng.randrange(ctx.dim) for _ in range(rng.randrange(max_len + 1)))
        terms[w] = CycloScalar.from_rational(rng.randrange(-3, 4))
    return ctx.element({w: c for w, c in terms.items() if c})


def test_normal_form_so3_oracle():
    ctx = _so3_ctx()
    out = normal_form(ctx, ctx.word_from_labels(["e2", "e1"]))
    assert out.pretty() == "e1*e2 - e3"
    straight = normal_form(ctx, ctx.word_from_labels(["e1", "e2"]))
    assert straight.pretty() == "e1*e2"
    assert ctx.is_normal(ctx.word_from_labels(["e1", "e2"]))
    assert not ctx.is_normal(ctx.word_from_labels(["e2", "e1"]))


def test_normal_form_is_memoized():
    ctx = _unitary_ctx()
    w = (5, 4, 3, 2)
    assert ctx.normal_form(w) is ctx.normal_form(w)


def test_multiplication_is_associative():
    rng = random.Random(7)
    ctx = _unitary_ctx()
    for _ in range(15):
        a, b, c = (_random_element(ctx, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_normal_form_preserves_degree_and_filtration():
    rng = random.Random(11)
    ctx = _unitary_ctx()
    for _ in range(40):
        w = tuple(rng.randrange(ctx.dim) for _ in range(rng.randrange(1, 6)))
        d = ctx.word_degree(w)
        for term, c in ctx.normal_form(w).items():
            assert len(term) <= len(w)
            assert ctx.word_degree(term) == d
            assert ctx.is_normal(term)


def test_exterior_letters_never_repeat():
    ctx = _unitary_ctx()
    x1 = ctx.g.space.index("x1")
    assert ctx.exterior[x1]
    for n in range(4):
        for w in ctx.normal_words(n):
            seen = set()
            for k in w:
                if ctx.exterior[k]:
                    assert k not in seen
                    seen.add(k)


def test_reversed_order_is_still_confluent():
    """Any total order gives a confluent rewriting system; the normal-word
    counts cannot depend on the choice."""
    g = unitary_example()
    default = EnvelopingAlgebra(g)
    reversed_ctx = EnvelopingAlgebra(g, order=list(reversed(default.order)))
    assert pbw_dims(default, 3)[0] == pbw_dims(reversed_ctx, 3)[0]
    rng = random.Random(23)
    for _ in range(20):
        w = tuple(rng.randrange(g.dim) for _ in range(rng.randrange(1, 5)))
        got = reversed_ctx.normal_form(w)
        again = normal_form_random(reversed_ctx, w, rng)
        assert got == again


def test_normal_form_random_agrees_with_leftmost():
    rng = random.Random(40)
    ctx = _unitary_ctx()
    for _ in range(60):
        w = tuple(rng.randrange(ctx.dim) for _ in range(rng.randrange(1, 6)))
        assert normal_form_random(ctx, w, rng) == ctx.normal_form(w)


def test_letters_are_primitive():
    ctx = _unitary_ctx()
    for k in range(ctx.dim):
        x = ctx.letter(k)
        left = TensorElement(ctx, 2, {((k,), ()): ONE})
        right = TensorElement(ctx, 2, {((), (k,)): ONE})
        assert delta(x) == left + right
        assert primitive_vector(x) == ctx.g.space.basis_vector(k)
    assert primitive_vector(ctx.letter(0) * ctx.letter(1)) is None


def test_delta_is_multiplicative():
    rng = random.Random(3)
    ctx = _unitary_ctx()
    for _ in range(10):
        a = _random_element(ctx, rng, n_words=2, max_len=2)
        b = _random_element(ctx, rng, n_words=2, max_len=2)
        assert delta(a * b) == delta(a) * delta(b)


def test_coassociativity_and_counit():
    rng = random.Random(5)
    ctx = _unitary_ctx()
    for _ in range(8):
        a = _random_element(ctx, rng, n_words=2, max_len=3)
        t = delta(a)
        assert delta_slot(t, 0) == delta_slot(t, 1)
        # (counit x id) delta = id: collect the empty-first-slot column
        recovered = ctx.element(
            {ws[1]: c for ws, c in t.terms.items() if ws[0] == ()})
        assert recovered == a
        assert counit(a) == a.coeff(())


def test_coproduct_is_graded_cocommutative():
    rng = random.Random(17)
    ctx = _unitary_ctx()
    for _ in range(10):
        a = _random_element(ctx, rng, n_words=2, max_len=3)
        t = delta(a)
        assert t.flip() == t


def test_antipode():
    ctx = _so3_ctx()
    e1, e2 = ctx.letter(0), ctx.letter(1)
    assert antipode(e1) == -e1
    # S(e1 e2) = S(e2)S(e1) = e2 e1, which normalizes to e1 e2 - e3
    assert antipode(e1 * e2).pretty() == "e1*e2 - e3"
    rng = random.Random(29)
    for ctx in (_so3_ctx(), _unitary_ctx()):
        for _ in range(6):
            a = _random_element(ctx, rng, n_words=2, max_len=3)
            t = delta(a)
            acc = ctx.zero()
            for (u, v), c in t.terms.items():
                acc = acc + (antipode(ctx.element({u: ONE}))
                             * ctx.element({v: ONE})).scale(c)
            assert acc == ctx.one().scale(counit(a))


def test_weyl_map():
    ctx = _so3_ctx()
    sym = ctx.sym()
    s = sym.element({ctx.word_from_labels(["e1", "e2"]): ONE})
    assert weyl_map(ctx, s).pretty() == "e1*e2 - 1/2*e3"
    with pytest.raises(AlgebraMismatch):
        weyl_map(ctx, ctx.one())


def test_weyl_map_is_injective_up_to_length_three():
    # images of the 20 symmetric words stay independent in U(so3)
    ctx = _so3_ctx()
    sym = ctx.sym()
    words = ctx.normal_words_up_to(3)
    column = {w: k for k, w in enumerate(words)}
    ech = Echelon()
    kept = 0
    for w in words:
        img = weyl_map(ctx, sym.element({w: ONE}))
        row = {column[term]: c for term, c in img.terms.items()}
        if ech.add_row(row) is not None:
            kept += 1
    assert kept == len(words) == 20


def test_weyl_truncation_bound(monkeypatch):
    ctx = _so3_ctx()
    sym = ctx.sym()
    long_word = (0,) * 7
    with pytest.raises(TruncationExceeded):
        weyl_map(ctx, sym.element({long_word: ONE}))
    monkeypatch.setenv("BIGLA_MAX_TRUNCATION", "7")
    out = weyl_map(ctx, sym.element({long_word: ONE}))
    assert out == ctx.element({long_word: ONE})


def test_pbw_dims_oracles():
    counted, formula = pbw_dims(_so3_ctx(), 4)
    assert counted == formula == [1, 3, 6, 10, 15]
    b_lie = EnvelopingAlgebra(commutator_lie(algebra_B()))
    counted, formula = pbw_dims(b_lie, 4)
    assert counted == formula == [1, 4, 8, 12, 16]
    counted, formula = pbw_dims(_unitary_ctx(), 3)
    assert counted == formula == [1, 8, 32, 88]
    counted, formula = pbw_dims(EnvelopingAlgebra(odd_pair()), 3)
    assert counted == formula == [1, 2, 1, 0]


def test_pbw_dims_hold_across_catalog():
    for name, g in catalog_lie().items():
        counted, formula = pbw_dims(EnvelopingAlgebra(g), 3)
        assert counted == formula, name


def test_pbw_factorize_round_trip():
    ctx = _unitary_ctx()
    rng = random.Random(31)
    labels = ctx.g.space.labels
    for _ in range(8):
        a = _random_element(ctx, rng, n_words=3, max_len=3)
        a = uea_multiply(a, ctx.one())  # normalize the words first
        pairs = pbw_factorize(ctx, a)
        rebuilt = ctx.zero()
        for even_elt, odd_word in pairs:
            lifted = ctx.zero()
            for w, c in even_elt.terms.items():
                parent = tuple(ctx.g.space.index(even_elt.ctx.g.space.labels[k])
                               for k in w)
                lifted = lifted + ctx.element({parent: c})
            rebuilt = rebuilt + lifted * ctx.element({odd_word: ONE})
        assert rebuilt == a
        for _, odd_word in pairs:
            assert all(ctx.g.space.degrees[k].parity == 1 for k in odd_word)


def test_pbw_factorize_needs_parity_sorted_order():
    g = unitary_example()
    ctx = EnvelopingAlgebra(g, order=list(reversed(range(g.dim))))
    with pytest.raises(BadBasisOrder):
        pbw_factorize(ctx, ctx.one())


def test_tensor_koszul_sign():
    ctx = _unitary_ctx()
    x = (ctx.g.space.index("x1"),)
    crossing = TensorElement(ctx, 2, {((), x): ONE}) \
        * TensorElement(ctx, 2, {(x, ()): ONE})
    plain = TensorElement(ctx, 2, {(x, ()): ONE}) \
        * TensorElement(ctx, 2, {((), x): ONE})
    # x1 crosses x1, both of pairing-1 degree, so one product picks up -1
    assert plain == TensorElement(ctx, 2, {(x, x): ONE})
    assert crossing == plain.scale(-ONE)
    u = (ctx.g.space.index("u1"),)
    even_cross = TensorElement(ctx, 2, {((), x): ONE}) \
        * TensorElement(ctx, 2, {(u, ()): ONE})
    assert even_cross == TensorElement(ctx, 2, {(u, x): ONE})


def test_truncated_product_drops_long_words():
    ctx = _so3_ctx()
    e1 = ctx.letter(0)
    assert uea_multiply(e1, e1, t_bound=1).is_zero()
    assert uea_multiply(e1, e1, t_bound=2) == e1 * e1


def test_pretty_wraps_spaced_scalars():
    ctx = _so3_ctx()
    c = ONE - ZETA
    elt = ctx.letter(0).scale(c)
    assert elt.pretty() == "(1 - z8)*e1"
    assert ctx.zero().pretty() == "0"
    assert ctx.one().pretty() == "1"
    half = ctx.one().scale(CycloScalar.from_rational(Fraction(1, 2)))
    assert half.pretty() == "1/2"
