"""Universal enveloping algebra with PBW rewriting and Hopf structure.

Words are tuples of basis indices.  The PBW order puts letters of degree
(0,0) first, then (1,1), then (1,0), then (0,1), each block in file order;
letters of the last two blocks square to (1/2)[x,x] and may not repeat in a
normal word.  Rewriting is leftmost-innermost with a per-context memo, so
repeated products and coproducts amortize.

The symmetric algebra is the enveloping algebra of the same space with the
zero bracket, which makes the Weyl symmetrization a map between two
instances of the same machinery.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import AlgebraMismatch, BadBasisOrder, TruncationExceeded
from .lie import BiGradedLieAlgebra, even_subalgebra
from .linear import BilinearMap, Vector
from .scalars import BiDegree, CycloScalar, ONE, sign_deligne

Word = tuple[int, ...]

DEFAULT_MAX_TRUNCATION = 6


def max_truncation() -> int:
    raw = os.environ.get("BIGLA_MAX_TRUNCATION", "")
    return int(raw) if raw else DEFAULT_MAX_TRUNCATION


def _block(d: BiDegree) -> int:
    return {(0, 0): 0, (1, 1): 1, (1, 0): 2, (0, 1): 3}[(d.eps1, d.eps2)]


class EnvelopingAlgebra:
    """Rewriting context for U(g) over a fixed PBW basis order."""

    def __init__(self, g: BiGradedLieAlgebra, order: Optional[Sequence[int]] = None):
        self.g = g
        degs = g.space.degrees
        if order is None:
            order = sorted(range(g.dim), key=lambda k: (_block(degs[k]), k))
        self.order = tuple(order)
        if sorted(self.order) != list(range(g.dim)):
            raise ValueError("order must be a permutation of the basis indices")
        self.rank = {k: r for r, k in enumerate(self.order)}
        # self-pairing-1 letters square to (1/2)[x,x] and never repeat
        self.exterior = tuple(degs[k].pairing(degs[k]) == 1 for k in range(g.dim))
        self._nf_memo: dict[Word, dict[Word, CycloScalar]] = {}
        self._sym: Optional[EnvelopingAlgebra] = None
        self._even: Optional[EnvelopingAlgebra] = None

    @property
    def dim(self) -> int:
        return self.g.dim

    def word_degree(self, w: Word) -> BiDegree:
        e1 = e2 = 0
        for k in w:
            d = self.g.space.degrees[k]
            e1 += d.eps1
            e2 += d.eps2
        return BiDegree(e1 % 2, e2 % 2)

    def _violation(self, w: Word) -> Optional[int]:
        rank = self.rank
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if rank[a] > rank[b] or (a == b and self.exterior[a]):
                return p
        return None

    def violations(self, w: Word) -> list[int]:
        rank = self.rank
        out = []
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if rank[a] > rank[b] or (a == b and self.exterior[a]):
                out.append(p)
        return out

    def is_normal(self, w: Word) -> bool:
        return self._violation(w) is None

    def _rewrite_at(self, w: Word, p: int) -> dict[Word, CycloScalar]:
        """One rewriting step at position p, results recursively normalized."""
        a, b = w[p], w[p + 1]
        head, tail = w[:p], w[p + 2:]
        out: dict[Word, CycloScalar] = {}
        if a == b:
            # exterior letter squared: x x = (1/2)[x,x]
            half = CycloScalar.from_rational(Fraction(1, 2))
            bracket = self.g.basis_bracket(a, a)
            for k, c in bracket.coeffs.items():
                _accumulate(out, self.normal_form(head + (k,) + tail), half * c)
            return out
        degs = self.g.space.degrees
        s = sign_deligne(degs[a], degs[b])
        swapped = self.normal_form(head + (b, a) + tail)
        for word, c in swapped.items():
            _add_term(out, word, c if s == 1 else -c)
        for k, c in self.g.basis_bracket(a, b).coeffs.items():
            _accumulate(out, self.normal_form(head + (k,) + tail), c)
        return out

    def normal_form(self, w: Word) -> dict[Word, CycloScalar]:
        """Memoized leftmost-innermost normal form of a raw word."""
        w = tuple(w)
        cached = self._nf_memo.get(w)
        if cached is not None:
            return cached
        p = self._violation(w)
        result = {w: ONE} if p is None else self._rewrite_at(w, p)
        self._nf_memo[w] = result
        return result

    def element(self, terms: Mapping[Word, CycloScalar]) -> "UEAElement":
        out: dict[Word, CycloScalar] = {}
        for w, c in terms.items():
            if c:
                _accumulate(out, self.normal_form(tuple(w)), c)
        return UEAElement(self, out)

    def one(self) -> "UEAElement":
        return UEAElement(self, {(): ONE})

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def letter(self, k: int) -> "UEAElement":
        return UEAElement(self, {(k,): ONE})

    def from_vector(self, v: Vector) -> "UEAElement":
        if v.space != self.g.space:
            raise AlgebraMismatch("vector is not over this algebra's space")
        return UEAElement(self, {(k,): c for k, c in v.coeffs.items()})

    def word_from_labels(self, labels: Iterable[str]) -> Word:
        return tuple(self.g.space.index(lab) for lab in labels)

    # normal word enumeration, for PBW counting and functional truncation

    def normal_words(self, length: int) -> Iterator[Word]:
        def extend(prefix: list[int], min_rank: int, remaining: int) -> Iterator[Word]:
            if remaining == 0:
                yield tuple(prefix)
                return
            for r in range(min_rank, self.dim):
                k = self.order[r]
                prefix.append(k)
                yield from extend(prefix, r + 1 if self.exterior[k] else r,
                                  remaining - 1)
                prefix.pop()
        yield from extend([], 0, length)

    def normal_words_up_to(self, n: int) -> list[Word]:
        out: list[Word] = []
        for m in range(n + 1):
            out.extend(self.normal_words(m))
        return out

    def sym(self) -> "EnvelopingAlgebra":
        """The symmetric algebra: same letters, zero bracket, same order."""
        if self._sym is None:
            abelian = BiGradedLieAlgebra(
                self.g.space, BilinearMap(self.g.space, {}),
                name=f"sym({self.g.name})" if self.g.name else "sym")
            self._sym = EnvelopingAlgebra(abelian, self.order)
        return self._sym

    def even_envelope(self) -> "EnvelopingAlgebra":
        """Enveloping algebra of the parity-zero subalgebra."""
        if self._even is None:
            self._even = EnvelopingAlgebra(even_subalgebra(self.g))
        return self._even


def _add_term(acc: dict[Word, CycloScalar], w: Word, c: CycloScalar):
    s = acc.get(w)
    s = c if s is None else s + c
    if s:
        acc[w] = s
    else:
        acc.pop(w, None)


def _accumulate(acc: dict[Word, CycloScalar], terms: Mapping[Word, CycloScalar],
                factor: CycloScalar):
    if factor.is_one():
        for w, c in terms.items():
            _add_term(acc, w, c)
    else:
        for w, c in terms.items():
            _add_term(acc, w, factor * c)


class UEAElement:
    """A finite combination of normal words."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: EnvelopingAlgebra, terms: dict[Word, CycloScalar]):
        self.ctx = ctx
        self.terms = {w: c for w, c in terms.items() if c}

    def _check(self, other: "UEAElement"):
        if self.ctx is not other.ctx:
            raise AlgebraMismatch("elements belong to different enveloping algebras")

    def __add__(self, other: "UEAElement") -> "UEAElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_term(out, w, c)
        return UEAElement(self.ctx, out)

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + (-other)

    def __neg__(self) -> "UEAElement":
        return UEAElement(self.ctx, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "UEAElement":
        c = c if isinstance(c, CycloScalar) else CycloScalar.from_rational(c)
        return UEAElement(self.ctx, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c) -> "UEAElement":
        if isinstance(c, (int, Fraction, CycloScalar)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> "UEAElement":
        if isinstance(other, UEAElement):
            return uea_multiply(self, other)
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def filtration(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coeff(self, w: Word) -> CycloScalar:
        return self.terms.get(tuple(w), CycloScalar.zero())

    def sorted_terms(self) -> list[tuple[Word, CycloScalar]]:
        return sorted(self.terms.items(), key=lambda t: (-len(t[0]), t[0]))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        labels = self.ctx.g.space.labels
        parts = []
        for w, c in self.sorted_terms():
            name = "*".join(labels[k] for k in w) if w else "1"
            if not w:
                s = c.pretty()
                parts.append(f"({s})" if " " in s else s)
                continue
            if c.is_one():
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                s = c.pretty()
                parts.append(f"({s})*{name}" if " " in s else f"{s}*{name}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"U<{self.pretty()}>"


def normal_form(ctx: EnvelopingAlgebra, word: Sequence[int]) -> UEAElement:
    return ctx.element({tuple(word): ONE})


def uea_multiply(a: UEAElement, b: UEAElement,
                 t_bound: Optional[int] = None) -> UEAElement:
    """Product in U(g).  t_bound drops letter-count products above the bound,
    the grading that makes truncated exp/log series exact."""
    a._check(b)
    out: dict[Word, CycloScalar] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if t_bound is not None and len(u) + len(v) > t_bound:
                continue
            _accumulate(out, a.ctx.normal_form(u + v), cu * cv)
    return UEAElement(a.ctx, out)


def primitive_vector(a: UEAElement) -> Optional[Vector]:
    """The underlying Lie-algebra vector if every word is a single letter."""
    if any(len(w) != 1 for w in a.terms):
        return None
    return Vector(a.ctx.g.space, {w[0]: c for w, c in a.terms.items()})


# randomized-pivot rewriting, for confluence certification

def normal_form_random(ctx: EnvelopingAlgebra, word: Sequence[int],
                       rng) -> dict[Word, CycloScalar]:
    """Normal form with the rewriting position chosen at random each time a
    word is first visited.  Confluence says this agrees with normal_form."""
    memo: dict[Word, dict[Word, CycloScalar]] = {}

    def nf(w: Word) -> dict[Word, CycloScalar]:
        got = memo.get(w)
        if got is not None:
            return got
        spots = ctx.violations(w)
        if not spots:
            result = {w: ONE}
        else:
            p = rng.choice(spots)
            a, b = w[p], w[p + 1]
            head, tail = w[:p], w[p + 2:]
            result = {}
            if a == b:
                half = CycloScalar.from_rational(Fraction(1, 2))
                for k, c in ctx.g.basis_bracket(a, a).coeffs.items():
                    _accumulate(result, nf(head + (k,) + tail), half * c)
            else:
                degs = ctx.g.space.degrees
                s = sign_deligne(degs[a], degs[b])
                for word2, c in nf(head + (b, a) + tail).items():
                    _add_term(result, word2, c if s == 1 else -c)
                for k, c in ctx.g.basis_bracket(a, b).coeffs.items():
                    _accumulate(result, nf(head + (k,) + tail), c)
        memo[w] = result
        return result

    return nf(tuple(word))


class TensorElement:
    """Sparse element of U(g)^(tensor n), words per slot, Deligne-signed."""

    __slots__ = ("ctx", "nslots", "terms")

    def __init__(self, ctx: EnvelopingAlgebra, nslots: int,
                 terms: dict[tuple[Word, ...], CycloScalar]):
        self.ctx = ctx
        self.nslots = nslots
        self.terms = {ws: c for ws, c in terms.items() if c}

    @classmethod
    def unit(cls, ctx: EnvelopingAlgebra, nslots: int) -> "TensorElement":
        return cls(ctx, nslots, {((),) * nslots: ONE})

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for ws, c in other.terms.items():
            s = out.get(ws)
            s = c if s is None else s + c
            if s:
                out[ws] = s
            else:
                out.pop(ws, None)
        return TensorElement(self.ctx, self.nslots, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(CycloScalar.from_rational(-1))

    def scale(self, c: CycloScalar) -> "TensorElement":
        return TensorElement(self.ctx, self.nslots,
                             {ws: c * v for ws, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.ctx is other.ctx and self.nslots == other.nslots
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """(u1 x ... x un)(v1 x ... x vn) with the Koszul sign from moving
        each v_i past the u_j with j > i."""
        if self.ctx is not other.ctx or self.nslots != other.nslots:
            raise AlgebraMismatch("tensor factors do not match")
        ctx = self.ctx
        out: dict[tuple[Word, ...], CycloScalar] = {}
        for us, cu in self.terms.items():
            udegs = [ctx.word_degree(u) for u in us]
            for vs, cv in other.terms.items():
                sign = 1
                for i in range(self.nslots):
                    dv = ctx.word_degree(vs[i])
                    for j in range(i + 1, self.nslots):
                        sign *= sign_deligne(dv, udegs[j])
                coeff = cu * cv if sign == 1 else -(cu * cv)
                slot_expansions = [ctx.normal_form(us[i] + vs[i])
                                   for i in range(self.nslots)]
                _spread(out, slot_expansions, coeff)
        return TensorElement(ctx, self.nslots, out)

    def flip(self) -> "TensorElement":
        """Swap the two slots with the Deligne sign (2-slot elements only)."""
        assert self.nslots == 2
        ctx = self.ctx
        out: dict[tuple[Word, ...], CycloScalar] = {}
        for (u, v), c in self.terms.items():
            s = sign_deligne(ctx.word_degree(u), ctx.word_degree(v))
            w = (v, u)
            prev = out.get(w)
            val = c if s == 1 else -c
            val = val if prev is None else prev + val
            if val:
                out[w] = val
            else:
                out.pop(w, None)
        return TensorElement(ctx, 2, out)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: tuple((-len(w), w) for w in t[0]))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        labels = self.ctx.g.space.labels

        def wname(w: Word) -> str:
            return "*".join(labels[k] for k in w) if w else "1"

        parts = []
        for ws, c in self.sorted_terms():
            name = " (x) ".join(wname(w) for w in ws)
            if c.is_one():
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                s = c.pretty()
                parts.append(f"({s})*[{name}]" if " " in s else f"{s}*[{name}]")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"T<{self.pretty()}>"


def _spread(acc: dict, slot_expansions: list[dict[Word, CycloScalar]],
            coeff: CycloScalar):
    """Distribute a product of per-slot expansions into the accumulator."""
    combos: list[tuple[tuple[Word, ...], CycloScalar]] = [((), coeff)]
    for expansion in slot_expansions:
        combos = [(ws + (w,), c * cw) for ws, c in combos
                  for w, cw in expansion.items()]
    for ws, c in combos:
        prev = acc.get(ws)
        val = c if prev is None else prev + c
        if val:
            acc[ws] = val
        else:
            acc.pop(ws, None)


def delta_word(ctx: EnvelopingAlgebra, w: Word) -> TensorElement:
    """Coproduct of a normal word by signed unshuffles.

    Every subword of a normal word is normal, so no rewriting is needed; the
    sign counts crossings of complement letters past chosen ones.
    """
    degs = [ctx.g.space.degrees[k] for k in w]
    m = len(w)
    terms: dict[tuple[Word, ...], CycloScalar] = {}
    for mask in range(1 << m):
        left = tuple(w[p] for p in range(m) if mask >> p & 1)
        right = tuple(w[p] for p in range(m) if not mask >> p & 1)
        sign = 0
        for q in range(m):
            if mask >> q & 1:
                for p in range(q):
                    if not mask >> p & 1:
                        sign += degs[p].pairing(degs[q])
        c = ONE if sign % 2 == 0 else -ONE
        key = (left, right)
        prev = terms.get(key)
        terms[key] = c if prev is None else prev + c
    return TensorElement(ctx, 2, terms)


def delta(a: UEAElement) -> TensorElement:
    ctx = a.ctx
    out = TensorElement(ctx, 2, {})
    for w, c in a.terms.items():
        out = out + delta_word(ctx, w).scale(c)
    return out


def delta_slot(t: TensorElement, slot: int) -> TensorElement:
    """Apply the coproduct inside one slot, yielding one more slot."""
    ctx = t.ctx
    out: dict[tuple[Word, ...], CycloScalar] = {}
    for ws, c in t.terms.items():
        expanded = delta_word(ctx, ws[slot])
        for pair, cc in expanded.terms.items():
            key = ws[:slot] + pair + ws[slot + 1:]
            prev = out.get(key)
            val = c * cc if prev is None else prev + c * cc
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return TensorElement(ctx, t.nslots + 1, out)


def counit(a: UEAElement) -> CycloScalar:
    return a.terms.get((), CycloScalar.zero())


def _reversal_sign(ctx: EnvelopingAlgebra, w: Word) -> int:
    degs = [ctx.g.space.degrees[k] for k in w]
    total = 0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            total += degs[i].pairing(degs[j])
    return -1 if total % 2 else 1


def antipode(a: UEAElement) -> UEAElement:
    """S(x1...xm) = (-1)^m (reversal Koszul sign) xm...x1, normalized."""
    ctx = a.ctx
    out: dict[Word, CycloScalar] = {}
    for w, c in a.terms.items():
        sign = _reversal_sign(ctx, w)
        if len(w) % 2:
            sign = -sign
        _accumulate(out, ctx.normal_form(w[::-1]), c if sign == 1 else -c)
    return UEAElement(ctx, out)


def _permutation_sign(degs: list[BiDegree], perm: Sequence[int]) -> int:
    total = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                total += degs[perm[a]].pairing(degs[perm[b]])
    return -1 if total % 2 else 1


def weyl_map(ctx: EnvelopingAlgebra, s: UEAElement) -> UEAElement:
    """Symmetrization Sym(g) -> U(g): w -> (1/m!) sum over permutations with
    Koszul signs.  The argument lives in ctx.sym()."""
    from itertools import permutations

    if s.ctx is not ctx.sym():
        raise AlgebraMismatch("weyl_map argument must live in the symmetric algebra")
    bound = max_truncation()
    out = ctx.zero()
    for w, c in s.terms.items():
        m = len(w)
        if m > bound:
            raise TruncationExceeded(f"word length {m} above the bound {bound}")
        degs = [ctx.g.space.degrees[k] for k in w]
        acc: dict[Word, CycloScalar] = {}
        for perm in permutations(range(m)):
            sign = _permutation_sign(degs, perm)
            word = tuple(w[p] for p in perm)
            _accumulate(acc, ctx.normal_form(word),
                        ONE if sign == 1 else -ONE)
        out = out + UEAElement(ctx, acc).scale(c * Fraction(1, factorial(m)))
    return out


def pbw_dims(ctx: EnvelopingAlgebra, n_max: int) -> tuple[list[int], list[int]]:
    """(normal word counts, symmetric-coinvariant counts) per degree 0..n_max.

    The second list counts multisets over polynomial letters times subsets
    of exterior letters; PBW says the lists agree.
    """
    d_ext = sum(1 for e in ctx.exterior if e)
    d_poly = ctx.dim - d_ext
    counted = [sum(1 for _ in ctx.normal_words(n)) for n in range(n_max + 1)]
    formula = []
    for n in range(n_max + 1):
        total = 0
        for k in range(min(n, d_ext) + 1):
            m = n - k
            # stars and bars; the m = 0 case must survive d_poly = 0
            polys = 1 if m == 0 else comb(d_poly + m - 1, m)
            total += comb(d_ext, k) * polys
        formula.append(total)
    return counted, formula


def pbw_factorize(ctx: EnvelopingAlgebra, a: UEAElement
                  ) -> list[tuple[UEAElement, Word]]:
    """Split along U(g) = U(g+) (x) odd exterior monomials.

    Returns (even factor, odd word) pairs, odd words sorted; multiplying
    each even factor (included into U(g)) by its odd word and summing
    recovers the input.  BadBasisOrder if the context order interleaves
    parities.
    """
    if a.ctx is not ctx:
        raise AlgebraMismatch("element from a different context")
    parities = [ctx.g.space.degrees[k].parity for k in ctx.order]
    if any(p0 > p1 for p0, p1 in zip(parities, parities[1:])):
        raise BadBasisOrder("even letters must all precede odd letters")
    even_ctx = ctx.even_envelope()
    sub = even_ctx.g.space
    groups: dict[Word, dict[Word, CycloScalar]] = {}
    for w, c in a.terms.items():
        cut = next((p for p, k in enumerate(w)
                    if ctx.g.space.degrees[k].parity == 1), len(w))
        even_word = tuple(sub.index(ctx.g.space.labels[k]) for k in w[:cut])
        groups.setdefault(w[cut:], {})[even_word] = c
    return [(even_ctx.element(terms), odd)
            for odd, terms in sorted(groups.items())]
