"""Module-valued functionals on the enveloping algebra.

A functional assigns a vector in a coefficient module to every normal word
up to a truncation length.  Convolution pushes the coproduct through a pair
of functionals with the crossing sign, equivariant functionals solve a
per-degree linear system, and the truncated exp/log composition recovers
the first-order composition law on even vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .errors import (AlgebraMismatch, ModuleNotAlgebra, OddInput,
                     TruncationExceeded, TruncationMismatch,
                     TruncationTooSmall)
from .catalog import MatrixRep
from .linalg import Echelon, Matrix
from .linear import BilinearMap, LinearMap, BiGradedSpace, Vector
from .scalars import BiDegree, CycloScalar, D00, ONE, sign_deligne
from .uea import (EnvelopingAlgebra, UEAElement, Word, delta_word,
                  max_truncation, primitive_vector, uea_multiply)


@dataclass(frozen=True)
class CoefficientModule:
    """A bigraded space with an action of the even letters, optionally an
    algebra so functionals can be convolved."""

    space: BiGradedSpace
    action: dict[int, LinearMap]
    product: Optional[BilinearMap] = None
    unit: Optional[Vector] = None

    def multiply(self, a: Vector, b: Vector) -> Vector:
        if self.product is None:
            raise ModuleNotAlgebra("module carries no product")
        from .linear import apply_bilinear
        return apply_bilinear(self.product, a, b)


def trivial_module(g) -> CoefficientModule:
    space = BiGradedSpace([("1", D00)], name="triv")
    zero = LinearMap(space, space, {0: space.zero()}, BiDegree(0, 0))
    action = {k: zero for k in range(g.dim)
              if g.space.degrees[k].parity == 0}
    product = BilinearMap(space, {(0, 0): space.basis_vector(0)})
    return CoefficientModule(space, action, product, space.basis_vector(0))


class Functional:
    """Values on normal words of length <= truncation."""

    __slots__ = ("ctx", "module", "truncation", "values")

    def __init__(self, ctx: EnvelopingAlgebra, module: CoefficientModule,
                 truncation: int, values: dict[Word, Vector]):
        self.ctx = ctx
        self.module = module
        self.truncation = truncation
        self.values = {w: v for w, v in values.items() if v.coeffs}

    def value(self, w: Word) -> Vector:
        return self.values.get(tuple(w), self.module.space.zero())

    def apply(self, a: UEAElement) -> Vector:
        if a.ctx is not self.ctx:
            raise AlgebraMismatch("element from a different enveloping algebra")
        if a.filtration() > self.truncation:
            raise TruncationExceeded(
                f"element filtration {a.filtration()} above {self.truncation}")
        out = self.module.space.zero()
        for w, c in a.terms.items():
            out = out + self.value(w).scale(c)
        return out

    def __add__(self, other: "Functional") -> "Functional":
        _match(self, other)
        vals = dict(self.values)
        for w, v in other.values.items():
            vals[w] = vals.get(w, self.module.space.zero()) + v
        return Functional(self.ctx, self.module, self.truncation, vals)

    def scale(self, c: CycloScalar) -> "Functional":
        return Functional(self.ctx, self.module, self.truncation,
                          {w: v.scale(c) for w, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return (self.ctx is other.ctx and self.module is other.module
                and self.truncation == other.truncation
                and self.values == other.values)

    def shifts(self) -> set[BiDegree]:
        """Degree shifts value-degree + word-degree over all nonzero parts."""
        out: set[BiDegree] = set()
        for w, v in self.values.items():
            wd = self.ctx.word_degree(w)
            for d in v.homogeneous_parts():
                out.add(d + wd)
        return out

    def shift(self) -> Optional[BiDegree]:
        s = self.shifts()
        return next(iter(s)) if len(s) == 1 else None


def _match(phi: Functional, psi: Functional):
    if phi.ctx is not psi.ctx:
        raise AlgebraMismatch("functionals on different enveloping algebras")
    if phi.module is not psi.module:
        raise AlgebraMismatch("functionals into different modules")
    if phi.truncation != psi.truncation:
        raise TruncationMismatch(
            f"truncations differ: {phi.truncation} vs {psi.truncation}")


def convolution(phi: Functional, psi: Functional) -> Functional:
    """(phi * psi)(w) = sum over Delta(w) of the signed module product.

    The sign moves each psi component, of degree value-degree + slot-degree,
    past the left slot u.
    """
    _match(phi, psi)
    if phi.module.product is None:
        raise ModuleNotAlgebra("convolution needs an algebra-valued module")
    ctx = phi.ctx
    module = phi.module
    values: dict[Word, Vector] = {}
    for n in range(phi.truncation + 1):
        for w in ctx.normal_words(n):
            acc = module.space.zero()
            for (u, v), c in delta_word(ctx, w).terms.items():
                left = phi.value(u)
                right = psi.value(v)
                if not left.coeffs or not right.coeffs:
                    continue
                du = ctx.word_degree(u)
                dv = ctx.word_degree(v)
                for d, part in right.homogeneous_parts().items():
                    s = sign_deligne(d + dv, du)
                    term = module.multiply(left, part).scale(c)
                    acc = acc + (term if s == 1 else -term)
            if acc.coeffs:
                values[w] = acc
    return Functional(ctx, module, phi.truncation, values)


def convolution_commutes(phi: Functional, psi: Functional) -> bool:
    """Deligne commutativity for homogeneous-shift functionals into a
    commutative module."""
    lhs = convolution(phi, psi)
    rhs = convolution(psi, phi)
    sp, ss = phi.shift(), psi.shift()
    assert sp is not None and ss is not None
    s = sign_deligne(sp, ss)
    return lhs == (rhs if s == 1 else rhs.scale(-ONE))


def _even_letters(ctx: EnvelopingAlgebra) -> list[int]:
    return [k for k in range(ctx.dim) if ctx.g.space.degrees[k].parity == 0]


def equivariant_functionals(ctx: EnvelopingAlgebra, module: CoefficientModule,
                            truncation: int) -> list[Functional]:
    """Basis of functionals with phi(u w) = u . phi(w) for even letters u
    and words w of length < truncation.

    The system never mixes degree-shift classes, so it is solved one class
    at a time; columns are ordered longest word first, which keeps the
    elimination nearly triangular.
    """
    space = module.space
    dim_b = space.dim
    words = ctx.normal_words_up_to(truncation)
    word_pos = {w: p for p, w in enumerate(words)}

    def col_class(w: Word, m: int) -> BiDegree:
        return ctx.word_degree(w) + space.degrees[m]

    classes: dict[BiDegree, list[tuple[Word, int]]] = {}
    for w in sorted(words, key=lambda w: (-len(w), w)):
        for m in range(dim_b):
            classes.setdefault(col_class(w, m), []).append((w, m))
    col_id = {key: {col: j for j, col in enumerate(cols)}
              for key, cols in classes.items()}

    basis: list[Functional] = []
    for key, cols in sorted(classes.items()):
        ids = col_id[key]
        ech = Echelon()
        for w in words:
            if len(w) >= truncation:
                continue
            for u in _even_letters(ctx):
                nf = ctx.normal_form((u,) + w)
                act = module.action[u]
                for m in range(dim_b):
                    if col_class(w, m) + ctx.g.space.degrees[u] != key:
                        continue
                    row: dict[int, CycloScalar] = {}
                    for v, c in nf.items():
                        j = ids.get((v, m))
                        if j is not None:
                            row[j] = row.get(j, CycloScalar.zero()) + c
                    for m2 in range(dim_b):
                        c = act.images[m2].coeff(m)
                        if c:
                            j = ids.get((w, m2))
                            assert j is not None
                            row[j] = row.get(j, CycloScalar.zero()) - c
                    row = {j: c for j, c in row.items() if c}
                    if row:
                        ech.add_row(row)
        for sol in ech.nullspace(len(cols), ONE):
            values: dict[Word, Vector] = {}
            for j, c in sol.items():
                w, m = cols[j]
                values.setdefault(w, space.zero())
                values[w] = values[w] + space.basis_vector(m).scale(c)
            basis.append(Functional(ctx, module, truncation, values))
    basis.sort(key=lambda f: min((word_pos[w], m)
                                 for w, v in f.values.items()
                                 for m in v.coeffs))
    return basis


def equivariant_hom_basis(ctx: EnvelopingAlgebra, module: CoefficientModule,
                          truncation: int) -> list[Functional]:
    """Equivariant basis with the stabilization guard: the count is only
    meaningful once the truncation dominates the number of exterior letters."""
    d_odd = sum(1 for e in ctx.exterior if e)
    if truncation < d_odd:
        raise TruncationTooSmall(
            f"truncation {truncation} below the exterior letter count {d_odd}")
    return equivariant_functionals(ctx, module, truncation)


# truncated exponential composition

TSeries = dict[int, UEAElement]


def _series_mul(a: TSeries, b: TSeries, n: int) -> TSeries:
    out: TSeries = {}
    for i, u in a.items():
        for j, v in b.items():
            if i + j > n:
                continue
            prod = uea_multiply(u, v)
            out[i + j] = out[i + j] + prod if i + j in out else prod
    return {k: v for k, v in out.items() if v}


def _exp_series(ctx: EnvelopingAlgebra, x: Vector, n: int) -> TSeries:
    xe = ctx.from_vector(x)
    out: TSeries = {0: ctx.one()}
    power = ctx.one()
    for k in range(1, n + 1):
        power = uea_multiply(power, xe)
        out[k] = power.scale(Fraction(1, factorial(k)))
    return out


def _log_series(ctx: EnvelopingAlgebra, z: TSeries, n: int) -> TSeries:
    u = {k: v for k, v in z.items() if k > 0}
    out: TSeries = {}
    power: TSeries = {0: ctx.one()}
    for k in range(1, n + 1):
        power = _series_mul(power, u, n)
        sign = Fraction((-1) ** (k + 1), k)
        for t, elt in power.items():
            scaled = elt.scale(sign)
            out[t] = out[t] + scaled if t in out else scaled
    return {k: v for k, v in out.items() if v}


@dataclass
class CompositionResult:
    log: UEAElement
    vector: Optional[Vector] = field(default=None)

    @property
    def primitive(self) -> bool:
        return self.vector is not None


def bch_product(ctx: EnvelopingAlgebra, x: Vector, y: Vector,
                n: int) -> CompositionResult:
    """log(exp(x) exp(y)) to order n in the letter-count grading.

    Inputs must be parity-even so the exponentials are group-like; the
    result collects the homogeneous orders into one element, primitive by
    the composition theorem.
    """
    if n > max_truncation():
        raise TruncationExceeded(f"order {n} above the bound {max_truncation()}")
    for v in (x, y):
        if v.space != ctx.g.space:
            raise AlgebraMismatch("vector is not over this algebra's space")
        for d in v.homogeneous_parts():
            if d.parity != 0:
                raise OddInput("exponential inputs must be parity-even")
    z = _series_mul(_exp_series(ctx, x, n), _exp_series(ctx, y, n), n)
    log = _log_series(ctx, z, n)
    total = ctx.zero()
    for elt in log.values():
        total = total + elt
    return CompositionResult(total, primitive_vector(total))


def inner_automorphism_check(rep: MatrixRep, g: Matrix,
                             expected: LinearMap) -> list[int]:
    """Indices where g rho(x) g^(-1) differs from rho(expected(x))."""
    ginv = g.inverse()
    bad = []
    for k in sorted(rep.images):
        lhs = g @ rep.images[k] @ ginv
        rhs = rep.of_vector(expected.images[k])
        if lhs != rhs:
            bad.append(k)
    return bad
