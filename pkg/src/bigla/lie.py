"""Bi-graded Lie and associative algebras over Q(zeta8).

The axiom checkers are diagnostics: they return sorted lists of violations
(empty means pass) rather than raising, so a CLI can render them and tests
can assert on exact residuals.  The sign rule is a parameter; the same
checkers validate Deligne-braided algebras and, with the parity sign, the
super algebras the unbraiding functor produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import (AlgebraMismatch, DegreeViolation, InputNotLie, NotAssociative,
                     NotClosed, NotEvenType, SpaceMismatch)
from .linear import BiGradedSpace, BilinearMap, LinearMap, Vector
from .scalars import BiDegree, D00, D11, sign_deligne

SignRule = Callable[[BiDegree, BiDegree], int]


class BiGradedLieAlgebra:
    def __init__(self, space: BiGradedSpace, bracket: BilinearMap, name: str = ""):
        if bracket.space != space:
            raise SpaceMismatch("bracket not defined on the algebra's space")
        if bracket.declared_degree != D00:
            raise DegreeViolation("a Lie bracket must have degree (0,0)")
        self.space = space
        self.bracket = bracket
        self.name = name or space.name

    @property
    def dim(self) -> int:
        return self.space.dim

    def bracket_of(self, a: Vector, b: Vector) -> Vector:
        return self.bracket(a, b)

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.bracket.pair(i, j)

    def __repr__(self):
        return f"BiGradedLieAlgebra({self.name or self.space.labels}, dim={self.dim})"


class BiGradedAssocAlgebra:
    def __init__(self, space: BiGradedSpace, product: BilinearMap,
                 unit: Optional[Vector] = None, name: str = ""):
        if product.space != space:
            raise SpaceMismatch("product not defined on the algebra's space")
        self.space = space
        self.product = product
        self.unit = unit
        self.name = name or space.name

    @property
    def dim(self) -> int:
        return self.space.dim

    def mul(self, a: Vector, b: Vector) -> Vector:
        return self.product(a, b)

    def check_associativity(self) -> list[tuple[int, int, int]]:
        bad = []
        n = self.space.dim
        for i in range(n):
            ei = self.space.basis_vector(i)
            for j in range(n):
                ij = self.product.pair(i, j)
                for k in range(n):
                    left = self.product(ij, self.space.basis_vector(k))
                    right = self.product(ei, self.product.pair(j, k))
                    if left != right:
                        bad.append((i, j, k))
        return bad

    def check_unit(self) -> list[int]:
        if self.unit is None:
            return []
        bad = []
        for k in range(self.space.dim):
            e = self.space.basis_vector(k)
            if self.product(self.unit, e) != e or self.product(e, self.unit) != e:
                bad.append(k)
        return bad

    def __repr__(self):
        return f"BiGradedAssocAlgebra({self.name or self.space.labels}, dim={self.dim})"


@dataclass
class AlgebraMorphism:
    source: BiGradedLieAlgebra
    target: BiGradedLieAlgebra
    map: LinearMap

    def __post_init__(self):
        if self.map.source != self.source.space or self.map.target != self.target.space:
            raise AlgebraMismatch("morphism map does not connect the given algebras")


def check_antisymmetry(g: BiGradedLieAlgebra, sign: SignRule = sign_deligne
                       ) -> list[tuple[int, int]]:
    """Pairs (i,j), i <= j, violating [a,b] = -sign(a,b)[b,a].

    For i = j with sign +1 this forces [x,x] = 0; with sign -1 the relation
    is vacuous and the self-bracket is unconstrained.
    """
    bad = []
    degs = g.space.degrees
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            s = sign(degs[i], degs[j])
            if i == j:
                if s == 1 and g.basis_bracket(i, i):
                    bad.append((i, i))
                continue
            if g.basis_bracket(i, j) != g.basis_bracket(j, i).scale(-s):
                bad.append((i, j))
    return bad


def check_jacobi(g: BiGradedLieAlgebra, sign: SignRule = sign_deligne
                 ) -> list[tuple[int, int, int]]:
    """Triples (a,b,c) violating the sign-twisted cyclic Jacobi identity."""
    bad = []
    n = g.dim
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if jacobiator(g, a, b, c, sign):
                    bad.append((a, b, c))
    return bad


def jacobiator(g: BiGradedLieAlgebra, a: int, b: int, c: int,
               sign: SignRule = sign_deligne) -> Vector:
    """sign(a,c)[a,[b,c]] + sign(c,b)[c,[a,b]] + sign(b,a)[b,[c,a]]."""
    degs = g.space.degrees
    ea, eb, ec = (g.space.basis_vector(k) for k in (a, b, c))
    t1 = g.bracket_of(ea, g.basis_bracket(b, c)).scale(sign(degs[a], degs[c]))
    t2 = g.bracket_of(ec, g.basis_bracket(a, b)).scale(sign(degs[c], degs[b]))
    t3 = g.bracket_of(eb, g.basis_bracket(c, a)).scale(sign(degs[b], degs[a]))
    return t1 + t2 + t3


def check_homogeneity(g: BiGradedLieAlgebra) -> list[tuple[int, int]]:
    return g.bracket.check_homogeneity()


def check_lie(g: BiGradedLieAlgebra, sign: SignRule = sign_deligne) -> dict[str, list]:
    return {
        "homogeneity": check_homogeneity(g),
        "antisymmetry": check_antisymmetry(g, sign),
        "jacobi": check_jacobi(g, sign),
    }


def is_lie(g: BiGradedLieAlgebra, sign: SignRule = sign_deligne) -> bool:
    return not any(check_lie(g, sign).values())


def require_lie(g: BiGradedLieAlgebra, sign: SignRule = sign_deligne):
    report = check_lie(g, sign)
    failures = {k: v for k, v in report.items() if v}
    if failures:
        raise InputNotLie(f"{g.name or 'algebra'} fails: " +
                          ", ".join(f"{k} at {v[:3]}" for k, v in failures.items()))


def commutator_lie(a: BiGradedAssocAlgebra) -> BiGradedLieAlgebra:
    """[x,y] = xy - (-1)^(eps(x).eps(y)) yx on a homogeneous associative algebra."""
    bad = a.product.check_homogeneity()
    if bad:
        raise DegreeViolation(f"product not homogeneous at pairs {bad[:5]}")
    bad3 = a.check_associativity()
    if bad3:
        raise NotAssociative(f"product fails associativity at triples {bad3[:5]}")
    degs = a.space.degrees
    n = a.space.dim
    constants = {}
    for i in range(n):
        for j in range(n):
            s = sign_deligne(degs[i], degs[j])
            v = a.product.pair(i, j) - a.product.pair(j, i).scale(s)
            if v:
                constants[(i, j)] = v
    return BiGradedLieAlgebra(a.space, BilinearMap(a.space, constants),
                              name=f"[{a.name}]" if a.name else "")


def subalgebra_on(g: BiGradedLieAlgebra, indices: Sequence[int],
                  name: str = "") -> BiGradedLieAlgebra:
    """Restrict to the span of the given basis indices; NotClosed if brackets leave it."""
    kept = list(indices)
    pos = {k: p for p, k in enumerate(kept)}
    sub = BiGradedSpace([(g.space.labels[k], g.space.degrees[k]) for k in kept],
                        name=name or f"{g.name}-sub")
    constants = {}
    for pi, i in enumerate(kept):
        for pj, j in enumerate(kept):
            v = g.basis_bracket(i, j)
            if not v:
                continue
            if not set(v.coeffs) <= set(pos):
                raise NotClosed(
                    f"[{g.space.labels[i]},{g.space.labels[j]}] leaves the span")
            constants[(pi, pj)] = Vector(sub, {pos[k]: c for k, c in v.coeffs.items()})
    return BiGradedLieAlgebra(sub, BilinearMap(sub, constants), name=sub.name)


def even_subalgebra(g: BiGradedLieAlgebra) -> BiGradedLieAlgebra:
    """The parity-0 part g_00 + g_11, a Lie subalgebra since the bracket
    has degree (0,0)."""
    kept = [k for k, d in enumerate(g.space.degrees) if d.parity == 0]
    return subalgebra_on(g, kept, name=f"{g.name}+" if g.name else "even")


@dataclass
class CartanPairReport:
    g00: list[int]
    g11: list[int]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def cartan_pair(g: BiGradedLieAlgebra) -> CartanPairReport:
    """Split an algebra concentrated in degrees (0,0) and (1,1) into (k, p)
    and verify [k,k] <= k, [k,p] <= p, [p,p] <= k."""
    for d in g.space.degrees:
        if d not in (D00, D11):
            raise NotEvenType("algebra has components outside degrees (0,0), (1,1)")
    g00 = g.space.component(D00)
    g11 = g.space.component(D11)
    violations = []
    blocks = {(0, 0): set(g00), (0, 1): set(g11), (1, 0): set(g11), (1, 1): set(g00)}
    tags = {k: 0 for k in g00}
    tags.update({k: 1 for k in g11})
    for i in range(g.dim):
        for j in range(g.dim):
            v = g.basis_bracket(i, j)
            if not v:
                continue
            allowed = blocks[(tags[i], tags[j])]
            if not set(v.coeffs) <= allowed:
                violations.append(
                    f"[{g.space.labels[i]},{g.space.labels[j]}] leaves its block")
    return CartanPairReport(g00, g11, violations)


def check_morphism(phi: AlgebraMorphism) -> list[tuple[int, int]]:
    """Basis pairs where phi[a,b] != [phi a, phi b].  Degree-(0,0) maps only."""
    if phi.map.declared_degree != D00:
        raise DegreeViolation("algebra morphisms must have degree (0,0)")
    bad = []
    n = phi.source.dim
    for i in range(n):
        for j in range(n):
            lhs = phi.map(phi.source.basis_bracket(i, j))
            rhs = phi.target.bracket_of(phi.map.images[i], phi.map.images[j])
            if lhs != rhs:
                bad.append((i, j))
    return bad
