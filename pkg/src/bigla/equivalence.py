"""The unbraiding equivalence between bi-graded and super Lie algebras.

A Z2xZ2-graded Lie algebra with the Deligne sign rule is the same data as a
Z2-graded (super) Lie algebra carrying an involutive automorphism: twist the
bracket by (-1)^(eps1 of left * eps2 of right), remember eps2 as the
diagonal involution sigma = (-1)^eps2, and read parity as eps1+eps2.  Both
directions of the twist are literally the same sign, so the round trip is
the identity on the nose.

The Jacobi defects on the two sides differ by the pure sign
alpha = eps1(a1)eps2(a2) + eps1(a2)eps2(a3) + eps1(a3)eps2(a1); this holds
term by term for any degree-homogeneous bracket, Lie or not (Jacobi and
antisymmetry play no role, but the inner bracket values must carry the
degree of their arguments for the twist sign to come out uniform), which
is what jacobiator_alpha_check certifies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (AlgebraMismatch, DegreeViolation, NotDiagonal, NotEquivariant,
                     NotEvenType)
from .lie import (AlgebraMorphism, BiGradedLieAlgebra, check_antisymmetry,
                  check_homogeneity, check_jacobi, jacobiator, require_lie)
from .linear import BiGradedSpace, BilinearMap, LinearMap, Vector
from .scalars import BiDegree, D00, D11, sign_super, sign_unbraid


@dataclass
class SuperLieAlgebraWithInvolution:
    """A super Lie algebra plus an involutive automorphism, with the original
    bi-degree bookkeeping retained on the space."""

    algebra: BiGradedLieAlgebra
    involution: LinearMap

    @property
    def space(self):
        return self.algebra.space

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def check(self) -> dict[str, list]:
        report = {
            "homogeneity": check_homogeneity(self.algebra),
            "antisymmetry": check_antisymmetry(self.algebra, sign_super),
            "jacobi": check_jacobi(self.algebra, sign_super),
        }
        report["involution"] = _involution_defects(self.algebra, self.involution)
        return report


def _involution_defects(g: BiGradedLieAlgebra, sigma: LinearMap) -> list:
    bad = []
    for k in range(g.dim):
        if sigma.compose(sigma).images[k] != g.space.basis_vector(k):
            bad.append(("not involutive", k))
    for i in range(g.dim):
        for j in range(g.dim):
            if sigma(g.basis_bracket(i, j)) != g.bracket_of(sigma.images[i], sigma.images[j]):
                bad.append(("not automorphism", i, j))
    return bad


def involution_from_bidegree(g: BiGradedLieAlgebra) -> LinearMap:
    """The diagonal map sigma = (-1)^eps2, an automorphism of any
    degree-(0,0) bracket."""
    return LinearMap.diagonal(g.space, [-1 if d.eps2 else 1 for d in g.space.degrees])


def _twist_constants(g: BiGradedLieAlgebra) -> BilinearMap:
    degs = g.space.degrees
    constants = {}
    for (i, j), v in g.bracket.constants.items():
        constants[(i, j)] = v.scale(sign_unbraid(degs[i], degs[j]))
    return BilinearMap(g.space, constants)


def unbraid(g: BiGradedLieAlgebra) -> SuperLieAlgebraWithInvolution:
    """Twist a bi-graded Lie algebra into its super companion.

    [a,b]_s = (-1)^(eps1(a) eps2(b)) [a,b], with sigma = (-1)^eps2 attached.
    Raises InputNotLie if g fails its own axioms.
    """
    require_lie(g)
    twisted = BiGradedLieAlgebra(g.space, _twist_constants(g),
                                 name=f"{g.name}~s" if g.name else "")
    return SuperLieAlgebraWithInvolution(twisted, involution_from_bidegree(g))


def rebraid(s: SuperLieAlgebraWithInvolution) -> BiGradedLieAlgebra:
    """Invert unbraid: eps2 is the involution eigenvalue, eps1 = parity + eps2.

    The twist sign squares to one, so the same formula undoes it and
    rebraid(unbraid(g)) reproduces g exactly.  NotDiagonal if the involution
    is not diagonal with eigenvalues +-1 on the given basis.
    """
    sigma = s.involution
    if not sigma.is_diagonal():
        raise NotDiagonal("involution is not diagonal on this basis; "
                          "supply a diagonalizing basis in the input")
    space = s.space
    eps2 = []
    for k in range(space.dim):
        c = sigma.images[k].coeff(k)
        if c.is_one():
            eps2.append(0)
        elif c == -1:
            eps2.append(1)
        else:
            raise NotDiagonal(f"involution eigenvalue at {space.labels[k]} is not +-1")
    rebuilt = BiGradedSpace(
        [(space.labels[k],
          BiDegree((space.degrees[k].parity + eps2[k]) % 2, eps2[k]))
         for k in range(space.dim)],
        name=space.name)
    constants = {}
    for (i, j), v in s.algebra.bracket.constants.items():
        sign = sign_unbraid(rebuilt.degrees[i], rebuilt.degrees[j])
        constants[(i, j)] = Vector(rebuilt, dict(v.coeffs)).scale(sign)
    name = s.algebra.name
    if name.endswith("~s"):
        name = name[:-2]
    return BiGradedLieAlgebra(rebuilt, BilinearMap(rebuilt, constants), name=name)


@dataclass
class AlphaCheckResult:
    alpha_sign: int
    residual_bi: Vector
    residual_super: Vector

    @property
    def identity_holds(self) -> bool:
        return self.residual_bi == self.residual_super.scale(self.alpha_sign)


def jacobiator_alpha_check(g: BiGradedLieAlgebra, a: int, b: int, c: int
                           ) -> AlphaCheckResult:
    """Compare Jacobi defects of a bracket and its twist on one basis triple.

    Works for non-Lie brackets too, as long as the bracket values are
    degree-homogeneous; Jacobi and antisymmetry are not used.
    """
    degs = g.space.degrees
    alpha = (degs[a].eps1 * degs[b].eps2
             + degs[b].eps1 * degs[c].eps2
             + degs[c].eps1 * degs[a].eps2) % 2
    twisted = BiGradedLieAlgebra(g.space, _twist_constants(g))
    return AlphaCheckResult(
        alpha_sign=-1 if alpha else 1,
        residual_bi=jacobiator(g, a, b, c),
        residual_super=jacobiator(twisted, a, b, c, sign_super),
    )


@dataclass
class SuperMorphism:
    source: SuperLieAlgebraWithInvolution
    target: SuperLieAlgebraWithInvolution
    map: LinearMap


def morphism_transfer(phi: AlgebraMorphism) -> SuperMorphism:
    """View a bi-graded morphism as a morphism of the unbraided algebras.

    The twist signs depend only on degrees, which phi preserves, so the same
    linear map intertwines the twisted brackets and the involutions.  Checked,
    not assumed: NotEquivariant on an involution mismatch, AlgebraMismatch if
    the super bracket property fails.
    """
    if phi.map.declared_degree != D00:
        raise DegreeViolation("only degree-(0,0) morphisms transfer")
    src = unbraid(phi.source)
    tgt = unbraid(phi.target)
    for k in range(src.dim):
        if phi.map(src.involution.images[k]) != tgt.involution(phi.map.images[k]):
            raise NotEquivariant(
                f"phi does not intertwine the involutions at {src.space.labels[k]}")
    bad = []
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = phi.map(src.algebra.basis_bracket(i, j))
            rhs = tgt.algebra.bracket_of(phi.map.images[i], phi.map.images[j])
            if lhs != rhs:
                bad.append((i, j))
    if bad:
        raise AlgebraMismatch(f"transferred map fails the super bracket at {bad[:5]}")
    return SuperMorphism(src, tgt, phi.map)


def cartan_sign_flip(g: BiGradedLieAlgebra) -> BiGradedLieAlgebra:
    """Negate the g11 x g11 brackets of an algebra concentrated in degrees
    (0,0) and (1,1).  Sends so3 to so12 and is its own inverse."""
    for d in g.space.degrees:
        if d not in (D00, D11):
            raise NotEvenType("sign flip needs an algebra of even type")
    degs = g.space.degrees
    constants = {}
    for (i, j), v in g.bracket.constants.items():
        if degs[i] == D11 and degs[j] == D11:
            v = -v
        constants[(i, j)] = v
    return BiGradedLieAlgebra(g.space, BilinearMap(g.space, constants),
                              name=f"{g.name}-flip" if g.name else "")
