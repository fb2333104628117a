"""Worked algebras: rotation algebras, the quaternion-like commutative
algebra on generators q1,q2,q3, its tilde extension of a Z2-graded algebra,
and the bi-graded Lie algebra of a 2x2 matrix algebra with a star operation,
together with matrix representations and the embedding that proves the
unitary bracket satisfies Jacobi.

Conventions used throughout: q1^2 = i, q2^2 = -i, q3^2 = 1, q1q2 = q3,
q1q3 = i q2, q2q3 = -i q1, all commuting; i is zeta8^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (BasisNotAdapted, DegreeViolation, NotAssociative, NotClosed,
                     Singular, StarNotAntiAutomorphism, StarNotInvolutive)
from .lie import (AlgebraMorphism, BiGradedAssocAlgebra, BiGradedLieAlgebra,
                  commutator_lie)
from .linalg import Matrix, solve_dense
from .linear import AntiLinearMap, BiGradedSpace, BilinearMap, LinearMap, Vector
from .scalars import CycloScalar, D00, D01, D10, D11, I, ONE, sign_deligne


def so3() -> BiGradedLieAlgebra:
    """Rotation algebra with e1 in degree (0,0) and e2, e3 in degree (1,1)."""
    space = BiGradedSpace([("e1", D00), ("e2", D11), ("e3", D11)], name="so3")
    e1, e2, e3 = (space.basis_vector(k) for k in range(3))
    constants = {
        (0, 1): e3, (1, 0): -e3,
        (1, 2): e1, (2, 1): -e1,
        (2, 0): e2, (0, 2): -e2,
    }
    return BiGradedLieAlgebra(space, BilinearMap(space, constants), name="so3")


def so12() -> BiGradedLieAlgebra:
    """Same space as so3 with the (1,1)x(1,1) bracket negated: [e2,e3] = -e1."""
    space = BiGradedSpace([("e1", D00), ("e2", D11), ("e3", D11)], name="so12")
    e1, e2, e3 = (space.basis_vector(k) for k in range(3))
    constants = {
        (0, 1): e3, (1, 0): -e3,
        (1, 2): -e1, (2, 1): e1,
        (2, 0): e2, (0, 2): -e2,
    }
    return BiGradedLieAlgebra(space, BilinearMap(space, constants), name="so12")


# q-multiplication table: index 0 is the unit, then q1, q2, q3.
# Entry (a, b) -> (coefficient, index of the product generator).
_QTABLE = {
    (0, 0): (ONE, 0), (0, 1): (ONE, 1), (0, 2): (ONE, 2), (0, 3): (ONE, 3),
    (1, 0): (ONE, 1), (2, 0): (ONE, 2), (3, 0): (ONE, 3),
    (1, 1): (I, 0), (2, 2): (-I, 0), (3, 3): (ONE, 0),
    (1, 2): (ONE, 3), (2, 1): (ONE, 3),
    (1, 3): (I, 2), (3, 1): (I, 2),
    (2, 3): (-I, 1), (3, 2): (-I, 1),
}

_QDEGREE = (D00, D10, D01, D11)


def algebra_B() -> BiGradedAssocAlgebra:
    """The commutative unital algebra on 1, q1, q2, q3 with the q-table."""
    space = BiGradedSpace([("1", D00), ("q1", D10), ("q2", D01), ("q3", D11)],
                          name="qalgebra")
    constants = {}
    for (a, b), (c, out) in _QTABLE.items():
        constants[(a, b)] = space.basis_vector(out).scale(c)
    unit = space.basis_vector(0)
    return BiGradedAssocAlgebra(space, BilinearMap(space, constants), unit=unit,
                                name="qalgebra")


def tilde_extension(c: BiGradedAssocAlgebra) -> BiGradedAssocAlgebra:
    """Extend a Z2-graded associative algebra C to the Z2xZ2-graded algebra
    C0 + C0.q3 + C1.q1 + C1.q2 with the q-table over the center.

    C must be graded by parity only: every degree (p, 0).  Products are
    (x qa)(y qb) = coeff(qa qb) . xy placed in the q-slot of qa qb.
    """
    for d in c.space.degrees:
        if d.eps2 != 0:
            raise DegreeViolation("tilde extension expects Z2 grading, degrees (p,0)")
    bad = c.check_associativity()
    if bad:
        raise NotAssociative(f"input algebra fails associativity at {bad[:5]}")

    even = [k for k, d in enumerate(c.space.degrees) if d.eps1 == 0]
    odd = [k for k, d in enumerate(c.space.degrees) if d.eps1 == 1]
    # slots in PBW-friendly order: plain C0, then C0 q3, then C1 q1, then C1 q2
    slots = ([(k, 0) for k in even] + [(k, 3) for k in even]
             + [(k, 1) for k in odd] + [(k, 2) for k in odd])
    suffix = {0: "", 1: "*q1", 2: "*q2", 3: "*q3"}
    labels = [c.space.labels[k] + suffix[q] for k, q in slots]
    degrees = [_QDEGREE[q] for _, q in slots]
    space = BiGradedSpace(list(zip(labels, degrees)),
                          name=f"{c.name}~" if c.name else "tilde")
    pos = {kq: n for n, kq in enumerate(slots)}

    constants = {}
    for na, (ka, qa) in enumerate(slots):
        for nb, (kb, qb) in enumerate(slots):
            coeff, qc = _QTABLE[(qa, qb)]
            prod = c.product.pair(ka, kb)
            if not prod:
                continue
            entries = {}
            for k, x in prod.coeffs.items():
                entries[pos[(k, qc)]] = coeff * x
            constants[(na, nb)] = Vector(space, entries)
    unit = None
    if c.unit is not None:
        unit = Vector(space, {pos[(k, 0)]: x for k, x in c.unit.coeffs.items()})
    return BiGradedAssocAlgebra(space, BilinearMap(space, constants), unit=unit,
                                name=space.name)


def m2_superalgebra() -> BiGradedAssocAlgebra:
    """2x2 matrices with the checkerboard Z2 grading: diagonal even,
    off-diagonal odd (degrees (p,0) only)."""
    basis = [("E11", D00), ("E22", D00), ("E12", D10), ("E21", D10)]
    space = BiGradedSpace(basis, name="mat2-super")
    pairs = {"E11": (1, 1), "E22": (2, 2), "E12": (1, 2), "E21": (2, 1)}
    idx = {lab: k for k, (lab, _) in enumerate(basis)}
    constants = {}
    for a, la in enumerate(space.labels):
        for b, lb in enumerate(space.labels):
            (i, j), (k, l) = pairs[la], pairs[lb]
            if j != k:
                continue
            out = f"E{i}{l}"
            constants[(a, b)] = space.basis_vector(idx[out])
    unit = space.basis_vector(0) + space.basis_vector(1)
    return BiGradedAssocAlgebra(space, BilinearMap(space, constants), unit=unit,
                                name="mat2-super")


def upper_triangular3() -> BiGradedAssocAlgebra:
    """3x3 upper triangular matrices with degrees assigned additively:
    E12 -> (1,0), E23 -> (0,1), E13 -> (1,1), diagonal (0,0)."""
    cells = [((1, 1), D00), ((2, 2), D00), ((3, 3), D00),
             ((1, 2), D10), ((2, 3), D01), ((1, 3), D11)]
    space = BiGradedSpace([(f"E{i}{j}", d) for (i, j), d in cells], name="triangular3")
    idx = {(i, j): k for k, ((i, j), _) in enumerate(cells)}
    constants = {}
    for a, ((i, j), _) in enumerate(cells):
        for b, ((k, l), _) in enumerate(cells):
            if j == k and (i, l) in idx:
                constants[(a, b)] = space.basis_vector(idx[(i, l)])
    unit = sum((space.basis_vector(idx[(i, i)]) for i in (2, 3)),
               space.basis_vector(idx[(1, 1)]))
    return BiGradedAssocAlgebra(space, BilinearMap(space, constants), unit=unit,
                                name="triangular3")


def odd_pair() -> BiGradedLieAlgebra:
    """Abelian algebra on one (1,0) and one (0,1) generator; its enveloping
    algebra is a 4-dimensional exterior-like algebra."""
    space = BiGradedSpace([("x", D10), ("y", D01)], name="odd-pair")
    return BiGradedLieAlgebra(space, BilinearMap(space, {}), name="odd-pair")


# 2x2 matrix algebra over the field, checkerboard graded, with conjugate
# transpose as the star operation.

def mat2_star() -> tuple[BiGradedAssocAlgebra, AntiLinearMap]:
    a = m2_superalgebra()
    sp = a.space
    images = {
        sp.index("E11"): sp.basis_vector(sp.index("E11")),
        sp.index("E22"): sp.basis_vector(sp.index("E22")),
        sp.index("E12"): sp.basis_vector(sp.index("E21")),
        sp.index("E21"): sp.basis_vector(sp.index("E12")),
    }
    return a, AntiLinearMap(sp, images)


def mat2_adapted_basis(a: BiGradedAssocAlgebra) -> list[tuple[str, Vector]]:
    """The eight standard anti-Hermitian/Hermitian combinations, a rational
    basis of the star eigenspaces of the 2x2 matrix algebra."""
    sp = a.space
    e11 = sp.basis_vector(sp.index("E11"))
    e22 = sp.basis_vector(sp.index("E22"))
    e12 = sp.basis_vector(sp.index("E12"))
    e21 = sp.basis_vector(sp.index("E21"))
    return [
        ("u1", e11.scale(I)), ("u2", e22.scale(I)),      # anti-fixed, even
        ("h1", e11), ("h2", e22),                        # fixed, even
        ("x1", e12 - e21), ("x2", (e12 + e21).scale(I)),  # anti-fixed, odd
        ("y1", e12 + e21), ("y2", (e12 - e21).scale(I)),  # fixed, odd
    ]


_BLOCK_DEGREE = {(0, -1): D00, (1, -1): D10, (1, 1): D01, (0, 1): D11}
_BLOCK_Q = {(0, -1): 0, (1, -1): 1, (1, 1): 2, (0, 1): 3}


def _check_star(a: BiGradedAssocAlgebra, star: AntiLinearMap):
    n = a.space.dim
    for k in range(n):
        e = a.space.basis_vector(k)
        if star(star(e)) != e:
            raise StarNotInvolutive(f"star^2 != id at {a.space.labels[k]}")
    for i in range(n):
        for j in range(n):
            lhs = star(a.product.pair(i, j))
            rhs = a.mul(star(a.space.basis_vector(j)), star(a.space.basis_vector(i)))
            if lhs != rhs:
                raise StarNotAntiAutomorphism(
                    f"star(ab) != star(b)star(a) at ({a.space.labels[i]},"
                    f"{a.space.labels[j]})")


def _star_sign(star: AntiLinearMap, v: Vector) -> int:
    sv = star(v)
    if sv == v:
        return 1
    if sv == -v:
        return -1
    raise BasisNotAdapted(f"{v!r} is not a +-1 eigenvector of star")


def _rational_coordinates(basis: Sequence[Vector], target: Vector) -> list[Fraction]:
    """Solve target = sum r_k basis_k with rational r_k, exactly.

    Each Q(zeta8) coordinate splits into 4 rational components, giving a
    rational linear system; the adapted basis is a rational basis of the
    span even when it is linearly dependent over the field.
    """
    dim = basis[0].space.dim
    rows = []
    rhs = []
    for k in range(dim):
        for comp in range(4):
            rows.append([b.coeff(k).c[comp] for b in basis])
            rhs.append(target.coeff(k).c[comp])
    try:
        return solve_dense(rows, rhs)
    except Singular as exc:
        raise NotClosed(f"bracket value leaves the rational span: {target!r}") from exc


def unitary_bigraded(a: BiGradedAssocAlgebra, star: AntiLinearMap,
                     adapted_basis: Optional[list[tuple[str, Vector]]] = None,
                     imaginary_unit: Optional[Vector] = None) -> BiGradedLieAlgebra:
    """Bi-graded Lie algebra of a Z2-graded star algebra.

    Blocks by (parity, star sign): anti-fixed even -> (0,0), anti-fixed odd
    -> (1,0), fixed odd -> (0,1), fixed even -> (1,1).  On blocks with
    Deligne pairing 0 the bracket is the commutator ab - ba; on pairing-1
    blocks it is j(ab+ba) with j the imaginary unit element (default i.1),
    carrying the sign dictated by the q-table (+j on u1/h0 pairs, -j on
    h1-involved ones).  Structure constants come out rational because values
    are re-expressed over the adapted basis with rational coefficients.
    """
    for d in a.space.degrees:
        if d.eps2 != 0:
            raise DegreeViolation("star algebra must be Z2-graded, degrees (p,0)")
    _check_star(a, star)
    if adapted_basis is None:
        adapted_basis = mat2_adapted_basis(a)
    if imaginary_unit is None:
        if a.unit is None:
            raise BasisNotAdapted("no unit: pass imaginary_unit explicitly")
        imaginary_unit = a.unit.scale(I)
    j = imaginary_unit
    if a.unit is not None:
        assert a.mul(j, j) == -a.unit, "imaginary unit must square to -1"
    assert star(j) == -j, "imaginary unit must be anti-fixed"

    names = [lab for lab, _ in adapted_basis]
    vectors = [v for _, v in adapted_basis]
    blocks = []
    for lab, v in adapted_basis:
        d = v.degree()
        if d is None:
            raise BasisNotAdapted(f"{lab} is not parity-homogeneous")
        blocks.append((d.eps1, _star_sign(star, v)))
    degrees = [_BLOCK_DEGREE[b] for b in blocks]
    space = BiGradedSpace(list(zip(names, degrees)), name="unitary")

    constants = {}
    n = len(vectors)
    for p in range(n):
        for q in range(n):
            s = sign_deligne(degrees[p], degrees[q])
            val = a.mul(vectors[p], vectors[q]) - a.mul(vectors[q], vectors[p]).scale(s)
            coeff, _ = _QTABLE[(_BLOCK_Q[blocks[p]], _BLOCK_Q[blocks[q]])]
            if not coeff.is_one():
                # table coefficient is +-i: multiply by the element +-j instead
                val = a.mul(j, val)
                if coeff == -I:
                    val = -val
            if not val:
                continue
            coords = _rational_coordinates(vectors, val)
            entries = {k: CycloScalar.from_rational(r) for k, r in enumerate(coords) if r}
            constants[(p, q)] = Vector(space, entries)
    return BiGradedLieAlgebra(space, BilinearMap(space, constants), name="unitary")


def unitary_example() -> BiGradedLieAlgebra:
    a, star = mat2_star()
    return unitary_bigraded(a, star)


def unitary_embedding(a: Optional[BiGradedAssocAlgebra] = None,
                      star: Optional[AntiLinearMap] = None,
                      adapted_basis: Optional[list[tuple[str, Vector]]] = None
                      ) -> AlgebraMorphism:
    """The block-tagged inclusion of the unitary algebra into the commutator
    algebra of the tilde extension: u0 lands plainly, u1 via q1, h1 via q2,
    h0 via q3.  check_morphism on the result certifies the case-table
    bracket satisfies Jacobi by transport."""
    if a is None or star is None:
        a, star = mat2_star()
    if adapted_basis is None:
        adapted_basis = mat2_adapted_basis(a)
    source = unitary_bigraded(a, star, adapted_basis)
    target = commutator_lie(tilde_extension(a))
    tspace = target.space
    suffix = {0: "", 1: "*q1", 2: "*q2", 3: "*q3"}
    images = {}
    for p, (lab, v) in enumerate(adapted_basis):
        d = v.degree()
        q = _BLOCK_Q[(d.eps1, _star_sign(star, v))]
        entries = {}
        for k, c in v.coeffs.items():
            entries[tspace.index(a.space.labels[k] + suffix[q])] = c
        images[p] = Vector(tspace, entries)
    phi = LinearMap(source.space, tspace, images)
    return AlgebraMorphism(source, target, phi)


@dataclass
class MatrixRep:
    """Matrices attached to basis elements of a fixed space."""

    space: BiGradedSpace
    images: dict[int, Matrix]
    name: str = ""
    dimension: int = field(init=False)

    def __post_init__(self):
        sizes = {(m.nrows, m.ncols) for m in self.images.values()}
        if len(sizes) != 1 or len(self.images) != self.space.dim:
            raise ValueError("need one square matrix per basis element")
        (r, c), = sizes
        if r != c:
            raise ValueError("representation matrices must be square")
        self.dimension = r

    def of_vector(self, v: Vector) -> Matrix:
        out = Matrix.zero(self.dimension)
        for k, c in v.coeffs.items():
            out = out + self.images[k].scale(c)
        return out


def check_lie_rep(g: BiGradedLieAlgebra, rep: MatrixRep) -> list[tuple[int, int]]:
    """Pairs where rho[a,b] != rho(a)rho(b) - (-1)^(eps.eps) rho(b)rho(a)."""
    bad = []
    degs = g.space.degrees
    for i in range(g.dim):
        for j in range(g.dim):
            s = sign_deligne(degs[i], degs[j])
            lhs = rep.of_vector(g.basis_bracket(i, j))
            rhs = rep.images[i] @ rep.images[j] - (rep.images[j] @ rep.images[i]).scale(s)
            if lhs != rhs:
                bad.append((i, j))
    return bad


def check_assoc_rep(a: BiGradedAssocAlgebra, rep: MatrixRep) -> list[tuple[int, int]]:
    bad = []
    for i in range(a.dim):
        for j in range(a.dim):
            if rep.of_vector(a.product.pair(i, j)) != rep.images[i] @ rep.images[j]:
                bad.append((i, j))
    return bad


def so3_standard_rep() -> MatrixRep:
    g = so3()
    images = {
        0: Matrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]]),
        1: Matrix([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]),
        2: Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]]),
    }
    return MatrixRep(g.space, images, name="so3-std")


def algebra_B_rep() -> MatrixRep:
    """4x4 blocks over the 2x2 cells lam1 = z8.Id, lam2 = z8.[[0,1],[-1,0]]:
    q1 = offdiag(lam1), q2 = offdiag(lam2), q3 = diag(lam1 lam2)."""
    b = algebra_B()
    z = CycloScalar.zeta()
    zero = CycloScalar.zero()
    q1 = Matrix([[zero, zero, z, zero],
                 [zero, zero, zero, z],
                 [z, zero, zero, zero],
                 [zero, z, zero, zero]])
    q2 = Matrix([[zero, zero, zero, z],
                 [zero, zero, -z, zero],
                 [zero, z, zero, zero],
                 [-z, zero, zero, zero]])
    q3 = Matrix([[zero, I, zero, zero],
                 [-I, zero, zero, zero],
                 [zero, zero, zero, I],
                 [zero, zero, -I, zero]])
    images = {0: Matrix.identity(4), 1: q1, 2: q2, 3: q3}
    return MatrixRep(b.space, images, name="qalgebra-4x4")


def so3_group_elements() -> dict[str, Matrix]:
    """Candidate implementing matrices for the degree involution of so3.

    reflection-diag = diag(1,-1,-1) conjugates the standard representation
    to e1 -> e1, e2 -> -e2, e3 -> -e3.  rotation-x, the quarter turn about
    the first axis, does not: it squares to reflection-diag, not to the
    identity, and sends e2 to e3 under conjugation.
    """
    return {
        "reflection-diag": Matrix([[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
        "rotation-x": Matrix([[1, 0, 0], [0, 0, -1], [0, 1, 0]]),
    }


def so3_group_automorphism(name: str) -> LinearMap:
    """The algebra automorphism each group element is tested against:
    both candidates target the degree involution e1 -> e1, e2 -> -e2,
    e3 -> -e3."""
    sp = so3().space
    if name not in so3_group_elements():
        raise KeyError(f"unknown group element {name!r}")
    return LinearMap.diagonal(sp, [1, -1, -1])


def catalog() -> dict[str, tuple[str, object]]:
    """Name -> (kind, constructor) for every shipped algebra."""
    return {
        "so3": ("lie", so3),
        "so12": ("lie", so12),
        "qalgebra": ("assoc", algebra_B),
        "qalgebra-lie": ("lie", lambda: commutator_lie(algebra_B())),
        "mat2-super": ("assoc", m2_superalgebra),
        "qmat2": ("assoc", lambda: tilde_extension(m2_superalgebra())),
        "qmat2-lie": ("lie", lambda: commutator_lie(tilde_extension(m2_superalgebra()))),
        "unitary2x2": ("lie", unitary_example),
        "odd-pair": ("lie", odd_pair),
        "triangular3": ("assoc", upper_triangular3),
    }


def catalog_lie() -> dict[str, BiGradedLieAlgebra]:
    out = {}
    for name, (kind, make) in catalog().items():
        if kind == "lie":
            out[name] = make()
    return out
