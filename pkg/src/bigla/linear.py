"""Bi-graded vector spaces, sparse vectors, and (bi)linear maps.

A space is a finite ordered basis with a BiDegree per element.  Basis order
is significant: PBW normal ordering downstream keys off positions in this
list, so loaders must preserve file order.  Vectors are sparse dicts from
basis index to CycloScalar and are treated as immutable; all operations
return fresh objects.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .errors import DegreeViolation, SpaceMismatch
from .scalars import BiDegree, CycloScalar, ONE, ScalarLike


class BiGradedSpace:
    def __init__(self, basis: Sequence[tuple[str, BiDegree]], name: str = ""):
        labels = [lab for lab, _ in basis]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate basis labels in {name or 'space'}")
        self.name = name
        self.labels = tuple(labels)
        self.degrees = tuple(deg for _, deg in basis)
        self._index = {lab: k for k, lab in enumerate(labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        if label not in self._index:
            raise KeyError(f"no basis element {label!r} in {self.name or 'space'}")
        return self._index[label]

    def degree(self, k: int) -> BiDegree:
        return self.degrees[k]

    def component(self, deg: BiDegree) -> list[int]:
        return [k for k, d in enumerate(self.degrees) if d == deg]

    def basis_vector(self, k: int) -> "Vector":
        return Vector(self, {k: ONE})

    def vector(self, coeffs: Mapping[str, ScalarLike]) -> "Vector":
        return Vector(self, {self.index(lab): _scal(c) for lab, c in coeffs.items()})

    def zero(self) -> "Vector":
        return Vector(self, {})

    def __eq__(self, other):
        if not isinstance(other, BiGradedSpace):
            return NotImplemented
        return self.labels == other.labels and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.labels, self.degrees))

    def __repr__(self):
        return f"BiGradedSpace({self.name or self.labels}, dim={self.dim})"


def _scal(c: ScalarLike) -> CycloScalar:
    return c if isinstance(c, CycloScalar) else CycloScalar.from_rational(c)


def _same_space(a: "Vector", b: "Vector"):
    if a.space != b.space:
        raise SpaceMismatch(f"{a.space!r} vs {b.space!r}")


class Vector:
    """Sparse vector over a BiGradedSpace.  Zero entries are dropped."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: BiGradedSpace, coeffs: Mapping[int, CycloScalar]):
        self.space = space
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    def __add__(self, other: "Vector") -> "Vector":
        _same_space(self, other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return Vector(self.space, out)

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        return Vector(self.space, {k: -c for k, c in self.coeffs.items()})

    def scale(self, c: ScalarLike) -> "Vector":
        c = _scal(c)
        return Vector(self.space, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c: ScalarLike) -> "Vector":
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.space == other.space and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.space, tuple(sorted((k, v.c) for k, v in self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int) -> CycloScalar:
        return self.coeffs.get(k, CycloScalar.zero())

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def degree(self) -> Optional[BiDegree]:
        """The common degree of the support, or None if mixed or zero."""
        degs = {self.space.degrees[k] for k in self.coeffs}
        if len(degs) == 1:
            return degs.pop()
        return None

    def homogeneous_parts(self) -> dict[BiDegree, "Vector"]:
        parts: dict[BiDegree, dict[int, CycloScalar]] = {}
        for k, c in self.coeffs.items():
            parts.setdefault(self.space.degrees[k], {})[k] = c
        return {d: Vector(self.space, m) for d, m in parts.items()}

    def conj_coeffs(self) -> "Vector":
        return Vector(self.space, {k: c.conj() for k, c in self.coeffs.items()})

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            parts.append(_term(self.coeffs[k], self.space.labels[k]))
        return _join_terms(parts)

    def __repr__(self):
        return f"<{self.pretty()}>"


def _term(c: CycloScalar, label: str) -> str:
    if c.is_one():
        return label
    if c == -1:
        return f"-{label}"
    s = c.pretty()
    if " " in s:
        return f"({s})*{label}"
    return f"{s}*{label}"


def _join_terms(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


class LinearMap:
    """Linear map given by basis images, homogeneous of a declared degree.

    Every image must be homogeneous of (source degree + declared degree);
    violating images raise DegreeViolation up front, since nothing downstream
    can interpret a non-homogeneous map.
    """

    def __init__(self, source: BiGradedSpace, target: BiGradedSpace,
                 images: Mapping[int, Vector], declared_degree: BiDegree = BiDegree(0, 0)):
        self.source = source
        self.target = target
        self.declared_degree = declared_degree
        self.images = {}
        for k in range(source.dim):
            img = images.get(k, target.zero())
            if img.space != target:
                raise SpaceMismatch("image vector not in target space")
            want = source.degrees[k] + declared_degree
            got = img.degree()
            if img and got != want:
                raise DegreeViolation(
                    f"image of {source.labels[k]} has degree {got}, expected {want}")
            self.images[k] = img

    @classmethod
    def from_labels(cls, source, target, images: Mapping[str, Vector],
                    declared_degree: BiDegree = BiDegree(0, 0)) -> "LinearMap":
        return cls(source, target,
                   {source.index(lab): v for lab, v in images.items()}, declared_degree)

    @classmethod
    def diagonal(cls, space: BiGradedSpace, scalars: Sequence[ScalarLike]) -> "LinearMap":
        return cls(space, space,
                   {k: space.basis_vector(k).scale(scalars[k]) for k in range(space.dim)})

    @classmethod
    def identity(cls, space: BiGradedSpace) -> "LinearMap":
        return cls.diagonal(space, [1] * space.dim)

    def __call__(self, v: Vector) -> Vector:
        if v.space != self.source:
            raise SpaceMismatch("vector not in the map's source space")
        out = self.target.zero()
        for k, c in v.coeffs.items():
            out = out + self.images[k].scale(c)
        return out

    def compose(self, inner: "LinearMap") -> "LinearMap":
        if inner.target != self.source:
            raise SpaceMismatch("composition spaces do not line up")
        return LinearMap(inner.source, self.target,
                         {k: self(inner.images[k]) for k in range(inner.source.dim)},
                         self.declared_degree + inner.declared_degree)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.images == other.images)

    def is_diagonal(self) -> bool:
        return all(set(img.coeffs) <= {k} for k, img in self.images.items())


class AntiLinearMap:
    """Like LinearMap on basis vectors, but conjugates coefficients.

    Models conjugate-linear structure maps (a matrix star operation, say) on
    algebras whose structure constants are conj-fixed.
    """

    def __init__(self, space: BiGradedSpace, images: Mapping[int, Vector]):
        self.space = space
        self.images = {}
        for k in range(space.dim):
            img = images.get(k, space.zero())
            if img.space != space:
                raise SpaceMismatch("image vector not in the space")
            if img and img.degree() != space.degrees[k]:
                raise DegreeViolation(
                    f"star image of {space.labels[k]} is not degree-preserving")
            self.images[k] = img

    @classmethod
    def diagonal_signs(cls, space: BiGradedSpace, signs: Sequence[int]) -> "AntiLinearMap":
        return cls(space, {k: space.basis_vector(k).scale(signs[k])
                           for k in range(space.dim)})

    def __call__(self, v: Vector) -> Vector:
        if v.space != self.space:
            raise SpaceMismatch("vector not in the map's space")
        out = self.space.zero()
        for k, c in v.coeffs.items():
            out = out + self.images[k].scale(c.conj())
        return out


class BilinearMap:
    """Bilinear map V x V -> V from structure constants on basis pairs."""

    def __init__(self, space: BiGradedSpace, constants: Mapping[tuple[int, int], Vector],
                 declared_degree: BiDegree = BiDegree(0, 0)):
        self.space = space
        self.declared_degree = declared_degree
        self.constants: dict[tuple[int, int], Vector] = {}
        for (i, j), v in constants.items():
            if v.space != space:
                raise SpaceMismatch("structure constant vector not in the space")
            if v:
                self.constants[(i, j)] = v

    def pair(self, i: int, j: int) -> Vector:
        return self.constants.get((i, j), self.space.zero())

    def __call__(self, a: Vector, b: Vector) -> Vector:
        if a.space != self.space or b.space != self.space:
            raise SpaceMismatch("operands not in the map's space")
        out = self.space.zero()
        for i, ca in a.coeffs.items():
            for j, cb in b.coeffs.items():
                v = self.constants.get((i, j))
                if v is not None:
                    out = out + v.scale(ca * cb)
        return out

    def check_homogeneity(self) -> list[tuple[int, int]]:
        """Pairs (i,j) whose value is not homogeneous of deg(i)+deg(j)+declared."""
        bad = []
        degs = self.space.degrees
        for (i, j), v in sorted(self.constants.items()):
            want = degs[i] + degs[j] + self.declared_degree
            if v.degree() != want:
                bad.append((i, j))
        return bad


def apply_bilinear(m: BilinearMap, a: Vector, b: Vector) -> Vector:
    return m(a, b)
