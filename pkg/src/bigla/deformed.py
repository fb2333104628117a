"""One-variable function algebras with a parity-deformed product.

EvenOddPoly holds a polynomial with conjugation-fixed coefficients and a
product that twists the odd-odd term by a sign; ConjSymPoly is the image
of the untwisting isomorphism f -> f_even + i f_odd, where the product is
plain multiplication.  The star square of the coordinate function is the
negative of its pointwise square, which separates the two products at any
nonzero sample point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .errors import DegreeOverflow, NegativePoint
from .scalars import CycloScalar, I, ONE

DEGREE_BOUND = 64

Coeffs = dict[int, CycloScalar]


def _scal(c) -> CycloScalar:
    return c if isinstance(c, CycloScalar) else CycloScalar.from_rational(c)


def _poly_mul(a: Coeffs, b: Coeffs, bound: int) -> Coeffs:
    out: Coeffs = {}
    for i, ca in a.items():
        for j, cb in b.items():
            if i + j > bound:
                raise DegreeOverflow(f"degree {i + j} above the bound {bound}")
            s = out.get(i + j)
            s = ca * cb if s is None else s + ca * cb
            if s:
                out[i + j] = s
            else:
                out.pop(i + j, None)
    return out


def _poly_pretty(coeffs: Coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == 0:
            s = c.pretty()
            parts.append(f"({s})" if " " in s else s)
        elif c.is_one():
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            s = c.pretty()
            parts.append(f"({s})*{mono}" if " " in s else f"{s}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


class EvenOddPoly:
    """Polynomial with conjugation-fixed coefficients, split by power parity."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Union[CycloScalar, Fraction, int]]):
        clean: Coeffs = {}
        for k, c in coeffs.items():
            c = _scal(c)
            if not c:
                continue
            if not c.is_conj_fixed():
                raise ValueError(f"coefficient at x^{k} is not conjugation-fixed")
            if k < 0:
                raise ValueError("negative powers are not polynomial")
            clean[k] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "EvenOddPoly":
        return cls({})

    @classmethod
    def one(cls) -> "EvenOddPoly":
        return cls({0: ONE})

    @classmethod
    def variable(cls) -> "EvenOddPoly":
        return cls({1: ONE})

    def even_part(self) -> Coeffs:
        return {k: c for k, c in self.coeffs.items() if k % 2 == 0}

    def odd_part(self) -> Coeffs:
        return {k: c for k, c in self.coeffs.items() if k % 2 == 1}

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __add__(self, other: "EvenOddPoly") -> "EvenOddPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return EvenOddPoly(out)

    def __sub__(self, other: "EvenOddPoly") -> "EvenOddPoly":
        return self + (-other)

    def __neg__(self) -> "EvenOddPoly":
        return EvenOddPoly({k: -c for k, c in self.coeffs.items()})

    def scale(self, c) -> "EvenOddPoly":
        return EvenOddPoly({k: _scal(c) * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, EvenOddPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def evaluate(self, a: Fraction) -> CycloScalar:
        out = CycloScalar.zero()
        power = Fraction(1)
        for k in range(self.degree() + 1):
            c = self.coeffs.get(k)
            if c:
                out = out + c * power
            power *= a
        return out

    def pointwise_mul(self, other: "EvenOddPoly",
                      bound: int = DEGREE_BOUND) -> "EvenOddPoly":
        return EvenOddPoly(_poly_mul(self.coeffs, other.coeffs, bound))

    def pretty(self) -> str:
        return _poly_pretty(self.coeffs)

    def __repr__(self):
        return f"EvenOddPoly<{self.pretty()}>"


def star_product(f: EvenOddPoly, h: EvenOddPoly,
                 bound: int = DEGREE_BOUND) -> EvenOddPoly:
    """(f * h) = (f+ h+ - f- h-) + (f+ h- + f- h+), parities as written."""
    fp, fm = f.even_part(), f.odd_part()
    hp, hm = h.even_part(), h.odd_part()
    out: Coeffs = {}
    for part, sign in ((_poly_mul(fp, hp, bound), 1),
                       (_poly_mul(fm, hm, bound), -1),
                       (_poly_mul(fp, hm, bound), 1),
                       (_poly_mul(fm, hp, bound), 1)):
        for k, c in part.items():
            s = out.get(k)
            add = c if sign == 1 else -c
            s = add if s is None else s + add
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return EvenOddPoly(out)


class ConjSymPoly:
    """Polynomial whose coefficients are conjugation-fixed at even powers
    and conjugation-negated at odd powers; the product is pointwise."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, CycloScalar]):
        clean: Coeffs = {}
        for k, c in coeffs.items():
            if not c:
                continue
            expected = c if k % 2 == 0 else -c
            if c.conj() != expected:
                raise ValueError(f"coefficient at x^{k} breaks the symmetry")
            clean[k] = c
        self.coeffs = clean

    def __eq__(self, other):
        if not isinstance(other, ConjSymPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __mul__(self, other: "ConjSymPoly") -> "ConjSymPoly":
        return ConjSymPoly(_poly_mul(self.coeffs, other.coeffs, DEGREE_BOUND))

    def evaluate(self, a: Fraction) -> CycloScalar:
        out = CycloScalar.zero()
        power = Fraction(1)
        for k in range(max(self.coeffs, default=0) + 1):
            c = self.coeffs.get(k)
            if c:
                out = out + c * power
            power *= a
        return out

    def pretty(self) -> str:
        return _poly_pretty(self.coeffs)

    def __repr__(self):
        return f"ConjSymPoly<{self.pretty()}>"


def to_complex(f: EvenOddPoly) -> ConjSymPoly:
    """The untwisting isomorphism: keep even coefficients, multiply odd
    coefficients by i.  Star products become pointwise products."""
    out: Coeffs = {}
    for k, c in f.coeffs.items():
        out[k] = c if k % 2 == 0 else I * c
    return ConjSymPoly(out)


def character_at(f: EvenOddPoly, a: Fraction) -> tuple[CycloScalar, str]:
    """Evaluation character of the star algebra at the point a >= 0.

    Returns the value f_even(a) + i f_odd(a) and the residue tag: the
    character at 0 kills the odd part and lands in the fixed subfield,
    every positive point picks up the imaginary summand.
    """
    a = Fraction(a)
    if a < 0:
        raise NegativePoint(f"character points must be >= 0, got {a}")
    ep = EvenOddPoly(f.even_part()).evaluate(a)
    om = EvenOddPoly(f.odd_part()).evaluate(a)
    return ep + I * om, ("R" if a == 0 else "C")


@dataclass(frozen=True)
class DistinguisherCertificate:
    """Evidence that the star and pointwise products differ as algebras."""

    star_square: EvenOddPoly
    pointwise_square: EvenOddPoly
    samples: list[tuple[Fraction, CycloScalar, CycloScalar]]

    @property
    def separates(self) -> bool:
        return any(s != p for _, s, p in self.samples)


def star_vs_pointwise_distinguisher(n_max: int) -> DistinguisherCertificate:
    """Star-square the coordinate function against its pointwise square and
    evaluate both at 0..n_max.  Any nonzero point separates them."""
    x = EvenOddPoly.variable()
    star_sq = star_product(x, x)
    point_sq = x.pointwise_mul(x)
    samples = []
    for n in range(n_max + 1):
        a = Fraction(n)
        samples.append((a, star_sq.evaluate(a), point_sq.evaluate(a)))
    return DistinguisherCertificate(star_sq, point_sq, samples)


_TERM = re.compile(
    r"(?P<coef>\d+(?:/\d+)?)?\s*(?:(?(coef)\*?)\s*(?P<var>x)(?:\^(?P<pow>\d+))?)?")


def parse_poly(text: str) -> EvenOddPoly:
    """Parse '1 + x', '3/2*x^2 - x', 'x^3' into an EvenOddPoly."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    chunks = re.findall(r"[+-]?\s*[^+-]+", s)
    if "".join(chunks).replace(" ", "") != s.replace(" ", ""):
        raise ValueError(f"cannot parse polynomial: {text!r}")
    coeffs: dict[int, Fraction] = {}
    for chunk in chunks:
        chunk = chunk.strip()
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        m = _TERM.fullmatch(chunk)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        power = 0
        if m.group("var"):
            power = int(m.group("pow")) if m.group("pow") else 1
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    return EvenOddPoly(coeffs)
