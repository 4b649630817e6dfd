"""Numerical rings of the three ambient families: P^n, P^a x P^b and G(l, n).

Classes on projective spaces and products are polynomials in the hyperplane
classes (``z``, or ``a`` and ``b``) reduced modulo the top powers.  Classes on
Grassmannians are Schubert expansions.  For every ambient the polynomial
"generators" are the variables bundle Chern classes are written in: ``z``,
``a, b``, or ``c1..cl`` (Chern classes of the dual tautological subbundle).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import Poly
from .errors import AmbientMismatch, BoxViolation, NotTopGrade
from .schubert import (
    SchubertExpr,
    chern_names,
    chern_to_schubert,
    fits,
    make_partition,
    schubert_to_chern,
)

PROJECTIVE = "projective"
PRODUCT = "product"
GRASSMANNIAN = "grassmannian"


@dataclass(frozen=True)
class AmbientModel:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.kind == PROJECTIVE:
            (n,) = self.params
            if n < 4:
                raise ValueError(f"P^{n}: need n >= 4")
        elif self.kind == PRODUCT:
            a, b = self.params
            if a < 2 or b < 2:
                raise ValueError(f"P^{a} x P^{b}: need a, b >= 2")
        elif self.kind == GRASSMANNIAN:
            l, n = self.params
            if not 1 <= l < n:
                raise ValueError(f"G({l},{n}): need 1 <= l < n")
        else:
            raise ValueError(f"unknown ambient kind {self.kind!r}")

    @property
    def dimension(self) -> int:
        if self.kind == PROJECTIVE:
            return self.params[0]
        if self.kind == PRODUCT:
            return self.params[0] + self.params[1]
        l, n = self.params
        return l * (n - l)

    @property
    def generators(self) -> list[str]:
        if self.kind == PROJECTIVE:
            return ["z"]
        if self.kind == PRODUCT:
            return ["a", "b"]
        return chern_names(self.params[0])

    @property
    def weights(self) -> list[int]:
        if self.kind == GRASSMANNIAN:
            return list(range(1, self.params[0] + 1))
        return [1] * len(self.generators)

    def __str__(self) -> str:
        if self.kind == PROJECTIVE:
            return f"P^{self.params[0]}"
        if self.kind == PRODUCT:
            return "P^{} x P^{}".format(*self.params)
        return "G({},{})".format(*self.params)

    # -- classes ---------------------------------------------------------------

    def from_poly(self, p: Poly) -> RingClass:
        """The class of a polynomial in this ambient's generators."""
        if self.kind == GRASSMANNIAN:
            return RingClass(self, chern_to_schubert(p, tuple(self.params)))
        return RingClass(self, p)

    def zero(self) -> RingClass:
        return self.from_poly(Poly.zero(self.generators))

    def one(self) -> RingClass:
        return self.from_poly(Poly.const(1, self.generators))

    def point(self) -> RingClass:
        if self.kind == PROJECTIVE:
            return self.monomial(z=self.params[0])
        if self.kind == PRODUCT:
            return self.monomial(a=self.params[0], b=self.params[1])
        l, n = self.params
        return self.schubert((n - l,) * l)

    def monomial(self, **powers: int) -> RingClass:
        gens = self.generators
        mono = tuple(powers.get(g, 0) for g in gens)
        return self.from_poly(Poly(gens, {mono: 1}))

    def schubert(self, parts: Iterable[int]) -> RingClass:
        if self.kind != GRASSMANNIAN:
            raise AmbientMismatch(f"Schubert classes need a Grassmannian, not {self}")
        return RingClass(self, SchubertExpr(tuple(self.params), {make_partition(parts): 1}))


def Projective(n: int) -> AmbientModel:
    return AmbientModel(PROJECTIVE, (n,))


def Product(a: int, b: int) -> AmbientModel:
    return AmbientModel(PRODUCT, (a, b))


def Grassmannian(l: int, n: int) -> AmbientModel:
    return AmbientModel(GRASSMANNIAN, (l, n))


def _reduce(ambient: AmbientModel, p: Poly) -> Poly:
    gens = ambient.generators
    p = p.extend(gens)
    caps = ambient.params
    return Poly(gens, {m: c for m, c in p.terms.items() if all(e <= cap for e, cap in zip(m, caps))})


class RingClass:
    """An element of N*(V), stored in canonical reduced form."""

    __slots__ = ("ambient", "rep")

    def __init__(self, ambient: AmbientModel, rep: Poly | SchubertExpr):
        self.ambient = ambient
        if ambient.kind == GRASSMANNIAN:
            if not isinstance(rep, SchubertExpr) or rep.box != tuple(ambient.params):
                raise BoxViolation(f"{rep!r} is not a Schubert expression on {ambient}")
            self.rep = rep
        else:
            if not isinstance(rep, Poly):
                raise TypeError("expected a polynomial representation")
            self.rep = _reduce(ambient, rep)

    @property
    def grades(self) -> set[int]:
        if isinstance(self.rep, SchubertExpr):
            return self.rep.grades
        return {sum(m) for m in self.rep.terms}

    @property
    def grade(self) -> int:
        """Codimension; raises for mixed-grade classes.  Zero has grade 0 by convention."""
        g = self.grades
        if len(g) > 1:
            raise ValueError(f"mixed-grade class {self}")
        return g.pop() if g else 0

    def is_zero(self) -> bool:
        return not self.rep.terms

    def _check(self, other: RingClass) -> None:
        if not isinstance(other, RingClass) or other.ambient != self.ambient:
            raise AmbientMismatch(f"{self.ambient} vs {getattr(other, 'ambient', other)}")

    def __add__(self, other: RingClass) -> RingClass:
        self._check(other)
        return RingClass(self.ambient, self.rep + other.rep)

    def __sub__(self, other: RingClass) -> RingClass:
        self._check(other)
        return RingClass(self.ambient, self.rep - other.rep)

    def __neg__(self) -> RingClass:
        return RingClass(self.ambient, -self.rep)

    def __mul__(self, other) -> RingClass:
        if isinstance(other, int):
            return RingClass(self.ambient, self.rep * other)
        return ring_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RingClass:
        out = self.ambient.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingClass):
            return NotImplemented
        return self.ambient == other.ambient and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.ambient, self.rep))

    def to_generators(self) -> Poly:
        """Express the class as a polynomial in the ambient's generators."""
        if isinstance(self.rep, SchubertExpr):
            return schubert_to_chern(self.rep)
        return self.rep

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"RingClass({self.ambient}: {self.rep})"


def ring_mul(x: RingClass, y: RingClass) -> RingClass:
    if not isinstance(y, RingClass) or x.ambient != y.ambient:
        raise AmbientMismatch(f"{x.ambient} vs {getattr(y, 'ambient', y)}")
    return RingClass(x.ambient, x.rep * y.rep)


def degree(x: RingClass) -> int:
    """Coefficient of the point class; x must be zero or of top grade."""
    top = x.ambient.dimension
    if x.is_zero():
        return 0
    if x.grades != {top}:
        raise NotTopGrade(f"class of grade(s) {sorted(x.grades)} on {x.ambient} (dimension {top})")
    point = x.ambient.point()
    (key,) = point.rep.terms
    return x.rep.terms.get(key, 0)


def codim2_basis(ambient: AmbientModel) -> list[RingClass]:
    """The ordered basis of N^2: [z^2] | [s2, s11] | [a^2, ab, b^2]."""
    if ambient.dimension < 4:
        raise ValueError(f"{ambient} has dimension < 4")
    if ambient.kind == PROJECTIVE:
        return [ambient.monomial(z=2)]
    if ambient.kind == PRODUCT:
        return [ambient.monomial(a=2), ambient.monomial(a=1, b=1), ambient.monomial(b=2)]
    box = tuple(ambient.params)
    return [ambient.schubert(lam) for lam in ((2,), (1, 1)) if fits(lam, box)]


def codim2_labels(ambient: AmbientModel) -> list[str]:
    if ambient.kind == PROJECTIVE:
        return ["z^2"]
    if ambient.kind == PRODUCT:
        return ["a^2", "a*b", "b^2"]
    return [str(b) for b in codim2_basis(ambient)]
