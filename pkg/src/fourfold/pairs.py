"""Clean embeddings X in V and their associated quadratic functions.

For a basis e_1..e_m of N^2(V) the associated function is

    Q(x) = sum_ij deg([X] e_i e_j) x_i x_j - sum_k deg([X] e_k c2(T_X)) x_k,

stored as an integer Gram matrix ``A`` and linear vector ``b`` so that
``Q(x) = x^T A x - b.x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd, prod
from typing import Mapping, Sequence

from .algebra import Poly
from .bundles import (
    BundleExpr,
    calabi_yau_certificate,
    fundamental_class,
    line_sum,
    realize,
    zero_locus_c2,
)
from .chow import PRODUCT, PROJECTIVE, AmbientModel, Projective, RingClass, codim2_basis, codim2_labels, degree
from .errors import (
    DimensionMismatch,
    NotCalabiYau,
    NotPositiveDefinite,
    NotTwoVariables,
    OracleIncomplete,
    RankMismatch,
)


# -- constructions -------------------------------------------------------------


@dataclass(frozen=True)
class CompleteIntersection:
    """Hypersurfaces of the given (multi)degrees."""

    degrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple((d,) if isinstance(d, int) else tuple(int(x) for x in d) for d in self.degrees)
        object.__setattr__(self, "degrees", normalized)

    def normal(self) -> BundleExpr:
        return line_sum(self.degrees)


@dataclass(frozen=True)
class ZeroLocus:
    """Zero locus of a general section of a bundle on V."""

    bundle: BundleExpr


@dataclass(frozen=True)
class DegreeOracle:
    """Degrees on X of degree-4 monomials in the ambient generators.

    ``table`` maps monomial strings such as ``"c1^2*c2"`` to integers.  The
    class restricting to c2(T_X) comes from ``normal`` (a bundle whose zero
    locus is X) or is given directly as ``tangent_c2``.
    """

    table: tuple[tuple[str, int], ...]
    normal: BundleExpr | None = None
    tangent_c2: str | None = None

    def __post_init__(self):
        items = self.table.items() if isinstance(self.table, Mapping) else self.table
        object.__setattr__(self, "table", tuple(sorted((str(k), int(v)) for k, v in items)))
        if (self.normal is None) == (self.tangent_c2 is None):
            raise ValueError("give exactly one of normal / tangent_c2")

    def lookup(self, generators: Sequence[str]) -> dict[tuple[int, ...], int]:
        out = {}
        for key, value in self.table:
            mono = Poly.parse(key, generators)
            if len(mono.terms) != 1 or mono.leading_term()[1] != 1:
                raise ValueError(f"oracle key {key!r} is not a monomial")
            out[mono.leading_term()[0]] = value
        return out


Construction = CompleteIntersection | ZeroLocus | DegreeOracle


@dataclass(frozen=True)
class SurfaceFixture:
    """Recorded data for a surface S with [S] = i^*(alpha)."""

    name: str
    alpha: tuple[int, ...]
    c1sq: int
    c2: int
    hodge: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class PairSpec:
    name: str
    ambient: AmbientModel
    construction: Construction
    fixtures: tuple[SurfaceFixture, ...] = ()
    description: str = ""

    def __post_init__(self):
        validate_pair(self)

    def normal_bundle(self) -> BundleExpr | None:
        c = self.construction
        if isinstance(c, CompleteIntersection):
            return c.normal()
        if isinstance(c, ZeroLocus):
            return c.bundle
        return c.normal


def _check_ci(ambient: AmbientModel, ci: CompleteIntersection) -> None:
    width = 2 if ambient.kind == PRODUCT else 1
    for d in ci.degrees:
        if len(d) != width:
            raise ValueError(f"degree vector {d} has wrong length for {ambient}")
    codim = ambient.dimension - 4
    if len(ci.degrees) != codim:
        raise RankMismatch(f"{len(ci.degrees)} hypersurfaces in {ambient}; need {codim}")
    if ambient.kind == PROJECTIVE:
        total = sum(d[0] for d in ci.degrees)
        if total != ambient.params[0] + 1:
            raise NotCalabiYau(f"degrees sum to {total}, need {ambient.params[0] + 1}")
    elif ambient.kind == PRODUCT:
        totals = tuple(sum(d[i] for d in ci.degrees) for i in range(2))
        need = (ambient.params[0] + 1, ambient.params[1] + 1)
        if totals != need:
            raise NotCalabiYau(f"bidegrees sum to {totals}, need {need}")


def validate_pair(pair: PairSpec) -> None:
    c = pair.construction
    if isinstance(c, CompleteIntersection):
        _check_ci(pair.ambient, c)
        calabi_yau_certificate(pair.ambient, c.normal())
    elif isinstance(c, ZeroLocus):
        bundle = realize(c.bundle, pair.ambient)
        codim = pair.ambient.dimension - 4
        if bundle.rank != codim:
            raise RankMismatch(f"normal bundle rank {bundle.rank}; need {codim}")
        calabi_yau_certificate(pair.ambient, bundle)
    elif isinstance(c, DegreeOracle):
        needed = _oracle_monomials(pair.ambient, _oracle_tangent(pair.ambient, c))
        have = c.lookup(pair.ambient.generators)
        gens = pair.ambient.generators
        missing = [Poly(gens, {m: 1}) for m in needed if m not in have]
        if missing:
            raise OracleIncomplete("oracle table lacks " + ", ".join(str(p) for p in missing))
    else:
        raise TypeError(f"unknown construction {c!r}")
    m = len(codim2_basis(pair.ambient))
    for fx in pair.fixtures:
        if len(fx.alpha) != m:
            raise DimensionMismatch(f"fixture {fx.name}: alpha has length {len(fx.alpha)}, basis has {m}")


def _oracle_tangent(ambient: AmbientModel, oracle: DegreeOracle) -> Poly:
    if oracle.tangent_c2 is not None:
        return Poly.parse(oracle.tangent_c2, ambient.generators)
    return zero_locus_c2(ambient, oracle.normal).to_generators()


def _oracle_products(ambient: AmbientModel, nu: Poly) -> tuple[list[list[Poly]], list[Poly]]:
    basis = [e.to_generators() for e in codim2_basis(ambient)]
    squares = [[ei * ej for ej in basis] for ei in basis]
    linear = [ek * nu for ek in basis]
    return squares, linear


def _oracle_monomials(ambient: AmbientModel, nu: Poly) -> list[tuple[int, ...]]:
    squares, linear = _oracle_products(ambient, nu)
    gens = ambient.generators
    seen: dict[tuple[int, ...], None] = {}
    for p in [q for row in squares for q in row] + linear:
        for mono in p.extend(gens).terms:
            seen[mono] = None
    return list(seen)


# -- quadratic functions ---------------------------------------------------------


@dataclass(frozen=True)
class QForm:
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    linear: tuple[int, ...]

    def __post_init__(self):
        gram = tuple(tuple(int(v) for v in row) for row in self.gram)
        linear = tuple(int(v) for v in self.linear)
        m = len(linear)
        if len(gram) != m or any(len(row) != m for row in gram):
            raise DimensionMismatch(f"gram is not {m}x{m}")
        if any(gram[i][j] != gram[j][i] for i in range(m) for j in range(m)):
            raise ValueError("gram matrix is not symmetric")
        if len(self.labels) != m:
            raise DimensionMismatch("one label per basis vector")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def m(self) -> int:
        return len(self.linear)

    def __call__(self, x: Sequence[int | Fraction]):
        return q_eval(self, x)

    def quadratic_part(self, x: Sequence[int | Fraction]):
        return sum(self.gram[i][j] * x[i] * x[j] for i in range(self.m) for j in range(self.m))

    def to_poly(self, names: Sequence[str] | None = None) -> Poly:
        names = list(names) if names is not None else [f"x{i}" for i in range(1, self.m + 1)]
        xs = Poly.gens(names)
        total = Poly.zero(names)
        for i in range(self.m):
            for j in range(self.m):
                total = total + xs[i] * xs[j] * self.gram[i][j]
            total = total - xs[i] * self.linear[i]
        return total

    def content(self) -> int:
        """gcd of all coefficients of Q as a polynomial."""
        coeffs = list(self.to_poly().terms.values())
        return reduce(gcd, coeffs, 0)

    def __str__(self) -> str:
        return str(self.to_poly())


def _degree_table(x_class: RingClass, basis: list[RingClass], nu: RingClass) -> tuple[list[list[int]], list[int]]:
    m = len(basis)
    xe = [x_class * e for e in basis]
    gram = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            gram[i][j] = gram[j][i] = degree(xe[i] * basis[j])
    linear = [degree(xe[k] * nu) for k in range(m)]
    return gram, linear


def pair_classes(pair: PairSpec) -> tuple[RingClass, RingClass]:
    """([X], class restricting to c2(T_X)) for ring-path constructions."""
    normal = pair.normal_bundle()
    if isinstance(pair.construction, DegreeOracle):
        raise TypeError("degree-oracle pairs have no fundamental class")
    return fundamental_class(pair.ambient, normal), zero_locus_c2(pair.ambient, normal)


def tangent_c2_class(pair: PairSpec) -> Poly:
    """c2(T_X) as a polynomial in the ambient generators."""
    c = pair.construction
    if isinstance(c, DegreeOracle):
        return _oracle_tangent(pair.ambient, c)
    return zero_locus_c2(pair.ambient, pair.normal_bundle()).to_generators()


def oracle_degree(pair: PairSpec, p: Poly) -> int:
    """deg_X of a top-degree polynomial in the generators, via the oracle table."""
    c = pair.construction
    assert isinstance(c, DegreeOracle)
    gens = pair.ambient.generators
    table = c.lookup(gens)
    total = 0
    for mono, coeff in p.extend(gens).terms.items():
        if mono not in table:
            raise OracleIncomplete(f"oracle table lacks {Poly(gens, {mono: 1})}")
        total += coeff * table[mono]
    return total


def derive_qform(pair: PairSpec) -> QForm:
    labels = tuple(codim2_labels(pair.ambient))
    c = pair.construction
    if isinstance(c, DegreeOracle):
        nu = _oracle_tangent(pair.ambient, c)
        squares, lin = _oracle_products(pair.ambient, nu)
        gram = [[oracle_degree(pair, p) for p in row] for row in squares]
        linear = [oracle_degree(pair, p) for p in lin]
        return QForm(labels, gram, linear)
    x_class, nu = pair_classes(pair)
    gram, linear = _degree_table(x_class, codim2_basis(pair.ambient), nu)
    return QForm(labels, gram, linear)


def monomial_degrees(pair: PairSpec) -> dict[str, int]:
    """deg([X] * monomial) for every degree-4 monomial in the generators (ring path)."""
    x_class, _ = pair_classes(pair)
    amb = pair.ambient
    gens = amb.generators
    out = {}
    for mono in _weighted_monomials(amb.weights, 4):
        p = Poly(gens, {mono: 1})
        out[str(p)] = degree(x_class * amb.from_poly(p))
    return out


def _weighted_monomials(weights: Sequence[int], total: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(weights):
            if left == 0:
                out.append(tuple(acc))
            return
        for e in range(left // weights[i], -1, -1):
            rec(i + 1, left - e * weights[i], acc + [e])

    rec(0, total, [])
    return out


def q_eval(q: QForm, x: Sequence[int | Fraction]):
    if len(x) != q.m:
        raise DimensionMismatch(f"expected {q.m} coordinates, got {len(x)}")
    return q.quadratic_part(x) - sum(b * xi for b, xi in zip(q.linear, x))


# -- exact linear algebra -------------------------------------------------------


def determinant(matrix: Sequence[Sequence[int | Fraction]]) -> Fraction:
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for k in range(col, n):
                    a[r][k] -= f * a[col][k]
    return det


def solve(matrix: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]) -> list[Fraction]:
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col] / a[col][col]
                for k in range(col, n + 1):
                    a[r][k] -= f * a[col][k]
    return [a[i][n] / a[i][i] for i in range(n)]


@dataclass(frozen=True)
class Decency:
    decent: bool
    minors: tuple[Fraction, ...]
    failing_minor: int | None = None
    zero_diagonal: int | None = None

    def __bool__(self) -> bool:
        return self.decent

    def witness(self) -> dict:
        out: dict = {"leading_minors": [str(v) for v in self.minors]}
        if self.failing_minor is not None:
            out["failing_minor"] = self.failing_minor + 1
        if self.zero_diagonal is not None:
            out["zero_diagonal"] = self.zero_diagonal + 1
        return out


def sylvester(gram: Sequence[Sequence[int]]) -> Decency:
    m = len(gram)
    minors = tuple(determinant([row[:k] for row in gram[:k]]) for k in range(1, m + 1))
    failing = next((k for k, v in enumerate(minors) if v <= 0), None)
    zero_diag = next((i for i in range(m) if gram[i][i] == 0), None)
    return Decency(failing is None, minors, failing, zero_diag)


def is_decent(pair: PairSpec | QForm) -> Decency:
    q = pair if isinstance(pair, QForm) else derive_qform(pair)
    return sylvester(q.gram)


def _require_pd(q: QForm) -> None:
    if not sylvester(q.gram).decent:
        raise NotPositiveDefinite(f"quadratic part of {q} is not positive definite")


def q_minimum(q: QForm) -> tuple[tuple[Fraction, ...], Fraction]:
    """(vertex, value) with 2 A v = b."""
    _require_pd(q)
    vertex = tuple(solve([[2 * v for v in row] for row in q.gram], q.linear))
    return vertex, Fraction(q_eval(q, vertex))


def lawrence_value(q: QForm, s: int | Fraction) -> Fraction:
    """-A22 times the bordered determinant of Q(x) = s."""
    if q.m != 2:
        raise NotTwoVariables(f"bordered discriminant needs 2 variables, got {q.m}")
    (a11, a12), (_, a22) = q.gram
    b1, b2 = (Fraction(-v, 2) for v in q.linear)
    bordered = [[a11, a12, b1], [a12, a22, b2], [b1, b2, -Fraction(s)]]
    return -a22 * determinant(bordered)


def lawrence_discriminant(q: QForm) -> tuple[int, Fraction]:
    """(scale, shift) with discriminant(s) = scale * (s + shift).

    The prefactor convention is -A22 (see lawrence_value), so scale is
    A22 * det(A) and shift is minus the minimum of Q.
    """
    if q.m != 2:
        raise NotTwoVariables(f"bordered discriminant needs 2 variables, got {q.m}")
    _require_pd(q)
    at0 = lawrence_value(q, 0)
    scale = lawrence_value(q, 1) - at0
    assert scale.denominator == 1
    return int(scale), at0 / scale


def ci_qform(k: int, degrees: Sequence[int]) -> QForm:
    """Closed form for a complete intersection of the given degrees in P^(4+k)."""
    degrees = [int(a) for a in degrees]
    if len(degrees) != k:
        raise DimensionMismatch(f"{len(degrees)} degrees for k = {k}")
    if sum(degrees) != 5 + k:
        raise NotCalabiYau(f"degrees sum to {sum(degrees)}, need {5 + k}")
    p = prod(degrees)
    pairs = sum(degrees[i] * degrees[j] for i in range(k) for j in range(i + 1, k))
    return QForm(("z^2",), ((p,),), (p * (comb(5 + k, 2) - pairs),))


def ci_pair(degrees: Sequence[int], name: str | None = None) -> PairSpec:
    degrees = [int(a) for a in degrees]
    k = len(degrees)
    return PairSpec(
        name or "ci(" + ",".join(map(str, degrees)) + ")",
        Projective(4 + k),
        CompleteIntersection(tuple((a,) for a in degrees)),
        description=f"complete intersection of degrees {degrees} in P^{4 + k}",
    )


def nu_self_degree(pair: PairSpec) -> int:
    """deg([X] * nu * nu) for the class nu restricting to c2(T_X)."""
    c = pair.construction
    if isinstance(c, DegreeOracle):
        nu = _oracle_tangent(pair.ambient, c)
        return oracle_degree(pair, nu * nu)
    x_class, nu = pair_classes(pair)
    return degree(x_class * nu * nu)


def nu_coordinates(pair: PairSpec) -> tuple[int, ...]:
    """Coordinates of the class restricting to c2(T_X) in the codim-2 basis."""
    nu = pair.ambient.from_poly(tangent_c2_class(pair))
    coords = []
    for e in codim2_basis(pair.ambient):
        (key,) = e.rep.terms
        coords.append(nu.rep.terms.get(key, 0))
    return tuple(coords)
