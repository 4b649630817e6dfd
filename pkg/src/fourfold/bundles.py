"""Formal vector bundles via the splitting principle.

A bundle is a signed multiset of Chern roots, each root a linear form in the
ambient's base roots.  Negative multiplicities describe virtual bundles such
as the tautological quotient ``V - S`` or a tangent bundle read off an Euler
sequence; their total Chern class is the quotient of the two root products.

Base roots are ``z`` on P^n, ``a, b`` on P^a x P^b, and ``x1..xl`` (the roots
of the dual tautological subbundle E) on G(l, n).  On Grassmannians Chern
classes come back as polynomials in ``c1..cl`` = c(E).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Any, Iterable, Mapping, Sequence

from .algebra import Poly, symmetric_reduce
from .chow import GRASSMANNIAN, PRODUCT, PROJECTIVE, AmbientModel, RingClass
from .errors import InvalidAtom, NotCalabiYau, RankMismatch, SchemaError


# -- construction trees --------------------------------------------------------

ATOMS = ("taut_sub", "taut_dual_sub", "taut_quot", "line")


@dataclass(frozen=True)
class Atom:
    kind: str
    degrees: tuple[int, ...] = ()


@dataclass(frozen=True)
class Dual:
    arg: Any


@dataclass(frozen=True)
class DirectSum:
    args: tuple


@dataclass(frozen=True)
class Tensor:
    args: tuple


@dataclass(frozen=True)
class Sym:
    k: int
    arg: Any


@dataclass(frozen=True)
class Wedge:
    k: int
    arg: Any


BundleExpr = Atom | Dual | DirectSum | Tensor | Sym | Wedge


def TautSub() -> Atom:
    return Atom("taut_sub")


def TautDualSub() -> Atom:
    return Atom("taut_dual_sub")


def TautQuot() -> Atom:
    return Atom("taut_quot")


def LineBundle(*degrees: int) -> Atom:
    return Atom("line", tuple(int(d) for d in degrees))


def line_sum(degree_vectors: Iterable[Sequence[int] | int]) -> DirectSum:
    """Direct sum of line bundles, e.g. the normal bundle of a complete intersection."""
    lines = []
    for d in degree_vectors:
        d = (d,) if isinstance(d, int) else tuple(d)
        lines.append(LineBundle(*d))
    return DirectSum(tuple(lines))


def expr_to_json(expr: BundleExpr) -> dict:
    if isinstance(expr, Atom):
        out: dict = {"atom": expr.kind}
        if expr.kind == "line":
            out["degrees"] = list(expr.degrees)
        return out
    if isinstance(expr, Dual):
        return {"op": "dual", "of": expr_to_json(expr.arg)}
    if isinstance(expr, (DirectSum, Tensor)):
        op = "sum" if isinstance(expr, DirectSum) else "tensor"
        return {"op": op, "args": [expr_to_json(a) for a in expr.args]}
    op = "sym" if isinstance(expr, Sym) else "wedge"
    return {"op": op, "k": expr.k, "of": expr_to_json(expr.arg)}


def expr_from_json(doc: Any, path: str = "bundle") -> BundleExpr:
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    if "atom" in doc:
        kind = doc["atom"]
        if kind not in ATOMS:
            raise SchemaError(f"{path}.atom", f"unknown atom {kind!r}; expected one of {ATOMS}")
        if kind == "line":
            degrees = doc.get("degrees")
            if not isinstance(degrees, list) or not degrees:
                raise SchemaError(f"{path}.degrees", "line bundle needs a nonempty integer list")
            return LineBundle(*[json_int(d, f"{path}.degrees[{i}]") for i, d in enumerate(degrees)])
        return Atom(kind)
    op = doc.get("op")
    if op == "dual":
        return Dual(expr_from_json(doc.get("of"), f"{path}.of"))
    if op in ("sum", "tensor"):
        args = doc.get("args")
        if not isinstance(args, list) or not args:
            raise SchemaError(f"{path}.args", "expected a nonempty list")
        parts = tuple(expr_from_json(a, f"{path}.args[{i}]") for i, a in enumerate(args))
        return DirectSum(parts) if op == "sum" else Tensor(parts)
    if op in ("sym", "wedge"):
        k = json_int(doc.get("k"), f"{path}.k")
        if k < 0:
            raise SchemaError(f"{path}.k", "must be nonnegative")
        inner = expr_from_json(doc.get("of"), f"{path}.of")
        return Sym(k, inner) if op == "sym" else Wedge(k, inner)
    raise SchemaError(path, "expected 'atom' or 'op' in {dual, sum, tensor, sym, wedge}")


def json_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    try:
        return int(value)
    except ValueError:
        raise SchemaError(path, f"expected an integer, got {value!r}") from None


# -- formal bundles ------------------------------------------------------------


def base_roots(ambient: AmbientModel) -> tuple[str, ...]:
    if ambient.kind == GRASSMANNIAN:
        return tuple(f"x{i}" for i in range(1, ambient.params[0] + 1))
    return tuple(ambient.generators)


class FormalBundle:
    """Signed multiset of Chern roots over a fixed list of base roots."""

    __slots__ = ("base", "symmetric", "names", "roots")

    def __init__(self, base: Sequence[str], roots: Mapping[Poly, int], *, symmetric: bool = False,
                 names: Sequence[str] | None = None):
        self.base = tuple(base)
        self.symmetric = symmetric
        self.names = tuple(names) if names is not None else self.base
        acc: Counter = Counter()
        for r, m in roots.items():
            r = r.extend(self.base)
            if r.degree() > 1 or r.constant_term():
                raise ValueError(f"root {r} is not a linear form")
            acc[r] += m
        self.roots: dict[Poly, int] = {r: m for r, m in acc.items() if m}

    @classmethod
    def for_ambient(cls, ambient: AmbientModel, roots: Mapping[Poly, int]) -> FormalBundle:
        if ambient.kind == GRASSMANNIAN:
            return cls(base_roots(ambient), roots, symmetric=True, names=ambient.generators)
        return cls(base_roots(ambient), roots)

    def _like(self, roots: Mapping[Poly, int]) -> FormalBundle:
        return FormalBundle(self.base, roots, symmetric=self.symmetric, names=self.names)

    @property
    def rank(self) -> int:
        return sum(self.roots.values())

    @property
    def is_virtual(self) -> bool:
        return any(m < 0 for m in self.roots.values())

    def root_list(self) -> list[Poly]:
        """Roots with multiplicity; only for honest bundles."""
        if self.is_virtual:
            raise ValueError("virtual bundle has no plain root list")
        return [r for r, m in self.roots.items() for _ in range(m)]

    def _parts(self) -> tuple[list[Poly], list[Poly]]:
        pos = [r for r, m in self.roots.items() if m > 0 for _ in range(m)]
        neg = [r for r, m in self.roots.items() if m < 0 for _ in range(-m)]
        return pos, neg

    def zero_root(self) -> Poly:
        return Poly.zero(self.base)

    # -- operations ------------------------------------------------------

    def dual(self) -> FormalBundle:
        return self._like({-r: m for r, m in self.roots.items()})

    def __add__(self, other: FormalBundle) -> FormalBundle:
        acc = Counter(self.roots)
        for r, m in other.roots.items():
            acc[r] += m
        return self._like(acc)

    def __sub__(self, other: FormalBundle) -> FormalBundle:
        acc = Counter(self.roots)
        for r, m in other.roots.items():
            acc[r] -= m
        return self._like(acc)

    def __mul__(self, other: FormalBundle) -> FormalBundle:
        acc: Counter = Counter()
        for r, m in self.roots.items():
            for s, k in other.roots.items():
                acc[r + s] += m * k
        return self._like(acc)

    def scaled(self, k: int) -> FormalBundle:
        """Direct sum of k copies."""
        return self._like({r: m * k for r, m in self.roots.items()})

    def sym(self, k: int) -> FormalBundle:
        pos, neg = self._parts()
        # Sym^k(P - N) = sum_j (-1)^j Sym^(k-j) P (x) Wedge^j N
        acc: Counter = Counter()
        for j in range(0, min(k, len(neg)) + 1):
            sign = -1 if j % 2 else 1
            for s in _multiset_sums(pos, k - j, self.zero_root()):
                for w in _subset_sums(neg, j, self.zero_root()):
                    acc[s + w] += sign
        return self._like(acc)

    def wedge(self, k: int) -> FormalBundle:
        pos, neg = self._parts()
        # Wedge^k(P - N) = sum_j (-1)^j Wedge^(k-j) P (x) Sym^j N
        acc: Counter = Counter()
        for j in range(0, k + 1):
            if j and not neg:
                break
            sign = -1 if j % 2 else 1
            for w in _subset_sums(pos, k - j, self.zero_root()):
                for s in _multiset_sums(neg, j, self.zero_root()):
                    acc[w + s] += sign
        return self._like(acc)

    # -- Chern classes -----------------------------------------------------

    def chern_series(self, upto: int) -> list[Poly]:
        """[c_0, ..., c_upto] as polynomials in the base roots."""
        series = [Poly.const(1, self.base)] + [Poly.zero(self.base)] * upto
        for r, m in self.roots.items():
            if not r:
                continue
            for _ in range(abs(m)):
                if m > 0:
                    for j in range(upto, 0, -1):
                        series[j] = series[j] + r * series[j - 1]
                else:
                    for j in range(1, upto + 1):
                        series[j] = series[j] - r * series[j - 1]
        return series

    def __repr__(self) -> str:
        shown = ", ".join(f"{r}" + (f" x{m}" if m != 1 else "") for r, m in self.roots.items())
        return f"FormalBundle(rank {self.rank}: {{{shown}}})"


def _multiset_sums(roots: Sequence[Poly], k: int, zero: Poly) -> Iterable[Poly]:
    for combo in combinations_with_replacement(range(len(roots)), k):
        total = zero
        for i in combo:
            total = total + roots[i]
        yield total


def _subset_sums(roots: Sequence[Poly], k: int, zero: Poly) -> Iterable[Poly]:
    for combo in combinations(range(len(roots)), k):
        total = zero
        for i in combo:
            total = total + roots[i]
        yield total


def chern_class(bundle: FormalBundle, k: int) -> Poly:
    """c_k of the bundle, in the ambient generators (c1..cl on Grassmannians)."""
    if k < 0:
        raise ValueError("negative Chern degree")
    ck = bundle.chern_series(k)[k]
    if bundle.symmetric:
        return symmetric_reduce(ck, bundle.base, bundle.names)
    return ck


def total_chern(bundle: FormalBundle, upto: int) -> list[Poly]:
    series = bundle.chern_series(upto)
    if bundle.symmetric:
        return [symmetric_reduce(c, bundle.base, bundle.names) for c in series]
    return series


# -- realization ---------------------------------------------------------------


def _atom(atom: Atom, ambient: AmbientModel) -> FormalBundle:
    base = base_roots(ambient)
    xs = Poly.gens(base)
    zero = Poly.zero(base)
    if atom.kind == "line":
        expected = 2 if ambient.kind == PRODUCT else 1
        if len(atom.degrees) != expected:
            raise InvalidAtom(f"line bundle on {ambient} needs {expected} degree(s), got {atom.degrees}")
        if ambient.kind == GRASSMANNIAN:
            root = sum(xs, zero) * atom.degrees[0]
        else:
            root = sum((x * d for x, d in zip(xs, atom.degrees)), zero)
        return FormalBundle.for_ambient(ambient, {root: 1})
    if ambient.kind != GRASSMANNIAN:
        raise InvalidAtom(f"{atom.kind} is only defined on Grassmannians, not {ambient}")
    l, n = ambient.params
    if atom.kind == "taut_dual_sub":
        return FormalBundle.for_ambient(ambient, Counter(xs))
    if atom.kind == "taut_sub":
        return FormalBundle.for_ambient(ambient, Counter(-x for x in xs))
    if atom.kind == "taut_quot":
        # Q = V (x) O - S
        roots: Counter = Counter({zero: n})
        for x in xs:
            roots[-x] -= 1
        return FormalBundle.for_ambient(ambient, roots)
    raise InvalidAtom(f"unknown atom {atom.kind!r}")


def realize(expr: BundleExpr, ambient: AmbientModel) -> FormalBundle:
    if isinstance(expr, Atom):
        return _atom(expr, ambient)
    if isinstance(expr, Dual):
        return realize(expr.arg, ambient).dual()
    if isinstance(expr, DirectSum):
        parts = [realize(a, ambient) for a in expr.args]
        out = parts[0]
        for p in parts[1:]:
            out = out + p
        return out
    if isinstance(expr, Tensor):
        parts = [realize(a, ambient) for a in expr.args]
        out = parts[0]
        for p in parts[1:]:
            out = out * p
        return out
    if isinstance(expr, Sym):
        return realize(expr.arg, ambient).sym(expr.k)
    if isinstance(expr, Wedge):
        return realize(expr.arg, ambient).wedge(expr.k)
    raise InvalidAtom(f"not a bundle expression: {expr!r}")


# -- tangent and normal bundle classes -------------------------------------------


def euler_sequence(ambient: AmbientModel) -> tuple[FormalBundle, FormalBundle]:
    """(sub, middle) of the Euler sequence 0 -> sub -> middle -> T -> 0."""
    if ambient.kind == PROJECTIVE:
        (n,) = ambient.params
        middle = _atom(LineBundle(1), ambient).scaled(n + 1)
        sub = _atom(LineBundle(0), ambient)
    elif ambient.kind == PRODUCT:
        a, b = ambient.params
        middle = _atom(LineBundle(1, 0), ambient).scaled(a + 1) + _atom(LineBundle(0, 1), ambient).scaled(b + 1)
        sub = _atom(LineBundle(0, 0), ambient).scaled(2)
    else:
        _, n = ambient.params
        e = _atom(TautDualSub(), ambient)
        middle = e.scaled(n)
        sub = _atom(TautSub(), ambient) * e
    return sub, middle


def tangent_bundle(ambient: AmbientModel) -> FormalBundle:
    sub, middle = euler_sequence(ambient)
    return middle - sub


def ambient_tangent_c2(ambient: AmbientModel) -> RingClass:
    return ambient.from_poly(chern_class(tangent_bundle(ambient), 2))


def _as_bundle(normal: BundleExpr | FormalBundle, ambient: AmbientModel) -> FormalBundle:
    return normal if isinstance(normal, FormalBundle) else realize(normal, ambient)


def calabi_yau_certificate(ambient: AmbientModel, normal: BundleExpr | FormalBundle) -> tuple[Poly, Poly]:
    """(c1(T_V), c1(N)); raises NotCalabiYau unless they agree."""
    bundle = _as_bundle(normal, ambient)
    c1_tangent = chern_class(tangent_bundle(ambient), 1)
    c1_normal = chern_class(bundle, 1)
    if c1_tangent != c1_normal:
        raise NotCalabiYau(f"c1(T_V) = {c1_tangent} but c1(N) = {c1_normal} on {ambient}")
    return c1_tangent, c1_normal


def zero_locus_c2(ambient: AmbientModel, normal: BundleExpr | FormalBundle) -> RingClass:
    """The ambient class restricting to c2(T_X): c2(T_V) - c2(N)."""
    bundle = _as_bundle(normal, ambient)
    calabi_yau_certificate(ambient, bundle)
    tangent = chern_class(tangent_bundle(ambient), 2)
    return ambient.from_poly(tangent - chern_class(bundle, 2))


def fundamental_class(ambient: AmbientModel, normal: BundleExpr | FormalBundle) -> RingClass:
    """[X] = c_top(N) for a zero locus of the expected codimension."""
    bundle = _as_bundle(normal, ambient)
    codim = ambient.dimension - 4
    if bundle.rank != codim:
        raise RankMismatch(f"normal bundle rank {bundle.rank} != dim {ambient} - 4 = {codim}")
    return ambient.from_poly(chern_class(bundle, codim))
