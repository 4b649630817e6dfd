"""Schubert calculus on Grassmannians G(l, n).

Schubert classes are indexed by partitions fitting the ``l x (n - l)`` box.
Partitions are plain tuples with trailing zeros removed.  ``c_k`` of the dual
tautological subbundle is the class ``sigma_{1^k}``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import Poly
from .errors import BoxViolation, GradeMismatch

Partition = tuple[int, ...]
Box = tuple[int, int]


def make_partition(parts: Iterable[int]) -> Partition:
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise BoxViolation(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise BoxViolation(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def fits(lam: Partition, box: Box) -> bool:
    l, n = box
    return len(lam) <= l and (not lam or lam[0] <= n - l)


def _check_box(box: Box) -> None:
    l, n = box
    if not 1 <= l < n:
        raise BoxViolation(f"invalid Grassmannian G({l},{n})")


def _check_fits(lam: Partition, box: Box) -> Partition:
    lam = make_partition(lam)
    if not fits(lam, box):
        raise BoxViolation(f"{lam} does not fit the {box[0]}x{box[1] - box[0]} box")
    return lam


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions_in_box(size: int, box: Box) -> list[Partition]:
    """All partitions of ``size`` inside the box, in reverse lexicographic order."""
    l, n = box
    out: list[Partition] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == l:
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(prefix + [part], remaining - part, part)

    rec([], size, n - l)
    return out


def complement(lam: Partition, box: Box) -> Partition:
    l, n = box
    padded = list(lam) + [0] * (l - len(lam))
    return make_partition((n - l) - padded[l - 1 - i] for i in range(l))


def _horizontal_strips(shape: Sequence[int], size: int, max_rows: int, max_cols: int) -> Iterator[list[int]]:
    """Ways to add a horizontal strip of ``size`` boxes; yields added boxes per row."""
    rows = list(shape) + [0] * (max_rows - len(shape))

    def rec(r: int, left: int, acc: list[int]) -> Iterator[list[int]]:
        if r == max_rows:
            if left == 0:
                yield acc
            return
        cap = max_cols if r == 0 else rows[r - 1]
        room = min(cap - rows[r], left)
        for a in range(room, -1, -1):
            yield from rec(r + 1, left - a, acc + [a])

    yield from rec(0, size, [])


def lr_coefficients(lam: Partition, mu: Partition, max_rows: int, max_cols: int) -> dict[Partition, int]:
    """Littlewood-Richardson coefficients c^nu_{lam,mu} for nu within the given box.

    Enumerates LR tableaux of shape nu/lam and content mu: the letter ``i``
    is added as a horizontal strip, and the lattice-word condition is that
    for each row r the number of ``i+1`` in rows <= r is at most the number
    of ``i`` in rows < r.
    """
    lam = make_partition(lam)
    mu = make_partition(mu)
    out: dict[Partition, int] = {}
    if len(lam) > max_rows or (lam and lam[0] > max_cols):
        return out

    def rec(i: int, shape: list[int], prev: list[int] | None) -> None:
        if i == len(mu):
            nu = make_partition(shape)
            out[nu] = out.get(nu, 0) + 1
            return
        for added in _horizontal_strips(shape, mu[i], max_rows, max_cols):
            if prev is not None:
                ok = True
                cum_new = 0
                cum_prev = 0
                for r in range(max_rows):
                    cum_new += added[r]
                    if cum_new > cum_prev:
                        ok = False
                        break
                    cum_prev += prev[r]
                if not ok:
                    continue
            rec(i + 1, [s + a for s, a in zip(shape, added)], added)

    rec(0, list(lam) + [0] * (max_rows - len(lam)), None)
    return out


def pieri(lam: Partition, k: int, box: Box) -> dict[Partition, int]:
    """sigma_lam * sigma_k by the Pieri rule (all horizontal strips of size k)."""
    l, n = box
    lam = _check_fits(lam, box)
    out: dict[Partition, int] = {}
    for added in _horizontal_strips(lam, k, l, n - l):
        padded = list(lam) + [0] * (l - len(lam))
        nu = make_partition(s + a for s, a in zip(padded, added))
        out[nu] = out.get(nu, 0) + 1
    return out


class SchubertExpr:
    """An integer combination of Schubert classes on G(l, n)."""

    __slots__ = ("box", "terms")

    def __init__(self, box: Box, terms: Mapping[Partition, int] | None = None):
        _check_box(box)
        self.box: Box = (int(box[0]), int(box[1]))
        acc: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = _check_fits(lam, self.box)
            acc[lam] = acc.get(lam, 0) + int(c)
        order = sorted((lam for lam, c in acc.items() if c), key=lambda p: (-sum(p), tuple(-x for x in p)))
        self.terms: dict[Partition, int] = {lam: acc[lam] for lam in order}

    @classmethod
    def sigma(cls, box: Box, *parts: int) -> SchubertExpr:
        return cls(box, {make_partition(parts): 1})

    @classmethod
    def one(cls, box: Box) -> SchubertExpr:
        return cls(box, {(): 1})

    @property
    def grades(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def _same_box(self, other: SchubertExpr) -> None:
        if self.box != other.box:
            raise BoxViolation(f"G{self.box} vs G{other.box}")

    def __add__(self, other: SchubertExpr) -> SchubertExpr:
        self._same_box(other)
        acc = dict(self.terms)
        for lam, c in other.terms.items():
            acc[lam] = acc.get(lam, 0) + c
        return SchubertExpr(self.box, acc)

    def __neg__(self) -> SchubertExpr:
        return SchubertExpr(self.box, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: SchubertExpr) -> SchubertExpr:
        return self + (-other)

    def __mul__(self, other) -> SchubertExpr:
        if isinstance(other, int):
            return SchubertExpr(self.box, {lam: c * other for lam, c in self.terms.items()})
        if not isinstance(other, SchubertExpr):
            return NotImplemented
        self._same_box(other)
        acc: dict[Partition, int] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                for nu, c in _lr_cached(lam, mu, self.box).items():
                    acc[nu] = acc.get(nu, 0) + a * b * c
        return SchubertExpr(self.box, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertExpr):
            return NotImplemented
        return self.box == other.box and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.box, frozenset(self.terms.items())))

    def coefficient(self, lam: Iterable[int]) -> int:
        return self.terms.get(make_partition(lam), 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.terms.items():
            label = "s[" + ",".join(map(str, lam)) + "]" if lam else "1"
            mag = abs(c)
            body = label if mag == 1 else (str(mag) if not lam else f"{mag}*{label}")
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"SchubertExpr(G{self.box}: {self})"


@lru_cache(maxsize=None)
def _lr_cached(lam: Partition, mu: Partition, box: Box) -> dict[Partition, int]:
    l, n = box
    # smaller partition as content keeps the tableau search narrow
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    return lr_coefficients(lam, mu, l, n - l)


def lr_expand(lam: Iterable[int], mu: Iterable[int], box: Box) -> SchubertExpr:
    """sigma_lam * sigma_mu in G(l, n); classes outside the box are dropped."""
    _check_box(box)
    lam = _check_fits(lam, box)
    mu = _check_fits(mu, box)
    return SchubertExpr(box, _lr_cached(lam, mu, box))


def degree_pair(lam: Iterable[int], mu: Iterable[int], box: Box) -> int:
    """deg(sigma_lam * sigma_mu): 1 exactly when mu is the complement of lam."""
    _check_box(box)
    lam = _check_fits(lam, box)
    mu = _check_fits(mu, box)
    l, n = box
    if sum(lam) + sum(mu) != l * (n - l):
        raise GradeMismatch(f"|{lam}| + |{mu}| != {l * (n - l)}")
    return int(complement(lam, box) == mu)


def chern_names(l: int) -> list[str]:
    return [f"c{k}" for k in range(1, l + 1)]


def chern_to_schubert(p: Poly, box: Box) -> SchubertExpr:
    """Schubert expansion of a polynomial in c_1..c_l of the dual tautological bundle.

    ``c_k`` maps to ``sigma_{1^k}`` and products are taken with the LR rule,
    so terms beyond the top degree vanish.
    """
    _check_box(box)
    l, _ = box
    names = chern_names(l)
    extra = [v for v in p.used_vars() if v not in names]
    if extra:
        raise ValueError(f"unexpected variables {extra}; expected {names}")
    p = p.extend(names)
    result = SchubertExpr(box)
    cache: dict[tuple[int, ...], SchubertExpr] = {}
    for mono, c in p.terms.items():
        if mono not in cache:
            cls = SchubertExpr.one(box)
            for k, e in enumerate(mono, start=1):
                for _ in range(e):
                    cls = cls * SchubertExpr(box, {(1,) * k: 1})
                    if not cls.terms:
                        break
            cache[mono] = cls
        result = result + cache[mono] * c
    return result


def giambelli(lam: Iterable[int], l: int) -> Poly:
    """sigma_lam as a polynomial in c_1..c_l (dual Jacobi-Trudi determinant).

    sigma_lam = det(c_{lam'_i + j - i}) where lam' is the conjugate partition.
    """
    lam = make_partition(lam)
    names = chern_names(l)
    conj = conjugate(lam)
    k = len(conj)

    def c(j: int) -> Poly:
        if j == 0:
            return Poly.const(1, names)
        if j < 0 or j > l:
            return Poly.zero(names)
        return Poly.var(f"c{j}", names)

    matrix = [[c(conj[i] + j - i) for j in range(k)] for i in range(k)]
    return _det(matrix, names)


def _det(m: list[list[Poly]], names: Sequence[str]) -> Poly:
    n = len(m)
    if n == 0:
        return Poly.const(1, names)
    if n == 1:
        return m[0][0]
    total = Poly.zero(names)
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor, names)
        total = total + term if j % 2 == 0 else total - term
    return total


def schubert_to_chern(expr: SchubertExpr) -> Poly:
    l, _ = expr.box
    names = chern_names(l)
    total = Poly.zero(names)
    for lam, c in expr.terms.items():
        total = total + giambelli(lam, l) * c
    return total


def all_partitions_in_box(box: Box) -> list[Partition]:
    l, n = box
    return [lam for size in range(l * (n - l) + 1) for lam in partitions_in_box(size, box)]

