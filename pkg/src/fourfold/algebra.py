"""Sparse multivariate polynomials with integer coefficients.

Polynomials are immutable.  Terms are kept in graded-lexicographic order
(highest first), so two polynomials over the same variables with the same
terms have identical representations.  Rational numbers are the standard
library's :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NotSymmetric

__all__ = [
    "Fraction",
    "Poly",
    "poly_mul",
    "elementary_symmetric",
    "symmetric_reduce",
    "is_symmetric",
]

Monomial = tuple[int, ...]


def _grlex_key(mono: Monomial) -> tuple:
    return (sum(mono), mono)


class Poly:
    """A polynomial in an ordered list of named variables.

    ``terms`` maps exponent vectors (one entry per variable) to nonzero ints.
    Binary operations between polynomials over different variable lists work
    over the merged list (left operand's variables first).
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, int] | Iterable = ()):
        self.vars: tuple[str, ...] = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"repeated variable in {self.vars}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        n = len(self.vars)
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"exponent vector {mono} does not match variables {self.vars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, 0) + int(c)
        ordered = sorted((m for m, c in acc.items() if c), key=_grlex_key, reverse=True)
        self.terms: dict[Monomial, int] = {m: acc[m] for m in ordered}
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> Poly:
        return cls(variables)

    @classmethod
    def const(cls, c: int, variables: Sequence[str] = ()) -> Poly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> Poly:
        variables = tuple(variables) if variables is not None else (name,)
        mono = tuple(1 if v == name else 0 for v in variables)
        if sum(mono) != 1:
            raise ValueError(f"{name!r} not among {variables}")
        return cls(variables, {mono: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list[Poly]:
        return [cls.var(v, variables) for v in variables]

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] | None = None) -> Poly:
        """Parse strings like ``"5*c1^2 - 8*c2"`` or ``"c1^2*c2"``."""
        src = text.replace(" ", "").replace("**", "^")
        if not src:
            raise ValueError("empty polynomial")
        if src[0] not in "+-":
            src = "+" + src
        found: list[tuple[int, dict[str, int]]] = []
        names: list[str] = list(variables) if variables is not None else []
        pos = 0
        term_re = re.compile(r"([+-])((?:\d+|[A-Za-z_]\w*(?:\^\d+)?)(?:\*(?:\d+|[A-Za-z_]\w*(?:\^\d+)?))*)")
        while pos < len(src):
            m = term_re.match(src, pos)
            if not m:
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            pos = m.end()
            coeff = -1 if m.group(1) == "-" else 1
            powers: dict[str, int] = {}
            for factor in m.group(2).split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, exp = factor.partition("^")
                powers[name] = powers.get(name, 0) + (int(exp) if exp else 1)
                if name not in names:
                    if variables is not None:
                        raise ValueError(f"unknown variable {name!r} in {text!r}")
                    names.append(name)
            found.append((coeff, powers))
        terms = [(tuple(p.get(v, 0) for v in names), c) for c, p in found]
        return cls(names, terms)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, weights: Sequence[int] | None = None) -> int:
        """Total (optionally weighted) degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        w = weights or (1,) * len(self.vars)
        return max(sum(e * wi for e, wi in zip(m, w)) for m in self.terms)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * len(self.vars)
        return len({sum(e * wi for e, wi in zip(m, w)) for m in self.terms}) <= 1

    def leading_term(self) -> tuple[Monomial, int]:
        mono = next(iter(self.terms))
        return mono, self.terms[mono]

    def coefficient(self, powers: Mapping[str, int]) -> int:
        if any(v not in self.vars for v, e in powers.items() if e):
            return 0
        mono = tuple(powers.get(v, 0) for v in self.vars)
        return self.terms.get(mono, 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(m[i] for m in self.terms))

    def named_terms(self) -> dict[frozenset, int]:
        return {
            frozenset((v, e) for v, e in zip(self.vars, m) if e): c for m, c in self.terms.items()
        }

    # -- variable bookkeeping ----------------------------------------------

    def extend(self, variables: Sequence[str]) -> Poly:
        """Re-express over ``variables``, which must contain every used variable."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        index = {v: i for i, v in enumerate(variables)}
        for v in self.used_vars():
            if v not in index:
                raise ValueError(f"variable {v!r} missing from {variables}")
        terms = []
        for mono, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.vars, mono):
                if e:
                    new[index[v]] = e
            terms.append((tuple(new), c))
        return Poly(variables, terms)

    def _merged(self, other: Poly) -> tuple[Poly, Poly]:
        if self.vars == other.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.extend(merged), other.extend(merged)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other, self.vars)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._merged(other)
        acc = dict(a.terms)
        for m, c in b.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Poly(a.vars, acc)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly(self.vars, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, max_degree: int, weights: Sequence[int] | None = None) -> Poly:
        w = weights or (1,) * len(self.vars)
        return Poly(
            self.vars,
            {m: c for m, c in self.terms.items() if sum(e * wi for e, wi in zip(m, w)) <= max_degree},
        )

    def homogeneous_part(self, degree: int, weights: Sequence[int] | None = None) -> Poly:
        w = weights or (1,) * len(self.vars)
        return Poly(
            self.vars,
            {m: c for m, c in self.terms.items() if sum(e * wi for e, wi in zip(m, w)) == degree},
        )

    def subs(self, mapping: Mapping[str, Poly | int]) -> Poly:
        """Substitute polynomials for variables (simultaneously)."""
        keep = [v for v in self.vars if v not in mapping]
        result = Poly.zero(keep)
        cache: dict[tuple[str, int], Poly] = {}
        for mono, c in self.terms.items():
            term = Poly.const(c, keep)
            for v, e in zip(self.vars, mono):
                if not e:
                    continue
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        img = mapping[v]
                        img = img if isinstance(img, Poly) else Poly.const(img)
                        cache[key] = img ** e
                    term = term * cache[key]
                else:
                    term = term * Poly.var(v, keep)
            result = result + term
        return result

    def rename(self, mapping: Mapping[str, str]) -> Poly:
        return Poly([mapping.get(v, v) for v in self.vars], self.terms)

    def __call__(self, **values: int | Fraction):
        total = 0
        for mono, c in self.terms.items():
            t = c
            for v, e in zip(self.vars, mono):
                if e:
                    t = t * values[v] ** e
            total += t
        return total

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        return self.named_terms() == other.named_terms()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.named_terms().items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms.items():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, mono) if e]
            mag = abs(c)
            body = "*".join(factors)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, vars={list(self.vars)})"


def poly_mul(a: Poly, b: Poly) -> Poly:
    a, b = a._merged(b)
    acc: dict[Monomial, int] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            acc[m] = acc.get(m, 0) + ca * cb
    return Poly(a.vars, acc)


def elementary_symmetric(k: int, items: Sequence[Poly], variables: Sequence[str] | None = None) -> Poly:
    """e_k of a list of polynomials, by the usual one-pass recurrence."""
    variables = tuple(variables) if variables is not None else (items[0].vars if items else ())
    e = [Poly.const(1, variables)] + [Poly.zero(variables)] * k
    for x in items:
        for j in range(min(k, len(items)), 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e[k]


def _swap(p: Poly, i: int, j: int) -> Poly:
    terms = {}
    for m, c in p.terms.items():
        m = list(m)
        m[i], m[j] = m[j], m[i]
        terms[tuple(m)] = c
    return Poly(p.vars, terms)


def is_symmetric(p: Poly, variables: Sequence[str]) -> bool:
    q = p.extend(tuple(variables) + tuple(v for v in p.vars if v not in variables))
    idx = [q.vars.index(v) for v in variables]
    # adjacent transpositions generate the symmetric group
    return all(_swap(q, idx[i], idx[i + 1]) == q for i in range(len(idx) - 1))


def symmetric_reduce(p: Poly, variables: Sequence[str], names: Sequence[str] | None = None) -> Poly:
    """Rewrite a symmetric polynomial in the elementary symmetric polynomials.

    Returns ``q`` in variables ``names`` (default ``e1..en``) such that
    substituting ``e_k -> e_k(variables)`` into ``q`` gives back ``p``.
    Uses repeated leading-term subtraction.
    """
    variables = tuple(variables)
    n = len(variables)
    names = tuple(names) if names is not None else tuple(f"e{k}" for k in range(1, n + 1))
    if len(names) != n:
        raise ValueError("need one name per variable")
    extra = [v for v in p.used_vars() if v not in variables]
    if extra:
        raise ValueError(f"polynomial uses variables {extra} outside {variables}")
    p = p.extend(variables)
    if not is_symmetric(p, variables):
        raise NotSymmetric(f"{p} is not symmetric in {variables}")

    xs = Poly.gens(variables)
    elem = [Poly.const(1, variables)] + [elementary_symmetric(k, xs, variables) for k in range(1, n + 1)]
    powers: dict[tuple[int, int], Poly] = {}

    def e_power(k: int, a: int) -> Poly:
        if (k, a) not in powers:
            powers[(k, a)] = elem[k] ** a
        return powers[(k, a)]

    result: dict[Monomial, int] = {}
    rest = p
    while rest.terms:
        mono, c = rest.leading_term()
        # leading monomial of a symmetric polynomial is weakly decreasing
        exps = tuple(mono[k] - (mono[k + 1] if k + 1 < n else 0) for k in range(n))
        if any(e < 0 for e in exps):
            raise NotSymmetric(f"leading monomial {mono} is not a partition")
        result[exps] = result.get(exps, 0) + c
        prod = Poly.const(c, variables)
        for k, a in enumerate(exps, start=1):
            if a:
                prod = prod * e_power(k, a)
        rest = rest - prod
    return Poly(names, result)

