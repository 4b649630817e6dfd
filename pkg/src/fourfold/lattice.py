"""Exact lattice-point counts under quadratic constraints.

Everything here is exact integer/rational arithmetic except
``closed_form_bound``, which evaluates analytic bounds in floating point and
is not a certified count.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotPositiveDefinite, ShapeMismatch, Undecidable, UnsupportedDimension
from .pairs import QForm, determinant, q_eval, q_minimum, solve, sylvester


class Domain(enum.Enum):
    ALL_INTEGERS = "z"
    NONNEGATIVES = "n3"


class Method(enum.Enum):
    BOUNDED_BOX = "bounded-box"
    HYPERBOLA = "hyperbola"


Point = tuple[int, ...]


@dataclass(frozen=True)
class Family:
    """The ray {base + t * direction : t >= 0}."""

    base: Point
    direction: Point

    def at(self, t: int) -> Point:
        return tuple(b + t * d for b, d in zip(self.base, self.direction))

    def __str__(self) -> str:
        coords = []
        for b, d in zip(self.base, self.direction):
            if d == 0:
                coords.append(str(b))
            elif b == 0:
                coords.append("t" if d == 1 else f"{d}t")
            else:
                coords.append(f"{b}+{d}t" if d != 1 else f"{b}+t")
        return "(" + ", ".join(coords) + "), t >= 0"


@dataclass(frozen=True)
class Finite:
    points: tuple[Point, ...]
    certificate: dict = field(default_factory=dict, compare=False)

    @property
    def count(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Infinite:
    families: tuple[Family, ...]
    # solutions not on any family, listed for completeness
    isolated: tuple[Point, ...] = ()

    def __post_init__(self):
        if not self.families:
            raise ValueError("an infinite result needs at least one family")


@dataclass(frozen=True)
class Empty:
    """The real sublevel set itself is empty."""


CountResult = Finite | Infinite | Empty


def result_count(r: CountResult) -> int | None:
    if isinstance(r, Finite):
        return r.count
    if isinstance(r, Empty):
        return 0
    return None


# -- positive definite enumeration ---------------------------------------------


def _floor_sqrt(t: Fraction) -> int:
    """Largest integer k >= 0 with k*k <= t (t >= 0)."""
    k = math.isqrt(t.numerator // t.denominator)
    while (k + 1) * (k + 1) <= t:
        k += 1
    return k


def _coordinate_range(gram, linear, s: Fraction) -> tuple[int, int] | None:
    """Integer range of x_1 over the real region x^T A x - b.x <= s, or None if empty."""
    m = len(linear)
    vertex = solve([[2 * v for v in row] for row in gram], linear)
    value = sum(gram[i][j] * vertex[i] * vertex[j] for i in range(m) for j in range(m))
    value -= sum(linear[i] * vertex[i] for i in range(m))
    slack = s - value
    if slack < 0:
        return None
    # max of (x_1 - v_1)^2 on the ellipsoid is slack * (A^-1)_11
    if m == 1:
        inv11 = Fraction(1, 1) / gram[0][0]
    else:
        inv11 = determinant([row[1:] for row in gram[1:]]) / determinant(gram)
    t = slack * inv11
    r = _floor_sqrt(t) + 1
    v = vertex[0]
    lo = math.floor(v) - r
    hi = math.ceil(v) + r
    # trim to exact endpoints
    while lo <= hi and (lo - v) ** 2 > t:
        lo += 1
    while hi >= lo and (hi - v) ** 2 > t:
        hi -= 1
    if lo > hi:
        return None
    return lo, hi


def _enumerate(gram, linear, s: Fraction, nonneg: bool, prefix: list[int], out: list[Point]) -> None:
    m = len(linear)
    if m == 0:
        if s >= 0:
            out.append(tuple(prefix))
        return
    rng = _coordinate_range(gram, linear, s)
    if rng is None:
        return
    lo, hi = rng
    if nonneg:
        lo = max(lo, 0)
    a11, b1 = gram[0][0], linear[0]
    rest = [row[1:] for row in gram[1:]]
    for x in range(lo, hi + 1):
        # substitute x_1 = x: the remaining form keeps A', with shifted linear part
        new_linear = [linear[j] - 2 * x * gram[0][j] for j in range(1, m)]
        _enumerate(rest, new_linear, s - (a11 * x * x - b1 * x), nonneg, prefix + [x], out)


def enumerate_sublevel(q: QForm, s: int, d: Domain = Domain.ALL_INTEGERS) -> CountResult:
    """All x in the domain with Q(x) <= s, sorted lexicographically.

    Fincke-Pohst style: each coordinate is bounded by completing the square
    in exact rationals, then the remaining coordinates are handled by the
    same procedure on the restricted form.
    """
    if not sylvester(q.gram).decent:
        raise NotPositiveDefinite(f"{q} is not positive definite")
    _, minimum = q_minimum(q)
    if minimum > s:
        return Empty()
    out: list[Point] = []
    gram = [[Fraction(v) for v in row] for row in q.gram]
    _enumerate(gram, [Fraction(v) for v in q.linear], Fraction(s), d is Domain.NONNEGATIVES, [], out)
    return Finite(tuple(out))


def level_set(q: QForm, v: int, d: Domain = Domain.ALL_INTEGERS) -> CountResult:
    """Points with Q(x) == v exactly (positive definite q)."""
    r = enumerate_sublevel(q, v, d)
    if isinstance(r, Empty):
        return r
    return Finite(tuple(p for p in r.points if q_eval(q, p) == v))


def sublevel_range(q: QForm, lo: int, hi: int, d: Domain = Domain.ALL_INTEGERS) -> CountResult:
    r = enumerate_sublevel(q, hi, d)
    if isinstance(r, Empty):
        return r
    return Finite(tuple(p for p in r.points if q_eval(q, p) >= lo))


# -- representability -------------------------------------------------------------


@dataclass(frozen=True)
class Representability:
    representable: bool
    witness: Point | None = None
    certificate: dict | None = None

    def __bool__(self) -> bool:
        return self.representable


def _witness_key(p: Point):
    return (sum(abs(c) for c in p), p)


def _residues(q: QForm, modulus: int) -> set[int]:
    values = set()
    for x in itertools.product(range(modulus), repeat=q.m):
        values.add(q_eval(q, x) % modulus)
        if len(values) == modulus:
            break
    return values


def _modular_obstruction(q: QForm, lo: int, hi: int, modulus: int) -> bool:
    """True if no value of Q is congruent mod `modulus` to anything in [lo, hi]."""
    if hi - lo + 1 >= modulus:
        return False
    targets = {v % modulus for v in range(lo, hi + 1)}
    return not (_residues(q, modulus) & targets)


def representable(
    q: QForm,
    lo: int,
    hi: int,
    d: Domain = Domain.ALL_INTEGERS,
    max_modulus: int = 64,
    search_radius: int = 12,
) -> Representability:
    """Does Q take some value in [lo, hi] on the domain?

    Positive definite forms are decided by enumeration; the witness is the
    value-attaining point of least l1-norm.  Otherwise a modular obstruction
    is tried (the content of Q first, then small moduli), then a small box
    search for a witness.
    """
    if lo > hi:
        return Representability(False, certificate={"method": "empty-range"})
    if sylvester(q.gram).decent:
        r = sublevel_range(q, lo, hi, d)
        if isinstance(r, Empty) or not r.points:
            scanned = 0 if isinstance(r, Empty) else len(enumerate_sublevel(q, hi, d).points)
            return Representability(False, certificate={"method": "enumeration", "points_checked": scanned})
        return Representability(True, witness=min(r.points, key=_witness_key))

    content = q.content()
    candidates = ([content] if content > 1 else []) + [
        m for m in range(2, max_modulus + 1) if m != content and m ** q.m <= 200_000
    ]
    for modulus in candidates:
        if _modular_obstruction(q, lo, hi, modulus):
            return Representability(False, certificate={"method": "modular", "modulus": modulus})

    rng = range(0, search_radius + 1) if d is Domain.NONNEGATIVES else range(-search_radius, search_radius + 1)
    hits = [x for x in itertools.product(rng, repeat=q.m) if lo <= q_eval(q, x) <= hi]
    if hits:
        return Representability(True, witness=min(hits, key=_witness_key))
    raise Undecidable(f"no obstruction found for values in [{lo}, {hi}] of indefinite form {q}")


# -- closed-form bounds -------------------------------------------------------------


def closed_form_bound(q: QForm, s: int | float) -> float:
    """Analytic upper bound on the number of integer points with Q(x) <= s (not certified).

    m = 1: sqrt(b^2 + 4 a s) / a + 1.
    m = 2: area term pi (s - m0) / sqrt(det A) plus the boundary error
    8 + 16 sqrt((s - m0) / lambda_min).
    """
    if q.m not in (1, 2):
        raise UnsupportedDimension(f"no closed-form bound for m = {q.m}")
    if not sylvester(q.gram).decent:
        raise NotPositiveDefinite(f"{q} is not positive definite")
    if q.m == 1:
        a, b = q.gram[0][0], q.linear[0]
        disc = b * b + 4 * a * s
        if disc < 0:
            return 0.0
        return math.sqrt(disc) / a + 1
    _, minimum = q_minimum(q)
    slack = s - minimum
    if slack < 0:
        return 0.0
    slack = float(slack)
    (a11, a12), (_, a22) = q.gram
    det = a11 * a22 - a12 * a12
    tr = a11 + a22
    lam_min = (tr - math.sqrt(tr * tr - 4 * det)) / 2
    return math.pi * slack / math.sqrt(det) + 8 + 16 * math.sqrt(slack / lam_min)


# -- restricted counts on N^3 ------------------------------------------------------


def _parabola_exceeds_after(a: int, b: int, p: int, start: int) -> int:
    """Least y >= start such that a x^2 - b x > p for every integer x > y (a > 0)."""
    y = start
    # beyond the vertex the parabola increases, so one check suffices there
    while not (2 * a * (y + 1) >= b and a * (y + 1) ** 2 - b * (y + 1) > p):
        y += 1
    return y


def _least_solution(coef: int, const: int) -> int | None:
    """Least integer x >= 0 with coef * x >= const, or None if there is none."""
    if coef > 0:
        return max(0, math.ceil(Fraction(const, coef)))
    return 0 if const <= 0 else None


def _floor_from(*pairs: int) -> int | None:
    needs = [_least_solution(pairs[i], pairs[i + 1]) for i in range(0, len(pairs), 2)]
    if any(n is None for n in needs):
        return None
    return max(0, max(needs) - 1)


def _bounded_box(q: QForm, p: int, floors: tuple[int, int] | None) -> CountResult:
    A, b = q.gram, q.linear
    if not (A[0][0] == 0 and A[1][1] > 0 and A[2][2] > 0 and min(A[0][1], A[0][2], A[1][2]) >= 0):
        raise ShapeMismatch("bounded-box needs Q linear in x1, positive x2^2 and x3^2 terms, nonnegative cross terms")
    c12, c13, c23 = 2 * A[0][1], 2 * A[0][2], 2 * A[1][2]
    a22, a33 = A[1][1], A[2][2]
    b1, b2, b3 = b
    if c12 == 0 or c13 == 0:
        raise ShapeMismatch("bounded-box needs x1 to couple with both x2 and x3")

    # Past these floors every term other than the pure x2 (resp. x3) part is >= 0:
    # the x1 coefficient c12 x2 + c13 x3 - b1 and x3 (c23 x2 + a33 x3 - b3).
    f2 = _floor_from(c12, b1, c23, b3 - a33)
    f3 = _floor_from(c13, b1, c23, b2 - a22)
    if f2 is None or f3 is None:
        raise ShapeMismatch("cross terms too weak to confine x2 and x3")
    if floors is not None:
        f2, f3 = max(f2, floors[0]), max(f3, floors[1])
    y2 = _parabola_exceeds_after(a22, b2, p, f2)
    y3 = _parabola_exceeds_after(a33, b3, p, f3)

    g = math.gcd(c12, c13)
    certificate = {"y2": y2, "y3": y3, "x1_coefficient_modulus": g, "never_zero": b1 % g != 0}
    points: list[Point] = []
    families: list[Family] = []
    for x2 in range(y2 + 1):
        for x3 in range(y3 + 1):
            lin = c12 * x2 + c13 * x3 - b1
            rest = a22 * x2 * x2 + c23 * x2 * x3 + a33 * x3 * x3 - b2 * x2 - b3 * x3
            if lin == 0:
                if rest == p:
                    families.append(Family((0, x2, x3), (1, 0, 0)))
                continue
            num = p - rest
            if num % lin == 0 and num // lin >= 0:
                points.append((num // lin, x2, x3))
    points.sort()
    if families:
        return Infinite(tuple(families), tuple(points))
    return Finite(tuple(points), certificate)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, math.isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def _hyperbola(q: QForm, p: int) -> CountResult:
    A, b = q.gram, q.linear
    if not (A[0][0] == 0 and A[2][2] == 0 and A[1][1] > 0 and A[0][2] > 0 and A[0][1] > 0 and A[1][2] > 0):
        raise ShapeMismatch("hyperbola method needs Q = a x1 x3 + (c x2 - b1) x1 + (e x2 - b3) x3 + g x2^2 - b2 x2")
    a, c, e, g = 2 * A[0][2], 2 * A[0][1], 2 * A[1][2], A[1][1]
    b1, b2, b3 = b
    # a Q = (a x1 + u)(a x3 + v) - u v + a (g x2^2 - b2 x2) with u = e x2 - b3, v = c x2 - b1.
    # Once u, v >= 0 every mixed term is nonnegative, so Q >= g x2^2 - b2 x2.
    start = max(0, math.ceil(Fraction(b3, e)), math.ceil(Fraction(b1, c)))
    y2 = _parabola_exceeds_after(g, b2, p, start)
    points: set[Point] = set()
    families: list[Family] = []
    for x2 in range(y2 + 1):
        u, v = e * x2 - b3, c * x2 - b1
        n = a * p + u * v - a * (g * x2 * x2 - b2 * x2)
        if n == 0:
            if u <= 0 and u % a == 0:
                families.append(Family((-u // a, x2, 0), (0, 0, 1)))
            if v <= 0 and v % a == 0:
                families.append(Family((0, x2, -v // a), (1, 0, 0)))
            continue
        for dvs in _divisors(n):
            for big_x in (dvs, -dvs):
                big_y = n // big_x
                if (big_x - u) % a or (big_y - v) % a:
                    continue
                x1, x3 = (big_x - u) // a, (big_y - v) // a
                if x1 >= 0 and x3 >= 0:
                    points.add((x1, x2, x3))
    pts = tuple(sorted(points))
    if families:
        families.sort(key=lambda f: (f.direction != (1, 0, 0), f.base))
        on_family = {
            p_ for p_ in pts for f in families
            if all((pc - bc) * (1 - dc) == 0 for pc, bc, dc in zip(p_, f.base, f.direction))
        }
        return Infinite(tuple(families), tuple(p_ for p_ in pts if p_ not in on_family))
    return Finite(pts, {"y2": y2})


def restricted_count_n3(
    q: QForm, p: int, method: Method | str = Method.BOUNDED_BOX, floors: tuple[int, int] | None = None
) -> CountResult:
    """Solutions of Q(x) = p in N^3 for the non-decent product-ambient shapes."""
    if q.m != 3:
        raise ShapeMismatch(f"restricted counts need 3 variables, got {q.m}")
    method = Method(method)
    if method is Method.BOUNDED_BOX:
        return _bounded_box(q, p, floors)
    return _hyperbola(q, p)
