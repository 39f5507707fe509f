"""Exact vector and monomial arithmetic for simplicial affine monoids.

A monoid in normal form is given by its rank ``d``, a grading constant
``alpha`` and the non-axis Hilbert basis elements ``a_1, ..., a_c``.  The
axis generators ``alpha * u_k`` are never stored.  Monomials live in
``K[x_1, ..., x_c, y_1, ..., y_d]`` with ``x_i -> a_i`` and ``y_k -> alpha * u_k``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

Point = tuple  # tuple[int, ...] of length d


class ToricError(ValueError):
    """Base class for all input and domain errors raised by this package."""

    code = "ToricError"


class NonNegativityViolation(ToricError):
    code = "NonNegativityViolation"


class WrongDegree(ToricError):
    code = "WrongDegree"


class DuplicateGenerator(ToricError):
    code = "DuplicateGenerator"


class AxisGenerator(ToricError):
    code = "AxisGenerator"


class BadDimensions(ToricError):
    code = "BadDimensions"


class NotGraded(ToricError):
    code = "NotGraded"


class NotCongruent(ToricError):
    code = "NotCongruent"


class NotInA(ToricError):
    code = "NotInA"


class GcdWarning(UserWarning):
    """The instance could be rescaled to a smaller grading constant."""


class Cmp(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Presentation:
    d: int
    alpha: int
    a: tuple  # tuple of Points

    @property
    def c(self) -> int:
        return len(self.a)

    def axis(self, k: int) -> Point:
        """The implicit generator ``alpha * u_k`` (0-based ``k``)."""
        return tuple(self.alpha if j == k else 0 for j in range(self.d))

    @property
    def hilbert_basis(self) -> tuple:
        return tuple(self.a) + tuple(self.axis(k) for k in range(self.d))

    def zero(self) -> Point:
        return (0,) * self.d

    def to_dict(self) -> dict:
        return {"d": self.d, "alpha": self.alpha, "generators": [list(v) for v in self.a]}


@dataclass(frozen=True, order=False)
class Monomial:
    """``x^mu * y^nu``; exponents are tuples of nonnegative ints."""

    mu: tuple
    nu: tuple

    @classmethod
    def one(cls, c: int, d: int) -> "Monomial":
        return cls((0,) * c, (0,) * d)

    @classmethod
    def from_exponents(cls, exps: Sequence[int], c: int) -> "Monomial":
        exps = tuple(exps)
        return cls(exps[:c], exps[c:])

    @property
    def exponents(self) -> tuple:
        return self.mu + self.nu

    @property
    def degree(self) -> int:
        return sum(self.mu) + sum(self.nu)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(p + q for p, q in zip(self.mu, other.mu)),
            tuple(p + q for p, q in zip(self.nu, other.nu)),
        )

    def divides(self, other: "Monomial") -> bool:
        return all(p <= q for p, q in zip(self.exponents, other.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """``self / other``; caller guarantees divisibility."""
        return Monomial(
            tuple(p - q for p, q in zip(self.mu, other.mu)),
            tuple(p - q for p, q in zip(self.nu, other.nu)),
        )

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(max(p, q) for p, q in zip(self.mu, other.mu)),
            tuple(max(p, q) for p, q in zip(self.nu, other.nu)),
        )

    def format(self, x: str = "x", y: str = "y") -> str:
        parts = []
        for name, exps in ((x, self.mu), (y, self.nu)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e > 1:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.format()


def grevlex_key(m: Monomial) -> tuple:
    """Sort key realising the graded reverse lexicographic order.

    Variables are ordered ``x_1 > ... > x_c > y_1 > ... > y_d``.
    """
    return (m.degree, tuple(-e for e in reversed(m.exponents)))


def _sign(z: int) -> Cmp:
    return Cmp.LESS if z < 0 else Cmp.GREATER if z > 0 else Cmp.EQUAL


def grevlex_cmp(m1: Monomial, m2: Monomial) -> Cmp:
    if m1.degree != m2.degree:
        return _sign(m1.degree - m2.degree)
    # m1 < m2 iff the last nonzero entry of m2 - m1 is negative
    for p, q in zip(reversed(m1.exponents), reversed(m2.exponents)):
        if p != q:
            return Cmp.LESS if q < p else Cmp.GREATER
    return Cmp.EQUAL


def class_key(b: Point) -> tuple:
    """Sort key for the order inside one congruence class."""
    return tuple(reversed(b))


def class_cmp(b: Point, c: Point, alpha: int) -> Cmp:
    diff = [p - q for p, q in zip(b, c)]
    if any(z % alpha for z in diff):
        raise NotCongruent(f"{b} - {c} is not in {alpha}*Z^d")
    for z in reversed(diff):
        if z:
            return _sign(z)
    return Cmp.EQUAL


def join(a: Point, b: Point) -> Point:
    return tuple(max(p, q) for p, q in zip(a, b))


def add(a: Point, b: Point) -> Point:
    return tuple(p + q for p, q in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    return tuple(p - q for p, q in zip(a, b))


def degree(p: Sequence[int], pres: Presentation) -> int:
    total = sum(p)
    if any(v < 0 for v in p) or total % pres.alpha:
        raise NotGraded(f"{tuple(p)} has no integral nonnegative degree for alpha={pres.alpha}")
    return total // pres.alpha


def pi_value(m: Monomial, pres: Presentation) -> Point:
    out = [pres.alpha * v for v in m.nu]
    for coeff, gen in zip(m.mu, pres.a):
        if coeff:
            for k, g in enumerate(gen):
                out[k] += coeff * g
    return tuple(out)


def x_value(mu: Sequence[int], pres: Presentation) -> Point:
    """Value of the pure x-representation ``sum mu_i a_i``."""
    out = [0] * pres.d
    for coeff, gen in zip(mu, pres.a):
        if coeff:
            for k, g in enumerate(gen):
                out[k] += coeff * g
    return tuple(out)


def in_A(v: Point, alpha: int) -> bool:
    """Whether ``v`` lies in ``alpha * Z_{>=0}^d``."""
    return all(p >= 0 and p % alpha == 0 for p in v)


def y_monomial_of(a: Point, pres: Presentation) -> Monomial:
    if not in_A(a, pres.alpha):
        raise NotInA(f"{a} is not in {pres.alpha}*Z_>=0^{pres.d}")
    return Monomial((0,) * pres.c, tuple(p // pres.alpha for p in a))


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise BadDimensions(f"{what} must be an integer, got {value!r}")
    return value


def validate_presentation(raw) -> Presentation:
    """Build a :class:`Presentation` from a mapping with ``d``, ``alpha``, ``generators``.

    Explicitly listed axis generators are accepted only if all ``d`` of them
    appear exactly once; they are stripped.  ``raw`` may also carry ``a``
    instead of ``generators``.
    """
    if isinstance(raw, Presentation):
        raw = raw.to_dict()
    try:
        d = _as_int(raw["d"], "d")
        alpha = _as_int(raw["alpha"], "alpha")
        gens = raw["generators"] if "generators" in raw else raw["a"]
    except (KeyError, TypeError) as exc:
        raise BadDimensions(f"missing field: {exc}") from None
    if d < 1:
        raise BadDimensions(f"d must be >= 1, got {d}")
    if alpha < 1:
        raise BadDimensions(f"alpha must be >= 1, got {alpha}")

    vectors = []
    for g in gens:
        v = tuple(_as_int(e, "generator entry") for e in g)
        if len(v) != d:
            raise BadDimensions(f"generator {v} has length {len(v)}, expected {d}")
        vectors.append(v)

    axes = {tuple(alpha if j == k else 0 for j in range(d)) for k in range(d)}
    explicit_axes = [v for v in vectors if v in axes]
    if explicit_axes and (len(explicit_axes) != d or set(explicit_axes) != axes):
        raise AxisGenerator(
            f"axis generators must be omitted or listed exactly once each; got {explicit_axes}"
        )
    a = [v for v in vectors if v not in axes]
    for v in a:
        if any(e < 0 for e in v):
            raise NonNegativityViolation(f"generator {v} has a negative entry")
        if sum(v) != alpha:
            raise WrongDegree(f"generator {v} has entry sum {sum(v)}, expected {alpha}")
    if len(set(a)) != len(a):
        dup = next(v for v in a if a.count(v) > 1)
        raise DuplicateGenerator(f"generator {dup} is listed more than once")
    g = math.gcd(alpha, *(e for v in a for e in v))
    if g > 1:
        warnings.warn(
            f"all entries and alpha share the factor {g}; the instance can be rescaled",
            GcdWarning,
            stacklevel=2,
        )
    return Presentation(d=d, alpha=alpha, a=tuple(a))


def make_presentation(d: int, alpha: int, a: Iterable[Sequence[int]]) -> Presentation:
    """Shorthand for :func:`validate_presentation` on keyword data."""
    return validate_presentation({"d": d, "alpha": alpha, "generators": [list(v) for v in a]})
