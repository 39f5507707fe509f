"""Layered enumeration of the elements of B that admit no axis subtraction.

``B_A`` is the finite set of ``b in B`` with ``b - a not in B`` for every
nonzero ``a`` in the axis monoid ``A = alpha * Z_{>=0}^d``.  It is built one
degree at a time: each element of degree ``t + 1`` is ``a_j + sigma`` for some
``sigma`` of degree ``t``, and the first representation reaching a value is
its grevlex-minimal one.  Representations that are rejected on the way are
pure x-monomials outside the standard basis; they are collected as well.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

from .core import Monomial, Point, Presentation, ToricError, add, degree, sub


class TerminationBoundExceeded(RuntimeError):
    """The enumeration ran past degree ``c * alpha``; this is a bug."""


class NotInBA(ToricError):
    code = "NotInBA"


@dataclass(frozen=True)
class BAEntry:
    value: Point
    mu: tuple
    degree: int

    @property
    def monomial(self) -> Monomial:
        return Monomial(self.mu, (0,) * len(self.value))


@dataclass(frozen=True)
class Rejected:
    """A representation ``sigma + a_j`` that did not yield a new element."""

    mu: tuple
    value: Point
    degree: int
    duplicate: bool  # value already produced earlier (otherwise: value not in B_A)

    @property
    def monomial(self) -> Monomial:
        return Monomial(self.mu, (0,) * len(self.value))


@dataclass
class N1PrimeSet:
    entries: list = field(default_factory=list)

    @property
    def monomials(self) -> frozenset:
        return frozenset(r.monomial for r in self.entries)

    def by_degree(self, t: int) -> list:
        return [r for r in self.entries if r.degree == t]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _residue(v: Point, alpha: int) -> tuple:
    return tuple(p % alpha for p in v)


class BATable:
    """Layers of ``B_A`` in examination order plus lookup structures."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.layers: list[list[BAEntry]] = []
        self.index: dict[Point, BAEntry] = {}
        self._by_residue: dict[tuple, list[BAEntry]] = defaultdict(list)
        self.complete = False

    def _add_layer(self, entries: list[BAEntry]) -> None:
        self.layers.append(entries)
        for e in entries:
            self.index[e.value] = e
            self._by_residue[_residue(e.value, self.pres.alpha)].append(e)

    @property
    def completed_degree(self) -> float:
        """Highest degree up to which the table is known to be complete."""
        return math.inf if self.complete else len(self.layers) - 1

    def entries(self):
        for layer in self.layers:
            yield from layer

    def __len__(self) -> int:
        return len(self.index)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.index

    def congruent_entries(self, v: Point) -> list:
        return self._by_residue.get(_residue(v, self.pres.alpha), [])

    def witness(self, v: Point):
        """Some ``(b, v - b)`` with ``b`` in the table and ``v - b`` in A, or None.

        Prefers ``b = v`` when ``v`` itself is an entry.
        """
        if v in self.index:
            return v, self.pres.zero()
        for e in self.congruent_entries(v):
            if all(p >= q for p, q in zip(v, e.value)):
                return e.value, sub(v, e.value)
        return None


def _first_index(mu: tuple) -> int:
    """Smallest 0-based generator index used by ``mu``; ``c - 1`` for the zero element."""
    for i, e in enumerate(mu):
        if e:
            return i
    return len(mu) - 1


def _properly_reducible(v: Point, table: BATable, deg: int) -> bool:
    """Whether ``v - a`` lies in B for some nonzero ``a`` in A."""
    assert table.completed_degree >= deg - 1, "membership queried above the completed layers"
    for e in table.congruent_entries(v):
        if e.degree < deg and all(p >= q for p, q in zip(v, e.value)):
            return True
    return False


def enumerate_BA(pres: Presentation) -> tuple[BATable, N1PrimeSet]:
    c, alpha = pres.c, pres.alpha
    table = BATable(pres)
    n1 = N1PrimeSet()
    zero = BAEntry(pres.zero(), (0,) * c, 0)
    table._add_layer([zero])
    if c == 0:
        table.complete = True
        return table, n1

    seen: set[Point] = {zero.value}
    bound = c * alpha
    t = 0
    while True:
        new_layer: list[BAEntry] = []
        for sigma in table.layers[t]:
            for j in range(_first_index(sigma.mu), -1, -1):
                mu = sigma.mu[:j] + (sigma.mu[j] + 1,) + sigma.mu[j + 1:]
                v = add(sigma.value, pres.a[j])
                if v in seen:
                    n1.entries.append(Rejected(mu, v, t + 1, duplicate=True))
                    continue
                seen.add(v)
                if _properly_reducible(v, table, t + 1):
                    n1.entries.append(Rejected(mu, v, t + 1, duplicate=False))
                else:
                    new_layer.append(BAEntry(v, mu, t + 1))
        if not new_layer:
            break
        t += 1
        if t > bound:
            raise TerminationBoundExceeded(f"B_A has an element of degree {t} > c*alpha = {bound}")
        table._add_layer(new_layer)
    table.complete = True
    return table, n1


def member_B(v, table: BATable, pres: Presentation):
    """Decide ``v in B`` using ``B = B_A + A``.

    Returns ``(True, (b, v - b))`` with ``b`` in ``B_A`` or ``(False, None)``.
    Points whose entries sum to a non-multiple of ``alpha`` are not in B.
    """
    v = tuple(v)
    if any(p < 0 for p in v):
        return False, None
    if sum(v) % pres.alpha:
        return False, None
    deg = degree(v, pres)
    if table.completed_degree < deg:
        raise RuntimeError(f"table is complete only through degree {table.completed_degree}")
    w = table.witness(v)
    return (w is not None), w


def min_rep(b, table: BATable) -> Monomial:
    b = tuple(b)
    try:
        return table.index[b].monomial
    except KeyError:
        raise NotInBA(f"{b} is not an element of B_A") from None


def reduction_number(table: BATable) -> int:
    return max(e.degree for e in table.entries())

