"""Congruence classes of B_A and the monomial-ideal decomposition of K[B].

Two elements are congruent when they differ by a vector in ``alpha * Z^d``.
Each class ``Gamma`` with componentwise minimum ``h`` contributes the module
``I(-h)`` where ``I`` is generated by ``y^((b - h) / alpha)`` for ``b`` in
``Gamma``.  The shape of these ideals decides whether K[B] is Cohen-Macaulay
or Buchsbaum, and whether the degree bound ``r + 1`` is guaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Monomial, Point, Presentation, add, class_key, grevlex_key, join, sub
from .enumeration import BATable, enumerate_BA, member_B, reduction_number


@dataclass(frozen=True)
class EquivClass:
    members: tuple  # Points, ascending in the class order
    h: Point
    ideal_gens: tuple  # y-exponent vectors, same order as members

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1


@dataclass(frozen=True)
class DecompositionReport:
    e: int
    classes: tuple
    is_cohen_macaulay: bool
    is_buchsbaum: bool
    thm46_condition: bool
    reduction_number: int

    def summary(self) -> str:
        """Compact ``k × (ideal) ⊕ ...`` description, degree shifts omitted."""
        counts: dict = {}
        for cls in self.classes:
            key = _ideal_label(cls)
            counts[key] = counts.get(key, 0) + 1
        order = sorted(counts, key=lambda s: (s == "T", s))
        return " ⊕ ".join(f"{counts[k]} × {k}" for k in order)


def _ideal_label(cls: EquivClass) -> str:
    if cls.is_singleton:
        return "T"
    gens = [Monomial((), tuple(g)).format() for g in cls.ideal_gens]
    return "(" + ", ".join(gens) + ")"


def _make_class(members, alpha: int) -> EquivClass:
    members = tuple(sorted(members, key=class_key))
    d = len(members[0])
    h = tuple(min(b[k] for b in members) for k in range(d))
    gens = tuple(tuple((p - q) // alpha for p, q in zip(b, h)) for b in members)
    return EquivClass(members, h, gens)


def equivalence_classes(table: BATable, pres: Presentation) -> list[EquivClass]:
    groups: dict[tuple, list] = {}
    for entry in table.entries():
        groups.setdefault(tuple(p % pres.alpha for p in entry.value), []).append(entry.value)
    classes = [_make_class(g, pres.alpha) for g in groups.values()]
    classes.sort(key=lambda cl: grevlex_key(table.index[cl.members[0]].monomial))
    return classes


def pair_monomial(bi: Point, bj: Point, table: BATable) -> Monomial:
    """``m_{bj} * y^((bi v bj - bj) / alpha)`` for ``bi`` before ``bj`` in one class."""
    alpha = table.pres.alpha
    shift = tuple(q // alpha for q in sub(join(bi, bj), bj))
    return table.index[bj].monomial * Monomial((0,) * table.pres.c, shift)


def n2_set(classes, table: BATable, pres: Presentation) -> set:
    out = set()
    for cls in classes:
        ms = cls.members
        for j in range(1, len(ms)):
            for i in range(j):
                out.add(pair_monomial(ms[i], ms[j], table))
    return out


def _ideal_is_linear(cls: EquivClass) -> bool:
    return all(sum(g) == 1 for g in cls.ideal_gens)


def _ideal_is_maximal(cls: EquivClass) -> bool:
    d = len(cls.h)
    units = {tuple(1 if j == k else 0 for j in range(d)) for k in range(d)}
    return set(map(tuple, cls.ideal_gens)) == units


def buchsbaum_class(cls: EquivClass, table: BATable, pres: Presentation) -> bool:
    if cls.is_singleton:
        return True
    if not _ideal_is_maximal(cls):
        return False
    return all(member_B(add(cls.h, a), table, pres)[0] for a in pres.hilbert_basis)


def report_from_table(table: BATable, pres: Presentation,
                      classes: Optional[list] = None) -> DecompositionReport:
    if classes is None:
        classes = equivalence_classes(table, pres)
    cm = all(cl.is_singleton for cl in classes)
    linear = all(cl.is_singleton or _ideal_is_linear(cl) for cl in classes)
    buchsbaum = all(buchsbaum_class(cl, table, pres) for cl in classes)
    return DecompositionReport(
        e=len(classes),
        classes=tuple(classes),
        is_cohen_macaulay=cm,
        is_buchsbaum=buchsbaum,
        thm46_condition=linear,
        reduction_number=reduction_number(table),
    )


def decomposition_report(pres: Presentation) -> DecompositionReport:
    table, _ = enumerate_BA(pres)
    return report_from_table(table, pres)
