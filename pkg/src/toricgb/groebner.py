"""Reduced grevlex Groebner basis of a simplicial toric ideal without Buchberger.

The candidate leading monomials are the rejected representations collected
during the enumeration of B_A together with the pair monomials of each
congruence class.  Discarding every candidate that is a proper multiple of
another leaves the minimal generators of the initial ideal; each one is
paired with the standard monomial of its fiber.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Monomial, Point, Presentation, ToricError, grevlex_key, in_A, pi_value, sub
from .decompose import DecompositionReport, equivalence_classes, n2_set, report_from_table
from .enumeration import BATable, N1PrimeSet, enumerate_BA


class NotInB(ToricError):
    code = "NotInB"


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    tail: Monomial

    def format(self) -> str:
        return f"{self.lead.format()} - {self.tail.format()}"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class DegreeBoundReport:
    reduction_number_plus_one: int
    thm46_condition: bool
    bound_holds_for_n: bool
    max_degree_candidates: int


@dataclass
class GroebnerResult:
    pres: Presentation
    n0: list
    basis: list
    max_degree: int
    degree_bound_report: DegreeBoundReport
    table: BATable = field(repr=False)
    n1_prime: N1PrimeSet = field(repr=False)
    n2: frozenset = field(repr=False)
    decomposition: DecompositionReport = field(repr=False)

    @property
    def candidates(self) -> frozenset:
        return self.n1_prime.monomials | self.n2


def minimal_generators(candidates) -> list[Monomial]:
    """Candidates not divisible by any other candidate, ascending in grevlex."""
    pool = sorted(set(candidates), key=grevlex_key)
    kept: list[Monomial] = []
    # a divisor always precedes its proper multiples in a degree-compatible order
    for m in pool:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return kept


class _ClassLookup:
    def __init__(self, table: BATable, classes):
        self.table = table
        self.alpha = table.pres.alpha
        self.by_residue = {
            tuple(p % self.alpha for p in cl.members[0]): cl for cl in classes
        }

    def normal_form(self, b: Point) -> Monomial:
        pres = self.table.pres
        cl = self.by_residue.get(tuple(p % self.alpha for p in b))
        if cl is not None and all(p >= 0 for p in b):
            for member in cl.members:
                rest = sub(b, member)
                if in_A(rest, self.alpha):
                    y = Monomial((0,) * pres.c, tuple(p // self.alpha for p in rest))
                    return self.table.index[member].monomial * y
        raise NotInB(f"{b} is not an element of B")


def normal_form_monomial(b, table: BATable, classes) -> Monomial:
    """The grevlex-smallest monomial mapping to ``t^b`` for any ``b`` in B."""
    return _ClassLookup(table, classes).normal_form(tuple(b))


def groebner_from_parts(pres: Presentation, table: BATable, n1: N1PrimeSet) -> GroebnerResult:
    classes = equivalence_classes(table, pres)
    report = report_from_table(table, pres, classes)
    n2 = frozenset(n2_set(classes, table, pres))
    candidates = n1.monomials | n2
    n0 = minimal_generators(candidates)
    lookup = _ClassLookup(table, classes)
    basis = [Binomial(n, lookup.normal_form(pi_value(n, pres))) for n in n0]

    r1 = report.reduction_number + 1
    max_cand = max((m.degree for m in candidates), default=0)
    bound = DegreeBoundReport(
        reduction_number_plus_one=r1,
        thm46_condition=report.thm46_condition,
        bound_holds_for_n=max_cand <= r1,
        max_degree_candidates=max_cand,
    )
    return GroebnerResult(
        pres=pres,
        n0=n0,
        basis=basis,
        max_degree=max((m.degree for m in n0), default=0),
        degree_bound_report=bound,
        table=table,
        n1_prime=n1,
        n2=n2,
        decomposition=report,
    )


def reduced_groebner_basis(pres: Presentation) -> GroebnerResult:
    table, n1 = enumerate_BA(pres)
    return groebner_from_parts(pres, table, n1)
