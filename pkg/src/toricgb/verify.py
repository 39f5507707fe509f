"""Brute-force cross-checks for the Groebner pipeline.

Nothing here reuses the enumeration or class machinery: fibers are built by
listing every monomial up to a degree, S-pairs are reduced by plain
polynomial division, and minimal representations are found by exhaustive
search.
"""

from __future__ import annotations

import math
import random
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .core import (GcdWarning, Monomial, Presentation, ToricError, grevlex_key,
                   make_presentation, pi_value, x_value)
from .enumeration import enumerate_BA
from .groebner import Binomial


class DegreeTooLargeForBudget(ToricError):
    code = "DegreeTooLargeForBudget"

    def __init__(self, msg, max_feasible_degree):
        super().__init__(msg)
        self.max_feasible_degree = max_feasible_degree


class NonTermination(RuntimeError):
    pass


class NoRepresentation(ToricError):
    code = "NoRepresentation"


@dataclass
class FiberFailure:
    point: tuple
    monomial: Monomial
    reason: str


@dataclass
class FiberReport:
    max_degree_checked: int
    fibers_checked: int = 0
    monomials_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _count_monomials(nvars: int, D: int) -> int:
    return math.comb(D + nvars, nvars)


def _key(e: tuple) -> tuple:
    return (sum(e), tuple(-v for v in reversed(e)))


def fiber_oracle(pres: Presentation, result, D: int, budget: int = 2_000_000,
                 generators=None) -> FiberReport:
    """Check the standard-monomial bijection on every fiber up to degree ``D``.

    ``generators`` overrides ``result.n0`` (used to probe a damaged basis).
    """
    if D < 1:
        raise ValueError("oracle degree must be >= 1")
    c, d = pres.c, pres.d
    nvars = c + d
    if _count_monomials(nvars, D) > budget:
        feasible = 0
        while _count_monomials(nvars, feasible + 1) <= budget:
            feasible += 1
        raise DegreeTooLargeForBudget(
            f"{_count_monomials(nvars, D)} monomials up to degree {D} exceed the budget {budget}",
            feasible,
        )
    gens = result.n0 if generators is None else generators
    lead_set = {g.exponents for g in gens}
    images = [tuple(v) for v in pres.hilbert_basis]  # x_1..x_c then y_1..y_d
    report = FiberReport(max_degree_checked=D)

    zero = (0,) * nvars
    # layer: exps -> (pi value, in initial ideal?, last var index)
    layer = {zero: (pres.zero(), zero in lead_set, 0)}
    for t in range(1, D + 1):
        nxt = {}
        for e, (val, _, last) in layer.items():
            for i in range(last, nvars):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                fval = tuple(p + q for p, q in zip(val, images[i]))
                nxt[f] = [fval, f in lead_set, i]
        # ideal membership: f is a proper multiple of an ideal member of degree t-1
        for f, entry in nxt.items():
            if not entry[1]:
                for i in range(nvars):
                    if f[i]:
                        g = f[:i] + (f[i] - 1,) + f[i + 1:]
                        if layer[g][1]:
                            entry[1] = True
                            break
        fibers: dict = {}
        for f, (fval, in_ideal, _) in nxt.items():
            fibers.setdefault(fval, []).append((f, in_ideal))
        standard = 0
        for fval, members in fibers.items():
            members.sort(key=lambda p: _key(p[0]))
            fmin, fmin_in = members[0]
            if fmin_in:
                report.failures.append(FiberFailure(
                    fval, Monomial.from_exponents(fmin, c), "fiber minimum lies in the initial ideal"))
            for f, in_ideal in members[1:]:
                if not in_ideal:
                    report.failures.append(FiberFailure(
                        fval, Monomial.from_exponents(f, c),
                        "non-minimal monomial is not divisible by any generator"))
        for f, (_, in_ideal, _) in nxt.items():
            if not in_ideal:
                standard += 1
        if standard != len(fibers):
            report.failures.append(FiberFailure(
                (), Monomial.one(c, d),
                f"degree {t}: {standard} standard monomials but {len(fibers)} distinct values"))
        report.fibers_checked += len(fibers)
        report.monomials_checked += len(nxt)
        layer = {f: tuple(v) for f, v in nxt.items()}
    return report


# --- S-pair criterion -------------------------------------------------------

def _divides(a: tuple, b: tuple) -> bool:
    return all(p <= q for p, q in zip(a, b))


def _leading(poly: dict) -> tuple:
    return max(poly, key=_key)


def _add_term(poly: dict, e: tuple, coeff: int) -> None:
    v = poly.get(e, 0) + coeff
    if v:
        poly[e] = v
    else:
        poly.pop(e, None)


def reduce_polynomial(poly: dict, basis, strategy: str = "smallest",
                      max_steps: int = 100_000) -> dict:
    """Normal form of ``poly`` (exponent tuple -> int) modulo binomials ``basis``.

    ``basis`` holds ``(lead, tail)`` exponent tuples.  ``strategy`` picks the
    divisor among applicable leads: ``"smallest"`` in grevlex or ``"first"``
    in list order.
    """
    poly = dict(poly)
    remainder: dict = {}
    steps = 0
    while poly:
        steps += 1
        if steps > max_steps:
            raise NonTermination(f"reduction exceeded {max_steps} steps")
        lt = _leading(poly)
        coeff = poly.pop(lt)
        divisors = [(lead, tail) for lead, tail in basis if _divides(lead, lt)]
        if not divisors:
            remainder[lt] = coeff
            continue
        if strategy == "smallest":
            lead, tail = min(divisors, key=lambda g: _key(g[0]))
        elif strategy == "first":
            lead, tail = divisors[0]
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        # lt - coeff * q * (lead - tail) leaves + coeff * q * tail
        q = tuple(p - r for p, r in zip(lt, lead))
        _add_term(poly, tuple(p + r for p, r in zip(q, tail)), coeff)
    return remainder


def s_polynomial(g1: tuple, g2: tuple) -> dict:
    (l1, t1), (l2, t2) = g1, g2
    lcm = tuple(max(p, q) for p, q in zip(l1, l2))
    q1 = tuple(p - r for p, r in zip(lcm, l1))
    q2 = tuple(p - r for p, r in zip(lcm, l2))
    poly: dict = {}
    _add_term(poly, tuple(p + r for p, r in zip(q1, t1)), -1)
    _add_term(poly, tuple(p + r for p, r in zip(q2, t2)), 1)
    return poly


@dataclass
class SPairResult:
    ok: bool
    pairs_checked: int
    failure: tuple | None = None  # (i, j, remainder)

    def __bool__(self) -> bool:
        return self.ok


def binomial_exponents(basis) -> list:
    return [(b.lead.exponents, b.tail.exponents) for b in basis]


def spair_check(result, strategy: str = "smallest", max_steps: int = 100_000,
                basis=None, workers: int = 1) -> SPairResult:
    """Buchberger's criterion: every S-polynomial of the basis reduces to zero.

    With ``workers > 1`` pairs are reduced on a thread pool; the reported
    failure is still the first one in pair order.
    """
    gens = binomial_exponents(result.basis if basis is None else basis)
    pairs = list(combinations(range(len(gens)), 2))

    def remainder(pair):
        i, j = pair
        return reduce_polynomial(s_polynomial(gens[i], gens[j]), gens, strategy, max_steps)

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rems = list(pool.map(remainder, pairs))
    else:
        rems = map(remainder, pairs)
    for checked, (pair, rem) in enumerate(zip(pairs, rems), start=1):
        if rem:
            return SPairResult(False, checked, (*pair, rem))
    return SPairResult(True, len(pairs))


# --- minimal representations --------------------------------------------------

def compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def brute_min_rep(pres: Presentation, b) -> Monomial:
    b = tuple(b)
    total = sum(b)
    if total % pres.alpha or any(v < 0 for v in b):
        raise NoRepresentation(f"{b} has no integral degree")
    t = total // pres.alpha
    best = None
    for mu in compositions(t, pres.c):
        if x_value(mu, pres) == b:
            m = Monomial(mu, (0,) * pres.d)
            if best is None or grevlex_key(m) < grevlex_key(best):
                best = m
    if best is None:
        raise NoRepresentation(f"{b} is not a sum of the non-axis generators")
    return best


# --- random instances ---------------------------------------------------------

def random_presentation(rng: random.Random, d_max: int = 3, c_max: int = 4,
                        alpha_max: int = 6) -> Presentation:
    """Sample distinct non-axis lattice points of a common entry sum."""
    d = rng.randint(1, d_max)
    alpha = rng.randint(1, alpha_max)
    pool = [p for p in compositions(alpha, d) if max(p) != alpha]
    c = rng.randint(0, min(c_max, len(pool)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GcdWarning)
        return make_presentation(d, alpha, sorted(rng.sample(pool, c)))


def random_instances(seed: int, count: int, ba_cap: int = 200, **kwargs):
    """Yield ``count`` reproducible instances whose B_A has at most ``ba_cap`` elements."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        pres = random_presentation(rng, **kwargs)
        table, _ = enumerate_BA(pres)
        if len(table) <= ba_cap:
            made += 1
            yield pres


# --- fault injection and direct checks -----------------------------------------

def kernel_failures(result, basis=None) -> list:
    """Basis elements whose two monomials have different images."""
    pres = result.pres
    return [g for g in (result.basis if basis is None else basis)
            if pi_value(g.lead, pres) != pi_value(g.tail, pres)]


def corrupt_tail(result, index: int = -1) -> list:
    """Copy of the basis with one tail moved off its fiber (same degree)."""
    basis = list(result.basis)
    g = basis[index]
    e = list(g.tail.exponents)
    src = next(i for i, v in enumerate(e) if v)
    dst = next(i for i in range(len(e)) if i != src and
               tuple(e[:src] + [e[src] - 1] + e[src + 1:]) != g.lead.exponents)
    e[src] -= 1
    e[dst] += 1
    basis[index] = Binomial(g.lead, Monomial.from_exponents(e, result.pres.c))
    return basis


def confluence_check(result, seed: int = 0, samples: int = 50) -> bool:
    """Normal forms agree under both divisor-selection strategies."""
    rng = random.Random(seed)
    gens = binomial_exponents(result.basis)
    nvars = result.pres.c + result.pres.d
    top = result.max_degree + 1
    for _ in range(samples):
        t = rng.randint(0, top)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = rng.choice(list(compositions(t, nvars))) if nvars else ()
            _add_term(terms, e, rng.choice((-1, 1)))
        if reduce_polynomial(terms, gens, "smallest") != reduce_polynomial(terms, gens, "first"):
            return False
    return True
