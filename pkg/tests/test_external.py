"""Cross-check against a general-purpose Groebner engine (sympy), by elimination."""

import pytest

sp = pytest.importorskip("sympy")

from toricgb import reduced_groebner_basis  # noqa: E402
from toricgb.verify import random_instances  # noqa: E402


def by_elimination(p):
    s = sp.symbols(f"s1:{p.d + 1}")
    names = sp.symbols([f"x{i}" for i in range(1, p.c + 1)] + [f"y{k}" for k in range(1, p.d + 1)])
    gens = [v - sp.Mul(*[si ** e for si, e in zip(s, a)]) for v, a in zip(names, p.hilbert_basis)]
    G = sp.groebner(gens, *s, *names, order="lex")
    kept = [g for g in G.exprs if not g.free_symbols & set(s)]
    if not kept:
        return names, set()
    return names, set(sp.groebner(kept, *names, order="grevlex").exprs)


def as_exprs(result, names):
    def to_expr(m):
        return sp.Mul(*[v ** e for v, e in zip(names, m.exponents)])
    return {sp.expand(to_expr(g.lead) - to_expr(g.tail)) for g in result.basis}


@pytest.mark.parametrize("name", ["worked3", "planar12", "cubic_plane", "quadric", "axes_only"])
def test_matches_elimination(presentations, name):
    p = presentations[name]
    names, want = by_elimination(p)
    assert as_exprs(reduced_groebner_basis(p), names) == want


def test_matches_elimination_random():
    for p in random_instances(seed=31337, count=12, ba_cap=40, d_max=3, c_max=3, alpha_max=4):
        names, want = by_elimination(p)
        assert as_exprs(reduced_groebner_basis(p), names) == want, p
