import pytest

from toricgb import Monomial, NotInBA, enumerate_BA, member_B, min_rep, reduction_number
from toricgb.core import sub
from toricgb.verify import brute_min_rep

from _util import AXES_ONLY, PLANAR12, WORKED3, brute_BA, mono, monos, pres, x_mono


def rep(text):
    """``"2a1+a3"`` -> exponent vector over a1..a3."""
    mu = [0, 0, 0]
    for part in text.split("+"):
        coeff, idx = part.split("a")
        mu[int(idx) - 1] += int(coeff or 1)
    return tuple(mu)


WORKED3_LAYERS = [
    ["0"],
    ["a3", "a2", "a1"],
    ["2a3", "a2+a3", "a1+a3", "a1+a2", "2a1"],
    ["3a3", "a2+2a3", "a1+2a3", "a1+a2+a3", "2a1+a3", "2a1+a2", "3a1"],
    ["a2+3a3", "a1+3a3", "a1+a2+2a3", "2a1+a2+a3", "3a1+a3", "3a1+a2"],
    ["a1+a2+3a3", "3a1+a2+a3"],
]


@pytest.fixture(scope="module")
def worked3():
    p = pres(WORKED3)
    table, n1 = enumerate_BA(p)
    return p, table, n1


def test_worked3_layers(worked3):
    _, table, _ = worked3
    got = [[e.mu for e in layer] for layer in table.layers]
    want = [[(0, 0, 0)]] + [[rep(r) for r in layer] for layer in WORKED3_LAYERS[1:]]
    assert got == want
    assert len(table) == 24


def test_worked3_rejected_by_degree(worked3):
    _, _, n1 = worked3
    by_deg = {t: sorted(r.mu for r in n1.by_degree(t)) for t in range(2, 7)}
    assert by_deg[2] == [rep("2a2")]
    assert by_deg[3] == [rep("2a2+a3")]
    assert by_deg[4] == sorted(map(rep, ["4a3", "2a2+2a3", "2a1+2a3", "4a1"]))
    # 4a1+a2 = (2,4,14) is rejected too: (2,4,14) - 4*u2 = a2 + e2 + 2*e3 lies in B
    assert by_deg[5] == sorted(map(rep, ["2a2+3a3", "2a1+3a3", "2a1+a2+2a3", "4a1+a3", "4a1+a2"]))
    assert by_deg[6] == sorted(map(rep, ["2a1+a2+3a3", "4a1+a2+a3"]))


def test_worked3_n1_prime(worked3):
    _, _, n1 = worked3
    want = monos(["x2^2", "x2^2*x3", "x3^4", "x2^2*x3^2", "x1^2*x3^2", "x1^4",
                  "x2^2*x3^3", "x1^2*x3^3", "x1^2*x2*x3^2", "x1^4*x3",
                  "x1^2*x2*x3^3", "x1^4*x2*x3", "x1^4*x2"], 3, 3)
    assert n1.monomials == frozenset(want)
    assert len(n1) == 13


def test_4a1_plus_a2_not_in_BA(worked3):
    p, table, _ = worked3
    ok, (b, a) = member_B((2, 4, 10), table, p)
    assert ok and b == (2, 0, 2) and a == (0, 4, 8)
    assert (2, 4, 14) not in table


def test_axes_only():
    table, n1 = enumerate_BA(pres(AXES_ONLY))
    assert [[e.value for e in layer] for layer in table.layers] == [[(0, 0)]]
    assert len(n1) == 0
    assert reduction_number(table) == 0


def test_member_B():
    p = pres(PLANAR12)
    table, _ = enumerate_BA(p)
    ok, (b, a) = member_B((13, 23), table, p)
    assert ok and a != (0, 0) and sub((13, 23), b) == a
    assert (13, 23) not in table
    assert member_B((0, 0), table, p) == (True, ((0, 0), (0, 0)))
    assert member_B((1, 0), table, p) == (False, None)
    assert member_B((12, 0), table, p)[0]
    # degree 1 points that are not generators
    assert member_B((10, 2), table, p) == (False, None)


def test_min_rep():
    p = pres(PLANAR12)
    table, _ = enumerate_BA(p)
    assert min_rep((2, 22), table) == mono("x4^2", 4, 2)
    assert min_rep((19, 17), table) == mono("x2^2*x4", 4, 2)
    assert min_rep((0, 0), table) == Monomial.one(4, 2)
    with pytest.raises(NotInBA):
        min_rep((13, 23), table)


def test_reduction_number(worked3, presentations):
    _, table, _ = worked3
    assert reduction_number(table) == 5
    p = presentations["planar12"]
    t, _ = enumerate_BA(p)
    assert reduction_number(t) == max(sum(b) // p.alpha for b in brute_BA(p))


@pytest.mark.parametrize("name", ["worked3", "planar12", "cubic_plane", "quadric", "axes_only"])
def test_table_matches_brute_force(presentations, name):
    p = presentations[name]
    table, _ = enumerate_BA(p)
    assert set(table.index) == brute_BA(p)


# --- invariants, on fixtures and random instances ------------------------------

def check_table_invariants(p, table, n1):
    standard = {e.monomial for e in table.entries()}
    assert table.layers[0][0].value == (0,) * p.d
    for entry in table.entries():
        assert entry.degree <= p.c * p.alpha
        # summand closure
        for i, m in enumerate(entry.mu):
            if m:
                assert sub(entry.value, p.a[i]) in table
        # first examined representation is the minimal one
        assert brute_min_rep(p, entry.value) == entry.monomial
    for r in n1:
        m = r.monomial
        assert m not in standard
        i = next(k for k, v in enumerate(r.mu) if v)
        rest = x_mono(r.mu[:i] + (r.mu[i] - 1,) + r.mu[i + 1:], p.d)
        assert rest in standard
        assert all(v == 0 for v in rest.mu[:i])


def test_invariants_fixtures(presentations):
    for p in presentations.values():
        table, n1 = enumerate_BA(p)
        check_table_invariants(p, table, n1)


def test_invariants_random(random_results):
    for r in random_results:
        check_table_invariants(r.pres, r.table, r.n1_prime)
        if r.pres.c * r.pres.alpha <= 10:
            assert set(r.table.index) == brute_BA(r.pres)
