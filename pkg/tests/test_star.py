from __future__ import annotations

import itertools

import pytest

import oracles as O
from sgpstar import ideal as I
from sgpstar import star as St
from sgpstar.enumeration import enumerate_stars
from sgpstar.errors import AxiomViolation, IntersectionNotS, InternalInvariantBroken, NotIntegral, NotOverring
from sgpstar.semigroup import make_semigroup
from sgpstar.verify import overring_families


def idx(P, S, added):
    return P.index_of(I.normalize(S, [0, *added]))


@pytest.fixture
def p357(s357):
    return I.standard_poset(s357)


def test_builtins(s357, p357):
    d, v = St.builtin_d(s357), St.builtin_v(s357)
    assert d.table == tuple(range(len(p357)))
    assert v.table[idx(p357, s357, [4])] == idx(p357, s357, [2, 4])
    assert St.compare(d, v) == St.LESS_EQUAL
    assert St.compare(v, d) == St.GREATER_EQUAL
    assert St.compare(v, v) == St.EQUAL
    N = make_semigroup([1])
    assert St.builtin_d(N) == St.builtin_v(N)


def test_translated_table_matches_oracle(s357, p357):
    # E4 -> E24 with E2 and E24 fixed; everything else as in d.
    t = list(range(len(p357)))
    t[idx(p357, s357, [4])] = idx(p357, s357, [2, 4])
    assert St.is_valid(t, p357) == (O.star_violation(t, p357, s357) is None)


@pytest.mark.parametrize("gens", [(2, 3), (3, 4), (3, 5, 7), (3, 4, 5)])
def test_validator_agrees_with_set_oracle(gens):
    S = make_semigroup(gens)
    P = I.standard_poset(S)
    n = len(P)
    ups = [[j for j in range(n) if P.inclusion[i][j]] for i in range(n)]
    valid = 0
    for t in itertools.product(*ups):
        ours = St.is_valid(t, P)
        assert ours == (O.star_violation(t, P, S) is None), t
        valid += ours
    assert valid == len(enumerate_stars(S))


def test_violation_reports(s357, p357):
    n = len(p357)
    with pytest.raises(AxiomViolation) as exc:
        St.validate([n - 1] * n, p357)
    assert exc.value.axiom == "*1"
    bad = list(range(n))
    bad[n - 1] = 0
    with pytest.raises(AxiomViolation) as exc:
        St.validate(bad, p357)
    assert exc.value.axiom == "*2"
    e2, e24 = idx(p357, s357, [2]), idx(p357, s357, [2, 4])
    bad = list(range(n))
    bad[e2] = e24
    bad[e24] = n - 1
    with pytest.raises(AxiomViolation) as exc:
        St.validate(bad, p357)
    assert exc.value.axiom == "*3"


def test_apply(s357, p357):
    v, d = St.builtin_v(s357), St.builtin_d(s357)
    E4 = I.normalize(s357, [0, 4])
    assert St.apply(v, E4.shift(10)) == I.normalize(s357, [0, 2, 4]).shift(10)
    E = I.normalize(s357, [-3, 1])
    assert St.apply(d, E) == E
    for op in enumerate_stars(s357):
        assert St.apply(op, I.principal(s357).shift(7)) == I.principal(s357).shift(7)


def test_overrings(s357):
    assert St.from_overrings(s357, [s357]) == St.builtin_d(s357)
    with pytest.raises(IntersectionNotS):
        St.from_overrings(s357, [make_semigroup([1])])
    with pytest.raises(NotOverring):
        St.from_overrings(s357, [make_semigroup([4, 5, 6, 7])])
    N = make_semigroup([1])
    assert St.from_overrings(N, [N]) == St.builtin_d(N) == St.builtin_v(N)
    # Families of proper overrings meeting in S.
    S = make_semigroup([3, 7, 8])
    fams = [f for f in overring_families(S) if len(f) > 1 and S not in f]
    assert fams
    for fam in fams:
        op = St.from_overrings(S, fam)
        assert O.star_violation(op.table, op.poset, S) is None


def test_lattice_ops(s357):
    ops = enumerate_stars(s357)
    d, v = St.builtin_d(s357), St.builtin_v(s357)
    assert St.meet([d, v]) == d
    assert St.meet(ops) == d
    assert St.join(ops) == v
    for op in ops:
        assert St.meet([op]) == op
        assert St.join([d, op]) == op
    assert St.join([d, v]) == v
    # The four operations on <3,5,7> form a chain.
    assert all(St.compare(a, b) != St.INCOMPARABLE for a in ops for b in ops)


def test_join_of_incomparable_pair():
    S = make_semigroup([3, 7, 8])
    ops = enumerate_stars(S)
    pairs = [(a, b) for a, b in itertools.combinations(ops, 2)
             if St.compare(a, b) == St.INCOMPARABLE]
    assert pairs
    for a, b in pairs:
        j = St.join([a, b])
        uppers = [u for u in ops if St.leq(a, u) and St.leq(b, u)]
        assert j in uppers and all(St.leq(j, u) for u in uppers)
        m = St.meet([a, b])
        lowers = [w for w in ops if St.leq(w, a) and St.leq(w, b)]
        assert m in lowers and all(St.leq(w, m) for w in lowers)


def _oracle_stable(op, S, P):
    """Union of (E : I) over integral ideals I with I* = S, by brute force
    over translates of poset members inside S."""
    c = S.conductor
    R = I.principal(S)
    dense = []
    for a in range(0, 2 * c + 2):
        for F in P:
            J = F.shift(a)
            if J.issubset(R) and St.apply(op, J) == R:
                dense.append(J)
    table = []
    for E in P:
        got = set()
        for x in range(-c - 2, c + 2):
            if any(all((x + j) in E for j in J.elements(3 * c + 6)) for J in dense):
                got.add(x)
        table.append(P.index_of(I.normalize(S, sorted(got))))
    return tuple(table)


@pytest.mark.parametrize("gens", [(2, 3), (3, 4), (3, 5, 7), (3, 4, 5), (4, 5, 6), (3, 7, 8)])
def test_stable_closure_oracle(gens):
    S = make_semigroup(gens)
    P = I.standard_poset(S)
    for op in enumerate_stars(S):
        bar = St.stable_closure(op)
        assert bar.table == _oracle_stable(op, S, P)
        assert St.leq(bar, op)
        assert St.is_stable(bar)
        assert St.tilde(op) == bar


def test_stable_examples(s357, p357):
    d, v = St.builtin_d(s357), St.builtin_v(s357)
    assert St.stable_closure(d) == d
    e4 = idx(p357, s357, [4])
    assert St.stable_closure(v).table[e4] == e4
    assert St.is_stable(d)
    assert not St.is_stable(v)


def test_dense(s357):
    v = St.builtin_v(s357)
    M = I.maximal_ideal(s357)
    assert not St.is_dense(v, M)
    assert St.is_dense(v, I.principal(s357))
    assert not St.is_dense(v, I.normalize(s357, [5, 6]))
    with pytest.raises(NotIntegral):
        St.is_dense(v, I.normalize(s357, [2]))


def test_max_star_ideals(s357):
    M = I.maximal_ideal(s357)
    assert M.small() == [3, 5, 6, 7, 8]
    for op in enumerate_stars(s357):
        assert St.max_star_ideals(op) == [M]
    N = make_semigroup([1])
    assert St.max_star_ideals(St.builtin_d(N)) == [I.principal(N).shift(1)]
    # A table that does not fix M trips the runtime check.
    P = I.standard_poset(s357)
    broken = St.StarOp(P, tuple([0] + [len(P) - 1] * (len(P) - 1)))
    with pytest.raises(InternalInvariantBroken):
        St.max_star_ideals(broken)


@pytest.mark.parametrize("gens", [(3, 5, 7), (3, 7, 8), (5, 7, 9, 11, 13)])
def test_finite_type_collapse(gens):
    S = make_semigroup(gens)
    ops = enumerate_stars(S)
    for op in ops[:: max(1, len(ops) // 50)]:
        assert St.finite_type(op) == op


def test_order_masks_match_compare():
    S = make_semigroup([3, 7, 8])
    ops = enumerate_stars(S)
    down, up = St.down_sets(ops), St.up_sets(ops)
    for a, A in enumerate(ops):
        for b, B in enumerate(ops):
            assert bool(down[a] >> b & 1) == St.leq(B, A)
            assert bool(up[a] >> b & 1) == St.leq(A, B)


def test_json(s357, p357):
    for op in enumerate_stars(s357):
        assert St.StarOp.from_json(p357, op.to_json()) == op
    with pytest.raises(AxiomViolation):
        St.StarOp.from_json(p357, {"label": None, "table": [5] * 6})
