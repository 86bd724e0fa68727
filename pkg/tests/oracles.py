"""Brute-force reference implementations used by the tests.

Nothing here calls the package's algorithms; only membership queries
(``x in E``) and poset indices are read from package objects.
"""
from __future__ import annotations

import itertools
from math import gcd
from functools import reduce

LO, HI = -60, 180


def members(gens, top=HI):
    """Representable sums of ``gens`` in ``[0, top]``."""
    ok = [False] * (top + 1)
    ok[0] = True
    for n in range(1, top + 1):
        ok[n] = any(n >= g and ok[n - g] for g in gens)
    return {n for n in range(top + 1) if ok[n]}


def gaps(gens, top=HI):
    assert reduce(gcd, gens) == 1
    m = members(gens, top)
    gs = sorted(set(range(top + 1)) - m)
    # Sanity: the window must reach past the Frobenius number.
    assert not gs or gs[-1] < top - max(gens)
    return gs


class SetIdeal:
    """An ideal as its members in ``[LO, HI]``; everything above is a member."""

    def __init__(self, elems):
        self.s = frozenset(x for x in elems if LO <= x <= HI)

    def __contains__(self, x):
        return x > HI or x in self.s

    @property
    def min(self):
        return min(self.s)

    @classmethod
    def generated(cls, S_gens, gens):
        Sm = members(S_gens, HI - min(min(gens), 0))
        return cls(g + s for g in gens for s in Sm if g + s <= HI)

    @classmethod
    def of(cls, E):
        return cls(x for x in range(LO, HI + 1) if x in E)

    def shift(self, a):
        return SetIdeal(x + a for x in self.s) | SetIdeal(range(HI + 1 + a, HI + 1))

    def __or__(self, other):
        return SetIdeal(self.s | other.s)

    def __and__(self, other):
        return SetIdeal(self.s & other.s)

    def __le__(self, other):
        return self.s <= other.s

    def __add__(self, other):
        return SetIdeal(a + b for a in self.s for b in other.s if a + b <= HI)

    def colon(self, other):
        fs = sorted(other.s)
        return SetIdeal(z for z in range(LO, HI + 1) if all((z + f) in self for f in fs))

    def __eq__(self, other):
        return self.s == other.s

    def __hash__(self):
        return hash(self.s)


def agrees(frac, ideal: SetIdeal, lo=LO + 40, hi=HI - 40) -> bool:
    """Membership agreement on a window safely inside the oracle's range."""
    return all((x in frac) == (x in ideal) for x in range(lo, hi + 1))


def dual_v(S_members, E: SetIdeal) -> SetIdeal:
    R = SetIdeal(S_members)
    return R.colon(R.colon(E))


def star_violation(table, P, S):
    """Check the star axioms on translated poset members by direct set
    comparison.  Returns None when valid, else a short reason."""
    c = S.conductor
    top = 4 * c + 8
    Sm = frozenset(x for x in range(top + 1) if x in S)
    ideals = []
    for a in range(-(c + 2), c + 3):
        for i, E in enumerate(P):
            ideals.append((a, i, frozenset(x + a for x in range(top - a + 1) if x in E)))

    def closure(a, i):
        F = P[table[i]]
        return frozenset(x + a for x in range(top - a + 1) if x in F)

    if closure(0, 0) != Sm:
        return "S not fixed"
    for a, i, s in ideals:
        st = closure(a, i)
        if not s <= st:
            return "not extensive"
        if closure(a, table[i]) != st:
            return "not idempotent"
    for (a, i, s), (b, j, t) in itertools.product(ideals, ideals):
        if s <= t and not closure(a, i) <= closure(b, j):
            return "not monotone"
    return None


def closure_maps(P, filter_fn=None):
    """Every extensive, monotone, idempotent map on the poset indices."""
    n = len(P)
    inc = P.inclusion
    ups = [[j for j in range(n) if inc[i][j]] for i in range(n)]
    out = []
    table = [None] * n

    def rec(i):
        if i == n:
            t = tuple(table)
            if all(t[t[k]] == t[k] for k in range(n)):
                out.append(t)
            return
        for x in ups[i]:
            # Monotone against every earlier choice.
            if all((not inc[k][i] or inc[table[k]][x]) and (not inc[i][k] or inc[x][table[k]])
                   for k in range(i)):
                table[i] = x
                rec(i + 1)
        table[i] = None

    rec(0)
    return out if filter_fn is None else [t for t in out if filter_fn(t)]
