"""Star operations on a numerical semigroup as closure tables on I0(S).

A star operation is translation equivariant, so it is fixed by its values
on the ideals with minimum 0, which are exactly the members of the standard
poset.  ``StarOp.table[i]`` is the poset index of the closure of member ``i``.

Over a numerical semigroup every ideal is finitely generated, so the
finite-type companion of an operation is the operation itself and the
w-type construction coincides with the stable closure; ``finite_type`` and
``tilde`` exist to compute and assert that, not as separate operators.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import ideal as I
from .errors import (AxiomViolation, InputError, InternalInvariantBroken, IntersectionNotS,
                     NotIntegral, NotOverring)
from .ideal import FracIdeal, StdPoset
from .semigroup import NumericalSemigroup

LESS_EQUAL = "less_equal"
GREATER_EQUAL = "greater_equal"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class StarOp:
    poset: StdPoset = field(repr=False)
    table: tuple[int, ...]
    label: str | None = None

    @property
    def semigroup(self) -> NumericalSemigroup:
        return self.poset.semigroup

    def _key(self):
        return self.poset.semigroup.generators, self.table

    def __eq__(self, other):
        return isinstance(other, StarOp) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return self.table < other.table

    def __le__(self, other):
        return compare(self, other) in (LESS_EQUAL, EQUAL)

    def closure(self, i: int) -> FracIdeal:
        return self.poset[self.table[i]]

    def fixed(self) -> list[int]:
        return [i for i, j in enumerate(self.table) if i == j]

    def relabel(self, label):
        return StarOp(self.poset, self.table, label)

    def to_json(self) -> dict:
        return {"label": self.label, "table": list(self.table)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, poset: StdPoset, data: dict) -> StarOp:
        return validate(data["table"], poset, label=data.get("label"))


def translation_constraints(poset: StdPoset) -> list[tuple[int, int, int]]:
    """Triples ``(i, j, K)``: member ``i`` lies in ``-k + member j`` for each
    bit ``k`` of ``K``.

    Shifts beyond ``conductor + 1`` are vacuous: ``-k + F`` then contains N0.
    """
    sm = poset.shift_masks
    n = len(poset)
    return [(i, j, sm[i][j]) for i in range(n) for j in range(n) if sm[i][j]]


def violations(table: Sequence[int], poset: StdPoset, first_only: bool = False) -> list[tuple[str, str]]:
    """All axiom failures of ``table`` as (axiom, witness) pairs."""
    n = len(poset)
    found = []

    def report(axiom, witness):
        found.append((axiom, witness))
        return first_only

    if len(table) != n:
        raise InputError(f"table has {len(table)} entries, poset has {n}")
    if any(not 0 <= j < n for j in table):
        raise InputError("table entries must be poset indices")
    lab = poset.label
    if table[0] != 0:
        if report("*1", f"S maps to {lab(table[0])}"):
            return found
    for i in range(n):
        if not poset.inclusion[i][table[i]]:
            if report("*2", f"{lab(i)} not contained in its image {lab(table[i])}"):
                return found
    for i in range(n):
        if table[table[i]] != table[i]:
            if report("*3", f"{lab(i)} -> {lab(table[i])} -> {lab(table[table[i]])}"):
                return found
    sm = poset.shift_masks
    for i, j, K in translation_constraints(poset):
        bad = K & ~sm[table[i]][table[j]]
        if bad:
            k = (bad & -bad).bit_length() - 1
            if report("*2", f"{lab(i)} within {-k}+{lab(j)} but {lab(table[i])} not within "
                            f"{-k}+{lab(table[j])}"):
                return found
    v = poset.v_table
    for i in range(n):
        if not poset.inclusion[table[i]][v[i]]:
            if report("*2", f"{lab(i)}: image {lab(table[i])} exceeds v-closure {lab(v[i])}"):
                return found
    return found


def validate(table: Sequence[int], poset: StdPoset, label: str | None = None) -> StarOp:
    bad = violations(table, poset, first_only=True)
    if bad:
        raise AxiomViolation(*bad[0])
    return StarOp(poset, tuple(table), label)


def is_valid(table, poset) -> bool:
    return not violations(table, poset, first_only=True)


def apply(star: StarOp, E: FracIdeal) -> FracIdeal:
    i = star.poset.index_of(E)
    return star.poset[star.table[i]].shift(E.offset)


def builtin_d(S: NumericalSemigroup) -> StarOp:
    P = I.standard_poset(S)
    return validate(range(len(P)), P, "d")


def builtin_v(S: NumericalSemigroup) -> StarOp:
    P = I.standard_poset(S)
    return validate(P.v_table, P, "v")


def overring_ideal(S: NumericalSemigroup, T: NumericalSemigroup) -> FracIdeal:
    """``T`` seen as an ideal of ``S`` (requires ``S`` inside ``T``)."""
    if any(g not in T for g in S.generators):
        raise NotOverring(f"{T} does not contain {S}")
    return I.normalize(S, [t for t in range(S.conductor + 1) if t in T])


def from_overrings(S: NumericalSemigroup, overrings: Iterable[NumericalSemigroup],
                   label: str | None = None) -> StarOp:
    """``E -> intersection of E + T`` over the family."""
    rings = [overring_ideal(S, T) for T in overrings]
    if not rings:
        raise InputError("empty overring family")
    meet_all = rings[0]
    for T in rings[1:]:
        meet_all = I.intersect(meet_all, T)
    if meet_all != I.principal(S):
        raise IntersectionNotS(f"the overrings intersect in {meet_all}, not S")
    P = I.standard_poset(S)
    table = []
    for E in P:
        image = I.product(E, rings[0])
        for T in rings[1:]:
            image = I.intersect(image, I.product(E, T))
        table.append(P.index_of(image))
    return validate(table, P, label)


def compare(a: StarOp, b: StarOp) -> str:
    inc = a.poset.inclusion
    le = all(inc[x][y] for x, y in zip(a.table, b.table))
    ge = all(inc[y][x] for x, y in zip(a.table, b.table))
    if le and ge:
        return EQUAL
    if le:
        return LESS_EQUAL
    if ge:
        return GREATER_EQUAL
    return INCOMPARABLE


def leq(a: StarOp, b: StarOp) -> bool:
    inc = a.poset.inclusion
    return all(inc[x][y] for x, y in zip(a.table, b.table))


def meet(ops: Iterable[StarOp]) -> StarOp:
    ops = list(ops)
    if not ops:
        raise InputError("meet of an empty family")
    P = ops[0].poset
    table = []
    for i in range(len(P)):
        mask = -1
        for op in ops:
            mask &= P[op.table[i]].mask
        table.append(P.index[mask])
    return validate(table, P)


def join(ops: Iterable[StarOp]) -> StarOp:
    """Least upper bound: close each member under all operations until stable."""
    ops = list(ops)
    if not ops:
        raise InputError("join of an empty family")
    P = ops[0].poset
    table = []
    for i in range(len(P)):
        x = i
        while True:
            y = x
            for op in ops:
                y = op.table[y]
            if y == x:
                break
            x = y
        table.append(x)
    return validate(table, P)


def _stable_image(star: StarOp, E: FracIdeal) -> FracIdeal:
    S = star.semigroup
    P = star.poset
    c = S.conductor
    R = I.principal(S)
    target = P[star.table[P.index_of(E)]]
    bits = E.bits(0, c)
    for x in range(c):
        if x in target and x not in E:
            # J = {s in S : x + s in E}, the largest integral I with x + I in E.
            J = I.from_bits(S, 0, E.bits(x, c) & S.mask, c)
            if apply(star, J) == R:
                bits |= 1 << x
    return I.from_bits(S, 0, bits, c)


def stable_closure(star: StarOp) -> StarOp:
    """``x`` is in the closure of ``E`` iff ``{s in S : x + s in E}`` is dense."""
    P = star.poset
    table = [P.index_of(_stable_image(star, E)) for E in P]
    label = f"bar({star.label})" if star.label else None
    return validate(table, P, label)


# Noetherian collapse: the finite-type w-construction is the stable closure.
tilde = stable_closure


def is_stable(star: StarOp) -> bool:
    return compare(star, stable_closure(star)) == EQUAL


def _subideals(P: StdPoset) -> list[list[tuple[int, int]]]:
    # For each member, (poset index, offset) of the ideals generated by the
    # non-empty subsets of its minimal generators.
    cached = getattr(P, "_subideals", None)
    if cached is None:
        S = P.semigroup
        cached = []
        for E in P:
            gens = E.generators()
            row = []
            for r in range(1, len(gens) + 1):
                for sub in combinations(gens, r):
                    B = I.normalize(S, sub)
                    row.append((P.index_of(B), B.offset))
            cached.append(row)
        P._subideals = cached
    return cached


def finite_type(star: StarOp) -> StarOp:
    """Union of ``B*`` over ideals ``B`` generated by subsets of the minimal
    generators of each member."""
    P = star.poset
    c = star.semigroup.conductor
    table = []
    for row in _subideals(P):
        mask = 0
        for j, off in row:
            mask |= P[star.table[j]].shift(off).bits(0, c)
        table.append(P.index[mask])
    return validate(table, P, star.label)


def is_dense(star: StarOp, J: FracIdeal) -> bool:
    R = I.principal(star.semigroup)
    if not J.issubset(R):
        raise NotIntegral(f"{J} is not contained in S")
    return apply(star, J) == R


def max_star_ideals(star: StarOp) -> list[FracIdeal]:
    """The maximal proper integral star-ideals: always ``{M}``.

    ``M`` sits between ``M`` and ``S`` under any closure; closing to ``S``
    would put a pseudo-Frobenius gap into ``S``, so ``M`` is divisorial and
    hence closed under every operation below v.  Checked at runtime.
    """
    M = I.maximal_ideal(star.semigroup)
    if apply(star, M) != M:
        raise InternalInvariantBroken(f"{star.label or star.table} does not fix M")
    return [M]


def _order_masks(ops: Sequence[StarOp], upward: bool) -> list[int]:
    # cols[i][y]: operations b whose value at member i lies below (or above) y.
    ops = list(ops)
    if not ops:
        return []
    P = ops[0].poset
    n = len(P)
    inc = P.inclusion
    by_val = [[0] * n for _ in range(n)]
    for k, op in enumerate(ops):
        bit = 1 << k
        for i, x in enumerate(op.table):
            by_val[i][x] |= bit
    cols = []
    for i in range(n):
        row = []
        for y in range(n):
            m = 0
            for x in range(n):
                if (inc[y][x] if upward else inc[x][y]):
                    m |= by_val[i][x]
            row.append(m)
        cols.append(row)
    full = (1 << len(ops)) - 1
    out = []
    for op in ops:
        m = full
        for i, y in enumerate(op.table):
            m &= cols[i][y]
        out.append(m)
    return out


def down_sets(ops: Sequence[StarOp]) -> list[int]:
    """Bitmask over ``ops`` of ``{b : b <= a}`` for each ``a`` in ``ops``."""
    return _order_masks(ops, upward=False)


def up_sets(ops: Sequence[StarOp]) -> list[int]:
    return _order_masks(ops, upward=True)
