"""Fractional ideals of a numerical semigroup and the standard poset I0(S).

An ideal ``E`` of ``S`` is a set of integers, bounded below, with
``E + S`` contained in ``E``.  It is stored as its minimum (``offset``) and a
bit window over ``offset .. offset + conductor - 1``; every integer from
``offset + conductor`` on is a member because ``offset + S`` lies in ``E``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import EmptyGenerators, InputError, PosetTooLarge
from .semigroup import NumericalSemigroup

POSET_GAP_CAP = 24


@dataclass(frozen=True)
class FracIdeal:
    semigroup: NumericalSemigroup
    offset: int
    mask: int

    @property
    def conductor(self) -> int:
        return self.semigroup.conductor

    def __contains__(self, x: int) -> bool:
        d = x - self.offset
        if d < 0:
            return False
        if d >= self.semigroup.conductor:
            return True
        return bool(self.mask >> d & 1)

    def bits(self, lo: int, n: int) -> int:
        """Membership bits of ``lo .. lo + n - 1``."""
        if n <= 0:
            return 0
        c = self.semigroup.conductor
        d = self.offset - lo
        if d >= 0:
            k = n - d
            if k <= 0:
                return 0
            return _rel(self.mask, c, k) << d
        return _rel(self.mask, c, n - d) >> -d

    def small(self) -> list[int]:
        """Members in ``[offset, offset + conductor]``."""
        return [x for x in range(self.offset, self.offset + self.conductor + 1) if x in self]

    def generators(self) -> list[int]:
        """The minimal generating set: members not in ``E + (S minus 0)``."""
        S = self.semigroup
        return [x for x in self.small()
                if not any((x - g) in self for g in S.generators)]

    def elements(self, upto: int) -> list[int]:
        return [x for x in range(self.offset, upto + 1) if x in self]

    def shift(self, a: int) -> FracIdeal:
        return FracIdeal(self.semigroup, self.offset + a, self.mask)

    def normalized(self) -> FracIdeal:
        return FracIdeal(self.semigroup, 0, self.mask)

    def issubset(self, other: FracIdeal) -> bool:
        if self.offset < other.offset:
            return False
        c = self.semigroup.conductor
        return self.bits(other.offset, c) & ~other.mask == 0

    __le__ = issubset

    def __lt__(self, other):
        return self != other and self.issubset(other)

    def to_json(self) -> dict:
        return {"offset": self.offset, "small": self.small(),
                "conductor_from": self.offset + self.conductor}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, S: NumericalSemigroup, data: dict) -> FracIdeal:
        o = data["offset"]
        if data["conductor_from"] != o + S.conductor:
            raise InputError("conductor_from does not match the semigroup")
        small = list(data["small"])
        if not small or small[0] != o:
            raise InputError("offset must be the least listed member")
        E = normalize(S, small)
        if E.small() != small:
            raise InputError(f"{small} is not closed under adding S")
        return E

    def __repr__(self):
        body = ",".join(map(str, self.small()[:-1]))
        return f"FracIdeal({{{body}}}, >= {self.offset + self.conductor})"


def _rel(mask: int, c: int, k: int) -> int:
    # Relative membership bits 0 .. k-1 given the window mask and conductor.
    if k <= c:
        return mask & ((1 << k) - 1)
    return mask | (((1 << k) - 1) >> c << c)


def from_bits(S: NumericalSemigroup, lo: int, bits: int, n: int) -> FracIdeal:
    """Ideal whose members in ``lo .. lo+n-1`` are ``bits`` and which contains
    every integer from ``lo + n`` on.  The caller guarantees closure."""
    if bits == 0:
        offset = lo + n
    else:
        offset = lo + (bits & -bits).bit_length() - 1
    c = S.conductor
    rel = bits >> (offset - lo)
    k = lo + n - offset
    rel |= ((1 << c) - 1) >> k << k
    return FracIdeal(S, offset, rel & ((1 << c) - 1))


def principal(S: NumericalSemigroup, a: int = 0) -> FracIdeal:
    return FracIdeal(S, a, S.mask)


def naturals(S: NumericalSemigroup) -> FracIdeal:
    return FracIdeal(S, 0, (1 << S.conductor) - 1)


def maximal_ideal(S: NumericalSemigroup) -> FracIdeal:
    return normalize(S, S.generators)


def normalize(S: NumericalSemigroup, gens) -> FracIdeal:
    """The ideal generated by ``gens``: the union of the translates ``g + S``."""
    gens = sorted(set(gens))
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo, c = gens[0], S.conductor
    bits = 0
    for g in gens:
        d = g - lo
        if d >= c:
            break
        bits |= S.rel_bits(c - d) << d
    return from_bits(S, lo, bits, c)


def _window(E: FracIdeal, F: FracIdeal):
    lo = min(E.offset, F.offset)
    n = max(E.offset, F.offset) + E.conductor - lo
    return lo, n


def ideal_sum(E: FracIdeal, F: FracIdeal) -> FracIdeal:
    lo, n = _window(E, F)
    return from_bits(E.semigroup, lo, E.bits(lo, n) | F.bits(lo, n), n)


def intersect(E: FracIdeal, F: FracIdeal) -> FracIdeal:
    lo, n = _window(E, F)
    return from_bits(E.semigroup, lo, E.bits(lo, n) & F.bits(lo, n), n)


def product(E: FracIdeal, F: FracIdeal) -> FracIdeal:
    """Minkowski sum ``{e + f}``."""
    ge, gf = E.generators(), F.generators()
    return normalize(E.semigroup, [a + b for a in ge for b in gf])


def power(E: FracIdeal, n: int) -> FracIdeal:
    if n < 0:
        raise InputError("negative ideal power")
    result = principal(E.semigroup)
    base = E
    while n:
        if n & 1:
            result = product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def colon(E: FracIdeal, F: FracIdeal) -> FracIdeal:
    """``(E - F) = {z : z + F contained in E}``."""
    c = E.conductor
    lo = E.offset - F.offset
    gf = F.generators()
    bits = 0
    for i in range(c):
        z = lo + i
        if all((z + g) in E for g in gf):
            bits |= 1 << i
    return from_bits(E.semigroup, lo, bits, c)


def inverse(E: FracIdeal) -> FracIdeal:
    return colon(principal(E.semigroup), E)


def dual_v(E: FracIdeal) -> FracIdeal:
    """Divisorial closure ``S - (S - E)``."""
    return inverse(inverse(E))


class StdPoset:
    """All ideals ``E`` with ``S`` contained in ``E`` contained in ``N0``.

    Members are ordered by (number of added gaps, sorted added gaps); the
    order extends inclusion, so ``S`` is first and ``N0`` last.
    """

    def __init__(self, S: NumericalSemigroup):
        if S.genus > POSET_GAP_CAP:
            raise PosetTooLarge(f"{S.genus} gaps exceeds the cap of {POSET_GAP_CAP}")
        self.semigroup = S
        masks = _closed_gap_sets(S)
        masks.sort(key=lambda m: (bin(m).count("1"), [g for g in S.gaps if m >> g & 1]))
        self.members = [FracIdeal(S, 0, S.mask | m) for m in masks]
        self.index = {E.mask: i for i, E in enumerate(self.members)}
        self.inclusion = [[E.mask & ~F.mask == 0 for F in self.members] for E in self.members]

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i) -> FracIdeal:
        return self.members[i]

    def __iter__(self):
        return iter(self.members)

    def index_of(self, E: FracIdeal) -> int:
        """Index of the translate of ``E`` with minimum 0."""
        return self.index[E.mask]

    @cached_property
    def shift_masks(self) -> list[list[int]]:
        """``shift_masks[i][j]`` has bit ``k`` (``0 <= k <= c+1``) set iff
        member ``i`` is contained in ``-k + member j``."""
        c = self.semigroup.conductor
        full = (1 << c) - 1
        masks = [E.mask for E in self.members]
        return [[sum(1 << k for k in range(c + 2) if (a << k) & full & ~b == 0) for b in masks]
                for a in masks]

    @cached_property
    def v_table(self) -> tuple[int, ...]:
        return tuple(self.index_of(dual_v(E)) for E in self.members)

    def label(self, i: int) -> str:
        S = self.semigroup
        added = [g for g in S.gaps if g in self.members[i]]
        if not added:
            return "S"
        if len(added) == S.genus:
            return "N0"
        return "S+{" + ",".join(map(str, added)) + "}"


def _closed_gap_sets(S: NumericalSemigroup) -> list[int]:
    # Gap subsets G with (S u G) + S inside S u G.  Gaps are decided from the
    # largest down so every g + generator that is a gap is already decided.
    gaps = sorted(S.gaps, reverse=True)
    out = []

    def rec(i, chosen):
        if i == len(gaps):
            out.append(chosen)
            return
        rec(i + 1, chosen)
        g = gaps[i]
        if all((g + a) in S or chosen >> (g + a) & 1 for a in S.generators):
            rec(i + 1, chosen | 1 << g)

    rec(0, 0)
    return out


def standard_poset(S: NumericalSemigroup) -> StdPoset:
    return _poset_cache(S)


_POSETS: dict = {}


def _poset_cache(S):
    P = _POSETS.get(S.generators)
    if P is None:
        P = _POSETS[S.generators] = StdPoset(S)
    return P
