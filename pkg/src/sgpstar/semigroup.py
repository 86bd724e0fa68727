"""Numerical semigroups: cofinite submonoids of the non-negative integers."""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import EmptyGenerators, GcdNotOne, InputError


def _apery(gens):
    # Least element of S in each residue class mod the smallest generator.
    m = gens[0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens[1:]:
            nd, nr = d + g, (r + g) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    ``mask`` packs membership of ``0 .. conductor - 1``; bit ``i`` is set
    iff ``i`` is in ``S``.  Everything from the conductor on is a member.
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int
    mask: int

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.mask >> n & 1)

    def contains(self, n: int) -> bool:
        return n in self

    def rel_bits(self, k: int) -> int:
        """Membership bits of ``0 .. k - 1``."""
        c = self.conductor
        if k <= c:
            return self.mask & ((1 << k) - 1)
        return self.mask | (((1 << k) - 1) >> c << c)

    def elements(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n in self]

    def is_symmetric(self) -> bool:
        return 2 * self.genus == self.conductor

    def to_json(self) -> dict:
        return {"gens": list(self.generators), "gaps": list(self.gaps), "frobenius": self.frobenius}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> NumericalSemigroup:
        S = make_semigroup(data["gens"])
        if "gaps" in data and list(data["gaps"]) != list(S.gaps):
            raise InputError(f"gap list {data['gaps']} does not match generators {data['gens']}")
        if "frobenius" in data and data["frobenius"] != S.frobenius:
            raise InputError(f"frobenius {data['frobenius']} does not match generators")
        return S

    def __repr__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def make_semigroup(generators) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("generator list is empty")
    if gens[0] <= 0:
        raise InputError(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd of {gens} is {reduce(gcd, gens)}, not 1")

    apery = _apery(gens)
    m = gens[0]
    frobenius = max(apery) - m
    gaps = tuple(n for n in range(max(frobenius + 1, 0)) if n < apery[n % m])
    mask = 0
    for n in range(frobenius + 1):
        if n >= apery[n % m]:
            mask |= 1 << n
    # Minimal generators: elements not a sum of two nonzero members.
    minimal = tuple(g for g in gens
                    if not any(0 < a < g and (g - a) >= apery[(g - a) % m] and a >= apery[a % m]
                               for a in range(1, g)))
    return NumericalSemigroup(minimal, gaps, frobenius, mask)


NATURALS = make_semigroup([1])
