"""The Zariski topology on Star(S) and constructive spectrality checks.

Point sets are Python ints used as bitmasks over point indices.  The
topology is generated by the subbasis ``W(E, t) = {op : t in op(E)}``; an
open set avoiding a point is a union of basic sets avoiding it, and each of
those sits inside a subbasic set avoiding it, so closures and separation
can be read off the subbasis without listing every open set.  The full
lattice of opens is materialized only when it is small.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from . import ideal as I
from . import star as St
from .enumeration import enumerate_stars
from .semigroup import NumericalSemigroup

OPEN_CAP = 1024


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass
class FiniteSpace:
    points: list
    subbasis: list[tuple[int, object]]
    ops: list[St.StarOp] | None = None
    _opens: list[int] | None = field(default=None, repr=False)
    _opens_tried: bool = field(default=False, repr=False)
    _closures: list[int] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def closure(self, mask: int) -> int:
        """Smallest closed set containing the points of ``mask``."""
        avoid = 0
        for W, _ in self.subbasis:
            if W & mask == 0:
                avoid |= W
        return self.full & ~avoid

    def point_closure(self, i: int) -> int:
        return self.closure(1 << i)

    def opens(self, cap: int = OPEN_CAP) -> list[int] | None:
        """All open sets, or None when there are more than ``cap``."""
        if not self._opens_tried:
            self._opens_tried = True
            self._opens = _generate_opens(self, cap)
        return self._opens

    def index_of(self, op: St.StarOp) -> int:
        return self._index[op.table]

    @property
    def _index(self):
        return {op.table: i for i, op in enumerate(self.ops)}


def _generate_opens(space: FiniteSpace, cap: int) -> list[int] | None:
    basis = {space.full}
    for W, _ in space.subbasis:
        for B in list(basis):
            basis.add(B & W)
            if len(basis) > cap:
                return None
    opens = {0}
    for B in basis:
        for O in list(opens):
            opens.add(O | B)
        if len(opens) > cap:
            return None
    return sorted(opens)


def build_space(S: NumericalSemigroup, ops: Sequence[St.StarOp] | None = None) -> FiniteSpace:
    """Star(S) with subbasis ``W(E, t)`` for ``E`` in I0(S), ``0 <= t <= c``.

    For ``t > c`` every closure of ``E`` contains ``t`` and the set is the
    whole space, so those descriptors are left out.
    """
    if ops is None:
        ops = enumerate_stars(S)
    ops = list(ops)
    P = I.standard_poset(S)
    c = S.conductor
    subbasis = []
    for e, E in enumerate(P):
        by_image: dict[int, int] = {}
        for k, op in enumerate(ops):
            by_image[op.table[e]] = by_image.get(op.table[e], 0) | 1 << k
        for t in range(c + 1):
            W = 0
            for img, pts in by_image.items():
                if t in P[img]:
                    W |= pts
            subbasis.append((W, (e, t)))
    labels = [op.label or f"#{k}" for k, op in enumerate(ops)]
    return FiniteSpace(labels, subbasis, ops)


def specialization(space: FiniteSpace) -> list[int]:
    """``below[y]``: points ``x`` with ``x`` in the closure of ``y``."""
    if space._closures is None:
        space._closures = [space.point_closure(y) for y in range(space.n)]
    return list(space._closures)


def is_T0(space: FiniteSpace) -> bool:
    seen = set()
    for y in range(space.n):
        sig = tuple(bool(W >> y & 1) for W, _ in space.subbasis)
        if sig in seen:
            return False
        seen.add(sig)
    return True


@dataclass
class SpectralReport:
    t0: bool
    quasi_compact: bool
    intersection_closed: bool
    generic_points_unique: bool
    method: str
    points: int
    opens: int | None
    irreducible: list[tuple[int, list[int]]]
    notes: list[str]

    @property
    def spectral(self) -> bool:
        return self.t0 and self.quasi_compact and self.intersection_closed and self.generic_points_unique

    def to_json(self) -> dict:
        return {"t0": self.t0, "spectral": self.spectral, "points": self.points,
                "opens": self.opens, "method": self.method,
                "irreducible_closed": len(self.irreducible)}


def _generic(space: FiniteSpace, C: int, closures: list[int]) -> list[int]:
    return [p for p in _members(C) if closures[p] == C]


def is_spectral(space: FiniteSpace) -> SpectralReport:
    t0 = is_T0(space)
    closures = specialization(space)
    notes = ["finite space: every open set is quasi-compact"]
    opens = space.opens()
    irreducible = []
    if opens is not None:
        method = "exhaustive"
        open_set = set(opens)
        inter = all((a & b) in open_set for a, b in combinations(opens, 2))
        closed = [space.full & ~O for O in opens]
        ok = True
        for C in closed:
            if C == 0:
                continue
            proper = [D for D in closed if D != C and D & ~C == 0]
            maximal = [D for D in proper if not any(D != X and D & ~X == 0 for X in proper)]
            reducible = any((a | b) == C for a, b in combinations(maximal, 2))
            gens = _generic(space, C, closures)
            if reducible:
                ok = ok and not gens
            else:
                irreducible.append((C, gens))
                ok = ok and len(gens) == 1
        n_opens = len(opens)
    else:
        # A closed set is the finite union of the closures of its points, so
        # an irreducible one equals the closure of one of them.
        method = "point-closures"
        notes.append("irreducible closed sets are point closures (finite union argument)")
        notes.append("opens of a generated topology are closed under finite intersection")
        inter = True
        ok = True
        for C in sorted(set(closures)):
            gens = _generic(space, C, closures)
            irreducible.append((C, gens))
            ok = ok and len(gens) == 1
        n_opens = None
    return SpectralReport(t0, True, inter, ok, method, space.n, n_opens, irreducible, notes)


def closure_equals_downset(space: FiniteSpace) -> bool:
    down = St.down_sets(space.ops)
    return specialization(space) == down


def topological_join(space: FiniteSpace, idxs: Sequence[int]) -> int:
    """Generic point of the least point closure containing ``idxs``."""
    want = 0
    for i in idxs:
        want |= 1 << i
    closures = specialization(space)
    cands = [u for u in range(space.n) if closures[u] & want == want]
    for u in cands:
        if all(closures[u] & ~closures[w] == 0 for w in cands):
            return u
    raise ValueError("no least upper bound")


@dataclass
class LatticeReport:
    size: int
    empty: bool
    subsets_checked: int
    exhaustive: bool
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def lattice_in_subbasis(space: FiniteSpace, descriptors, seed: int = 0,
                        samples: int = 1000) -> LatticeReport:
    """Check that the intersection ``W`` of the named subbasic sets is closed
    under meets and joins of its subsets."""
    descriptors = list(descriptors)
    if not descriptors:
        raise ValueError("empty descriptor family")
    lookup = {d: W for W, d in space.subbasis}
    W = space.full
    for d in descriptors:
        W &= lookup[tuple(d)]
    pts = _members(W)
    if not pts:
        return LatticeReport(0, True, 0, True, [])
    if len(pts) <= 12:
        subsets = [list(c) for r in range(1, len(pts) + 1) for c in combinations(pts, r)]
        exhaustive = True
    else:
        rng = random.Random(seed)
        subsets = [rng.sample(pts, rng.randint(1, len(pts))) for _ in range(samples)]
        exhaustive = False
    failures = []
    index = space._index
    for sub in subsets:
        ops = [space.ops[i] for i in sub]
        for name, res in (("meet", St.meet(ops)), ("join", St.join(ops))):
            k = index.get(res.table)
            if k is None or not W >> k & 1:
                failures.append(f"{name} of {sub} leaves W")
    return LatticeReport(len(pts), False, len(subsets), exhaustive, failures)


def hasse_dot(labels: Sequence[str], below: Sequence[int], name: str = "stars") -> str:
    """DOT Hasse diagram of a finite order given by ``below[y]`` bitmasks
    (``x`` in ``below[y]`` iff ``x <= y``), smaller elements at the bottom."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for y in range(len(labels)):
        strict = below[y] & ~(1 << y)
        # Covers of y: maximal elements of the strict down-set.
        lower = 0
        for z in _members(strict):
            lower |= below[z] & ~(1 << z)
        for x in _members(strict & ~lower):
            lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(space: FiniteSpace) -> str:
    """Hasse diagram of the specialization order."""
    return hasse_dot(space.points, specialization(space))


def report_json(space: FiniteSpace) -> str:
    rep = is_spectral(space)
    return json.dumps(rep.to_json(), sort_keys=True)
