"""Exhaustive enumeration of Star(S) by search over closure tables."""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from . import ideal as I
from .errors import SearchTooLarge
from .semigroup import NumericalSemigroup
from .star import StarOp, is_valid, validate

log = logging.getLogger(__name__)

SEARCH_GAP_CAP = 20
SEARCH_NODE_CAP = 200_000
CACHE_FORMAT = 1

_memory: dict[tuple[int, ...], list[StarOp]] = {}


class _Search:
    def __init__(self, poset, node_cap=None):
        self.P = poset
        self.node_cap = SEARCH_NODE_CAP if node_cap is None else node_cap
        self.nodes = 0
        n = len(poset)
        inc = poset.inclusion
        v = poset.v_table
        self.domains = [[j for j in range(n) if inc[i][j] and inc[j][v[i]]] for i in range(n)]
        self.domains[0] = [0]
        sm = poset.shift_masks
        self.sm = sm
        # Self constraints act on single domains.
        for i in range(n):
            K = sm[i][i]
            self.domains[i] = [x for x in self.domains[i] if K & ~sm[x][x] == 0]
        self.order = sorted(range(n), key=lambda i: (len(self.domains[i]), i))

    def compatible(self, i, x, j, y):
        if x == j and y != j:
            return False
        if y == i and x != i:
            return False
        sm = self.sm
        return sm[i][j] & ~sm[x][y] == 0 and sm[j][i] & ~sm[y][x] == 0

    def run(self):
        n = len(self.P)
        out = []
        assign = [None] * n

        def rec(domains):
            # Choose the unassigned variable with the smallest live domain.
            best = None
            for i in self.order:
                if assign[i] is None and (best is None or len(domains[i]) < len(domains[best])):
                    best = i
            if best is None:
                out.append(tuple(assign))
                return
            i = best
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise SearchTooLarge(f"search exceeded {self.node_cap} nodes")
            for x in domains[i]:
                assign[i] = x
                pruned = list(domains)
                pruned[i] = [x]
                ok = True
                for j in range(n):
                    if assign[j] is None:
                        live = [y for y in domains[j] if self.compatible(i, x, j, y)]
                        if not live:
                            ok = False
                            break
                        pruned[j] = live
                if ok:
                    rec(pruned)
                assign[i] = None

        rec(self.domains)
        return out


def _search(S: NumericalSemigroup) -> list[StarOp]:
    P = I.standard_poset(S)
    tables = sorted(set(_Search(P).run()))
    d = tuple(range(len(P)))
    v = P.v_table
    ops = []
    for t in tables:
        label = "d" if t == d else "v" if t == v else None
        ops.append(validate(t, P, label))
    return ops


def cache_dir() -> Path | None:
    env = os.environ.get("SGP_CACHE")
    if env is not None:
        return Path(env) if env else None
    import platformdirs
    return Path(platformdirs.user_cache_dir("sgpstar"))


def _cache_path(directory: Path, S: NumericalSemigroup) -> Path:
    return directory / ("stars-" + "_".join(map(str, S.generators)) + ".json")


def _load(path: Path, S: NumericalSemigroup) -> list[StarOp] | None:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("format") != CACHE_FORMAT or data.get("key", {}).get("gens") != list(S.generators):
        return None
    P = I.standard_poset(S)
    ops = []
    for entry in data["stars"]:
        t = tuple(entry["table"])
        if len(t) != len(P) or not is_valid(t, P):
            log.warning("discarding invalid cache file %s", path)
            return None
        ops.append(StarOp(P, t, entry.get("label")))
    return ops


def _store(path: Path, S: NumericalSemigroup, ops: list[StarOp]) -> None:
    payload = {"format": CACHE_FORMAT, "key": {"gens": list(S.generators)},
               "stars": [op.to_json() for op in ops]}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True))
        tmp.replace(path)
    except OSError as exc:
        log.warning("cache write failed: %s", exc)


def enumerate_stars(S: NumericalSemigroup, use_cache: bool = True) -> list[StarOp]:
    """Every star operation on ``S`` in canonical (table) order."""
    if S.genus > SEARCH_GAP_CAP:
        raise SearchTooLarge(f"{S.genus} gaps exceeds the search cap of {SEARCH_GAP_CAP}")
    key = S.generators
    if key in _memory:
        return list(_memory[key])
    directory = cache_dir() if use_cache else None
    ops = None
    if directory is not None:
        ops = _load(_cache_path(directory, S), S)
    if ops is None:
        ops = _search(S)
        if directory is not None:
            _store(_cache_path(directory, S), S, ops)
    _memory[key] = ops
    return list(ops)


def star_count(S: NumericalSemigroup, use_cache: bool = True) -> int:
    return len(enumerate_stars(S, use_cache))


def clear_memory():
    _memory.clear()
