"""Property suites behind ``sgpstar verify``.

Each suite returns a list of ``Check`` records, one per named statement,
in a fixed order so the JSON output is deterministic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import content as C
from . import ideal as I
from . import star as St
from . import topology as T
from .enumeration import enumerate_stars
from .errors import AxiomViolation, SgpError
from .semigroup import NumericalSemigroup, make_semigroup

SUITES = ("axioms", "extension", "stable", "lattice", "topology", "dm")


@dataclass
class Check:
    statement: str
    passed: bool
    witness: str | None = None
    examined: int = 0

    def to_json(self) -> dict:
        out = {"statement": self.statement, "passed": self.passed, "examined": self.examined}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class _Tally:
    def __init__(self, statement):
        self.check = Check(statement, True)

    def see(self, ok: bool, witness=None):
        self.check.examined += 1
        if not ok and self.check.passed:
            self.check.passed = False
            self.check.witness = witness() if callable(witness) else witness


def random_poly(S: NumericalSemigroup, field: int, rng: random.Random,
                max_terms: int = 8, top: int | None = None) -> C.SparsePoly:
    """Nonzero element of k[S] with at most ``max_terms`` terms and exponents
    up to ``top`` (default ``3c``)."""
    if top is None:
        top = 3 * S.conductor
    support = [s for s in range(top + 1) if s in S]
    k = rng.randint(1, min(max_terms, len(support)))
    exps = rng.sample(support, k)
    coeffs = {}
    for e in exps:
        if field == C.QQ:
            a = rng.choice([x for x in range(-5, 6) if x])
            coeffs[e] = a if rng.random() < 0.7 else C.Fraction(a, rng.randint(1, 4))
        else:
            coeffs[e] = rng.randrange(1, field)
    return C.poly(coeffs, field)


def overrings(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Numerical semigroups containing ``S``: poset members closed under +."""
    out = []
    for E in I.standard_poset(S):
        small = E.small()
        if all((a + b) in E for a in small for b in small):
            # Members up to 2c + 1 include every minimal generator.
            out.append(make_semigroup(E.elements(2 * S.conductor + 1)[1:] or [1]))
    return out


def overring_families(S: NumericalSemigroup, max_size: int = 3):
    """Families of overrings whose intersection is ``S``."""
    rings = overrings(S)
    R = I.principal(S)
    for r in range(1, max_size + 1):
        for fam in combinations(rings, r):
            meet = St.overring_ideal(S, fam[0])
            for T_ in fam[1:]:
                meet = I.intersect(meet, St.overring_ideal(S, T_))
            if meet == R:
                yield list(fam)


def suite_axioms(S, ops):
    P = I.standard_poset(S)
    out = []
    t = _Tally("d and v satisfy the star axioms")
    for build in (St.builtin_d, St.builtin_v):
        try:
            build(S)
            t.see(True)
        except AxiomViolation as exc:
            t.see(False, f"{build.__name__}: {exc}")
    out.append(t.check)
    t = _Tally("intersections of overring extensions are star operations")
    for fam in overring_families(S):
        try:
            St.from_overrings(S, fam)
            t.see(True)
        except AxiomViolation as exc:
            t.see(False, f"{fam}: {exc}")
    out.append(t.check)
    if S.genus:
        t = _Tally("the integral closure operation is rejected off the integrally closed case")
        try:
            St.from_overrings(S, [make_semigroup([1])])
            t.see(False, "accepted")
        except SgpError:
            t.see(True)
        out.append(t.check)
    t = _Tally("every enumerated operation validates")
    for op in ops:
        t.see(St.is_valid(op.table, P), lambda: str(op.table))
    out.append(t.check)
    d, v = St.builtin_d(S), St.builtin_v(S)
    t = _Tally("d <= op <= v")
    for op in ops:
        t.see(St.leq(d, op) and St.leq(op, v), lambda: str(op.table))
    out.append(t.check)
    return out


def homogeneous_gens(S, E: I.FracIdeal, field=C.QQ):
    """Monomial generators of ``c + E`` (inside k[S]) and the compensating
    scale, so ``t^scale (gens)`` is ``E``."""
    c = S.conductor
    base = c - E.offset
    return [C.monomial(g + base, field) for g in E.generators()], -base


def suite_extension(S, ops, samples=50, seed=0):
    P = I.standard_poset(S)
    c = S.conductor
    out = []
    t = _Tally("extension restricts to the operation on homogeneous ideals")
    for e, E in enumerate(P):
        gens, base = homogeneous_gens(S, E)
        for x in range(-c, c + 1):
            verdicts = C.extension_membership_many(ops, gens, base - x)
            for op, got in zip(ops, verdicts):
                want = 0 in St.apply(op, E.shift(-x))
                t.see((got.answer == C.YES) == want, lambda: f"{op.table} E={P.label(e)} x={x}")
    out.append(t.check)
    rng = random.Random(seed)
    t1 = _Tally("content formula decides ideals meeting the homogeneous elements")
    t2 = _Tally("sampled certificates never refute a yes verdict")
    for _ in range(samples):
        A, scale = random_mixed_ideal(S, rng)
        cA = I.normalize(S, sorted({e for g in A for e in g.support()}))
        for op in ops[:: max(1, len(ops) // 25)]:
            verdict = C.extension_membership(op, A, scale)
            want = 0 in St.apply(op, cA.shift(scale))
            t1.see(verdict.branch == "content" and (verdict.answer == C.YES) == want,
                   lambda: f"{[C.format_poly(g) for g in A]} scale {scale}")
            if verdict.answer == C.YES:
                ans, wit = C.sampled_certificate(op, A, scale, samples=40, seed=rng.randrange(1 << 30))
                t2.see(ans != C.NO, wit)
    out += [t1.check, t2.check]
    return out


def random_mixed_ideal(S, rng, field=C.QQ):
    """Generators of a non-homogeneous ideal that contains a monomial."""
    c = S.conductor
    members = [s for s in range(2 * c + 2) if s in S]
    gens = [C.monomial(rng.choice(members), field)]
    for _ in range(rng.randint(1, 3)):
        g = random_poly(S, field, rng, max_terms=4, top=2 * c + 1)
        while g.is_monomial() and len(members) > 1:
            g = random_poly(S, field, rng, max_terms=4, top=2 * c + 1)
        gens.append(g)
    rng.shuffle(gens)
    scale = -rng.randint(0, 2 * c + 1)
    return gens, scale


def _distributes(op: St.StarOp) -> tuple[bool, str | None]:
    P = op.poset
    c = op.semigroup.conductor
    for a, E in enumerate(P):
        Ea = St.apply(op, E)
        for F in P:
            for x in range(-c, c + 1):
                Fx = F.shift(x)
                lhs = St.apply(op, I.intersect(E, Fx))
                rhs = I.intersect(Ea, St.apply(op, Fx))
                if lhs != rhs:
                    return False, f"{P.label(a)} cap ({x} + {P.label(P.index_of(F))})"
    return True, None


def suite_stable(S, ops):
    out = []
    bars = [St.stable_closure(op) for op in ops]
    t_le = _Tally("the stable closure lies below the operation")
    t_id = _Tally("the stable closure is idempotent")
    t_dist = _Tally("the stable closure distributes over finite intersections")
    t_max = _Tally("the stable closure is the largest stable operation below")
    t_ft = _Tally("finite-type companion equals the operation")
    t_hmax = _Tally("M is the only maximal ideal for the operation and its stable closure")
    dist_memo: dict = {}
    stable = [op for op, bar in zip(ops, bars) if bar == op]
    M = I.maximal_ideal(S)
    for op, bar in zip(ops, bars):
        t_le.see(St.leq(bar, op), lambda: str(op.table))
        t_id.see(St.stable_closure(bar) == bar, lambda: str(op.table))
        if bar.table not in dist_memo:
            dist_memo[bar.table] = _distributes(bar)
        ok, wit = dist_memo[bar.table]
        t_dist.see(ok, wit)
        below = [s for s in stable if St.leq(s, op)]
        t_max.see(bar in below and all(St.leq(s, bar) for s in below), lambda: str(op.table))
        t_ft.see(St.finite_type(op) == op, lambda: str(op.table))
        try:
            ok = St.max_star_ideals(op) == [M] == St.max_star_ideals(bar)
        except SgpError:
            ok = False
        t_hmax.see(ok, lambda: str(op.table))
    return [t_le.check, t_id.check, t_dist.check, t_max.check, t_ft.check, t_hmax.check]


def suite_lattice(S, ops, samples=100, seed=0):
    rng = random.Random(seed)
    up = St.up_sets(ops)
    index = {op.table: k for k, op in enumerate(ops)}
    t_join = _Tally("composition join is the least upper bound")
    t_meet = _Tally("pointwise meet is the greatest lower bound")
    down = St.down_sets(ops)
    for _ in range(samples):
        Y = rng.sample(range(len(ops)), rng.randint(1, len(ops)))
        uppers = -1
        lowers = -1
        for k in Y:
            uppers &= up[k]
            lowers &= down[k]
        j = index.get(St.join([ops[k] for k in Y]).table)
        m = index.get(St.meet([ops[k] for k in Y]).table)
        # The least upper bound is the upper bound below every other one.
        t_join.see(j is not None and uppers >> j & 1 and uppers & ~up[j] == 0, lambda: str(Y))
        t_meet.see(m is not None and lowers >> m & 1 and lowers & ~down[m] == 0, lambda: str(Y))
    out = [t_join.check, t_meet.check]
    space = T.build_space(S, ops)
    t = _Tally("finite intersections of subbasic sets are sublattices")
    seen = set()
    for W, desc in space.subbasis:
        if W in seen:
            continue
        seen.add(W)
        if len(seen) > 12:
            break
        rep = T.lattice_in_subbasis(space, [desc], seed=seed, samples=20)
        t.see(rep.passed, rep.failures[0] if rep.failures else None)
    out.append(t.check)
    return out


def suite_topology(S, ops, samples=100, seed=0):
    space = T.build_space(S, ops)
    rep = T.is_spectral(space)
    out = []
    for name, ok in (("the space is T0", rep.t0),
                     ("point closures equal down-sets", T.closure_equals_downset(space)),
                     ("every irreducible closed set has one generic point", rep.generic_points_unique),
                     ("the space is spectral", rep.spectral)):
        c = Check(name, bool(ok), None if ok else rep.method, space.n)
        out.append(c)
    rng = random.Random(seed)
    t = _Tally("topological join agrees with composition join")
    for _ in range(samples if len(ops) > 1 else 1):
        Y = rng.sample(range(len(ops)), min(len(ops), rng.randint(1, 3)))
        tj = T.topological_join(space, Y)
        cj = St.join([ops[k] for k in Y])
        t.see(ops[tj] == cj, lambda: str(Y))
    out.append(t.check)
    return out


def suite_dm(S, ops, pairs=50, seed=0):
    rng = random.Random(seed)
    out = []
    for field in (2, 3, C.QQ):
        t = _Tally(f"Dedekind-Mertens identity over {C.field_name(field)}")
        for _ in range(pairs):
            f, g = random_poly(S, field, rng), random_poly(S, field, rng)
            try:
                m = C.dm_exponent(f, g, S)
            except SgpError as exc:
                t.see(False, f"{C.format_poly(f)}, {C.format_poly(g)}: {exc}")
                continue
            cf, cg, cfg = C.content(f, S), C.content(g, S), C.content(f * g, S)
            ok = I.product(I.power(cg, m), cf) == I.product(I.power(cg, m - 1), cfg)
            t.see(ok, lambda: f"{C.format_poly(f)}, {C.format_poly(g)}")
        out.append(t.check)
    return out


_RUNNERS = {"axioms": suite_axioms, "extension": suite_extension, "stable": suite_stable,
            "lattice": suite_lattice, "topology": suite_topology, "dm": suite_dm}


def run(S: NumericalSemigroup, suite: str) -> dict[str, list[Check]]:
    names = SUITES if suite == "all" else (suite,)
    ops = enumerate_stars(S)
    return {name: _RUNNERS[name](S, ops) for name in names}
