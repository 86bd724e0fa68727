"""Sparse Laurent polynomials over Q or F_p and their content ideals in k[S].

Elements of k[S] and of its homogeneous localization are sums of monomials
``a*t^e``; a homogeneous ideal of k[S] is spanned by monomials, so it is the
same thing as a monoid ideal of exponents.  ``content(f)`` is the ideal
generated by the exponents of ``f``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import ideal as I
from . import star as St
from .errors import (CapExceeded, FieldMismatch, InputError, NotInR, ParseError,
                     PreconditionFailed, ZeroPolynomial)
from .ideal import FracIdeal
from .semigroup import NumericalSemigroup

QQ = 0  # field tag for the rationals; a prime p stands for F_p
MAX_PRIME = 2 ** 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _coerce(field: int, a):
    if field == QQ:
        return Fraction(a)
    if isinstance(a, Fraction):
        return a.numerator * pow(a.denominator, -1, field) % field
    return int(a) % field


@dataclass(frozen=True)
class SparsePoly:
    """Exponent -> nonzero coefficient.  Immutable; build with ``poly``."""

    terms: tuple[tuple[int, object], ...]
    field: int = QQ

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self.terms)

    def support(self) -> list[int]:
        return [e for e, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def in_ring(self, S: NumericalSemigroup) -> bool:
        return all(e in S for e, _ in self.terms)

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{field_name(self.field)} vs {field_name(other.field)}")

    def __add__(self, other: SparsePoly) -> SparsePoly:
        self._check(other)
        acc = dict(self.terms)
        for e, a in other.terms:
            acc[e] = acc.get(e, 0) + a
        return poly(acc, self.field)

    def __neg__(self) -> SparsePoly:
        return poly({e: -a for e, a in self.terms}, self.field)

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def __mul__(self, other) -> SparsePoly:
        if not isinstance(other, SparsePoly):
            return poly({e: a * _coerce(self.field, other) for e, a in self.terms}, self.field)
        self._check(other)
        acc: dict[int, object] = {}
        for e, a in self.terms:
            for f, b in other.terms:
                acc[e + f] = acc.get(e + f, 0) + a * b
        return poly(acc, self.field)

    __rmul__ = __mul__

    def shift(self, k: int) -> SparsePoly:
        """Multiply by ``t^k``."""
        return SparsePoly(tuple((e + k, a) for e, a in self.terms), self.field)

    def __str__(self):
        return format_poly(self)


def poly(coeffs: Mapping[int, object], field: int = QQ) -> SparsePoly:
    if field != QQ and (not _is_prime(field) or field >= MAX_PRIME):
        raise InputError(f"field characteristic {field} is not a prime below 2^31")
    terms = []
    for e in sorted(coeffs):
        a = _coerce(field, coeffs[e])
        if a != 0:
            terms.append((int(e), a))
    return SparsePoly(tuple(terms), field)


def monomial(e: int, field: int = QQ, coeff=1) -> SparsePoly:
    return poly({e: coeff}, field)


def poly_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return f * g


def field_name(field: int) -> str:
    return "Q" if field == QQ else f"F{field}"


def format_poly(f: SparsePoly, tag: bool = True) -> str:
    """Canonical text: ascending exponents, reduced coefficients, field tag."""
    if f.is_zero():
        body = "0"
    else:
        parts = []
        for e, a in f.terms:
            if f.field != QQ and a > f.field // 2 and f.field > 2:
                a = a - f.field
            neg = a < 0
            mag = -a if neg else a
            mono = "" if e == 0 else "t" if e == 1 else f"t^{e}"
            if not mono:
                text = str(mag)
            elif mag == 1:
                text = mono
            else:
                text = f"{mag}*{mono}"
            parts.append(("- " if neg else "+ ") + text)
        body = " ".join(parts)
        body = body[2:] if body.startswith("+ ") else "-" + body[2:]
    return f"{body} @{field_name(f.field)}" if tag else body


def parse_poly(text: str, field: int | None = None) -> SparsePoly:
    """Parse ``"1 + 2*t^3 - t^5 @F2"``; an explicit ``field`` overrides the tag
    only when the text carries none."""
    tag = re.search(r"@(\w+)\s*$", text)
    if tag:
        name = tag.group(1)
        body = text[:tag.start()]
        if name == "Q":
            fld = QQ
        elif re.fullmatch(r"F\d+", name):
            fld = int(name[1:])
        else:
            raise ParseError(f"unknown field tag @{name}", tag.start())
    else:
        body = text
        fld = QQ if field is None else field
    pos, n = 0, len(body)
    acc: dict[int, object] = {}

    def skip():
        nonlocal pos
        while pos < n and body[pos].isspace():
            pos += 1

    def number():
        nonlocal pos
        m = re.compile(r"\d+(?:/\d+)?").match(body, pos)
        if not m:
            return None
        pos = m.end()
        return Fraction(m.group())

    skip()
    if pos < n and body[pos:].strip() == "0":
        return poly({}, fld)
    first = True
    while True:
        skip()
        if pos >= n:
            if first:
                raise ParseError("empty polynomial", pos)
            break
        sign = 1
        if body[pos] in "+-":
            sign = -1 if body[pos] == "-" else 1
            pos += 1
            skip()
        elif not first:
            raise ParseError("expected + or -", pos)
        first = False
        coeff = number()
        skip()
        if coeff is not None and pos < n and body[pos] == "*":
            pos += 1
            skip()
            if pos >= n or body[pos] != "t":
                raise ParseError("expected t after *", pos)
        elif coeff is not None and pos < n and body[pos] == "t":
            raise ParseError("expected * between coefficient and t", pos)
        exp = 0
        if pos < n and body[pos] == "t":
            pos += 1
            exp = 1
            skip()
            if pos < n and body[pos] == "^":
                pos += 1
                skip()
                m = re.compile(r"-?\d+").match(body, pos)
                if not m:
                    raise ParseError("expected exponent", pos)
                exp = int(m.group())
                pos = m.end()
        elif coeff is None:
            raise ParseError("expected a coefficient or t", pos)
        if coeff is None:
            coeff = Fraction(1)
        if fld != QQ and coeff.denominator % fld == 0:
            raise ParseError(f"denominator divisible by {fld}", pos)
        acc[exp] = acc.get(exp, 0) + _coerce(fld, sign * coeff)
    return poly(acc, fld)


def poly_in_ideal(f: SparsePoly, E: FracIdeal) -> bool:
    """Membership in a homogeneous ideal is checked monomial by monomial."""
    return all(e in E for e in f.support())


def content(f: SparsePoly, S: NumericalSemigroup) -> FracIdeal:
    if f.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    return _ideal_of(S, tuple(f.support()))


@lru_cache(maxsize=1 << 16)
def _ideal_of(S: NumericalSemigroup, exps: tuple[int, ...]) -> FracIdeal:
    return I.normalize(S, exps)


def content_of_ideal(gens: Sequence[SparsePoly], S: NumericalSemigroup) -> FracIdeal:
    """Sum of the generators' contents."""
    if not gens:
        raise InputError("empty generator list")
    exps = []
    for g in gens:
        if g.is_zero():
            raise ZeroPolynomial("zero generator")
        exps.extend(g.support())
    return _ideal_of(S, tuple(sorted(set(exps))))


def default_cap(g: SparsePoly) -> int:
    s = g.support()
    return 2 + (s[-1] - s[0])


def dm_exponent(f: SparsePoly, g: SparsePoly, S: NumericalSemigroup, cap: int | None = None) -> int:
    """Least ``m >= 2`` with ``C(g)^m C(f) = C(g)^(m-1) C(fg)``."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("Dedekind-Mertens exponent needs nonzero polynomials")
    if cap is None:
        cap = default_cap(g)
    cf, cg, cfg = content(f, S), content(g, S), content(f * g, S)
    left = I.product(I.power(cg, 2), cf)
    right = I.product(cg, cfg)
    for m in range(2, cap + 1):
        if left == right:
            return m
        left = I.product(left, cg)
        right = I.product(right, cg)
    raise CapExceeded(f"no exponent up to {cap} for f={f}, g={g}")


# -- extension of a homogeneous star operation to all ideals -----------------

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class Verdict:
    answer: str
    branch: str
    witness: str | None = None


def _find_monomial(gens: Sequence[SparsePoly]) -> SparsePoly | None:
    for g in gens:
        if g.is_monomial():
            return g
    # Eliminate a shared exponent between two generators.
    for a, f in enumerate(gens):
        for g in gens[a + 1:]:
            fc, gc = f.coeffs, g.coeffs
            for e in set(fc) & set(gc):
                h = f - g * (fc[e] / gc[e] if f.field == QQ else fc[e] * pow(gc[e], -1, f.field))
                if h.is_monomial():
                    return h
    return None


def _sample_family(gens, scale, S, rng, limit):
    # Products of up to three factors from: the generators of A, 1 + t^gap,
    # and monomials t^s with s <= 2c.
    c = S.conductor
    field = gens[0].field
    pool = [g.shift(scale) for g in gens]
    pool += [monomial(0, field) + monomial(g, field) for g in S.gaps]
    pool += [monomial(s, field) for s in range(-scale - c, 2 * c + 1)]
    for _ in range(limit):
        z = rng.choice(pool)
        for _ in range(rng.randrange(3)):
            z = z * rng.choice(pool)
        yield z


def sampled_certificate(star: St.StarOp, gens: Sequence[SparsePoly], scale: int,
                        samples: int = 200, seed: int = 0) -> tuple[str, str | None]:
    """Test ``1 in z^-1 C(zA)^*`` for sampled ``z`` in ``(R:A)``.

    Every such set contains the extension of ``A``, so one failure proves
    ``1`` is not in it; passing every sample proves nothing.
    """
    S = star.semigroup
    A = [g.shift(scale) for g in gens]
    rng = random.Random(seed)
    for z in _sample_family(gens, scale, S, rng, samples):
        zA = [z * a for a in A]
        if not all(h.in_ring(S) for h in zA):
            continue
        closed = St.apply(star, content_of_ideal(zA, S))
        if not poly_in_ideal(z, closed):
            return NO, f"z = {format_poly(z)}"
    return UNKNOWN, None


def extension_membership(star: St.StarOp, gens: Sequence[SparsePoly], scale: int = 0,
                         samples: int = 200) -> Verdict:
    """Decide whether 1 lies in the extension of ``star`` applied to
    ``A = t^scale (gens)``."""
    return extension_membership_many([star], gens, scale, samples)[0]


def extension_membership_many(stars: Sequence[St.StarOp], gens: Sequence[SparsePoly],
                              scale: int = 0, samples: int = 200) -> list[Verdict]:
    """``extension_membership`` for several operations on the same ``S``,
    sharing the input checks and the content computation."""
    if not stars:
        return []
    S = stars[0].semigroup
    if not gens:
        raise InputError("empty generator list")
    for g in gens:
        if g.is_zero():
            raise ZeroPolynomial("zero generator")
        if not g.in_ring(S):
            raise NotInR(f"{format_poly(g)} has exponents outside {S}")
    if _find_monomial(gens) is not None:
        cA = content_of_ideal(gens, S).shift(scale)
        P = stars[0].poset
        # 0 is in the closure of o + E iff -o is in the closure of E.
        e, x = P.index_of(cA), -cA.offset
        return [Verdict(YES if x in P[op.table[e]] else NO, "content") for op in stars]
    if len(gens) == 1:
        # A principal ideal with a non-monomial generator never contains 1:
        # the extreme terms of any multiple survive.
        v = Verdict(NO, "principal", f"{format_poly(gens[0])} is not a monomial")
        return [v] * len(stars)
    out = []
    for op in stars:
        answer, witness = sampled_certificate(op, gens, scale, samples)
        out.append(Verdict(answer, "sampled", witness))
    return out


@dataclass(frozen=True)
class WitnessReport:
    m: int
    J0: FracIdeal
    dense: bool
    product_inside: bool
    content_in_stable: bool

    @property
    def passed(self) -> bool:
        return self.dense and self.product_inside and self.content_in_stable


def tilde_witness_check(star: St.StarOp, f: SparsePoly, gs: Sequence[SparsePoly], E: FracIdeal,
                        cap: int | None = None) -> WitnessReport:
    """Build ``J0 = (C(g1) + ... + C(gn))^(n m)`` and check it witnesses
    ``C(f)`` inside the stable closure of ``E``."""
    S = star.semigroup
    R = I.principal(S)
    if not gs:
        raise PreconditionFailed("gs is empty")
    if f.is_zero():
        raise PreconditionFailed("f is zero")
    for g in gs:
        if g.is_zero() or not g.in_ring(S):
            raise PreconditionFailed(f"g = {format_poly(g)} is not a nonzero element of k[S]")
        if not poly_in_ideal(f * g, E):
            raise PreconditionFailed(f"f*g not in E for g = {format_poly(g)}")
    Cg = content_of_ideal(gs, S)
    if St.apply(star, Cg) != R:
        raise PreconditionFailed("C(g1,...,gn) is not dense")
    m = max(dm_exponent(f, g, S, cap if cap is not None else default_cap(g)) for g in gs)
    J0 = I.power(Cg, len(gs) * m)
    cf = content(f, S)
    return WitnessReport(
        m=m,
        J0=J0,
        dense=St.apply(star, J0) == R,
        product_inside=I.product(cf, J0).issubset(E),
        content_in_stable=cf.issubset(St.apply(St.stable_closure(star), E)),
    )
