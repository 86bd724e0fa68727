from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from sgpstar import content as C
from sgpstar import ideal as I
from sgpstar import star as St
from sgpstar.enumeration import enumerate_stars
from sgpstar.errors import (CapExceeded, FieldMismatch, InputError, NotInR, ParseError,
                            PreconditionFailed, ZeroPolynomial)
from sgpstar.semigroup import make_semigroup
from sgpstar.verify import random_poly

F2 = 2


def P_(text):
    return C.parse_poly(text)


def naive_mul(f, g, p):
    acc = {}
    for e, a in f.coeffs.items():
        for k, b in g.coeffs.items():
            acc[e + k] = acc.get(e + k, 0) + a * b
    if p:
        acc = {e: a % p for e, a in acc.items()}
    return {e: a for e, a in acc.items() if a != 0}


def test_arithmetic_examples(s357):
    f = P_("t^3 + t^5 @F2")
    assert C.poly_mul(f, f) == P_("t^6 + t^10 @F2")
    assert f * C.monomial(0, F2) == f
    assert C.poly_in_ideal(f, I.maximal_ideal(s357))
    assert not C.poly_in_ideal(P_("1 + t^3"), I.maximal_ideal(s357))
    with pytest.raises(FieldMismatch):
        f * P_("t")
    with pytest.raises(InputError):
        C.poly({1: 1}, 4)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([0, 2, 3, 7]),
       st.dictionaries(st.integers(-5, 20), st.integers(-9, 9), max_size=6),
       st.dictionaries(st.integers(-5, 20), st.integers(-9, 9), max_size=6))
def test_mul_matches_naive(p, a, b):
    f, g = C.poly(a, p), C.poly(b, p)
    assert (f * g).coeffs == naive_mul(f, g, p)
    assert f * g == g * f
    assert (f + g) - g == f


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([0, 2, 3, 5]),
       st.dictionaries(st.integers(-4, 30), st.integers(-20, 20), max_size=6))
def test_format_round_trip(p, coeffs):
    if p == 0:
        coeffs = {e: Fraction(a, 1 + abs(e) % 3) for e, a in coeffs.items()}
    f = C.poly(coeffs, p)
    text = C.format_poly(f)
    assert C.parse_poly(text) == f
    assert C.format_poly(C.parse_poly(text)) == text


def test_format_examples():
    assert C.format_poly(P_("1 + 2*t^3 - t^5")) == "1 + 2*t^3 - t^5 @Q"
    assert C.format_poly(P_("t^3 + 4*t^5 @F5")) == "t^3 - t^5 @F5"
    assert C.format_poly(P_("0")) == "0 @Q"
    assert P_("1/2*t - t^-2") == C.poly({1: Fraction(1, 2), -2: -1})


@pytest.mark.parametrize("text, pos", [("1 + + t", 4), ("t^", 2), ("2 t", 2), ("t @Z", 2), ("", 0)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        C.parse_poly(text)
    assert exc.value.position == pos


def test_content_examples(s357):
    c = C.content(P_("t^3 + t^5"), s357)
    assert c == I.normalize(s357, [3, 5]) and 7 not in c
    assert C.content(P_("4*t^9"), s357) == I.principal(s357).shift(9)
    assert C.content(P_("1 + t^3"), s357) == I.principal(s357)
    M = I.maximal_ideal(s357)
    assert C.content_of_ideal([P_("t^3"), P_("t^5"), P_("t^7")], s357) == M
    assert C.content_of_ideal([P_("1 + t^3")], s357) == I.principal(s357)
    with pytest.raises(ZeroPolynomial):
        C.content(P_("0"), s357)
    with pytest.raises(ZeroPolynomial):
        C.content_of_ideal([P_("t^3"), P_("0")], s357)


def test_dm_examples(s357):
    f = P_("t^3 + t^5 @F2")
    assert C.dm_exponent(f, f, s357) == 2
    cg = C.content(f, s357)
    lhs = I.product(I.power(cg, 2), cg)
    assert lhs == I.product(cg, C.content(f * f, s357))
    assert C.content(f * f, s357) == I.normalize(s357, [6, 10])
    assert C.dm_exponent(P_("t^3"), P_("1 + t + t^4"), make_semigroup([1])) == 2
    q = P_("t^3 + t^5")
    assert C.dm_exponent(q, q, s357) == 2
    assert C.content(q * q, s357) == I.product(C.content(q, s357), C.content(q, s357))
    with pytest.raises(CapExceeded):
        C.dm_exponent(q, q, s357, cap=1)
    with pytest.raises(ZeroPolynomial):
        C.dm_exponent(P_("0"), q, s357)


@pytest.mark.parametrize("gens", [(3, 5, 7), (2, 3), (4, 5, 6)])
def test_content_invariants(gens):
    S = make_semigroup(gens)
    rng = random.Random(7)
    for field in (2, 3, 0):
        for _ in range(40):
            f, g = random_poly(S, field, rng), random_poly(S, field, rng)
            prod = I.product(C.content(f, S), C.content(g, S))
            assert C.content(f * g, S).issubset(prod)
            # Scaling a homogeneous ideal by any z.
            gens_ = [C.monomial(e, field) for e in rng.sample(range(2 * S.conductor + 3), 2)
                     if e in S] or [C.monomial(0, field)]
            lhs = C.content_of_ideal([f * h for h in gens_], S)
            assert lhs == I.product(C.content(f, S), C.content_of_ideal(gens_, S))


def test_strict_containment_over_f2(s357):
    f = P_("t^3 + t^5 @F2")
    prod = I.product(C.content(f, s357), C.content(f, s357))
    assert C.content(f * f, s357) != prod


class TestExtension:
    def test_examples(self, s357):
        v = St.builtin_v(s357)
        assert C.extension_membership(v, [P_("t^3"), P_("t^5")], 0).answer == C.NO
        assert C.extension_membership(v, [P_("t^3"), P_("t^5"), P_("t^7")], -3).answer == C.YES
        # A = E2 - 4 with E2 = {0, 2} + S, presented as t^-7 (t^3, t^5).
        E2 = I.normalize(s357, [0, 2])
        gens = [C.monomial(g + 3) for g in E2.generators()]
        assert C.content_of_ideal(gens, s357).shift(-7) == E2.shift(-4)
        verdict = C.extension_membership(v, gens, -7)
        assert verdict.answer == C.YES and verdict.branch == "content"
        assert 0 not in E2.shift(-4)
        assert C.extension_membership(St.builtin_d(s357), gens, -7).answer == C.NO

    def test_errors(self, s357):
        v = St.builtin_v(s357)
        with pytest.raises(NotInR):
            C.extension_membership(v, [P_("t^2")])
        with pytest.raises(ZeroPolynomial):
            C.extension_membership(v, [P_("0")])
        with pytest.raises(InputError):
            C.extension_membership(v, [])

    def test_branches(self, s357):
        v = St.builtin_v(s357)
        # A monomial appears after eliminating the shared t^5 term.
        verdict = C.extension_membership(v, [P_("t^3 + t^5"), P_("t^5")], -3)
        assert verdict.branch == "content" and verdict.answer == C.YES
        verdict = C.extension_membership(v, [P_("t^3 + t^5")], -3)
        assert verdict.branch == "principal" and verdict.answer == C.NO
        verdict = C.extension_membership(v, [P_("t^3 + t^5"), P_("t^6 + t^10")])
        assert verdict.branch == "sampled" and verdict.answer == C.NO and verdict.witness

    def test_sampled_never_refutes_content_yes(self, s357):
        rng = random.Random(3)
        ops = enumerate_stars(s357)
        checked = 0
        for _ in range(60):
            gens = [C.monomial(rng.choice([3, 5, 6, 7, 8]))] + [random_poly(s357, 0, rng, 3, 10)]
            scale = -rng.randint(0, 8)
            for op in ops:
                if C.extension_membership(op, gens, scale).answer == C.YES:
                    ans, _ = C.sampled_certificate(op, gens, scale, samples=60, seed=rng.random())
                    assert ans != C.NO
                    checked += 1
        assert checked > 20

    def test_batch_matches_single(self, s357):
        ops = enumerate_stars(s357)
        gens = [P_("t^5"), P_("t^6 + t^8")]
        for scale in range(-9, 1):
            many = C.extension_membership_many(ops, gens, scale)
            assert many == [C.extension_membership(op, gens, scale) for op in ops]


class TestWitness:
    def test_integral_example(self, s357):
        v = St.builtin_v(s357)
        M = I.maximal_ideal(s357)
        rep = C.tilde_witness_check(v, P_("t^3"), [P_("1 + t^3")], M)
        assert rep.m == 2 and rep.J0 == I.principal(s357) and rep.passed

    def test_homogeneous_g(self, s357):
        E = I.normalize(s357, [3])
        for op in enumerate_stars(s357):
            rep = C.tilde_witness_check(op, P_("t^3"), [P_("1")], E)
            assert rep.J0 == I.principal(s357) and rep.passed

    def test_f2_instance(self, s357):
        E = I.normalize(s357, [3, 5])
        v = St.builtin_v(s357)
        rep = C.tilde_witness_check(v, P_("t^3 + t^5 @F2"), [P_("1 + t^3 @F2")], E)
        assert rep.dense and rep.product_inside and rep.content_in_stable

    def test_preconditions(self, s357):
        v = St.builtin_v(s357)
        M = I.maximal_ideal(s357)
        with pytest.raises(PreconditionFailed, match="f\\*g"):
            C.tilde_witness_check(v, P_("1"), [P_("1 + t^3")], M)
        with pytest.raises(PreconditionFailed, match="dense"):
            C.tilde_witness_check(v, P_("t^3"), [P_("t^3 + t^5")], M)
        with pytest.raises(PreconditionFailed):
            C.tilde_witness_check(v, P_("t^3"), [], M)
