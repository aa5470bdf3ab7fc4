import random
from fractions import Fraction as F

import pytest

from sextic.errors import FactoringExhausted
from sextic.exact import (
    IntPoly,
    RatPoly,
    divisors,
    factorize,
    is_rational_square,
    poly_divide_exact,
    poly_eval,
    rational_roots,
    resultant,
    squarefree,
)
from sextic.resolvents import ReducedSextic, f_reduced, f_verified, g_reduced

from oracles import sylvester_resultant

X2_MINUS_1 = RatPoly([-1, 0, 1])
X2_PLUS_1 = RatPoly([1, 0, 1])


def test_poly_eval_trivial():
    assert poly_eval(RatPoly([0, 0, 1, 0, 0, 0, 1]), 0) == 0  # x^6 + x^2
    assert poly_eval(X2_MINUS_1, 1) == 0
    assert poly_eval(RatPoly([1, 2, 3]), F(1, 2)) == F(11, 4)


def test_resolvent_constant_vanishes_on_family():
    # e = (32 d^4 + 3) / (144 d^2) kills the constant term at d = 1/2
    s = ReducedSextic(F(1, 2), F(5, 36))
    assert poly_eval(f_reduced(s), 0) == 0
    assert poly_eval(f_verified(s), 0) == 0


def test_rational_roots_trivial():
    assert rational_roots(X2_MINUS_1) == {F(1), F(-1)}
    assert rational_roots(X2_PLUS_1) == set()


def test_rational_roots_of_degree_ten_resolvent():
    assert F(0) in rational_roots(g_reduced(ReducedSextic(2, 1)))


def test_rational_roots_strips_x_powers():
    p = RatPoly([0, 0, -2, 0, 1])  # x^2 (x^2 - 2)
    assert rational_roots(p) == {F(0)}


def test_rational_roots_with_leading_denominator():
    # 6x^2 - x - 1 = (3x + 1)(2x - 1)
    assert rational_roots(RatPoly([-1, -1, 6])) == {F(-1, 3), F(1, 2)}


def test_rational_roots_product_union_property():
    rng = random.Random(42)
    for _ in range(25):
        roots = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3)]
        p = RatPoly([1])
        for r in roots:
            p = p * RatPoly([-r, 1])
        q = RatPoly([rng.randint(1, 5), 0, 1])  # x^2 + positive: no real roots
        assert rational_roots(p * q) == rational_roots(p) | rational_roots(q)
        for r in rational_roots(p):
            assert poly_eval(p, r) == 0


def test_is_rational_square():
    assert is_rational_square(F(4, 9)) == F(2, 3)
    assert is_rational_square(2) is None
    assert is_rational_square(0) == 0
    assert is_rational_square(-4) is None
    rng = random.Random(1)
    for _ in range(50):
        q = F(rng.randint(-40, 40), rng.randint(1, 30))
        assert is_rational_square(q * q) == abs(q)


def test_poly_divide_exact():
    assert poly_divide_exact(X2_MINUS_1, RatPoly([-1, 1])) == RatPoly([1, 1])
    assert poly_divide_exact(X2_PLUS_1, RatPoly([-1, 1])) is None
    p = RatPoly([0, 0, 1, 0, 0, 0, 1])
    assert poly_divide_exact(p, p) == RatPoly([1])


def test_resultant_examples():
    assert resultant(RatPoly([-3, 1]), RatPoly([-1, 1])) == 2
    # disc(x^2 + 1) convention check: res(x^2 + bx + c, 2x + b) = 4 at b=0, c=1
    assert resultant(X2_PLUS_1, RatPoly([0, 2])) == 4
    p = RatPoly([0, 0, 1, 0, 0, 0, 1])
    assert resultant(p, p.derivative()) == 0


def test_resultant_against_sylvester_oracle():
    rng = random.Random(99)
    for _ in range(60):
        dp, dq = rng.randint(1, 6), rng.randint(1, 6)
        p = RatPoly([F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(dp)] + [F(rng.randint(1, 9))])
        q = RatPoly([F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(dq)] + [F(rng.randint(1, 9))])
        assert resultant(p, q) == sylvester_resultant(p, q)
        assert resultant(q, p) == sylvester_resultant(q, p)
        shared = RatPoly([-2, 1])
        assert resultant(p * shared, q * shared) == 0


def test_resultant_zero_iff_repeated_root():
    rng = random.Random(5)
    for _ in range(20):
        base = RatPoly([rng.randint(-5, 5), rng.randint(-5, 5), 1])
        squared = base * base * RatPoly([rng.randint(1, 5), 1])
        assert resultant(squared, squared.derivative()) == 0
        assert not squarefree(squared)
    assert squarefree(RatPoly([1, 1, 0, 0, 0, 0, 1]))


def test_primitive_split():
    content, prim = RatPoly([F(5, 36), F(1, 2), 1, 0, 0, 0, 1]).primitive()
    assert content == F(1, 36)
    assert prim.coeffs == (5, 18, 36, 0, 0, 0, 36)
    assert prim.content == 1


def test_int_poly_content():
    p = IntPoly([6, 12, 18])
    assert p.content == 6
    assert p.coeffs == (1, 2, 3)
    assert p.full_coeffs() == (6, 12, 18)


def test_factorize_roundtrip():
    rng = random.Random(3)
    primes = [2, 3, 5, 7, 11, 10007, 65537, 2**31 - 1]
    for _ in range(15):
        n = 1
        expected = {}
        for p in rng.sample(primes, rng.randint(1, 4)):
            k = rng.randint(1, 3)
            n *= p**k
            expected[p] = k
        assert factorize(n) == expected
    assert sorted(divisors(12)) == [1, 2, 3, 4, 6, 12]


def test_factoring_exhausted_on_hard_semiprime():
    # two fixed 150-bit primes: far beyond the rho budget
    p = 1427247692705959881058285969449495136382746689
    q = 1427247692705959881058285969449495136382746837
    with pytest.raises(FactoringExhausted):
        rational_roots(RatPoly([p * q, 0, 1]))
