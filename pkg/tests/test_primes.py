import pytest
from hypothesis import given, strategies as st

from twotorsion.primes import (
    CapacityError,
    PrimeClass,
    classify,
    core,
    cornacchia,
    cornacchia_exhaustive,
    factorize,
    in_p1_star,
    is_prime,
    omega_bound_check,
    primes_below,
)


def test_is_prime_pinned():
    assert is_prime(2)
    assert is_prime(1193)
    assert not is_prime(1024)
    assert not is_prime(0) and not is_prime(1)
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to first four bases


def test_is_prime_vs_sieve():
    marks = set(primes_below(10000))
    for n in range(10000):
        assert is_prime(n) == (n in marks), n


def test_cornacchia_pinned():
    assert cornacchia(41, 16) == (5, 1)
    assert cornacchia(1201, 16) == (25, 6)
    assert cornacchia(7, 16) is None
    assert cornacchia(113, 64) == (7, 1)
    with pytest.raises(ValueError):
        cornacchia(10, 16)
    with pytest.raises(ValueError):
        cornacchia(41, 5)


def test_cornacchia_against_exhaustive_search():
    for p in primes_below(20000):
        if p % 8 == 1:
            for d in (16, 64):
                assert cornacchia(p, d) == cornacchia_exhaustive(p, d), (p, d)


def test_classify_pinned():
    assert classify(41).label is PrimeClass.P1  # 5 + 4 = 9
    assert classify(17).label is PrimeClass.P3  # 1 + 4 = 5
    assert classify(113).label is PrimeClass.P1  # 7 + 8 = 15
    assert classify(3).label is PrimeClass.NOT_1_MOD_8


def test_classify_normalization():
    pr = classify(41)
    assert pr.a16 == 5 and pr.b16 == 1 and pr.a16 % 2 == 1
    assert pr.a16 > 0 and pr.b16 > 0
    assert pr.p == pr.a16**2 + 16 * pr.b16**2


def test_classify_sign_invariance():
    # each unit mod 8 is self-inverse, so (a + 4b)(a - 4b) = p - 32 b^2 = 1
    # mod 8 forces both signs into the same class
    for p in primes_below(5000):
        if p % 8 == 1:
            a, b = cornacchia(p, 16)
            classes = {
                (sa * a + 4 * sb * b) % 8 in (1, 7)
                for sa in (1, -1)
                for sb in (1, -1)
            }
            assert len(classes) == 1, p


def test_p1_star_pinned():
    assert in_p1_star(1201)  # 25^2 + 64 * 9, 25 = 1 mod 8
    assert not in_p1_star(41)  # 41 = 9 mod 16
    assert in_p1_star(113)  # 7^2 + 64, 7 = -1 mod 8


def test_p1_star_double_characterization_small():
    for p in primes_below(20000):
        if p % 8 == 1:
            in_p1_star(p)  # the two characterizations are cross-asserted inside


def test_core():
    assert core(12) == 6
    assert core(17 * 97) == 1649
    assert core(97) == 97
    assert core(-8) == 2
    assert core(1) == 1
    with pytest.raises(ValueError):
        core(0)


def test_core_large_prime_square_cofactor():
    q = 1000003
    assert core(4 * q * q) == 2 * q


def test_core_capacity():
    with pytest.raises(CapacityError):
        core(1000003 * 1000033)


@given(st.integers(2, 10**6))
def test_factorize_roundtrip(n):
    fac = factorize(n)
    prod = 1
    for p, e in fac.items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n


def test_omega_bound():
    r = omega_bound_check(17 * 97, 2)
    assert r.passed and r.omega == 2 and r.omega2 == 2
    r = omega_bound_check(13**2, 2)  # 13 = 5 mod 8
    assert not r.passed and r.omega == 2 and r.omega2 == 0
    assert omega_bound_check(17, 1).passed
    with pytest.raises(ValueError):
        omega_bound_check(34, 1)
