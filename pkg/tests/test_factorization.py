"""Sieve, factorization, and divisor enumeration against naive oracles."""

import pytest

from iterfix import Factorization, big_omega, divisors, factor_limit, factorize, is_prime, sieve_primes


def naive_is_prime(n):
    # independent oracle: plain trial division by every candidate
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_sieve_empty_below_two():
    assert sieve_primes(1) == []
    assert sieve_primes(0) == []
    assert sieve_primes(-7) == []


def test_sieve_textbook():
    assert sieve_primes(10) == [2, 3, 5, 7]


def test_sieve_matches_trial_division_oracle():
    expected = [n for n in range(2, 101) if naive_is_prime(n)]
    got = sieve_primes(100)
    assert got == expected
    assert len(got) == sum(1 for n in range(2, 101) if naive_is_prime(n))


def test_is_prime_matches_oracle():
    for n in range(0, 500):
        assert is_prime(n) == naive_is_prime(n), n


def test_factorize_one_is_empty():
    f = factorize(1)
    assert f.value == 1
    assert f.factors == ()


def test_factorize_twelve():
    assert factorize(12).factors == ((2, 2), (3, 1))


def test_factorize_prime():
    assert naive_is_prime(9973)
    assert factorize(9973).factors == ((9973, 1),)


def test_factorize_rejects_zero_and_negative():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-12)


def test_factorize_rejects_beyond_limit():
    with pytest.raises(ValueError):
        factorize(factor_limit() + 1)
    with pytest.raises(ValueError):
        is_prime(factor_limit() + 1)


def test_roundtrip_product():
    for n in range(1, 2001):
        f = factorize(n)
        product = 1
        for p, a in f.factors:
            product *= p**a
        assert product == n


def test_divisor_count_is_product_of_exponents_plus_one():
    for n in range(1, 500):
        f = factorize(n)
        expected = 1
        for _, a in f.factors:
            expected *= a + 1
        assert len(divisors(f)) == expected


def test_divisors_examples():
    assert divisors(factorize(1)) == [1]
    assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
    for p in (2, 13, 9973):
        assert divisors(factorize(p)) == [1, p]


def test_divisors_sorted_with_endpoints():
    for n in (36, 210, 1024):
        ds = divisors(factorize(n))
        assert ds == sorted(ds)
        assert ds[0] == 1 and ds[-1] == n
        assert all(n % d == 0 for d in ds)


def test_big_omega_examples():
    assert big_omega(factorize(1)) == 0
    assert big_omega(factorize(12)) == 3
    assert big_omega(factorize(64)) == 6


def test_big_omega_additive():
    for m in range(1, 60):
        for n in range(1, 60):
            assert big_omega(factorize(m * n)) == big_omega(factorize(m)) + big_omega(factorize(n))


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))  # wrong order
    with pytest.raises(ValueError):
        Factorization(12, ((2, 2),))  # product mismatch
    with pytest.raises(ValueError):
        Factorization(16, ((4, 2),))  # 4 is not prime
    with pytest.raises(ValueError):
        Factorization(2, ((2, 0),))  # exponent below 1
    with pytest.raises(ValueError):
        Factorization(0, ())


def test_env_limit_override(monkeypatch):
    from iterfix import factorization as fz

    monkeypatch.setenv("ITERFIX_SIEVE_LIMIT", "1000")
    fz._reset_limit_cache()
    try:
        assert factor_limit() == 1000
        assert factorize(997).factors == ((997, 1),)
        with pytest.raises(ValueError):
            factorize(1001)
        monkeypatch.setenv("ITERFIX_SIEVE_LIMIT", "not-a-number")
        fz._reset_limit_cache()
        with pytest.raises(ValueError):
            factor_limit()
    finally:
        monkeypatch.undo()
        fz._reset_limit_cache()
