import random
from fractions import Fraction
from math import comb

import pytest

from pcv.modring import Modulus, NotInvertible, ValuedResidue, legendre
from pcv.primes import primes_between
from pcv.sequences import (
    alt_harmonic,
    binomial_row,
    central_binomial_stream,
    fermat_quotient,
    fibonacci_mod,
    fibonacci_quotient,
    harmonic_prefix,
    pochhammer_mod,
)


def test_fermat_quotient_examples():
    assert fermat_quotient(2, 5, 1).value == 3
    assert fermat_quotient(2, 5, 2).value == 3
    assert fermat_quotient(2, 3).value == 1
    assert fermat_quotient(2, 7).value == 2
    with pytest.raises(NotInvertible):
        fermat_quotient(10, 5)


def test_fermat_quotient_lifting_consistency():
    for p in primes_between(3, 10**4):
        q2 = fermat_quotient(2, p, 2).value
        q1 = fermat_quotient(2, p, 1).value
        assert q2 % p == q1


def test_fibonacci_mod():
    assert fibonacci_mod(0, Modulus(5, 1)).value == 0
    assert fibonacci_mod(1, Modulus(5, 1)).value == 1
    assert fibonacci_mod(10, Modulus(11, 2)).value == 55
    assert fibonacci_mod(8, Modulus(7, 2)).value == 21
    # against the plain recurrence
    m = Modulus(13, 2)
    a, b = 0, 1
    for n in range(60):
        assert fibonacci_mod(n, m).value == a
        a, b = b, (a + b) % m.m


def test_fibonacci_divisibility_sweep():
    # the divisibility the quotient relies on, for every prime below 1e4
    for p in primes_between(3, 10**4):
        if p == 5:
            continue
        idx = p - legendre(p, 5)
        assert fibonacci_mod(idx, Modulus(p, 1)).value == 0


def test_fibonacci_quotient_examples():
    assert fibonacci_quotient(11).value == 5
    assert fibonacci_quotient(7).value == 3
    assert fibonacci_quotient(3).value == 1
    with pytest.raises(ValueError):
        fibonacci_quotient(5)


def test_harmonic_prefix():
    vals = [r.value for r in harmonic_prefix(2, Modulus(5, 1))]
    assert vals == [0, 1, 4]
    # exact oracle: H_5 = 137/60 which is 1 mod 11
    h5 = list(harmonic_prefix(5, Modulus(11, 1)))[-1].value
    assert h5 == 137 * pow(60, -1, 11) % 11 == 1
    with pytest.raises(ValueError):
        list(harmonic_prefix(11, Modulus(11, 1)))


def test_harmonic_vs_exact_rationals():
    for p in primes_between(53, 200):
        n_max = 50
        hs = [r.value for r in harmonic_prefix(n_max, Modulus(p, 2))]
        h = Fraction(0)
        for n in range(1, n_max + 1):
            h += Fraction(1, n)
            expect = h.numerator * pow(h.denominator, -1, p * p) % (p * p)
            assert hs[n] == expect


def test_alt_harmonic():
    assert alt_harmonic(11).value == 7
    assert alt_harmonic(7).value == 4
    assert alt_harmonic(7, bound=0).value == 0
    # matches 5 f_p / 2 for a few primes
    for p in (7, 11, 13, 17, 19, 23):
        f = fibonacci_quotient(p).value
        assert alt_harmonic(p).value == 5 * f * pow(2, -1, p) % p


def test_central_binomial_examples():
    vals = [r.value for r in central_binomial_stream(7, 2, 6)]
    assert vals[0] == 1 and vals[3] == 20 and vals[6] == 42  # C(12,6)=924=18*49+42
    with pytest.raises(ValueError):
        list(central_binomial_stream(7, 2, 7))


def test_central_binomial_vs_exact_exhaustive():
    for p in primes_between(3, 53):
        for k in (1, 2, 3):
            mod = Modulus(p, k)
            for j, r in enumerate(central_binomial_stream(p, k, p - 1)):
                assert r.value == comb(2 * j, j) % mod.m


def test_binomial_row():
    assert [r.value for r in binomial_row(3, Modulus(7, 2))] == [1, 3, 3, 1]
    assert [r.value for r in binomial_row(5, Modulus(11, 1))][2] == 10
    for p in primes_between(3, 40):
        n = (p - 1) // 2
        row = [r.value for r in binomial_row(n, Modulus(p, 2))]
        assert row == [comb(n, j) % (p * p) for j in range(n + 1)]
    with pytest.raises(ValueError):
        list(binomial_row(11, Modulus(11, 1)))


def test_pochhammer_mod_examples():
    empty = pochhammer_mod(Fraction(1, 3), 0, Modulus(7, 2))
    assert (empty.e, empty.unit) == (0, 1)
    v = pochhammer_mod(Fraction(1, 2), 3, Modulus(7, 2))
    assert (v.e, v.unit) == (0, 15 * pow(8, -1, 49) % 49)
    w = pochhammer_mod(Fraction(4, 3) - Fraction(14, 3), 2, Modulus(7, 2), kappa=3)
    assert w.e == 1
    assert w.unit == 10 * pow(9, -1, 7**3) % 7**3
    z = pochhammer_mod(-3, 4, Modulus(7, 2))
    assert z.is_zero


def test_pochhammer_mod_vs_exact_randomized():
    rng = random.Random(7)
    for p in (5, 7, 11, 13):
        for _ in range(300):
            a = Fraction(rng.randint(-60, 60), rng.choice([1, 2, 3, 4, 6, 9]))
            if a.denominator % p == 0:
                continue
            j = rng.randint(0, 12)
            got = pochhammer_mod(a, j, Modulus(p, 3))
            exact = Fraction(1)
            for i in range(j):
                exact *= a + i
            if exact == 0:
                assert got.is_zero
                continue
            want = ValuedResidue.from_fraction(exact, p, got.kappa)
            assert (got.e, got.unit) == (want.e, want.unit)
