import random
from fractions import Fraction

import pytest

from pcv.modring import (
    Modulus,
    NegativeValuation,
    NotInvertible,
    ModulusMismatch,
    PrecisionExhausted,
    Residue,
    ValuedResidue,
    least_nonneg_residue,
    legendre,
    rational_to_residue,
)
from pcv.primes import primes_between


def test_modulus_validation():
    Modulus(3, 1)
    Modulus(10**9 + 7, 3)
    with pytest.raises(ValueError):
        Modulus(4, 1)
    with pytest.raises(ValueError):
        Modulus(2, 1)
    with pytest.raises(ValueError):
        Modulus(9, 2)
    with pytest.raises(ValueError):
        Modulus(5, 0)
    with pytest.raises(ValueError):
        Modulus(10**9 + 7, 5)  # (1e9+7)^5 > 2^127


def test_ring_arithmetic_examples():
    m25 = Modulus(5, 2)
    assert (Residue(3, m25) + Residue(24, m25)).value == 2
    m49 = Modulus(7, 2)
    assert (Residue(0, m49) * Residue(17, m49)).value == 0
    m121 = Modulus(11, 2)
    assert (Residue(10, m121) - Residue(21, m121)).value == 110
    assert (-Residue(1, m25)).value == 24
    with pytest.raises(ModulusMismatch):
        Residue(1, m25) + Residue(1, m49)


def test_inverse():
    m25 = Modulus(5, 2)
    assert Residue(3, m25).inverse().value == 17
    assert Residue(1, m25).inverse().value == 1
    with pytest.raises(NotInvertible):
        Residue(5, m25).inverse()
    # against pow on a composite-modulus ring
    m = Modulus(13, 3)
    for a in range(1, 60):
        if a % 13:
            assert (Residue(a, m).inverse() * Residue(a, m)).value == 1


def test_pow():
    m25 = Modulus(5, 2)
    assert (Residue(2, m25) ** 4).value == 16
    assert (Residue(2, Modulus(7, 1)) ** 6).value == 1  # Fermat
    assert (Residue(3, Modulus(7, 1)) ** 3).value == 6
    assert (Residue(17, m25) ** 0).value == 1


def test_fermat_on_primes():
    for p in primes_between(3, 200):
        m = Modulus(p, 1)
        for a in (2, 3, p - 1):
            if a % p:
                assert (Residue(a, m) ** (p - 1)).value == 1


def test_rational_to_residue():
    assert rational_to_residue(3, 2, Modulus(5, 1)).value == 4
    assert rational_to_residue(0, 7, Modulus(5, 2)).value == 0
    assert rational_to_residue(483, 512, Modulus(5, 3)).value == 9
    with pytest.raises(NotInvertible):
        rational_to_residue(1, 10, Modulus(5, 2))
    rng = random.Random(1)
    for _ in range(200):
        p = rng.choice([5, 7, 11])
        mod = Modulus(p, rng.randint(1, 3))
        u, v = rng.randint(-999, 999), rng.randint(1, 999)
        if v % p == 0:
            continue
        r = rational_to_residue(u, v, mod)
        assert r.value * v % mod.m == u % mod.m


def test_least_nonneg_residue():
    assert least_nonneg_residue(-1, 3, 7) == 2
    assert least_nonneg_residue(0, 1, 13) == 0
    assert least_nonneg_residue(1, 2, 11) == 6


def test_legendre_examples():
    assert legendre(2, 7) == 1
    assert legendre(2, 5) == -1
    assert legendre(11, 5) == 1
    assert legendre(0, 7) == 0


def test_legendre_euler_criterion_exhaustive():
    for p in primes_between(3, 100):
        for a in range(1, p):
            euler = pow(a, (p - 1) // 2, p)
            expect = 1 if euler == 1 else -1
            assert legendre(a, p) == expect


def test_legendre_multiplicative():
    rng = random.Random(2)
    for p in primes_between(3, 60):
        for _ in range(50):
            a, b = rng.randint(1, 10**6), rng.randint(1, 10**6)
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


# --- valued residues -------------------------------------------------------


def test_vr_spec_examples():
    one = ValuedResidue(7, -1, 1, 3)
    r = one * ValuedResidue(7, 1, 1, 3)
    assert (r.e, r.unit, r.kappa) == (0, 1, 3)

    a = ValuedResidue(5, 0, 1, 2) + ValuedResidue(5, 0, 24, 2)
    assert a.is_zero and a.e == 2

    s = ValuedResidue(5, -1, 2, 3) + ValuedResidue(5, 0, 3, 3)
    assert (s.e, s.unit, s.kappa) == (-1, 17, 3)


def test_vr_reduce():
    m25 = Modulus(5, 2)
    assert ValuedResidue(5, 1, 3, 2).reduce(m25).value == 15
    with pytest.raises(NegativeValuation):
        ValuedResidue(5, -1, 2, 4).reduce(m25)
    assert ValuedResidue.zero(5, 4).reduce(Modulus(5, 3)).value == 0
    with pytest.raises(PrecisionExhausted):
        ValuedResidue.zero(5, 1).reduce(m25)
    with pytest.raises(PrecisionExhausted):
        ValuedResidue(5, 1, 3, 2).reduce(Modulus(5, 4))


def test_vr_division_by_fuzzy_zero():
    z = ValuedResidue.zero(5, 2)
    with pytest.raises(PrecisionExhausted):
        ValuedResidue(5, 0, 1, 2) / z


def _vp(q: Fraction, p: int) -> int:
    if q == 0:
        return 10**9
    v, n, d = 0, q.numerator, q.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def test_vr_matches_exact_rationals_randomized():
    # ternary ops on random rationals agree with Fraction arithmetic
    rng = random.Random(3)
    kappa = 4
    for p in (5, 7, 11, 13):
        for _ in range(10**4):
            def rand_q():
                num = rng.randint(-400, 400)
                den = rng.randint(1, 400)
                return Fraction(num, den)

            qa, qb = rand_q(), rand_q()
            if qa.denominator % p == 0 or qb.denominator % p == 0:
                continue
            va = ValuedResidue.from_fraction(qa, p, kappa)
            vb = ValuedResidue.from_fraction(qb, p, kappa)
            op = rng.choice("+*/")
            if op == "+":
                got, want = va + vb, qa + qb
            elif op == "*":
                got, want = va * vb, qa * qb
            else:
                if qb == 0:
                    continue
                got, want = va / vb, qa / qb
            if want == 0:
                assert got.is_zero
                continue
            ref = ValuedResidue.from_fraction(want, p, got.kappa if not got.is_zero else kappa)
            if got.is_zero:
                # cancellation may hide a nonzero value beyond the precision
                assert _vp(want, p) >= got.e
            else:
                assert got.e == ref.e
                assert got.unit == ref.unit % p**got.kappa


def test_vr_addition_precision_bound():
    rng = random.Random(4)
    p = 7
    for _ in range(2000):
        ea, eb = rng.randint(-3, 3), rng.randint(-3, 3)
        ka, kb = rng.randint(1, 5), rng.randint(1, 5)
        ua = rng.randrange(1, p**ka)
        ub = rng.randrange(1, p**kb)
        if ua % p == 0 or ub % p == 0:
            continue
        a = ValuedResidue(p, ea, ua, ka)
        b = ValuedResidue(p, eb, ub, kb)
        s = a + b
        bound = min(a.abs_precision, b.abs_precision)
        if s.is_zero:
            assert s.e <= bound
        else:
            assert s.kappa <= bound - s.e
