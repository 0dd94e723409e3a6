import random
from fractions import Fraction

import pytest

from pcv.exactq import (
    HypSpec,
    Poly,
    ZeroLowerPochhammer,
    coeffid_check,
    ek2004_t20_check,
    gauss_2f1,
    gauss_2f1_padic,
    harmonic_exact,
    hyp2f1,
    pfaff_pair,
    pochhammer_exact,
    polid_check,
    reduce_rational_mod,
    series_term_padic,
    transform_check,
)
from pcv.modring import Modulus
from pcv.primes import primes_between


def test_rational_plumbing():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    # H_5 = 137/60 reduces to 1 mod 11 (137=5, 60=5 mod 11), matching harmonic_prefix
    r = reduce_rational_mod(Fraction(137, 60), Modulus(11, 1))
    assert r.reduce(Modulus(11, 1)).value == 137 * pow(60, -1, 11) % 11 == 1


def test_poly_basics():
    z1 = Poly((1, 1))
    assert (z1**2).coeffs == (Fraction(1), Fraction(2), Fraction(1))
    assert (z1 - z1).degree == -1
    assert Poly((0, 0, 0)).coeffs == ()
    p = Poly((1, 2)) * Poly((3, 0, 1))
    assert p.coeffs == (Fraction(3), Fraction(6), Fraction(1), Fraction(2))
    assert p(2) == (1 + 4) * (3 + 4)
    assert Poly.monomial(3, Fraction(1, 2)).coefficient(3) == Fraction(1, 2)


def test_pochhammer_exact():
    assert pochhammer_exact(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer_exact(-3, 4) == 0
    assert pochhammer_exact(Fraction(1, 3), 2) == Fraction(4, 9)
    assert pochhammer_exact(Fraction(7, 5), 0) == 1


def test_hypspec_validation():
    with pytest.raises(ValueError):
        HypSpec((Fraction(1, 2), Fraction(1, 3)), (Fraction(1),), Fraction(1))
    with pytest.raises(ZeroLowerPochhammer):
        hyp2f1(-4, Fraction(1, 2), -2, 1)
    spec = hyp2f1(-4, Fraction(1, 2), Fraction(1, 3), 1)
    assert spec.termination_index == 4
    assert hyp2f1(-2, -5, Fraction(1, 2), 1).termination_index == 2


def test_gauss_2f1_examples():
    assert gauss_2f1(hyp2f1(-1, 1, 2, 1)) == Fraction(1, 2)
    assert gauss_2f1(hyp2f1(-2, 1, 2, 1)) == Fraction(1, 3)
    val = gauss_2f1(
        hyp2f1(Fraction(-3), Fraction(1, 3) - Fraction(7, 6), Fraction(4, 3) - Fraction(14, 3), -8)
    )
    assert val.denominator % 7 == 0 and (val.denominator // 7) % 7 != 0  # v_7 = -1


def test_gauss_2f1_vs_term_sum():
    rng = random.Random(11)
    for _ in range(60):
        m = rng.randint(0, 7)
        b = Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 5]))
        c = Fraction(rng.randint(1, 9), rng.choice([1, 2, 3, 5])) + 20  # clear of poles
        z = Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3]))
        spec = hyp2f1(-m, b, c, z)
        brute = sum(
            pochhammer_exact(-m, k) * pochhammer_exact(b, k) / pochhammer_exact(c, k)
            * z**k / pochhammer_exact(1, k)
            for k in range(m + 1)
        )
        assert gauss_2f1(spec) == brute


def test_padic_matches_exact_on_instances():
    # oracle equivalence on the theorem-family instances, p <= 100
    from pcv.checks.hyp import (
        series_3k_main,
        series_3k_tail,
        series_5k_main,
        series_5k_tail,
    )

    for p in primes_between(7, 100):
        specs = []
        if p % 3 == 1:
            specs += [series_3k_main(p), series_3k_tail(p)]
        if p % 5 == 1:
            specs += [series_5k_main(p), series_5k_tail(p)]
        for spec in specs:
            exact = gauss_2f1(spec)
            mod = Modulus(p, 2)
            got = gauss_2f1_padic(spec, mod, min_abs_prec=2)
            want = reduce_rational_mod(exact, mod)
            if got.is_zero:
                assert exact == 0 or want.e >= got.e
            else:
                kap = min(got.kappa, want.kappa)
                assert got.e == want.e
                assert got.unit % p**kap == want.unit % p**kap


def test_series_term_padic_matches_exact():
    from pcv.checks.hyp import series_3k_main, series_term_exact

    for p in (7, 13, 19):
        spec = series_3k_main(p)
        for k in (0, 1, (p - 1) // 3, (p - 1) // 2):
            exact = series_term_exact(spec, k)
            got = series_term_padic(spec, k, p, 3)
            want = reduce_rational_mod(exact, Modulus(p, 3))
            assert (got.e, got.unit % p**2) == (want.e, want.unit % p**2)


def test_polid_examples():
    assert polid_check("polid1", 1, 1)
    assert polid_check("polid1", 4, 2)
    assert polid_check("polid2", 3, 3)
    with pytest.raises(ValueError):
        polid_check("polid1", 3, 0)
    with pytest.raises(ValueError):
        polid_check("nope", 2, 1)


def test_polid1_base_case_is_square():
    # n = m = 1: both sides are (z+1)^2
    lhs = Poly((1, 1)) ** 2
    rhs = Poly((1,)) + Poly.monomial(1, harmonic_exact(1) + harmonic_exact(1)) + Poly.monomial(2)
    assert lhs == rhs


def test_coeffid_examples():
    assert coeffid_check(1, 1, 1)
    assert coeffid_check(2, 1, 0)
    assert coeffid_check(3, 2, 3)


def test_transform_examples():
    for tid in ("pfaff_1586", "euler_1581", "quad_15814"):
        assert transform_check(tid, 7)
        assert transform_check(tid, 13)
    with pytest.raises(ValueError):
        transform_check("pfaff_1586", 11)
    with pytest.raises(ValueError):
        transform_check("nope", 7)


def test_pfaff_transform_random_parameters():
    rng = random.Random(12)
    done = 0
    while done < 40:
        m = rng.randint(1, 6)
        b = Fraction(rng.randint(-20, 20), rng.choice([2, 3, 5, 7]))
        c = Fraction(rng.randint(-20, 20), rng.choice([2, 3, 5, 7]))
        z = Fraction(rng.randint(-8, 8), rng.choice([1, 2, 3]))
        if z == 1 or c.denominator == 1 or b.denominator == 1:
            continue
        if (1 - b - m).denominator == 1:
            continue
        lhs, rhs = pfaff_pair(m, b, c, z)
        assert lhs == rhs
        done += 1


def test_ek2004():
    for n in range(6):
        assert ek2004_t20_check(n)
    with pytest.raises(ValueError):
        ek2004_t20_check(-1)


def test_reduce_rational_examples():
    r = reduce_rational_mod(Fraction(483, 512), Modulus(5, 3))
    assert (r.e, r.unit) == (0, 9)
    r = reduce_rational_mod(Fraction(704, 3), Modulus(5, 2))
    assert (r.e, r.unit) == (0, 18)
    r = reduce_rational_mod(Fraction(20, 7), Modulus(7, 2))
    assert (r.e, r.unit) == (-1, 20)
    z = reduce_rational_mod(Fraction(0), Modulus(5, 2))
    assert z.is_zero
