"""The arithmetic sequences of the problem as modular streams.

Everything is generated incrementally in O(1) ring operations per element;
no factorial tables. Quotient sequences (Fermat, Fibonacci) compute one
extra p-adic digit and divide exactly rather than reducing a rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .modring import Modulus, NotInvertible, Residue, ValuedResidue, legendre


class DivisibilityViolation(ArithmeticError):
    """An integer division guaranteed by a classical theorem failed."""


def fermat_quotient(a: int, p: int, k: int = 1) -> Residue:
    """q_p(a) = (a^(p-1) - 1)/p as an element of Z/p^k."""
    if a % p == 0:
        raise NotInvertible(f"{a} divisible by {p}")
    if k < 1:
        raise ValueError("precision must be >= 1")
    mod = Modulus(p, k)
    t = pow(a, p - 1, p ** (k + 1)) - 1
    # exact by Fermat's little theorem
    return Residue(t // p % mod.m, mod)


def fibonacci_mod(n: int, mod: Modulus) -> Residue:
    """F_n mod p^k by fast doubling (F_0 = 0, F_1 = 1)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    m = mod.m
    a, b = 0, 1  # F(j), F(j+1) for the prefix j of n's bits
    for bit in bin(n)[2:] if n else "":
        c = a * ((2 * b - a) % m) % m
        d = (a * a + b * b) % m
        if bit == "1":
            a, b = d, (c + d) % m
        else:
            a, b = c, d
    return Residue(a, mod)


def fibonacci_quotient(p: int, k: int = 1) -> Residue:
    """f_p = F_{p - (p/5)} / p as an element of Z/p^k."""
    if p == 5:
        raise ValueError("the Fibonacci quotient is undefined at p = 5")
    if k < 1:
        raise ValueError("precision must be >= 1")
    mod = Modulus(p, k)
    idx = p - legendre(p, 5)
    f = fibonacci_mod(idx, Modulus(p, k + 1)).value
    if f % p != 0:
        raise DivisibilityViolation(f"p does not divide F_{idx} at p={p}")
    return Residue(f // p % mod.m, mod)


def harmonic_prefix(n_max: int, mod: Modulus) -> Iterator[Residue]:
    """H_0, H_1, ..., H_{n_max} mod p^k; requires n_max < p."""
    if n_max >= mod.p:
        raise ValueError(f"n_max={n_max} not below p={mod.p}")
    m = mod.m
    h = 0
    yield Residue(0, mod)
    for j in range(1, n_max + 1):
        h = (h + pow(j, -1, m)) % m
        yield Residue(h, mod)


def alt_harmonic(p: int, bound: int | None = None) -> Residue:
    """sum_{k=1}^{bound} (-1)^k / k mod p, bound defaulting to floor(4p/5)."""
    if bound is None:
        bound = 4 * p // 5
    if bound >= p:
        raise ValueError(f"bound={bound} not below p={p}")
    mod = Modulus(p, 1)
    s = 0
    for j in range(1, bound + 1):
        inv = pow(j, -1, p)
        s = (s - inv) % p if j % 2 else (s + inv) % p
    return Residue(s, mod)


def central_binomial_stream(p: int, k: int, n_max: int) -> Iterator[Residue]:
    """C(2j, j) mod p^k for j = 0..n_max, with n_max < p.

    Each step multiplies by 2(2j-1) and divides by j; the divisor stays
    coprime to p on the whole range, so the stream is exact in the ring.
    """
    if n_max >= p:
        raise ValueError(f"n_max={n_max} not below p={p}")
    mod = Modulus(p, k)
    m = mod.m
    v = 1
    yield Residue(1, mod)
    for j in range(1, n_max + 1):
        v = v * (4 * j - 2) % m * pow(j, -1, m) % m
        yield Residue(v, mod)


def binomial_row(n: int, mod: Modulus) -> Iterator[Residue]:
    """C(n, 0..n) mod p^k by the Pascal-row recurrence; requires n < p."""
    if n >= mod.p:
        raise ValueError(f"n={n} not below p={mod.p}")
    m = mod.m
    v = 1
    yield Residue(1, mod)
    for j in range(1, n + 1):
        v = v * (n - j + 1) % m * pow(j, -1, m) % m
        yield Residue(v, mod)


def pochhammer_mod(
    a: Fraction | int, j: int, mod: Modulus, kappa: int | None = None
) -> ValuedResidue:
    """Rising factorial (a)_j as a ValuedResidue.

    Factors divisible by p go into the valuation, so the result stays
    meaningful even when the plain residue of the product would be 0.
    """
    a = Fraction(a)
    if a.denominator % mod.p == 0:
        raise NotInvertible(f"denominator of {a} divisible by {mod.p}")
    if kappa is None:
        kappa = mod.k
    acc = ValuedResidue.one(mod.p, kappa)
    for i in range(j):
        f = a + i
        acc = acc * ValuedResidue.from_rational(
            f.numerator, f.denominator, mod.p, kappa
        )
    return acc
