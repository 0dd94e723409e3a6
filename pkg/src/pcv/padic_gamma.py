"""Morita's p-adic gamma function at residues mod p^k.

Values come from the defining product over units below the argument's least
nonnegative residue. The function is 1-Lipschitz, so the value mod p^k only
depends on the argument mod p^k; that is what makes the direct product a
complete algorithm at small moduli.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .modring import Modulus, NotInvertible, Residue

MAX_GAMMA_MODULUS = 10**7  # the direct product costs O(p^k)
_TABLE_LIMIT = 1 << 21


@lru_cache(maxsize=4)
def _unit_prefix_products(p: int, k: int) -> list[int]:
    """table[r] = prod_{1 <= j < r, p !| j} j mod p^k for r in [0, p^k)."""
    m = p**k
    table = [1] * m
    acc = 1
    for j in range(1, m):
        table[j] = acc
        if j % p:
            acc = acc * j % m
    return table


def gamma_int(r: int, mod: Modulus) -> int:
    """(-1)^r prod_{1 <= j < r, p !| j} j mod p^k for an integer residue r."""
    m = mod.m
    r %= m
    if m <= _TABLE_LIMIT:
        prod = _unit_prefix_products(mod.p, mod.k)[r]
    else:
        prod = 1
        for j in range(1, r):
            if j % mod.p:
                prod = prod * j % m
    return -prod % m if r % 2 else prod % m


def gamma_p(arg: Fraction | int, mod: Modulus) -> Residue:
    """Gamma_p at a rational argument with unit denominator; Gamma_p(0) = 1."""
    if mod.m > MAX_GAMMA_MODULUS:
        raise ValueError(f"modulus {mod.m} beyond the O(p^k) cost bound")
    arg = Fraction(arg)
    if arg.denominator % mod.p == 0:
        raise NotInvertible(f"denominator of {arg} divisible by {mod.p}")
    r = arg.numerator * pow(arg.denominator, -1, mod.m) % mod.m
    return Residue(gamma_int(r, mod), mod)


def functional_eq_check(x: Fraction | int, mod: Modulus) -> bool:
    """Gamma_p(x+1) = -x Gamma_p(x) for units, = -Gamma_p(x) when p | x."""
    x = Fraction(x)
    g0 = gamma_p(x, mod)
    g1 = gamma_p(x + 1, mod)
    r = x.numerator * pow(x.denominator, -1, mod.m) % mod.m
    expected = -g0 if r % mod.p == 0 else Residue(-r % mod.m, mod) * g0
    return g1 == expected


def logderiv_fd(alpha: Fraction | int, p: int) -> Residue:
    """Logarithmic derivative of Gamma_p at alpha mod p, by finite difference.

    (Gamma_p(a+p) - Gamma_p(a)) / (p Gamma_p(a)) computed mod p^2 is correct
    mod p because Gamma_p is locally analytic with integral derivatives.
    """
    if p > 2000:
        raise ValueError("finite-difference log derivative capped at p <= 2000")
    mod2 = Modulus(p, 2)
    alpha = Fraction(alpha)
    if alpha.denominator % p == 0:
        raise NotInvertible(f"denominator of {alpha} divisible by {p}")
    r = alpha.numerator * pow(alpha.denominator, -1, mod2.m) % mod2.m
    g0 = gamma_int(r, mod2)
    g1 = gamma_int(r + p, mod2)
    diff = (g1 - g0) % mod2.m
    # Lipschitz continuity forces p | diff
    quot = diff // p
    return Residue(quot * pow(g0, -1, p) % p, Modulus(p, 1))
