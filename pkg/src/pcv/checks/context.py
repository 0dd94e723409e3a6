"""Per-prime shared state: one pass builds the streams every check consumes."""

from __future__ import annotations

from functools import cached_property

from ..modring import legendre
from ..sequences import DivisibilityViolation


def inverse_table(limit: int, m: int) -> list[int]:
    """Inverses of 1..limit mod m via one inversion and a product sweep."""
    pref = [1] * (limit + 1)
    acc = 1
    for j in range(1, limit + 1):
        acc = acc * j % m
        pref[j] = acc
    inv = [0] * (limit + 1)
    inv_acc = pow(acc, -1, m)
    for j in range(limit, 0, -1):
        inv[j] = pref[j - 1] * inv_acc % m
        inv_acc = inv_acc * j % m
    return inv


class PrimeContext:
    """Everything the checks at one prime share.

    All members are derived lazily and cached; a sweep touches each stream
    exactly once per prime regardless of how many checks consume it.
    """

    def __init__(self, p: int):
        self.p = p

    @cached_property
    def p2(self) -> int:
        return self.p * self.p

    @cached_property
    def p3(self) -> int:
        return self.p * self.p2

    @cached_property
    def n_half(self) -> int:
        return (self.p - 1) // 2

    @cached_property
    def inv3(self) -> list[int]:
        """Inverses of 1..p-1 mod p^3 (reduce for lower moduli)."""
        return inverse_table(self.p - 1, self.p3)

    @cached_property
    def inv1(self) -> list[int]:
        return [v % self.p for v in self.inv3]

    @cached_property
    def cb3(self) -> list[int]:
        """C(2k, k) mod p^3 for k = 0..p-1."""
        p3, inv3 = self.p3, self.inv3
        out = [1] * self.p
        v = 1
        for j in range(1, self.p):
            v = v * (4 * j - 2) % p3 * inv3[j] % p3
            out[j] = v
        return out

    @cached_property
    def row1(self) -> list[int]:
        """C((p-1)/2, k) mod p for k = 0..(p-1)/2."""
        n, p, inv1 = self.n_half, self.p, self.inv1
        out = [1] * (n + 1)
        v = 1
        for j in range(1, n + 1):
            v = v * (n - j + 1) % p * inv1[j] % p
            out[j] = v
        return out

    @cached_property
    def harm1(self) -> list[int]:
        """H_j mod p for j = 0..(p-1)/2."""
        p, inv1 = self.p, self.inv1
        out = [0] * (self.n_half + 1)
        h = 0
        for j in range(1, self.n_half + 1):
            h = (h + inv1[j]) % p
            out[j] = h
        return out

    @cached_property
    def q2_2(self) -> int:
        """q_p(2) mod p^2."""
        return (pow(2, self.p - 1, self.p3) - 1) // self.p % self.p2

    @cached_property
    def q2_1(self) -> int:
        return self.q2_2 % self.p

    @cached_property
    def q3_1(self) -> int:
        """q_p(3) mod p."""
        return (pow(3, self.p - 1, self.p2) - 1) // self.p % self.p

    @cached_property
    def fp_2(self) -> int:
        """Fibonacci quotient mod p^2."""
        p = self.p
        idx = p - legendre(p, 5)
        m = self.p3
        a, b = 0, 1
        for bit in bin(idx)[2:]:
            c = a * ((2 * b - a) % m) % m
            d = (a * a + b * b) % m
            a, b = (d, (c + d) % m) if bit == "1" else (c, d)
        if a % p:
            raise DivisibilityViolation(f"p does not divide F_{idx} at p={p}")
        return a // p % self.p2

    @cached_property
    def fp_1(self) -> int:
        return self.fp_2 % self.p

    @cached_property
    def leg2(self) -> int:
        return legendre(2, self.p)

    @cached_property
    def leg3(self) -> int:
        return legendre(3, self.p)

    @cached_property
    def leg_p5(self) -> int:
        """(p/5), the symbol steering the Fibonacci index."""
        return legendre(self.p, 5)
