"""Prime enumeration: deterministic primality plus a segmented sieve for sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

# Witness set giving deterministic Miller-Rabin for all n < 2^64.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SEGMENT_ODDS = 1 << 16  # odd numbers per sieve segment


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    if n >= 1 << 64:
        raise ValueError("primality testing is deterministic only below 2^64")
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeClass:
    """A congruence class of primes within [p_min, p_max]."""

    modulus: int = 1
    residue: int = 1
    p_min: int = 3
    p_max: int = 10**4

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.modulus > 1 and gcd(self.residue, self.modulus) != 1:
            raise ValueError("residue must be coprime to the modulus")
        if self.p_min < 3:
            raise ValueError("p_min must be >= 3")

    def contains(self, p: int) -> bool:
        return (
            self.p_min <= p <= self.p_max
            and p % self.modulus == self.residue % self.modulus
        )


def _small_sieve(n: int) -> list[int]:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def primes_between(lo: int, hi: int) -> Iterator[int]:
    """Ascending primes in [lo, hi], by a segmented sieve over odd numbers."""
    if hi < 2 or hi < lo:
        return
    if lo <= 2 <= hi:
        yield 2
    lo = max(lo, 3)
    if lo % 2 == 0:
        lo += 1
    base = [p for p in _small_sieve(isqrt(hi)) if p > 2]
    start = lo
    while start <= hi:
        end = min(start + 2 * (_SEGMENT_ODDS - 1), hi)
        if end % 2 == 0:
            end -= 1
        n_odds = (end - start) // 2 + 1
        seg = bytearray(n_odds)
        for p in base:
            if p * p > end:
                break
            first = max(p * p, ((start + p - 1) // p) * p)
            if first % 2 == 0:
                first += p
            if first > end:
                continue
            count = len(range(first, end + 1, 2 * p))
            seg[(first - start) // 2 :: p] = b"\x01" * count
        for i in range(n_odds):
            if not seg[i]:
                yield start + 2 * i
        start = end + 2


def primes_in(cls: PrimeClass) -> Iterator[int]:
    """Primes of the class, ascending. Never yields 2 (p_min >= 3)."""
    want = cls.residue % cls.modulus
    for p in primes_between(cls.p_min, cls.p_max):
        if p % cls.modulus == want:
            yield p
