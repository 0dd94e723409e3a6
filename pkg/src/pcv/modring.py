"""Exact arithmetic in Z/p^k plus valuation-tracked p-adic quantities.

Residue is the home of every congruence-side value. ValuedResidue represents
p^e * u with the unit u known mod p^kappa, i.e. the value is known mod
p^(e+kappa); it is what makes series whose terms have a stray p in a
denominator evaluable at a finite modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .primes import is_prime

MAX_MODULUS = 1 << 127

# Absolute precision assigned to a zero that is known exactly (e.g. the
# reduction of the rational 0). Effectively infinite for any reachable k.
EXACT_ZERO_PREC = 10**9


class ModulusMismatch(ValueError):
    """Operands live in different rings."""


class NotInvertible(ArithmeticError):
    """Division by a multiple of p inside Z/p^k.

    Callers that expect denominators divisible by p must route the value
    through ValuedResidue instead.
    """


class PrecisionExhausted(ArithmeticError):
    """A valued residue no longer carries enough p-adic digits.

    The standard response is to restart the computation at a higher
    working precision.
    """


class NegativeValuation(ArithmeticError):
    """A value with a pole at p was forced into Z/p^k."""


@dataclass(frozen=True)
class Modulus:
    """The ring Z/p^k for an odd prime p."""

    p: int
    k: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"modulus base {self.p} is not an odd prime")
        if self.k < 1:
            raise ValueError("exponent must be >= 1")
        if self.p**self.k >= MAX_MODULUS:
            raise ValueError("p^k exceeds the 127-bit cap")

    @property
    def m(self) -> int:
        return self.p**self.k

    def residue(self, value: int) -> "Residue":
        return Residue(value % self.m, self)

    def __repr__(self):
        return f"Modulus({self.p}^{self.k})"


@dataclass(frozen=True)
class Residue:
    """A canonical element of Z/p^k."""

    value: int
    mod: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.mod.m:
            object.__setattr__(self, "value", self.value % self.mod.m)

    def _coerce(self, other) -> "Residue":
        if isinstance(other, Residue):
            if other.mod != self.mod:
                raise ModulusMismatch(f"{self.mod} vs {other.mod}")
            return other
        if isinstance(other, int):
            return Residue(other % self.mod.m, self.mod)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue((self.value + o.value) % self.mod.m, self.mod)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue((self.value - o.value) % self.mod.m, self.mod)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Residue(-self.value % self.mod.m, self.mod)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o.value % self.mod.m, self.mod)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        if self.value % self.mod.p == 0:
            raise NotInvertible(f"{self.value} is divisible by {self.mod.p}")
        return Residue(pow(self.value, -1, self.mod.m), self.mod)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, n: int) -> "Residue":
        if n < 0:
            return self.inverse() ** (-n)
        return Residue(pow(self.value, n, self.mod.m), self.mod)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value} mod {self.mod.p}^{self.mod.k})"


def rational_to_residue(num: int, den: int, mod: Modulus) -> Residue:
    """num/den reduced into Z/p^k; den must be a unit."""
    if den % mod.p == 0:
        raise NotInvertible(f"denominator {den} divisible by {mod.p}")
    return Residue(num * pow(den, -1, mod.m) % mod.m, mod)


def least_nonneg_residue(num: int, den: int, p: int) -> int:
    """<num/den>_p, the least nonnegative residue mod p."""
    if den % p == 0:
        raise NotInvertible(f"denominator {den} divisible by {p}")
    return num * pow(den, -1, p) % p


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by the quadratic-reciprocity (Jacobi) algorithm."""
    a %= p
    if a == 0:
        return 0
    n = p
    t = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t


def _split_valuation(x: int, p: int) -> tuple[int, int]:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


@dataclass(frozen=True)
class ValuedResidue:
    """p^e * unit with unit known mod p^kappa (so the value mod p^(e+kappa)).

    unit == 0 marks the exact-zero state: a value known to vanish mod p^e,
    with kappa fixed at 0. Addition absorbs into that state on full
    cancellation; only reduction or division can then raise
    PrecisionExhausted.
    """

    p: int
    e: int
    unit: int
    kappa: int

    def __post_init__(self):
        if self.unit == 0:
            if self.kappa != 0:
                raise ValueError("exact zero carries kappa = 0")
        else:
            if self.kappa < 1:
                raise ValueError("nonzero unit needs kappa >= 1")
            if self.unit % self.p == 0 or not 0 < self.unit < self.p**self.kappa:
                raise ValueError("unit must be a reduced element coprime to p")

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def abs_precision(self) -> int:
        """The value is known mod p^abs_precision."""
        return self.e + self.kappa

    @classmethod
    def zero(cls, p: int, prec: int = EXACT_ZERO_PREC) -> "ValuedResidue":
        return cls(p, prec, 0, 0)

    @classmethod
    def one(cls, p: int, kappa: int) -> "ValuedResidue":
        return cls(p, 0, 1, kappa)

    @classmethod
    def from_rational(cls, num: int, den: int, p: int, kappa: int) -> "ValuedResidue":
        """Exact valuation split of num/den, unit reduced mod p^kappa."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if num == 0:
            return cls.zero(p)
        vn, un = _split_valuation(num, p)
        vd, ud = _split_valuation(den, p)
        pk = p**kappa
        unit = un * pow(ud, -1, pk) % pk
        return cls(p, vn - vd, unit, kappa)

    @classmethod
    def from_fraction(cls, q: Fraction, p: int, kappa: int) -> "ValuedResidue":
        return cls.from_rational(q.numerator, q.denominator, p, kappa)

    def _check_p(self, other: "ValuedResidue"):
        if self.p != other.p:
            raise ModulusMismatch(f"p={self.p} vs p={other.p}")

    def __neg__(self):
        if self.is_zero:
            return self
        return ValuedResidue(self.p, self.e, -self.unit % self.p**self.kappa, self.kappa)

    def __add__(self, other: "ValuedResidue") -> "ValuedResidue":
        self._check_p(other)
        p = self.p
        if self.is_zero and other.is_zero:
            return ValuedResidue.zero(p, min(self.e, other.e))
        if self.is_zero or other.is_zero:
            z, v = (self, other) if self.is_zero else (other, self)
            known = min(z.e, v.abs_precision)
            if v.e >= known:
                # the visible part of the sum vanishes at this precision
                return ValuedResidue.zero(p, known)
            kap = known - v.e
            return ValuedResidue(p, v.e, v.unit % p**kap, kap)
        e0 = min(self.e, other.e)
        known = min(self.abs_precision, other.abs_precision)
        width = known - e0
        pw = p**width
        s = 0
        for term in (self, other):
            d = term.e - e0
            if d < width:  # higher shifts vanish mod p^width
                s += term.unit * p**d
        s %= pw
        if s == 0:
            return ValuedResidue.zero(p, known)
        t, u = _split_valuation(s, p)
        kap = width - t
        return ValuedResidue(p, e0 + t, u % p**kap, kap)

    def __sub__(self, other: "ValuedResidue") -> "ValuedResidue":
        return self + (-other)

    def __mul__(self, other: "ValuedResidue") -> "ValuedResidue":
        self._check_p(other)
        p = self.p
        if self.is_zero and other.is_zero:
            return ValuedResidue.zero(p, self.e + other.e)
        if self.is_zero or other.is_zero:
            z, v = (self, other) if self.is_zero else (other, self)
            return ValuedResidue.zero(p, min(z.e + v.e, EXACT_ZERO_PREC))
        kap = min(self.kappa, other.kappa)
        pk = p**kap
        return ValuedResidue(p, self.e + other.e, self.unit * other.unit % pk, kap)

    def __truediv__(self, other: "ValuedResidue") -> "ValuedResidue":
        self._check_p(other)
        if other.is_zero:
            raise PrecisionExhausted(
                "division by a value only known to vanish mod "
                f"{other.p}^{other.e}"
            )
        if self.is_zero:
            return ValuedResidue.zero(self.p, self.e - other.e)
        p = self.p
        kap = min(self.kappa, other.kappa)
        pk = p**kap
        unit = self.unit * pow(other.unit, -1, pk) % pk
        return ValuedResidue(p, self.e - other.e, unit, kap)

    def scale_by_p(self, j: int = 1) -> "ValuedResidue":
        """Multiply by p^j (exact: only shifts the valuation)."""
        if self.is_zero:
            return ValuedResidue.zero(self.p, min(self.e + j, EXACT_ZERO_PREC))
        return ValuedResidue(self.p, self.e + j, self.unit, self.kappa)

    def reduce(self, target: Modulus) -> Residue:
        """The residue mod p^target.k, when the value is known that far."""
        if target.p != self.p:
            raise ModulusMismatch(f"p={self.p} vs p={target.p}")
        if self.is_zero:
            if self.e < target.k:
                raise PrecisionExhausted(
                    f"zero known only mod {self.p}^{self.e}, need {target.k}"
                )
            return Residue(0, target)
        if self.e < 0:
            raise NegativeValuation(f"valuation {self.e} < 0")
        if self.abs_precision < target.k:
            raise PrecisionExhausted(
                f"known mod {self.p}^{self.abs_precision}, need {target.k}"
            )
        return Residue(self.p**self.e * self.unit % target.m, target)

    def __repr__(self):
        if self.is_zero:
            return f"ValuedResidue(0 mod {self.p}^{self.e})"
        return f"ValuedResidue({self.p}^{self.e} * {self.unit}, kappa={self.kappa})"
