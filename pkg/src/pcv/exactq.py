"""Exact rational and polynomial arithmetic: the ground-truth oracle layer.

Rationals are stdlib fractions.Fraction. On top of them sit a small dense
polynomial type, the terminating Gauss series in both an exact and a p-adic
evaluation, the two partial-fraction polynomial identities with their
coefficient identity, and the classical series transformations used by the
congruence suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .modring import Modulus, PrecisionExhausted, ValuedResidue

Rational = Fraction


class ZeroLowerPochhammer(ZeroDivisionError):
    """A lower parameter annihilates a denominator inside the truncation range."""


def pochhammer_exact(a: Fraction | int, j: int) -> Fraction:
    """Rising factorial (a)_j; the empty product is 1."""
    a = Fraction(a)
    out = Fraction(1)
    for i in range(j):
        out *= a + i
    return out


def harmonic_exact(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


class Poly:
    """Dense polynomial over Fraction, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def _nonpositive_int(q: Fraction) -> bool:
    return q.denominator == 1 and q.numerator <= 0


@dataclass(frozen=True)
class HypSpec:
    """A terminating hypergeometric series sum_k prod(upper)_k/prod(lower)_k z^k/k!."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        object.__setattr__(self, "z", Fraction(self.z))
        if not any(_nonpositive_int(a) for a in self.upper):
            raise ValueError("series does not terminate: no nonpositive-integer upper parameter")
        m = self.termination_index
        for b in self.lower:
            if _nonpositive_int(b) and -b.numerator < m:
                raise ZeroLowerPochhammer(
                    f"lower parameter {b} vanishes inside the first {m} terms"
                )

    @property
    def termination_index(self) -> int:
        return min(-a.numerator for a in self.upper if _nonpositive_int(a))


def hyp2f1(a, b, c, z) -> HypSpec:
    return HypSpec((Fraction(a), Fraction(b)), (Fraction(c),), Fraction(z))


def gauss_2f1(spec: HypSpec) -> Fraction:
    """Exact value of the terminating series.

    The running term is kept as an unreduced integer pair; only the sum is
    normalized, which keeps the evaluation fast for a few hundred terms.
    """
    m = spec.termination_index
    s = Fraction(0)
    tn, td = 1, 1
    for k in range(m + 1):
        s += Fraction(tn, td)
        if k == m:
            break
        for a in spec.upper:
            tn *= a.numerator + k * a.denominator
            td *= a.denominator
        for b in spec.lower:
            td *= b.numerator + k * b.denominator
            tn *= b.denominator
        tn *= spec.z.numerator
        td *= spec.z.denominator * (k + 1)
        if td == 0:
            raise ZeroLowerPochhammer("lower parameter hit zero during summation")
        if tn == 0:
            break
    return s


def gauss_2f1_padic(
    spec: HypSpec,
    mod: Modulus,
    *,
    guard: int = 2,
    min_abs_prec: int | None = None,
    max_attempts: int = 6,
) -> ValuedResidue:
    """The same series evaluated through valuation-tracked modular arithmetic.

    Starts at working precision mod.k + guard and retries with two more
    digits whenever cancellation leaves less than the requested absolute
    precision. Agrees with gauss_2f1 followed by valuation extraction.
    """
    target = mod.k if min_abs_prec is None else min_abs_prec
    kappa = mod.k + guard
    p = mod.p
    for _ in range(max_attempts):
        out = _eval_2f1_vr(spec, p, kappa)
        if out.abs_precision >= target:
            return out
        kappa += 2
    raise PrecisionExhausted(
        f"series value not determined mod {p}^{target} after {max_attempts} attempts"
    )


def _eval_2f1_vr(spec: HypSpec, p: int, kappa: int) -> ValuedResidue:
    m = spec.termination_index
    s = ValuedResidue.zero(p)
    t = ValuedResidue.one(p, kappa)
    for k in range(m + 1):
        s = s + t
        if k == m or t.is_zero:
            break
        for a in spec.upper:
            t = t * ValuedResidue.from_rational(
                a.numerator + k * a.denominator, a.denominator, p, kappa
            )
        for b in spec.lower:
            t = t / ValuedResidue.from_rational(
                b.numerator + k * b.denominator, b.denominator, p, kappa
            )
        t = t * ValuedResidue.from_rational(
            spec.z.numerator, spec.z.denominator * (k + 1), p, kappa
        )
    return s


def reduce_rational_mod(r: Fraction, mod: Modulus) -> ValuedResidue:
    """Valuation split of an exact rational, unit reduced mod p^mod.k."""
    return ValuedResidue.from_rational(r.numerator, r.denominator, mod.p, mod.k)


def series_term_padic(spec: HypSpec, k: int, p: int, kappa: int) -> ValuedResidue:
    """The k-th term of the series as a valuation-tracked residue."""
    t = ValuedResidue.one(p, kappa)
    for a in spec.upper:
        for i in range(k):
            f = a + i
            t = t * ValuedResidue.from_rational(f.numerator, f.denominator, p, kappa)
    for b in spec.lower:
        for i in range(k):
            f = b + i
            t = t / ValuedResidue.from_rational(f.numerator, f.denominator, p, kappa)
    zk = spec.z**k
    t = t * ValuedResidue.from_rational(zk.numerator, zk.denominator, p, kappa)
    return t / ValuedResidue.from_rational(factorial(k), 1, p, kappa)


# ---------------------------------------------------------------------------
# Partial-fraction polynomial identities and their coefficient form.
# ---------------------------------------------------------------------------


def _skip_sum_poly(n: int, m: int) -> Poly:
    """sum_{k=0..n, k != m} C(n,k) z^(n-k) / (k-m)."""
    out = Poly()
    for k in range(n + 1):
        if k == m:
            continue
        out = out + Poly.monomial(n - k, Fraction(comb(n, k), k - m))
    return out


def polid_check(which: str, n: int, m: int) -> bool:
    """Compare both sides of one of the two degree-(n+m) identities exactly."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    hn, hm, hnm = harmonic_exact(n), harmonic_exact(m), harmonic_exact(n - m)
    z1n1 = Poly((1, 1)) ** (n + 1)
    skip = _skip_sum_poly(n, m)
    if which == "polid1":
        lhs = z1n1 * Poly(Fraction(1, comb(n - 1, k)) for k in range(m)) * Fraction(1, n)
        rhs = (
            Poly(Fraction(comb(n, n - d), n - d) for d in range(n))  # k = n-d
            + Poly.monomial(n, hn + hm - hnm)
            - Poly.monomial(m, Fraction(1, comb(n, m))) * skip
        )
    elif which == "polid2":
        lhs = (
            z1n1
            * Poly.monomial(m)
            * Poly(Fraction(1, comb(n - 1, k + m)) for k in range(n - m))
            * Fraction(1, n)
        )
        rhs = (
            Poly.monomial(n) * Poly([0] + [Fraction(comb(n, k), k) for k in range(1, n + 1)])
            + Poly.monomial(n, hn - hm + hnm)
            + Poly.monomial(m, Fraction(1, comb(n, m))) * skip
        )
    else:
        raise ValueError(f"unknown identity {which!r}")
    return lhs == rhs


def _comb0(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def coeffid_check(n: int, m: int, d: int) -> bool:
    """The coefficient identity behind the polynomial ones, one (n, m, d) cell."""
    if not (1 <= m <= n and 0 <= d <= n + m):
        raise ValueError("need 1 <= m <= n and 0 <= d <= n+m")
    lhs = Fraction(1, n) * sum(
        (Fraction(_comb0(n + 1, d - k), comb(n - 1, k)) for k in range(m)), Fraction(0)
    )
    if d == n:
        rhs = harmonic_exact(n) + harmonic_exact(m) - harmonic_exact(n - m)
    else:
        rhs = Fraction(1, n - d) * (
            _comb0(n, n - d) - Fraction(_comb0(n, n + m - d), comb(n, m))
        )
    return lhs == rhs


# ---------------------------------------------------------------------------
# Classical transformations of the terminating Gauss series.
# ---------------------------------------------------------------------------


def pfaff_pair(m: int, b: Fraction, c: Fraction, z: Fraction) -> tuple[Fraction, Fraction]:
    """Both sides of 2F1(-m, b; c; z) = (b)_m/(c)_m (1-z)^m 2F1(-m, c-b; 1-b-m; 1/(1-z))."""
    b, c, z = Fraction(b), Fraction(c), Fraction(z)
    lhs = gauss_2f1(hyp2f1(-m, b, c, z))
    pref = pochhammer_exact(b, m) / pochhammer_exact(c, m) * (1 - z) ** m
    rhs = pref * gauss_2f1(hyp2f1(-m, c - b, 1 - b - m, 1 / (1 - z)))
    return lhs, rhs


def transform_check(tid: str, p: int, trace: dict | None = None) -> bool:
    """One of the three transformed-series identities at a concrete prime.

    All sides are exact rationals; equality is exact. Requires p = 1 (mod 6)
    so every series involved terminates.
    """
    if p % 6 != 1:
        raise ValueError("transform instances need p = 1 (mod 6)")
    n = (p - 1) // 2
    m3 = (p - 1) // 3
    m6 = (p - 1) // 6
    half = Fraction(1 - p, 2)
    if tid == "pfaff_1586":
        b = Fraction(1, 3) - Fraction(p, 6)
        c = Fraction(4, 3) - Fraction(2 * p, 3)
        lhs = gauss_2f1(hyp2f1(half, b, c, -8))
        pref = pochhammer_exact(b, n) / pochhammer_exact(c, n) * Fraction(9) ** n
        rhs = pref * gauss_2f1(
            hyp2f1(half, 1 - Fraction(p, 2), Fraction(7, 6) - Fraction(p, 3), Fraction(1, 9))
        )
    elif tid == "euler_1581":
        a = Fraction(1 - p, 3)
        b = Fraction(2, 3) + Fraction(p, 3)
        c = Fraction(4, 3) + Fraction(2 * p, 3)
        lhs = gauss_2f1(hyp2f1(a, b, c, -1))
        rhs = Fraction(2) ** m3 * gauss_2f1(hyp2f1(a, b, c, Fraction(1, 2)))
    elif tid == "quad_15814":
        lhs = gauss_2f1(
            hyp2f1(
                Fraction(1 - p, 6),
                Fraction(1, 2) + Fraction(p, 2),
                Fraction(7, 6) + Fraction(p, 3),
                Fraction(-1, 8),
            )
        )
        rhs = Fraction(1, 2) ** m6 * gauss_2f1(
            hyp2f1(
                Fraction(1 - p, 3),
                Fraction(2, 3) + Fraction(p, 3),
                Fraction(4, 3) + Fraction(2 * p, 3),
                -1,
            )
        )
    else:
        raise ValueError(f"unknown transform {tid!r}")
    if trace is not None:
        trace["lhs exact"] = str(lhs)
        trace["rhs exact"] = str(rhs)
    return lhs == rhs


def ek2004_t20_check(n: int) -> bool:
    """The 1/5-argument evaluation and its shifted variant, exactly.

    Every gamma ratio of the original statement reduces to Pochhammer
    symbols, so both sides are rational.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = gauss_2f1(hyp2f1(-n, Fraction(1, 2) - n, 4 * n + Fraction(3, 2), Fraction(1, 5)))
    rhs = (
        Fraction(2) ** (10 * n)
        * pochhammer_exact(Fraction(3, 2), 4 * n)
        / (
            Fraction(5) ** (6 * n)
            * pochhammer_exact(Fraction(4, 5), 2 * n)
            * pochhammer_exact(Fraction(6, 5), 2 * n)
        )
    )
    lhs2 = gauss_2f1(hyp2f1(-n, Fraction(1, 2) - n, 4 * n + Fraction(5, 2), Fraction(1, 5)))
    rhs2 = (
        Fraction(2) ** (10 * n)
        * pochhammer_exact(Fraction(5, 2), 4 * n)
        / (
            Fraction(5) ** (6 * n)
            * pochhammer_exact(Fraction(7, 5), 2 * n)
            * pochhammer_exact(Fraction(8, 5), 2 * n)
        )
    )
    return lhs == rhs and lhs2 == rhs2
