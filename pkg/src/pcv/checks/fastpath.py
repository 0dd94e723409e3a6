"""Compiled sweep kernel for the O(p) check family.

One jitted pass per prime computes every sweepable check, sharing the
central-binomial stream, the inverse table and the harmonic prefix. Residues
match the pure-Python reference bit for bit (tests pin this); the kernel
exists purely for sweep throughput.

Modular products use the float-quotient trick: q ~= a*b/m in double, the
remainder recovered through wrapping uint64 arithmetic. Exact for moduli
below ~2^51, hence the cap on p (p^3 must stay below the bound).
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap if not (args and callable(args[0])) else args[0]


FAST_LIMIT = 140_000  # p^3 < 2^52 keeps the mulmod quotient within +-2

FAST_IDS = (
    "ncong1",
    "ncong2c",
    "ncong2_literal",
    "pansun34",
    "mao_2p3",
    "mao_5p6",
    "mcong1",
    "mcong2",
    "mcong3",
    "mcong4",
    "macong3",
    "macong5",
    "lemmaL_half",
    "lemmaL_third",
    "lemmaL_sixth",
    "lemmaMTc",
    "lemmaMT_literal",
    "w5",
    "myw",
    "sunlemma",
    "sunlemma_literal",
    "binom_half",
    "mt_fib",
    "suntj_full",
    "suntj_half",
    "gp21",
    "gp22",
)
_IDX = {cid: i for i, cid in enumerate(FAST_IDS)}

_K_EFF = {
    "ncong1": 3, "ncong2c": 3, "ncong2_literal": 3, "pansun34": 2,
    "mao_2p3": 2, "mao_5p6": 2, "mcong1": 2, "mcong2": 2, "mcong3": 2,
    "mcong4": 2, "macong3": 1, "macong5": 1, "lemmaL_half": 1,
    "lemmaL_third": 1, "lemmaL_sixth": 1, "lemmaMTc": 2, "lemmaMT_literal": 2,
    "w5": 1, "myw": 1, "sunlemma": 2, "sunlemma_literal": 2, "binom_half": 1,
    "mt_fib": 2, "suntj_full": 3, "suntj_half": 3, "gp21": 2, "gp22": 2,
}


def available() -> bool:
    return HAVE_NUMBA


def covers(check_id: str, p: int) -> bool:
    return HAVE_NUMBA and check_id in _IDX and 3 <= p <= FAST_LIMIT


def run_prime(p: int) -> dict:
    """All fast-path checks at one prime: id -> (lhs, rhs, k_eff)."""
    lhs, rhs = _kernel(p)
    return {
        cid: (int(lhs[i]), int(rhs[i]), _K_EFF[cid]) for cid, i in _IDX.items()
    }


@njit(cache=True)
def _mulmod(a, b, m):
    q = np.int64(np.float64(a) * np.float64(b) / np.float64(m))
    r = np.int64(np.uint64(a) * np.uint64(b) - np.uint64(q) * np.uint64(m))
    while r < 0:
        r += m
    while r >= m:
        r -= m
    return r


@njit(cache=True)
def _powmod(a, e, m):
    a %= m
    r = np.int64(1 % m)
    while e > 0:
        if e & 1:
            r = _mulmod(r, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return r


@njit(cache=True)
def _invmod(a, m):
    # extended Euclid; a coprime to m
    old_r, r = np.int64(a % m), np.int64(m)
    old_s, s = np.int64(1), np.int64(0)
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % m


@njit(cache=True)
def _legendre(a, p):
    a %= p
    if a == 0:
        return np.int64(0)
    r = _powmod(a, (p - 1) // 2, p)
    if r == 1:
        return np.int64(1)
    return np.int64(-1)


@njit(cache=True)
def _fib_quotient2(p, p2, p3):
    # f_p mod p^2 via fast doubling of F_{p-(p/5)} mod p^3
    leg = _legendre(p % 5, 5)
    idx = p - leg
    a = np.int64(0)
    b = np.int64(1)
    started = False
    for shift in range(62, -1, -1):
        bit = (idx >> shift) & 1
        if not started:
            if bit == 0:
                continue
            started = True
        c = _mulmod(a, (2 * b - a) % p3, p3)
        d = (_mulmod(a, a, p3) + _mulmod(b, b, p3)) % p3
        if bit:
            a, b = d, (c + d) % p3
        else:
            a, b = c, d
    return (a // p) % p2


@njit(cache=True)
def _kernel(p):
    p = np.int64(p)
    p2 = p * p
    p3 = p2 * p
    n = (p - 1) // 2
    lhs = np.zeros(27, np.int64)
    rhs = np.zeros(27, np.int64)

    # shared tables: inverses mod p^3, central binomials mod p^3,
    # binomial half-row and harmonic prefix mod p
    pref = np.empty(p, np.int64)
    pref[0] = 1
    for j in range(1, p):
        pref[j] = _mulmod(pref[j - 1], j, p3)
    inv3 = np.empty(p, np.int64)
    inv_acc = _invmod(pref[p - 1], p3)
    for j in range(p - 1, 0, -1):
        inv3[j] = _mulmod(pref[j - 1], inv_acc, p3)
        inv_acc = _mulmod(inv_acc, j, p3)
    inv3[0] = 0

    cb = np.empty(p, np.int64)
    cb[0] = 1
    for j in range(1, p):
        cb[j] = _mulmod(_mulmod(cb[j - 1], (4 * j - 2) % p3, p3), inv3[j], p3)

    row = np.empty(n + 1, np.int64)
    row[0] = 1
    for j in range(1, n + 1):
        row[j] = row[j - 1] * ((n - j + 1) % p) % p * (inv3[j] % p) % p

    H = np.zeros(n + 1, np.int64)
    for j in range(1, n + 1):
        H[j] = (H[j - 1] + inv3[j] % p) % p

    q2_2 = (_powmod(2, p - 1, p3) - 1) // p  # mod p^2
    q2_1 = q2_2 % p
    q3_1 = ((_powmod(3, p - 1, p2) - 1) // p) % p
    fp_2 = _fib_quotient2(p, p2, p3)
    fp_1 = fp_2 % p
    leg2 = _legendre(2, p)
    leg3 = _legendre(3, p)
    leg_p5 = _legendre(p % 5, 5)

    c23 = 2 * p // 3
    c34 = 3 * p // 4
    c45 = 4 * p // 5
    c56 = 5 * p // 6
    c710 = 7 * p // 10

    # series at -2 mod p^3: ncong1 (full), mcong1 (to 2p/3, from k=1, mod p^2)
    s = np.int64(0)
    w = np.int64(1)
    mneg2 = (-2) % p3
    snap23 = np.int64(0)
    for k in range(p):
        s = (s + _mulmod(cb[k], w, p3)) % p3
        if k == c23:
            snap23 = s
        w = _mulmod(w, mneg2, p3)
    lhs[0] = s  # ncong1
    rhs[0] = (1 - _mulmod((4 * p) % p3, _mulmod(q2_2, _invmod(3, p3), p3), p3)) % p3
    lhs[6] = (snap23 - 1) % p2  # mcong1
    rhs[6] = 0

    # series at -1 mod p^3: suntj_full (full), mcong3 (to 4p/5, from k=1, mod p^2)
    s = np.int64(0)
    sign = np.int64(1)
    snap45 = np.int64(0)
    for k in range(p):
        if sign == 1:
            s = (s + cb[k]) % p3
        else:
            s = (s - cb[k]) % p3
        if k == c45:
            snap45 = s
        sign = -sign
    lhs[23] = s  # suntj_full
    rhs[23] = (leg_p5 * ((1 - _mulmod((2 * p) % p3, fp_2, p3)) % p3)) % p3
    lhs[8] = (snap45 - 1) % p2  # mcong3
    rhs[8] = 0

    # series at 1/(-32) mod p^3: ncong2c / literal (to n), mcong2 (to 5p/6, mod p^2)
    s = np.int64(0)
    w = np.int64(1)
    i32 = _invmod((-32) % p3, p3)
    snap_n = np.int64(0)
    for k in range(c56 + 1):
        s = (s + _mulmod(cb[k], w, p3)) % p3
        if k == n:
            snap_n = s
        w = _mulmod(w, i32, p3)
    lhs[1] = snap_n
    lhs[2] = snap_n
    base = (1 + _mulmod(p * q2_2 % p3, _invmod(6, p3), p3)) % p3
    sq = _mulmod(q2_2, q2_2, p3)
    rhs[1] = (leg2 * ((base - _mulmod(p2 % p3, _mulmod(sq, _invmod(8, p3), p3), p3)) % p3)) % p3
    rhs[2] = (leg2 * ((base - _mulmod(p2 % p3, _mulmod(q2_2, _invmod(8, p3), p3), p3)) % p3)) % p3
    lhs[7] = s % p2  # mcong2
    rhs[7] = leg2 % p2

    # series at 1/16 mod p^2 to 5p/6: mao_5p6
    s = np.int64(0)
    w = np.int64(1)
    i16 = _invmod(16, p2)
    for k in range(c56 + 1):
        s = (s + _mulmod(cb[k] % p2, w, p2)) % p2
        w = _mulmod(w, i16, p2)
    lhs[5] = s
    rhs[5] = leg3 % p2

    # plain series mod p^2 to 2p/3, from k=1: mao_2p3
    s = np.int64(0)
    for k in range(1, c23 + 1):
        s = (s + cb[k]) % p2
    lhs[4] = s
    rhs[4] = 0

    # series at 1/(-4) mod p^2 to 3p/4: pansun34
    s = np.int64(0)
    w = np.int64(1)
    i4 = _invmod((-4) % p2, p2)
    for k in range(c34 + 1):
        s = (s + _mulmod(cb[k] % p2, w, p2)) % p2
        w = _mulmod(w, i4, p2)
    lhs[3] = s
    rhs[3] = leg2 % p2

    # series at 1/(-16) mod p^3: suntj_half (to n), mcong4 (to 7p/10, k>=1, mod p^2)
    s = np.int64(0)
    w = np.int64(1)
    i16n = _invmod((-16) % p3, p3)
    snap_n = np.int64(0)
    for k in range(c710 + 1):
        s = (s + _mulmod(cb[k], w, p3)) % p3
        if k == n:
            snap_n = s
        w = _mulmod(w, i16n, p3)
    lhs[24] = snap_n  # suntj_half
    rhs[24] = (leg_p5 * ((1 + _mulmod(p * fp_2 % p3, _invmod(2, p3), p3)) % p3)) % p3
    lhs[9] = (s - 1) % p2  # mcong4
    rhs[9] = 0

    # 1/k-weighted series mod p^2: lemmaMTc / literal (x=-2), mt_fib (x=-1)
    s2m = np.int64(0)
    s1m = np.int64(0)
    w = np.int64(1)
    mneg2b = (-2) % p2
    sign = np.int64(1)
    for k in range(1, p):
        w = _mulmod(w, mneg2b, p2)
        ik = inv3[k] % p2
        s2m = (s2m + _mulmod(_mulmod(cb[k] % p2, w, p2), ik, p2)) % p2
        t = _mulmod(cb[k] % p2, ik, p2)
        sign = -sign
        if sign == 1:
            s1m = (s1m + t) % p2
        else:
            s1m = (s1m - t) % p2
    lhs[15] = s2m
    rhs[15] = ((-4 * q2_2) % p2 + _mulmod((4 * p) % p2, _mulmod(q2_2, q2_2, p2), p2)) % p2
    lhs[16] = s2m
    rhs[16] = ((-4 * q2_2) % p2 + _mulmod((4 * p) % p2, q2_2 % p2, p2)) % p2
    lhs[22] = s1m
    rhs[22] = ((-5 * fp_2) % p2 + _mulmod((5 * p) % p2, _mulmod(fp_2, fp_2, p2), p2)) % p2

    # harmonic facts mod p: lemmaL trio, w5, myw
    lhs[12] = H[p // 2]
    rhs[12] = (-2 * q2_1) % p
    lhs[13] = H[p // 3]
    rhs[13] = (-3 * q3_1) % p * _invmod(2, p) % p
    lhs[14] = H[p // 6]
    rhs[14] = ((-2 * q2_1) % p + (-3 * q3_1) % p * _invmod(2, p) % p) % p
    s = np.int64(0)
    for k in range(1, c45 + 1):
        if k & 1:
            s = (s - inv3[k]) % p
        else:
            s = (s + inv3[k]) % p
    lhs[17] = s
    rhs[17] = 5 * fp_1 % p * _invmod(2, p) % p
    if p % 5 == 1:
        m5 = (p - 1) // 5
        nm = 3 * (p - 1) // 10
        lhs[18] = (H[n] + H[m5] - H[nm]) % p
        rhs[18] = (-5 * fp_1) % p

    # macong3 / macong5 row sums mod p
    if p % 3 == 1:
        cut = (p - 1) // 3
        s = np.int64(0)
        w = np.int64(1)
        for k in range(n + 1):
            if k != cut:
                s = (s + row[k] * w % p * (inv3[(3 * k + 1) % p] % p)) % p
            w = w * 8 % p
        lhs[10] = s
        rhs[10] = (-row[cut] * q2_1) % p * (inv3[3] % p) % p
    if p % 5 == 1:
        cut = (p - 1) // 5
        s = np.int64(0)
        w = np.int64(1)
        for k in range(n + 1):
            if k != cut:
                s = (s + row[k] * w % p * (inv3[(5 * k + 1) % p] % p)) % p
            w = w * 4 % p
        lhs[11] = s
        rhs[11] = (-_powmod(4, cut, p) * row[cut]) % p * fp_1 % p

    # sunlemma, corrected range then printed range: first mismatch wins
    target = (-2 * p) % p2
    for k in range(1, n + 1):
        val = _mulmod(_mulmod(k, cb[k] % p2, p2), cb[p - k] % p2, p2)
        if val != target:
            lhs[19] = val
            rhs[19] = target
            break
    for k in range(n, p):
        val = _mulmod(_mulmod(k % p2, cb[k] % p2, p2), cb[p - k] % p2, p2)
        if val != target:
            lhs[20] = val
            rhs[20] = target
            break

    # binom_half
    w = np.int64(1)
    m4 = (-4) % p
    for k in range(n + 1):
        a = cb[k] % p
        b = row[k] * w % p
        if a != b:
            lhs[21] = a
            rhs[21] = b
            break
        w = w * m4 % p

    # gp21 / gp22 over the class cuts and x in {-2, -1, 1, 2, 3}
    cuts = np.empty(4, np.int64)
    ncuts = 0
    if p % 3 == 1:
        cuts[ncuts] = (p - 1) // 3
        ncuts += 1
        cuts[ncuts] = (p - 1) // 6
        ncuts += 1
    if p % 5 == 1:
        cuts[ncuts] = (p - 1) // 5
        ncuts += 1
        cuts[ncuts] = 3 * (p - 1) // 10
        ncuts += 1
    if ncuts > 0:
        xs = np.empty(5, np.int64)
        xs[0] = -2
        xs[1] = -1
        xs[2] = 1
        xs[3] = 2
        xs[4] = 3
        S = np.empty(p, np.int64)  # prefix sums from k=1, mod p^2
        done21 = False
        done22 = False
        for xi in range(5):
            if done21 and done22:
                break
            x = xs[xi]
            z1 = (-_invmod((4 * x) % p, p)) % p
            if (z1 + 1) % p == 0:
                continue
            x2 = x % p2
            x1 = x % p
            S[0] = 0
            acc = np.int64(0)
            w = np.int64(1)
            inner21 = np.int64(0)
            inner22 = np.int64(0)
            w1 = np.int64(1)
            wi = np.int64(1)
            i16x = _invmod((16 * x) % p, p)
            for k in range(1, p):
                w = _mulmod(w, x2, p2)
                acc = (acc + _mulmod(cb[k] % p2, w, p2)) % p2
                S[k] = acc
                if k <= n:
                    w1 = w1 * x1 % p
                    wi = wi * i16x % p
                    ck = cb[k] % p
                    ik = inv3[k] % p
                    inner21 = (inner21 + ck * w1 % p * ik) % p
                    inner22 = (inner22 + ck * wi % p * ik) % p
            prefac = n % p * _powmod(z1, n, p) % p * _invmod(
                _powmod((z1 + 1) % p, n + 1, p), p
            ) % p
            zinv = _invmod(z1, p)
            for mi in range(ncuts):
                m = cuts[mi]
                if not done21:
                    skip = np.int64(0)
                    wz = np.int64(1)
                    for k in range(n + 1):
                        if k != m:
                            skip = (skip + row[k] * wz % p * (inv3[(k - m) % p] % p)) % p
                        wz = wz * zinv % p
                    bracket = (
                        inner21
                        + H[n]
                        + H[m]
                        - H[n - m]
                        - _powmod(z1, m, p) * _invmod(row[m], p) % p * skip
                    ) % p
                    r21 = (S[p - 1] + p * (prefac * bracket % p)) % p2
                    l21 = S[p - 1 - m]
                    if l21 != r21:
                        lhs[25] = l21
                        rhs[25] = r21
                        done21 = True
                if not done22:
                    skip = np.int64(0)
                    wz = np.int64(1)
                    for k in range(n + 1):
                        if k != n - m:
                            skip = (
                                skip + row[k] * wz % p * (inv3[(k - (n - m)) % p] % p)
                            ) % p
                        wz = wz * z1 % p
                    bracket = (
                        inner22
                        + H[n]
                        - H[m]
                        + H[n - m]
                        - _powmod(zinv, n - m, p) * _invmod(row[m], p) % p * skip
                    ) % p
                    r22 = ((1 + S[n]) % p2 - p * (prefac * bracket % p)) % p2
                    l22 = (1 + S[p - 1 - m]) % p2
                    if l22 != r22:
                        lhs[26] = l22
                        rhs[26] = r22
                        done22 = True

    return lhs, rhs
