"""Exact-rational recomputation of check left sides, for oracle dumps.

These are independent of the modular paths: plain Fraction sums over
math.comb values. Only used interactively, so they carry a cost guard.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

EXACT_P_LIMIT = 600


def _hsum(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def _cb_sum(p: int, x: Fraction, lo: int, hi: int) -> Fraction:
    return sum((comb(2 * k, k) * x**k for k in range(lo, hi + 1)), Fraction(0))


def _cb_sum_k(p: int, x: Fraction) -> Fraction:
    return sum(
        (Fraction(comb(2 * k, k), k) * x**k for k in range(1, p)), Fraction(0)
    )


def _row_sum(p: int, base: int, step: int, cut: int) -> Fraction:
    n = (p - 1) // 2
    return sum(
        (
            Fraction(comb(n, k) * base**k, step * k + 1)
            for k in range(n + 1)
            if k != cut
        ),
        Fraction(0),
    )


def exact_lhs(check_id: str, p: int) -> Fraction | None:
    n = (p - 1) // 2
    if check_id == "ncong1":
        return _cb_sum(p, Fraction(-2), 0, p - 1)
    if check_id in ("ncong2c", "ncong2_literal"):
        return _cb_sum(p, Fraction(-1, 32), 0, n)
    if check_id == "pansun34":
        return _cb_sum(p, Fraction(-1, 4), 0, 3 * p // 4)
    if check_id == "mao_2p3":
        return _cb_sum(p, Fraction(1), 1, 2 * p // 3)
    if check_id == "mao_5p6":
        return _cb_sum(p, Fraction(1, 16), 0, 5 * p // 6)
    if check_id == "mcong1":
        return _cb_sum(p, Fraction(-2), 1, 2 * p // 3)
    if check_id == "mcong2":
        return _cb_sum(p, Fraction(-1, 32), 0, 5 * p // 6)
    if check_id == "mcong3":
        return _cb_sum(p, Fraction(-1), 1, 4 * p // 5)
    if check_id == "mcong4":
        return _cb_sum(p, Fraction(-1, 16), 1, 7 * p // 10)
    if check_id == "suntj_full":
        return _cb_sum(p, Fraction(-1), 0, p - 1)
    if check_id == "suntj_half":
        return _cb_sum(p, Fraction(-1, 16), 0, n)
    if check_id == "macong3":
        return _row_sum(p, 8, 3, (p - 1) // 3)
    if check_id == "macong5":
        return _row_sum(p, 4, 5, (p - 1) // 5)
    if check_id in ("lemmaMTc", "lemmaMT_literal"):
        return _cb_sum_k(p, Fraction(-2))
    if check_id == "mt_fib":
        return _cb_sum_k(p, Fraction(-1))
    if check_id == "lemmaL_half":
        return _hsum(p // 2)
    if check_id == "lemmaL_third":
        return _hsum(p // 3)
    if check_id == "lemmaL_sixth":
        return _hsum(p // 6)
    if check_id == "w5":
        return sum(
            (Fraction(-1 if k % 2 else 1, k) for k in range(1, 4 * p // 5 + 1)),
            Fraction(0),
        )
    if check_id == "myw":
        return _hsum(n) + _hsum((p - 1) // 5) - _hsum(3 * (p - 1) // 10)
    return None


def exact_lhs_string(check_id: str, p: int) -> str | None:
    if p > EXACT_P_LIMIT:
        return None
    val = exact_lhs(check_id, p)
    return None if val is None else str(val)


def exact_intermediates(check_id: str, p: int) -> dict[str, str]:
    """Exact forms of the named quantities a check's right side uses."""
    if p > EXACT_P_LIMIT:
        return {}
    out: dict[str, str] = {}
    n = (p - 1) // 2
    if check_id in (
        "ncong1", "ncong2c", "ncong2_literal", "macong3",
        "lemmaMTc", "lemmaMT_literal", "lemmaL_half", "lemmaL_third", "lemmaL_sixth",
    ):
        out["q_p(2) exact"] = str((2 ** (p - 1) - 1) // p)
    if check_id in ("lemmaL_third", "lemmaL_sixth"):
        out["q_p(3) exact"] = str((3 ** (p - 1) - 1) // p)
    if check_id in ("macong5", "myw", "w5", "mt_fib", "suntj_full", "suntj_half"):
        a, b = 0, 1
        for _ in range(p - _leg5(p)):
            a, b = b, a + b
        out["f_p exact"] = str(a // p)
    if check_id == "myw":
        out["H[(p-1)/2] exact"] = str(_hsum(n))
        out["H[(p-1)/5] exact"] = str(_hsum((p - 1) // 5))
        out["H[3(p-1)/10] exact"] = str(_hsum(3 * (p - 1) // 10))
    return out


def _leg5(p: int) -> int:
    r = p % 5
    if r == 0:
        return 0
    return 1 if r in (1, 4) else -1
