"""The check registry: every congruence and identity as a verdict producer.

Sweepable checks cost O(p) per prime and run to any bound; small-p suites
cost more (exact rationals, O(p^2) gamma products) and are capped unless
forced; grid checks are prime-free and run through the polyid runner.

Corrected statements ship as the defaults. The printed-source variants are
retained under ids with suffix _literal and are expected to FAIL; their
smallest counterexamples are part of the regression suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from ..exactq import coeffid_check, ek2004_t20_check, polid_check, transform_check
from ..primes import primes_between
from . import hyp, sums
from .context import PrimeContext

SMALL_P_CAP = 500


class UnknownCheck(KeyError):
    pass


class InapplicablePrime(ValueError):
    pass


@dataclass(frozen=True)
class CheckDef:
    id: str
    statement: str
    fn: Callable | None
    k: int
    cost: str  # "sweep" | "small" | "grid"
    classes: tuple[tuple[int, int], ...] = ()  # (modulus, residue) alternatives
    floor: int = 3
    expected_fail: bool = False
    cap: int | None = None
    x_param: Fraction | None = None
    cut: Callable[[int], int] | None = None
    notes: str = ""

    def applicable(self, p: int) -> bool:
        if self.cost == "grid" or p < self.floor:
            return False
        if not self.classes:
            return True
        return any(p % m == r for m, r in self.classes)

    @property
    def class_desc(self) -> str:
        if not self.classes:
            return f"p >= {self.floor}"
        alts = " or ".join(f"p=={r} (mod {m})" for m, r in self.classes)
        return f"{alts}, p >= {self.floor}"


@dataclass(frozen=True)
class CongruenceInstance:
    check_id: str
    p: int
    mod_exponent: int
    n_half: int
    cut_m: int | None = None
    x_param: Fraction | None = None


@dataclass(frozen=True)
class CheckReport:
    instance: CongruenceInstance
    lhs: int
    rhs: int
    elapsed_us: int = 0
    trace: dict | None = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def p(self) -> int:
        return self.instance.p

    @property
    def check_id(self) -> str:
        return self.instance.check_id


def _transform_fn(tid: str):
    def fn(ctx, trace=None):
        ok = transform_check(tid, ctx.p, trace=trace)
        return (0, 0, 0) if ok else (1, 0, 0)

    return fn


def _cut_third(p):
    return (p - 1) // 3


def _cut_fifth(p):
    return (p - 1) // 5


_DEFS = [
    CheckDef(
        "ncong1",
        "sum_{k=0}^{p-1} C(2k,k) (-2)^k == 1 - 4 p q_p(2)/3  (mod p^3)",
        sums.ncong1, 3, "sweep", floor=5, x_param=Fraction(-2),
    ),
    CheckDef(
        "ncong2c",
        "sum_{k=0}^{(p-1)/2} C(2k,k)/(-32)^k == (2/p)(1 + p q_p(2)/6 - p^2 q_p(2)^2/8)  (mod p^3)",
        sums.ncong2c, 3, "sweep", floor=5, x_param=Fraction(-1, 32),
        notes="corrected: the printed source omits the square on the p^2 term",
    ),
    CheckDef(
        "ncong2_literal",
        "sum_{k=0}^{(p-1)/2} C(2k,k)/(-32)^k == (2/p)(1 + p q_p(2)/6 - p^2 q_p(2)/8)  (mod p^3)",
        sums.ncong2_literal, 3, "sweep", floor=5, expected_fail=True,
        x_param=Fraction(-1, 32),
        notes="as printed; first counterexample p=5 (lhs 9, rhs 84 mod 125)",
    ),
    CheckDef(
        "pansun34",
        "sum_{k=0}^{floor(3p/4)} C(2k,k)/(-4)^k == (2/p)  (mod p^2)",
        sums.pansun34, 2, "sweep", classes=((4, 1),), floor=5, x_param=Fraction(-1, 4),
    ),
    CheckDef(
        "mao_2p3",
        "sum_{k=1}^{floor(2p/3)} C(2k,k) == 0  (mod p^2)",
        sums.mao_2p3, 2, "sweep", classes=((3, 1),), floor=7, x_param=Fraction(1),
    ),
    CheckDef(
        "mao_5p6",
        "sum_{k=0}^{floor(5p/6)} C(2k,k)/16^k == (3/p)  (mod p^2)",
        sums.mao_5p6, 2, "sweep", classes=((3, 1),), floor=7, x_param=Fraction(1, 16),
    ),
    CheckDef(
        "mcong1",
        "sum_{k=1}^{floor(2p/3)} C(2k,k) (-2)^k == 0  (mod p^2)",
        sums.mcong1, 2, "sweep", classes=((3, 1),), floor=7, x_param=Fraction(-2),
    ),
    CheckDef(
        "mcong2",
        "sum_{k=0}^{floor(5p/6)} C(2k,k)/(-32)^k == (2/p)  (mod p^2)",
        sums.mcong2, 2, "sweep", classes=((3, 1),), floor=7, x_param=Fraction(-1, 32),
    ),
    CheckDef(
        "mcong3",
        "sum_{k=1}^{floor(4p/5)} C(2k,k) (-1)^k == 0  (mod p^2)",
        sums.mcong3, 2, "sweep", classes=((5, 1),), floor=11, x_param=Fraction(-1),
    ),
    CheckDef(
        "mcong4",
        "sum_{k=1}^{floor(7p/10)} C(2k,k)/(-16)^k == 0  (mod p^2)",
        sums.mcong4, 2, "sweep", classes=((5, 1),), floor=11, x_param=Fraction(-1, 16),
    ),
    CheckDef(
        "macong3",
        "sum_{k=0,k!=(p-1)/3}^{(p-1)/2} C((p-1)/2,k) 8^k/(3k+1) == -C((p-1)/2,(p-1)/3) q_p(2)/3  (mod p)",
        sums.macong3, 1, "sweep", classes=((3, 1),), floor=7, cut=_cut_third,
    ),
    CheckDef(
        "macong5",
        "sum_{k=0,k!=(p-1)/5}^{(p-1)/2} C((p-1)/2,k) 4^k/(5k+1) == -4^((p-1)/5) C((p-1)/2,(p-1)/5) f_p  (mod p)",
        sums.macong5, 1, "sweep", classes=((5, 1),), floor=11, cut=_cut_fifth,
    ),
    CheckDef(
        "lemmaL_half",
        "H_floor(p/2) == -2 q_p(2)  (mod p)",
        sums.lemmaL_half, 1, "sweep", floor=5,
    ),
    CheckDef(
        "lemmaL_third",
        "H_floor(p/3) == -(3/2) q_p(3)  (mod p)",
        sums.lemmaL_third, 1, "sweep", floor=5,
    ),
    CheckDef(
        "lemmaL_sixth",
        "H_floor(p/6) == -2 q_p(2) - (3/2) q_p(3)  (mod p)",
        sums.lemmaL_sixth, 1, "sweep", floor=5,
    ),
    CheckDef(
        "lemmaMTc",
        "sum_{k=1}^{p-1} C(2k,k) (-2)^k/k == -4 q_p(2) + 4 p q_p(2)^2  (mod p^2)",
        sums.lemmaMTc, 2, "sweep", floor=5, x_param=Fraction(-2),
        notes="corrected: the printed source omits the square on the p term",
    ),
    CheckDef(
        "lemmaMT_literal",
        "sum_{k=1}^{p-1} C(2k,k) (-2)^k/k == -4 q_p(2) + 4 p q_p(2)  (mod p^2)",
        sums.lemmaMT_literal, 2, "sweep", floor=5, expected_fail=True,
        x_param=Fraction(-2),
        notes="as printed; first counterexample p=5 (lhs 18, rhs 23 mod 25)",
    ),
    CheckDef(
        "w5",
        "sum_{k=1}^{floor(4p/5)} (-1)^k/k == 5 f_p/2  (mod p)",
        sums.w5, 1, "sweep", floor=7,
    ),
    CheckDef(
        "myw",
        "H_{(p-1)/2} + H_{(p-1)/5} - H_{3(p-1)/10} == -5 f_p  (mod p)",
        sums.myw, 1, "sweep", classes=((5, 1),), floor=11,
    ),
    CheckDef(
        "sunlemma",
        "k C(2k,k) C(2(p-k),p-k) == -2p  (mod p^2) for 1 <= k <= (p-1)/2",
        sums.sunlemma, 2, "sweep", floor=5,
        notes="range corrected: the printed range k = (p-1)/2..p-1 fails",
    ),
    CheckDef(
        "sunlemma_literal",
        "k C(2k,k) C(2(p-k),p-k) == -2p  (mod p^2) for (p-1)/2 <= k <= p-1",
        sums.sunlemma_literal, 2, "sweep", floor=5, expected_fail=True,
        notes="as printed; first counterexample (p,k)=(5,3) (lhs 10, rhs 15 mod 25)",
    ),
    CheckDef(
        "binom_half",
        "C(2k,k) == C((p-1)/2,k) (-4)^k  (mod p) for 0 <= k <= (p-1)/2",
        sums.binom_half, 1, "sweep", floor=3,
    ),
    CheckDef(
        "mt_fib",
        "sum_{k=1}^{p-1} C(2k,k) (-1)^k/k == -5 f_p + 5 p f_p^2  (mod p^2)",
        sums.mt_fib, 2, "sweep", floor=7, x_param=Fraction(-1),
    ),
    CheckDef(
        "suntj_full",
        "sum_{k=0}^{p-1} C(2k,k) (-1)^k == (p/5)(1 - 2 p f_p)  (mod p^3)",
        sums.suntj_full, 3, "sweep", floor=7, x_param=Fraction(-1),
    ),
    CheckDef(
        "suntj_half",
        "sum_{k=0}^{(p-1)/2} C(2k,k)/(-16)^k == (p/5)(1 + p f_p/2)  (mod p^3)",
        sums.suntj_half, 3, "sweep", floor=7, x_param=Fraction(-1, 16),
        notes="modulus unstated in the source; p^3 verified on every applicable prime <= 500 and promoted",
    ),
    CheckDef(
        "gp21",
        "partial sum of C(2k,k) x^k to p-1-m == full sum + n p z^n/(z+1)^(n+1) correction  (mod p^2); x in {-2,-1,1,2,3}, m over the class cuts",
        sums.gp21, 2, "sweep", classes=((3, 1), (5, 1)), floor=7,
    ),
    CheckDef(
        "gp22",
        "partial sum of C(2k,k) x^k to p-1-m == half sum - n p z^n/(z+1)^(n+1) correction  (mod p^2); x in {-2,-1,1,2,3}, m over the class cuts",
        sums.gp22, 2, "sweep", classes=((3, 1), (5, 1)), floor=7,
    ),
    CheckDef(
        "s2_suite",
        "gamma-product expansions and final relation for the 3k+1 family (mod p^2 / mod p)",
        hyp.s2_suite, 2, "small", classes=((3, 1),), floor=7, cap=SMALL_P_CAP,
    ),
    CheckDef(
        "s3_suite",
        "decomposition, harmonic forms and exact closed forms for the 5k+1 family (mod p)",
        hyp.s3_suite, 1, "small", classes=((5, 1),), floor=11, cap=SMALL_P_CAP,
    ),
    CheckDef(
        "pfaff_1586",
        "argument flip -8 -> 1/9 of the main 3k+1 series (exact rational identity)",
        _transform_fn("pfaff_1586"), 0, "small", classes=((3, 1),), floor=7,
        cap=SMALL_P_CAP,
    ),
    CheckDef(
        "euler_1581",
        "argument flip -1 -> 1/2 of the transformed tail series (exact rational identity)",
        _transform_fn("euler_1581"), 0, "small", classes=((3, 1),), floor=7,
        cap=SMALL_P_CAP,
    ),
    CheckDef(
        "quad_15814",
        "quadratic argument change -1/8 -> -1 of the tail series (exact rational identity)",
        _transform_fn("quad_15814"), 0, "small", classes=((3, 1),), floor=7,
        cap=SMALL_P_CAP,
    ),
    CheckDef(
        "polid1",
        "(z+1)^(n+1)/n sum_{k<m} z^k/C(n-1,k) == lower-segment partial-fraction form (coefficient-exact)",
        None, 0, "grid",
    ),
    CheckDef(
        "polid2",
        "(z+1)^(n+1)/n sum_{k=m}^{n-1} z^k/C(n-1,k) == upper-segment partial-fraction form (coefficient-exact)",
        None, 0, "grid",
    ),
    CheckDef(
        "coeffid",
        "coefficient identity behind the polynomial ones, all 0 <= d <= n+m (exact)",
        None, 0, "grid",
    ),
    CheckDef(
        "ek2004",
        "1/5-argument closed form and its shifted variant (exact)",
        None, 0, "grid",
    ),
]

REGISTRY: dict[str, CheckDef] = {d.id: d for d in _DEFS}
_ORDER = {d.id: i for i, d in enumerate(_DEFS)}


def list_checks() -> list[CheckDef]:
    return list(_DEFS)


def get_check(check_id: str) -> CheckDef:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None


def default_sweep_ids() -> list[str]:
    """Everything except the expected-fail literals and the grid checks."""
    return [d.id for d in _DEFS if d.cost != "grid" and not d.expected_fail]


def sweepable_ids() -> list[str]:
    return [d.id for d in _DEFS if d.cost == "sweep"]


def _instance(cd: CheckDef, p: int, k_eff: int) -> CongruenceInstance:
    return CongruenceInstance(
        check_id=cd.id,
        p=p,
        mod_exponent=k_eff,
        n_half=(p - 1) // 2,
        cut_m=cd.cut(p) if cd.cut else None,
        x_param=cd.x_param,
    )


def run_check(
    check_id: str, p: int, trace: dict | None = None, ctx: PrimeContext | None = None
) -> CheckReport:
    """Run one registry check at one prime; pure reference path."""
    cd = get_check(check_id)
    if cd.cost == "grid":
        raise InapplicablePrime(f"{check_id} is a prime-free grid check; use the polyid runner")
    if not cd.applicable(p):
        raise InapplicablePrime(f"{check_id} requires {cd.class_desc}; got p={p}")
    if ctx is None:
        ctx = PrimeContext(p)
    t0 = time.perf_counter_ns()
    lhs, rhs, k_eff = cd.fn(ctx, trace)
    us = (time.perf_counter_ns() - t0) // 1000
    return CheckReport(_instance(cd, p, k_eff), lhs, rhs, elapsed_us=us, trace=trace)


def effective_cap(cd: CheckDef, pmax: int, force: bool) -> int:
    if cd.cap is not None and not force:
        return min(pmax, cd.cap)
    return pmax


def applicable_primes(cd: CheckDef, pmin: int, pmax: int, force: bool = False) -> list[int]:
    hi = effective_cap(cd, pmax, force)
    return [p for p in primes_between(max(pmin, 3), hi) if cd.applicable(p)]


def prime_worker(p: int, ids: tuple[str, ...], caps: dict[str, int], use_fast: bool):
    """All selected checks at one prime; returns plain tuples for pickling."""
    from . import fastpath

    ctx = PrimeContext(p)
    fast_results = None
    out = []
    for cid in ids:
        cd = REGISTRY[cid]
        if not cd.applicable(p) or p > caps[cid]:
            continue
        if use_fast and fastpath.covers(cid, p):
            if fast_results is None:
                t0 = time.perf_counter_ns()
                fast_results = fastpath.run_prime(p)
                fast_results["_us"] = (time.perf_counter_ns() - t0) // 1000
            lhs, rhs, k_eff = fast_results[cid]
            us = fast_results["_us"] // max(1, len(fast_results) - 1)
        else:
            t0 = time.perf_counter_ns()
            lhs, rhs, k_eff = cd.fn(ctx, None)
            us = (time.perf_counter_ns() - t0) // 1000
        out.append((cid, p, lhs, rhs, k_eff, us))
    return out


def run_grid(check_id: str, nmax: int):
    """Run a prime-free grid check; yields one (params, holds) row per cell."""
    if check_id in ("polid1", "polid2"):
        for n in range(1, nmax + 1):
            for m in range(1, n + 1):
                yield {"n": n, "m": m}, polid_check(check_id, n, m)
    elif check_id == "coeffid":
        for n in range(1, nmax + 1):
            for m in range(1, n + 1):
                for d in range(n + m + 1):
                    yield {"n": n, "m": m, "d": d}, coeffid_check(n, m, d)
    elif check_id == "ek2004":
        for n in range(nmax + 1):
            yield {"n": n}, ek2004_t20_check(n)
    else:
        raise UnknownCheck(check_id)


def sweep_reports(
    ids: Iterable[str],
    pmin: int = 3,
    pmax: int = 10**4,
    jobs: int = 1,
    use_fast: bool = True,
    force: bool = False,
) -> list[CheckReport]:
    """Run checks over a prime range; output order is (registry, p) ascending
    and independent of the job count."""
    ids = list(ids)
    for cid in ids:
        get_check(cid)
    caps = {cid: effective_cap(REGISTRY[cid], pmax, force) for cid in ids}
    primes = list(primes_between(max(3, pmin), pmax)) if pmax >= pmin else []
    rows: list[tuple] = []
    if jobs <= 1:
        for p in primes:
            rows.extend(prime_worker(p, tuple(ids), caps, use_fast))
    else:
        import multiprocessing as mp
        from functools import partial

        worker = partial(prime_worker, ids=tuple(ids), caps=caps, use_fast=use_fast)
        chunk = max(1, len(primes) // (jobs * 8) or 1)
        with mp.get_context("fork").Pool(jobs) as pool:
            for part in pool.imap(worker, primes, chunksize=chunk):
                rows.extend(part)
    rows.sort(key=lambda r: (_ORDER[r[0]], r[1]))
    return [
        CheckReport(_instance(REGISTRY[cid], p, k_eff), lhs, rhs, elapsed_us=us)
        for cid, p, lhs, rhs, k_eff, us in rows
    ]
