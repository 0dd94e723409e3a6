import pytest

from pcv.checks import fastpath
from pcv.checks.context import PrimeContext
from pcv.checks.registry import REGISTRY
from pcv.primes import primes_between

pytestmark = pytest.mark.skipif(
    not fastpath.available(), reason="numba not installed"
)


def test_fast_ids_are_registered_sweepables():
    for cid in fastpath.FAST_IDS:
        assert REGISTRY[cid].cost == "sweep"
    sweepables = {d.id for d in REGISTRY.values() if d.cost == "sweep"}
    assert set(fastpath.FAST_IDS) == sweepables


def test_kernel_matches_reference_exhaustively():
    # bit-for-bit agreement with the pure path on every sweepable check
    for p in primes_between(3, 1000):
        ctx = PrimeContext(p)
        fast = fastpath.run_prime(p)
        for cid in fastpath.FAST_IDS:
            cd = REGISTRY[cid]
            if not cd.applicable(p):
                continue
            assert fast[cid] == cd.fn(ctx, None), (cid, p)


def test_kernel_limit():
    assert not fastpath.covers("mcong1", fastpath.FAST_LIMIT + 1)
    assert fastpath.covers("mcong1", 10**5)
    assert not fastpath.covers("s2_suite", 13)
