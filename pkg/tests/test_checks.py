import pytest

from pcv.checks import (
    InapplicablePrime,
    PrimeContext,
    UnknownCheck,
    applicable_primes,
    get_check,
    list_checks,
    run_check,
    run_grid,
    sweep_reports,
)
from pcv.primes import primes_between


def test_registry_contract():
    defs = list_checks()
    assert len(defs) >= 28
    ids = [d.id for d in defs]
    assert len(set(ids)) == len(ids)
    mc1 = get_check("mcong1")
    assert mc1.classes == ((3, 1),) and mc1.k == 2 and mc1.cost == "sweep"
    s2 = get_check("s2_suite")
    assert s2.cost == "small" and s2.cap == 500
    for lit in ("ncong2_literal", "lemmaMT_literal", "sunlemma_literal"):
        assert get_check(lit).expected_fail
    with pytest.raises(UnknownCheck):
        get_check("nosuch")


def test_run_check_applicability():
    with pytest.raises(InapplicablePrime):
        run_check("mcong1", 11)
    with pytest.raises(InapplicablePrime):
        run_check("macong5", 7)
    with pytest.raises(InapplicablePrime):
        run_check("ncong1", 3)
    with pytest.raises(InapplicablePrime):
        run_check("polid1", 7)


def test_worked_instances():
    r = run_check("mcong1", 7)
    assert (r.lhs, r.rhs) == (0, 0) and r.holds
    r = run_check("macong3", 7)
    assert r.lhs == r.rhs == 5
    r = run_check("macong5", 11)
    assert r.lhs == r.rhs == 3
    r = run_check("ncong1", 5)
    assert r.lhs == r.rhs == 106
    r = run_check("myw", 11)
    assert r.lhs == r.rhs == 8
    r = run_check("sunlemma", 7)
    assert r.holds
    r = run_check("lemmaMTc", 5)
    assert r.lhs == r.rhs == 18
    r = run_check("ncong2c", 5)
    assert r.lhs == r.rhs == 9
    r = run_check("suntj_full", 7)
    assert r.holds and r.instance.mod_exponent == 3
    r = run_check("w5", 7)
    assert r.lhs == r.rhs == 4


def test_errata_regressions():
    r = run_check("ncong2_literal", 5)
    assert not r.holds and (r.lhs, r.rhs) == (9, 84)
    r = run_check("lemmaMT_literal", 5)
    assert not r.holds and (r.lhs, r.rhs) == (18, 23)
    r = run_check("sunlemma_literal", 5)
    assert not r.holds and (r.lhs, r.rhs) == (10, 15)


def test_trace_contents():
    trace = {}
    run_check("macong3", 7, trace=trace)
    assert trace["q_p(2)"] == 9 % 7
    trace = {}
    run_check("myw", 11, trace=trace)
    assert trace["f_p"] == 5
    trace = {}
    run_check("s2_suite", 7, trace=trace)
    assert len(trace["items"]) == 8
    trace = {}
    run_check("gp21", 7, trace=trace)
    assert len(trace["instances"]) > 0


def test_suite_and_head_congruence_verdicts_agree():
    # the final suite relation algebraically implies the head congruence
    for p in primes_between(7, 150):
        if p % 3 != 1:
            continue
        assert run_check("s2_suite", p).holds == run_check("macong3", p).holds


def test_gp_checks_small():
    for p in (7, 11, 13, 19, 31):
        if p % 3 == 1 or p % 5 == 1:
            assert run_check("gp21", p).holds
            assert run_check("gp22", p).holds


def test_shared_context_reuse():
    ctx = PrimeContext(13)
    r1 = run_check("mcong1", 13, ctx=ctx)
    r2 = run_check("macong3", 13, ctx=ctx)
    assert r1.holds and r2.holds
    # the central binomial stream was built once and cached
    assert "cb3" in ctx.__dict__


def test_applicable_primes_and_caps():
    ps = applicable_primes(get_check("mcong1"), 3, 100)
    assert ps == [p for p in primes_between(7, 100) if p % 3 == 1]
    capped = applicable_primes(get_check("s2_suite"), 3, 10**4)
    assert capped and capped[-1] <= 500
    forced = applicable_primes(get_check("s2_suite"), 3, 601, force=True)
    assert forced[-1] > 500


def test_sweep_all_checks_small_range():
    ids = [d.id for d in list_checks() if d.cost != "grid" and not d.expected_fail]
    reports = sweep_reports(ids, pmax=150, use_fast=False)
    assert reports and all(r.holds for r in reports)
    # canonical ordering: registry order, then ascending p
    order = {d.id: i for i, d in enumerate(list_checks())}
    keys = [(order[r.check_id], r.p) for r in reports]
    assert keys == sorted(keys)


def test_sweep_count_contract():
    ids = ["mcong1", "myw", "s2_suite"]
    pmax = 400
    reports = sweep_reports(ids, pmax=pmax, use_fast=False)
    expected = sum(len(applicable_primes(get_check(c), 3, pmax)) for c in ids)
    assert len(reports) == expected


def test_grid_runners():
    rows = list(run_grid("polid1", 6))
    assert len(rows) == 21 and all(h for _, h in rows)
    rows = list(run_grid("coeffid", 4))
    assert all(h for _, h in rows)
    rows = list(run_grid("ek2004", 3))
    assert len(rows) == 4 and all(h for _, h in rows)
    with pytest.raises(UnknownCheck):
        list(run_grid("mcong1", 3))
