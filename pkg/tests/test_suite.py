from fractions import Fraction

import pytest
import sympy as sp

import oracles
from oracles import q, rf_to_sympy
from qverify.congruence import (ModulusKind, PadicModulus, RatFunc, congruent_mod,
                                modulus_build, padic_congruent)
from qverify.polyring import ONE
from qverify.suite import (Claim, DomainViolation, StatementKind, UnknownStatement,
                           build_rhs_common, get_statement, list_statements,
                           plan_tasks, verify_range, verify_statement)
from qverify.suite import registry
from qverify.suite.blocks import lhs_3k, lhs_4k, param_3k, param_4k

# [DERIVED] shared right side at n=3, from the sympy transcription in oracles.rhs_common;
# at q=1 it is -3 + 27 = 24.
RHS_AT_3 = (3*q**9 + 8*q**8 + 17*q**7 + 20*q**6 + 17*q**5 + 8*q**4 + 2*q**3 - q**2 - q - 1) / (3*q**2)


# -- registry -----------------------------------------------------------------

def test_registry_contents():
    ids = [s.id for s in list_statements()]
    assert len(ids) == len(set(ids)) == 38
    assert {"thm1-half", "thm1-full", "thm2", "cl-sun-p4", "identity-fn03n+1"} <= set(ids)
    assert get_statement("nope") is None


def test_statement_metadata():
    s = get_statement("thm1-half")
    assert s.kind is StatementKind.Q_CONGRUENCE
    assert s.modulus_label == "[n]Φ_n(q)³"
    assert s.param == "n" and s.domain.description == "n odd >= 1"
    p = get_statement("cl-sun-p4")
    assert p.kind is StatementKind.PADIC and p.modulus_label == "p^4"
    assert p.variants == ("m=(p-1)/2", "m=p-1")
    assert not p.domain.contains(3) and p.domain.contains(5) and not p.domain.contains(9)
    assert get_statement("identity-fn03n+1").modulus_label == "exact"


def test_every_statement_has_a_headline_claim():
    for s in list_statements():
        value = s.domain.minimum if s.param == "p" else max(3, s.domain.minimum)
        claims = s.expand(value, s.variants[0] if s.variants else None)
        assert claims and all(isinstance(c, Claim) for c in claims), s.id


# -- verify_statement ---------------------------------------------------------

def test_thm1_half_at_one_is_trivial():
    r = verify_statement("thm1-half", n=1)
    assert r.holds is True
    assert r.modulus_degree == 0
    assert any(w.startswith("TrivialModulus") for w in r.warnings)


@pytest.mark.parametrize("sid", ["thm1-half", "thm1-full", "thm2"])
@pytest.mark.parametrize("n", [3, 5, 7])
def test_main_theorems_small(sid, n):
    r = verify_statement(sid, n=n)
    assert r.holds is True and not r.failed_claims
    assert r.modulus_degree == (n - 1) + 3 * (n - 1) * (n > 1)


def test_classical_examples():
    r = verify_statement("cl-sun-p4", p=5)
    assert r.holds is True and r.modulus_degree == 4
    assert verify_statement("cl-sun-p4", p=5, variant="m=p-1").holds is True
    assert verify_statement("cl-vanhamme", p=3).holds is True


def test_errors():
    with pytest.raises(UnknownStatement):
        verify_statement("no-such-id", n=3)
    with pytest.raises(DomainViolation):
        verify_statement("thm2", n=4)
    with pytest.raises(DomainViolation):
        verify_statement("cl-sun-p4", p=3)
    with pytest.raises(DomainViolation):
        verify_statement("cl-sun-p4", n=5)
    with pytest.raises(DomainViolation):
        verify_statement("thm2", n=3, variant="N=n-1")
    with pytest.raises(DomainViolation):
        verify_statement("eq-wei", n=3, variant="N=n")
    with pytest.raises(DomainViolation):
        verify_statement("thm2")


def test_false_claim_is_reported(monkeypatch):
    bogus = registry.Statement(
        "bogus", "deliberately wrong", StatementKind.Q_CONGRUENCE, registry.ODD_N3,
        lambda n, v: [Claim("lhs+1", lambda: lhs_3k(n) + RatFunc(ONE), lambda: lhs_3k(n),
                            ModulusKind.PHI)],
        ModulusKind.PHI)
    monkeypatch.setitem(registry._REGISTRY, "bogus", bogus)
    r = verify_statement("bogus", n=5)
    assert r.holds is False and r.failed_claims == ["lhs+1"]


# -- verify_range ---------------------------------------------------------------

def test_verify_range_examples():
    rs = verify_range(["lem-q-fermat"], [3, 5, 7])
    assert [r.params["n"] for r in rs] == [3, 5, 7] and all(r.holds for r in rs)
    assert verify_range([], [3, 5]) == []
    rs = verify_range(["thm2"], [3])
    assert len(rs) == 1 and rs[0].holds is True


def test_plan_tasks_skips_out_of_domain_and_expands_variants():
    tasks = plan_tasks(["eq-wei", "sec2-aux-1", "cl-sun-p4"], [1, 3], [3, 5, 7])
    assert tasks == [
        ("eq-wei", "n", 1, "N=(n-1)/2"), ("eq-wei", "n", 1, "N=n-1"),
        ("eq-wei", "n", 3, "N=(n-1)/2"), ("eq-wei", "n", 3, "N=n-1"),
        ("sec2-aux-1", "n", 3, None),
        ("cl-sun-p4", "p", 5, "m=(p-1)/2"), ("cl-sun-p4", "p", 5, "m=p-1"),
        ("cl-sun-p4", "p", 7, "m=(p-1)/2"), ("cl-sun-p4", "p", 7, "m=p-1"),
    ]


def test_verify_range_errors_become_records(monkeypatch):
    def boom(n, v):
        raise RuntimeError("broken builder")
    bad = registry.Statement("boom", "raises", StatementKind.Q_CONGRUENCE, registry.ODD_N,
                             boom, ModulusKind.PHI)
    monkeypatch.setitem(registry._REGISTRY, "boom", bad)
    rs = verify_range(["boom", "lem-q-fermat"], [3])
    assert rs[0].holds is None and rs[0].warnings[0].startswith("Error: RuntimeError")
    assert rs[1].holds is True
    assert len(verify_range(["boom", "lem-q-fermat"], [3], fail_fast=True)) == 1


def test_parallel_matches_serial():
    ids = ["lem-q-morley", "eq-q-tauraso", "cl-gz-div3"]
    strip = lambda rs: [{**r.to_record(), "elapsed_ms": 0} for r in rs]
    serial = verify_range(ids, [1, 3, 5, 7], [3, 5, 7, 11])
    parallel = verify_range(ids, [1, 3, 5, 7], [3, 5, 7, 11], parallelism=3)
    assert strip(serial) == strip(parallel)
    with pytest.raises(ValueError):
        verify_range(ids, [3], parallelism=0)


# -- sides against independent references ------------------------------------------

def test_build_rhs_common():
    assert build_rhs_common(1) == RatFunc(ONE)
    assert sp.cancel(rf_to_sympy(build_rhs_common(3)) - RHS_AT_3) == 0
    assert sp.cancel(oracles.rhs_common(3) - RHS_AT_3) == 0
    assert build_rhs_common(3).evaluate(1) == 24
    with pytest.raises(ValueError):
        build_rhs_common(4)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_theorem_sides_against_sympy(n):
    h = (n - 1) // 2
    assert sp.cancel(rf_to_sympy(lhs_4k(h)) - oracles.lhs_4k(h)) == 0
    assert sp.cancel(rf_to_sympy(lhs_3k(n)) - oracles.lhs_3k(n)) == 0
    assert sp.cancel(rf_to_sympy(build_rhs_common(n)) - oracles.rhs_common(n)) == 0
    modulus = sp.expand(oracles.qint(n) * sp.cyclotomic_poly(n, q) ** 3)
    for lhs in (oracles.lhs_4k(h), oracles.lhs_4k(n - 1), oracles.lhs_3k(n)):
        # rhs carries q^{(1-n^2)/4}; multiply it out before reducing
        shift = q ** ((n * n - 1) // 4)
        assert oracles.divides_numerator(sp.expand(shift) * (lhs - oracles.rhs_common(n)), modulus)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_q_to_one_recovers_classical_sum(p):
    h = (p - 1) // 2
    lhs = lhs_4k(h).evaluate(1)
    assert lhs == oracles.classical_4k(h)
    diff = lhs - build_rhs_common(p).evaluate(1)
    assert padic_congruent(Fraction(diff), 0, PadicModulus(p, 4))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_parametric_sides_specialise_at_a_equal_one(n):
    h = (n - 1) // 2
    for N in (h, n - 1):
        s = param_4k(N)
        assert RatFunc(s.num.subs(a=1)) / RatFunc(s.den.subs(a=1)) == lhs_4k(N)
    s = param_3k(n)
    assert RatFunc(s.num.subs(a=1)) / RatFunc(s.den.subs(a=1)) == lhs_3k(n)


# -- consistency between statements ----------------------------------------------

@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_downward_closure_of_main_theorems(n):
    for sid in ("thm1-half", "thm2"):
        s = get_statement(sid)
        lhs, rhs = s.lhs_builder(n), s.rhs_builder(n)
        for kind in (ModulusKind.N_PHI2, ModulusKind.PHI3, ModulusKind.PHI2,
                     ModulusKind.PHI, ModulusKind.N_ONLY):
            assert congruent_mod(lhs, rhs, modulus_build(kind, n)).holds, (sid, kind)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_theorem_pair_consistency(n):
    a = get_statement("thm1-half").lhs_builder(n)
    b = get_statement("thm1-full").lhs_builder(n)
    c = get_statement("thm2").lhs_builder(n)
    assert congruent_mod(a, b, modulus_build(ModulusKind.PHI4, n)).holds
    assert congruent_mod(a, c, modulus_build(ModulusKind.N_PHI3, n)).holds
    assert verify_statement("eq-q4k-3k-sec4", n=n).holds


@pytest.mark.parametrize("sid", [s.id for s in list_statements() if s.param == "n"
                                 and s.kind is not StatementKind.Q_PARAMETRIC])
def test_q_statements_hold_at_small_n(sid):
    for n in (3, 5):
        for v in get_statement(sid).variants or (None,):
            assert verify_statement(sid, n=n, variant=v).holds, (sid, n, v)


@pytest.mark.parametrize("sid", [s.id for s in list_statements() if s.param == "p"])
def test_classical_statements_hold_at_small_primes(sid):
    for p in (5, 7, 11):
        for v in get_statement(sid).variants or (None,):
            assert verify_statement(sid, p=p, variant=v).holds, (sid, p, v)
