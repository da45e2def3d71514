import pytest

from app.errors import ParseError, PreconditionError, ScopeError
from app.ideals.ideal import parse_ideal
from app.rings import handles as H
from app.rings.factor import divisors
from app.rings.parsing import parse_element, parse_ring
from app.theorems import (
    ConstructionReport,
    Scope,
    TheoremId,
    construct_PM,
    construct_xM,
    parse_theorem_ids,
    verify_theorem,
    verify_theorems,
)
from app.theorems.verifiers import MUTATION_TWO_ABS
from app.verdict import Method


@pytest.mark.parametrize("theorem", list(TheoremId), ids=lambda t: t.value)
def test_verifier_finds_no_violation(theorem, small_scope):
    report = verify_theorem(theorem, small_scope)
    assert report.ok, [v.model_dump() for v in report.violations]
    assert report.instances_checked > 0
    assert report.elapsed is not None


def test_radical_prime_instance_count():
    scope = Scope(zmod_max=50, prod_max=2, int_max=10, local_exponent_max=2, monloc_degree=2, families=("zmod",))
    report = verify_theorem(TheoremId.RADICAL_PRIME, scope)
    assert report.instances_checked == sum(len(divisors(n)) for n in range(2, 51))
    assert report.ok


def test_prime_power_criterion_up_to_a_thousand():
    report = verify_theorem(TheoremId.PID_PRIME_POWERS, Scope.from_settings(max_n=1000))
    assert report.instances_checked == 999
    assert report.violations == []


def test_mutated_chain_is_caught():
    scope = Scope.from_settings(max_n=20)
    report = verify_theorem(TheoremId.IMPLICATION_CHAIN, scope, MUTATION_TWO_ABS)
    assert not report.ok
    assert [v.instance for v in report.violations] == [
        "Z (6)",
        "Z (10)",
        "Z (12)",
        "Z (14)",
        "Z (15)",
        "Z (18)",
        "Z (20)",
    ]
    twelve = next(v for v in report.violations if v.instance == "Z (12)")
    assert twelve.witness == "(13, 3, 4)"
    assert report.instances_checked == 19


def test_mutation_rules():
    scope = Scope.from_settings(max_n=10)
    with pytest.raises(ParseError):
        verify_theorem(TheoremId.IMPLICATION_CHAIN, scope, "primary-implies-prime")
    with pytest.raises(ScopeError):
        verify_theorem(TheoremId.PID_PRIME_POWERS, scope, MUTATION_TWO_ABS)


def test_verify_many_keeps_order(small_scope):
    theorems = [TheoremId.INTEGER_EXAMPLE, TheoremId.PRODUCT_EXAMPLE, TheoremId.MONOMIAL_EXAMPLE]
    reports = verify_theorems(theorems, small_scope, threads=3)
    assert [r.theorem for r in reports] == [t.value for t in theorems]
    assert all(r.ok for r in reports)


def test_mutation_applies_to_chain_only():
    scope = Scope.from_settings(max_n=20)
    reports = verify_theorems(
        [TheoremId.PID_PRIME_POWERS, TheoremId.IMPLICATION_CHAIN], scope, MUTATION_TWO_ABS
    )
    assert reports[0].ok
    assert len(reports[1].violations) == 7


def test_report_serialization():
    report = verify_theorem(TheoremId.INTEGER_EXAMPLE, Scope.from_settings(max_n=10))
    data = report.to_json_dict()
    assert "elapsed" not in data
    assert data["theorem"] == "EX-e2"
    assert data["violations"] == []
    assert "elapsed" in report.to_json_dict(timings=True)
    assert report.to_text().startswith("EX-e2")


def test_parse_theorem_ids():
    assert parse_theorem_ids("all") == list(TheoremId)
    assert parse_theorem_ids("C1, T17") == [TheoremId.PID_PRIME_POWERS, TheoremId.IDEAL_TRIPLES]
    with pytest.raises(ParseError) as excinfo:
        parse_theorem_ids("C1,T99")
    assert excinfo.value.token == "T99"


@pytest.mark.parametrize(
    "kwargs",
    [{"zmod_max": 0}, {"int_max": 10**7}, {"monloc_degree": 99}, {"families": ("zmod", "reals")}],
)
def test_scope_limits(kwargs):
    values = dict(zmod_max=10, prod_max=4, int_max=10, local_exponent_max=2, monloc_degree=2)
    values.update(kwargs)
    with pytest.raises(ScopeError):
        Scope(**values)


def test_scope_from_settings():
    scope = Scope.from_settings(max_n=77, families=["int"])
    assert scope.zmod_max == 77 and scope.int_max == 77
    assert scope.includes("int") and not scope.includes("zmod")
    assert scope.describe() == "Z moduli<=77"


def test_xm_in_kxy(kxy):
    x = parse_element(kxy, "x")
    built = construct_xM(kxy, x)
    assert built.ideal == parse_ideal(kxy, "x^2,x*y")
    assert built.one_absorbing.holds and built.one_absorbing.method == Method.CERTIFICATE
    assert built.primary.is_refuted
    assert [str(w) for w in built.witnesses] == ["x", "y"]
    assert built.agreement
    report = ConstructionReport.from_construction(built)
    assert report.radical == "x"
    assert report.witnesses == ["x", "y"]


@pytest.mark.parametrize(
    "ring, elem, reason",
    [
        ("Z/12", "2", "not-quasilocal"),
        ("Z", "2", "not-quasilocal"),
        ("Zloc:5", "p", "principal-maximal"),
        ("Z/8", "2", "principal-maximal"),
        ("kxy", "x^2", "not-prime"),
        ("kxy", "0", "zero-element"),
        ("kxy", "1+x", "unit-element"),
    ],
)
def test_xm_preconditions(ring, elem, reason):
    r = parse_ring(ring)
    with pytest.raises(PreconditionError) as excinfo:
        construct_xM(r, parse_element(r, elem))
    assert excinfo.value.reason == reason


def test_xm_principal_maximal_message():
    r = parse_ring("Zloc:5")
    with pytest.raises(PreconditionError, match="xR equals the maximal ideal"):
        construct_xM(r, parse_element(r, "p"))


@pytest.mark.parametrize(
    "ring, prime, expected",
    [
        ("kxy", "x,y", "x^2,x*y,y^2"),
        ("kxy", "x", "x^2,x*y"),
        ("kxy", "y", "x*y,y^2"),
        ("Z/9", "(3)", "(0)"),
        ("Zloc:3", "p", "p^2"),
    ],
)
def test_pm(ring, prime, expected):
    r = parse_ring(ring)
    built = construct_PM(r, parse_ideal(r, prime))
    assert str(built.ideal) == expected
    assert built.one_absorbing.holds
    assert built.agreement


def test_pm_preconditions(kxy):
    with pytest.raises(PreconditionError) as excinfo:
        construct_PM(kxy, parse_ideal(kxy, "x^2"))
    assert excinfo.value.reason == "not-prime"
    z12 = H.zmod(12)
    with pytest.raises(PreconditionError) as excinfo:
        construct_PM(z12, parse_ideal(z12, "(2)"))
    assert excinfo.value.reason == "not-quasilocal"
