import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.classify import predicates as PR
from app.classify import (
    SearchBounds,
    classify_report,
    family_ideals,
    fast_one_absorbing,
    is_maximal_ideal,
    is_one_absorbing_primary,
    is_primary,
    is_prime_ideal,
    is_two_absorbing,
    is_two_absorbing_primary,
    scan_family,
)
from app.classify.scan import (
    ElementSpace,
    KeySpace,
    find_one_absorbing_witness,
    find_primary_witness,
    find_prime_witness,
    find_two_absorbing_primary_witness,
    find_two_absorbing_witness,
    search,
)
from app.classify.table import COLUMNS, to_csv, to_json
from app.errors import NotProperError, ScopeError
from app.ideals.families import IdealFamily, enumerate_ideals, proper_ideals
from app.ideals.monomial import antichains
from app.ideals.ideal import Ideal, parse_ideal, whole_ring
from app.rings import handles as H
from app.rings.factor import prime_power
from app.rings.parsing import parse_ring
from app.verdict import Method, Status

FINDERS = [
    find_prime_witness,
    find_primary_witness,
    find_one_absorbing_witness,
    find_two_absorbing_primary_witness,
    find_two_absorbing_witness,
]

PREDICATES = {
    PR.PRIME: is_prime_ideal,
    PR.PRIMARY: is_primary,
    PR.ONE_ABSORBING: is_one_absorbing_primary,
    PR.TWO_ABSORBING_PRIMARY: is_two_absorbing_primary,
    PR.TWO_ABSORBING: is_two_absorbing,
}


def values(verdict):
    return [w.value for w in verdict.witness]


def test_twelve_z(z):
    ideal = parse_ideal(z, "(12)")
    one = is_one_absorbing_primary(ideal)
    assert one.is_refuted and one.method == Method.ORACLE
    assert values(one) == [13, 3, 4]
    assert str(one) == "refuted(13, 3, 4)"
    assert values(is_primary(ideal)) == [3, 4]
    assert is_two_absorbing_primary(ideal).holds
    assert is_two_absorbing(ideal).is_refuted
    assert values(is_prime_ideal(parse_ideal(z, "(6)"))) == [2, 3]


def test_twelve_z_fast_path(z):
    fast = fast_one_absorbing(parse_ideal(z, "(12)"))
    assert fast.is_refuted and fast.method == Method.FAST_PATH
    assert values(fast) == [3, 13, 4]
    assert PR.validate_witness(PR.ONE_ABSORBING, parse_ideal(z, "(12)"), fast.witness)


def test_zero_ideal_of_z12(z12):
    ideal = parse_ideal(z12, "(0)")
    one = is_one_absorbing_primary(ideal)
    assert values(one) == [2, 2, 3]
    assert PR.validate_witness(PR.ONE_ABSORBING, ideal, one.witness)


def test_xm_example(kxy):
    ideal = parse_ideal(kxy, "x^2,x*y")
    primary = is_primary(ideal)
    assert primary.is_refuted
    assert [str(w) for w in primary.witness] == ["x", "y"]
    one = is_one_absorbing_primary(ideal)
    assert one.holds and one.method == Method.CERTIFICATE
    assert is_two_absorbing_primary(ideal).holds
    report = classify_report(ideal)
    assert report.radical == "x"
    assert report.agreement


def test_monomial_radical_not_prime(kxy):
    ideal = parse_ideal(kxy, "x*y")
    one = is_one_absorbing_primary(ideal)
    assert one.is_refuted and one.method == Method.FAST_PATH
    assert PR.validate_witness(PR.ONE_ABSORBING, ideal, one.witness)
    assert is_two_absorbing(ideal).status == Status.UNFALSIFIED


def test_monomial_primes_and_primaries(kxy):
    assert is_prime_ideal(parse_ideal(kxy, "x")).holds
    assert is_prime_ideal(parse_ideal(kxy, "x,y")).holds
    assert is_prime_ideal(parse_ideal(kxy, "x^2")).is_refuted
    assert is_primary(parse_ideal(kxy, "x^2,y^3")).holds
    assert is_one_absorbing_primary(parse_ideal(kxy, "x^2,x*y,y^2")).holds


def test_monomial_witnesses_validate(kxy):
    for ideal in proper_ideals(IdealFamily(kxy, degree=3)):
        for kind, predicate in PREDICATES.items():
            verdict = predicate(ideal, SearchBounds(3, 2))
            if verdict.is_refuted and verdict.witness:
                assert PR.validate_witness(kind, ideal, verdict.witness), f"{kind} witness for {ideal}"


def test_maximal(z, z12):
    assert is_maximal_ideal(parse_ideal(z12, "(2)")).holds
    four = is_maximal_ideal(parse_ideal(z12, "(4)"))
    assert values(four) == [2]
    assert is_maximal_ideal(parse_ideal(z, "(7)")).method == Method.FAST_PATH
    assert values(is_maximal_ideal(parse_ideal(z, "(0)"))) == [2]
    assert is_maximal_ideal(parse_ideal(parse_ring("Zloc:5"), "p")).holds
    assert is_maximal_ideal(parse_ideal(parse_ring("ZxZ"), "(1)x(3)")).holds
    assert is_maximal_ideal(parse_ideal(parse_ring("ZxZ"), "(2)x(3)")).is_refuted


def test_whole_ring():
    ring = parse_ring("Z/12")
    assert is_prime_ideal(whole_ring(ring)).is_refuted
    with pytest.raises(NotProperError):
        is_primary(whole_ring(ring))
    with pytest.raises(NotProperError):
        classify_report(whole_ring(ring))


def test_oracle_witnesses_validate():
    for n in range(2, 31):
        for ideal in proper_ideals(IdealFamily(H.zmod(n))):
            for kind, predicate in PREDICATES.items():
                verdict = predicate(ideal)
                if verdict.is_refuted:
                    assert PR.validate_witness(kind, ideal, verdict.witness), f"{kind} witness for {ideal} in Z/{n}"
            maximal = is_maximal_ideal(ideal)
            if maximal.is_refuted:
                assert PR.validate_witness(PR.MAXIMAL, ideal, maximal.witness)


def test_class_reduction_matches_element_scan():
    for n in range(2, 21):
        for ideal in proper_ideals(IdealFamily(H.zmod(n))):
            keys, elements = KeySpace(ideal), ElementSpace(ideal)
            for finder in FINDERS:
                by_class = search(keys, finder)
                by_element = search(elements, finder)
                assert (by_class is None) == (by_element is None), f"{finder.__name__} on {ideal} in Z/{n}"
                if by_class is not None:
                    lifted = [keys.element(i).value for i in by_class]
                    assert lifted == [elements.element(i).value for i in by_element]


@pytest.mark.parametrize("threads", [2, 3, 8])
def test_search_is_thread_independent(threads):
    for n in (12, 30, 36, 60):
        for ideal in proper_ideals(IdealFamily(H.zmod(n))):
            space = KeySpace(ideal)
            for finder in FINDERS:
                assert search(space, finder, threads) == search(space, finder, 1)


def test_fast_path_matches_oracle(z):
    for m in range(0, 301):
        if m == 1:
            continue
        ideal = Ideal(z, m)
        fast = fast_one_absorbing(ideal)
        assert fast.status == is_one_absorbing_primary(ideal).status, f"mZ with m={m}"
        assert fast.holds == (m == 0 or prime_power(m) is not None)
        if fast.is_refuted:
            assert PR.validate_witness(PR.ONE_ABSORBING, ideal, fast.witness)


@pytest.mark.parametrize(
    "literal, expected",
    [("(4)x(1)", True), ("(1)x(9)", True), ("(0)x(1)", True), ("(4)x(9)", False), ("(6)x(1)", False), ("(2)x(0)", False)],
)
def test_product_of_integers(literal, expected):
    ideal = parse_ideal(parse_ring("ZxZ"), literal)
    fast = fast_one_absorbing(ideal)
    assert fast.holds == expected
    assert is_one_absorbing_primary(ideal).holds == expected
    if not expected:
        assert PR.validate_witness(PR.ONE_ABSORBING, ideal, fast.witness)


def test_valuation_domain_is_always_one_absorbing():
    ring = H.int_loc(3)
    for ideal in proper_ideals(IdealFamily(ring, exponent_max=5)):
        assert fast_one_absorbing(ideal).holds
        assert is_one_absorbing_primary(ideal).holds
        assert is_primary(ideal).holds


def test_scan_int_family():
    table = scan_family(family_ideals("int", (2, 30)))
    assert list(table.columns) == COLUMNS
    assert len(table) == 29
    one_abs = [int(i.strip("()")) for i in table[table["one_abs"] == "true"]["ideal"]]
    assert one_abs == [m for m in range(2, 31) if prime_power(m) is not None]
    assert (table["one_abs"] == table["primary"]).all()


def test_scan_product_family():
    table = scan_family(family_ideals("prod", left=4, right=9))
    assert len(table) == 9
    whole = table[table["ideal"] == "(1)x(1)"].iloc[0]
    assert whole["method"] == "none"
    assert whole["prime"] == "false"
    assert table[table["ideal"] == "(2)x(1)"].iloc[0]["one_abs"] == "true"
    assert table[table["ideal"] == "(0)x(3)"].iloc[0]["one_abs"] == "false"


def test_scan_zmod_one_abs_equals_primary():
    table = scan_family(family_ideals("zmod", (2, 36)))
    assert (table["one_abs"] == table["primary"]).all()


def test_scan_monloc_family():
    table = scan_family(family_ideals("monloc", degree=2), SearchBounds(2, 2))
    assert table.iloc[0]["ideal"] == "(1)"
    row = table[table["ideal"] == "x^2,x*y"].iloc[0]
    assert row["one_abs"] == "true"
    assert row["primary"] == "false"
    assert row["method"] == Method.CERTIFICATE.value


def test_scan_output_formats():
    table = scan_family(family_ideals("zmod", (6, 6)))
    csv = to_csv(table)
    assert csv.splitlines()[0] == ",".join(COLUMNS)
    assert len(csv.splitlines()) == 1 + len(table)
    assert to_json(table).startswith("[{")


@pytest.mark.parametrize(
    "family, kwargs",
    [("zmod", {}), ("int", {}), ("prod", {"left": 4}), ("monloc", {}), ("rationals", {})],
)
def test_family_bounds_required(family, kwargs):
    with pytest.raises(ScopeError):
        family_ideals(family, **kwargs)


def test_report_json_shape(z):
    report = classify_report(parse_ideal(z, "(12)"))
    data = report.model_dump()
    assert data["ring"] == "Z"
    assert data["radical"] == "(6)"
    assert data["properties"]["one_absorbing_primary"]["witness"] == ["13", "3", "4"]
    assert data["properties"]["two_absorbing_primary"]["status"] == "proven"
    assert "one_absorbing_primary=refuted(13,3,4)" in report.to_text()


def test_every_zmod_ideal_classifies():
    for n in (8, 12, 30):
        for ideal in enumerate_ideals(IdealFamily(H.zmod(n))):
            if ideal.is_proper:
                assert classify_report(ideal).agreement


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(antichains(3)))
def test_swapping_variables_keeps_every_verdict(gens):
    kxy = H.mon_loc()
    ideal = Ideal(kxy, gens)
    swapped = Ideal(kxy, frozenset((b, a) for a, b in gens))
    bounds = SearchBounds(3, 2)
    for predicate in PREDICATES.values():
        assert predicate(ideal, bounds).status == predicate(swapped, bounds).status, f"{ideal} vs {swapped}"
