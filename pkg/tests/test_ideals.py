import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.errors import BackendMismatchError, NotProperError, ParseError, ScopeError, UnsupportedOperationError
from app.ideals.families import IdealFamily, enumerate_ideals, proper_ideals
from app.ideals.ideal import Ideal, contains, maximal_ideal, parse_ideal, principal_ideal, whole_ring, zero_ideal
from app.ideals.operations import (
    colon,
    ideal_elements,
    ideal_sum,
    in_zdiv,
    in_zdiv_by_search,
    intersect,
    is_subideal,
    overideals,
    power,
    product,
    radical,
    radical_contains,
    radical_contains_by_powers,
)
from app.rings import handles as H
from app.rings.parsing import parse_element, parse_ring


@pytest.mark.parametrize(
    "ring, literal",
    [("Z", "(12)"), ("Z/12", "(4)"), ("Z/12", "(0)"), ("ZxZ", "(4)x(9)"), ("Zloc:5", "p^3"), ("kxy", "x^2,x*y")],
)
def test_ideal_literals_print_back(ring, literal):
    assert str(parse_ideal(parse_ring(ring), literal)) == literal


@pytest.mark.parametrize("ring, literal", [("Z", "12"), ("Zloc:5", "q"), ("kxy", "x+y"), ("Z/4xZ/9", "(2)")])
def test_bad_ideal_literals(ring, literal):
    with pytest.raises(ParseError):
        parse_ideal(parse_ring(ring), literal)


def test_canonical_payloads(z12):
    assert Ideal(z12, 8) == Ideal(z12, 4)
    assert parse_ideal(z12, "(0)").is_zero
    assert not parse_ideal(z12, "(5)").is_proper
    assert parse_ideal(parse_ring("Zinv:2"), "(12)") == parse_ideal(parse_ring("Zinv:2"), "(3)")
    assert parse_ideal(parse_ring("kxy"), "x^2,x*y,x^3") == parse_ideal(parse_ring("kxy"), "x*y,x^2")


def test_radicals(z, z12, kxy):
    assert str(radical(parse_ideal(z, "(12)"))) == "(6)"
    assert str(radical(parse_ideal(z, "(0)"))) == "(0)"
    assert str(radical(parse_ideal(z12, "(0)"))) == "(6)"
    assert str(radical(parse_ideal(kxy, "x^2,x*y"))) == "x"
    assert str(radical(parse_ideal(kxy, "x^2*y^3"))) == "x*y"
    assert str(radical(parse_ideal(parse_ring("Zloc:5"), "p^3"))) == "p"
    assert str(radical(parse_ideal(parse_ring("Z/4xZ/9"), "(0)x(3)"))) == "(2)x(3)"


def test_radical_membership_agrees_with_powers():
    for n in range(2, 40):
        ring = H.zmod(n)
        for ideal in enumerate_ideals(IdealFamily(ring)):
            for x in ring.elements():
                assert radical_contains(ideal, x) == radical_contains_by_powers(ideal, x), f"{x} in rad {ideal} of Z/{n}"


def test_colon(z, z12, kxy):
    assert str(colon(parse_ideal(z12, "(0)"), z12.element(4))) == "(3)"
    assert str(colon(parse_ideal(z, "(12)"), z.element(8))) == "(3)"
    assert not colon(parse_ideal(z, "(0)"), z.element(0)).is_proper
    ideal = parse_ideal(kxy, "x^2,x*y")
    assert colon(ideal, parse_element(kxy, "x")) == maximal_ideal(kxy)
    assert colon(ideal, parse_element(kxy, "y")) == parse_ideal(kxy, "x")
    with pytest.raises(UnsupportedOperationError):
        colon(ideal, parse_element(kxy, "x+y"))


def test_lattice_operations(z):
    four, six = parse_ideal(z, "(4)"), parse_ideal(z, "(6)")
    assert str(product(four, six)) == "(24)"
    assert str(intersect(four, six)) == "(12)"
    assert str(ideal_sum(four, six)) == "(2)"
    assert str(power(six, 3)) == "(216)"
    assert is_subideal(parse_ideal(z, "(12)"), six)
    assert not is_subideal(six, parse_ideal(z, "(12)"))
    with pytest.raises(ValueError):
        power(six, 0)


def test_monomial_lattice(kxy):
    m = maximal_ideal(kxy)
    assert power(m, 2) == parse_ideal(kxy, "x^2,x*y,y^2")
    assert intersect(parse_ideal(kxy, "x"), parse_ideal(kxy, "y")) == parse_ideal(kxy, "x*y")
    assert ideal_sum(parse_ideal(kxy, "x^2"), parse_ideal(kxy, "y")) == parse_ideal(kxy, "x^2,y")
    assert is_subideal(parse_ideal(kxy, "x^2,x*y"), parse_ideal(kxy, "x"))


def test_local_lattice():
    loc = parse_ring("Zloc:3")
    p2, p5 = parse_ideal(loc, "p^2"), parse_ideal(loc, "p^5")
    assert str(product(p2, p5)) == "p^7"
    assert intersect(p2, p5) == p5
    assert ideal_sum(p2, p5) == p2
    assert product(p2, zero_ideal(loc)).is_zero
    assert contains(p2, parse_element(loc, "9/2"))
    assert not contains(p2, parse_element(loc, "3"))


def test_mixed_rings_rejected(z, z12):
    with pytest.raises(BackendMismatchError):
        product(parse_ideal(z, "(2)"), parse_ideal(z12, "(2)"))
    with pytest.raises(BackendMismatchError):
        contains(parse_ideal(z, "(2)"), z12.element(2))


def test_principal_ideals(z12, kxy):
    assert str(principal_ideal(z12, z12.element(8))) == "(4)"
    assert principal_ideal(kxy, parse_element(kxy, "x*(1+y)")) == parse_ideal(kxy, "x")
    with pytest.raises(UnsupportedOperationError):
        principal_ideal(kxy, parse_element(kxy, "x+y"))


def test_maximal_ideals():
    assert str(maximal_ideal(H.zmod(8))) == "(2)"
    assert maximal_ideal(H.zmod(12)) is None
    assert str(maximal_ideal(H.int_loc(5))) == "p"
    assert maximal_ideal(H.integers()) is None


def test_zdiv(z):
    assert in_zdiv(parse_ideal(z, "(12)"), z.element(2))
    assert not in_zdiv(parse_ideal(z, "(9)"), z.element(5))
    assert not in_zdiv(parse_ideal(z, "(0)"), z.element(5))
    with pytest.raises(NotProperError):
        in_zdiv(whole_ring(z), z.element(2))


def test_zdiv_matches_exhaustive_search():
    for n in range(2, 31):
        ring = H.zmod(n)
        for ideal in proper_ideals(IdealFamily(ring)):
            for r in ring.elements():
                assert in_zdiv(ideal, r) == in_zdiv_by_search(ideal, r), f"{r} and {ideal} in Z/{n}"


def test_overideals(z12, z):
    assert [str(i) for i in overideals(parse_ideal(z12, "(4)"))] == ["(2)"]
    assert [str(i) for i in overideals(parse_ideal(z12, "(0)"))] == ["(2)", "(3)", "(4)", "(6)"]
    assert [str(i) for i in overideals(parse_ideal(z, "(12)"))] == ["(2)", "(3)", "(4)", "(6)"]
    with pytest.raises(ScopeError):
        overideals(zero_ideal(z))


def test_ideal_elements(z12):
    assert [e.value for e in ideal_elements(parse_ideal(z12, "(4)"))] == [0, 4, 8]
    with pytest.raises(ScopeError):
        ideal_elements(parse_ideal(parse_ring("Z"), "(4)"))


def test_families(z12, z):
    assert [str(i) for i in enumerate_ideals(IdealFamily(z12))] == ["(1)", "(2)", "(3)", "(4)", "(6)", "(0)"]
    assert len(proper_ideals(IdealFamily(z12))) == 5
    assert len(enumerate_ideals(IdealFamily(z, modulus_range=(0, 10)))) == 11
    inv = [str(i) for i in enumerate_ideals(IdealFamily(H.int_inv(2), modulus_range=(0, 6)))]
    assert inv == ["(0)", "(1)", "(3)", "(5)"]
    local = [str(i) for i in enumerate_ideals(IdealFamily(H.int_loc(5), exponent_max=2))]
    assert local == ["(1)", "p", "p^2", "(0)"]
    product_ring = H.prod(H.zmod(4), H.zmod(9))
    assert len(enumerate_ideals(IdealFamily(product_ring))) == 9


def test_monomial_family_is_duplicate_free(kxy):
    ideals = enumerate_ideals(IdealFamily(kxy, degree=3))
    assert len(ideals) == len(set(ideals))
    assert not ideals[0].is_proper
    assert all(i.is_proper for i in ideals[1:])


@pytest.mark.parametrize("family", [IdealFamily(H.integers()), IdealFamily(H.int_loc(5)), IdealFamily(H.mon_loc())])
def test_unbounded_families_rejected(family):
    with pytest.raises(ScopeError):
        enumerate_ideals(family)


moduli = st.integers(min_value=1, max_value=500)


@given(moduli, moduli)
def test_radical_of_product_is_radical_of_intersection(a, b):
    z = H.integers()
    left, right = Ideal(z, a), Ideal(z, b)
    assert radical(product(left, right)) == radical(intersect(left, right))
    assert is_subideal(product(left, right), intersect(left, right))


@given(moduli, st.integers(min_value=-1000, max_value=1000))
def test_colon_membership(m, c):
    z = H.integers()
    ideal = Ideal(z, m)
    quotient = colon(ideal, z.element(c))
    for r in range(-30, 31):
        assert contains(quotient, z.element(r)) == contains(ideal, z.element(c * r))
