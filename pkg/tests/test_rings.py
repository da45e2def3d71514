from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.errors import BackendMismatchError, ParseError, PreconditionError
from app.rings import handles as H
from app.rings.parsing import parse_element, parse_ring
from app.rings.residues import nonunit_lift, residue_system
from app.rings.structure import (
    divides,
    is_chained,
    is_divided,
    is_irreducible_element,
    is_prime_element,
    is_quasilocal,
    is_unit,
    nonunits_closed_under_addition,
    quasilocal_witness,
)
from app.verdict import Status


@pytest.mark.parametrize("spec", ["Z", "Z/12", "Z/4xZ/9", "ZxZ", "Zloc:5", "Zinv:6", "kxy"])
def test_ring_specs_print_back(spec):
    assert str(parse_ring(spec)) == spec


@pytest.mark.parametrize("spec", ["", "Q", "Z/1", "Zloc:4", "Zinv:1", "Z/2xZ/3xZ/5", "Zloc:5xZ"])
def test_bad_ring_specs(spec):
    with pytest.raises(ParseError):
        parse_ring(spec)


def test_parse_error_names_token():
    with pytest.raises(ParseError) as excinfo:
        parse_element(parse_ring("Z/12"), "two")
    assert excinfo.value.token == "two"


def test_zmod_arithmetic(z12):
    a, b = z12.element(7), z12.element(5)
    assert (a * b).value == 11
    assert (a + b).is_zero
    assert (z12.element(2) ** 5).value == 8
    assert len(list(z12.elements())) == 12


def test_mixed_rings_rejected(z12):
    with pytest.raises(BackendMismatchError):
        z12.element(1) + H.zmod(8).element(1)


def test_units():
    z12 = parse_ring("Z/12")
    assert is_unit(z12, z12.element(5))
    assert not is_unit(z12, z12.element(4))
    z = parse_ring("Z")
    assert is_unit(z, z.element(-1))
    assert not is_unit(z, z.element(2))
    loc = parse_ring("Zloc:5")
    assert is_unit(loc, parse_element(loc, "2"))
    assert is_unit(loc, parse_element(loc, "3/7"))
    assert not is_unit(loc, parse_element(loc, "p"))
    inv = parse_ring("Zinv:2")
    assert is_unit(inv, inv.element(8))
    assert not is_unit(inv, inv.element(6))
    kxy = parse_ring("kxy")
    assert is_unit(kxy, parse_element(kxy, "1+x"))
    assert not is_unit(kxy, parse_element(kxy, "x"))


def test_local_denominators_checked():
    with pytest.raises(ParseError):
        parse_element(parse_ring("Zloc:5"), "1/5")
    with pytest.raises(ParseError):
        parse_element(parse_ring("Zinv:2"), "1/3")
    with pytest.raises(ParseError):
        parse_element(parse_ring("kxy"), "1/x")


def test_monloc_fractions_reduce(kxy):
    assert parse_element(kxy, "x*(1+y)/(1+y)") == parse_element(kxy, "x")
    assert parse_element(kxy, "(x+x*y)/(2+2*y)") == parse_element(kxy, "x/2")
    assert not parse_element(kxy, "x").is_zero
    assert parse_element(kxy, "x-x").is_zero


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("Z/8", True),
        ("Z/9", True),
        ("Z/12", False),
        ("Z/4xZ/9", False),
        ("Z", False),
        ("ZxZ", False),
        ("Zinv:2", False),
        ("Zloc:5", True),
        ("kxy", True),
    ],
)
def test_quasilocal(spec, expected):
    ring = parse_ring(spec)
    assert is_quasilocal(ring) == expected
    assert nonunits_closed_under_addition(ring) == expected


@pytest.mark.parametrize("spec", ["Z/12", "Z", "Zinv:2", "Z/4xZ/9", "ZxZ"])
def test_quasilocal_witness_is_genuine(spec):
    ring = parse_ring(spec)
    w, u = quasilocal_witness(ring)
    assert not is_unit(ring, w)
    assert is_unit(ring, u)
    assert not is_unit(ring, w + u)


def test_chained_and_divided():
    assert is_chained(H.zmod(8))
    assert is_divided(H.zmod(8))
    assert not is_chained(H.zmod(12))
    assert is_chained(H.int_loc(3))
    assert not is_chained(H.integers())
    assert is_divided(H.zmod(9))


def test_divides_in_zmod(z12):
    assert divides(z12, z12.element(4), z12.element(8))
    assert divides(z12, z12.element(8), z12.element(4))
    assert not divides(z12, z12.element(4), z12.element(6))


def test_irreducible_elements(z):
    six = is_irreducible_element(z, z.element(6))
    assert six.is_refuted
    assert [w.value for w in six.witness] == [2, 3]
    assert is_irreducible_element(z, z.element(7)).holds

    loc = parse_ring("Zloc:5")
    assert is_irreducible_element(loc, parse_element(loc, "p")).holds
    assert is_irreducible_element(loc, parse_element(loc, "p^2")).is_refuted


def test_irreducible_in_monloc(kxy):
    assert is_irreducible_element(kxy, parse_element(kxy, "x")).status == Status.UNFALSIFIED
    split = is_irreducible_element(kxy, parse_element(kxy, "x*y"))
    assert split.is_refuted
    a, b = split.witness
    assert a * b == parse_element(kxy, "x*y")


def test_prime_elements(z, kxy):
    assert is_prime_element(z, z.element(5)).holds
    assert is_prime_element(z, z.element(6)).is_refuted
    assert is_prime_element(kxy, parse_element(kxy, "x")).holds
    assert is_prime_element(kxy, parse_element(kxy, "x^2")).is_refuted


@pytest.mark.parametrize("value, reason", [("0", "zero-element"), ("1", "unit-element"), ("-1", "unit-element")])
def test_prime_element_preconditions(z, value, reason):
    with pytest.raises(PreconditionError) as excinfo:
        is_prime_element(z, parse_element(z, value))
    assert excinfo.value.reason == reason


smooth = st.tuples(st.integers(0, 6), st.integers(0, 4), st.sampled_from([1, -1]))


@given(smooth, smooth)
def test_zinv_units_closed_under_product(a, b):
    ring = H.int_inv(6)
    x = ring.element(a[2] * 2 ** a[0] * 3 ** a[1])
    y = ring.element(Fraction(b[2], 2 ** b[0] * 3 ** b[1]))
    assert is_unit(ring, x) and is_unit(ring, y)
    assert is_unit(ring, x * y)


@given(
    st.sampled_from(["x", "y", "x^2+y", "x*y", "x+y^3"]),
    st.sampled_from(["1", "2+x", "1-y", "3+x*y"]),
    st.sampled_from(["1+x", "1+y^2", "5-x+y"]),
)
def test_monloc_equality_ignores_unit_factors(f, g, h):
    kxy = H.mon_loc()
    plain = parse_element(kxy, f"({f})/({g})")
    scaled = parse_element(kxy, f"({f})*({h})/(({g})*({h}))")
    assert plain == scaled
    assert hash(plain) == hash(scaled)


def test_residue_system_of_z():
    system = residue_system(H.integers(), 12)
    assert system.classes == tuple(range(12))
    assert system.representative(1).value == 13
    assert system.representative(5).value == 5
    assert len(system.nonunit_classes()) == 12
    assert system.describe() == "Z mod 12"


def test_residue_system_lifts_are_nonunits():
    ring = H.int_inv(2)
    system = residue_system(ring, 9)
    for cls, rep in zip(system.classes, system.representatives):
        assert not is_unit(ring, rep)
        assert (rep.value.numerator - cls) % 9 == 0


def test_residue_system_of_finite_ring(z12):
    system = residue_system(z12)
    assert system.nonunit_classes() == (0, 2, 3, 4, 6, 8, 9, 10)
    assert system.representative(5) is None
    with pytest.raises(ValueError):
        residue_system(H.integers())
    with pytest.raises(ValueError):
        residue_system(H.mon_loc(), 4)


def test_nonunit_lift():
    z = H.integers()
    assert nonunit_lift(z, 12, 1) == 13
    assert nonunit_lift(z, 12, 0) == 0
    assert nonunit_lift(z, 0, 1) is None
    assert nonunit_lift(H.int_loc(5), 25, 3) is None
    assert nonunit_lift(H.zmod(12), 12, 7) is None
