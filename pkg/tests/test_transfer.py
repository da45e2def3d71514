import pytest

from app.classify import is_one_absorbing_primary
from app.errors import BackendMismatchError, NotProperError, ParseError, PreconditionError
from app.ideals.ideal import Ideal, parse_ideal
from app.ideals.operations import in_zdiv
from app.rings import handles as H
from app.rings.parsing import parse_ring
from app.transfer.homs import (
    check_hom_hypotheses,
    identity,
    image_ideal,
    parse_hom,
    preimage_ideal,
    projection,
    quotient_map,
)
from app.transfer.localization import complement_of, localize, parse_localization, powers_of


def test_quotient_onto_z9_sends_a_nonunit_to_a_unit():
    check = check_hom_hypotheses(parse_hom("q:Z->Z/9"))
    assert check.identity_ok
    assert check.nonunit_preserving is False
    assert check.witness.value == 2
    assert check.branch == "quasilocal-target"


def test_chain_quotient_preserves_nonunits():
    check = check_hom_hypotheses(parse_hom("q:Z/8->Z/4"))
    assert check.identity_ok
    assert check.nonunit_preserving is True
    assert check.witness is None


def test_non_quasilocal_target_takes_primary_route():
    check = check_hom_hypotheses(parse_hom("q:Z->Z/12"))
    assert check.nonunit_preserving is None
    assert check.branch.startswith("non-quasilocal")


def test_projection_to_local_factor():
    f = projection(parse_ring("Z/4xZ/9"), 0)
    check = check_hom_hypotheses(f)
    assert check.nonunit_preserving is False
    assert check.to_dict()["witness"] == "(1,0)"


def test_identity():
    f = identity(H.zmod(8))
    assert check_hom_hypotheses(f).nonunit_preserving is True
    assert f.kernel.is_zero


@pytest.mark.parametrize("spec", ["q:Z->Z/12", "q:Z/8->Z/4", "proj1:Z/4xZ/9", "proj2:ZxZ", "id:Z/8"])
def test_hom_specs_print_back(spec):
    assert str(parse_hom(spec)) == spec


@pytest.mark.parametrize("spec", ["q:Z/8->Z/3", "q:Z->Z", "proj1:Z/8", "f:Z->Z/2", "q:Zloc:5->Z/5"])
def test_bad_hom_specs(spec):
    with pytest.raises(ParseError):
        parse_hom(spec)


def test_preimage_and_image():
    f = quotient_map(H.integers(), H.zmod(12))
    j = parse_ideal(H.zmod(12), "(4)")
    assert str(preimage_ideal(f, j)) == "(4)"
    assert str(image_ideal(f, parse_ideal(H.integers(), "(4)"))) == "(4)"
    assert str(f.kernel) == "(12)"

    g = projection(parse_ring("ZxZ"), 1)
    assert str(preimage_ideal(g, parse_ideal(H.integers(), "(9)"))) == "(1)x(9)"
    assert str(image_ideal(g, parse_ideal(parse_ring("ZxZ"), "(1)x(9)"))) == "(9)"


def test_image_needs_kernel_inside():
    f = quotient_map(H.integers(), H.zmod(12))
    with pytest.raises(PreconditionError) as excinfo:
        image_ideal(f, parse_ideal(H.integers(), "(5)"))
    assert excinfo.value.reason == "kernel-not-contained"
    with pytest.raises(BackendMismatchError):
        preimage_ideal(f, parse_ideal(H.integers(), "(4)"))


def test_preimage_keeps_one_absorbing():
    # contraction along a quotient with a quasilocal target
    f = quotient_map(H.zmod(27), H.zmod(9))
    for literal in ("(3)", "(0)"):
        j = parse_ideal(H.zmod(9), literal)
        assert is_one_absorbing_primary(j).holds
        assert is_one_absorbing_primary(preimage_ideal(f, j)).holds


@pytest.mark.parametrize(
    "spec, literal, extended, disjoint, zdiv_disjoint",
    [
        ("S=2^k", "(12)", "(3)", True, False),
        ("S=2^k", "(9)", "(9)", True, True),
        ("S=2^k", "(8)", "(1)", False, False),
        ("S=6^k", "(0)", "(0)", True, True),
        ("S=comp(5)", "(25)", "p^2", True, True),
        ("S=comp(5)", "(10)", "p", True, False),
        ("S=comp(5)", "(12)", "(1)", False, False),
    ],
)
def test_localize(spec, literal, extended, disjoint, zdiv_disjoint):
    result = localize(parse_localization(spec), parse_ideal(H.integers(), literal))
    assert str(result.extended) == extended
    assert result.disjoint == disjoint
    assert result.zdiv_disjoint == zdiv_disjoint
    assert result.to_dict()["spec"] == spec


def test_localize_needs_proper_ideal_of_z():
    with pytest.raises(NotProperError):
        localize(powers_of(2), parse_ideal(H.integers(), "(1)"))
    with pytest.raises(BackendMismatchError):
        localize(powers_of(2), parse_ideal(H.zmod(12), "(4)"))


@pytest.mark.parametrize("spec", ["S=1^k", "S=comp(4)", "S=2", "T=2^k"])
def test_bad_localization_specs(spec):
    with pytest.raises(ParseError):
        parse_localization(spec)


def test_zdiv_disjointness_is_coprimality():
    z = H.integers()
    for s in (2, 3, 5, 7):
        spec = powers_of(s)
        for m in range(2, 201):
            result = localize(spec, Ideal(z, m))
            assert result.zdiv_disjoint == (m % s != 0), f"m={m} s={s}"
            assert result.zdiv_disjoint == (not in_zdiv(Ideal(z, m), z.element(s)))


def test_complement_membership():
    spec = complement_of(5)
    assert spec.contains(7)
    assert not spec.contains(10)
    assert powers_of(6).contains(36)
    assert not powers_of(6).contains(12)
