from fractions import Fraction

import pytest

from conftest import load_curve, load_quiver
from tamenodal.builder import (build_fixture, build_gamma, build_gamma_22q, build_lambda,
                               deg_tubular, element_arrow, tubular, upsilon)
from tamenodal.datum import CurveDatum, DatumError
from tamenodal.gentle import check_gentle
from tamenodal.iso import presentations_isomorphic


def counts(p):
    return len(p.vertices), len(p.arrows), len(p.relations)


def test_gamma_shapes():
    assert counts(build_gamma(1, 1)) == (2, 2, 0)
    assert counts(build_gamma(3, 2)) == (5, 5, 0)
    assert counts(build_gamma(2, 2)) == (4, 4, 0)
    with pytest.raises(DatumError):
        build_gamma(0, 2)


def test_gamma_22q():
    one = build_gamma_22q(1)
    assert counts(one) == (4, 5, 1)
    (r,) = one.relations
    assert sorted(len(p) for p in r.paths) == [1, 2, 2]
    two = build_gamma_22q(2)
    assert counts(two) == (5, 6, 1)
    assert sorted(len(p) for p in two.relations[0].paths) == [2, 2, 2]
    assert not check_gentle(one).is_gentle


def test_element_arrow_names():
    assert element_arrow("x:1:2:+") == "x_1_2_p"
    assert element_arrow("x:3:1:-") == "x_3_1_m"
    assert element_arrow("w:1:2") == "w_1_2"


def test_lambda_without_ties_is_kronecker():
    p = build_lambda(CurveDatum([(1, 1)]))
    assert p.kind == "gentle"
    assert presentations_isomorphic(p, load_quiver("kronecker")) is not None


@pytest.mark.parametrize("name, shape", [("intro_example1", (7, 9, 4)),
                                         ("intro_example2", (13, 16, 7)),
                                         ("ag_example2", (6, 8, 4))])
def test_lambda_matches_transcriptions(name, shape):
    built = build_lambda(load_curve(name))
    assert counts(built) == shape
    assert presentations_isomorphic(built, load_quiver(name)) is not None


def test_lambda_kinds():
    assert build_lambda(load_curve("intro_example1")).kind == "gentle"
    assert build_lambda(load_curve("intro_example2")).kind == "general"
    assert build_lambda(CurveDatum([(1, 1)], (), (), ["x:1:1:+"])).kind == "skew-gentle"


def test_upsilon_counts():
    assert counts(upsilon(1)) == (4, 6, 4)
    assert counts(upsilon(3)) == (12, 18, 12)
    assert all(r.is_monomial for r in upsilon(2).relations)


def test_named_fixtures():
    assert counts(build_fixture("deg_tubular")) == (6, 8, 2)
    assert counts(build_fixture("skew_S")) == (6, 8, 4)
    assert all(len(r.terms) == 2 for r in build_fixture("skew_S").relations)
    assert counts(build_fixture("tubular", "3/2")) == (6, 8, 2)


def test_tubular_parameter():
    with pytest.raises(DatumError):
        tubular(1)
    coeffs = {c for r in tubular(Fraction(5, 3)).relations for c, _ in r.terms}
    assert Fraction(-5, 3) in coeffs


def test_unknown_fixture():
    with pytest.raises(DatumError):
        build_fixture("nope")


def test_deg_tubular_not_gentle():
    assert not check_gentle(deg_tubular()).is_gentle
