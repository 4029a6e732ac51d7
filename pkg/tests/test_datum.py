import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from conftest import load_curve
from gen import random_gentle_datum
from tamenodal.datum import (CurveDatum, DatumError, NodalDatum, WeightAssignment,
                             admissibility_hint, build_cyclic_nodal, build_dihedral_nodal,
                             build_stacky_cycle, check_nodal_datum, parse_curve, parse_nodal,
                             render_curve, render_nodal, solve_admissible_weight, verify_weights,
                             weight_keys)


# -- nodal data -------------------------------------------------------------

def test_dyad_valid():
    chk = check_nodal_datum(NodalDatum(["1", "2"], {"1": "1", "2": "2"}, [("1", "2")]))
    assert chk.valid
    assert chk.tied == ["1", "2"]
    assert chk.omega_tilde_dagger == ["{1,2}"]


def test_reflexive_halves():
    chk = check_nodal_datum(NodalDatum(["1"], {"1": "1"}, reflexives=["1"]))
    assert chk.valid
    assert chk.omega_dagger == ["1+", "1-"] or sorted(chk.omega_dagger) == ["1+", "1-"]
    assert sorted(chk.omega_tilde_dagger) == ["1+", "1-"]


def test_two_partners_invalid():
    d = NodalDatum(["1", "2", "3"], {"1": "1", "2": "2", "3": "3"}, [("1", "2"), ("1", "3")])
    chk = check_nodal_datum(d)
    assert not chk.valid
    assert any("more than one partner" in v for v in chk.violations)


def test_sigma_must_be_bijection():
    assert not check_nodal_datum(NodalDatum(["1", "2"], {"1": "2", "2": "2"})).valid


def test_tied_weights_must_agree():
    d = NodalDatum(["1", "2"], {"1": "1", "2": "2"}, [("1", "2")], weights={"1": 1, "2": 2})
    assert not check_nodal_datum(d).valid


def test_cyclic_two_one():
    d = build_cyclic_nodal(2, 1)
    assert d.omega == ("1", "2", "t1", "t2")
    assert set(d.ties) == {("1", "t1"), ("2", "t2")}
    assert d.sigma == {"1": "2", "2": "1", "t1": "t2", "t2": "t1"}


def test_cyclic_three_two():
    d = build_cyclic_nodal(3, 2)
    assert {frozenset(t) for t in d.ties} == {frozenset(p) for p in
                                             [("t1", "2"), ("t2", "1"), ("t3", "3")]}


@pytest.mark.parametrize("n, c", [(4, 2), (3, 0), (3, 3)])
def test_cyclic_preconditions(n, c):
    with pytest.raises(DatumError):
        build_cyclic_nodal(n, c)


@pytest.mark.parametrize("n, ties, refl", [
    (3, {("1", "2")}, ("3",)),
    (2, set(), ("0", "1")),
    (4, {("1", "2")}, ("0", "3")),
])
def test_dihedral(n, ties, refl):
    d = build_dihedral_nodal(n)
    assert set(d.ties) == ties and d.reflexives == refl
    assert check_nodal_datum(d).valid


def test_nodal_text_round_trip():
    d = build_dihedral_nodal(5)
    assert parse_nodal(render_nodal(d)) == d


# -- curve data and admissibility ------------------------------------------

def test_curve_text_round_trip():
    d = load_curve("intro_example2")
    assert parse_curve(render_curve(d)).__dict__ == d.__dict__


def test_out_of_range_tie():
    with pytest.raises(DatumError):
        CurveDatum([(1, 1)], (), [("x:1:1:+", "x:1:2:+")]).validate()


def test_explicit_non_admissible():
    # one point of length two, one of length one, and the first element of the
    # long point tied to the short one: w1 = M forces w2 = 0
    d = CurveDatum([(2, 1)], (), [("x:1:1:+", "x:1:1:-")])
    assert solve_admissible_weight(d) is None


def test_untied_datum_admissible():
    d = CurveDatum([(2, 3)])
    wa = solve_admissible_weight(d)
    assert not verify_weights(d, wa)
    # the total must be at least the longer point length
    assert wa.component_totals["p1"] >= 3


def test_intro_example_two_weights():
    d = load_curve("intro_example2")
    wa = solve_admissible_weight(d)
    assert wa is not None and not verify_weights(d, wa)
    assert set(wa.weights) == set(weight_keys(d))
    assert "w:1:2@+" in wa.weights


def test_verify_catches_bad_sum():
    d = CurveDatum([(2, 1)])
    bad = WeightAssignment({"x:1:1:+": 1, "x:1:2:+": 1, "x:1:1:-": 3}, {"p1": 2})
    assert verify_weights(d, bad)


def test_stacky_nodal_cubic():
    d, wa = build_stacky_cycle([1], [1])
    assert d.p_components == ((1, 1),)
    assert d.ties == (("x:1:1:+", "x:1:1:-"),)
    assert set(wa.weights.values()) == {1}


def test_stacky_two_three():
    d, wa = build_stacky_cycle([2, 3], [1, 1])
    assert d.p_components == ((3, 2), (2, 3))
    assert set(wa.weights.values()) == {2, 3}
    assert set(wa.component_totals.values()) == {6}
    assert not verify_weights(d, wa)
    assert solve_admissible_weight(d) is not None


def test_stacky_precondition():
    with pytest.raises(DatumError):
        build_stacky_cycle([2, 2], [2, 1])


def _strictly_positive_feasible(d):
    """Independent LP formulation of the admissibility system, solved with scipy."""
    comps = [f"p{k}" for k in range(1, len(d.p_components) + 1)] + \
            [f"q{k}" for k in range(1, len(d.q_components) + 1)]
    names = comps + weight_keys(d)
    points = []
    for k, (pp, pm) in enumerate(d.p_components, start=1):
        points.append((f"p{k}", [f"x:{k}:{j}:+" for j in range(1, pp + 1)], 0))
        points.append((f"p{k}", [f"x:{k}:{j}:-" for j in range(1, pm + 1)], 0))
    for k, q in enumerate(d.q_components, start=1):
        points += [(f"q{k}", [], 2), (f"q{k}", [], 2),
                   (f"q{k}", [f"w:{k}:{j}" for j in range(1, q + 1)], 0)]
    n_slack = sum(s for *_, s in points)
    idx = {n: i for i, n in enumerate(names)}
    width = len(names) + n_slack
    rows, s = [], len(names)
    for comp, elems, slack in points:
        row = np.zeros(width)
        row[idx[comp]] = -1
        for e in elems:
            for key in ([f"{e}@+", f"{e}@-"] if e in d.reflexives else [e]):
                row[idx[key]] += 1
        for _ in range(slack):
            row[s] = 1
            s += 1
        rows.append(row)
    for a, b in d.ties:
        row = np.zeros(width)
        row[idx[a]], row[idx[b]] = 1, -1
        rows.append(row)
    res = linprog(np.zeros(width), A_eq=np.array(rows), b_eq=np.zeros(len(rows)),
                  bounds=[(1, None)] * width, method="highs")
    return res.status == 0


@st.composite
def curve_data(draw):
    comps = draw(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), max_size=3))
    qs = draw(st.lists(st.integers(1, 3), max_size=2))
    if not comps and not qs:
        comps = [(1, 1)]
    elems = CurveDatum(comps, qs).elements()
    elems = draw(st.permutations(elems))
    n_ties = draw(st.integers(0, len(elems) // 2))
    ties = [(elems[2 * i], elems[2 * i + 1]) for i in range(n_ties)]
    rest = elems[2 * n_ties:]
    refl = draw(st.lists(st.sampled_from(rest), unique=True)) if rest else []
    return CurveDatum(comps, qs, ties, refl)


@settings(max_examples=150, deadline=None)
@given(curve_data())
def test_solver_agrees_with_lp_oracle(d):
    wa = solve_admissible_weight(d)
    assert (wa is not None) == _strictly_positive_feasible(d)
    if wa is not None:
        assert verify_weights(d, wa) == []
        assert all(isinstance(v, int) for v in wa.weights.values())


def _every_tied_point_has_a_free_element(d):
    for k, (pp, pm) in enumerate(d.p_components, start=1):
        for sign, length in (("+", pp), ("-", pm)):
            elems = [f"x:{k}:{j}:{sign}" for j in range(1, length + 1)]
            if any(d.is_tied(e) for e in elems) and all(d.is_tied(e) for e in elems):
                return False
    return True


def test_strengthened_condition_is_sufficient():
    # the corrected condition (also covering points of length one) always admits weights
    rng = random.Random(11)
    hits = 0
    for _ in range(300):
        d = random_gentle_datum(rng, reflexive=True)
        if _every_tied_point_has_a_free_element(d):
            hits += 1
            assert solve_admissible_weight(d) is not None
    assert hits > 50


def test_literal_hint_on_explicit_example():
    # the literal condition only looks at points of length >= 2 and so
    # accepts the datum the solver rejects; see the decisions ledger
    d = CurveDatum([(2, 1)], (), [("x:1:1:+", "x:1:1:-")])
    assert admissibility_hint(d)
    assert solve_admissible_weight(d) is None
