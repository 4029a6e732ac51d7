"""Acceptance run: one PASS/FAIL line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import load_curve, load_nodal, load_quiver  # noqa: E402
from gen import admissible_gentle_data, random_gentle_datum  # noqa: E402

from tamenodal import ag, builder, datum, moves, nodal_report  # noqa: E402
from tamenodal.cli import run_captured  # noqa: E402
from tamenodal.dsl import render_presentation  # noqa: E402
from tamenodal.gentle import check_gentle  # noqa: E402
from tamenodal.iso import presentations_isomorphic  # noqa: E402
from tamenodal.surface import SurfaceError, surface_model  # noqa: E402

RESULTS: dict[int, str] = {}

GENTLE_FILES = ["upsilon1", "ag_example2", "intro_example1", "mod1_input", "mod1_output",
                "kronecker"]


def gentle_fixtures():
    out = {f"upsilon({n})": builder.upsilon(n) for n in (1, 2, 3)}
    out.update({name: load_quiver(name) for name in GENTLE_FILES})
    out["lambda(2,1)"] = builder.build_lambda(datum.CurveDatum([(2, 1)]))
    out["gamma(3,2)"] = builder.build_gamma(3, 2)
    for name, p in out.items():
        assert check_gentle(p).is_gentle, name
    return out


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(RESULTS[n])


def crit1():
    phi = ag.ag_invariant(builder.build_fixture("upsilon", 1)).phi
    return phi == {(1, 3): 2}, f"phi(Upsilon_1) = {phi}"


def crit2():
    direct = ag.ag_invariant(load_quiver("ag_example2")).phi
    closed = ag.ag_closed_form(load_curve("ag_example2")).phi
    want = {(1, 2): 1, (3, 6): 1}
    return direct == want and closed == want, f"direct {direct}, closed form {closed}"


def crit3():
    u = surface_model(builder.upsilon(1))
    e = surface_model(load_quiver("ag_example2"))
    ok = ((u.genus, u.boundary) == (1, 2) and u.boundaries == ((1, -2), (1, -2))
          and e.boundaries == ((1, -1), (3, -3)))
    return ok, f"Upsilon_1 g={u.genus} b={u.boundary} {list(u.boundaries)}; " \
               f"second AG example {list(e.boundaries)}"


def crit4():
    start = time.perf_counter()
    data = admissible_gentle_data(seed=4, count=100)
    bad = [d for d in data if not ag.cross_validate(d)]
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 10, f"{100 - len(bad)}/100 agree in {elapsed:.2f}s"


def crit5():
    hits = []
    for name in ("intro_example1", "intro_example2"):
        built = builder.build_lambda(load_curve(name))
        hits.append(presentations_isomorphic(built, load_quiver(name)) is not None)
    return all(hits), f"isomorphic to transcriptions: {hits}"


def crit6():
    p = load_quiver("mod1_input")
    for j in ("J1", "J2"):
        p = moves.modify_one(p, moves.match_at(p, j))
    one = presentations_isomorphic(p, load_quiver("mod1_output")) is not None
    q = load_quiver("mod2_input")
    q = moves.modify_two(q, moves.match_at(q, "Lp"))
    for j in ("J", "K"):
        q = moves.modify_one(q, moves.match_at(q, j))
    two = presentations_isomorphic(q, load_quiver("mod2_output")) is not None
    return one and two, f"first example {one}, second example {two}"


def crit7():
    cases = [p for p in gentle_fixtures().values() if any(
        m.kind == "glue" for m in moves.find_fragments(p))]
    rng = random.Random(7)
    n_random = 0
    while n_random < 50:
        d = random_gentle_datum(rng)
        if d.ties:
            cases.append(builder.build_lambda(d))
            n_random += 1
    checked = broken = 0
    for p in cases:
        before = ag.ag_invariant(p).phi
        for m in moves.find_fragments(p):
            if m.kind != "glue":
                continue
            checked += 1
            if ag.ag_invariant(moves.modify_one(p, m)).phi != before:
                broken += 1
    return broken == 0 and checked >= 50, f"{checked - broken}/{checked} glue moves keep phi"


def crit8():
    bad = []
    for name, p in gentle_fixtures().items():
        ts = ag.threads(p)
        inv = ag.ag_invariant(p)
        n1 = len(p.arrows)
        forb = sum(len(t) for t in ts.forbidden) + sum(n for _, n in inv.special_pairs)
        perm = sum(len(t) for t in ts.permitted)
        if forb != n1 or perm != n1 or len(ts.permitted) != len(ts.forbidden):
            bad.append(name)
    return not bad, "all fixtures balanced" if not bad else f"unbalanced: {bad}"


def crit9():
    explicit = datum.CurveDatum([(2, 1)], (), [("x:1:1:+", "x:1:1:-")])
    rejected = datum.solve_admissible_weight(explicit) is None
    rng = random.Random(9)
    tried = accepted = 0
    for _ in range(300):
        d = random_gentle_datum(rng, reflexive=True)
        if not datum.admissibility_hint(d):
            continue
        tried += 1
        wa = datum.solve_admissible_weight(d)
        accepted += wa is not None and not datum.verify_weights(d, wa)
    stacky = []
    for ns, cs in [((1,), (1,)), ((2,), (1,)), ((2, 3), (1, 2)), ((3, 4, 5), (2, 3, 4))]:
        d, wa = datum.build_stacky_cycle(ns, cs)
        stacky.append(not datum.verify_weights(d, wa) and datum.solve_admissible_weight(d))
    ok = rejected and accepted == tried and all(stacky)
    return ok, (f"explicit datum rejected {rejected}; sufficient-condition data accepted "
                f"{accepted}/{tried}; stacky weights verify {[bool(s) for s in stacky]}")


def crit10():
    z = load_nodal("zhelobenko")
    cover = nodal_report.hereditary_cover(z)
    conn, center = nodal_report.connectivity_and_center(z)
    a = datum.NodalDatum(["1", "2", "3", "4"], {"1": "2", "2": "1", "3": "4", "4": "3"},
                         [("2", "3")])
    row = {d for (g, d), v in nodal_report.ext_table(a).items() if g == "{2,3}" and v}
    g = nodal_report.ext_table(load_nodal("gelfand"))
    gel = [{d for (x, d), v in g.items() if x == h and v} for h in ("2+", "2-")]
    ok = (sorted(cover) == [(1,), (1, 1)] and conn and center == "k[[w1,w2]]/(w1*w2)"
          and row == {"1", "4"} and gel == [{"1"}, {"1"}])
    return ok, f"cover {cover}, connected {conn}, center {center}; {{2,3}} -> {sorted(row)}; " \
               f"2+/2- -> {[sorted(s) for s in gel]}"


def crit11():
    bad = []
    for name, p in gentle_fixtures().items():
        try:
            s = surface_model(p)
        except SurfaceError:
            continue
        if (s.euler + s.boundary) % 2 or s.genus < 0:
            bad.append(name)
    codes = {}
    for label, p in [("deg_tubular", builder.deg_tubular()),
                     ("gamma_22q", builder.build_gamma_22q(3))]:
        text = render_presentation(p)
        for cmd in ("gentle", "ag", "surface"):
            codes[(label, cmd)] = _run_stdin([cmd, "-"], text)
    ok = not bad and all(c == 1 for c in codes.values())
    return ok, f"parity failures {bad}; gated exit codes {sorted(set(codes.values()))}"


def _run_stdin(argv, text):
    import io
    old = sys.stdin
    sys.stdin = io.StringIO(text)
    try:
        return run_captured(argv)[0]
    finally:
        sys.stdin = old


CRITERIA = {1: crit1, 2: crit2, 3: crit3, 4: crit4, 5: crit5, 6: crit6, 7: crit7,
            8: crit8, 9: crit9, 10: crit10, 11: crit11}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    record(n, ok, detail)
    assert ok, RESULTS[n]


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]()
        record(n, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
