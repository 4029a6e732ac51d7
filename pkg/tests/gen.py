"""Random curve data shared by the property tests and the acceptance run."""

import random

from hypothesis import strategies as st

from tamenodal.datum import CurveDatum, solve_admissible_weight, xel


def _elements(comps):
    out = []
    for k, (pp, pm) in enumerate(comps, start=1):
        out += [xel(k, j, "+") for j in range(1, pp + 1)]
        out += [xel(k, j, "-") for j in range(1, pm + 1)]
    return out


def random_gentle_datum(rng: random.Random, max_comps=4, max_len=5, reflexive=False):
    comps = [(rng.randint(1, max_len), rng.randint(1, max_len))
             for _ in range(rng.randint(1, max_comps))]
    elems = _elements(comps)
    rng.shuffle(elems)
    n_ties = rng.randint(0, len(elems) // 2)
    ties = [(elems[2 * i], elems[2 * i + 1]) for i in range(n_ties)]
    rest = elems[2 * n_ties:]
    refl = [e for e in rest if rng.random() < 0.2] if reflexive else []
    return CurveDatum(comps, (), ties, refl)


def admissible_gentle_data(seed: int, count: int, **kw):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = random_gentle_datum(rng, **kw)
        if solve_admissible_weight(d) is not None:
            out.append(d)
    return out


@st.composite
def gentle_data(draw, max_comps=3, max_len=4):
    comps = draw(st.lists(st.tuples(st.integers(1, max_len), st.integers(1, max_len)),
                          min_size=1, max_size=max_comps))
    elems = draw(st.permutations(_elements(comps)))
    n_ties = draw(st.integers(0, len(elems) // 2))
    ties = [(elems[2 * i], elems[2 * i + 1]) for i in range(n_ties)]
    return CurveDatum(comps, (), ties)
