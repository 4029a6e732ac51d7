"""Canonical pieces, the glued algebras Lambda(p, q, ties), and named fixtures.

Naming scheme (all names are valid DSL identifiers):

* p-component k: source ``s_k``, sink ``t_k``, inner vertices ``c_k_p_j`` and
  ``c_k_m_j``; the arrow of element ``x:k:j:+`` is ``x_k_j_p`` (``_m`` for -).
* q-component k: source ``qs_k``, sink ``qt_k``, arm vertices ``qp_k``/``qm_k``,
  inner w-vertices ``qw_k_i``; arrows ``u_k_p``, ``v_k_p``, ``u_k_m``,
  ``v_k_m`` and ``w_k_i`` for element ``w:k:i``.
* the i-th tie adds vertex ``g_i`` and arrows ``th_i_1``, ``th_i_2``;
  a reflexive element e adds vertices ``b_<e>_p``/``b_<e>_m`` and arrows
  ``tb_<e>_p``/``tb_<e>_m``.
"""

from __future__ import annotations

from fractions import Fraction

from .datum import CurveDatum, DatumError, parse_element
from .quiver import Arrow, Presentation, Relation, disjoint_union


def element_arrow(e: str) -> str:
    t = parse_element(e)
    if t[0] == "x":
        return f"x_{t[1]}_{t[2]}_{'p' if t[3] == '+' else 'm'}"
    return f"w_{t[1]}_{t[2]}"


def _chain(src: str, dst: str, inner: list[str], arrows: list[str]) -> list[Arrow]:
    stops = [src] + inner + [dst]
    return [Arrow(a, stops[i], stops[i + 1]) for i, a in enumerate(arrows)]


def _gamma(k: int, pp: int, pm: int) -> Presentation:
    s, t = f"s_{k}", f"t_{k}"
    plus = [f"c_{k}_p_{j}" for j in range(1, pp)]
    minus = [f"c_{k}_m_{j}" for j in range(1, pm)]
    arrows = (_chain(s, t, plus, [f"x_{k}_{j}_p" for j in range(1, pp + 1)])
              + _chain(s, t, minus, [f"x_{k}_{j}_m" for j in range(1, pm + 1)]))
    return Presentation([s, t] + plus + minus, arrows, name=f"Gamma_{pp}_{pm}", kind="gentle")


def build_gamma(p_plus: int, p_minus: int) -> Presentation:
    """Two chains of lengths p_plus and p_minus from a common source to a common sink."""
    if p_plus < 1 or p_minus < 1:
        raise DatumError(["chain lengths must be positive"])
    return _gamma(1, p_plus, p_minus)


def _gamma_22q(k: int, q: int) -> Presentation:
    s, t, vp, vm = f"qs_{k}", f"qt_{k}", f"qp_{k}", f"qm_{k}"
    inner = [f"qw_{k}_{i}" for i in range(1, q)]
    w = [f"w_{k}_{i}" for i in range(1, q + 1)]
    arrows = [Arrow(f"u_{k}_p", s, vp), Arrow(f"v_{k}_p", vp, t),
              Arrow(f"u_{k}_m", s, vm), Arrow(f"v_{k}_m", vm, t)]
    arrows += _chain(s, t, inner, w)
    rel = Relation([(1, (f"v_{k}_p", f"u_{k}_p")), (1, (f"v_{k}_m", f"u_{k}_m")),
                    (1, tuple(reversed(w)))])
    return Presentation([s, t, vp, vm] + inner, arrows, [rel],
                        name=f"Gamma_2_2_{q}", kind="general")


def build_gamma_22q(q: int) -> Presentation:
    if q < 1:
        raise DatumError(["q must be positive"])
    return _gamma_22q(1, q)


def build_lambda(d: CurveDatum, name: str = "Lambda") -> Presentation:
    d.validate()
    parts = [_gamma(k, pp, pm) for k, (pp, pm) in enumerate(d.p_components, start=1)]
    parts += [_gamma_22q(k, q) for k, q in enumerate(d.q_components, start=1)]
    base = disjoint_union(parts)
    am = base.arrow_map
    vertices = list(base.vertices)
    arrows = list(base.arrows)
    relations = list(base.relations)
    for i, (e1, e2) in enumerate(d.ties, start=1):
        g = f"g_{i}"
        vertices.append(g)
        for side, e in ((1, e1), (2, e2)):
            rho = element_arrow(e)
            th = f"th_{i}_{side}"
            arrows.append(Arrow(th, am[rho].target, g))
            relations.append(Relation.monomial(th, rho))
    for e in d.reflexives:
        rho = element_arrow(e)
        for s in "pm":
            v, th = f"b_{rho}_{s}", f"tb_{rho}_{s}"
            vertices.append(v)
            arrows.append(Arrow(th, am[rho].target, v))
            relations.append(Relation.monomial(th, rho))
    if d.q_components:
        kind = "general"
    elif d.reflexives:
        kind = "skew-gentle"
    else:
        kind = "gentle"
    return Presentation(vertices, arrows, relations, name=name, kind=kind)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def upsilon(n: int) -> Presentation:
    if n < 1:
        raise DatumError(["upsilon needs n >= 1"])
    vertices, arrows, rels = [], [], []
    for i in range(1, n + 1):
        nxt = i % n + 1
        vertices += [f"T{i}", f"M{i}", f"N{i}", f"B{i}"]
        arrows += [Arrow(f"a{i}p", f"T{i}", f"M{i}"), Arrow(f"a{i}m", f"T{i}", f"M{i}"),
                   Arrow(f"b{i}p", f"M{i}", f"N{i}"), Arrow(f"b{i}m", f"M{i}", f"N{nxt}"),
                   Arrow(f"c{i}p", f"N{i}", f"B{i}"), Arrow(f"c{i}m", f"N{i}", f"B{i}")]
        rels += [Relation.monomial(f"b{i}p", f"a{i}m"), Relation.monomial(f"b{i}m", f"a{i}p"),
                 Relation.monomial(f"c{i}m", f"b{i}p"), Relation.monomial(f"c{nxt}p", f"b{i}m")]
    return Presentation(vertices, arrows, rels, name=f"Upsilon{n}", kind="gentle")


def _star(coeffs: list[list[Fraction | int]], name: str) -> Presentation:
    """Four paths b_i a_i from a source to a sink, with one relation per coefficient row."""
    arrows = []
    for i in range(1, 5):
        arrows += [Arrow(f"a{i}", "o", f"m{i}"), Arrow(f"b{i}", f"m{i}", "z")]
    rels = [Relation([(c, (f"b{i}", f"a{i}")) for i, c in enumerate(row, start=1)])
            for row in coeffs]
    return Presentation(["o", "z", "m1", "m2", "m3", "m4"], arrows, rels,
                        name=name, kind="general")


def deg_tubular() -> Presentation:
    return _star([[1, 1, 1, 0], [1, 0, 0, -1]], "DegTub")


def tubular(lam: Fraction | int | str) -> Presentation:
    lam = Fraction(lam)
    if lam in (0, 1):
        raise DatumError([f"tubular parameter must avoid 0 and 1, got {lam}"])
    return _star([[1, -1, -1, 0], [1, -lam, 0, -1]], "Tubular")


def skew_s() -> Presentation:
    v = ["Lp", "Lm", "Mp", "Mm", "Rp", "Rm"]
    arrows = [Arrow("ap", "Lp", "Mp"), Arrow("am", "Lm", "Mm"),
              Arrow("bp", "Mp", "Rp"), Arrow("bm", "Mm", "Rm"),
              Arrow("cp", "Lp", "Mm"), Arrow("cm", "Lm", "Mp"),
              Arrow("dp", "Mp", "Rm"), Arrow("dm", "Mm", "Rp")]

    def eq(x, y):
        return Relation([(1, x), (-1, y)])

    rels = [eq(("dp", "ap"), ("bm", "cp")), eq(("dm", "am"), ("bp", "cm")),
            eq(("bp", "ap"), ("dm", "cp")), eq(("bm", "am"), ("dp", "cm"))]
    return Presentation(v, arrows, rels, name="SkewS", kind="general")


FIXTURES = ("upsilon", "deg_tubular", "skew_S", "tubular")


def build_fixture(name: str, *params) -> Presentation:
    if name == "upsilon":
        return upsilon(int(params[0]) if params else 1)
    if name == "deg_tubular" and not params:
        return deg_tubular()
    if name == "skew_S" and not params:
        return skew_s()
    if name == "tubular" and len(params) == 1:
        return tubular(params[0])
    raise DatumError([f"unknown fixture {name!r} with parameters {list(params)}"])
