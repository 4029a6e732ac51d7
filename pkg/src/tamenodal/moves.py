"""Elementary rewrites of presentations: gluing and blow-up fragments, and
elimination of a redundant arrow.

A glue fragment is a vertex ``j`` with exactly two arrows, both incoming,
``th1: m1 -> j`` and ``th2: m2 -> j``, with zero relations ``th1 r1`` and
``th2 r2``.  A blow-up fragment is an arrow ``r: a -> b`` followed by two
arrows ``b -> j+`` and ``b -> j-`` into vertices of degree one, again with
zero relations.  The theta arrows may appear in no other relation; the rho
arrows may additionally appear in relations with two or more terms, where
they are replaced by the composite through the new vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quiver import Arrow, Presentation, PresentationError, Relation


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class FragmentMatch:
    kind: str  # "glue" or "blowup"
    j: str
    vertices: tuple[str, ...]  # glue: (s1, m1, s2, m2, j); blowup: (a, b, j+, j-)
    arrows: tuple[str, ...]  # glue: (r1, th1, r2, th2); blowup: (r, th+, th-)

    def __str__(self) -> str:
        return f"{self.kind} at {self.j}: arrows {' '.join(self.arrows)}"


def _relations_of(p: Presentation) -> dict[str, list[Relation]]:
    idx: dict[str, list[Relation]] = {a.name: [] for a in p.arrows}
    for r in p.relations:
        for a in r.arrows():
            idx[a].append(r)
    return idx


def _degree(p: Presentation, v: str) -> int:
    return len(p.in_arrows(v)) + len(p.out_arrows(v))


def _theta_partner(p: Presentation, idx, th: str) -> str | None:
    """If ``th`` occurs in exactly one relation and it is ``th r = 0``, return r."""
    rels = idx[th]
    if len(rels) != 1 or not rels[0].is_monomial:
        return None
    path = rels[0].paths[0]
    if len(path) != 2 or path[0] != th or path[1] == th:
        return None
    return path[1]


def _rho_isolated(idx, rho: str, own: list[Relation]) -> bool:
    return all(r in own or not r.is_monomial for r in idx[rho])


def find_fragments(p: Presentation) -> list[FragmentMatch]:
    idx = _relations_of(p)
    am = p.arrow_map
    out = []
    for j in p.vertices:
        ins = p.in_arrows(j)
        if len(ins) != 2 or p.out_arrows(j):
            continue
        th1, th2 = sorted(a.name for a in ins)
        r1, r2 = _theta_partner(p, idx, th1), _theta_partner(p, idx, th2)
        if r1 is None or r2 is None or r1 == r2 or {r1, r2} & {th1, th2}:
            continue
        if not (_rho_isolated(idx, r1, idx[th1]) and _rho_isolated(idx, r2, idx[th2])):
            continue
        a1, a2 = am[r1], am[r2]
        out.append(FragmentMatch("glue", j, (a1.source, a1.target, a2.source, a2.target, j),
                                 (r1, th1, r2, th2)))
    for rho in p.arrows:
        ths = []
        for b in p.out_arrows(rho.target):
            if b.name != rho.name and _theta_partner(p, idx, b.name) == rho.name \
                    and _degree(p, b.target) == 1 and b.target != rho.target:
                ths.append(b.name)
        if len(ths) != 2:
            continue
        own = idx[ths[0]] + idx[ths[1]]
        if not _rho_isolated(idx, rho.name, own):
            continue
        tp, tm = sorted(ths)
        jp, jm = am[tp].target, am[tm].target
        out.append(FragmentMatch("blowup", jp, (rho.source, rho.target, jp, jm),
                                 (rho.name, tp, tm)))
    return sorted(out, key=lambda m: (m.j, m.kind))


def match_at(p: Presentation, vertex: str) -> FragmentMatch:
    for m in find_fragments(p):
        if m.j == vertex or (m.kind == "blowup" and vertex in m.vertices[2:]):
            return m
    raise MoveError(f"no glue or blow-up fragment at vertex {vertex}")


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "_"
    taken.add(name)
    return name


def _substitute(r: Relation, arrow: str, replacement: tuple[str, ...]) -> Relation:
    terms = []
    for c, path in r.terms:
        new: tuple[str, ...] = ()
        for a in path:
            new += replacement if a == arrow else (a,)
        terms.append((c, new))
    return Relation(terms)


def _require_current(p: Presentation, m: FragmentMatch, kind: str) -> None:
    if m.kind != kind:
        raise MoveError(f"expected a {kind} fragment, got {m.kind}")
    if m not in find_fragments(p):
        raise MoveError(f"fragment {m} is not present in this presentation")


def modify_one(p: Presentation, m: FragmentMatch) -> Presentation:
    """Replace a glue fragment by the crossing fragment through j."""
    _require_current(p, m, "glue")
    r1, th1, r2, th2 = m.arrows
    s1, m1, s2, m2, j = m.vertices
    gone = {r1, th1, r2, th2}
    taken = {a.name for a in p.arrows}
    r1a, r1b = _fresh(f"{r1}_1", taken), _fresh(f"{r1}_2", taken)
    r2a, r2b = _fresh(f"{r2}_1", taken), _fresh(f"{r2}_2", taken)
    arrows = [a for a in p.arrows if a.name not in gone]
    arrows += [Arrow(r1a, s1, j), Arrow(r1b, j, m1), Arrow(r2a, s2, j), Arrow(r2b, j, m2)]
    rels = []
    for r in p.relations:
        if r.arrows() & {th1, th2}:
            continue
        r = _substitute(r, r1, (r1b, r1a))
        rels.append(_substitute(r, r2, (r2b, r2a)))
    rels += [Relation.monomial(r1b, r2a), Relation.monomial(r2b, r1a)]
    return p.with_changes(arrows=arrows, relations=rels)


def modify_two(p: Presentation, m: FragmentMatch) -> Presentation:
    """Replace a blow-up fragment by two parallel paths of length two that commute."""
    _require_current(p, m, "blowup")
    rho, tp, tm = m.arrows
    a, b, jp, jm = m.vertices
    taken = {x.name for x in p.arrows}
    p1, p2 = _fresh(f"{rho}_p1", taken), _fresh(f"{rho}_p2", taken)
    m1, m2 = _fresh(f"{rho}_m1", taken), _fresh(f"{rho}_m2", taken)
    arrows = [x for x in p.arrows if x.name not in {rho, tp, tm}]
    arrows += [Arrow(p1, a, jp), Arrow(p2, jp, b), Arrow(m1, a, jm), Arrow(m2, jm, b)]
    rels = [_substitute(r, rho, (p2, p1)) for r in p.relations if not r.arrows() & {tp, tm}]
    rels.append(Relation([(1, (p2, p1)), (-1, (m2, m1))]))
    return p.with_changes(arrows=arrows, relations=rels, kind="general")


def eliminate_redundant(p: Presentation, arrow: str) -> Presentation:
    """Remove an arrow that is a length-one term of exactly one relation,
    substituting it everywhere else from that relation."""
    if arrow not in p.arrow_map:
        raise MoveError(f"unknown arrow {arrow}")
    hosts = [r for r in p.relations if any(path == (arrow,) for path in r.paths)]
    if len(hosts) != 1:
        raise MoveError(f"arrow {arrow} is a length-one term of {len(hosts)} relations, need 1")
    host = hosts[0]
    coeff = next(c for c, path in host.terms if path == (arrow,))
    rest = [(c, path) for c, path in host.terms if path != (arrow,)]
    if any(arrow in path for _, path in rest):
        raise MoveError(f"arrow {arrow} also occurs inside a longer term of its relation")
    expansion = [(-c / coeff, path) for c, path in rest]

    def expand(c: Fraction, path: tuple[str, ...]) -> list:
        if arrow not in path:
            return [(c, path)]
        i = path.index(arrow)
        out = []
        for c2, sub in expansion:
            out += expand(c * c2, path[:i] + sub + path[i + 1:])
        return out

    rels = []
    for r in p.relations:
        if r is host:
            continue
        terms = [t for c, path in r.terms for t in expand(c, path)]
        try:
            rels.append(Relation(terms))
        except PresentationError:
            continue  # everything cancelled
    arrows = [a for a in p.arrows if a.name != arrow]
    return p.with_changes(arrows=arrows, relations=rels)
