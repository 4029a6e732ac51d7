"""Isomorphism of presentations by backtracking over arrows.

Relations are compared up to a nonzero scalar per relation, as multisets.
No attempt is made to compare the generated ideals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .quiver import Presentation, Relation


@dataclass(frozen=True)
class Isomorphism:
    vertices: dict[str, str]
    arrows: dict[str, str]


def _arrow_signatures(p: Presentation) -> dict[str, tuple]:
    deg = {v: (len(p.in_arrows(v)), len(p.out_arrows(v))) for v in p.vertices}
    occ: dict[str, list] = {a.name: [] for a in p.arrows}
    for r in p.relations:
        shape = tuple(sorted(len(path) for path in r.paths))
        for _, path in r.terms:
            for i, a in enumerate(path):
                occ[a].append((shape, len(path), i))
    return {a.name: (deg[a.source], deg[a.target], a.source == a.target,
                     tuple(sorted(occ[a.name])))
            for a in p.arrows}


def _vertex_signature(p: Presentation, v: str) -> tuple:
    return (len(p.in_arrows(v)), len(p.out_arrows(v)))


def _mapped_key(r: Relation, amap: dict[str, str]) -> tuple:
    return Relation([(c, tuple(amap[a] for a in path)) for c, path in r.terms]).scaled_key()


def _search_order(p: Presentation) -> list[str]:
    """Arrows ordered so that each one (where possible) touches an earlier vertex."""
    order: list[str] = []
    seen_v: set[str] = set()
    remaining = sorted(p.arrows)
    while remaining:
        pick = next((a for a in remaining if a.source in seen_v or a.target in seen_v),
                    remaining[0])
        remaining.remove(pick)
        order.append(pick.name)
        seen_v |= {pick.source, pick.target}
    return order


def presentations_isomorphic(p: Presentation, q: Presentation) -> Isomorphism | None:
    """Return a vertex/arrow bijection carrying p onto q, or None."""
    if (len(p.vertices), len(p.arrows), len(p.relations)) != \
            (len(q.vertices), len(q.arrows), len(q.relations)):
        return None
    if Counter(_vertex_signature(p, v) for v in p.vertices) != \
            Counter(_vertex_signature(q, v) for v in q.vertices):
        return None
    sig_p, sig_q = _arrow_signatures(p), _arrow_signatures(q)
    if Counter(sig_p.values()) != Counter(sig_q.values()):
        return None

    target_keys = Counter(r.scaled_key() for r in q.relations)
    # relations of p become checkable once their last arrow (in search order) is mapped
    order = _search_order(p)
    position = {a: i for i, a in enumerate(order)}
    ready: dict[str, list[Relation]] = {a: [] for a in order}
    for r in p.relations:
        ready[max(r.arrows(), key=position.__getitem__)].append(r)

    pa, qa = p.arrow_map, q.arrow_map
    vmap: dict[str, str] = {}
    vused: set[str] = set()
    amap: dict[str, str] = {}
    aused: set[str] = set()
    found: list[Counter] = [Counter()]

    def bind(u: str, w: str, bound: list[str]) -> bool:
        if u in vmap:
            return vmap[u] == w
        if w in vused:
            return False
        vmap[u] = w
        vused.add(w)
        bound.append(u)
        return True

    def unbind(bound: list[str]) -> None:
        for u in bound:
            vused.discard(vmap.pop(u))

    def step(i: int) -> bool:
        if i == len(order):
            return True
        a = pa[order[i]]
        for b_name in sorted(qa):
            if b_name in aused or sig_q[b_name] != sig_p[a.name]:
                continue
            b = qa[b_name]
            bound: list[str] = []
            if bind(a.source, b.source, bound) and bind(a.target, b.target, bound):
                amap[a.name] = b_name
                aused.add(b_name)
                keys = Counter(_mapped_key(r, amap) for r in ready[a.name])
                saved = found[0]
                total = saved + keys
                if all(total[k] <= target_keys[k] for k in keys):
                    found[0] = total
                    if step(i + 1):
                        return True
                found[0] = saved
                aused.discard(b_name)
                del amap[a.name]
            unbind(bound)
        return False

    if not step(0):
        return None
    # vertices without arrows pair up arbitrarily
    free_p = [v for v in p.vertices if v not in vmap]
    free_q = [v for v in q.vertices if v not in vused]
    if len(free_p) != len(free_q):
        return None
    vmap.update(zip(free_p, free_q))
    return Isomorphism(dict(vmap), dict(amap))
