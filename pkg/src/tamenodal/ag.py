"""Permitted and forbidden threads, the permutation on forbidden threads and
the derived invariant ``phi`` of a gentle algebra.

Two independent routes are provided: a direct computation on any gentle
presentation, and a closed form on gentle curve data that only needs the
tie relation and the chain lengths.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .builder import build_lambda
from .datum import CurveDatum, DatumError, element_key, parse_element, xel
from .gentle import check_gentle
from .quiver import Path, Presentation


class NotGentleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Thread:
    kind: str  # "permitted" or "forbidden"
    path: Path

    def key(self) -> tuple:
        return (self.kind, self.path.key())

    def __len__(self) -> int:
        return len(self.path)

    def __str__(self) -> str:
        return str(self.path)


@dataclass
class ThreadSystem:
    permitted: list[Thread]
    forbidden: list[Thread]
    theta_plus: dict[Thread, Thread]
    theta_minus: dict[Thread, Thread]
    forbidden_cycles: list[Path] = field(default_factory=list)


@dataclass(frozen=True)
class Cycle:
    members: tuple[str, ...]
    m: int
    n: int


@dataclass
class AGInvariant:
    cycles: list[Cycle]
    special_pairs: list[tuple[int, int]]
    phi: dict[tuple[int, int], int]


def _phi(cycles: list[Cycle], special: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    c = Counter((cy.m, cy.n) for cy in cycles) + Counter(special)
    return dict(sorted(c.items()))


def _maximal_paths(p: Presentation, in_ideal: bool, skip: set[str]) -> list[Path]:
    """Maximal paths whose consecutive pairs are all in I (or all outside I)."""
    pairs = p.monomial_pairs()

    def linked(b: str, a: str) -> bool:
        return ((b, a) in pairs) == in_ideal

    out = []
    for a in p.arrows:
        if a.name in skip:
            continue
        if any(linked(a.name, c.name) for c in p.in_arrows(a.source)):
            continue
        path = [a.name]
        cur = a
        while True:
            nxt = [b for b in p.out_arrows(cur.target) if linked(b.name, cur.name)]
            if not nxt:
                break
            cur = nxt[0]
            path.append(cur.name)
        out.append(Path(tuple(reversed(path))))
    return out


def _trivial_threads(p: Presentation, in_ideal: bool) -> list[Path]:
    pairs = p.monomial_pairs()
    out = []
    for v in p.vertices:
        ins, outs = p.in_arrows(v), p.out_arrows(v)
        if len(ins) > 1 or len(outs) > 1:
            continue
        if ins and outs and ((outs[0].name, ins[0].name) in pairs) != in_ideal:
            continue
        out.append(Path.trivial(v))
    return out


def _require_gentle(p: Presentation):
    rep = check_gentle(p)
    if not rep.is_gentle:
        raise NotGentleError("; ".join(str(v) for v in rep.violations))
    return rep


def threads(p: Presentation) -> ThreadSystem:
    rep = _require_gentle(p)
    on_cycle = {a for c in rep.forbidden_cycles for a in c.arrows}
    perm = [Thread("permitted", x) for x in
            sorted(_maximal_paths(p, False, set()) + _trivial_threads(p, False), key=Path.key)]
    forb = [Thread("forbidden", x) for x in
            sorted(_maximal_paths(p, True, on_cycle) + _trivial_threads(p, True), key=Path.key)]

    def src(t: Thread) -> str:
        return t.path.vertex if t.path.is_trivial else p.source(t.path.arrows)

    def tgt(t: Thread) -> str:
        return t.path.vertex if t.path.is_trivial else p.target(t.path.arrows)

    def unique(cands: list[Thread], what: str) -> Thread:
        if len(cands) != 1:
            raise AssertionError(f"{what}: expected one candidate, got {[str(c) for c in cands]}")
        return cands[0]

    plus: dict[Thread, Thread] = {}
    for pi in perm:
        if not pi.path.is_trivial:
            cands = [f for f in forb if tgt(f) == tgt(pi)
                     and (f.path.is_trivial or f.path.last != pi.path.last)]
            plus[pi] = unique(cands, f"theta+ of {pi}")
        else:
            v = pi.path.vertex
            ins = p.in_arrows(v)
            if ins:
                b = ins[0].name
                plus[pi] = unique([f for f in forb if not f.path.is_trivial and f.path.last == b],
                                  f"theta+ of {pi}")
            else:
                plus[pi] = Thread("forbidden", pi.path)
    minus: dict[Thread, Thread] = {}
    for ph in forb:
        if not ph.path.is_trivial:
            cands = [t for t in perm if src(t) == src(ph)
                     and (t.path.is_trivial or t.path.first != ph.path.first)]
            minus[ph] = unique(cands, f"theta- of {ph}")
        else:
            v = ph.path.vertex
            outs = p.out_arrows(v)
            if outs:
                a = outs[0].name
                minus[ph] = unique([t for t in perm if not t.path.is_trivial and t.path.first == a],
                                   f"theta- of {ph}")
            else:
                minus[ph] = Thread("permitted", ph.path)
    return ThreadSystem(perm, forb, plus, minus, rep.forbidden_cycles)


def _cycles_of(perm: dict, length, label) -> list[Cycle]:
    seen = set()
    out = []
    for start in sorted(perm, key=label):
        if start in seen:
            continue
        members = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            members.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out.append(Cycle(tuple(str(x) for x in members), len(members),
                         sum(length(x) for x in members)))
    return out


def ag_invariant(p: Presentation) -> AGInvariant:
    ts = threads(p)
    theta = {f: ts.theta_plus[ts.theta_minus[f]] for f in ts.forbidden}
    if sorted(theta.values(), key=Thread.key) != ts.forbidden:
        raise AssertionError("theta is not a permutation of the forbidden threads")
    cycles = _cycles_of(theta, len, Thread.key)
    special = [(0, len(c)) for c in ts.forbidden_cycles]
    return AGInvariant(cycles, special, _phi(cycles, special))


def _closed_form_check(d: CurveDatum) -> None:
    d.validate()
    if not d.is_gentle_type:
        raise DatumError(["closed form needs no q-components and no reflexive elements"])


def ag_closed_form(d: CurveDatum) -> AGInvariant:
    """Cycles of rho = sigma o tau on the element set, with weight 2 on tied elements."""
    _closed_form_check(d)
    elems = d.elements()

    def sigma(x: str) -> str:
        return d.partner(x) or x

    def tau(x: str) -> str:
        _, k, j, s = parse_element(x)
        length = d.p_components[k - 1][0 if s == "+" else 1]
        return xel(k, j - 1 if j > 1 else length, s)

    rho = {x: sigma(tau(x)) for x in elems}

    def weight(x: str) -> int:
        return 2 if d.is_tied(x) else 1

    cycles = _cycles_of(rho, weight, element_key)
    return AGInvariant(cycles, [], _phi(cycles, []))


def cross_validate(d: CurveDatum) -> bool:
    _closed_form_check(d)
    return ag_invariant(build_lambda(d)).phi == ag_closed_form(d).phi


def render_phi(inv: AGInvariant) -> list[str]:
    return [f"phi {m} {n} {c}" for (m, n), c in sorted(inv.phi.items())]
