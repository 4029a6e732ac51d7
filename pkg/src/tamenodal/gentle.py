"""Gentleness checks for presentations."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .quiver import Path, Presentation


@dataclass(frozen=True)
class Violation:
    kind: str
    where: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.where}: {self.detail}"


@dataclass
class GentleReport:
    is_gentle: bool
    violations: list[Violation] = field(default_factory=list)
    forbidden_cycles: list[Path] = field(default_factory=list)
    longest_forbidden_path_length: int = 0
    has_relation_free_cycle: bool = False


def _successor_graph(p: Presentation, in_ideal: bool) -> nx.DiGraph:
    """Arrow graph with an edge ``a -> b`` when ``b a`` is composable and
    lies in the ideal (``in_ideal``) or does not (``not in_ideal``)."""
    pairs = p.monomial_pairs()
    g = nx.DiGraph()
    g.add_nodes_from(a.name for a in p.arrows)
    for a in p.arrows:
        for b in p.out_arrows(a.target):
            if ((b.name, a.name) in pairs) == in_ideal:
                g.add_edge(a.name, b.name)
    return g


def _rotate_min(cycle: list[str]) -> list[str]:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def forbidden_cycles(p: Presentation) -> list[Path]:
    """Cyclic paths all of whose length-2 subpaths (wrapping around) are zero relations."""
    g = _successor_graph(p, in_ideal=True)
    out = []
    for cyc in nx.simple_cycles(g):
        cyc = _rotate_min(list(cyc))
        # cycle lists arrows in application order; paths are written right to left
        out.append(Path(tuple(reversed(cyc))))
    return sorted(out, key=Path.key)


def relation_free_cycle(p: Presentation) -> list[str] | None:
    g = _successor_graph(p, in_ideal=False)
    try:
        edges = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        return None
    return [u for u, _ in edges]


def longest_forbidden_path(p: Presentation) -> int:
    g = _successor_graph(p, in_ideal=True)
    on_cycle = {a for c in nx.simple_cycles(g) for a in c}
    g.remove_nodes_from(on_cycle)
    if g.number_of_nodes() == 0:
        return 0
    return nx.dag_longest_path_length(g) + 1


def check_gentle(p: Presentation) -> GentleReport:
    violations: list[Violation] = []
    for v in p.vertices:
        n_in, n_out = len(p.in_arrows(v)), len(p.out_arrows(v))
        if n_in > 2:
            violations.append(Violation("in-degree", v, f"{n_in} incoming arrows"))
        if n_out > 2:
            violations.append(Violation("out-degree", v, f"{n_out} outgoing arrows"))
    for r in p.relations:
        if not r.is_monomial:
            violations.append(Violation("non-monomial relation", str(r),
                                        f"{len(r.terms)} terms"))
        elif len(r.paths[0]) != 2:
            violations.append(Violation("relation length", str(r),
                                        f"length {len(r.paths[0])}, expected 2"))
    pairs = p.monomial_pairs()
    for a in p.arrows:
        nxt = p.out_arrows(a.target)
        zero = [b.name for b in nxt if (b.name, a.name) in pairs]
        free = [b.name for b in nxt if (b.name, a.name) not in pairs]
        if len(zero) > 1:
            violations.append(Violation("two zero continuations", a.name, ", ".join(zero)))
        if len(free) > 1:
            violations.append(Violation("two free continuations", a.name, ", ".join(free)))
        prv = p.in_arrows(a.source)
        zero = [c.name for c in prv if (a.name, c.name) in pairs]
        free = [c.name for c in prv if (a.name, c.name) not in pairs]
        if len(zero) > 1:
            violations.append(Violation("two zero predecessors", a.name, ", ".join(zero)))
        if len(free) > 1:
            violations.append(Violation("two free predecessors", a.name, ", ".join(free)))
    free_cycle = relation_free_cycle(p)
    if free_cycle is not None:
        violations.append(Violation("relation-free cycle", free_cycle[0],
                                    "cycle " + " -> ".join(free_cycle)))
    return GentleReport(
        is_gentle=not violations,
        violations=violations,
        forbidden_cycles=forbidden_cycles(p),
        longest_forbidden_path_length=longest_forbidden_path(p),
        has_relation_free_cycle=free_cycle is not None,
    )
