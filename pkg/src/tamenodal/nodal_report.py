"""Combinatorial reports on nodal orders: hereditary cover, semisimple quotients,
conductor quotients, Ext tables, connectivity and the center."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .datum import DatumError, NodalDatum, check_nodal_datum, half, tied_label

IDENTITY = "identity"
DIAGONAL = "diagonal-into-product"
ANTIDIAGONAL = "antidiagonal-into-mat2"


def _checked(d: NodalDatum):
    chk = check_nodal_datum(d)
    if not chk.valid:
        raise DatumError(chk.violations)
    return chk


def sigma_cycles(d: NodalDatum) -> list[tuple[str, ...]]:
    """Cycles of sigma, each starting at its least element, sorted by that element."""
    seen: set[str] = set()
    out = []
    for w in sorted(d.omega):
        if w in seen:
            continue
        cyc = [w]
        seen.add(w)
        nxt = d.sigma[w]
        while nxt != w:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = d.sigma[nxt]
        out.append(tuple(cyc))
    return out


def hereditary_cover(d: NodalDatum) -> list[tuple[int, ...]]:
    _checked(d)
    return [tuple(d.wt(w) for w in cyc) for cyc in sigma_cycles(d)]


def _tilde_elements(d: NodalDatum) -> list[tuple[str, str, int, int]]:
    """(label, kind, block size, embedding target size) for every element of the
    quotient set in which reflexives are split and tied pairs merged."""
    out = []
    special = {x for t in d.ties for x in t} | set(d.reflexives)
    for w in d.omega:
        if w not in special:
            out.append((w, IDENTITY, d.wt(w), d.wt(w)))
    for a, b in d.ties:
        out.append((tied_label(a, b), DIAGONAL, d.weights[a], 2 * d.weights[a]))
    for r in d.reflexives:
        for s in "+-":
            k = d.weights[half(r, s)]
            out.append((half(r, s), ANTIDIAGONAL, k, k))
    return sorted(out)


@dataclass
class QuotientDiagram:
    aj_blocks: list[int]
    hj_blocks: list[int]
    embedding_kinds: dict[str, str]
    labels: list[str]
    embedded_size: int  # total size of the images of the quotient blocks


def quotient_diagram(d: NodalDatum) -> QuotientDiagram:
    _checked(d)
    tl = _tilde_elements(d)
    q = QuotientDiagram(
        aj_blocks=[size for _, _, size, _ in tl],
        hj_blocks=[d.wt(w) for w in d.omega],
        embedding_kinds={label: kind for label, kind, _, _ in tl},
        labels=[label for label, *_ in tl],
        embedded_size=sum(t for *_, t in tl),
    )
    return q


def conductor_quotients(d: NodalDatum) -> tuple[list[int], list[int]]:
    _checked(d)
    special = {x for t in d.ties for x in t} | set(d.reflexives)
    aj = [size for _, kind, size, _ in _tilde_elements(d) if kind != IDENTITY]
    hj = [d.wt(w) for w in d.omega if w in special]
    return aj, hj


def ext_table(d: NodalDatum) -> dict[tuple[str, str], int]:
    """Multiplicity of Ext^1 from the simple at gamma (a special quotient element)
    to the simple at delta in Omega."""
    _checked(d)
    rows: list[tuple[str, list[str]]] = []
    for a, b in d.ties:
        rows.append((tied_label(a, b), [d.sigma[a], d.sigma[b]]))
    for r in d.reflexives:
        for s in "+-":
            rows.append((half(r, s), [d.sigma[r]]))
    table = {}
    for gamma, hits in rows:
        for delta in d.omega:
            table[(gamma, delta)] = hits.count(delta)
    return dict(sorted(table.items()))


def _center_string(t: int) -> str:
    gens = ",".join(f"w{i}" for i in range(1, t + 1))
    prods = ",".join(f"w{i}*w{j}" for i in range(1, t + 1) for j in range(i + 1, t + 1))
    return f"k[[{gens}]]" + (f"/({prods})" if prods else "")


def connectivity_and_center(d: NodalDatum) -> tuple[bool, str]:
    """Connectedness of the cycle graph and a symbolic center.

    For disconnected data the center is written as a product over connected
    pieces, joined by `` x ``.
    """
    _checked(d)
    cycles = sigma_cycles(d)
    where = {w: i for i, cyc in enumerate(cycles) for w in cyc}
    g = nx.Graph()
    g.add_nodes_from(range(len(cycles)))
    for a, b in d.ties:
        g.add_edge(where[a], where[b])
    parts = sorted(nx.connected_components(g), key=min)
    center = " x ".join(_center_string(len(p)) for p in parts)
    return len(parts) == 1, center


@dataclass
class NodalOrderReport:
    cycles: list[tuple[str, ...]]
    cover: list[tuple[int, ...]]
    diagram: QuotientDiagram
    conductor_aj_blocks: list[int]
    conductor_hj_blocks: list[int]
    connected: bool
    center: str
    ext: dict[tuple[str, str], int]

    def render(self) -> str:
        def ints(xs):
            return " ".join(str(x) for x in xs)

        lines = []
        for cyc, tv in zip(self.cycles, self.cover):
            lines.append(f"cycle {cyc[0]} elements {' '.join(cyc)} type {ints(tv)}")
        lines.append(f"aj_blocks {ints(self.diagram.aj_blocks)}".rstrip())
        lines.append(f"hj_blocks {ints(self.diagram.hj_blocks)}".rstrip())
        for label in self.diagram.labels:
            lines.append(f"embedding {label} {self.diagram.embedding_kinds[label]}")
        lines.append(f"conductor_aj_blocks {ints(self.conductor_aj_blocks)}".rstrip())
        lines.append(f"conductor_hj_blocks {ints(self.conductor_hj_blocks)}".rstrip())
        lines.append(f"connected {'true' if self.connected else 'false'}")
        lines.append(f"center {self.center}")
        for (g, dl), m in self.ext.items():
            if m:
                lines.append(f"ext {g} {dl} {m}")
        return "\n".join(lines) + "\n"


def nodal_report(d: NodalDatum) -> NodalOrderReport:
    aj, hj = conductor_quotients(d)
    connected, center = connectivity_and_center(d)
    return NodalOrderReport(
        cycles=sigma_cycles(d),
        cover=hereditary_cover(d),
        diagram=quotient_diagram(d),
        conductor_aj_blocks=aj,
        conductor_hj_blocks=hj,
        connected=connected,
        center=center,
        ext=ext_table(d),
    )
