"""Marked surface of a gentle algebra of finite global dimension."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .ag import NotGentleError, ag_invariant
from .quiver import Presentation


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceModel:
    genus: int
    boundary: int
    euler: int
    boundaries: tuple[tuple[int, int], ...]  # (marked points, winding number)

    def render(self) -> str:
        lines = [f"genus {self.genus}", f"boundary {self.boundary}", f"euler {self.euler}"]
        lines += [f"component {m} {w}" for m, w in self.boundaries]
        return "\n".join(lines) + "\n"


def is_connected(p: Presentation) -> bool:
    g = nx.Graph()
    g.add_nodes_from(p.vertices)
    g.add_edges_from((a.source, a.target) for a in p.arrows)
    return g.number_of_nodes() > 0 and nx.is_connected(g)


def surface_model(p: Presentation) -> SurfaceModel:
    if not is_connected(p):
        raise SurfaceError("quiver is not connected")
    inv = ag_invariant(p)  # raises NotGentleError
    if inv.special_pairs:
        raise SurfaceError("forbidden cycle present: global dimension is infinite")
    chi = len(p.vertices) - len(p.arrows)
    b = len(inv.cycles)
    if b != sum(inv.phi.values()):
        raise AssertionError("boundary count disagrees with phi")
    twice_g = 2 - b - chi
    if twice_g < 0 or twice_g % 2:
        raise SurfaceError(f"inconsistent genus from euler {chi} and {b} boundary components")
    bounds = tuple(sorted((c.m, c.m - c.n) for c in inv.cycles))
    return SurfaceModel(twice_g // 2, b, chi, bounds)


__all__ = ["SurfaceModel", "SurfaceError", "NotGentleError", "surface_model", "is_connected"]
