"""Quivers, paths, relations and presentations.

Paths are written right to left: ``("b", "a")`` is the path ``b a`` in which
``a`` is applied first, so ``t(a) == s(b)``.  All containers are sorted on
construction, which makes equality and rendering deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class PresentationError(ValueError):
    """A presentation violates one of its structural invariants."""


@dataclass(frozen=True, order=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=True)
class Path:
    """A path ``a_m ... a_1``; a trivial path carries only ``vertex``."""

    arrows: tuple[str, ...] = ()
    vertex: str | None = None

    def __post_init__(self):
        if not self.arrows and self.vertex is None:
            raise PresentationError("trivial path needs a vertex")

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((), vertex)

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def first(self) -> str:
        return self.arrows[-1]

    @property
    def last(self) -> str:
        return self.arrows[0]

    def key(self) -> tuple:
        return (self.arrows, self.vertex or "")

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.vertex}"
        return "*".join(self.arrows)


Term = tuple[Fraction, tuple[str, ...]]


def _normalize_terms(terms: Iterable[tuple[object, Sequence[str]]]) -> tuple[Term, ...]:
    acc: dict[tuple[str, ...], Fraction] = {}
    for coeff, path in terms:
        path = tuple(path)
        acc[path] = acc.get(path, Fraction(0)) + Fraction(coeff)
    return tuple(sorted(((c, p) for p, c in acc.items() if c != 0), key=lambda t: t[1]))


@dataclass(frozen=True)
class Relation:
    """A formal linear combination of parallel paths set equal to zero.

    Duplicate paths are merged and zero coefficients dropped; terms are kept
    sorted by path.
    """

    terms: tuple[Term, ...]

    def __init__(self, terms: Iterable[tuple[object, Sequence[str]]]):
        object.__setattr__(self, "terms", _normalize_terms(terms))
        if not self.terms:
            raise PresentationError("relation has no nonzero terms")

    @classmethod
    def monomial(cls, *arrows: str) -> "Relation":
        return cls([(1, arrows)])

    @property
    def paths(self) -> tuple[tuple[str, ...], ...]:
        return tuple(p for _, p in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def arrows(self) -> set[str]:
        return {a for _, p in self.terms for a in p}

    def key(self) -> tuple:
        return tuple((p, c) for c, p in self.terms)

    def scaled_key(self) -> tuple:
        """Key invariant under multiplication by a nonzero scalar."""
        lead = self.terms[0][0]
        return tuple((p, c / lead) for c, p in self.terms)

    def __str__(self) -> str:
        return format_terms(self.terms)


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: Sequence[Term]) -> str:
    out = []
    for i, (c, p) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "*".join(p)
        if mag != 1:
            body = f"{format_coeff(mag)}*{body}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


@dataclass(frozen=True)
class Presentation:
    """A finite quiver together with a list of relations.

    ``name`` and ``kind`` are descriptive only and do not take part in
    equality.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] = ()
    name: str = field(default="Q", compare=False)
    kind: str = field(default="general", compare=False)

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow],
                 relations: Iterable[Relation] = (), name: str = "Q",
                 kind: str = "general", validate: bool = True):
        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "arrows", tuple(sorted(arrows)))
        rels = sorted(relations, key=Relation.key)
        object.__setattr__(self, "relations", tuple(rels))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "kind", kind)
        if validate:
            self.validate()

    # -- lookups ----------------------------------------------------------

    @property
    def arrow_map(self) -> Mapping[str, Arrow]:
        try:
            return self._arrow_map  # type: ignore[attr-defined]
        except AttributeError:
            m = {a.name: a for a in self.arrows}
            object.__setattr__(self, "_arrow_map", m)
            return m

    def source(self, path: Sequence[str]) -> str:
        return self.arrow_map[path[-1]].source

    def target(self, path: Sequence[str]) -> str:
        return self.arrow_map[path[0]].target

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def monomial_pairs(self) -> set[tuple[str, str]]:
        """Pairs ``(b, a)`` such that ``b a`` is a single-term length-2 relation."""
        return {r.paths[0] for r in self.relations
                if r.is_monomial and len(r.paths[0]) == 2}

    # -- checks -----------------------------------------------------------

    def is_composable(self, path: Sequence[str]) -> bool:
        am = self.arrow_map
        if any(a not in am for a in path):
            return False
        return all(am[path[i + 1]].target == am[path[i]].source
                   for i in range(len(path) - 1))

    def validate(self) -> None:
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise PresentationError("duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow identifier")
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise PresentationError(f"arrow {a.name} uses an undeclared vertex")
        for r in self.relations:
            check_relation(self, r)

    def with_changes(self, *, vertices=None, arrows=None, relations=None,
                     kind=None, name=None) -> "Presentation":
        return Presentation(
            self.vertices if vertices is None else vertices,
            self.arrows if arrows is None else arrows,
            self.relations if relations is None else relations,
            name=self.name if name is None else name,
            kind=self.kind if kind is None else kind,
        )


def check_relation(p: Presentation, r: Relation) -> None:
    am = p.arrow_map
    ends = set()
    for _, path in r.terms:
        for a in path:
            if a not in am:
                raise PresentationError(f"unknown arrow {a} in relation {r}")
        if not path:
            raise PresentationError(f"empty path in relation {r}")
        if not p.is_composable(path):
            raise PresentationError(f"path {'*'.join(path)} not composable")
        ends.add((p.source(path), p.target(path)))
    if len(ends) > 1:
        raise PresentationError(f"relation {r} has non-parallel terms")
    if r.is_monomial and len(r.paths[0]) < 2:
        raise PresentationError(f"relation {r} has a term of length < 2")


def relabel(p: Presentation, vmap: Mapping[str, str], amap: Mapping[str, str],
            name: str | None = None) -> Presentation:
    """Rename vertices and arrows of ``p``."""
    arrows = [Arrow(amap[a.name], vmap[a.source], vmap[a.target]) for a in p.arrows]
    rels = [Relation([(c, tuple(amap[x] for x in path)) for c, path in r.terms])
            for r in p.relations]
    return Presentation([vmap[v] for v in p.vertices], arrows, rels,
                        name=name or p.name, kind=p.kind)


def disjoint_union(parts: Sequence[Presentation], name: str = "Q",
                   kind: str = "general") -> Presentation:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    relations: list[Relation] = []
    for part in parts:
        vertices.extend(part.vertices)
        arrows.extend(part.arrows)
        relations.extend(part.relations)
    return Presentation(vertices, arrows, relations, name=name, kind=kind)
