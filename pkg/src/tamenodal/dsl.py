"""Line-based text format for presentations.

::

    quiver K
    vertex 1
    vertex 2
    arrow a : 1 -> 2
    rel b*a - 2*d*c = 0     # comment

Coefficients are integers or ``p/q`` fractions.  A leading ``-`` on the first
term is accepted.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .quiver import Arrow, Presentation, PresentationError, Relation, format_terms

IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_IDENT_RE = re.compile(rf"^{IDENT}$")
_TERM_RE = re.compile(rf"^(?:(\d+(?:/\d+)?)\s*\*\s*)?({IDENT}(?:\s*\*\s*{IDENT})*)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _ident(tok: str, lineno: int, col: int) -> str:
    if not _IDENT_RE.match(tok):
        raise ParseError(f"bad identifier {tok!r}", lineno, col)
    return tok


def _parse_rel(body: str, lineno: int, col: int) -> list[tuple[Fraction, tuple[str, ...]]]:
    lhs, eq, rhs = body.partition("=")
    if not eq or rhs.strip() != "0":
        raise ParseError("relation must have the form '<terms> = 0'", lineno, col)
    text = lhs.strip()
    if not text:
        raise ParseError("empty relation", lineno, col)
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    terms = []
    pieces = re.split(r"\s*([+-])\s*", text)
    signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
    for sgn, chunk in zip(signs, pieces[0::2]):
        m = _TERM_RE.match(chunk.strip())
        if not m:
            raise ParseError(f"malformed term {chunk.strip()!r}", lineno, col)
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        path = tuple(a.strip() for a in m.group(2).split("*"))
        terms.append((sgn * coeff, path))
    return terms


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation DSL.

    Raises ``ParseError`` for malformed syntax and ``PresentationError`` when
    the document is well formed but describes an invalid presentation.
    """
    name = None
    vertices: list[str] = []
    arrows: list[Arrow] = []
    relations: list[Relation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        keyword, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        if keyword == "quiver":
            if name is not None:
                raise ParseError("duplicate quiver header", lineno, col)
            name = _ident(rest, lineno, col + 7)
        elif name is None:
            raise ParseError("document must start with 'quiver <name>'", lineno, col)
        elif keyword == "vertex":
            vertices.append(_ident(rest, lineno, col + 7))
        elif keyword == "arrow":
            m = re.match(rf"^({IDENT})\s*:\s*({IDENT})\s*->\s*({IDENT})$", rest)
            if not m:
                raise ParseError("expected 'arrow <id> : <src> -> <tgt>'", lineno, col)
            arrows.append(Arrow(m.group(1), m.group(2), m.group(3)))
        elif keyword == "rel":
            terms = _parse_rel(rest, lineno, col + 4)
            try:
                relations.append(Relation(terms))
            except PresentationError as exc:
                raise PresentationError(f"line {lineno}: {exc}") from None
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col)
    if name is None:
        raise ParseError("missing 'quiver <name>' header", 1)
    return Presentation(vertices, arrows, relations, name=name)


def render_presentation(p: Presentation) -> str:
    lines = [f"quiver {p.name}"]
    lines += [f"vertex {v}" for v in p.vertices]
    lines += [f"arrow {a.name} : {a.source} -> {a.target}" for a in p.arrows]
    lines += [f"rel {format_terms(r.terms)} = 0" for r in p.relations]
    return "\n".join(lines) + "\n"
