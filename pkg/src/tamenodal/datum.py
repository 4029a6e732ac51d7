"""Nodal-order data ``(Omega, sigma, ties, wt)`` and tame curve data ``(p, q, ties)``.

Curve elements are written as strings: ``x:k:j:+`` / ``x:k:j:-`` for the
points on the two poles of the k-th p-component and ``w:k:j`` for the
points of the k-th q-component.  Reflexive elements split into halves
``elem@+`` and ``elem@-`` wherever weights are attached.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterable, Mapping

from .dsl import ParseError
from .feasibility import positive_solution


class DatumError(ValueError):
    """A datum violates its invariants; ``violations`` lists every problem found."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


# ---------------------------------------------------------------------------
# nodal data
# ---------------------------------------------------------------------------

def half(elem: str, sign: str) -> str:
    return f"{elem}{sign}"


@dataclass(frozen=True)
class NodalDatum:
    omega: tuple[str, ...]
    sigma: Mapping[str, str]
    ties: tuple[tuple[str, str], ...] = ()
    reflexives: tuple[str, ...] = ()
    weights: Mapping[str, int] = field(default_factory=dict)

    def __init__(self, omega: Iterable[str], sigma: Mapping[str, str],
                 ties: Iterable[tuple[str, str]] = (), reflexives: Iterable[str] = (),
                 weights: Mapping[str, int] | None = None):
        omega = tuple(sorted(omega))
        ties = tuple(sorted(_pair(a, b) for a, b in ties))
        reflexives = tuple(sorted(reflexives))
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "sigma", dict(sigma))
        object.__setattr__(self, "ties", ties)
        object.__setattr__(self, "reflexives", reflexives)
        if weights is None:
            weights = {k: 1 for k in _dagger_keys(omega, reflexives)}
        object.__setattr__(self, "weights", dict(weights))

    def partner(self, w: str) -> str | None:
        for a, b in self.ties:
            if w == a:
                return b
            if w == b:
                return a
        return None

    def wt(self, w: str) -> int:
        """Weight of an element of Omega; a reflexive element carries the sum of its halves."""
        if w in self.reflexives:
            return self.weights[half(w, "+")] + self.weights[half(w, "-")]
        return self.weights[w]


def _dagger_keys(omega: Iterable[str], reflexives: Iterable[str]) -> list[str]:
    refl = set(reflexives)
    out = []
    for w in omega:
        out += [half(w, "+"), half(w, "-")] if w in refl else [w]
    return sorted(out)


def tied_label(a: str, b: str) -> str:
    a, b = _pair(a, b)
    return f"{{{a},{b}}}"


@dataclass
class NodalCheck:
    valid: bool
    violations: list[str]
    simple: list[str]
    reflexive: list[str]
    tied: list[str]
    omega_dagger: list[str]
    omega_tilde_dagger: list[str]


def check_nodal_datum(d: NodalDatum) -> NodalCheck:
    v: list[str] = []
    om = set(d.omega)
    if len(om) != len(d.omega):
        v.append("duplicate element in omega")
    if set(d.sigma) != om or sorted(d.sigma.values()) != sorted(om):
        v.append("sigma is not a bijection of omega")
    seen: dict[str, int] = {}
    for a, b in d.ties:
        if a == b:
            v.append(f"tie {a}~{a} must be written as a reflexive element")
        for x in (a, b):
            if x not in om:
                v.append(f"tie uses unknown element {x}")
            seen[x] = seen.get(x, 0) + 1
    for r in d.reflexives:
        if r not in om:
            v.append(f"reflexive element {r} not in omega")
        seen[r] = seen.get(r, 0) + 1
    for x, k in sorted(seen.items()):
        if k > 1:
            v.append(f"element {x} has more than one partner")
    keys = _dagger_keys(d.omega, d.reflexives)
    if sorted(d.weights) != keys:
        v.append(f"weights must be given exactly on {', '.join(keys)}")
    else:
        for k in keys:
            if not isinstance(d.weights[k], int) or d.weights[k] < 1:
                v.append(f"weight of {k} must be a positive integer")
        for a, b in d.ties:
            if a in d.weights and b in d.weights and d.weights[a] != d.weights[b]:
                v.append(f"tied elements {a}, {b} have different weights")
    tied = sorted({x for t in d.ties for x in t})
    reflexive = sorted(d.reflexives)
    simple = sorted(om - set(tied) - set(reflexive))
    tilde = sorted(simple + [half(r, s) for r in reflexive for s in "+-"]
                   + [tied_label(a, b) for a, b in d.ties])
    return NodalCheck(not v, v, simple, reflexive, tied, keys, tilde)


def _cycle_sigma(n: int, labels: list[str]) -> dict[str, str]:
    """k -> k-1 cyclically along ``labels`` (the first label maps to the last)."""
    return {labels[i]: labels[i - 1] for i in range(n)}


def _residue(x: int, n: int) -> int:
    r = x % n
    return n if r == 0 else r


def build_cyclic_nodal(n: int, c: int) -> NodalDatum:
    """Datum with Omega = {1..n, t1..tn} and ties t_k ~ (c k mod n)."""
    if not 0 < c < n:
        raise DatumError([f"need 0 < c < n, got n={n}, c={c}"])
    if gcd(n, c) != 1:
        raise DatumError([f"gcd({n}, {c}) != 1"])
    plain = [str(k) for k in range(1, n + 1)]
    tilde = [f"t{k}" for k in range(1, n + 1)]
    sigma = _cycle_sigma(n, plain) | _cycle_sigma(n, tilde)
    ties = [(f"t{k}", str(_residue(c * k, n))) for k in range(1, n + 1)]
    return NodalDatum(plain + tilde, sigma, ties)


def build_dihedral_nodal(n: int) -> NodalDatum:
    if n < 1:
        raise DatumError([f"n must be positive, got {n}"])
    if n % 2:
        l = (n - 1) // 2
        labels = [str(k) for k in range(1, n + 1)]
        refl = [str(n)]
    else:
        l = (n - 2) // 2
        labels = [str(k) for k in range(0, n)]
        refl = ["0", str(2 * l + 1)]
    ties = [(str(2 * k - 1), str(2 * k)) for k in range(1, l + 1)]
    return NodalDatum(labels, _cycle_sigma(n, labels), ties, refl)


# ---------------------------------------------------------------------------
# curve data
# ---------------------------------------------------------------------------

_X_RE = re.compile(r"^x:(\d+):(\d+):([+-])$")
_W_RE = re.compile(r"^w:(\d+):(\d+)$")


def xel(k: int, j: int, sign: str) -> str:
    return f"x:{k}:{j}:{sign}"


def wel(k: int, j: int) -> str:
    return f"w:{k}:{j}"


def parse_element(e: str) -> tuple:
    """``x:k:j:s`` -> ('x', k, j, s); ``w:k:j`` -> ('w', k, j)."""
    m = _X_RE.match(e)
    if m:
        return ("x", int(m.group(1)), int(m.group(2)), m.group(3))
    m = _W_RE.match(e)
    if m:
        return ("w", int(m.group(1)), int(m.group(2)))
    raise DatumError([f"malformed element {e!r}"])


def element_key(e: str) -> tuple:
    """Numeric sort key (so that x:1:10:+ follows x:1:9:+)."""
    t = parse_element(e)
    return (t[0], t[1], t[3] if t[0] == "x" else "", t[2])


@dataclass(frozen=True)
class CurveDatum:
    p_components: tuple[tuple[int, int], ...] = ()
    q_components: tuple[int, ...] = ()
    ties: tuple[tuple[str, str], ...] = ()
    reflexives: tuple[str, ...] = ()

    def __init__(self, p_components: Iterable[tuple[int, int]] = (),
                 q_components: Iterable[int] = (),
                 ties: Iterable[tuple[str, str]] = (), reflexives: Iterable[str] = ()):
        object.__setattr__(self, "p_components", tuple(tuple(c) for c in p_components))
        object.__setattr__(self, "q_components", tuple(q_components))
        object.__setattr__(self, "ties", tuple(sorted(_pair(a, b) for a, b in ties)))
        object.__setattr__(self, "reflexives", tuple(sorted(reflexives)))

    def elements(self) -> list[str]:
        out = []
        for k, (pp, pm) in enumerate(self.p_components, start=1):
            out += [xel(k, j, "+") for j in range(1, pp + 1)]
            out += [xel(k, j, "-") for j in range(1, pm + 1)]
        for k, q in enumerate(self.q_components, start=1):
            out += [wel(k, j) for j in range(1, q + 1)]
        return out

    def partner(self, e: str) -> str | None:
        for a, b in self.ties:
            if e == a:
                return b
            if e == b:
                return a
        return None

    def is_tied(self, e: str) -> bool:
        return self.partner(e) is not None

    def validate(self) -> None:
        v = []
        for k, c in enumerate(self.p_components, start=1):
            if len(c) != 2 or min(c) < 1:
                v.append(f"p-component {k} must be a pair of positive integers")
        for k, q in enumerate(self.q_components, start=1):
            if q < 1:
                v.append(f"q-component {k} must be positive")
        if v:
            raise DatumError(v)
        elems = set(self.elements())
        count: dict[str, int] = {}
        for a, b in self.ties:
            if a == b:
                v.append(f"tie {a}~{a} must be written as refl {a}")
            for x in (a, b):
                if x not in elems:
                    v.append(f"element {x} out of range")
                count[x] = count.get(x, 0) + 1
        for r in self.reflexives:
            if r not in elems:
                v.append(f"element {r} out of range")
            count[r] = count.get(r, 0) + 1
        for x, n in sorted(count.items()):
            if n > 1:
                v.append(f"element {x} has more than one partner")
        if v:
            raise DatumError(v)

    @property
    def is_gentle_type(self) -> bool:
        return not self.q_components and not self.reflexives


@dataclass(frozen=True)
class WeightAssignment:
    weights: Mapping[str, int]
    component_totals: Mapping[str, int]


def _points(d: CurveDatum) -> list[tuple[str, list[str], int]]:
    """Special points as (component label, elements on the point, number of
    extra untied elements that do not belong to Xi)."""
    pts = []
    for k, (pp, pm) in enumerate(d.p_components, start=1):
        pts.append((f"p{k}", [xel(k, j, "+") for j in range(1, pp + 1)], 0))
        pts.append((f"p{k}", [xel(k, j, "-") for j in range(1, pm + 1)], 0))
    for k, q in enumerate(d.q_components, start=1):
        pts.append((f"q{k}", [], 2))
        pts.append((f"q{k}", [], 2))
        pts.append((f"q{k}", [wel(k, j) for j in range(1, q + 1)], 0))
    return pts


def weight_keys(d: CurveDatum) -> list[str]:
    refl = set(d.reflexives)
    out = []
    for e in d.elements():
        out += [f"{e}@+", f"{e}@-"] if e in refl else [e]
    return out


def element_weight(d: CurveDatum, w: Mapping[str, int], e: str) -> int:
    if e in d.reflexives:
        return w[f"{e}@+"] + w[f"{e}@-"]
    return w[e]


def component_labels(d: CurveDatum) -> list[str]:
    return ([f"p{k}" for k in range(1, len(d.p_components) + 1)]
            + [f"q{k}" for k in range(1, len(d.q_components) + 1)])


def solve_admissible_weight(d: CurveDatum) -> WeightAssignment | None:
    """Find positive integer weights compatible with the point lengths.

    One variable per component total, per tied class, per untied element (two
    for a reflexive one) and per extra slack element of a q-component pole.
    Each special point gives ``sum of its weights = component total``.
    """
    d.validate()
    var: dict[str, int] = {}

    def new(name: str) -> int:
        var[name] = len(var)
        return var[name]

    for c in component_labels(d):
        new(f"M:{c}")
    for e in d.elements():
        if e in var:
            continue
        if e in d.reflexives:
            new(f"{e}@+")
            new(f"{e}@-")
        else:
            i = new(e)
            mate = d.partner(e)
            if mate is not None:
                var[mate] = i
    rows_spec: list[tuple[str, list[int]]] = []
    for idx, (comp, elems, slack) in enumerate(_points(d)):
        cols = []
        for e in elems:
            if e in d.reflexives:
                cols += [var[f"{e}@+"], var[f"{e}@-"]]
            else:
                cols.append(var[e])
        cols += [new(f"slack:{idx}:{s}") for s in range(slack)]
        rows_spec.append((comp, cols))
    n = len(var)
    A = []
    for comp, cols in rows_spec:
        row = [0] * n
        for c in cols:
            row[c] += 1
        row[var[f"M:{comp}"]] -= 1
        A.append(row)
    y = positive_solution(A, n)
    if y is None:
        return None
    weights = {k: y[var[k]] for k in weight_keys(d)}
    totals = {c: y[var[f"M:{c}"]] for c in component_labels(d)}
    return WeightAssignment(weights, totals)


def verify_weights(d: CurveDatum, wa: WeightAssignment) -> list[str]:
    """Return every constraint violated by ``wa`` (empty when it is compatible)."""
    v = []
    keys = weight_keys(d)
    if sorted(wa.weights) != sorted(keys):
        return ["weights must be given exactly on the split element set"]
    for k in keys:
        if wa.weights[k] < 1:
            v.append(f"weight of {k} is not positive")
    for a, b in d.ties:
        if wa.weights[a] != wa.weights[b]:
            v.append(f"tied elements {a}, {b} differ")
    for comp, elems, slack in _points(d):
        total = wa.component_totals[comp]
        s = sum(element_weight(d, wa.weights, e) for e in elems)
        if slack:
            if total < slack:
                v.append(f"component {comp}: total {total} too small for a length-{slack} point")
        elif s != total:
            v.append(f"component {comp}: point {{{', '.join(elems)}}} sums to {s}, not {total}")
    return v


def admissibility_hint(d: CurveDatum) -> bool:
    """The sufficient condition: every point of length at least two carries an untied element."""
    for _, elems, slack in _points(d):
        if slack or len(elems) < 2:
            continue
        if all(d.is_tied(e) for e in elems):
            return False
    return True


def build_stacky_cycle(ns: Iterable[int], cs: Iterable[int]) -> tuple[CurveDatum, WeightAssignment]:
    ns, cs = list(ns), list(cs)
    if len(ns) != len(cs) or not ns:
        raise DatumError(["n and c must be nonempty and of equal length"])
    bad = [f"gcd({n}, {c}) != 1" for n, c in zip(ns, cs) if n < 1 or gcd(n, c) != 1]
    if bad:
        raise DatumError(bad)
    r = len(ns)
    comps = [(ns[k - 1], ns[k]) for k in range(r)]  # index -1 wraps to n_r
    ties = []
    for k in range(1, r + 1):
        nk, ck = ns[k - 1], cs[k - 1]
        nxt = k % r + 1
        for j in range(1, nk + 1):
            ties.append((xel(k, j, "-"), xel(nxt, _residue(ck * j, nk), "+")))
    d = CurveDatum(comps, (), ties)
    n = lcm(*ns)
    weights = {}
    for k, (pp, pm) in enumerate(comps, start=1):
        for j in range(1, pp + 1):
            weights[xel(k, j, "+")] = n // pp
        for j in range(1, pm + 1):
            weights[xel(k, j, "-")] = n // pm
    return d, WeightAssignment(weights, {f"p{k}": n for k in range(1, r + 1)})


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_curve(text: str) -> CurveDatum:
    header = False
    p: dict[int, tuple[int, int]] = {}
    q: dict[int, int] = {}
    ties, refl = [], []
    for lineno, tok in _lines(text):
        if not header:
            if tok != ["curve"]:
                raise ParseError("document must start with 'curve'", lineno)
            header = True
            continue
        try:
            if tok[0] == "component" and len(tok) == 5 and tok[2] == "p":
                p[int(tok[1])] = (int(tok[3]), int(tok[4]))
            elif tok[0] == "component" and len(tok) == 4 and tok[2] == "q":
                q[int(tok[1])] = int(tok[3])
            elif tok[0] == "tie" and len(tok) == 4 and tok[2] == "~":
                parse_element(tok[1]), parse_element(tok[3])
                if tok[1] == tok[3]:
                    refl.append(tok[1])
                else:
                    ties.append((tok[1], tok[3]))
            elif tok[0] == "refl" and len(tok) == 2:
                parse_element(tok[1])
                refl.append(tok[1])
            else:
                raise ParseError(f"cannot parse {' '.join(tok)!r}", lineno)
        except (ValueError, DatumError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), lineno) from None
    if not header:
        raise ParseError("missing 'curve' header", 1)
    for kind, comps in (("p", p), ("q", q)):
        if sorted(comps) != list(range(1, len(comps) + 1)):
            raise ParseError(f"{kind}-components must be numbered 1..{len(comps)}", 1)
    d = CurveDatum([p[k] for k in sorted(p)], [q[k] for k in sorted(q)], ties, refl)
    d.validate()
    return d


def render_curve(d: CurveDatum) -> str:
    lines = ["curve"]
    lines += [f"component {k} p {a} {b}" for k, (a, b) in enumerate(d.p_components, start=1)]
    lines += [f"component {k} q {n}" for k, n in enumerate(d.q_components, start=1)]
    lines += [f"tie {a} ~ {b}" for a, b in d.ties]
    lines += [f"refl {r}" for r in d.reflexives]
    return "\n".join(lines) + "\n"


_NODAL_TOKEN = re.compile(r"^[A-Za-z0-9_]+$")


def parse_nodal(text: str) -> NodalDatum:
    header = False
    omega: list[str] = []
    sigma: dict[str, str] = {}
    ties, refl = [], []
    weights: dict[str, int] = {}
    for lineno, tok in _lines(text):
        if not header:
            if tok != ["nodal"]:
                raise ParseError("document must start with 'nodal'", lineno)
            header = True
            continue
        head, rest = tok[0], tok[1:]
        if head == "omega":
            omega += rest
        elif head == "sigma":
            if len(rest) % 3 or any(rest[i + 1] != "->" for i in range(0, len(rest), 3)):
                raise ParseError("expected 'sigma a -> b ...'", lineno)
            for i in range(0, len(rest), 3):
                sigma[rest[i]] = rest[i + 2]
        elif head == "tie" and len(rest) == 3 and rest[1] == "~":
            if rest[0] == rest[2]:
                refl.append(rest[0])
            else:
                ties.append((rest[0], rest[2]))
        elif head == "refl" and len(rest) == 1:
            refl.append(rest[0])
        elif head == "wt" and len(rest) == 2 and rest[1].isdigit():
            weights[rest[0]] = int(rest[1])
        else:
            raise ParseError(f"cannot parse {' '.join(tok)!r}", lineno)
        for t in rest:
            if t not in ("->", "~") and head != "wt" and not _NODAL_TOKEN.match(t):
                raise ParseError(f"bad element name {t!r}", lineno)
    if not header:
        raise ParseError("missing 'nodal' header", 1)
    full = {k: weights.get(k, 1) for k in _dagger_keys(omega, refl)}
    extra = set(weights) - set(full)
    if extra:
        raise DatumError([f"weight given for unknown key {k}" for k in sorted(extra)])
    return NodalDatum(omega, sigma, ties, refl, full)


def render_nodal(d: NodalDatum) -> str:
    lines = ["nodal", "omega " + " ".join(d.omega)]
    lines += [f"sigma {a} -> {d.sigma[a]}" for a in sorted(d.sigma)]
    lines += [f"tie {a} ~ {b}" for a, b in d.ties]
    lines += [f"refl {r}" for r in d.reflexives]
    lines += [f"wt {k} {d.weights[k]}" for k in sorted(d.weights)]
    return "\n".join(lines) + "\n"
