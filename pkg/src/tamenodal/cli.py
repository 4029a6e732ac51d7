"""Command-line interface.

Exit codes: 0 success, 1 domain failure (invalid or non-gentle input,
infeasible datum, ...), 2 parse error, 64 usage error.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import ag, builder, datum, moves, nodal_report, surface
from .dsl import ParseError, parse_presentation, render_presentation
from .gentle import check_gentle
from .quiver import PresentationError

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _presentation(path: str):
    return parse_presentation(_read(path))


def _header(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return ""


def cmd_validate(args) -> int:
    text = _read(args.file)
    kind = _header(text)
    if kind == "curve":
        d = datum.parse_curve(text)
        print(f"ok curve p_components {len(d.p_components)} q_components {len(d.q_components)} "
              f"ties {len(d.ties)} reflexives {len(d.reflexives)}")
    elif kind == "nodal":
        d = datum.parse_nodal(text)
        chk = datum.check_nodal_datum(d)
        if not chk.valid:
            raise datum.DatumError(chk.violations)
        print(f"ok nodal omega {len(d.omega)} ties {len(d.ties)} reflexives {len(d.reflexives)}")
    else:
        p = parse_presentation(text)
        print(f"ok quiver {p.name} vertices {len(p.vertices)} arrows {len(p.arrows)} "
              f"relations {len(p.relations)}")
    return EXIT_OK


def cmd_gentle(args) -> int:
    rep = check_gentle(_presentation(args.file))
    print(f"gentle {'true' if rep.is_gentle else 'false'}")
    for v in rep.violations:
        print(f"violation {v}")
    for c in rep.forbidden_cycles:
        print(f"forbidden_cycle {c}")
    print(f"longest_forbidden_path {rep.longest_forbidden_path_length}")
    print(f"relation_free_cycle {'true' if rep.has_relation_free_cycle else 'false'}")
    return EXIT_OK if rep.is_gentle else EXIT_DOMAIN


def cmd_ag(args) -> int:
    p = _presentation(args.file)
    inv = ag.ag_invariant(p)
    ts = ag.threads(p)
    for line in ag.render_phi(inv):
        print(line)
    print(f"threads {len(ts.permitted)} arrows {len(p.arrows)}")
    return EXIT_OK


def cmd_surface(args) -> int:
    sys.stdout.write(surface.surface_model(_presentation(args.file)).render())
    return EXIT_OK


def cmd_build_lambda(args) -> int:
    d = datum.parse_curve(_read(args.file))
    p = builder.build_lambda(d)
    if datum.solve_admissible_weight(d) is None:
        print("# warning: datum is not admissible")
    sys.stdout.write(render_presentation(p))
    return EXIT_OK


def cmd_fixture(args) -> int:
    sys.stdout.write(render_presentation(builder.build_fixture(args.name, *args.params)))
    return EXIT_OK


def cmd_nodal_report(args) -> int:
    d = datum.parse_nodal(_read(args.file))
    sys.stdout.write(nodal_report.nodal_report(d).render())
    return EXIT_OK


def cmd_admissible(args) -> int:
    d = datum.parse_curve(_read(args.file))
    wa = datum.solve_admissible_weight(d)
    if wa is None:
        print("admissible false")
        return EXIT_DOMAIN
    print("admissible true")
    for c in datum.component_labels(d):
        print(f"total {c} {wa.component_totals[c]}")
    for k in datum.weight_keys(d):
        print(f"weight {k} {wa.weights[k]}")
    return EXIT_OK


def cmd_modify(args) -> int:
    p = _presentation(args.file)
    m = moves.match_at(p, args.at)
    out = moves.modify_one(p, m) if args.which == "one" else moves.modify_two(p, m)
    sys.stdout.write(render_presentation(out))
    return EXIT_OK


def cmd_eliminate(args) -> int:
    p = _presentation(args.file)
    sys.stdout.write(render_presentation(moves.eliminate_redundant(p, args.arrow)))
    return EXIT_OK


def cmd_cross_validate(args) -> int:
    d = datum.parse_curve(_read(args.file))
    closed = ag.ag_closed_form(d)
    direct = ag.ag_invariant(builder.build_lambda(d))
    for line in ag.render_phi(closed):
        print(f"closed {line}")
    for line in ag.render_phi(direct):
        print(f"direct {line}")
    agree = closed.phi == direct.phi
    print(f"agree {'true' if agree else 'false'}")
    return EXIT_OK if agree else EXIT_DOMAIN


def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tamenodal", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    for name, fn, help_ in [
        ("validate", cmd_validate, "check a quiver, curve or nodal file"),
        ("gentle", cmd_gentle, "gentleness report"),
        ("ag", cmd_ag, "AG invariant of a gentle presentation"),
        ("surface", cmd_surface, "marked surface of a gentle presentation"),
        ("build-lambda", cmd_build_lambda, "algebra of a curve datum"),
        ("nodal-report", cmd_nodal_report, "classification report of a nodal datum"),
        ("admissible", cmd_admissible, "solve for compatible weights"),
        ("cross-validate", cmd_cross_validate, "closed form against direct AG computation"),
    ]:
        add(name, fn, help_).add_argument("file", help="input file, or - for stdin")
    fx = add("fixture", cmd_fixture, "emit a named fixture")
    fx.add_argument("name", choices=builder.FIXTURES)
    fx.add_argument("params", nargs="*")
    mo = add("modify", cmd_modify, "apply an elementary modification")
    mo.add_argument("which", choices=["one", "two"])
    mo.add_argument("file")
    mo.add_argument("--at", required=True, help="vertex j of the fragment")
    el = add("eliminate-redundant", cmd_eliminate, "remove a redundant arrow")
    el.add_argument("file")
    el.add_argument("--arrow", required=True)
    return ap


def run(argv: list[str]) -> int:
    try:
        args = make_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PresentationError, datum.DatumError, ag.NotGentleError, surface.SurfaceError,
            moves.MoveError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run_captured(argv: list[str]) -> tuple[int, str, str]:
    """Run and capture (exit code, stdout, stderr); used by tests."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
