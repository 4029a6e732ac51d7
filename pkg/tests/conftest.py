import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from tamenodal.dsl import parse_presentation  # noqa: E402
from tamenodal.datum import parse_curve, parse_nodal  # noqa: E402

DATA = HERE / "data"


def load_quiver(name):
    return parse_presentation((DATA / f"{name}.quiver").read_text())


def load_curve(name):
    return parse_curve((DATA / f"{name}.curve").read_text())


def load_nodal(name):
    return parse_nodal((DATA / f"{name}.nodal").read_text())


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
