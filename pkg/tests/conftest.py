import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import helpers  # noqa: E402
from comtope import Arrangement, SignSystem, kernels  # noqa: E402

DATA = Path(__file__).parent / "data"

from helpers import PAPER_COVECTORS, PAPER_FORMS  # noqa: E402


@pytest.fixture(scope="session")
def paper_arrangement():
    return Arrangement.from_forms([(c, b, f"h{i + 1}") for i, (c, b) in enumerate(PAPER_FORMS)])


@pytest.fixture(scope="session")
def paper_system():
    return SignSystem.from_vectors(PAPER_COVECTORS, labels=("h1", "h2", "h3", "h4", "h5"))


@pytest.fixture(scope="session")
def affine_pool():
    return helpers.instance_pool(seed=20261016, count=120)


@pytest.fixture(scope="session")
def central_pool():
    return helpers.instance_pool(seed=7, count=100, central=True)


@pytest.fixture(params=["compiled", "python"])
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    if request.param == "compiled":
        if kernels.compiled_backend is None:
            pytest.skip("compiled kernels not built")
        monkeypatch.setattr(kernels, "backend", kernels.compiled_backend)
    else:
        monkeypatch.setattr(kernels, "backend", kernels.python_backend)
    return request.param


# --- acceptance summary -----------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        number, title = marker
        prev = _criteria.get(number, (title, True))
        _criteria[number] = (title, prev[1] and report.passed)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
