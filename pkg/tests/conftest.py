import numpy as np
import pytest

from focaldecomp import fixtures
from focaldecomp.core import Frame, MassFunction
from focaldecomp.generate import GeneratorSpec, generate_mass


@pytest.fixture(scope="session")
def fx() -> dict:
    return fixtures.load_all()


def random_masses(count, seed, n_lo=2, n_hi=10, subnormal=False, max_focal=None):
    """Seeded corpus of random masses with log-uniform focal counts.

    Ω is forced into the focal sets (∅ instead when ``subnormal``).
    """
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        top = 2**n if max_focal is None else min(2**n, max_focal)
        k = int(np.clip(round(2 ** rng.uniform(0, np.log2(top))), 1, top))
        out.append(generate_mass(GeneratorSpec("random", n, k, seed * 10_000 + i, subnormal)))
    return out


def random_family(rng, n, k):
    return sorted({int(x) for x in rng.integers(0, 2**n, size=k)})


def mass_on(labels, entries) -> MassFunction:
    frame = Frame(tuple(labels))
    return MassFunction.from_labels(frame, entries)


_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        detail = dict(report.user_properties).get("detail", "")
        _ACCEPTANCE[name] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (status, detail) in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status}  {name}" + (f"  [{detail}]" if detail else ""))
