from pathlib import Path

import pytest
from typer.testing import CliRunner

from dicirculant.group import dicyclic_group

#: Connection sets listed as orbit representatives of ``Q_8``; ``ab`` stands
#: for ``a^1.b`` and so on
QUATERNION_REPRESENTATIVES = """
e
a
a2
b
a a2
a a3
a b
a2 b
b ab
b a2b
a a2 a3
a a2 b
a a3 b
a b ab
a2 b ab
b ab a2b
a b a2b
a2 b a2b
a a2 a3 b
a a2 b ab
a a2 b a2b
a a3 b ab
a a3 b a2b
a b ab a2b
b ab a2b a3b
a2 b ab a2b
a a2 a3 b ab
a a2 a3 b a2b
a a2 b ab a2b
a a3 b ab a2b
a b ab a2b a3b
a2 b ab a2b a3b
a a2 a3 b ab a2b
a a2 b ab a2b a3b
a a3 b ab a2b a3b
a a2 a3 b ab a2b a3b
"""

QUATERNION_DISCONNECTED = """
e
a
a2
b
a a2
a a3
a2 b
b a2b
a a2 a3
a2 b a2b
"""


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow", action="store_true", default=False, help="run the p=7 orbit sweeps"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def short_label(label: str) -> str:
    """
    ``a^0.b -> b``, ``a^1 -> a``, ``a^2.b -> a2b``.
    """
    exponent, _, coset = label.removeprefix("a^").partition(".")
    prefix = {"0": "", "1": "a"}.get(exponent, f"a{exponent}")
    return prefix + coset


def quaternion_masks(listing: str) -> list[int]:
    group = dicyclic_group(2)
    by_name = {short_label(g.label()): g for g in group.elements}
    masks = []
    for line in listing.strip().splitlines():
        names = [] if line == "e" else line.split()
        masks.append(group.mask_of(by_name[name] for name in names))
    return masks


@pytest.fixture(scope="session")
def quaternion_representatives() -> list[int]:
    return quaternion_masks(QUATERNION_REPRESENTATIVES)


@pytest.fixture(scope="session")
def quaternion_disconnected() -> list[int]:
    return quaternion_masks(QUATERNION_DISCONNECTED)


@pytest.fixture(scope="function")
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(scope="function")
def budget_file(tmp_path) -> Path:
    path = tmp_path / Path("budget.yaml")
    path.write_text("oracle:\n  max_work: 4096\n  partitions: 2\n")
    return path
