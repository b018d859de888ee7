import itertools

import pytest
from hypothesis import settings

from svcrystal.tableaux import SetValuedTableau, enumerate_svt

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def brute_force_svt(shape, n):
    """Every assignment of nonempty subsets of [1, n] to the boxes, filtered by the tableau conditions."""
    subsets = [s for k in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), k)]
    boxes = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    out = set()
    for choice in itertools.product(subsets, repeat=len(boxes)):
        cells = dict(zip(boxes, choice))
        ok = all(
            ((r, c + 1) not in cells or max(cells[(r, c)]) <= min(cells[(r, c + 1)]))
            and ((r + 1, c) not in cells or max(cells[(r, c)]) < min(cells[(r + 1, c)]))
            for r, c in boxes
        )
        if ok:
            out.add(SetValuedTableau.from_cells([[cells[(r, c)] for c in range(p)] for r, p in enumerate(shape)], n))
    return out


@pytest.fixture(scope="session")
def svt_21_3():
    return enumerate_svt((2, 1), 3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
