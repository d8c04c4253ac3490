import random

import pytest
from hypothesis import settings, strategies as st

from intervalcat.gamma import random_ideal_map
from intervalcat.poset import poset_from_covers

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@st.composite
def posets(draw, min_size=0, max_size=5):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return poset_from_covers(n, chosen)


@st.composite
def ideal_maps(draw, max_x=4, max_y=4):
    X = draw(posets(1, max_x))
    Y = draw(posets(1, max_y))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_ideal_map(X, Y, random.Random(seed))


@pytest.fixture
def acceptance_log():
    def record(number, name, ok, detail=""):
        line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(set(ACCEPTANCE_LINES)):
            terminalreporter.write_line(line)
