import sys
from pathlib import Path

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from heartglue.perversity import Perversity  # noqa: E402
from heartglue.sequences import Tail  # noqa: E402
from heartglue.zposet import DomainError  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

TAILS = [Tail(1, 0), Tail(1, 1), Tail(2, 1), Tail(3, 1), Tail(3, 2)]


@st.composite
def perversities(draw, max_len=6):
    anchor = draw(st.integers(-5, 5))
    length = draw(st.integers(2, max_len))
    v0 = draw(st.integers(-4, 4))
    steps = draw(st.lists(st.integers(0, 1), min_size=length - 1, max_size=length - 1))
    vals = [v0]
    for s in steps:
        vals.append(vals[-1] + s)
    left = draw(st.sampled_from(TAILS))
    right = draw(st.sampled_from(TAILS))
    try:
        return Perversity(anchor, tuple(vals), left, right)
    except DomainError:
        assume(False)


@st.composite
def window_perversities(draw, lo=-3, hi=3):
    """Perversities with constant tails, given by their window values."""
    length = hi - lo + 1
    v0 = draw(st.integers(-3, 3))
    steps = draw(st.lists(st.integers(0, 1), min_size=length - 1, max_size=length - 1))
    vals = [v0]
    for s in steps:
        vals.append(vals[-1] + s)
    return Perversity(lo, tuple(vals))


@pytest.fixture
def named_perversities():
    return {
        "zero": Perversity.zero(),
        "identity": Perversity.identity(),
        "middle": Perversity.middle(),
    }


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
