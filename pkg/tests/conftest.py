import sys
from math import gcd
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from nsring.enumerate import enumerate_semigroups  # noqa: E402
from nsring.semigroup import NumericalSemigroup  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

UP_TO_GENUS_8 = list(enumerate_semigroups(8))
UP_TO_GENUS_6 = [H for H in UP_TO_GENUS_8 if H.genus <= 6]


def _coprime(xs):
    d = 0
    for x in xs:
        d = gcd(d, x)
    return d == 1


generator_lists = st.lists(st.integers(2, 17), min_size=2, max_size=5).filter(_coprime)
semigroups = generator_lists.map(
    lambda gs: NumericalSemigroup.from_generators(gs, max_genus=10**6)
).filter(lambda H: H.genus <= 24)
small_semigroups = st.sampled_from(UP_TO_GENUS_6)
nonsymmetric_small = st.sampled_from([H for H in UP_TO_GENUS_8 if not H.is_symmetric])


@pytest.fixture(scope="session")
def all_genus_8():
    return UP_TO_GENUS_8


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
