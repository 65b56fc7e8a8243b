from fractions import Fraction

import pytest
from hypothesis import strategies as st

from shirac import (ConstructionMatrices, ImpulseInterference, ImpulseSpectralDensity,
                    ImpulseSpectralTrain, build_interference, flatten, interference, offset,
                    train)

F = Fraction


def pairs(flat):
    return [(imp.position, imp.amplitude) for imp in flat]


def ints(*xs):
    """[(p, a), ...] with Fraction entries from int pairs."""
    return [(F(p), F(a)) for p, a in xs]


@pytest.fixture
def three_jobs():
    """4 at 1, 5 at 2, 6 at 3."""
    return offset(interference(train(1, [4, 5, 6])), 1)


@pytest.fixture
def worked_matrices():
    return ConstructionMatrices.from_lists(
        [[[2, 4, 5], [3, 1, 8]], [[6, 2, 3], [9, 4, 2]]],
        [[5, 3], [7, 4]],
        [[3, 3], [3, 3]],
    )


WORKED_FLAT = ints((0, 60), (3, 2), (4, 24), (5, 12), (6, 16), (7, 18), (8, 16), (10, 15),
                   (11, 40), (13, 5), (14, 27), (15, 4), (16, 40), (18, 12), (22, 6))


rationals = st.builds(F, st.integers(-12, 12), st.sampled_from([1, 2, 3, 4]))
amplitudes = st.builds(F, st.integers(-6, 9), st.sampled_from([1, 2]))
nonneg_amplitudes = st.builds(F, st.integers(0, 9), st.sampled_from([1, 2]))


@st.composite
def trains(draw, amps=amplitudes, max_degree=4):
    a = draw(st.lists(amps, min_size=1, max_size=max_degree))
    return ImpulseSpectralTrain(draw(rationals), len(a), tuple(a))


@st.composite
def interferences(draw, amps=amplitudes, max_rows=3, max_cols=2, max_degree=4):
    rows = draw(st.lists(st.lists(trains(amps, max_degree), min_size=1, max_size=max_cols),
                         min_size=0, max_size=max_rows))
    return ImpulseInterference(tuple(ImpulseSpectralDensity(tuple(r)) for r in rows))
