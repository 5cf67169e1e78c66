"""Shared fixtures: reference models, grids, and hand-traced selection families."""
import numpy as np
import pytest

from levycov import FrequencyGrid, LevyModel, StableComponent


@pytest.fixture
def ref_cov():
    return np.array([[2.0, 1.0], [1.0, 1.0]])


@pytest.fixture
def gaussian_model(ref_cov):
    return LevyModel(cov=ref_cov)


@pytest.fixture
def jump_model(ref_cov):
    return LevyModel(cov=ref_cov, jumps=(
        StableComponent(alpha=0.5, scale=0.3, axis=1),
        StableComponent(alpha=1.5, scale=0.3, axis=2),
    ))


@pytest.fixture
def small_grid():
    return FrequencyGrid.log_spaced(0.5, 20.0, 40)


# Hand-traced families for the two pairwise-comparison stopping rules.
# Each entry: (estimates, bounds/rates, multiplier, expected index).
#
# Scan-forward rule (last accepted index; candidate j+1 must stay within
# bigC * bounds[j+1] of every earlier estimate):
#   f1: candidate 2 jumps by 10 -> stop after accepting index 1
#   f2: all equal -> never stops -> K
#   f3: slow drift crosses the budget at candidate 3 -> index 2
#   f4: first candidate already violates -> index 0
#   f5: a loose bound at index 2 lets the jump through, the tight bound
#       at index 3 rejects the return -> index 2
#   f6: larger bigC widens the budget enough to accept everything -> K
LEPSKII1_FAMILIES = [
    ([0.0, 0.0, 10.0, 0.0], [1.0, 1.0, 1.0, 1.0], 1.0, 1),
    ([0.0, 0.0, 0.0, 0.0], [1.0, 1.0, 1.0, 1.0], 1.0, 3),
    ([0.0, 0.5, 1.0, 1.5], [1.0, 1.0, 1.0, 1.0], 1.0, 2),
    ([0.0, 5.0, 0.0, 0.0], [1.0, 1.0, 1.0, 1.0], 1.0, 0),
    ([0.0, 0.0, 10.0, 0.0], [1.0, 1.0, 20.0, 1.0], 1.0, 2),
    ([0.0, 2.0, 0.0], [1.0, 1.0, 1.0], 3.0, 2),
]

# Scan-back rule (smallest j whose estimate stays within 2A * rates[k] of
# every later estimate; K when none qualifies):
#   g1: initial outlier -> j* = 1
#   g2: all equal -> j* = 0
#   g3: final outlier poisons every j -> j* = K
#   g4: doubling A rescues j = 0
#   g5: per-index rates; the loose rate at k=0 is never used -> j* = 1
#   g6: larger gap still inside the doubled budget -> j* = 0
LEPSKII2_FAMILIES = [
    ([5.0, 1.0, 1.0, 1.0], [1.0, 1.0, 1.0, 1.0], 1.0, 1),
    ([2.0, 2.0, 2.0, 2.0], [1.0, 1.0, 1.0, 1.0], 1.0, 0),
    ([0.0, 0.0, 0.0, 9.0], [1.0, 1.0, 1.0, 1.0], 1.0, 3),
    ([5.0, 1.0, 1.0, 1.0], [1.0, 1.0, 1.0, 1.0], 2.0, 0),
    ([3.0, 0.0, 0.0], [9.0, 1.0, 1.0], 1.0, 1),
    ([0.0, 1.5, 0.5], [1.0, 1.0, 1.0], 1.0, 0),
]


@pytest.fixture
def lepskii1_families():
    return LEPSKII1_FAMILIES


@pytest.fixture
def lepskii2_families():
    return LEPSKII2_FAMILIES
