"""Hypothesis strategies for finite spaces and maps."""
from hypothesis import strategies as st

from posetcat.homotopy import map_tuples
from posetcat.maps import ContinuousMap
from posetcat.space import build_space


@st.composite
def spaces(draw, max_points=4, pointed=False):
    k = draw(st.integers(1, max_points))
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k) if draw(st.booleans())]
    X = build_space(list(range(k)), pairs)
    if pointed:
        X = X.with_basepoint(draw(st.integers(0, k - 1)))
    return X


@st.composite
def maps_between(draw, X, Y, pointed=False):
    cands = map_tuples(X, Y, pointed=pointed)
    return ContinuousMap(X, Y, draw(st.sampled_from(cands)), check=False)


@st.composite
def map_pairs(draw, max_points=4):
    X, Y = draw(spaces(max_points)), draw(spaces(max_points))
    return draw(maps_between(X, Y)), draw(maps_between(X, Y))
