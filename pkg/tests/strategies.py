from __future__ import annotations

from hypothesis import strategies as st

from matlift.gf2 import Gf2Matrix
from matlift.matroid import from_matrix


@st.composite
def matrices(draw, max_rows=5, max_cols=8, min_cols=0):
    n_cols = draw(st.integers(min_cols, max_cols))
    n_rows = draw(st.integers(0, max_rows))
    rows = draw(st.lists(st.integers(0, (1 << n_cols) - 1), min_size=n_rows, max_size=n_rows))
    return Gf2Matrix.from_rows(rows, n_cols)


@st.composite
def binary_matroids(draw, max_rows=5, max_cols=8, min_cols=0):
    m = draw(matrices(max_rows, max_cols, min_cols))
    return from_matrix([f"x{j}" for j in range(m.n_cols)], m)
