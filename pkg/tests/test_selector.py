import pytest
from hypothesis import given
from hypothesis import strategies as st

from isoprobe.coloring import Coloring
from isoprobe.selector import SELECTORS, get_selector, select_cell, select_cell_smallest


def test_first_largest():
    col = Coloring.from_cells(7, [[0], [1, 2], [3, 4, 5], [6]])
    assert select_cell(col) == 3


def test_tie_goes_to_first():
    col = Coloring.from_cells(7, [[0, 1, 2], [3], [4, 5, 6]])
    assert select_cell(col) == 0
    col = Coloring.from_cells(6, [[5], [0, 1], [2, 3], [4]])
    assert select_cell(col) == 1


def test_discrete_returns_none():
    col = Coloring.from_cells(3, [[0], [1], [2]])
    assert select_cell(col) is None and select_cell_smallest(col) is None


def test_smallest():
    col = Coloring.from_cells(8, [[0, 1, 2], [3], [4, 5, 6], [7]])
    assert select_cell_smallest(col) == 0
    col = Coloring.from_cells(8, [[0, 1, 2], [3, 4], [5, 6, 7]])
    assert select_cell_smallest(col) == 3


def test_registry():
    assert get_selector("first-largest") is select_cell
    assert get_selector(select_cell_smallest) is select_cell_smallest
    assert set(SELECTORS) == {"first-largest", "smallest"}
    with pytest.raises(ValueError):
        get_selector("random")


@st.composite
def colorings(draw):
    n = draw(st.integers(1, 20))
    perm = draw(st.permutations(range(n)))
    cuts = sorted(draw(st.sets(st.integers(1, n - 1))) if n > 1 else [])
    bounds = [0, *cuts, n]
    return Coloring.from_cells(n, [list(perm[a:b]) for a, b in zip(bounds, bounds[1:])])


@given(colorings())
def test_selectors_agree_with_definition(col):
    sizes = [(col.cell_size[c], c) for c in col.cell_ids() if col.cell_size[c] > 1]
    if not sizes:
        assert select_cell(col) is None
        return
    big = max(s for s, _ in sizes)
    small = min(s for s, _ in sizes)
    assert select_cell(col) == min(c for s, c in sizes if s == big)
    assert select_cell_smallest(col) == min(c for s, c in sizes if s == small)
