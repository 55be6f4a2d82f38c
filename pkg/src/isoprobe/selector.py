"""Cell selectors. Both return a cell id, or ``None`` on a discrete coloring."""

from typing import Optional

from .coloring import Coloring


def select_cell(pi: Coloring) -> Optional[int]:
    """First largest non-singleton cell."""
    best = None
    best_size = 1
    size_of = pi.cell_size
    n = len(pi.order)
    i = 0
    while i < n:
        s = size_of[i]
        if s > best_size:
            best, best_size = i, s
        i += s
    return best


def select_cell_smallest(pi: Coloring) -> Optional[int]:
    """First smallest non-singleton cell."""
    best = None
    best_size = None
    size_of = pi.cell_size
    n = len(pi.order)
    i = 0
    while i < n:
        s = size_of[i]
        if s > 1 and (best_size is None or s < best_size):
            best, best_size = i, s
            if s == 2:
                break
        i += s
    return best


SELECTORS = {
    "first-largest": select_cell,
    "smallest": select_cell_smallest,
}


def get_selector(name):
    if callable(name):
        return name
    try:
        return SELECTORS[name]
    except KeyError:
        raise ValueError(f"unknown selector {name!r}; choose from {sorted(SELECTORS)}") from None
