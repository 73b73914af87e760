"""Hypothesis strategies for partitions, skew shapes and words."""

from hypothesis import strategies as st

from skewsxp.partitions import skew


@st.composite
def partitions_st(draw, max_size=10, max_len=None):
    n = draw(st.integers(0, max_size))
    parts = []
    left = n
    cap = n
    while left:
        if max_len is not None and len(parts) == max_len:
            break
        x = draw(st.integers(1, min(cap, left)))
        parts.append(x)
        left -= x
        cap = x
    return tuple(parts)


@st.composite
def skew_shapes_st(draw, max_size=10):
    outer = draw(partitions_st(max_size))
    inner = []
    for i, x in enumerate(outer):
        cap = min(x, inner[-1]) if inner else x
        inner.append(draw(st.integers(0, cap)))
    return skew(outer, inner)


@st.composite
def words_st(draw, max_letter=4, max_len=14):
    return tuple(draw(st.lists(st.integers(1, max_letter), max_size=max_len)))
