from __future__ import annotations

from hypothesis import strategies as st

from ktrans import OrientedDigraph


@st.composite
def oriented_digraphs(draw, max_n: int = 6) -> OrientedDigraph:
    """Random oriented digraph: each vertex pair is absent, forward, or backward."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    arcs = set()
    for x in range(n):
        for y in range(x + 1, n):
            state = draw(st.integers(min_value=0, max_value=2))
            if state == 1:
                arcs.add((x, y))
            elif state == 2:
                arcs.add((y, x))
    return OrientedDigraph(n, arcs)
