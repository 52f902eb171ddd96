from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from girthcodes import families
from girthcodes.graph import Graph


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def girth5_graphs(draw, max_n: int = 14, min_degree: int = 0) -> Graph:
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1 if min_degree == 0 else 5, max_n))
    rng = random.Random(seed)
    saturate = min_degree > 0 or draw(st.booleans())
    return families.random_girth5_graph(n, rng, saturate=saturate, min_degree=min_degree)
