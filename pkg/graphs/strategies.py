from hypothesis import strategies as st

from graphs.graph import ClassicalColouring, Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs),
                         max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def coloured_graphs(draw, c: int = 3, min_n: int = 1, max_n: int = 9,
                    connected: bool = False):
    """
    A graph together with a proper c-colouring of it. With `connected`,
    vertex i > 0 is first joined to an earlier vertex of another colour,
    so the graph is connected.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    colours = [draw(st.integers(0, c - 1))]
    edges = set()
    for v in range(1, n):
        if connected:
            parent = draw(st.integers(0, v - 1))
            offset = draw(st.integers(1, c - 1)) if c > 1 else 0
            colours.append((colours[parent] + offset) % c)
            edges.add((parent, v))
        else:
            colours.append(draw(st.integers(0, c - 1)))
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)
                  if colours[u] != colours[v] and (u, v) not in edges]
    keep = draw(st.lists(st.booleans(), min_size=len(candidates),
                         max_size=len(candidates)))
    edges.update(e for e, k in zip(candidates, keep) if k)
    return Graph(n, sorted(edges)), ClassicalColouring(c, tuple(colours))
