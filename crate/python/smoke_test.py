"""Smoke test for the `unigraph` extension module.

Install with `pip install ./crates/py` (maturin), or build with
`cargo build -p unigraph-py --release` and copy `target/release/libunigraph.so`
to `python/unigraph.so`. Then run this script.
"""

import unigraph

DOMINO = "6 7\n0 1\n1 2\n3 4\n4 5\n0 3\n1 4\n2 5\n"

g = unigraph.Graph.parse(DOMINO)
assert (g.n, g.m) == (6, 7)
assert g.edges() == [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]
assert g.degree_set() == [3, 3, 2, 2, 2, 2]
assert g.is_connected() and not g.is_tree()

verdict = unigraph.is_unigraph(g)
assert not verdict["is_unigraph"]
witness = verdict["witness"]
assert witness.degree_set() == g.degree_set()
assert not unigraph.are_isomorphic(g, witness)

# Colors follow g.edges(): one color per horizontal row plus the rungs.
three = [1, 1, 2, 3, 2, 3, 3]
assert unigraph.is_strongly_unigraphic_coloring(g, three)
assert unigraph.unigraph_number(g)[0] == 2
assert unigraph.strong_unigraph_number(g)[0] == 3

full = unigraph.decompose(g, strong=True)
assert (full["w"], full["s"], full["tau"]) == (2, 3, 3)

cover = unigraph.minimum_vertex_cover(g)
star = unigraph.star_coloring_from_vertex_cover(g, cover)
assert unigraph.is_unigraphic_coloring(g, star)

path = unigraph.Graph(7, [(i, i + 1) for i in range(6)])
k, coloring = unigraph.tree_unigraph_number(path)
assert k == 2 and unigraph.is_unigraphic_coloring(path, coloring)
assert unigraph.fast_filter(path) == "diameter"

try:
    unigraph.Graph(3, [(0, 5)])
except ValueError:
    pass
else:
    raise AssertionError("out-of-range edge accepted")

try:
    unigraph.is_unigraph(unigraph.Graph(13, [(i, j) for i in range(13) for j in range(i + 1, 13)]))
except unigraph.SizeBoundError:
    pass
else:
    raise AssertionError("size bound not enforced")

print("smoke test passed")
