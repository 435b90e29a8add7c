"""Frozen graph fixtures shared by the test modules.

G1 has three strongly connected pieces: the triangles a-b-c and d-e-f and a
component on u1..u5, w whose two cycles share every arc except h, l, m.
G2 adds six connector arcs o..t that merge everything into one component in
which every cycle meets a cycle avoiding it.
"""

from tightcut.graph import MultiDigraph

LETTERS_G1 = "abcdefghijklm"
G1_PAIRS = [
    (0, 1), (1, 2), (2, 0),            # a b c
    (3, 4), (4, 5), (5, 3),            # d e f
    (6, 7), (7, 8), (8, 9), (9, 10),   # g h i j   (u1..u5 = 6..10)
    (10, 6), (7, 11), (11, 8),         # k l m     (w = 11)
]
LETTERS_G2 = LETTERS_G1 + "opqrst"
G2_PAIRS = G1_PAIRS + [(0, 3), (4, 9), (10, 2), (1, 4), (5, 6), (7, 0)]


def arc(name: str) -> int:
    return LETTERS_G2.index(name)


def arcs(names: str) -> frozenset[int]:
    return frozenset(arc(c) for c in names)


def g1() -> MultiDigraph:
    return MultiDigraph(G1_PAIRS)


def g2() -> MultiDigraph:
    return MultiDigraph(G2_PAIRS)


def t3() -> MultiDigraph:
    """Triangle a: 1->2, b: 2->3, c: 3->1."""
    return MultiDigraph([(1, 2), (2, 3), (3, 1)])


def digon_dup() -> MultiDigraph:
    """p, q: u->v and r: v->u with u=0, v=1."""
    return MultiDigraph([(0, 1), (0, 1), (1, 0)])


def loop1() -> MultiDigraph:
    return MultiDigraph([(1, 1)])


def two_triangles() -> MultiDigraph:
    return MultiDigraph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def dag_path() -> MultiDigraph:
    return MultiDigraph([(1, 2), (2, 3)])
