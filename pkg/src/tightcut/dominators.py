"""Dominator trees on small integer-indexed flowgraphs.

Iterative algorithm of Cooper, Harvey and Kennedy over reverse postorder.
Vertices are ``0..n-1``; unreachable vertices get ``idom == -1``.
"""

from __future__ import annotations

from collections.abc import Sequence


def reverse_postorder(succ: Sequence[Sequence[int]], root: int) -> list[int]:
    n = len(succ)
    seen = [False] * n
    seen[root] = True
    post: list[int] = []
    stack = [(root, iter(succ[root]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if not seen[w]:
                seen[w] = True
                stack.append((w, iter(succ[w])))
                break
        else:
            stack.pop()
            post.append(v)
    post.reverse()
    return post


def immediate_dominators(succ: Sequence[Sequence[int]], pred: Sequence[Sequence[int]],
                         root: int) -> list[int]:
    """``idom[v]`` for every vertex; ``idom[root] == root``."""
    order = reverse_postorder(succ, root)
    rank = [-1] * len(succ)
    for i, v in enumerate(order):
        rank[v] = i
    idom = [-1] * len(succ)
    idom[root] = root
    changed = True
    while changed:
        changed = False
        for v in order[1:]:
            new = -1
            for p in pred[v]:
                if idom[p] == -1:
                    continue
                if new == -1:
                    new = p
                    continue
                a, b = p, new
                while a != b:
                    while rank[a] > rank[b]:
                        a = idom[a]
                    while rank[b] > rank[a]:
                        b = idom[b]
                new = a
            if idom[v] != new:
                idom[v] = new
                changed = True
    return idom


def tree_intervals(idom: Sequence[int], root: int) -> tuple[list[int], list[int]]:
    """Pre/post numbers of the dominator tree.

    ``x`` dominates ``y`` iff ``pre[x] <= pre[y]`` and ``post[y] <= post[x]``.
    Unreachable vertices keep ``-1``.
    """
    n = len(idom)
    children: list[list[int]] = [[] for _ in range(n)]
    for v, d in enumerate(idom):
        if d != -1 and v != root:
            children[d].append(v)
    pre = [-1] * n
    post = [-1] * n
    clock = 0
    stack = [(root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            post[v] = clock
        else:
            pre[v] = clock
            stack.append((v, True))
            stack.extend((c, False) for c in children[v])
        clock += 1
    return pre, post
