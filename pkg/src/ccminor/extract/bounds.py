"""Threshold functions and the weighted-tree witness search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Mapping, Optional

from ..errors import GraphError, TheoremViolation
from ..multigraph import Multigraph, is_tree


def f_wt(t: int) -> int:
    """Total weight above which a weighted tree must hold a witness."""
    return sum(t ** i for i in range(1, t // 2 + 2))


def _identity(k: int) -> int:
    return k


@dataclass(frozen=True)
class BoundFns:
    """The three threshold functions as exact integers.

    ``f_oot`` stands in for the Ramsey-type vertex bound for large
    3-connected graphs, which has no closed form.
    """

    f_oot: Callable[[int], int] = _identity

    def f_wt(self, t: int) -> int:
        return f_wt(t)

    def f_3con(self, t: int) -> int:
        return comb(self.f_oot(f_wt(t)), 2)

    def g(self, r: int) -> int:
        base = self.f_3con(r + 2)
        return sum(base ** i for i in range(1, r + 1))


@dataclass(frozen=True)
class HighDegreeVertex:
    vertex: int

    kind = "HighDegreeVertex"


@dataclass(frozen=True)
class LongPath:
    path: tuple

    kind = "LongPath"


@dataclass(frozen=True)
class HeavyPath:
    path: tuple

    kind = "HeavyPath"


def _farthest(tree: Multigraph, s: int):
    dist, parent = {s: 0}, {s: None}
    q = deque([s])
    while q:
        v = q.popleft()
        for u in sorted(set(tree.neighbors(v))):
            if u not in dist:
                dist[u] = dist[v] + 1
                parent[u] = v
                q.append(u)
    far = max(sorted(dist), key=lambda v: dist[v])
    path = [far]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return far, path


def longest_path(tree: Multigraph) -> List[int]:
    """A longest path (as vertices) of a tree, by the double sweep."""
    a, _ = _farthest(tree, min(tree.vertices))
    _, path = _farthest(tree, a)
    return path


def is_witness(tree: Multigraph, w: Mapping[int, int], t: int, wit) -> bool:
    if isinstance(wit, HighDegreeVertex):
        return wit.vertex in tree.vertices and tree.degree(wit.vertex) > t
    path = list(wit.path)
    if not path or len(set(path)) != len(path) or any(v not in tree.vertices for v in path):
        return False
    if any(path[i + 1] not in tree.neighbors(path[i]) for i in range(len(path) - 1)):
        return False
    if isinstance(wit, LongPath):
        return len(path) > t
    return sum(w.get(v, 0) for v in path) > t


def _profile(tree: Multigraph):
    """(sorted vertices, their degrees, a longest path) cached on the tree, or None if not a tree."""
    hit = tree._cache.get("tree_profile", False)
    if hit is False:
        order = sorted(tree.vertices)
        hit = (order, [tree.degree(v) for v in order], longest_path(tree)) if is_tree(tree) else None
        tree._cache["tree_profile"] = hit
    return hit


def weighted_tree_witness(tree: Multigraph, w: Mapping[int, int], t: int):
    """A vertex of degree > t, a path on > t vertices, or a path of weight > t.

    Checks degree, then the diameter; with both small the tree is small
    around its centre, so one vertex alone must weigh more than t.
    """
    if t <= 1:
        raise GraphError("t must exceed 1")
    prof = _profile(tree)
    if prof is None:
        raise GraphError("not a tree")
    order, degrees, path = prof
    if any(w.get(v, 0) < 0 for v in order):
        raise GraphError("weights must be non-negative")
    total = sum(w.get(v, 0) for v in order)
    if total <= f_wt(t):
        raise GraphError("below threshold")
    for v, d in zip(order, degrees):
        if d > t:
            return HighDegreeVertex(v)
    if len(path) > t:
        return LongPath(tuple(path))
    for v in order:
        if w.get(v, 0) > t:
            return HeavyPath((v,))
    raise TheoremViolation("weighted tree has no witness", {"tree": tree, "w": dict(w), "t": t})


def max_weight_path(tree: Multigraph, w: Mapping[int, int]) -> List[int]:
    """A path of largest total weight, found by rerooting from each end candidate."""
    best: Optional[List[int]] = None
    best_w = -1
    for s in sorted(tree.vertices):
        acc: Dict[int, int] = {s: w.get(s, 0)}
        parent: Dict[int, Optional[int]] = {s: None}
        q = deque([s])
        while q:
            v = q.popleft()
            for u in sorted(set(tree.neighbors(v))):
                if u not in acc:
                    acc[u] = acc[v] + w.get(u, 0)
                    parent[u] = v
                    q.append(u)
        end = max(sorted(acc), key=lambda v: acc[v])
        if acc[end] > best_w:
            best_w = acc[end]
            path = [end]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            best = path
    return best or []
