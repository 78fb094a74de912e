"""Graph and embedding data model for the 2xN ladder and the host line.

Nodes are integers.  A ladder coordinate is a ``(level, side)`` pair with
``side in {1, 2}``; levels are unbounded integers while an embedding is being
built and are shifted so the minimum occupied level is 1 once it is final.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    EmptyGraphError,
    TooLargeError,
    UndefinedNodeError,
)

EXACT_SEARCH_CAP = 12

Edge = tuple[int, int]


class Coord(NamedTuple):
    level: int
    side: int

    def opposite(self) -> "Coord":
        return Coord(self.level, 3 - self.side)


def norm_edge(u: int, v: int) -> Edge:
    """Undirected edges are stored as (min, max) pairs."""
    return (u, v) if u < v else (v, u)


def coords_adjacent(a: Coord, b: Coord) -> bool:
    return abs(a.level - b.level) + abs(a.side - b.side) == 1


class Graph:
    """Mutable undirected graph over integer nodes (adjacency sets)."""

    __slots__ = ("adj",)

    def __init__(self, nodes: Iterable[int] = (), edges: Iterable[Edge] = ()):
        self.adj: dict[int, set[int]] = {v: set() for v in nodes}
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def nodes(self) -> set[int]:
        return set(self.adj)

    def node_list(self) -> list[int]:
        return sorted(self.adj)

    def __contains__(self, v: int) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    def add_node(self, v: int) -> None:
        self.adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj and v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    def edges(self) -> Iterator[Edge]:
        for u in sorted(self.adj):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj.values()) // 2

    def copy(self) -> "Graph":
        g = Graph()
        g.adj = {v: set(s) for v, s in self.adj.items()}
        return g

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        g = Graph(keep)
        for v in keep:
            g.adj[v] = self.adj[v] & keep
        return g

    def components(self) -> list[set[int]]:
        """Connected components, each as a node set, ordered by min node."""
        seen: set[int] = set()
        out: list[set[int]] = []
        for start in sorted(self.adj):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_acyclic(self) -> bool:
        return self.edge_count() == len(self.adj) - len(self.components())

    def bfs_path(self, src: int, dst: int, banned_edge: Optional[Edge] = None) -> Optional[list[int]]:
        """Shortest path src..dst, optionally refusing to cross one edge."""
        if src == dst:
            return [src]
        prev = {src: src}
        frontier = [src]
        while frontier:
            nxt = []
            for x in frontier:
                for y in sorted(self.adj[x]):
                    if y in prev:
                        continue
                    if banned_edge and norm_edge(x, y) == banned_edge:
                        continue
                    prev[y] = x
                    if y == dst:
                        path = [y]
                        while path[-1] != src:
                            path.append(prev[path[-1]])
                        path.reverse()
                        return path
                    nxt.append(y)
            frontier = nxt
        return None

    def tree_path(self, src: int, dst: int) -> list[int]:
        path = self.bfs_path(src, dst)
        if path is None:
            raise UndefinedNodeError(f"no path {src}..{dst}")
        return path


def ladder_graph(levels: int) -> Graph:
    """The full 2 x `levels` grid; node id = 2*(level-1) + side."""
    g = Graph(range(1, 2 * levels + 1))
    for lvl in range(1, levels + 1):
        g.add_edge(ladder_node(lvl, 1), ladder_node(lvl, 2))
        if lvl < levels:
            g.add_edge(ladder_node(lvl, 1), ladder_node(lvl + 1, 1))
            g.add_edge(ladder_node(lvl, 2), ladder_node(lvl + 1, 2))
    return g


def ladder_node(level: int, side: int) -> int:
    return 2 * (level - 1) + side


def ladder_coord(node: int) -> Coord:
    level, side0 = divmod(node - 1, 2)
    return Coord(level + 1, side0 + 1)


Placement = dict[int, Coord]


def normalize_levels(placement: Placement) -> Placement:
    """Shift levels so the minimum occupied level is 1."""
    if not placement:
        return {}
    shift = 1 - min(c.level for c in placement.values())
    if shift == 0:
        return dict(placement)
    return {v: Coord(c.level + shift, c.side) for v, c in placement.items()}


def _check_cover(g: Graph, placement: Placement) -> None:
    missing = [v for v in g.adj if v not in placement]
    if missing:
        raise UndefinedNodeError(f"placement misses nodes {sorted(missing)[:5]}")
    for v, c in placement.items():
        if c.side not in (1, 2):
            raise UndefinedNodeError(f"bad side for node {v}: {c}")


def is_correct_embedding(g: Graph, placement: Placement) -> bool:
    """Injective and edge-preserving into the (unbounded) ladder."""
    _check_cover(g, placement)
    used = {placement[v] for v in g.adj}
    if len(used) != len(g.adj):
        return False
    return all(coords_adjacent(placement[u], placement[v]) for u, v in g.edges())


def is_quasi_correct(g: Graph, placement: Placement) -> bool:
    """Edge-preserving with at most three images per ladder level."""
    _check_cover(g, placement)
    if not all(coords_adjacent(placement[u], placement[v]) for u, v in g.edges()):
        return False
    by_level: dict[int, int] = {}
    for v in g.adj:
        lvl = placement[v].level
        by_level[lvl] = by_level.get(lvl, 0) + 1
        if by_level[lvl] > 3:
            return False
    return True


def bandwidth_of_config(g: Graph, order: list[int]) -> int:
    """Max edge stretch of a line order (positions are list indices)."""
    pos = {v: i for i, v in enumerate(order)}
    missing = [v for v in g.adj if v not in pos]
    if missing:
        raise UndefinedNodeError(f"order misses nodes {sorted(missing)[:5]}")
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


def bandwidth_exact(g: Graph, cap: int = EXACT_SEARCH_CAP) -> int:
    """Exact bandwidth by branch-and-bound over orderings.

    Desk-scale oracle only: raises TooLargeError above `cap` nodes.
    """
    nodes = g.node_list()
    n = len(nodes)
    if n == 0:
        return 0
    if n > cap:
        raise TooLargeError(f"{n} nodes exceeds exact cap {cap}")
    if g.edge_count() == 0:
        return 0

    best = bandwidth_of_config(g, _greedy_order(g))
    lower = max((g.degree(v) + 1) // 2 for v in nodes)
    if best <= lower:
        return best

    pos: dict[int, int] = {}
    order: list[int] = []

    def extend(i: int, partial_max: int) -> None:
        nonlocal best
        if partial_max >= best:
            return
        if i == n:
            best = partial_max
            return
        # a placed node with an unplaced neighbour must still reach it
        for w in order:
            if i - pos[w] >= best and any(x not in pos for x in g.neighbors(w)):
                return
        for v in nodes:
            if v in pos:
                continue
            stretch = partial_max
            ok = True
            for w in g.neighbors(v):
                if w in pos:
                    s = i - pos[w]
                    if s >= best:
                        ok = False
                        break
                    if s > stretch:
                        stretch = s
            if not ok:
                continue
            pos[v] = i
            order.append(v)
            extend(i + 1, stretch)
            order.pop()
            del pos[v]
            if best <= lower:
                return

    extend(0, 0)
    return best


def _greedy_order(g: Graph) -> list[int]:
    """BFS order; a decent initial upper bound for the search."""
    out: list[int] = []
    seen: set[int] = set()
    for start in g.node_list():
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            x = queue.pop(0)
            out.append(x)
            for y in sorted(g.neighbors(x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return out


def subgraph_bandwidth_monotone_check(g: Graph, s: Graph, cap: int = EXACT_SEARCH_CAP) -> bool:
    """Property-test oracle: bandwidth(s) <= bandwidth(g) for s inside g."""
    return bandwidth_exact(s, cap) <= bandwidth_exact(g, cap)


@dataclass(frozen=True)
class DemandInstance:
    """A demand graph plus optional ground-truth ladder coordinates.

    Ground truth is consumed by generators and validators only; the online
    engine never sees it.
    """

    n: int
    edges: tuple[Edge, ...]
    ground_truth: Optional[dict[int, Coord]] = None

    def graph(self) -> Graph:
        return Graph(range(1, self.n + 1), self.edges)

    def to_json(self) -> dict:
        doc: dict = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.ground_truth is not None:
            doc["ground_truth"] = [
                [v, c.side, c.level] for v, c in sorted(self.ground_truth.items())
            ]
        return doc


def load_demand(path: str) -> DemandInstance:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return demand_from_json(doc)


def demand_from_json(doc: dict) -> DemandInstance:
    edges = tuple(sorted(norm_edge(int(u), int(v)) for u, v in doc["edges"]))
    gt = None
    if doc.get("ground_truth") is not None:
        gt = {int(v): Coord(int(level), int(side)) for v, side, level in doc["ground_truth"]}
    return DemandInstance(n=int(doc["n"]), edges=edges, ground_truth=gt)


def save_demand(inst: DemandInstance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(inst.to_json(), fh, indent=1)
        fh.write("\n")


def load_placement(path: str) -> Placement:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    rows = doc["placement"] if isinstance(doc, dict) else doc
    return {int(v): Coord(int(level), int(side)) for v, side, level in rows}


def save_placement(placement: Placement, path: str) -> None:
    rows = [[v, c.side, c.level] for v, c in sorted(placement.items())]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"placement": rows}, fh, indent=1)
        fh.write("\n")
