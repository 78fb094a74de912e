"""Cycle structure of ladder-subgraph components.

Every cycle in a 2-wide ladder is the boundary of a contiguous block of
cells, so a maximal cycle can be grown from any cycle by repeatedly splicing
in an outside path that joins two adjacent cycle nodes.  Rungs interior to a
block show up as chords of its boundary cycle.

A *whisker* is a path hanging off a cycle by one edge.  Two whiskers whose
feet are joined by a cycle edge must run in lockstep in any valid layout, so
their paired prefixes (the cycle's *frame*) behave like one larger cycle once
the pairing rungs are added ("completing" the frame).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Edge, Graph, norm_edge
from .errors import (
    CycleTooShortError,
    EdgeNotInComponentError,
    InvariantViolationError,
    NotALineGraphError,
    UncompletedFrameError,
)


@dataclass(frozen=True)
class MaximalCycle:
    nodes: tuple[int, ...]  # cyclic order
    chords: tuple[Edge, ...]  # inner edges, both endpoints on the cycle

    def __len__(self) -> int:
        return len(self.nodes)

    def node_set(self) -> set[int]:
        return set(self.nodes)

    def edge_list(self) -> list[Edge]:
        n = len(self.nodes)
        return [norm_edge(self.nodes[i], self.nodes[(i + 1) % n]) for i in range(n)]

    def rotated_from(self, start: int, forward: bool = True) -> tuple[int, ...]:
        i = self.nodes.index(start)
        seq = self.nodes[i:] + self.nodes[:i]
        if not forward:
            seq = (seq[0],) + tuple(reversed(seq[1:]))
        return seq


def _canonical(cycle: list[int], g: Graph) -> MaximalCycle:
    i = cycle.index(min(cycle))
    seq = cycle[i:] + cycle[:i]
    if seq[-1] < seq[1]:
        seq = [seq[0]] + seq[1:][::-1]
    cyc_set = set(seq)
    boundary = {norm_edge(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))}
    chords = tuple(
        sorted(
            e
            for e in g.edges()
            if e[0] in cyc_set and e[1] in cyc_set and e not in boundary
        )
    )
    return MaximalCycle(nodes=tuple(seq), chords=chords)


def find_maximal_cycle(g: Graph, through: Optional[Edge] = None) -> Optional[MaximalCycle]:
    """A maximal cycle of `g`, containing `through`'s endpoints when given.

    Returns None when the (relevant part of the) graph is acyclic.
    """
    if through is not None:
        u, v = through
        if not g.has_edge(u, v):
            raise EdgeNotInComponentError(f"edge {through} not in graph")
        path = g.bfs_path(u, v, banned_edge=norm_edge(u, v))
        if path is None:
            return None
        cycle = path  # closing edge (v, u) implied
    else:
        cycle = _any_cycle(g)
        if cycle is None:
            return None
    return _canonical(_enlarge(g, cycle), g)


def _any_cycle(g: Graph) -> Optional[list[int]]:
    for e in g.edges():
        path = g.bfs_path(e[0], e[1], banned_edge=e)
        if path is not None:
            return path
    return None


def _enlarge(g: Graph, cycle: list[int]) -> list[int]:
    """Splice outside paths across cycle edges until no cycle contains more.

    In a ladder subgraph an enlargement can only bridge two adjacent cycle
    nodes (the corners of a block end), which is exactly what the splice
    tries.
    """
    while True:
        cyc_set = set(cycle)
        n = len(cycle)
        spliced = False
        for i in range(n):
            a, b = cycle[i], cycle[(i + 1) % n]
            if not (g.neighbors(a) - cyc_set) or not (g.neighbors(b) - cyc_set):
                continue
            outside = g.subgraph((g.nodes - cyc_set) | {a, b})
            path = outside.bfs_path(a, b, banned_edge=norm_edge(a, b))
            if path is None or len(path) < 3:
                continue
            cycle = cycle[: i + 1] + path[1:-1] + cycle[i + 1 :]
            spliced = True
            break
        if not spliced:
            return cycle


@dataclass(frozen=True)
class Whisker:
    nodes: tuple[int, ...]  # enumerated from the cycle outward
    foot: int  # cycle node it hangs from

    def __len__(self) -> int:
        return len(self.nodes)


def whiskers_of(cycle: MaximalCycle, g: Graph) -> list[Whisker]:
    """Path-shaped components hanging off the cycle by a single edge."""
    cyc_set = cycle.node_set()
    rest = g.subgraph(g.nodes - cyc_set)
    out: list[Whisker] = []
    for comp in rest.components():
        legs = [(c, w) for w in sorted(comp) for c in sorted(g.neighbors(w) & cyc_set)]
        if len(legs) != 1:
            continue
        foot, first = legs[0]
        sub = rest.subgraph(comp)
        if any(sub.degree(v) > 2 for v in comp) or sub.degree(first) > 1:
            continue  # not a path hanging by its end
        nodes = [first]
        while True:
            nxt = [x for x in sub.neighbors(nodes[-1]) if len(nodes) < 2 or x != nodes[-2]]
            if not nxt:
                break
            nodes.append(nxt[0])
        out.append(Whisker(nodes=tuple(nodes), foot=foot))
    out.sort(key=lambda w: w.foot)
    return out


def _straight_run(g: Graph, cyc_set: set[int], start: int) -> list[int]:
    """Walk outward from a cycle corner while the hanging graph stays a path."""
    rest_nodes = g.nodes - cyc_set
    run: list[int] = []
    prev: Optional[int] = None
    cur = start
    while True:
        nbrs = [x for x in g.neighbors(cur) if x in rest_nodes]
        if len(nbrs) > 2:
            break  # branch point: pairing never reaches this far
        run.append(cur)
        step = [x for x in nbrs if x != prev]
        if not step:
            break
        prev, cur = cur, step[0]
    return run


@dataclass(frozen=True)
class Frame:
    """A cycle plus the paired whisker prefixes at its attachment corners."""

    cycle: MaximalCycle
    pairs: tuple[tuple[int, int], ...]  # lockstep node pairs across the cycle
    completion_edges: tuple[Edge, ...]  # pairing rungs not yet in the graph

    def node_set(self) -> set[int]:
        s = self.cycle.node_set()
        for a, b in self.pairs:
            s.add(a)
            s.add(b)
        return s


def frame_of(cycle: MaximalCycle, g: Graph) -> Frame:
    """Pair whisker prefixes across every cycle edge with hung nodes on both ends."""
    if len(cycle) < 6:
        raise CycleTooShortError("frames need a cycle of length >= 6")
    cyc_set = cycle.node_set()
    pairs: list[tuple[int, int]] = []
    completion: list[Edge] = []
    for c1, c2 in cycle.edge_list():
        out1 = sorted(g.neighbors(c1) - cyc_set)
        out2 = sorted(g.neighbors(c2) - cyc_set)
        if not out1 or not out2:
            continue
        if len(out1) > 1 or len(out2) > 1:
            raise InvariantViolationError(f"cycle node with several hanging edges at {(c1, c2)}")
        run1 = _straight_run(g, cyc_set, out1[0])
        run2 = _straight_run(g, cyc_set, out2[0])
        for a, b in zip(run1, run2):
            pairs.append((a, b))
            if not g.has_edge(a, b):
                completion.append(norm_edge(a, b))
    return Frame(cycle=cycle, pairs=tuple(pairs), completion_edges=tuple(sorted(completion)))


def maximal_cycles(g: Graph) -> list[MaximalCycle]:
    """All maximal cycles (they are vertex-disjoint in ladder subgraphs)."""
    seen_edges: set[Edge] = set()
    out: list[MaximalCycle] = []
    for e in g.edges():
        if e in seen_edges:
            continue
        mc = find_maximal_cycle(g, through=e)
        if mc is None:
            seen_edges.add(e)
            continue
        seen_edges.update(mc.edge_list())
        seen_edges.update(mc.chords)
        seen_edges.add(e)
        out.append(mc)
    return out


def preprocess(g: Graph) -> tuple[Graph, list[Edge], list[Edge]]:
    """Drop one edge from every maximal 4-cycle, then complete all frames.

    Returns (new graph, ignored edges, phantom completion edges).  The result
    has no maximal 4-cycles and no uncompleted frames.
    """
    work = g.copy()
    ignored: list[Edge] = []
    for mc in maximal_cycles(work):
        if len(mc) == 4:
            drop = min(mc.edge_list())
            work.remove_edge(*drop)
            ignored.append(drop)
    phantom: list[Edge] = []
    while True:
        added = False
        for mc in maximal_cycles(work):
            if len(mc) < 6:
                continue
            fr = frame_of(mc, work)
            for e in fr.completion_edges:
                work.add_edge(*e)
                phantom.append(e)
                added = True
        if not added:
            return work, sorted(ignored), sorted(phantom)


@dataclass(frozen=True)
class Part:
    kind: str  # "cycle" | "tree"
    nodes: tuple[int, ...]
    cycle: Optional[MaximalCycle] = None

    def node_set(self) -> set[int]:
        return set(self.nodes)

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"


@dataclass
class CycleTreeChain:
    parts: list[Part]

    def __len__(self) -> int:
        return len(self.parts)

    def part_index_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p.node_set():
                return i
        raise EdgeNotInComponentError(f"node {v} not in chain")

    def link_edge(self, g: Graph, i: int) -> Edge:
        """The unique edge joining parts i and i+1."""
        a, b = self.parts[i].node_set(), self.parts[i + 1].node_set()
        links = [e for e in g.edges() if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a)]
        if len(links) != 1:
            raise InvariantViolationError(f"{len(links)} links between chain parts {i},{i + 1}")
        return links[0]

    def reverse(self) -> None:
        self.parts.reverse()


def cycle_tree_chain(g: Graph) -> CycleTreeChain:
    """Ordered decomposition into maximal cycles and the trees between them."""
    for mc in maximal_cycles(g):
        if len(mc) >= 6 and frame_of(mc, g).completion_edges:
            raise UncompletedFrameError(f"cycle at {mc.nodes[0]} has an uncompleted frame")
    return CycleTreeChain(parts=_chain_parts(g))


def _chain_parts(g: Graph) -> list[Part]:
    if not g.adj:
        return []
    if g.is_acyclic():
        return [Part(kind="tree", nodes=tuple(g.node_list()))]
    mc = find_maximal_cycle(g)
    assert mc is not None
    cyc_set = mc.node_set()
    sides = g.subgraph(g.nodes - cyc_set).components()
    if len(sides) > 2:
        raise InvariantViolationError(f"{len(sides)} components besides a maximal cycle")
    chains = [_oriented(_chain_parts(g.subgraph(side)), g, cyc_set) for side in sides]
    me = Part(kind="cycle", nodes=mc.nodes, cycle=mc)
    if not chains:
        return [me]
    if len(chains) == 1:
        return [me] + chains[0]
    # both sides: the one oriented toward the cycle goes first, reversed
    first, second = chains
    return [p for p in reversed(first)] + [me] + second


def _oriented(parts: list[Part], g: Graph, cyc_set: set[int]) -> list[Part]:
    """Orient a side chain so its cycle-adjacent part comes first."""

    def touches(p: Part) -> bool:
        return any((g.neighbors(v) & cyc_set) for v in p.node_set())

    if len(parts) <= 1 or touches(parts[0]):
        return parts
    if touches(parts[-1]):
        return parts[::-1]
    raise InvariantViolationError("no chain end touches the cycle")
