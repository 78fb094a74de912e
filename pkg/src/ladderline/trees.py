"""Structural analysis of trees that fit on a 2-wide ladder.

Vertices of degree three are forced onto the spine of any valid layout.  The
*trunk core* is the path every layout must route through: it joins the
degree-three nodes that are pinned down either because they have no
degree-three neighbour or because they sit between two other degree-three
nodes.  What hangs off the trunk core is always a plain path (a *limb*);
limbs at the ends of the core are *exit* limbs, the rest are *inner* limbs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import Coord, Graph, Placement, norm_edge
from .errors import (
    EmptyCoreError,
    InvariantViolationError,
    NotALineGraphError,
    NotATreeError,
)


@dataclass(frozen=True)
class TrunkCore:
    """The forced path of a tree plus optional extensions to cycle links."""

    path: tuple[int, ...]
    support: frozenset[int]
    extensions: tuple[tuple[int, ...], ...] = ()
    _extended: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.path)

    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    def extended_path(self) -> tuple[int, ...]:
        """Core with extensions glued on, as one path."""
        return self._extended if self._extended else self.path


def _require_tree(t: Graph) -> None:
    if not t.is_connected() or not t.is_acyclic():
        raise NotATreeError("expected a connected acyclic graph")


def branch_nodes(t: Graph) -> list[int]:
    return [v for v in t.node_list() if t.degree(v) >= 3]


def support_nodes(t: Graph) -> set[int]:
    """Nodes forced onto the spine of every valid ladder layout.

    Either a degree-3 node with no degree-3 neighbour, or any node strictly
    inside the tree path between two degree-3 nodes.
    """
    b3 = set(branch_nodes(t))
    if not b3:
        return set()
    lone = {v for v in b3 if not (t.neighbors(v) & b3)}

    # root anywhere; count branch nodes per subtree to find "between" nodes
    root = t.node_list()[0]
    order: list[int] = []
    parent: dict[int, int] = {root: root}
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in t.neighbors(x):
            if y not in parent:
                parent[y] = x
                stack.append(y)
    down: dict[int, int] = {v: (1 if v in b3 else 0) for v in t.adj}
    for x in reversed(order):
        if parent[x] != x:
            down[parent[x]] += down[x]
    total = len(b3)

    between: set[int] = set()
    for x in t.adj:
        dirs = 0
        for y in t.neighbors(x):
            if parent.get(y) == x:
                cnt = down[y]
            else:
                cnt = total - down[x]
            if cnt >= 1:
                dirs += 1
        if dirs >= 2:
            between.add(x)
    return lone | between


def trunk_core(t: Graph, attachments: Iterable[int] = ()) -> TrunkCore:
    """The path through all support nodes; empty when fewer than one exists.

    `attachments` are tree nodes that link to cycles elsewhere in the
    component; the returned core carries extensions reaching them, so
    `extended_path()` spans support nodes and attachments alike.
    """
    _require_tree(t)
    support = support_nodes(t)
    path = _covering_path(t, support) if support else ()

    attach = list(dict.fromkeys(attachments))
    if not attach:
        return TrunkCore(path=path, support=frozenset(support))

    full = _covering_path(t, support | set(attach))
    exts: list[tuple[int, ...]] = []
    if path:
        if not set(path) <= set(full):
            raise InvariantViolationError("attachments do not extend the trunk core")
        i = full.index(path[0])
        j = full.index(path[-1])
        lo, hi = sorted((i, j))
        if full[lo : hi + 1] not in (path, path[::-1]):
            raise InvariantViolationError("trunk core is not contiguous in extension")
        if full[lo : hi + 1] == path[::-1]:
            full = full[::-1]
            lo, hi = len(full) - 1 - hi, len(full) - 1 - lo
        if lo > 0:
            exts.append(tuple(reversed(full[:lo])))  # outward from the core end
        if hi < len(full) - 1:
            exts.append(tuple(full[hi + 1 :]))
    elif full:
        exts.append(tuple(full))
    return TrunkCore(
        path=path, support=frozenset(support), extensions=tuple(exts), _extended=tuple(full)
    )


def _covering_path(t: Graph, targets: set[int]) -> tuple[int, ...]:
    """Minimal tree path containing all targets; loud if they are not on one."""
    if not targets:
        return ()
    first = min(targets)
    a = _farthest(t, first, targets)
    b = _farthest(t, a, targets)
    path = t.tree_path(a, b)
    if not targets <= set(path):
        raise InvariantViolationError("target nodes are not on a single path")
    if path[0] > path[-1]:
        path.reverse()
    return tuple(path)


def _farthest(t: Graph, src: int, among: set[int]) -> int:
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for x in frontier:
            for y in t.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    best = max(dist[v] for v in among)
    return min(v for v in among if dist[v] == best)


@dataclass(frozen=True)
class Limb:
    """A path hanging off the trunk core by a single edge (its leg)."""

    nodes: tuple[int, ...]  # in path order
    head: int  # limb end of the leg
    foot: int  # core end of the leg
    arms: tuple[tuple[int, ...], ...]  # 0, 1 or 2 paths leaving the head
    kind: str  # "inner" | "exit"

    @property
    def leg(self) -> tuple[int, int]:
        return norm_edge(self.foot, self.head)

    @property
    def handedness(self) -> int:
        return len(self.arms)


def classify_simple_graphs(t: Graph, core: TrunkCore | Sequence[int]) -> list[Limb]:
    """Split the tree into limbs relative to a core path.

    Inner limbs sit at interior path nodes, exit limbs at path ends.  Every
    limb must be a path; anything else means the tree does not fit a
    2-wide ladder at all.
    """
    path = tuple(core.path if isinstance(core, TrunkCore) else core)
    if not path:
        raise EmptyCoreError("core path is empty")
    _require_tree(t)
    path_set = set(path)
    rest = t.subgraph(t.nodes - path_set)
    limbs: list[Limb] = []
    interior = set(path[1:-1])
    for comp in rest.components():
        legs = [
            (p, c)
            for c in sorted(comp)
            for p in sorted(t.neighbors(c) & path_set)
        ]
        if len(legs) != 1:
            raise InvariantViolationError(f"limb with {len(legs)} legs: {sorted(comp)}")
        foot, head = legs[0]
        limbs.append(_build_limb(rest.subgraph(comp), head, foot, foot in interior))
    limbs.sort(key=lambda l: (path.index(l.foot), l.head))
    return limbs


def _build_limb(comp: Graph, head: int, foot: int, inner: bool) -> Limb:
    if any(comp.degree(v) > 2 for v in comp.adj) or not comp.is_acyclic():
        raise NotALineGraphError(f"limb at {foot} is not a path")
    arms: list[tuple[int, ...]] = []
    for nb in sorted(comp.neighbors(head)):
        arm = [nb]
        prev = head
        while True:
            nxt = [x for x in comp.neighbors(arm[-1]) if x != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(tuple(arm))
    arms.sort(key=lambda a: a[0])
    if len(arms) == 2:
        nodes = tuple(reversed(arms[0])) + (head,) + arms[1]
    elif len(arms) == 1:
        nodes = (head,) + arms[0]
    else:
        nodes = (head,)
    return Limb(nodes=nodes, head=head, foot=foot, arms=tuple(arms), kind="inner" if inner else "exit")


def is_monotone_embedding(path: Sequence[int], placement: Placement) -> bool:
    """True iff no two non-adjacent path nodes share a ladder level."""
    by_level: dict[int, list[int]] = {}
    for i, v in enumerate(path):
        by_level.setdefault(placement[v].level, []).append(i)
    for idxs in by_level.values():
        if len(idxs) > 2:
            return False
        if len(idxs) == 2 and abs(idxs[0] - idxs[1]) != 1:
            return False
    return True


def trunk_of_embedding(t: Graph, placement: Placement) -> list[int]:
    """The tree path joining the lowest- and highest-level nodes of a layout."""
    _require_tree(t)
    lo = min(t.node_list(), key=lambda v: (placement[v].level, v))
    hi = min(t.node_list(), key=lambda v: (-placement[v].level, v))
    return t.tree_path(lo, hi)
