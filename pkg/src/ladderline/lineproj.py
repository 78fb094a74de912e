"""Projection of ladder placements onto the line and adjacent-swap costs.

Reconfiguration cost is measured in adjacent swaps.  Turning one line order
into another needs exactly as many swaps as the two orders have inversions,
so `inversion_cost` is the cost model and `swap_schedule` emits a witness
schedule of that exact length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, Placement
from .errors import NodeSetMismatchError, UnplacedNodeError


def project(placement: Placement) -> list[int]:
    """Order nodes line-wise: by (level, side, node); empty levels vanish."""
    return sorted(placement, key=lambda v: (placement[v].level, placement[v].side, v))


def inversion_cost(old: list[int], new: list[int]) -> int:
    """Number of pairs whose relative order differs between the two lists."""
    rank = _rank_map(old, new)
    seq = [rank[v] for v in old]
    return _count_inversions(seq)


def inverted_pairs(old: list[int], new: list[int]) -> list[tuple[int, int]]:
    """All node pairs whose relative order flips; quadratic, for accounting."""
    rank = _rank_map(old, new)
    out = []
    for i, u in enumerate(old):
        for v in old[i + 1 :]:
            if rank[u] > rank[v]:
                out.append((u, v))
    return out


@dataclass(frozen=True)
class SwapSchedule:
    """Adjacent swaps (by position) turning one order into another."""

    swaps: tuple[tuple[int, int], ...]

    @property
    def cost(self) -> int:
        return len(self.swaps)

    def apply(self, order: list[int]) -> list[int]:
        out = list(order)
        for i, j in self.swaps:
            out[i], out[j] = out[j], out[i]
        return out


def swap_schedule(old: list[int], new: list[int]) -> SwapSchedule:
    """Bubble schedule with exactly `inversion_cost` swaps."""
    rank = _rank_map(old, new)
    seq = [rank[v] for v in old]
    swaps: list[tuple[int, int]] = []
    # insertion sort over ranks; each adjacent swap removes one inversion
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            swaps.append((j - 1, j))
            j -= 1
    return SwapSchedule(tuple(swaps))


def serve_cost(order: list[int], u: int, v: int) -> int:
    """Line distance between two placed nodes."""
    if u == v:
        raise UnplacedNodeError("serve cost needs two distinct nodes")
    try:
        return abs(order.index(u) - order.index(v))
    except ValueError as exc:
        raise UnplacedNodeError(f"node missing from line order: {exc}") from exc


def stretch_of(order: list[int], g: Graph) -> int:
    pos = {v: i for i, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


def _rank_map(old: list[int], new: list[int]) -> dict[int, int]:
    if len(old) != len(new) or set(old) != set(new):
        raise NodeSetMismatchError("orders must range over the same node set")
    return {v: i for i, v in enumerate(new)}


def _count_inversions(seq: list[int]) -> int:
    """Merge-sort inversion count, O(n log n)."""
    if len(seq) < 2:
        return 0
    buf = list(seq)
    tmp = [0] * len(seq)

    def rec(lo: int, hi: int) -> int:
        if hi - lo < 2:
            return 0
        mid = (lo + hi) // 2
        count = rec(lo, mid) + rec(mid, hi)
        i, j, k = lo, mid, lo
        while i < mid and j < hi:
            if buf[i] <= buf[j]:
                tmp[k] = buf[i]
                i += 1
            else:
                tmp[k] = buf[j]
                count += mid - i
                j += 1
            k += 1
        tmp[k:hi] = buf[i:mid] if i < mid else buf[j:hi]
        buf[lo:hi] = tmp[lo:hi]
        return count

    return rec(0, len(seq))
