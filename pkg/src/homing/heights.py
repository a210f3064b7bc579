"""Exhaustive analysis of slow homing: heights and the worst-case set.

The height of a permutation is the length of the longest placement
sequence from it to the identity -- the longest path to the sink of the
placement digraph, which is acyclic.  The maximum over all of S_n is
2^(n-1) - 1, and the states achieving it are the pessimal starting points.

Heights for all of S_n are computed by a memoized depth-first search over
states packed densely by factorial rank, with in-progress marking so any
cycle (there are none) would be detected rather than looping.  Tables are
immutable int32 arrays, freely shareable between threads, and can be
written to disk in a small binary format (8-byte header ``HOMH`` + version
+ n, then little-endian int32 heights in rank order).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable

import numpy as np

from .errors import CapacityError, CycleError, ParseError
from .perms import Perm, identity, rank, unrank

DEFAULT_CAP = 10

_MAGIC = b"HOMH"
_VERSION = 1
_IN_PROGRESS = -2
_UNKNOWN = -1


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapacityError(
            f"n={n} exceeds the exhaustive cap {cap} ({factorial(n)} states); "
            f"raise the cap explicitly to proceed"
        )


@dataclass(frozen=True)
class HeightTable:
    """Heights of every permutation of 1..n, indexed by factorial rank."""

    n: int
    heights: np.ndarray  # int32, length n!

    def height_of(self, p: Perm) -> int:
        return int(self.heights[rank(p)])

    def max(self) -> int:
        return int(self.heights.max())

    def histogram(self) -> list[int]:
        """Count of permutations at each height 0..max."""
        return np.bincount(self.heights).tolist()

    def members_at(self, h: int) -> list[Perm]:
        """All permutations of the given height, in lexicographic order."""
        return [unrank(self.n, int(r)) for r in np.nonzero(self.heights == h)[0]]


def build_height_table(n: int, cap: int = DEFAULT_CAP) -> HeightTable:
    """Heights for all of S_n by memoized DFS over the placement digraph."""
    _check_cap(n, cap)
    size = factorial(n)
    heights = [_UNKNOWN] * size
    heights[0] = 0  # the identity has rank 0

    # Hot loop: placements and ranking are inlined.  Each frame carries its
    # state tuple so children never need unranking.
    for start in range(size):
        if heights[start] >= 0:
            continue
        stack = [[start, unrank(n, start), None, 0]]
        while stack:
            frame = stack[-1]
            r, p, succs, idx = frame
            if succs is None:
                heights[r] = _IN_PROGRESS
                dedup = {}
                for pos in range(n):
                    v = p[pos]
                    home = v - 1
                    if pos == home:
                        continue
                    items = list(p)
                    del items[pos]
                    items.insert(home, v)
                    sr = 0
                    for i in range(n - 1):
                        qi = items[i]
                        smaller = 0
                        for j in range(i + 1, n):
                            if items[j] < qi:
                                smaller += 1
                        sr = sr * (n - i) + smaller
                    dedup[sr] = tuple(items)
                succs = frame[2] = list(dedup.items())
            pushed = False
            while idx < len(succs):
                sr = succs[idx][0]
                h = heights[sr]
                if h == _UNKNOWN:
                    stack.append([sr, succs[idx][1], None, 0])
                    pushed = True
                    break
                if h == _IN_PROGRESS:
                    raise CycleError(
                        f"placement digraph cycle through rank {sr} at n={n}"
                    )
                idx += 1
            frame[3] = idx
            if pushed:
                continue
            best = 0
            for sr, _ in succs:
                h = heights[sr]
                if h > best:
                    best = h
            heights[r] = best + 1 if succs else 0
            stack.pop()
    return HeightTable(n, np.asarray(heights, dtype=np.int32))


def height(p: Perm, cap: int = DEFAULT_CAP) -> int:
    """Height of a single permutation, exploring only its reachable states."""
    n = len(p)
    _check_cap(n, cap)
    target = identity(n)
    memo: dict[Perm, object] = {target: 0}
    if p in memo:
        return 0
    in_progress = object()
    stack: list[list] = [[p, None, 0]]
    while stack:
        frame = stack[-1]
        state, succs, idx = frame
        if succs is None:
            memo[state] = in_progress
            succs = frame[1] = sorted(
                {
                    _placed(state, pos)
                    for pos in range(n)
                    if state[pos] != pos + 1
                }
            )
        pushed = False
        while idx < len(succs):
            q = succs[idx]
            h = memo.get(q, _UNKNOWN)
            if h is in_progress:
                raise CycleError(f"placement digraph cycle through {q}")
            if h == _UNKNOWN:
                stack.append([q, None, 0])
                pushed = True
                break
            idx += 1
        frame[2] = idx
        if pushed:
            continue
        memo[state] = (1 + max(memo[q] for q in succs)) if succs else 0
        stack.pop()
    return memo[p]  # type: ignore[return-value]


def _placed(p: Perm, pos: int) -> Perm:
    v = p[pos]
    items = list(p)
    del items[pos]
    items.insert(v - 1, v)
    return tuple(items)


def max_height(n: int, cap: int = DEFAULT_CAP) -> int:
    """The largest height over all of S_n; equals 2^(n-1) - 1."""
    return build_height_table(n, cap).max()


def worst_case_permutations(n: int, cap: int = DEFAULT_CAP) -> list[Perm]:
    """All permutations at the maximum height 2^(n-1) - 1, in lex order."""
    table = build_height_table(n, cap)
    return table.members_at((1 << (n - 1)) - 1)


def stage1_longest(n: int, cap: int = DEFAULT_CAP) -> int:
    """Longest eviction run from the identity that leaves value 1 untouched.

    Untouched means 1 is never evicted and never shifted: moves neither
    displace value 1 nor insert at position 1.  With 1 pinned, the rest is
    an eviction process on n-1 values, so the answer is 2^(n-2) - 1; any
    longer run must have moved both end values.
    """
    _check_cap(n, cap - 1)
    memo: dict[Perm, int] = {}

    def successors(p: Perm) -> list[Perm]:
        out = []
        for v in range(2, n + 1):
            if p[v - 1] != v:
                continue
            for target in range(2, n + 1):
                if target == v:
                    continue
                items = list(p)
                del items[v - 1]
                items.insert(target - 1, v)
                out.append(tuple(items))
        return out

    def longest(p: Perm) -> int:
        cached = memo.get(p)
        if cached is not None:
            return cached
        best = 0
        for q in successors(p):
            d = 1 + longest(q)
            if d > best:
                best = d
        memo[p] = best
        return best

    return longest(identity(n))


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def save_height_table(table: HeightTable, path) -> None:
    """Write the binary table format: HOMH, version, n, 2 reserved bytes,
    then n! little-endian int32 heights in rank order."""
    header = _MAGIC + bytes((_VERSION, table.n, 0, 0))
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(table.heights.astype("<i4").tobytes())


def load_height_table(path) -> HeightTable:
    """Read a table written by :func:`save_height_table`."""
    with open(path, "rb") as fh:
        header = fh.read(8)
        if len(header) != 8 or header[:4] != _MAGIC:
            raise ParseError(f"{path}: not a height table (bad magic)")
        version, n = header[4], header[5]
        if version != _VERSION:
            raise ParseError(f"{path}: unsupported version {version}")
        data = np.frombuffer(fh.read(), dtype="<i4")
    if len(data) != factorial(n):
        raise ParseError(f"{path}: expected {factorial(n)} heights, found {len(data)}")
    return HeightTable(n, data.astype(np.int32))


def members_json(members: Iterable[Perm]) -> str:
    """JSON text for a set of permutations: an array of one-line arrays."""
    return json.dumps([list(p) for p in members])
