"""Permutations in one-line notation, with placement and displacement moves.

A permutation of {1, ..., n} is a tuple of the values 1..n, where the entry
at index i (0-based) is the value sitting at position i+1.  Positions and
values are 1-based throughout, matching the usual description of the
sorting process: think of n numbered balls in a trough.

``place`` moves a value that is out of place into its home position; the
balls it passes over shift by one to make room.  ``displace`` is the exact
inverse: it evicts a value that currently sits at home.  Both are pure
functions on tuples, so everything here is safe to share across threads.
"""
from __future__ import annotations

import itertools
from bisect import bisect_left
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidMoveError, ParseError

Perm = tuple[int, ...]


class DisplacementMove(NamedTuple):
    """Evict ``value`` (currently home) and reinsert it at ``target``."""

    value: int
    target: int


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def is_permutation(values: Sequence[int]) -> bool:
    """True if ``values`` is a permutation of 1..len(values).

    >>> is_permutation((2, 1, 3)), is_permutation((1, 1, 2))
    (True, False)
    """
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
            return False
        seen[v] = True
    return True


def as_perm(values: Sequence[int]) -> Perm:
    """Validate and freeze ``values`` into a permutation tuple."""
    p = tuple(values)
    if not is_permutation(p):
        raise ParseError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def identity(n: int) -> Perm:
    """The sorted arrangement 1, 2, ..., n."""
    _check_n(n)
    return tuple(range(1, n + 1))


def reverse(n: int) -> Perm:
    """The reversed arrangement n, n-1, ..., 1.

    >>> reverse(3)
    (3, 2, 1)
    """
    _check_n(n)
    return tuple(range(n, 0, -1))


def rotation(n: int) -> Perm:
    """The one-step cyclic shift 2, 3, ..., n, 1.

    Homing it with the leftmost-not-home rule walks the tower-of-Hanoi
    pattern and takes the maximum possible 2^(n-1) - 1 steps.

    >>> rotation(4)
    (2, 3, 4, 1)
    """
    _check_n(n)
    return tuple(range(2, n + 1)) + (1,)


def swap_ends(n: int) -> Perm:
    """The identity with its two end values exchanged: n, 2, 3, ..., n-1, 1.

    This is the single gateway state of every worst-case eviction run, so
    it anchors the firing machinery in :mod:`homing.firings`.

    >>> swap_ends(5)
    (5, 2, 3, 4, 1)
    """
    if n < 2:
        raise ValueError(f"swap_ends needs n >= 2, got {n}")
    return (n,) + tuple(range(2, n)) + (1,)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def all_perms(n: int) -> Iterator[Perm]:
    """All n! permutations of 1..n in lexicographic order."""
    _check_n(n)
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# positions, values and elementary queries
# ---------------------------------------------------------------------------

def position_of(p: Perm, value: int) -> int:
    """1-based position of ``value`` in ``p``."""
    return p.index(value) + 1


def value_at(p: Perm, position: int) -> int:
    """Value sitting at the 1-based ``position``."""
    return p[position - 1]


def is_home(p: Perm, value: int) -> bool:
    """True if ``value`` sits at its own position."""
    return p[value - 1] == value


def placeable_values(p: Perm) -> list[int]:
    """Values that are out of place, listed in positional order."""
    return [v for pos, v in enumerate(p, 1) if v != pos]


def home_values(p: Perm) -> list[int]:
    """Values currently sitting at home, in increasing order."""
    return [v for pos, v in enumerate(p, 1) if v == pos]


# ---------------------------------------------------------------------------
# the two moves
# ---------------------------------------------------------------------------

def place(p: Perm, value: int) -> Perm:
    """Move ``value`` to its home position, shifting what it passes over.

    >>> place((1, 4, 2, 3), 4)
    (1, 2, 3, 4)
    >>> place((4, 1, 3, 5, 2), 1)
    (1, 4, 3, 5, 2)
    """
    pos = p.index(value)
    home = value - 1
    if pos == home:
        raise InvalidMoveError(f"cannot place {value}: already home")
    items = list(p)
    del items[pos]
    items.insert(home, value)
    return tuple(items)


def displace(p: Perm, value: int, target: int) -> Perm:
    """Evict the home value ``value`` to the 1-based ``target`` position.

    Inverse of :func:`place`: placing ``value`` afterwards restores ``p``.

    >>> displace((1, 2, 3), 3, 1)
    (3, 1, 2)
    >>> displace((1, 2, 3), 1, 3)
    (2, 3, 1)
    """
    home = value - 1
    if not 0 <= home < len(p) or p[home] != value:
        raise InvalidMoveError(f"cannot displace {value}: not home")
    if not 1 <= target <= len(p):
        raise InvalidMoveError(f"target position {target} out of range 1..{len(p)}")
    if target == value:
        raise InvalidMoveError(f"cannot displace {value} onto its own position")
    items = list(p)
    del items[home]
    items.insert(target - 1, value)
    return tuple(items)


def placement_successors(p: Perm) -> set[Perm]:
    """All states reachable by a single placement (deduplicated).

    >>> placement_successors((2, 1))
    {(1, 2)}
    """
    return {place(p, v) for v in placeable_values(p)}


def displacement_successors(p: Perm) -> list[tuple[DisplacementMove, Perm]]:
    """Every legal eviction paired with its resulting state.

    The identity on n values admits exactly n(n-1) evictions.
    """
    n = len(p)
    out = []
    for v in home_values(p):
        for target in range(1, n + 1):
            if target != v:
                out.append((DisplacementMove(v, target), displace(p, v, target)))
    return out


# ---------------------------------------------------------------------------
# derived measures
# ---------------------------------------------------------------------------

def lis_length(p: Perm) -> int:
    """Length of the longest increasing subsequence (patience method).

    >>> lis_length((4, 1, 3, 5, 2))
    3
    """
    tails: list[int] = []
    for v in p:
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def stage(p: Perm) -> int:
    """How many extremal values are already settled at the two ends.

    Counts the longest home prefix 1..a plus the longest home suffix; the
    identity counts as stage n by convention.

    >>> stage((1, 2, 3, 7, 4, 6, 5, 8, 9))
    5
    """
    n = len(p)
    a = 0
    while a < n and p[a] == a + 1:
        a += 1
    if a == n:
        return n
    b = 0
    while b < n and p[n - 1 - b] == n - b:
        b += 1
    return a + b


def reverse_complement(p: Perm) -> Perm:
    """Conjugate by end-for-end reflection: value v at position q becomes
    n+1-v at position n+1-q.  An involution that swaps left and right in
    every statement about homing."""
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


# ---------------------------------------------------------------------------
# dense ranking (factorial number system)
# ---------------------------------------------------------------------------

def rank(p: Perm) -> int:
    """Lexicographic index of ``p`` among all permutations of its length.

    >>> rank((1, 2, 3)), rank((3, 2, 1))
    (0, 5)
    """
    r = 0
    n = len(p)
    for i in range(n - 1):
        pi = p[i]
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < pi:
                smaller += 1
        r = r * (n - i) + smaller
    return r


def unrank(n: int, r: int) -> Perm:
    """Inverse of :func:`rank`.

    >>> unrank(3, 5)
    (3, 2, 1)
    """
    digits = []
    for radix in range(1, n + 1):
        digits.append(r % radix)
        r //= radix
    digits.reverse()
    pool = list(range(1, n + 1))
    return tuple(pool.pop(d) for d in digits)


# ---------------------------------------------------------------------------
# text form: comma-separated decimal values, e.g. "4,1,3,5,2"
# ---------------------------------------------------------------------------

def parse_perm(text: str) -> Perm:
    """Parse the comma-separated text form, rejecting non-bijections.

    >>> parse_perm("4,1,3,5,2")
    (4, 1, 3, 5, 2)
    """
    tokens = [t.strip() for t in text.split(",")]
    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"invalid permutation entry {token!r}") from None
    n = len(values)
    seen = set()
    for v in values:
        if not 1 <= v <= n:
            raise ParseError(f"permutation entry {v} out of range 1..{n}")
        if v in seen:
            raise ParseError(f"permutation entry {v} repeated")
        seen.add(v)
    return tuple(values)


def format_perm(p: Perm) -> str:
    """Inverse of :func:`parse_perm`."""
    return ",".join(str(v) for v in p)
