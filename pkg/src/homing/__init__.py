"""Toolkit for the placement-and-shift ("homing") sorting process.

Everything revolves around four layers:

- :mod:`homing.perms`      -- permutations, placements, evictions
- :mod:`homing.codes`      -- the {+,-,0} code of a state and its weight
- :mod:`homing.strategies` -- homing strategies and shortest sorts
- :mod:`homing.heights`    -- exhaustive longest-sort tables and worst cases
- :mod:`homing.firings`    -- constructive enumeration of the worst cases
- :mod:`homing.counting`   -- counting recurrences and growth tables
- :mod:`homing.verify`     -- executable invariant suites
- :mod:`homing.cli`        -- the ``homing`` command-line tool
"""

from .perms import (
    DisplacementMove,
    Perm,
    all_perms,
    as_perm,
    displace,
    displacement_successors,
    format_perm,
    identity,
    is_home,
    is_permutation,
    lis_length,
    parse_perm,
    place,
    placeable_values,
    placement_successors,
    position_of,
    rank,
    reverse,
    reverse_complement,
    rotation,
    stage,
    swap_ends,
    unrank,
    value_at,
)
from .codes import StripStep, code_of, parse_code, strip_trace, weight
from .errors import (
    CapacityError,
    CodeShapeError,
    CycleError,
    HomingError,
    InvalidMoveError,
    ParseError,
    WordError,
)

__all__ = [
    "CapacityError",
    "CodeShapeError",
    "CycleError",
    "DisplacementMove",
    "HomingError",
    "InvalidMoveError",
    "ParseError",
    "Perm",
    "StripStep",
    "WordError",
    "all_perms",
    "as_perm",
    "code_of",
    "displace",
    "displacement_successors",
    "format_perm",
    "identity",
    "is_home",
    "is_permutation",
    "lis_length",
    "parse_code",
    "parse_perm",
    "place",
    "placeable_values",
    "placement_successors",
    "position_of",
    "rank",
    "reverse",
    "reverse_complement",
    "rotation",
    "stage",
    "strip_trace",
    "swap_ends",
    "unrank",
    "value_at",
    "weight",
]
