"""Size caps for exhaustive enumerations.

The default caps keep every run at desk scale.  VERTEXLAB_CAP overrides the
grid-enumeration cap; raising it is unsafe in the sense that runtimes grow
super-exponentially, not that results degrade.
"""

import os

from .errors import SizeTooLarge

DEFAULT_GRID_CAP = 8
DOMINO_ORACLE_CAP = 5
LR_ORACLE_CAP = 10


def grid_cap() -> int:
    value = os.environ.get("VERTEXLAB_CAP")
    if value is None:
        return DEFAULT_GRID_CAP
    return int(value)


def check_grid_size(n: int):
    cap = grid_cap()
    if not 1 <= n <= cap:
        raise SizeTooLarge(f"grid size {n} outside 1..{cap}")
