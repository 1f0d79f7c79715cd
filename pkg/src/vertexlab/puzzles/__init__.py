"""Littlewood-Richardson coefficients: puzzles and the subtraction oracle."""

from .boundary import BoundaryString, decode, encode_partition, occupancy
from .oracle import LRResult, lr_oracle
from .product import auto_box, product_rule
from .puzzle import (
    DOWN_TYPES,
    UP_TYPES,
    Puzzle,
    count_puzzles,
    enumerate_puzzles,
)

__all__ = [
    "BoundaryString",
    "decode",
    "encode_partition",
    "occupancy",
    "LRResult",
    "lr_oracle",
    "auto_box",
    "product_rule",
    "DOWN_TYPES",
    "UP_TYPES",
    "Puzzle",
    "count_puzzles",
    "enumerate_puzzles",
]
