"""Small named quivers used throughout the tests and demos."""

from __future__ import annotations

from .core import Quiver
from .horn import star_quiver

__all__ = ["single_arrow_quiver", "kronecker_quiver", "square_quiver", "hexagon_quiver", "star_quiver"]


def single_arrow_quiver() -> Quiver:
    """One arrow a -> b."""
    return Quiver(["a", "b"], [("a", "b")])


def kronecker_quiver(arrows: int = 2) -> Quiver:
    """Two vertices joined by the given number of parallel arrows."""
    return Quiver(["x1", "x2"], [("x1", "x2")] * arrows)


def square_quiver() -> Quiver:
    """Commuting-square shape: 1 -> 2 -> 4 and 1 -> 3 -> 4."""
    return Quiver(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])


def hexagon_quiver() -> Quiver:
    """Six-cycle with alternating orientation: odd vertices are sources,
    even vertices sinks.  Its symmetry group has order 6 (rotation by two
    steps and the reflection fixing vertices 1 and 4).
    """
    return Quiver(
        [str(i) for i in range(1, 7)],
        [("1", "2"), ("3", "2"), ("3", "4"), ("5", "4"), ("5", "6"), ("1", "6")],
    )
