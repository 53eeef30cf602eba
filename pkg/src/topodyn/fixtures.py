"""Named three-point systems with known classifications."""
from __future__ import annotations

from dataclasses import dataclass

from .dynamics import DynSystem
from .io import parse_document

POINTS = ["a", "b", "c"]
OPEN_AB = [["a", "b"]]


def _system(opens, mapping) -> DynSystem:
    return parse_document({"points": POINTS, "opens": opens, "map": mapping})


def example_a1() -> DynSystem:
    """Constant map onto ``c`` over the single proper open set ``{a, b}``."""
    return _system(OPEN_AB, {"a": "c", "b": "c", "c": "c"})


def example_a2() -> DynSystem:
    return _system(OPEN_AB, {"a": "b", "b": "b", "c": "a"})


def example_a3() -> DynSystem:
    """3-cycle a -> b -> c -> a."""
    return _system(OPEN_AB, {"a": "b", "b": "c", "c": "a"})


def example_a4() -> DynSystem:
    """Fixes ``a`` and swaps ``b`` and ``c``."""
    return _system(OPEN_AB, {"a": "a", "b": "c", "c": "b"})


def hypertransitive_not_mixing() -> DynSystem:
    return _system([["a"], ["b", "c"]], {"a": "b", "b": "a", "c": "a"})


def supermixing_not_hypertransitive() -> DynSystem:
    return _system([["a"], ["a", "b"]], {"a": "a", "b": "c", "c": "c"})


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: callable
    expected: dict


FIXTURES = (
    Fixture("A1", "constant map: strongly topologically transitive, not mixing",
            example_a1, {"strongly_top_transitive": True, "mixing": False}),
    Fixture("A2", "mixing, not strongly topologically transitive",
            example_a2, {"mixing": True, "strongly_top_transitive": False}),
    Fixture("A3", "3-cycle: mixing, not supermixing",
            example_a3, {"mixing": True, "supermixing": False}),
    Fixture("A4", "swap b,c: supermixing, not hypermixing",
            example_a4, {"supermixing": True, "hypermixing": False}),
    Fixture("C1", "continuous hypertransitive, not mixing",
            hypertransitive_not_mixing,
            {"continuous": True, "hypertransitive": True, "mixing": False}),
    Fixture("C2", "continuous supermixing, not hypertransitive",
            supermixing_not_hypertransitive,
            {"continuous": True, "supermixing": True, "hypertransitive": False}),
)
