"""Shorthand for writing small systems with lettered points."""
from topodyn.dynamics import DynSystem, SelfMap
from topodyn.topology import validate_topology

LETTERS = "abcdef"


def m(points: str) -> int:
    """Mask from point letters, e.g. ``m("ab") == 0b011``."""
    out = 0
    for ch in points:
        out |= 1 << LETTERS.index(ch)
    return out


def top(n: int, *opens: str):
    return validate_topology(n, [m(u) for u in opens])


def fmap(images: str) -> SelfMap:
    """``fmap("bca")`` sends a->b, b->c, c->a."""
    return SelfMap(tuple(LETTERS.index(ch) for ch in images))


def system(n: int, opens, images: str) -> DynSystem:
    return DynSystem(top(n, *opens), fmap(images))
