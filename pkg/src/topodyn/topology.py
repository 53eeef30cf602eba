"""Finite topological spaces over point sets of at most 64 points.

Subsets of the point set are plain ``int`` bit masks: bit ``x`` is set iff
point ``x`` belongs to the subset.  Every finite topology is Alexandrov, so
each point has a smallest open neighbourhood and closure/interior reduce to
unions over those per-point tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 64

SubsetMask = int


class TopologyError(ValueError):
    """Raised when a family of subsets is not a topology."""


class ZeroPoints(TopologyError):
    def __init__(self) -> None:
        super().__init__("a topological space needs at least one point")


class MaskOutOfRange(TopologyError):
    def __init__(self, mask: int, n: int) -> None:
        self.mask = mask
        self.n = n
        super().__init__(f"mask {mask:#x} has bits outside {n} points")


class NotUnionClosed(TopologyError):
    def __init__(self, u: int, v: int) -> None:
        self.pair = (u, v)
        super().__init__(f"union of {u:#x} and {v:#x} is not open")


class NotIntersectionClosed(TopologyError):
    def __init__(self, u: int, v: int) -> None:
        self.pair = (u, v)
        super().__init__(f"intersection of {u:#x} and {v:#x} is not open")


# --- mask helpers -------------------------------------------------------------

def full_mask(n: int) -> int:
    return (1 << n) - 1


def bit(x: int) -> int:
    return 1 << x


def members(mask: int) -> Iterator[int]:
    """Yield the point indices in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for x in points:
        m |= 1 << x
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


# --- the space itself ---------------------------------------------------------

@dataclass(frozen=True)
class FiniteTopology:
    """A validated topology on points ``0..n-1``.

    ``opens`` is sorted by numeric mask value and always holds ``0`` and the
    full mask.  Build instances with :func:`validate_topology`; the
    constructor trusts its input.
    """

    n: int
    opens: tuple[int, ...]
    point_names: tuple[str, ...] | None = None
    min_nbhd: tuple[int, ...] = field(init=False, repr=False, compare=False)
    closure_of_point: tuple[int, ...] = field(init=False, repr=False, compare=False)
    closed_sets: tuple[int, ...] = field(init=False, repr=False, compare=False)
    open_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        full = full_mask(self.n)
        nbhd = [full] * self.n
        for u in self.opens:
            for x in members(u):
                nbhd[x] &= u
        cl = [0] * self.n
        for y in range(self.n):
            for x in members(nbhd[y]):
                cl[x] |= 1 << y
        object.__setattr__(self, "min_nbhd", tuple(nbhd))
        object.__setattr__(self, "closure_of_point", tuple(cl))
        object.__setattr__(self, "closed_sets", tuple(sorted(full ^ u for u in self.opens)))
        object.__setattr__(self, "open_set", frozenset(self.opens))

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def nonempty_opens(self) -> tuple[int, ...]:
        return self.opens[1:]

    def is_open(self, s: int) -> bool:
        return self.interior(s) == s

    def is_closed(self, s: int) -> bool:
        return self.closure(s) == s

    def is_trivial(self) -> bool:
        return len(self.opens) <= 2

    def closure(self, s: int) -> int:
        out = 0
        for x in members(s):
            out |= self.closure_of_point[x]
        return out

    def interior(self, s: int) -> int:
        out = 0
        for x in members(s):
            if self.min_nbhd[x] & ~s == 0:
                out |= 1 << x
        return out

    def name(self, x: int) -> str:
        return self.point_names[x] if self.point_names else str(x)


def validate_topology(n: int, family: Iterable[int],
                      point_names: Sequence[str] | None = None) -> FiniteTopology:
    """Check that ``family`` plus the empty set and ``X`` is a topology.

    Violations are reported for the first offending pair in ascending mask
    order, union checked before intersection.
    """
    if n < 1:
        raise ZeroPoints()
    if n > MAX_POINTS:
        raise TopologyError(f"at most {MAX_POINTS} points are supported, got {n}")
    full = full_mask(n)
    opens = {0, full}
    for u in family:
        if u < 0 or u & ~full:
            raise MaskOutOfRange(u, n)
        opens.add(u)
    ordered = sorted(opens)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u | v not in opens:
                raise NotUnionClosed(u, v)
            if u & v not in opens:
                raise NotIntersectionClosed(u, v)
    names = tuple(point_names) if point_names is not None else None
    if names is not None and len(names) != n:
        raise TopologyError(f"{len(names)} point names given for {n} points")
    return FiniteTopology(n, tuple(ordered), names)


def from_min_nbhds(nbhd: Sequence[int]) -> FiniteTopology:
    """Alexandrov topology whose opens are the ``nbhd``-saturated subsets.

    ``nbhd`` must be reflexive and transitive (a specialization preorder);
    this is not rechecked.
    """
    n = len(nbhd)
    # every open is a union of minimal neighbourhoods
    opens = {0}
    for x in range(n):
        opens |= {u | nbhd[x] for u in opens}
    return FiniteTopology(n, tuple(sorted(opens)))


def discrete(n: int) -> FiniteTopology:
    return from_min_nbhds([1 << x for x in range(n)])


def indiscrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, (0, full_mask(n)) if n else (0,))


def closure(t: FiniteTopology, s: int) -> int:
    return t.closure(s)


def interior(t: FiniteTopology, s: int) -> int:
    return t.interior(s)


def is_dense(t: FiniteTopology, s: int) -> bool:
    return t.closure(s) == t.full


def minimal_neighborhood(t: FiniteTopology, x: int) -> int:
    return t.min_nbhd[x]


def isolated_points(t: FiniteTopology) -> int:
    return mask_of(x for x in range(t.n) if t.min_nbhd[x] == 1 << x)


def is_discrete(t: FiniteTopology) -> bool:
    return isolated_points(t) == t.full


def is_hausdorff(t: FiniteTopology) -> bool:
    # distinct x, y separable by disjoint opens iff their minimal
    # neighbourhoods are disjoint
    nb = t.min_nbhd
    return all(nb[x] & nb[y] == 0 for x in range(t.n) for y in range(x + 1, t.n))


def has_nondense_open(t: FiniteTopology) -> bool:
    """True iff some nonempty open set has closure different from ``X``."""
    return any(t.closure(u) != t.full for u in t.nonempty_opens())
