"""Self-maps of finite point sets and the set-iteration engine.

Every infinite union or intersection over ``f^n(U)`` is finitely computable
here: the image sequence of a subset lives in a set of size ``2^n``, so it is
eventually periodic, and :func:`trajectory` records its preperiod and period.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .topology import FiniteTopology, full_mask, members, popcount

# image tables are precomputed for every subset up to this many points
TABLE_LIMIT = 12


@dataclass(frozen=True)
class SelfMap:
    """A total map ``x -> image[x]`` on points ``0..n-1``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if n == 0:
            raise ValueError("a self-map needs at least one point")
        for x, y in enumerate(self.image):
            if not 0 <= y < n:
                raise ValueError(f"image of point {x} is {y}, outside 0..{n - 1}")

    @classmethod
    def of(cls, image: Sequence[int]) -> "SelfMap":
        return cls(tuple(image))

    @classmethod
    def identity(cls, n: int) -> "SelfMap":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    @cached_property
    def _table(self) -> tuple[int, ...] | None:
        if self.n > TABLE_LIMIT:
            return None
        table = [0] * (1 << self.n)
        for s in range(1, 1 << self.n):
            low = s & -s
            table[s] = table[s ^ low] | (1 << self.image[low.bit_length() - 1])
        return tuple(table)

    def __getstate__(self):
        return {"image": self.image}

    def __setstate__(self, state) -> None:
        object.__setattr__(self, "image", state["image"])


def image_set(f: SelfMap, s: int) -> int:
    """Direct image ``f(S)``."""
    table = f._table
    if table is not None:
        return table[s]
    out = 0
    for x in members(s):
        out |= 1 << f.image[x]
    return out


def preimage_set(f: SelfMap, s: int) -> int:
    out = 0
    for x, y in enumerate(f.image):
        if s >> y & 1:
            out |= 1 << x
    return out


def compose(g: SelfMap, f: SelfMap) -> SelfMap:
    """``g o f``."""
    return SelfMap(tuple(g.image[y] for y in f.image))


def power_map(f: SelfMap, p: int) -> SelfMap:
    if p < 0:
        raise ValueError("power must be non-negative")
    out = SelfMap.identity(f.n)
    for _ in range(p):
        out = compose(f, out)
    return out


def is_surjective(f: SelfMap) -> bool:
    return len(set(f.image)) == f.n


def is_injective(f: SelfMap) -> bool:
    return collision(f) is None


def unhit_point(f: SelfMap) -> int | None:
    hit = set(f.image)
    return next((x for x in range(f.n) if x not in hit), None)


def collision(f: SelfMap) -> tuple[int, int] | None:
    first: dict[int, int] = {}
    for x, y in enumerate(f.image):
        if y in first:
            return first[y], x
        first[y] = x
    return None


def orbit(f: SelfMap, x: int) -> int:
    """Set of points ``{x, f(x), f^2(x), ...}``."""
    seen = 0
    while not seen >> x & 1:
        seen |= 1 << x
        x = f.image[x]
    return seen


@dataclass(frozen=True)
class SetTrajectory:
    """``f^0(U), f^1(U), ...`` as ``snapshots[:preperiod]`` followed by a
    cycle ``snapshots[preperiod:]`` of length ``period`` repeated forever."""

    source: int
    preperiod: int
    period: int
    snapshots: tuple[int, ...]

    @property
    def cycle(self) -> tuple[int, ...]:
        return self.snapshots[self.preperiod:]

    def at(self, k: int) -> int:
        """``f^k(U)`` for any ``k >= 0``."""
        if k < self.preperiod:
            return self.snapshots[k]
        return self.snapshots[self.preperiod + (k - self.preperiod) % self.period]


def trajectory(f: SelfMap, u: int) -> SetTrajectory:
    first_seen: dict[int, int] = {}
    snaps: list[int] = []
    s = u
    while s not in first_seen:
        first_seen[s] = len(snaps)
        snaps.append(s)
        s = image_set(f, s)
    p = first_seen[s]
    return SetTrajectory(u, p, len(snaps) - p, tuple(snaps))


def forward_union(f: SelfMap, u: int) -> int:
    """``U | f(U) | f^2(U) | ...``, the smallest f-invariant superset of U."""
    acc = u
    frontier = u
    while True:
        frontier = image_set(f, frontier)
        if frontier & ~acc == 0:
            return acc
        acc |= frontier


def union_bound(f: SelfMap, u: int, target: int) -> int | None:
    """Least ``s`` with ``U | ... | f^s(U) == target``, or None if never."""
    acc = u
    s = 0
    cur = u
    while acc != target:
        cur = image_set(f, cur)
        if cur & ~acc == 0:
            return None
        acc |= cur
        s += 1
    return s


def liminf_set(f: SelfMap, u: int) -> int:
    """Points lying in ``f^n(U)`` for all sufficiently large ``n``.

    The tail intersections ``A_i`` grow with ``i`` and are constant from the
    preperiod on, where they equal the intersection of the cycle block.
    """
    tr = trajectory(f, u)
    out = tr.cycle[0]
    for s in tr.cycle[1:]:
        out &= s
    return out


@dataclass(frozen=True)
class DynSystem:
    """A finite space together with a self-map of it."""

    topology: FiniteTopology
    map: SelfMap
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.topology.n != self.map.n:
            raise ValueError(f"topology has {self.topology.n} points, map has {self.map.n}")

    @property
    def n(self) -> int:
        return self.topology.n

    def image(self, s: int) -> int:
        return image_set(self.map, s)

    def trajectory(self, u: int) -> SetTrajectory:
        key = ("traj", u)
        tr = self._cache.get(key)
        if tr is None:
            tr = self._cache[key] = trajectory(self.map, u)
        return tr

    @property
    def continuous(self) -> bool:
        if "continuous" not in self._cache:
            self._cache["continuous"] = continuity_violation(self) is None
        return self._cache["continuous"]

    @property
    def open_map(self) -> bool:
        if "open_map" not in self._cache:
            self._cache["open_map"] = openness_violation(self) is None
        return self._cache["open_map"]

    def __getstate__(self):
        return {"topology": self.topology, "map": self.map}

    def __setstate__(self, state) -> None:
        object.__setattr__(self, "topology", state["topology"])
        object.__setattr__(self, "map", state["map"])
        object.__setattr__(self, "_cache", {})


def continuity_violation(sys: DynSystem) -> int | None:
    """First open set (ascending) whose preimage is not open."""
    t = sys.topology
    opens = t.open_set
    for v in t.opens:
        if preimage_set(sys.map, v) not in opens:
            return v
    return None


def openness_violation(sys: DynSystem) -> int | None:
    """First open set (ascending) whose image is not open."""
    t = sys.topology
    opens = t.open_set
    for u in t.opens:
        if image_set(sys.map, u) not in opens:
            return u
    return None


def is_continuous(sys: DynSystem) -> bool:
    return sys.continuous


def is_open_map(sys: DynSystem) -> bool:
    return sys.open_map


def cardinalities(tr: SetTrajectory) -> list[int]:
    return [popcount(s) for s in tr.snapshots]


def eventual_image(f: SelfMap) -> int:
    """``f^k(X)`` for large ``k``; the cycle of the image sequence of ``X``
    has period one since the images of ``X`` are nested."""
    return liminf_set(f, full_mask(f.n))
