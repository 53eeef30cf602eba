"""Exhaustive enumeration of finite spaces and self-maps, and searches over them.

Labeled topologies on ``n`` points correspond one-to-one to preorders
(reflexive, transitive relations) via minimal neighbourhoods, so the
generator below builds preorders one point at a time.  The raw
family-of-subsets filter is kept as an independent oracle for small ``n``.
"""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable, Iterable, Iterator, Sequence

from .deciders import (
    PROPERTY_NAMES,
    PropertyProfile,
    classify,
    is_hypermixing,
)
from .dynamics import DynSystem, SelfMap, is_surjective
from .topology import (
    FiniteTopology,
    from_min_nbhds,
    full_mask,
    is_hausdorff,
    isolated_points,
    members,
)

MAX_ENUM_POINTS = 6


class CapExceeded(ValueError):
    def __init__(self, n: int) -> None:
        super().__init__(f"enumeration is capped at {MAX_ENUM_POINTS} points, got {n}")


class UnsatisfiableQuery(ValueError):
    pass


# --- preorders / topologies ---------------------------------------------------

@dataclass(frozen=True)
class MinNbhdFunction:
    """``nbhd[x]`` is the set of points every open set around ``x`` contains."""

    nbhd: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.nbhd)

    def is_valid(self) -> bool:
        nb = self.nbhd
        for x in range(self.n):
            if not nb[x] >> x & 1:
                return False
            for y in members(nb[x]):
                if nb[y] & ~nb[x]:
                    return False
        return True

    def topology(self) -> FiniteTopology:
        return from_min_nbhds(self.nbhd)


def _extend(nbhd: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All preorders on ``k + 1`` points restricting to ``nbhd`` on ``k``."""
    k = len(nbhd)
    # up-closed A: points above the new point
    ups = [a for a in range(1 << k) if all(nbhd[y] & ~a == 0 for y in members(a))]
    # down-closed B: points below the new point
    downs = []
    for b in range(1 << k):
        if all(b >> x & 1 for y in members(b) for x in range(k) if nbhd[x] >> y & 1):
            common = (1 << k) - 1
            for x in members(b):
                common &= nbhd[x]
            downs.append((b, common))
    new = 1 << k
    for a in ups:
        for b, common in downs:
            if a & ~common:
                continue
            ext = [nb | new if b >> x & 1 else nb for x, nb in enumerate(nbhd)]
            ext.append(a | new)
            yield tuple(ext)


@lru_cache(maxsize=None)
def preorders(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 1:
        raise ValueError("need at least one point")
    if n > MAX_ENUM_POINTS:
        raise CapExceeded(n)
    if n == 1:
        return ((1,),)
    return tuple(ext for nb in preorders(n - 1) for ext in _extend(nb))


@lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[FiniteTopology, ...]:
    return tuple(from_min_nbhds(nb) for nb in preorders(n))


def enumerate_topologies(n: int) -> Iterator[FiniteTopology]:
    """Every labeled topology on ``n`` points, exactly once, in a fixed order."""
    if n > MAX_ENUM_POINTS:
        raise CapExceeded(n)
    return iter(_topologies(n))


def family_filter_topologies(n: int) -> set[tuple[int, ...]]:
    """Brute-force oracle: filter every family of subsets for closure.

    Doubly exponential; usable up to ``n = 4``.
    """
    full = full_mask(n)
    middle = [s for s in range(1, full)]
    found = set()
    for choice in range(1 << len(middle)):
        fam = {0, full}
        fam.update(s for i, s in enumerate(middle) if choice >> i & 1)
        if all(u | v in fam and u & v in fam for u in fam for v in fam):
            found.add(tuple(sorted(fam)))
    return found


def all_maps(n: int) -> Iterator[SelfMap]:
    for image in itertools.product(range(n), repeat=n):
        yield SelfMap(image)


def enumerate_systems(n: int) -> Iterator[DynSystem]:
    """Every (topology, map) pair on ``n`` points; maps vary fastest."""
    tops = _topologies(n) if n <= MAX_ENUM_POINTS else None
    if tops is None:
        raise CapExceeded(n)
    maps = list(all_maps(n))
    for t in tops:
        for f in maps:
            yield DynSystem(t, f)


def random_system(n: int, rng: random.Random) -> DynSystem:
    t = rng.choice(_topologies(n))
    return DynSystem(t, SelfMap(tuple(rng.randrange(n) for _ in range(n))))


# --- relabeling and canonical forms -------------------------------------------

def permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for x in members(mask):
        out |= 1 << perm[x]
    return out


def relabel(sys: DynSystem, perm: Sequence[int]) -> DynSystem:
    """Copy of ``sys`` with point ``x`` renamed ``perm[x]``."""
    t = sys.topology
    opens = tuple(sorted(permute_mask(u, perm) for u in t.opens))
    image = [0] * t.n
    for x, y in enumerate(sys.map.image):
        image[perm[x]] = perm[y]
    return DynSystem(FiniteTopology(t.n, opens), SelfMap(tuple(image)))


def canonical_key(sys: DynSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least ``(opens, image)`` over all relabelings; equal for homeomorphic
    (conjugate) systems."""
    t = sys.topology
    best = None
    for perm in itertools.permutations(range(t.n)):
        opens = tuple(sorted(permute_mask(u, perm) for u in t.opens))
        if best is not None and opens > best[0]:
            continue
        image = [0] * t.n
        for x, y in enumerate(sys.map.image):
            image[perm[x]] = perm[y]
        cand = (opens, tuple(image))
        if best is None or cand < best:
            best = cand
    return best


def key_string(key) -> str:
    opens, image = key
    return "opens=" + ",".join(map(str, opens)) + "|map=" + ",".join(map(str, image))


# --- parallel helper ----------------------------------------------------------

def worker_count() -> int:
    """Worker processes for sweeps; ``TOPODYN_THREADS`` sets it, default 1."""
    try:
        k = int(os.environ.get("TOPODYN_THREADS", "1"))
    except ValueError:
        k = 1
    return max(1, min(k, os.cpu_count() or 1))


def ordered_map(fn: Callable, items: Sequence, workers: int | None = None) -> list:
    """``[fn(i) for i in items]``, fanned out over processes when allowed.
    Result order always follows ``items``."""
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# --- search -------------------------------------------------------------------

PROPERTY_ALIASES = {
    "topologically_transitive": "top_transitive",
    "strongly_topologically_transitive": "strongly_top_transitive",
    "strongly_transitive": "strongly_transitive_finite",
    "minimal": "hypertransitive",
}

FILTERS: dict[str, Callable[[DynSystem], bool]] = {
    "continuous": lambda s: s.continuous,
    "no_isolated_points": lambda s: isolated_points(s.topology) == 0,
    "hausdorff": lambda s: is_hausdorff(s.topology),
    "nontrivial_topology": lambda s: not s.topology.is_trivial(),
}


def property_name(name: str) -> str:
    key = name.strip().replace("-", "_").lower()
    key = PROPERTY_ALIASES.get(key, key)
    if key not in PROPERTY_NAMES:
        raise ValueError(f"unknown property {name!r}")
    return key


def filter_name(name: str) -> str:
    key = name.strip().replace("-", "_").lower()
    if key not in FILTERS:
        raise ValueError(f"unknown filter {name!r}")
    return key


@dataclass(frozen=True)
class SearchQuery:
    n: int
    require: frozenset[str] = frozenset()
    forbid: frozenset[str] = frozenset()
    filters: frozenset[str] = frozenset()
    limit: int | None = None
    dedup: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "require", frozenset(map(property_name, self.require)))
        object.__setattr__(self, "forbid", frozenset(map(property_name, self.forbid)))
        object.__setattr__(self, "filters", frozenset(map(filter_name, self.filters)))
        clash = self.require & self.forbid
        if clash:
            raise UnsatisfiableQuery(f"properties both required and forbidden: {sorted(clash)}")

    def admits(self, sys: DynSystem) -> bool:
        return all(FILTERS[f](sys) for f in sorted(self.filters))

    def matches(self, p: PropertyProfile) -> bool:
        return (all(getattr(p, r) for r in self.require)
                and not any(getattr(p, f) for f in self.forbid))


@dataclass
class AtlasRecord:
    system: DynSystem
    profile: PropertyProfile
    key: tuple | None = None
    class_size: int = 1

    def ensure_key(self):
        if self.key is None:
            self.key = canonical_key(self.system)
        return self.key


def _search_topology(q: SearchQuery, t: FiniteTopology) -> list[tuple[DynSystem, PropertyProfile]]:
    out = []
    for f in all_maps(t.n):
        sys = DynSystem(t, f)
        if not q.admits(sys):
            continue
        p = classify(sys)
        if q.matches(p):
            out.append((sys, p))
    return out


def search(q: SearchQuery) -> list[AtlasRecord]:
    tops = list(enumerate_topologies(q.n))
    if q.limit is not None and worker_count() <= 1:
        hits: Iterable = (h for t in tops for h in _search_topology(q, t))
    else:
        hits = (h for chunk in ordered_map(partial(_search_topology, q), tops) for h in chunk)
    records: list[AtlasRecord] = []
    by_key: dict = {}
    for sys, p in hits:
        if q.dedup:
            k = canonical_key(sys)
            if k in by_key:
                by_key[k].class_size += 1
                continue
            rec = by_key[k] = AtlasRecord(sys, p, k)
        else:
            rec = AtlasRecord(sys, p)
        records.append(rec)
        if q.limit is not None and len(records) >= q.limit and not q.dedup:
            break
    if q.limit is not None:
        records = records[: q.limit]
    return records


def atlas(n: int, dedup: bool = False) -> list[AtlasRecord]:
    """Classified records for every system on ``n`` points."""
    return search(SearchQuery(n, dedup=dedup))


# --- sweeps -------------------------------------------------------------------

@dataclass
class SweepReport:
    """Outcome of the no-hypermixing sweep over nontrivial topologies."""

    n_max: int
    scanned: dict[int, int] = field(default_factory=dict)
    violations: list[DynSystem] = field(default_factory=list)
    indiscrete_checked: dict[int, int] = field(default_factory=dict)
    indiscrete_mismatches: list[DynSystem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.indiscrete_mismatches


def _hypermixing_on(t: FiniteTopology) -> tuple[int, list[DynSystem]]:
    bad = []
    count = 0
    for f in all_maps(t.n):
        sys = DynSystem(t, f)
        count += 1
        if is_hypermixing(sys):
            bad.append(sys)
    return count, bad


def verify_no_hypermixing(n_max: int) -> SweepReport:
    """Check every map on every nontrivial topology up to ``n_max`` points is
    not hypermixing.  On indiscrete spaces, hypermixing must coincide with
    surjectivity; that is checked alongside."""
    report = SweepReport(n_max)
    for n in range(1, n_max + 1):
        tops = [t for t in enumerate_topologies(n) if not t.is_trivial()]
        results = ordered_map(_hypermixing_on, tops)
        report.scanned[n] = sum(c for c, _ in results)
        for _, bad in results:
            report.violations.extend(bad)
        checked = 0
        for f in all_maps(n):
            sys = DynSystem(FiniteTopology(n, (0, full_mask(n))), f)
            checked += 1
            if is_hypermixing(sys) != is_surjective(f):
                report.indiscrete_mismatches.append(sys)
        report.indiscrete_checked[n] = checked
    return report
