"""Exact deciders for the transitivity and mixing hierarchy.

Each decider quantifies over the nonempty open sets of the space (the empty
set excluded, ``X`` included) and evaluates ``f^n(U)`` only on the finite
trajectory block, which is exact because the image sequence is eventually
periodic.  Failing verdicts carry the first violating set or pair in
ascending mask order.

J^mix on a finite space
-----------------------
A sequence converges to ``x`` exactly when it eventually stays inside the
minimal neighbourhood ``N(x)``.  Hence ``y`` is a limit of ``f^n(x_n)`` with
``x_n -> x`` iff ``f^n(N(x))`` meets ``N(y)`` for all large ``n``.  Since
``s in N(y)`` iff ``y in cl{s}``, this is the intersection of the closures of
the cycle block of ``N(x)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Any

from .dynamics import (
    DynSystem,
    collision,
    continuity_violation,
    forward_union,
    image_set,
    openness_violation,
    orbit,
    union_bound,
    unhit_point,
)
from .topology import members

PROPERTY_NAMES = (
    "hypercyclic",
    "hypertransitive",
    "top_transitive",
    "strongly_top_transitive",
    "strongly_transitive_finite",
    "mixing",
    "supermixing",
    "hypermixing",
    "has_closed_invariant_subset",
    "continuous",
    "open_map",
    "surjective",
    "injective",
)


class LatticeViolation(AssertionError):
    """A profile broke an implication that holds for every system."""

    def __init__(self, message: str, system: DynSystem) -> None:
        from .io import dumps_system

        self.system = system
        super().__init__(f"{message}\n{dumps_system(system)}")


# --- hypercyclicity -----------------------------------------------------------

def hypercyclic_points(sys: DynSystem) -> int:
    """``HC(f)``: points whose orbit is dense."""
    t = sys.topology
    out = 0
    for x in range(t.n):
        if t.closure(orbit(sys.map, x)) == t.full:
            out |= 1 << x
    return out


def is_hypercyclic(sys: DynSystem) -> bool:
    return hypercyclic_points(sys) != 0


def is_hypertransitive(sys: DynSystem) -> bool:
    return hypercyclic_points(sys) == sys.topology.full


# --- transitivity -------------------------------------------------------------

def transitivity_violation(sys: DynSystem) -> tuple[int, int] | None:
    opens = sys.topology.nonempty_opens()
    for u in opens:
        reach = forward_union(sys.map, u)
        for v in opens:
            if reach & v == 0:
                return u, v
    return None


def is_topologically_transitive(sys: DynSystem) -> bool:
    return transitivity_violation(sys) is None


def strong_transitivity_violation(sys: DynSystem) -> int | None:
    full = sys.topology.full
    for u in sys.topology.nonempty_opens():
        if forward_union(sys.map, u) != full:
            return u
    return None


def is_strongly_topologically_transitive(sys: DynSystem) -> bool:
    return strong_transitivity_violation(sys) is None


def is_strongly_transitive_finite(sys: DynSystem) -> tuple[bool, int | None]:
    """Finite-union strong transitivity and the uniform bound ``s``.

    ``s`` is the largest, over nonempty opens ``U``, of the least ``s`` with
    ``U | f(U) | ... | f^s(U) == X``.
    """
    full = sys.topology.full
    worst = 0
    for u in sys.topology.nonempty_opens():
        s = union_bound(sys.map, u, full)
        if s is None:
            return False, None
        worst = max(worst, s)
    return True, worst


# --- mixing hierarchy ---------------------------------------------------------

def mixing_violation(sys: DynSystem) -> tuple[int, int] | None:
    opens = sys.topology.nonempty_opens()
    for u in opens:
        cycle = sys.trajectory(u).cycle
        for v in opens:
            if any(s & v == 0 for s in cycle):
                return u, v
    return None


def is_mixing(sys: DynSystem) -> bool:
    return mixing_violation(sys) is None


def liminf(sys: DynSystem, u: int) -> int:
    cycle = sys.trajectory(u).cycle
    out = cycle[0]
    for s in cycle[1:]:
        out &= s
    return out


def supermixing_violation(sys: DynSystem) -> int | None:
    t = sys.topology
    for u in t.nonempty_opens():
        if t.closure(liminf(sys, u)) != t.full:
            return u
    return None


def is_supermixing(sys: DynSystem) -> bool:
    return supermixing_violation(sys) is None


def hypermixing_violation(sys: DynSystem) -> int | None:
    full = sys.topology.full
    for u in sys.topology.nonempty_opens():
        if liminf(sys, u) != full:
            return u
    return None


def is_hypermixing(sys: DynSystem) -> bool:
    return hypermixing_violation(sys) is None


# --- J^mix --------------------------------------------------------------------

def jmix(sys: DynSystem, x: int) -> int:
    t = sys.topology
    out = t.full
    for s in sys.trajectory(t.min_nbhd[x]).cycle:
        out &= t.closure(s)
    return out


def jmix_of_set(sys: DynSystem, b: int) -> int:
    out = 0
    for x in members(b):
        out |= jmix(sys, x)
    return out


# --- invariant sets -----------------------------------------------------------

def closed_invariant_subset(sys: DynSystem) -> int | None:
    """First closed ``E`` with ``0 != E != X`` and ``f(E) <= E``."""
    t = sys.topology
    for e in t.closed_sets:
        if e == 0 or e == t.full:
            continue
        if image_set(sys.map, e) & ~e == 0:
            return e
    return None


def has_closed_invariant_subset(sys: DynSystem) -> tuple[bool, int | None]:
    e = closed_invariant_subset(sys)
    return e is not None, e


# --- aggregation --------------------------------------------------------------

@dataclass
class PropertyProfile:
    hypercyclic: bool
    hypertransitive: bool
    top_transitive: bool
    strongly_top_transitive: bool
    strongly_transitive_finite: bool
    mixing: bool
    supermixing: bool
    hypermixing: bool
    has_closed_invariant_subset: bool
    continuous: bool
    open_map: bool
    surjective: bool
    injective: bool
    witness: dict[str, Any] = field(default_factory=dict, compare=False)

    def verdicts(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in PROPERTY_NAMES}

    def bits(self) -> tuple[int, ...]:
        return tuple(int(getattr(self, name)) for name in PROPERTY_NAMES)


assert tuple(f.name for f in fields(PropertyProfile))[:-1] == PROPERTY_NAMES

# (premise, conclusion) pairs that hold for every map on every space
LATTICE = (
    ("hypermixing", "supermixing"),
    ("supermixing", "mixing"),
    ("mixing", "top_transitive"),
    ("hypermixing", "strongly_top_transitive"),
    ("strongly_top_transitive", "top_transitive"),
    ("hypertransitive", "hypercyclic"),
)


def lattice_errors(p: PropertyProfile) -> list[str]:
    errs = [f"{a} without {b}" for a, b in LATTICE if getattr(p, a) and not getattr(p, b)]
    if p.hypertransitive and p.has_closed_invariant_subset:
        errs.append("hypertransitive with a closed invariant subset")
    if p.continuous and not p.has_closed_invariant_subset and not p.hypertransitive:
        errs.append("continuous without closed invariant subsets but not hypertransitive")
    if p.strongly_transitive_finite != p.strongly_top_transitive:
        errs.append("finite-union and infinite-union strong transitivity disagree")
    return errs


def classify(sys: DynSystem, check: bool = True) -> PropertyProfile:
    """Decide every property of ``sys`` and attach witnesses.

    With ``check`` set, a profile breaking :data:`LATTICE` (or the other
    unconditional implications) raises :class:`LatticeViolation`.
    """
    t = sys.topology
    w: dict[str, Any] = {}

    hc = hypercyclic_points(sys)
    w["hypercyclic"] = next(members(hc), None)
    missing = t.full & ~hc
    w["hypertransitive"] = next(members(missing), None)

    w["top_transitive"] = transitivity_violation(sys)
    w["strongly_top_transitive"] = strong_transitivity_violation(sys)
    stf, bound = is_strongly_transitive_finite(sys)
    w["strongly_transitive_finite"] = bound
    w["mixing"] = mixing_violation(sys)
    w["supermixing"] = supermixing_violation(sys)
    w["hypermixing"] = hypermixing_violation(sys)
    w["has_closed_invariant_subset"] = closed_invariant_subset(sys)
    w["continuous"] = continuity_violation(sys)
    w["open_map"] = openness_violation(sys)
    w["surjective"] = unhit_point(sys.map)
    w["injective"] = collision(sys.map)

    profile = PropertyProfile(
        hypercyclic=hc != 0,
        hypertransitive=missing == 0,
        top_transitive=w["top_transitive"] is None,
        strongly_top_transitive=w["strongly_top_transitive"] is None,
        strongly_transitive_finite=stf,
        mixing=w["mixing"] is None,
        supermixing=w["supermixing"] is None,
        hypermixing=w["hypermixing"] is None,
        has_closed_invariant_subset=w["has_closed_invariant_subset"] is not None,
        continuous=w["continuous"] is None,
        open_map=w["open_map"] is None,
        surjective=w["surjective"] is None,
        injective=w["injective"] is None,
        witness=w,
    )
    errs = lattice_errors(profile) if check else None
    if errs:
        raise LatticeViolation("; ".join(errs), sys)
    return profile
