"""Universally quantified claims about the mixing hierarchy, checked system by
system over the enumerated universe plus a seeded random sample.

Each claim is a hypothesis and a conclusion over a :class:`Facts` bundle.
Systems failing the hypothesis count as skipped, never as violations.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import deciders as dec
from .dynamics import DynSystem, image_set, power_map
from .topology import has_nondense_open, is_hausdorff, isolated_points
from .zoo import enumerate_systems, ordered_map, random_system, _topologies

POWERS = range(2, 6)


class Facts:
    """Lazily computed quantities about one system."""

    def __init__(self, sys: DynSystem) -> None:
        self.sys = sys
        self.t = sys.topology

    @cached_property
    def p(self) -> dec.PropertyProfile:
        return dec.classify(self.sys, check=False)

    @cached_property
    def hc(self) -> int:
        return dec.hypercyclic_points(self.sys)

    @cached_property
    def no_isolated(self) -> bool:
        return isolated_points(self.t) == 0

    @cached_property
    def hausdorff(self) -> bool:
        return is_hausdorff(self.t)

    @cached_property
    def nondense_open(self) -> bool:
        return has_nondense_open(self.t)

    @cached_property
    def jmix(self) -> tuple[int, ...]:
        return tuple(dec.jmix(self.sys, x) for x in range(self.t.n))

    @cached_property
    def jmix_all(self) -> int:
        out = 0
        for j in self.jmix:
            out |= j
        return out

    def dense(self, s: int) -> bool:
        return self.t.closure(s) == self.t.full

    def power(self, k: int) -> DynSystem:
        return DynSystem(self.t, power_map(self.sys.map, k))


def _jmix_of(f: Facts, b: int) -> int:
    out = 0
    for x in range(f.t.n):
        if b >> x & 1:
            out |= f.jmix[x]
    return out


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    hypothesis: Callable[[Facts], bool]
    conclusion: Callable[[Facts], bool]


def _always(_: Facts) -> bool:
    return True


LABELS = {
    "top_transitive": "topologically transitive",
    "strongly_top_transitive": "strongly topologically transitive",
}


def _implies(a: str, b: str) -> Claim:
    return Claim(
        f"lattice:{a}=>{b}",
        f"every {LABELS.get(a, a)} map is {LABELS.get(b, b)}",
        lambda f: getattr(f.p, a),
        lambda f: getattr(f.p, b),
    )


CLAIMS: tuple[Claim, ...] = tuple(_implies(a, b) for a, b in dec.LATTICE) + (
    Claim("hypertransitive-no-closed-invariant",
          "a hypertransitive map has no closed invariant subset",
          lambda f: f.p.hypertransitive,
          lambda f: not f.p.has_closed_invariant_subset),
    Claim("continuous-no-closed-invariant-hypertransitive",
          "a continuous map without closed invariant subsets is hypertransitive",
          lambda f: f.p.continuous and not f.p.has_closed_invariant_subset,
          lambda f: f.p.hypertransitive),
    Claim("finite-union-coincidence",
          "finite-union and infinite-union strong transitivity agree",
          _always,
          lambda f: f.p.strongly_transitive_finite == f.p.strongly_top_transitive),
    Claim("hypercyclic-no-isolated-transitive",
          "without isolated points, a hypercyclic map is topologically transitive",
          lambda f: f.no_isolated and f.p.hypercyclic,
          lambda f: f.p.top_transitive),
    Claim("hypercyclic-no-isolated-hc-dense",
          "without isolated points, HC(f) of a hypercyclic map is dense",
          lambda f: f.no_isolated and f.p.hypercyclic,
          lambda f: f.dense(f.hc)),
    Claim("continuous-transitive-hypercyclic",
          "without isolated points, a continuous transitive map is hypercyclic",
          lambda f: f.no_isolated and f.p.continuous and f.p.top_transitive,
          lambda f: f.p.hypercyclic),
    Claim("nontrivial-not-hypermixing",
          "no map on a nontrivial finite topology is hypermixing",
          lambda f: not f.t.is_trivial(),
          lambda f: not f.p.hypermixing),
    Claim("supermixing-powers",
          "powers f^2..f^5 of a supermixing map are supermixing",
          lambda f: f.p.supermixing,
          lambda f: all(dec.is_supermixing(f.power(k)) for k in POWERS)),
    Claim("hypermixing-powers",
          "powers f^2..f^5 of a hypermixing map are hypermixing",
          lambda f: f.p.hypermixing,
          lambda f: all(dec.is_hypermixing(f.power(k)) for k in POWERS)),
    Claim("strongly-transitive-nondense-open-onto",
          "with a nondense nonempty open set, strongly transitive maps are onto",
          lambda f: f.nondense_open and f.p.strongly_top_transitive,
          lambda f: f.p.surjective),
    Claim("strongly-transitive-open-map-onto",
          "strongly transitive open maps are onto",
          lambda f: f.p.open_map and f.p.strongly_top_transitive,
          lambda f: f.p.surjective),
    Claim("hypermixing-onto",
          "hypermixing maps are onto",
          lambda f: f.p.hypermixing,
          lambda f: f.p.surjective),
    Claim("supermixing-dense-range",
          "supermixing maps have dense range",
          lambda f: f.p.supermixing,
          lambda f: f.dense(image_set(f.sys.map, f.t.full))),
    Claim("hypermixing-nondense-open-not-injective",
          "with a nondense nonempty open set, hypermixing maps are not one-to-one",
          lambda f: f.nondense_open and f.p.hypermixing,
          lambda f: not f.p.injective),
    Claim("continuous-supermixing-hausdorff-onto",
          "continuous supermixing maps on Hausdorff spaces are onto",
          lambda f: f.p.continuous and f.p.supermixing and f.hausdorff,
          lambda f: f.p.surjective),
    Claim("jmix-hc-mixing",
          "for continuous hypercyclic maps without isolated points, "
          "mixing iff J(HC) meets HC",
          lambda f: f.no_isolated and f.p.continuous and f.p.hypercyclic,
          lambda f: f.p.mixing == (_jmix_of(f, f.hc) & f.hc != 0)),
    Claim("jmix-hypertransitive-mixing",
          "for continuous hypertransitive maps without isolated points, "
          "mixing iff J(X) nonempty iff J(X) dense",
          lambda f: f.no_isolated and f.p.continuous and f.p.hypertransitive,
          lambda f: f.p.mixing == (f.jmix_all != 0) == f.dense(f.jmix_all)),
    Claim("hypertransitive-supermixing-liminf",
          "for continuous hypertransitive maps, supermixing iff every "
          "liminf set of a nonempty open set is nonempty",
          lambda f: f.p.continuous and f.p.hypertransitive,
          lambda f: f.p.supermixing == all(dec.liminf(f.sys, u) != 0
                                           for u in f.t.nonempty_opens())),
    Claim("jmix-closed",
          "J(x) is closed for continuous maps",
          lambda f: f.p.continuous,
          lambda f: all(f.t.closure(j) == j for j in f.jmix)),
    Claim("jmix-invariant",
          "f(J(x)) is contained in J(x) for continuous maps",
          lambda f: f.p.continuous,
          lambda f: all(image_set(f.sys.map, j) & ~j == 0 for j in f.jmix)),
    Claim("jmix-mixing-characterization",
          "a continuous map is mixing iff J(x) = X for every x",
          lambda f: f.p.continuous,
          lambda f: f.p.mixing == all(j == f.t.full for j in f.jmix)),
)


@dataclass
class ClaimTally:
    tested: int = 0
    skipped: int = 0
    violations: int = 0
    examples: list[DynSystem] = field(default_factory=list)


@dataclass
class SuiteReport:
    n_max: int
    sample_budget: int
    seed: int
    sample_points: tuple[int, ...]
    systems: int = 0
    tallies: dict[str, ClaimTally] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(t.violations == 0 for t in self.tallies.values())

    def failing(self) -> list[str]:
        return [name for name, t in self.tallies.items() if t.violations]


MAX_EXAMPLES = 3


def check_system(sys: DynSystem, claims=CLAIMS) -> list[tuple[str, bool | None]]:
    """Per-claim outcome: True holds, False violated, None skipped."""
    f = Facts(sys)
    out = []
    for c in claims:
        if not c.hypothesis(f):
            out.append((c.name, None))
        else:
            out.append((c.name, bool(c.conclusion(f))))
    return out


def _check_batch(systems: list[DynSystem]) -> list[list[tuple[str, bool | None]]]:
    return [check_system(s) for s in systems]


def sample_systems(budget: int, points: tuple[int, ...], seed: int) -> list[DynSystem]:
    rng = random.Random(seed)
    out = []
    for i, n in enumerate(points):
        share = budget // len(points) + (1 if i < budget % len(points) else 0)
        _topologies(n)
        out.extend(random_system(n, rng) for _ in range(share))
    return out


def run_proposition_suite(n_max: int = 3, sample_budget: int = 10_000,
                          sample_points: tuple[int, ...] = (4, 5),
                          seed: int = 0) -> SuiteReport:
    """Check every claim over all systems with ``n <= n_max`` points and
    ``sample_budget`` seeded random systems with sizes in ``sample_points``."""
    report = SuiteReport(n_max, sample_budget, seed, tuple(sample_points))
    for c in CLAIMS:
        report.tallies[c.name] = ClaimTally()
    systems = [s for n in range(1, n_max + 1) for s in enumerate_systems(n)]
    systems += sample_systems(sample_budget, tuple(sample_points), seed) if sample_budget else []
    batches = [systems[i:i + 500] for i in range(0, len(systems), 500)]
    for batch, results in zip(batches, ordered_map(_check_batch, batches)):
        for sys, outcome in zip(batch, results):
            report.systems += 1
            for name, verdict in outcome:
                tally = report.tallies[name]
                if verdict is None:
                    tally.skipped += 1
                    continue
                tally.tested += 1
                if not verdict:
                    tally.violations += 1
                    if len(tally.examples) < MAX_EXAMPLES:
                        tally.examples.append(sys)
    return report
