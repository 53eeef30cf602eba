"""The batch job behind ``topodyn verify-paper``: fixtures, the no-hypermixing
sweep and the claim suite, reported as one PASS/FAIL/SKIPPED line each."""
from __future__ import annotations

from dataclasses import dataclass

from .deciders import classify
from .fixtures import FIXTURES, Fixture
from .io import dumps_system
from .suite import CLAIMS, run_proposition_suite
from .zoo import verify_no_hypermixing


@dataclass(frozen=True)
class CheckLine:
    status: str  # PASS, FAIL or SKIPPED
    name: str
    detail: str = ""

    def render(self) -> str:
        line = f"{self.status:<7} {self.name}"
        return f"{line}: {self.detail}" if self.detail else line


def check_fixture(fx: Fixture) -> CheckLine:
    p = classify(fx.build())
    diff = [f"{k}: expected {v}, got {getattr(p, k)}"
            for k, v in fx.expected.items() if getattr(p, k) != v]
    if diff:
        return CheckLine("FAIL", f"fixture {fx.name} ({fx.description})", "; ".join(diff))
    return CheckLine("PASS", f"fixture {fx.name} ({fx.description})")


def verify_paper(max_points: int = 3, sweep_points: int = 4, samples: int = 10_000,
                 sample_points: tuple[int, ...] = (4, 5), seed: int = 0,
                 fixtures=FIXTURES) -> list[CheckLine]:
    lines = [check_fixture(fx) for fx in fixtures]
    lines.append(CheckLine("SKIPPED", "example B (shift on the integers)",
                           "infinite space, not machine-checked"))

    sweep = verify_no_hypermixing(sweep_points)
    scanned = sum(sweep.scanned.values())
    if sweep.ok:
        lines.append(CheckLine(
            "PASS", f"no hypermixing map on a nontrivial topology, n <= {sweep_points}",
            f"{scanned} systems scanned, 0 violations"))
    else:
        first = (sweep.violations or sweep.indiscrete_mismatches)[0]
        lines.append(CheckLine(
            "FAIL", f"no hypermixing map on a nontrivial topology, n <= {sweep_points}",
            f"{len(sweep.violations)} violations, "
            f"{len(sweep.indiscrete_mismatches)} indiscrete mismatches, e.g. {dumps_system(first)}"))

    report = run_proposition_suite(max_points, samples, sample_points, seed)
    scope = f"n <= {max_points} exhaustive + {samples} sampled at n in {list(sample_points)}, seed {seed}"
    for c in CLAIMS:
        tally = report.tallies[c.name]
        counts = f"{tally.tested} tested, {tally.skipped} skipped"
        if tally.violations:
            lines.append(CheckLine(
                "FAIL", f"{c.name} ({c.description})",
                f"{tally.violations} violations of {counts}; "
                f"e.g. {dumps_system(tally.examples[0])}"))
        else:
            lines.append(CheckLine("PASS", f"{c.name} ({c.description})", f"{counts}; {scope}"))
    return lines


def all_passed(lines: list[CheckLine]) -> bool:
    return all(line.status != "FAIL" for line in lines)
