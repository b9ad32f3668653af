"""Exhaustive verification driver: brute-force family maxima vs the closed form.

Each (order, alpha) cell folds the full enumeration stream for that order,
keeping the maximum Sombor value, the isomorphism classes attaining it, and
the runner-up value.  A cell passes when the brute-force maximum matches the
closed form within tolerance and the unique maximizer is the constructed
extremal tree.  Cells are independent, so they optionally fan out to a
process pool; the merged report is sorted and byte-stable.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _kernels
from .errors import SizeLimitError
from .extremal import closed_form_max, construct_t_star, feasible_alpha_range
from .invariants import SO_TOL
from .tree import CanonicalCode, Tree, canonical_code

DEFAULT_VERIFY_CAP = 16


@dataclass(frozen=True)
class ExtremalRecord:
    """One (order, alpha) row of the verification table."""

    order: int
    alpha: int
    family_size: int
    closed_form: float
    brute_force_max: float
    maximizer_count: int
    maximizer_code: CanonicalCode
    margin_to_second: float

    @property
    def formula_matches(self) -> bool:
        return abs(self.closed_form - self.brute_force_max) <= SO_TOL

    @property
    def passed(self) -> bool:
        return (
            self.formula_matches
            and self.maximizer_count == 1
            and self.maximizer_code
            == canonical_code(construct_t_star(self.order, self.alpha))
        )


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[ExtremalRecord, ...]
    cell_seconds: tuple[float, ...]

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.records)


def verify_cell(order: int, alpha: int) -> tuple[ExtremalRecord, float]:
    """Fold the alpha-filtered stream for one cell; returns (record, seconds)."""
    start = time.perf_counter()
    size, best, runner, maximizer_levels = _kernels.family_sweep(order, alpha)
    codes = sorted(
        {canonical_code(Tree.from_level_sequence(lv)) for lv in maximizer_levels}
    )
    record = ExtremalRecord(
        order=order,
        alpha=alpha,
        family_size=size,
        closed_form=closed_form_max(order, alpha),
        brute_force_max=best,
        maximizer_count=len(codes),
        maximizer_code=codes[0],
        margin_to_second=best - runner,
    )
    return record, time.perf_counter() - start


def _cell_worker(cell: tuple[int, int]) -> tuple[ExtremalRecord, float]:
    return verify_cell(*cell)


def verify(
    n_min: int, n_max: int, jobs: int = 1, cap: int = DEFAULT_VERIFY_CAP
) -> VerificationReport:
    """Verify every feasible (order, alpha) cell with n_min <= order <= n_max."""
    if not 2 <= n_min <= n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got ({n_min}, {n_max})")
    if n_max > cap:
        raise SizeLimitError(f"n_max {n_max} exceeds the cap {cap}")
    cells = [
        (n, alpha) for n in range(n_min, n_max + 1) for alpha in feasible_alpha_range(n)
    ]
    if jobs <= 1:
        results = [verify_cell(n, alpha) for n, alpha in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell_worker, cells))
    results.sort(key=lambda pair: (pair[0].order, pair[0].alpha))
    return VerificationReport(
        records=tuple(rec for rec, _ in results),
        cell_seconds=tuple(secs for _, secs in results),
    )


def _fmt_margin(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.9f}"


def to_csv(report: VerificationReport) -> str:
    """Stable CSV rendering; reals at 9 decimals, rows sorted by (n, alpha)."""
    lines = [
        "n,alpha,family_size,closed_form,brute_force_max,"
        "maximizer_count,margin_to_second,pass"
    ]
    for r in report.records:
        lines.append(
            f"{r.order},{r.alpha},{r.family_size},{r.closed_form:.9f},"
            f"{r.brute_force_max:.9f},{r.maximizer_count},"
            f"{_fmt_margin(r.margin_to_second)},{'true' if r.passed else 'false'}"
        )
    return "\n".join(lines) + "\n"


def render_text(report: VerificationReport) -> str:
    """Human-readable per-cell table plus a one-line summary."""
    lines = []
    worst_gap = 0.0
    min_margin = math.inf
    for r, secs in zip(report.records, report.cell_seconds):
        gap = abs(r.closed_form - r.brute_force_max)
        worst_gap = max(worst_gap, gap)
        if r.family_size >= 2:
            min_margin = min(min_margin, r.margin_to_second)
        lines.append(
            f"n={r.order:<2d} alpha={r.alpha:<2d} family={r.family_size:<6d} "
            f"closed={r.closed_form:<15.9f} brute={r.brute_force_max:<15.9f} "
            f"maximizers={r.maximizer_count} margin={_fmt_margin(r.margin_to_second):<13s} "
            f"time={secs:.3f}s {'pass' if r.passed else 'FAIL'}"
        )
    verdict = "PASS" if report.overall else "FAIL"
    lines.append(
        f"overall: {verdict} ({len(report.records)} cells, "
        f"max formula gap {worst_gap:.3e}, "
        f"min margin {_fmt_margin(min_margin)}, "
        f"total {sum(report.cell_seconds):.3f}s)"
    )
    return "\n".join(lines) + "\n"
