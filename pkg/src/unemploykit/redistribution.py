"""Three-sector income redistribution on top of the multiplier.

Income splits into shares ``f1, f2, f3``. Sector 1 (low income) spends a
fraction ``c1`` of what it gets. Sector 2 spends ``c2``. Sector 3 spends
nothing beyond what is already counted in ``c = c1*f1 + c2*f2``.

Redistributing by ``p`` scales ``f2`` and ``f3`` by ``1-p`` and hands the
freed share to sector 1. The aggregate propensity becomes
``c' = c + p*(c1 - c)``. The new output is ``Y' = A/(1 - c')`` for
unchanged autonomous spending ``A``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple, Sequence

from .errors import DomainError, MultiplierDivergence, ParameterError

_SHARE_TOL = 1e-12


@dataclass(frozen=True)
class SectorSplit:
    f1: float
    f2: float
    f3: float
    c1: float
    c2: float

    def __post_init__(self):
        for name in ("f1", "f2", "f3"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be non-negative")
        if abs(self.f1 + self.f2 + self.f3 - 1) > _SHARE_TOL:
            raise ParameterError(f"shares must sum to 1, got {self.f1 + self.f2 + self.f3!r}")
        if not 0 < self.c2 < 1:
            raise ParameterError(f"c2 must lie in (0, 1), got {self.c2}")
        if self.c1 <= 0:
            raise ParameterError(f"c1 must be positive, got {self.c1}")

    @classmethod
    def calibrate(cls, f1: float, c1: float, c: float, f2: float | None = None) -> "SectorSplit":
        """Build a split that reproduces an observed aggregate propensity ``c``.

        Only the product ``c2*f2 = c - c1*f1`` is pinned down by ``c``. Any
        ``f2`` in ``(c - c1*f1, 1 - f1]`` keeps ``c2`` inside (0, 1). The
        default picks the middle of that interval. Results that depend only
        on ``c``, ``c1`` and ``f1`` (every column of the redistribution
        table) do not care about the choice.
        """
        if not 0 <= f1 < 1:
            raise ParameterError(f"f1 must lie in [0, 1), got {f1}")
        spent_by_2 = c - c1 * f1
        if spent_by_2 <= 0:
            raise ParameterError(
                f"sector 1 alone already spends c1*f1={c1 * f1} >= c={c}; no room for sector 2")
        lo, hi = spent_by_2, 1 - f1
        if lo >= hi:
            raise ParameterError(f"c={c} needs c2*f2={spent_by_2} but only {hi} of income is left")
        if f2 is None:
            f2 = (lo + hi) / 2
        elif not lo < f2 <= hi:
            raise ParameterError(f"f2 must lie in ({lo}, {hi}], got {f2}")
        return cls(f1=f1, f2=f2, f3=1 - f1 - f2, c1=c1, c2=spent_by_2 / f2)

    @property
    def c(self) -> float:
        return composite_propensity(self)

    def redistributed(self, p: float) -> "SectorSplit":
        """The split after moving ``p`` of sectors 2 and 3's shares to sector 1."""
        _check_p(p)
        f2 = self.f2 * (1 - p)
        f3 = self.f3 * (1 - p)
        return replace(self, f1=self.f1 * (1 - p) + p, f2=f2, f3=f3)


def composite_propensity(split: SectorSplit) -> float:
    return split.c1 * split.f1 + split.c2 * split.f2


def _check_p(p: float) -> None:
    if not 0 <= p < 1:
        raise DomainError(f"p must lie in [0, 1), got {p}")


def _pct(new: float, old: float) -> float:
    return 100.0 * (new / old - 1.0) if old else 0.0


@dataclass(frozen=True)
class RedistributionResult:
    p: float
    c: float
    m: float
    Y: float
    f1: float
    f2: float
    f3: float
    Y1: float
    Y2: float
    Y3: float
    pct_Y: float
    pct_Y1: float
    pct_Y23: float

    @property
    def Y23(self) -> float:
        return self.Y - self.Y1

    def as_row(self) -> dict:
        return {
            "p": self.p, "c": self.c, "m": self.m, "Y": self.Y, "f1": self.f1,
            "Y1": self.Y1, "Y23": self.Y23,
            "pct_Y": self.pct_Y, "pct_Y1": self.pct_Y1, "pct_Y23": self.pct_Y23,
        }


def _equilibrium(split: SectorSplit, p: float, autonomous: float) -> tuple[float, float, float]:
    c0 = composite_propensity(split)
    c_new = c0 + p * (split.c1 - c0)
    if c_new >= 1:
        raise MultiplierDivergence(f"p={p} pushes the propensity to consume to {c_new} >= 1")
    m_new = 1.0 / (1.0 - c_new)
    return c_new, m_new, m_new * autonomous


def apply_redistribution(split: SectorSplit, p: float, autonomous: float) -> RedistributionResult:
    _check_p(p)
    _, _, y0 = _equilibrium(split, 0.0, autonomous)
    c_new, m_new, y_new = _equilibrium(split, p, autonomous)
    after = split.redistributed(p)
    y1_0 = split.f1 * y0
    y1 = after.f1 * y_new
    return RedistributionResult(
        p=p, c=c_new, m=m_new, Y=y_new,
        f1=after.f1, f2=after.f2, f3=after.f3,
        Y1=y1, Y2=after.f2 * y_new, Y3=after.f3 * y_new,
        pct_Y=_pct(y_new, y0),
        pct_Y1=_pct(y1, y1_0),
        pct_Y23=_pct(y_new - y1, y0 - y1_0),
    )


class NoSavingsOutcome(NamedTuple):
    m: float
    Y: float
    Y2: float
    Y3: float


def no_savings_invariance(split: SectorSplit, p: float, autonomous: float) -> NoSavingsOutcome:
    """Closed form for a sector 1 that spends everything (``c1 == 1``).

    The multiplier grows by exactly ``1/(1-p)``. That cancels the shrinkage
    of ``f2`` and ``f3``, so sectors 2 and 3 keep their incomes.
    """
    if split.c1 != 1:
        raise ParameterError(f"the closed form needs c1 == 1, got {split.c1}")
    _check_p(p)
    m = 1.0 / (1.0 - composite_propensity(split))
    m_new = m / (1 - p)
    y_new = m_new * autonomous
    return NoSavingsOutcome(m=m_new, Y=y_new, Y2=split.f2 * m * autonomous, Y3=split.f3 * m * autonomous)


class RedistributionTable(NamedTuple):
    rows: list[RedistributionResult]
    threshold_p: float | None  # smallest tabulated p reaching the target growth


def redistribution_sweep(split: SectorSplit, p_values: Sequence[float], base_y: float,
             target_growth_pct: float = 20.0) -> RedistributionTable:
    """Sweep ``p`` at fixed autonomous spending ``A = base_y*(1 - c)``."""
    if list(p_values) != sorted(p_values):
        raise ParameterError("p values must be sorted ascending")
    autonomous = base_y * (1 - composite_propensity(split))
    rows = [apply_redistribution(split, p, autonomous) for p in p_values]
    hit = next((r.p for r in rows if r.pct_Y >= target_growth_pct - 1e-9), None)
    return RedistributionTable(rows, hit)


def growth_threshold(split: SectorSplit, growth: float) -> float:
    """Exact ``p`` for which output grows by the fraction ``growth``.

    Requires ``c1 > c``; otherwise redistribution toward sector 1 cannot
    raise output at all.
    """
    c = composite_propensity(split)
    if split.c1 <= c:
        raise ParameterError("redistribution raises output only when c1 > c")
    target_c = 1 - (1 - c) / (1 + growth)
    p = (target_c - c) / (split.c1 - c)
    if not 0 <= p < 1:
        raise DomainError(f"growth {growth} is out of reach (needs p={p})")
    return p


@dataclass(frozen=True)
class PopulationProfile:
    n_employed: float
    n_retired: float
    n_unemployed: float
    wage_ratio: float = 2.5
    payments_per_year: int = 13

    def __post_init__(self):
        if min(self.n_employed, self.n_retired, self.n_unemployed) < 0:
            raise ParameterError("population counts must be non-negative")
        if self.wage_ratio <= 0:
            raise ParameterError("wage_ratio must be positive")
        if self.payments_per_year <= 0:
            raise ParameterError("payments_per_year must be positive")
        if self.n_employed + self.n_retired == 0:
            raise ParameterError("need at least one income earner")

    @property
    def population(self) -> float:
        return self.n_employed + self.n_retired + self.n_unemployed

    def with_full_employment(self) -> "PopulationProfile":
        return replace(self, n_employed=self.n_employed + self.n_unemployed, n_unemployed=0)


class IncomeBreakdown(NamedTuple):
    monthly_income: float  # sector total, same money unit as the annual input
    avg_income: float  # over everybody, the unemployed included
    avg_employed: float
    avg_retired: float


def population_breakdown(profile: PopulationProfile, y1_annual: float, scale: float = 1e6) -> IncomeBreakdown:
    """Average incomes per head when an employed worker earns ``wage_ratio``
    times a retiree and the unemployed earn nothing.

    ``y1_annual`` is in units of ``scale`` (millions by default) and the
    averages come out in plain currency units.
    """
    if y1_annual <= 0:
        raise ParameterError("sector income must be positive")
    monthly = y1_annual / profile.payments_per_year
    retiree_units = profile.n_employed * profile.wage_ratio + profile.n_retired
    retired = monthly * scale / retiree_units
    return IncomeBreakdown(
        monthly_income=monthly,
        avg_income=monthly * scale / profile.population,
        avg_employed=retired * profile.wage_ratio,
        avg_retired=retired,
    )


class NoSavingsPlan(NamedTuple):
    p: float
    Y: float
    Y1: float
    Y1_uplift_pct: float
    before: IncomeBreakdown
    after: IncomeBreakdown
    existing_income_rise_pct: float


def no_savings_plan(profile: PopulationProfile, y_annual: float, y1_annual: float,
                    growth: float, scale: float = 1e6) -> NoSavingsPlan:
    """Close an output gap of ``growth`` by redistributing to a non-saving sector 1.

    With ``c1 == 1`` the required cut is ``p = 1 - 1/(1+growth)``. Sectors 2
    and 3 keep their incomes, so all of the new output lands in sector 1,
    and the unemployed are absorbed into employment.
    """
    if not 0 < y1_annual < y_annual:
        raise ParameterError("need 0 < Y1 < Y")
    if growth <= 0:
        raise ParameterError("growth must be positive")
    p = 1 - 1 / (1 + growth)
    y_new = y_annual * (1 + growth)
    y1_new = y1_annual + (y_new - y_annual)
    before = population_breakdown(profile, y1_annual, scale)
    after = population_breakdown(profile.with_full_employment(), y1_new, scale)
    return NoSavingsPlan(
        p=p, Y=y_new, Y1=y1_new,
        Y1_uplift_pct=_pct(y1_new, y1_annual),
        before=before, after=after,
        existing_income_rise_pct=_pct(after.avg_employed, before.avg_employed),
    )


@dataclass(frozen=True)
class ScheduleStep:
    period: int
    p: float  # cumulative cut relative to the starting split
    increment: float  # cut applied to the previous period's split
    wage_increase_pct: float
    expected_sales_growth_pct: float
    Y: float
    Y1: float

    @property
    def income_growth_pct(self) -> float:
        return self.wage_increase_pct + self.expected_sales_growth_pct


def gradual_schedule(target_p: float, step_p: float, split: SectorSplit, base_y: float) -> list[ScheduleStep]:
    """Reach ``target_p`` in cumulative steps of ``step_p``.

    Each period raises sector 1's income by some percentage. Part of that is
    growth in overall activity (sales). The rest is the direct rise in pay
    that firms are asked to grant. The two add up to the period's rise in
    sector-1 income.
    """
    if target_p == 0 and step_p == 0:
        return []
    if not 0 < step_p <= target_p:
        raise ParameterError("need 0 < step_p <= target_p")
    _check_p(target_p)
    autonomous = base_y * (1 - composite_propensity(split))
    n = math.ceil(target_p / step_p - 1e-12)
    steps = []
    prev = apply_redistribution(split, 0.0, autonomous)
    prev_p = 0.0
    for k in range(1, n + 1):
        p = min(k * step_p, target_p)
        cur = apply_redistribution(split, p, autonomous)
        sales = _pct(cur.Y, prev.Y)
        income = _pct(cur.Y1, prev.Y1)
        steps.append(ScheduleStep(
            period=k, p=p, increment=1 - (1 - p) / (1 - prev_p),
            wage_increase_pct=income - sales, expected_sales_growth_pct=sales,
            Y=cur.Y, Y1=cur.Y1,
        ))
        prev, prev_p = cur, p
    return steps


def sector_income_series(split: SectorSplit, base_y: float, p_max: float = 0.2, points: int = 41) -> list[dict]:
    """Sector-1 and sectors-2+3 income against ``p``."""
    if points < 2:
        raise ParameterError("need at least two points")
    ps = [p_max * i / (points - 1) for i in range(points)]
    table = redistribution_sweep(split, ps, base_y)
    return [{"p": r.p, "Y": r.Y, "Y1": r.Y1, "Y23": r.Y23} for r in table.rows]


# short alias
table_31 = redistribution_sweep
