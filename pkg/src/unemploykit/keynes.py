"""Keynesian consumption function, multiplier and policy arithmetic.

Consumption is ``C = c*Y``. Here ``c = cp*fp``: ``fp`` is the share of
output paid to particulars (wages and distributed profits) and ``cp`` is the
share of that income they spend. Only the product enters most formulas.
``cp`` shows up on its own in :func:`firm_savings_effect`.

With autonomous spending ``A = Iv + G + Xn`` the equilibrium output is
``Y = m*A`` with multiplier ``m = 1/(1-c)``.

These are short-run relations. ``c`` drifts with expectations and habits,
so nothing here forecasts over long horizons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, ParameterError

C_MAX = 0.999


def _check_c(c: float, name: str = "c") -> None:
    if not 0 < c < 1:
        raise DomainError(f"{name} must lie in (0, 1), got {c}")
    if c > C_MAX:
        raise DomainError(f"{name}={c} is above {C_MAX}; the multiplier is numerically meaningless there")


def multiplier(c: float) -> float:
    _check_c(c)
    return 1.0 / (1.0 - c)


def equilibrium_output(c: float, Iv: float, G: float, Xn: float) -> float:
    return multiplier(c) * (Iv + G + Xn)


def overproduction(Y: float, c: float, Iv: float, G: float, Xn: float) -> float:
    """Unsold output ``Q = Y - (c*Y + Iv + G + Xn)``; positive means stocks pile up."""
    _check_c(c)
    return Y - (c * Y + Iv + G + Xn)


def demand_lines(c: float, Iv: float, G: float, Xn: float, y_max: float | None = None, points: int = 41):
    """The 45-degree output line and the effective-demand line over ``[0, y_max]``.

    They cross at :func:`equilibrium_output`. By default ``y_max`` is twice that.
    """
    if points < 2:
        raise ParameterError("need at least two points")
    autonomous = Iv + G + Xn
    if y_max is None:
        y_max = 2 * equilibrium_output(c, Iv, G, Xn)
    _check_c(c)
    rows = []
    for i in range(points):
        y = y_max * i / (points - 1)
        demand = c * y + autonomous
        rows.append({"Y": y, "output": y, "effective_demand": demand, "Q": y - demand})
    return rows


@dataclass(frozen=True)
class MacroState:
    """Aggregates for one period.

    ``employment_ratio`` is employment over full employment (N/NP).
    """

    Y: float
    c: float
    Iv: float
    G: float
    Xn: float
    Q: float = 0.0
    employment_ratio: float = 1.0

    def __post_init__(self):
        _check_c(self.c)
        if not 0 < self.employment_ratio <= 1:
            raise ParameterError("employment_ratio must lie in (0, 1]")

    @property
    def m(self) -> float:
        return multiplier(self.c)

    @property
    def autonomous(self) -> float:
        return self.Iv + self.G + self.Xn

    def is_equilibrium(self, rel_tol: float = 1e-9) -> bool:
        return self.Q == 0 and math.isclose(self.Y, self.m * self.autonomous, rel_tol=rel_tol)


class EmploymentGap(NamedTuple):
    delta_y: float
    delta_pct: float
    employment_after: float


def employment_gap(unemployment_rate: float, Y: float) -> EmploymentGap:
    """Output rise needed to absorb unemployment, with output proportional to employment.

    Follows the simple rule of three: an unemployment rate ``u`` calls for
    raising output by ``u*Y``. Employment moves from ``1-u`` to
    ``(1-u)*(1+u)`` of full employment, e.g. 80% -> 96% for ``u = 0.2``.
    """
    if not 0 <= unemployment_rate < 1:
        raise ParameterError("unemployment_rate must lie in [0, 1)")
    dy = unemployment_rate * Y
    return EmploymentGap(dy, 100 * unemployment_rate, (1 - unemployment_rate) * (1 + unemployment_rate))


def scenario_delta(state: MacroState, d_iv: float = 0.0, d_g: float = 0.0, d_xn: float = 0.0,
                   *, xn_from_zero: bool = False) -> float:
    """Output response ``m * (dIv + dG + dXn)``.

    With ``xn_from_zero=True`` the net-export change is measured from a zero
    baseline, i.e. the whole new level ``state.Xn + d_xn`` counts as new demand.
    """
    if xn_from_zero:
        d_xn = state.Xn + d_xn
    return state.m * (d_iv + d_g + d_xn)


class ExportsResult(NamedTuple):
    X: float
    M: float
    Xn: float
    delta_xn: float
    delta_y: float
    needed: float
    share_of_needed: float


def exports_scenario(
    state: MacroState,
    X: float,
    M: float,
    export_growth: float = 1.0,
    import_growth: float = 0.5,
    unemployment_rate: float = 0.2,
    convention: str = "rounded",
) -> ExportsResult:
    """Output gain from growing exports faster than imports.

    ``convention="rounded"`` rounds the new export and import levels down to
    whole thousands and counts the entire new ``Xn`` as extra demand. This
    gives roughly 38,800 M$ for the 1995 baseline. ``convention="baseline"``
    keeps exact levels and uses the change from the current ``Xn``.
    """
    x_new = X * (1 + export_growth)
    m_new = M * (1 + import_growth)
    if convention == "rounded":
        x_new = math.floor(x_new / 1000) * 1000
        m_new = math.floor(m_new / 1000) * 1000
        xn_new = x_new - m_new
        dy = scenario_delta(state, d_xn=xn_new - state.Xn, xn_from_zero=True)
        d_xn = xn_new
    elif convention == "baseline":
        xn_new = x_new - m_new
        d_xn = xn_new - state.Xn
        dy = scenario_delta(state, d_xn=d_xn)
    else:
        raise ParameterError("convention must be 'rounded' or 'baseline'")
    needed = employment_gap(unemployment_rate, state.Y).delta_y
    share = 100 * dy / needed if needed else math.inf
    return ExportsResult(x_new, m_new, xn_new, d_xn, dy, needed, share)


class ConsumptionShift(NamedTuple):
    m_old: float
    m_new: float
    pct_m: float
    pct_y: float
    Y_new: float


def consumption_shift(state: MacroState, c_new: float) -> ConsumptionShift:
    """Effect of a new propensity to consume with Iv, G and Xn held fixed."""
    _check_c(c_new, "c_new")
    m_old, m_new = state.m, multiplier(c_new)
    pct = 100 * (m_new / m_old - 1)
    y_new = m_new * state.autonomous
    # with autonomous spending fixed, output moves exactly with the multiplier
    return ConsumptionShift(m_old, m_new, pct, pct, y_new)


def firm_savings_effect(amount: float, cp: float, invested: bool) -> float:
    """First-round output change when firms retain ``amount`` instead of paying it out.

    Invested retentions add ``amount`` to Iv while particulars lose
    ``amount*cp`` of consumption. Net: ``amount*(1-cp)``. Retentions that buy
    no domestic output leave only the consumption fall, ``-amount*cp``. No
    multiplier rounds are applied in either case.
    """
    if not 0 < cp < 1:
        raise DomainError("cp must lie in (0, 1)")
    return amount * (1 - cp) if invested else -amount * cp


def project_return(principal: float, final_value: float, years: float) -> float:
    """Compound annual rate turning ``principal`` into ``final_value``."""
    if principal <= 0 or final_value <= 0 or years <= 0:
        raise ParameterError("principal, final_value and years must be positive")
    return (final_value / principal) ** (1.0 / years) - 1.0
