"""Market-clearing dynamics and equilibrium employment.

Three pieces live here:

* linear supply and demand curves with excess-demand price adjustment
  (``P[t+1] = P[t] + k*(D - S)``) and its analytic stability test;
* equilibrium employment when output has diminishing returns to labour
  and the consumption share depends on the real wage;
* the long-run employment path when productivity keeps rising while
  demand stays put.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import NoEquilibrium, NoInteriorEquilibrium, ParameterError


@dataclass(frozen=True)
class LinearCurve:
    """Quantity as an affine function of price."""

    intercept: float
    slope: float

    def __post_init__(self):
        if not (math.isfinite(self.intercept) and math.isfinite(self.slope)):
            raise ParameterError("curve coefficients must be finite")

    def __call__(self, price: float) -> float:
        return self.intercept + self.slope * price


class LinearEquilibrium(NamedTuple):
    price: float
    quantity: float
    economic: bool  # False when the crossing has a non-positive price or a negative quantity


def linear_equilibrium(supply: LinearCurve, demand: LinearCurve) -> LinearEquilibrium:
    if supply.slope == demand.slope:
        raise NoEquilibrium("supply and demand are parallel (or identical)")
    price = (demand.intercept - supply.intercept) / (supply.slope - demand.slope)
    quantity = demand(price)
    return LinearEquilibrium(price, quantity, price > 0 and quantity >= 0)


def adjustment_factor(supply: LinearCurve, demand: LinearCurve, speed: float) -> float:
    """Multiplier applied to the price gap each round: ``1 + k*(d1 - s1)``."""
    return 1 + speed * (demand.slope - supply.slope)


def is_stable(supply: LinearCurve, demand: LinearCurve, speed: float) -> bool:
    return abs(adjustment_factor(supply, demand, speed)) < 1


class Verdict(enum.Enum):
    CONVERGED = "Converged"
    DIVERGED = "Diverged"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class TatonnementConfig:
    speed: float
    initial_price: float
    tolerance: float = 1e-9
    max_iterations: int = 100_000
    divergence_factor: float = 1e6

    def __post_init__(self):
        if self.speed <= 0:
            raise ParameterError("speed must be positive")
        if self.tolerance <= 0:
            raise ParameterError("tolerance must be positive")
        if self.initial_price <= 0:
            raise ParameterError("initial price must be positive")
        if self.max_iterations < 0:
            raise ParameterError("max_iterations must be non-negative")


class TatonnementResult(NamedTuple):
    prices: list[float]
    verdict: Verdict
    equilibrium: LinearEquilibrium

    @property
    def steps(self) -> int:
        return len(self.prices) - 1


def tatonnement(supply: LinearCurve, demand: LinearCurve, config: TatonnementConfig) -> TatonnementResult:
    """Iterate the excess-demand price rule until the price settles or runs away.

    Runaway means the price drops to zero or below, or grows beyond
    ``divergence_factor`` times its starting value.
    """
    eq = linear_equilibrium(supply, demand)
    bound = config.divergence_factor * config.initial_price
    price = config.initial_price
    prices = [price]
    for step in range(config.max_iterations + 1):
        if abs(price - eq.price) < config.tolerance:
            return TatonnementResult(prices, Verdict.CONVERGED, eq)
        if price <= 0 or abs(price) > bound:
            return TatonnementResult(prices, Verdict.DIVERGED, eq)
        if step == config.max_iterations:
            break
        price = price + config.speed * (demand(price) - supply(price))
        prices.append(price)
    return TatonnementResult(prices, Verdict.INCONCLUSIVE, eq)


def supply_demand_series(supply: LinearCurve, demand: LinearCurve, p_min: float, p_max: float,
                         points: int = 21) -> list[dict]:
    if points < 2 or p_max <= p_min:
        raise ParameterError("need p_min < p_max and at least two points")
    rows = []
    for i in range(points):
        p = p_min + (p_max - p_min) * i / (points - 1)
        rows.append({"P": p, "demand": demand(p), "supply": supply(p), "excess": demand(p) - supply(p)})
    return rows


@dataclass(frozen=True)
class ConcaveProduction:
    """``Y(N) = scale * N**exponent`` on ``[0, full_employment]``.

    ``exponent == 1`` is the linear limit used for comparison with the
    plain multiplier model.
    """

    scale: float
    exponent: float
    full_employment: float

    def __post_init__(self):
        if self.scale <= 0:
            raise ParameterError("scale must be positive")
        if not 0 < self.exponent <= 1:
            raise ParameterError("exponent must lie in (0, 1]")
        if self.full_employment <= 0:
            raise ParameterError("full_employment must be positive")

    def __call__(self, n: float) -> float:
        return self.scale * n ** self.exponent

    def labour_for(self, y: float) -> float:
        return (y / self.scale) ** (1 / self.exponent)


@dataclass(frozen=True)
class ConsumptionShare:
    """``gamma(w) = base + gain * w / (half_sat + w)``, so ``gain == 0`` is constant."""

    base: float
    gain: float = 0.0
    half_sat: float = 1.0

    def __post_init__(self):
        if self.gain < 0:
            raise ParameterError("gain must be non-negative")
        if self.half_sat <= 0:
            raise ParameterError("half_sat must be positive")
        if not (0 < self.base and self.base + self.gain < 1):
            raise ParameterError("share must stay inside (0, 1) for every wage")

    def __call__(self, wage: float) -> float:
        return self.base + self.gain * wage / (self.half_sat + wage)

    @classmethod
    def from_spec(cls, spec: dict) -> "ConsumptionShare":
        kind = spec.get("kind", "constant")
        if kind == "constant":
            return cls(base=spec["value"])
        if kind == "saturating":
            return cls(base=spec["base"], gain=spec["gain"], half_sat=spec.get("half_sat", 1.0))
        raise ParameterError(f"unknown consumption share kind {kind!r}")


@dataclass(frozen=True)
class WageDemand:
    autonomous: float
    wage: float
    share: ConsumptionShare

    def __post_init__(self):
        if self.wage <= 0:
            raise ParameterError("wage must be positive")

    @property
    def gamma(self) -> float:
        return self.share(self.wage)

    def effective_demand(self, output: float) -> float:
        return self.gamma * output + self.autonomous


class NonlinearEquilibrium(NamedTuple):
    N: float
    Y: float
    residual: float
    corner: bool  # demand exceeds full-employment output; N pinned at the ceiling
    iterations: int


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10,
           max_iter: int = 200) -> tuple[float, int]:
    """Root of ``f`` on ``[lo, hi]`` given ``f(lo) < 0 <= f(hi)``.

    Halves until the bracket is narrower than ``tol`` and ``f`` vanishes to
    rounding, or until the midpoint can no longer split the bracket.
    """
    f_lo = f(lo)
    if f_lo >= 0 or f(hi) < 0:
        raise NoInteriorEquilibrium("no sign change on the bracket")
    for i in range(1, max_iter + 1):
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:
            return (lo if abs(f(lo)) <= abs(f(hi)) else hi), i
        f_mid = f(mid)
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol and abs(f_mid) <= 1e-12:
            return mid, i
    return (lo + hi) / 2, max_iter


def nonlinear_equilibrium(prod: ConcaveProduction, dem: WageDemand, tol: float = 1e-10,
                          max_iter: int = 200) -> NonlinearEquilibrium:
    """Employment where output equals effective demand."""
    def gap(n: float) -> float:
        y = prod(n)
        return y - dem.effective_demand(y)

    if gap(0.0) >= 0:
        raise NoInteriorEquilibrium(
            "effective demand does not exceed output at zero employment; the only crossing is N = 0")
    top = prod.full_employment
    if gap(top) < 0:
        y = prod(top)
        return NonlinearEquilibrium(top, y, abs(gap(top)), True, 0)
    n, iterations = bisect(gap, 0.0, top, tol, max_iter)
    return NonlinearEquilibrium(n, prod(n), abs(gap(n)), False, iterations)


class StaticsRow(NamedTuple):
    wage: float
    gamma: float
    N: float
    Y: float
    corner: bool


def wage_comparative_statics(prod: ConcaveProduction, dem: WageDemand,
                             wages: Sequence[float]) -> list[StaticsRow]:
    if any(b <= a for a, b in zip(wages, wages[1:])):
        raise ParameterError("wage grid must be strictly increasing")
    rows = []
    for w in wages:
        d = WageDemand(dem.autonomous, w, dem.share)
        eq = nonlinear_equilibrium(prod, d)
        rows.append(StaticsRow(w, d.gamma, eq.N, eq.Y, eq.corner))
    return rows


class LongRunRow(NamedTuple):
    t: int
    productivity: float
    autonomous: float
    Y: float
    N: float


def long_run_series(productivity: Sequence[float], gamma: float, autonomous: float | Sequence[float],
                    base_slope: float = 1.0) -> list[LongRunRow]:
    """Equilibrium along a path of productivity factors ``pi_t``.

    Output per worker is ``pi_t * base_slope``. Demand fixes output at
    ``A_t/(1 - gamma)``, so employment is that divided by productivity.
    ``autonomous`` may be a single value or one value per period.
    """
    if not 0 < gamma < 1:
        raise ParameterError("gamma must lie in (0, 1)")
    if base_slope <= 0:
        raise ParameterError("base_slope must be positive")
    if isinstance(autonomous, (int, float)):
        path = [float(autonomous)] * len(productivity)
    else:
        path = list(autonomous)
        if len(path) != len(productivity):
            raise ParameterError("autonomous path and productivity path differ in length")
    rows = []
    for t, (pi, a) in enumerate(zip(productivity, path)):
        if pi <= 0:
            raise ParameterError("productivity factors must be positive")
        y = a / (1 - gamma)
        rows.append(LongRunRow(t, pi, a, y, y / (pi * base_slope)))
    return rows
