"""Closed-form equilibria of the island fishing economy.

A boat owner (employer) hires workers who each land ``productivity`` fish per
hour. Nobody eats more than ``satiation`` fish a day and unsold fish rot
overnight, so output settles where whoever earns the most is exactly sated:

* below the solidarity wage the employers are the sated side (E = s),
* above it the workers are (A = s),
* at the solidarity wage both are.

Everything is computed with :class:`fractions.Fraction`, so identities such as
``n_workers*A + n_employers*E == P`` hold exactly. There is deliberately no
price or money argument anywhere here: only the real wage matters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from ._exact import to_fraction
from .errors import InvalidWage, NoSurplus, ParameterError


class Regime(enum.Enum):
    FLEXIBILIZED = "Flexibilized"
    SOLIDARITY = "Solidarity"
    SYNDICAL = "Syndical"


@dataclass(frozen=True)
class IslandParams:
    productivity: Fraction = Fraction(6)
    satiation: Fraction = Fraction(12)
    subsistence: Fraction = Fraction(1)
    n_workers: int = 2
    n_employers: int = 1

    def __post_init__(self):
        for name in ("productivity", "satiation", "subsistence"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if self.productivity <= 0:
            raise ParameterError("productivity must be positive")
        if not 0 < self.subsistence < self.satiation:
            raise ParameterError("need 0 < subsistence < satiation")
        for name in ("n_workers", "n_employers"):
            n = getattr(self, name)
            if isinstance(n, bool) or int(n) != n or n < 1:
                raise ParameterError(f"{name} must be an integer >= 1")
            object.__setattr__(self, name, int(n))

    @property
    def solidarity_wage(self) -> Fraction:
        return self.productivity * self.n_workers / (self.n_workers + self.n_employers)

    def scaled(self, k: int) -> IslandParams:
        """Same island with ``k`` times as many workers and employers."""
        return IslandParams(
            self.productivity, self.satiation, self.subsistence,
            self.n_workers * k, self.n_employers * k,
        )


@dataclass(frozen=True)
class RegimeSolution:
    wage: Fraction
    jornada: Fraction
    production: Fraction
    worker_income: Fraction
    employer_income: Fraction
    regime: Regime

    def as_row(self) -> dict:
        return {
            "wage": self.wage,
            "jornada": self.jornada,
            "production": self.production,
            "worker_income": self.worker_income,
            "employer_income": self.employer_income,
            "regime": self.regime.value,
        }


def _solution(params: IslandParams, w: Fraction, j: Fraction, regime: Regime) -> RegimeSolution:
    production = params.productivity * params.n_workers * j
    worker_income = w * j
    employer_income = (production - params.n_workers * worker_income) / params.n_employers
    return RegimeSolution(w, j, production, worker_income, employer_income, regime)


def solidarity_solution(params: IslandParams) -> RegimeSolution:
    """Wage and working day at which every person gets exactly ``satiation``."""
    w = params.solidarity_wage
    return _solution(params, w, params.satiation / w, Regime.SOLIDARITY)


def regime_solution(params: IslandParams, w) -> RegimeSolution:
    """Equilibrium at real wage ``w`` (fish per hour).

    Raises:
        InvalidWage: ``w <= 0``.
        NoSurplus: ``w >= productivity`` (employers would keep nothing).
    """
    w = to_fraction(w)
    if w <= 0:
        raise InvalidWage(f"wage must be positive, got {w}")
    if w >= params.productivity:
        raise NoSurplus(f"wage {w} leaves no surplus at productivity {params.productivity}")
    w_sol = params.solidarity_wage
    if w == w_sol:
        return solidarity_solution(params)
    if w < w_sol:
        # employers sated: n_employers * s = n_workers * j * (r - w)
        j = params.n_employers * params.satiation / (params.n_workers * (params.productivity - w))
        return _solution(params, w, j, Regime.FLEXIBILIZED)
    return _solution(params, w, params.satiation / w, Regime.SYNDICAL)


def wage_grid(w_min, w_max, steps: int) -> list[Fraction]:
    w_min, w_max = to_fraction(w_min), to_fraction(w_max)
    if isinstance(steps, bool) or int(steps) != steps or steps < 1:
        raise ParameterError("steps must be a positive integer")
    steps = int(steps)
    if steps == 1:
        if w_min != w_max:
            raise ParameterError("a single-step sweep needs w_min == w_max")
        return [w_min]
    if not w_min < w_max:
        raise ParameterError("need w_min < w_max")
    h = (w_max - w_min) / (steps - 1)
    return [w_min + i * h for i in range(steps)]


def wage_sweep(params: IslandParams, w_min, w_max, steps: int) -> list[RegimeSolution]:
    """Solutions on an evenly spaced wage grid of ``steps`` points (ends included)."""
    grid = wage_grid(w_min, w_max, steps)
    if grid[0] <= 0 or grid[-1] >= params.productivity:
        raise ParameterError("sweep must lie strictly inside (0, productivity)")
    return [regime_solution(params, w) for w in grid]
