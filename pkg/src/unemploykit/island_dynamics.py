"""Day-by-day money ledger of the island with one employer.

Each day the employer pays ``wage`` per hour for the current working day and
sells the catch at ``price``. Workers buy fish up to their spending cap, and
anyone with a daily investment plan borrows that amount from the day's savers
and spends it on fish too. Unsold fish the employer cannot eat rot.

The employer adjusts tomorrow's wage bill from today's cash deficit
(wages paid minus sales). The first cut equals the deficit. After that the
observed deficit-per-cut ratio is extrapolated to zero (a secant step). Money
is exact (:class:`~fractions.Fraction`), so the default tolerance is zero.

:func:`run_undercut_sim` is the separate wage-undercutting race: jobless
candidates keep outbidding employed workers while the employer stays sated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ._exact import to_fraction
from .errors import ConfigError, InfeasibleCredit, ModelError, ParameterError
from .island_core import IslandParams


class Role(enum.Enum):
    WORKER = "Worker"
    EMPLOYER = "Employer"


class Terminal(enum.Enum):
    EQUILIBRIUM = "Equilibrium"
    MAX_DAYS = "MaxDays"


class UndercutEnd(enum.Enum):
    SUBSISTENCE_BREACH = "SubsistenceBreach"
    MAX_ROUNDS = "MaxRounds"


@dataclass(frozen=True)
class AgentSpec:
    """One islander. ``spend_cap=None`` means no cap."""

    id: str
    role: Role
    spend_cap: Optional[Fraction] = None
    daily_borrow_and_invest: Fraction = Fraction(0)
    initial_cash: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "role", Role(self.role))
        if self.spend_cap is not None:
            object.__setattr__(self, "spend_cap", to_fraction(self.spend_cap))
            if self.spend_cap < 0:
                raise ConfigError(f"{self.id}: spend_cap must be >= 0")
        for name in ("daily_borrow_and_invest", "initial_cash"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
            if getattr(self, name) < 0:
                raise ConfigError(f"{self.id}: {name} must be >= 0")


@dataclass(frozen=True)
class SimConfig:
    island: IslandParams = field(default_factory=IslandParams)
    price: Fraction = Fraction(1)
    wage: Fraction = Fraction(4)
    initial_jornada: Fraction = Fraction(3)
    money_supply: Fraction = Fraction(24)
    max_days: int = 100
    deficit_tolerance: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("price", "wage", "initial_jornada", "money_supply", "deficit_tolerance"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if self.price <= 0 or self.wage <= 0 or self.money_supply <= 0:
            raise ConfigError("price, wage and money_supply must be positive")
        if self.initial_jornada <= 0:
            raise ConfigError("initial_jornada must be positive")
        if self.deficit_tolerance < 0:
            raise ConfigError("deficit_tolerance must be >= 0")
        if self.max_days < 1:
            raise ConfigError("max_days must be >= 1")


@dataclass(frozen=True)
class AgentDay:
    id: str
    role: Role
    wage_income: Fraction
    sales_revenue: Fraction
    purchases: Fraction
    wages_paid: Fraction
    loans: Fraction  # + borrowed, - lent
    saving: Fraction
    cash_end: Fraction


@dataclass(frozen=True)
class DailyLedger:
    day: int
    jornada: Fraction
    agents: tuple[AgentDay, ...]
    production_fish: Fraction
    sold_fish: Fraction
    employer_fish: Fraction
    spoiled_fish: Fraction
    wage_bill: Fraction
    sales: Fraction
    employer_deficit: Fraction

    @property
    def cash_total(self) -> Fraction:
        return sum((a.cash_end for a in self.agents), Fraction(0))

    def agent(self, agent_id: str) -> AgentDay:
        for a in self.agents:
            if a.id == agent_id:
                return a
        raise KeyError(agent_id)


@dataclass(frozen=True)
class SimTrajectory:
    days: tuple[DailyLedger, ...]
    terminal: Terminal
    final_jornada: Fraction
    money_supply: Fraction


def _validate(config: SimConfig, agents: Sequence[AgentSpec]) -> None:
    employers = [a for a in agents if a.role is Role.EMPLOYER]
    workers = [a for a in agents if a.role is Role.WORKER]
    if len(employers) != 1:
        raise ConfigError("exactly one employer is required")
    if len(workers) != config.island.n_workers:
        raise ConfigError(
            f"{len(workers)} worker agents but island has n_workers={config.island.n_workers}"
        )
    if config.island.n_employers != 1:
        raise ConfigError("the ledger simulation supports a single employer")
    if len({a.id for a in agents}) != len(agents):
        raise ConfigError("agent ids must be unique")
    if employers[0].daily_borrow_and_invest:
        raise ConfigError("the employer does not borrow in this model")
    cash = sum((a.initial_cash for a in agents), Fraction(0))
    if cash != config.money_supply:
        raise ConfigError(f"initial cash {cash} differs from money_supply {config.money_supply}")


def _simulate_day(day, config, agents, cash, jornada) -> DailyLedger:
    island = config.island
    employer = next(a for a in agents if a.role is Role.EMPLOYER)
    workers = [a for a in agents if a.role is Role.WORKER]

    pay = config.wage * jornada
    wage_bill = pay * len(workers)
    if cash[employer.id] < wage_bill:
        raise ConfigError(
            f"day {day}: employer holds {cash[employer.id]} but owes {wage_bill} in wages"
        )

    consumption = {}
    spare = {}
    for w in workers:
        spend = pay if w.spend_cap is None else min(pay, w.spend_cap)
        consumption[w.id] = spend
        spare[w.id] = pay - spend

    # saver -> borrower transfers, cleared before anyone buys fish
    loans = {a.id: Fraction(0) for a in agents}
    demand = sum((w.daily_borrow_and_invest for w in workers), Fraction(0))
    available = sum(spare.values(), Fraction(0))
    if demand > available:
        raise InfeasibleCredit(f"day {day}: borrowing {demand} exceeds saving {available}")
    for w in workers:
        loans[w.id] += w.daily_borrow_and_invest
    remaining = demand
    for w in workers:
        lent = min(spare[w.id], remaining)
        loans[w.id] -= lent
        remaining -= lent

    purchases = {w.id: consumption[w.id] + w.daily_borrow_and_invest for w in workers}
    sales = sum(purchases.values(), Fraction(0))

    production = island.productivity * island.n_workers * jornada
    sold = sales / config.price
    if sold > production:
        raise ModelError(f"day {day}: fish demanded {sold} exceed the catch {production}")
    employer_fish = min(island.satiation, production - sold)
    spoiled = production - sold - employer_fish

    rows = []
    for a in agents:
        if a.role is Role.EMPLOYER:
            wage_income, revenue, bought, paid = Fraction(0), sales, Fraction(0), wage_bill
        else:
            wage_income, revenue, bought, paid = pay, Fraction(0), purchases[a.id], Fraction(0)
        saving = wage_income + revenue - bought - paid
        cash[a.id] += saving + loans[a.id]
        rows.append(AgentDay(a.id, a.role, wage_income, revenue, bought, paid, loans[a.id], saving, cash[a.id]))

    return DailyLedger(
        day=day,
        jornada=jornada,
        agents=tuple(rows),
        production_fish=production,
        sold_fish=sold,
        employer_fish=employer_fish,
        spoiled_fish=spoiled,
        wage_bill=wage_bill,
        sales=sales,
        employer_deficit=wage_bill - sales,
    )


def _next_wage_bill(history: list[tuple[Fraction, Fraction]]) -> Fraction:
    bill, deficit = history[-1]
    cut = deficit
    if len(history) >= 2:
        prev_bill, prev_deficit = history[-2]
        if bill != prev_bill and deficit != prev_deficit:
            cut = deficit * (bill - prev_bill) / (deficit - prev_deficit)
    return bill - cut


def run_savings_sim(config: SimConfig, agents: Sequence[AgentSpec]) -> SimTrajectory:
    """Simulate until the employer's deficit is within tolerance or ``max_days``.

    Raises:
        ConfigError: bad agent list, or the employer cannot cover the wage bill.
        InfeasibleCredit: investors want to borrow more than was saved that day.
    """
    agents = list(agents)
    _validate(config, agents)
    cash = {a.id: a.initial_cash for a in agents}
    n = config.island.n_workers
    jornada = config.initial_jornada
    days: list[DailyLedger] = []
    history: list[tuple[Fraction, Fraction]] = []

    for day in range(1, config.max_days + 1):
        ledger = _simulate_day(day, config, agents, cash, jornada)
        days.append(ledger)
        if abs(ledger.employer_deficit) <= config.deficit_tolerance:
            return SimTrajectory(tuple(days), Terminal.EQUILIBRIUM, jornada, config.money_supply)
        history.append((ledger.wage_bill, ledger.employer_deficit))
        bill = _next_wage_bill(history)
        if bill <= 0:
            raise ModelError(f"day {day}: adjustment drove the wage bill to {bill}")
        jornada = bill / (config.wage * n)

    return SimTrajectory(tuple(days), Terminal.MAX_DAYS, jornada, config.money_supply)


def money_conservation_check(trajectory: SimTrajectory) -> bool:
    return all(d.cash_total == trajectory.money_supply for d in trajectory.days)


def castaway_agents(
    alberto_cap=8, antonio_invest=0, alberto_invest=0, money_supply=24
) -> list[AgentSpec]:
    """The three castaways: two workers and the boat owner holding all the cash."""
    return [
        AgentSpec("Alberto", Role.WORKER, spend_cap=alberto_cap, daily_borrow_and_invest=alberto_invest),
        AgentSpec("Antonio", Role.WORKER, daily_borrow_and_invest=antonio_invest),
        AgentSpec("Eduardo", Role.EMPLOYER, initial_cash=money_supply),
    ]


def ledger_rows(trajectory: SimTrajectory) -> list[dict]:
    """One row per agent-day."""
    return [
        {
            "day": d.day,
            "agent": a.id,
            "role": a.role.value,
            "jornada": d.jornada,
            "wage_income": a.wage_income,
            "sales_revenue": a.sales_revenue,
            "purchases": a.purchases,
            "wages_paid": a.wages_paid,
            "loans": a.loans,
            "saving": a.saving,
            "cash_end": a.cash_end,
        }
        for d in trajectory.days
        for a in d.agents
    ]


def daily_totals(trajectory: SimTrajectory) -> list[dict]:
    return [
        {
            "day": d.day,
            "jornada": d.jornada,
            "wage_bill": d.wage_bill,
            "sales": d.sales,
            "employer_deficit": d.employer_deficit,
            "production_fish": d.production_fish,
            "sold_fish": d.sold_fish,
            "employer_fish": d.employer_fish,
            "spoiled_fish": d.spoiled_fish,
            "cash_total": d.cash_total,
        }
        for d in trajectory.days
    ]


# -- wage undercutting --------------------------------------------------------

@dataclass(frozen=True)
class UndercutRound:
    round: int
    wage: Fraction
    jornada: Fraction
    worker_income: Fraction


@dataclass(frozen=True)
class UndercutTrace:
    rounds: tuple[UndercutRound, ...]
    reason: UndercutEnd


def run_undercut_sim(
    config: SimConfig,
    n_candidates: int,
    undercut_step=Fraction(1, 2),
    max_rounds: int = 100,
) -> UndercutTrace:
    """Lower the real wage by ``undercut_step`` per round while the employer stays sated.

    ``config.island.n_workers`` is the number of jobs. Hours follow the
    flexibilized branch ``j = n_employers*s / (n_workers*(r - w))``. The race
    stops at the first round whose worker income falls below subsistence, or
    after ``max_rounds`` undercuts (the workers organise and fix a common wage).
    """
    step = to_fraction(undercut_step)
    if step <= 0:
        raise ParameterError("undercut_step must be positive")
    island = config.island
    if n_candidates <= island.n_workers:
        raise ConfigError("undercutting needs more candidates than jobs")
    w = config.wage / config.price
    if w >= island.productivity:
        raise ConfigError("starting real wage leaves the employer no surplus")

    rows = []
    for k in range(max_rounds + 1):
        j = island.n_employers * island.satiation / (island.n_workers * (island.productivity - w))
        income = w * j
        rows.append(UndercutRound(k, w, j, income))
        if income < island.subsistence:
            return UndercutTrace(tuple(rows), UndercutEnd.SUBSISTENCE_BREACH)
        if k < max_rounds:
            w -= step
    return UndercutTrace(tuple(rows), UndercutEnd.MAX_ROUNDS)


def undercut_rows(trace: UndercutTrace) -> list[dict]:
    return [
        {"round": r.round, "wage": r.wage, "jornada": r.jornada, "worker_income": r.worker_income,
         "terminal": trace.reason.value if r is trace.rounds[-1] else ""}
        for r in trace.rounds
    ]
