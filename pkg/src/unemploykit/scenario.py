"""Load, validate and evaluate JSON scenario files.

A scenario names a model ``kind``, its ``parameters`` and the ``outputs``
(tables) to produce. Evaluation returns plain :class:`Table` objects. The
CLI decides where they go.
"""

from __future__ import annotations

import json
from decimal import Decimal
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, NamedTuple

import jsonschema

from . import island_core as ic
from . import island_dynamics as idyn
from . import keynes, market, national_accounts as na, redistribution as rd
from ._exact import to_decimal, to_fraction
from .datasets import BASELINE_1995, baseline_1995_accounts, baseline_1995_state
from .errors import ParameterError


class ScenarioError(ParameterError):
    """A scenario file that cannot be read or does not match the schema."""


class Table(NamedTuple):
    columns: list[str]
    rows: list[dict]


@dataclass(frozen=True)
class Output:
    table: str
    path: str | None = None


@dataclass(frozen=True)
class Scenario:
    name: str
    kind: str
    parameters: dict
    outputs: tuple[Output, ...]
    source: Path | None = None
    description: str = ""


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("schema.json").read_text(encoding="utf-8"))


_VALIDATOR = jsonschema.Draft202012Validator(load_schema())


def _pointer(path) -> str:
    return "/" + "/".join(str(p).replace("~", "~0").replace("/", "~1") for p in path)


def validation_errors(doc) -> list[str]:
    """Schema violations as ``/json/pointer: message`` lines, sorted by location."""
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    return [f"{_pointer(e.absolute_path)}: {e.message}" for e in errors]


def parse_scenario(doc, source: Path | None = None) -> Scenario:
    problems = validation_errors(doc)
    if problems:
        where = f"{source}: " if source else ""
        raise ScenarioError(where + "invalid scenario\n  " + "\n  ".join(problems))
    return Scenario(
        name=doc["name"], kind=doc["kind"], parameters=doc["parameters"],
        outputs=tuple(Output(o["table"], o.get("path")) for o in doc["outputs"]),
        source=source, description=doc.get("description", ""),
    )


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"{path}: cannot read ({exc.strerror or exc})") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: not valid JSON ({exc})") from exc
    return parse_scenario(doc, path)


def bundled_dir():
    return resources.files(__package__).joinpath("scenarios")


# -- per-kind evaluation -----------------------------------------------------


def _table(rows: list[dict], columns: list[str] | None = None) -> Table:
    if columns is None:
        columns = list(rows[0]) if rows else []
    return Table(columns, rows)


def _require(params: dict, key: str, table: str) -> dict:
    if key not in params:
        raise ParameterError(f"table {table!r} needs a {key!r} section in parameters")
    return params[key]


def _island(p: dict | None) -> ic.IslandParams:
    return ic.IslandParams(**(p or {}))


_SOLUTION_COLUMNS = ["wage", "jornada", "production", "worker_income", "employer_income", "regime"]


def _run_island(params: dict, table: str) -> Table:
    island = _island(params.get("island"))
    if table == "sweep":
        s = _require(params, "sweep", table)
        sols = ic.wage_sweep(island, s["w_min"], s["w_max"], s["steps"])
    else:
        sols = [ic.solidarity_solution(island)]
        sols += [ic.regime_solution(island, w) for w in params.get("wages", [])]
    return _table([sol.as_row() for sol in sols], _SOLUTION_COLUMNS)


def _ledger_config(params: dict) -> idyn.SimConfig:
    keys = ("price", "wage", "initial_jornada", "money_supply", "max_days", "deficit_tolerance")
    kwargs = {k: params[k] for k in keys if k in params}
    return idyn.SimConfig(island=_island(params.get("island")), **kwargs)


def _run_ledger(params: dict, table: str) -> Table:
    config = _ledger_config(params)
    if table == "undercut":
        u = _require(params, "undercut", table)
        trace = idyn.run_undercut_sim(
            config, u["n_candidates"],
            undercut_step=to_fraction(u.get("step", "1/2")),
            max_rounds=u.get("max_rounds", 100),
        )
        return _table(idyn.undercut_rows(trace), ["round", "wage", "jornada", "worker_income", "terminal"])
    if "agents" in params:
        agents = [idyn.AgentSpec(**{**a, "role": idyn.Role[a["role"].upper()]}) for a in params["agents"]]
    else:
        agents = idyn.castaway_agents(money_supply=config.money_supply)
    traj = idyn.run_savings_sim(config, agents)
    if table == "ledger":
        return _table(idyn.ledger_rows(traj))
    rows = idyn.daily_totals(traj)
    for r in rows:
        r["terminal"] = traj.terminal.value if r is rows[-1] else ""
    return _table(rows)


def _accounts(params: dict) -> na.NationalAccounts:
    if "dataset" in params:
        return baseline_1995_accounts()
    if "books" in params:
        books = [na.book_from_record(b) for b in params["books"]]
    else:
        books = na.read_log(Path(params["_base_dir"]) / params["log"])
    keys = ("gov_wages", "gov_purchases", "gov_investment", "particulars_investment", "depreciation", "tolerance")
    kwargs = {k: to_decimal(params[k]) for k in keys if k in params}
    return na.aggregate(books, **kwargs)


def _run_accounts(params: dict, table: str) -> Table:
    acc = _accounts(params)
    acc.check()
    if table == "accounts":
        rows = acc.as_rows() + [{"item": "S", "amount": na.national_saving(acc)}]
        return _table(rows, ["item", "amount"])
    population = params.get("population")
    if population is None and "dataset" in params:
        population = BASELINE_1995["population"]
    if population is None:
        raise ParameterError("table 'per_capita' needs 'population'")
    pc = na.per_capita(acc.PBI, population)
    cents = Decimal("0.01")
    return _table([{"PBI": acc.PBI, "population": population,
                    "annual": pc.annual.quantize(cents), "monthly": pc.monthly.quantize(cents)}])


def _macro(params: dict) -> tuple[keynes.MacroState, float | None, float | None]:
    if "dataset" in params:
        base = baseline_1995_state()
        b = BASELINE_1995
        x, m = float(b["X"]), float(b["M"])
        fields = {k: params.get(k, getattr(base, k)) for k in ("c", "Iv", "G", "Xn")}
        y = params.get("Y", base.Y)
        ratio = base.employment_ratio
    else:
        fields = {k: params[k] for k in ("c", "Iv", "G", "Xn")}
        y = params.get("Y", keynes.equilibrium_output(**fields))
        x, m = None, None
        ratio = 1.0
    x, m = params.get("X", x), params.get("M", m)
    q = keynes.overproduction(y, **fields)
    return keynes.MacroState(Y=y, Q=q, employment_ratio=ratio, **fields), x, m


def _run_keynes(params: dict, table: str) -> Table:
    state, x, m = _macro(params)
    rate = params.get("unemployment_rate", BASELINE_1995["unemployment_rate"] if "dataset" in params else 0.0)
    if table == "summary":
        gap = keynes.employment_gap(rate, state.Y)
        items = [
            ("c", state.c), ("m", state.m), ("autonomous", state.autonomous),
            ("Y_equilibrium", state.m * state.autonomous), ("Y", state.Y), ("Q", state.Q),
            ("unemployment_rate", rate), ("output_gap", gap.delta_y),
        ]
        return _table([{"item": k, "value": v} for k, v in items], ["item", "value"])
    if table == "demand_lines":
        rows = keynes.demand_lines(state.c, state.Iv, state.G, state.Xn,
                                        params.get("y_max"), params.get("points", 41))
        return _table(rows)
    if table == "exports":
        if x is None or m is None:
            raise ParameterError("table 'exports' needs X and M")
        r = keynes.exports_scenario(
            state, x, m,
            export_growth=params.get("export_growth", 1.0),
            import_growth=params.get("import_growth", 0.5),
            unemployment_rate=rate,
            convention=params.get("convention", "rounded"),
        )
        return _table([r._asdict()])
    shifts = _require(params, "c_shifts", table)
    rows = [{"c_old": state.c, "c_new": c, **keynes.consumption_shift(state, c)._asdict()} for c in shifts]
    return _table(rows)


_DEFAULT_P = [i / 50 for i in range(11)]


def _run_redistribution(params: dict, table: str) -> Table:
    split = rd.SectorSplit.calibrate(params["f1"], params["c1"], params["c"], params.get("f2"))
    base_y = params["Y"]
    if table == "redistribution":
        t = rd.redistribution_sweep(split, params.get("p_list", _DEFAULT_P), base_y)
        rows = []
        for r in t.rows:
            row = r.as_row()
            row.update({"Y_k": r.Y / 1000, "Y1_k": r.Y1 / 1000, "Y23_k": r.Y23 / 1000})
            rows.append(row)
        cols = ["p", "c", "m", "Y", "f1", "Y1", "Y23", "Y_k", "Y1_k", "Y23_k", "pct_Y", "pct_Y1", "pct_Y23"]
        return _table(rows, cols)
    if table == "threshold":
        target = params.get("target_growth_pct", 20.0)
        t = rd.redistribution_sweep(split, params.get("p_list", _DEFAULT_P), base_y, target)
        exact = rd.growth_threshold(split, target / 100)
        return _table([{"target_growth_pct": target, "tabulated_p": t.threshold_p, "exact_p": exact}])
    if table == "sector_incomes":
        fig = params.get("series", {})
        return _table(rd.sector_income_series(split, base_y, fig.get("p_max", 0.2), fig.get("points", 41)))
    s = _require(params, "schedule", table)
    steps = rd.gradual_schedule(s["target_p"], s["step_p"], split, base_y)
    cols = ["period", "p", "increment", "wage_increase_pct", "expected_sales_growth_pct",
            "income_growth_pct", "Y", "Y1"]
    rows = [{c: getattr(st, c) for c in cols} for st in steps]
    return _table(rows, cols)


def _curve(d: dict) -> market.LinearCurve:
    return market.LinearCurve(d["intercept"], d["slope"])


def _run_market(params: dict, table: str) -> Table:
    if table == "statics":
        s = _require(params, "statics", table)
        prod = market.ConcaveProduction(**s["production"])
        share = market.ConsumptionShare.from_spec(s["share"])
        dem = market.WageDemand(s["autonomous"], s["wages"][0], share)
        rows = [r._asdict() for r in market.wage_comparative_statics(prod, dem, s["wages"])]
        return _table(rows, ["wage", "gamma", "N", "Y", "corner"])
    if table == "long_run":
        lr = _require(params, "long_run", table)
        rows = market.long_run_series(lr["productivity"], lr["gamma"], lr["autonomous"], lr.get("base_slope", 1.0))
        return _table([r._asdict() for r in rows], ["t", "productivity", "autonomous", "Y", "N"])
    cases = _require(params, "cases", table)
    rows = []
    for case in cases:
        supply, demand = _curve(case["supply"]), _curve(case["demand"])
        label = case["label"]
        if table == "curves":
            eq = market.linear_equilibrium(supply, demand)
            lo, hi = case.get("price_range", (0.0, 2 * eq.price if eq.price > 0 else 1.0))
            for r in market.supply_demand_series(supply, demand, lo, hi, case.get("points", 21)):
                rows.append({"label": label, **r})
            continue
        config = market.TatonnementConfig(
            speed=case["speed"], initial_price=case["initial_price"],
            tolerance=case.get("tolerance", 1e-9),
            max_iterations=case.get("max_iterations", 100_000),
        )
        result = market.tatonnement(supply, demand, config)
        if table == "tatonnement":
            for i, price in enumerate(result.prices):
                rows.append({"label": label, "step": i, "price": price, "gap": price - result.equilibrium.price})
        else:
            rows.append({
                "label": label,
                "P_eq": result.equilibrium.price,
                "Q_eq": result.equilibrium.quantity,
                "economic": result.equilibrium.economic,
                "factor": market.adjustment_factor(supply, demand, config.speed),
                "predicted": "stable" if market.is_stable(supply, demand, config.speed) else "unstable",
                "verdict": result.verdict.value,
                "steps": result.steps,
                "final_price": result.prices[-1],
            })
    columns = {
        "curves": ["label", "P", "demand", "supply", "excess"],
        "tatonnement": ["label", "step", "price", "gap"],
        "stability": ["label", "P_eq", "Q_eq", "economic", "factor", "predicted", "verdict", "steps", "final_price"],
    }[table]
    return _table(rows, columns)


_RUNNERS: dict[str, Callable[[dict, str], Table]] = {
    "Island": _run_island,
    "Ledger": _run_ledger,
    "Accounts": _run_accounts,
    "Keynes": _run_keynes,
    "Redistribution": _run_redistribution,
    "Market": _run_market,
}


def evaluate(scenario: Scenario) -> list[tuple[Output, Table]]:
    """Compute every requested table, in the order requested."""
    params = dict(scenario.parameters)
    base_dir = scenario.source.parent if scenario.source else Path.cwd()
    params["_base_dir"] = str(base_dir)
    runner = _RUNNERS[scenario.kind]
    cache: dict[str, Table] = {}
    results = []
    for out in scenario.outputs:
        if out.table not in cache:
            cache[out.table] = runner(params, out.table)
        results.append((out, cache[out.table]))
    return results
