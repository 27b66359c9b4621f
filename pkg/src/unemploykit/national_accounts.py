"""Value added, PBI (GDP) and sector incomes from firm books.

Amounts are :class:`decimal.Decimal`, so the accounting identities hold to
the last cent instead of within a float tolerance. Tolerances only apply
where two independent records of the same transactions are compared
(inter-firm sales vs inter-firm purchases).

Sectors: particulars (P), enterprises (E), government (G), external (X).
Field names follow the usual national-accounts shorthand: ``ven_*`` are a
firm's sales by buyer sector, ``comp_*`` its purchases by seller sector,
``var_stk`` the signed change in stocks and ``inv`` its own investment.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, Mapping, NamedTuple, Optional

from ._exact import to_decimal
from .errors import IdentityViolation, InconsistentLog, InvalidTransfers, ParameterError

ZERO = Decimal(0)


class SectorTag(enum.Enum):
    PARTICULARS = "P"
    ENTERPRISES = "E"
    GOVERNMENT = "G"
    EXTERNAL = "X"


@dataclass(frozen=True)
class FirmBook:
    """One firm's books for one period.

    ``voluntary_stock`` marks a stock change the firm wanted (stockpiling).
    That goes to enterprise investment I(E) rather than to unsold output Q.
    """

    ven_p: Decimal = ZERO
    ven_e: Decimal = ZERO
    ven_g: Decimal = ZERO
    ven_x: Decimal = ZERO
    comp_e: Decimal = ZERO
    comp_x: Decimal = ZERO
    var_stk: Decimal = ZERO
    inv: Decimal = ZERO
    voluntary_stock: bool = False
    firm: str = ""

    def __post_init__(self):
        for name in ("ven_p", "ven_e", "ven_g", "ven_x", "comp_e", "comp_x", "var_stk", "inv"):
            value = to_decimal(getattr(self, name))
            object.__setattr__(self, name, value)
            if name != "var_stk" and value < 0:
                raise ParameterError(f"{self.firm or 'firm'}: {name} must be >= 0")

    @property
    def ventas(self) -> Decimal:
        return self.ven_p + self.ven_e + self.ven_g + self.ven_x

    @property
    def compras(self) -> Decimal:
        return self.comp_e + self.comp_x


def value_added(book: FirmBook) -> Decimal:
    """Sales minus purchases plus stock change plus own investment.

    May come out negative; that is reported as-is, not rejected.
    """
    return book.ventas - book.compras + book.var_stk + book.inv


@dataclass(frozen=True)
class NationalAccounts:
    C: Decimal
    G: Decimal
    Iv: Decimal
    Xn: Decimal
    Q: Decimal
    PBI: Decimal
    C_P: Decimal
    I_P: Decimal
    C_G: Decimal
    I_G: Decimal
    I_E: Decimal
    W_G: Decimal
    X: Decimal
    M: Decimal
    D: Optional[Decimal] = None

    @property
    def PNI(self) -> Optional[Decimal]:
        return None if self.D is None else self.PBI - self.D

    @property
    def P_E(self) -> Decimal:
        """Enterprise production (PBI less the government's own output)."""
        return self.PBI - self.W_G

    def check(self) -> None:
        """Raise :class:`IdentityViolation` if any defining identity fails."""
        problems = []
        if self.PBI != self.C + self.G + self.Iv + self.Xn + self.Q:
            problems.append("PBI != C + G + Iv + Xn + Q")
        if self.Xn != self.X - self.M:
            problems.append("Xn != X - M")
        if self.G != self.C_G + self.W_G:
            problems.append("G != C(G) + W(G)")
        if self.Iv != self.I_P + self.I_G + self.I_E:
            problems.append("Iv != I(P) + I(G) + I(E)")
        if self.C != self.C_P:
            problems.append("C != C(P)")
        if problems:
            raise IdentityViolation("; ".join(problems))

    def as_rows(self) -> list[dict]:
        rows = [
            ("PBI", self.PBI), ("C", self.C), ("G", self.G), ("Iv", self.Iv), ("Xn", self.Xn),
            ("Q", self.Q), ("C(P)", self.C_P), ("I(P)", self.I_P), ("C(G)", self.C_G),
            ("I(G)", self.I_G), ("I(E)", self.I_E), ("W(G)", self.W_G), ("X", self.X), ("M", self.M),
        ]
        if self.D is not None:
            rows += [("D", self.D), ("PNI", self.PNI)]
        return [{"item": k, "amount": v} for k, v in rows]


def _sum(values: Iterable[Decimal]) -> Decimal:
    return sum(values, ZERO)


def from_components(
    *, C, C_G, W_G, I_P=0, I_G=0, I_E=0, X=0, M=0, Q=0, D=None
) -> NationalAccounts:
    """Assemble accounts directly from expenditure components."""
    C, C_G, W_G, I_P, I_G, I_E, X, M, Q = map(to_decimal, (C, C_G, W_G, I_P, I_G, I_E, X, M, Q))
    G = C_G + W_G
    Iv = I_P + I_G + I_E
    Xn = X - M
    acc = NationalAccounts(
        C=C, G=G, Iv=Iv, Xn=Xn, Q=Q, PBI=C + G + Iv + Xn + Q,
        C_P=C, I_P=I_P, C_G=C_G, I_G=I_G, I_E=I_E, W_G=W_G, X=X, M=M,
        D=None if D is None else to_decimal(D),
    )
    acc.check()
    return acc


def aggregate(
    books: Iterable[FirmBook],
    gov_wages=0,
    gov_purchases=None,
    gov_investment=0,
    particulars_investment=0,
    depreciation=None,
    tolerance=0,
) -> NationalAccounts:
    """Sum firm books into national accounts.

    Sales to particulars split into consumption C(P) and housing investment
    I(P). Sales to government split into purchases C(G) and public
    investment I(G). The caller supplies the investment parts and the
    consumption parts are the remainder. If ``gov_purchases`` is given it
    must match that remainder.

    Raises:
        InconsistentLog: inter-firm sales and purchases disagree beyond
            ``tolerance``, or a declared split exceeds the sales it splits.
    """
    books = list(books)
    tol = to_decimal(tolerance)
    W_G = to_decimal(gov_wages)
    I_G = to_decimal(gov_investment)
    I_P = to_decimal(particulars_investment)

    ven_e = _sum(b.ven_e for b in books)
    comp_e = _sum(b.comp_e for b in books)
    if abs(ven_e - comp_e) > tol:
        raise InconsistentLog(f"inter-firm sales {ven_e} != inter-firm purchases {comp_e}")

    ven_p = _sum(b.ven_p for b in books)
    ven_g = _sum(b.ven_g for b in books)
    if I_P > ven_p:
        raise InconsistentLog(f"I(P)={I_P} exceeds sales to particulars {ven_p}")
    if I_G > ven_g:
        raise InconsistentLog(f"I(G)={I_G} exceeds sales to government {ven_g}")
    C_G = ven_g - I_G
    if gov_purchases is not None and abs(to_decimal(gov_purchases) - C_G) > tol:
        raise InconsistentLog(f"C(G)={gov_purchases} but the books imply {C_G}")

    return from_components(
        C=ven_p - I_P,
        C_G=C_G,
        W_G=W_G,
        I_P=I_P,
        I_G=I_G,
        I_E=_sum(b.inv + (b.var_stk if b.voluntary_stock else ZERO) for b in books),
        X=_sum(b.ven_x for b in books),
        M=_sum(b.comp_x for b in books),
        Q=_sum(b.var_stk for b in books if not b.voluntary_stock),
        D=depreciation,
    )


class Transfers(NamedTuple):
    R_E: Decimal = ZERO
    R_P: Decimal = ZERO
    R_G: Decimal = ZERO
    R_X: Decimal = ZERO


@dataclass(frozen=True)
class IncomeFlows:
    W_E: Decimal = ZERO
    B_E: Decimal = ZERO
    T_E: Decimal = ZERO
    T_P: Decimal = ZERO
    J: Decimal = ZERO
    Dint: Decimal = ZERO
    R: Transfers = Transfers()

    def __post_init__(self):
        for f in ("W_E", "B_E", "T_E", "T_P", "J", "Dint"):
            object.__setattr__(self, f, to_decimal(getattr(self, f)))
        object.__setattr__(self, "R", Transfers(*map(to_decimal, self.R)))


@dataclass(frozen=True)
class SectorIncomes:
    Y_E: Decimal
    Y_P: Decimal
    Y_G: Decimal
    Y_X: Decimal
    flows: IncomeFlows

    @property
    def total(self) -> Decimal:
        return self.Y_E + self.Y_P + self.Y_G + self.Y_X


def sector_incomes(
    accounts: NationalAccounts, flows: IncomeFlows, public_wages_to: str = "particulars"
) -> SectorIncomes:
    """Split PBI into the incomes of the four sectors.

    Enterprises keep production less wages, profits and taxes paid out.
    Particulars get wages, profits, pensions ``J`` and transfers, less
    personal tax. Government gets taxes less pensions and external interest
    ``Dint``. The external sector gets that interest.

    Public-sector wages W(G) are government output. With the default
    ``public_wages_to="particulars"`` they are income of the civil servants
    who earn them. ``"government"`` books them as the government's own
    income instead. Either way the four incomes add up to PBI.

    Raises:
        InvalidTransfers: the R terms do not cancel.
    """
    R = flows.R
    if sum(R, ZERO) != 0:
        raise InvalidTransfers(f"transfers sum to {sum(R, ZERO)}, expected 0")
    if public_wages_to not in ("particulars", "government"):
        raise ParameterError("public_wages_to must be 'particulars' or 'government'")
    to_p = accounts.W_G if public_wages_to == "particulars" else ZERO
    to_g = accounts.W_G - to_p

    y_e = accounts.P_E - flows.W_E - flows.B_E - flows.T_E + R.R_E
    y_p = flows.W_E + flows.B_E - flows.T_P + flows.J + R.R_P + to_p
    y_g = flows.T_E + flows.T_P - flows.J - flows.Dint + R.R_G + to_g
    y_x = flows.Dint + R.R_X
    incomes = SectorIncomes(y_e, y_p, y_g, y_x, flows)
    if incomes.total != accounts.PBI:
        raise IdentityViolation(f"sector incomes sum to {incomes.total}, PBI is {accounts.PBI}")
    return incomes


def national_saving(accounts: NationalAccounts) -> Decimal:
    """Y - C - G, cross-checked against Iv + Xn + Q."""
    s = accounts.PBI - accounts.C - accounts.G
    if s != accounts.Iv + accounts.Xn + accounts.Q:
        raise IdentityViolation(f"Y-C-G={s} but Iv+Xn+Q={accounts.Iv + accounts.Xn + accounts.Q}")
    return s


class PerCapita(NamedTuple):
    annual: Decimal
    monthly: Decimal


def per_capita(pbi, population, unit=1_000_000) -> PerCapita:
    """PBI per inhabitant. ``pbi`` is in units of ``unit`` pesos (M$ by default)."""
    if population <= 0:
        raise ParameterError("population must be positive")
    annual = to_decimal(pbi) * to_decimal(unit) / to_decimal(population)
    return PerCapita(annual, annual / 12)


def real_growth(nominal_t0, nominal_t1, deflator) -> float:
    """Percent growth of ``nominal_t1 / deflator`` over ``nominal_t0``."""
    if nominal_t0 <= 0 or nominal_t1 <= 0 or deflator <= 0:
        raise ParameterError("values and deflator must be positive")
    return (nominal_t1 / deflator / nominal_t0 - 1) * 100


# -- I/O ----------------------------------------------------------------------

_AMOUNT_FIELDS = ("ven_p", "ven_e", "ven_g", "ven_x", "comp_e", "comp_x", "var_stk", "inv")


def book_from_record(rec: Mapping) -> FirmBook:
    """Accept flat ``ven_p``-style fields or nested ``{"ven": {"P": ..}, "comp": {"E": ..}}``."""
    data = {k: rec[k] for k in _AMOUNT_FIELDS if k in rec}
    for group, sectors in (("ven", "PEGX"), ("comp", "EX")):
        sub = rec.get(group)
        if sub is None:
            continue
        for key, amount in sub.items():
            if key.upper() not in sectors:
                raise ParameterError(f"unknown sector {key!r} under {group!r}")
            name = f"{group}_{key.lower()}"
            if name in data:
                raise ParameterError(f"{name} given twice")
            data[name] = amount
    unknown = set(rec) - set(_AMOUNT_FIELDS) - {"ven", "comp", "voluntary_stock", "firm", "period"}
    if unknown:
        raise ParameterError(f"unknown fields {sorted(unknown)}")
    # json floats would lose cents; route them through their text form
    data = {k: to_decimal(v) for k, v in data.items()}
    return FirmBook(**data, voluntary_stock=bool(rec.get("voluntary_stock", False)), firm=str(rec.get("firm", "")))


def read_log(path) -> list[FirmBook]:
    """Read a line-delimited JSON transaction log (one firm-period per line)."""
    books = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line, parse_float=Decimal)
            except json.JSONDecodeError as exc:
                raise ParameterError(f"{path}:{lineno}: {exc}") from exc
            books.append(book_from_record(rec))
    return books


def accounts_csv(accounts: NationalAccounts) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["item", "amount"])
    for row in accounts.as_rows():
        writer.writerow([row["item"], format(row["amount"], "f")])
    return buf.getvalue()
