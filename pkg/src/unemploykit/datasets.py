"""Reference data: Argentina 1995 macro aggregates, in millions of pesos (M$)."""

from decimal import Decimal

from .national_accounts import NationalAccounts, from_components

BASELINE_1995_VERSION = "1995.1"

BASELINE_1995 = {
    "version": BASELINE_1995_VERSION,
    "units": "M$",
    "PBI": Decimal(281_000),
    "C": Decimal(194_000),
    "G": Decimal(36_700),
    "Iv_plus_Q": Decimal(49_900),
    "Xn": Decimal(400),
    "X": Decimal(23_800),
    "M": Decimal(23_400),
    "c": 0.69,
    "unemployment_rate": 0.20,
    "population": 33_000_000,
}


def baseline_1995_accounts() -> NationalAccounts:
    """Table of 1995 aggregates as :class:`NationalAccounts`.

    The source reports investment plus stock change as one figure and the
    economy is taken to be in equilibrium, so all of it is booked as Iv (Q = 0),
    under enterprise investment. Government spending is only given in total,
    so it is booked as purchases C(G) with W(G) = 0. Neither choice moves PBI.
    """
    b = BASELINE_1995
    return from_components(C=b["C"], C_G=b["G"], W_G=0, I_E=b["Iv_plus_Q"], X=b["X"], M=b["M"], Q=0)


def baseline_1995_state():
    """The 1995 aggregates as a :class:`~unemploykit.keynes.MacroState`."""
    from .keynes import MacroState, overproduction

    b = BASELINE_1995
    Y, c = float(b["PBI"]), b["c"]
    Iv, G, Xn = float(b["Iv_plus_Q"]), float(b["G"]), float(b["Xn"])
    return MacroState(
        Y=Y, c=c, Iv=Iv, G=G, Xn=Xn,
        Q=overproduction(Y, c, Iv, G, Xn),
        employment_ratio=1 - b["unemployment_rate"],
    )
