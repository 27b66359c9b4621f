"""Random input generators shared by several test modules."""

import random
from decimal import Decimal as D

from unemploykit.national_accounts import FirmBook, IncomeFlows, Transfers


def random_log(rng: random.Random, k: int) -> list[FirmBook]:
    """k firms with a random inter-firm trade matrix so sales and purchases match."""
    trade = [[D(rng.randint(0, 10**6)) / 100 if i != j else D(0) for j in range(k)] for i in range(k)]

    def amt():
        return D(rng.randint(0, 10**7)) / 100

    return [
        FirmBook(
            ven_p=amt(), ven_g=amt(), ven_x=amt(), comp_x=amt(),
            ven_e=sum(trade[i], D(0)), comp_e=sum((trade[j][i] for j in range(k)), D(0)),
            var_stk=amt() - amt(), inv=amt(), voluntary_stock=rng.random() < 0.3,
        )
        for i in range(k)
    ]


def cents(rng: random.Random, top: int = 10**7) -> D:
    return D(rng.randint(0, top)) / 100


def random_flows(rng: random.Random) -> IncomeFlows:
    """Income flows with transfers that cancel exactly."""
    r = [cents(rng) - cents(rng) for _ in range(3)]
    return IncomeFlows(
        W_E=cents(rng), B_E=cents(rng), T_E=cents(rng), T_P=cents(rng), J=cents(rng), Dint=cents(rng),
        R=Transfers(r[0], r[1], r[2], -sum(r, D(0))),
    )
