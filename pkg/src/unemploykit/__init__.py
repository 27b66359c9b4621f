"""Desk-scale models of wages, demand and unemployment.

Submodules:

* ``island_core`` and ``island_dynamics``: a three-person economy, solved in
  closed form and simulated day by day with an exact cash ledger.
* ``national_accounts``: value added, the expenditure identity and sector incomes.
* ``keynes``: the consumption multiplier and policy arithmetic around it.
* ``redistribution``: shifting income shares toward a high-spending sector.
* ``market``: price adjustment stability, diminishing-returns equilibrium and
  long-run employment under rising productivity.
"""

__version__ = "0.1.0"
