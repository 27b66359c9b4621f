"""Exception hierarchy shared by every model module.

Two families matter to callers (and to the CLI exit codes):

* ``ParameterError`` -- inputs violate an operation's preconditions.
* ``ModelError`` -- inputs are well formed but the model has no answer
  (no equilibrium, divergent multiplier, inconsistent books, ...).
"""


class ParameterError(ValueError):
    """Inputs violate a documented precondition."""


class ModelError(RuntimeError):
    """The model cannot produce a result for otherwise valid inputs."""


# island
class InvalidWage(ParameterError):
    pass


class NoSurplus(ParameterError):
    pass


# ledger simulation
class ConfigError(ParameterError):
    pass


class InfeasibleCredit(ModelError):
    pass


# national accounts
class InconsistentLog(ModelError):
    pass


class InvalidTransfers(ModelError):
    pass


class IdentityViolation(ModelError):
    """An accounting identity failed on constructed accounts (a bug)."""


# keynes / redistribution
class DomainError(ParameterError):
    pass


class MultiplierDivergence(ModelError):
    pass


# market
class NoEquilibrium(ModelError):
    pass


class NoInteriorEquilibrium(ModelError):
    pass
