"""Exception hierarchy shared by the solver modules."""


class SetOptError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SetOptError, ValueError):
    """Malformed input: dimension mismatch, zero vector, bad index."""


class ValidationError(InputError):
    """Problem data violating a standing assumption (e.g. a non-pointed cone)."""


class EmptySetError(SetOptError):
    """An operation that needs a nonempty polyhedron received an empty one."""


class EmptyValueError(EmptySetError):
    """F(x) is empty, i.e. x lies outside dom F."""

    def __init__(self, x):
        super().__init__(f"x = {list(map(str, x))} is not in dom F")
        self.x = x


class LPAnomalyError(SetOptError):
    """A linear program expected to have an optimum came back infeasible or unbounded."""


class ContractError(SetOptError):
    """A caller broke a documented precondition."""
