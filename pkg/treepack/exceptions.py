class GraphError(ValueError):
    """Invalid graph, vertex split or family parameters."""


class UnsupportedError(ValueError):
    """Parameter outside the desk-scale range an exact search supports."""


class BudgetExceeded(RuntimeError):
    def __init__(self, budget, limit):
        self.budget = budget
        self.limit = limit
        super().__init__(f"Budget exceeded: {budget} > {limit}.")


class SimulationError(RuntimeError):
    """Protocol simulation used outside its round range."""


class GraphFormatError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ProtocolLimitationWarning(UserWarning):
    """Block detection protocol disagrees with the articulation-point oracle."""
