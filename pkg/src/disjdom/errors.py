"""Exception hierarchy shared by every module of the package."""


class DisjdomError(Exception):
    """Base class for all errors raised by disjdom."""


class GraphInputError(DisjdomError, ValueError):
    """A graph, vertex, vertex set or ordering violates its preconditions."""


class ParseError(GraphInputError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotConnected(GraphInputError):
    pass


class NotProperInterval(GraphInputError):
    pass


class NotBco(GraphInputError):
    pass


class MinDegreeTooLow(GraphInputError):
    pass


class InvalidCertificate(GraphInputError):
    """A claimed solution fails verification on the graph it belongs to."""


class Uncoverable(DisjdomError, ValueError):
    pass


class BudgetExceeded(DisjdomError, RuntimeError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"search node budget of {budget} exhausted")
