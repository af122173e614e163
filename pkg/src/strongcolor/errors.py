"""Exception types shared by the algorithms, the oracle and the CLI."""


class PreconditionError(ValueError):
    """Input does not satisfy an algorithm's hypothesis.

    ``witness`` is a tuple of edges (sorted vertex tuples) certifying the
    violation, e.g. two edges meeting in fewer than two vertices.
    """

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class InternalVerificationError(RuntimeError):
    """An algorithm produced a coloring that fails its own guarantee."""

    def __init__(self, message, failing_edges=()):
        super().__init__(message)
        self.failing_edges = list(failing_edges)


class MissingVertexError(KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"coloring has no color for vertex {self.vertex}"


class OracleSizeError(ValueError):
    """Ground set exceeds the oracle's configured size bound."""


class BudgetExhausted(RuntimeError):
    """The search budget ran out before the question was settled."""

    def __init__(self, message, explored=0):
        super().__init__(message)
        self.explored = explored


class GenerationError(RuntimeError):
    """Rejection sampling failed within its attempt budget."""


class ParseError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
