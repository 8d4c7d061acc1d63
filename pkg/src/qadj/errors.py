"""Exception hierarchy with stable exit codes for the batch CLI.

Exit code map: 2 = bad input, 3 = resolution obstruction (a blow-up center
that is not rational), 4 = a configured limit was exceeded.
"""


class QadjError(Exception):
    exit_code = 2


class InputError(QadjError):
    exit_code = 2


class ParseError(InputError):
    """Syntax error in the polynomial grammar, with a 0-based position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class GermInvariantError(InputError):
    """A curve germ violates a declared invariant (origin, square-free, coprime)."""


class SchemaError(InputError):
    """A resolution-graph document violates the schema or a graph invariant."""


class ChartlessGraphError(InputError):
    """Operation needs chart data but the graph was loaded without charts."""


class BranchNotIrreducibleError(InputError):
    """A branch splits into several arcs somewhere in the blow-up tower."""

    def __init__(self, branch_index, detail=""):
        msg = "branch %d is not analytically irreducible" % branch_index
        if detail:
            msg += ": " + detail
        super().__init__(msg)
        self.branch_index = branch_index


class ResolutionObstructionError(QadjError):
    exit_code = 3


class IrrationalCenterError(ResolutionObstructionError):
    """An infinitely near point has irrational coordinates.

    ``minimal_polynomial`` is a univariate polynomial (string, variable s)
    whose roots are the obstructing directions.
    """

    def __init__(self, minimal_polynomial):
        super().__init__(
            "blow-up center is not rational; obstruction has minimal polynomial %s"
            % minimal_polynomial
        )
        self.minimal_polynomial = minimal_polynomial


class LimitExceededError(QadjError):
    exit_code = 4
