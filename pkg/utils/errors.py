"""Exception hierarchy shared by every twistlab package.

Each class carries the process exit code the CLI maps it to. Indices stored on
the exceptions are 0-based; messages print them 1-based.
"""

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class TwistlabError(Exception):
    exit_code = EXIT_MATH


class InputError(TwistlabError):
    """Malformed or unreadable input documents."""

    exit_code = EXIT_INPUT


class DimensionMismatch(TwistlabError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"dimension mismatch: {left} vs {right}")


class SingularMatrix(TwistlabError):
    def __init__(self, message="matrix is not invertible"):
        super().__init__(message)


class VertexOutOfRange(TwistlabError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex + 1} outside 1..{n}")


class MultipleArrows(TwistlabError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"multiple arrows {source + 1}->{target + 1}")


class MissingLoop(TwistlabError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex + 1} carries no loop")


class RrankTooLarge(TwistlabError):
    def __init__(self, vertex, rrank):
        self.vertex = vertex
        self.rrank = rrank
        super().__init__(f"vertex {vertex + 1} has reduced rank {rrank} (at most 1 allowed)")


class AxiomViolation(TwistlabError):
    def __init__(self, report):
        self.report = report
        failure = report.first_failure
        super().__init__(f"grid violates {failure.name} at {failure.describe_witness()}")


class NotAssociative(TwistlabError):
    def __init__(self, triple, reason="product not associative"):
        self.triple = triple
        super().__init__(f"{reason} on basis element(s) {tuple(i + 1 for i in triple)}")


class ConditionViolated(TwistlabError):
    """A classification datum breaks one of its defining conditions.

    ``arrow`` is a (source, target) pair or None, ``coordinate`` the offending
    basis index p or None.
    """

    def __init__(self, reason, arrow=None, coordinate=None):
        self.reason = reason
        self.arrow = arrow
        self.coordinate = coordinate
        where = []
        if arrow is not None:
            where.append(f"arrow {arrow[0] + 1}->{arrow[1] + 1}")
        if coordinate is not None:
            where.append(f"p={coordinate + 1}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{reason}{suffix}")


class NotACocycle(TwistlabError):
    def __init__(self, triple, reason="2-cocycle identity fails"):
        self.triple = triple
        if not triple:
            super().__init__(reason)
        else:
            super().__init__(f"{reason} on basis elements {tuple(i + 1 for i in triple)}")


class ImageConditionViolated(TwistlabError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"image of the cocycle is not contained in Im f at vertex {vertex + 1}")


class DegenerateParameters(TwistlabError):
    def __init__(self, x, y):
        self.x = x
        self.y = y
        super().__init__("parameters satisfy xy = 1")


class NotSplitConsistent(TwistlabError):
    def __init__(self, coordinate, reason="column sums differ from f_p^*"):
        self.coordinate = coordinate
        super().__init__(f"{reason} at p={coordinate + 1}")


class BudgetExceeded(TwistlabError):
    exit_code = EXIT_BUDGET

    def __init__(self, visited, budget):
        self.visited = visited
        self.budget = budget
        super().__init__(f"search budget of {budget} nodes exceeded ({visited} visited)")
