"""Exception types shared across the library.

Every error raised on purpose derives from SeymourLabError so CLI code can
map library failures to a stable exit code.
"""


class SeymourLabError(Exception):
    """Base class for all library errors."""


class LoopArc(SeymourLabError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex} is not allowed")
        self.vertex = vertex


class VertexOutOfRange(SeymourLabError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} outside range 0..{n - 1}")
        self.vertex = vertex
        self.n = n


class NotBalanced(SeymourLabError):
    pass


class NotEulerian(SeymourLabError):
    pass


class HasDigon(SeymourLabError):
    pass


class EvenOrder(SeymourLabError):
    pass


class OddOrder(SeymourLabError):
    pass


class BadParameters(SeymourLabError):
    pass


class GenerationBudgetExceeded(SeymourLabError):
    pass


class OrderTooLarge(SeymourLabError):
    pass


class InvalidDecomposition(SeymourLabError):
    def __init__(self, problems=()):
        super().__init__("invalid cycle decomposition: " + "; ".join(problems))
        self.problems = tuple(problems)


class IndexOutOfRange(SeymourLabError):
    pass


class BudgetExhausted(SeymourLabError):
    """Search ran out of budget before reaching a definitive answer."""


class TooLarge(SeymourLabError):
    pass


class InvalidSkeleton(SeymourLabError):
    def __init__(self, problems=()):
        super().__init__("invalid skeleton: " + "; ".join(problems))
        self.problems = tuple(problems)


class NotApplicable(SeymourLabError):
    """A theorem's hypothesis does not hold (or could not be confirmed)."""


class UnknownProperty(SeymourLabError):
    pass


class ParseError(SeymourLabError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class TheoremViolation(SeymourLabError):
    """A conclusion that is supposed to be guaranteed failed on a concrete
    instance.  Carrying the instance around matters: this is the one output
    of the tool that would be genuinely newsworthy."""

    def __init__(self, message: str, digraph=None):
        super().__init__(message)
        self.digraph = digraph
