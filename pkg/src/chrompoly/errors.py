"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input: loops, out-of-range endpoints, missing edges."""


class PolynomialError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""

    def __init__(self, what, budget):
        super().__init__(f"{what}: enumeration budget of {budget} exceeded")
        self.what = what
        self.budget = budget


class TheoremViolation(AssertionError):
    """Two quantities that must agree did not.

    Carries the offending graph and both sides of the identity so that a
    counterexample can be reported verbatim.
    """

    def __init__(self, name, graph, lhs, rhs, detail=""):
        msg = f"{name} violated on {graph!r}: {lhs} != {rhs}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.name = name
        self.graph = graph
        self.lhs = lhs
        self.rhs = rhs
