"""Exception types shared across the package."""


class InvalidParameters(ValueError):
    """Input tuple does not describe a degree-p extension we can analyze."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InternalInvariant(AssertionError):
    """An identity that must hold for every valid input failed.

    Seeing this means a bug in the package or a counterexample to a
    published claim; it is never caused by bad user input.
    """
