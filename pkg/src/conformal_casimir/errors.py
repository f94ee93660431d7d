"""Exception types raised by the library."""


class DomainError(ValueError):
    """An input lies outside the domain where an operation is defined."""


class BoundaryConditionError(ValueError):
    """A boundary condition is not preserved by the requested conformal map.

    Carries the offending condition and a short reason so callers (the CLI in
    particular) can report it in structured form.
    """

    def __init__(self, condition, reason):
        self.condition = condition
        self.reason = reason
        super().__init__(f"{condition}: {reason}")
