"""Exception types shared across the solver stack."""


class SodbenchError(Exception):
    """Base class for all solver-specific failures."""


class InvalidConfig(SodbenchError):
    """A run/grid/scheme configuration violates its constraints."""


class NonPhysicalState(SodbenchError):
    """A state with non-positive density or pressure was produced.

    Carries the offending cell index and time step when raised from the
    time integrator, so blow-ups can be located.
    """

    def __init__(self, message: str, cell: int | None = None, step: int | None = None):
        super().__init__(message)
        self.cell = cell
        self.step = step


class NoConvergence(SodbenchError):
    """The exact Riemann pressure iteration hit its iteration cap."""


class VacuumGenerated(SodbenchError):
    """The two states would generate a vacuum region (excluded by design)."""


class DegenerateJump(SodbenchError):
    """Jump relation requested across states with no density jump."""
