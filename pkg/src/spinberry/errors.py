"""Exception types shared across the package."""


class SpinberryError(Exception):
    """Base class for all package-specific errors."""


class UndefinedPeriodError(SpinberryError):
    """The field rotation period is undefined (omega_prime == 0)."""


class DegenerateLambdaError(SpinberryError):
    """The effective Rabi rate vanishes, so the state period is undefined."""


class AmplitudeVanishedError(SpinberryError):
    """|C1(t)| is numerically zero; the complex phase angle diverges."""


class NoSolutionError(SpinberryError):
    """No real commensurate period exists for the requested cycle counts."""


class NoPositiveRootError(SpinberryError):
    """The commensurability condition has real roots, but none is positive."""


class ExtrapolationError(SpinberryError):
    """An adiabatic extrapolation sequence failed to converge."""
