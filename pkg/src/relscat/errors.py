"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: configuration problems exit 2, scene
validation problems exit 3, numerical failures exit 4.
"""


class RelscatError(Exception):
    """Base class for all package-specific errors."""


class DomainError(RelscatError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(RelscatError, ValueError):
    """A run/discretization parameter is invalid (grid too small, bad spec)."""


class SceneError(RelscatError, ValueError):
    """A scene is structurally invalid (overlap, dimension mismatch, N too small)."""


class DegenerateSceneError(SceneError):
    """A continuum of distance minimizers was detected; the strict local
    convexity hypothesis near the closest points is violated."""


class NumericalError(RelscatError, RuntimeError):
    """A numerical procedure failed to converge or produced unusable output."""


class QuadratureError(NumericalError):
    """Adaptive quadrature could not reach the requested tolerance."""


class InputError(RelscatError, ValueError):
    """Input data handed to an analysis routine is unusable."""
