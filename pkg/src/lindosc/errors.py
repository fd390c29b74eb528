"""Exception types shared across the package."""


class LindoscError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(LindoscError):
    """Malformed configuration or model document."""


class NotSPD(LindoscError):
    """Matrix expected to be symmetric positive definite is not."""


class NonPositiveDeterminant(LindoscError):
    """Covariance determinant is not strictly positive."""


class UnphysicalState(LindoscError):
    """State violates the minimum-uncertainty bound beyond tolerance."""


class SingularSigma(LindoscError):
    """Covariance matrix is numerically singular."""


class SingularDiffusion(LindoscError):
    """Diffusion matrix has non-positive determinant; anisotropy is undefined."""


class NotStable(LindoscError):
    """Drift matrix is not Hurwitz; no stationary covariance exists."""


class SingularSystem(LindoscError):
    """Stationary-covariance linear system is numerically singular."""


class BracketError(LindoscError):
    """Search range does not bracket the analytic optimum."""


class BoxTooSmall(LindoscError):
    """Quadrature box does not cover enough of the Gaussian mass."""


class PositivityLost(LindoscError):
    """Integrated covariance lost positive definiteness."""

    def __init__(self, message, time=None):
        super().__init__(message)
        self.time = time
