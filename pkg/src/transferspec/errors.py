"""Exception types shared across the toolkit."""


class TransferSpecError(Exception):
    """Base class for all toolkit errors."""


class NotExpanding(TransferSpecError):
    """Map derivative fell below the uniform expansion threshold."""


class NewtonDivergence(TransferSpecError):
    """Inverse-branch solve failed to reach the residual tolerance."""


class BranchExplosion(TransferSpecError):
    """Requested branch order would enumerate too many inverse branches."""


class EmptyProbeSet(TransferSpecError):
    """Operator-norm estimation called without probe functions."""


class DegenerateLead(TransferSpecError):
    """Leading eigenvalue is not simple at the working resolution."""


class NearSingular(TransferSpecError):
    """Resolvent requested too close to the spectrum, or solve lost accuracy."""


class ContourTooClose(TransferSpecError):
    """An eigenvalue lies too close to the quadrature contour."""


class MatchFailure(TransferSpecError):
    """Cross-resolution spectra disagree on the number of large eigenvalues."""


class DegenerateFit(TransferSpecError):
    """Too few usable data points for a regression fit."""


class ConfigError(TransferSpecError):
    """Experiment configuration is missing, malformed, or inconsistent."""
