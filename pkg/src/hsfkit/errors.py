"""Exception types shared across the toolkit."""


class HsfError(Exception):
    """Base class for toolkit errors."""


class QuadratureError(HsfError):
    """Adaptive quadrature failed to converge.

    Carries the partial estimate and the integrator's error estimate so a
    caller can decide whether the partial result is still usable.
    """

    def __init__(self, message, partial=None, error_estimate=None):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


class NoResonanceError(HsfError):
    """No interior absorption maximum found in the requested band."""


class CalibrationError(HsfError):
    """Calibration could not bracket the target frequency.

    ``achievable`` holds the (f_min, f_max) resonance range reachable over
    the allowed calibration-constant interval.
    """

    def __init__(self, message, achievable=None):
        super().__init__(message)
        self.achievable = achievable


class RetrievalError(HsfError):
    """Parameter retrieval is undefined for the given sample."""


class ConfigError(HsfError):
    """Invalid or malformed run configuration."""
