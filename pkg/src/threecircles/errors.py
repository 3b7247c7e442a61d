class ThreeCirclesError(Exception):
    pass


class InvalidArgument(ThreeCirclesError, ValueError):
    pass


class PoleError(ThreeCirclesError, ZeroDivisionError):
    """Point map evaluated at its pole."""


class DepthExhausted(ThreeCirclesError, RuntimeError):
    """Bisection exceeded ``max_depth``; ``partial`` holds what was certified so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class GeneratorExhausted(ThreeCirclesError, RuntimeError):
    def __init__(self, message, attempts=0):
        super().__init__(message)
        self.attempts = attempts
