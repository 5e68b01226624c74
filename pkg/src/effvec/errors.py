"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["EffvecError", "ParseError", "CapExceededError", "ConvergenceError"]


class EffvecError(Exception):
    """Base class for package-specific failures."""


class ParseError(EffvecError, ValueError):
    """Malformed matrix or vector input; carries a human-readable location."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(message if location is None else f"{location}: {message}")


class CapExceededError(EffvecError):
    """Cycle enumeration refused: factorial work beyond the configured cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"enumeration over (n-1)! cycles refused for n={n} (cap {cap}); raise the cap explicitly"
        )


class ConvergenceError(EffvecError):
    """Power iteration failed to reach the requested tolerance."""

    def __init__(self, iterations: int, last_delta: float):
        self.iterations = iterations
        self.last_delta = last_delta
        super().__init__(
            f"no convergence after {iterations} iterations (last relative change {last_delta:.3e})"
        )
