"""Exceptions shared across the package."""


class EmptyGraphError(ValueError):
    """Raised when Z_n has no zero divisors (n prime or n < 4)."""


class OracleCapError(RuntimeError):
    """Raised when the brute-force graph would exceed the configured vertex cap."""
