"""Exceptions shared across the package."""


class SizeCapExceeded(RuntimeError):
    """An instance is larger than the configured cap allows.

    Raised with messages such as "power too large", "search too large" or
    "transitivity check too large"; the caps exist so that exponential
    searches fail fast instead of running for hours.
    """


class SaturationRequired(RuntimeError):
    """Descriptor construction needs a saturating flow (value exactly 1/2)."""
