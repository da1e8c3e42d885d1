"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument or configuration value is outside its documented range."""


class NumericalError(RuntimeError):
    """A numerical routine failed or produced values outside tolerance."""
