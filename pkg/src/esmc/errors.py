"""Exception types shared across the package."""


class EsmcError(Exception):
    """Base class for all esmc errors."""


class ParameterError(EsmcError, ValueError):
    """Invalid parameter block or mismatched argument sizes."""


class DecodeError(EsmcError, ValueError):
    """Bit stream does not start with a valid codeword (corruption or wrong key)."""


class FormatError(EsmcError, ValueError):
    """Malformed serialized message, key file, or source-model file."""


class BudgetError(EsmcError, RuntimeError):
    """An exact-analysis operation was asked to exceed its enumeration guard."""
