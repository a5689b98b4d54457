"""Shared exception types."""


class SizeCapError(Exception):
    """An enumeration or counting request exceeds its configured cap."""


class PrecisionError(Exception):
    """A floating-point product failed the integer rounding guard."""


class SymmetryError(Exception):
    """A configuration violates a required group symmetry."""
