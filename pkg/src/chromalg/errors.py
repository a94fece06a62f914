"""Shared exception types."""

__all__ = [
    "CapExceeded",
    "OrderMismatch",
    "PartitionError",
    "DiagramError",
    "PlanarityError",
    "PoleError",
]


class CapExceeded(RuntimeError):
    """An order exceeds a configured resource cap."""


class OrderMismatch(ValueError):
    """Two objects of different order were combined."""


class PartitionError(ValueError):
    """A partition violates its invariants (cover, singleton, crossing...)."""


class DiagramError(ValueError):
    """A diagram violates its invariants or an operation's preconditions."""


class PlanarityError(DiagramError):
    """Normalization produced a crossing partition, so the input diagram
    cannot have been planar."""


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a zero of its denominator."""
