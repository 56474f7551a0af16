"""Errors shared across the solver, cost-model, and experiment layers."""


class InsufficientPoints(ValueError):
    """A solver was given fewer than two points."""


class InvalidPartition(ValueError):
    """A partition parameter or range lies outside its allowed bounds."""


class EmptySweep(ValueError):
    """An argmin was requested over an empty list of sweep records."""
