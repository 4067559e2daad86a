"""Shared exception types."""


class FieldMismatchError(ValueError):
    """Operands belong to different coefficient domains or extensions."""


class ExactDivisionError(ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class PoleError(ZeroDivisionError):
    """Evaluation requested at a pole or branch point."""


class DegenerateSolutionError(ValueError):
    """A parametrization sits on the singular locus of the equation."""
