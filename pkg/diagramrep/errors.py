"""Exceptions raised by the diagramrep library."""


class DiagramError(ValueError):
    """Blocks do not form a set partition of [m] u [n]'."""


class ShapeMismatchError(ValueError):
    """Operands are not composable, or labels/semirings disagree."""


class SizeGuardError(ValueError):
    """An exhaustive computation was asked for beyond its size guard."""


class RepresentationInapplicableError(ValueError):
    """The semiring does not satisfy the hypothesis of a representation."""


class DiagramParseError(ValueError):
    """Text input could not be parsed; `position` is a 0-based offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.detail = message
        self.position = position
