class AmmannError(ValueError):
    """Base class for parameter errors raised by this package."""


class InvalidRange(AmmannError):
    """Parameters outside the admissible (n, a, b) ranges."""


class EmptyFractal(AmmannError):
    """Every child of the rule was removed; nothing survives."""


class TooManyTiles(AmmannError):
    """Projected tile count exceeds the configured cap."""

    def __init__(self, projected: int, cap: int):
        super().__init__(f"projected tile count {projected} exceeds cap {cap}")
        self.projected = projected
        self.cap = cap
