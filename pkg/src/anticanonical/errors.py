"""Domain errors. Every error carries a stable ``code`` used in CLI error objects."""


class AtkError(Exception):
    """Base class for all domain errors raised by the toolkit."""

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class ZeroVector(AtkError, ValueError):
    pass


class LengthOutOfRange(AtkError, ValueError):
    pass


class LengthMismatch(AtkError, ValueError):
    pass


class NotToric(AtkError, ValueError):
    """The cycle (or ray list) does not close up into a smooth complete fan."""


class NotContractible(AtkError, ValueError):
    pass


class NotOpposite(AtkError, ValueError):
    """The two components of a move are not sections of a common ruling."""


class NoMarkAvailable(AtkError, ValueError):
    pass


class NotNegativeDefinite(AtkError, ValueError):
    pass


class ContainsMinusOneCurve(NotNegativeDefinite):
    """Cycle has a (-1)-component; the classification assumes none."""


class UnknownModel(AtkError, ValueError):
    pass


class UnknownContinuation(AtkError, LookupError):
    pass


class NotFoundWithinBounds(AtkError, LookupError):
    """Bounded search exhausted. This is never a proof of nonexistence."""

    def __init__(self, message: str, *, max_moves: int, entry_min: int | None = None):
        super().__init__(message)
        self.max_moves = max_moves
        self.entry_min = entry_min

    def to_json(self) -> dict:
        out = super().to_json()
        out["bounds"] = {"max_moves": self.max_moves, "entry_min": self.entry_min}
        return out
