class DemazureError(ValueError):
    """Base class; ``code`` is the stable machine-readable error name."""

    code = "ERROR"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class InvalidGraph(DemazureError):
    code = "INVALID_GRAPH"


class InvalidLevel(DemazureError):
    code = "INVALID_LEVEL"


class ReducedWordRequired(DemazureError):
    code = "REDUCED_WORD_REQUIRED"


class NotAVarietyPoint(DemazureError):
    code = "NOT_A_VARIETY_POINT"


class ShapeMismatch(DemazureError):
    code = "SHAPE_MISMATCH"
