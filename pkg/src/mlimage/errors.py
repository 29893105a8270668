"""Exception hierarchy. Every error carries a stable machine-readable code."""


class MLImageError(Exception):
    code = "INTERNAL"


class ParseError(MLImageError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class RadicandMismatch(MLImageError, ValueError):
    code = "RADICAND_MISMATCH"


class NotMultilinear(MLImageError, ValueError):
    code = "NOT_MULTILINEAR"


class ZeroPolynomial(MLImageError, ValueError):
    code = "ZERO_POLY"


class DimensionTooSmall(MLImageError, ValueError):
    code = "DIM_TOO_SMALL"


class NonTraceZero(MLImageError, ValueError):
    code = "NONZERO_TRACE"


class DimensionMismatch(MLImageError, ValueError):
    code = "DIM_MISMATCH"


class SingularMatrix(MLImageError, ZeroDivisionError):
    code = "SINGULAR"


class NotProper(MLImageError, ValueError):
    code = "NOT_PROPER"


class NotSupported(MLImageError):
    code = "NOT_SUPPORTED"


class SplitFailure(NotSupported):
    """Characteristic polynomial does not split over Q or one quadratic extension."""

    def __init__(self, factor, message="characteristic polynomial does not split"):
        super().__init__(f"{message}: irreducible part {factor}")
        self.factor = factor


class InternalInconsistency(MLImageError, RuntimeError):
    code = "INTERNAL"


class USelectionFailed(InternalInconsistency):
    pass


class LambdaMinusOne(MLImageError, ValueError):
    code = "LAMBDA_MINUS_ONE"


class ZeroScale(MLImageError, ValueError):
    code = "ZERO_SCALE"


class ZeroGamma(ZeroScale):
    code = "ZERO_GAMMA"


class RepeatedDiagonal(MLImageError, ValueError):
    code = "REPEATED_DIAGONAL"
