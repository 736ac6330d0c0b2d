"""Exception hierarchy for the tautring engine."""

from __future__ import annotations


class TautringError(Exception):
    """Base class for every diagnostic raised by the engine."""


class VariableCountMismatch(TautringError, ValueError):
    pass


class DivisorZero(TautringError, ZeroDivisionError):
    pass


class DivisionFailure(TautringError):
    """Raised when a polynomial division leaves a nonzero remainder.

    ``quotient`` and ``remainder`` satisfy ``dividend == quotient * divisor + remainder``.
    """

    def __init__(self, dividend, divisor, quotient, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(f"not divisible; remainder {remainder}")


class NotSymmetric(TautringError):
    pass


class NotInvariant(TautringError):
    """The polynomial is not fixed by the Weyl group; ``witness`` names a failing generator."""

    def __init__(self, poly, witness: str):
        self.poly = poly
        self.witness = witness
        super().__init__(f"not Weyl(D_n)-invariant: fails under {witness}")


class NonIsolatedFixedPoint(TautringError):
    def __init__(self, label: str, weight_index: int):
        self.label = label
        self.weight_index = weight_index
        super().__init__(f"fixed point {label!r} is not isolated (weight {weight_index} is zero)")


class NotPolynomial(TautringError):
    """A localization sum failed to clear its denominator."""

    def __init__(self, manifold: str, remainder):
        self.manifold = manifold
        self.remainder = remainder
        super().__init__(
            f"localization sum over {manifold!r} is not a polynomial; remainder {remainder}"
        )


class NotMaximal(TautringError):
    """``weight_index`` is None when the weights are nonzero but linearly dependent."""

    def __init__(self, label: str, weight_index: int | None):
        self.label = label
        self.weight_index = weight_index
        if weight_index is None:
            detail = "weights are linearly dependent"
        else:
            detail = f"weight {weight_index} is zero"
        super().__init__(f"torus is not maximal at {label!r}: {detail}")


class MissingM1(TautringError):
    pass


class PointClassUnavailable(TautringError):
    """Point classes at m1 cannot be written through the chart at m0."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class ManifoldFormatError(TautringError, ValueError):
    pass


class ParseError(TautringError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class ClassIndexError(TautringError, IndexError):
    def __init__(self, index: int, n: int, position: int):
        self.index = index
        self.n = n
        self.position = position
        super().__init__(f"p{index} out of range for rank {n} at position {position}")
