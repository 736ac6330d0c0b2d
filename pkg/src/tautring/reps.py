"""Oriented torus representations and their characteristic classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .charclass import CharClass
from .errors import NotMaximal, VariableCountMismatch
from .poly import MultiPoly, substitute
from .symmetric import elementary_symmetric, evaluate_class, to_pe_basis


@dataclass(frozen=True)
class OrientedRep:
    """A 2n-dimensional representation of T^n: n weights and an orientation sign.

    Each weight is an integer vector, read as the linear form
    ``sum(w[k] * x_{k+1})`` in H^2(BT).
    """

    weights: Tuple[Tuple[int, ...], ...]
    sign: int = 1

    def __post_init__(self):
        weights = tuple(tuple(int(a) for a in w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        n = len(weights)
        if n == 0:
            raise ValueError("a representation needs at least one weight")
        if any(len(w) != n for w in weights):
            raise VariableCountMismatch(
                f"expected {n} weights of length {n}, got lengths {[len(w) for w in weights]}"
            )
        if self.sign not in (1, -1):
            raise ValueError(f"orientation sign must be +1 or -1, not {self.sign}")

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def standard(cls, n: int, sign: int = 1) -> "OrientedRep":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), sign)

    def zero_weight(self) -> int | None:
        """Index of the first zero weight, or None if the rep is isolated."""
        for i, w in enumerate(self.weights):
            if not any(w):
                return i
        return None

    def is_isolated(self) -> bool:
        return self.zero_weight() is None

    def reversed(self) -> "OrientedRep":
        return OrientedRep(self.weights, -self.sign)

    def linear_forms(self) -> list[MultiPoly]:
        return [MultiPoly.linear_form(w) for w in self.weights]


def euler_of_rep(rep: OrientedRep) -> MultiPoly:
    result = MultiPoly.constant(rep.n, rep.sign)
    for form in rep.linear_forms():
        result = result * form
    return result


def pontryagin_of_rep(rep: OrientedRep, i: int) -> MultiPoly:
    if not 1 <= i <= rep.n:
        raise IndexError(f"p{i} out of range for rank {rep.n}")
    return elementary_symmetric(i, [w * w for w in rep.linear_forms()])


def eval_class(c: CharClass, rep: OrientedRep) -> MultiPoly:
    """Restrict ``c`` to the fixed point with tangent representation ``rep``."""
    if c.n != rep.n:
        raise VariableCountMismatch(f"class of rank {c.n} on rep of rank {rep.n}")
    squares = [w * w for w in rep.linear_forms()]
    pont = [elementary_symmetric(i, squares) for i in range(1, rep.n + 1)]
    return evaluate_class(c, euler_of_rep(rep), pont)


def _inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises ValueError when singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("weight matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def to_rep_basis(f: MultiPoly, rep: OrientedRep) -> CharClass:
    """The class ``c`` with ``eval_class(c, rep) == f``.

    The weights of ``rep`` are used as chart coordinates ``y_i = w_i(x)``, in
    which ``rep`` is the standard representation up to orientation.  ``f``
    must be Weyl(D_n)-invariant in those coordinates; otherwise
    :class:`NotInvariant` is raised.
    """
    n = rep.n
    if f.n != n:
        raise VariableCountMismatch(f"polynomial in {f.n} variables, rep of rank {n}")
    if rep.weights != OrientedRep.standard(n).weights:
        try:
            inv = _inverse(rep.weights)
        except ValueError:
            raise NotMaximal("chart", rep.zero_weight()) from None
        # x_k = sum_i inv[k][i] * y_i
        f = substitute(f, [MultiPoly.linear_form(row) for row in inv])
    c = to_pe_basis(f, n)
    return c if rep.sign == 1 else c.conjugate()
