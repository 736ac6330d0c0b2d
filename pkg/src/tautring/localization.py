"""Fixed-point localization for torus manifolds with isolated fixed points.

Fibre integration along ``M x_T ET -> BT`` is computed as the sum over fixed
points of the restricted class divided by the Euler class of the tangent
representation there.  The sum is put over one common denominator and divided
exactly; a nonzero remainder means the fixed-point data cannot come from a
closed manifold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .charclass import CharClass, monomial_basis
from .errors import DivisionFailure, NonIsolatedFixedPoint, NotPolynomial, VariableCountMismatch
from .poly import MultiPoly, evaluate, exact_div
from .reps import OrientedRep, eval_class, euler_of_rep, to_rep_basis


@dataclass(frozen=True)
class FixedPoint:
    label: str
    rep: OrientedRep


@dataclass(frozen=True)
class TorusManifold:
    name: str
    fixed_points: Tuple[FixedPoint, ...]
    m0: int = 0
    m1: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if not self.fixed_points:
            raise ValueError("a torus manifold needs at least one fixed point")
        n = self.fixed_points[0].rep.n
        for fp in self.fixed_points:
            if fp.rep.n != n:
                raise VariableCountMismatch(
                    f"fixed point {fp.label!r} has rank {fp.rep.n}, expected {n}"
                )
        count = len(self.fixed_points)
        if not 0 <= self.m0 < count:
            raise IndexError(f"m0 index {self.m0} out of range")
        if self.m1 is not None:
            if not 0 <= self.m1 < count:
                raise IndexError(f"m1 index {self.m1} out of range")
            if self.m1 == self.m0:
                raise ValueError("m0 and m1 must be distinct fixed points")

    @property
    def n(self) -> int:
        return self.fixed_points[0].rep.n

    @property
    def dimension(self) -> int:
        return 2 * self.n

    @property
    def chart(self) -> FixedPoint:
        return self.fixed_points[self.m0]

    @property
    def retained(self) -> Optional[FixedPoint]:
        return None if self.m1 is None else self.fixed_points[self.m1]


@dataclass(frozen=True)
class _LocalizationData:
    # one entry per fixed point: (index of its distinct denominator, sign)
    placement: Tuple[Tuple[int, int], ...]
    denominators: Tuple[MultiPoly, ...]
    cofactors: Tuple[MultiPoly, ...]  # product of the other denominators
    common: MultiPoly


@lru_cache(maxsize=64)
def _localization_data(M: TorusManifold) -> _LocalizationData:
    for fp in M.fixed_points:
        idx = fp.rep.zero_weight()
        if idx is not None:
            raise NonIsolatedFixedPoint(fp.label, idx)
    # Euler classes that agree up to sign share one factor of the common denominator
    denominators: list[MultiPoly] = []
    lookup: dict[MultiPoly, Tuple[int, int]] = {}
    placement = []
    for fp in M.fixed_points:
        e = euler_of_rep(fp.rep)
        if e not in lookup:
            lookup[e] = (len(denominators), 1)
            lookup[-e] = (len(denominators), -1)
            denominators.append(e)
        placement.append(lookup[e])
    n = M.n
    cofactors = []
    for k in range(len(denominators)):
        prod = MultiPoly.one(n)
        for l, d in enumerate(denominators):
            if l != k:
                prod = prod * d
        cofactors.append(prod)
    common = cofactors[0] * denominators[0]
    return _LocalizationData(tuple(placement), tuple(denominators), tuple(cofactors), common)


def fibre_integrate(M: TorusManifold, c: CharClass) -> MultiPoly:
    """Integrate the characteristic class ``c`` of the tangent bundle over ``M``.

    Returns the polynomial in H*(BT) = Q[x_1..x_n].  Raises
    :class:`NonIsolatedFixedPoint` if some Euler class vanishes and
    :class:`NotPolynomial` if the localized sum does not clear.
    """
    if c.n != M.n:
        raise VariableCountMismatch(f"class of rank {c.n} on manifold of rank {M.n}")
    data = _localization_data(M)
    numerators = [MultiPoly.zero(M.n) for _ in data.denominators]
    for fp, (k, sign) in zip(M.fixed_points, data.placement):
        t = eval_class(c, fp.rep)
        numerators[k] = numerators[k] + (t if sign == 1 else -t)
    total = MultiPoly.zero(M.n)
    for num, cof in zip(numerators, data.cofactors):
        if num:
            total = total + num * cof
    try:
        return exact_div(total, data.common)
    except DivisionFailure as exc:
        raise NotPolynomial(M.name, exc.remainder) from exc


def kappa_pullback(M: TorusManifold, c: CharClass) -> CharClass:
    """The class ``q_c`` in the (e, p) basis of the chart representation at m0."""
    return to_rep_basis(fibre_integrate(M, c), M.chart.rep)


def euler_characteristic(M: TorusManifold) -> Fraction:
    integral = fibre_integrate(M, CharClass.euler(M.n))
    if not integral.is_constant():
        raise NotPolynomial(M.name, integral)
    return integral.constant_term()


def inverse_euler_sum(M: TorusManifold) -> MultiPoly:
    """``sum_j 1/e_j``, which vanishes for closed manifolds of positive dimension."""
    return fibre_integrate(M, CharClass.one(M.n))


# sphere lemma


@dataclass(frozen=True)
class SphereCheck:
    monomial: CharClass
    expected: CharClass
    actual: CharClass

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class SphereReport:
    n: int
    max_degree: int
    checks: list[SphereCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)


def verify_sphere_lemma(n: int, max_degree: int) -> SphereReport:
    """Check ``kappa(p_I) = 0`` and ``kappa(e p_I) = 2 p_I`` on S^{2n}."""
    from .manifolds import sphere

    M = sphere(n)
    report = SphereReport(n, max_degree)
    for mono in monomial_basis(n, max_degree):
        eps, pexp = mono.monomial_key()
        if eps:
            expected = CharClass.monomial(n, 0, pexp, 2)
        else:
            expected = CharClass.zero(n)
        report.checks.append(SphereCheck(mono, expected, kappa_pullback(M, mono)))
    return report


# random-point oracle


def random_points(M: TorusManifold, count: int, seed: int = 0, bound: int = 1000) -> list[list[int]]:
    """Integer points in [-bound, bound]^n at which no Euler class vanishes."""
    rng = random.Random(seed)
    eulers = [euler_of_rep(fp.rep) for fp in M.fixed_points]
    points = []
    while len(points) < count:
        pt = [rng.randint(-bound, bound) for _ in range(M.n)]
        if all(evaluate(e, pt) != 0 for e in eulers):
            points.append(pt)
    return points


def localized_terms(M: TorusManifold, c: CharClass) -> list[Tuple[MultiPoly, MultiPoly]]:
    """``(c|_j, e_j)`` for every fixed point, before any denominator clearing."""
    return [(eval_class(c, fp.rep), euler_of_rep(fp.rep)) for fp in M.fixed_points]


def localized_sum_at(M: TorusManifold, c: CharClass, point: Sequence[int], terms=None) -> Fraction:
    """Evaluate ``sum_j c|_j / e_j`` exactly at a point, one fraction per fixed point."""
    if terms is None:
        terms = localized_terms(M, c)
    return sum((evaluate(t, point) / evaluate(e, point) for t, e in terms), Fraction(0))
