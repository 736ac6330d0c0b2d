"""Sparse multivariate polynomials over Q.

A :class:`MultiPoly` in ``n`` variables ``x1..xn`` stores a map from exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.  Instances are
treated as immutable; every operation returns a fresh polynomial in canonical
form, so equality is equality of term maps.

Terms are ordered graded-lexicographically (total degree first, then
lexicographic on the exponent tuple).  That order drives ``leading_term`` and
the reduction in :func:`divide`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import DivisionFailure, DivisorZero, VariableCountMismatch

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def grlex_key(exp: Exponent) -> Tuple[int, Exponent]:
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, Scalar] | None = None):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        self.n = n
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(a) for a in exp)
                if len(exp) != n:
                    raise VariableCountMismatch(
                        f"exponent {exp} has length {len(exp)}, expected {n}"
                    )
                if any(a < 0 for a in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = Fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        # Caller guarantees canonical form.
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls.constant(n, 1)

    @classmethod
    def var(cls, n: int, i: int) -> "MultiPoly":
        """The variable ``x_{i+1}`` (``i`` is zero-based)."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for {n} variables")
        exp = [0] * n
        exp[i] = 1
        return cls._raw(n, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def linear_form(cls, coeffs: Sequence[Scalar]) -> "MultiPoly":
        """``sum(coeffs[i] * x_{i+1})``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = Fraction(c)
        return cls._raw(n, terms)

    @classmethod
    def gens(cls, n: int) -> list["MultiPoly"]:
        return [cls.var(n, i) for i in range(n)]

    # inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[Tuple[Exponent, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.n)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise VariableCountMismatch(
                f"polynomials in {self.n} and {other.n} variables"
            )

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly.zero(self.n)
        return MultiPoly._raw(self.n, {e: a * c for e, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp: Exponent, c: Fraction) -> "MultiPoly":
        return MultiPoly._raw(
            self.n,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._terms.items()},
        )

    # comparisons

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(self.n, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # rendering

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {self})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.n)]
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, a in zip(names, exp):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            parts.append(_join_term(c, factors))
        return _join_signed(parts)


def _join_term(c: Fraction, factors: list[str]) -> Tuple[bool, str]:
    neg = c < 0
    a = abs(c)
    if not factors:
        return neg, _fmt_rational(a)
    body = "*".join(factors)
    if a == 1:
        return neg, body
    return neg, f"{_fmt_rational(a)}*{body}"


def _join_signed(parts: list[Tuple[bool, str]]) -> str:
    out = ""
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# division


def divide(f: MultiPoly, g: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """Graded-lex reduction of ``f`` by ``g``.

    Returns ``(q, r)`` with ``f == q*g + r`` and no term of ``r`` divisible by
    the leading monomial of ``g``.  A single divisor is a Groebner basis of
    the ideal it generates, so ``r == 0`` exactly when ``g`` divides ``f``.
    """
    f._check(g)
    if g.is_zero():
        raise DivisorZero("division by the zero polynomial")
    n = f.n
    lead_exp, lead_c = g.leading_term()
    g_rest = [(e, c) for e, c in g._terms.items() if e != lead_exp]
    work = dict(f._terms)
    quotient: Dict[Exponent, Fraction] = {}
    remainder: Dict[Exponent, Fraction] = {}
    while work:
        exp = max(work, key=grlex_key)
        c = work.pop(exp)
        shift = tuple(a - b for a, b in zip(exp, lead_exp))
        if any(s < 0 for s in shift):
            remainder[exp] = c
            continue
        qc = c / lead_c
        quotient[shift] = quotient.get(shift, 0) + qc
        for e, gc in g_rest:
            te = tuple(a + b for a, b in zip(e, shift))
            v = work.get(te, 0) - qc * gc
            if v:
                work[te] = v
            else:
                work.pop(te, None)
    quotient = {e: c for e, c in quotient.items() if c}
    return MultiPoly._raw(n, quotient), MultiPoly._raw(n, remainder)


def exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Return ``q`` with ``f == q*g``, or raise :class:`DivisionFailure`."""
    if len(g) == 1:
        return _div_by_monomial(f, g)
    q, r = divide(f, g)
    if r:
        raise DivisionFailure(f, g, q, r)
    return q


def _div_by_monomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    f._check(g)
    (gexp, gc), = g._terms.items()
    out: Dict[Exponent, Fraction] = {}
    rem: Dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        shift = tuple(a - b for a, b in zip(exp, gexp))
        if any(s < 0 for s in shift):
            rem[exp] = c
        else:
            out[shift] = c / gc
    if rem:
        # fall back to the general reduction so the quotient/remainder pair is consistent
        q, r = divide(f, g)
        raise DivisionFailure(f, g, q, r)
    return MultiPoly._raw(f.n, out)


# substitution and evaluation


def substitute(f: MultiPoly, images: Sequence[MultiPoly]) -> MultiPoly:
    """Simultaneously replace ``x_i`` by ``images[i]``."""
    if len(images) != f.n:
        raise VariableCountMismatch(
            f"{len(images)} images supplied for {f.n} variables"
        )
    if not images:
        return f
    m = images[0].n
    if any(im.n != m for im in images):
        raise VariableCountMismatch("substitution images disagree on variable count")
    powers: list[Dict[int, MultiPoly]] = [{0: MultiPoly.one(m), 1: im} for im in images]

    def power(i: int, k: int) -> MultiPoly:
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * images[i]
        return cache[k]

    result = MultiPoly.zero(m)
    for exp, c in f._terms.items():
        term = MultiPoly.constant(m, c)
        for i, k in enumerate(exp):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def evaluate(f: MultiPoly, point: Sequence[Scalar]) -> Fraction:
    if len(point) != f.n:
        raise VariableCountMismatch(
            f"point of length {len(point)} for {f.n} variables"
        )
    if all(isinstance(v, int) or Fraction(v).denominator == 1 for v in point):
        return _evaluate_integral(f, [int(v) for v in point])
    pt = [Fraction(v) for v in point]
    total = Fraction(0)
    for exp, c in f._terms.items():
        v = c
        for x, k in zip(pt, exp):
            if k:
                v *= x**k
        total += v
    return total


def _evaluate_integral(f: MultiPoly, pt: list[int]) -> Fraction:
    # integer arithmetic over the common coefficient denominator
    denom = 1
    for c in f._terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    powers: list[Dict[int, int]] = [{0: 1} for _ in pt]
    total = 0
    for exp, c in f._terms.items():
        v = c.numerator * (denom // c.denominator)
        for i, k in enumerate(exp):
            if k:
                cache = powers[i]
                if k not in cache:
                    cache[k] = pt[i] ** k
                v *= cache[k]
        total += v
    return Fraction(total, denom)


def graded_part(f: MultiPoly, degree: int, weights: Sequence[int] | None = None) -> MultiPoly:
    """Terms whose weighted exponent total equals ``degree``.

    ``weights`` defaults to 2 per variable (cohomological degree of ``x_i``).
    """
    if weights is None:
        weights = (2,) * f.n
    if len(weights) != f.n:
        raise VariableCountMismatch(f"{len(weights)} weights for {f.n} variables")
    return MultiPoly._raw(
        f.n,
        {
            e: c
            for e, c in f._terms.items()
            if sum(w * a for w, a in zip(weights, e)) == degree
        },
    )


def product(polys: Iterable[MultiPoly], n: int) -> MultiPoly:
    result = MultiPoly.one(n)
    for p in polys:
        result = result * p
    return result
