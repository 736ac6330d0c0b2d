"""The rational cohomology ring of BSO(2n) in (e, p) normal form.

Every element is a combination of monomials ``p_I`` and ``e*p_I``: the relation
``e^2 = p_n`` is applied as soon as two Euler factors meet, so a stored term
never has Euler exponent above one.  A term key is ``(eps, (k_1, ..., k_n))``
standing for ``e^eps * p_1^k_1 * ... * p_n^k_n``.

Degrees are topological: ``|e| = 2n`` and ``|p_i| = 4i``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from .errors import VariableCountMismatch
from .poly import _fmt_rational, _join_signed

ClassKey = Tuple[int, Tuple[int, ...]]
Scalar = Union[int, Fraction]


def _normalize_key(n: int, eps: int, pexp: Sequence[int]) -> ClassKey:
    pexp = list(pexp)
    if len(pexp) != n:
        raise VariableCountMismatch(f"p-exponent vector {tuple(pexp)} for rank {n}")
    if eps < 0 or any(k < 0 for k in pexp):
        raise ValueError("exponents must be non-negative")
    if eps >= 2:
        pexp[n - 1] += eps // 2
        eps %= 2
    return eps, tuple(pexp)


def key_degree(n: int, key: ClassKey) -> int:
    eps, pexp = key
    return 2 * n * eps + sum(4 * (i + 1) * k for i, k in enumerate(pexp))


def _order_key(n: int, key: ClassKey):
    # descending degree, pure-p terms before Euler terms, then descending lex on p
    eps, pexp = key
    return (-key_degree(n, key), eps, tuple(-k for k in pexp))


class CharClass:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[ClassKey, Scalar] | None = None):
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.n = n
        body: Dict[ClassKey, Fraction] = {}
        for (eps, pexp), c in (terms or {}).items():
            key = _normalize_key(n, eps, pexp)
            v = body.get(key, 0) + Fraction(c)
            if v:
                body[key] = v
            else:
                body.pop(key, None)
        self._terms = body
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[ClassKey, Fraction]) -> "CharClass":
        c = cls.__new__(cls)
        c.n = n
        c._terms = terms
        c._hash = None
        return c

    @classmethod
    def zero(cls, n: int) -> "CharClass":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "CharClass":
        c = Fraction(c)
        return cls._raw(n, {(0, (0,) * n): c} if c else {})

    @classmethod
    def one(cls, n: int) -> "CharClass":
        return cls.constant(n, 1)

    @classmethod
    def euler(cls, n: int) -> "CharClass":
        return cls._raw(n, {(1, (0,) * n): Fraction(1)})

    @classmethod
    def pontryagin(cls, n: int, i: int) -> "CharClass":
        if not 1 <= i <= n:
            raise IndexError(f"p{i} out of range for rank {n}")
        pexp = [0] * n
        pexp[i - 1] = 1
        return cls._raw(n, {(0, tuple(pexp)): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, eps: int, pexp: Sequence[int], coeff: Scalar = 1) -> "CharClass":
        return cls(n, {(eps, tuple(pexp)): coeff})

    # inspection

    def items(self) -> Iterator[Tuple[ClassKey, Fraction]]:
        return iter(self._terms.items())

    @property
    def terms(self) -> Mapping[ClassKey, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[Tuple[ClassKey, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _order_key(self.n, t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, eps: int, pexp: Sequence[int]) -> Fraction:
        return self._terms.get(_normalize_key(self.n, eps, pexp), Fraction(0))

    def degrees(self) -> set[int]:
        return {key_degree(self.n, k) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous class; None for zero, ValueError if mixed."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"class {self} is not homogeneous")
        return degs.pop()

    def is_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def monomial_key(self) -> ClassKey:
        if not self.is_monomial():
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self._terms))

    def euler_part(self) -> "CharClass":
        return CharClass._raw(self.n, {k: c for k, c in self._terms.items() if k[0]})

    def pontryagin_part(self) -> "CharClass":
        return CharClass._raw(self.n, {k: c for k, c in self._terms.items() if not k[0]})

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, CharClass):
            if other.n != self.n:
                raise VariableCountMismatch(f"classes of rank {self.n} and {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CharClass.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return CharClass._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CharClass._raw(self.n, {k: -c for k, c in self._terms.items()})

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

    def scale(self, c: Scalar) -> "CharClass":
        c = Fraction(c)
        if not c:
            return CharClass.zero(self.n)
        return CharClass._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.n
        out: Dict[ClassKey, Fraction] = {}
        for (e1, p1), c1 in self._terms.items():
            for (e2, p2), c2 in other._terms.items():
                pexp = [a + b for a, b in zip(p1, p2)]
                eps = e1 + e2
                if eps == 2:
                    eps = 0
                    pexp[n - 1] += 1
                key = (eps, tuple(pexp))
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
        return CharClass._raw(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CharClass":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = CharClass.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> "CharClass":
        """Apply the reflection automorphism ``e -> -e``, ``p_i -> p_i``."""
        return CharClass._raw(
            self.n, {k: (-c if k[0] else c) for k, c in self._terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, CharClass):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == CharClass.constant(self.n, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # rendering

    def __repr__(self) -> str:
        return f"CharClass({self.n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Plain text, e.g. ``e*p1^2 + 3*p2``; round-trips through the parser."""
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            body = monomial_text(key)
            neg, a = c < 0, abs(c)
            if not body:
                parts.append((neg, _fmt_rational(a)))
            elif a == 1:
                parts.append((neg, body))
            else:
                parts.append((neg, f"{_fmt_rational(a)}*{body}"))
        return _join_signed(parts)

    def to_latex(self, suffix: str = "") -> str:
        """LaTeX, e.g. ``ep_1^2 + 3p_2``.  ``suffix`` is appended to each symbol, as in ``(TN)``."""
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            body = monomial_latex(key, suffix)
            neg, a = c < 0, abs(c)
            coeff = _latex_rational(a)
            if not body:
                parts.append((neg, coeff))
            elif a == 1:
                parts.append((neg, body))
            else:
                parts.append((neg, f"{coeff}{body}"))
        return _join_signed(parts)

    def to_json(self) -> dict:
        return {
            "text": self.to_text(),
            "terms": [
                {"e": k[0], "p": list(k[1]), "coeff": _fmt_rational(c)}
                for k, c in self.sorted_terms()
            ],
        }


def monomial_text(key: ClassKey) -> str:
    eps, pexp = key
    factors = ["e"] if eps else []
    for i, k in enumerate(pexp):
        if k == 1:
            factors.append(f"p{i + 1}")
        elif k > 1:
            factors.append(f"p{i + 1}^{k}")
    return "*".join(factors)


def monomial_latex(key: ClassKey, suffix: str = "") -> str:
    eps, pexp = key
    out = f"e{suffix}" if eps else ""
    for i, k in enumerate(pexp):
        if k:
            out += f"p_{i + 1}{suffix}" + (f"^{k}" if k > 1 else "")
    return out


def _latex_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def conjugate(c: CharClass) -> CharClass:
    return c.conjugate()


def monomial_basis(n: int, max_degree: int) -> list[CharClass]:
    """All normal-form monomials ``p_I`` and ``e*p_I`` of degree <= ``max_degree``.

    Ordered by ascending degree, then pure-p before Euler terms, then
    descending lexicographic p-exponents.
    """
    if max_degree < 0:
        return []
    keys: list[ClassKey] = []

    def fill(i: int, budget: int, acc: list[int]):
        if i == n:
            keys.append(tuple(acc))
            return
        step = 4 * (i + 1)
        for k in range(budget // step + 1):
            acc.append(k)
            fill(i + 1, budget - k * step, acc)
            acc.pop()

    fill(0, max_degree, [])
    out = []
    for pexp in keys:
        out.append((0, pexp))
        if key_degree(n, (1, pexp)) <= max_degree:
            out.append((1, pexp))
    out.sort(key=lambda k: (key_degree(n, k), k[0], tuple(-a for a in k[1])))
    return [CharClass._raw(n, {k: Fraction(1)}) for k in out]
