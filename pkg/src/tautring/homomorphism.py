"""The connected-sum comparison map on tautological generators.

Given a torus manifold M (rank n, dimension 2n) with chart point m0 and
retained point m1, the map R*(M # N, *) -> R*(N, *) sends

    kappa_{p_I}   -> kappa_{p_I} + q_{p_I}
    kappa_{e p_I} -> kappa_{e p_I} + q_{e p_I} - 2 p_I
    c             -> r_c

where ``q_c`` is the localized integral of ``c`` over M written in the basis
at m0, and ``r_c`` is ``c`` restricted to m1, read through the reversed chart
at m0.  Images live in the free commutative algebra on the kappa generators
over the point-class ring H*(BSO(2n); Q); point classes multiply like the
characteristic classes they are pulled back from.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .charclass import (
    CharClass,
    ClassKey,
    _latex_rational,
    _order_key,
    key_degree,
    monomial_basis,
    monomial_latex,
    monomial_text,
)
from .errors import (
    MissingM1,
    NonIsolatedFixedPoint,
    NotInvariant,
    PointClassUnavailable,
    VariableCountMismatch,
)
from .localization import TorusManifold, kappa_pullback
from .manifolds import validate_maximal_torus
from .poly import _fmt_rational, _join_signed
from .reps import eval_class, to_rep_basis

KAPPA = "kappa"
POINT = "point"

KappaPart = Tuple[Tuple[ClassKey, int], ...]
TermKey = Tuple[KappaPart, ClassKey]


@dataclass(frozen=True)
class TautGenerator:
    kind: str
    monomial: CharClass

    def __post_init__(self):
        if self.kind not in (KAPPA, POINT):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not self.monomial.is_monomial():
            raise ValueError(f"generator needs a monic monomial, got {self.monomial}")
        if self.kind == KAPPA and self.degree < 0:
            raise ValueError(f"kappa_{self.monomial} has negative degree")

    @property
    def key(self) -> ClassKey:
        return self.monomial.monomial_key()

    @property
    def n(self) -> int:
        return self.monomial.n

    @property
    def degree(self) -> int:
        d = key_degree(self.n, self.key)
        return d - 2 * self.n if self.kind == KAPPA else d

    def to_text(self) -> str:
        body = monomial_text(self.key) or "1"
        return f"kappa[{body}]" if self.kind == KAPPA else body

    def to_latex(self) -> str:
        body = monomial_latex(self.key) or "1"
        return rf"\kappa_{{{body}}}" if self.kind == KAPPA else body

    def to_json(self) -> dict:
        return {"kind": self.kind, "monomial": monomial_text(self.key) or "1", "degree": self.degree}

    def sort_key(self):
        return (self.kind != KAPPA, key_degree(self.n, self.key), _order_key(self.n, self.key))


def _mul_keys(n: int, a: ClassKey, b: ClassKey) -> ClassKey:
    pexp = [x + y for x, y in zip(a[1], b[1])]
    eps = a[0] + b[0]
    if eps == 2:
        eps = 0
        pexp[n - 1] += 1
    return eps, tuple(pexp)


def _mul_kappa(a: KappaPart, b: KappaPart) -> KappaPart:
    powers: Dict[ClassKey, int] = dict(a)
    for k, e in b:
        powers[k] = powers.get(k, 0) + e
    return tuple(sorted(powers.items()))


class TautPoly:
    """An element of the free tautological algebra of the target manifold."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[TermKey, Fraction] | None = None):
        self.n = n
        self._terms: Dict[TermKey, Fraction] = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                v = self._terms.get(k, 0) + c
                if v:
                    self._terms[k] = v
                else:
                    del self._terms[k]

    @classmethod
    def zero(cls, n: int) -> "TautPoly":
        return cls(n)

    @classmethod
    def kappa(cls, c: CharClass) -> "TautPoly":
        n = c.n
        return cls(n, {(((c.monomial_key(), 1),), (0, (0,) * n)): Fraction(1)})

    @classmethod
    def from_class(cls, c: CharClass) -> "TautPoly":
        return cls(c.n, {((), k): v for k, v in c.items()})

    @classmethod
    def generator(cls, g: TautGenerator) -> "TautPoly":
        return cls.kappa(g.monomial) if g.kind == KAPPA else cls.from_class(g.monomial)

    def items(self):
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "TautPoly") -> None:
        if other.n != self.n:
            raise VariableCountMismatch(f"tautological polys of rank {self.n} and {other.n}")

    def __add__(self, other: "TautPoly") -> "TautPoly":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TautPoly(self.n, out)

    def __neg__(self) -> "TautPoly":
        return TautPoly(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TautPoly") -> "TautPoly":
        return self + (-other)

    def scale(self, c) -> "TautPoly":
        return TautPoly(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: Dict[TermKey, Fraction] = {}
        for (ka, pa), ca in self._terms.items():
            for (kb, pb), cb in other._terms.items():
                key = (_mul_kappa(ka, kb), _mul_keys(self.n, pa, pb))
                out[key] = out.get(key, 0) + ca * cb
        return TautPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TautPoly):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def term_degree(self, key: TermKey) -> int:
        kappas, pc = key
        d = key_degree(self.n, pc)
        for k, e in kappas:
            d += e * (key_degree(self.n, k) - 2 * self.n)
        return d

    def degrees(self) -> set[int]:
        return {self.term_degree(k) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def kappa_generators(self) -> set[ClassKey]:
        return {k for kappas, _ in self._terms for k, _ in kappas}

    def point_part(self) -> CharClass:
        """Terms free of kappa generators, as a characteristic class."""
        return CharClass(self.n, {pc: c for (kappas, pc), c in self._terms.items() if not kappas})

    def drop_kappas(self, keep=lambda key: False) -> "TautPoly":
        """Send every kappa generator for which ``keep`` is false to zero."""
        return TautPoly(
            self.n,
            {
                (kappas, pc): c
                for (kappas, pc), c in self._terms.items()
                if all(keep(k) for k, _ in kappas)
            },
        )

    def _sorted(self):
        def order(item):
            (kappas, pc), _ = item
            return (
                not kappas,
                [(key_degree(self.n, k), _order_key(self.n, k), -e) for k, e in kappas],
                _order_key(self.n, pc),
            )

        return sorted(self._terms.items(), key=order)

    def to_text(self, suffix: str = "") -> str:
        if not self._terms:
            return "0"
        parts = []
        for (kappas, pc), c in self._sorted():
            factors = []
            for k, e in kappas:
                f = f"kappa[{monomial_text(k) or '1'}]"
                factors.append(f + (f"^{e}" if e > 1 else ""))
            pc_text = monomial_text(pc)
            if pc_text and suffix:
                pc_text = "*".join(f"{s}{suffix}" for s in pc_text.split("*"))
            if pc_text:
                factors.append(pc_text)
            neg, a = c < 0, abs(c)
            body = "*".join(factors)
            if not body:
                parts.append((neg, _fmt_rational(a)))
            elif a == 1:
                parts.append((neg, body))
            else:
                parts.append((neg, f"{_fmt_rational(a)}*{body}"))
        return _join_signed(parts)

    def to_latex(self, suffix: str = "") -> str:
        if not self._terms:
            return "0"
        parts = []
        for (kappas, pc), c in self._sorted():
            body = ""
            for k, e in kappas:
                body += rf"\kappa_{{{monomial_latex(k) or '1'}}}" + (f"^{e}" if e > 1 else "")
            body += monomial_latex(pc, suffix)
            neg, a = c < 0, abs(c)
            if not body:
                parts.append((neg, _latex_rational(a)))
            elif a == 1:
                parts.append((neg, body))
            else:
                parts.append((neg, f"{_latex_rational(a)}{body}"))
        return _join_signed(parts)

    def to_json(self) -> dict:
        return {
            "text": self.to_text(),
            "terms": [
                {
                    "kappa": [[monomial_text(k) or "1", e] for k, e in kappas],
                    "point": monomial_text(pc) or "1",
                    "coeff": _fmt_rational(c),
                }
                for (kappas, pc), c in self._sorted()
            ],
        }

    def __repr__(self) -> str:
        return f"TautPoly({self.n}, {self.to_text()!r})"

    __str__ = to_text


@dataclass(frozen=True)
class PointClassStatus:
    transported: bool
    reason: Optional[str] = None

    def to_json(self) -> dict:
        if self.transported:
            return {"status": "transported"}
        return {"status": "unavailable", "reason": self.reason}

    def __str__(self) -> str:
        return "Transported" if self.transported else f"Unavailable({self.reason})"


TRANSPORTED = PointClassStatus(True)


@dataclass(frozen=True)
class GeneratorMap:
    source: str
    target: str
    manifold: str
    n: int
    max_degree: int
    entries: Mapping[TautGenerator, TautPoly]
    point_class_status: PointClassStatus
    q: Mapping[ClassKey, CharClass] = field(default_factory=dict)
    r: Mapping[ClassKey, CharClass] = field(default_factory=dict)
    conjugated: bool = False

    def image(self, g: TautGenerator) -> TautPoly:
        return self.entries[g]

    def kappa_entries(self) -> list[Tuple[TautGenerator, TautPoly]]:
        return [(g, v) for g, v in self.entries.items() if g.kind == KAPPA]

    def point_entries(self) -> list[Tuple[TautGenerator, TautPoly]]:
        return [(g, v) for g, v in self.entries.items() if g.kind == POINT]

    def apply(self, p: TautPoly) -> TautPoly:
        """Extend the generator table to a ring map on the free algebra."""
        if p.n != self.n:
            raise VariableCountMismatch(f"element of rank {p.n}, map of rank {self.n}")
        images = {g.key: v for g, v in self.entries.items() if g.kind == KAPPA}
        points = {g.key: v for g, v in self.entries.items() if g.kind == POINT}
        result = TautPoly.zero(self.n)
        one = TautPoly.from_class(CharClass.one(self.n))
        for (kappas, pc), c in p.items():
            term = one
            for k, e in kappas:
                if k not in images:
                    raise KeyError(f"kappa[{monomial_text(k)}] is outside the table")
                for _ in range(e):
                    term = term * images[k]
            if pc != (0, (0,) * self.n):
                if not self.point_class_status.transported:
                    raise PointClassUnavailable(self.point_class_status.reason)
                if pc not in points:
                    raise KeyError(f"point class {monomial_text(pc)} is outside the table")
                term = term * points[pc]
            result = result + term.scale(c)
        return result

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "manifold": self.manifold,
            "rank": self.n,
            "max_degree": self.max_degree,
            "conjugated": self.conjugated,
            "point_class_status": self.point_class_status.to_json(),
            "entries": [
                {"generator": g.to_json(), "image": v.to_json()}
                for g, v in sorted(self.entries.items(), key=lambda kv: kv[0].sort_key())
            ],
        }


def point_class_transport(M: TorusManifold, c: CharClass) -> CharClass:
    """The class ``r_c`` with c|_{m1} = (reversed chart at m0)^* r_c.

    The tangent representation at m1 and the chart identification through
    the orientation-reversed derivative at m0 each contribute one reflection;
    for products of spheres they cancel and ``r_c = c``.
    """
    if M.m1 is None:
        raise MissingM1(f"{M.name} has no retained fixed point m1")
    rep = M.retained.rep
    idx = rep.zero_weight()
    if idx is not None:
        raise NonIsolatedFixedPoint(M.retained.label, idx)
    restricted = eval_class(c, rep)
    try:
        return to_rep_basis(restricted, M.chart.rep).conjugate()
    except NotInvariant as exc:
        raise PointClassUnavailable(
            f"{c} at {M.retained.label} is {restricted}, which is not expressible "
            f"through classes at {M.chart.label} ({exc.witness})"
        ) from exc


def connected_sum_hom(M: TorusManifold, max_degree: int = 16, target: str = "N") -> GeneratorMap:
    validate_maximal_torus(M)
    n = M.n
    basis = monomial_basis(n, max_degree)
    entries: Dict[TautGenerator, TautPoly] = {}
    qs: Dict[ClassKey, CharClass] = {}
    for mono in basis:
        if key_degree(n, mono.monomial_key()) < 2 * n:
            continue
        eps, pexp = mono.monomial_key()
        q = kappa_pullback(M, mono)
        qs[mono.monomial_key()] = q
        image = TautPoly.kappa(mono) + TautPoly.from_class(q)
        if eps:
            image = image - TautPoly.from_class(CharClass.monomial(n, 0, pexp, 2))
        entries[TautGenerator(KAPPA, mono)] = image
    status = TRANSPORTED
    rs: Dict[ClassKey, CharClass] = {}
    try:
        for mono in basis:
            rs[mono.monomial_key()] = point_class_transport(M, mono)
    except (PointClassUnavailable, MissingM1) as exc:
        status = PointClassStatus(False, str(exc))
        rs = {}
    for mono in basis if status.transported else ():
        entries[TautGenerator(POINT, mono)] = TautPoly.from_class(rs[mono.monomial_key()])
    return GeneratorMap(
        source=f"{M.name} # {target}",
        target=target,
        manifold=M.name,
        n=n,
        max_degree=max_degree,
        entries=entries,
        point_class_status=status,
        q=qs,
        r=rs,
    )


def conjugated_hom(g: GeneratorMap) -> GeneratorMap:
    """The variant with ``c -> conj(r_c)``, i.e. m1 replaced by an oriented-isomorphic point."""
    if not g.point_class_status.transported:
        raise PointClassUnavailable(g.point_class_status.reason or "point classes unavailable")
    entries: Dict[TautGenerator, TautPoly] = {}
    rs: Dict[ClassKey, CharClass] = {}
    for gen, img in g.entries.items():
        if gen.kind == POINT:
            r = g.r[gen.key].conjugate()
            rs[gen.key] = r
            entries[gen] = TautPoly.from_class(r)
        else:
            entries[gen] = img
    return replace(g, entries=entries, r=rs, conjugated=not g.conjugated)


@dataclass(frozen=True)
class FiberTable:
    """A generator map composed with restriction to the fibre N.

    Positive-degree kappa classes vanish there; degree-zero ones are
    characteristic numbers of N and stay as formal symbols.  Point classes
    become tangent classes of N.
    """

    source: str
    n: int
    rows: Mapping[TautGenerator, TautPoly]

    def to_text_rows(self) -> list[Tuple[str, str]]:
        return [(g.to_text(), v.to_text(suffix="(TN)")) for g, v in self.rows.items()]

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": "H*(N)",
            "rows": [
                {"generator": g.to_json(), "image": v.to_text(suffix="(TN)")}
                for g, v in sorted(self.rows.items(), key=lambda kv: kv[0].sort_key())
            ],
        }


def fiber_restriction(g: GeneratorMap) -> FiberTable:
    n = g.n
    keep = lambda key: key_degree(n, key) == 2 * n  # noqa: E731
    return FiberTable(g.source, n, {gen: img.drop_kappas(keep) for gen, img in g.entries.items()})


def is_homogeneous_map(g: GeneratorMap) -> bool:
    return all(not v or v.degrees() == {gen.degree} for gen, v in g.entries.items())
