"""Weyl(D_n) invariants and their rewriting in the (e, p) basis.

The invariant ring of Weyl(D_n) acting on Q[x_1..x_n] is generated by
``p_i = e_i(x_1^2, ..., x_n^2)`` and ``e = x_1 ... x_n``.  Rewriting works by a
parity split: every monomial of an invariant has all exponents even or all
odd.  The odd part is ``e`` times a polynomial in the squares, so both halves
are symmetric polynomials in ``y_i = x_i^2`` and the classical leading-term
algorithm finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence

from .charclass import CharClass
from .errors import NotInvariant, NotSymmetric, VariableCountMismatch
from .poly import Exponent, MultiPoly, substitute


@dataclass(frozen=True)
class WeylContext:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Weyl(D_n) needs n >= 1")


def elementary_symmetric(k: int, args: Sequence[MultiPoly]) -> MultiPoly:
    if not 0 <= k <= len(args):
        raise ValueError(f"e_{k} undefined for {len(args)} arguments")
    if not args:
        raise ValueError("need at least one argument to fix the variable count")
    m = args[0].n
    # e_k via the recurrence E_j(a_1..a_i) = E_j(a_1..a_{i-1}) + a_i E_{j-1}(a_1..a_{i-1})
    table = [MultiPoly.one(m)] + [MultiPoly.zero(m)] * k
    for a in args:
        for j in range(k, 0, -1):
            table[j] = table[j] + a * table[j - 1]
    return table[k]


# group action helpers


def _permute(f: MultiPoly, i: int, j: int) -> MultiPoly:
    out = {}
    for exp, c in f.items():
        e = list(exp)
        e[i], e[j] = e[j], e[i]
        out[tuple(e)] = c
    return MultiPoly(f.n, out)


def _flip(f: MultiPoly, idx: Sequence[int]) -> MultiPoly:
    out = {}
    for exp, c in f.items():
        odd = sum(exp[i] for i in idx) % 2
        out[exp] = -c if odd else c
    return MultiPoly(f.n, out)


def _failing_generator(f: MultiPoly, n: int) -> str | None:
    if f.n != n:
        raise VariableCountMismatch(f"polynomial in {f.n} variables, Weyl rank {n}")
    if n == 1:
        return None
    for i in range(n - 1):
        if _permute(f, i, i + 1) != f:
            return f"swap x{i + 1}<->x{i + 2}"
    if _flip(f, (0, 1)) != f:
        return "sign flip (x1,x2)->(-x1,-x2)"
    return None


def is_weyl_invariant(f: MultiPoly, ctx: WeylContext | int) -> bool:
    n = ctx.n if isinstance(ctx, WeylContext) else ctx
    return _failing_generator(f, n) is None


def parity_dichotomy_holds(f: MultiPoly) -> bool:
    """True iff every monomial has all exponents even or all exponents odd."""
    for exp in f.terms:
        parities = {a % 2 for a in exp}
        if len(parities) > 1:
            return False
    return True


# symmetric reduction


@lru_cache(maxsize=None)
def _elementary_in(n: int) -> tuple[MultiPoly, ...]:
    ys = MultiPoly.gens(n)
    return tuple(elementary_symmetric(k, ys) for k in range(1, n + 1))


@lru_cache(maxsize=4096)
def _elementary_power_product(n: int, powers: Exponent) -> MultiPoly:
    es = _elementary_in(n)
    if not any(powers):
        return MultiPoly.one(n)
    # peel one factor off the last nonzero slot and recurse; cached on the way down
    i = max(j for j, k in enumerate(powers) if k)
    lower = list(powers)
    lower[i] -= 1
    return _elementary_power_product(n, tuple(lower)) * es[i]


def symmetric_reduce(h: MultiPoly) -> MultiPoly:
    """Write a symmetric ``h(y_1..y_n)`` as a polynomial in ``E_1..E_n``.

    The returned MultiPoly's variable ``i`` is ``E_{i+1}``, and substituting
    ``E_i -> e_i(y)`` recovers ``h`` exactly.
    """
    n = h.n
    work: Dict[Exponent, Fraction] = dict(h.terms)
    result: Dict[Exponent, Fraction] = {}
    while work:
        lead = max(work)  # lexicographic leading monomial
        c = work[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise NotSymmetric(
                f"lex-leading monomial {lead} is not a partition; input is not symmetric"
            )
        powers = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        result[powers] = result.get(powers, 0) + c
        for exp, v in _elementary_power_product(n, powers).items():
            w = work.get(exp, 0) - c * v
            if w:
                work[exp] = w
            else:
                work.pop(exp, None)
    return MultiPoly(n, result)


# rewriting into (e, p)


def expand(c: CharClass) -> MultiPoly:
    """Substitute ``e -> x_1...x_n`` and ``p_i -> e_i(x_1^2..x_n^2)``."""
    n = c.n
    xs = MultiPoly.gens(n)
    euler = MultiPoly.monomial((1,) * n)
    squares = [x * x for x in xs]
    pont = [elementary_symmetric(i, squares) for i in range(1, n + 1)]
    return evaluate_class(c, euler, pont)


def evaluate_class(c: CharClass, euler: MultiPoly, pont: Sequence[MultiPoly]) -> MultiPoly:
    """Substitute given polynomials for ``e`` and ``p_1..p_n`` in ``c``."""
    n = c.n
    if len(pont) != n:
        raise VariableCountMismatch(f"{len(pont)} Pontryagin images for rank {n}")
    m = euler.n
    cache: Dict[Exponent, MultiPoly] = {}
    result = MultiPoly.zero(m)
    for (eps, pexp), coeff in c.items():
        if pexp not in cache:
            cache[pexp] = substitute(MultiPoly(n, {pexp: 1}), list(pont))
        term = cache[pexp]
        if eps:
            term = term * euler
        result = result + term.scale(coeff)
    return result


def _from_elementary(g: MultiPoly, n: int, with_euler: bool) -> CharClass:
    eps = 1 if with_euler else 0
    return CharClass(n, {(eps, exp): c for exp, c in g.items()})


def to_pe_basis(f: MultiPoly, ctx: WeylContext | int) -> CharClass:
    """Rewrite a Weyl(D_n)-invariant polynomial as a class in normal form.

    Raises :class:`NotInvariant` naming a generator that moves ``f``.
    """
    n = ctx.n if isinstance(ctx, WeylContext) else ctx
    if f.n != n:
        raise VariableCountMismatch(f"polynomial in {f.n} variables, rank {n}")
    if n == 1:
        # Weyl(D_1) is trivial: x_1^k is e^k, and e^2 = p_1 in normal form
        return CharClass(1, {(k, (0,)): c for (k,), c in f.items()})
    witness = _failing_generator(f, n)
    if witness is not None:
        raise NotInvariant(f, witness)
    even: Dict[Exponent, Fraction] = {}
    odd: Dict[Exponent, Fraction] = {}
    for exp, c in f.items():
        parities = {a % 2 for a in exp}
        if parities == {0}:
            even[tuple(a // 2 for a in exp)] = c
        elif parities == {1}:
            odd[tuple((a - 1) // 2 for a in exp)] = c
        else:
            # unreachable for a genuine invariant; kept as a guard on the algorithm
            raise NotInvariant(f, f"mixed-parity monomial {exp}")
    try:
        g_even = symmetric_reduce(MultiPoly(n, even))
        g_odd = symmetric_reduce(MultiPoly(n, odd))
    except NotSymmetric as exc:
        raise NotInvariant(f, str(exc)) from exc
    return _from_elementary(g_even, n, False) + _from_elementary(g_odd, n, True)


def weyl_group_elements(n: int):
    """Yield every element of Weyl(D_n) as ``(permutation, sign pattern)``.

    Brute-force enumeration for small ``n``; used as a test oracle.
    """
    from itertools import permutations, product

    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if n > 1 and signs.count(-1) % 2:
                continue
            if n == 1 and signs != (1,):
                continue
            yield perm, signs


def act(f: MultiPoly, perm: Sequence[int], signs: Sequence[int]) -> MultiPoly:
    """Apply ``x_i -> signs[i] * x_{perm[i]}``."""
    n = f.n
    images = [MultiPoly.var(n, perm[i]).scale(signs[i]) for i in range(n)]
    return substitute(f, images)


__all__ = [
    "WeylContext",
    "act",
    "elementary_symmetric",
    "evaluate_class",
    "expand",
    "is_weyl_invariant",
    "parity_dichotomy_holds",
    "symmetric_reduce",
    "to_pe_basis",
    "weyl_group_elements",
]
