"""Exact localization and connected-sum maps for tautological rings of torus manifolds."""

from .charclass import CharClass, conjugate, monomial_basis
from .homomorphism import (
    FiberTable,
    GeneratorMap,
    TautGenerator,
    TautPoly,
    conjugated_hom,
    connected_sum_hom,
    fiber_restriction,
    point_class_transport,
)
from .localization import (
    FixedPoint,
    TorusManifold,
    euler_characteristic,
    fibre_integrate,
    kappa_pullback,
    verify_sphere_lemma,
)
from .manifolds import builtin, product, projective_space, sphere, validate_maximal_torus
from .parsing import parse_class
from .poly import MultiPoly, evaluate, exact_div, graded_part, substitute
from .reps import OrientedRep, eval_class, euler_of_rep, pontryagin_of_rep
from .symmetric import (
    WeylContext,
    elementary_symmetric,
    expand,
    is_weyl_invariant,
    symmetric_reduce,
    to_pe_basis,
)

__version__ = "0.1.0"
