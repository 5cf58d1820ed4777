"""Exact identity checking for nonassociative algebras.

Free nonassociative polynomials, linearization, structure-constant algebras,
T-ideal membership at fixed multidegree, left-Leibniz normal forms and a
registry of Leibniz/Lie-type varieties.
"""
from .freealgebra import (
    MultiDegree,
    Poly,
    associator,
    combine,
    enumerate_monomials,
    jacobian,
    mul,
    multidegree,
    substitute,
    triple,
    var,
    variables,
)
from .leibniz_nf import is_right_normed, normal_form, right_normed_basis
from .linalg import available_backends, get_backend, set_backend
from .linearization import (
    differential_substitution,
    full_multilinearize,
    multihomogeneous_components,
    partial_linearize,
)
from .table_algebra import (
    AlgebraTable,
    Vector,
    direct_sum,
    evaluate,
    is_left_central,
    make_algebra,
    nilpotency_index,
    power_series,
    satisfies_identity,
    satisfies_variety,
    subalgebra_closure,
)
from .tideal import TIdeal, consequence_basis, member
from .varieties import get_variety, list_varieties

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "MultiDegree",
    "Poly",
    "TIdeal",
    "Vector",
    "associator",
    "available_backends",
    "combine",
    "consequence_basis",
    "differential_substitution",
    "direct_sum",
    "enumerate_monomials",
    "evaluate",
    "full_multilinearize",
    "get_backend",
    "get_variety",
    "is_left_central",
    "is_right_normed",
    "jacobian",
    "list_varieties",
    "make_algebra",
    "member",
    "mul",
    "multidegree",
    "multihomogeneous_components",
    "nilpotency_index",
    "normal_form",
    "partial_linearize",
    "power_series",
    "right_normed_basis",
    "satisfies_identity",
    "satisfies_variety",
    "set_backend",
    "subalgebra_closure",
    "substitute",
    "triple",
    "var",
    "variables",
]
