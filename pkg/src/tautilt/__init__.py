"""tau-rigid and tau-tilting modules of radical-square-zero quiver algebras over prime fields."""

__version__ = "0.1.0"

from .exactla import PrimeField
from .algebra import AlgebraSpec, Arrow, Quiver, Relations, load_algebra, parse_algebra, separated_quiver
from .modrep import (
    Rep,
    RepMorphism,
    direct_sum,
    hom_basis,
    hom_dim,
    injective,
    is_isomorphic,
    min_presentation,
    projective,
    simple,
)
from .tau import tau, tau_inverse, transpose
from .krullschmidt import decompose, is_indecomposable
from .stablefun import F_apply, G_reconstruct, all_indecomposables, is_rep_finite
from .taurig import (
    classify_algebra,
    common_summand,
    construct_from_simple,
    criterion_verdict,
    is_tau_rigid,
    nakayama_tau_tilting,
    rigid_by_presentation,
    tau_tilting_all,
)

__all__ = [
    "PrimeField", "AlgebraSpec", "Arrow", "Quiver", "Relations", "load_algebra", "parse_algebra",
    "separated_quiver", "Rep", "RepMorphism", "direct_sum", "hom_basis", "hom_dim", "injective",
    "is_isomorphic", "min_presentation", "projective", "simple", "tau", "tau_inverse", "transpose",
    "decompose", "is_indecomposable", "F_apply", "G_reconstruct", "all_indecomposables",
    "is_rep_finite", "classify_algebra", "common_summand", "construct_from_simple",
    "criterion_verdict", "is_tau_rigid", "nakayama_tau_tilting", "rigid_by_presentation",
    "tau_tilting_all",
]
