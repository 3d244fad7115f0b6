"""Liftable vector fields over the minimal cross cap maps, checked by exact algebra."""

from .algebra import Poly, PolyMatrix, VarTable, determinant, exact_div_univariate, rank
from .crosscap import VectorField, build_context, build_phi, euler_field, jacobian
from .fields import family, generator_set, lowerable
from .image import apply_field, derlog0_check, image_equation, tangency_factor
from .lift import lift_euler, lift_residual, verify_family

__all__ = [
    "Poly",
    "PolyMatrix",
    "VarTable",
    "VectorField",
    "apply_field",
    "build_context",
    "build_phi",
    "derlog0_check",
    "determinant",
    "euler_field",
    "exact_div_univariate",
    "family",
    "generator_set",
    "image_equation",
    "jacobian",
    "lift_euler",
    "lift_residual",
    "lowerable",
    "rank",
    "tangency_factor",
    "verify_family",
]
