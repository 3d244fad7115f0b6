"""Defining equation of the cross cap image and tangency tests against it.

The image is cut out by ``h = det(M - W2*I_k)``, where M is the matrix of
multiplication by ``f(y) = sum V_i y^i`` on ``Q[U,V,W1][y] / (g)`` with
``g(y) = y^k + sum U_i y^i - W1``, in the basis ``1, y, ..., y^{k-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraError, Poly, PolyMatrix, determinant, exact_div_univariate
from .crosscap import CODOMAIN, CrossCapContext, VectorField, build_phi


class ImageEquationError(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class ImageEquation:
    k: int
    h: Poly


def _reduce_mod_g(ctx: CrossCapContext, coeffs: list) -> list:
    """Reduce a polynomial in y (list of codomain coefficients) modulo g(y)."""
    k = ctx.k
    coeffs = list(coeffs)
    W1 = ctx.codomain.var("W1")
    # y^k = W1 - sum_{i=1}^{k-2} U_i y^i
    for d in range(len(coeffs) - 1, k - 1, -1):
        c = coeffs[d]
        if c.is_zero():
            continue
        coeffs[d] = ctx.codomain.zero()
        s = d - k
        coeffs[s] = coeffs[s] + c * W1
        for i in range(1, k - 1):
            coeffs[s + i] = coeffs[s + i] - c * ctx.U(i)
    return coeffs[:k] + [ctx.codomain.zero()] * max(0, k - len(coeffs))


@lru_cache(maxsize=None)
def multiplication_matrix(ctx: CrossCapContext) -> PolyMatrix:
    k = ctx.k
    zero = ctx.codomain.zero()
    f = [zero] + [ctx.V(i) for i in range(1, k)]  # coefficients of y^0..y^{k-1}
    columns = []
    for c in range(k):
        prod = [zero] * c + f
        columns.append(_reduce_mod_g(ctx, prod))
    return PolyMatrix(ctx.codomain, k, k, [columns[col][row] for row in range(k) for col in range(k)])


@lru_cache(maxsize=None)
def image_equation(ctx: CrossCapContext) -> ImageEquation:
    k = ctx.k
    M = multiplication_matrix(ctx)
    W2 = ctx.codomain.var("W2")
    h = determinant(M - PolyMatrix.identity(ctx.codomain, k, W2))
    eq = ImageEquation(k, h)
    problems = image_equation_problems(ctx, eq)
    if problems:
        raise ImageEquationError("; ".join(problems))
    return eq


def image_equation_problems(ctx: CrossCapContext, eq: ImageEquation) -> list[str]:
    out = []
    h = eq.h
    if h.degree("W2") != ctx.k:
        out.append(f"deg_W2 h = {h.degree('W2')}, expected {ctx.k}")
    lead = h.coefficients_in("W2").get(ctx.k)
    if lead is None or lead != (-1) ** ctx.k:
        out.append(f"leading W2 coefficient {lead}, expected {(-1) ** ctx.k}")
    if not build_phi(ctx).compose(h).is_zero():
        out.append("h does not vanish on the parametrization")
    return out


def apply_field(xi: VectorField, p: Poly) -> Poly:
    """xi as a derivation: sum_i xi_i * dp/dX_i."""
    if xi.table != p.table:
        raise AlgebraError("field and polynomial live on different tables")
    if len(xi) != len(p.table):
        raise AlgebraError(f"field has {len(xi)} components, table has {len(p.table)} variables")
    acc = p.table.zero()
    for comp, name in zip(xi, p.table.names):
        if comp.is_zero():
            continue
        d = p.diff(name)
        if d:
            acc = acc + comp * d
    return acc


@dataclass(frozen=True)
class Tangency:
    factor: Poly | None
    remainder: Poly | None

    @property
    def tangent(self) -> bool:
        return self.factor is not None


def tangency_factor(ctx: CrossCapContext, xi: VectorField) -> Tangency:
    if xi.space != CODOMAIN:
        raise AlgebraError("tangency is defined for codomain fields")
    h = image_equation(ctx).h
    q, r = exact_div_univariate(apply_field(xi, h), h, "W2")
    if r.is_zero():
        return Tangency(q, None)
    return Tangency(None, r)


def derlog0_check(ctx: CrossCapContext, xi: VectorField) -> bool:
    return apply_field(xi, image_equation(ctx).h).is_zero()
