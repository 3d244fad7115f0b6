"""Exact verification of the lifting identity  d(phi) . eta = xi o phi."""

from __future__ import annotations

from dataclasses import dataclass

from .crosscap import (
    CODOMAIN,
    DOMAIN,
    CrossCapContext,
    CrossCapError,
    VectorField,
    build_phi,
    euler_field,
    euler_lowerable,
    jacobian,
)
from .fields import FAMILIES, family, lowerable


def compose_field(ctx: CrossCapContext, xi: VectorField) -> list:
    phi = build_phi(ctx)
    return [phi.compose(c) for c in xi]


def lift_residual(ctx: CrossCapContext, xi: VectorField, eta: VectorField) -> VectorField:
    """J_phi . eta - xi o phi, one domain polynomial per codomain coordinate."""
    if xi.space != CODOMAIN or len(xi) != ctx.p:
        raise CrossCapError(f"xi must be a codomain field with {ctx.p} components")
    if eta.space != DOMAIN or len(eta) != ctx.n:
        raise CrossCapError(f"eta must be a domain field with {ctx.n} components")
    pushed = jacobian(ctx).apply(list(eta))
    pulled = compose_field(ctx, xi)
    return VectorField(DOMAIN, [a - b for a, b in zip(pushed, pulled)])


@dataclass(frozen=True)
class LiftReport:
    k: int
    name: str
    ok: bool
    residual_terms: tuple  # nonzero-term count per residual component

    @property
    def residual_norm(self) -> int:
        return sum(self.residual_terms)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "field": self.name,
            "ok": self.ok,
            "residual_norm": self.residual_norm,
            "residual_terms": list(self.residual_terms),
        }


def _report(ctx, name, xi, eta) -> LiftReport:
    res = lift_residual(ctx, xi, eta)
    counts = tuple(len(c) for c in res)
    return LiftReport(ctx.k, name, not any(counts), counts)


def verify_pair(ctx: CrossCapContext, xi: VectorField, eta: VectorField) -> LiftReport:
    return _report(ctx, xi.name, xi, eta)


def verify_family(ctx: CrossCapContext, f: int, j: int) -> LiftReport:
    xi = family(ctx, f, j)
    return _report(ctx, xi.name, xi, lowerable(ctx, f, j))


def lift_euler(ctx: CrossCapContext) -> tuple[VectorField, bool]:
    eta = euler_lowerable(ctx)
    rep = _report(ctx, "xi_e", euler_field(ctx), eta)
    return eta, rep.ok


def verify_all(ctx: CrossCapContext) -> list[LiftReport]:
    """Every family member and the Euler field, in generator-set order."""
    out = [verify_family(ctx, f, j) for f in FAMILIES for j in range(1, ctx.k)]
    out.append(_report(ctx, "xi_e", euler_field(ctx), euler_lowerable(ctx)))
    return out
