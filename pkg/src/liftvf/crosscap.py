"""The minimal cross cap of multiplicity k, its Jacobian and its grading.

Domain coordinates are ``u1..u{k-2}, v1..v{k-1}, y``; codomain coordinates are
``U1..U{k-2}, V1..V{k-1}, W1, W2``. Variable weights (domain) and degrees
(codomain) are stored as the weights of the respective :class:`VarTable`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .algebra import AlgebraError, Poly, PolyMatrix, VarTable

DOMAIN = "domain"
CODOMAIN = "codomain"


class CrossCapError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CrossCapContext:
    k: int
    domain: VarTable
    codomain: VarTable

    @property
    def n(self) -> int:
        return 2 * self.k - 2

    @property
    def p(self) -> int:
        return 2 * self.k - 1

    @property
    def weights(self) -> tuple[int, ...]:
        return self.domain.weights

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.codomain.weights

    def table(self, space: str) -> VarTable:
        if space == DOMAIN:
            return self.domain
        if space == CODOMAIN:
            return self.codomain
        raise CrossCapError(f"unknown space {space!r}")

    # shorthand used all over the field formulas
    def U(self, i: int) -> Poly:
        return resolve_dummy(self, "U", i)

    def V(self, i: int) -> Poly:
        return resolve_dummy(self, "V", i)

    def u(self, i: int) -> Poly:
        return resolve_dummy(self, "u", i)

    def v(self, i: int) -> Poly:
        return resolve_dummy(self, "v", i)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "domain": list(self.domain.names),
            "codomain": list(self.codomain.names),
            "weights": dict(zip(self.domain.names, self.domain.weights)),
            "degrees": dict(zip(self.codomain.names, self.codomain.weights)),
        }


@lru_cache(maxsize=None)
def build_context(k: int) -> CrossCapContext:
    if not isinstance(k, int) or k < 2:
        raise CrossCapError(f"multiplicity k must be an integer >= 2, got {k!r}")
    us = [f"u{i}" for i in range(1, k - 1)]
    vs = [f"v{i}" for i in range(1, k)]
    grade = [k - i for i in range(1, k - 1)] + [k - i for i in range(1, k)]
    domain = VarTable(us + vs + ["y"], grade + [1])
    codomain = VarTable(
        [n.upper() for n in us + vs] + ["W1", "W2"], grade + [k, k]
    )
    return CrossCapContext(k, domain, codomain)


def resolve_dummy(ctx: CrossCapContext, family: str, index: int) -> Poly:
    """Indexed symbol with the dummy conventions applied.

    ``U_{k-1} = V_k = 0``, ``U_k = 1`` and every index <= 0 or > k gives 0; the same
    rules hold for the lowercase domain symbols.
    """
    k = ctx.k
    if family in ("U", "V"):
        table = ctx.codomain
    elif family in ("u", "v"):
        table = ctx.domain
    else:
        raise CrossCapError(f"unknown symbol family {family!r}")
    if family in ("U", "u"):
        if 1 <= index <= k - 2:
            return table.var(f"{family}{index}")
        if index == k:
            return table.one()
        return table.zero()
    if 1 <= index <= k - 1:
        return table.var(f"{family}{index}")
    return table.zero()


@dataclass(frozen=True)
class VectorField:
    """A vector field as an ordered list of component polynomials.

    ``label`` is ``(family, j)`` for the generator families, ``("euler", None)`` for the
    Euler field, or None.
    """

    space: str
    components: tuple
    label: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.space not in (DOMAIN, CODOMAIN):
            raise CrossCapError(f"unknown space {self.space!r}")
        tables = {c.table for c in self.components}
        if len(tables) > 1:
            raise AlgebraError("vector field components on different tables")

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Poly:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    @property
    def table(self) -> VarTable:
        return self.components[0].table

    @property
    def name(self) -> str:
        return field_name(self.label)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "VectorField") -> "VectorField":
        _check_compatible(self, other)
        return VectorField(self.space, [a + b for a, b in zip(self, other)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        _check_compatible(self, other)
        return VectorField(self.space, [a - b for a, b in zip(self, other)])

    def scale(self, g) -> "VectorField":
        """Multiply every component by a scalar or by a polynomial on the same table."""
        return VectorField(self.space, [c * g for c in self.components])

    def to_json(self) -> dict:
        fam, j = self.label if self.label else (None, None)
        return {
            "name": self.name,
            "family": fam,
            "j": j,
            "space": self.space,
            "components": [c.to_json() for c in self.components],
        }

    @classmethod
    def from_json(cls, ctx: CrossCapContext, obj: dict) -> "VectorField":
        table = ctx.table(obj["space"])
        label = None if obj.get("family") is None else (obj["family"], obj.get("j"))
        return cls(obj["space"], [Poly.from_json(table, c) for c in obj["components"]], label)


def _check_compatible(a: VectorField, b: VectorField) -> None:
    if a.space != b.space or len(a) != len(b):
        raise CrossCapError("vector fields live on different spaces")


def field_name(label) -> str:
    if not label:
        return "field"
    fam, j = label
    if fam == "euler":
        return "xi_e"
    return f"xi{fam}_{j}"


@dataclass(frozen=True, eq=False)
class MapGerm:
    context: CrossCapContext
    components: tuple

    def assignment(self) -> dict[str, Poly]:
        """Codomain variable -> its pullback along the map (for composing fields)."""
        return dict(zip(self.context.codomain.names, self.components))

    def compose(self, p: Poly) -> Poly:
        """p o phi for a codomain polynomial p."""
        return p.subs(self.assignment(), self.context.domain)


def w1_image(ctx: CrossCapContext) -> Poly:
    """W1 o phi = y^k + sum u_i y^i."""
    y = ctx.domain.var("y")
    out = y ** ctx.k
    for i in range(1, ctx.k - 1):
        out = out + ctx.u(i) * y ** i
    return out


def w2_image(ctx: CrossCapContext) -> Poly:
    """W2 o phi = sum v_i y^i."""
    y = ctx.domain.var("y")
    out = ctx.domain.zero()
    for i in range(1, ctx.k):
        out = out + ctx.v(i) * y ** i
    return out


@lru_cache(maxsize=None)
def build_phi(ctx: CrossCapContext) -> MapGerm:
    coords = ctx.domain.gens()[:-1]
    return MapGerm(ctx, tuple(coords) + (w1_image(ctx), w2_image(ctx)))


@lru_cache(maxsize=None)
def jacobian(ctx: CrossCapContext) -> PolyMatrix:
    phi = build_phi(ctx)
    names = ctx.domain.names
    return PolyMatrix(
        ctx.domain, ctx.p, ctx.n, [comp.diff(x) for comp in phi.components for x in names]
    )


def euler_field(ctx: CrossCapContext) -> VectorField:
    comps = [g * d for g, d in zip(ctx.codomain.gens(), ctx.degrees)]
    return VectorField(CODOMAIN, comps, ("euler", None))


def euler_lowerable(ctx: CrossCapContext) -> VectorField:
    """(w_1 x_1, ..., w_n x_n) on the domain."""
    comps = [g * w for g, w in zip(ctx.domain.gens(), ctx.weights)]
    return VectorField(DOMAIN, comps, ("euler", None))


def check_quasihomogeneous(
    ctx: CrossCapContext,
    phi: MapGerm | Sequence[Poly],
    weights: Sequence[int] | None = None,
    degrees: Sequence[int] | None = None,
) -> bool:
    """True iff every monomial of component j has weighted degree exactly d_j."""
    comps = phi.components if isinstance(phi, MapGerm) else tuple(phi)
    weights = ctx.weights if weights is None else weights
    degrees = ctx.degrees if degrees is None else degrees
    if len(comps) != len(degrees):
        raise CrossCapError("one degree per component is required")
    return all(c.is_weighted_homogeneous(d, weights) for c, d in zip(comps, degrees))
