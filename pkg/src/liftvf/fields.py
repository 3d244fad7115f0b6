"""The three families of liftable fields on the cross cap target and their lowerables.

Every indexed symbol goes through :func:`resolve_dummy`, so no stored polynomial ever
mentions a dummy coordinate. Component order is ``A_1..A_{k-2}, B_1..B_{k-1}, C_1, C_2``
on the codomain and ``a_1..a_{k-2}, b_1..b_{k-1}, c`` on the domain.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import Poly
from .crosscap import (
    CODOMAIN,
    DOMAIN,
    CrossCapContext,
    CrossCapError,
    VectorField,
    euler_field,
    euler_lowerable,
    w1_image,
    w2_image,
)

FAMILIES = (1, 2, 3)


def _check_j(ctx: CrossCapContext, j: int) -> None:
    if not isinstance(j, int) or not 1 <= j <= ctx.k - 1:
        raise CrossCapError(f"index j must satisfy 1 <= j <= k-1 = {ctx.k - 1}, got {j!r}")


@lru_cache(maxsize=None)
def family1(ctx: CrossCapContext, j: int) -> VectorField:
    _check_j(ctx, j)
    k, U, V = ctx.k, ctx.U, ctx.V
    W1, W2 = ctx.codomain.var("W1"), ctx.codomain.var("W2")
    A = [U(i) * U(j) * ((k - i) * (k - j)) for i in range(1, k - 1)]
    B = []
    for i in range(1, k):
        b = ctx.codomain.zero()
        for r in range(1, i):
            b += U(i + j - r) * V(r) * k
        for r in range(1, i + 1):
            b -= U(r) * V(i + j - r) * k
        b -= U(j) * V(i) * ((i - 1) * (k - j))
        b += V(i + j) * W1 * k - U(i + j) * W2 * k
        B.append(b)
    C1 = U(j) * W1 * (k * (k - j))
    C2 = V(j) * W1 * (-k) + U(j) * W2 * (k - j)
    return VectorField(CODOMAIN, A + B + [C1, C2], (1, j))


@lru_cache(maxsize=None)
def family2(ctx: CrossCapContext, j: int) -> VectorField:
    _check_j(ctx, j)
    k, U, V = ctx.k, ctx.U, ctx.V
    W1 = ctx.codomain.var("W1")
    A = []
    for i in range(1, k - 1):
        a = U(k + i - j + 1) * W1 * (-k * (k + i - j + 1))
        for r in range(1, i + 1):
            a += U(r) * U(k + i - j - r + 1) * (k * (k + i - j - 2 * r + 1))
        a -= U(i + 1) * U(k - j) * (j * (i + 1))
        A.append(a)
    B = []
    for i in range(1, k):
        b = V(k + i - j + 1) * W1 * (-k * (k + i - j + 1))
        for r in range(1, i + 1):
            b += U(r) * V(k + i - j - r + 1) * (k * (k + i - j - r + 1))
            b -= U(k + i - j - r + 1) * V(r) * (k * r)
        b -= U(k - j) * V(i + 1) * (j * (i + 1))
        B.append(b)
    C1 = U(k - j + 1) * W1 * (k * (k - j + 1)) + U(1) * U(k - j) * j
    C2 = V(k - j + 1) * W1 * (k * (k - j + 1)) + V(1) * U(k - j) * j
    return VectorField(CODOMAIN, A + B + [C1, C2], (2, j))


@lru_cache(maxsize=None)
def family3(ctx: CrossCapContext, j: int) -> VectorField:
    _check_j(ctx, j)
    k, U, V = ctx.k, ctx.U, ctx.V
    W2 = ctx.codomain.var("W2")
    A = []
    for i in range(1, k - 1):
        a = U(k + i - j + 1) * W2 * (-k * (k + i - j + 1))
        for r in range(1, i + 1):
            a += U(k + i - j - r + 1) * V(r) * (k * (k + i - j - r + 1))
            a -= U(r) * V(k + i - j - r + 1) * (k * r)
        a -= U(i + 1) * V(k - j) * (k * (i + 1))
        A.append(a)
    B = []
    for i in range(1, k):
        b = V(k + i - j + 1) * W2 * (-k * (k + i - j + 1))
        for r in range(1, i + 1):
            b += V(r) * V(k + i - j - r + 1) * (k * (k + i - j - 2 * r + 1))
        b -= V(i + 1) * V(k - j) * (k * (i + 1))
        B.append(b)
    C1 = U(k - j + 1) * W2 * (k * (k - j + 1)) + U(1) * V(k - j) * k
    C2 = V(k - j + 1) * W2 * (k * (k - j + 1)) + V(1) * V(k - j) * k
    return VectorField(CODOMAIN, A + B + [C1, C2], (3, j))


def family(ctx: CrossCapContext, f, j: int) -> VectorField:
    if f == 1:
        return family1(ctx, j)
    if f == 2:
        return family2(ctx, j)
    if f == 3:
        return family3(ctx, j)
    raise CrossCapError(f"family must be 1, 2 or 3, got {f!r}")


def family1_reduced(ctx: CrossCapContext, j: int) -> VectorField:
    """family1(j) - (k-j) U_j * euler, written out from its own block formulas."""
    _check_j(ctx, j)
    k, U, V = ctx.k, ctx.U, ctx.V
    W1, W2 = ctx.codomain.var("W1"), ctx.codomain.var("W2")
    zero = ctx.codomain.zero()
    B = []
    for i in range(1, k):
        b = zero
        for r in range(1, i):
            b += U(i + j - r) * V(r) * k
        for r in range(1, i + 1):
            b -= U(r) * V(i + j - r) * k
        b -= U(j) * V(i) * ((k - 1) * (k - j))
        b += V(i + j) * W1 * k - U(i + j) * W2 * k
        B.append(b)
    C2 = V(j) * W1 * (-k) - U(j) * W2 * ((k - 1) * (k - j))
    return VectorField(CODOMAIN, [zero] * (k - 2) + B + [zero, C2], (1, j))


@lru_cache(maxsize=None)
def lowerable1(ctx: CrossCapContext, j: int) -> VectorField:
    """Lowerable of family1(j): the reduced b-block plus (k-j) u_j times the Euler lowerable.

    W1 and W2 inside the b-block stand for their domain expressions.
    """
    _check_j(ctx, j)
    k, u, v = ctx.k, ctx.u, ctx.v
    W1, W2 = w1_image(ctx), w2_image(ctx)
    zero = ctx.domain.zero()
    b = []
    for i in range(1, k):
        s = zero
        for r in range(1, i):
            s += u(i + j - r) * v(r) * k
        for r in range(1, i + 1):
            s -= u(r) * v(i + j - r) * k
        s -= u(j) * v(i) * ((k - 1) * (k - j))
        s += v(i + j) * W1 * k - u(i + j) * W2 * k
        b.append(s)
    reduced = VectorField(DOMAIN, [zero] * (k - 2) + b + [zero])
    eta = reduced + euler_lowerable(ctx).scale(u(j) * (k - j))
    return VectorField(DOMAIN, eta.components, (1, j))


def _template_alpha(ctx, j, i, x, z, X) -> Poly:
    k = ctx.k
    a = z(k + i - j + 1) * X * (-k * (k + i - j + 1))
    for r in range(1, i + 1):
        a += x(r) * z(k + i - j - r + 1) * (k * (k + i - j - r + 1))
    for r in range(1, i + 2):
        a -= x(k + i - j - r + 1) * z(r) * (k * r)
    a += x(k) * x(k - j) * z(i + 1) * ((k - j) * (i + 1))
    return a


@lru_cache(maxsize=None)
def lowerable23(ctx: CrossCapContext, f: int, j: int) -> VectorField:
    """Lowerable of family2(j) (x = u) or family3(j) (x = v) from the shared template.

    The a-block uses z = u, the b-block z = v, and the y-component is
    ``k * sum_{r<=j} x_{k-j+r} y^r + x_{k-j} (k - (k-j) x_k)``.
    """
    if f not in (2, 3):
        raise CrossCapError(f"the shared template covers families 2 and 3, got {f!r}")
    _check_j(ctx, j)
    k = ctx.k
    x = ctx.u if f == 2 else ctx.v
    X = w1_image(ctx) if f == 2 else w2_image(ctx)
    y = ctx.domain.var("y")
    a = [_template_alpha(ctx, j, i, x, ctx.u, X) for i in range(1, k - 1)]
    b = [_template_alpha(ctx, j, i, x, ctx.v, X) for i in range(1, k)]
    c = x(k - j) * (x(k) * (-(k - j)) + k)
    for r in range(1, j + 1):
        c += x(k - j + r) * y ** r * k
    return VectorField(DOMAIN, a + b + [c], (f, j))


def lowerable(ctx: CrossCapContext, f, j: int) -> VectorField:
    if f == 1:
        return lowerable1(ctx, j)
    return lowerable23(ctx, f, j)


def generator_set(ctx: CrossCapContext) -> list[VectorField]:
    """The 3k-2 generators: family 1, 2, 3 by ascending j, then the Euler field."""
    out = [family(ctx, f, j) for f in FAMILIES for j in range(1, ctx.k)]
    out.append(euler_field(ctx))
    return out


def field_degree_shift(ctx: CrossCapContext, label) -> int:
    """The grading shift delta of a generator: component i has degree d_i + delta."""
    f, j = label
    if f == "euler":
        return 0
    if f == 1:
        return ctx.k - j
    return j - 1
