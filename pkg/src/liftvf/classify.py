"""Linear functions on the cross cap target: mod m^2 forms and the codimension-1 rank test.

For a linear h, the ideal generated by {xi(h) : xi a generator} together with h equals
the maximal ideal m exactly when its linear parts span the dual space (Nakayama), so
certification is a rank computation on a constant matrix.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .algebra import Poly, PolyMatrix, Rational, as_rational, rank
from .crosscap import CrossCapContext, CrossCapError, VectorField
from .fields import FAMILIES, family, generator_set


class LinearFunctionError(ValueError):
    pass


@dataclass(frozen=True)
class LinearFunction:
    alpha: tuple  # alpha_1..alpha_{k-2}
    beta: tuple  # beta_1..beta_{k-1}
    gamma1: Rational
    gamma2: Rational

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(as_rational(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(as_rational(b) for b in self.beta))
        object.__setattr__(self, "gamma1", as_rational(self.gamma1))
        object.__setattr__(self, "gamma2", as_rational(self.gamma2))

    @property
    def k(self) -> int:
        return len(self.beta) + 1

    def coefficients(self) -> tuple:
        """Coefficient of each codomain coordinate, in table order."""
        return self.alpha + self.beta + (self.gamma1, self.gamma2)

    def a(self, i: int) -> Rational:
        return self.alpha[i - 1] if 1 <= i <= len(self.alpha) else 0

    def b(self, i: int) -> Rational:
        return self.beta[i - 1] if 1 <= i <= len(self.beta) else 0

    def is_zero(self) -> bool:
        return not any(self.coefficients())

    def scale(self, c) -> "LinearFunction":
        c = as_rational(c)
        return LinearFunction(
            [a * c for a in self.alpha], [b * c for b in self.beta], self.gamma1 * c, self.gamma2 * c
        )

    def as_poly(self, ctx: CrossCapContext) -> Poly:
        _check_k(ctx, self)
        return sum(
            (g * c for g, c in zip(ctx.codomain.gens(), self.coefficients()) if c),
            ctx.codomain.zero(),
        )

    def to_json(self) -> dict:
        return {
            "alpha": [str(a) for a in self.alpha],
            "beta": [str(b) for b in self.beta],
            "gamma1": str(self.gamma1),
            "gamma2": str(self.gamma2),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LinearFunction":
        try:
            return cls(
                [str(a) for a in obj["alpha"]],
                [str(b) for b in obj["beta"]],
                str(obj["gamma1"]),
                str(obj["gamma2"]),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise LinearFunctionError(f"malformed linear function: {exc}") from exc

    @classmethod
    def load(cls, path) -> "LinearFunction":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _check_k(ctx: CrossCapContext, h: LinearFunction) -> None:
    if len(h.alpha) != ctx.k - 2 or len(h.beta) != ctx.k - 1:
        raise LinearFunctionError(
            f"k={ctx.k} needs {ctx.k - 2} alpha and {ctx.k - 1} beta coefficients, "
            f"got {len(h.alpha)} and {len(h.beta)}"
        )


def truncate_mod_m2(p: Poly) -> Poly:
    return p.truncate(1)


def field_applied_to_linear(ctx: CrossCapContext, xi: VectorField, h: LinearFunction) -> Poly:
    _check_k(ctx, h)
    acc = ctx.codomain.zero()
    for comp, c in zip(xi, h.coefficients()):
        if c:
            acc = acc + comp * c
    return acc


def modulom_closed_form(ctx: CrossCapContext, f: int, j: int, h: LinearFunction) -> Poly:
    """The closed-form expressions for xi^f_j(h) mod m^2, evaluated term by term as written.

    Products of two coordinates are kept, so callers compare after truncation.
    """
    _check_k(ctx, h)
    if not 1 <= j <= ctx.k - 1:
        raise CrossCapError(f"index j must satisfy 1 <= j <= k-1 = {ctx.k - 1}, got {j}")
    k, U, V = ctx.k, ctx.U, ctx.V
    W1, W2 = ctx.codomain.var("W1"), ctx.codomain.var("W2")
    a, b = h.a, h.b
    out = ctx.codomain.zero()
    if f == 1:
        out = W2 * (-h.b(k - j))
        for i in range(k - j + 1, k):
            out += V(i + j - k) * b(i)
        return out * k
    if f == 2:
        for i in range(j - 1, k - 1):
            out += U(i - j + 1) * (a(i) * (k - i + j - 1))
        for i in range(j - 1, k):
            out -= V(i - j + 1) * (k * (i - j + 1) * b(i))
        out -= U(k - j + 1) * W1 * (k * (k - j + 1) * h.gamma1)
        out -= W1 * (k * k * a(j - 1))
        return out
    if f == 3:
        out = U(k + j - 1) * W2 * (k * (k - j + 1) * h.gamma1)
        out -= W2 * (k * k * a(j - 1))
        for i in range(j, k - 1):
            out += V(i - j + 1) * (k * k * a(i))
        return out
    raise CrossCapError(f"family must be 1, 2 or 3, got {f!r}")


@dataclass(frozen=True)
class ClosedFormComparison:
    family: int
    j: int
    direct: Poly
    closed: Poly

    @property
    def match(self) -> bool:
        return self.direct == self.closed


def compare_closed_forms(ctx: CrossCapContext, h: LinearFunction) -> list[ClosedFormComparison]:
    """Direct truncation (normative) against the closed forms, for every family member."""
    out = []
    for f in FAMILIES:
        for j in range(1, ctx.k):
            direct = truncate_mod_m2(field_applied_to_linear(ctx, family(ctx, f, j), h))
            closed = truncate_mod_m2(modulom_closed_form(ctx, f, j, h))
            out.append(ClosedFormComparison(f, j, direct, closed))
    return out


@dataclass(frozen=True)
class LinearPartMatrix:
    labels: tuple  # row sources: generator labels, then "h"
    matrix: PolyMatrix

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols


def _linear_row(ctx: CrossCapContext, p: Poly) -> list:
    gens = ctx.codomain.gens()
    lin = truncate_mod_m2(p)
    if lin.constant_term():
        raise CrossCapError(f"generator of the ideal has a constant term: {p}")
    return [lin.coeff(g.sorted_terms()[0][0]) for g in gens]


def linear_part_matrix(ctx: CrossCapContext, h: LinearFunction) -> LinearPartMatrix:
    rows, labels = [], []
    for xi in generator_set(ctx):
        rows.append(_linear_row(ctx, field_applied_to_linear(ctx, xi, h)))
        labels.append(xi.label)
    rows.append(_linear_row(ctx, h.as_poly(ctx)))
    labels.append("h")
    return LinearPartMatrix(tuple(labels), PolyMatrix.from_rows(ctx.codomain, rows))


@dataclass(frozen=True)
class Certificate:
    k: int
    rank: int
    certified: bool

    def to_json(self) -> dict:
        return {"k": self.k, "rank": self.rank, "certified": self.certified}


def codim1_certificate(ctx: CrossCapContext, h: LinearFunction) -> Certificate:
    """certified iff the linear parts have full rank 2k-1; never claims codimension != 1."""
    r = rank(linear_part_matrix(ctx, h).matrix)
    return Certificate(ctx.k, r, r == ctx.p)


def random_linear_function(k: int, rng: random.Random, low: int = -9, high: int = 9) -> LinearFunction:
    """Small-integer coefficients with alpha_{k-2} and beta_{k-1} forced nonzero by rejection."""
    while True:
        alpha = [rng.randint(low, high) for _ in range(k - 2)]
        beta = [rng.randint(low, high) for _ in range(k - 1)]
        g1, g2 = rng.randint(low, high), rng.randint(low, high)
        if (k == 2 or alpha[-1] != 0) and beta[-1] != 0:
            return LinearFunction(alpha, beta, g1, g2)


def trial_seeds(root_seed: int, n: int) -> list[int]:
    rng = random.Random(root_seed)
    return [rng.getrandbits(63) for _ in range(n)]


def random_sweep(ctx: CrossCapContext, n: int, seed: int) -> list[tuple[LinearFunction, Certificate]]:
    out = []
    for s in trial_seeds(seed, n):
        h = random_linear_function(ctx.k, random.Random(s))
        out.append((h, codim1_certificate(ctx, h)))
    return out

