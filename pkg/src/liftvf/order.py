"""Negative lexicographic order on codomain monomials, module leading terms, and a
degree-by-degree linear-algebra check that the generators span every tangent field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import EchelonBasis, Monomial, Rational, TableMismatchError, VarTable
from .crosscap import CrossCapContext, CrossCapError, VectorField
from .fields import generator_set
from .image import image_equation


def compare_neglex(a: Monomial, b: Monomial) -> int:
    """1 if a > b, -1 if a < b, 0 if equal.

    a > b iff the first nonzero entry of a - b is negative. The order is local: 1 is
    the largest monomial.
    """
    if len(a) != len(b):
        raise TableMismatchError("monomials over tables of different sizes")
    for x, y in zip(a, b):
        if x != y:
            return 1 if x < y else -1
    return 0


def neglex_key(mono: Monomial) -> tuple:
    """Sort key realising the negative lexicographic order (bigger key = bigger monomial)."""
    return tuple(-e for e in mono)


@dataclass(frozen=True)
class ModuleTerm:
    coeff: Rational
    monomial: Monomial
    position: int  # 1-based

    def render(self, table: VarTable) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(table.names, self.monomial) if e]
        return f"({self.coeff}, {'*'.join(parts) or '1'}, e_{self.position})"

    def same_up_to_scalar(self, other: "ModuleTerm") -> bool:
        return self.monomial == other.monomial and self.position == other.position


def leading_term(ctx: CrossCapContext, xi: VectorField) -> ModuleTerm:
    """Largest (monomial, position) over all components; ties go to the larger position."""
    best = None
    for pos, comp in enumerate(xi, start=1):
        for mono, c in comp.items():
            key = (neglex_key(mono), pos)
            if best is None or key > best[0]:
                best = (key, ModuleTerm(c, mono, pos))
    if best is None:
        raise CrossCapError("the zero field has no leading term")
    return best[1]


def weighted_degree(ctx: CrossCapContext, xi: VectorField) -> int:
    """The shift delta such that component i is weighted homogeneous of degree d_i + delta."""
    shifts = set()
    for comp, d in zip(xi, ctx.degrees):
        shifts |= {w - d for w in comp.weighted_degrees()}
    if len(shifts) != 1:
        raise CrossCapError(f"field is not graded (shifts {sorted(shifts)})")
    return shifts.pop()


def expected_leading_terms(ctx: CrossCapContext) -> dict:
    """Leading terms claimed for the generators, on the index ranges where they are stated.

    Values are ``(coeff, variable, position)``; coefficients are informative only.
    """
    k = ctx.k
    out = {("euler", None): (k, "W2", 2 * k - 1)}
    for j in range(1, k - 1):
        out[(1, j)] = (-k, "W2", 2 * k - j - 2)
    out[(2, 1)] = (k * k, "W1", 2 * k - 2)
    for j in range(2, k - 1):
        out[(2, j)] = (-k * k, "W1", j - 1)
    out[(3, 1)] = (k * k, "W2", 2 * k - 2)
    for j in range(2, k):
        out[(3, j)] = (-k * k, "W2", j - 1)
    return out


@dataclass(frozen=True)
class LeadingTermRow:
    label: tuple
    term: ModuleTerm
    expected: tuple | None  # None off the stated ranges
    matches: bool | None


def leading_term_table(ctx: CrossCapContext) -> list[LeadingTermRow]:
    expected = expected_leading_terms(ctx)
    rows = []
    for xi in generator_set(ctx):
        lt = leading_term(ctx, xi)
        exp = expected.get(xi.label)
        match = None
        if exp is not None:
            mono = ctx.codomain.var(exp[1]).sorted_terms()[0][0]
            match = lt.monomial == mono and lt.position == exp[2]
        rows.append(LeadingTermRow(xi.label, lt, exp, match))
    return rows


# -- graded membership ---------------------------------------------------------


@lru_cache(maxsize=None)
def monomials_of_degree(weights: tuple, degree: int) -> tuple:
    """All exponent vectors with sum e_i * w_i == degree (weights must be positive)."""
    if degree < 0:
        return ()
    n = len(weights)
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            if left % weights[i] == 0:
                out.append(tuple(acc) + (left // weights[i],))
            return
        for e in range(left // weights[i] + 1):
            acc.append(e)
            rec(i + 1, left - e * weights[i], acc)
            acc.pop()

    if n == 0:
        return ((),) if degree == 0 else ()
    rec(0, degree, [])
    return tuple(out)


@dataclass(frozen=True)
class SliceReport:
    delta: int
    tangent_dim: int
    span_dim: int

    @property
    def ok(self) -> bool:
        return self.tangent_dim == self.span_dim

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "tangent_dim": self.tangent_dim,
            "span_dim": self.span_dim,
            "ok": self.ok,
        }


def tangent_slice_dimension(ctx: CrossCapContext, delta: int) -> int:
    """dim of { xi graded of shift delta : xi(h) = q*h for some q }."""
    h = image_equation(ctx).h
    table = ctx.codomain
    degs = ctx.degrees
    columns = []  # each unknown contributes the polynomial it multiplies
    partials = [h.diff(n) for n in table.names]
    for pos, d in enumerate(degs):
        if partials[pos].is_zero():
            # unknowns in this slot still count, but contribute nothing
            columns.extend(None for _ in monomials_of_degree(degs, d + delta))
            continue
        for m in monomials_of_degree(degs, d + delta):
            columns.append(partials[pos].mul_term(m, 1))
    for m in monomials_of_degree(degs, delta):
        columns.append(h.mul_term(m, -1))
    index: dict = {}
    basis = EchelonBasis()
    for col in columns:
        if col is None:
            continue
        vec = {}
        for mono, c in col.items():
            vec[index.setdefault(mono, len(index))] = c
        basis.add(vec)
    return len(columns) - basis.rank


def generator_span_dimension(ctx: CrossCapContext, delta: int) -> int:
    from .fields import field_degree_shift

    degs = ctx.degrees
    index: dict = {}
    basis = EchelonBasis()
    for g in generator_set(ctx):
        dg = field_degree_shift(ctx, g.label)
        for m in monomials_of_degree(degs, delta - dg):
            vec: dict = {}
            for pos, comp in enumerate(g):
                for mono, c in comp.items():
                    key = (pos, tuple(x + y for x, y in zip(mono, m)))
                    vec[index.setdefault(key, len(index))] = Fraction(c)
            basis.add(vec)
    return basis.rank


def graded_membership_check(
    ctx: CrossCapContext, degree_bound: int | None = None, min_delta: int | None = None
) -> list[SliceReport]:
    """Compare tangent-field and generator-span dimensions slice by slice.

    Slices start at the most negative shift that still admits a constant component.
    """
    if degree_bound is None:
        degree_bound = 2 * ctx.k
    if min_delta is None:
        min_delta = -max(ctx.degrees)
    return [
        SliceReport(d, tangent_slice_dimension(ctx, d), generator_span_dimension(ctx, d))
        for d in range(min_delta, degree_bound + 1)
    ]
