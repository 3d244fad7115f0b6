"""Sparse multivariate polynomials and exact linear algebra over the rationals.

Coefficients are Python ints or :class:`fractions.Fraction`; a Fraction with
denominator 1 is always stored as an int so the common integer case stays fast.
Every value in this module is immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Monomial = tuple  # tuple[int, ...], one exponent per table variable


class AlgebraError(ValueError):
    pass


class TableMismatchError(AlgebraError):
    pass


class NotDivisibleError(AlgebraError):
    pass


def as_rational(c) -> Rational:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to the canonical coefficient type."""
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        c = Fraction(c)
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def _norm(c: Rational) -> Rational:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def format_rational(c: Rational) -> str:
    return str(c)


class VarTable:
    """An ordered, fixed list of variable names with optional nonnegative weights."""

    __slots__ = ("names", "weights", "_index")

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate variable names in {names}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise AlgebraError("one weight per variable is required")
        if any(w < 0 for w in weights):
            raise AlgebraError("weights must be nonnegative")
        self.names = names
        self.weights = weights
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown variable {name!r}; table has {self.names}") from None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, VarTable):
            return NotImplemented
        return self.names == other.names and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)!r}, weights={list(self.weights)!r})"

    def zero(self) -> "Poly":
        return Poly(self)

    def one(self) -> "Poly":
        return Poly.const(self, 1)

    def var(self, name: str) -> "Poly":
        return Poly.var(self, name)

    def gens(self) -> list["Poly"]:
        return [Poly.var(self, n) for n in self.names]

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def weighted_degree(self, mono: Monomial) -> int:
        return sum(e * w for e, w in zip(mono, self.weights))


class Poly:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero rationals."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[Monomial, Rational] | None = None):
        self.table = table
        clean: dict = {}
        n = len(table)
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != n or any(e < 0 for e in mono):
                    raise AlgebraError(f"bad exponent vector {mono} for {n} variables")
                c = as_rational(c)
                if c:
                    c = _norm(clean.get(mono, 0) + c)
                    if c:
                        clean[mono] = c
                    else:
                        clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, table: VarTable, terms: dict) -> "Poly":
        # terms must already be canonical: nonzero, normalized, correct length
        p = object.__new__(cls)
        p.table = table
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, table: VarTable, c) -> "Poly":
        c = as_rational(c)
        return cls._raw(table, {table.unit_monomial(): c} if c else {})

    @classmethod
    def var(cls, table: VarTable, name: str) -> "Poly":
        i = table.index(name)
        mono = tuple(1 if t == i else 0 for t in range(len(table)))
        return cls._raw(table, {mono: 1})

    @classmethod
    def monomial(cls, table: VarTable, mono: Monomial, c=1) -> "Poly":
        return cls(table, {tuple(mono): c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        if not self._terms:
            return True
        return len(self._terms) == 1 and self.table.unit_monomial() in self._terms

    def constant_term(self) -> Rational:
        return self._terms.get(self.table.unit_monomial(), 0)

    def coeff(self, mono: Monomial) -> Rational:
        return self._terms.get(tuple(mono), 0)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def degree(self, name: str) -> int:
        i = self.table.index(name)
        return max((m[i] for m in self._terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int] | None = None) -> set:
        w = self.table.weights if weights is None else weights
        return {sum(e * x for e, x in zip(m, w)) for m in self._terms}

    def is_weighted_homogeneous(self, degree: int, weights: Sequence[int] | None = None) -> bool:
        return self.weighted_degrees(weights) <= {degree}

    def variables(self) -> list[str]:
        used = [any(m[i] for m in self._terms) for i in range(len(self.table))]
        return [n for n, u in zip(self.table.names, used) if u]

    def sorted_terms(self) -> list:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self._terms.items(), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.table is not self.table and other.table != self.table:
                raise TableMismatchError(
                    f"variable tables differ: {self.table.names} vs {other.table.names}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(self.table, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Poly._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.table, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = as_rational(c)
        if not c:
            return Poly._raw(self.table, {})
        return Poly._raw(self.table, {m: _norm(v * c) for m, v in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Poly._raw(self.table, {m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise AlgebraError("only nonnegative integer powers are supported")
        result = Poly.const(self.table, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, mono: Monomial, c: Rational) -> "Poly":
        if not c:
            return Poly._raw(self.table, {})
        return Poly._raw(
            self.table,
            {tuple(x + y for x, y in zip(m, mono)): _norm(v * c) for m, v in self._terms.items()},
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.table == other.table and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({self.table.unit_monomial(): _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and composition ------------------------------------------

    def diff(self, name: str) -> "Poly":
        i = self.table.index(name)
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Poly._raw(self.table, out)

    def subs(self, assignment: Mapping[str, "Poly"], target: VarTable | None = None) -> "Poly":
        """Compose: replace each variable by the polynomial it is mapped to.

        Every variable that actually occurs must be assigned. Unused variables may be
        left out. The result lives on ``target`` (inferred from the assignment values).
        """
        images = [assignment.get(n) for n in self.table.names]
        if target is None:
            for img in images:
                if isinstance(img, Poly):
                    target = img.table
                    break
            else:
                target = self.table
        imgs: list = []
        for n, img in zip(self.table.names, images):
            if img is None:
                imgs.append(None)
            elif isinstance(img, Poly):
                if img.table != target:
                    raise TableMismatchError(f"image of {n} lives on a different table")
                imgs.append(img)
            else:
                imgs.append(Poly.const(target, img))
        powers: dict = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                powers[key] = imgs[i] if e == 1 else power(i, e - 1) * imgs[i]
            return powers[key]

        acc: dict = {}
        for m, c in self._terms.items():
            term = Poly.const(target, c)
            for i, e in enumerate(m):
                if e:
                    if imgs[i] is None:
                        raise AlgebraError(f"no assignment for variable {self.table.names[i]!r}")
                    term = term * power(i, e)
            for tm, tc in term._terms.items():
                acc[tm] = acc.get(tm, 0) + tc
        return Poly._raw(target, {m: _norm(c) for m, c in acc.items() if c})

    def retable(self, target: VarTable) -> "Poly":
        """Re-express over another table containing every variable used here."""
        idx = [target.index(n) for n in self.table.names]
        out = {}
        for m, c in self._terms.items():
            nm = [0] * len(target)
            for i, e in zip(idx, m):
                nm[i] = e
            out[tuple(nm)] = c
        return Poly._raw(target, out)

    def coefficients_in(self, name: str) -> dict[int, "Poly"]:
        """Split as a univariate polynomial in ``name``: power -> coefficient Poly."""
        i = self.table.index(name)
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = c
        return {e: Poly._raw(self.table, d) for e, d in parts.items()}

    def truncate(self, max_total_degree: int) -> "Poly":
        return Poly._raw(
            self.table, {m: c for m, c in self._terms.items() if sum(m) <= max_total_degree}
        )

    def homogeneous_part(self, total_degree: int) -> "Poly":
        return Poly._raw(
            self.table, {m: c for m, c in self._terms.items() if sum(m) == total_degree}
        )

    def exact_div(self, d: "Poly") -> "Poly":
        """Multivariate exact division; raises NotDivisibleError if d does not divide self."""
        d = self._coerce(d)
        if not d._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lm = max(d._terms)
        lc = d._terms[lm]
        rest = {m: c for m, c in d._terms.items() if m != lm}
        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            m = max(rem)
            c = rem.pop(m)
            qm = tuple(x - y for x, y in zip(m, lm))
            if any(e < 0 for e in qm):
                raise NotDivisibleError("divisor does not divide the dividend")
            if type(c) is int and type(lc) is int and c % lc == 0:
                qc = c // lc
            else:
                qc = _norm(Fraction(c) / lc)
            quot[qm] = qc
            for dm, dc in rest.items():
                tm = tuple(x + y for x, y in zip(qm, dm))
                s = rem.get(tm, 0) - qc * dc
                if s:
                    rem[tm] = _norm(s)
                else:
                    rem.pop(tm, None)
        return Poly._raw(self.table, quot)

    # -- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"

    def to_json(self) -> dict:
        names = self.table.names
        return {
            "terms": [
                {"c": format_rational(c), "m": {names[i]: e for i, e in enumerate(m) if e}}
                for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, table: VarTable, obj: Mapping) -> "Poly":
        terms: dict = {}
        for t in obj["terms"]:
            mono = [0] * len(table)
            for name, e in t["m"].items():
                mono[table.index(name)] = int(e)
            mono = tuple(mono)
            terms[mono] = terms.get(mono, 0) + as_rational(str(t["c"]))
        return cls(table, terms)

    @classmethod
    def parse(cls, table: VarTable, text: str) -> "Poly":
        """Parse canonical renderings such as ``-3*V1*W1 + 2*U1*W2`` or ``4*U1^2``.

        Juxtaposed factors are not supported; every product uses ``*``.
        """
        src = text.replace(" ", "")
        if not src:
            raise AlgebraError("empty polynomial text")
        pieces = re.findall(r"[+-]?[^+-]+", src)
        if "".join(pieces) != src:
            raise AlgebraError(f"cannot parse {text!r}")
        acc = Poly(table)
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            coeff: Rational = sign
            mono = [0] * len(table)
            for factor in body.split("*"):
                if not factor:
                    raise AlgebraError(f"cannot parse {text!r}")
                base, _, exp = factor.partition("^")
                if re.fullmatch(r"\d+(/\d+)?", base):
                    coeff = _norm(Fraction(coeff) * Fraction(base) ** int(exp or 1))
                else:
                    mono[table.index(base)] += int(exp or 1)
            acc = acc + Poly(table, {tuple(mono): coeff})
        return acc


def _render_monomial(names: Sequence[str], mono: Monomial) -> str:
    parts = []
    for n, e in zip(names, mono):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def render(p: Poly) -> str:
    """Canonical text: lex-descending terms, exact coefficients, ``*`` and ``^``."""
    if not p._terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        mono = _render_monomial(p.table.names, m)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- named operations ----------------------------------------------------------


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if a.table != b.table:
        raise TableMismatchError(f"variable tables differ: {a.table.names} vs {b.table.names}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise AlgebraError(f"unknown operation {op!r}")


def substitute(p: Poly, assignment: Mapping[str, Poly], target: VarTable | None = None) -> Poly:
    return p.subs(assignment, target)


def partial_derivative(p: Poly, v: str) -> Poly:
    return p.diff(v)


def exact_div_univariate(p: Poly, d: Poly, v: str) -> tuple[Poly, Poly]:
    """Divide ``p`` by ``d`` viewed as polynomials in ``v``.

    The leading coefficient of ``d`` in ``v`` must be a nonzero rational constant,
    so the division never leaves the polynomial ring.
    """
    if p.table != d.table:
        raise TableMismatchError("dividend and divisor live on different tables")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    i = d.table.index(v)
    dparts = d.coefficients_in(v)
    n = max(dparts)
    lead = dparts[n]
    if not lead.is_constant():
        raise AlgebraError(f"leading coefficient of divisor in {v} is not a constant: {lead}")
    inv = Fraction(1) / lead.constant_term()
    table = p.table
    quot = Poly(table)
    rem = p
    while not rem.is_zero():
        deg = rem.degree(v)
        if deg < n:
            break
        top = rem.coefficients_in(v)[deg]
        shift = tuple(deg - n if t == i else 0 for t in range(len(table)))
        q = top.mul_term(shift, _norm(inv))
        quot = quot + q
        rem = rem - q * d
    return quot, rem


class PolyMatrix:
    """Dense row-major matrix of Polys over one table."""

    __slots__ = ("rows", "cols", "entries", "table")

    def __init__(self, table: VarTable, rows: int, cols: int, entries: Sequence[Poly]):
        if rows <= 0 or cols <= 0:
            raise AlgebraError("matrix dimensions must be positive")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise AlgebraError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.table != table:
                raise TableMismatchError("matrix entry on a foreign table")
        self.table = table
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, table: VarTable, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise AlgebraError("ragged rows")
        flat = [e if isinstance(e, Poly) else Poly.const(table, e) for r in rows for e in r]
        return cls(table, len(rows), ncols, flat)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Poly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Poly]]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AlgebraError("shape mismatch")
        return PolyMatrix(
            self.table, self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def apply(self, vec: Sequence[Poly]) -> list[Poly]:
        if len(vec) != self.cols:
            raise AlgebraError(f"vector of length {len(vec)} against {self.cols} columns")
        out = []
        for i in range(self.rows):
            acc = Poly(self.table)
            for a, b in zip(self.row(i), vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    @classmethod
    def identity(cls, table: VarTable, n: int, scale=1) -> "PolyMatrix":
        s = scale if isinstance(scale, Poly) else Poly.const(table, scale)
        z = Poly(table)
        return cls(table, n, n, [s if i == j else z for i in range(n) for j in range(n)])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(render(e) for e in self.row(i)) + "]" for i in range(self.rows))


def determinant(m: PolyMatrix) -> Poly:
    """Fraction-free (Bareiss) elimination; each division is exact in the polynomial ring."""
    if m.rows != m.cols:
        raise AlgebraError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = Poly.const(m.table, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return Poly(m.table)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if k == 0 else num.exact_div(prev)
            a[i][k] = Poly(m.table)
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# -- exact rational linear algebra ---------------------------------------------


class EchelonBasis:
    """Incrementally maintained row-echelon basis of sparse rational vectors.

    Vectors are dicts mapping integer column keys to rationals. Each stored pivot row
    has its pivot as its largest key, with coefficient 1.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, vec: Mapping[int, Rational]) -> dict:
        row = {k: Fraction(v) for k, v in vec.items() if v}
        while row:
            key = max(row)
            piv = self.pivots.get(key)
            if piv is None:
                return row
            f = row[key]
            for k, v in piv.items():
                s = row.get(k, 0) - f * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return row

    def add(self, vec: Mapping[int, Rational]) -> bool:
        """Insert ``vec``; return True if it was independent of the current span."""
        row = self.reduce(vec)
        if not row:
            return False
        key = max(row)
        inv = 1 / row[key]
        self.pivots[key] = {k: v * inv for k, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rational_rank(vectors: Iterable[Mapping[int, Rational]]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def rank(m: PolyMatrix) -> int:
    """Rank over Q of a matrix whose entries are all constants."""
    rows = []
    for i in range(m.rows):
        row = {}
        for j, e in enumerate(m.row(i)):
            if not e.is_constant():
                raise AlgebraError(f"non-constant entry at ({i}, {j}): {e}")
            c = e.constant_term()
            if c:
                row[j] = c
        rows.append(row)
    return rational_rank(rows)
