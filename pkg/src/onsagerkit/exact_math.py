"""Exact scalars and exact sparse linear algebra over the Gaussian rationals.

Everything in this module is immutable after construction and every operation
is a pure function, so values can be shared freely across threads.  No
floating point appears anywhere; all downstream identities are checked as
bit-exact equalities.
"""

from __future__ import annotations

from fractions import Fraction

# Plain rationals are stdlib fractions: arbitrary precision, always in lowest
# terms, denominator > 0, canonical zero 0/1.
Rational = Fraction


class GaussianRational:
    """a + b*i with rational a, b.  Field arithmetic, hashable, immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        """(a+bi)(a-bi) as a Fraction."""
        return self.re * self.re + self.im * self.im

    @property
    def is_rational(self):
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%s*i" % self.im
        sign = "+" if self.im > 0 else "-"
        return "%s%s%s*i" % (self.re, sign, abs(self.im))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


I = GaussianRational(0, 1)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)


class ExactMatrix:
    """Sparse matrix over the Gaussian rationals; zero entries are never stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        store = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError("entry (%d, %d) outside %dx%d matrix" % (i, j, rows, cols))
                g = _coerce(v)
                if g is None:
                    raise TypeError("matrix entries must be exact scalars, got %r" % (v,))
                if g:
                    store[(i, j)] = g
        self.entries = store

    @classmethod
    def from_rows(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def entry(self, i, j):
        return self.entries.get((i, j), ZERO)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return ExactMatrix(self.rows, self.cols, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        g = _coerce(scalar)
        if g is None:
            return NotImplemented
        if not g:
            return ExactMatrix(self.rows, self.cols)
        return ExactMatrix(self.rows, self.cols, {k: v * g for k, v in self.entries.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        by_row = {}
        for (i, k), v in self.entries.items():
            by_row.setdefault(i, []).append((k, v))
        by_col = {}
        for (k, j), v in other.entries.items():
            by_col.setdefault(k, []).append((j, v))
        out = {}
        for i, left in by_row.items():
            for k, v in left:
                for j, w in by_col.get(k, ()):
                    key = (i, j)
                    s = out.get(key, ZERO) + v * w
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return ExactMatrix(self.rows, other.cols, out)

    def transpose(self):
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def block(self, r0, r1, c0, c1):
        out = {}
        for (i, j), v in self.entries.items():
            if r0 <= i < r1 and c0 <= j < c1:
                out[(i - r0, j - c0)] = v
        return ExactMatrix(r1 - r0, c1 - c0, out)

    def commutator(self, other):
        return self @ other - other @ self

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def rank(self):
        return rank(self)

    def nullspace_basis(self):
        return nullspace_basis(self)

    def to_dense(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def __repr__(self):
        return "ExactMatrix(%dx%d, %d nonzero)" % (self.rows, self.cols, len(self.entries))


class IncrementalSpan:
    """Echelon basis of a growing span of sparse vectors, over any exact field.

    Vectors are dicts mapping comparable coordinate keys to nonzero scalars.
    """

    def __init__(self):
        self._pivot_rows = {}  # pivot key -> row dict with 1 at the pivot

    @property
    def rank(self):
        return len(self._pivot_rows)

    def reduce(self, vec):
        """Residue of vec after elimination against the current basis."""
        v = {k: c for k, c in vec.items() if c}
        # Eliminating the smallest pivot key can only introduce larger keys
        # (pivot rows have their minimum at the pivot), so this terminates.
        while True:
            hits = [k for k in v if k in self._pivot_rows]
            if not hits:
                return v
            key = min(hits)
            row = self._pivot_rows[key]
            factor = v[key]
            for k, c in row.items():
                s = v.get(k, 0) - factor * c
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)

    def add(self, vec):
        """Add vec to the span; returns True iff the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        inv = v[pivot]
        row = {k: c / inv for k, c in v.items()}
        self._pivot_rows[pivot] = row
        return True


def span_rank(vectors):
    """Rank of the matrix whose rows are the given vectors.

    Vectors may be dicts over a shared (comparable) coordinate index set, or
    plain sequences.
    """
    span = IncrementalSpan()
    for v in vectors:
        if not isinstance(v, dict):
            v = {j: c for j, c in enumerate(v)}
        span.add(v)
    return span.rank


def rank(m):
    """Rank of an ExactMatrix over the Gaussian rationals, by exact elimination."""
    return span_rank(m.row_dicts())


def nullspace_basis(m):
    """Basis of the right kernel of an ExactMatrix, as dense tuples.

    Empty list iff rank = cols.
    """
    rows = [r for r in m.row_dicts() if r]
    pivots = {}  # pivot col -> reduced row (pivot entry 1)
    for v in rows:
        while True:
            hits = [k for k in v if k in pivots]
            if not hits:
                break
            col = min(hits)
            row = pivots[col]
            factor = v[col]
            for k, c in row.items():
                s = v.get(k, ZERO) - factor * c
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
        if v:
            pivot = min(v)
            inv = v[pivot]
            pivots[pivot] = {k: c / inv for k, c in v.items()}
    # back substitution: make each pivot column appear only in its own row
    for p in sorted(pivots, reverse=True):
        row = pivots[p]
        for q, other in pivots.items():
            if q == p:
                continue
            factor = other.get(p)
            if not factor:
                continue
            for k, c in row.items():
                s = other.get(k, ZERO) - factor * c
                if s:
                    other[k] = s
                else:
                    other.pop(k, None)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * m.cols
        vec[f] = ONE
        for p, row in pivots.items():
            coeff = row.get(f)
            if coeff:
                vec[p] = -coeff
        basis.append(tuple(vec))
    return basis
