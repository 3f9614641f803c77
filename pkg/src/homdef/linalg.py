"""
Exact dense linear algebra over a field.

Entries can be anything with field operations and a truthiness that means
"nonzero": ``fractions.Fraction`` for the numeric solvers, ``Scalar`` for
symbolic work at a nonsingular point.
"""

from fractions import Fraction


class LinalgError(Exception):
    pass


class ContainmentError(LinalgError):
    def __init__(self, msg, vector=None, index=None):
        LinalgError.__init__(self, msg)
        self.vector = vector
        self.index = index


def _zero_like(x):
    return x - x


class Matrix:
    """Dense row-major matrix."""

    def __init__(self, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise LinalgError("ragged matrix")
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [list(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @classmethod
    def zeros(cls, rows, cols, zero=Fraction(0)):
        return cls([[zero] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n, one=Fraction(1)):
        zero = _zero_like(one)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows and self.cols == other.cols
                and all(a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)))

    def column(self, j):
        return [r[j] for r in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def apply(self, v):
        if len(v) != self.cols:
            raise LinalgError("vector of length %d for %d columns" % (len(v), self.cols))
        out = []
        for r in self.entries:
            acc = None
            for a, x in zip(r, v):
                if a and x:
                    acc = a * x if acc is None else acc + a * x
            out.append(acc if acc is not None else _zero_like(v[0]) if v else Fraction(0))
        return out

    def __matmul__(self, other):
        cols = other.columns()
        return Matrix([[_dot(r, c) for c in cols] for r in self.entries], other.cols)

    def transpose(self):
        return Matrix(self.columns(), self.rows)

    def __str__(self):
        return "\n".join("[%s]" % " ".join(str(x) for x in r) for r in self.entries)


def _dot(r, c):
    acc = _zero_like(r[0]) if r else Fraction(0)
    for a, b in zip(r, c):
        if a and b:
            acc = acc + a * b
    return acc


def rref(m):
    """Reduced row echelon form and pivot columns (first nonzero entry, column order)."""
    rows = [list(r) for r in m.entries]
    pivots = []
    r = 0
    for j in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if rows[i][j]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][j]
        row = rows[r] = [x / piv if x else x for x in rows[r]]
        nz = [k for k in range(j, m.cols) if row[k]]
        for i in range(m.rows):
            if i == r:
                continue
            f = rows[i][j]
            if not f:
                continue
            target = rows[i]
            for k in nz:
                target[k] = target[k] - f * row[k]
        pivots.append(j)
        r += 1
    return Matrix(rows, m.cols), tuple(pivots)


def rank(m):
    return len(rref(m)[1])


class SubspaceBasis:
    """Linearly independent vectors spanning a subspace of K^ambient_dim."""

    def __init__(self, ambient_dim, vectors, flattening_tag="", check=True):
        self.ambient_dim = ambient_dim
        self.vectors = [tuple(v) for v in vectors]
        self.flattening_tag = flattening_tag
        for v in self.vectors:
            if len(v) != ambient_dim:
                raise LinalgError("vector of length %d in ambient dimension %d" % (len(v), ambient_dim))
        self._echelon = None
        if check and self.vectors:
            R, piv = rref(Matrix(self.vectors, ambient_dim))
            if len(piv) != len(self.vectors):
                raise LinalgError("basis vectors are linearly dependent")
            self._echelon = (R, piv)

    def __len__(self):
        return len(self.vectors)

    @property
    def dim(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def echelon(self):
        if self._echelon is None:
            if self.vectors:
                self._echelon = rref(Matrix(self.vectors, self.ambient_dim))
            else:
                self._echelon = (Matrix([], self.ambient_dim), ())
        return self._echelon

    def reduce(self, v):
        """Remainder of v after elimination against the basis."""
        R, piv = self.echelon()
        v = list(v)
        for row, j in zip(R.entries, piv):
            f = v[j]
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return subspace_contains(self, v)

    def __repr__(self):
        return "SubspaceBasis(dim=%d, ambient=%d, %r)" % (self.dim, self.ambient_dim, self.flattening_tag)


def nullspace(m, flattening_tag=""):
    """Kernel basis: one vector per free column (ascending), free variable set to 1."""
    R, piv = rref(m)
    one = Fraction(1)
    sample = next((x for r in m.entries for x in r), None)
    if sample is not None:
        one = sample - sample + 1
    zero = one - one
    free = [j for j in range(m.cols) if j not in set(piv)]
    vectors = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for row, p in zip(R.entries, piv):
            if row[f]:
                v[p] = -row[f]
        vectors.append(v)
    assert len(piv) + len(vectors) == m.cols
    return SubspaceBasis(m.cols, vectors, flattening_tag, check=False)


def column_space(m, flattening_tag=""):
    """Basis of the column span: the original columns at the pivot positions."""
    _, piv = rref(m)
    return SubspaceBasis(m.rows, [m.column(j) for j in piv], flattening_tag, check=False)


def subspace_contains(basis, v):
    if len(v) != basis.ambient_dim:
        raise LinalgError("vector of length %d in ambient dimension %d" % (len(v), basis.ambient_dim))
    return not any(basis.reduce(v))


def span_sum(a, b, flattening_tag=""):
    if a.ambient_dim != b.ambient_dim:
        raise LinalgError("ambient dimensions differ")
    vectors = list(a.vectors) + list(b.vectors)
    if not vectors:
        return SubspaceBasis(a.ambient_dim, [], flattening_tag)
    return column_space(Matrix.from_columns(vectors, a.ambient_dim), flattening_tag)


def intersection_dim(a, b):
    return a.dim + b.dim - span_sum(a, b).dim


def quotient_dim(z, b):
    """dim z - dim b, after checking b is inside z."""
    if z.ambient_dim != b.ambient_dim:
        raise LinalgError("ambient dimensions differ")
    for i, v in enumerate(b.vectors):
        if not subspace_contains(z, v):
            raise ContainmentError("vector %d of the subspace is not in the ambient subspace" % i, v, i)
    return z.dim - b.dim


def inverse(m):
    """Exact inverse of a square matrix; raises LinalgError when singular."""
    if m.rows != m.cols:
        raise LinalgError("not square")
    n = m.rows
    sample = next((x for r in m.entries for x in r), Fraction(0))
    one = sample - sample + 1
    zero = one - one
    aug = Matrix([list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.entries)], 2 * n)
    R, piv = rref(aug)
    if piv[:n] != tuple(range(n)) or len(piv) < n:
        raise LinalgError("singular matrix")
    return Matrix([r[n:] for r in R.entries], n)
