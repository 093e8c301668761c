from __future__ import print_function
from __future__ import division

import os
import sys

from sympy.polys.matrices import DomainMatrix

try:  # run as a package if installed
    from mirtoolkit.exactalg import Scalar, Poly, FieldMismatch, \
        field_from_string, poly_is_squarefree
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    from exactalg import Scalar, Poly, FieldMismatch, \
        field_from_string, poly_is_squarefree


class NotSquare(ValueError):
    """ Operation needs a square matrix """


class SizeMismatch(ValueError):
    """ Operand shapes are incompatible """


class Singular(ArithmeticError):
    """ Matrix is not invertible """


class Mat(object):
    """ Dense exact matrix over a :class:`Field`.

        Basic usage::

            F = Field(RAT)
            m = Mat(F, [[1, 2], [2, 4]])
            rank(m)                      # 1
            char_poly(m)                 # x^2-5x

        Entries are accepted as ints, Fractions, strings in the scalar text
        syntax, Scalars or domain elements. Values are immutable; the 0x0
        matrix is legal. Rank, echelon forms, inverses, determinants and
        characteristic polynomials are delegated to sympy's DomainMatrix.
    """

    __slots__ = ('field', 'rows', 'cols', 'entries', '_dmcache')

    def __init__(self, field, rows, cols=None):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        if cols is None:
            cols = len(rows[0]) if nrows > 0 else 0
        for r in rows:
            if len(r) != cols:
                raise SizeMismatch("Ragged rows: expected " + str(cols) +
                                   " columns, got " + str(len(r)))
        self.field = field
        self.rows = nrows
        self.cols = cols
        self.entries = tuple(tuple(field.convert(a) for a in r) for r in rows)
        self._dmcache = None

    # ------------
    # constructors
    # ------------

    @classmethod
    def zeros(cls, field, rows, cols=None):
        if cols is None:
            cols = rows
        return cls(field, [[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)]
                           for i in range(n)], n)

    @classmethod
    def diag(cls, field, values):
        n = len(values)
        values = [field.convert(v) for v in values]
        return cls(field, [[values[i] if i == j else 0 for j in range(n)]
                           for i in range(n)], n)

    @classmethod
    def unit(cls, field, rows, cols, i, j):
        """ Elementary matrix E_ij (0-based indices) """

        m = [[0] * cols for _ in range(rows)]
        m[i][j] = 1
        return cls(field, m, cols)

    @classmethod
    def column(cls, field, values):
        return cls(field, [[v] for v in values], 1)

    @classmethod
    def _from_dm(cls, field, dm):
        r, c = dm.shape
        return cls(field, dm.to_list() if r > 0 else [], c)

    # --------
    # accessors
    # --------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j):
        return self.entries[i][j]

    def __getitem__(self, ij):
        i, j = ij
        return Scalar(self.field, self.entries[i][j])

    def row(self, i):
        return list(self.entries[i])

    def col(self, j):
        return [r[j] for r in self.entries]

    def to_list(self):
        return [list(r) for r in self.entries]

    def flatten(self):
        return [a for r in self.entries for a in r]

    def is_zero(self):
        return not any(a for r in self.entries for a in r)

    def submatrix(self, row_ids, col_ids):
        return Mat(self.field, [[self.entries[i][j] for j in col_ids]
                                for i in row_ids], len(col_ids))

    def _dm(self):
        if self._dmcache is None:
            self._dmcache = DomainMatrix(self.to_list(), self.shape,
                                         self.field.domain)
        return self._dmcache

    # ----------
    # arithmetic
    # ----------

    def _check(self, other, same_shape=True):
        if not isinstance(other, Mat):
            raise TypeError("Expected a Mat, got " + type(other).__name__)
        if self.field != other.field:
            raise FieldMismatch(str(self.field) + " vs " + str(other.field))
        if same_shape and self.shape != other.shape:
            raise SizeMismatch(str(self.shape) + " vs " + str(other.shape))

    def __add__(self, other):
        self._check(other)
        return Mat(self.field, [[a + b for a, b in zip(r, s)] for r, s in
                                zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other):
        self._check(other)
        return Mat(self.field, [[a - b for a, b in zip(r, s)] for r, s in
                                zip(self.entries, other.entries)], self.cols)

    def __neg__(self):
        return Mat(self.field, [[-a for a in r] for r in self.entries],
                   self.cols)

    def scale(self, c):
        c = self.field.convert(c)
        return Mat(self.field, [[c * a for a in r] for r in self.entries],
                   self.cols)

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return self.scale(other)
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise SizeMismatch("Cannot multiply " + str(self.shape) +
                               " by " + str(other.shape))
        if 0 in (self.rows, self.cols, other.cols):
            return Mat.zeros(self.field, self.rows, other.cols)
        return Mat._from_dm(self.field, self._dm().matmul(other._dm()))

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self):
        return Mat(self.field, [list(c) for c in zip(*self.entries)]
                   if self.rows > 0 else [[] for _ in range(self.cols)],
                   self.rows)

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        _require_square(self)
        t = self.field.zero
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return Scalar(self.field, t)

    def det(self):
        _require_square(self)
        if self.rows == 0:
            return Scalar(self.field, 1)
        return Scalar(self.field, self._dm().det())

    def inverse(self):
        _require_square(self)
        if self.rows == 0:
            return self
        if self.det().is_zero():
            raise Singular("Matrix is singular")
        return Mat._from_dm(self.field, self._dm().inv())

    def change_field(self, field):
        """ Coerce entries into another field (RAT -> GAUSS embedding) """

        return Mat(field, [[self.field.embed(a, field) for a in r]
                           for r in self.entries], self.cols)

    def reduce_mod(self, field):
        """ Reduce a RAT/GAUSS matrix into the prime field ``field`` """

        return Mat(field, [[self.field.reduce_mod(a, field) for a in r]
                           for r in self.entries], self.cols)

    # -----------
    # comparisons
    # -----------

    def __eq__(self, other):
        return isinstance(other, Mat) and self.field == other.field and \
            self.shape == other.shape and self.entries == other.entries

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.shape, str(self)))

    def to_text_rows(self):
        return [[self.field.format(a) for a in r] for r in self.entries]

    def __str__(self):
        return '[' + ', '.join('[' + ', '.join(r) + ']'
                               for r in self.to_text_rows()) + ']'

    def __repr__(self):
        return 'Mat(' + str(self.field) + ', ' + str(self) + ')'

    # -------------
    # serialisation
    # -------------

    def to_dict(self):
        return {'field': str(self.field), 'rows': self.to_text_rows()}

    @classmethod
    def from_dict(cls, d, field=None):
        if field is None:
            field = field_from_string(d['field'])
        elif 'field' in d and field_from_string(d['field']) != field:
            raise FieldMismatch("Matrix declared over " + str(d['field']) +
                                ", expected " + str(field))
        return cls(field, [[field.parse(a) for a in r] for r in d['rows']])


def _require_square(m):
    if not m.is_square():
        raise NotSquare("Expected a square matrix, got " + str(m.shape))


def commutator(a, b):
    """ [a, b] = ab - ba """

    return a * b - b * a


# -------------------------
# linear algebra operations
# -------------------------

def rank(m):
    """ Exact rank over the field of ``m`` """

    if m.rows == 0 or m.cols == 0:
        return 0
    return m._dm().rank()


def rref(m):
    """ Reduced row echelon form and the tuple of pivot columns """

    if m.rows == 0 or m.cols == 0:
        return m, ()
    R, pivots = m._dm().rref()
    return Mat._from_dm(m.field, R), tuple(pivots)


def kernel_basis(m):
    """ Basis of the right null space as a list of column Mats.

        One basis vector per free column of the echelon form, with a 1 in
        that column; every vector v satisfies m * v = 0 exactly.
    """

    F = m.field
    R, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * m.cols
        v[fc] = F.one
        for k, pc in enumerate(pivots):
            v[pc] = -R.entry(k, fc) / R.entry(k, pc)
        basis.append(Mat.column(F, v))
    return basis


def char_poly(m):
    """ det(xI - m) as a monic :class:`Poly`; the 0x0 matrix gives 1 """

    _require_square(m)
    if m.rows == 0:
        return Poly.constant(m.field, 1)
    coeffs = m._dm().charpoly()
    return Poly.from_coeffs(m.field, list(reversed(coeffs)))


def _least_degree(M, t):
    best, where = None, None
    n = len(M)
    for i in range(t, n):
        for j in range(t, n):
            a = M[i][j]
            if a and (best is None or a.degree() < best):
                best, where = a.degree(), (i, j)
    return where


def invariant_factors(m):
    """ Nontrivial monic invariant factors d_1 | d_2 | ... of xI - m.

        Smith normal form over F[x] by elementary row and column operations,
        pivoting on the nonzero entry of least degree (ties: smallest row,
        then column). The product of the factors is char_poly(m) and the
        last one is the minimal polynomial.
    """

    _require_square(m)
    F = m.field
    n = m.rows
    x = F.x
    M = [[(x if i == j else F.ring.zero) - m.entry(i, j) for j in range(n)]
         for i in range(n)]

    diag = []
    for t in range(n):
        while True:
            where = _least_degree(M, t)
            if where is None:
                break
            i, j = where
            M[t], M[i] = M[i], M[t]
            for r in M:
                r[t], r[j] = r[j], r[t]
            p = M[t][t]
            clean = True
            for i in range(t + 1, n):
                if M[i][t]:
                    q, rem = divmod(M[i][t], p)
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    if rem:
                        clean = False
            for j in range(t + 1, n):
                if M[t][j]:
                    q, rem = divmod(M[t][j], p)
                    for r in M:
                        r[j] = r[j] - q * r[t]
                    if rem:
                        clean = False
            if not clean:
                continue
            # pivot must divide the remaining block
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if M[i][j] and M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad])]
        if M[t][t]:
            diag.append(M[t][t].monic())

    return [Poly(F, d) for d in diag if d.degree() > 0]


def minimal_poly(m):
    factors = invariant_factors(m)
    if not factors:
        return Poly.constant(m.field, 1)
    return factors[-1]


def is_semisimple(m):
    """ Diagonalisable over the algebraic closure: squarefree minimal poly """

    return poly_is_squarefree(minimal_poly(m))


def similar(a, b):
    """ Similarity test by comparing invariant factors """

    _require_square(a)
    _require_square(b)
    if a.field != b.field:
        raise FieldMismatch(str(a.field) + " vs " + str(b.field))
    if a.shape != b.shape:
        raise SizeMismatch(str(a.shape) + " vs " + str(b.shape))
    return invariant_factors(a) == invariant_factors(b)


def centralizer_dim(m):
    """ dim {X : mX = Xm}, as the corank of the Sylvester map X -> mX - Xm """

    _require_square(m)
    k = m.rows
    if k == 0:
        return 0
    F = m.field
    images = []
    for i in range(k):
        for j in range(k):
            E = Mat.unit(F, k, k, i, j)
            images.append(commutator(m, E).flatten())
    # columns of the map are the flattened images
    S = Mat(F, [list(c) for c in zip(*images)], k * k)
    return k * k - rank(S)


def span_rank(mats):
    """ Dimension of the span of a list of equally sized matrices """

    if not mats:
        return 0
    F = mats[0].field
    return rank(Mat(F, [a.flatten() for a in mats]))
