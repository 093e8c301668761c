from __future__ import print_function
from __future__ import division

import os
import sys

try:  # run as a package if installed
    from mirtoolkit.matrixkit import Mat, SizeMismatch, Singular, \
        kernel_basis, commutator, span_rank
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    from matrixkit import Mat, SizeMismatch, Singular, \
        kernel_basis, commutator, span_rank

P_ALGEBRA = 'P'
G_ALGEBRA = 'G'


class NotInP(ValueError):
    """ Group element is not in the mirabolic subgroup """


class NotInLieP(ValueError):
    """ Matrix is not in the mirabolic Lie algebra (last row must be 0) """


# ------------------------------
# functionals and group elements
# ------------------------------

class GFun(object):
    """ A functional on gl(n), stored as the matrix xi with f = tr(xi . ) """

    def __init__(self, xi):
        if not xi.is_square():
            raise SizeMismatch("GFun needs a square matrix")
        self.xi = xi
        self.n = xi.rows
        self.field = xi.field

    def __eq__(self, other):
        return isinstance(other, GFun) and self.xi == other.xi

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('gfun', self.xi))

    def __repr__(self):
        return 'GFun(' + str(self.xi) + ')'

    def to_dict(self):
        return {'kind': 'gfun', 'matrix': self.xi.to_dict()}


class PFun(object):
    """ A functional on p_n, stored through its representative in the
        lower block space (zero last column).

        The representative splits as the Levi block ``A`` (top-left
        (n-1)x(n-1)) and the bottom row ``alpha``.
    """

    def __init__(self, xi):
        if not xi.is_square():
            raise SizeMismatch("PFun needs a square matrix")
        n = xi.rows
        if n > 0 and any(xi.entry(i, n - 1) for i in range(n)):
            raise ValueError("PFun representative must have a zero last "
                             "column; use project_pbar")
        self.xi = xi
        self.n = n
        self.field = xi.field

    @classmethod
    def from_blocks(cls, A, alpha):
        """ Assemble [[A, 0], [alpha^t, 0]] """

        m = A.rows + 1
        if len(alpha) != A.rows:
            raise SizeMismatch("alpha must have " + str(A.rows) + " entries")
        rows = [A.row(i) + [0] for i in range(A.rows)]
        rows.append(list(alpha) + [0])
        return cls(Mat(A.field, rows, m))

    @property
    def A(self):
        ids = list(range(self.n - 1))
        return self.xi.submatrix(ids, ids)

    @property
    def alpha(self):
        if self.n == 0:
            return []
        return self.xi.row(self.n - 1)[:self.n - 1]

    def is_zero(self):
        return self.xi.is_zero()

    def __eq__(self, other):
        return isinstance(other, PFun) and self.xi == other.xi

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('pfun', self.xi))

    def __repr__(self):
        return 'PFun(' + str(self.xi) + ')'

    def to_dict(self):
        return {'kind': 'pfun', 'matrix': self.xi.to_dict()}


def functional_from_dict(d):
    xi = Mat.from_dict(d['matrix'])
    kind = d.get('kind', 'pfun')
    if kind == 'gfun':
        return GFun(xi)
    elif kind == 'pfun':
        return project_pbar(xi)
    raise ValueError("Unknown functional kind " + str(kind))


class GroupElt(object):
    """ An invertible n x n matrix acting by conjugation """

    def __init__(self, g):
        if not g.is_square():
            raise SizeMismatch("Group elements are square")
        if g.det().is_zero():
            raise Singular("Group element must be invertible")
        self.g = g
        self.n = g.rows
        self.field = g.field
        self._inv = None

    @property
    def in_P(self):
        n = self.n
        F = self.field
        last = self.g.row(n - 1)
        return all(last[j] == F.zero for j in range(n - 1)) and \
            last[n - 1] == F.one

    def inverse(self):
        if self._inv is None:
            self._inv = self.g.inverse()
        return self._inv

    def __mul__(self, other):
        return GroupElt(self.g * other.g)

    def __repr__(self):
        return 'GroupElt(' + str(self.g) + ')'


# ----------------------------------
# pairing, projections, moment map
# ----------------------------------

def pairing(xi, eta):
    """ Trace pairing (xi, eta) = tr(xi eta) """

    if xi.shape != eta.shape or not xi.is_square():
        raise SizeMismatch(str(xi.shape) + " vs " + str(eta.shape))
    return (xi * eta).trace()


def project_pbar(xi):
    """ Representative of pr'(xi) in the lower block space: zero the last
        column. """

    n = xi.rows
    if not xi.is_square():
        raise SizeMismatch("Expected a square matrix")
    rows = [r[:n - 1] + [0] for r in xi.to_list()] if n > 0 else []
    return PFun(Mat(xi.field, rows, n))


def moment_map(f):
    """ Restriction of f in gl(n)* to p_n """

    return project_pbar(f.xi)


def coadjoint_g(g, f):
    """ g . f, realised on representatives as xi -> g xi g^-1 """

    if g.n != f.n:
        raise SizeMismatch("group element and functional differ in size")
    return GFun(g.g * f.xi * g.inverse())


def coadjoint_p(g, f):
    """ Coadjoint action of P_n on p_n* """

    if not g.in_P:
        raise NotInP("Last row of g must be (0, ..., 0, 1)")
    if g.n != f.n:
        raise SizeMismatch("group element and functional differ in size")
    return project_pbar(g.g * f.xi * g.inverse())


def in_lie_p(X):
    if not X.is_square():
        return False
    return X.rows == 0 or not any(X.row(X.rows - 1))


def ad_coadjoint_p(X, f):
    """ Infinitesimal coadjoint action of X in p_n on f in p_n*.

        From (ad(X)f)(Y) = -f([X, Y]) and the trace pairing,
        ad*(X)f = pr'([X, xi]).
    """

    if not in_lie_p(X):
        raise NotInLieP("X must have a zero last row")
    return project_pbar(commutator(X, f.xi))


# -----------
# fixed bases
# -----------

def basis_g(n, field):
    """ E_ij of gl(n), row-major """

    return [Mat.unit(field, n, n, i, j) for i in range(n) for j in range(n)]


def basis_p(n, field):
    """ E_ij of p_n with i in 1..n-1 and j in 1..n, lexicographic """

    return [Mat.unit(field, n, n, i, j) for i in range(n - 1)
            for j in range(n)]


def basis_n(n, field):
    """ E_{i,n}, i = 1..n-1: the unipotent radical of p_n """

    return [Mat.unit(field, n, n, i, n - 1) for i in range(n - 1)]


def basis_l(n, field):
    """ E_ij, i, j = 1..n-1: the Levi factor gl(n-1) inside p_n """

    return [Mat.unit(field, n, n, i, j) for i in range(n - 1)
            for j in range(n - 1)]


def combine(coeffs, basis):
    out = Mat.zeros(basis[0].field, basis[0].rows, basis[0].cols)
    for c, b in zip(coeffs, basis):
        if c:
            out = out + b.scale(c)
    return out


def _kernel_of_map(basis, image):
    """ Kernel of a linear map given on a basis, as combinations of it """

    F = basis[0].field
    cols = [image(b).flatten() for b in basis]
    M = Mat(F, [list(r) for r in zip(*cols)], len(basis))
    return [combine(v.col(0), basis) for v in kernel_basis(M)]


def stabilizer_dim(f, subalgebra=None):
    """ Dimension of the stabilizer algebra of f.

        :param f: a :class:`PFun` or :class:`GFun`
        :param subalgebra: 'P' or 'G'; defaults to the algebra matching the
            type of ``f``
        :returns: dim(subalgebra) - rank of X -> ad*(X) f on the fixed basis

        For f in p_n* the map is X -> pr'([X, xi]); for f in gl(n)* it is
        X -> [X, xi], restricted to p_n when ``subalgebra`` is 'P'.
    """

    if subalgebra is None:
        subalgebra = G_ALGEBRA if isinstance(f, GFun) else P_ALGEBRA
    n = f.n
    F = f.field
    if subalgebra == P_ALGEBRA:
        basis = basis_p(n, F)
        if isinstance(f, PFun):
            images = [project_pbar(commutator(X, f.xi)).xi for X in basis]
        else:
            images = [commutator(X, f.xi) for X in basis]
    elif subalgebra == G_ALGEBRA:
        if not isinstance(f, GFun):
            raise ValueError("The G stabilizer needs a functional on gl(n)")
        basis = basis_g(n, F)
        images = [commutator(X, f.xi) for X in basis]
    else:
        raise ValueError("Unknown subalgebra " + str(subalgebra))
    return len(basis) - span_rank(images)


# -------------------------------------------
# the standard character h of n_n and its lift
# -------------------------------------------

def h_bar(n, field):
    """ E_{n,n-1}: zero Levi part and alpha = (0, ..., 0, 1) """

    if n < 2:
        raise ValueError("h_bar needs n >= 2")
    return PFun(Mat.unit(field, n, n, n - 1, n - 2))


def lemma_injectivity_rank(n, field):
    """ Rank of xi -> ad*(xi) h_bar on n_n; equals n - 1 when injective """

    hb = h_bar(n, field)
    return span_rank([ad_coadjoint_p(X, hb).xi for X in basis_n(n, field)])


def levi_stabilizer_basis(n, field):
    """ Basis of the stabilizer of h_bar inside the Levi factor l_n """

    hb = h_bar(n, field)
    return _kernel_of_map(basis_l(n, field),
                          lambda X: ad_coadjoint_p(X, hb).xi)


def annihilator_basis(n, field):
    """ Basis of {xi in l_n : (ad(eta) h_bar, xi) = 0 for all eta in n_n}.

        The subspace is the annihilator of ad(n_n) h_bar inside l_n and must
        coincide with the Levi stabilizer of h_bar.
    """

    hb = h_bar(n, field)
    translates = [ad_coadjoint_p(eta, hb).xi for eta in basis_n(n, field)]
    F = field
    return _kernel_of_map(
        basis_l(n, F),
        lambda X: Mat(F, [[pairing(t, X).value for t in translates]],
                      len(translates)))


def same_span(mats_a, mats_b):
    """ True iff two lists of matrices span the same subspace """

    ra = span_rank(mats_a)
    rb = span_rank(mats_b)
    return ra == rb == span_rank(list(mats_a) + list(mats_b))
