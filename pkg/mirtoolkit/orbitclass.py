from __future__ import print_function
from __future__ import division

import os
import sys

try:  # run as a package if installed
    from mirtoolkit.exactalg import FieldMismatch, poly_is_squarefree
    from mirtoolkit.matrixkit import Mat, SizeMismatch, rank, \
        invariant_factors, char_poly
    from mirtoolkit.liecore import project_pbar
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    from exactalg import FieldMismatch, poly_is_squarefree
    from matrixkit import Mat, SizeMismatch, rank, invariant_factors, \
        char_poly
    from liecore import project_pbar

COMPLETIONS = ('last', 'first')
NOT_OPEN = 'not-open'


class DepthInvariant(object):
    """ Complete invariant of a P_n-coadjoint orbit.

        :param n: ambient size
        :param depth: number of reduction steps plus one, in [1, n]
        :param levi_invariant_factors: invariant factors of the terminal
            Levi matrix in gl(n - depth)
        :param semisimple: minimal polynomial of the Levi matrix squarefree
        :param levi_char_poly: characteristic polynomial of the Levi matrix

        Two invariants are equal iff n, depth and the invariant factors
        agree.
    """

    def __init__(self, n, depth, levi_invariant_factors, semisimple,
                 levi_char_poly):
        self.n = n
        self.depth = depth
        self.levi_invariant_factors = tuple(levi_invariant_factors)
        self.semisimple = semisimple
        self.levi_char_poly = levi_char_poly

    @property
    def levi_size(self):
        return self.n - self.depth

    def _key(self):
        return (self.n, self.depth,
                tuple(str(d) for d in self.levi_invariant_factors))

    def __eq__(self, other):
        return isinstance(other, DepthInvariant) and \
            self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'DepthInvariant(n=' + str(self.n) + ', depth=' + \
            str(self.depth) + ', factors=[' + \
            ', '.join(str(d) for d in self.levi_invariant_factors) + '])'

    def to_dict(self):
        return {'n': self.n,
                'depth': self.depth,
                'invariant_factors': [str(d) for d in
                                      self.levi_invariant_factors],
                'levi_char_poly': str(self.levi_char_poly),
                'semisimple': self.semisimple}


def reduction_step(f, completion='last'):
    """ One step of the inductive identification of p_m*/P_m.

        :param f: :class:`PFun` of size m
        :param completion: 'last' completes alpha^t to B using the largest
            index with alpha_i != 0, 'first' the smallest
        :returns: ``(True, A)`` when alpha = 0 (terminal Levi matrix A) or
            ``(False, f')`` with f' in p_{m-1}*

        B has rows e_j (j != i*, ascending) followed by alpha^t, so
        conjugating by diag(B, 1) moves alpha to (0, ..., 0, 1). The
        N_m-translation then only changes the last column of the new Levi
        block, which is dropped.
    """

    if completion not in COMPLETIONS:
        raise ValueError("Unknown completion rule " + str(completion))
    alpha = f.alpha
    A = f.A
    nonzero = [i for i, a in enumerate(alpha) if a]
    if not nonzero:
        return True, A

    F = f.field
    k = len(alpha)
    istar = nonzero[-1] if completion == 'last' else nonzero[0]
    rows = [[1 if c == j else 0 for c in range(k)]
            for j in range(k) if j != istar]
    rows.append(alpha)
    B = Mat(F, rows, k)
    return False, project_pbar(B * A * B.inverse())


def reduce_to_levi(f, completion='last', verbose=False):
    """ Run :func:`reduction_step` until alpha vanishes.

        :returns: (depth, terminal Levi matrix of size n - depth)
    """

    steps = 0
    current = f
    while True:
        done, data = reduction_step(current, completion)
        if done:
            return steps + 1, data
        steps += 1
        current = data
        if verbose:
            print('step', steps, ': reduced to size', current.n)


def classify(f, completion='last', verbose=False):
    """ Depth and Levi datum of the P_n-orbit through f.

        Basic usage::

            inv = classify(project_pbar(xi))
            inv.depth, [str(d) for d in inv.levi_invariant_factors]

        The zero functional has depth 1 and the open orbit depth n with an
        empty Levi part.
    """

    depth, data = reduce_to_levi(f, completion, verbose)
    factors = invariant_factors(data)
    if factors:
        semisimple = poly_is_squarefree(factors[-1])
    else:
        semisimple = True
    return DepthInvariant(f.n, depth, factors, semisimple, char_poly(data))


def same_orbit(f1, f2):
    if f1.n != f2.n:
        raise SizeMismatch("functionals of size " + str(f1.n) + " and " +
                           str(f2.n))
    if f1.field != f2.field:
        raise FieldMismatch(str(f1.field) + " vs " + str(f2.field))
    return classify(f1) == classify(f2)


def centralizer_dim_from_factors(factors):
    """ sum_{i,j} deg gcd(d_i, d_j) for a divisibility chain d_1 | ... | d_r

        For a chain gcd(d_i, d_j) = d_min(i,j), so d_i is counted
        2(r - i) + 1 times.
    """

    r = len(factors)
    return sum((2 * (r - i) - 1) * d.degree() for i, d in enumerate(factors))


def predicted_stabilizer_dim(inv):
    """ dim N_{n-depth} + dim of the centralizer of the Levi matrix """

    return (inv.n - inv.depth) + \
        centralizer_dim_from_factors(inv.levi_invariant_factors)


def krylov_matrix(f):
    """ Rows alpha^t, alpha^t A, ..., alpha^t A^(n-2) """

    F = f.field
    k = f.n - 1
    A = f.A
    v = Mat(F, [f.alpha], k)
    rows = []
    for _ in range(k):
        rows.append(v.row(0))
        v = v * A
    return Mat(F, rows, k)


def observability_depth(f):
    """ n when the Krylov matrix of (A, alpha^t) is invertible, otherwise
        the flag ``'not-open'``. """

    K = krylov_matrix(f)
    if rank(K) == K.rows:
        return f.n
    return NOT_OPEN

