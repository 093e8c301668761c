from __future__ import print_function
from __future__ import division

import os
import sys
import itertools
import numpy as np
import pandas as pd

from sympy.ntheory import primitive_root
from sympy.combinatorics import Permutation

try:  # run as a package if installed
    from mirtoolkit import configs
    from mirtoolkit.exactalg import Field, FP
    from mirtoolkit.matrixkit import Mat, kernel_basis
    from mirtoolkit.liecore import PFun
    from mirtoolkit.orbitclass import classify, reduce_to_levi
    from mirtoolkit.utils import Report, UnionFind
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    import configs
    from exactalg import Field, FP
    from matrixkit import Mat, kernel_basis
    from liecore import PFun
    from orbitclass import classify, reduce_to_levi
    from utils import Report, UnionFind

# points are processed in chunks of this many matrices
CHUNK = 100000

SPLIT = 'split'
PAIRS = 'pairs'


class TooLarge(ValueError):
    """ Enumeration exceeds the configured point guard """


class BadPrime(ValueError):
    """ Prime is not admissible for the requested model """


class MismatchFailure(AssertionError):
    """ Oracle and classifier disagree; carries a counterexample pair """

    def __init__(self, msg, pair=None):
        AssertionError.__init__(self, msg)
        self.pair = pair


# ------------
# group orders
# ------------

def gl_order(m, p):
    """ |GL(m, F_p)| = prod_{i<m} (p^m - p^i) """

    order = 1
    for i in range(m):
        order *= p ** m - p ** i
    return order


def mirabolic_order(n, p):
    """ |P_n(F_p)| = p^(n-1) |GL(n-1, F_p)| """

    return p ** (n - 1) * gl_order(n - 1, p)


def similarity_class_count(m, p):
    """ Number of similarity classes of gl(m, F_p).

        Coefficient of x^m in prod_{k>=1} 1/(1 - p x^k), i.e. the sum over
        partitions of m of p^(number of parts).
    """

    series = np.zeros(m + 1, dtype=np.int64)
    series[0] = 1
    for k in range(1, m + 1):
        geom = np.zeros(m + 1, dtype=np.int64)
        geom[::k] = p ** np.arange(m // k + 1, dtype=np.int64)
        series = np.convolve(series, geom)[:m + 1]
    return int(series[m])


def _check_prime(p):
    return Field(FP, p)


# ---------------------------------
# point encoding of pbar_n(F_p)
# ---------------------------------

def free_entries(n):
    """ (row, col) of the free entries of pbar_n, row-major """

    return [(i, j) for i in range(n) for j in range(n - 1)]


def point_count(n, p):
    return p ** (n * (n - 1))


def decode_points(idx, n, p):
    """ Stack of n x n integer matrices for point indices ``idx``.

        The first free entry is the most significant base-p digit.
    """

    idx = np.asarray(idx, dtype=np.int64)
    D = n * (n - 1)
    digits = np.zeros((len(idx), D), dtype=np.int64)
    rest = idx.copy()
    for k in range(D - 1, -1, -1):
        digits[:, k] = rest % p
        rest //= p
    X = np.zeros((len(idx), n, n), dtype=np.int64)
    for k, (i, j) in enumerate(free_entries(n)):
        X[:, i, j] = digits[:, k]
    return X


def encode_points(X, n, p):
    """ Inverse of :func:`decode_points`; the last column is ignored """

    idx = np.zeros(X.shape[0], dtype=np.int64)
    for (i, j) in free_entries(n):
        idx = idx * p + (X[:, i, j] % p)
    return idx


def point_to_pfun(index, n, p, field=None):
    if field is None:
        field = Field(FP, p)
    X = decode_points([index], n, p)[0]
    return PFun(Mat(field, X.tolist(), n))


def pfun_to_index(f):
    X = np.array([[int(a) for a in r] for r in f.xi.to_list()],
                 dtype=np.int64).reshape(1, f.n, f.n)
    return int(encode_points(X, f.n, f.field.p)[0])


# ----------
# generators
# ----------

def _inverse_mod(a, p):
    return pow(int(a), p - 2, p)


def mirabolic_generators(n, p):
    """ Pairs (g, g^-1) generating P_n(F_p).

        Transvections I + E_ij with i <= n-1, j != i, plus diag units with
        a primitive root in each Levi slot.
    """

    gens = []
    eye = np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        for j in range(n):
            if i == j:
                continue
            g = eye.copy()
            g[i, j] = 1
            ginv = eye.copy()
            ginv[i, j] = p - 1
            gens.append((g, ginv))
    if p > 2:
        r = primitive_root(p)
        for i in range(n - 1):
            g = eye.copy()
            g[i, i] = r
            ginv = eye.copy()
            ginv[i, i] = _inverse_mod(r, p)
            gens.append((g, ginv))
    return gens


def general_linear_generators(n, p):
    """ Pairs (g, g^-1) generating GL(n, F_p) """

    gens = []
    eye = np.eye(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            g = eye.copy()
            g[i, j] = 1
            ginv = eye.copy()
            ginv[i, j] = p - 1
            gens.append((g, ginv))
    if p > 2:
        r = primitive_root(p)
        for i in range(n):
            g = eye.copy()
            g[i, i] = r
            ginv = eye.copy()
            ginv[i, i] = _inverse_mod(r, p)
            gens.append((g, ginv))
    return gens


def conjugate_stack(g, ginv, X, p):
    return np.matmul(np.matmul(g, X) % p, ginv) % p


# --------------------------------------
# orbit partition of p_n(F_p)* under P_n
# --------------------------------------

class OrbitPartition(object):
    """ Exact partition of the points of pbar_n(F_p) into P_n(F_p)-orbits.

        :param labels: least point index of the orbit of every point
        :param classes: orbits as sorted lists of point indices, ordered by
            their least element
    """

    def __init__(self, n, p, labels, classes):
        self.n = n
        self.p = p
        self.labels = labels
        self.classes = classes

    @property
    def size(self):
        return len(self.labels)

    def __len__(self):
        return len(self.classes)

    def orbit_sizes(self):
        return [len(c) for c in self.classes]

    def representatives(self):
        return [c[0] for c in self.classes]

    def to_frame(self):
        """ DataFrame with columns orbit_id, point_index, sorted """

        ids = np.empty(self.size, dtype=np.int64)
        for k, c in enumerate(self.classes):
            ids[c] = k
        df = pd.DataFrame({'orbit_id': ids,
                           'point_index': np.arange(self.size)})
        df = df.sort_values(['orbit_id', 'point_index'])
        return df.reset_index(drop=True)

    @classmethod
    def from_frame(cls, n, p, df):
        df = df.sort_values(['orbit_id', 'point_index'])
        classes = [list(map(int, g['point_index']))
                   for _, g in df.groupby('orbit_id', sort=True)]
        classes.sort(key=lambda c: c[0])
        labels = np.empty(len(df), dtype=np.int64)
        for c in classes:
            labels[c] = c[0]
        return cls(n, p, labels, classes)


def enumerate_p_orbits(n, p, verbose=False):
    """ Orbit partition of p_n(F_p)* by union-find over generator images.

        Basic usage::

            part = enumerate_p_orbits(2, 3)
            sorted(part.orbit_sizes())   # [1, 1, 1, 6]

        :param n: matrix size
        :param p: prime
        :param verbose: print progress
        :returns: :class:`OrbitPartition`
    """

    _check_prime(p)
    N = point_count(n, p)
    if N > configs.ORACLE_MAX_POINTS:
        raise TooLarge(str(N) + " points exceed the guard of " +
                       str(configs.ORACLE_MAX_POINTS))
    gens = mirabolic_generators(n, p)
    if verbose:
        print('Saturating', N, 'points under', len(gens), 'generators ...')

    images = [np.empty(N, dtype=np.int64) for _ in gens]
    for start in range(0, N, CHUNK):
        idx = np.arange(start, min(start + CHUNK, N), dtype=np.int64)
        X = decode_points(idx, n, p)
        for img, (g, ginv) in zip(images, gens):
            img[idx] = encode_points(conjugate_stack(g, ginv, X, p), n, p)

    uf = UnionFind(N)
    uf.saturate(images, verbose=verbose)
    classes = uf.classes()
    if verbose:
        print('Found', len(classes), 'orbits')
    return OrbitPartition(n, p, uf.labels(), classes)


def is_saturated(part):
    """ Every generator maps every orbit into itself """

    n, p = part.n, part.p
    idx = np.arange(part.size, dtype=np.int64)
    X = decode_points(idx, n, p)
    for g, ginv in mirabolic_generators(n, p):
        img = encode_points(conjugate_stack(g, ginv, X, p), n, p)
        if not np.array_equal(part.labels[img], part.labels):
            return False
    return True


# ------------------------------
# centralizers over prime fields
# ------------------------------

def det_mod_p(stack, p):
    """ Determinants mod p of a stack of m x m integer matrices (Leibniz) """

    stack = np.asarray(stack, dtype=np.int64)
    M, m = stack.shape[0], stack.shape[1]
    if m == 0:
        return np.ones(M, dtype=np.int64)
    total = np.zeros(M, dtype=np.int64)
    rows = np.arange(m)
    for perm in itertools.permutations(range(m)):
        term = np.ones(M, dtype=np.int64)
        for i in rows:
            term = term * stack[:, i, perm[i]] % p
        sign = Permutation(list(perm)).signature()
        total = (total + sign * term) % p
    return total


def centralizer_unit_count(A, p):
    """ |{g in GL(m, F_p) : gA = Ag}| by enumerating the commutant """

    m = A.rows
    if m == 0:
        return 1
    F = A.field
    basis = []
    for i in range(m):
        for j in range(m):
            E = Mat.unit(F, m, m, i, j)
            basis.append((A * E - E * A).flatten())
    S = Mat(F, [list(c) for c in zip(*basis)], m * m)
    kernel = np.array([[int(a) for a in v.col(0)]
                       for v in kernel_basis(S)], dtype=np.int64)
    d = kernel.shape[0]
    if p ** d > configs.ORBIT_MAX_POINTS:
        raise TooLarge("commutant of dimension " + str(d) + " over F_" +
                       str(p) + " is too large to enumerate")
    count = 0
    for start in range(0, p ** d, CHUNK):
        idx = np.arange(start, min(start + CHUNK, p ** d), dtype=np.int64)
        coeffs = np.zeros((len(idx), d), dtype=np.int64)
        rest = idx.copy()
        for k in range(d - 1, -1, -1):
            coeffs[:, k] = rest % p
            rest //= p
        mats = (coeffs @ kernel % p).reshape(len(idx), m, m)
        count += int(np.count_nonzero(det_mod_p(mats, p)))
    return count


# ----------------------------
# comparison with the classifier
# ----------------------------

def compare_with_classifier(part, strict=False, verbose=False):
    """ Check that the classifier induces exactly the oracle partition.

        Also checks the orbit-stabilizer equation
        |orbit| * p^(n-depth) * |Z_GL(A)| = |P_n(F_p)| on every orbit, with
        A the terminal Levi matrix of the orbit representative.

        :param part: :class:`OrbitPartition`
        :param strict: raise :class:`MismatchFailure` instead of returning
            a failed report
    """

    n, p = part.n, part.p
    F = Field(FP, p)
    order = mirabolic_order(n, p)
    report = Report("P_n(F_p)-orbits on p_n(F_p)* are classified by depth "
                    "and the similarity class of the Levi part")
    if verbose:
        print('Classifying', part.size, 'points ...')

    inv_to_class = {}
    for k, cls in enumerate(part.classes):
        rep = point_to_pfun(cls[0], n, p, F)
        depth, A = reduce_to_levi(rep)
        key = classify(rep)
        if key in inv_to_class:
            pair = (part.classes[inv_to_class[key]][0], cls[0])
            report.add({'kind': 'merge', 'points': list(pair),
                        'invariant': key.to_dict()}, ok=False)
            if strict:
                raise MismatchFailure("distinct orbits share an invariant",
                                      pair)
        inv_to_class[key] = k
        stab = p ** (n - depth) * centralizer_unit_count(A, p)
        ok = len(cls) * stab == order
        report.add({'kind': 'orbit', 'representative': cls[0],
                    'size': len(cls), 'depth': depth, 'stabilizer': stab},
                   ok=ok)
        for point in cls[1:]:
            other = classify(point_to_pfun(point, n, p, F))
            if other != key:
                pair = (cls[0], point)
                report.add({'kind': 'split', 'points': list(pair)},
                           ok=False)
                if strict:
                    raise MismatchFailure("one orbit has two invariants",
                                          pair)
                break

    expected = sum(similarity_class_count(n - 1 - j, p) for j in range(n))
    report.add({'kind': 'count', 'classes': len(part), 'expected': expected},
               ok=len(part) == expected)
    report.summary = 'partition match: ' + str(len(part)) + ' classes'
    if strict and not report.ok:
        raise MismatchFailure("oracle and classifier disagree")
    return report


def stratum_census(n, p, part=None, verbose=False):
    """ Point counts of p_n(F_p)* per depth.

        The open stratum must be one orbit of size |P_n(F_p)|; its
        complement is the finite-field shadow of a proper closed subset.
    """

    if part is None:
        part = enumerate_p_orbits(n, p, verbose=verbose)
    F = Field(FP, p)
    per_depth = dict((d, 0) for d in range(1, n + 1))
    orbits_per_depth = dict((d, 0) for d in range(1, n + 1))
    for cls in part.classes:
        depth = classify(point_to_pfun(cls[0], n, p, F)).depth
        per_depth[depth] += len(cls)
        orbits_per_depth[depth] += 1
    total = part.size
    return {'n': n, 'p': p,
            'points': total,
            'points_per_depth': per_depth,
            'orbits_per_depth': orbits_per_depth,
            'open_size': per_depth[n],
            'mirabolic_order': mirabolic_order(n, p),
            'complement': total - per_depth[n]}


# ----------------------
# torus orbits on F_p^n
# ----------------------

def _vector_digits(N, n, p):
    idx = np.arange(N, dtype=np.int64)
    V = np.zeros((N, n), dtype=np.int64)
    rest = idx.copy()
    for k in range(n - 1, -1, -1):
        V[:, k] = rest % p
        rest //= p
    return V


def _encode_vectors(V, p):
    idx = np.zeros(V.shape[0], dtype=np.int64)
    for k in range(V.shape[1]):
        idx = idx * p + V[:, k] % p
    return idx


def _quadratic_generator(p):
    """ (a, b) with a + b i generating F_p[i]^x, for p = 3 mod 4 """

    target = p * p - 1
    for a in range(p):
        for b in range(1, p):
            x, y = a, b
            order = 1
            while (x, y) != (1, 0):
                x, y = (x * a - y * b) % p, (x * b + y * a) % p
                order += 1
                if order > target:
                    break
            if order == target:
                return a, b
    raise BadPrime("no generator of F_" + str(p) + "[i]^x")


def count_torus_orbits(n, p, torus=SPLIT, k=0, verbose=False):
    """ Number of T(F_p)-orbits on F_p^n - {0}.

        :param torus: 'split' for the diagonal torus, 'pairs' for k blocks
            F_p[i]^x acting on coordinate pairs (1,2), ..., (2k-1,2k) and the
            diagonal torus on the remaining n - 2k coordinates
        :param k: number of pairs ('pairs' only)
    """

    _check_prime(p)
    if torus == PAIRS:
        if p % 4 != 3:
            raise BadPrime("pairs(k) needs p = 3 mod 4 so that x^2+1 is "
                           "irreducible; got p = " + str(p))
        if not 0 <= 2 * k <= n:
            raise ValueError("need 0 <= 2k <= n")
    elif torus == SPLIT:
        k = 0
    else:
        raise ValueError("Unknown torus " + str(torus))
    N = p ** n
    if N > configs.ORACLE_MAX_POINTS:
        raise TooLarge(str(N) + " vectors exceed the guard")

    V = _vector_digits(N, n, p)
    images = []
    if k > 0:
        a, b = _quadratic_generator(p)
        for t in range(k):
            W = V.copy()
            x, y = V[:, 2 * t], V[:, 2 * t + 1]
            W[:, 2 * t] = (a * x - b * y) % p
            W[:, 2 * t + 1] = (b * x + a * y) % p
            images.append(_encode_vectors(W, p))
    if p > 2:
        r = primitive_root(p)
        for t in range(2 * k, n):
            W = V.copy()
            W[:, t] = W[:, t] * r % p
            images.append(_encode_vectors(W, p))
    uf = UnionFind(N)
    if images:
        uf.saturate(images, verbose=verbose)
    # the zero vector is its own orbit
    return len(uf) - 1


# --------------------------------------------
# P-orbits on a regular semisimple G-orbit
# --------------------------------------------

def _encode_full(X, p):
    idx = np.zeros(X.shape[0], dtype=np.int64)
    flat = X.reshape(X.shape[0], -1)
    for k in range(flat.shape[1]):
        idx = idx * p + flat[:, k] % p
    return idx


def _decode_full(idx, n, p):
    flat = np.zeros((len(idx), n * n), dtype=np.int64)
    rest = np.asarray(idx, dtype=np.int64).copy()
    for k in range(n * n - 1, -1, -1):
        flat[:, k] = rest % p
        rest //= p
    return flat.reshape(len(idx), n, n)


def conjugacy_orbit(xi, p, verbose=False):
    """ Sorted codes of the GL(n, F_p)-conjugates of the integer matrix xi """

    n = xi.shape[0]
    gens = general_linear_generators(n, p)
    seen = _encode_full(xi.reshape(1, n, n), p)
    frontier = xi.reshape(1, n, n) % p
    while len(frontier):
        found = [_encode_full(conjugate_stack(g, ginv, frontier, p), p)
                 for g, ginv in gens]
        new = np.setdiff1d(np.unique(np.concatenate(found)), seen)
        if len(seen) + len(new) > configs.ORBIT_MAX_POINTS:
            raise TooLarge("G-orbit exceeds " + str(configs.ORBIT_MAX_POINTS)
                           + " points")
        seen = np.union1d(seen, new)
        frontier = _decode_full(new, n, p)
        if verbose:
            print('G-orbit: ', len(seen), 'points')
    return seen


def double_coset_count(n, p, spec, verbose=False):
    """ Number of P_n(F_p)-orbits on the conjugacy class of diag(a mod p).

        :param spec: orbit description whose ``split_spectrum_mod(p)``
            returns n distinct residues
        :returns: number of P-orbits, to be compared with
            :func:`count_torus_orbits`
    """

    residues = spec.split_spectrum_mod(p)
    if len(residues) != n:
        raise ValueError("spectrum has " + str(len(residues)) +
                         " entries, expected " + str(n))
    predicted = gl_order(n, p) // (p - 1) ** n
    if predicted > configs.ORBIT_MAX_POINTS:
        raise TooLarge("G-orbit of " + str(predicted) + " points exceeds "
                       "the guard")
    xi = np.diag(np.array(residues, dtype=np.int64))
    codes = conjugacy_orbit(xi, p, verbose=verbose)
    X = _decode_full(codes, n, p)
    images = []
    for g, ginv in mirabolic_generators(n, p):
        img = _encode_full(conjugate_stack(g, ginv, X, p), p)
        images.append(np.searchsorted(codes, img))
    uf = UnionFind(len(codes))
    uf.saturate(images, verbose=verbose)
    return len(uf)
