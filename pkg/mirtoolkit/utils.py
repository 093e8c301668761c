from __future__ import print_function
from __future__ import division

import os
import sys
import numpy as np

try:  # run as a package if installed
    from mirtoolkit import configs
    from mirtoolkit.exactalg import GAUSS, FP
    from mirtoolkit.matrixkit import Mat
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    import configs
    from exactalg import GAUSS, FP
    from matrixkit import Mat

OK = 'ok'
FAIL = 'fail'


# -------------------
# verification report
# -------------------

class Report(object):
    """ Outcome of a verification suite.

        A report names the claim it checks, collects witnesses (one small
        dictionary per checked instance) and is ``fail`` as soon as one
        witness fails. ``summary`` is the one-line text shown by the CLI.
    """

    def __init__(self, claim):
        self.claim = claim
        self.status = OK
        self.witnesses = []
        self.summary = ''

    @property
    def ok(self):
        return self.status == OK

    def add(self, witness, ok=True):
        w = dict(witness)
        w['status'] = OK if ok else FAIL
        self.witnesses.append(w)
        if not ok:
            self.status = FAIL
        return ok

    def merge(self, other):
        for w in other.witnesses:
            w = dict(w)
            w.setdefault('claim', other.claim)
            self.witnesses.append(w)
        if not other.ok:
            self.status = FAIL

    def failures(self):
        return [w for w in self.witnesses if w.get('status') == FAIL]

    def text(self):
        body = self.summary if self.summary else self.claim
        return body + ': ' + self.status

    def to_dict(self):
        return {'claim': self.claim,
                'status': self.status,
                'summary': self.summary,
                'witnesses': self.witnesses}


# ----------
# union-find
# ----------

class UnionFind(object):
    """ Union-find over the integers 0..size-1.

        Scalar ``union``/``find`` use path compression and keep the least
        index as root; :meth:`saturate` merges every point with its images under a
        list of index maps at once, by propagating the least label of each
        component (numpy) until nothing changes. The representative of a
        class is always its least index.
    """

    def __init__(self, size):
        self.parent = np.arange(size, dtype=np.int64)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return int(root)

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if y < x:
            x, y = y, x
        self.parent[y] = x

    def saturate(self, images, verbose=False):
        """ Merge i with images[k][i] for every k and i """

        lab = self.labels()
        rounds = 0
        while True:
            old = lab.copy()
            for img in images:
                np.minimum.at(lab, img, lab.copy())
                lab = np.minimum(lab, lab[img])
            lab = lab[lab]
            rounds += 1
            if np.array_equal(lab, old):
                break
        if verbose:
            print('Saturated after', rounds, 'rounds')
        self.parent = lab

    def labels(self):
        lab = self.parent.copy()
        while True:
            nxt = lab[lab]
            if np.array_equal(nxt, lab):
                return lab
            lab = nxt

    def classes(self):
        """ Sorted classes, ordered by their least element """

        lab = self.labels()
        order = np.argsort(lab, kind='stable')
        bounds = np.flatnonzero(np.diff(lab[order])) + 1
        return [list(map(int, c)) for c in np.split(order, bounds)]

    def __len__(self):
        lab = self.labels()
        return int(np.count_nonzero(lab == np.arange(len(lab))))


# ---------------
# random sampling
# ---------------

def random_scalar(field, rng, bound=None, nonzero=False):
    """ Small random scalar: integers in [-bound, bound] (Gaussian
        integers for the gauss field, residues for fp) """

    if bound is None:
        bound = configs.RANDOM_BOUND
    while True:
        if field.tag == FP:
            a = field.convert(int(rng.randint(0, field.p)))
        elif field.tag == GAUSS:
            re, im = rng.randint(-bound, bound + 1, size=2)
            a = field.gaussian(int(re), int(im))
        else:
            a = field.convert(int(rng.randint(-bound, bound + 1)))
        if a or not nonzero:
            return a


def random_mat(field, rows, cols, rng, bound=None):
    return Mat(field, [[random_scalar(field, rng, bound) for _ in range(cols)]
                       for _ in range(rows)], cols)


def random_invertible(field, n, rng, bound=None):
    while True:
        g = random_mat(field, n, n, rng, bound)
        if not g.det().is_zero():
            return g


def random_mirabolic(field, n, rng, bound=None):
    """ Random invertible matrix with last row (0, ..., 0, 1) """

    while True:
        top = [[random_scalar(field, rng, bound) for _ in range(n)]
               for _ in range(n - 1)]
        g = Mat(field, top + [[0] * (n - 1) + [1]], n)
        if not g.det().is_zero():
            return g


def random_lie_p(field, n, rng, bound=None):
    """ Random element of p_n (zero last row) """

    top = [[random_scalar(field, rng, bound) for _ in range(n)]
           for _ in range(n - 1)]
    return Mat(field, top + [[0] * n], n)


def random_distinct(field, count, rng, bound=None):
    """ ``count`` pairwise distinct random scalars """

    out = []
    while len(out) < count:
        a = random_scalar(field, rng, bound)
        if a not in out:
            out.append(a)
    return out


def make_rng(seed=None):
    if seed is None:
        seed = configs.DEFAULT_SEED
    return np.random.RandomState(seed)


def bits(mask, width):
    """ 1-based indices of the set bits of ``mask`` below ``width`` """

    return [i + 1 for i in range(width) if (mask >> i) & 1]
