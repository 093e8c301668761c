from __future__ import print_function
from __future__ import division

import os
import sys
import itertools
from fractions import Fraction
from abc import ABCMeta, abstractmethod

from six import with_metaclass
from sympy.calculus.finite_diff import finite_diff_weights

try:  # run as a package if installed
    from mirtoolkit import configs
    from mirtoolkit.exactalg import Field, Poly, RAT, GAUSS, FP, \
        DivisionByZero, poly_is_squarefree
    from mirtoolkit.matrixkit import Mat, char_poly
    from mirtoolkit.liecore import GFun, GroupElt, PFun, moment_map, \
        coadjoint_g, coadjoint_p, ad_coadjoint_p, stabilizer_dim, \
        project_pbar, lemma_injectivity_rank, levi_stabilizer_basis, \
        annihilator_basis, h_bar, same_span, P_ALGEBRA
    from mirtoolkit.orbitclass import classify, same_orbit, \
        predicted_stabilizer_dim, observability_depth
    from mirtoolkit.fforacle import stratum_census
    from mirtoolkit.utils import Report, bits, make_rng, random_mat, \
        random_mirabolic
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path

    import configs
    from exactalg import Field, Poly, RAT, GAUSS, FP, DivisionByZero, \
        poly_is_squarefree
    from matrixkit import Mat, char_poly
    from liecore import GFun, GroupElt, PFun, moment_map, coadjoint_g, \
        coadjoint_p, ad_coadjoint_p, stabilizer_dim, project_pbar, \
        lemma_injectivity_rank, levi_stabilizer_basis, \
        annihilator_basis, h_bar, same_span, P_ALGEBRA
    from orbitclass import classify, same_orbit, predicted_stabilizer_dim, \
        observability_depth
    from fforacle import stratum_census
    from utils import Report, bits, make_rng, random_mat, \
        random_mirabolic

SHIFT = 'shift'
SPECTRAL = 'spectral'


# -------------
# Error classes
# -------------

class DegenerateSpectralData(ValueError):
    """ Eigenvalues coincide or a required unit vanishes """


class InvalidSelector(ValueError):
    """ Selector is empty, out of range or malformed """


class BadReduction(ValueError):
    """ Spectral data does not survive reduction modulo p """


class AssertionFailure(AssertionError):
    """ A verified claim failed; carries the offending selector pair """

    def __init__(self, msg, pair=None):
        AssertionError.__init__(self, msg)
        self.pair = pair


def _distinct(values):
    return all(values[i] != values[j] for i in range(len(values))
               for j in range(i + 1, len(values)))


# -------------------------
# regular semisimple orbits
# -------------------------

class OrbitSpec(with_metaclass(ABCMeta)):
    """ Base class for the spectral data of a regular semisimple
        GL(n)-coadjoint orbit.

        All specs must define the following methods::

            OrbitSpec.xi() - the block-diagonal representative
            OrbitSpec.selectors() - every selector, in a fixed order
            OrbitSpec.selector_from_mask() - decode a bitmask
            OrbitSpec.validate_selector() - raise InvalidSelector
            OrbitSpec.selector_vector() - the vector v_sel in k^n
            OrbitSpec.expected_depth() - depth of the moment image
            OrbitSpec.expected_levi_char_poly() - its Levi char poly
            OrbitSpec.census_size() - number of P-orbits in the G-orbit
    """

    def __init__(self, n, field):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.field = field

    @property
    def slots(self):
        """ Number of independently selectable slots """

        return self.n

    def full_selector(self):
        return self.selector_from_mask((1 << self.slots) - 1)

    @abstractmethod
    def xi(self):
        """ Representative of the orbit in gl(n) """

    @abstractmethod
    def selectors(self):
        """ All selectors ordered by increasing bitmask """

    @abstractmethod
    def selector_from_mask(self, mask):
        """ Selector with bit s set iff slot s + 1 is selected """

    @abstractmethod
    def validate_selector(self, sel):
        """ Normalise ``sel`` or raise :class:`InvalidSelector` """

    @abstractmethod
    def selector_vector(self, sel):
        """ v_sel with x_i in {0, 1} """

    @abstractmethod
    def expected_depth(self, sel):
        """ Depth of the moment image of g_sel . f """

    @abstractmethod
    def expected_levi_char_poly(self, sel):
        """ Characteristic polynomial of its Levi part """

    @abstractmethod
    def census_size(self):
        """ Number of P-orbits in the G-orbit """

    @abstractmethod
    def selector_text(self, sel):
        """ Text form of a selector, as accepted by :func:`parse_selector` """

    @abstractmethod
    def split_spectrum_mod(self, p):
        """ Residues of a split spectrum modulo p """


class ComplexOrbitSpec(OrbitSpec):
    """ Orbit of diag(a_1, ..., a_n) with pairwise distinct a_i.

        :param n: size
        :param a: eigenvalues, anything the field converts
        :param field: GAUSS by default; RAT for real spectra

        Selectors are nonempty tuples of indices I, 1-based and ascending.
    """

    def __init__(self, n, a, field=None):
        if field is None:
            field = Field(GAUSS)
        OrbitSpec.__init__(self, n, field)
        if len(a) != n:
            raise DegenerateSpectralData("need " + str(n) + " eigenvalues, "
                                         "got " + str(len(a)))
        self.a = [field.convert(x) for x in a]
        if not _distinct(self.a):
            raise DegenerateSpectralData("eigenvalues must be distinct")

    def xi(self):
        return Mat.diag(self.field, self.a)

    def selectors(self):
        return [self.selector_from_mask(m) for m in range(1, 1 << self.n)]

    def selector_from_mask(self, mask):
        if not 0 < mask < (1 << self.n):
            raise InvalidSelector("bitmask " + str(mask) + " out of range")
        return tuple(bits(mask, self.n))

    def validate_selector(self, sel):
        try:
            sel = tuple(sorted(set(int(i) for i in sel)))
        except (TypeError, ValueError):
            raise InvalidSelector("malformed selector " + repr(sel))
        if not sel:
            raise InvalidSelector("selector must be nonempty")
        if sel[0] < 1 or sel[-1] > self.n:
            raise InvalidSelector("indices must lie in 1.." + str(self.n))
        return sel

    def selector_vector(self, sel):
        sel = self.validate_selector(sel)
        return [1 if i in sel else 0 for i in range(1, self.n + 1)]

    def expected_depth(self, sel):
        return len(self.validate_selector(sel))

    def expected_levi_char_poly(self, sel):
        sel = self.validate_selector(sel)
        return Poly.from_roots(self.field, [self.a[i - 1] for i in
                                            range(1, self.n + 1)
                                            if i not in sel])

    def census_size(self):
        return 2 ** self.n - 1

    def selector_text(self, sel):
        return ','.join(str(i) for i in self.validate_selector(sel))

    def split_spectrum_mod(self, p):
        try:
            res = [int(self.field.reduce_mod(x, p)) for x in self.a]
        except (ValueError, DivisionByZero) as err:
            raise BadReduction(str(err))
        if len(set(res)) != len(res):
            raise BadReduction("eigenvalues collide modulo " + str(p))
        return res

    def to_dict(self):
        return {'case': 'complex', 'n': self.n, 'field': str(self.field),
                'eigen': [self.field.format(x) for x in self.a]}


class RealOrbitSpec(OrbitSpec):
    """ Orbit of diag(a_1 I + b_1 J, ..., a_k I + b_k J, c_1, ..., c_{n-2k})
        with J = [[0, 1], [-1, 0]].

        The eigenvalues are a_j +- i b_j and the c's; all n must be
        distinct and every b_j nonzero. Selectors are pairs (I1, I2) with
        I1 a subset of 1..k and I2 a subset of 2k+1..n, not both empty.
    """

    def __init__(self, n, k, a, b, c, field=None):
        if field is None:
            field = Field(RAT)
        if field.tag != RAT:
            raise ValueError("real spectral data lives over the rationals")
        OrbitSpec.__init__(self, n, field)
        if not 0 <= 2 * k <= n:
            raise DegenerateSpectralData("need 0 <= 2k <= n")
        if len(a) != k or len(b) != k or len(c) != n - 2 * k:
            raise DegenerateSpectralData("expected " + str(k) + " pairs and "
                                         + str(n - 2 * k) + " real values")
        self.k = k
        self.a = [field.convert(x) for x in a]
        self.b = [field.convert(x) for x in b]
        self.c = [field.convert(x) for x in c]
        if any(not x for x in self.b):
            raise DegenerateSpectralData("imaginary parts b_j must be "
                                         "nonzero")
        pairs = [(x, abs(y)) for x, y in zip(self.a, self.b)]
        if not _distinct(pairs) or not _distinct(self.c):
            raise DegenerateSpectralData("eigenvalues must be distinct")

    @property
    def slots(self):
        return self.n - self.k

    def xi(self):
        F = self.field
        rows = [[0] * self.n for _ in range(self.n)]
        for j in range(self.k):
            r = 2 * j
            rows[r][r] = rows[r + 1][r + 1] = self.a[j]
            rows[r][r + 1] = self.b[j]
            rows[r + 1][r] = -self.b[j]
        for t, x in enumerate(self.c):
            r = 2 * self.k + t
            rows[r][r] = x
        return Mat(F, rows, self.n)

    def complexify(self):
        """ The same orbit as a :class:`ComplexOrbitSpec` over GAUSS """

        G = Field(GAUSS)
        z = []
        for x, y in zip(self.a, self.b):
            x, y = Fraction(int(x.numerator), int(x.denominator)), \
                Fraction(int(y.numerator), int(y.denominator))
            z.append(G.gaussian(x, y))
            z.append(G.gaussian(x, -y))
        z.extend(self.field.embed(x, G) for x in self.c)
        return ComplexOrbitSpec(self.n, z, G)

    def selectors(self):
        return [self.selector_from_mask(m) for m in range(1, 1 << self.slots)]

    def selector_from_mask(self, mask):
        if not 0 < mask < (1 << self.slots):
            raise InvalidSelector("bitmask " + str(mask) + " out of range")
        i1 = tuple(bits(mask, self.k))
        i2 = tuple(2 * self.k + i for i in bits(mask >> self.k,
                                                 self.n - 2 * self.k))
        return (i1, i2)

    def validate_selector(self, sel):
        try:
            i1, i2 = sel
            i1 = tuple(sorted(set(int(i) for i in i1)))
            i2 = tuple(sorted(set(int(i) for i in i2)))
        except (TypeError, ValueError):
            raise InvalidSelector("malformed selector " + repr(sel))
        if not i1 and not i2:
            raise InvalidSelector("I1 and I2 cannot both be empty")
        if any(i < 1 or i > self.k for i in i1):
            raise InvalidSelector("I1 must lie in 1.." + str(self.k))
        if any(i <= 2 * self.k or i > self.n for i in i2):
            raise InvalidSelector("I2 must lie in " + str(2 * self.k + 1) +
                                  ".." + str(self.n))
        return (i1, i2)

    def selector_vector(self, sel):
        i1, i2 = self.validate_selector(sel)
        v = [0] * self.n
        for j in i1:
            v[2 * j - 1] = 1
        for i in i2:
            v[i - 1] = 1
        return v

    def expected_depth(self, sel):
        i1, i2 = self.validate_selector(sel)
        return 2 * len(i1) + len(i2)

    def expected_levi_char_poly(self, sel):
        i1, i2 = self.validate_selector(sel)
        F = self.field
        out = Poly.constant(F, 1)
        for j in range(1, self.k + 1):
            if j not in i1:
                x, y = self.a[j - 1], self.b[j - 1]
                out = out * Poly.from_coeffs(F, [x * x + y * y, -2 * x, 1])
        for i in range(2 * self.k + 1, self.n + 1):
            if i not in i2:
                out = out * Poly.from_roots(F, [self.c[i - 2 * self.k - 1]])
        return out

    def census_size(self):
        return 2 ** (self.n - self.k) - 1

    def selector_text(self, sel):
        i1, i2 = self.validate_selector(sel)
        return ','.join(map(str, i1)) + ';' + ','.join(map(str, i2))

    def split_spectrum_mod(self, p):
        if self.k > 0:
            raise BadReduction("complex pairs give a nonsplit torus")
        res = []
        for x in self.c:
            try:
                res.append(int(self.field.reduce_mod(x, p)))
            except (ValueError, DivisionByZero) as err:
                raise BadReduction(str(err))
        if len(set(res)) != len(res):
            raise BadReduction("eigenvalues collide modulo " + str(p))
        return res

    def to_dict(self):
        F = self.field
        return {'case': 'real', 'n': self.n, 'k': self.k,
                'field': str(F),
                'pairs': [[F.format(x), F.format(y)]
                          for x, y in zip(self.a, self.b)],
                'reals': [F.format(x) for x in self.c]}


def parse_selector(text, spec):
    """ Parse the CLI selector syntax.

        ``0b...`` and ``0x...`` are bitmasks over the selectable slots;
        otherwise a comma separated index list (complex case) or
        ``I1;I2`` (real case, either side may be empty).
    """

    text = str(text).strip().replace(' ', '')
    try:
        if text.lower().startswith(('0b', '0x')):
            return spec.selector_from_mask(int(text, 0))
        if isinstance(spec, RealOrbitSpec):
            if ';' not in text:
                raise InvalidSelector("real selectors are written I1;I2")
            left, right = text.split(';', 1)
            return spec.validate_selector(
                ([int(i) for i in left.split(',') if i],
                 [int(i) for i in right.split(',') if i]))
        return spec.validate_selector([int(i) for i in text.split(',')
                                       if i])
    except ValueError as err:
        if isinstance(err, InvalidSelector):
            raise
        raise InvalidSelector("cannot parse selector '" + text + "'")


# ------------
# constructors
# ------------

def make_open_rep(n, variant=SHIFT, a=None, b=None, field=None):
    """ Representative of the open P_n-orbit.

        :param variant: 'shift' gives the subdiagonal ones matrix, 'spectral'
            gives [[diag(a), 0], [b^t, 0]]
        :param a: n-1 distinct values ('spectral')
        :param b: n-1 nonzero values ('spectral')
    """

    if field is None:
        field = Field(RAT)
    if variant == SHIFT:
        rows = [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)]
        return PFun(Mat(field, rows, n))
    elif variant == SPECTRAL:
        if a is None or b is None or len(a) != n - 1 or len(b) != n - 1:
            raise DegenerateSpectralData("spectral variant needs n-1 values "
                                         "for a and b")
        a = [field.convert(x) for x in a]
        b = [field.convert(x) for x in b]
        if not _distinct(a) or any(not x for x in b):
            raise DegenerateSpectralData("a must be distinct and b nonzero")
        return PFun.from_blocks(Mat.diag(field, a), b)
    raise ValueError("Unknown variant " + str(variant))


def make_regular_ss(spec):
    return GFun(spec.xi())


def make_g_selector(spec, sel):
    """ Group element whose last row is v_sel.

        Under the action g . x = (g^-1)^t x this is exactly
        g^-1 . v_0 = v_sel with v_0 = e_n; the P-orbit of g . f only depends
        on the coset P g, hence on the last row of g.

        * x_n = 1: [[I, 0], [v_1 ... v_{n-1}, 1]]
        * x_n = 0: with q the largest index with x_q = 1, rows e_i for
          i != q, n, row q = e_n and last row v_sel
    """

    v = spec.selector_vector(sel)
    n = spec.n
    F = spec.field
    eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if v[n - 1] == 1:
        rows = eye[:n - 1] + [v]
    else:
        q = max(i for i in range(n) if v[i] == 1)
        rows = [list(r) for r in eye]
        rows[q] = eye[n - 1]
        rows[n - 1] = v
    return GroupElt(Mat(F, rows, n))


def membership_identity(spec, sel):
    """ g_sel^-1 . v_0 = v_sel for the action g . x = (g^-1)^t x """

    g = make_g_selector(spec, sel)
    n = spec.n
    F = spec.field
    e_n = Mat.column(F, [0] * (n - 1) + [1])
    # action of g^-1 on k^n
    moved = GroupElt(g.inverse()).inverse().transpose() * e_n
    return moved == Mat.column(F, spec.selector_vector(sel))


def moment_image(spec, sel):
    return moment_map(coadjoint_g(make_g_selector(spec, sel),
                                  make_regular_ss(spec)))


def classify_image(spec, sel):
    return classify(moment_image(spec, sel))


# --------------------
# verification suites
# --------------------

def verify_stabilizer_dims(spec, sel, strict=False):
    """ Upstairs and downstairs stabilizer dimensions for one selector.

        Upstairs: the p_n-stabilizer of g_sel . f in gl(n)*, expected
        n - depth. Downstairs: the p_n-stabilizer of its moment image,
        expected 2 (n - depth), and equal to the value predicted from the
        depth invariant. Dimensions are over the field of ``spec``.
    """

    sel = spec.validate_selector(sel)
    depth = spec.expected_depth(sel)
    report = Report("stabilizers of g_sel.f and of its moment image have "
                    "dimensions n - depth and 2(n - depth)")
    up = stabilizer_dim(coadjoint_g(make_g_selector(spec, sel),
                                    make_regular_ss(spec)), P_ALGEBRA)
    image = moment_image(spec, sel)
    down = stabilizer_dim(image, P_ALGEBRA)
    predicted = predicted_stabilizer_dim(classify(image))
    n = spec.n
    ok = up == n - depth and down == 2 * (n - depth) and predicted == down
    report.add({'selector': spec.selector_text(sel),
                'upstairs': up, 'expected_upstairs': n - depth,
                'downstairs': down, 'expected_downstairs': 2 * (n - depth),
                'predicted': predicted}, ok=ok)
    report.summary = 'upstairs ' + str(up) + ', downstairs ' + str(down)
    if strict and not ok:
        raise AssertionFailure("stabilizer dimensions differ",
                               (spec.selector_text(sel), None))
    return report


def verify_orbit_census(spec, strict=False, verbose=False):
    """ The G-orbit of ``spec`` splits into census_size() semisimple
        P-orbits, pairwise distinct, exactly one of them open.

        Basic usage::

            spec = ComplexOrbitSpec(3, [0, 1, 2])
            verify_orbit_census(spec).text()
            # '7 orbits, 1 open, all semisimple: ok'
    """

    n = spec.n
    report = Report("a regular semisimple coadjoint orbit contains exactly "
                    + str(spec.census_size()) + " P-orbits, all semisimple, "
                    "one of them open")
    seen = {}
    opens = 0
    all_ss = True
    for sel in spec.selectors():
        text = spec.selector_text(sel)
        if verbose:
            print('selector', text)
        image = moment_image(spec, sel)
        inv = classify(image)
        expected_poly = spec.expected_levi_char_poly(sel)
        up = stabilizer_dim(coadjoint_g(make_g_selector(spec, sel),
                                        make_regular_ss(spec)), P_ALGEBRA)
        down = stabilizer_dim(image, P_ALGEBRA)
        ok = inv.depth == spec.expected_depth(sel) and \
            inv.levi_char_poly == expected_poly and inv.semisimple and \
            membership_identity(spec, sel) and \
            up == n - inv.depth and down == 2 * (n - inv.depth) and \
            down == predicted_stabilizer_dim(inv)
        witness = {'selector': text,
                   'depth': inv.depth,
                   'expected_depth': spec.expected_depth(sel),
                   'char_poly': str(inv.levi_char_poly),
                   'expected_char_poly': str(expected_poly),
                   'semisimple': inv.semisimple,
                   'stabilizer_upstairs': up,
                   'stabilizer_downstairs': down}
        if inv in seen:
            ok = False
            witness['duplicate_of'] = seen[inv]
            if strict:
                raise AssertionFailure("two selectors give the same orbit",
                                       (seen[inv], text))
        seen[inv] = text
        if inv.depth == n:
            opens += 1
        all_ss = all_ss and inv.semisimple
        report.add(witness, ok=ok)
        if strict and not ok:
            raise AssertionFailure("selector " + text + " fails", (text, None))

    count = len(seen)
    report.add({'orbits': count, 'expected': spec.census_size(),
                'open': opens},
               ok=count == spec.census_size() and opens == 1)
    report.summary = str(count) + ' orbits, ' + str(opens) + ' open, ' + \
        ('all semisimple' if all_ss else 'not all semisimple')
    if strict and not report.ok:
        raise AssertionFailure("census fails")
    return report


def verify_open_orbit(n, field=None):
    """ The shift and spectral representatives both lie in the open orbit,
        with trivial stabilizer. """

    if field is None:
        field = Field(RAT)
    shift = make_open_rep(n, SHIFT, field=field)
    spectral = make_open_rep(n, SPECTRAL, a=list(range(1, n)),
                             b=[1] * (n - 1), field=field)
    report = Report("the shift and spectral representatives lie in the "
                    "unique open P_n-orbit, which has trivial stabilizer")
    for name, f in ((SHIFT, shift), (SPECTRAL, spectral)):
        inv = classify(f)
        dim = stabilizer_dim(f, P_ALGEBRA)
        report.add({'representative': name, 'depth': inv.depth,
                    'stabilizer': dim,
                    'observability': observability_depth(f)},
                   ok=inv.depth == n and dim == 0 and
                   observability_depth(f) == n)
    same = same_orbit(shift, spectral)
    report.add({'same_orbit': same}, ok=same)
    report.summary = 'n=' + str(n) + ' open orbit, trivial stabilizer'
    return report


def verify_real_complex_consistency(spec):
    """ Classifying a real selector image over RAT and after embedding into
        GAUSS gives the same depth and invariant factors. """

    G = Field(GAUSS)
    report = Report("embedding real spectral data into the complex case "
                    "changes neither depth nor eigenvalues")
    for sel in spec.selectors():
        image = moment_image(spec, sel)
        real = classify(image)
        cplx = classify(project_pbar(image.xi.change_field(G)))
        lifted = [Poly.from_coeffs(G, [spec.field.embed(c, G)
                                       for c in d.coeffs])
                  for d in real.levi_invariant_factors]
        ok = real.depth == cplx.depth and \
            tuple(lifted) == cplx.levi_invariant_factors
        report.add({'selector': spec.selector_text(sel),
                    'depth': real.depth, 'complex_depth': cplx.depth},
                   ok=ok)
    report.summary = str(len(spec.selectors())) + ' selectors consistent'
    return report


def fiber_over_open_point(spec, p, verbose=False):
    """ Number of points of G(F_p) . f over the open moment image.

        Enumerates the p^n last columns completing the moment image of the
        full selector, reduced mod p, and counts those similar to the
        reduced representative. With a squarefree characteristic
        polynomial similarity is equality of characteristic polynomials.
    """

    F = Field(FP, p)
    try:
        xi = spec.xi().reduce_mod(F)
        image = moment_image(spec, spec.full_selector()).xi.reduce_mod(F)
    except (ValueError, DivisionByZero) as err:
        if isinstance(err, BadReduction):
            raise
        raise BadReduction("cannot reduce modulo " + str(p) + ": " +
                           str(err))
    chi = char_poly(xi)
    if not poly_is_squarefree(chi):
        raise BadReduction("spectrum is not separable modulo " + str(p))
    if classify(PFun(image)).depth != spec.n:
        raise BadReduction("moment image leaves the open orbit modulo " +
                           str(p))
    n = spec.n
    rows = image.to_list()
    count = 0
    for column in itertools.product(range(p), repeat=n):
        cand = Mat(F, [r[:n - 1] + [c] for r, c in zip(rows, column)], n)
        if char_poly(cand) == chi:
            count += 1
            if verbose:
                print('fiber point', cand)
    return count


def verify_fiber(spec, primes):
    report = Report("the reduced space of the open P-orbit is a single "
                    "point")
    for p in primes:
        count = fiber_over_open_point(spec, p)
        report.add({'p': p, 'points': count}, ok=count == 1)
    report.summary = 'fiber sizes ' + \
        ','.join(str(w['points']) for w in report.witnesses)
    return report


# -------------
# Mackey strata
# -------------

def stratum_representative(n, depth, field=None):
    """ A functional of the given depth: the shift with one link cut.

        The shift on F^n is the open representative. Zeroing its entry
        (n - depth, n - depth - 1) lets the reduction run depth - 1 steps
        before alpha vanishes, leaving a nilpotent Levi block of size
        n - depth.
    """

    if field is None:
        field = Field(RAT)
    if not 1 <= depth <= n:
        raise ValueError("depth must lie in [1, " + str(n) + "]")
    cut = n - depth
    rows = [[1 if (i == j + 1 and i != cut) else 0 for j in range(n)]
            for i in range(n)]
    return project_pbar(Mat(field, rows, n))


def orbit_strata(n, field=None):
    """ Classify one representative per depth of p_n*.

        :returns: [(j, Levi size)] for j = depth - 1 = 0..n-1
    """

    strata = []
    for depth in range(1, n + 1):
        inv = classify(stratum_representative(n, depth, field))
        strata.append((inv.depth - 1, inv.levi_size))
    return strata


def representation_strata(n):
    """ Unfold P^_m = E(G^_{m-1}) + I(P^_{m-1}) from m = n.

        :returns: [(k, size of the GL whose dual labels the stratum)]
    """

    strata = []
    m, k = n, 1
    while m > 1:
        strata.append((k, m - 1))
        m, k = m - 1, k + 1
    # P_1 is trivial: I^{n-1} applied to its trivial representation
    strata.append((k, 0))
    return strata


def mackey_strata_match(n, census_prime=2):
    """ Orbit stratum j matches representation depth k = j + 1 with the
        same general linear datum; the top stratum is a singleton.

        For n <= MACKEY_CENSUS_MAX_N the orbit side is also read off the
        exhaustive partition of p_n(F_p)*: every depth must be inhabited
        and the top depth must be a single orbit.
    """

    if n < 1:
        raise ValueError("n must be positive")
    report = Report("depth of P_n-coadjoint orbits matches the Mackey "
                    "depth of irreducible unitary representations")
    orbits = orbit_strata(n)
    reps = representation_strata(n)
    report.add({'strata': len(orbits), 'representation_strata': len(reps)},
               ok=len(orbits) == len(reps) == n)
    for (j, gl_o), (k, gl_r) in zip(orbits, reps):
        report.add({'j': j, 'depth': k, 'orbit_gl': gl_o,
                    'representation_gl': gl_r},
                   ok=k == j + 1 and gl_o == gl_r == n - 1 - j)
    top = classify(stratum_representative(n, n))
    top_rep = reps[-1]
    # GL(0) is trivial: one coadjoint orbit, one representation
    report.add({'top_depth': top_rep[0], 'top_gl': top.levi_size},
               ok=top_rep[0] == n == top.depth and top.levi_size == 0 ==
               top_rep[1] and not top.levi_invariant_factors)
    if 2 <= n <= configs.MACKEY_CENSUS_MAX_N:
        census = stratum_census(n, census_prime)
        per_depth = census['orbits_per_depth']
        report.add({'p': census_prime, 'orbits_per_depth': per_depth},
                   ok=all(per_depth[d] > 0 for d in range(1, n + 1)) and
                   per_depth[n] == 1)
    report.summary = str(n) + ' strata matched, top stratum singleton'
    return report


# ----------------------
# Lemma property suites
# ----------------------

def derivative_weights(degree):
    """ w_k with sum_k w_k F(k) = F'(0) for polynomials of degree <= degree """

    weights = finite_diff_weights(1, list(range(degree + 1)), 0)[1][-1]
    return [Fraction(int(w.p), int(w.q)) for w in weights]


def _strictly_upper(field, n, rng):
    X = random_mat(field, n, n, rng)
    return Mat(field, [[X.entry(i, j) if j > i else 0 for j in range(n)]
                       for i in range(n)], n)


def _random_pfun(field, n, rng, sparse):
    """ Random p_n* element; sparse samples hit the lower strata """

    bound = 1 if sparse else None
    xi = random_mat(field, n, n, rng, bound)
    if sparse and rng.randint(0, 2):
        # alpha = 0: depth 1
        xi = Mat(field, xi.to_list()[:n - 1] + [[0] * n], n)
    return project_pbar(xi)


def verify_lemma_suite(n, field=None, samples=None, seed=None,
                       verbose=False):
    """ Exact property checks of the inductive classification.

        :param n: size, at least 2
        :param field: scalar field (RAT by default)
        :param samples: number of random samples per property
        :param seed: seed of the random number generator

        Checks the rank of xi -> ad*(xi) h_bar on n_n, that the Levi
        stabilizer of h_bar kills it and coincides with the annihilator of
        ad(n_n) h_bar, moment map equivariance, the action law, the
        derivative of the action, classify invariance and determinism and
        the stabilizer formula.
    """

    if field is None:
        field = Field(RAT)
    if samples is None:
        samples = configs.DEFAULT_SAMPLES
    rng = make_rng(seed)
    F = field
    report = Report("inductive classification lemmas hold exactly")

    r = lemma_injectivity_rank(n, F)
    report.add({'check': 'injectivity', 'rank': r, 'expected': n - 1},
               ok=r == n - 1)

    hb = h_bar(n, F)
    stab = levi_stabilizer_basis(n, F)
    killed = all(ad_coadjoint_p(X, hb).is_zero() for X in stab)
    report.add({'check': 'levi stabilizer kills h', 'dim': len(stab)},
               ok=killed and len(stab) == (n - 1) * (n - 2))

    ann = annihilator_basis(n, F)
    report.add({'check': 'annihilator equals stabilizer', 'dim': len(ann),
                'expected': (n - 1) ** 2 - (n - 1)},
               ok=len(ann) == (n - 1) ** 2 - (n - 1) and same_span(ann, stab))

    weights = None
    if F.tag != FP or F.p > n:
        weights = [F.convert(w) for w in derivative_weights(n)]

    counts = dict.fromkeys(('equivariance', 'action', 'derivative',
                            'invariance', 'determinism', 'stabilizer',
                            'observability'), 0)
    bad = dict(counts)
    for s in range(samples):
        sparse = s % 2 == 1
        f = _random_pfun(F, n, rng, sparse)
        big = GFun(random_mat(F, n, n, rng))
        g1 = GroupElt(random_mirabolic(F, n, rng))
        g2 = GroupElt(random_mirabolic(F, n, rng))

        checks = {}
        checks['equivariance'] = moment_map(coadjoint_g(g1, big)) == \
            coadjoint_p(g1, moment_map(big))
        checks['action'] = coadjoint_p(g1 * g2, f) == \
            coadjoint_p(g1, coadjoint_p(g2, f))
        if weights is not None:
            X = _strictly_upper(F, n, rng)
            total = Mat.zeros(F, n, n)
            for t, w in enumerate(weights):
                g = GroupElt(Mat.identity(F, n) + X.scale(t))
                total = total + coadjoint_p(g, f).xi.scale(w)
            checks['derivative'] = total == ad_coadjoint_p(X, f).xi
        inv = classify(f)
        checks['invariance'] = inv == classify(coadjoint_p(g1, f))
        checks['determinism'] = inv == classify(f, completion='first')
        checks['stabilizer'] = stabilizer_dim(f, P_ALGEBRA) == \
            predicted_stabilizer_dim(inv)
        checks['observability'] = (observability_depth(f) == n) == \
            (inv.depth == n)
        for name, ok in checks.items():
            counts[name] += 1
            if not ok:
                bad[name] += 1
                report.add({'check': name, 'sample': s,
                            'functional': str(f.xi)}, ok=False)
        if verbose and (s + 1) % 100 == 0:
            print(s + 1, 'samples checked')

    for name in sorted(counts):
        report.add({'check': name, 'samples': counts[name],
                    'failures': bad[name]}, ok=bad[name] == 0)
    report.summary = 'n=' + str(n) + ' lemma suite, ' + str(samples) + \
        ' samples'
    return report

