from __future__ import print_function
from __future__ import division

import os
import sys
from fractions import Fraction

from sympy.ntheory import isprime, sqrt_mod
from sympy.polys.domains import QQ, QQ_I, FiniteField
from sympy.polys.rings import ring

try:  # run as a package if installed
    from mirtoolkit import configs
except ImportError:
    pass

    path = os.path.abspath(os.path.dirname(__file__))
    if path not in sys.path:
        sys.path.append(path)
    del path
    import configs

RAT = 'rat'
GAUSS = 'gauss'
FP = 'fp'

# -------------
# Error classes
# -------------


class FieldMismatch(ValueError):
    """ Operands live over different scalar fields """


class DivisionByZero(ZeroDivisionError):
    """ Division by (or inversion of) the zero scalar """


class ZeroPolynomial(ValueError):
    """ Operation undefined on the zero polynomial """


class NotPrime(ValueError):
    """ Modulus of a prime field is not an admissible prime """


class ScalarSyntaxError(ValueError):
    """ Text could not be parsed as a scalar of the requested field """


# ------
# Fields
# ------

class Field(object):
    """ One of the three exact scalar fields used throughout the package.

        * ``Field(RAT)``: the rationals, standing in for the real numbers
        * ``Field(GAUSS)``: the Gaussian rationals Q(i), standing in for C
        * ``Field(FP, p)``: the prime field F_p (brute-force oracle fields)

        The field owns the underlying sympy domain and the univariate
        polynomial ring over it. Fields compare equal iff their tags (and
        moduli) agree.
    """

    def __init__(self, tag, p=None):
        if tag == RAT:
            self.domain = QQ
        elif tag == GAUSS:
            self.domain = QQ_I
        elif tag == FP:
            if p is None or not isprime(int(p)):
                raise NotPrime("Prime field needs a prime modulus, got " +
                               str(p))
            if int(p) > configs.MAX_PRIME:
                raise NotPrime("Prime " + str(p) + " exceeds " +
                               str(configs.MAX_PRIME))
            p = int(p)
            self.domain = FiniteField(p, symmetric=False)
        else:
            raise ValueError("Unknown field tag " + str(tag))
        self.tag = tag
        self.p = p if tag == FP else None
        self.ring, self.x = ring('x', self.domain)

    # basic constants and conversions

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def characteristic(self):
        return self.p if self.tag == FP else 0

    def convert(self, value):
        """ Convert an int, Fraction, Scalar, string or domain element """

        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(str(value.field) + " vs " + str(self))
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self._from_fraction(value)
        if isinstance(value, int):
            return self.domain.convert(value)
        if self.tag == FP and hasattr(value, 'mod'):
            if int(value.mod) != self.p:
                raise FieldMismatch("residue modulo " + str(value.mod) +
                                    " given to " + str(self))
            return self.domain.convert(int(value) % self.p)
        if isinstance(value, type(QQ.one)):
            if self.tag == RAT:
                return value
            if self.tag == GAUSS:
                return QQ_I.dtype(value, QQ(0))
        if self.tag == GAUSS and isinstance(value, type(QQ_I.one)):
            return value
        raise FieldMismatch("Cannot convert " + repr(value) + " into " +
                            str(self))

    def _from_fraction(self, fr):
        if self.tag == RAT:
            return QQ(fr.numerator, fr.denominator)
        if self.tag == GAUSS:
            return QQ_I.dtype(QQ(fr.numerator, fr.denominator), QQ(0))
        if fr.denominator % self.p == 0:
            raise DivisionByZero("denominator of " + str(fr) +
                                 " vanishes modulo " + str(self.p))
        return self.domain.convert(fr.numerator) / \
            self.domain.convert(fr.denominator)

    def gaussian(self, re, im):
        """ Build the Gaussian rational re + im*i (GAUSS only) """

        if self.tag != GAUSS:
            raise FieldMismatch("imaginary parts need the gauss field")
        re = Fraction(re)
        im = Fraction(im)
        return QQ_I.dtype(QQ(re.numerator, re.denominator),
                          QQ(im.numerator, im.denominator))

    def is_zero(self, a):
        return not a

    def parse(self, text):
        """ Parse the scalar text syntax.

            * rat: ``"a"`` or ``"a/b"``
            * gauss: ``"a/b+c/d i"`` with either part optional,
              e.g. ``"1/2-3i"``, ``"i"``, ``"-2"``
            * fp: a decimal integer, reduced modulo p
        """

        s = str(text).replace(' ', '')
        if s == '':
            raise ScalarSyntaxError("empty scalar")
        try:
            if self.tag == RAT:
                return self._from_fraction(Fraction(s))
            elif self.tag == FP:
                return self.domain.convert(int(s) % self.p)
            # gaussian
            if not s.endswith('i'):
                return self.gaussian(Fraction(s), 0)
            body = s[:-1]
            split = max(body.rfind('+'), body.rfind('-'))
            if split <= 0:
                re_txt, im_txt = '0', body
            else:
                re_txt, im_txt = body[:split], body[split:]
            if im_txt in ('', '+'):
                im_txt = '1'
            elif im_txt == '-':
                im_txt = '-1'
            return self.gaussian(Fraction(re_txt), Fraction(im_txt))
        except (ValueError, ZeroDivisionError) as err:
            if isinstance(err, (DivisionByZero, FieldMismatch)):
                raise
            raise ScalarSyntaxError("Cannot parse '" + str(text) +
                                    "' as a " + str(self) + " scalar")

    def format(self, a):
        """ Canonical text of a scalar (inverse of :meth:`parse`) """

        if self.tag == RAT:
            return _format_rational(a.numerator, a.denominator)
        if self.tag == FP:
            return str(int(a) % self.p)
        re = _format_rational(a.x.numerator, a.x.denominator)
        if not a.y:
            return re
        im_num, im_den = a.y.numerator, a.y.denominator
        sign = '-' if im_num < 0 else '+'
        im = '' if (abs(im_num) == 1 and im_den == 1) else \
            _format_rational(abs(im_num), im_den)
        if not a.x:
            return ('-' if sign == '-' else '') + im + 'i'
        return re + sign + im + 'i'

    def embed(self, a, target):
        """ Coerce ``a`` into the field ``target`` (RAT -> GAUSS or identity) """

        if target == self:
            return a
        if self.tag == RAT and target.tag == GAUSS:
            return QQ_I.dtype(a, QQ(0))
        raise FieldMismatch("No embedding of " + str(self) + " into " +
                            str(target))

    def reduce_mod(self, a, p):
        """ Reduce a RAT or GAUSS scalar into F_p.

            Gaussian scalars with nonzero imaginary part need p = 1 mod 4
            so that i can be sent to a square root of -1.
        """

        target = p if isinstance(p, Field) else Field(FP, p)
        p = target.p
        if self.tag == FP:
            if self.p != p:
                raise FieldMismatch("Cannot move residues between primes")
            return a
        if self.tag == RAT:
            return target._from_fraction(Fraction(int(a.numerator),
                                                  int(a.denominator)))
        re = target._from_fraction(Fraction(int(a.x.numerator),
                                            int(a.x.denominator)))
        if not a.y:
            return re
        root = sqrt_mod(p - 1, p)
        if root is None:
            raise ValueError("i has no image in F_" + str(p))
        im = target._from_fraction(Fraction(int(a.y.numerator),
                                            int(a.y.denominator)))
        return re + target.domain.convert(root) * im

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag and \
            self.p == other.p

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.tag, self.p))

    def __str__(self):
        if self.tag == FP:
            return FP + ':' + str(self.p)
        return self.tag

    __repr__ = __str__


def _format_rational(num, den):
    if den == 1:
        return str(num)
    return str(num) + '/' + str(den)


def field_from_string(text):
    """ Parse a field tag: ``rat``, ``gauss`` or ``fp:<p>`` """

    text = str(text).strip().lower()
    if text in (RAT, GAUSS):
        return Field(text)
    if text.startswith(FP + ':'):
        try:
            p = int(text.split(':', 1)[1])
        except ValueError:
            raise NotPrime("Bad prime in field tag " + text)
        return Field(FP, p)
    raise ValueError("Unknown field '" + text + "' (use rat, gauss or fp:<p>)")


# -------
# Scalars
# -------

class Scalar(object):
    """ An immutable exact field element tagged with its field.

        Basic usage::

            F = Field(RAT)
            a = Scalar(F, '1/2') + Scalar(F, '1/3')    # 5/6
            Scalar(Field(FP, 7), 3).inv()               # 5

        Arithmetic between scalars of different fields raises
        :class:`FieldMismatch`; the representation is sympy's canonical one
        (reduced fractions, residues in [0, p)).
    """

    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'value', field.convert(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, b):
        if isinstance(b, Scalar):
            if b.field != self.field:
                raise FieldMismatch(str(self.field) + " vs " + str(b.field))
            return b.value
        return self.field.convert(b)

    def __add__(self, b):
        return Scalar(self.field, self.value + self._other(b))

    __radd__ = __add__

    def __sub__(self, b):
        return Scalar(self.field, self.value - self._other(b))

    def __rsub__(self, b):
        return Scalar(self.field, self._other(b) - self.value)

    def __mul__(self, b):
        return Scalar(self.field, self.value * self._other(b))

    __rmul__ = __mul__

    def __truediv__(self, b):
        b = self._other(b)
        if not b:
            raise DivisionByZero("division by zero in " + str(self.field))
        return Scalar(self.field, self.value / b)

    __div__ = __truediv__

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def inv(self):
        if not self.value:
            raise DivisionByZero("zero has no inverse")
        return Scalar(self.field, self.field.one / self.value)

    def is_zero(self):
        return not self.value

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.convert(other)
        except (FieldMismatch, ValueError):
            return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, str(self)))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return 'Scalar(' + str(self.field) + ', ' + str(self) + ')'


def scalar_ops(a, b, op):
    """ Apply add, sub, mul, div, neg or inv.

        The unary operations ignore ``b``, which may be None.
    """

    if op == 'neg':
        return -a
    elif op == 'inv':
        return a.inv()
    if a.field != b.field:
        raise FieldMismatch(str(a.field) + " vs " + str(b.field))
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'div':
        return a / b
    raise ValueError("Unknown scalar operation " + str(op))


# -----------
# Polynomials
# -----------

class Poly(object):
    """ Univariate polynomial over a :class:`Field`.

        Wraps an element of the sympy ring ``field.ring``. Coefficients are
        exposed lowest degree first with trailing zeros stripped; the zero
        polynomial has an empty coefficient list and degree -1.
    """

    __slots__ = ('field', 'rep')

    def __init__(self, field, rep):
        self.field = field
        # ring.diff keeps k*c = 0 mod p as an explicit term
        if any(not c for c in rep.values()):
            rep = field.ring.from_dict(dict((m, c) for m, c in rep.items()
                                            if c))
        self.rep = rep

    @classmethod
    def from_coeffs(cls, field, coeffs):
        """ Build from coefficients, lowest degree first """

        terms = {}
        for k, c in enumerate(coeffs):
            c = field.convert(c)
            if c:
                terms[(k,)] = c
        return cls(field, field.ring.from_dict(terms))

    @classmethod
    def from_roots(cls, field, roots):
        """ The monic polynomial prod (x - r) """

        rep = field.ring.one
        for r in roots:
            rep = rep * (field.x - field.ring.ground_new(field.convert(r)))
        return cls(field, rep)

    @classmethod
    def constant(cls, field, c=1):
        return cls.from_coeffs(field, [c])

    @property
    def coeffs(self):
        if not self.rep:
            return []
        out = [self.field.zero] * (self.degree() + 1)
        for (k,), c in self.rep.items():
            out[k] = c
        return out

    def degree(self):
        if not self.rep:
            return -1
        return self.rep.degree()

    def is_zero(self):
        return not self.rep

    def is_monic(self):
        return bool(self.rep) and self.rep.LC == self.field.one

    def monic(self):
        if not self.rep:
            return self
        return Poly(self.field, self.rep.monic())

    def derivative(self):
        return Poly(self.field, self.rep.diff(self.field.x))

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(str(self.field) + " vs " + str(other.field))

    def divmod(self, other):
        self._check(other)
        if not other.rep:
            raise DivisionByZero("polynomial division by zero")
        q, r = divmod(self.rep, other.rep)
        return Poly(self.field, q), Poly(self.field, r)

    def divides(self, other):
        """ True iff self divides other exactly """

        _, r = other.divmod(self)
        return r.is_zero()

    def evaluate(self, a):
        value = self.field.zero
        a = self.field.convert(a)
        for c in reversed(self.coeffs):
            value = value * a + c
        return Scalar(self.field, value)

    def __add__(self, other):
        self._check(other)
        return Poly(self.field, self.rep + other.rep)

    def __sub__(self, other):
        self._check(other)
        return Poly(self.field, self.rep - other.rep)

    def __mul__(self, other):
        self._check(other)
        return Poly(self.field, self.rep * other.rep)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and \
            self.rep == other.rep

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, str(self)))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return 'Poly(' + str(self.field) + ', ' + str(self) + ')'


def _coeff_text(field, c):
    """ Split a coefficient into (sign, magnitude text, needs parentheses) """

    if field.tag == RAT or (field.tag == GAUSS and not c.y):
        q = c if field.tag == RAT else c.x
        sign = '-' if q.numerator < 0 else '+'
        mag = _format_rational(abs(q.numerator), q.denominator)
        return sign, mag, q.denominator != 1
    if field.tag == FP:
        return '+', str(int(c) % field.p), False
    return '+', field.format(c), True


def format_poly(f):
    """ Text form such as ``x^2-3x+2`` or ``(1/2)x+(1+i)`` """

    if f.is_zero():
        return '0'
    out = ''
    coeffs = f.coeffs
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign, mag, paren = _coeff_text(f.field, c)
        if k > 0 and mag == '1':
            mag = ''
        elif paren and (k > 0 or f.field.tag == GAUSS):
            mag = '(' + mag + ')'
        mono = '' if k == 0 else ('x' if k == 1 else 'x^' + str(k))
        if out == '':
            out = ('-' if sign == '-' else '') + mag + mono
        else:
            out += sign + mag + mono
    return out


def poly_gcd(f, g):
    """ Monic greatest common divisor; gcd(0, 0) is the zero polynomial """

    f._check(g)
    return Poly(f.field, f.rep.gcd(g.rep)).monic()


def poly_is_squarefree(f):
    """ Squarefree test via gcd(f, f').

        In characteristic p the derivative vanishes identically exactly when
        every exponent is divisible by p; then f = h(x)^p with h
        nonconstant, which is never squarefree.
    """

    if f.is_zero():
        raise ZeroPolynomial("squarefree test of the zero polynomial")
    if f.degree() == 0:
        return True
    if f.derivative().is_zero():
        return False
    return f.rep.is_squarefree
