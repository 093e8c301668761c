import pytest

from mirtoolkit import configs
from mirtoolkit.exactalg import Field, Scalar, Poly, RAT, GAUSS, FP, \
    FieldMismatch, DivisionByZero, ZeroPolynomial, NotPrime, \
    ScalarSyntaxError, field_from_string, scalar_ops, poly_gcd, \
    poly_is_squarefree
from mirtoolkit.utils import make_rng, random_scalar

Q = Field(RAT)
QI = Field(GAUSS)
F7 = Field(FP, 7)
FIELDS = [Q, QI, Field(FP, 2), F7]


def test_rational_arithmetic():
    a = Scalar(Q, '1/2') + Scalar(Q, '1/3')
    assert str(a) == '5/6'
    assert a == Scalar(Q, '5/6')
    assert str(Scalar(Q, '2/4')) == '1/2'
    assert str(-Scalar(Q, 3)) == '-3'
    assert scalar_ops(Scalar(Q, 1), Scalar(Q, 4), 'div') == Scalar(Q, '1/4')
    assert scalar_ops(Scalar(Q, 4), None, 'neg') == Scalar(Q, -4)
    assert scalar_ops(Scalar(Q, 4), None, 'inv') == Scalar(Q, '1/4')
    with pytest.raises(ValueError):
        scalar_ops(Scalar(Q, 1), Scalar(Q, 1), 'pow')


def test_prime_field_inverse():
    assert Scalar(F7, 3).inv() == Scalar(F7, 5)
    assert str(Scalar(F7, -1)) == '6'
    with pytest.raises(DivisionByZero):
        Scalar(F7, 7).inv()
    with pytest.raises(DivisionByZero):
        scalar_ops(Scalar(F7, 0), None, 'inv')
    with pytest.raises(DivisionByZero):
        Scalar(Q, 1) / Scalar(Q, 0)


def test_gaussian_text_syntax():
    for text in ('1/2-3i', 'i', '-i', '2+i', '-2', '3i'):
        assert str(Scalar(QI, text)) == text
    z = Scalar(QI, '1+i') * Scalar(QI, '1-i')
    assert str(z) == '2'


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Scalar(Q, 1) + Scalar(QI, 1)
    with pytest.raises(FieldMismatch):
        scalar_ops(Scalar(Q, 1), Scalar(F7, 1), 'add')


def test_bad_input():
    with pytest.raises(NotPrime):
        Field(FP, 4)
    with pytest.raises(ScalarSyntaxError):
        Q.parse('abc')
    with pytest.raises(ScalarSyntaxError):
        Q.parse('')
    with pytest.raises(ValueError):
        field_from_string('complex')
    assert str(field_from_string('fp:7')) == 'fp:7'
    assert field_from_string('gauss') == QI


def test_reduce_mod():
    assert int(Q.reduce_mod(Q.parse('1/2'), 7)) == 4
    r = QI.reduce_mod(QI.parse('i'), 5)
    assert int(r) ** 2 % 5 == 4
    with pytest.raises(ValueError):
        QI.reduce_mod(QI.parse('i'), 7)
    assert int(QI.reduce_mod(QI.parse('3'), 7)) == 3
    with pytest.raises(DivisionByZero):
        Q.reduce_mod(Q.parse('1/7'), 7)


def test_embed():
    assert Q.embed(Q.parse('1/3'), QI) == QI.parse('1/3')
    with pytest.raises(FieldMismatch):
        QI.embed(QI.parse('i'), Q)


def test_poly_format_and_roots():
    f = Poly.from_roots(Q, [1, 2])
    assert str(f) == 'x^2-3x+2'
    assert f.degree() == 2
    assert f.evaluate(3) == Scalar(Q, 2)
    assert str(Poly.from_coeffs(Q, [])) == '0'
    assert Poly.from_coeffs(Q, []).degree() == -1
    assert str(Poly.from_coeffs(Q, ['1/2', '-1/3'])) == '-(1/3)x+1/2'
    assert str(Poly.from_coeffs(QI, [1, 0, 1])) == 'x^2+1'


def test_poly_divmod():
    f = Poly.from_roots(Q, [1, 2])
    q, r = f.divmod(Poly.from_roots(Q, [1]))
    assert q == Poly.from_roots(Q, [2])
    assert r.is_zero()
    assert Poly.from_roots(Q, [2]).divides(f)
    assert not Poly.from_roots(Q, [3]).divides(f)
    with pytest.raises(DivisionByZero):
        f.divmod(Poly.from_coeffs(Q, []))


def test_gcd():
    f = Poly.from_roots(Q, [1, 2])
    g = Poly.from_roots(Q, [1, 3])
    assert poly_gcd(f, g) == Poly.from_roots(Q, [1])
    assert poly_gcd(f.monic(), Poly.constant(Q, 5)) == Poly.constant(Q, 1)
    assert poly_gcd(f, f.derivative()).degree() == 0


def test_squarefree():
    assert poly_is_squarefree(Poly.from_roots(Q, [1, 2]))
    assert not poly_is_squarefree(Poly.from_roots(Q, [1, 1]))
    assert poly_is_squarefree(Poly.constant(Q, 3))
    assert poly_is_squarefree(Poly.from_coeffs(QI, [1, 0, 1]))
    # x^3 + 1 = (x + 1)^3 over F_3: the derivative vanishes
    F3 = Field(FP, 3)
    assert not poly_is_squarefree(Poly.from_coeffs(F3, [1, 0, 0, 1]))
    with pytest.raises(ZeroPolynomial):
        poly_is_squarefree(Poly.from_coeffs(Q, [0]))


def test_squarefree_in_characteristic_two():
    F2 = Field(FP, 2)
    # x^2 + 1 = (x + 1)^2 and x^4 + x^2 + 1 = (x^2 + x + 1)^2
    assert not poly_is_squarefree(Poly.from_coeffs(F2, [1, 0, 1]))
    assert not poly_is_squarefree(Poly.from_coeffs(F2, [1, 0, 1, 0, 1]))
    assert poly_is_squarefree(Poly.from_coeffs(F2, [1, 1, 1]))
    assert poly_is_squarefree(Poly.from_coeffs(F2, [0, 1, 1]))


def test_derivative_drops_vanishing_terms():
    F3 = Field(FP, 3)
    df = Poly.from_coeffs(F3, [1, 0, 0, 1]).derivative()
    assert df.is_zero()
    assert df.degree() == -1
    assert df == Poly.from_coeffs(F3, [])
    df = Poly.from_coeffs(F3, [0, 2, 0, 1, 1]).derivative()
    assert df == Poly.from_coeffs(F3, [2, 0, 0, 1])
    assert str(df) == 'x^3+2'


def _random_poly(field, degree, rng):
    return Poly.from_coeffs(field, [random_scalar(field, rng, 3)
                                    for _ in range(degree + 1)])


@pytest.mark.parametrize('field', FIELDS, ids=str)
def test_gcd_divides_both(field):
    rng = make_rng(5)
    for _ in range(20):
        h = _random_poly(field, rng.randint(0, 4), rng)
        f = h * _random_poly(field, rng.randint(0, 5), rng)
        g = h * _random_poly(field, rng.randint(0, 5), rng)
        assert f.degree() <= 8 and g.degree() <= 8
        d = poly_gcd(f, g)
        if f.is_zero() and g.is_zero():
            assert d.is_zero()
            continue
        assert d.is_monic()
        assert d.divides(f)
        assert d.divides(g)
        if not h.is_zero():
            assert h.divides(d)


def _check_axioms(field, samples):
    rng = make_rng(configs.DEFAULT_SEED)
    zero, one = Scalar(field, 0), Scalar(field, 1)
    for _ in range(samples):
        a, b, c = [Scalar(field, random_scalar(field, rng)) for _ in range(3)]
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        assert a - b == a + (-b)
        if not a.is_zero():
            assert a * a.inv() == one
            assert b / a * a == b


@pytest.mark.parametrize('field', FIELDS, ids=str)
def test_field_axioms(field):
    _check_axioms(field, 50)


@pytest.mark.slow
@pytest.mark.parametrize('field', FIELDS, ids=str)
def test_field_axioms_full(field):
    _check_axioms(field, configs.DEFAULT_SAMPLES)
