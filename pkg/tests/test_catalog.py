from fractions import Fraction

import pytest

from mirtoolkit.exactalg import Field, Poly, RAT, GAUSS, FP
from mirtoolkit.matrixkit import Mat
from mirtoolkit.liecore import stabilizer_dim
from mirtoolkit.orbitclass import classify, same_orbit
from mirtoolkit.catalog import ComplexOrbitSpec, RealOrbitSpec, SHIFT, \
    SPECTRAL, DegenerateSpectralData, InvalidSelector, BadReduction, \
    AssertionFailure, parse_selector, make_open_rep, make_g_selector, \
    membership_identity, moment_image, classify_image, \
    verify_stabilizer_dims, verify_orbit_census, verify_open_orbit, \
    verify_real_complex_consistency, fiber_over_open_point, verify_fiber, \
    mackey_strata_match, orbit_strata, representation_strata, \
    stratum_representative, derivative_weights, verify_lemma_suite
from mirtoolkit.utils import make_rng, random_distinct

Q = Field(RAT)
QI = Field(GAUSS)


@pytest.fixture
def spec3():
    return ComplexOrbitSpec(3, [0, 1, 2])


@pytest.fixture
def real3():
    # eigenvalues +-i and 2
    return RealOrbitSpec(3, 1, [0], [1], [2])


def test_spectral_data_validation():
    with pytest.raises(DegenerateSpectralData):
        ComplexOrbitSpec(3, [0, 1, 1])
    with pytest.raises(DegenerateSpectralData):
        ComplexOrbitSpec(3, [0, 1])
    with pytest.raises(DegenerateSpectralData):
        RealOrbitSpec(2, 1, [0], [0], [])
    with pytest.raises(DegenerateSpectralData):
        RealOrbitSpec(4, 2, [0, 0], [1, -1], [])
    with pytest.raises(ValueError):
        RealOrbitSpec(2, 1, [0], [1], [], field=QI)


def test_selectors(spec3, real3):
    assert spec3.selectors()[:3] == [(1,), (2,), (1, 2)]
    assert len(spec3.selectors()) == 7
    assert parse_selector('0b101', spec3) == (1, 3)
    assert parse_selector('1,3', spec3) == (1, 3)
    assert parse_selector('0x2', spec3) == (2,)
    assert real3.selectors() == [((1,), ()), ((), (3,)), ((1,), (3,))]
    assert parse_selector('1;', real3) == ((1,), ())
    assert parse_selector(';3', real3) == ((), (3,))
    for bad in ('', '0b0', '4', '0,1', 'x'):
        with pytest.raises(InvalidSelector):
            parse_selector(bad, spec3)
    for bad in ('1', ';', '2;', '1;2'):
        with pytest.raises(InvalidSelector):
            parse_selector(bad, real3)


def test_open_representatives():
    for n in (2, 3, 4, 5, 6):
        a = make_open_rep(n, SHIFT)
        b = make_open_rep(n, SPECTRAL, a=list(range(1, n)), b=[1] * (n - 1))
        assert classify(a).depth == n
        assert stabilizer_dim(a) == 0
        assert stabilizer_dim(b) == 0
        assert same_orbit(a, b)
    with pytest.raises(DegenerateSpectralData):
        make_open_rep(3, SPECTRAL, a=[1, 1], b=[1, 1])
    with pytest.raises(DegenerateSpectralData):
        make_open_rep(3, SPECTRAL, a=[1, 2], b=[1, 0])


def test_verify_open_orbit():
    for n in (2, 3, 4):
        assert verify_open_orbit(n).ok
    assert verify_open_orbit(3, Field(FP, 5)).ok


def test_g_selector(spec3, real3):
    for spec in (spec3, real3):
        for sel in spec.selectors():
            g = make_g_selector(spec, sel)
            v = spec.selector_vector(sel)
            assert g.g.row(spec.n - 1) == [spec.field.convert(x) for x in v]
            assert membership_identity(spec, sel)


def test_moment_images(spec3):
    for sel in spec3.selectors():
        inv = classify_image(spec3, sel)
        assert inv.depth == len(sel)
        assert inv.levi_char_poly == Poly.from_roots(
            QI, [i for i in range(3) if i + 1 not in sel])
        assert inv.semisimple
    image = moment_image(spec3, (1, 2, 3))
    assert classify(image).depth == 3


def test_census_complex(spec3):
    report = verify_orbit_census(spec3)
    assert report.ok
    assert report.text() == '7 orbits, 1 open, all semisimple: ok'


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_census_random_gaussian_spectra(n):
    rng = make_rng(n)
    spec = ComplexOrbitSpec(n, random_distinct(QI, n, rng))
    report = verify_orbit_census(spec)
    assert report.ok
    assert report.witnesses[-1]['orbits'] == 2 ** n - 1
    for sel in spec.selectors():
        assert verify_stabilizer_dims(spec, sel).ok


@pytest.mark.parametrize('n,k', [(2, 0), (3, 0), (2, 1), (3, 1), (4, 1),
                                 (4, 2)])
def test_census_real(n, k):
    a = list(range(k))
    b = [Fraction(1, 2)] * k
    c = list(range(10, 10 + n - 2 * k))
    spec = RealOrbitSpec(n, k, a, b, c)
    report = verify_orbit_census(spec)
    assert report.ok
    assert report.witnesses[-1]['orbits'] == 2 ** (n - k) - 1
    for sel in spec.selectors():
        i1, i2 = sel
        assert classify_image(spec, sel).depth == 2 * len(i1) + len(i2)
        assert verify_stabilizer_dims(spec, sel).ok
    assert verify_real_complex_consistency(spec).ok


def test_real_char_poly(real3):
    # I1 empty keeps the pair: x^2 + 1
    poly = real3.expected_levi_char_poly(((), (3,)))
    assert poly == Poly.from_coeffs(Q, [1, 0, 1])
    assert classify_image(real3, ((), (3,))).levi_char_poly == poly


def test_stabilizer_dims(spec3, real3):
    for spec in (spec3, real3):
        for sel in spec.selectors():
            report = verify_stabilizer_dims(spec, sel)
            assert report.ok
            w = report.witnesses[0]
            assert w['downstairs'] == 2 * w['upstairs']


def test_complexified_spec(real3):
    cplx = real3.complexify()
    assert cplx.field == QI
    assert cplx.field.format(cplx.a[0]) == 'i'
    assert verify_orbit_census(cplx).ok


def test_fiber_is_a_point(spec3):
    assert fiber_over_open_point(ComplexOrbitSpec(2, [0, 1]), 7) == 1
    assert fiber_over_open_point(ComplexOrbitSpec(2, [0, 1]), 11) == 1
    assert verify_fiber(spec3, [7, 11]).ok
    # x^2 + 1 stays squarefree modulo 7 and modulo 5
    real = RealOrbitSpec(2, 1, [0], [1], [])
    assert verify_fiber(real, [5, 7]).ok


def test_fiber_bad_reduction():
    with pytest.raises(BadReduction):
        fiber_over_open_point(ComplexOrbitSpec(2, [0, 7]), 7)
    with pytest.raises(BadReduction):
        fiber_over_open_point(ComplexOrbitSpec(2, ['1/7', 0]), 7)


def test_mackey_strata():
    assert orbit_strata(3) == [(0, 2), (1, 1), (2, 0)]
    assert orbit_strata(1) == [(0, 0)]
    assert representation_strata(3) == [(1, 2), (2, 1), (3, 0)]
    for n in range(1, 11):
        assert mackey_strata_match(n).ok
    with pytest.raises(ValueError):
        mackey_strata_match(0)


def test_stratum_representatives():
    for n in (1, 2, 3, 4, 5):
        for depth in range(1, n + 1):
            inv = classify(stratum_representative(n, depth, QI))
            assert inv.depth == depth
            assert inv.levi_size == n - depth
    assert same_orbit(stratum_representative(4, 4),
                      make_open_rep(4, SHIFT))
    with pytest.raises(ValueError):
        stratum_representative(3, 4)


def test_mackey_uses_the_prime_field_census():
    report = mackey_strata_match(3)
    census = [w for w in report.witnesses if 'orbits_per_depth' in w]
    assert len(census) == 1
    assert census[0]['orbits_per_depth'][3] == 1
    assert all(census[0]['orbits_per_depth'][d] > 0 for d in (1, 2, 3))


def test_derivative_weights():
    assert derivative_weights(2) == [Fraction(-3, 2), 2, Fraction(-1, 2)]
    assert derivative_weights(1) == [-1, 1]


def test_lemma_suite():
    report = verify_lemma_suite(3, samples=20, seed=1)
    assert report.ok, report.failures()
    assert verify_lemma_suite(4, Field(FP, 7), samples=10, seed=2).ok
    assert verify_lemma_suite(2, QI, samples=10).ok


def test_strict_census_raises_on_failure(monkeypatch, spec3):
    monkeypatch.setattr(spec3, 'expected_depth', lambda sel: 0)
    with pytest.raises(AssertionFailure):
        verify_orbit_census(spec3, strict=True)
    assert not verify_orbit_census(spec3).ok


@pytest.mark.slow
@pytest.mark.parametrize('n', [2, 3, 4])
def test_lemma_suite_full(n):
    report = verify_lemma_suite(n, seed=n)
    assert report.ok, report.failures()
    invariance = [w for w in report.witnesses
                  if w.get('check') == 'invariance']
    assert invariance[-1]['samples'] == 1000
