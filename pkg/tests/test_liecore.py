import pytest

from mirtoolkit.exactalg import Field, Scalar, RAT, FP
from mirtoolkit.matrixkit import Mat, Singular, SizeMismatch
from mirtoolkit.liecore import GFun, PFun, GroupElt, NotInP, NotInLieP, \
    pairing, project_pbar, moment_map, coadjoint_g, coadjoint_p, \
    ad_coadjoint_p, stabilizer_dim, basis_g, basis_p, basis_n, basis_l, \
    functional_from_dict, h_bar, lemma_injectivity_rank, \
    levi_stabilizer_basis, annihilator_basis, same_span, in_lie_p, \
    P_ALGEBRA, G_ALGEBRA
from mirtoolkit.utils import make_rng, random_mat, random_mirabolic, \
    random_invertible, random_lie_p

Q = Field(RAT)


def shift(n):
    return Mat(Q, [[1 if i == j + 1 else 0 for j in range(n)]
                   for i in range(n)])


def test_pfun_representative():
    with pytest.raises(ValueError):
        PFun(Mat(Q, [[1, 1], [0, 0]]))
    f = project_pbar(Mat(Q, [[1, 2, 3], [4, 5, 6], [7, 8, 9]]))
    assert f.xi == Mat(Q, [[1, 2, 0], [4, 5, 0], [7, 8, 0]])
    assert f.A == Mat(Q, [[1, 2], [4, 5]])
    assert f.alpha == [7, 8]
    g = PFun.from_blocks(Mat(Q, [[1, 2], [4, 5]]), [7, 8])
    assert g == f
    with pytest.raises(SizeMismatch):
        PFun.from_blocks(Mat(Q, [[1]]), [1, 2])


def test_pairing():
    a = Mat(Q, [[1, 2], [3, 4]])
    b = Mat(Q, [[0, 1], [1, 0]])
    assert pairing(a, b) == Scalar(Q, 5)
    with pytest.raises(SizeMismatch):
        pairing(a, Mat.identity(Q, 3))


def test_group_elements():
    with pytest.raises(Singular):
        GroupElt(Mat(Q, [[1, 1], [1, 1]]))
    g = GroupElt(Mat(Q, [[2, 5], [0, 1]]))
    assert g.in_P
    assert not GroupElt(Mat(Q, [[0, 1], [1, 0]])).in_P
    assert g.g * g.inverse() == Mat.identity(Q, 2)


def test_coadjoint_p_rejects_non_mirabolic():
    f = project_pbar(shift(2))
    with pytest.raises(NotInP):
        coadjoint_p(GroupElt(Mat(Q, [[0, 1], [1, 0]])), f)
    with pytest.raises(NotInLieP):
        ad_coadjoint_p(Mat(Q, [[0, 0], [1, 0]]), f)
    assert in_lie_p(Mat(Q, [[1, 1], [0, 0]]))


def test_moment_map_equivariance():
    rng = make_rng(1)
    for n in (2, 3, 4):
        for _ in range(5):
            big = GFun(random_mat(Q, n, n, rng))
            g = GroupElt(random_mirabolic(Q, n, rng))
            assert moment_map(coadjoint_g(g, big)) == \
                coadjoint_p(g, moment_map(big))


def test_action_law():
    rng = make_rng(2)
    n = 3
    f = project_pbar(random_mat(Q, n, n, rng))
    g1 = GroupElt(random_mirabolic(Q, n, rng))
    g2 = GroupElt(random_mirabolic(Q, n, rng))
    assert coadjoint_p(g1 * g2, f) == coadjoint_p(g1, coadjoint_p(g2, f))
    h = GroupElt(random_invertible(Q, n, rng))
    big = GFun(random_mat(Q, n, n, rng))
    assert coadjoint_g(h * GroupElt(g1.g), big) == \
        coadjoint_g(h, coadjoint_g(g1, big))


def test_ad_coadjoint_is_linear():
    rng = make_rng(4)
    n = 3
    f = project_pbar(random_mat(Q, n, n, rng))
    X = random_lie_p(Q, n, rng)
    Y = random_lie_p(Q, n, rng)
    lhs = ad_coadjoint_p(X + Y.scale(3), f).xi
    rhs = ad_coadjoint_p(X, f).xi + ad_coadjoint_p(Y, f).xi.scale(3)
    assert lhs == rhs


def test_bases():
    assert len(basis_g(3, Q)) == 9
    assert len(basis_p(3, Q)) == 6
    assert all(in_lie_p(X) for X in basis_p(4, Q))
    assert len(basis_n(4, Q)) == 3
    assert len(basis_l(4, Q)) == 9


def test_stabilizer_dim():
    # shift representative of the open orbit
    for n in (2, 3, 4):
        assert stabilizer_dim(project_pbar(shift(n))) == 0
    # zero functional: all of p_n
    assert stabilizer_dim(project_pbar(Mat.zeros(Q, 3))) == 6
    # regular semisimple in gl(n)*: the diagonal torus
    big = GFun(Mat.diag(Q, [1, 2, 3]))
    assert stabilizer_dim(big) == 3
    assert stabilizer_dim(big, G_ALGEBRA) == 3
    # inside p_3 only the first two diagonal entries survive
    assert stabilizer_dim(big, P_ALGEBRA) == 2
    with pytest.raises(ValueError):
        stabilizer_dim(project_pbar(shift(2)), G_ALGEBRA)


def test_functional_from_dict():
    f = project_pbar(shift(3))
    assert functional_from_dict(f.to_dict()) == f
    big = GFun(Mat.diag(Q, [1, 2]))
    assert functional_from_dict(big.to_dict()) == big
    with pytest.raises(ValueError):
        functional_from_dict({'kind': 'other',
                              'matrix': big.xi.to_dict()})


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_standard_character_lemmas(n):
    assert lemma_injectivity_rank(n, Q) == n - 1
    hb = h_bar(n, Q)
    stab = levi_stabilizer_basis(n, Q)
    assert len(stab) == (n - 1) * (n - 2)
    assert all(ad_coadjoint_p(X, hb).is_zero() for X in stab)
    assert same_span(annihilator_basis(n, Q), stab)


def test_standard_character_over_prime_field():
    F = Field(FP, 5)
    assert lemma_injectivity_rank(4, F) == 3
    with pytest.raises(ValueError):
        h_bar(1, F)
