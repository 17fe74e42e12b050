import pytest

from superhopf.algebra import mul
from superhopf.chevalley import (
    Representation,
    chevalley_report,
    check_representation,
    is_semisimple_rep,
    regular_rep,
    rep_2dim,
    tensor_rep,
    trivial_rep,
    two_dim_reps,
)
from superhopf.corpus import triangular_corpus
from superhopf.exact import CycScalar, Matrix
from superhopf.hopf import dual_hopf
from superhopf.superalg import GroupTable, group_algebra
from superhopf.triangular import sweedler_hopf
from superhopf.twist import sweedler_j, twist_hopf

ONE = CycScalar.one()


def sign_rep(H):
    return Representation(H.dim, 1, (Matrix([[1]]), Matrix([[-1]])))


def test_tensor_products_on_z2():
    H = group_algebra(GroupTable.cyclic(2))
    triv, sgn = trivial_rep(H), sign_rep(H)
    assert check_representation(H, sgn).ok
    assert tensor_rep(H, triv, sgn) == sgn
    assert tensor_rep(H, sgn, sgn) == triv


def test_regular_rep_and_semisimplicity():
    H = sweedler_hopf()
    reg = regular_rep(H)
    assert check_representation(H, reg).ok
    assert not is_semisimple_rep(H, reg)
    assert is_semisimple_rep(H, trivial_rep(H))
    C2 = group_algebra(GroupTable.cyclic(2))
    assert is_semisimple_rep(C2, regular_rep(C2))


def test_bad_representation_is_detected():
    H = group_algebra(GroupTable.cyclic(2))
    bad = Representation(2, 1, (Matrix([[1]]), Matrix([[2]])))
    assert [c.name for c in check_representation(H, bad).failures] == ["multiplicative"]


def test_rep_2dim_with_zero_r_is_diagonal():
    H = group_algebra(GroupTable.cyclic(2))
    rho = rep_2dim(H, (1, 0), (0, 1), {})
    assert check_representation(dual_hopf(H), rho).ok
    assert is_semisimple_rep(dual_hopf(H), rho)


def test_rep_2dim_rejects_non_skew_primitive():
    H = sweedler_hopf()
    with pytest.raises(ValueError):
        # Delta x = g (x) x + x (x) 1, so x is not (1, g)-skew-primitive
        rep_2dim(H, (1, 0, 0, 0), (0, 1, 0, 0), {2: ONE})
    with pytest.raises(ValueError):
        rep_2dim(H, (1, 0, 0, 0), (0, 0, 1, 0), {})


def test_two_dim_reps_of_sweedler():
    H = sweedler_hopf()
    reps = two_dim_reps(H)
    assert reps
    for rho in reps:
        assert rho.dim == 2 and check_representation(H, rho).ok
    # a non-split extension exists: the nilpotent generator acts nontrivially
    assert any(not is_semisimple_rep(H, rho) for rho in reps)


def test_tensor_matrix_coefficients_are_dual_products():
    # rho(h)_{ab} as a functional on H multiplies in the dual exactly as the tensor product says
    H = sweedler_hopf()
    D = dual_hopf(H)
    rho = next(r for r in two_dim_reps(H) if not is_semisimple_rep(H, r))
    T = tensor_rep(H, rho, rho)

    def coeff(R, a, b):
        return {i: R.matrices[i][a, b] for i in range(H.dim) if R.matrices[i][a, b]}

    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    assert coeff(T, 2 * a + c, 2 * b + d) == mul(D.alg, coeff(rho, a, b), coeff(rho, c, d))


@pytest.mark.parametrize("member", triangular_corpus(), ids=lambda m: m.name)
def test_conditions_agree_on_corpus(member):
    rep = chevalley_report(member.hopf)
    assert rep["agree"]
    assert rep["verdict"]


def test_conditions_on_twisted_sweedler():
    H = twist_hopf(sweedler_hopf(), sweedler_j(CycScalar.rational(2)))
    rep = chevalley_report(H)
    assert rep == {"cond3": True, "cond4": True, "cond5": True, "agree": True, "verdict": True}


def test_conditions_on_dual_group_algebra():
    H = dual_hopf(group_algebra(GroupTable.from_spec("Z2xZ2")))
    assert chevalley_report(H)["verdict"]
