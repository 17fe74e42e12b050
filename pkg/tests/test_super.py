import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhopf.algebra import radical
from superhopf.chevalley import semisimple_iff_cosemisimple
from superhopf.corpus import supergroup_corpus
from superhopf.correspondence import to_ordinary
from superhopf.exact import CycScalar, Matrix
from superhopf.hopf import dual_hopf
from superhopf.superalg import (
    DecompositionFailure,
    GroupTable,
    as_super,
    check_super_hopf,
    cocommutative_check,
    decompose_cocommutative,
    exterior_hopf,
    group_isomorphisms,
    koszul_flip,
    overline,
    super_tensor_square_mult,
    supergroup_algebra,
    yd_biproduct,
)
from superhopf.triangular import sweedler_hopf

ONE = CycScalar.one()


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_exterior_hopf(n):
    E = exterior_hopf(n)
    assert E.dim == 2 ** n
    assert check_super_hopf(E).ok
    assert cocommutative_check(E)
    assert check_super_hopf(dual_hopf(E)).ok


def test_wrong_parity_is_detected():
    E = exterior_hopf(2)
    rep = check_super_hopf(as_super(E, (0,) * 4))
    assert not rep.ok and "comult_multiplicative" in [c.name for c in rep.failures]


def test_koszul_flip():
    E = exterior_hopf(1)
    B = koszul_flip(E)
    assert B @ B == Matrix.identity(4)
    # x (x) x at index 1*2+1 flips to -(x (x) x)
    assert B[3, 3] == -ONE and B[0, 0] == ONE


def test_super_tensor_square_sign():
    E = exterior_hopf(1)
    T = super_tensor_square_mult(E)
    # (1 (x) x)(x (x) 1) = -(x (x) x), indices 1, 2, 3
    assert T.entries[(1, 2, 3)] == -ONE
    assert T.entries[(2, 1, 3)] == ONE


def test_supergroup_z2_matches_sweedler():
    A = supergroup_algebra(GroupTable.cyclic(2), 1, [Matrix([[-1]])])
    H, _ = to_ordinary(A, {1: ONE})
    assert H.same_tensors(sweedler_hopf())


def test_yd_biproduct_z2_is_sweedler():
    H = yd_biproduct(GroupTable.cyclic(2), [1], [[-1]])
    assert H.same_tensors(sweedler_hopf())
    assert H.labels == ("1", "g", "x1", "gx1")


def test_yd_biproduct_rejects_bad_characters():
    with pytest.raises(ValueError, match=r"chi_i\(g_j\) != -1"):
        yd_biproduct(GroupTable.cyclic(2), [1], [[1]])


def test_overline_of_exterior_is_sweedler():
    H, g = overline(exterior_hopf(1))
    assert H.same_tensors(sweedler_hopf())
    assert g == (0, 1, 0, 0)


def test_supergroup_action_must_be_homomorphism():
    with pytest.raises(ValueError):
        supergroup_algebra(GroupTable.cyclic(2), 1, [Matrix([[2]])])


@pytest.mark.parametrize("member", supergroup_corpus(2), ids=lambda m: m.name)
def test_decomposition_recovers_group_and_dimension(member):
    d = decompose_cocommutative(member.hopf)
    assert d.group.order == member.group.order and d.n == member.n
    assert next(iter(group_isomorphisms(d.group, member.group)), None) is not None


def test_decomposition_failure_has_witness():
    with pytest.raises(DecompositionFailure) as exc:
        decompose_cocommutative(as_super(sweedler_hopf(), (0, 0, 1, 1)))
    assert exc.value.witness is not None


def test_group_isomorphisms():
    Z4, K = GroupTable.cyclic(4), GroupTable.from_spec("Z2xZ2")
    assert not list(group_isomorphisms(Z4, K))
    assert len(list(group_isomorphisms(K, K))) == 6


@pytest.mark.parametrize("member", supergroup_corpus(2), ids=lambda m: m.name)
def test_semisimple_iff_cosemisimple(member):
    s, c = semisimple_iff_cosemisimple(member.hopf)
    assert s == c == (member.n == 0)


@given(st.integers(0, 3), st.sampled_from(["Z2", "Z4", "Z2xZ2", "Z3"]))
def test_trivial_action_supergroup_is_valid(n, spec):
    A = supergroup_algebra(GroupTable.from_spec(spec), n)
    assert check_super_hopf(A).ok and cocommutative_check(A)
    assert radical(A.alg).rank == A.dim - GroupTable.from_spec(spec).order
