import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from superhopf.algebra import mul, radical
from superhopf.exact import CycScalar, Matrix, Subspace
from superhopf.hopf import (
    HopfData,
    Indeterminate,
    NotHopfIdeal,
    apply_antipode,
    change_basis,
    check_hopf,
    coradical,
    delta,
    dual_hopf,
    generated_by_grouplikes_and_skewprims,
    grouplikes,
    hopf_map_report,
    is_hopf_ideal,
    quotient_hopf,
    skew_primitives,
    sub_hopf_generated,
)
from superhopf.superalg import GroupTable, group_algebra, supergroup_algebra
from superhopf.triangular import sweedler_hopf

ONE = CycScalar.one()


def span(*idx, dim=4):
    return Subspace.span(dim, [{i: ONE} for i in idx])


@pytest.mark.parametrize("spec", ["Z2", "Z3", "Z4", "Z2xZ2", "Z6"])
def test_group_algebras_valid(spec):
    H = group_algebra(GroupTable.from_spec(spec))
    assert check_hopf(H).ok
    assert check_hopf(dual_hopf(H)).ok


def test_sweedler_valid_and_mutation_detected():
    H = sweedler_hopf()
    assert check_hopf(H).ok
    bad = HopfData(H.alg, H.comult, H.counit, Matrix.identity(4), H.labels)
    rep = check_hopf(bad)
    assert [c.name for c in rep.failures] == ["antipode"]


def test_dual_of_sweedler():
    H = sweedler_hopf()
    D = dual_hopf(H)
    assert check_hopf(D).ok
    assert coradical(D).rank == 2
    assert dual_hopf(D).same_tensors(H)


def test_coradical_and_grouplikes_of_sweedler():
    H = sweedler_hopf()
    assert coradical(H) == span(0, 1)
    gs, complete = grouplikes(H)
    assert complete and gs == [(1, 0, 0, 0), (0, 1, 0, 0)]


def _skew_oracle(H, g, h):
    """Solve Delta x = x (x) g + h (x) x directly from the tensors with sympy."""
    d = H.dim
    xs = sympy.symbols(f"c0:{d}")
    eqs = []
    for j in range(d):
        for k in range(d):
            lhs = sum(xs[i] * sympy.Rational(str(H.delta_table[i].get((j, k), 0))) for i in range(d))
            rhs = xs[j] * g[k] + h[j] * xs[k]
            eqs.append(lhs - rhs)
    A, _ = sympy.linear_eq_to_matrix(eqs, xs)
    return A.nullspace()


def test_skew_primitives_sweedler_against_linear_solve():
    H = sweedler_hopf()
    S = skew_primitives(H, (1, 0, 0, 0), (0, 1, 0, 0))
    oracle = _skew_oracle(H, (1, 0, 0, 0), (0, 1, 0, 0))
    assert S.rank == len(oracle) == 2
    assert S.contains({2: ONE}) and S.contains({0: ONE, 1: -ONE})
    for v in oracle:
        assert S.contains({i: CycScalar.rational(str(c)) for i, c in enumerate(v) if c})


def test_skew_primitives_requires_grouplikes():
    with pytest.raises(ValueError):
        skew_primitives(sweedler_hopf(), (1, 0, 0, 0), (0, 0, 1, 0))


def test_radical_is_hopf_ideal_and_quotient():
    H = sweedler_hopf()
    R = radical(H.alg)
    ok, _ = is_hopf_ideal(H, R)
    assert ok
    # oracle: Delta of each radical basis vector lies in I (x) H + H (x) I, checked by hand on x and gx
    for i in (2, 3):
        for (j, k) in delta(H, H.e(i)):
            assert j in (2, 3) or k in (2, 3)
    Q = quotient_hopf(H, R)
    assert Q.same_tensors(group_algebra(GroupTable.cyclic(2)))


def test_non_hopf_ideal_witness():
    H = sweedler_hopf()
    ok, w = is_hopf_ideal(H, span(2))
    assert not ok and w["condition"] == "ideal"
    ok, w = is_hopf_ideal(H, span(1))
    assert not ok
    with pytest.raises(NotHopfIdeal):
        quotient_hopf(H, span(1, 2, 3))


def test_sub_hopf_generated():
    H = sweedler_hopf()
    assert sub_hopf_generated(H, [{2: ONE}]).rank == 4
    assert sub_hopf_generated(H, [{1: ONE}]) == span(0, 1)


def test_generation_predicate():
    assert generated_by_grouplikes_and_skewprims(sweedler_hopf())
    assert generated_by_grouplikes_and_skewprims(group_algebra(GroupTable.from_spec("Z2xZ2")))
    # functions on Z3 over Q: the grouplikes (characters of Z3) need a cube root of unity
    with pytest.raises(Indeterminate):
        generated_by_grouplikes_and_skewprims(dual_hopf(group_algebra(GroupTable.cyclic(3))))
    assert generated_by_grouplikes_and_skewprims(dual_hopf(group_algebra(GroupTable.cyclic(3), 3)))


def test_change_basis_is_an_isomorphism():
    H = sweedler_hopf()
    C = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 2], [0, 0, 1, 3]])
    K = change_basis(H, C)
    assert check_hopf(K).ok
    assert hopf_map_report(K, H, C).ok


elements = st.lists(st.integers(-2, 2), min_size=8, max_size=8)


@given(elements, elements)
def test_antipode_is_anti_multiplicative_with_signs(a, b):
    A = supergroup_algebra(GroupTable.cyclic(2), 2, [Matrix([[-1, 0], [0, -1]])])
    # restrict to homogeneous components so the Koszul sign is defined
    for pa in (0, 1):
        for pb in (0, 1):
            x = {i: CycScalar.rational(v) for i, v in enumerate(a) if v and A.parity[i] == pa}
            y = {i: CycScalar.rational(v) for i, v in enumerate(b) if v and A.parity[i] == pb}
            lhs = apply_antipode(A, mul(A.alg, x, y))
            rhs = mul(A.alg, apply_antipode(A, y), apply_antipode(A, x))
            if pa and pb:
                rhs = {k: -c for k, c in rhs.items()}
            assert lhs == rhs
