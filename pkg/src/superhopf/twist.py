"""Drinfeld twists: verification, twisted coproducts and antipodes, exponential twists."""

from __future__ import annotations

from math import factorial

from .algebra import inverse, mul
from .exact import CycScalar, Matrix, Tensor3, as_scalar, sparse_add, sparse_kernel, sparse_scale
from .hopf import (
    HopfData,
    PairElement,
    apply_antipode,
    as_pair,
    counit_at,
    delta_at,
    flip,
    insert_unit,
    multiply_out,
    antipode_at,
    mul_tensor,
    pair_inverse,
    tensor_unit,
)
from .report import Report


class NotInvertible(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def invert_pair(H: HopfData, J) -> PairElement:
    """Inverse in H (x) H; raises NotInvertible with a kernel vector of right multiplication by J."""
    J = as_pair(J)
    try:
        return PairElement(H.dim, pair_inverse(H, J), H.order)
    except ZeroDivisionError:
        keys = [(i, j) for i in range(H.dim) for j in range(H.dim)]
        one = CycScalar.one(H.order)
        cols = [mul_tensor(H, {k: one}, J) for k in keys]
        ker = sparse_kernel(cols, H.order)
        witness = {keys[a]: c for a, c in ker[0].items()} if ker else None
        raise NotInvertible("twist is not invertible in H (x) H", witness) from None


def check_twist(H: HopfData, J) -> Report:
    J = as_pair(J)
    invert_pair(H, J)
    rep = Report()
    if H.is_super:
        rep.add("even", [key for key in J if H.parity[key[0]] != H.parity[key[1]]])
    one = {(i,): c for i, c in H.one().items()}
    rep.add("counit_left", counit_at(H, J, 0) == one)
    rep.add("counit_right", counit_at(H, J, 1) == one)
    J12 = insert_unit(H, J, (0, 1), 3)
    J23 = insert_unit(H, J, (1, 2), 3)
    left = mul_tensor(H, delta_at(H, J, 0), J12)
    right = mul_tensor(H, delta_at(H, J, 1), J23)
    rep.add("cocycle", left == right)
    return rep


def twist_hopf(H: HopfData, J) -> HopfData:
    """Same algebra with Delta^J(a) = J^-1 Delta(a) J and S^J(a) = Q^-1 S(a) Q, Q = m(S (x) Id)(J)."""
    J = as_pair(J)
    rep = check_twist(H, J)
    if not rep.ok:
        raise ValueError("not a twist: " + ", ".join(c.name for c in rep.failures))
    Jinv = invert_pair(H, J).coeffs
    comult = {}
    for i in range(H.dim):
        D = mul_tensor(H, mul_tensor(H, Jinv, H.delta_table[i]), J)
        for (j, k), c in D.items():
            comult[(i, j, k)] = c
    Q = multiply_out(H, antipode_at(H, J, 0))
    Qinv = inverse(H.alg, Q)
    cols = [mul(H.alg, mul(H.alg, Qinv, apply_antipode(H, H.e(i))), Q) for i in range(H.dim)]
    S = Matrix.from_columns(cols, H.dim, H.order)
    kwargs = dict(alg=H.alg, comult=Tensor3(H.dim, comult), counit=H.counit, antipode=S, labels=H.labels)
    if H.is_super:
        return type(H)(parity=H.parity, **kwargs)
    return HopfData(**kwargs)


def twist_r(H: HopfData, R, J) -> PairElement:
    """J21^-1 R J."""
    R, J = as_pair(R), as_pair(J)
    J21inv = invert_pair(H, flip(H, J)).coeffs
    return PairElement(H.dim, mul_tensor(H, mul_tensor(H, J21inv, R), J), H.order)


def exterior_generator_index(i: int) -> int:
    # monomials are ordered by degree, so x_i sits right after the unit
    return 1 + i


def symmetric_element(A: HopfData, r) -> dict:
    """sum r_ij x_i (x) x_j from an n x n symmetric matrix (or a PairElement, checked for symmetry)."""
    if isinstance(r, PairElement) or isinstance(r, dict):
        X = as_pair(r)
        for (i, j), c in X.items():
            if X.get((j, i)) != c:
                raise ValueError(f"r is not symmetric at {(i, j)}")
        return dict(X)
    M = r if isinstance(r, Matrix) else Matrix(r, A.order)
    M = Matrix([[as_scalar(x, A.order) for x in row] for row in M.entries], A.order, cols=M.cols)
    n = M.rows
    if M.cols != n or (1 << n) != A.dim:
        raise ValueError("r must be dim V x dim V for an exterior algebra of dimension 2^dim V")
    for i in range(n):
        for j in range(n):
            if M[i, j] != M[j, i]:
                raise ValueError(f"r is not symmetric: r[{i}][{j}] != r[{j}][{i}]")
    return {(exterior_generator_index(i), exterior_generator_index(j)): M[i, j]
            for i in range(n) for j in range(n) if M[i, j]}


def exp_pair(H: HopfData, X: dict, cap: int) -> dict:
    """sum_k X^k / k! for nilpotent X, stopping when the power vanishes."""
    total = tensor_unit(H, 2)
    power = dict(total)
    for k in range(1, cap + 1):
        power = mul_tensor(H, power, X)
        if not power:
            return total
        total = sparse_add(total, power, CycScalar.rational(f"1/{factorial(k)}", H.order))
    power = mul_tensor(H, power, X)
    if power:
        raise ArithmeticError("exponent is not nilpotent within the truncation bound")
    return total


def exp_twist(A: HopfData, r) -> PairElement:
    """e^{r/2} for symmetric r in V (x) V inside Lambda V (x) Lambda V."""
    X = symmetric_element(A, r)
    half = CycScalar.rational("1/2", A.order)
    n = max(A.dim.bit_length() - 1, 0)
    return PairElement(A.dim, exp_pair(A, sparse_scale(X, half), n + 1), A.order)


def sweedler_j(lam, order: int | None = None) -> PairElement:
    """1 (x) 1 - (lam/2) gx (x) x on the basis (1, g, x, gx)."""
    if order is None:
        order = lam.n if isinstance(lam, CycScalar) else 1
    lam = as_scalar(lam, order)
    return PairElement(4, {(0, 0): CycScalar.one(order), (3, 2): -lam * CycScalar.rational("1/2", order)}, order)
