"""Ordinary Hopf algebras with an involutive grouplike versus Hopf superalgebras.

(H, u) with u grouplike and u^2 = 1 corresponds to a Hopf superalgebra on
the same algebra, graded by the eigenvalues of Ad(u); the coproduct and
antipode are corrected by u on the odd parts.  R-matrices and twists are
transported along the same dictionary.
"""

from __future__ import annotations

from .algebra import Projection, ideal_generated, mul
from .exact import CycScalar, Echelon, Matrix, sparse_add, sparse_scale, to_dense, to_sparse
from .hopf import (
    HopfData,
    PairElement,
    apply_antipode,
    as_pair,
    hopf_map_report,
    is_grouplike,
    mul_tensor,
    quotient_hopf,
    change_basis,
    tensor_elements,
)
from .superalg import SuperHopfData, as_ordinary, smash_with_parity


class CorrespondenceError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def _check_involutive_grouplike(H: HopfData, u: dict, name: str = "u") -> None:
    if not is_grouplike(H, u):
        raise CorrespondenceError(f"{name} is not grouplike", {name: to_dense(u, H.dim, H.order)})
    if mul(H.alg, u, u) != H.one():
        raise CorrespondenceError(f"{name}^2 != 1", {name: to_dense(u, H.dim, H.order)})


def adjoint_matrix(H: HopfData, u: dict) -> Matrix:
    """Matrix of x -> u x u (conjugation by an involution)."""
    cols = [mul(H.alg, mul(H.alg, u, H.e(i)), u) for i in range(H.dim)]
    return Matrix.from_columns(cols, H.dim, H.order)


def eigenbasis(H: HopfData, u: dict) -> Matrix | None:
    """Columns spanning the +1 then -1 eigenspaces of Ad(u), or None if the basis is already homogeneous."""
    T = adjoint_matrix(H, u)
    cols = T.columns()
    one = CycScalar.one(H.order)
    homogeneous = all(c == {i: one} or c == {i: -one} for i, c in enumerate(cols))
    if homogeneous:
        return None
    plus, minus = Echelon(), Echelon()
    half = CycScalar.rational("1/2", H.order)
    for i in range(H.dim):
        e = H.e(i)
        plus.add(sparse_scale(sparse_add(e, cols[i]), half))
        minus.add(sparse_scale(sparse_add(e, cols[i], -one), half))
    vecs = sorted(plus.basis() + minus.basis(), key=min)
    return Matrix.from_columns(vecs, H.dim, H.order)


def _parities_from_adjoint(H: HopfData, u: dict) -> tuple:
    one = CycScalar.one(H.order)
    out = []
    for i in range(H.dim):
        c = mul(H.alg, mul(H.alg, u, H.e(i)), u)
        if c == {i: one}:
            out.append(0)
        elif c == {i: -one}:
            out.append(1)
        else:
            raise CorrespondenceError("basis is not homogeneous for Ad(u)", {"basis_index": i})
    return tuple(out)


def _corrected_coproduct(H: HopfData, parity: tuple, u: dict) -> dict:
    """Delta_0 - (-1)^p(h) (u (x) 1) Delta_1 on every basis vector, as comult entries."""
    entries = {}
    for i in range(H.dim):
        D0, D1 = {}, {}
        for (j, k), c in H.delta_table[i].items():
            (D1 if parity[k] else D0)[(j, k)] = c
        shifted: dict = {}
        for (j, k), c in D1.items():
            for a, x in mul(H.alg, u, H.e(j)).items():
                shifted = sparse_add(shifted, {(a, k): x}, c)
        sign = CycScalar.one(H.order) if parity[i] else -CycScalar.one(H.order)
        new = sparse_add(D0, shifted, sign)
        for (j, k), c in new.items():
            entries[(i, j, k)] = c
    return entries


def _corrected_antipode(H: HopfData, parity: tuple, u: dict) -> Matrix:
    cols = []
    for i in range(H.dim):
        s = apply_antipode(H, H.e(i))
        cols.append(mul(H.alg, u, s) if parity[i] else s)
    return Matrix.from_columns(cols, H.dim, H.order)


def to_super(H: HopfData, u) -> tuple[SuperHopfData, tuple, Matrix | None]:
    """(super Hopf algebra, g, basis change) for an involutive grouplike u.

    The basis change is None when the basis of H is already Ad(u)-homogeneous;
    otherwise its columns give the new basis in old coordinates.
    """
    from .exact import Tensor3

    u = to_sparse(u)
    _check_involutive_grouplike(H, u)
    C = eigenbasis(H, u)
    if C is not None:
        H = change_basis(as_ordinary(H), C)
        u = C.inverse().apply(u)
    parity = _parities_from_adjoint(H, u)
    comult = Tensor3(H.dim, _corrected_coproduct(H, parity, u))
    S = _corrected_antipode(H, parity, u)
    A = SuperHopfData(alg=H.alg, comult=comult, counit=H.counit, antipode=S,
                      labels=H.labels, parity=parity)
    return A, to_dense(u, H.dim, H.order), C


def to_ordinary(A: HopfData, g) -> tuple[HopfData, tuple]:
    """Inverse of to_super: (ordinary Hopf algebra, u = g)."""
    from .exact import Tensor3

    g = to_sparse(g)
    if not A.is_super:
        raise CorrespondenceError("to_ordinary expects a Hopf superalgebra")
    _check_involutive_grouplike(A, g, "g")
    one = CycScalar.one(A.order)
    for i in range(A.dim):
        c = mul(A.alg, mul(A.alg, g, A.e(i)), g)
        want = {i: -one} if A.parity[i] else {i: one}
        if c != want:
            raise CorrespondenceError("g e g^-1 != (-1)^p(e) e", {"basis_index": i})
    comult = Tensor3(A.dim, _corrected_coproduct(A, A.parity, g))
    S = _corrected_antipode(A, A.parity, g)
    H = HopfData(A.alg, comult, A.counit, S, A.labels)
    return H, to_dense(g, A.dim, A.order)


# ---------------------------------------------------------------------------
# R-matrices and twists
# ---------------------------------------------------------------------------

def _left_conj(H: HopfData, X: dict, u: dict) -> dict:
    """(u (x) 1) X (u (x) 1)."""
    U = tensor_elements(u, H.one())
    return mul_tensor(H, mul_tensor(H, U, X), U)


def _even_part_first(H: HopfData, X: dict, u: dict) -> tuple[dict, dict]:
    half = CycScalar.rational("1/2", H.order)
    X0 = sparse_scale(sparse_add(X, _left_conj(H, X, u)), half)
    X1 = sparse_add(X, X0, -CycScalar.one(H.order))
    return X0, X1


def _r_u(H: HopfData, u: dict) -> dict:
    one = H.one()
    half = CycScalar.rational("1/2", H.order)
    out = tensor_elements(one, one)
    out = sparse_add(out, tensor_elements(one, u))
    out = sparse_add(out, tensor_elements(u, one))
    out = sparse_add(out, tensor_elements(u, u), -CycScalar.one(H.order))
    return sparse_scale(out, half)


def _transform_pair(X: dict, M: Matrix) -> dict:
    cols = M.columns()
    out: dict = {}
    for (i, j), c in X.items():
        for a, x in cols[i].items():
            for b, y in cols[j].items():
                out = sparse_add(out, {(a, b): x * y}, c)
    return out


def _r_transport(H: HopfData, R: dict, u: dict) -> dict:
    # (R_0 + (1 (x) u) R_1) R_u, also valid in the other direction
    R0, R1 = _even_part_first(H, R, u)
    shifted = mul_tensor(as_ordinary(H), tensor_elements(H.one(), u), R1)
    return mul_tensor(as_ordinary(H), sparse_add(R0, shifted), _r_u(H, u))


def transport_r_to_super(H: HopfData, R, u) -> PairElement:
    """R-matrix on to_super(H, u) (in its basis) for a triangular (H, R) with Drinfeld element u."""
    from .triangular import drinfeld_element

    u = to_sparse(u)
    _check_involutive_grouplike(H, u)
    R = as_pair(R)
    du = to_sparse(drinfeld_element(H, PairElement(H.dim, R, H.order)))
    if du != u:
        raise CorrespondenceError("Drinfeld element of R differs from u",
                                  {"drinfeld": to_dense(du, H.dim, H.order)})
    out = _r_transport(H, R, u)
    C = eigenbasis(H, u)
    if C is not None:
        out = _transform_pair(out, C.inverse())
    return PairElement(H.dim, out, H.order)


def transport_r_to_ordinary(A: HopfData, R, g) -> PairElement:
    """R-matrix on to_ordinary(A, g) for a triangular (A, R) with super Drinfeld element 1."""
    from .triangular import drinfeld_element

    g = to_sparse(g)
    _check_involutive_grouplike(A, g, "g")
    R = as_pair(R)
    du = to_sparse(drinfeld_element(A, PairElement(A.dim, R, A.order)))
    if du != A.one():
        raise CorrespondenceError("super Drinfeld element is not 1",
                                  {"drinfeld": to_dense(du, A.dim, A.order)})
    return PairElement(A.dim, _r_transport(A, R, g), A.order)


def _parity_split(H: HopfData, X: dict, parity) -> tuple[dict, dict]:
    X0, X1 = {}, {}
    for (i, j), c in X.items():
        if parity[i] != parity[j]:
            raise CorrespondenceError("element is not even", {"pair": (i, j)})
        (X1 if parity[i] else X0)[(i, j)] = c
    return X0, X1


def _twist_shift(H: HopfData, X0: dict, X1: dict, u: dict) -> dict:
    # X_0 - (u (x) 1) X_1
    shifted = mul_tensor(as_ordinary(H), tensor_elements(u, H.one()), X1)
    return sparse_add(X0, shifted, -CycScalar.one(H.order))


def transport_twist(H: HopfData, u, J) -> PairElement:
    """Even twist J of H -> twist of to_super(H, u) (in its basis)."""
    u = to_sparse(u)
    _check_involutive_grouplike(H, u)
    J = as_pair(J)
    U2 = tensor_elements(u, u)
    conj = mul_tensor(as_ordinary(H), mul_tensor(as_ordinary(H), U2, J), U2)
    if conj != J:
        raise CorrespondenceError("twist is not even (not Ad(u (x) u)-invariant)")
    C = eigenbasis(H, u)
    Hb, ub, Jb = H, u, J
    if C is not None:
        Cinv = C.inverse()
        Hb = change_basis(as_ordinary(H), C)
        ub = Cinv.apply(u)
        Jb = _transform_pair(J, Cinv)
    parity = _parities_from_adjoint(Hb, ub)
    J0, J1 = _parity_split(Hb, Jb, parity)
    return PairElement(H.dim, _twist_shift(Hb, J0, J1, ub), H.order)


def transport_twist_to_ordinary(A: HopfData, g, Jsuper) -> PairElement:
    """Twist of A -> even twist of to_ordinary(A, g)."""
    g = to_sparse(g)
    _check_involutive_grouplike(A, g, "g")
    J0, J1 = _parity_split(A, as_pair(Jsuper), A.parity)
    return PairElement(A.dim, _twist_shift(A, J0, J1, g), A.order)


transport_twist_inverse = transport_twist_to_ordinary


def radford_cross_check(A: HopfData, g):
    """Compare to_ordinary(A, g) with overline(A) modulo the Hopf ideal generated by g'g - 1.

    Returns (report, quotient, map matrix).
    """
    g = to_sparse(g)
    H, _ = to_ordinary(A, g)
    B, gnew = smash_with_parity(A)
    Hbar, _ = to_ordinary(B, gnew)
    g_old = {2 * i: c for i, c in g.items()}
    x = sparse_add(mul(Hbar.alg, gnew, g_old), Hbar.one(), -CycScalar.one(A.order))
    I = ideal_generated(Hbar.alg, [x])
    Q = quotient_hopf(Hbar, I)
    pi = Projection(I)
    Phi = Matrix.from_columns([pi({2 * i: CycScalar.one(A.order)}) for i in range(A.dim)], Q.dim, A.order)
    return hopf_map_report(H, Q, Phi), Q, Phi
