"""Quasitriangular and triangular structures, Drinfeld elements and minimal parts."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraData, mul
from .exact import CycScalar, Matrix, Subspace, Tensor3, as_scalar, sparse_add, sparse_scale, to_dense, to_sparse
from .hopf import (
    HopfData,
    PairElement,
    _tensor_components,
    antipode_at,
    apply_antipode,
    as_pair,
    counit_at,
    delta_at,
    flip,
    insert_unit,
    is_grouplike,
    mul_tensor,
    sub_hopf_generated,
    tensor_elements,
    tensor_unit,
)
from .report import Report


@dataclass(frozen=True)
class TriangularHopf:
    hopf: HopfData
    r: PairElement


def _pair(H: HopfData, R) -> dict:
    return as_pair(R)


def check_quasitriangular(H: HopfData, R) -> Report:
    R = _pair(H, R)
    rep = Report()
    if H.is_super:
        rep.add("even", [key for key in R if H.parity[key[0]] != H.parity[key[1]]])
    one = {(i,): c for i, c in H.one().items()}
    rep.add("counit_left", counit_at(H, R, 0) == one)
    rep.add("counit_right", counit_at(H, R, 1) == one)
    R13 = insert_unit(H, R, (0, 2), 3)
    R23 = insert_unit(H, R, (1, 2), 3)
    R12 = insert_unit(H, R, (0, 1), 3)
    rep.add("delta_left", delta_at(H, R, 0) == mul_tensor(H, R13, R23))
    rep.add("delta_right", delta_at(H, R, 1) == mul_tensor(H, R13, R12))
    bad = []
    for a in range(H.dim):
        D = H.delta_table[a]
        if mul_tensor(H, R, D) != mul_tensor(H, flip(H, D), R):
            bad.append(a)
    rep.add("intertwines_coproduct", bad)
    Rinv = antipode_at(H, R, 0)
    unit2 = tensor_unit(H, 2)
    rep.add("invertible", mul_tensor(H, R, Rinv) == unit2 and mul_tensor(H, Rinv, R) == unit2)
    return rep


def check_triangular(H: HopfData, R) -> Report:
    R = _pair(H, R)
    rep = check_quasitriangular(H, R)
    rep.add("unitary", mul_tensor(H, flip(H, R), R) == tensor_unit(H, 2))
    return rep


def r_u(H: HopfData, u) -> PairElement:
    """(1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u) / 2 for an involutive grouplike u."""
    u = to_sparse(u)
    if not is_grouplike(H, u) or mul(H.alg, u, u) != H.one():
        raise ValueError("u must be a grouplike with u^2 = 1")
    one = H.one()
    half = CycScalar.rational("1/2", H.order)
    out = tensor_elements(one, one)
    out = sparse_add(out, tensor_elements(one, u))
    out = sparse_add(out, tensor_elements(u, one))
    out = sparse_add(out, tensor_elements(u, u), -CycScalar.one(H.order))
    return PairElement(H.dim, sparse_scale(out, half), H.order)


def drinfeld_element(H: HopfData, R) -> tuple:
    """sum (-1)^{p(r1)p(r2)} S(r2) r1."""
    R = _pair(H, R)
    out: dict = {}
    for (i, j), c in R.items():
        term = mul(H.alg, apply_antipode(H, H.e(j)), H.e(i))
        if H.parity[i] & H.parity[j]:
            c = -c
        out = sparse_add(out, term, c)
    return to_dense(out, H.dim, H.order)


def adjoint(H: HopfData, u) -> Matrix:
    """Matrix of x -> u x u^{-1}."""
    from .algebra import inverse

    u = to_sparse(u)
    uinv = inverse(H.alg, u)
    return Matrix.from_columns([mul(H.alg, mul(H.alg, u, H.e(i)), uinv) for i in range(H.dim)], H.dim, H.order)


def drinfeld_report(H: HopfData, R) -> Report:
    """Laws of the Drinfeld element of a triangular structure."""
    u = to_sparse(drinfeld_element(H, R))
    rep = Report()
    rep.add("grouplike", is_grouplike(H, u))
    rep.add("square_is_one", mul(H.alg, u, u) == H.one())
    S2 = H.antipode @ H.antipode
    rep.add("S2_is_Ad_u", bool(u) and is_grouplike(H, u) and S2 == adjoint(H, u))
    rep.add("S4_is_identity", S2 @ S2 == Matrix.identity(H.dim, H.order))
    return rep


def minimal_part(H: HopfData, R) -> tuple[Subspace, int]:
    """Sub-Hopf algebra generated by the tensor components of R, and its dimension."""
    space = sub_hopf_generated(H, _tensor_components(_pair(H, R)))
    return space, space.rank


def is_rank_le_2(H: HopfData, R) -> bool:
    u = drinfeld_element(H, R)
    try:
        return r_u(H, u).coeffs == _pair(H, R)
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# Sweedler's four-dimensional Hopf algebra, basis (1, g, x, gx)
# ---------------------------------------------------------------------------

def sweedler_hopf(order: int = 1) -> HopfData:
    """g^2 = 1, x^2 = 0, gx = -xg, Delta g = g(x)g, Delta x = x(x)1 + g(x)x."""
    one = CycScalar.one(order)
    m = -one
    # basis words: 0 = 1, 1 = g, 2 = x, 3 = gx
    table = {
        (0, 0): (0, one), (0, 1): (1, one), (0, 2): (2, one), (0, 3): (3, one),
        (1, 0): (1, one), (1, 1): (0, one), (1, 2): (3, one), (1, 3): (2, one),
        (2, 0): (2, one), (2, 1): (3, m), (2, 2): None, (2, 3): None,
        (3, 0): (3, one), (3, 1): (2, m), (3, 2): None, (3, 3): None,
    }
    mult = {(i, j, v[0]): v[1] for (i, j), v in table.items() if v}
    comult = {
        (0, 0, 0): one,
        (1, 1, 1): one,
        (2, 2, 0): one, (2, 1, 2): one,
        (3, 3, 1): one, (3, 0, 3): one,
    }
    zero = CycScalar.zero(order)
    # S(g) = g, S(x) = -gx, S(gx) = x
    S = Matrix.from_columns([{0: one}, {1: one}, {3: m}, {2: one}], 4, order)
    alg = AlgebraData(4, (one, zero, zero, zero), Tensor3(4, mult), order)
    return HopfData(alg, Tensor3(4, comult), (one, one, zero, zero), S, ("1", "g", "x", "gx"))


def sweedler_r(lam, order: int | None = None) -> PairElement:
    """R_g - (lam/2)(x(x)x + gx(x)x - x(x)gx + gx(x)gx).

    This is the triangular structure for Delta x = x(x)1 + g(x)x; it equals
    (J_lam)_21^-1 R_g J_lam with J_lam = 1 - (lam/2) gx(x)x.
    """
    if order is None:
        order = lam.n if isinstance(lam, CycScalar) else 1
    lam = as_scalar(lam, order)
    one = CycScalar.one(order)
    half = CycScalar.rational("1/2", order)
    c = lam * half
    coeffs = {
        (0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half,
    }
    for key, sgn in (((2, 2), one), ((3, 2), one), ((2, 3), -one), ((3, 3), one)):
        coeffs[key] = coeffs.get(key, CycScalar.zero(order)) - c * sgn
    return PairElement(4, coeffs, order)


def sweedler(lam=0, order: int | None = None) -> TriangularHopf:
    if order is None:
        order = lam.n if isinstance(lam, CycScalar) else 1
    return TriangularHopf(sweedler_hopf(order), sweedler_r(lam, order))
