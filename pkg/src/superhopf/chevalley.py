"""Chevalley-property criteria as exact linear algebra, plus representation utilities."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraData, Projection, mul, radical, subalgebra_generated
from .exact import CycScalar, Echelon, Matrix, Tensor3, kron, sparse_add, to_dense, to_sparse
from .hopf import (
    HopfData,
    apply_antipode,
    coradical,
    dual_hopf,
    is_grouplike,
    is_hopf_ideal,
    left_regular,
    delta,
    tensor_elements,
)
from .report import Report


@dataclass(frozen=True)
class Representation:
    """rho(e_i) for every basis vector of a Hopf algebra of dimension hopf_dim."""

    hopf_dim: int
    dim: int
    matrices: tuple

    def of(self, x) -> Matrix:
        x = to_sparse(x)
        order = self.matrices[0].order if self.matrices else 1
        out = Matrix.zeros(self.dim, self.dim, order)
        for i, c in x.items():
            out = out + self.matrices[i].scale(c)
        return out


def check_representation(H: HopfData, rho: Representation) -> Report:
    rep = Report()
    rep.add("shape", len(rho.matrices) == H.dim and all(
        m.rows == rho.dim and m.cols == rho.dim for m in rho.matrices))
    if not rep.ok:
        return rep
    bad = []
    for i in range(H.dim):
        for j in range(H.dim):
            if rho.matrices[i] @ rho.matrices[j] != rho.of(mul(H.alg, H.e(i), H.e(j))):
                bad.append((i, j))
    rep.add("multiplicative", bad)
    rep.add("unital", rho.of(H.one()) == Matrix.identity(rho.dim, H.order))
    return rep


def trivial_rep(H: HopfData) -> Representation:
    return Representation(H.dim, 1, tuple(Matrix([[c]], H.order) for c in H.counit))


def regular_rep(H: HopfData) -> Representation:
    return Representation(H.dim, H.dim, tuple(left_regular(H, H.e(i)) for i in range(H.dim)))


def tensor_rep(H: HopfData, rho1: Representation, rho2: Representation) -> Representation:
    """rho(e_i) = sum comult[i, j, k] rho1(e_j) (x) rho2(e_k)."""
    d = rho1.dim * rho2.dim
    mats = []
    for i in range(H.dim):
        acc = Matrix.zeros(d, d, H.order)
        for (j, k), c in H.delta_table[i].items():
            acc = acc + kron(rho1.matrices[j], rho2.matrices[k]).scale(c)
        mats.append(acc)
    return Representation(H.dim, d, tuple(mats))


def _vec(M: Matrix) -> dict:
    return {(i, j): x for i, r in enumerate(M.entries) for j, x in enumerate(r) if x}


def image_algebra(H: HopfData, rho: Representation) -> AlgebraData:
    """Structure constants of the subalgebra of End(module) generated by the rho(e_i)."""
    m = rho.dim
    order = H.order
    ech = Echelon()
    mats = []
    ident = Matrix.identity(m, order)
    queue = []
    for M in [ident] + list(rho.matrices):
        if ech.add(_vec(M)):
            queue.append(M)
    basis_mats = list(queue)
    while queue:
        M = queue.pop()
        for N in list(basis_mats):
            for P in (M @ N, N @ M):
                if ech.add(_vec(P)):
                    queue.append(P)
                    basis_mats.append(P)
    rows = ech.basis()
    pivots = [min(r) for r in rows]
    zero = CycScalar.zero(order)

    def to_mat(r):
        ent = [[zero] * m for _ in range(m)]
        for (i, j), c in r.items():
            ent[i][j] = c
        return Matrix(ent, order)

    mats = [to_mat(r) for r in rows]
    entries = {}
    for a, A in enumerate(mats):
        for b, B in enumerate(mats):
            v = _vec(A @ B)
            for c, p in enumerate(pivots):
                if v.get(p):
                    entries[(a, b, c)] = v[p]
    unit_vec = _vec(ident)
    unit = tuple(unit_vec.get(p, zero) for p in pivots)
    return AlgebraData(len(mats), unit, Tensor3(len(mats), entries), order)


def is_semisimple_rep(H: HopfData, rho: Representation) -> bool:
    """A module is semisimple iff the image algebra acting on it has zero radical."""
    return radical(image_algebra(H, rho)).rank == 0


def rep_2dim(H: HopfData, p, q, r) -> Representation:
    """Two-dimensional representation of the dual of H: e^i -> [[p_i, r_i], [0, q_i]].

    p, q are grouplikes of H (characters of the dual) and Delta r = p (x) r + r (x) q.
    """
    p, q, r = to_sparse(p), to_sparse(q), to_sparse(r)
    if not is_grouplike(H, p) or not is_grouplike(H, q):
        raise ValueError("p and q must be grouplike (characters of the dual)")
    want = sparse_add(tensor_elements(p, r), tensor_elements(r, q)) if r else {}
    if delta(H, r) != want:
        raise ValueError("r is not a skew-primitive: Delta r != p (x) r + r (x) q")
    zero = CycScalar.zero(H.order)
    pd, qd, rd = (to_dense(v, H.dim, H.order) for v in (p, q, r))
    mats = tuple(Matrix([[pd[i], rd[i]], [zero, qd[i]]], H.order) for i in range(H.dim))
    return Representation(H.dim, 2, mats)


# ---------------------------------------------------------------------------
# the three equivalent criteria
# ---------------------------------------------------------------------------

def chevalley_condition3(H: HopfData) -> bool:
    """The coradical of the dual is a Hopf subalgebra of the dual."""
    A = dual_hopf(H)
    C = coradical(A)
    if subalgebra_generated(A.alg, C.sparse_basis()) != C:
        return False
    ech = C.echelon()
    return all(ech.contains(apply_antipode(A, v)) for v in C.sparse_basis())


def chevalley_condition4(H: HopfData) -> bool:
    """The radical is a Hopf ideal."""
    return is_hopf_ideal(H, radical(H.alg))[0]


def chevalley_condition5(H: HopfData) -> bool:
    """S^2 induces the identity on H / Rad(H)."""
    I = radical(H.alg)
    ech = I.echelon()
    for v in I.sparse_basis():
        if not ech.contains(apply_antipode(H, apply_antipode(H, v))):
            return False
    pi = Projection(I)
    one = CycScalar.one(H.order)
    for a, f in enumerate(pi.free):
        if pi(apply_antipode(H, apply_antipode(H, H.e(f)))) != {a: one}:
            return False
    return True


def chevalley_report(H: HopfData) -> dict:
    c3, c4, c5 = chevalley_condition3(H), chevalley_condition4(H), chevalley_condition5(H)
    agree = c3 == c4 == c5
    return {"cond3": c3, "cond4": c4, "cond5": c5, "agree": agree, "verdict": c4 if agree else None}


def semisimple_iff_cosemisimple(H: HopfData) -> tuple[bool, bool]:
    """(H semisimple, H cosemisimple) from the radicals of H and of its dual."""
    return radical(H.alg).rank == 0, radical(dual_hopf(H).alg).rank == 0


def two_dim_reps(H: HopfData) -> list[Representation]:
    """Every rep_2dim built from a basis of each skew-primitive space of the dual.

    The dual of the dual is H itself, so these are representations of H.
    """
    from .hopf import grouplikes, skew_primitives

    D = dual_hopf(H)
    chars, _ = grouplikes(D)
    out = []
    for p in chars:
        for q in chars:
            for r in skew_primitives(D, q, p).sparse_basis():
                out.append(rep_2dim(D, p, q, r))
    return out
