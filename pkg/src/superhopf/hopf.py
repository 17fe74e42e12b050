"""Hopf algebras and Hopf superalgebras given by structure tensors.

Ordinary Hopf algebras are the special case of the super machinery in which
every basis vector is even, so the tensor operations below take parities
from ``H.parity`` and never need a separate ordinary code path.

Elements of H are sparse dicts ``{i: c}``; elements of H^{(x)k} are sparse
dicts keyed by k-tuples of basis indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian

from .algebra import (
    AlgebraData,
    Projection,
    characters,
    is_two_sided_ideal,
    mul,
    quotient_algebra,
    radical,
    subalgebra_generated,
)
from .exact import (
    CycScalar,
    Echelon,
    Matrix,
    Subspace,
    Tensor3,
    sparse_add,
    sparse_clean,
    sparse_kernel,
    sparse_scale,
    to_dense,
    to_sparse,
)
from .report import Report


class Indeterminate(RuntimeError):
    """Raised when a result depends on an enumeration that could not be completed."""


class NotHopfIdeal(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HopfData:
    """Delta(e_i) = sum comult[i, j, k] e_j (x) e_k; S(e_i) = sum_j antipode[j, i] e_j."""

    alg: AlgebraData
    comult: Tensor3
    counit: tuple
    antipode: Matrix
    labels: tuple | None = None

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def order(self) -> int:
        return self.alg.order

    @property
    def is_super(self) -> bool:
        return False

    @cached_property
    def parity(self) -> tuple:
        return (0,) * self.dim

    @cached_property
    def delta_table(self) -> list[dict]:
        rows = [dict() for _ in range(self.dim)]
        for (i, j, k), c in self.comult.items():
            rows[i][(j, k)] = c
        return rows

    @cached_property
    def antipode_cols(self) -> list[dict]:
        return self.antipode.columns()

    def basis_labels(self) -> tuple:
        return self.labels if self.labels is not None else tuple(f"e{i}" for i in range(self.dim))

    def one(self) -> dict:
        return dict(self.alg.unit_sparse)

    def e(self, i: int) -> dict:
        return {i: CycScalar.one(self.order)}

    def same_tensors(self, other: HopfData) -> bool:
        return (self.alg == other.alg and self.comult == other.comult
                and tuple(self.counit) == tuple(other.counit) and self.antipode == other.antipode
                and self.parity == other.parity)

    def __eq__(self, other):
        return isinstance(other, HopfData) and self.same_tensors(other)

    __hash__ = object.__hash__


class PairElement:
    """An element sum c_ij e_i (x) e_j of H (x) H."""

    __slots__ = ("dim", "coeffs", "order")

    def __init__(self, dim: int, coeffs: dict, order: int = 1):
        self.dim = dim
        self.order = order
        self.coeffs = {k: v for k, v in coeffs.items() if v}
        for i, j in self.coeffs:
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"pair index {(i, j)} out of range for dimension {dim}")

    @classmethod
    def from_matrix(cls, M: Matrix) -> PairElement:
        return cls(M.rows, {(i, j): M[i, j] for i in range(M.rows) for j in range(M.cols) if M[i, j]}, M.order)

    @classmethod
    def unit(cls, H: HopfData) -> PairElement:
        return cls(H.dim, tensor_unit(H, 2), H.order)

    def matrix(self) -> Matrix:
        zero = CycScalar.zero(self.order)
        ent = [[zero] * self.dim for _ in range(self.dim)]
        for (i, j), c in self.coeffs.items():
            ent[i][j] = c
        return Matrix(ent, self.order)

    def __eq__(self, other):
        if isinstance(other, PairElement):
            return self.dim == other.dim and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        terms = " + ".join(f"({c})e{i}@e{j}" for (i, j), c in sorted(self.coeffs.items()))
        return f"PairElement({terms or '0'})"


def as_pair(X) -> dict:
    return X.coeffs if isinstance(X, PairElement) else X


# ---------------------------------------------------------------------------
# tensor-power operations with Koszul signs
# ---------------------------------------------------------------------------

def apply_antipode(H: HopfData, x: dict) -> dict:
    out: dict = {}
    cols = H.antipode_cols
    for i, c in x.items():
        out = sparse_add(out, cols[i], c)
    return out


def delta(H: HopfData, x: dict) -> dict:
    out: dict = {}
    table = H.delta_table
    for i, c in x.items():
        out = sparse_add(out, table[i], c)
    return out


def counit_of(H: HopfData, x: dict) -> CycScalar:
    s = CycScalar.zero(H.order)
    for i, c in x.items():
        e = H.counit[i]
        if e:
            s = s + c * e
    return s


def tensor_unit(H: HopfData, k: int) -> dict:
    out: dict = {(): CycScalar.one(H.order)}
    one = H.one()
    for _ in range(k):
        out = {key + (i,): a * b for key, a in out.items() for i, b in one.items()}
    return out


def mul_tensor(H: HopfData, X: dict, Y: dict) -> dict:
    """Product in the k-th tensor power with (a1(x)..)(b1(x)..) signed by sum_{i<j} p(b_i) p(a_j)."""
    return mul_tensor_raw(H.alg, H.parity, as_pair(X), as_pair(Y))


def mul_tensor_raw(alg: AlgebraData, p, X: dict, Y: dict) -> dict:
    table = alg.table
    out: dict = {}
    for a, ca in X.items():
        for b, cb in Y.items():
            sign = 0
            for i in range(len(a)):
                if p[b[i]]:
                    for j in range(i + 1, len(a)):
                        sign += p[a[j]]
            coeff = ca * cb
            if sign & 1:
                coeff = -coeff
            partial = {(): coeff}
            for ai, bi in zip(a, b):
                terms = table[ai][bi]
                if not terms:
                    partial = {}
                    break
                partial = {key + (k,): c * d for key, c in partial.items() for k, d in terms}
            for key, c in partial.items():
                s = out.get(key)
                out[key] = c if s is None else s + c
    return sparse_clean(out)


def flip(H: HopfData, X: dict) -> dict:
    """Koszul flip on H (x) H."""
    p = H.parity
    out = {}
    for (i, j), c in as_pair(X).items():
        out[(j, i)] = -c if p[i] & p[j] else c
    return out


def delta_at(H: HopfData, X: dict, pos: int) -> dict:
    """Apply Delta to the tensorand at position ``pos`` (Delta is even: no signs)."""
    table = H.delta_table
    out: dict = {}
    for key, c in X.items():
        for (j, k), d in table[key[pos]].items():
            nk = key[:pos] + (j, k) + key[pos + 1:]
            s = out.get(nk)
            out[nk] = c * d if s is None else s + c * d
    return sparse_clean(out)


def counit_at(H: HopfData, X: dict, pos: int) -> dict:
    out: dict = {}
    for key, c in X.items():
        e = H.counit[key[pos]]
        if e:
            nk = key[:pos] + key[pos + 1:]
            s = out.get(nk)
            out[nk] = c * e if s is None else s + c * e
    return sparse_clean(out)


def antipode_at(H: HopfData, X: dict, pos: int) -> dict:
    cols = H.antipode_cols
    out: dict = {}
    for key, c in X.items():
        for j, d in cols[key[pos]].items():
            nk = key[:pos] + (j,) + key[pos + 1:]
            s = out.get(nk)
            out[nk] = c * d if s is None else s + c * d
    return sparse_clean(out)


def map_at(M: Matrix, X: dict, pos: int) -> dict:
    """Apply an even linear map (matrix acting on columns) at one tensor position."""
    cols = M.columns()
    out: dict = {}
    for key, c in X.items():
        for j, d in cols[key[pos]].items():
            nk = key[:pos] + (j,) + key[pos + 1:]
            s = out.get(nk)
            out[nk] = c * d if s is None else s + c * d
    return sparse_clean(out)


def multiply_out(H: HopfData, X: dict) -> dict:
    """m: H (x) H -> H."""
    out: dict = {}
    for (i, j), c in as_pair(X).items():
        out = sparse_add(out, mul(H.alg, {i: c}, {j: CycScalar.one(H.order)}))
    return out


def insert_unit(H: HopfData, X: dict, positions: tuple, k: int) -> dict:
    """Place the tensorands of X at ``positions`` inside a k-fold tensor with 1 elsewhere.

    Moving 1 (even) past anything costs no sign, so this realizes R13, R23, R12.
    """
    one = H.one()
    others = [q for q in range(k) if q not in positions]
    out: dict = {}
    for key, c in as_pair(X).items():
        partial = {(): c}
        for _ in others:
            partial = {kk + (i,): a * b for kk, a in partial.items() for i, b in one.items()}
        for okey, d in partial.items():
            full = [None] * k
            for pos, idx in zip(positions, key):
                full[pos] = idx
            for pos, idx in zip(others, okey):
                full[pos] = idx
            t = tuple(full)
            s = out.get(t)
            out[t] = d if s is None else s + d
    return sparse_clean(out)


def tensor_elements(*xs: dict) -> dict:
    """x1 (x) x2 (x) ... for plain elements."""
    out = {(i,): c for i, c in xs[0].items()}
    for x in xs[1:]:
        out = {key + (i,): a * c for key, a in out.items() for i, c in x.items()}
    return sparse_clean(out)


def pair_inverse(H: HopfData, X: dict, max_steps: int | None = None) -> dict:
    """Inverse of X in H (x) H.

    Tries a Neumann series when X = c(1 (x) 1 + N) with N nilpotent, else solves
    the linear system for a two-sided inverse.
    """
    X = as_pair(X)
    one2 = tensor_unit(H, 2)
    # scalar part along 1 (x) 1 (works when the unit is a basis vector)
    if len(one2) == 1:
        (k1, _), = one2.items()
        c = X.get(k1)
        if c:
            cinv = c.inv()
            # X / c = 1 + N, inverse sum_k (-N)^k when N is nilpotent
            minus_n = sparse_scale(sparse_add(sparse_scale(X, cinv), one2, -CycScalar.one(H.order)),
                                   -CycScalar.one(H.order))
            steps = max_steps if max_steps is not None else 2 * H.dim + 2
            term = dict(one2)
            total = dict(one2)
            for _ in range(steps):
                term = mul_tensor(H, term, minus_n)
                if not term:
                    return sparse_scale(total, cinv)
                total = sparse_add(total, term)
    return _pair_inverse_solve(H, X)


def _pair_inverse_solve(H: HopfData, X: dict) -> dict:
    d = H.dim
    keys = [(i, j) for i in range(d) for j in range(d)]
    one = CycScalar.one(H.order)
    cols = [mul_tensor(H, X, {k: one}) for k in keys]
    target = tensor_unit(H, 2)
    cols.append(sparse_scale(target, -one))
    ker = [v for v in sparse_kernel(cols, H.order) if len(keys) in v]
    if not ker:
        raise ZeroDivisionError("element of H(x)H is not invertible")
    v = ker[0]
    c = v[len(keys)].inv()
    Y = {keys[a]: b * c for a, b in v.items() if a != len(keys)}
    if mul_tensor(H, Y, X) != target:
        raise ZeroDivisionError("element of H(x)H has only a one-sided inverse")
    return Y


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def parity_report(H: HopfData) -> list:
    """Witnesses of structure maps that fail to preserve parity."""
    p = H.parity
    bad = []
    for (i, j, k), _ in H.alg.mult.items():
        if (p[i] + p[j] + p[k]) & 1:
            bad.append(("mult", i, j, k))
    for i, c in enumerate(H.alg.unit):
        if c and p[i]:
            bad.append(("unit", i))
    for (i, j, k), _ in H.comult.items():
        if (p[i] + p[j] + p[k]) & 1:
            bad.append(("comult", i, j, k))
    for i, c in enumerate(H.counit):
        if c and p[i]:
            bad.append(("counit", i))
    for i, col in enumerate(H.antipode_cols):
        for j in col:
            if p[i] != p[j]:
                bad.append(("antipode", j, i))
    return bad


def check_hopf(H: HopfData) -> Report:
    """Itemized Hopf (super)algebra axioms; every check passing means H is valid."""
    from .algebra import check_algebra

    rep = Report()
    if H.counit is None or len(H.counit) != H.dim:
        rep.add("shape", [("counit", None)])
        return rep
    if H.is_super:
        rep.add("parity_even", parity_report(H))
    rep.extend(check_algebra(H.alg))
    d = H.dim
    e = [H.e(i) for i in range(d)]
    deltas = [delta(H, e[i]) for i in range(d)]
    coassoc, counit_fail, antipode_fail = [], [], []
    one = H.one()
    for i in range(d):
        D = {(j, k): c for (j, k), c in deltas[i].items()}
        if delta_at(H, D, 0) != delta_at(H, D, 1):
            coassoc.append(i)
        left = {key[0]: c for key, c in counit_at(H, D, 0).items()}
        right = {key[0]: c for key, c in counit_at(H, D, 1).items()}
        if left != e[i] or right != e[i]:
            counit_fail.append(i)
        eps_one = sparse_scale(one, H.counit[i])
        if multiply_out(H, antipode_at(H, D, 0)) != eps_one or multiply_out(H, antipode_at(H, D, 1)) != eps_one:
            antipode_fail.append(i)
    rep.add("coassociativity", coassoc)
    rep.add("counit", counit_fail)
    dmul, emul = [], []
    if delta(H, one) != tensor_unit(H, 2):
        dmul.append("unit")
    if counit_of(H, one) != 1:
        emul.append("unit")
    for i in range(d):
        for j in range(d):
            prod = mul(H.alg, e[i], e[j])
            if delta(H, prod) != mul_tensor(H, deltas[i], deltas[j]):
                dmul.append((i, j))
            if counit_of(H, prod) != H.counit[i] * H.counit[j]:
                emul.append((i, j))
    rep.add("comult_multiplicative", dmul)
    rep.add("counit_multiplicative", emul)
    rep.add("antipode", antipode_fail)
    return rep


def dual_hopf(H: HopfData) -> HopfData:
    """Transpose every structure tensor; the dual basis is indexed like the original."""
    mult = Tensor3(H.dim, {(j, k, i): c for (i, j, k), c in H.comult.items()})
    comult = Tensor3(H.dim, {(k, i, j): c for (i, j, k), c in H.alg.mult.items()})
    alg = AlgebraData(H.dim, tuple(H.counit), mult, H.order)
    labels = tuple(f"{lab}*" if not lab.endswith("*") else lab[:-1] for lab in H.labels) if H.labels else None
    kwargs = dict(alg=alg, comult=comult, counit=tuple(H.alg.unit), antipode=H.antipode.transpose(), labels=labels)
    if H.is_super:
        return type(H)(parity=H.parity, **kwargs)
    return HopfData(**kwargs)


def coradical(H: HopfData) -> Subspace:
    return radical(dual_hopf(H).alg).annihilator()


def is_grouplike(H: HopfData, g) -> bool:
    g = to_sparse(g)
    return bool(g) and delta(H, g) == tensor_elements(g, g) and counit_of(H, g) == 1


def grouplikes(H: HopfData):
    """(grouplikes as dense tuples with the unit first, completeness flag)."""
    chars, complete = characters(dual_hopf(H).alg)
    found = []
    for ch in chars:
        if not is_grouplike(H, ch):
            raise ArithmeticError("character of the dual failed the grouplike check")
        found.append(tuple(ch))
    one = to_dense(H.one(), H.dim, H.order)
    found.sort(key=lambda g: (g != one, tuple(c.sort_key() for c in g)))
    return found, complete


def skew_primitives(H: HopfData, g, h) -> Subspace:
    """Solutions x of Delta(x) = x (x) g + h (x) x."""
    g, h = to_sparse(g), to_sparse(h)
    for name, v in (("g", g), ("h", h)):
        if not is_grouplike(H, v):
            raise ValueError(f"{name} is not grouplike")
    cols = []
    for i in range(H.dim):
        e = H.e(i)
        col = sparse_add(delta(H, e), tensor_elements(e, g), -CycScalar.one(H.order))
        col = sparse_add(col, tensor_elements(h, e), -CycScalar.one(H.order))
        cols.append(col)
    return Subspace.span(H.dim, sparse_kernel(cols, H.order), H.order)


def is_hopf_ideal(H: HopfData, I: Subspace):
    """(True, None) or (False, witness dict naming the failed condition and an element)."""
    ok, w = is_two_sided_ideal(H.alg, I)
    if not ok:
        return False, {"condition": "ideal", "side": w[0], "basis_index": w[1], "element": w[2]}
    ech = I.echelon()
    for v in I.sparse_basis():
        if counit_of(H, v):
            return False, {"condition": "counit", "element": to_dense(v, H.dim, H.order)}
    for v in I.sparse_basis():
        if not ech.contains(apply_antipode(H, v)):
            return False, {"condition": "antipode", "element": to_dense(v, H.dim, H.order)}
    pi = Projection(I)
    for v in I.sparse_basis():
        D = delta(H, v)
        projected: dict = {}
        for (j, k), c in D.items():
            for a, x in pi.images[j].items():
                for b, y in pi.images[k].items():
                    projected = sparse_add(projected, {(a, b): x * y}, c)
        if projected:
            return False, {"condition": "comult", "element": to_dense(v, H.dim, H.order)}
    return True, None


def quotient_hopf(H: HopfData, I: Subspace) -> HopfData:
    ok, w = is_hopf_ideal(H, I)
    if not ok:
        raise NotHopfIdeal(f"not a Hopf ideal ({w['condition']} condition fails)")
    alg, _ = quotient_algebra(H.alg, I)
    pi = Projection(I)
    q = len(pi.free)
    comult = {}
    counit = []
    s_cols = []
    for a, f in enumerate(pi.free):
        D: dict = {}
        for (j, k), c in H.delta_table[f].items():
            for x, cx in pi.images[j].items():
                for y, cy in pi.images[k].items():
                    D = sparse_add(D, {(x, y): cx * cy}, c)
        for (x, y), c in D.items():
            comult[(a, x, y)] = c
        counit.append(H.counit[f])
        s_cols.append(pi(H.antipode_cols[f]))
    labels = tuple(H.labels[f] for f in pi.free) if H.labels else None
    kwargs = dict(alg=alg, comult=Tensor3(q, comult), counit=tuple(counit),
                  antipode=Matrix.from_columns(s_cols, q, H.order), labels=labels)
    if H.is_super:
        return type(H)(parity=tuple(H.parity[f] for f in pi.free), **kwargs)
    return HopfData(**kwargs)


def _tensor_components(D: dict) -> list[dict]:
    # left components: sum_j c_jk e_j for each k; right components: sum_k c_jk e_k for each j
    left: dict = {}
    right: dict = {}
    for (j, k), c in D.items():
        left.setdefault(k, {})[j] = c
        right.setdefault(j, {})[k] = c
    return list(left.values()) + list(right.values())


def sub_hopf_generated(H: HopfData, gens) -> Subspace:
    """Smallest subspace containing 1 and gens closed under products, S and tensor components of Delta."""
    ech = Echelon()
    queue = []

    def push(v):
        if v and ech.add(v):
            queue.append(v)

    push(H.one())
    for g in gens:
        push(to_sparse(g))
    while queue:
        v = queue.pop()
        push(apply_antipode(H, v))
        for w in _tensor_components(delta(H, v)):
            push(w)
        for w in list(ech.rows.values()):
            push(mul(H.alg, v, w))
            push(mul(H.alg, w, v))
    # products between vectors added later are covered because each new vector
    # is multiplied against the whole current span when it is processed
    return Subspace.from_echelon(H.dim, ech, H.order)


def generated_by_grouplikes_and_skewprims(H: HopfData) -> bool:
    """True iff H is generated as an algebra by its grouplikes and skew-primitives."""
    gl, complete = grouplikes(H)
    if not complete:
        raise Indeterminate("grouplike enumeration is incomplete")
    gens = [to_sparse(g) for g in gl]
    for g, h in _cartesian(gl, repeat=2):
        gens.extend(skew_primitives(H, g, h).sparse_basis())
    return subalgebra_generated(H.alg, gens).rank == H.dim


def hopf_from_structure(dim, unit, mult, comult, counit, antipode, order=1, labels=None, parity=None) -> HopfData:
    """Assemble HopfData (or SuperHopfData when parity is given) from raw pieces."""
    alg = AlgebraData(dim, tuple(unit), mult if isinstance(mult, Tensor3) else Tensor3(dim, mult), order)
    comult = comult if isinstance(comult, Tensor3) else Tensor3(dim, comult)
    antipode = antipode if isinstance(antipode, Matrix) else Matrix(antipode, order)
    if parity is not None:
        from .superalg import SuperHopfData

        return SuperHopfData(alg=alg, comult=comult, counit=tuple(counit), antipode=antipode,
                             labels=labels, parity=tuple(parity))
    return HopfData(alg, comult, tuple(counit), antipode, labels)


def square_of_antipode(H: HopfData) -> Matrix:
    return H.antipode @ H.antipode


def left_regular(H: HopfData, x: dict) -> Matrix:
    return Matrix.from_columns([mul(H.alg, x, H.e(j)) for j in range(H.dim)], H.dim, H.order)


def hopf_map_report(B: HopfData, A: HopfData, Phi: Matrix) -> Report:
    """Checks that Phi (columns = images of B's basis in A) is a bijective (super) Hopf map."""
    rep = Report()
    cols = Phi.columns()
    rep.add("bijective", B.dim == A.dim and Phi.rank() == A.dim)
    rep.add("even", [i for i in range(B.dim) if any(A.parity[k] != B.parity[i] for k in cols[i])])
    rep.add("unit", Phi.apply(B.one()) == A.one())
    mult_fail, comult_fail, counit_fail, antipode_fail = [], [], [], []
    for i in range(B.dim):
        for j in range(B.dim):
            if Phi.apply(mul(B.alg, B.e(i), B.e(j))) != mul(A.alg, cols[i], cols[j]):
                mult_fail.append((i, j))
        D: dict = {}
        for (j, k), c in B.delta_table[i].items():
            for a, x in cols[j].items():
                for b, y in cols[k].items():
                    D = sparse_add(D, {(a, b): x * y}, c)
        if D != delta(A, cols[i]):
            comult_fail.append(i)
        if counit_of(A, cols[i]) != B.counit[i]:
            counit_fail.append(i)
        if Phi.apply(apply_antipode(B, B.e(i))) != apply_antipode(A, cols[i]):
            antipode_fail.append(i)
    rep.add("multiplicative", mult_fail)
    rep.add("comultiplicative", comult_fail)
    rep.add("counit", counit_fail)
    rep.add("antipode", antipode_fail)
    return rep


def change_basis(H: HopfData, C: Matrix) -> HopfData:
    """Structure tensors of H in the basis given by the columns of C."""
    Cinv = C.inverse()
    d = H.dim
    cols = C.columns()
    cinv_cols = Cinv.columns()

    def coords(v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            out = sparse_add(out, cinv_cols[i], c)
        return out

    mult = {}
    for a in range(d):
        for b in range(d):
            for k, c in coords(mul(H.alg, cols[a], cols[b])).items():
                mult[(a, b, k)] = c
    comult = {}
    for a in range(d):
        D = delta(H, cols[a])
        out: dict = {}
        for (j, k), c in D.items():
            for x, cx in cinv_cols[j].items():
                for y, cy in cinv_cols[k].items():
                    out = sparse_add(out, {(x, y): cx * cy}, c)
        for (x, y), c in out.items():
            comult[(a, x, y)] = c
    unit = to_dense(coords(H.one()), d, H.order)
    counit = tuple(counit_of(H, cols[a]) for a in range(d))
    S = Cinv @ H.antipode @ C
    alg = AlgebraData(d, unit, Tensor3(d, mult), H.order)
    if H.is_super:
        return type(H)(alg=alg, comult=Tensor3(d, comult), counit=counit, antipode=S, parity=H.parity)
    return HopfData(alg, Tensor3(d, comult), counit, S)
