"""Hopf superalgebras, Koszul-sign tensor structure and the standard constructors."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations

from .algebra import AlgebraData, mul
from .exact import (
    CycScalar,
    Matrix,
    Subspace,
    Tensor3,
    as_scalar,
    sparse_add,
    sparse_kernel,
    to_dense,
    to_sparse,
)
from .hopf import (
    HopfData,
    Indeterminate,
    check_hopf,
    delta,
    flip,
    grouplikes,
    hopf_map_report,
    mul_tensor_raw,
    tensor_elements,
)
from .report import Report


@dataclass(frozen=True, eq=False)
class SuperHopfData(HopfData):
    """HopfData whose basis vectors carry parities; super sign rules apply."""

    parity: tuple = field(default=())

    def __post_init__(self):
        if len(self.parity) != self.dim or any(p not in (0, 1) for p in self.parity):
            raise ValueError("parity must be a 0/1 vector of length dim")

    @property
    def is_super(self) -> bool:
        return True

    __eq__ = HopfData.__eq__
    __hash__ = object.__hash__


def as_super(H: HopfData, parity=None) -> SuperHopfData:
    return SuperHopfData(alg=H.alg, comult=H.comult, counit=H.counit, antipode=H.antipode,
                         labels=H.labels, parity=tuple(parity) if parity is not None else H.parity)


def as_ordinary(H: HopfData) -> HopfData:
    return HopfData(H.alg, H.comult, H.counit, H.antipode, H.labels)


def check_super_hopf(A: HopfData) -> Report:
    """Super Hopf axioms: parity evenness, coassociativity, counit, super-multiplicativity, antipode."""
    if not A.is_super:
        A = as_super(A)
    return check_hopf(A)


def super_tensor_square_mult(A: HopfData) -> Tensor3:
    """Multiplication tensor of A (x) A on pair indices (i, j) -> i*dim + j, with Koszul signs."""
    p = A.parity
    for (i, j, k), _ in A.alg.mult.items():
        if (p[i] + p[j] + p[k]) & 1:
            raise ValueError(f"multiplication is not homogeneous at {(i, j, k)}")
    d = A.dim
    table = A.alg.table
    entries = {}
    for a in range(d):
        for b in range(d):
            for a2 in range(d):
                for b2 in range(d):
                    left, right = table[a][a2], table[b][b2]
                    if not left or not right:
                        continue
                    sign = -1 if p[a2] & p[b] else 1
                    for k, c in left:
                        for l, c2 in right:
                            key = (a * d + b, a2 * d + b2, k * d + l)
                            val = c * c2 * sign
                            entries[key] = entries[key] + val if key in entries else val
    return Tensor3(d * d, entries)


def koszul_flip(A: HopfData) -> Matrix:
    d = A.dim
    p = A.parity
    one = CycScalar.one(A.order)
    cols = []
    for i in range(d):
        for j in range(d):
            cols.append({j * d + i: -one if p[i] & p[j] else one})
    return Matrix.from_columns(cols, d * d, A.order)


def cocommutative_check(A: HopfData) -> bool:
    return all(flip(A, A.delta_table[i]) == A.delta_table[i] for i in range(A.dim))


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    """Finite group by Cayley table: table[a][b] is the index of a*b."""

    table: tuple
    identity: int = 0
    generators: tuple = ()
    names: tuple | None = None

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(r) != n for r in self.table):
            raise ValueError("group table must be square and non-empty")
        if any(not (0 <= x < n) for r in self.table for x in r):
            raise ValueError("group table entry out of range")
        e = self.identity
        for a in range(n):
            if self.table[e][a] != a or self.table[a][e] != a:
                raise ValueError("identity index is not a two-sided identity")
        for a in range(n):
            if sorted(self.table[a]) != list(range(n)):
                raise ValueError("group table row is not a permutation")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise ValueError(f"group table is not associative at {(a, b, c)}")
        gens = self.generators or tuple(range(n))
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def inverse(self) -> tuple:
        return tuple(self.table[a].index(self.identity) for a in range(self.order))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def name(self, a: int) -> str:
        if self.names:
            return self.names[a]
        return "1" if a == self.identity else f"g{a}"

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def words(self) -> list[tuple]:
        """A shortest word in the generators for every element (BFS)."""
        words: list = [None] * self.order
        words[self.identity] = ()
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for gi, g in enumerate(self.generators):
                    b = self.table[a][g]
                    if words[b] is None:
                        words[b] = words[a] + (gi,)
                        nxt.append(b)
            frontier = nxt
        if any(w is None for w in words):
            raise ValueError("generators do not generate the group")
        return words

    @classmethod
    def cyclic(cls, n: int) -> GroupTable:
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        if n == 1:
            names = ("1",)
        else:
            names = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
        return cls(table, 0, (1 % n,) if n > 1 else (), names)

    @classmethod
    def product(cls, G: GroupTable, K: GroupTable) -> GroupTable:
        n, m = G.order, K.order
        table = tuple(tuple(G.table[a // m][b // m] * m + K.table[a % m][b % m] for b in range(n * m))
                      for a in range(n * m))
        gens = tuple(g * m + K.identity for g in G.generators) + tuple(G.identity * m + k for k in K.generators)
        names = []
        for a in range(n * m):
            ga, ka = a // m, a % m
            parts = []
            if ga != G.identity:
                parts.append(G.name(ga).replace("g", "a"))
            if ka != K.identity:
                parts.append(K.name(ka).replace("g", "b"))
            names.append("".join(parts) or "1")
        return cls(table, G.identity * m + K.identity, gens, tuple(names))

    @classmethod
    def from_spec(cls, spec: str) -> GroupTable:
        """Parse ``Z4``, ``Z2xZ2`` or ``1`` (trivial group)."""
        s = spec.replace(" ", "").upper()
        if s in ("1", "Z1", "TRIVIAL"):
            return cls.cyclic(1)
        G = None
        for part in s.split("X"):
            if not part.startswith("Z") or not part[1:].isdigit() or int(part[1:]) < 1:
                raise ValueError(f"bad group spec {spec!r}; expected e.g. Z2, Z4, Z2xZ2")
            C = cls.cyclic(int(part[1:]))
            G = C if G is None else cls.product(G, C)
        return G


def group_algebra(G: GroupTable, order: int = 1) -> HopfData:
    n = G.order
    one = CycScalar.one(order)
    mult = Tensor3(n, {(a, b, G.mul(a, b)): one for a in range(n) for b in range(n)})
    comult = Tensor3(n, {(a, a, a): one for a in range(n)})
    unit = tuple(one if a == G.identity else CycScalar.zero(order) for a in range(n))
    counit = tuple(one for _ in range(n))
    S = Matrix.from_columns([{G.inverse[a]: one} for a in range(n)], n, order)
    return HopfData(AlgebraData(n, unit, mult, order), comult, counit, S, tuple(G.name(a) for a in range(n)))


# ---------------------------------------------------------------------------
# exterior algebras
# ---------------------------------------------------------------------------

def monomials(n: int) -> list[tuple]:
    """Subsets of range(n) ordered by size, then lexicographically."""
    out = []
    for k in range(n + 1):
        out.extend(combinations(range(n), k))
    return out


def monomial_label(S: tuple) -> str:
    return "".join(f"x{i + 1}" for i in S) if S else "1"


def _wedge(S: tuple, T: tuple):
    """x_S x_T = sign * x_{S u T}; returns (sign, sorted union) or None."""
    if set(S) & set(T):
        return None
    inversions = sum(1 for s in S for t in T if s > t)
    return (-1 if inversions & 1 else 1), tuple(sorted(S + T))


def _exterior_algebra(n: int, order: int) -> tuple[AlgebraData, list, dict]:
    mons = monomials(n)
    index = {S: i for i, S in enumerate(mons)}
    one = CycScalar.one(order)
    entries = {}
    for a, S in enumerate(mons):
        for b, T in enumerate(mons):
            w = _wedge(S, T)
            if w:
                entries[(a, b, index[w[1]])] = one if w[0] > 0 else -one
    d = len(mons)
    unit = tuple(one if i == 0 else CycScalar.zero(order) for i in range(d))
    return AlgebraData(d, unit, Tensor3(d, entries), order), mons, index


def _extend_multiplicatively(alg, parity, images: dict, mons, index, order, k=2) -> list[dict]:
    """Delta of every monomial as the ordered super product of the generator images."""
    one = CycScalar.one(order)
    unit_key = tuple(0 for _ in range(k))
    out = []
    for S in mons:
        acc = {unit_key: one}
        for s in S:
            acc = mul_tensor_raw(alg, parity, acc, images[s])
        out.append(acc)
    return out


def exterior_hopf(n: int, order: int = 1) -> SuperHopfData:
    """Lambda V with dim V = n: odd primitive generators, S(x_S) = (-1)^|S| x_S."""
    if n < 0:
        raise ValueError("dim V must be >= 0")
    alg, mons, index = _exterior_algebra(n, order)
    d = len(mons)
    parity = tuple(len(S) & 1 for S in mons)
    one = CycScalar.one(order)
    images = {i: {(index[(i,)], 0): one, (0, index[(i,)]): one} for i in range(n)}
    deltas = _extend_multiplicatively(alg, parity, images, mons, index, order)
    comult = Tensor3(d, {(a, j, k): c for a, D in enumerate(deltas) for (j, k), c in D.items()})
    counit = tuple(one if i == 0 else CycScalar.zero(order) for i in range(d))
    S = Matrix.from_columns([{a: -one if len(T) & 1 else one} for a, T in enumerate(mons)], d, order)
    return SuperHopfData(alg=alg, comult=comult, counit=counit, antipode=S,
                         labels=tuple(monomial_label(T) for T in mons), parity=parity)


def _exterior_action(E: AlgebraData, mons, index, M: Matrix) -> list[dict]:
    """Image of every monomial under the algebra automorphism extending M on V (columns)."""
    one = CycScalar.one(E.order)
    gen_images = []
    for j in range(M.cols):
        gen_images.append({index[(i,)]: c for i, c in M.column(j).items()})
    out = []
    for S in mons:
        acc = {0: one}
        for s in S:
            acc = mul(E, acc, gen_images[s])
        out.append(acc)
    return out


def _element_action(G: GroupTable, n: int, action, order: int) -> list[Matrix]:
    """Per-element matrices from per-generator matrices, verified to be a homomorphism."""
    ident = Matrix.identity(n, order)
    if action is None:
        return [ident] * G.order
    action = [m if isinstance(m, Matrix) else Matrix(m, order) for m in action]
    if len(action) == G.order and len(action) != len(G.generators):
        mats = action
    else:
        if len(action) != len(G.generators):
            raise ValueError(f"expected {len(G.generators)} generator matrices, got {len(action)}")
        mats = []
        for w in G.words():
            m = ident
            for gi in w:
                m = m @ action[gi]
            mats.append(m)
    for m in mats:
        if m.rows != n or m.cols != n:
            raise ValueError("action matrices must be dim V x dim V")
    for a in range(G.order):
        for b in range(G.order):
            if mats[G.mul(a, b)] != mats[a] @ mats[b]:
                raise ValueError(f"action is not a homomorphism at {(a, b)}")
    return mats


def _infer_order(*groups) -> int:
    n = 1
    from math import lcm

    for group in groups:
        for x in group:
            if isinstance(x, CycScalar):
                n = lcm(n, x.n)
            elif isinstance(x, Matrix):
                n = lcm(n, x.order)
            elif isinstance(x, (list, tuple)):
                n = lcm(n, _infer_order(x))
    return n


def supergroup_algebra(G: GroupTable, n: int, action=None, order: int | None = None) -> SuperHopfData:
    """C[G] semidirect Lambda V; basis g x_S at index |G|*monomial + g.

    ``action`` lists one dim-V matrix per generator of G (or one per element);
    rho_g(x_j) = sum_i M[i][j] x_i.  None means the trivial action.
    """
    if order is None:
        order = _infer_order(action or [])
    mats = _element_action(G, n, action, order)
    E, mons, index = _exterior_algebra(n, order)
    m = G.order
    d = len(mons) * m
    rho = [_exterior_action(E, mons, index, M) for M in mats]
    one = CycScalar.one(order)

    def idx(S_i, g):
        return S_i * m + g

    entries = {}
    for Si in range(len(mons)):
        for g in range(m):
            for Ti in range(len(mons)):
                for h in range(m):
                    # (g x_S)(h x_T) = gh rho_{h^-1}(x_S) x_T
                    moved = rho[G.inverse[h]][Si]
                    prod = mul(E, moved, {Ti: one})
                    gh = G.mul(g, h)
                    for k, c in prod.items():
                        entries[(idx(Si, g), idx(Ti, h), idx(k, gh))] = c
    parity = tuple(len(mons[i // m]) & 1 for i in range(d))
    unit = tuple(one if i == idx(0, G.identity) else CycScalar.zero(order) for i in range(d))
    alg = AlgebraData(d, unit, Tensor3(d, entries), order)
    # Delta(g x_S) = (g (x) g) Delta(x_S); Delta(x_S) from the exterior Hopf structure
    ext = exterior_hopf(n, order)
    comult = {}
    for Si in range(len(mons)):
        for g in range(m):
            for (j, k), c in ext.delta_table[Si].items():
                comult[(idx(Si, g), idx(j, g), idx(k, g))] = c
    counit = tuple(one if i // m == 0 else CycScalar.zero(order) for i in range(d))
    s_cols = []
    for Si, S in enumerate(mons):
        for g in range(m):
            # S(g x_S) = (-1)^|S| g^-1 rho_g(x_S)
            sign = -one if len(S) & 1 else one
            ginv = G.inverse[g]
            s_cols.append({idx(k, ginv): c * sign for k, c in rho[g][Si].items()})
    labels = tuple(_combined_label(G.name(i % m), monomial_label(mons[i // m])) for i in range(d))
    return SuperHopfData(alg=alg, comult=Tensor3(d, comult), counit=counit,
                         antipode=Matrix.from_columns(s_cols, d, order), labels=labels, parity=parity)


def _combined_label(g: str, mono: str) -> str:
    if mono == "1":
        return g
    if g == "1":
        return mono
    return g + mono


# ---------------------------------------------------------------------------
# Radford biproducts with exterior algebras
# ---------------------------------------------------------------------------

def _character_values(G: GroupTable, chi, order: int) -> list[CycScalar]:
    vals = [as_scalar(x, order) for x in chi]
    if len(vals) == len(G.generators):
        full = []
        for w in G.words():
            v = CycScalar.one(order)
            for gi in w:
                v = v * vals[gi]
            full.append(v)
    elif len(vals) == G.order:
        full = vals
    else:
        raise ValueError("character needs one value per generator")
    for a in range(G.order):
        for b in range(G.order):
            if full[G.mul(a, b)] != full[a] * full[b]:
                raise ValueError(f"character values are not multiplicative at {(a, b)}")
    return full


def yd_biproduct(Gamma: GroupTable, g_list, chars, order: int | None = None) -> HopfData:
    """C[Gamma] semidirect Lambda V with Delta x_i = x_i (x) 1 + g_i (x) x_i and gamma x_i gamma^-1 = chi_i(gamma) x_i.

    ``chars[i]`` gives chi_i on the generators of Gamma; chi_i(g_j) = -1 is required.
    """
    if not Gamma.is_abelian():
        raise ValueError("Gamma must be abelian")
    N = len(g_list)
    if len(chars) != N:
        raise ValueError("need one character per g_i")
    if order is None:
        order = _infer_order(chars)
    chi = [_character_values(Gamma, c, order) for c in chars]
    bad = [(i, j) for i in range(N) for j in range(N) if chi[i][g_list[j]] != -1]
    if bad:
        raise ValueError(f"chi_i(g_j) != -1 for (i, j) in {bad}")
    E, mons, index = _exterior_algebra(N, order)
    m = Gamma.order
    d = len(mons) * m
    one = CycScalar.one(order)

    def idx(S_i, g):
        return S_i * m + g

    def chi_S(S, gamma):
        v = one
        for s in S:
            v = v * chi[s][gamma]
        return v

    entries = {}
    for Si, S in enumerate(mons):
        for g in range(m):
            for Ti, T in enumerate(mons):
                for h in range(m):
                    w = _wedge(S, T)
                    if not w:
                        continue
                    # x_S h = chi_S(h^-1) h x_S
                    c = chi_S(S, Gamma.inverse[h]) * w[0]
                    entries[(idx(Si, g), idx(Ti, h), idx(index[w[1]], Gamma.mul(g, h)))] = c
    unit = tuple(one if i == idx(0, Gamma.identity) else CycScalar.zero(order) for i in range(d))
    alg = AlgebraData(d, unit, Tensor3(d, entries), order)
    parity = (0,) * d
    comult = {}
    for Si, S in enumerate(mons):
        for g in range(m):
            acc = {(idx(0, g), idx(0, g)): one}
            for s in S:
                gen = {(idx(index[(s,)], Gamma.identity), idx(0, Gamma.identity)): one,
                       (idx(0, g_list[s]), idx(index[(s,)], Gamma.identity)): one}
                acc = mul_tensor_raw(alg, parity, acc, gen)
            for (j, k), c in acc.items():
                comult[(idx(Si, g), j, k)] = c
    counit = tuple(one if i // m == 0 else CycScalar.zero(order) for i in range(d))
    # S anti-multiplicative: S(gamma x_S) = S(x_sk)...S(x_s1) gamma^-1, S(x_i) = -g_i^-1 x_i
    s_cols = []
    for Si, S in enumerate(mons):
        for g in range(m):
            acc = {idx(0, Gamma.identity): one}
            for s in reversed(S):
                acc = mul(alg, acc, {idx(index[(s,)], Gamma.inverse[g_list[s]]): -one})
            acc = mul(alg, acc, {idx(0, Gamma.inverse[g]): one})
            s_cols.append(acc)
    labels = tuple(_combined_label(Gamma.name(i % m), monomial_label(mons[i // m])) for i in range(d))
    return HopfData(alg, Tensor3(d, comult), counit, Matrix.from_columns(s_cols, d, order), labels)


# ---------------------------------------------------------------------------
# overline construction
# ---------------------------------------------------------------------------

def smash_with_parity(A: HopfData) -> tuple[SuperHopfData, dict]:
    """C[Z_2] semidirect A with g a g^-1 = (-1)^p(a) a; basis g^b e_i at index 2i + b."""
    p = A.parity
    d = A.dim
    entries = {}
    for (i, j, k), c in A.alg.mult.items():
        for a in range(2):
            for b in range(2):
                sign = -1 if (b * p[i]) & 1 else 1
                entries[(2 * i + a, 2 * j + b, 2 * k + ((a + b) & 1))] = c * sign
    zero = CycScalar.zero(A.order)
    unit = []
    for i in range(d):
        unit.extend([A.alg.unit[i], zero])
    alg = AlgebraData(2 * d, tuple(unit), Tensor3(2 * d, entries), A.order)
    comult = {}
    for (i, j, k), c in A.comult.items():
        for a in range(2):
            comult[(2 * i + a, 2 * j + a, 2 * k + a)] = c
    counit = []
    for i in range(d):
        counit.extend([A.counit[i], A.counit[i]])
    s_cols = []
    for i, col in enumerate(A.antipode_cols):
        s_cols.append({2 * j: c for j, c in col.items()})
        sign = -1 if p[i] else 1
        s_cols.append({2 * j + 1: c * sign for j, c in col.items()})
    labels = None
    if A.labels:
        labels = []
        for lab in A.labels:
            labels.extend([lab, "g" if lab == "1" else "g" + lab])
        labels = tuple(labels)
    parity = tuple(p[i // 2] for i in range(2 * d))
    B = SuperHopfData(alg=alg, comult=Tensor3(2 * d, comult), counit=tuple(counit),
                      antipode=Matrix.from_columns(s_cols, 2 * d, A.order), labels=labels, parity=parity)
    g = {2 * i + 1: c for i, c in A.alg.unit_sparse.items()}
    return B, g


def overline(A: HopfData) -> tuple[HopfData, tuple]:
    """Ordinary Hopf algebra of C[Z_2] semidirect A, with the adjoined grouplike."""
    from .correspondence import to_ordinary

    if not A.is_super:
        A = as_super(A)
    B, g = smash_with_parity(A)
    H, u = to_ordinary(B, g)
    return H, u


# ---------------------------------------------------------------------------
# cocommutative decomposition
# ---------------------------------------------------------------------------

class DecompositionFailure(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class Decomposition:
    group: GroupTable
    n: int
    action: list          # one dim-V matrix per group element (columns = images)
    grouplikes: list      # dense coordinates of the group elements in A
    odd_primitives: list  # dense coordinates of the chosen basis of V
    iso: Matrix           # supergroup_algebra(group, n, action) -> A


def odd_primitives(A: HopfData) -> Subspace:
    """Odd x with Delta x = x (x) 1 + 1 (x) x."""
    one = A.one()
    odd = [i for i in range(A.dim) if A.parity[i]]
    cols = []
    for i in odd:
        e = A.e(i)
        col = sparse_add(delta(A, e), tensor_elements(e, one), -CycScalar.one(A.order))
        col = sparse_add(col, tensor_elements(one, e), -CycScalar.one(A.order))
        cols.append(col)
    vecs = [{odd[a]: c for a, c in v.items()} for v in sparse_kernel(cols, A.order)]
    return Subspace.span(A.dim, vecs, A.order)


def decompose_cocommutative(A: HopfData) -> Decomposition:
    """Recover (G, dim V, action) with A isomorphic to C[G] semidirect Lambda V; raises with a witness otherwise."""
    if not A.is_super:
        A = as_super(A)
    if not cocommutative_check(A):
        bad = [i for i in range(A.dim) if flip(A, A.delta_table[i]) != A.delta_table[i]]
        raise DecompositionFailure("not cocommutative", {"basis_index": bad[0]})
    gl, complete = grouplikes(A)
    if not complete:
        raise Indeterminate("grouplike enumeration is incomplete")
    for g in gl:
        if any(c and A.parity[i] for i, c in enumerate(g)):
            raise DecompositionFailure("grouplike with odd component", {"grouplike": g})
    order = A.order
    gsparse = [to_sparse(g) for g in gl]
    lookup = {tuple(g): a for a, g in enumerate(gl)}
    table = []
    for a in range(len(gl)):
        row = []
        for b in range(len(gl)):
            prod = to_dense(mul(A.alg, gsparse[a], gsparse[b]), A.dim, order)
            if prod not in lookup:
                raise DecompositionFailure("grouplikes are not closed under products", {"pair": (a, b)})
            row.append(lookup[prod])
        table.append(tuple(row))
    G = GroupTable(tuple(table), 0, (), tuple(f"g{a}" if a else "1" for a in range(len(gl))))
    V = odd_primitives(A)
    vb = V.sparse_basis()
    n = len(vb)
    pivots = [min(v) for v in vb]
    ech = V.echelon()
    mats = []
    for a in range(G.order):
        ginv = gsparse[G.inverse[a]]
        cols = []
        for v in vb:
            w = mul(A.alg, mul(A.alg, gsparse[a], v), ginv)
            if ech.reduce(w):
                raise DecompositionFailure("conjugation does not preserve the odd primitives",
                                           {"group_element": a})
            cols.append({r: w[p] for r, p in enumerate(pivots) if w.get(p)})
        mats.append(Matrix.from_columns(cols, n, order))
    B = supergroup_algebra(G, n, mats, order)
    m = G.order
    mons = monomials(n)
    images = []
    for Si, S in enumerate(mons):
        xs = dict(A.one())
        for s in S:
            xs = mul(A.alg, xs, vb[s])
        for g in range(m):
            images.append(mul(A.alg, gsparse[g], xs))
    Phi = Matrix.from_columns(images, A.dim, order)
    if B.dim != A.dim or Phi.rank() != A.dim:
        raise DecompositionFailure("dimension mismatch: C[G] semidirect Lambda V is not isomorphic to A",
                                   {"dim_A": A.dim, "group_order": m, "dim_V": n})
    rep = hopf_map_report(B, A, Phi)
    if not rep.ok:
        bad = rep.failures[0]
        raise DecompositionFailure(f"C[G] semidirect Lambda V -> A fails: {bad.name}", bad.witness)
    return Decomposition(G, n, mats, list(gl), [to_dense(v, A.dim, order) for v in vb], Phi)


def group_isomorphisms(G: GroupTable, K: GroupTable):
    """Yield bijections G -> K (as tuples) that are homomorphisms; brute force for small groups."""
    if G.order != K.order:
        return
    others_g = [a for a in range(G.order) if a != G.identity]
    others_k = [a for a in range(K.order) if a != K.identity]
    for perm in permutations(others_k):
        f = [0] * G.order
        f[G.identity] = K.identity
        for a, b in zip(others_g, perm):
            f[a] = b
        if all(f[G.mul(a, b)] == K.mul(f[a], f[b]) for a in range(G.order) for b in range(G.order)):
            yield tuple(f)
