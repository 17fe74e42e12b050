"""Finite-dimensional associative unital algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian

from .exact import (
    CycScalar,
    Echelon,
    Matrix,
    Subspace,
    Tensor3,
    mat_kernel,
    sparse_add,
    sparse_clean,
    sparse_kernel,
    sparse_scale,
    to_dense,
    to_sparse,
    zeta,
)
from .report import Report


class NotAnIdeal(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """e_i * e_j = sum_k mult[i, j, k] e_k, with unit given by coordinates."""

    dim: int
    unit: tuple
    mult: Tensor3
    order: int = 1

    def __eq__(self, other):
        return (isinstance(other, AlgebraData) and self.dim == other.dim
                and self.order == other.order and tuple(self.unit) == tuple(other.unit)
                and self.mult == other.mult)

    __hash__ = object.__hash__

    @cached_property
    def table(self) -> list[list[tuple]]:
        t = [[() for _ in range(self.dim)] for _ in range(self.dim)]
        acc: dict = {}
        for (i, j, k), c in self.mult.items():
            acc.setdefault((i, j), []).append((k, c))
        for (i, j), terms in acc.items():
            t[i][j] = tuple(terms)
        return t

    @cached_property
    def unit_sparse(self) -> dict:
        return to_sparse(self.unit)

    def zero(self) -> CycScalar:
        return CycScalar.zero(self.order)

    def one(self) -> CycScalar:
        return CycScalar.one(self.order)

    def basis_vector(self, i: int) -> dict:
        return {i: self.one()}

    def dense(self, v: dict) -> tuple:
        return to_dense(v, self.dim, self.order)


def mul(A: AlgebraData, x: dict, y: dict) -> dict:
    """Product of two sparse elements of A."""
    out: dict = {}
    table = A.table
    for i, a in x.items():
        row = table[i]
        for j, b in y.items():
            terms = row[j]
            if not terms:
                continue
            ab = a * b
            for k, c in terms:
                s = out.get(k)
                out[k] = ab * c if s is None else s + ab * c
    return sparse_clean(out)


def power(A: AlgebraData, x: dict, k: int) -> dict:
    out = dict(A.unit_sparse)
    for _ in range(k):
        out = mul(A, out, x)
    return out


def left_mult_matrix(A: AlgebraData, x: dict) -> Matrix:
    return Matrix.from_columns([mul(A, x, {j: A.one()}) for j in range(A.dim)], A.dim, A.order)


def inverse(A: AlgebraData, x: dict) -> dict:
    """Two-sided inverse of x (ZeroDivisionError if x is not a unit)."""
    cols = [mul(A, x, {j: A.one()}) for j in range(A.dim)]
    # solve L_x y = 1 by augmenting with -1 as an extra column
    cols.append(sparse_scale(A.unit_sparse, -A.one()))
    ker = [v for v in sparse_kernel(cols, A.order) if A.dim in v]
    if not ker:
        raise ZeroDivisionError("element is not invertible")
    v = ker[0]
    c = v[A.dim].inv()
    y = {i: a * c for i, a in v.items() if i != A.dim}
    if mul(A, y, x) != A.unit_sparse:
        raise ZeroDivisionError("element has a right inverse only")
    return y


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def check_algebra(A: AlgebraData) -> Report:
    """Associativity and unit laws on all basis triples; empty failure lists mean valid."""
    rep = Report()
    e = [A.basis_vector(i) for i in range(A.dim)]
    prods = [[mul(A, e[i], e[j]) for j in range(A.dim)] for i in range(A.dim)]
    assoc = []
    for i, j, k in _cartesian(range(A.dim), repeat=3):
        left = mul(A, prods[i][j], e[k])
        right = mul(A, e[i], prods[j][k])
        if left != right:
            assoc.append((i, j, k))
    rep.add("associativity", assoc)
    one = A.unit_sparse
    rep.add("left_unit", [i for i in range(A.dim) if mul(A, one, e[i]) != e[i]])
    rep.add("right_unit", [i for i in range(A.dim) if mul(A, e[i], one) != e[i]])
    return rep


def trace_form(A: AlgebraData) -> Matrix:
    """T[i][j] = trace(L_{e_i} L_{e_j})."""
    table = A.table
    zero = A.zero()
    T = [[zero] * A.dim for _ in range(A.dim)]
    # L_i[k][l] = mult[i][l][k];  tr(L_i L_j) = sum_{l,k} mult[i][k][l] * mult[j][l][k]
    for i in range(A.dim):
        for j in range(i, A.dim):
            s = zero
            for l in range(A.dim):
                for k, c in table[j][l]:
                    for kk, c2 in table[i][k]:
                        if kk == l:
                            s = s + c * c2
            T[i][j] = s
            T[j][i] = s
    return Matrix(T, A.order)


def radical(A: AlgebraData) -> Subspace:
    """Jacobson radical as the kernel of the trace form of the left regular representation."""
    return Subspace.span(A.dim, mat_kernel(trace_form(A)), A.order)


def is_two_sided_ideal(A: AlgebraData, I: Subspace):
    """(True, None) or (False, (side, basis index, ideal vector))."""
    ech = I.echelon()
    for v in I.sparse_basis():
        for i in range(A.dim):
            e = A.basis_vector(i)
            if not ech.contains(mul(A, e, v)):
                return False, ("left", i, A.dense(v))
            if not ech.contains(mul(A, v, e)):
                return False, ("right", i, A.dense(v))
    return True, None


def ideal_generated(A: AlgebraData, gens) -> Subspace:
    """Smallest two-sided ideal containing gens."""
    ech = Echelon()
    queue = []
    for g in gens:
        g = to_sparse(g)
        if ech.add(g):
            queue.append(g)
    while queue:
        v = queue.pop()
        for i in range(A.dim):
            e = A.basis_vector(i)
            for w in (mul(A, e, v), mul(A, v, e)):
                if w and ech.add(w):
                    queue.append(w)
    return Subspace.from_echelon(A.dim, ech, A.order)


class Projection:
    """Quotient map k^dim -> k^dim / I in the complement basis of non-pivot coordinates."""

    def __init__(self, I: Subspace):
        self.I = I
        self.dim = I.dim
        self.order = I.order
        pivots = set(I.pivots())
        self.free = [i for i in range(I.dim) if i not in pivots]
        self.pos = {f: a for a, f in enumerate(self.free)}
        one = CycScalar.one(I.order)
        self.images: list[dict] = [dict() for _ in range(I.dim)]
        for f in self.free:
            self.images[f] = {self.pos[f]: one}
        for row in I.sparse_basis():
            p = min(row)
            self.images[p] = {self.pos[f]: -c for f, c in row.items() if f != p}

    def __call__(self, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            out = sparse_add(out, self.images[i], c)
        return out

    def lift(self, w: dict) -> dict:
        return {self.free[a]: c for a, c in w.items()}

    def matrix(self) -> Matrix:
        return Matrix.from_columns(self.images, len(self.free), self.order)


def quotient_algebra(A: AlgebraData, I: Subspace):
    """Structure constants of A/I on the complement basis, plus the projection matrix."""
    ok, witness = is_two_sided_ideal(A, I)
    if not ok:
        raise NotAnIdeal(f"subspace is not a two-sided ideal: {witness[0]} product with e_{witness[1]} escapes")
    pi = Projection(I)
    q = len(pi.free)
    entries = {}
    for a, fa in enumerate(pi.free):
        for b, fb in enumerate(pi.free):
            for c, val in pi(mul(A, {fa: A.one()}, {fb: A.one()})).items():
                entries[(a, b, c)] = val
    unit = to_dense(pi(A.unit_sparse), q, A.order)
    return AlgebraData(q, unit, Tensor3(q, entries), A.order), pi.matrix()


def subalgebra_generated(A: AlgebraData, gens) -> Subspace:
    """Span of all words in gens (including the empty word 1)."""
    gens = [to_sparse(g) for g in gens]
    ech = Echelon()
    queue = [dict(A.unit_sparse)]
    ech.add(queue[0])
    while queue:
        w = queue.pop()
        for g in gens:
            v = mul(A, g, w)
            if v and ech.add(v):
                queue.append(v)
    return Subspace.from_echelon(A.dim, ech, A.order)


def induced_algebra(A: AlgebraData, S: Subspace) -> AlgebraData:
    """Structure constants of a subalgebra S in its echelon basis."""
    basis = S.sparse_basis()
    pivots = [min(v) for v in basis]
    ech = S.echelon()
    entries = {}
    for a, va in enumerate(basis):
        for b, vb in enumerate(basis):
            prod = mul(A, va, vb)
            if ech.reduce(prod):
                raise ValueError("subspace is not closed under multiplication")
            for c, p in enumerate(pivots):
                if prod.get(p):
                    entries[(a, b, c)] = prod[p]
    unit = tuple(A.unit_sparse.get(p, A.zero()) for p in pivots)
    return AlgebraData(len(basis), unit, Tensor3(len(basis), entries), A.order)


# ---------------------------------------------------------------------------
# one-dimensional characters
# ---------------------------------------------------------------------------

def _poly_eval_elem(A: AlgebraData, coeffs, x: dict, unit: dict) -> dict:
    # Horner, coefficients ascending
    out: dict = {}
    for c in reversed(coeffs):
        out = sparse_add(mul(A, out, x), unit, c)
    return out


def minimal_polynomial(A: AlgebraData, x: dict, unit: dict | None = None) -> list:
    """Monic minimal polynomial (ascending coefficients) of x inside the algebra with identity ``unit``."""
    unit = A.unit_sparse if unit is None else unit
    powers = [unit]
    while True:
        nxt = mul(A, powers[-1], x)
        ker = sparse_kernel(powers + [nxt], A.order)
        if ker:
            v = ker[0]
            lead = v[len(powers)]
            return [v.get(i, A.zero()) / lead for i in range(len(powers))] + [A.one()]
        powers.append(nxt)


def _poly_divide_linear(p, root):
    # synthetic division of monic p by (x - root); returns (quotient, remainder)
    n = len(p) - 1
    q = [None] * n
    acc = p[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = p[i] + acc * root
    return q, acc


def _rational_root_candidates(p):
    from math import gcd, lcm

    den = 1
    for c in p:
        den = lcm(den, int(c.to_rational().denominator))
    ints = [int(c.to_rational() * den) for c in p]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if len(ints) <= 1:
        return set()
    a0, an = abs(ints[0]), abs(ints[-1])
    divs = lambda m: [d for d in range(1, m + 1) if m % d == 0]
    cands = set()
    for num in divs(a0):
        for d in divs(an):
            g = gcd(num, d)
            cands.add((num // g, d // g))
    from gmpy2 import mpq

    return {mpq(s * a, b) for a, b in cands for s in (1, -1)}


def find_roots(p, order: int):
    """Roots in Q(zeta_order) of a monic polynomial among 0, roots of unity, rationals.

    Returns (roots, leftover) where leftover is the unsplit cofactor.
    """
    roots = []
    n = order
    cands = [CycScalar.zero(n)]
    z = zeta(n)
    for k in range(max(n, 1)):
        w = z ** k
        cands.extend([w, -w])
    if all(c.is_rational() for c in p) and len(p) <= 12:
        cands.extend(CycScalar.rational(q, n) for q in sorted(_rational_root_candidates(p)))
    seen = set()
    for r in cands:
        if r in seen:
            continue
        seen.add(r)
        while len(p) > 1:
            q, rem = _poly_divide_linear(p, r)
            if rem:
                break
            if r not in roots:
                roots.append(r)
            p = q
            if len(p) == 2:
                break
        if len(p) == 2:
            break
    if len(p) == 2:
        last = -p[0] / p[1]
        if last not in roots:
            roots.append(last)
        p = [CycScalar.one(n)]
    return roots, p


def characters(A: AlgebraData):
    """All algebra maps A -> Q(zeta_n) found by splitting A/(Rad + [A, A]).

    Returns (list of dense coordinate tuples chi(e_i), complete flag).
    """
    comm = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            ei, ej = A.basis_vector(i), A.basis_vector(j)
            c = sparse_add(mul(A, ei, ej), mul(A, ej, ei), -A.one())
            if c:
                comm.append(c)
    I = ideal_generated(A, radical(A).sparse_basis() + comm)
    B, P = quotient_algebra(A, I)
    if B.dim == 0:
        return [], True
    pending = [dict(B.unit_sparse)]
    split_done = []
    complete = True
    while pending:
        e = pending.pop()
        eB = Echelon(mul(B, e, B.basis_vector(i)) for i in range(B.dim))
        if len(eB) == 1:
            split_done.append(e)
            continue
        parts = None
        for i in range(B.dim):
            b = mul(B, e, B.basis_vector(i))
            mu = minimal_polynomial(B, b, e)
            if len(mu) <= 2:
                continue
            roots, rest = find_roots(mu, B.order)
            if not roots:
                continue
            parts = []
            for lam in roots:
                q, _ = _poly_divide_linear(mu, lam)
                val = q[-1]
                for c in reversed(q[:-1]):
                    val = val * lam + c
                idem = sparse_scale(_poly_eval_elem(B, q, b, e), val.inv())
                parts.append(idem)
            rem = dict(e)
            for idem in parts:
                rem = sparse_add(rem, idem, -B.one())
            if rem:
                parts.append(rem)
            break
        if parts is None or len(parts) == 1:
            complete = False
            continue
        pending.extend(parts)
    chars = []
    for e in split_done:
        ech = Echelon([e])
        row = []
        for i in range(A.dim):
            v = mul(B, e, P.column(i))
            if ech.reduce(v):
                raise ArithmeticError("idempotent block is not one-dimensional")
            p = min(e)
            row.append(v.get(p, B.zero()) / e[p])
        chars.append(tuple(row))
    chars.sort(key=lambda ch: tuple(c.sort_key() for c in ch))
    return chars, complete
