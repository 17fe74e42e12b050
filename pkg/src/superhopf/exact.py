"""Exact scalars in cyclotomic fields and exact dense/sparse linear algebra.

Scalars live in Q(zeta_n) and are stored as coordinate tuples in the power
basis 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic
polynomial.  Rational coordinates are ``gmpy2.mpq``.

Sparse vectors are plain dicts ``{index: CycScalar}`` holding nonzero
entries only; the index can be an int or a tuple (for tensor powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from gmpy2 import mpq

__all__ = [
    "CycScalar",
    "Echelon",
    "Matrix",
    "Subspace",
    "Tensor3",
    "as_scalar",
    "cyclotomic_poly",
    "euler_phi",
    "kron",
    "mat_kernel",
    "parse_rational",
    "zeta",
]


def parse_rational(text) -> mpq:
    """Parse ``"p/q"``, ``"p"`` or a Python rational into an ``mpq``."""
    if isinstance(text, str):
        s = text.strip()
        if not s:
            raise ValueError("empty rational")
        num, _, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise ValueError(f"malformed rational {text!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return mpq(n, d)
    if isinstance(text, bool):
        raise TypeError("bool is not a rational")
    if isinstance(text, (int, Fraction)) or type(text) is type(mpq(0)):
        return mpq(text)
    if isinstance(text, _RationalABC):
        return mpq(text.numerator, text.denominator)
    raise TypeError(f"cannot read {text!r} as a rational")


def _mobius(n: int) -> int:
    m, p, res = n, 2, 1
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _ipoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ipoly_exact_div(a, b):
    # b monic
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial.

    Uses the Moebius product  Phi_n = prod_{d | n} (x^d - 1)^mu(n/d).
    """
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _ipoly_mul(num, factor)
        else:
            den = _ipoly_mul(den, factor)
    return tuple(_ipoly_exact_div(num, den))


@lru_cache(maxsize=None)
def _field(n: int):
    """(phi, reduction rows) where row k expresses z^k for k < 2*phi - 1."""
    phi = euler_phi(n)
    cyc = cyclotomic_poly(n)
    assert len(cyc) == phi + 1 and cyc[-1] == 1
    rows = []
    for k in range(max(2 * phi - 1, 1)):
        if k < phi:
            v = [0] * phi
            v[k] = 1
        else:
            prev = rows[k - 1]
            # z * (sum v_i z^i) ; top coefficient folds via z^phi = -sum cyc_i z^i
            top = prev[phi - 1]
            v = [0] + prev[: phi - 1]
            if top:
                for i in range(phi):
                    v[i] -= top * cyc[i]
        rows.append(v)
    return phi, tuple(tuple(mpq(x) for x in r) for r in rows), cyc


_ZERO = mpq(0)
_ONE = mpq(1)


class CycScalar:
    """An element of the cyclotomic field Q(zeta_n).

    Plain ints and rationals are accepted as operands and are read in the
    same field; two CycScalars must share the order ``n`` (see ``embed``
    for explicit coercion between orders).
    """

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: Iterable = (0,)):
        phi = _field(n)[0]
        c = tuple(parse_rational(x) for x in coeffs)
        if len(c) < phi:
            c = c + (_ZERO,) * (phi - len(c))
        elif len(c) > phi:
            raise ValueError(f"expected {phi} coordinates for order {n}, got {len(c)}")
        self.n = n
        self.c = c

    @classmethod
    def _raw(cls, n, c):
        obj = object.__new__(cls)
        obj.n = n
        obj.c = c
        return obj

    @classmethod
    def zero(cls, n: int = 1) -> CycScalar:
        return cls._raw(n, (_ZERO,) * _field(n)[0])

    @classmethod
    def one(cls, n: int = 1) -> CycScalar:
        return cls.rational(1, n)

    @classmethod
    def rational(cls, q, n: int = 1) -> CycScalar:
        phi = _field(n)[0]
        return cls._raw(n, (parse_rational(q),) + (_ZERO,) * (phi - 1))

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> CycScalar:
        if isinstance(other, CycScalar):
            if other.n != self.n:
                raise ValueError(
                    f"order mismatch: Q(zeta_{self.n}) vs Q(zeta_{other.n}); use embed()")
            return other
        try:
            q = parse_rational(other)
        except TypeError:
            return NotImplemented
        return CycScalar._raw(self.n, (q,) + (_ZERO,) * (len(self.c) - 1))

    def embed(self, m: int) -> CycScalar:
        """Image of this scalar in Q(zeta_m); requires n | m."""
        if m % self.n:
            raise ValueError(f"Q(zeta_{self.n}) does not embed in Q(zeta_{m})")
        if m == self.n:
            return self
        step = zeta(m) ** (m // self.n)
        out = CycScalar.zero(m)
        power = CycScalar.one(m)
        for q in self.c:
            if q:
                out = out + power * q
            power = power * step
        return out

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycScalar._raw(self.n, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycScalar._raw(self.n, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return CycScalar._raw(self.n, tuple(-a for a in self.c))

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.c, o.c
        phi = len(a)
        if phi == 1:
            return CycScalar._raw(self.n, (a[0] * b[0],))
        prod = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        rows = _field(self.n)[1]
        out = prod[:phi]
        for k in range(phi, 2 * phi - 1):
            t = prod[k]
            if t:
                row = rows[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += t * row[i]
        return CycScalar._raw(self.n, tuple(out))

    __rmul__ = __mul__

    def inv(self) -> CycScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.n)
        if len(self.c) == 1:
            return CycScalar._raw(self.n, (1 / self.c[0],))
        # extended Euclid in Q[x] against Phi_n
        cyc = [mpq(x) for x in _field(self.n)[2]]
        r0, r1 = cyc, _trim(list(self.c))
        s0, s1 = [_ZERO], [_ONE]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_qpoly_sub(s0, _qpoly_mul(q, s1)))
        # r1 is a nonzero constant
        c = 1 / r1[0]
        return CycScalar(self.n, [x * c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = CycScalar.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing --------------------------------------------
    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.n == other.n and self.c == other.c
        try:
            q = parse_rational(other)
        except TypeError:
            return NotImplemented
        return self.c[0] == q and not any(self.c[1:])

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.n, self.c))

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def sort_key(self):
        return tuple((int(q.numerator), int(q.denominator)) for q in self.c)

    def to_json(self) -> dict:
        return {"n": self.n, "c": [str(q) for q in self.c]}

    @classmethod
    def from_json(cls, obj) -> CycScalar:
        if not isinstance(obj, dict) or set(obj) != {"n", "c"}:
            raise ValueError(f"scalar must be an object with keys 'n' and 'c', got {obj!r}")
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"bad cyclotomic order {n!r}")
        coeffs = obj["c"]
        if not isinstance(coeffs, list) or len(coeffs) != euler_phi(n):
            raise ValueError(f"scalar of order {n} needs {euler_phi(n)} coordinates")
        return cls(n, [parse_rational(x) for x in coeffs])

    def __repr__(self):
        terms = []
        for i, q in enumerate(self.c):
            if not q:
                continue
            if i == 0:
                terms.append(str(q))
            elif q == 1:
                terms.append(f"z{self.n}" + (f"^{i}" if i > 1 else ""))
            else:
                terms.append(f"({q})*z{self.n}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) if terms else "0"


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qpoly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]


def _qpoly_divmod(a, b):
    a = list(a)
    b = _trim(list(b))
    if len(a) < len(b):
        return [_ZERO], _trim(a)
    q = [_ZERO] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    rem = _trim(a[: len(b) - 1] or [_ZERO])
    return q, rem


@lru_cache(maxsize=None)
def zeta(n: int) -> CycScalar:
    """The primitive n-th root of unity exp(2*pi*i/n) as an element of Q(zeta_n)."""
    phi = _field(n)[0]
    if phi == 1:
        # Q(zeta_1) = Q(zeta_2) = Q
        return CycScalar.rational(1 if n == 1 else -1, n)
    return CycScalar(n, [0, 1])


def as_scalar(x, n: int = 1) -> CycScalar:
    """Read ``x`` as an element of Q(zeta_n); CycScalars of a dividing order are embedded."""
    if isinstance(x, CycScalar):
        return x if x.n == n else x.embed(n)
    return CycScalar.rational(x, n)


# ---------------------------------------------------------------------------
# sparse vectors and incremental row reduction
# ---------------------------------------------------------------------------

def sparse_add(x: dict, y: dict, scale=None) -> dict:
    """x + scale*y as a new sparse dict."""
    out = dict(x)
    for k, v in y.items():
        if scale is not None:
            v = v * scale
        s = out.get(k)
        if s is None:
            if v:
                out[k] = v
        else:
            s = s + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sparse_scale(x: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in x.items()}


def sparse_clean(x: dict) -> dict:
    return {k: v for k, v in x.items() if v}


class Echelon:
    """Incrementally maintained reduced row echelon basis of a span.

    Rows are sparse dicts over sortable column keys.  Every stored row has
    a 1 at its pivot (the smallest key present) and zeros at all other
    pivots, so subspace equality is basis equality.
    """

    def __init__(self, vectors: Iterable[dict] = ()):
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        """Remainder of v modulo the current span (zero dict iff v is in the span)."""
        r = {k: c for k, c in v.items() if c}
        for key in [k for k in r if k in self.rows]:
            c = r.get(key)
            if c:
                r = sparse_add(r, self.rows[key], -c)
        return r

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r)
        inv = r[pivot].inv()
        r = {k: c * inv for k, c in r.items()}
        for key, row in list(self.rows.items()):
            c = row.get(pivot)
            if c:
                self.rows[key] = sparse_add(row, r, -c)
        self.rows[pivot] = r
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def basis(self) -> list[dict]:
        return [self.rows[k] for k in sorted(self.rows)]

    def pivots(self) -> list:
        return sorted(self.rows)


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of CycScalars (row-major)."""

    __slots__ = ("rows", "cols", "entries", "order")

    def __init__(self, entries: Sequence[Sequence], order: int | None = None, cols: int | None = None):
        rows = [list(r) for r in entries]
        if order is None:
            order = 1
            for r in rows:
                for x in r:
                    if isinstance(x, CycScalar):
                        order = x.n
                        break
                else:
                    continue
                break
        self.order = order
        self.rows = len(rows)
        if rows:
            self.cols = len(rows[0])
        else:
            self.cols = cols or 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")
        self.entries = tuple(tuple(as_scalar(x, order) for x in r) for r in rows)

    @classmethod
    def _raw(cls, entries, rows, cols, order):
        m = object.__new__(cls)
        m.entries = entries
        m.rows = rows
        m.cols = cols
        m.order = order
        return m

    @classmethod
    def identity(cls, n: int, order: int = 1) -> Matrix:
        one, zero = CycScalar.one(order), CycScalar.zero(order)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
                        n, n, order)

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> Matrix:
        zero = CycScalar.zero(order)
        return cls._raw(tuple((zero,) * cols for _ in range(rows)), rows, cols, order)

    @classmethod
    def from_columns(cls, columns: Sequence[dict], nrows: int, order: int) -> Matrix:
        """Dense matrix whose j-th column is the sparse vector ``columns[j]``."""
        zero = CycScalar.zero(order)
        ent = [[zero] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                ent[i][j] = v
        return cls._raw(tuple(tuple(r) for r in ent), nrows, len(columns), order)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Matrix(%r)" % ([[x for x in r] for r in self.entries],)

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.entries) if r[j]}

    def columns(self) -> list[dict]:
        cols = [dict() for _ in range(self.cols)]
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x:
                    cols[j][i] = x
        return cols

    def row(self, i: int) -> dict:
        return {j: x for j, x in enumerate(self.entries[i]) if x}

    def apply(self, v: dict) -> dict:
        """Matrix times sparse column vector."""
        out: dict = {}
        for j, c in v.items():
            for i in range(self.rows):
                a = self.entries[i][j]
                if a:
                    s = out.get(i)
                    out[i] = a * c if s is None else s + a * c
        return sparse_clean(out)

    def transpose(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self.entries)) if self.rows else tuple(),
                           self.cols, self.rows, self.order)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = CycScalar.zero(self.order)
        ocols = other.columns()
        ent = []
        for r in self.entries:
            row = []
            for col in ocols:
                s = zero
                for k, c in col.items():
                    a = r[k]
                    if a:
                        s = s + a * c
                row.append(s)
            ent.append(tuple(row))
        return Matrix._raw(tuple(ent), self.rows, other.cols, self.order)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
                           self.rows, self.cols, self.order)

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
                           self.rows, self.cols, self.order)

    def scale(self, c) -> Matrix:
        return Matrix._raw(tuple(tuple(a * c for a in r) for r in self.entries),
                           self.rows, self.cols, self.order)

    def trace(self) -> CycScalar:
        s = CycScalar.zero(self.order)
        for i in range(min(self.rows, self.cols)):
            s = s + self.entries[i][i]
        return s

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def rank(self) -> int:
        return len(Echelon(self.row(i) for i in range(self.rows)))

    def kernel(self) -> list[tuple]:
        return mat_kernel(self)

    def inverse(self) -> Matrix:
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        # row-reduce [M | I]
        ech = Echelon()
        for i in range(n):
            row = self.row(i)
            row[n + i] = CycScalar.one(self.order)
            ech.add(row)
        if ech.pivots()[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        zero = CycScalar.zero(self.order)
        ent = []
        for i in range(n):
            r = ech.rows[i]
            ent.append(tuple(r.get(n + j, zero) for j in range(n)))
        return Matrix._raw(tuple(ent), n, n, self.order)


def mat_kernel(M: Matrix) -> list[tuple]:
    """Exact basis of the right null space of M (dense tuples)."""
    ech = Echelon(M.row(i) for i in range(M.rows))
    return [tuple(v.get(j, CycScalar.zero(M.order)) for j in range(M.cols))
            for v in _kernel_from_echelon(ech, range(M.cols), M.order)]


def _kernel_from_echelon(ech: Echelon, columns, order) -> list[dict]:
    """Kernel vectors (sparse) of the system whose row space is ``ech``."""
    one = CycScalar.one(order)
    piv = set(ech.rows)
    out = []
    for f in columns:
        if f in piv:
            continue
        v = {f: one}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def sparse_kernel(columns: Sequence[dict], order: int) -> list[dict]:
    """Kernel of the linear map whose j-th column is the sparse dict ``columns[j]``.

    Returns sparse vectors over range(len(columns)).
    """
    rows: dict = {}
    for j, col in enumerate(columns):
        for key, c in col.items():
            rows.setdefault(key, {})[j] = c
    ech = Echelon(rows[k] for k in sorted(rows))
    return _kernel_from_echelon(ech, range(len(columns)), order)


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; row/col (i, j) of the factors maps to i*dim(B) + j."""
    ent = []
    for ra in A.entries:
        for rb in B.entries:
            ent.append(tuple(a * b for a in ra for b in rb))
    return Matrix._raw(tuple(ent), A.rows * B.rows, A.cols * B.cols, A.order)


# ---------------------------------------------------------------------------
# structure tensors and subspaces
# ---------------------------------------------------------------------------

class Tensor3:
    """Sparse 3-index tensor of CycScalars with no duplicate or zero entries."""

    __slots__ = ("dims", "entries", "_rows")

    def __init__(self, dims, entries):
        if isinstance(dims, int):
            dims = (dims, dims, dims)
        self.dims = tuple(dims)
        ent = {}
        items = entries.items() if isinstance(entries, dict) else ((tuple(e[:3]), e[3]) for e in entries)
        for key, c in items:
            i, j, k = key
            if not (0 <= i < self.dims[0] and 0 <= j < self.dims[1] and 0 <= k < self.dims[2]):
                raise IndexError(f"tensor index {key} out of range {self.dims}")
            if key in ent:
                raise ValueError(f"duplicate tensor entry {key}")
            if c:
                ent[(i, j, k)] = c
        self.entries = ent
        self._rows = None

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self.dims == other.dims and self.entries == other.entries

    def __hash__(self):
        return hash((self.dims, frozenset(self.entries.items())))

    def __repr__(self):
        return f"Tensor3({self.dims}, {len(self.entries)} entries)"

    def by_first(self) -> list[list]:
        """rows[i] = [((j, k), c), ...] sorted by (j, k)."""
        if self._rows is None:
            rows = [[] for _ in range(self.dims[0])]
            for (i, j, k), c in sorted(self.entries.items()):
                rows[i].append(((j, k), c))
            self._rows = rows
        return self._rows

    def items(self):
        return sorted(self.entries.items())


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^dim, stored by its reduced row echelon basis."""

    dim: int
    basis: tuple  # tuple of dense tuples, sorted by pivot
    order: int = 1

    @classmethod
    def span(cls, dim: int, vectors: Iterable, order: int = 1) -> Subspace:
        ech = Echelon(_as_sparse(v) for v in vectors)
        return cls.from_echelon(dim, ech, order)

    @classmethod
    def from_echelon(cls, dim: int, ech: Echelon, order: int) -> Subspace:
        zero = CycScalar.zero(order)
        basis = tuple(tuple(r.get(i, zero) for i in range(dim)) for r in ech.basis())
        return cls(dim, basis, order)

    @classmethod
    def zero(cls, dim: int, order: int = 1) -> Subspace:
        return cls(dim, (), order)

    @classmethod
    def whole(cls, dim: int, order: int = 1) -> Subspace:
        return cls.span(dim, [{i: CycScalar.one(order)} for i in range(dim)], order)

    def __len__(self):
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def sparse_basis(self) -> list[dict]:
        return [_as_sparse(v) for v in self.basis]

    def echelon(self) -> Echelon:
        ech = Echelon()
        for v in self.sparse_basis():
            ech.rows[min(v)] = v
        return ech

    def contains(self, v) -> bool:
        return self.echelon().contains(_as_sparse(v))

    def pivots(self) -> list[int]:
        return [min(v) for v in self.sparse_basis()]

    def __le__(self, other: Subspace) -> bool:
        ech = other.echelon()
        return all(ech.contains(v) for v in self.sparse_basis())

    def annihilator(self) -> Subspace:
        """Vectors y with sum_i v_i y_i = 0 for every basis vector v."""
        rows = Matrix(self.basis, self.order, cols=self.dim) if self.basis else Matrix.zeros(0, self.dim, self.order)
        return Subspace.span(self.dim, mat_kernel(rows) if self.basis
                             else [{i: CycScalar.one(self.order)} for i in range(self.dim)], self.order)


def _as_sparse(v) -> dict:
    if isinstance(v, dict):
        return {k: c for k, c in v.items() if c}
    return {i: c for i, c in enumerate(v) if c}


def to_sparse(v) -> dict:
    return _as_sparse(v)


def to_dense(v: dict, dim: int, order: int) -> tuple:
    zero = CycScalar.zero(order)
    return tuple(v.get(i, zero) for i in range(dim))
