"""Categorical and Frobenius-Perron dimensions, and the integrality scan for monic integer polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import CycScalar


# ---------------------------------------------------------------------------
# integer polynomials (coefficients ascending)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple  # ascending, trailing coefficient nonzero

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    @property
    def monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, t):
        s = 0
        for a in reversed(self.coeffs):
            s = s * t + a
        return s

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Read an integer polynomial in x such as ``x^2 - 2`` or ``x**3 + x - 1``."""
        import sympy

        x = sympy.Symbol("x")
        try:
            expr = sympy.sympify(text.replace("^", "**"), locals={"x": x})
            poly = sympy.Poly(expr, x)
        except (sympy.SympifyError, sympy.PolynomialError, TypeError, SyntaxError) as exc:
            raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from None
        if poly.free_symbols - {x}:
            raise ValueError(f"polynomial {text!r} must be in x only")
        coeffs = poly.all_coeffs()[::-1]
        if any(not c.is_integer for c in coeffs):
            raise ValueError(f"polynomial {text!r} must have integer coefficients")
        return cls(tuple(int(c) for c in coeffs))

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}" + (f"*{mono}" if mono else "")
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def is_irreducible(self) -> bool:
        import sympy

        x = sympy.Symbol("x")
        return sympy.Poly(list(reversed(self.coeffs)), x).is_irreducible


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def integer_roots(Q: IntPoly) -> list[int]:
    """All integer roots, ordered by absolute value with the positive one first."""
    c = list(Q.coeffs)
    if Q.degree <= 0:
        return []
    roots = []
    if c[0] == 0:
        roots.append(0)
        while c and c[0] == 0:
            c.pop(0)
    if len(c) > 1:
        P = IntPoly(tuple(c))
        for d in _divisors(c[0]):
            for r in (d, -d):
                if P(r) == 0:
                    roots.append(r)
    return sorted(set(roots), key=lambda r: (abs(r), -r))


def has_integer_root(Q: IntPoly) -> int | None:
    roots = integer_roots(Q)
    return roots[0] if roots else None


@dataclass(frozen=True)
class ScanResult:
    status: str            # "fail", "pass" or "inconclusive"
    k: int | None          # first failing k
    sequence: str | None   # "b" or "c" for the sequence that failed first
    kmax: int


def integrality_scan(Q: IntPoly, kmax: int = 200) -> ScanResult:
    """First k where b_k = Q(0)...Q(k-1)/(k!)^n or c_k = Q(0)Q(-1)...Q(1-k)/(k!)^n is not an integer."""
    if not Q.monic or Q.degree < 1:
        raise ValueError("Q must be monic of degree >= 1")
    n = Q.degree
    pb = pc = 1
    for k in range(1, kmax + 1):
        pb *= Q(k - 1)
        pc *= Q(1 - k)
        d = factorial(k) ** n
        if pb % d:
            return ScanResult("fail", k, "b", kmax)
        if pc % d:
            return ScanResult("fail", k, "c", kmax)
    if has_integer_root(Q) is not None:
        return ScanResult("pass", None, None, kmax)
    return ScanResult("inconclusive", None, None, kmax)


# ---------------------------------------------------------------------------
# fusion rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FusionRingData:
    """(N_i)[j][k] = multiplicity of V_k in V_i (x) V_j."""

    rank: int
    unit: int
    matrices: tuple

    def __post_init__(self):
        mats = tuple(tuple(tuple(int(x) for x in row) for row in M) for M in self.matrices)
        object.__setattr__(self, "matrices", mats)
        n = self.rank
        if len(mats) != n or any(len(M) != n or any(len(r) != n for r in M) for M in mats):
            raise ValueError("fusion matrices must be rank x rank, one per simple object")
        if any(x < 0 for M in mats for r in M for x in r):
            raise ValueError("fusion multiplicities must be nonnegative")
        if not 0 <= self.unit < n:
            raise ValueError("unit index out of range")
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        if mats[self.unit] != ident:
            raise ValueError("the unit object must have the identity fusion matrix")
        for i in range(n):
            if any(mats[i][self.unit][k] != int(i == k) for k in range(n)):
                raise ValueError(f"V_{i} (x) 1 != V_{i}")
        # associativity: N_j N_i = sum_m (N_i)[j][m] N_m
        for i in range(n):
            for j in range(n):
                lhs = _matmul(mats[j], mats[i])
                rhs = [[0] * n for _ in range(n)]
                for m in range(n):
                    c = mats[i][j][m]
                    if c:
                        for a in range(n):
                            for b in range(n):
                                rhs[a][b] += c * mats[m][a][b]
                if lhs != [list(r) for r in rhs]:
                    raise ValueError(f"fusion rule is not associative for objects {(i, j)}")


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def charpoly(M) -> IntPoly:
    """Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = A (M_{k-1} + c_{n-k+1} I)
        prev = [[Mk[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(Mk[i][i] for i in range(n)) / k
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("characteristic polynomial is not integral")
    return IntPoly(tuple(int(c) for c in coeffs))


def dim_candidates(F: FusionRingData, i: int) -> list[int]:
    """Integer eigenvalues of N_i."""
    return sorted(integer_roots(charpoly(F.matrices[i])))


# ---------------------------------------------------------------------------
# Sturm sequences over Q
# ---------------------------------------------------------------------------

def _qp(c):
    c = [Fraction(x) for x in c]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, y in enumerate(b):
            a[i + k] -= f * y
        a.pop()
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
    return q, _qp(a or [0])


def _qgcd(a, b):
    a, b = _qp(a), _qp(b)
    while any(b):
        _, r = _qdivmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a]


def _qeval(c, t):
    s = Fraction(0)
    for a in reversed(c):
        s = s * t + a
    return s


def _derivative(c):
    return [i * c[i] for i in range(1, len(c))] or [Fraction(0)]


def squarefree(c):
    c = _qp(c)
    if len(c) <= 2:
        return c
    g = _qgcd(c, _derivative(c))
    q, _ = _qdivmod(c, g)
    return _qp(q)


def sturm_sequence(c):
    c = squarefree(c)
    seq = [c, _qp(_derivative(c))]
    while len(seq[-1]) > 1 or seq[-1][0] != 0:
        _, r = _qdivmod(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append([-x for x in r])
    return seq


def _variations(seq, t) -> int:
    signs = [v for v in (_qeval(p, t) for p in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(c) -> Fraction:
    c = _qp(c)
    lead = abs(c[-1])
    return 1 + max((abs(x) / lead for x in c[:-1]), default=Fraction(0))


def isolate_largest_root(c, width=Fraction(1, 1 << 20)):
    """(lo, hi] containing the largest real root and no other root, with hi - lo <= width."""
    seq = sturm_sequence(c)
    B = root_bound(c)
    lo, hi = -B, B
    if count_roots(seq, lo, hi) == 0:
        return None
    while True:
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
        if count_roots(seq, lo, hi) == 1 and hi - lo <= width:
            return lo, hi


@dataclass(frozen=True)
class AlgebraicReal:
    lower: Fraction
    upper: Fraction
    minpoly: IntPoly
    value: int | None = None

    def to_json(self) -> dict:
        return {"value": self.value, "interval": [str(self.lower), str(self.upper)],
                "minimal_polynomial": str(self.minpoly)}


def _minimal_factor(p: IntPoly, lo: Fraction, hi: Fraction) -> IntPoly:
    import sympy

    x = sympy.Symbol("x")
    _, factors = sympy.Poly(list(reversed(p.coeffs)), x).factor_list()
    for f, _ in factors:
        c = [int(a) for a in reversed(f.all_coeffs())]
        if c[-1] < 0:
            c = [-a for a in c]
        if count_roots(sturm_sequence(c), lo, hi) == 1:
            return IntPoly(tuple(c))
    raise ArithmeticError("no factor owns the isolated root")


def fpdim(F: FusionRingData, i: int, width=Fraction(1, 1 << 20)) -> AlgebraicReal:
    """Largest real eigenvalue of N_i, isolated exactly by Sturm sequences."""
    p = charpoly(F.matrices[i])
    lo, hi = isolate_largest_root(p.coeffs, width)
    m = _minimal_factor(p, lo, hi)
    value = None
    if m.degree == 1:
        value = -m.coeffs[0]
        lo = hi = Fraction(value)
    return AlgebraicReal(lo, hi, m, value)


def perron_dominance(F: FusionRingData, i: int) -> bool:
    """Every real eigenvalue lambda of N_i has |lambda| <= FPdim."""
    theta = fpdim(F, i)
    p = charpoly(F.matrices[i])
    neg = [(-1) ** k * a for k, a in enumerate(p.coeffs)]
    other = isolate_largest_root(neg)
    if other is None:
        return True
    lo, hi = other
    seq_t = sturm_sequence(theta.minpoly.coeffs)
    seq_o = sturm_sequence(neg)
    t_lo, t_hi = theta.lower, theta.upper
    if theta.value is not None:
        t_lo = Fraction(theta.value) - Fraction(1, 1 << 30)
    for _ in range(200):
        if hi <= t_lo:
            return True
        if lo >= t_hi:
            return False
        # overlapping: equal if the largest root of p(-x) is also a root of the minimal polynomial of theta
        g = _qgcd(neg, list(theta.minpoly.coeffs))
        if len(g) > 1 and count_roots(sturm_sequence(g), lo, hi) >= 1 and count_roots(seq_o, lo, hi) == 1:
            if count_roots(sturm_sequence(g), max(lo, t_lo), min(hi, t_hi)) >= 1:
                return True
        mid = (lo + hi) / 2
        if count_roots(seq_o, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
        mid_t = (t_lo + t_hi) / 2
        if count_roots(seq_t, mid_t, t_hi) >= 1:
            t_lo = mid_t
        else:
            t_hi = mid_t
    raise ArithmeticError("could not separate eigenvalues")


# ---------------------------------------------------------------------------
# categorical dimension of modules over triangular Hopf algebras
# ---------------------------------------------------------------------------

def catdim_of_rep(H, R, rho) -> CycScalar:
    """trace of rho(u) for the Drinfeld element u of a triangular (H, R)."""
    from .triangular import check_triangular, drinfeld_element

    rep = check_triangular(H, R)
    if not rep.ok:
        raise ValueError("(H, R) is not triangular: " + ", ".join(c.name for c in rep.failures))
    u = drinfeld_element(H, R)
    return rho.of(u).trace()


def mod2_report(H, R, rho) -> dict:
    """Compare the categorical dimension with the module dimension (the FP dimension) modulo 2."""
    d = catdim_of_rep(H, R, rho)
    out = {"catdim": d, "fpdim": rho.dim, "integral": d.is_rational() and d.to_rational().denominator == 1}
    if out["integral"]:
        out["congruent_mod_2"] = (int(d.to_rational()) - rho.dim) % 2 == 0
    else:
        out["congruent_mod_2"] = None
    return out
