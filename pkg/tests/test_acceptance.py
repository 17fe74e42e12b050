"""Acceptance criteria, one test (and one summary line) per criterion.

Run under pytest for the summary section, or directly with
``python3 tests/test_acceptance.py`` to print the lines only.
"""

import random
import time
from fractions import Fraction

import pytest

from superhopf import fileformat as ff
from superhopf.catdim import (
    FusionRingData,
    IntPoly,
    catdim_of_rep,
    fpdim,
    has_integer_root,
    integrality_scan,
    mod2_report,
)
from superhopf.chevalley import chevalley_report, regular_rep, tensor_rep, trivial_rep, two_dim_reps
from superhopf.cli import _build_example
from superhopf.corpus import exterior_twist_in, lambda_twist, rep_z2_fusion, supergroup_corpus, triangular_corpus
from superhopf.correspondence import (
    to_ordinary,
    to_super,
    transport_r_to_ordinary,
    transport_r_to_super,
    transport_twist,
    transport_twist_to_ordinary,
)
from superhopf.exact import CycScalar, Matrix, to_sparse
from superhopf.hopf import (
    PairElement,
    check_hopf,
    generated_by_grouplikes_and_skewprims,
    mul_tensor,
    tensor_unit,
)
from superhopf.superalg import (
    GroupTable,
    check_super_hopf,
    decompose_cocommutative,
    exterior_hopf,
    group_algebra,
    supergroup_algebra,
)
from superhopf.triangular import check_triangular, drinfeld_element, drinfeld_report, minimal_part, r_u, sweedler
from superhopf.twist import check_twist, exp_twist, invert_pair, sweedler_j, twist_hopf, twist_r

ONE = CycScalar.one()
LAMBDAS = (0, 1, -2, CycScalar.rational("3/5"))


def _record(record, tag, failures, t0, detail=""):
    elapsed = time.perf_counter() - t0
    text = f"{detail}  ({elapsed:.2f}s)" if detail else f"({elapsed:.2f}s)"
    record(tag, not failures, text if not failures else f"{failures[:3]} {text}")
    assert not failures, failures


def _random_symmetric(rng, n, rank=None):
    """Symmetric n x n rational matrix; rank-deficient when rank < n."""
    rank = n if rank is None else rank
    while True:
        B = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rank)] for _ in range(n)]
        d = [Fraction(rng.choice([-2, -1, 1, 2, 3])) for _ in range(rank)]
        M = [[sum(B[i][t] * d[t] * B[j][t] for t in range(rank)) for j in range(n)] for i in range(n)]
        if Matrix(M).rank() == rank:
            return M


def _super_corpus_triangular():
    """(A, R, g) super triangular corpus: trivial R and exp-twisted R on every supergroup algebra."""
    out = []
    for m in supergroup_corpus():
        A = m.hopf
        g = {m.g: CycScalar.one(A.order)}
        out.append((m.name, A, PairElement.unit(A), g))
        if m.n:
            r = [[int(i == j) + int(abs(i - j) == 1) for j in range(m.n)] for i in range(m.n)]
            J = exterior_twist_in(m, r)
            out.append((m.name + "^J", twist_hopf(A, J), twist_r(A, PairElement.unit(A), J), g))
    return out


def _twisted_ordinary():
    """(name, H^J, R^J) for every ordinary triangular corpus member with a non-trivial twist."""
    out = []
    for T in triangular_corpus():
        if T.twist is not None:
            J = T.twist
        elif "group" in T.extra:
            A, g, _ = to_super(T.hopf, T.u)
            n = T.extra["n"]
            r = [[int(i == j) for j in range(n)] for i in range(n)]
            J = transport_twist_to_ordinary(A, g, lambda_twist(A, T.extra["group"], n, r))
        else:
            continue
        out.append((T.name + "^J", twist_hopf(T.hopf, J), twist_r(T.hopf, T.r, J), T.u))
    return out


# ---------------------------------------------------------------------------


def test_criterion_1_sweedler_suite(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    for lam in LAMBDAS:
        T = sweedler(lam)
        if not check_hopf(T.hopf).ok:
            failures.append(("check_hopf", lam))
        if not check_triangular(T.hopf, T.r).ok:
            failures.append(("check_triangular", lam))
        rank = minimal_part(T.hopf, T.r)[1]
        if rank != (2 if lam == 0 else 4):
            failures.append(("rank", lam, rank))
        Rg = r_u(T.hopf, {1: ONE})
        if twist_r(T.hopf, Rg, sweedler_j(lam)) != T.r:
            failures.append(("R_lambda != (J_lambda)21^-1 R_g J_lambda", lam))
    _record(acceptance_line, "1", failures, t0, "Sweedler family triangular, ranks 2/4/4/4, R_lambda twisted from R_g")


def test_criterion_2_correspondence_round_trip(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    for name, A, R, g in _super_corpus_triangular():
        H, u = to_ordinary(A, g)
        A2, g2, C = to_super(H, u)
        if C is not None or not A2.same_tensors(A) or A2.parity != A.parity:
            failures.append((name, "to_super(to_ordinary(A))"))
        if not to_ordinary(A2, g2)[0].same_tensors(H):
            failures.append((name, "to_ordinary(to_super(H))"))
        Ro = transport_r_to_ordinary(A, R, g)
        if not check_triangular(H, Ro).ok:
            failures.append((name, "ordinary R not triangular"))
        Rs = transport_r_to_super(H, Ro, u)
        if Rs != R or not check_triangular(A, Rs).ok or to_sparse(drinfeld_element(A, Rs)) != A.one():
            failures.append((name, "super R"))
    for m in supergroup_corpus():
        if not m.n:
            continue
        A, g = m.hopf, {m.g: CycScalar.one(m.hopf.order)}
        H, u = to_ordinary(A, g)
        J = exterior_twist_in(m, [[int(i == j) - int(i + j == 1) for j in range(m.n)] for i in range(m.n)])
        Jo = transport_twist_to_ordinary(A, g, J)
        if not (check_twist(A, J).ok and check_twist(H, Jo).ok and transport_twist(H, u, Jo) == J):
            failures.append((m.name, "twist transport"))
    for T in triangular_corpus():
        A, g, C = to_super(T.hopf, T.u)
        Rs = transport_r_to_super(T.hopf, T.r, T.u)
        if not check_super_hopf(A).ok or not check_triangular(A, Rs).ok:
            failures.append((T.name, "super side"))
        if to_sparse(drinfeld_element(A, Rs)) != A.one():
            failures.append((T.name, "super Drinfeld element != 1"))
        if not to_ordinary(A, g)[0].same_tensors(T.hopf) or transport_r_to_ordinary(A, Rs, g) != T.r:
            failures.append((T.name, "round trip"))
        if T.twist is not None:
            Js = transport_twist(T.hopf, T.u, T.twist)
            if not (check_twist(T.hopf, T.twist).ok and check_twist(A, Js).ok):
                failures.append((T.name, "twist sides"))
            if transport_twist_to_ordinary(A, g, Js) != T.twist:
                failures.append((T.name, "twist round trip"))
    _record(acceptance_line, "2", failures, t0, "round trips, transported R super-triangular with u = 1, twists valid")


def test_criterion_3_exponential_twists(acceptance_line):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    failures = []
    for trial in range(20):
        n = 1 + trial % 4
        E = exterior_hopf(n)
        r = _random_symmetric(rng, n, rank=rng.randint(0, n))
        J = exp_twist(E, r)
        if not check_twist(E, J).ok:
            failures.append(("check_twist", trial))
        Jneg = exp_twist(E, [[-x for x in row] for row in r])
        if mul_tensor(E, J.coeffs, Jneg.coeffs) != tensor_unit(E, 2):
            failures.append(("exp(r) exp(-r) != 1", trial))
        EJ = twist_hopf(E, J)
        if not twist_hopf(EJ, invert_pair(E, J)).same_tensors(E):
            failures.append(("(H^J)^(J^-1) != H", trial))
    for H, J in ((sweedler(1).hopf, sweedler_j(1)), (sweedler(0).hopf, sweedler_j(CycScalar.rational("-7/3")))):
        if not twist_hopf(twist_hopf(H, J), invert_pair(H, J)).same_tensors(H):
            failures.append(("(H^J)^(J^-1) != H", "sweedler"))
    for n in (2, 3):
        E = exterior_hopf(n)
        for rank in range(n + 1):
            r = _random_symmetric(rng, n, rank)
            J = exp_twist(E, r)
            got = minimal_part(twist_hopf(E, J), twist_r(E, PairElement.unit(E), J))[1]
            if (got == 2 ** n) != (rank == n):
                failures.append(("minimality", n, rank, got))
    _record(acceptance_line, "3", failures, t0, "20 random exp twists, inverses, twist round trip, minimal iff nondegenerate")


def test_criterion_4_chevalley_equivalence(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    members = [(m.name, m.hopf) for m in supergroup_corpus()]
    members += [(T.name, T.hopf) for T in triangular_corpus()]
    members += [(name, A) for name, A, _, _ in _super_corpus_triangular() if name.endswith("^J")]
    members += [(name, H) for name, H, _, _ in _twisted_ordinary()]
    for name, H in members:
        rep = chevalley_report(H)
        if not (rep["agree"] and rep["verdict"] is True):
            failures.append((name, rep))
    _record(acceptance_line, "4", failures, t0, f"{len(members)} algebras, conditions agree and hold")


def test_criterion_5_drinfeld_laws(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    cases = [(T.name, T.hopf, T.r) for T in triangular_corpus()]
    cases += [(name, H, R) for name, H, R, _ in _twisted_ordinary()]
    cases += [(name, A, R) for name, A, R, _ in _super_corpus_triangular()]
    for name, H, R in cases:
        rep = drinfeld_report(H, R)
        if not rep.ok:
            failures.append((name, [c.name for c in rep.failures]))
    C2 = group_algebra(GroupTable.cyclic(2))
    if drinfeld_element(C2, r_u(C2, {1: ONE})) != (CycScalar.zero(), ONE):
        failures.append(("C[Z2]", "u != g"))
    _record(acceptance_line, "5", failures, t0, f"{len(cases)} triangular structures: u grouplike, u^2 = 1, S^2 = Ad u, S^4 = Id")


def test_criterion_6_generation(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    algebras = [("sweedler", sweedler(1).hopf)]
    algebras += [(f"C[{s}]", group_algebra(GroupTable.from_spec(s))) for s in ("Z2", "Z3", "Z4", "Z2xZ2", "Z6")]
    algebras += [(T.name, T.hopf) for T in triangular_corpus() if T.name.startswith("yd")]
    for name, H in algebras:
        if generated_by_grouplikes_and_skewprims(H) is not True:
            failures.append(name)
    _record(acceptance_line, "6", failures, t0, f"{len(algebras)} algebras generated by grouplikes and skew-primitives")


# golden values: first failing k, recorded from the exact scan
GOLDEN_FIRST_FAIL = {"x^2 - 2": 2, "x^2 + x + 1": 2}


def _all_monic(box=5, maxdeg=3):
    from itertools import product

    for n in range(1, maxdeg + 1):
        for low in product(range(-box, box + 1), repeat=n):
            yield IntPoly(tuple(low) + (1,))


def test_criterion_7_integrality_lemma(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    if integrality_scan(IntPoly.parse("x - 3"), 50).status != "pass":
        failures.append("x - 3")
    for text, k in GOLDEN_FIRST_FAIL.items():
        res = integrality_scan(IntPoly.parse(text), 200)
        if (res.status, res.k) != ("fail", k):
            failures.append((text, res))
    total = literal = 0
    for Q in _all_monic():
        total += 1
        fails = integrality_scan(Q, 200).status == "fail"
        root = has_integer_root(Q)
        if fails == (root is None):
            literal += 1
            continue
        # a passing scan always comes with an integer root; the converse can only
        # break for reducible Q, outside the irreducibility hypothesis
        if not fails or root is None or Q.is_irreducible():
            failures.append(str(Q))
    _record(acceptance_line, "7", failures, t0,
            f"goldens k=2, x-3 passes; {total} monic Q: pass => integer root, irreducible Q agree exactly; "
            f"literal agreement {literal}/{total} (remaining {total - literal} are reducible with an integer root)")


@pytest.mark.xfail(strict=True, reason="reducible Q such as (x-3)(x^2+1) have an integer root yet fail the scan")
def test_criterion_7_literal_agreement_for_reducible_q(acceptance_line):
    mismatches = [str(Q) for Q in _all_monic()
                  if (integrality_scan(Q, 200).status == "fail") != (has_integer_root(Q) is None)]
    acceptance_line("7 (literal reading, every monic Q)", not mismatches,
                    f"{len(mismatches)} reducible counterexamples, e.g. {mismatches[:2]}",
                    label="XFAIL" if mismatches else "XPASS")
    assert not mismatches


def test_criterion_8_categorical_dimensions(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    congruences = []
    for T in triangular_corpus():
        reps = [trivial_rep(T.hopf), regular_rep(T.hopf)] + two_dim_reps(T.hopf)[:6]
        if len(reps) > 3:
            reps.append(tensor_rep(T.hopf, reps[2], reps[3]))
        for rho in reps:
            d = catdim_of_rep(T.hopf, T.r, rho)
            if not (d.is_rational() and d.to_rational().denominator == 1):
                failures.append((T.name, rho.dim, d))
            congruences.append(mod2_report(T.hopf, T.r, rho)["congruent_mod_2"])
    for lam in LAMBDAS:
        T = sweedler(lam)
        if catdim_of_rep(T.hopf, T.r, regular_rep(T.hopf)) != CycScalar.zero():
            failures.append(("sweedler regular", lam))
    F = rep_z2_fusion()
    if fpdim(F, 0).value != 1 or fpdim(F, 1).value != 1:
        failures.append("Rep(Z2) fpdim")
    phi = fpdim(FusionRingData(2, 0, (((1, 0), (0, 1)), ((0, 1), (1, 1)))), 1)
    if phi.minpoly.coeffs != (-1, -1, 1) or phi.upper - phi.lower > Fraction(1, 2 ** 20):
        failures.append(("golden ratio", phi))
    if not (phi.lower ** 2 - phi.lower - 1 < 0 < phi.upper ** 2 - phi.upper - 1):
        failures.append(("golden ratio sign change", phi))
    n_cong = sum(1 for c in congruences if c)
    _record(acceptance_line, "8", failures, t0,
            f"{len(congruences)} reps integral; catdim = fpdim mod 2 on {n_cong}/{len(congruences)} (reported only)")


def test_criterion_9_cocommutative_decomposition(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    for m in supergroup_corpus():
        d = decompose_cocommutative(m.hopf)
        ok = d.group.order == m.group.order and d.group.is_abelian() == m.group.is_abelian() and d.n == m.n
        ok = ok and sorted(d.group.element_order(a) for a in range(d.group.order)) == sorted(
            m.group.element_order(a) for a in range(m.group.order))
        rebuilt = supergroup_algebra(d.group, d.n, d.action, m.hopf.order)
        from superhopf.hopf import hopf_map_report

        ok = ok and hopf_map_report(rebuilt, m.hopf, d.iso).ok
        if not ok:
            failures.append(m.name)
    _record(acceptance_line, "9", failures, t0, "every supergroup algebra recovered with an explicit isomorphism")


def _example_set():
    docs = []
    for lam in ("0", "1", "-2", "3/5"):
        docs.append(_build_example("sweedler", lam, 1, "Z2"))
    for name in ("group", "supergroup", "yd-biproduct", "ru"):
        for g in ("Z2", "Z4", "Z2xZ2"):
            for dim in (1, 2):
                docs.append(_build_example(name, "0", dim, g))
    for dim in range(4):
        docs.append(_build_example("exterior", "0", dim, "Z2"))
    docs += [ff.AlgebraFile(m.hopf) for m in supergroup_corpus()]
    docs += [ff.AlgebraFile(T.hopf, T.r, T.twist) for T in triangular_corpus()]
    return docs


def test_criterion_10_file_format_determinism(acceptance_line):
    t0 = time.perf_counter()
    failures = []
    docs = _example_set()
    for n, af in enumerate(docs):
        text = ff.emit_algebra(af)
        back = ff.parse_algebra(text)
        if ff.emit_algebra(back) != text or not back.hopf.same_tensors(af.hopf):
            failures.append(n)
        if back.rmatrix != af.rmatrix or back.twist != af.twist:
            failures.append((n, "pairs"))
    for F in (rep_z2_fusion(), FusionRingData(2, 0, (((1, 0), (0, 1)), ((0, 1), (1, 1))))):
        text = ff.emit_fusion(F)
        if ff.emit_fusion(ff.parse_fusion(text)) != text:
            failures.append("fusion")
    _record(acceptance_line, "10", failures, t0, f"{len(docs)} algebra documents and 2 fusion rings byte-identical")


if __name__ == "__main__":
    import sys

    def _print(tag, passed, detail="", label=None):
        print(f"criterion {tag}: {label or ('PASS' if passed else 'FAIL')}  {detail}")

    status = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_") and "literal" not in name:
            try:
                fn(_print)
            except AssertionError:
                status = 1
    sys.exit(status)
