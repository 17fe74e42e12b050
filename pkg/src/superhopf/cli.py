"""Command-line front end: verification, example generation and the structural queries.

Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 indeterminate.
"""

from __future__ import annotations

import json
import sys

import click

from . import fileformat as ff
from .catdim import IntPoly, dim_candidates, fpdim, has_integer_root, integrality_scan, perron_dominance
from .chevalley import chevalley_report
from .correspondence import (
    CorrespondenceError,
    to_ordinary,
    to_super,
    transport_r_to_ordinary,
    transport_r_to_super,
    transport_twist,
    transport_twist_to_ordinary,
)
from .exact import CycScalar, Matrix, parse_rational, to_dense, zeta
from .hopf import (
    HopfData,
    Indeterminate,
    PairElement,
    check_hopf,
    generated_by_grouplikes_and_skewprims,
    grouplikes,
    skew_primitives,
)
from .report import Report, _jsonable
from .superalg import GroupTable, exterior_hopf, group_algebra, supergroup_algebra, yd_biproduct
from .triangular import check_triangular, drinfeld_report, minimal_part, r_u, sweedler
from .twist import NotInvertible, check_twist, sweedler_j, twist_hopf, twist_r

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        click.echo(json.dumps(_jsonable_deep(obj), sort_keys=True, indent=2))
    else:
        click.echo(text)


def _jsonable_deep(x):
    if isinstance(x, Report):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable_deep(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable_deep(v) for v in x]
    if isinstance(x, CycScalar):
        return ff.scalar_to_doc(x)
    return _jsonable(x)


def _load(path) -> ff.AlgebraFile:
    try:
        return ff.read_algebra(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, IndexError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _vector_arg(text: str, H: HopfData) -> dict:
    """A basis index ("1") or comma-separated coordinates ("0,1,0,0")."""
    s = text.strip().strip("[]")
    try:
        if "," not in s:
            i = int(s)
            if not 0 <= i < H.dim:
                raise ValueError(f"basis index {i} out of range")
            return {i: CycScalar.one(H.order)}
        parts = [p.strip() for p in s.split(",")]
        if len(parts) != H.dim:
            raise ValueError(f"expected {H.dim} coordinates")
        return {i: CycScalar.rational(parse_rational(p), H.order) for i, p in enumerate(parts) if parse_rational(p)}
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad element {text!r}: {exc}") from None


def _vec_text(H: HopfData, v) -> str:
    v = to_dense(v, H.dim, H.order) if isinstance(v, dict) else v
    labels = H.basis_labels()
    terms = [f"({c.to_rational() if c.is_rational() else repr(c)}){labels[i]}" for i, c in enumerate(v) if c]
    return " + ".join(terms) or "0"


def _write(af: ff.AlgebraFile, out) -> None:
    text = ff.emit_algebra(af)
    if out is None or out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _finish(ok: bool) -> None:
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


json_option = click.option("--json", "as_json", is_flag=True, help="Emit a machine-readable report.")


@click.group()
def main():
    """Exact verification of finite-dimensional Hopf (super)algebras and triangular structures."""


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@main.command()
@click.argument("path", type=click.Path())
@click.option("--super", "force_super", is_flag=True, help="Require a parity vector and check super axioms.")
@click.option("--triangular", is_flag=True, help="Check the rmatrix field as a triangular structure.")
@click.option("--twist", "twist_path", type=click.Path(), help="File whose twist field is checked against PATH.")
@json_option
def verify(path, force_super, triangular, twist_path, as_json):
    """Check the Hopf axioms, and optionally an R-matrix and a twist."""
    af = _load(path)
    H = af.hopf
    if force_super and not H.is_super:
        raise InputError(f"{path}: --super requires a parity field")
    rep = Report()
    rep.extend(check_hopf(H), "hopf.")
    if triangular:
        if af.rmatrix is None:
            raise InputError(f"{path}: --triangular requires an rmatrix field")
        rep.extend(check_triangular(H, af.rmatrix), "triangular.")
        if rep.ok:
            rep.extend(drinfeld_report(H, af.rmatrix), "drinfeld.")
    J = af.twist
    if twist_path is not None:
        J = _load_twist(twist_path, H)
    if J is not None:
        try:
            rep.extend(check_twist(H, J), "twist.")
        except NotInvertible:
            rep.add("twist.invertible", False)
    _emit(rep, as_json, rep.summary())
    _finish(rep.ok)


def _load_twist(path, H: HopfData) -> PairElement:
    tf = _load(path)
    if tf.twist is None:
        raise InputError(f"{path}: twist field required")
    if tf.twist.dim != H.dim or tf.hopf.order != H.order:
        raise InputError(f"{path}: twist dimension or scalar field does not match")
    return tf.twist


# ---------------------------------------------------------------------------
# example
# ---------------------------------------------------------------------------

def _group(spec: str) -> GroupTable:
    try:
        return GroupTable.from_spec(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _involution(G: GroupTable) -> int:
    """The order-two element in the cyclic factor of the first generator."""
    a = G.generators[0] if G.generators else G.identity
    k = G.element_order(a)
    if k % 2:
        raise InputError("the first generator of the group must have even order")
    x = G.identity
    for _ in range(k // 2):
        x = G.mul(x, a)
    return x


def _build_example(name, lam, dim, group_spec) -> ff.AlgebraFile:
    if name == "sweedler":
        try:
            q = parse_rational(lam)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad --lambda {lam!r}: {exc}") from None
        T = sweedler(CycScalar.rational(q))
        return ff.AlgebraFile(T.hopf, T.r, sweedler_j(CycScalar.rational(q)))
    if name == "group":
        H = group_algebra(_group(group_spec))
        return ff.AlgebraFile(H, PairElement.unit(H))
    if name == "exterior":
        A = exterior_hopf(dim)
        return ff.AlgebraFile(A, PairElement.unit(A))
    if name == "supergroup":
        G = _group(group_spec)
        minus = [[-1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        ident = [[int(i == j) for j in range(dim)] for i in range(dim)]
        act = [Matrix(minus if t == 0 else ident, 1, cols=dim) for t in range(len(G.generators))]
        A = supergroup_algebra(G, dim, act)
        return ff.AlgebraFile(A, PairElement.unit(A))
    if name == "yd-biproduct":
        G = _group(group_spec)
        if not G.is_abelian():
            raise InputError("yd-biproduct needs an abelian group")
        g = _involution(G)
        k = G.element_order(G.generators[0])
        chi = [zeta(k) if k > 2 else -1] + [1] * (len(G.generators) - 1)
        H = yd_biproduct(G, [g] * dim, [chi] * dim, k if k > 2 else 1)
        return ff.AlgebraFile(H, r_u(H, {g: CycScalar.one(H.order)}))
    if name == "ru":
        G = _group(group_spec)
        H = group_algebra(G)
        return ff.AlgebraFile(H, r_u(H, {_involution(G): CycScalar.one()}))
    raise InputError(f"unknown example {name!r}")


@main.command()
@click.argument("name", type=click.Choice(["sweedler", "group", "exterior", "supergroup", "yd-biproduct", "ru"]))
@click.option("--lambda", "lam", default="0", show_default=True, help="Sweedler parameter (rational).")
@click.option("--dim", "dim", default=1, show_default=True, type=click.IntRange(0, 6), help="dim V.")
@click.option("--group", "group_spec", default="Z2", show_default=True, help="Group such as Z2, Z4, Z2xZ2.")
@click.option("-o", "out", type=click.Path(), help="Output file (default stdout).")
def example(name, lam, dim, group_spec, out):
    """Write a named example algebra, with an R-matrix, in canonical form."""
    try:
        af = _build_example(name, lam, dim, group_spec)
    except (ValueError, IndexError) as exc:
        raise InputError(str(exc)) from None
    _write(af, out)


# ---------------------------------------------------------------------------
# correspondence
# ---------------------------------------------------------------------------

@main.command()
@click.argument("path", type=click.Path())
@click.option("--grouplike", "g_text", required=True, help="g as a basis index or coordinates.")
@click.option("-o", "out", type=click.Path())
def bosonize(path, g_text, out):
    """Hopf superalgebra with g -> ordinary Hopf algebra (R-matrix and twist transported)."""
    af = _load(path)
    A = af.hopf
    if not A.is_super:
        raise InputError(f"{path}: bosonize expects a parity field")
    g = _vector_arg(g_text, A)
    try:
        H, _ = to_ordinary(A, g)
        R = transport_r_to_ordinary(A, af.rmatrix, g) if af.rmatrix is not None else None
        J = transport_twist_to_ordinary(A, g, af.twist) if af.twist is not None else None
    except CorrespondenceError as exc:
        raise InputError(str(exc)) from None
    _write(ff.AlgebraFile(H, R, J), out)


@main.command()
@click.argument("path", type=click.Path())
@click.option("--grouplike", "u_text", required=True, help="u as a basis index or coordinates.")
@click.option("-o", "out", type=click.Path())
def unbosonize(path, u_text, out):
    """Ordinary Hopf algebra with an involutive grouplike u -> Hopf superalgebra."""
    af = _load(path)
    H = af.hopf
    if H.is_super:
        raise InputError(f"{path}: unbosonize expects an ordinary Hopf algebra (no parity field)")
    u = _vector_arg(u_text, H)
    try:
        A, _, _ = to_super(H, u)
        R = transport_r_to_super(H, af.rmatrix, u) if af.rmatrix is not None else None
        J = transport_twist(H, u, af.twist) if af.twist is not None else None
    except CorrespondenceError as exc:
        raise InputError(str(exc)) from None
    _write(ff.AlgebraFile(A, R, J), out)


@main.command("twist")
@click.argument("path", type=click.Path())
@click.option("--twist", "twist_path", type=click.Path(), required=True)
@click.option("-o", "out", type=click.Path())
def twist_cmd(path, twist_path, out):
    """Twist the coproduct (and the R-matrix, if present) of PATH."""
    af = _load(path)
    J = _load_twist(twist_path, af.hopf)
    try:
        HJ = twist_hopf(af.hopf, J)
    except (ValueError, NotInvertible) as exc:
        raise InputError(f"{twist_path}: {exc}") from None
    R = twist_r(af.hopf, af.rmatrix, J) if af.rmatrix is not None else None
    _write(ff.AlgebraFile(HJ, R), out)


# ---------------------------------------------------------------------------
# structure queries
# ---------------------------------------------------------------------------

@main.command("minimal-part")
@click.argument("path", type=click.Path())
@json_option
def minimal_part_cmd(path, as_json):
    """Rank of the R-matrix: dimension of the sub-Hopf algebra its tensorands generate."""
    af = _load(path)
    if af.rmatrix is None:
        raise InputError(f"{path}: rmatrix field required")
    space, rank = minimal_part(af.hopf, af.rmatrix)
    minimal = rank == af.hopf.dim
    text = f"rank {rank} of {af.hopf.dim}" + (" (minimal)" if minimal else "")
    _emit({"rank": rank, "dimension": af.hopf.dim, "minimal": minimal, "basis": list(space.basis)}, as_json, text)


@main.command("chevalley")
@click.argument("path", type=click.Path())
@json_option
def chevalley_cmd(path, as_json):
    """Coradical, radical and S^2 criteria for the Chevalley property, and whether they agree."""
    af = _load(path)
    rep = chevalley_report(af.hopf)
    text = "\n".join(f"{k}: {str(rep[k]).lower()}" for k in ("cond3", "cond4", "cond5", "agree", "verdict"))
    _emit(rep, as_json, text)
    _finish(bool(rep["agree"] and rep["verdict"]))


@main.command("grouplikes")
@click.argument("path", type=click.Path())
@json_option
def grouplikes_cmd(path, as_json):
    """All grouplike elements."""
    H = _load(path).hopf
    gs, complete = grouplikes(H)
    text = "\n".join(_vec_text(H, g) for g in gs)
    if not complete:
        text += "\n(enumeration incomplete)"
    _emit({"grouplikes": gs, "complete": complete}, as_json, text)
    sys.exit(EXIT_OK if complete else EXIT_INDETERMINATE)


@main.command("skewprims")
@click.argument("path", type=click.Path())
@click.option("--g", "g_text", required=True, help="Grouplike g as a basis index or coordinates.")
@click.option("--h", "h_text", required=True, help="Grouplike h as a basis index or coordinates.")
@json_option
def skewprims_cmd(path, g_text, h_text, as_json):
    """Basis of {x : Delta x = x (x) g + h (x) x}."""
    H = _load(path).hopf
    g, h = _vector_arg(g_text, H), _vector_arg(h_text, H)
    try:
        space = skew_primitives(H, g, h)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = "\n".join(_vec_text(H, v) for v in space.basis) or "0"
    _emit({"dimension": space.rank, "basis": list(space.basis)}, as_json, text)


@main.command("generation")
@click.argument("path", type=click.Path())
@json_option
def generation_cmd(path, as_json):
    """Whether the algebra is generated by grouplikes and skew-primitives."""
    H = _load(path).hopf
    try:
        ok = generated_by_grouplikes_and_skewprims(H)
    except Indeterminate as exc:
        _emit({"generated": None, "reason": str(exc)}, as_json, f"indeterminate: {exc}")
        sys.exit(EXIT_INDETERMINATE)
    _emit({"generated": ok}, as_json, f"generated by grouplikes and skew-primitives: {str(ok).lower()}")
    _finish(ok)


# ---------------------------------------------------------------------------
# catdim
# ---------------------------------------------------------------------------

@main.group()
def catdim():
    """Integrality scan and Frobenius-Perron dimensions."""


@catdim.command("lemma")
@click.option("--poly", "poly_text", required=True, help='Monic integer polynomial in x, e.g. "x^2-2".')
@click.option("--kmax", default=200, show_default=True, type=click.IntRange(1, 100000))
@json_option
def catdim_lemma(poly_text, kmax, as_json):
    """Scan b_k, c_k for integrality; exit 1 at the first failing k."""
    try:
        Q = IntPoly.parse(poly_text)
        res = integrality_scan(Q, kmax)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    root = has_integer_root(Q)
    if res.status == "fail":
        text = f"{Q}: first failing k = {res.k} (sequence {res.sequence})"
    elif res.status == "pass":
        text = f"{Q}: all k <= {kmax} pass; integer root {root}"
    else:
        text = f"{Q}: inconclusive at kmax = {kmax}"
    obj = {"poly": str(Q), "status": res.status, "k": res.k, "sequence": res.sequence,
           "kmax": kmax, "integer_root": root}
    _emit(obj, as_json, text)
    sys.exit({"pass": EXIT_OK, "fail": EXIT_FAIL}.get(res.status, EXIT_INDETERMINATE))


@catdim.command("fusion")
@click.argument("path", type=click.Path())
@click.option("--object", "obj", type=int, default=None, help="Restrict to one simple object.")
@json_option
def catdim_fusion(path, obj, as_json):
    """FP dimensions, integer eigenvalue candidates and Perron dominance per object."""
    try:
        with open(path, encoding="utf-8") as fh:
            F = ff.parse_fusion(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    objs = range(F.rank) if obj is None else [obj]
    if obj is not None and not 0 <= obj < F.rank:
        raise InputError(f"object {obj} out of range")
    rows, lines, ok = [], [], True
    for i in objs:
        d = fpdim(F, i)
        dom = perron_dominance(F, i)
        ok &= dom
        rows.append({"object": i, "fpdim": d.to_json(), "dim_candidates": dim_candidates(F, i),
                     "perron_dominance": dom})
        val = str(d.value) if d.value is not None else f"root of {d.minpoly} in ({d.lower}, {d.upper}]"
        lines.append(f"V{i}: fpdim {val}; integer eigenvalues {dim_candidates(F, i)}")
    _emit({"objects": rows}, as_json, "\n".join(lines))
    _finish(ok)


if __name__ == "__main__":
    main()
