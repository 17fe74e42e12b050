"""Canonical JSON documents for Hopf (super)algebras with optional R-matrix and twist, and fusion rings.

Scalars are written as a reduced rational string ("3/5") when rational and
otherwise as the list of power-basis coordinates over Q(zeta_n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catdim import FusionRingData
from .exact import CycScalar, Matrix, Tensor3, euler_phi, parse_rational
from .hopf import HopfData, PairElement, hopf_from_structure


class FormatError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass
class AlgebraFile:
    hopf: HopfData
    rmatrix: PairElement | None = None
    twist: PairElement | None = None


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def scalar_to_doc(c: CycScalar):
    if c.is_rational():
        return str(c.to_rational())
    return [str(q) for q in c.c]


def scalar_from_doc(x, order: int, field: str) -> CycScalar:
    try:
        if isinstance(x, list):
            if len(x) != euler_phi(order):
                raise FormatError(field, f"expected {euler_phi(order)} cyclotomic coordinates, got {len(x)}")
            return CycScalar(order, [parse_rational(q) for q in x])
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise FormatError(field, f"malformed scalar {x!r}")
        return CycScalar.rational(parse_rational(x), order)
    except FormatError:
        raise
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(field, f"malformed scalar {x!r} ({exc})") from None


# ---------------------------------------------------------------------------
# algebra files
# ---------------------------------------------------------------------------

def _index(x, dim: int, field: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(field, f"index {x!r} is not an integer")
    if not 0 <= x < dim:
        raise FormatError(field, f"index {x} out of range for dimension {dim}")
    return x


def _vector(doc, key: str, dim: int, order: int) -> tuple:
    if key not in doc:
        raise FormatError(key, f"{key} required")
    v = doc[key]
    if not isinstance(v, list) or len(v) != dim:
        raise FormatError(key, f"expected a list of {dim} scalars")
    return tuple(scalar_from_doc(x, order, f"{key}[{i}]") for i, x in enumerate(v))


def _quadruples(doc, key: str, dim: int, order: int) -> Tensor3:
    if key not in doc:
        raise FormatError(key, f"{key} required")
    rows = doc[key]
    if not isinstance(rows, list):
        raise FormatError(key, "expected a list of [i, j, k, scalar] entries")
    entries = {}
    for n, row in enumerate(rows):
        f = f"{key}[{n}]"
        if not isinstance(row, list) or len(row) != 4:
            raise FormatError(f, "expected [i, j, k, scalar]")
        idx = tuple(_index(row[t], dim, f) for t in range(3))
        if idx in entries:
            raise FormatError(f, f"duplicate entry {list(idx)}")
        entries[idx] = scalar_from_doc(row[3], order, f)
    return Tensor3(dim, entries)


def _pairs(doc, key: str, dim: int, order: int) -> PairElement:
    rows = doc[key]
    if not isinstance(rows, list):
        raise FormatError(key, "expected a list of [i, j, scalar] entries")
    coeffs = {}
    for n, row in enumerate(rows):
        f = f"{key}[{n}]"
        if not isinstance(row, list) or len(row) != 3:
            raise FormatError(f, "expected [i, j, scalar]")
        idx = (_index(row[0], dim, f), _index(row[1], dim, f))
        if idx in coeffs:
            raise FormatError(f, f"duplicate entry {list(idx)}")
        coeffs[idx] = scalar_from_doc(row[2], order, f)
    return PairElement(dim, coeffs, order)


def algebra_from_doc(doc) -> AlgebraFile:
    if not isinstance(doc, dict):
        raise FormatError("document", "expected a JSON object")
    field = doc.get("scalar_field", {"cyclotomic_order": 1})
    order = field.get("cyclotomic_order") if isinstance(field, dict) else None
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise FormatError("scalar_field.cyclotomic_order", f"bad cyclotomic order {order!r}")
    if "dimension" not in doc:
        raise FormatError("dimension", "dimension required")
    dim = doc["dimension"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FormatError("dimension", f"bad dimension {dim!r}")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
            raise FormatError("labels", f"expected {dim} strings")
        labels = tuple(labels)
    parity = doc.get("parity")
    if parity is not None:
        if not isinstance(parity, list) or len(parity) != dim or any(p not in (0, 1) or isinstance(p, bool) for p in parity):
            raise FormatError("parity", f"expected {dim} entries each 0 or 1")
    unit = _vector(doc, "unit", dim, order)
    mult = _quadruples(doc, "mult", dim, order)
    comult = _quadruples(doc, "comult", dim, order)
    counit = _vector(doc, "counit", dim, order)
    if "antipode" not in doc:
        raise FormatError("antipode", "antipode required")
    S = doc["antipode"]
    if not isinstance(S, list) or len(S) != dim or any(not isinstance(r, list) or len(r) != dim for r in S):
        raise FormatError("antipode", f"expected a {dim} x {dim} matrix")
    S = Matrix([[scalar_from_doc(x, order, f"antipode[{i}][{j}]") for j, x in enumerate(r)]
                for i, r in enumerate(S)], order)
    H = hopf_from_structure(dim, unit, mult, comult, counit, S, order, labels, parity)
    R = _pairs(doc, "rmatrix", dim, order) if doc.get("rmatrix") is not None else None
    J = _pairs(doc, "twist", dim, order) if doc.get("twist") is not None else None
    return AlgebraFile(H, R, J)


def algebra_to_doc(af: AlgebraFile) -> dict:
    H = af.hopf
    doc = {
        "scalar_field": {"cyclotomic_order": H.order},
        "dimension": H.dim,
        "labels": list(H.basis_labels()),
        "unit": [scalar_to_doc(c) for c in H.alg.unit],
        "mult": [[i, j, k, scalar_to_doc(c)] for (i, j, k), c in H.alg.mult.items()],
        "comult": [[i, j, k, scalar_to_doc(c)] for (i, j, k), c in H.comult.items()],
        "counit": [scalar_to_doc(c) for c in H.counit],
        "antipode": [[scalar_to_doc(x) for x in row] for row in H.antipode.entries],
    }
    if H.is_super:
        doc["parity"] = list(H.parity)
    for key, X in (("rmatrix", af.rmatrix), ("twist", af.twist)):
        if X is not None:
            doc[key] = [[i, j, scalar_to_doc(c)] for (i, j), c in sorted(X.coeffs.items())]
    return doc


def dumps(doc: dict) -> str:
    """Canonical text: sorted top-level keys, one key per line, compact values."""
    lines = [f"  {json.dumps(k)}: {json.dumps(doc[k], separators=(', ', ': '))}" for k in sorted(doc)]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}", f"invalid JSON ({exc.msg})") from None


def parse_algebra(text: str) -> AlgebraFile:
    return algebra_from_doc(loads(text))


def emit_algebra(af: AlgebraFile | HopfData) -> str:
    if isinstance(af, HopfData):
        af = AlgebraFile(af)
    return dumps(algebra_to_doc(af))


def canonicalize(text: str) -> str:
    return emit_algebra(parse_algebra(text))


def read_algebra(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def write_algebra(path, af) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_algebra(af))


# ---------------------------------------------------------------------------
# fusion rings
# ---------------------------------------------------------------------------

def fusion_from_doc(doc) -> FusionRingData:
    if not isinstance(doc, dict):
        raise FormatError("document", "expected a JSON object")
    for key in ("rank", "unit", "matrices"):
        if key not in doc:
            raise FormatError(key, f"{key} required")
    mats = doc["matrices"]
    if not isinstance(mats, list) or any(
            not isinstance(M, list) or any(not isinstance(r, list) for r in M) for M in mats):
        raise FormatError("matrices", "expected a list of integer matrices")
    for a, M in enumerate(mats):
        for b, r in enumerate(M):
            for c, x in enumerate(r):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise FormatError(f"matrices[{a}][{b}][{c}]", f"{x!r} is not an integer")
    try:
        return FusionRingData(doc["rank"], doc["unit"], tuple(mats))
    except (ValueError, TypeError) as exc:
        raise FormatError("matrices", str(exc)) from None


def fusion_to_doc(F: FusionRingData) -> dict:
    return {"rank": F.rank, "unit": F.unit, "matrices": [[list(r) for r in M] for M in F.matrices]}


def parse_fusion(text: str) -> FusionRingData:
    return fusion_from_doc(loads(text))


def emit_fusion(F: FusionRingData) -> str:
    return dumps(fusion_to_doc(F))
