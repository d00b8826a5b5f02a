"""Text and JSON document formats for fields, polynomials, and bases.

Polynomials travel as text in either the sparse algebraic form
("X^8+X^4+X^3+X^2+1") or the dense ascending coefficient list
("1,0,1,1,1,0,0,0,1"); emitters always write the sparse form, so a document
that has been written once round-trips byte-for-byte.

Document layouts (JSON objects):

* field:            {"p": int, "m": int, "modulus": poly-text}
* basis / matrix:   {"ell": int, "m": int, "field": {...}, "rows": [[poly-text, ...], ...]}
* cyclic code:      {"m": int, "field": {...}, "generator": poly-text}
"""

from __future__ import annotations

import json

from .cyclic import CyclicCode, cyclic_code_new
from .errors import PolyParseError
from .field import Field, coeffs_to_poly_text, field_new, poly_text_to_coeffs
from .polyring import Poly
from .qcmodule import GeneratingMatrix, RgbPotBasis

__all__ = [
    "poly_from_text",
    "poly_to_text",
    "field_to_doc",
    "field_from_doc",
    "basis_to_doc",
    "basis_from_doc",
    "generating_matrix_to_doc",
    "generating_matrix_from_doc",
    "cyclic_to_doc",
    "cyclic_from_doc",
    "canonical_json",
]


def poly_from_text(field: Field, text: str) -> Poly:
    """Parse either polynomial text format into a polynomial over the
    field.  Negative coefficients are folded through field negation;
    coefficients at or beyond q are rejected rather than reduced."""
    raw = poly_text_to_coeffs(text)
    codes = []
    for c in raw:
        if c < 0:
            if -c >= field.q:
                raise PolyParseError(
                    f"coefficient {c} outside the code range of GF({field.q})")
            codes.append(field.neg(-c))
        elif c >= field.q:
            raise PolyParseError(
                f"coefficient {c} outside the code range of GF({field.q})")
        else:
            codes.append(c)
    return Poly(field, codes)


def poly_to_text(p: Poly) -> str:
    """Sparse algebraic text for the polynomial ("0" for the zero
    polynomial)."""
    return coeffs_to_poly_text(p.coeffs)


def _require(doc, key, kinds, what):
    try:
        value = doc[key]
    except (KeyError, TypeError):
        raise PolyParseError(f"{what} document is missing field '{key}'") from None
    if not isinstance(value, kinds):
        raise PolyParseError(f"{what} document field '{key}' has the wrong type")
    return value


def field_to_doc(field: Field) -> dict:
    return {
        "p": field.p,
        "m": field.m,
        "modulus": coeffs_to_poly_text(field.modulus),
    }


def field_from_doc(doc) -> Field:
    p = _require(doc, "p", int, "field")
    m = _require(doc, "m", int, "field")
    text = _require(doc, "modulus", str, "field")
    prime = field_new(p) if m > 1 else None
    if m == 1:
        return field_new(p)
    modulus = poly_from_text(prime, text)
    return field_new(p, m, modulus.coeffs)


def _rows_to_doc(rows) -> list:
    return [[poly_to_text(entry) for entry in row] for row in rows]


def _rows_from_doc(field: Field, rows, ell: int) -> list:
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != ell:
            raise PolyParseError(f"each row must list exactly {ell} polynomials")
        out.append([poly_from_text(field, _as_text(entry)) for entry in row])
    return out


def _as_text(entry) -> str:
    if not isinstance(entry, str):
        raise PolyParseError("matrix entries must be polynomial text strings")
    return entry


def basis_to_doc(b: RgbPotBasis) -> dict:
    return {
        "ell": b.ell,
        "m": b.m,
        "field": field_to_doc(b.field),
        "rows": _rows_to_doc(b.matrix),
    }


def basis_from_doc(doc) -> RgbPotBasis:
    ell = _require(doc, "ell", int, "basis")
    m = _require(doc, "m", int, "basis")
    field = field_from_doc(_require(doc, "field", dict, "basis"))
    rows = _require(doc, "rows", list, "basis")
    if len(rows) != ell:
        raise PolyParseError(f"basis document must have exactly {ell} rows")
    return RgbPotBasis(field, ell, m, _rows_from_doc(field, rows, ell))


def generating_matrix_to_doc(g: GeneratingMatrix) -> dict:
    return {
        "ell": g.ell,
        "m": g.m,
        "field": field_to_doc(g.field),
        "rows": _rows_to_doc(g.rows),
    }


def generating_matrix_from_doc(doc) -> GeneratingMatrix:
    ell = _require(doc, "ell", int, "generating matrix")
    m = _require(doc, "m", int, "generating matrix")
    field = field_from_doc(_require(doc, "field", dict, "generating matrix"))
    rows = _require(doc, "rows", list, "generating matrix")
    return GeneratingMatrix(field, ell, m, _rows_from_doc(field, rows, ell))


def cyclic_to_doc(code: CyclicCode) -> dict:
    return {
        "m": code.m,
        "field": field_to_doc(code.field),
        "generator": poly_to_text(code.g),
    }


def cyclic_from_doc(doc) -> CyclicCode:
    m = _require(doc, "m", int, "cyclic code")
    field = field_from_doc(_require(doc, "field", dict, "cyclic code"))
    g = poly_from_text(field, _require(doc, "generator", str, "cyclic code"))
    return cyclic_code_new(m, g)


def canonical_json(doc) -> str:
    """Deterministic JSON: sorted keys, no whitespace.  Identical documents
    always produce identical bytes."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
