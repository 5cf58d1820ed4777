"""Algebra documents: JSON files (``*.alg``) describing a multiplication table.

Example::

    {"name": "B", "dim": 2, "basis": ["e1", "e2"], "skew": false,
     "products": [{"left": "e1", "right": "e1", "result": {"e2": 1}}]}

Coefficients are integers or strings ``"p/q"``.  Unlisted products are zero;
with ``"skew": true`` each listed ``x*y`` (``x != y``) also sets ``y*x = -x*y``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..table_algebra import AlgebraError, AlgebraTable, make_algebra

__all__ = [
    "DocumentError",
    "BUILTIN_ALGEBRAS",
    "builtin_algebra",
    "dump_algebra",
    "load_algebra",
    "parse_algebra",
]

BUILTIN_ALGEBRAS = ("A", "B", "AplusB", "C", "D")


class DocumentError(ValueError):
    """Schema violation; the message starts with the offending field path."""


def _coeff(value, path: str):
    if isinstance(value, bool):
        raise DocumentError(f"{path}: expected a rational, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{path}: {value!r} is not a rational 'p/q'") from None
    raise DocumentError(f"{path}: expected an integer or a 'p/q' string, got {type(value).__name__}")


def _require(doc: dict, key: str, kind, path: str = ""):
    if key not in doc:
        raise DocumentError(f"{path}{key}: missing")
    value = doc[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise DocumentError(f"{path}{key}: expected {getattr(kind, '__name__', kind)}")
    return value


def parse_algebra(text: str) -> AlgebraTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"<document>: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("<document>: expected a JSON object")
    unknown = set(doc) - {"name", "dim", "basis", "skew", "products", "comment"}
    if unknown:
        raise DocumentError(f"{sorted(unknown)[0]}: unknown field")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("name: expected str")
    dim = _require(doc, "dim", int)
    basis = _require(doc, "basis", list)
    for i, b in enumerate(basis):
        if not isinstance(b, str) or not b.isidentifier():
            raise DocumentError(f"basis[{i}]: basis names must be identifiers")
    if len(basis) != dim:
        raise DocumentError(f"basis: dim is {dim} but {len(basis)} names are listed")
    if len(set(basis)) != len(basis):
        raise DocumentError("basis: names must be distinct")
    skew = doc.get("skew", False)
    if not isinstance(skew, bool):
        raise DocumentError("skew: expected a boolean")
    products = doc.get("products", [])
    if not isinstance(products, list):
        raise DocumentError("products: expected a list")
    declared = set(basis)
    entries = []
    for i, entry in enumerate(products):
        path = f"products[{i}]."
        if not isinstance(entry, dict):
            raise DocumentError(f"products[{i}]: expected an object")
        left = _require(entry, "left", str, path)
        right = _require(entry, "right", str, path)
        result = _require(entry, "result", dict, path)
        for key, n in (("left", left), ("right", right)):
            if n not in declared:
                raise DocumentError(f"{path}{key}: unknown basis name {n!r}")
        coeffs = {}
        for n, v in result.items():
            if n not in declared:
                raise DocumentError(f"{path}result.{n}: unknown basis name {n!r}")
            coeffs[n] = _coeff(v, f"{path}result.{n}")
        entries.append((left, right, coeffs))
    try:
        return make_algebra(dim, basis, entries, skew_fill=skew, name=name)
    except AlgebraError as exc:
        raise DocumentError(f"products: {exc}") from None


def load_algebra(path: str | Path) -> AlgebraTable:
    """Load a document from ``path``; bare builtin names (``"A"``) also work."""
    p = Path(path)
    if not p.exists() and str(path).removesuffix(".alg") in BUILTIN_ALGEBRAS:
        return builtin_algebra(str(path).removesuffix(".alg"))
    return parse_algebra(p.read_text())


def builtin_algebra(name: str) -> AlgebraTable:
    """One of the shipped example algebras: A, B, AplusB, C, D."""
    if name not in BUILTIN_ALGEBRAS:
        raise KeyError(f"no builtin algebra {name!r}")
    text = resources.files("nal").joinpath("data", f"{name}.alg").read_text()
    return parse_algebra(text)


def dump_algebra(alg: AlgebraTable) -> str:
    products = []
    for left, right, result in alg.entries():
        products.append({"left": left, "right": right,
                         "result": {k: v if isinstance(v, int) else str(v) for k, v in result.items()}})
    doc = {"name": alg.name, "dim": alg.dim, "basis": list(alg.basis_names), "skew": False,
           "products": products}
    return json.dumps(doc, indent=2)
