"""JSON encodings shared by the CLI and the file formats.

Scalar: ``{"idem": [c1, c2]}`` with each complex component either
``{"re": "p/q", "im": "p/q"}`` (exact, strings) or ``{"re": 1.5, "im": 0.0}``
(float).  The Euclidean input form ``{"eucl": [z1, z2]}`` is accepted and
converted on load.  The backend is inferred from the encoding: string
fractions mean exact.

Matrix: ``{"rows": n, "cols": m, "backend": "exact"|"float",
"entries": [[scalar, ...], ...]}`` (row-major).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .lattice import Lattice
from .matrices import BicomplexMatrix, BicomplexVector
from .scalars import (
    EXACT,
    FLOAT,
    BicomplexScalar,
    GaussianRational,
    HyperbolicValue,
)


class FormatError(ValueError):
    """Malformed JSON payload (CLI exit code 2)."""


# -- complex components -------------------------------------------------------

def component_to_json(c) -> dict:
    if isinstance(c, GaussianRational):
        return {"re": str(c.re), "im": str(c.im)}
    return {"re": c.real, "im": c.imag}


def component_from_json(obj, backend: Optional[str] = None):
    if not isinstance(obj, dict) or "re" not in obj or "im" not in obj:
        raise FormatError(f"complex component must be {{re, im}}: {obj!r}")
    re, im = obj["re"], obj["im"]
    inferred = EXACT if isinstance(re, str) or isinstance(im, str) else FLOAT
    backend = backend or inferred
    if backend == EXACT:
        try:
            return GaussianRational(Fraction(str(re)), Fraction(str(im)))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad exact component {obj!r}: {exc}") from exc
    return complex(float(re), float(im))


# -- scalars -------------------------------------------------------------------

def scalar_to_json(s: BicomplexScalar) -> dict:
    return {"idem": [component_to_json(s.c1), component_to_json(s.c2)]}


def scalar_from_json(obj, backend: Optional[str] = None) -> BicomplexScalar:
    if not isinstance(obj, dict):
        raise FormatError(f"scalar must be an object: {obj!r}")
    if "idem" in obj:
        pair = obj["idem"]
        ctor = BicomplexScalar
    elif "eucl" in obj:
        pair = obj["eucl"]
        ctor = None
    else:
        raise FormatError("scalar needs an 'idem' or 'eucl' key")
    if not isinstance(pair, list) or len(pair) != 2:
        raise FormatError("scalar value must be a pair of complex components")
    if backend is None:
        backend = _infer_backend(pair)
    a = component_from_json(pair[0], backend)
    b = component_from_json(pair[1], backend)
    if ctor is BicomplexScalar:
        return BicomplexScalar(a, b)
    return BicomplexScalar.from_euclidean(a, b, backend)


def _infer_backend(components) -> str:
    for comp in components:
        if isinstance(comp, dict) and (
            isinstance(comp.get("re"), str) or isinstance(comp.get("im"), str)
        ):
            return EXACT
    return FLOAT


def hyperbolic_to_json(h: HyperbolicValue) -> dict:
    if isinstance(h.h1, Fraction):
        return {"h": [str(h.h1), str(h.h2)], "squared": h.squared}
    return {"h": [float(h.h1), float(h.h2)], "squared": h.squared}


def hyperbolic_from_json(obj) -> HyperbolicValue:
    if not isinstance(obj, dict) or "h" not in obj:
        raise FormatError("hyperbolic value needs an 'h' key")
    a, b = obj["h"]
    squared = bool(obj.get("squared", False))
    if isinstance(a, str) or isinstance(b, str):
        return HyperbolicValue(Fraction(str(a)), Fraction(str(b)), squared)
    return HyperbolicValue(float(a), float(b), squared)


# -- matrices -------------------------------------------------------------------

def matrix_to_json(m: BicomplexMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "backend": m.backend,
        "entries": [
            [scalar_to_json(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)
        ],
    }


def matrix_from_json(obj, backend: Optional[str] = None) -> BicomplexMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise FormatError("matrix needs an 'entries' key")
    entries = obj["entries"]
    if not isinstance(entries, list) or not entries or not isinstance(entries[0], list):
        raise FormatError("matrix entries must be a nonempty list of rows")
    backend = backend or obj.get("backend") or _infer_matrix_backend(entries)
    if backend not in (EXACT, FLOAT):
        raise FormatError(f"unknown backend {backend!r}")
    scalars = [[scalar_from_json(e, backend) for e in row] for row in entries]
    rows = obj.get("rows", len(scalars))
    cols = obj.get("cols", len(scalars[0]))
    if rows != len(scalars) or any(len(r) != cols for r in scalars):
        raise FormatError("rows/cols fields disagree with the entries")
    return BicomplexMatrix.from_scalar_entries(scalars)


def _infer_matrix_backend(entries) -> str:
    for row in entries:
        for e in row:
            if isinstance(e, dict):
                pair = e.get("idem") or e.get("eucl") or []
                if _infer_backend(pair) == EXACT:
                    return EXACT
    return FLOAT


# -- vectors ---------------------------------------------------------------------

def vector_to_json(v: BicomplexVector) -> dict:
    return {
        "dim": len(v),
        "backend": v.backend,
        "entries": [scalar_to_json(v.entry(i)) for i in range(len(v))],
    }


def vector_from_json(obj, backend: Optional[str] = None) -> BicomplexVector:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise FormatError("vector needs an 'entries' key")
    entries = obj["entries"]
    backend = backend or obj.get("backend") or _infer_backend(
        [e.get("idem", e.get("eucl", [None, None]))[0] for e in entries if isinstance(e, dict)]
    )
    scalars = [scalar_from_json(e, backend) for e in entries]
    return BicomplexVector.from_scalars(scalars)


# -- lattices ----------------------------------------------------------------------

def _basis_json(sub) -> dict:
    def vecs(s):
        return [[component_to_json(c) for c in v] for v in s.basis]

    if hasattr(sub, "s1"):
        return {"basis": {"s1": vecs(sub.s1), "s2": vecs(sub.s2)}}
    return {"basis": vecs(sub)}


def lattice_to_json(lat: Lattice) -> dict:
    return {
        "nodes": [
            {"label": n.label, "dims": list(n.dims), **_basis_json(n.subspace)}
            for n in lat.nodes
        ],
        "covers": [list(c) for c in lat.covers],
        "metadata": lat.metadata,
    }
