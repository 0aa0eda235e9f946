"""JSON and CSV encodings shared by the library and the command line."""
from __future__ import annotations

import io
from fractions import Fraction

from .core import Frieze, FriezeError, as_scalar, build_from_first_row, format_scalar


def encode_scalar(x):
    """Fractions become ``{"num": "...", "den": "..."}``; floats stay JSON numbers."""
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    return float(x)


def decode_scalar(obj):
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    if isinstance(obj, bool):
        raise FriezeError("boolean is not a scalar")
    if isinstance(obj, (int, str)):
        return as_scalar(obj)
    if isinstance(obj, float):
        return obj
    raise FriezeError(f"cannot decode scalar {obj!r}")


def frieze_to_json(f: Frieze, full: bool = True) -> dict:
    out = {"n": f.n, "width": f.width, "exact": f.exact,
           "first_row": [encode_scalar(x) for x in f.first_row]}
    if full:
        out["entries"] = [[encode_scalar(x) for x in row] for row in f.rows]
    return out


def frieze_from_json(obj: dict, rebuild: bool = True) -> Frieze:
    """Decode a frieze.

    With ``rebuild`` the frieze is reconstructed from ``first_row`` (and must
    close).  Without it, a supplied ``entries`` array is taken verbatim, which
    is what validation of a possibly corrupted file needs.
    """
    try:
        n = int(obj["n"])
        first = [decode_scalar(x) for x in obj["first_row"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FriezeError(f"malformed frieze JSON: {exc}") from exc
    if len(first) != n:
        raise FriezeError(f"first_row has {len(first)} entries, expected n={n}")
    if "width" in obj and int(obj["width"]) != n - 3:
        raise FriezeError("width must equal n - 3")
    if rebuild or "entries" not in obj:
        return build_from_first_row(first)
    rows = tuple(tuple(decode_scalar(x) for x in row) for row in obj["entries"])
    exact = all(isinstance(x, Fraction) for row in rows for x in row)
    return Frieze(n, rows, exact=exact)


def triangulation_to_json(t) -> dict:
    return {"n": t.n, "diagonals": [list(d) for d in t.diagonals]}


def triangulation_from_json(obj: dict):
    from .triangulations import Triangulation

    return Triangulation.from_diagonals(int(obj["n"]), [tuple(d) for d in obj["diagonals"]])


def sequence_to_csv(values, decimal: bool = False) -> str:
    """Lines ``i,value`` with exact ``p/q`` values, or decimals when asked."""
    buf = io.StringIO()
    for i, x in enumerate(values):
        v = repr(float(x)) if decimal else format_scalar(x)
        buf.write(f"{i},{v}\n")
    return buf.getvalue()
