"""JSON file formats for ADHM data and loop matrices.

ADHM files hold ``d, alpha, beta, a, b`` with matrices as row-major nested
lists; entries are strings ``"p/q"`` in lowest terms or integers. Loop matrix
files hold a 2x2 nested list (optionally under ``"matrix"``) whose entries map
exponents to coefficients, e.g. ``{"-1": "1/2", "0": 1}``.
"""
import json
import re
from fractions import Fraction
from math import gcd

from .core.laurent import LaurentPoly
from .core.matrix import LAURENT, QQ, Matrix
from .errors import MalformedInputError
from .monad import ADHMData

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise MalformedInputError(f"not a rational entry: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, str):
        raise MalformedInputError(f"not a rational entry: {x!r}")
    m = _RATIONAL.match(x)
    if not m:
        raise MalformedInputError(f"not a rational entry: {x!r}")
    p = int(m.group(1))
    if m.group(2) is None:
        return Fraction(p)
    q = int(m.group(2))
    if q == 0:
        raise MalformedInputError(f"zero denominator in {x!r}")
    if gcd(p, q) != 1 or q == 1:
        raise MalformedInputError(f"{x!r} is not in lowest terms")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_vector(text: str) -> tuple:
    """``"1,0,1/2"`` -> rationals."""
    try:
        return tuple(parse_rational(p.strip()) for p in text.split(","))
    except MalformedInputError:
        raise
    except Exception as exc:
        raise MalformedInputError(f"bad vector {text!r}") from exc


def _rational_matrix(rows, nrows, ncols, name):
    if not isinstance(rows, list) or len(rows) != nrows:
        raise MalformedInputError(f"{name} must have {nrows} rows")
    out = []
    for r in rows:
        if not isinstance(r, list) or len(r) != ncols:
            raise MalformedInputError(f"{name} rows must have {ncols} entries")
        out.append([parse_rational(x) for x in r])
    return Matrix(out, ncols, QQ)


def parse_matrix(obj, name="matrix") -> Matrix:
    if not isinstance(obj, list) or not obj or not isinstance(obj[0], list):
        raise MalformedInputError(f"{name} must be a nonempty nested list")
    return _rational_matrix(obj, len(obj), len(obj[0]), name)


def adhm_from_json(obj) -> ADHMData:
    if not isinstance(obj, dict):
        raise MalformedInputError("ADHM document must be an object")
    missing = {"d", "alpha", "beta", "a", "b"} - set(obj)
    if missing:
        raise MalformedInputError(f"missing fields: {', '.join(sorted(missing))}")
    d = obj["d"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise MalformedInputError("d must be a nonnegative integer")
    return ADHMData(
        d,
        _rational_matrix(obj["alpha"], d, d, "alpha"),
        _rational_matrix(obj["beta"], d, d, "beta"),
        _rational_matrix(obj["a"], d, 2, "a"),
        _rational_matrix(obj["b"], d, 2, "b"),
    )


def _matrix_json(m: Matrix):
    return [[format_rational(x) for x in r] for r in m.rows()]


def adhm_to_json(data: ADHMData) -> dict:
    return {
        "d": data.d,
        "alpha": _matrix_json(data.alpha),
        "beta": _matrix_json(data.beta),
        "a": _matrix_json(data.a),
        "b": _matrix_json(data.b),
    }


def _laurent_from_json(obj) -> LaurentPoly:
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return LaurentPoly(parse_rational(obj))
    if not isinstance(obj, dict):
        raise MalformedInputError(f"loop matrix entry must be an exponent map, got {obj!r}")
    terms = {}
    for k, v in obj.items():
        try:
            e = int(k)
        except (TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad exponent {k!r}") from exc
        terms[e] = terms.get(e, Fraction(0)) + parse_rational(v)
    return LaurentPoly(terms)


def loop_matrix_from_json(obj) -> Matrix:
    if isinstance(obj, dict):
        if "matrix" not in obj:
            raise MalformedInputError("loop matrix document needs a 'matrix' field")
        obj = obj["matrix"]
    if not isinstance(obj, list) or len(obj) != 2 or any(
            not isinstance(r, list) or len(r) != 2 for r in obj):
        raise MalformedInputError("loop matrix must be 2x2")
    return Matrix([[_laurent_from_json(x) for x in r] for r in obj], 2, LAURENT)


def laurent_to_json(p: LaurentPoly) -> dict:
    return {str(e): format_rational(c) for e, c in p.items()}


def loop_matrix_to_json(m: Matrix) -> dict:
    return {"matrix": [[laurent_to_json(x) for x in r] for r in m.rows()]}


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: invalid JSON ({exc.msg})") from exc


def load_adhm(path) -> ADHMData:
    return adhm_from_json(_read(path))


def load_loop_matrix(path) -> Matrix:
    return loop_matrix_from_json(_read(path))


def dumps(obj: dict) -> str:
    """One field per line, each value compact; keys keep insertion order."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in obj.items())
    return "{\n" + body + "\n}"
