"""Canonical report formatting.

Identical inputs must produce byte-identical reports, so rationals are
rendered "num/den" (integers as plain ints), floats are rounded to 12
significant digits, and JSON is emitted with sorted keys and fixed
separators.
"""

import hashlib
import json
from fractions import Fraction


def number_token(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if isinstance(x, float):
        return float(f"{x:.12g}")
    raise TypeError(f"cannot serialize {type(x).__name__}")


def gram_tokens(gram):
    """Row-major entry list from an ExactMatrix or a numpy array."""
    if hasattr(gram, "entries_row_major"):
        return [number_token(x) for x in gram.entries_row_major()]
    return [number_token(float(x)) for row in gram for x in row]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def gram_digest(gram) -> str:
    return hashlib.sha256(canonical_json(gram_tokens(gram)).encode()).hexdigest()
