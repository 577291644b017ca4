"""Numeric layer: exact rationals side by side with binary64.

Distance values are plain Python numbers. ints and Fractions are "exact";
floats are "approximate" and every comparison between them goes through an
absolute-or-relative tolerance. Exact values never compare fuzzily.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import InputFormatError

Number = Union[int, Fraction, float]

DEFAULT_TOL = 1e-9


def is_exact(x: Number) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def close(a: Number, b: Number, tol: float = DEFAULT_TOL) -> bool:
    """Equality test; exact for exact pairs, tolerant otherwise."""
    if is_exact(a) and is_exact(b):
        return a == b
    x, y = float(a), float(b)
    if x == y:
        return True
    return abs(x - y) <= max(tol, tol * max(abs(x), abs(y)))


def leq(a: Number, b: Number, tol: float = DEFAULT_TOL) -> bool:
    """a <= b, up to tolerance in float mode."""
    if is_exact(a) and is_exact(b):
        return a <= b
    return float(a) <= float(b) or close(a, b, tol)


def positive(a: Number, tol: float = DEFAULT_TOL) -> bool:
    """Strictly positive beyond tolerance."""
    return not leq(a, 0, tol)


def parse_number(raw: object) -> Number:
    """Decode one JSON numeric entry: a number, or a "p/q" string."""
    if isinstance(raw, str):
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"bad rational literal {raw!r}") from exc
        return value
    if isinstance(raw, bool):
        raise InputFormatError(f"boolean {raw!r} is not a distance")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        return raw
    raise InputFormatError(f"cannot read {raw!r} as a number")


def format_number(x: Number) -> object:
    """JSON-ready form: exact values become "p/q" strings, floats stay floats."""
    if is_exact(x):
        return str(Fraction(x))
    return float(x)


def coerce_entries(values: Iterable[Number]) -> tuple[list[Number], bool]:
    """Normalize a batch of numbers to one mode.

    Returns (converted values, exact flag). ints are mode-neutral and adapt;
    a genuine Fraction mixed with a float is rejected.
    """
    vals = list(values)
    has_float = any(isinstance(v, float) for v in vals)
    if not has_float:
        return vals, True
    for v in vals:
        if isinstance(v, Fraction) and v.denominator != 1:
            raise InputFormatError(
                "matrix mixes exact rationals with floats; pick one mode"
            )
    return [float(v) for v in vals], False
