"""Disbelief degrees: non-negative integers extended with infinity.

A degree is a plain non-negative ``int`` or ``INF`` (``math.inf``).  Python
integers are arbitrary precision, so finite addition is always exact; there
is no machine word to wrap around.  ``INF`` saturates under addition
(``INF + c == INF``) and is the identity's absorbing end under ``min``
(``min(INF, c) == c``), which is exactly the arithmetic the calculus needs,
so degrees are combined with the ordinary ``+`` and ``min`` operators.

Belief values extend the same picture to signed integers with both
infinities; they share the text encoding ("inf" / "-inf") defined here.
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import AllInfinite

INF: float = math.inf

#: A non-negative ``int``, or ``INF``.
Degree = int | float

#: An ``int``, ``INF``, or ``-INF`` (codomain of belief and scalar utility).
Signed = int | float


def is_degree(value: object) -> bool:
    """True for a non-negative int or ``INF``; bools do not count."""
    if isinstance(value, float) and math.isinf(value) and value > 0:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def check_degree(value: object) -> Degree:
    """Return ``value`` unchanged if it is a valid degree, else raise."""
    if is_degree(value):
        return value  # type: ignore[return-value]
    raise TypeError(f"not a disbelief degree: {value!r} (need a non-negative int or INF)")


def check_degrees(values: Iterable[object]) -> tuple[Degree, ...]:
    return tuple(check_degree(v) for v in values)


def normalize_degrees(values: Iterable[object]) -> tuple[Degree, ...]:
    """Shift a degree vector so its minimum is zero.

    The finite minimum is subtracted from every finite entry; infinite
    entries stay infinite.  Raises :class:`AllInfinite` when there is no
    finite entry to anchor the shift.

    >>> normalize_degrees((3, 5, INF))
    (0, 2, inf)
    """
    vec = check_degrees(values)
    finite = [v for v in vec if v != INF]
    if not finite:
        raise AllInfinite("every degree is infinite; nothing to normalize")
    low = min(finite)
    return tuple(v if v == INF else v - low for v in vec)


def format_degree(value: Degree) -> str:
    return "inf" if value == INF else str(value)


def parse_degree(raw: object) -> Degree:
    """Accept an int, or the string "inf", as written in problem files."""
    if raw == "inf":
        return INF
    if isinstance(raw, int) and not isinstance(raw, bool) and raw >= 0:
        return raw
    raise TypeError(f"not a degree: {raw!r} (need a non-negative int or \"inf\")")


def format_signed(value: Signed) -> str:
    """Signed integers with explicit-sign infinities, as the CLI prints them."""
    if value == INF:
        return "+inf"
    if value == -INF:
        return "-inf"
    return str(value)


def parse_signed(raw: object) -> Signed:
    if raw in ("inf", "+inf"):
        return INF
    if raw == "-inf":
        return -INF
    if isinstance(raw, int) and not isinstance(raw, bool):
        return raw
    raise TypeError(f"not a signed value: {raw!r}")
