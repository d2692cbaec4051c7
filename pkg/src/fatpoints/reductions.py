"""Transforms relating Hilbert functions, alpha values, h^0 and effectivity.

Multiplicity sequences are plain tuples of ints.  Oracles are callables:

* an *alpha oracle* maps a normalized sequence ``m`` to ``alpha(m)``, the least
  degree of a nonzero form with the prescribed multiplicities;
* a *dim oracle* maps ``(m, t)`` to ``dim I(m)_t``.

The ambient dimension is bound inside the oracle.
"""

from __future__ import annotations

import re
from math import comb
from typing import Callable, Sequence

from .lattice import DivisorClass

AlphaOracle = Callable[[tuple], int]
DimOracle = Callable[[tuple, int], int]


class InconsistentOracleError(RuntimeError):
    """An oracle returned values that violate a guaranteed bound."""


_TOKEN = re.compile(r"^\s*(-?\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_multiplicities(text: str) -> tuple[int, ...]:
    """Parse ``"3,2^4,1"`` into ``(3, 2, 2, 2, 2, 1)``.  The empty string is ``()``."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        match = _TOKEN.match(tok)
        if match is None:
            raise ValueError(f"malformed multiplicity token {tok!r} in {text!r}")
        value, reps = match.groups()
        out.extend([int(value)] * (int(reps) if reps is not None else 1))
    return tuple(out)


def format_multiplicities(m: Sequence[int]) -> str:
    return ",".join(str(x) for x in m)


def clamp(c: DivisorClass) -> DivisorClass:
    """Replace negative multiplicities by 0.

    A negative ``m_i`` means ``-m_i E_i`` is in the base locus, so dropping it
    does not change ``h^0``.
    """
    return DivisorClass(c.t, tuple(max(x, 0) for x in c.m), c.d)


def normalize(m: Sequence[int]) -> tuple[int, ...]:
    """Clamp, sort non-increasing and drop zeros."""
    return tuple(sorted((x for x in m if x > 0), reverse=True))


def append_simple(m: Sequence[int], i: int) -> tuple[int, ...]:
    if i < 0:
        raise ValueError(f"cannot append a negative number of points ({i})")
    return tuple(m) + (1,) * i


def dim_from_alpha(m: Sequence[int], t: int, alpha_oracle: AlphaOracle, d: int = 2) -> int:
    """Recover ``dim I(m)_t`` from alpha values alone.

    Each generic simple point imposed on a nonempty system cuts the dimension
    by exactly one, so the answer is the least ``j`` with
    ``alpha(m + (1,)*j) > t``.
    """
    m = tuple(m)
    if t < 0:
        return 0
    bound = comb(t + d, d)
    for j in range(bound + 1):
        if alpha_oracle(append_simple(m, j)) > t:
            return j
    raise InconsistentOracleError(
        f"alpha oracle still <= {t} after appending {bound} simple points to {m}"
    )


def alpha_from_dim(m: Sequence[int], dim_oracle: DimOracle) -> int:
    """Least ``t`` with ``dim_oracle(m, t) > 0``.

    ``t = sum(m)`` always works (a product of hyperplanes through the points),
    so the scan stops there.
    """
    m = tuple(m)
    bound = sum(m)
    for t in range(bound + 1):
        if dim_oracle(m, t) > 0:
            return t
    raise InconsistentOracleError(f"dim oracle reports no forms for {m} up to degree {bound}")


def h0_of_class(c: DivisorClass, dim_oracle: DimOracle) -> int:
    """``h^0`` of an arbitrary class via the fat point ideal of its clamped multiplicities."""
    if c.t < 0:
        return 0
    return dim_oracle(normalize(c.m), c.t)


def effective_test(c: DivisorClass, alpha_oracle: AlphaOracle) -> bool:
    """Whether ``c`` is the class of an effective divisor."""
    return c.t >= 0 and c.t >= alpha_oracle(normalize(c.m))
