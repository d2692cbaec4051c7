"""Divisor classes on blowups of projective space at generic points.

A class ``t E_0 - m_1 E_1 - ... - m_r E_r`` is stored as the degree ``t`` and
the multiplicities ``(m_1, ..., m_r)``.  On the plane (``d == 2``) the Picard
lattice carries the diagonal form ``diag(1, -1, ..., -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest


class UnsupportedDimensionError(ValueError):
    """Raised when an operation only makes sense for plane blowups."""


def _strip(m: tuple[int, ...]) -> tuple[int, ...]:
    end = len(m)
    while end and m[end - 1] == 0:
        end -= 1
    return m[:end]


@dataclass(frozen=True, eq=False)
class DivisorClass:
    """The class ``(t; m_1, ..., m_r)`` on ``X(r, d)``.

    Equality and hashing ignore trailing zero multiplicities, so a class on
    ``X(s, d)`` is identified with its pullback to ``X(r, d)`` for ``r > s``.
    """

    t: int
    m: tuple[int, ...] = ()
    d: int = 2

    def __post_init__(self):
        object.__setattr__(self, "t", int(self.t))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if self.d < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {self.d}")

    @property
    def r(self) -> int:
        return len(self.m)

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return (self.t, _strip(self.m), self.d) == (other.t, _strip(other.m), other.d)

    def __hash__(self):
        return hash((self.t, _strip(self.m), self.d))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _check_same_dim(self, other)
        m = tuple(a + b for a, b in zip_longest(self.m, other.m, fillvalue=0))
        return DivisorClass(self.t + other.t, m, self.d)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.t, tuple(-x for x in self.m), self.d)

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.t, tuple(k * x for x in self.m), self.d)

    def padded(self, r: int) -> DivisorClass:
        """Return the same class with at least ``r`` multiplicity slots."""
        if r <= self.r:
            return self
        return DivisorClass(self.t, self.m + (0,) * (r - self.r), self.d)

    def trimmed(self) -> DivisorClass:
        return DivisorClass(self.t, _strip(self.m), self.d)

    def __str__(self):
        return format_class(self)

    def __repr__(self):
        return f"DivisorClass({format_class(self)!r}, d={self.d})"


@dataclass(frozen=True)
class BlowupContext:
    """The blowup ``X(r, d)`` of projective ``d``-space at ``r`` generic points."""

    r: int
    d: int = 2

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"number of points must be >= 0, got {self.r}")
        if self.d < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {self.d}")


def _check_same_dim(a: DivisorClass, b: DivisorClass):
    if a.d != b.d:
        raise ValueError(f"classes live on different ambient spaces (d={a.d} vs d={b.d})")


def _require_plane(d: int):
    if d != 2:
        raise UnsupportedDimensionError(
            f"intersection theory is only available on plane blowups (d=2), got d={d}"
        )


def parse_class(text: str, d: int = 2) -> DivisorClass:
    """Parse the textual form ``"t;m1,m2,...,mr"`` (``"t;"`` when r = 0)."""
    if ";" not in text:
        raise ValueError(f"divisor class must look like 't;m1,...,mr', got {text!r}")
    head, _, tail = text.partition(";")
    try:
        t = int(head.strip())
        tail = tail.strip()
        m = tuple(int(x) for x in tail.split(",")) if tail else ()
    except ValueError:
        raise ValueError(f"malformed divisor class {text!r}") from None
    return DivisorClass(t, m, d)


def format_class(c: DivisorClass) -> str:
    return f"{c.t};" + ",".join(str(x) for x in c.m)


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number ``a . b`` on a plane blowup."""
    _check_same_dim(a, b)
    _require_plane(a.d)
    return a.t * b.t - sum(x * y for x, y in zip(a.m, b.m))


def canonical(ctx: BlowupContext) -> DivisorClass:
    """``K = -3 E_0 + E_1 + ... + E_r``, i.e. the class ``(-3; -1, ..., -1)``."""
    _require_plane(ctx.d)
    return DivisorClass(-3, (-1,) * ctx.r, 2)


def _k_degree(c: DivisorClass) -> int:
    # c . K without materializing K
    return -3 * c.t + sum(c.m)


def self_intersection(c: DivisorClass) -> int:
    return intersect(c, c)


def k_degree(c: DivisorClass) -> int:
    """``c . K``."""
    _require_plane(c.d)
    return _k_degree(c)


def arithmetic_genus(c: DivisorClass) -> int:
    """Arithmetic genus from ``2g - 2 = C^2 + C.K``."""
    s = self_intersection(c) + _k_degree(c)
    assert s % 2 == 0
    return s // 2 + 1


def expected_dim(c: DivisorClass) -> int:
    """Riemann-Roch count ``chi = (C^2 - C.K)/2 + 1``; may be negative."""
    s = self_intersection(c) - _k_degree(c)
    assert s % 2 == 0
    return s // 2 + 1
