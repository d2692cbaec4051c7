"""Quadratic Cremona action on plane classes, standard form and (-1)-classes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .lattice import DivisorClass, _require_plane, format_class, parse_class


class UnsupportedRangeError(ValueError):
    """Raised for enumeration requests with infinitely many answers."""


@dataclass(frozen=True)
class CremonaStep:
    ijk: tuple[int, int, int]
    k0: int

    def to_json(self):
        return {"op": "cremona", "ijk": list(self.ijk), "k0": self.k0}


@dataclass(frozen=True)
class ClampStep:
    index: int
    old: int

    def to_json(self):
        return {"op": "clamp", "index": self.index, "old": self.old}


@dataclass(frozen=True)
class SortStep:
    # perm[k] is the (1-based) old position of the entry that lands at position k+1
    perm: tuple[int, ...]

    def to_json(self):
        return {"op": "sort", "perm": list(self.perm)}


Step = Union[CremonaStep, ClampStep, SortStep]


@dataclass
class CremonaTrace:
    """Audit log of :func:`standardize`.  Indices are 1-based."""

    initial: DivisorClass
    final: DivisorClass
    steps: list[Step] = field(default_factory=list)

    def replay(self) -> DivisorClass:
        c = self.initial.padded(3)
        for step in self.steps:
            c = apply_step(c, step)
        return c

    def to_json(self) -> dict:
        return {
            "initial": format_class(self.initial),
            "final": format_class(self.final),
            "steps": [s.to_json() for s in self.steps],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: dict) -> CremonaTrace:
        steps: list[Step] = []
        for s in obj["steps"]:
            if s["op"] == "cremona":
                steps.append(CremonaStep(tuple(s["ijk"]), s["k0"]))
            elif s["op"] == "clamp":
                steps.append(ClampStep(s["index"], s["old"]))
            elif s["op"] == "sort":
                steps.append(SortStep(tuple(s["perm"])))
            else:
                raise ValueError(f"unknown trace op {s['op']!r}")
        return cls(parse_class(obj["initial"]), parse_class(obj["final"]), steps)


def cremona_transform(c: DivisorClass, i: int, j: int, k: int) -> DivisorClass:
    """Quadratic transformation centred at points ``i, j, k`` (1-based).

    With ``k0 = t - m_i - m_j - m_k`` the degree and the three multiplicities
    all shift by ``k0``.  The map is an involution.
    """
    _require_plane(c.d)
    idx = (i, j, k)
    if len(set(idx)) != 3:
        raise ValueError(f"Cremona indices must be distinct, got {idx}")
    if min(idx) < 1:
        raise ValueError(f"Cremona indices are 1-based, got {idx}")
    c = c.padded(max(idx))
    m = list(c.m)
    k0 = c.t - m[i - 1] - m[j - 1] - m[k - 1]
    for x in idx:
        m[x - 1] += k0
    return DivisorClass(c.t + k0, tuple(m), 2)


def apply_step(c: DivisorClass, step: Step) -> DivisorClass:
    if isinstance(step, CremonaStep):
        return cremona_transform(c, *step.ijk)
    if isinstance(step, ClampStep):
        m = list(c.m)
        m[step.index - 1] = 0
        return DivisorClass(c.t, tuple(m), c.d)
    if isinstance(step, SortStep):
        return DivisorClass(c.t, tuple(c.m[p - 1] for p in step.perm), c.d)
    raise TypeError(f"not a trace step: {step!r}")


def standardize(c: DivisorClass) -> tuple[DivisorClass, CremonaTrace]:
    """Reduce ``c`` to standard form by sorting, clamping and Cremona steps.

    Each round clamps negative multiplicities (exceptional curves in the base
    locus), sorts the rest non-increasingly, and applies a Cremona step on the
    three largest entries whenever ``t < m_1 + m_2 + m_3``.  The loop stops at
    a standard class or as soon as the degree goes negative.

    >>> final, trace = standardize(parse_class("4;2,2,2,2,2"))
    >>> format_class(final.trimmed()), len(trace.steps)
    ('0;', 4)
    """
    _require_plane(c.d)
    if any(x < 0 for x in c.m):
        raise ValueError(f"standardize expects non-negative multiplicities, got {format_class(c)}")
    cur = c.padded(3)
    steps: list[Step] = []
    while True:
        for pos, x in enumerate(cur.m, start=1):
            if x < 0:
                steps.append(ClampStep(pos, x))
        if any(x < 0 for x in cur.m):
            cur = DivisorClass(cur.t, tuple(max(x, 0) for x in cur.m), 2)

        order = sorted(range(cur.r), key=lambda p: -cur.m[p])
        if order != list(range(cur.r)):
            step = SortStep(tuple(p + 1 for p in order))
            steps.append(step)
            cur = apply_step(cur, step)

        if cur.t < 0:
            break
        k0 = cur.t - cur.m[0] - cur.m[1] - cur.m[2]
        if k0 >= 0:
            break
        steps.append(CremonaStep((1, 2, 3), k0))
        cur = cremona_transform(cur, 1, 2, 3)
    return cur, CremonaTrace(c, cur, steps)


def standard_basis(r: int) -> list[DivisorClass]:
    """``H'_0, ..., H'_r``: ``(1;)``, ``(1;1)``, ``(2;1,1)``, then ``(3;1^i)`` for ``i > 2``."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    out = []
    for i in range(r + 1):
        t = 1 if i <= 1 else (2 if i == 2 else 3)
        out.append(DivisorClass(t, (1,) * i + (0,) * (r - i), 2))
    return out


def _fill(slots: int, total: int, squares: int, top: int, prefix: list, out: list):
    # Non-increasing tuples of length `slots` in [0, top] with given sum and sum of squares.
    if slots == 0:
        if total == 0 and squares == 0:
            out.append(tuple(prefix))
        return
    if total < 0 or squares < 0 or total * total > slots * squares:
        return
    for x in range(min(top, total), -1, -1):
        if x * x > squares:
            continue
        if total - x > (slots - 1) * x:
            break
        prefix.append(x)
        _fill(slots - 1, total - x, squares - x * x, x, prefix, out)
        prefix.pop()


def _distinct_permutations(seq: tuple) -> list[tuple]:
    # Multiset permutations, generated in lexicographic order.
    items = sorted(seq)
    out = []
    n = len(items)
    while True:
        out.append(tuple(items))
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


MAX_NEG_ONE_DEGREE = 6


def enumerate_neg_one_classes(r: int) -> list[DivisorClass]:
    """All classes with ``C^2 = C.K = -1`` on ``X_r`` for ``1 <= r <= 8``.

    Besides the exceptional classes ``E_i`` only non-negative multiplicities
    are considered; the degree never exceeds 6 in this range.  The result is
    sorted lexicographically by ``(t, m_1, ..., m_r)``.
    """
    if not 1 <= r <= 8:
        raise UnsupportedRangeError(
            f"(-1)-classes are only enumerated for 1 <= r <= 8 (infinitely many for r >= 9), got r={r}"
        )
    found = set()
    for i in range(r):
        found.add((0,) + tuple(-1 if p == i else 0 for p in range(r)))
    for t in range(1, MAX_NEG_ONE_DEGREE + 1):
        # C.K = -1 and C^2 = -1
        shapes: list[tuple] = []
        _fill(r, 3 * t - 1, t * t + 1, t, [], shapes)
        for shape in shapes:
            for perm in _distinct_permutations(shape):
                found.add((t,) + perm)
    return [DivisorClass(v[0], v[1:], 2) for v in sorted(found)]
