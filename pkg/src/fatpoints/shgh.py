"""Conjectural dimension of plane linear systems with generic fat points.

Under the SHGH conjecture, Cremona reduction with clamping reaches a class
whose ``h^1`` vanishes, so its ``h^0`` is the Riemann-Roch count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cremona import CremonaTrace, enumerate_neg_one_classes, standardize
from .lattice import (
    DivisorClass,
    UnsupportedDimensionError,
    arithmetic_genus,
    expected_dim,
    format_class,
    self_intersection,
)
from .reductions import InconsistentOracleError


@dataclass(frozen=True)
class DimensionReport:
    input_class: DivisorClass
    t: int
    chi: int
    conjectured_dim: int
    reduced_class: DivisorClass
    trace: CremonaTrace

    @property
    def special(self) -> bool:
        return self.conjectured_dim != max(self.chi, 0)

    @property
    def defect(self) -> int:
        """Excess over the expected dimension, i.e. the implied ``h^1``."""
        return self.conjectured_dim - max(self.chi, 0)

    def to_json(self) -> dict:
        return {
            "class": format_class(self.input_class),
            "chi": self.chi,
            "dim": self.conjectured_dim,
            "special": self.special,
            "reduced": format_class(self.reduced_class.trimmed()),
            "trace": [s.to_json() for s in self.trace.steps],
        }


def shgh_dim(m: Sequence[int], t: int, d: int = 2) -> DimensionReport:
    """Predicted ``dim I(m, 2)_t`` together with the reduction that produced it."""
    if d != 2:
        raise UnsupportedDimensionError(
            f"the SHGH engine only covers the plane; use the oracle for d={d}"
        )
    m = tuple(m)
    if any(x < 0 for x in m):
        raise ValueError(f"multiplicities must be non-negative, got {m}")
    c = DivisorClass(t, m, 2)
    chi = expected_dim(c)
    if t < 0:
        return DimensionReport(c, t, chi, 0, c, CremonaTrace(c, c, []))
    reduced, trace = standardize(c)
    dim = 0 if reduced.t < 0 else max(0, expected_dim(reduced))
    return DimensionReport(c, t, chi, dim, reduced, trace)


def shgh_alpha(m: Sequence[int]) -> int:
    """Least ``t`` with positive conjectured dimension; at most ``sum(m)``."""
    m = tuple(m)
    bound = sum(m)
    for t in range(bound + 1):
        if shgh_dim(m, t).conjectured_dim > 0:
            return t
    raise InconsistentOracleError(f"SHGH engine found no forms for {m} up to degree {bound}")


def shgh_hilbert(m: Sequence[int], t_max: int) -> list[int]:
    return [shgh_dim(m, t).conjectured_dim for t in range(t_max + 1)]


@dataclass
class CheckEntry:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ConjectureReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def counts(self) -> tuple[int, int]:
        return sum(e.passed for e in self.entries), len(self.entries)


def consistency_check_conjectures(r_max: int, multiples=(1, 2, 3)) -> ConjectureReport:
    """Check ``C^2 >= g - 1`` on every enumerated (-1)-class up to ``r_max``
    points, and that the engine gives ``h^0 = 1`` with no defect on ``l H'_9``.
    """
    report = ConjectureReport()
    for r in range(1, r_max + 1):
        for c in enumerate_neg_one_classes(r):
            sq, g = self_intersection(c), arithmetic_genus(c)
            report.entries.append(
                CheckEntry(
                    f"r={r} C={format_class(c)}",
                    sq >= g - 1 and sq == g - 1 == -1,
                    f"C^2={sq} g={g}",
                )
            )
    for l in multiples:
        rep = shgh_dim((l,) * 9, 3 * l)
        report.entries.append(
            CheckEntry(
                f"{l}H'_9",
                rep.conjectured_dim == 1 and rep.defect == 0,
                f"dim={rep.conjectured_dim} chi={rep.chi}",
            )
        )
    return report
