"""Ground-truth Hilbert functions of fat point ideals by exact linear algebra.

Points are drawn uniformly at random in an affine chart over ``F_p`` for a
31-bit prime ``p``.  Vanishing to order ``m`` at a point is imposed through
Hasse derivatives, whose coefficients are binomials and so need no division.
Special configurations can only raise the dimension, so the minimum over a few
independent trials is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

DEFAULT_PRIME = 2147483647
DEFAULT_PRIME2 = 2147483629
DEFAULT_TRIALS = 3
DEFAULT_SEED = 0


class OracleParameterError(ValueError):
    pass


@lru_cache(maxsize=None)
def _monomials(d: int, t: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for deg in range(t + 1):
        out.extend(_compositions(deg, d))
    return tuple(out)


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    # Exponent vectors of a fixed degree, lexicographically descending.
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        out.extend((first,) + rest for rest in _compositions(total - first, parts - 1))
    return out


def monomials(d: int, t: int) -> list[tuple[int, ...]]:
    """Exponents ``b`` in ``N^d`` with ``|b| <= t`` in graded lexicographic order."""
    if t < 0:
        return []
    return list(_monomials(d, t))


@dataclass(frozen=True)
class InterpolationProblem:
    """Vanishing conditions for ``I(m, d)_t`` at explicit points over ``F_p``."""

    d: int
    t: int
    m: tuple[int, ...]
    prime: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.prime <= self.t:
            raise OracleParameterError(
                f"prime {self.prime} must exceed the degree {self.t} for Hasse derivatives"
            )
        if len(self.points) != len(self.m):
            raise ValueError(f"{len(self.points)} points given for {len(self.m)} multiplicities")
        if any(len(p) != self.d for p in self.points):
            raise ValueError(f"points must have {self.d} affine coordinates")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")

    @property
    def row_count(self) -> int:
        return sum(comb(mi - 1 + self.d, self.d) for mi in self.m if mi > 0)

    @property
    def col_count(self) -> int:
        return comb(self.t + self.d, self.d)


def _binomial_table(n: int, p: int) -> np.ndarray:
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    for a in range(n + 1):
        for b in range(a + 1):
            table[a, b] = comb(a, b) % p
    return table


def build_matrix(prob: InterpolationProblem) -> np.ndarray:
    """Condition matrix: one row per (point, derivative index ``a`` with ``|a| < m_i``).

    The entry at monomial ``b`` is ``prod_j C(b_j, a_j) * x_j^(b_j - a_j)``
    evaluated at the point, reduced mod ``p``.
    """
    p, d, t = prob.prime, prob.d, prob.t
    cols = np.array(_monomials(d, t), dtype=np.int64).reshape(-1, d)
    binom = _binomial_table(t, p)
    blocks = []
    for mi, point in zip(prob.m, prob.points):
        if mi <= 0:
            continue
        derivs = np.array(_monomials(d, mi - 1), dtype=np.int64).reshape(-1, d)
        block = np.ones((len(derivs), len(cols)), dtype=np.int64)
        for j in range(d):
            powers = np.ones(t + 1, dtype=np.int64)
            for e in range(1, t + 1):
                powers[e] = powers[e - 1] * point[j] % p
            diff = cols[None, :, j] - derivs[:, None, j]
            ok = diff >= 0
            safe = np.where(ok, diff, 0)
            aj = np.broadcast_to(derivs[:, None, j], diff.shape)
            bj = np.broadcast_to(cols[None, :, j], diff.shape)
            factor = np.where(ok, binom[np.minimum(bj, t), np.minimum(aj, t)] * powers[safe] % p, 0)
            block = block * factor % p
        blocks.append(block)
    if not blocks:
        return np.zeros((0, len(cols)), dtype=np.int64)
    return np.vstack(blocks)


def rank_profile(matrix: np.ndarray, p: int) -> list[int]:
    """Pivot columns of the row echelon form over ``F_p``.

    The rank of the first ``k`` columns is the number of pivots below ``k``.
    """
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    top = 0
    for c in range(cols):
        if top == rows:
            break
        nz = np.flatnonzero(a[top:, c])
        if nz.size == 0:
            continue
        piv = top + int(nz[0])
        if piv != top:
            a[[top, piv]] = a[[piv, top]]
        inv = pow(int(a[top, c]), -1, p)
        a[top, c:] = a[top, c:] * inv % p
        below = a[top + 1:, c]
        hit = np.flatnonzero(below) + top + 1
        if hit.size:
            a[hit, c:] = (a[hit, c:] - a[hit, c, None] * a[top, None, c:]) % p
        pivots.append(c)
        top += 1
    return pivots


def rank(matrix: np.ndarray, p: int) -> int:
    """Exact rank over ``F_p``."""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(rank_profile(matrix, p))


def draw_points(r: int, d: int, prime: int, seed: int, trial: int) -> tuple[tuple[int, ...], ...]:
    """Points for one trial.  Point ``i`` depends only on ``(seed, trial, i)``.

    Prefix stability matters: appending simple points to a sequence keeps the
    original points, so the extended configuration stays jointly generic.
    """
    out = []
    for i in range(r):
        rng = np.random.default_rng([seed, trial, i])
        out.append(tuple(int(x) for x in rng.integers(0, prime, size=d)))
    if len(set(out)) != len(out):
        raise OracleParameterError(f"coincident random points for seed={seed}, trial={trial}")
    return tuple(out)


def _validate(m: Sequence[int], t: int, d: int, prime: int, trials: int):
    if d < 2:
        raise OracleParameterError(f"ambient dimension must be >= 2, got {d}")
    if trials < 1:
        raise OracleParameterError(f"trials must be >= 1, got {trials}")
    if prime <= max(t, 1):
        raise OracleParameterError(f"prime {prime} must exceed the degree {t}")
    if any(x < 0 for x in m):
        raise OracleParameterError(f"multiplicities must be non-negative, got {tuple(m)}")


def hilbert_function(
    m: Sequence[int],
    t_max: int,
    d: int = 2,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
) -> list[int]:
    """``[dim I(m, d)_t for t in 0..t_max]`` from one elimination per trial.

    The condition matrix for degree ``t`` consists of the first
    ``C(t+d, d)`` columns of the one for ``t_max``, so a single rank profile
    yields every degree at once.
    """
    m = tuple(m)
    if t_max < 0:
        return []
    _validate(m, t_max, d, prime, trials)
    sizes = [comb(t + d, d) for t in range(t_max + 1)]
    best = None
    for trial in range(trials):
        prob = InterpolationProblem(d, t_max, m, prime, draw_points(len(m), d, prime, seed, trial))
        pivots = rank_profile(build_matrix(prob), prime) if prob.row_count else []
        dims = [n - sum(1 for c in pivots if c < n) for n in sizes]
        best = dims if best is None else [min(a, b) for a, b in zip(best, dims)]
    return best


def actual_dim(
    m: Sequence[int],
    t: int,
    d: int = 2,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
) -> int:
    """``dim I(m, d)_t``: minimum over trials of ``C(t+d, d) - rank``."""
    if t < 0:
        return 0
    m = tuple(m)
    _validate(m, t, d, prime, trials)
    best = None
    for trial in range(trials):
        prob = InterpolationProblem(d, t, m, prime, draw_points(len(m), d, prime, seed, trial))
        dim = prob.col_count - rank(build_matrix(prob), prime)
        best = dim if best is None else min(best, dim)
    return best


def alpha_upper_bound(m: Sequence[int], d: int = 2) -> int:
    """A degree at which a nonzero form surely exists.

    Either ``sum(m)`` (products of hyperplanes) or the first degree where
    monomials outnumber the conditions, whichever is smaller.
    """
    conditions = sum(comb(x - 1 + d, d) for x in m if x > 0)
    t = 0
    while comb(t + d, d) <= conditions:
        t += 1
    return min(t, sum(x for x in m if x > 0))


def actual_alpha(
    m: Sequence[int],
    d: int = 2,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
) -> int:
    """Least ``t`` with ``dim I(m, d)_t > 0``."""
    m = tuple(m)
    bound = alpha_upper_bound(m, d)
    dims = hilbert_function(m, bound, d, seed, trials, prime)
    for t, dim in enumerate(dims):
        if dim > 0:
            return t
    raise RuntimeError(f"no forms found for {m} up to degree {bound}; oracle is inconsistent")


class Oracle:
    """Memoizing front end bound to fixed ``(d, seed, trials, prime)``.

    Instances expose ``dim(m, t)`` and ``alpha(m)`` in the callable shapes the
    reduction functions expect.
    """

    def __init__(self, d=2, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS, prime=DEFAULT_PRIME):
        self.d = d
        self.seed = seed
        self.trials = trials
        self.prime = prime
        self._hilbert: dict[tuple, list[int]] = {}
        self._alpha: dict[tuple, int] = {}

    def hilbert(self, m: Sequence[int], t_max: int) -> list[int]:
        m = tuple(m)
        cached = self._hilbert.get(m)
        if cached is None or len(cached) <= t_max:
            cached = hilbert_function(m, t_max, self.d, self.seed, self.trials, self.prime)
            self._hilbert[m] = cached
        return cached[: t_max + 1]

    def dim(self, m: Sequence[int], t: int) -> int:
        if t < 0:
            return 0
        return self.hilbert(m, t)[t]

    def alpha(self, m: Sequence[int]) -> int:
        m = tuple(m)
        if m not in self._alpha:
            self._alpha[m] = actual_alpha(m, self.d, self.seed, self.trials, self.prime)
        return self._alpha[m]
