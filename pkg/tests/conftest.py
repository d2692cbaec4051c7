import itertools
import random

import pytest
import sympy as sp

ACCEPTANCE_LINES = []


def qq_dim(m, t, d=2, seed=1):
    """Independent characteristic-zero reference for ``dim I(m, d)_t``.

    Rational random points, ordinary partial derivatives, sympy rank.  Only
    for tiny instances.
    """
    if t < 0:
        return 0
    rnd = random.Random(seed)
    xs = sp.symbols(f"x0:{d}")
    exps = [b for b in itertools.product(range(t + 1), repeat=d) if sum(b) <= t]
    mons = [sp.Mul(*[x**e for x, e in zip(xs, b)]) for b in exps]
    rows = []
    for mi in m:
        pt = {x: rnd.randint(-60, 60) for x in xs}
        for a in itertools.product(range(mi), repeat=d):
            if sum(a) >= mi:
                continue
            row = []
            for mon in mons:
                e = mon
                for x, k in zip(xs, a):
                    e = sp.diff(e, x, k)
                row.append(e.subs(pt))
            rows.append(row)
    if not rows:
        return len(mons)
    return len(mons) - sp.Matrix(rows).rank()


@pytest.fixture
def reference_dim():
    return qq_dim


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
