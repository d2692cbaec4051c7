"""Dual-engine sweep harness with an append-only, resumable JSONL log."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional

from .lattice import DivisorClass, expected_dim
from .oracle import DEFAULT_PRIME, DEFAULT_PRIME2, DEFAULT_SEED, DEFAULT_TRIALS, hilbert_function
from .shgh import shgh_hilbert


@dataclass
class SweepRecord:
    d: int
    t: int
    m: list[int]
    chi: Optional[int]
    shgh_dim: Optional[int]
    oracle_dim: int
    oracle_dims: list[int]
    special: Optional[bool]
    agree: Optional[bool]
    seed: int
    primes: list[int]
    timestamp: Optional[str] = None

    @property
    def key(self) -> tuple:
        return (self.d, tuple(self.m), self.t)

    @property
    def primes_agree(self) -> bool:
        return len(set(self.oracle_dims)) == 1

    @property
    def ok(self) -> bool:
        return self.agree is not False and self.primes_agree

    def dumps(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


@dataclass(frozen=True)
class OracleSettings:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    primes: tuple[int, ...] = (DEFAULT_PRIME, DEFAULT_PRIME2)


def sweep_sequences(r_max: int, m_max: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing sequences with ``r <= r_max`` entries in ``1..m_max``."""
    for r in range(r_max + 1):
        yield from combinations_with_replacement(range(m_max, 0, -1), r)


def records_for(
    m: tuple[int, ...],
    ts: Iterable[int],
    d: int = 2,
    settings: OracleSettings = OracleSettings(),
    timestamp: bool = True,
) -> list[SweepRecord]:
    """Evaluate both engines on ``I(m, d)_t`` for every ``t`` in ``ts``."""
    ts = list(ts)
    if not ts:
        return []
    t_max = max(ts)
    per_prime = [
        hilbert_function(m, t_max, d, settings.seed, settings.trials, p) for p in settings.primes
    ]
    conj = shgh_hilbert(m, t_max) if d == 2 else None
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamp else None
    out = []
    for t in ts:
        dims = [h[t] for h in per_prime]
        chi = expected_dim(DivisorClass(t, m, 2)) if d == 2 else None
        shgh = conj[t] if conj is not None else None
        out.append(
            SweepRecord(
                d=d,
                t=t,
                m=list(m),
                chi=chi,
                shgh_dim=shgh,
                oracle_dim=dims[0],
                oracle_dims=dims,
                special=None if chi is None else dims[0] != max(chi, 0),
                agree=None if shgh is None else shgh == dims[0],
                seed=settings.seed,
                primes=list(settings.primes),
                timestamp=stamp,
            )
        )
    return out


def load_completed(path: str) -> set:
    """Keys of records already in ``path``; a torn final line is cut off."""
    done = set()
    if not os.path.exists(path):
        return done
    with open(path, "rb+") as fh:
        data = fh.read()
        end = data.rfind(b"\n") + 1
        if end != len(data):
            fh.truncate(end)
    for line in data[:end].splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        done.add((rec["d"], tuple(rec["m"]), rec["t"]))
    return done


@dataclass
class SweepSummary:
    instances: int = 0
    skipped: int = 0
    written: int = 0
    agreements: int = 0
    disagreements: list = field(default_factory=list)
    special: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _work(args):
    m, ts, settings, timestamp = args
    return records_for(m, ts, 2, settings, timestamp)


def run_sweep(
    r_max: int,
    m_max: int,
    t_max: int,
    out_path: Optional[str] = None,
    settings: OracleSettings = OracleSettings(),
    timestamp: bool = True,
    jobs: int = 1,
    on_record=None,
) -> SweepSummary:
    """Run the plane sweep, appending one record per new instance to ``out_path``.

    Instances already present in the file are skipped, so an interrupted run
    can simply be restarted.  Records are written in instance order whatever
    the number of worker processes.
    """
    done = load_completed(out_path) if out_path else set()
    summary = SweepSummary()
    tasks = []
    for m in sweep_sequences(r_max, m_max):
        ts = [t for t in range(t_max + 1) if (2, m, t) not in done]
        summary.instances += t_max + 1
        summary.skipped += t_max + 1 - len(ts)
        if ts:
            tasks.append((m, ts, settings, timestamp))

    fh = open(out_path, "a", encoding="utf-8") if out_path else None
    try:
        if jobs > 1:
            pool = ProcessPoolExecutor(max_workers=jobs)
            results = pool.map(_work, tasks, chunksize=8)
        else:
            pool = None
            results = map(_work, tasks)
        for records in results:
            for rec in records:
                if fh is not None:
                    fh.write(rec.dumps() + "\n")
                summary.written += 1
                if on_record is not None:
                    on_record(rec)
                if rec.ok:
                    summary.agreements += 1
                else:
                    summary.disagreements.append(rec)
                if rec.special:
                    summary.special.append((tuple(rec.m), rec.t))
            if fh is not None:
                fh.flush()
        if pool is not None:
            pool.shutdown()
    finally:
        if fh is not None:
            fh.close()
    return summary
