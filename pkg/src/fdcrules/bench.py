"""Timing harness for the necessary I-rule acquisition routes.

Every route is run on the same random context and the rule sets are compared
before any timing is reported.  ``n_Lo`` and ``n_Ln`` count the concepts each
route actually materialised: alg1 never builds the decision lattice and
alg2 never builds the object-oriented conditional lattice, so the
corresponding column is 0.
"""
from __future__ import annotations

import csv
import io
import time
from collections.abc import Iterable, Sequence
from dataclasses import astuple, dataclass, fields

from .context import random_fdc
from .rules import RuleSetOptions, RuleType, necessary_rules

BENCH_ALGORITHMS = ("alg1", "alg2", "bruteforce")


class AlgorithmMismatch(RuntimeError):
    """Two acquisition routes returned different rule sets."""


@dataclass(frozen=True)
class BenchRow:
    size_u: int
    size_m: int
    size_n: int
    density: float
    seed: int
    algorithm: str
    wall_ms: float
    n_Lo: int
    n_Ln: int
    n_rules: int


def run_bench(
    grid: Iterable[tuple[int, int, int]],
    densities: Iterable[float],
    seeds: Iterable[int],
    algorithms: Sequence[str],
    opts: RuleSetOptions = RuleSetOptions(),
) -> list[BenchRow]:
    if not algorithms:
        raise ValueError("at least one algorithm is required")
    unknown = [a for a in algorithms if a not in BENCH_ALGORITHMS]
    if unknown:
        raise ValueError(f"unknown bench algorithms: {', '.join(unknown)}")
    densities, seeds = list(densities), list(seeds)
    rows: list[BenchRow] = []
    for n_u, n_m, n_n in grid:
        for density in densities:
            for seed in seeds:
                fdc = random_fdc(n_u, n_m, n_n, density, seed)
                reference = None
                for name in algorithms:
                    stats: dict[str, int] = {}
                    start = time.perf_counter()
                    rules = necessary_rules(fdc, RuleType.I, opts, name, stats)
                    elapsed = (time.perf_counter() - start) * 1000.0
                    if reference is None:
                        reference = (algorithms[0], set(rules))
                    elif set(rules) != reference[1]:
                        raise AlgorithmMismatch(
                            f"{name} disagrees with {reference[0]} on "
                            f"{n_u}x{n_m}x{n_n}, density {density}, seed {seed}"
                        )
                    rows.append(BenchRow(
                        n_u, n_m, n_n, density, seed, name, round(elapsed, 3),
                        stats.get("n_Lo", 0), stats.get("n_Ln", 0), len(rules),
                    ))
    return rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([f.name for f in fields(BenchRow)])
    for row in rows:
        writer.writerow(astuple(row))
    return out.getvalue()
