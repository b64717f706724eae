"""Build-time benchmarking over random texts."""

from __future__ import annotations

import time
import tracemalloc
from dataclasses import dataclass

import numpy as np

from .plcp import build_index, build_plcp
from .psa import build_psa
from .pstring import PString

BENCH_SIGMA = 1  # static symbols in generated texts


@dataclass(frozen=True)
class BenchRow:
    n: int
    pi: int
    build_ms: float
    plcp_ms: float
    peak_bytes: int


def random_text(rng: np.random.Generator, n: int, pi: int,
                sigma: int = BENCH_SIGMA) -> PString:
    """Uniform text over pi Param ids and sigma Static ids."""
    draw = rng.integers(0, pi + sigma, n)
    is_param = (draw < pi).astype(np.uint8)
    ids = np.where(draw < pi, draw, draw - pi)
    return PString(is_param, ids)


def measure(x: PString, measure_memory: bool = True) -> tuple[float, float, int]:
    """(build_ms, plcp_ms, peak_bytes) for one text.  Timing runs without
    tracemalloc; a second build measures the allocation peak."""
    t0 = time.perf_counter()
    idx = build_psa(x)
    t1 = time.perf_counter()
    build_plcp(x, idx)
    t2 = time.perf_counter()
    peak = 0
    if measure_memory:
        tracemalloc.start()
        build_index(x)
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()
    return (t1 - t0) * 1e3, (t2 - t1) * 1e3, peak


def run_bench(ns, pis, seed: int = 0, measure_memory: bool = True) -> list:
    rows = []
    rng = np.random.default_rng(seed)
    for n in ns:
        for pi in pis:
            x = random_text(rng, n, pi)
            build_ms, plcp_ms, peak = measure(x, measure_memory)
            rows.append(BenchRow(n=n, pi=pi, build_ms=build_ms,
                                 plcp_ms=plcp_ms, peak_bytes=peak))
    return rows


def to_csv(rows) -> str:
    lines = ["n,pi,build_ms,plcp_ms,peak_bytes"]
    for r in rows:
        lines.append(f"{r.n},{r.pi},{r.build_ms:.3f},{r.plcp_ms:.3f},{r.peak_bytes}")
    return "\n".join(lines) + "\n"
