"""Timing workloads for the decomposability check.

Two workloads back the performance claims: state-count scaling of the
two-alphabet check (the log-log slope stays under the cubic bound), and
growth in the number of local alphabets (near-linear once per-component
work is flat).  Rows are plain tuples so they can be dumped to CSV and
drawn with matplotlib.
"""

from __future__ import annotations

import csv
import random
import time
from typing import Iterable, Sequence

import numpy as np

from .events import Alphabet
from .cdcheck import is_cd, is_cd2
from .ops import minimize, trim
from .sampling import padded_family_instance, random_generator


def _timed(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def minimized_generator(rng: random.Random, n_states: int, alphabet, attempts: int = 10):
    """A trim, minimized generator of (almost surely exactly) the requested
    size; random total automata are nearly always minimal, so a redraw or
    two suffices."""
    best = None
    for _ in range(attempts):
        g = random_generator(rng, n_states, alphabet, density=1.0, marked_prob=0.3)
        g = minimize(trim(g))
        if g.n_states == n_states:
            return g
        if best is None or abs(g.n_states - n_states) < abs(best.n_states - n_states):
            best = g
    return best


def scaling_rows(
    sizes: Sequence[int] = (25, 50, 100, 200),
    n_events: int = 6,
    seed: int = 2024,
    repeats: int = 1,
) -> list[tuple[int, float, bool]]:
    """(minimized state count, seconds, decomposable) per requested size."""
    rng = random.Random(seed)
    events = [chr(ord("a") + i) for i in range(n_events)]
    half = n_events // 2
    e1 = Alphabet.of(events[: half + 1])
    e2 = Alphabet.of(events[half - 1:])
    ek = e1 & e2
    rows = []
    for size in sizes:
        g = minimized_generator(rng, size, events)
        verdict = {}

        def run():
            verdict["v"] = is_cd2(g, e1, e2, ek)

        secs = _timed(run, repeats)
        rows.append((g.n_states, secs, verdict["v"].decomposable))
    return rows


def loglog_slope(rows: Iterable[tuple[int, float, bool]]) -> float:
    pts = [(n, t) for n, t, _ in rows if t > 0]
    xs = np.log([n for n, _ in pts])
    ys = np.log([t for _, t in pts])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def nlinear_rows(
    ns: Sequence[int] = (2, 4, 8),
    base_states: int = 30,
    seed: int = 2024,
    repeats: int = 3,
) -> list[tuple[int, float, bool]]:
    """(component count, seconds, decomposable) for the padded family."""
    rows = []
    for n in ns:
        rng = random.Random(seed)  # same base generator for every n
        g, family = padded_family_instance(rng, n, base_states=base_states)
        verdict = {}

        def run():
            verdict["v"] = is_cd(g, family)

        secs = _timed(run, repeats)
        rows.append((n, secs, verdict["v"].decomposable))
    return rows


def nlinear_ratio(rows: Sequence[tuple[int, float, bool]]) -> float:
    """Runtime ratio between the largest and smallest component count."""
    first, last = rows[0], rows[-1]
    return last[1] / first[1] if first[1] > 0 else float("inf")


def write_csv(rows: Iterable[tuple], path: str, header: Sequence[str]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
