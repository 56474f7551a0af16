"""Seeded instance generation and the two measurement harnesses.

Point coordinates come from a splitmix64 stream so that identical (n, seed)
arguments produce bit-identical instances everywhere.  The two harnesses
mirror each other: ``run_sweep`` measures one instance across a range of
partition parameters, ``run_trials`` repeats that over many derived seeds and
tallies which parameter won.
"""

import concurrent.futures
from dataclasses import dataclass

from .errors import EmptySweep, InsufficientPoints, InvalidPartition
from .geometry import OpCounter, Point, PointSet, final_distance
from .solvers import closest_pair_2way, closest_pair_kway

_U64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64_mix(value: int) -> int:
    """The splitmix64 output mix: a 64-bit bijection used to derive seeds."""
    z = value & _U64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
    return z ^ (z >> 31)


def splitmix64_stream(seed: int):
    """Yield the splitmix64 output sequence for ``seed``, forever."""
    state = seed & _U64
    while True:
        state = (state + _GOLDEN) & _U64
        yield splitmix64_mix(state)


def gen_uniform_points(n: int, seed: int) -> PointSet:
    """n points uniform in [0,1)^2, two stream outputs per point (x then y).

    Each 64-bit output maps to [0,1) as its top 53 bits over 2**53, so the
    coordinates are exactly representable and reproducible bit for bit.
    """
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    stream = splitmix64_stream(seed)
    scale = 2.0 ** -53
    pts = []
    for _ in range(n):
        x = (next(stream) >> 11) * scale
        y = (next(stream) >> 11) * scale
        pts.append(Point(x, y))
    return PointSet(pts)


@dataclass(frozen=True, slots=True)
class SweepRecord:
    """One partition parameter's measured cost on a fixed instance."""

    a: int
    dc_measured: int
    dist: float


@dataclass(frozen=True)
class TrialHistogram:
    """Win counts per partition parameter over repeated random trials."""

    n: int
    trials: int
    wins: dict


def run_sweep(n: int, seed: int, a_lo: int, a_hi: int) -> list:
    """Solve one seeded instance with every a in [a_lo, a_hi]; fresh counter per run."""
    if n < 2:
        raise InsufficientPoints(f"need at least 2 points, got {n}")
    if not 2 <= a_lo <= a_hi <= n:
        raise InvalidPartition(f"need 2 <= a_lo <= a_hi <= n, got [{a_lo}, {a_hi}] with n={n}")
    instance = gen_uniform_points(n, seed)
    records = []
    for a in range(a_lo, a_hi + 1):
        counter = OpCounter()
        result = closest_pair_kway(instance, a, counter)
        records.append(SweepRecord(a, result.dc_used, final_distance(result.dist_sq)))
    return records


def argmin_partition(records) -> int:
    """The a with the smallest measured count; ties go to the largest a."""
    if not records:
        raise EmptySweep("no sweep records to take an argmin over")
    best = records[0]
    for rec in records[1:]:
        if rec.dc_measured < best.dc_measured or (
            rec.dc_measured == best.dc_measured and rec.a > best.a
        ):
            best = rec
    return best.a


def run_trials(n: int, trials: int, base_seed: int, jobs: int = 1) -> TrialHistogram:
    """Tally the argmin parameter over ``trials`` independently seeded sweeps.

    Trial t uses seed splitmix64_mix(base_seed + t), so the tally does not
    depend on execution order: with jobs > 1 the trial range is split across
    processes and the partial histograms merged by addition, byte-identical
    to the sequential run.
    """
    if n < 2:
        raise InsufficientPoints(f"need at least 2 points, got {n}")
    if trials < 1:
        raise ValueError(f"trial count must be >= 1, got {trials}")
    if jobs < 1:
        raise ValueError(f"job count must be >= 1, got {jobs}")
    wins = {a: 0 for a in range(2, n + 1)}
    if jobs == 1:
        _tally_trials(n, base_seed, 0, trials, wins)
        return TrialHistogram(n, trials, wins)
    jobs = min(jobs, trials)
    bounds = [trials * k // jobs for k in range(jobs + 1)]
    chunks = [(n, base_seed, bounds[k], bounds[k + 1]) for k in range(jobs)]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        for partial in pool.map(_trial_chunk, chunks):
            for a, count in partial.items():
                wins[a] += count
    return TrialHistogram(n, trials, wins)


def growth_check(sizes, seed: int) -> list:
    """Measured 2-way counts per instance size, for growth-ratio analysis."""
    out = []
    for n in sizes:
        counter = OpCounter()
        result = closest_pair_2way(gen_uniform_points(n, seed), counter)
        out.append((n, result.dc_used))
    return out


def _tally_trials(n, base_seed, t_lo, t_hi, wins):
    for t in range(t_lo, t_hi):
        seed_t = splitmix64_mix(base_seed + t)
        wins[argmin_partition(run_sweep(n, seed_t, 2, n))] += 1


def _trial_chunk(args):
    n, base_seed, t_lo, t_hi = args
    wins = {}
    for t in range(t_lo, t_hi):
        seed_t = splitmix64_mix(base_seed + t)
        a = argmin_partition(run_sweep(n, seed_t, 2, n))
        wins[a] = wins.get(a, 0) + 1
    return wins
