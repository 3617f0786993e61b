"""Two-stage exhaustive PINN search over digit multisets.

The search space is multisets, not numbers: the 10^k integers of width k
collapse to C(k+9,9) digit-content classes, and PINN membership depends
only on the class.  Stage 1 scans zero-free multisets (digits 1..9); stage
2 augments known shorter zero-free classes with zeros and re-verifies each
augmentation, because padding does not automatically preserve membership.

Scanning uses a congruence fast path: for digit sum s and width k, every
present digit pair (u, v) must satisfy u == v (mod s / gcd(s, 10^d - 1))
for every positional gap d, which collapses to a single modulus
T = lcm_d s/gcd(s, 10^d - 1); survivors then face the full pairwise
criterion before a record is issued.  The fast path agrees with the brute
oracle on every multiset with k <= 6 and on large random samples beyond
(see the test suite), but records are never issued on its word alone.

Parallel scans split the enumeration index range into contiguous chunks;
each worker re-enumerates its slice independently, so results are a pure
function of (k, chunk boundaries) and reports are byte-identical across
worker counts once the elapsed field is excluded.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations_with_replacement, islice
from math import gcd, lcm
from typing import Iterable, NamedTuple

from .digits import DigitMultiset, multiset_count
from .orbits import (
    DEFAULT_ORBIT_BUDGET,
    PinnRecord,
    is_pinn_criterion,
    orbit,
)

__all__ = [
    "CENSUS_MAX",
    "STAGE1_MAX_K",
    "CensusResult",
    "MissingLowerCatalog",
    "SearchConfig",
    "SearchReport",
    "TwoStageIncomplete",
    "census",
    "report_values",
    "search",
    "search_stage1",
    "search_stage2",
]

STAGE1_MAX_K = 20  # stage-1 scan cap; C(28,8) multisets is the practical edge
CENSUS_MAX = 10**7


class MissingLowerCatalog(Exception):
    pass


class TwoStageIncomplete(Exception):
    pass


@dataclass(frozen=True, slots=True)
class SearchConfig:
    k: int
    allow_zero: bool = True
    exclude_repdigits: bool = False
    orbit_budget: int = DEFAULT_ORBIT_BUDGET
    parallel_chunks: int = 1
    exhaustive_zero_scan: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.orbit_budget < 1:
            raise ValueError("orbit_budget must be >= 1")
        if self.parallel_chunks < 1:
            raise ValueError("parallel_chunks must be >= 1")


@dataclass(frozen=True, slots=True)
class SearchReport:
    k: int
    records: tuple[PinnRecord, ...]
    stage1_count: int
    stage2_count: int
    multisets_scanned: int
    elapsed: float = field(compare=False, default=0.0)


# --- scan kernel ----------------------------------------------------------------

def _gap_modulus(s: int, k: int) -> int:
    """All present digits must be congruent modulo this value."""
    t = 1
    for d in range(1, k):
        t = lcm(t, s // gcd(s, (pow(10, d, s) - 1) % s))
    return t


def _scan_chunk(
    k: int, start: int, stop: int, allow_zero: bool, exclude_repdigits: bool
) -> list[tuple[int, ...]]:
    """Fast-path survivors in slice [start, stop) of the enumeration.

    Returns digit-count tuples in enumeration order; final verification
    happens in the caller.
    """
    digits = range(0 if allow_zero else 1, 10)
    t_cache: dict[int, int] = {}
    out = []
    for combo in islice(combinations_with_replacement(digits, k), start, stop):
        if combo[-1] == 0:  # ascending, so this is the all-zero multiset
            continue
        if exclude_repdigits and combo[0] == combo[-1]:
            continue
        s = sum(combo)
        t = t_cache.get(s)
        if t is None:
            t = t_cache[s] = _gap_modulus(s, k)
        lead = combo[-1] % t
        if any(d % t != lead for d in set(combo)):
            continue
        v = 0
        for d in reversed(combo):  # canonical arrangement is descending
            v = (v * 10 + d) % s
        if v:
            continue
        counts = [0] * 10
        for d in combo:
            counts[d] += 1
        out.append(tuple(counts))
    return out


def _chunk_bounds(total: int, chunks: int) -> list[tuple[int, int]]:
    edges = [i * total // chunks for i in range(chunks + 1)]
    return [(edges[i], edges[i + 1]) for i in range(chunks)]


def _scan(cfg: SearchConfig, allow_zero: bool) -> tuple[list[PinnRecord], int]:
    # Chunk over the raw enumeration, which still contains the all-zero
    # combination when zeros are allowed; _scan_chunk drops it.
    total = multiset_count(cfg.k, allow_zero=allow_zero) + (1 if allow_zero else 0)
    bounds = _chunk_bounds(total, cfg.parallel_chunks)
    if cfg.parallel_chunks == 1:
        survivor_lists = [
            _scan_chunk(cfg.k, 0, total, allow_zero, cfg.exclude_repdigits)
        ]
    else:
        with ProcessPoolExecutor(max_workers=cfg.parallel_chunks) as pool:
            futures = [
                pool.submit(
                    _scan_chunk, cfg.k, lo, hi, allow_zero, cfg.exclude_repdigits
                )
                for lo, hi in bounds
            ]
            survivor_lists = [f.result() for f in futures]
    records = []
    for counts in (c for chunk in survivor_lists for c in chunk):
        m = DigitMultiset(counts)
        ok, proof = is_pinn_criterion(m)
        if not ok:
            raise RuntimeError(
                f"fast path passed {m.canonical} but the criterion rejects it"
            )
        records.append(
            PinnRecord(
                multiset=m,
                canonical=m.canonical,
                digit_sum=m.digit_sum,
                orbit_size=m.orbit_size,
                proof=proof,
            )
        )
    records.sort(key=lambda r: r.canonical)
    return records, multiset_count(cfg.k, allow_zero=allow_zero)


# --- stages ---------------------------------------------------------------------

def search_stage1(cfg: SearchConfig) -> SearchReport:
    """Scan all C(k+8,8) zero-free k-digit multisets."""
    if cfg.allow_zero:
        raise ValueError("stage 1 requires allow_zero=False")
    if cfg.k > STAGE1_MAX_K:
        raise ValueError(f"stage 1 is capped at k = {STAGE1_MAX_K}")
    t0 = time.monotonic()
    records, scanned = _scan(cfg, allow_zero=False)
    return SearchReport(
        k=cfg.k,
        records=tuple(records),
        stage1_count=len(records),
        stage2_count=0,
        multisets_scanned=scanned,
        elapsed=time.monotonic() - t0,
    )


def search_stage2(cfg: SearchConfig, lower: Iterable[PinnRecord]) -> SearchReport:
    """Re-verify zero augmentations of shorter zero-free classes and merge
    them with a fresh stage-1 scan at width k.

    Every augmentation is re-tested: padding a PINN class with zeros can
    break it (the new digit pairs (u, 0) must also satisfy the criterion),
    so inherited membership is never assumed.
    """
    if not cfg.allow_zero:
        raise ValueError("stage 2 requires allow_zero=True")
    t0 = time.monotonic()
    k = cfg.k
    lower = list(lower)
    lengths = set()
    for rec in lower:
        j = rec.multiset.k
        if rec.multiset.counts[0]:
            raise ValueError(f"lower record {rec.canonical} contains zeros")
        if j >= k:
            raise ValueError(f"lower record {rec.canonical} is not shorter than k={k}")
        lengths.add(j)
    # Lengths 1..9 all have zero-free classes, so a gap there means the
    # caller's catalog is incomplete.  Beyond 9 an absent length is
    # legitimate (most have no zero-free classes at all).
    missing = [j for j in range(1, min(k - 1, 9) + 1) if j not in lengths]
    if missing:
        raise MissingLowerCatalog(f"no zero-free classes for lengths {missing}")

    stage1 = search_stage1(replace(cfg, allow_zero=False))
    augmented = []
    for rec in sorted(lower, key=lambda r: (r.multiset.k, r.canonical)):
        m = rec.multiset.with_zeros(k - rec.multiset.k)
        if cfg.exclude_repdigits and m.is_repdigit:
            continue
        ok, proof = is_pinn_criterion(m)
        if ok:
            augmented.append(
                PinnRecord(
                    multiset=m,
                    canonical=m.canonical,
                    digit_sum=m.digit_sum,
                    orbit_size=m.orbit_size,
                    proof=proof,
                )
            )
    records = sorted(
        list(stage1.records) + augmented, key=lambda r: r.canonical
    )
    return SearchReport(
        k=k,
        records=tuple(records),
        stage1_count=stage1.stage1_count,
        stage2_count=len(augmented),
        multisets_scanned=stage1.multisets_scanned + len(lower),
        elapsed=time.monotonic() - t0,
    )


def search(cfg: SearchConfig) -> SearchReport:
    """Full search at width k: stage 1, or both stages when zeros are in.

    With exhaustive_zero_scan set, additionally scans every k-digit
    multiset outright and demands set equality with the two-stage result;
    a mismatch raises TwoStageIncomplete naming the disputed classes.
    """
    if not cfg.allow_zero:
        return search_stage1(cfg)
    t0 = time.monotonic()
    lower = []
    for j in range(1, cfg.k):
        sub = replace(cfg, k=j, allow_zero=False, exclude_repdigits=False)
        lower.extend(search_stage1(sub).records)
    report = search_stage2(cfg, lower)
    if cfg.exhaustive_zero_scan:
        full_records, full_scanned = _scan(cfg, allow_zero=True)
        if cfg.exclude_repdigits:
            full_records = [
                r for r in full_records if not r.multiset.is_repdigit
            ]
        got = {r.multiset for r in report.records}
        want = {r.multiset for r in full_records}
        if got != want:
            diff = sorted(m.canonical for m in got ^ want)
            raise TwoStageIncomplete(
                f"two-stage and full scans disagree on: {diff}"
            )
        report = replace(
            report,
            multisets_scanned=report.multisets_scanned + full_scanned,
        )
    return replace(report, elapsed=time.monotonic() - t0)


# --- value expansion and census ---------------------------------------------------

def report_values(report: SearchReport) -> list[int]:
    """All k-digit values covered by the report's classes, ascending."""
    values = []
    for rec in report.records:
        values.extend(
            int(perm) for perm in orbit(rec.multiset) if perm[0] != "0"
        )
    values.sort()
    return values


class CensusResult(NamedTuple):
    pinn_count: int
    niven_count: int
    digit_sum_histogram: dict[int, int]


def _niven_count_upto(max_value: int) -> int:
    # digit sum maintained incrementally; a trailing 9 rolling over drops it by 9
    count = 0
    s = 0
    for n in range(1, max_value + 1):
        s += 1
        m = n
        while m % 10 == 0:
            s -= 9
            m //= 10
        if n % s == 0:
            count += 1
    return count


def census(max_value: int, orbit_budget: int = DEFAULT_ORBIT_BUDGET) -> CensusResult:
    """Count PINNs and Niven numbers in [1, max_value], with the PINN
    digit-sum histogram.

    Verifies on the way that every counted PINN class with more than one
    nonzero digit, repdigits aside, has digit sum divisible by 3 and
    within [3, 81].
    """
    if not 1 <= max_value <= CENSUS_MAX:
        raise ValueError(f"census covers 1..{CENSUS_MAX}")
    top_k = len(str(max_value))
    pinn_count = 0
    histogram: Counter[int] = Counter()
    for k in range(1, top_k + 1):
        report = search(SearchConfig(k=k, allow_zero=True, orbit_budget=orbit_budget))
        for rec in report.records:
            m = rec.multiset
            nonzero = m.k - m.counts[0]
            if nonzero > 1 and not m.is_repdigit:
                if rec.digit_sum % 3 or not 3 <= rec.digit_sum <= 81:
                    raise AssertionError(
                        f"digit-sum property violated by {rec.canonical}: "
                        f"sum {rec.digit_sum}"
                    )
            if k < top_k:
                n_values = rec.orbit_size * (m.k - m.counts[0]) // m.k
            else:
                n_values = sum(
                    1
                    for perm in orbit(m)
                    if perm[0] != "0" and int(perm) <= max_value
                )
            pinn_count += n_values
            histogram[rec.digit_sum] += n_values
    return CensusResult(
        pinn_count=pinn_count,
        niven_count=_niven_count_upto(max_value),
        digit_sum_histogram={s: c for s, c in sorted(histogram.items()) if c},
    )
