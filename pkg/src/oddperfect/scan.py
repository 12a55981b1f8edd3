"""Parallel range scan for perfect numbers using a segmented divisor-sum sieve."""

from __future__ import annotations

import enum
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Iterator, Optional

import numpy as np

from oddperfect.arithmetic import is_prime
from oddperfect.forms import TouchardClass, touchard_class_direct

log = logging.getLogger(__name__)

# sigma(n) < 2**62 comfortably for every n below this
MAX_HI = 10**12


class Parity(str, enum.Enum):
    ALL = "all"
    ODD_ONLY = "odd_only"


class Prefilter(str, enum.Enum):
    NONE = "none"
    TOUCHARD = "touchard"


class Verdict(str, enum.Enum):
    PERFECT = "Perfect"
    NOT_PERFECT = "NotPerfect"


@dataclass
class ScanConfig:
    lo: int
    hi: int
    parity: Parity = Parity.ALL
    prefilter: Prefilter = Prefilter.NONE
    segment_size: int = 1 << 20
    worker_count: int = 1
    # report n with 0 < |sigma(n) - 2n| <= threshold; None disables
    near_miss: Optional[int] = None

    def __post_init__(self):
        self.parity = Parity(self.parity)
        self.prefilter = Prefilter(self.prefilter)
        if not 1 <= self.lo < self.hi:
            raise ValueError(f"need 1 <= lo < hi, got [{self.lo}, {self.hi})")
        if self.hi > MAX_HI:
            raise ValueError(f"hi above {MAX_HI} is not supported")
        if self.segment_size < 1 or self.worker_count < 1:
            raise ValueError("segment_size and worker_count must be >= 1")
        if self.near_miss is not None and self.near_miss < 0:
            raise ValueError("near_miss threshold must be >= 0")

    def segments(self) -> Iterator[tuple[int, int]]:
        for a in range(self.lo, self.hi, self.segment_size):
            yield a, min(a + self.segment_size, self.hi)


@dataclass(frozen=True)
class ScanRecord:
    n: int
    sigma_n: int
    verdict: Verdict
    touchard: TouchardClass

    def to_json(self) -> dict:
        return {
            "n": str(self.n),
            "sigma": str(self.sigma_n),
            "verdict": self.verdict.value,
            "touchard_class": self.touchard.variant.value,
        }


@dataclass
class ScanSummary:
    scanned: int = 0
    skipped: int = 0
    hits: int = 0
    elapsed_ms: int = 0
    # every n < resume_from has been fully scanned
    resume_from: int = 0
    interrupted: bool = False

    def to_json(self) -> dict:
        return {
            "scanned": str(self.scanned),
            "skipped": str(self.skipped),
            "hits": str(self.hits),
            "elapsed_ms": str(self.elapsed_ms),
            "resume_from": str(self.resume_from),
            "interrupted": self.interrupted,
        }


@dataclass
class ScanResult:
    records: list[ScanRecord] = field(default_factory=list)
    summary: ScanSummary = field(default_factory=ScanSummary)

    @property
    def perfect(self) -> list[int]:
        return [r.n for r in self.records if r.verdict is Verdict.PERFECT]


def segment_sigma(lo: int, hi: int) -> np.ndarray:
    """sigma(n) for every n in [lo, hi), lo >= 1.

    Each divisor pair (d, n/d) with d <= sqrt(n) is added once, walking
    the multiples of d that are at least d*d.
    """
    out = np.zeros(hi - lo, dtype=np.int64)
    for d in range(1, isqrt(hi - 1) + 1):
        start = max(d * d, -(-lo // d) * d)
        if start >= hi:
            continue
        k0 = start // d
        count = (hi - 1 - start) // d + 1
        out[start - lo :: d] += d + np.arange(k0, k0 + count, dtype=np.int64)
        if start == d * d:
            out[start - lo] -= d
    return out


def segment_sigma_odd(lo: int, hi: int) -> tuple[int, np.ndarray]:
    """sigma over the odd n in [lo, hi); returns (first odd n, values)."""
    first = lo | 1
    size = max(0, (hi - first + 1) // 2)
    out = np.zeros(size, dtype=np.int64)
    if size == 0:
        return first, out
    last = first + 2 * (size - 1)
    for d in range(1, isqrt(last) + 1, 2):
        # smallest odd multiple of d that is >= max(d*d, first)
        k = max(d, -(-first // d))
        k |= 1
        start = k * d
        if start > last:
            continue
        count = (last - start) // (2 * d) + 1
        out[(start - first) // 2 :: d] += d + np.arange(k, k + 2 * count, 2, dtype=np.int64)
        if k == d:
            out[(start - first) // 2] -= d
    return first, out


def _passes_touchard(values: np.ndarray) -> np.ndarray:
    return (values % 12 == 1) | (values % 36 == 9)


def _scan_segment(args) -> tuple[int, int, list[tuple[int, int]]]:
    lo, hi, parity, prefilter, near_miss = args
    if parity is Parity.ODD_ONLY:
        first, sig = segment_sigma_odd(lo, hi)
        values = first + 2 * np.arange(sig.size, dtype=np.int64)
    else:
        sig = segment_sigma(lo, hi)
        values = np.arange(lo, hi, dtype=np.int64)

    keep = np.ones(values.size, dtype=bool)
    if prefilter is Prefilter.TOUCHARD:
        odd = values % 2 == 1
        keep = ~odd | _passes_touchard(values)
    skipped = int(values.size - np.count_nonzero(keep))

    gap = np.abs(sig - 2 * values)
    tol = 0 if near_miss is None else near_miss
    idx = np.nonzero(keep & (gap <= tol))[0]
    rows = [(int(values[i]), int(sig[i])) for i in idx]
    return int(np.count_nonzero(keep)), skipped, rows


def _make_record(n: int, s: int) -> ScanRecord:
    verdict = Verdict.PERFECT if s == 2 * n else Verdict.NOT_PERFECT
    return ScanRecord(n, s, verdict, touchard_class_direct(n))


def scan_range(
    cfg: ScanConfig,
    on_record: Optional[Callable[[ScanRecord], None]] = None,
) -> ScanResult:
    """Scan [cfg.lo, cfg.hi) for perfect numbers (and near misses if enabled).

    Records are delivered to on_record in ascending n as soon as every
    earlier segment is done. On KeyboardInterrupt the partial result is
    returned with summary.interrupted set and resume_from marking the
    end of the contiguous completed prefix.
    """
    t0 = time.perf_counter()
    result = ScanResult()
    summary = result.summary
    summary.resume_from = cfg.lo
    jobs = [(a, b, cfg.parity, cfg.prefilter, cfg.near_miss) for a, b in cfg.segments()]

    def absorb(job, out):
        scanned, skipped, rows = out
        summary.scanned += scanned
        summary.skipped += skipped
        for n, s in rows:
            rec = _make_record(n, s)
            if rec.verdict is Verdict.PERFECT:
                summary.hits += 1
            result.records.append(rec)
            if on_record is not None:
                on_record(rec)
        summary.resume_from = job[1]

    pool = None
    try:
        if cfg.worker_count == 1 or len(jobs) == 1:
            for job in jobs:
                absorb(job, _scan_segment(job))
        else:
            pool = ProcessPoolExecutor(max_workers=cfg.worker_count)
            # map yields in submission order, which keeps output sorted
            for job, out in zip(jobs, pool.map(_scan_segment, jobs)):
                absorb(job, out)
    except KeyboardInterrupt:
        log.warning("scan interrupted; resume from %d", summary.resume_from)
        summary.interrupted = True
    finally:
        if pool is not None:
            pool.shutdown(wait=not summary.interrupted, cancel_futures=True)
        summary.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return result


def verify_even_perfect(record: ScanRecord) -> bool:
    """True iff record.n = 2^(k-1) * (2^k - 1) with 2^k - 1 prime."""
    n = record.n
    if n < 2 or n % 2:
        return False
    v = (n & -n).bit_length() - 1
    k = v + 1
    return n >> v == (1 << k) - 1 and is_prime((1 << k) - 1)


def write_jsonl(result: ScanResult, fh) -> None:
    for rec in result.records:
        fh.write(json.dumps(rec.to_json()) + "\n")
    fh.write(json.dumps(result.summary.to_json()) + "\n")
