import io
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_sigma
from oddperfect.arithmetic import factorize, sigma
from oddperfect.forms import TouchardVariant, touchard_class_direct
from oddperfect.scan import (
    Parity,
    Prefilter,
    ScanConfig,
    ScanRecord,
    Verdict,
    scan_range,
    segment_sigma,
    segment_sigma_odd,
    verify_even_perfect,
    write_jsonl,
)


def test_segment_sigma_matches_core_sigma():
    lo, hi = 2, 10**5
    sieve = segment_sigma(lo, hi)
    assert all(sieve[n - lo] == sigma(factorize(n)) for n in range(lo, hi))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 3000))
def test_segment_sigma_arbitrary_windows(lo, width):
    sieve = segment_sigma(lo, lo + width)
    assert [int(x) for x in sieve] == [naive_sigma(n) for n in range(lo, lo + width)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 3000))
def test_segment_sigma_odd_arbitrary_windows(lo, width):
    first, sieve = segment_sigma_odd(lo, lo + width)
    odds = [n for n in range(lo, lo + width) if n % 2]
    assert first == lo | 1
    assert [int(x) for x in sieve] == [naive_sigma(n) for n in odds]


def test_segment_sigma_odd_empty_window():
    first, sieve = segment_sigma_odd(4, 5)
    assert sieve.size == 0


def test_scan_small_range():
    res = scan_range(ScanConfig(2, 10**4))
    assert res.perfect == [6, 28, 496, 8128]
    assert res.summary.scanned == 10**4 - 2
    assert res.summary.resume_from == 10**4


def test_scan_trivial_range():
    res = scan_range(ScanConfig(2, 3))
    assert res.perfect == []
    assert res.summary.scanned == 1


@pytest.mark.parametrize("lo, hi", [(0, 10), (10, 10), (5, 3)])
def test_scan_config_rejects_bad_range(lo, hi):
    with pytest.raises(ValueError):
        ScanConfig(lo, hi)


def test_scan_config_rejects_bad_sizes():
    with pytest.raises(ValueError):
        ScanConfig(1, 10, segment_size=0)
    with pytest.raises(ValueError):
        ScanConfig(1, 10, worker_count=0)


def test_touchard_prefilter_skip_count_small():
    res = scan_range(ScanConfig(3, 3 + 36 * 50, Parity.ODD_ONLY, Prefilter.TOUCHARD))
    # one period of 36 holds 18 odd residues; 1, 13, 25, 9 pass
    assert res.summary.skipped == 14 * 50
    assert res.summary.scanned == 4 * 50


def test_prefilter_never_rejects_touchard_classes():
    from oddperfect.scan import _passes_touchard

    values = np.arange(1, 36 * 20, 2)
    passed = _passes_touchard(values)
    for v, ok in zip(values.tolist(), passed.tolist()):
        accepted = not touchard_class_direct(v).excluded
        assert ok == accepted


def test_prefilter_applies_to_odd_only_under_parity_all():
    res = scan_range(ScanConfig(1, 37, Parity.ALL, Prefilter.TOUCHARD))
    assert res.summary.skipped == 14
    assert res.summary.scanned == 36 - 14


@pytest.mark.parametrize("workers, seg", [(1, 7), (2, 1000), (3, 4096), (1, 10**6)])
def test_scan_deterministic_across_layout(workers, seg):
    base = scan_range(ScanConfig(2, 200000))
    res = scan_range(ScanConfig(2, 200000, segment_size=seg, worker_count=workers))
    assert [r.n for r in res.records] == [r.n for r in base.records]
    assert res.summary.scanned == base.summary.scanned
    assert res.summary.skipped == base.summary.skipped


def test_near_miss_reporting():
    res = scan_range(ScanConfig(2, 1000, near_miss=1))
    near = [r.n for r in res.records if r.verdict is Verdict.NOT_PERFECT]
    expected = [n for n in range(2, 1000) if abs(naive_sigma(n) - 2 * n) == 1]
    assert near == expected
    assert res.summary.hits == 3


def test_records_are_sorted_and_delivered_in_order():
    seen = []
    res = scan_range(ScanConfig(2, 10**4, segment_size=100, worker_count=2, near_miss=2), on_record=seen.append)
    assert seen == res.records
    assert [r.n for r in seen] == sorted(r.n for r in seen)


def test_interrupt_returns_partial_result():
    def boom(rec):
        if rec.n == 496:
            raise KeyboardInterrupt

    res = scan_range(ScanConfig(2, 10**4, segment_size=100), on_record=boom)
    assert res.summary.interrupted
    # the segment holding 496 did not complete
    assert res.summary.resume_from == 402
    assert [r.n for r in res.records][:2] == [6, 28]


def test_record_touchard_class():
    res = scan_range(ScanConfig(2, 100))
    assert all(r.touchard.variant is TouchardVariant.EXCLUDED for r in res.records)


@pytest.mark.parametrize("n, expected", [(6, True), (28, True), (496, True), (8128, True), (33550336, True)])
def test_verify_even_perfect(n, expected):
    rec = ScanRecord(n, 2 * n, Verdict.PERFECT, touchard_class_direct(n))
    assert verify_even_perfect(rec) is expected


@pytest.mark.parametrize("n", [12, 2**10 * (2**11 - 1), 9, 2])
def test_verify_even_perfect_flags_anomalies(n):
    # 2^11 - 1 = 23 * 89 is not prime
    rec = ScanRecord(n, 2 * n, Verdict.PERFECT, touchard_class_direct(n))
    assert not verify_even_perfect(rec)


def test_jsonl_output():
    res = scan_range(ScanConfig(2, 500))
    buf = io.StringIO()
    write_jsonl(res, buf)
    lines = [json.loads(line) for line in buf.getvalue().splitlines()]
    assert lines[0] == {"n": "6", "sigma": "12", "verdict": "Perfect", "touchard_class": "Excluded"}
    assert [line["n"] for line in lines[:-1]] == ["6", "28", "496"]
    summary = lines[-1]
    assert set(summary) >= {"scanned", "skipped", "hits", "elapsed_ms", "resume_from"}
    assert summary["hits"] == "3" and summary["resume_from"] == "500"
