"""Time the segmented sieve scan over growing bounds and worker counts.

    python scripts/scan_timing.py --max-exp 8 --jobs 1 2 4
"""

import argparse

from oddperfect.scan import Parity, Prefilter, ScanConfig, scan_range


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=7)
    ap.add_argument("--jobs", type=int, nargs="+", default=[1])
    ap.add_argument("--segment-size", type=int, default=1 << 20)
    args = ap.parse_args()

    print(f"{'hi':>12} {'mode':>14} {'jobs':>5} {'ms':>8} {'scanned':>11} {'skipped':>11}  perfect")
    for exp in range(4, args.max_exp + 1):
        for jobs in args.jobs:
            for parity, prefilter in [
                (Parity.ALL, Prefilter.NONE),
                (Parity.ODD_ONLY, Prefilter.NONE),
                (Parity.ODD_ONLY, Prefilter.TOUCHARD),
            ]:
                cfg = ScanConfig(3 if parity is Parity.ODD_ONLY else 2, 10**exp, parity, prefilter,
                                 segment_size=args.segment_size, worker_count=jobs)
                res = scan_range(cfg)
                s = res.summary
                mode = parity.value if prefilter is Prefilter.NONE else "odd+touchard"
                print(f"{10**exp:>12} {mode:>14} {jobs:>5} {s.elapsed_ms:>8} {s.scanned:>11} {s.skipped:>11}  {res.perfect}")


if __name__ == "__main__":
    main()
