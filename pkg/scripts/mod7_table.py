"""Tabulate p^4+p^2+1 mod 3 and mod 7 against n mod 7 for primes p = 12n+1, 12n+5.

    python scripts/mod7_table.py --bound 100000
"""

import argparse
from collections import Counter

from oddperfect.arithmetic import primes_below
from oddperfect.forms import quartic, quartic_div7_predict


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=10**5)
    args = ap.parse_args()

    counts = Counter()
    for p in primes_below(args.bound + 1):
        r = p % 12
        if r not in (1, 5):
            continue
        n7 = (p - r) // 12 % 7
        counts[r, n7, quartic(p) % 7 == 0, quartic(p) % 3 == 0] += 1

    print(f"{'class':>7} {'n mod 7':>8} {'predicted':>16} {'7|quartic':>10} {'3|quartic':>10} {'primes':>8}")
    for r in (1, 5):
        for n7 in range(7):
            rows = [(k, v) for k, v in counts.items() if k[0] == r and k[1] == n7]
            pred = quartic_div7_predict(r, n7).value
            if not rows:
                print(f"12n+{r:<3} {n7:>8} {pred:>16} {'-':>10} {'-':>10} {0:>8}")
            for (_, _, d7, d3), v in sorted(rows):
                print(f"12n+{r:<3} {n7:>8} {pred:>16} {str(d7):>10} {str(d3):>10} {v:>8}")


if __name__ == "__main__":
    main()
