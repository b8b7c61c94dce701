#!/usr/bin/env python3
"""Reference values for the helpfulness bounds, computed with mpmath.

Writes crates/core/tests/data/bound_grid.csv. Inputs are drawn as doubles
and printed with repr() so the Rust side sees the exact same values.

    python3 scripts/bound_oracle.py [--points 1000] [--seed 20121]
"""

import argparse
import math
import random
from pathlib import Path

import mpmath as mp

mp.mp.dps = 60


def log_term(n, l):
    return max(mp.mpf(0), mp.log(mp.sqrt(2 * n) * l))


def alpha_star(n, l, m):
    if n == 0 or l <= m:
        return None
    a = mp.sqrt(log_term(n, l) / (2 * n)) / (l - m)
    return min(max(a, mp.mpf(0)), mp.mpf(1))


def b_of_alpha(a, n, l, m):
    spread = a * (l - m)
    return mp.exp(-2 * n * spread**2) + ((1 - a) * m + a * l) / l


def b_star(n, l, m):
    if n == 0 or l <= 0 or m >= l:
        return mp.mpf(1), True
    raw = (1 + mp.sqrt(log_term(n, l))) / (mp.sqrt(2 * n) * l) + m / l
    return min(raw, mp.mpf(1)), raw > 1


def fmt(x):
    return "nan" if x is None else mp.nstr(x, 25, strip_zeros=False)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=20121)
    ap.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "crates/core/tests/data/bound_grid.csv",
    )
    args = ap.parse_args()
    rng = random.Random(args.seed)

    rows = ["n,l,mean_x,alpha_star,b_at_alpha_star,b_star,clamped"]
    for _ in range(args.points):
        n = int(10 ** rng.uniform(0, 6))
        l = rng.uniform(1e-3, 1.0)
        m = rng.uniform(0.0, 1.0) if rng.random() < 0.2 else rng.uniform(0.0, l)
        N, L, M = mp.mpf(n), mp.mpf(l), mp.mpf(m)
        a = alpha_star(N, L, M)
        b = None if a is None else b_of_alpha(a, N, L, M)
        bs, capped = b_star(N, L, M)
        raw_a = None if a is None else mp.sqrt(log_term(N, L) / (2 * N)) / (L - M)
        clamped = (
            a is None
            or capped
            or mp.log(mp.sqrt(2 * N) * L) <= 0
            or raw_a > 1
        )
        rows.append(
            f"{n},{l!r},{m!r},{fmt(a)},{fmt(b)},{fmt(bs)},{int(bool(clamped))}"
        )
    args.out.write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
