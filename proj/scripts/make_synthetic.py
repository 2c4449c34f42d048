#!/usr/bin/env python3
"""Generate the bundled synthetic OHLC dataset (ST01..ST10).

Ten assets, weekday bars from 2016-01-04, geometric Brownian motion with
heterogeneous drift/volatility (riskier assets drift faster, so the
risk/return trade-off is non-trivial). High/low wrap the close by a
half-normal factor. Deterministic: fixed seed, fixed formatting.

The generated files are committed; this script records how they were made.
"""

import argparse
import datetime as dt
import pathlib

import numpy as np

BARS = 1250
START = dt.date(2016, 1, 4)  # a Monday


def weekdays(start: dt.date, count: int):
    out = []
    day = start
    while len(out) < count:
        if day.weekday() < 5:
            out.append(day)
        day += dt.timedelta(days=1)
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/golden", help="output directory")
    parser.add_argument("--seed", type=int, default=20160104)
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)
    dates = weekdays(START, BARS)

    for i in range(10):
        ticker = f"ST{i + 1:02d}"
        sigma = 0.006 + 0.0028 * i  # daily volatility, 0.6% .. 3.1%
        mu = 0.00008 + 0.037 * (sigma - 0.006)  # riskier -> faster drift
        start_price = 20.0 + 7.0 * i

        steps = rng.normal(mu, sigma, size=BARS)
        closes = start_price * np.exp(np.cumsum(steps))
        spread = 0.6 * sigma
        highs = closes * np.exp(np.abs(rng.normal(0.0, spread, size=BARS)))
        lows = closes * np.exp(-np.abs(rng.normal(0.0, spread, size=BARS)))

        path = out_dir / f"{ticker}.csv"
        with path.open("w", newline="\n") as fh:
            fh.write("date,close,high,low\n")
            for day, c, h, l in zip(dates, closes, highs, lows):
                fh.write(f"{day.isoformat()},{c:.4f},{h:.4f},{l:.4f}\n")
        print(f"wrote {path} ({BARS} bars, sigma={sigma:.4f}, mu={mu:.5f})")


if __name__ == "__main__":
    main()
