#!/usr/bin/env python3
# Copyright 2026 The skewes-cert Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Polish selected zero ordinates with mpmath's Z(t) and rewrite the table.

usage: refine_zeros.py ZEROS_TXT REFINE_LIST OUT_TXT [--accuracy 1e-9]

REFINE_LIST holds "index ordinate" lines (1-based) as produced by zeta_zeros.
Each listed zero is refined by the secant method on mpmath.siegelz at 30
digits; a refined value that moves by more than 1e-3 aborts the run.
"""
import argparse
import sys

from mpmath import mp, mpf, siegelz

mp.dps = 30


def polish(t0):
    h = mpf("1e-7")
    x0, x1 = t0, t0 + h
    f0, f1 = siegelz(x0), siegelz(x1)
    for _ in range(30):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        x0, f0 = x1, f1
        x1, f1 = x2, siegelz(x2)
        if abs(x1 - x0) < mpf("1e-16"):
            break
    return x1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("zeros")
    ap.add_argument("refine_list")
    ap.add_argument("out")
    ap.add_argument("--accuracy", default="1e-9")
    ap.add_argument("--cache", help="append-only 'index value' file; lets an interrupted run resume")
    args = ap.parse_args()

    done = {}
    if args.cache:
        try:
            with open(args.cache) as f:
                for line in f:
                    parts = line.split()
                    if len(parts) == 2:
                        done[int(parts[0])] = parts[1]
        except FileNotFoundError:
            pass
    cache = open(args.cache, "a") if args.cache else None

    with open(args.zeros) as f:
        zeros = [line.strip() for line in f if line.strip() and not line.startswith("#")]
    with open(args.refine_list) as f:
        todo = [line.split() for line in f if line.strip()]

    for k, (idx, t) in enumerate(todo):
        i = int(idx) - 1
        if int(idx) in done:
            zeros[i] = done[int(idx)]
            continue
        refined = polish(mpf(t))
        if abs(refined - mpf(t)) > mpf("1e-3"):
            sys.exit(f"zero {idx} moved from {t} to {refined}")
        zeros[i] = mp.nstr(refined, 25, min_fixed=-1, max_fixed=30)
        if cache:
            cache.write(f"{idx} {zeros[i]}\n")
            cache.flush()
        if k % 500 == 0:
            print(f"{k}/{len(todo)} zero {idx}: {t} -> {zeros[i]}", file=sys.stderr, flush=True)

    with open(args.out, "w") as f:
        f.write(f"# accuracy: {args.accuracy}\n")
        for z in zeros:
            v = mpf(z)
            f.write(mp.nstr(v, 12 + len(str(int(v))), strip_zeros=False) + "\n")


if __name__ == "__main__":
    main()
