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

"""Emit Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p) is expanded about p = 1/2
(x = p - 1/2); the C_k are linear combinations of derivatives of Psi.
"""
import sys
from mpmath import mp, mpf, pi, cos, sin, factorial

mp.dps = 80
DEG = 100


def cos_series(c, deg):
    # cos(c*x) coefficients
    out = [mpf(0)] * (deg + 1)
    for k in range(0, deg + 1, 2):
        out[k] = (-1) ** (k // 2) * c ** k / factorial(k)
    return out


def sin_series(c, deg):
    out = [mpf(0)] * (deg + 1)
    for k in range(1, deg + 1, 2):
        out[k] = (-1) ** (k // 2) * c ** k / factorial(k)
    return out


def subst_x2(s, deg):
    # f(y) -> f(x^2)
    out = [mpf(0)] * (deg + 1)
    for k, v in enumerate(s):
        if 2 * k <= deg:
            out[2 * k] = v
    return out


def divide(num, den, deg):
    q = [mpf(0)] * (deg + 1)
    for n in range(deg + 1):
        acc = num[n] - sum(q[i] * den[n - i] for i in range(n))
        q[n] = acc / den[0]
    return q


def deriv(s, m):
    out = list(s)
    for _ in range(m):
        out = [out[k] * k for k in range(1, len(out))] + [mpf(0)]
    return out


def lin(*pairs):
    n = len(pairs[0][1])
    return [sum(c * s[i] for c, s in pairs) for i in range(n)]


big = 4 * DEG
a = 5 * pi / 8
num = lin((cos(a), subst_x2(cos_series(2 * pi, big), big)[: big + 1]),
          (sin(a), subst_x2(sin_series(2 * pi, big), big)[: big + 1]))
num = [-v for v in num]
den = cos_series(2 * pi, big)
psi = divide(num, den, big)

P = lambda m: deriv(psi, m)
C = [
    P(0),
    lin((-1 / (96 * pi ** 2), P(3))),
    lin((1 / (64 * pi ** 2), P(2)), (1 / (18432 * pi ** 4), P(6))),
    lin((-1 / (64 * pi ** 2), P(1)), (-1 / (3840 * pi ** 4), P(5)),
        (-1 / (5308416 * pi ** 6), P(9))),
    lin((1 / (128 * pi ** 2), P(0)), (19 / (24576 * pi ** 4), P(4)),
        (11 / (5898240 * pi ** 6), P(8)), (1 / (2038431744 * pi ** 8), P(12))),
]

out = sys.stdout
out.write("// Generated by gen_rs_coeffs.py: Taylor coefficients in x = p - 1/2.\n")
out.write(f"constexpr int kRsDegree = {DEG};\n")
out.write(f"constexpr long double kRsCoeff[5][{DEG + 1}] = {{\n")
for k in range(5):
    out.write("  {\n")
    for i in range(DEG + 1):
        out.write(f"    {mp.nstr(C[k][i], 30, min_fixed=1, max_fixed=0)}L,\n")
    out.write("  },\n")
out.write("};\n")
