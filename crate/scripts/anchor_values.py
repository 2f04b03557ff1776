#!/usr/bin/env python3
"""Recompute the small-n values of the three sum identities by brute force.

Uses only Python's Fraction and integer arithmetic. Bernoulli numbers come
from the Akiyama-Tanigawa triangle, Euler numbers from the power-series
reciprocal of cosh t, and Stirling numbers from expanding the falling
factorial, so nothing here shares a recurrence with the Rust library.
The printed values are frozen into the acceptance suite.
"""
from fractions import Fraction as F
from math import factorial
import sys


def bernoulli(n):
    a, out = [], []
    for m in range(n + 1):
        a.append(F(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(-a[0] if m == 1 else a[0])
    return out


def euler(n):
    cosh = [F(1, factorial(k)) if k % 2 == 0 else F(0) for k in range(n + 1)]
    r = [F(1)]
    for i in range(1, n + 1):
        r.append(-sum(cosh[j] * r[i - j] for j in range(1, i + 1)))
    return [int(r[k] * factorial(k)) for k in range(n + 1)]


def stirling_row(n):
    c = [1]
    for j in range(n):
        nxt = [0] * (len(c) + 1)
        for k, a in enumerate(c):
            nxt[k + 1] += a
            nxt[k] -= j * a
        c = nxt
    return c


def rising(x, n):
    p = F(1)
    for i in range(n):
        p *= x + i
    return p


def sides(n, B, E):
    s = stirling_row(n)
    sign = 1 if n % 2 == 0 else -1
    odd_df = 1
    for i in range(1, n + 1):
        odd_df *= 2 * i - 1
    first = (sum(s[k] * B[k] for k in range(n + 1)), F(sign * factorial(n), n + 1))
    second = (
        sum(s[k] * (F(1, 2**k) - 2) * B[k + 1] / (k + 1) for k in range(n + 1)),
        F(sign, n + 1) * F(odd_df, 2 ** (n + 1)),
    )
    third = (
        sum(
            s[k] * ((1 + F(1, 2 ** (k + 1)) * (1 - F(1, 2**k))) * B[k + 1]
                    + F(k + 1, 4 ** (k + 1)) * E[k]) / (k + 1)
            for k in range(n + 1)
        ),
        F(-sign, 4 * (n + 1)) * rising(F(3, 4), n),
    )
    return first, second, third


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    B, E = bernoulli(n_max + 1), euler(n_max)
    for n in range(n_max + 1):
        row = sides(n, B, E)
        assert all(l == r for l, r in row), f"identity fails at n={n}"
        print(n, *(str(l) for l, _ in row))


if __name__ == "__main__":
    main()
