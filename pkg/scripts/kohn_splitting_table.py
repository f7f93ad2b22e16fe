#!/usr/bin/env python3
"""Print the splitting of the Kohn singularities around q = 2 as the
dimensionless frequency x grows, next to the small-x law q_{1,2} ~ 2 +- x."""

from qplasma.kohn import kohn_roots_dimless

print(f"{'x':>8} {'q1':>14} {'q2':>14} {'q1-q2':>12} {'(q1-q2)/2x':>12}")
for x in (0.001, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.4):
    roots = kohn_roots_dimless(x).roots
    q1, q2 = roots[0].q.real, roots[1].q.real
    print(f"{x:>8g} {q1:>14.9f} {q2:>14.9f} {q1 - q2:>12.6f} {(q1 - q2) / (2 * x):>12.7f}")
