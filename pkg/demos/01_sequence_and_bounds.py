"""
The arc-count sequence against the classical upper bounds
=========================================================

x_n is the number of arcs in the recursive clique O_n. Here we compare it with
the Katona-Szemeredi, FHPZ and KLSS upper bounds on the minimum arc count.
"""

import numpy as np

from weakdiam2.cli import bounds_row
from weakdiam2.sequence import x, x_alt, x_table

# First values of the sequence; the three-term recurrence reproduces them.
print([x(n) for n in range(1, 16)])
print([x_alt(n) for n in range(1, 16)])

# The bounds table at powers of ten.
for n in (10, 100, 1000, 10**4, 10**5, 10**6):
    print(bounds_row(n).csv())

# The whole table up to a million is a vectorized computation.
t = x_table(10**6)
n = np.arange(2, 10**6 + 1)
ratio = t[2:] / (n * np.log2(n))
print("x_n / (n log2 n) at n = 1e6:", ratio[-1])

# How much x_n saves over FHPZ, in relative terms
for n in (100, 10**4, 10**6):
    r = bounds_row(n)
    print(n, f"{1 - r.xn / r.fhpz:.3%} below FHPZ")
