"""
Exact minimum for small n
=========================

An exhaustive search over all orientations of all pair subsets, with pruning,
compared against the sequence. A match at every n is what one expects if the
recursive construction is optimal.
"""

import time

from weakdiam2.search import SearchConfig, conjecture_report, f2_exact, format_report

start = time.perf_counter()
print(format_report(conjecture_report(6)))
print(f"{time.perf_counter() - start:.1f}s")

# n = 7 is quick with the vertex-0 symmetry cut enabled.
out = f2_exact(SearchConfig(7, symmetry=True))
print("\n".join(out.log_lines()))
