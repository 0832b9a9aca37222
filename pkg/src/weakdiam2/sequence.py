"""The recursive arc-count sequence ``x_n`` and the classical upper bounds on f_2(n).

All evaluation is exact integer arithmetic, except for the Füredi-Horak-Pareek-Zhu
bound, which involves ``n log2 n``. That one is evaluated in high-precision decimal
arithmetic and floored (see :func:`bound_fhpz`).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

import numpy as np

BASE_VALUES = (0, 1, 2, 4, 5)

# int64 holds x_n comfortably up to n ~ 1e12 (x_n < n log2 n < 4.2e13).
_TABLE_LIMIT = 10**12


def _check_index(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"index must be an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")


def split(n: int) -> tuple[int, int]:
    """Return the two sub-indices ``(n1, n2)`` that ``x_n`` recurses on, ``n1 >= n2``.

    ``n1 + n2 = n - 1`` always holds. Only meaningful for ``n >= 6``.
    """
    r = n % 4
    if r == 1:
        return (n + 1) // 2, (n - 3) // 2
    if r == 3:
        return (n - 1) // 2, (n - 1) // 2
    return n // 2, (n - 2) // 2


@dataclass
class SequenceTable:
    """Memoized evaluator for ``x_n``.

    The memo is append-only and guarded by a lock, so one table can be shared
    between threads.
    """

    memo: dict[int, int] = field(default_factory=lambda: dict(enumerate(BASE_VALUES, start=1)))
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def x(self, n: int) -> int:
        _check_index(n)
        n = int(n)
        memo = self.memo
        if n in memo:
            return memo[n]
        with self._lock:
            # Explicit worklist: the recursion depth is ~log2 n but we never touch the C stack.
            stack = [n]
            while stack:
                k = stack[-1]
                if k in memo:
                    stack.pop()
                    continue
                a, b = split(k)
                missing = [j for j in (a, b) if j not in memo]
                if missing:
                    stack.extend(missing)
                    continue
                memo[k] = (k - 1) + memo[a] + memo[b]
                stack.pop()
        return memo[n]

    def x_alt(self, n: int) -> int:
        """Evaluate ``x_n`` through the three-term recurrence on the previous values."""
        _check_index(n)
        n = int(n)
        if n <= 3:
            return BASE_VALUES[n - 1]
        value = self.x(n - 1) + self.x(n - 2) - self.x(n - 3)
        return value + 1 if is_special_index(n) else value


_default = SequenceTable()


def x(n: int) -> int:
    """Return ``x_n`` as an exact integer.

    >>> [x(n) for n in range(1, 11)]
    [0, 1, 2, 4, 5, 8, 10, 13, 15, 18]
    """
    return _default.x(n)


def x_alt(n: int) -> int:
    """Return ``x_n`` via ``x_{n-1} + x_{n-2} - x_{n-3}`` plus a unit correction.

    The correction applies when ``n`` is ``3 * 2**i`` or ``3 * 2**i + 1``.
    """
    return _default.x_alt(n)


def is_special_index(n: int) -> bool:
    """True iff ``n >= 4`` and ``n`` equals ``3 * 2**i`` or ``3 * 2**i + 1``.

    Only ``n = 4`` (``3 * 2**0 + 1``) qualifies with ``i = 0``; below 4 the
    three-term recurrence is not used at all.
    """
    if n < 4:
        return False
    if n == 4:
        return True
    if n % 2 == 1:
        n -= 1
    while n % 2 == 0:
        n //= 2
    return n == 3


def x_table(n_max: int) -> np.ndarray:
    """Return an int64 array ``t`` with ``t[n] = x_n`` for ``1 <= n <= n_max`` (``t[0] = 0``).

    Filled in doubling blocks: every index in ``[a, 2a - 1)`` recurses only on
    indices below ``a``, so each block is one vectorized step.
    """
    _check_index(n_max)
    if n_max > _TABLE_LIMIT:
        raise OverflowError(f"x_table is int64-backed; n_max must be <= {_TABLE_LIMIT}")
    t = np.zeros(max(n_max, 5) + 1, dtype=np.int64)
    t[1:6] = BASE_VALUES
    a = 6
    while a <= n_max:
        b = min(2 * a - 1, n_max + 1)
        n = np.arange(a, b, dtype=np.int64)
        n1, n2 = split_arrays(n)
        t[a:b] = (n - 1) + t[n1] + t[n2]
        a = b
    return t[: n_max + 1]


def split_arrays(n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`split`."""
    r = n % 4
    n1 = np.where(r == 1, (n + 1) // 2, np.where(r == 3, (n - 1) // 2, n // 2))
    return n1, n - 1 - n1


def x_alt_table(t: np.ndarray) -> np.ndarray:
    """Three-term recurrence applied to a table from :func:`x_table`.

    Entry ``k`` is computed from ``t[k-1], t[k-2], t[k-3]`` only.
    """
    out = t.copy()
    n_max = len(t) - 1
    if n_max >= 4:
        n = np.arange(4, n_max + 1)
        out[4:] = t[3:-1] + t[2:-2] - t[1:-3] + special_mask(n)
    return out


def special_mask(n: np.ndarray) -> np.ndarray:
    """Vectorized :func:`is_special_index` (as 0/1 int64)."""
    top = int(n.max()) if len(n) else 0
    special = [4]
    p = 6
    while p <= top:
        special += [p, p + 1]
        p *= 2
    return np.isin(n, special).astype(np.int64)


def min_split_sum(n: int, t: np.ndarray | None = None) -> int:
    """Brute-force ``min(x_a + x_b : a + b = n - 1, a, b >= 1)``."""
    if n < 3:
        raise ValueError("need n >= 3 for a split into two non-empty parts")
    if t is None:
        t = x_table(n)
    a = np.arange(1, n - 1)
    return int((t[a] + t[n - 1 - a]).min())


def ceil_log(n: int, base: int) -> int:
    """Smallest ``k >= 0`` with ``base**k >= n``, in integer arithmetic."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    _check_index(n)
    k, p = 0, 1
    while p < n:
        p *= base
        k += 1
    return k


def bound_ks(n: int) -> int:
    """Katona-Szemerédi upper bound ``n * ceil(log2 n)``."""
    _check_index(n)
    return n * ceil_log(n, 2)


def bound_fhpz(n: int) -> int:
    """Füredi-Horak-Pareek-Zhu upper bound ``floor(n log2 n - 3n/2)``, valid for ``n >= 9``.

    For a power of two the value is rational and computed exactly. Otherwise
    ``log2 n`` is irrational and the expression is evaluated with 60 significant
    digits (~200 bits). If the result is within 1e-30 of an integer, precision is
    doubled until the floor is unambiguous.
    """
    _check_index(n)
    if n < 9:
        raise ValueError(f"the FHPZ bound is stated for n >= 9, got n = {n}")
    n = int(n)
    if n & (n - 1) == 0:
        k = n.bit_length() - 1
        return (2 * n * k - 3 * n) // 2
    digits = 60
    while True:
        with localcontext() as ctx:
            ctx.prec = digits
            dn = Decimal(n)
            value = dn * dn.ln() / Decimal(2).ln() - Decimal(3) * dn / 2
            floor = int(value.to_integral_value(rounding="ROUND_FLOOR"))
            frac = value - floor
            if Decimal("1e-30") < frac < 1 - Decimal("1e-30"):
                return floor
        digits *= 2
        if digits > 2000:  # pragma: no cover - would need n log2 n within 1e-1000 of an integer
            raise ArithmeticError(f"could not resolve floor of FHPZ bound at n = {n}")


def bound_klss(n: int, d: int = 2) -> int:
    """Kostochka-Łuczak-Simonyi-Sopena upper bound ``ceil(log_d n) * (n - ceil(log_d n))``."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    _check_index(n)
    if n < 2:
        raise ValueError(f"the KLSS bound needs n >= 2, got n = {n}")
    k = ceil_log(n, d)
    return k * (n - k)


@dataclass
class LemmaReport:
    """Outcome of :func:`check_lemma_suite`.

    ``failures`` maps each inequality family to its first counterexample
    (a dict of the indices involved), or ``None`` if it held everywhere.
    """

    n_max: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, dict | None] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is None for v in self.failures.values())

    def lines(self) -> list[str]:
        out = []
        for name, bad in self.failures.items():
            status = "pass" if bad is None else f"FAIL at {bad}"
            out.append(f"{name}: {self.checked[name]} instances, {status}")
        return out


def check_lemma_suite(n_max: int) -> LemmaReport:
    """Exhaustively check the inequalities that certify the optimal split, for ``n <= n_max``.

    Families (``t`` is the x-table, ``n`` the outer index, ``i`` the inner shift):

    * ``third_difference``:  ``x_n + x_{n-3} >= x_{n-1} + x_{n-2}``, ``n >= 4``
    * ``gap_two_exchange``:  ``x_{n+i} + x_{n-i-2} >= x_{n+i-2} + x_{n-i}``, ``n >= 3``, ``0 <= i <= n-3``
    * ``balanced_pair_floor``: ``x_{n+i} + x_{n-i-2}`` is at least ``x_n + x_{n-2}`` (even ``i``)
      or ``2 x_{n-1}`` (odd ``i``), ``-1 <= i <= n-3``
    * ``parity_convexity``:  ``2 x_n >= x_{n-1} + x_{n+1}`` for even ``n >= 2``, ``<=`` for odd ``n >= 3``
    * ``adjacent_exchange``: ``x_{n-2+i} + x_{n-1-i} <= x_{n-1+i} + x_{n-2-i}``, ``0 <= i <= n-3``
    * ``adjacent_pair_floor``: ``x_{n-1} + x_{n-2} <= x_{n-1+i} + x_{n-2-i}``, ``0 <= i <= n-3``
    """
    if n_max < 5:
        raise ValueError(f"n_max must be >= 5, got {n_max}")
    t = x_table(2 * n_max + 1)
    report = LemmaReport(n_max)

    def record(name: str, count: int, bad: dict | None) -> None:
        report.checked[name] = report.checked.get(name, 0) + count
        if name not in report.failures or report.failures[name] is None:
            report.failures[name] = bad

    n = np.arange(4, n_max + 1)
    ok = t[n] + t[n - 3] >= t[n - 1] + t[n - 2]
    record("third_difference", len(n), None if ok.all() else {"n": int(n[~ok][0])})

    n = np.arange(2, n_max + 1)
    even = n % 2 == 0
    lhs, rhs = 2 * t[n], t[n - 1] + t[n + 1]
    ok = np.where(even, lhs >= rhs, lhs <= rhs)
    record("parity_convexity", len(n), None if ok.all() else {"n": int(n[~ok][0])})

    for name in ("gap_two_exchange", "balanced_pair_floor", "adjacent_exchange", "adjacent_pair_floor"):
        report.checked[name] = 0
        report.failures[name] = None

    for k in range(3, n_max + 1):
        i = np.arange(0, k - 2)
        ok = t[k + i] + t[k - i - 2] >= t[k + i - 2] + t[k - i]
        record("gap_two_exchange", len(i), None if ok.all() else {"n": k, "i": int(i[~ok][0])})

        i = np.arange(-1, k - 2)
        floor = np.where(i % 2 == 0, t[k] + t[k - 2], 2 * t[k - 1])
        ok = t[k + i] + t[k - i - 2] >= floor
        record("balanced_pair_floor", len(i), None if ok.all() else {"n": k, "i": int(i[~ok][0])})

        i = np.arange(0, k - 2)
        ok = t[k - 2 + i] + t[k - 1 - i] <= t[k - 1 + i] + t[k - 2 - i]
        record("adjacent_exchange", len(i), None if ok.all() else {"n": k, "i": int(i[~ok][0])})

        ok = t[k - 1] + t[k - 2] <= t[k - 1 + i] + t[k - 2 - i]
        record("adjacent_pair_floor", len(i), None if ok.all() else {"n": k, "i": int(i[~ok][0])})
    return report
