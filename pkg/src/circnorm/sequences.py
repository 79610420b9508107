"""Fibonacci and Lucas numbers.

Exact values come from the integer recurrences and are held in Python ints,
so nothing overflows. The Binet forms are kept only as a floating-point
cross-check of the exact values.
"""

import math
import threading

import numpy as np

__all__ = [
    "BINET_CAP",
    "BinetPrecisionError",
    "binet_fib",
    "binet_lucas",
    "fib",
    "lucas",
]

#: Largest index accepted by the Binet forms.
BINET_CAP = 70


class BinetPrecisionError(ValueError):
    """The Binet form was asked for an index past its floating-point cap."""


class _RecurrenceTable:
    """Grow-only table of x_k = x_{k-1} + x_{k-2}.

    Extension happens under a lock, so concurrent readers always see the
    same prefix.
    """

    def __init__(self, x0, x1):
        self._values = [x0, x1]
        self._lock = threading.Lock()

    def __getitem__(self, n):
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                values.append(values[-1] + values[-2])
            return values[n]


_FIB = _RecurrenceTable(0, 1)
_LUCAS = _RecurrenceTable(2, 1)


def _check_index(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"index must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return n


def fib(n):
    """Return the Fibonacci number F_n, with F_0 = 0 and F_1 = 1."""
    return _FIB[_check_index(n)]


def lucas(n):
    """Return the Lucas number L_n, with L_0 = 2 and L_1 = 1."""
    return _LUCAS[_check_index(n)]


# Evaluated in extended precision: with a double-precision golden ratio the
# Lucas form is already off by 0.625 at n = 69.
_SQRT5 = np.sqrt(np.longdouble(5))
_PHI = (1 + _SQRT5) / 2


def _binet_parts(n):
    n = _check_index(n)
    if n > BINET_CAP:
        raise BinetPrecisionError(
            f"Binet form is only reliable up to n = {BINET_CAP}, got {n}"
        )
    grow = _PHI**n
    decay = np.longdouble(math.cos(math.pi * n)) / grow
    return grow, decay


def binet_fib(n):
    """Floating Binet value of F_n; rounds to ``fib(n)`` for n <= 70."""
    grow, decay = _binet_parts(n)
    return float((grow - decay) / _SQRT5)


def binet_lucas(n):
    """Floating Binet value of L_n; rounds to ``lucas(n)`` for n <= 70."""
    grow, decay = _binet_parts(n)
    return float(grow + decay)
