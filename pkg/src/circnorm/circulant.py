"""Circulant matrices stored by their first row.

Row j of the matrix is row j-1 shifted right by one place, so entry (j, k)
is ``row[(k - j) % n]``. The eigenvalues are

    lam_m = sum_k row[k] * w**(m*k),   w = exp(2*pi*i/n),

with eigenvectors ``(w**(m*k))_k``; the all-ones vector belongs to lam_0,
the row sum. Circulants are normal, so the spectral norm is ``max|lam_m|``,
and for a nonnegative row that maximum is the row sum itself.
"""

from dataclasses import dataclass
from numbers import Number

import numpy as np

from .config import DEFAULT_TOLERANCES

__all__ = [
    "Circulant",
    "FloatCapacityError",
    "NegativeEntryError",
    "Spectrum",
    "as_circulant",
    "dft",
    "eigenvalues",
    "materialize",
    "matvec",
    "one_norm",
    "perron_row_sum",
    "spectral_norm",
]

_CHUNK = 256


class FloatCapacityError(OverflowError):
    """An exact entry is too large to be carried in double precision."""


class NegativeEntryError(ValueError):
    """The Perron row-sum argument needs a nonnegative row."""


@dataclass(frozen=True)
class Circulant:
    """A circulant matrix given by its exact first row."""

    row: tuple

    def __post_init__(self):
        row = tuple(self.row)
        if not row:
            raise ValueError("a circulant needs at least one entry")
        for a in row:
            if isinstance(a, bool) or not isinstance(a, Number):
                raise TypeError(f"row entries must be numbers, got {a!r}")
        object.__setattr__(self, "row", row)

    @classmethod
    def from_family(cls, f, n):
        from .catalog import family_first_row

        return cls(family_first_row(f, n))

    @property
    def n(self):
        return len(self.row)

    @property
    def is_real(self):
        return not any(isinstance(a, complex) for a in self.row)

    def max_abs_entry(self):
        return max(abs(a) for a in self.row)

    def float_row(self, allow_rounding=False, tol=DEFAULT_TOLERANCES):
        """The row as a numpy array.

        Raises :class:`FloatCapacityError` when an entry exceeds
        ``tol.float_entry_cap`` unless ``allow_rounding`` is set.
        """
        if not allow_rounding and self.max_abs_entry() > tol.float_entry_cap:
            raise FloatCapacityError(
                f"entry of magnitude ~{float(self.max_abs_entry()):.3g} exceeds "
                f"the floating-point cap {tol.float_entry_cap}"
            )
        dtype = float if self.is_real else complex
        try:
            out = np.array([dtype(a) for a in self.row], dtype=dtype)
        except OverflowError:
            raise FloatCapacityError("entry overflows double precision") from None
        if not np.all(np.isfinite(out)):
            raise FloatCapacityError("entry overflows double precision")
        return out

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray

    @property
    def radius(self):
        return float(np.max(np.abs(self.values)))

    def __len__(self):
        return len(self.values)


def as_circulant(c):
    return c if isinstance(c, Circulant) else Circulant(tuple(c))


def _direct_dft(x, sign):
    n = len(x)
    # exact index reduction keeps every twiddle angle in [0, 2*pi)
    twiddle = np.exp(sign * 2j * np.pi * np.arange(n) / n)
    k = np.arange(n)
    out = np.empty(n, dtype=complex)
    for start in range(0, n, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, n))
        terms = x[None, :] * twiddle[(j[:, None] * k[None, :]) % n]
        # numpy reduces the contiguous last axis pairwise
        out[start:start + len(j)] = np.sum(terms, axis=1)
    return out


def _fast_dft(x, sign):
    if sign > 0:
        return len(x) * np.fft.ifft(x)
    return np.fft.fft(x)


def dft(x, sign=+1, method="auto", tol=DEFAULT_TOLERANCES):
    """Discrete Fourier transform ``X_m = sum_k x_k exp(sign*2*pi*i*m*k/n)``.

    ``method`` is ``"direct"`` (O(n^2), pairwise summation, any n),
    ``"fast"`` (O(n log n) via pocketfft) or ``"auto"``, which takes the
    direct route up to ``tol.direct_dft_max``.
    """
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("dft expects a nonempty 1-D array")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if method == "auto":
        method = "direct" if len(x) <= tol.direct_dft_max else "fast"
    if method == "direct":
        return _direct_dft(x, sign)
    if method == "fast":
        return _fast_dft(x, sign)
    raise ValueError(f"unknown transform method {method!r}")


def materialize(c, exact=False, allow_rounding=False, tol=DEFAULT_TOLERANCES):
    """Dense n x n matrix with entry (j, k) = row[(k - j) % n].

    With ``exact=True`` the entries are the original Python numbers in an
    object array; otherwise a float (or complex) array.
    """
    c = as_circulant(c)
    n = c.n
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    if exact:
        row = np.empty(n, dtype=object)
        row[:] = c.row
    else:
        row = c.float_row(allow_rounding, tol)
    return row[idx]


def eigenvalues(c, method="auto", allow_rounding=False, tol=DEFAULT_TOLERANCES):
    """All n eigenvalues, lam_m = sum_k a_k w**(m*k) in order m = 0..n-1."""
    c = as_circulant(c)
    return Spectrum(dft(c.float_row(allow_rounding, tol), +1, method, tol))


def spectral_norm(c, method="auto", allow_rounding=False, tol=DEFAULT_TOLERANCES):
    """Largest eigenvalue modulus, which is the 2-norm since A is normal."""
    return eigenvalues(c, method, allow_rounding, tol).radius


def one_norm(c):
    """Maximum absolute column sum, computed exactly for exact rows.

    Every column of a circulant holds each row entry once, so all column
    sums equal ``sum(|a_k|)``.
    """
    return sum(abs(a) for a in as_circulant(c).row)


def perron_row_sum(c):
    """Exact row sum of a nonnegative circulant, i.e. its Perron value."""
    c = as_circulant(c)
    for k, a in enumerate(c.row):
        if isinstance(a, complex) or a < 0:
            raise NegativeEntryError(f"row entry {k} is {a!r}; need a nonnegative row")
    return sum(c.row)


def _naive_matvec(row, v):
    n = len(row)
    dtype = np.result_type(row, v)
    out = np.empty(n, dtype=dtype)
    shifts = np.arange(n)
    for start in range(0, n, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, n))
        gathered = v[(j[:, None] + shifts[None, :]) % n]
        out[start:start + len(j)] = gathered @ row
    return out


def matvec(c, v, method="naive", transform="auto", allow_rounding=False,
           tol=DEFAULT_TOLERANCES):
    """Compute A @ v.

    ``method="naive"`` uses the O(n^2) definition. ``"convolution"`` goes
    through the transform: (A v)_j = sum_l a_l v_{j+l} is a circular
    correlation whose forward transform is ``lam * dft(v, -1)``.
    """
    c = as_circulant(c)
    v = np.asarray(v)
    if v.ndim != 1 or len(v) != c.n:
        raise ValueError(f"vector of length {c.n} expected, got shape {v.shape}")
    row = c.float_row(allow_rounding, tol)
    if method == "naive":
        return _naive_matvec(row, v)
    if method == "convolution":
        lam = dft(row, +1, transform, tol)
        out = dft(lam * dft(v, -1, transform, tol), +1, transform, tol) / c.n
        if np.isrealobj(row) and np.isrealobj(v):
            return out.real
        return out
    raise ValueError(f"unknown matvec method {method!r}")
