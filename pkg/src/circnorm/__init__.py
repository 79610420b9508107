"""Spectral norms of circulant matrices built from Fibonacci and Lucas numbers.

The package checks closed-form norm identities three ways: exact summation
of the first row, the catalog closed form, and the floating-point spectrum
of the circulant.
"""

from .catalog import (
    FAMILIES,
    IDENTITIES,
    ClosedForm,
    NoClosedFormError,
    Status,
    closed_sum,
    direct_sum,
    family_closed_norm,
    family_first_row,
    term,
    validate_catalog,
)
from .circulant import (
    Circulant,
    FloatCapacityError,
    NegativeEntryError,
    Spectrum,
    eigenvalues,
    materialize,
    matvec,
    one_norm,
    perron_row_sum,
    spectral_norm,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .sequences import BinetPrecisionError, binet_fib, binet_lucas, fib, lucas
from .verifier import Outcome, reproduce_table3, scan, verify_family

__version__ = "0.1.0"
