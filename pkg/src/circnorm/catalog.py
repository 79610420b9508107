"""Catalog of Fibonacci/Lucas sum identities and the circulant families B1..B14.

Every identity has the shape ``sum(a_i for i in range(n)) == s_n``. Each
record keeps the term generator a_i as code, the closed form s_n as it was
printed (both as typeset and as an evaluable transcription) and a status:

* ``AsStated``: the printed closed form agrees with direct summation.
* ``Corrected``: the printed closed form is wrong for some n and a repaired
  formula, checked against direct summation, is used instead.
* ``Garbled``: the printed closed form cannot be read unambiguously; only a
  checked replacement (if any) is available.

Each family B_k is the circulant whose first row is ``[a_0, ..., a_{n-1}]``
for one identity. Because the rows are nonnegative, its spectral norm is the
row sum, so the family norm is the identity's closed form.
"""

import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, NamedTuple, Optional

from .formulas import NonIntegralValue, evaluate, evaluate_int
from .sequences import fib, lucas

__all__ = [
    "ClosedForm",
    "FAMILIES",
    "FamilySpec",
    "IDENTITIES",
    "IdentityRecord",
    "NoClosedFormError",
    "SWEEP_MAX",
    "Status",
    "closed_sum",
    "direct_sum",
    "families_as_json",
    "family",
    "family_closed_norm",
    "family_first_row",
    "family_stated_norm",
    "identities_as_json",
    "identity",
    "stated_sum",
    "term",
    "validate_catalog",
]

#: Orders 1..SWEEP_MAX are swept when admitting a closed form.
SWEEP_MAX = 200


class Status(str, Enum):
    AS_STATED = "AsStated"
    CORRECTED = "Corrected"
    GARBLED = "Garbled"

    def __str__(self):
        return self.value


class NoClosedFormError(LookupError):
    """A garbled catalog entry has no validated replacement formula."""


class ClosedForm(NamedTuple):
    value: int
    status: Status


Term = Callable[[int, int], int]


@dataclass(frozen=True)
class IdentityRecord:
    key: str
    table: str
    row: Optional[int]
    term_label: str
    term: Term = field(repr=False, compare=False)
    printed_formula: str
    stated_formula: Optional[str]
    status: Status
    corrected_formula: Optional[str] = None
    note: str = ""

    @property
    def formula_in_use(self):
        if self.status is Status.AS_STATED:
            return self.stated_formula
        return self.corrected_formula


@dataclass(frozen=True)
class FamilySpec:
    index: int
    identity_key: str
    row_label: str
    term: Term = field(repr=False, compare=False)
    printed_formula: str
    stated_formula: Optional[str]
    status: Status
    corrected_formula: Optional[str] = None
    note: str = ""

    @property
    def name(self):
        return f"B{self.index}"

    @property
    def formula_in_use(self):
        if self.status is Status.AS_STATED:
            return self.stated_formula
        return self.corrected_formula

    @property
    def row_matches_identity(self):
        return self.term is IDENTITIES[self.identity_key].term


class _PrefixSums:
    """Grow-only running sums of ``seq(k)**2``, extended under a lock."""

    def __init__(self, seq):
        self._seq = seq
        self._sums = []
        self._lock = threading.Lock()

    def __call__(self, i, n=None):
        sums = self._sums
        if i < len(sums):
            return sums[i]
        with self._lock:
            while len(sums) <= i:
                k = len(sums)
                sums.append((sums[-1] if sums else 0) + self._seq(k) ** 2)
            return sums[i]


_inner_fib_squares = _PrefixSums(fib)
_inner_lucas_squares = _PrefixSums(lucas)


_T1 = "Table1"
_T2 = "Table2"
_AS = Status.AS_STATED
_FIX = Status.CORRECTED
_BAD = Status.GARBLED

_FIB_CONVOLUTION = "((n - 1)*L(n - 1) - F(n - 1))/5"
_FIB_PRODUCT_SUM = "F(n)**2 + ((-1)**n - 1)/2"

_IDENTITY_LIST = [
    IdentityRecord(
        "Table1.row1", _T1, 1, "F_i", lambda i, n: fib(i),
        "F_{n+1} - 1", "F(n + 1) - 1", _AS,
    ),
    IdentityRecord(
        "Table1.row2", _T1, 2, "F_{2i+1}", lambda i, n: fib(2 * i + 1),
        "F_{2n}", "F(2*n)", _AS,
    ),
    IdentityRecord(
        "Table1.row3", _T1, 3, "F_{2i}", lambda i, n: fib(2 * i),
        "F_{2n-1} - 1", "F(2*n - 1) - 1", _AS,
    ),
    IdentityRecord(
        "Table1.row4", _T1, 4, "iF_i", lambda i, n: i * fib(i),
        "(n-1)F_{n+1} - F_{n+2} + 2", "(n - 1)*F(n + 1) - F(n + 2) + 2", _AS,
    ),
    IdentityRecord(
        "Table1.row5", _T1, 5, "F_i F_{n-1-i}", lambda i, n: fib(i) * fib(n - 1 - i),
        "\\frac{nF_{n+1} + (n+2)F_{n+1-2}}{5}", None, _BAD, _FIB_CONVOLUTION,
        note="printed s_n disagrees with the printed B5 norm and is ambiguous as typeset",
    ),
    IdentityRecord(
        "Table1.row6", _T1, 6, "\\sum_{k=0}^i F_k^2", _inner_fib_squares,
        "F_n^2 + \\frac{(-1)^{n-1}}{2}", _FIB_PRODUCT_SUM, _AS,
        note="fraction read as ((-1)^n - 1)/2, the form printed for the B2 norm",
    ),
    IdentityRecord(
        "Table1.row7", _T1, 7, "F_i F_{i+1}", lambda i, n: fib(i) * fib(i + 1),
        "F_n^2 + \\frac{(-1)^{n-1}}{2}", _FIB_PRODUCT_SUM, _AS,
        note=(
            "fraction read as ((-1)^n - 1)/2, the form printed for the B2 norm; "
            "the alternative F_{n-1}F_n is wrong"
        ),
    ),
    IdentityRecord(
        "Table2.row1", _T2, 1, "L_i", lambda i, n: lucas(i),
        "L_{n+1} - 1", "L(n + 1) - 1", _AS,
    ),
    IdentityRecord(
        "Table2.row2", _T2, 2, "L_{2i+1}", lambda i, n: lucas(2 * i + 1),
        "2F_{2n+1} - F_{2n} - 2", "2*F(2*n + 1) - F(2*n) - 2", _AS,
    ),
    IdentityRecord(
        "Table2.row3", _T2, 3, "L_{2(i+1)}", lambda i, n: lucas(2 * i + 2),
        "F_{2n+1} + 2F_{2n} - 1", "F(2*n + 1) + 2*F(2*n) - 1", _AS,
    ),
    IdentityRecord(
        "Table2.row4", _T2, 4, "F_i L_i", lambda i, n: fib(i) * lucas(i),
        "2F_{n-1}^2 + F_{n-1} F_n + (-1)^{n-1} - 1",
        "2*F(n - 1)**2 + F(n - 1)*F(n) + (-1)**(n - 1) - 1", _AS,
    ),
    IdentityRecord(
        "Table2.row5", _T2, 5, "L_i F_{n-1-i}", lambda i, n: lucas(i) * fib(n - 1 - i),
        "n F_n", "n*F(n)", _FIX, "n*F(n - 1)",
    ),
    IdentityRecord(
        "Table2.row6", _T2, 6, "F_i + L_i", lambda i, n: fib(i) + lucas(i),
        "4F_n + 2F_{n-1} - 2", "4*F(n) + 2*F(n - 1) - 2", _AS,
    ),
    IdentityRecord(
        "Table2.row7", _T2, 7, "\\sum_{k=0}^i L_k^2", _inner_lucas_squares,
        "L_n^2 + 2n + (-1)^{n-1} \\frac{5}{2} - \\frac{3}{2}",
        "L(n)**2 + 2*n + (-1)**(n - 1)*5/2 - 3/2", _AS,
    ),
    IdentityRecord(
        "Table2.row8", _T2, 8, "L_i L_{i+1}", lambda i, n: lucas(i) * lucas(i + 1),
        "L_n^2 + (-1)^{n-1} \\frac{5}{2} - \\frac{3}{2}",
        "L(n)**2 + (-1)**(n - 1)*5/2 - 3/2", _AS,
    ),
    IdentityRecord(
        "Table2.row9", _T2, 9, "iL_i", lambda i, n: i * lucas(i),
        "(3n - 5) F_n + (n - 2) F_{n-1} - 2 F_{n+1} + 4",
        "(3*n - 5)*F(n) + (n - 2)*F(n - 1) - 2*F(n + 1) + 4", _AS,
        note="term printed as iF_i; the closed form and B6 need iL_i",
    ),
    IdentityRecord(
        "InnerLucasSquares", "Synthetic", None, "L_i^2", lambda i, n: lucas(i) ** 2,
        "L_{n-1}L_n + 2", "L(n - 1)*L(n) + 2", _AS,
        note="inner sum of Table2.row7; the row of B7",
    ),
]

IDENTITIES = {record.key: record for record in _IDENTITY_LIST}


def _family(index, key, row_label, printed, stated, status, corrected=None,
            note="", term=None):
    return FamilySpec(
        index, key, row_label, term or IDENTITIES[key].term,
        printed, stated, status, corrected, note,
    )


_FAMILY_LIST = [
    _family(1, "Table1.row4", "(0F_0, 1F_1, ..., (n-1)F_{n-1})",
            "(n-1)F_{n+1} - F_{n+2} + 2", "(n - 1)*F(n + 1) - F(n + 2) + 2", _AS),
    _family(2, "Table1.row7", "(F_0F_1, F_1F_2, ..., F_{n-1}F_n)",
            "F_n^2 + \\frac{(-1)^n - 1}{2}", _FIB_PRODUCT_SUM, _AS,
            note="F_{n-1}F_n, also seen for this norm, is wrong"),
    _family(3, "Table1.row2", "(F_1, F_3, ..., F_{2n-1})",
            "F_{2n}", "F(2*n)", _AS),
    _family(4, "Table1.row3", "(F_0, F_2, ..., F_{2n-2})",
            "F_{2n-1} - 1", "F(2*n - 1) - 1", _AS),
    _family(5, "Table1.row5", "(F_0F_{n-1}, F_1F_{n-2}, ..., F_{n-1}F_0)",
            "\\frac{nF_{n+1} + (n+2)F_{n+1} - 2}{5}", None, _BAD, _FIB_CONVOLUTION),
    _family(6, "Table2.row9", "(0L_0, 1L_1, ..., (n-1)L_{n-1})",
            "(3n-5)F_n + (n-2)F_{n-1} - 2F_{n+1} + 4",
            "(3*n - 5)*F(n) + (n - 2)*F(n - 1) - 2*F(n + 1) + 4", _AS),
    _family(7, "InnerLucasSquares", "(L_0^2, L_1^2, ..., L_{n-1}^2)",
            "L_{n-1}L_n + 2", "L(n - 1)*L(n) + 2", _AS),
    _family(8, "Table2.row2", "(L_1, L_3, ..., L_{2n-1})",
            "2F_{2n+1} - F_{2n} - 2", "2*F(2*n + 1) - F(2*n) - 2", _AS),
    _family(9, "Table2.row3", "(L_0, L_2, ..., L_{2n-2})",
            "F_{2n+1} + 2F_{2n} - 1", "F(2*n + 1) + 2*F(2*n) - 1", _FIX,
            "F(2*n) + F(2*n - 2) + 1",
            note="printed norm sums L_{2(i+1)}, not the stated row L_{2i}",
            term=lambda i, n: lucas(2 * i)),
    _family(10, "Table2.row8", "(L_0L_1, L_1L_2, ..., L_{n-1}L_n)",
            "L_n^2 - 4 (n even), L_n^2 + 1 (n odd)",
            "L(n)**2 - 4 if n % 2 == 0 else L(n)**2 + 1", _AS),
    _family(11, "Table2.row7",
            "(L_0^2, \\sum_{k=0}^1 L_k^2, ..., \\sum_{k=0}^{n-1} L_k^2)",
            "L_n^2 + 2n - 4 (n even), L_n^2 + 2n + 1 (n odd)",
            "L(n)**2 + 2*n - 4 if n % 2 == 0 else L(n)**2 + 2*n + 1", _AS),
    _family(12, "Table2.row4", "(F_0L_0, F_1L_1, ..., F_{n-1}L_{n-1})",
            "2F_{n-1}^2 + F_{n-1}F_n + (-1)^{n-1} - 1",
            "2*F(n - 1)**2 + F(n - 1)*F(n) + (-1)**(n - 1) - 1", _AS),
    _family(13, "Table2.row6", "(F_0 + L_0, F_1 + L_1, ..., F_{n-1} + L_{n-1})",
            "4F_n + 2F_{n-1} - 2", "4*F(n) + 2*F(n - 1) - 2", _AS),
    _family(14, "Table2.row5", "(L_0F_{n-1}, L_1F_{n-2}, ..., L_{n-1}F_0)",
            "nF_n", "n*F(n)", _FIX, "n*F(n - 1)"),
]

FAMILIES = {spec.index: spec for spec in _FAMILY_LIST}


def identity(key):
    """Look up an identity by key, e.g. ``"Table1.row4"``."""
    if isinstance(key, IdentityRecord):
        return key
    try:
        return IDENTITIES[key]
    except KeyError:
        raise KeyError(f"unknown identity {key!r}") from None


def family(f):
    """Look up a family by index (``6``) or name (``"B6"``)."""
    if isinstance(f, FamilySpec):
        return f
    if isinstance(f, str):
        name = f.strip().upper()
        if not name.startswith("B") or not name[1:].isdigit():
            raise KeyError(f"unknown family {f!r}")
        f = int(name[1:])
    try:
        return FAMILIES[f]
    except KeyError:
        raise KeyError(f"unknown family {f!r}") from None


def _check_order(n):
    n = int(n)
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return n


def term(key, i, n):
    """The i-th summand a_i of an identity at order n."""
    if not 0 <= i < n:
        raise IndexError(f"term index {i} out of range for order {n}")
    return identity(key).term(i, n)


def direct_sum(key, n):
    """Exact brute-force sum of the first n terms; the ground truth."""
    record = identity(key)
    n = _check_order(n)
    return sum(record.term(i, n) for i in range(n))


def stated_sum(key, n):
    """The printed closed form at n (int or Fraction), or None if garbled."""
    record = identity(key)
    if record.stated_formula is None:
        return None
    return evaluate(record.stated_formula, _check_order(n))


def _closed(formula, status, owner, n):
    if formula is None:
        raise NoClosedFormError(f"{owner} has no usable closed form")
    return ClosedForm(evaluate_int(formula, n), status)


def closed_sum(key, n):
    """Best closed form of an identity at n, tagged with its status."""
    record = identity(key)
    return _closed(record.formula_in_use, record.status, record.key, _check_order(n))


def family_first_row(f, n):
    """First row of the family circulant at order n."""
    spec = family(f)
    n = _check_order(n)
    return [spec.term(i, n) for i in range(n)]


def family_stated_norm(f, n):
    """The norm formula as printed for the family, or None if garbled."""
    spec = family(f)
    if spec.stated_formula is None:
        return None
    return evaluate(spec.stated_formula, _check_order(n))


def family_closed_norm(f, n):
    """Best closed-form spectral norm of the family at n, with its status."""
    spec = family(f)
    return _closed(spec.formula_in_use, spec.status, spec.name, _check_order(n))


def _sweep(formula, oracle, orders):
    """Return the orders at which ``formula`` disagrees with ``oracle``."""
    bad = []
    for n in orders:
        try:
            value = evaluate_int(formula, n)
        except NonIntegralValue:
            bad.append(n)
            continue
        if value != oracle[n]:
            bad.append(n)
    return bad


def validate_catalog(n_max=SWEEP_MAX):
    """Sweep every catalog entry against direct summation for n = 1..n_max.

    Returns a list of human-readable problems; an empty list means every
    status tag is consistent with the oracle.
    """
    orders = range(1, n_max + 1)
    problems = []
    entries = [(r.key, r, lambda n, r=r: direct_sum(r, n)) for r in _IDENTITY_LIST]
    entries += [
        (s.name, s, lambda n, s=s: sum(family_first_row(s, n)))
        for s in _FAMILY_LIST
    ]
    for name, entry, oracle_fn in entries:
        oracle = {n: oracle_fn(n) for n in orders}
        stated_bad = (
            _sweep(entry.stated_formula, oracle, orders)
            if entry.stated_formula is not None
            else None
        )
        if entry.status is Status.AS_STATED:
            if stated_bad is None:
                problems.append(f"{name}: AsStated without a stated formula")
            elif stated_bad:
                problems.append(f"{name}: stated formula fails at n={stated_bad[:5]}")
            continue
        if entry.status is Status.CORRECTED and not stated_bad:
            problems.append(f"{name}: Corrected but stated formula never fails")
        if entry.status is Status.GARBLED and entry.stated_formula is not None:
            problems.append(f"{name}: Garbled entry carries a stated formula")
        if entry.corrected_formula is not None:
            fixed_bad = _sweep(entry.corrected_formula, oracle, orders)
            if fixed_bad:
                problems.append(f"{name}: correction fails at n={fixed_bad[:5]}")
        elif entry.status is Status.CORRECTED:
            problems.append(f"{name}: Corrected without a correction")
    return problems


def identities_as_json():
    """Errata view of the identity catalog as JSON-ready dicts."""
    return [
        {
            "id": r.key,
            "table": r.table,
            "row": r.row,
            "printed_formula": r.printed_formula,
            "status": r.status.value,
            "corrected_formula": r.corrected_formula,
        }
        for r in _IDENTITY_LIST
    ]


def families_as_json():
    """Errata view of the families, same shape with the identity link added."""
    return [
        {
            "id": s.name,
            "table": "Family",
            "row": s.index,
            "identity": s.identity_key,
            "printed_formula": s.printed_formula,
            "status": s.status.value,
            "corrected_formula": s.corrected_formula,
        }
        for s in _FAMILY_LIST
    ]
