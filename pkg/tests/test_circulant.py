import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circnorm.catalog import FAMILIES, family_first_row
from circnorm.circulant import (
    Circulant,
    FloatCapacityError,
    NegativeEntryError,
    dft,
    eigenvalues,
    materialize,
    matvec,
    one_norm,
    perron_row_sum,
    spectral_norm,
)
from circnorm.config import DEFAULT_TOLERANCES as TOL
from oracles import dense_eigenvalues, matched_distance, power_iteration_norm, shifted_matrix

int_rows = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=16)


def test_materialize_examples():
    assert materialize([7]).tolist() == [[7.0]]
    assert materialize([0, 1, 2]).tolist() == [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
    b7 = Circulant.from_family("B7", 3)
    assert materialize(b7).tolist() == [[4, 1, 9], [9, 4, 1], [1, 9, 4]]


def test_materialize_exact_keeps_big_ints():
    row = family_first_row(3, 60)
    dense = materialize(row, exact=True)
    assert dense[0, -1] == row[-1]
    assert dense[1, 0] == row[-1]
    assert isinstance(dense[5, 5], int)


@given(int_rows)
def test_materialize_matches_shift_rule(row):
    assert np.array_equal(materialize(row), shifted_matrix(row))


def test_eigenvalue_examples():
    assert np.allclose(eigenvalues([5]).values, [5])
    lam = eigenvalues([0, 1, 2]).values
    assert lam[0] == pytest.approx(3)
    assert abs(lam[0].imag) < 1e-15
    assert lam[1] == pytest.approx(np.conj(lam[2]))
    assert np.allclose(eigenvalues([1, 1, 1, 1]).values, [4, 0, 0, 0], atol=1e-14)


def test_eigenvectors_are_fourier_modes():
    row = [3, -1, 4, 1, -5, 9, 2]
    n = len(row)
    a = materialize(row)
    lam = eigenvalues(row).values
    w = np.exp(2j * np.pi / n)
    for m in range(n):
        v = w ** (m * np.arange(n))
        assert np.allclose(a @ v, lam[m] * v)


@settings(max_examples=200)
@given(int_rows)
def test_spectrum_matches_dense_solver(row):
    scale = 1 + sum(abs(a) for a in row)
    gap = matched_distance(eigenvalues(row).values, dense_eigenvalues(row))
    assert gap <= TOL.dense_atol * scale


@given(int_rows)
def test_first_eigenvalue_is_row_sum(row):
    lam0 = eigenvalues(row).values[0]
    total = sum(row)
    assert abs(lam0 - total) <= 1e-12 * len(row) * max(1, abs(total))


@given(int_rows)
def test_conjugate_symmetry(row):
    lam = eigenvalues(row).values
    n = len(row)
    for j in range(1, n):
        assert abs(lam[n - j] - np.conj(lam[j])) <= 1e-12 * (1 + sum(map(abs, row)))


@given(st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=12))
def test_normality(row):
    a = materialize(row)
    residual = np.abs(a.T @ a - a @ a.T).max()
    assert residual <= TOL.normality_rtol * sum(map(abs, row)) ** 2


@given(int_rows)
def test_spectral_norm_is_largest_singular_value(row):
    expected = np.linalg.norm(shifted_matrix(row), 2)
    assert spectral_norm(row) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_spectral_norm_examples():
    assert spectral_norm(Circulant.from_family(1, 3)) == pytest.approx(3.0, rel=1e-12)
    assert spectral_norm([-4.5]) == pytest.approx(4.5)
    assert spectral_norm(Circulant.from_family(12, 5)) == pytest.approx(33.0, rel=1e-12)


@pytest.mark.parametrize("f", sorted(FAMILIES))
def test_power_iteration_agrees_on_families(f):
    row = family_first_row(f, 9)
    top = power_iteration_norm(shifted_matrix(row))
    assert top == pytest.approx(sum(row), rel=1e-9, abs=1e-9)


def test_norm_collapse_all_families_up_to_512():
    for f in FAMILIES:
        for n in range(1, 513):
            c = Circulant.from_family(f, n)
            exact = perron_row_sum(c)
            approx = spectral_norm(c, allow_rounding=True)
            assert abs(approx - exact) <= 1e-9 * max(1, exact), (f, n)
            assert one_norm(c) == exact


@given(int_rows)
def test_one_norm_is_max_column_sum(row):
    dense = np.abs(materialize(row))
    assert one_norm(row) == dense.sum(axis=0).max()


def test_one_norm_examples():
    assert one_norm(Circulant.from_family(3, 3)) == 8
    assert one_norm([0]) == 0
    assert one_norm(Circulant.from_family(13, 3)) == 8


def test_perron_examples():
    assert perron_row_sum(Circulant.from_family(2, 6)) == 64
    assert perron_row_sum([0, 0, 0]) == 0
    assert perron_row_sum(Circulant.from_family(10, 8)) == 2205


def test_perron_rejects_negative_rows():
    with pytest.raises(NegativeEntryError):
        perron_row_sum([1, -2, 3])


def test_capacity_guard():
    big = Circulant.from_family(7, 60)
    assert big.max_abs_entry() > 2**53
    with pytest.raises(FloatCapacityError):
        spectral_norm(big)
    with pytest.raises(FloatCapacityError):
        materialize(big)
    # exact routes have no cap
    assert one_norm(big) == perron_row_sum(big) == sum(big.row)
    assert spectral_norm(big, allow_rounding=True) == pytest.approx(float(sum(big.row)), rel=1e-12)


def test_guard_boundary():
    assert spectral_norm([2**53]) == float(2**53)
    with pytest.raises(FloatCapacityError):
        spectral_norm([2**53 + 1])


def test_overflowing_row_always_refused():
    with pytest.raises(FloatCapacityError):
        spectral_norm([10**400], allow_rounding=True)


def test_complex_rows_are_plumbed():
    row = [1 + 2j, -1j, 3]
    lam = eigenvalues(row).values
    assert matched_distance(lam, np.linalg.eigvals(materialize(row))) < 1e-12
    assert spectral_norm(row) == pytest.approx(np.linalg.norm(materialize(row), 2))


def test_matvec_examples():
    assert np.allclose(matvec([0, 1, 2], [1, 1, 1]), [3, 3, 3])
    assert np.allclose(matvec([2.5], [4.0]), [10.0])
    v = np.array([0.3, -1.0, 7.0, 2.0])
    assert np.array_equal(matvec([1, 0, 0, 0], v), v)
    assert np.allclose(matvec([1, 0, 0, 0], v, "convolution"), v)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 64, 97, 500, 1024, 1031, 4096])
def test_matvec_methods_agree(n):
    rng = np.random.default_rng(n)
    row = [int(a) for a in rng.integers(-1000, 1000, n)]
    v = rng.standard_normal(n)
    naive = matvec(row, v, "naive")
    conv = matvec(row, v, "convolution")
    bound = TOL.matvec_rtol * sum(map(abs, row)) * np.abs(v).max()
    assert np.abs(naive - conv).max() <= bound
    if n <= 512:
        assert np.allclose(naive, materialize(row) @ v, rtol=1e-12, atol=1e-9)


def test_matvec_dimension_mismatch():
    with pytest.raises(ValueError):
        matvec([1, 2, 3], [1, 2])
    with pytest.raises(ValueError):
        matvec([1, 2, 3], [1, 2, 3], method="fft")


@pytest.mark.parametrize("n", [1, 2, 5, 16, 81, 127, 256, 1000])
@pytest.mark.parametrize("sign", [1, -1])
def test_direct_and_fast_transforms_agree(n, sign):
    x = np.random.default_rng(n).standard_normal(n) * 100
    direct = dft(x, sign, "direct")
    fast = dft(x, sign, "fast")
    assert np.abs(direct - fast).max() <= TOL.dft_rtol * np.abs(x).sum()


def test_direct_transform_against_definition():
    x = np.array([1.0, 2.0, -3.0, 0.5, 4.0])
    n = len(x)
    expected = [sum(x[k] * np.exp(2j * np.pi * m * k / n) for k in range(n)) for m in range(n)]
    assert np.allclose(dft(x, 1, "direct"), expected, rtol=0, atol=1e-13)


def test_transform_argument_checks():
    with pytest.raises(ValueError):
        dft([], 1)
    with pytest.raises(ValueError):
        dft([1.0], 2)
    with pytest.raises(ValueError):
        dft([1.0], 1, "bluestein")


def test_circulant_validation():
    with pytest.raises(ValueError):
        Circulant(())
    with pytest.raises(TypeError):
        Circulant(("a", 1))
    c = Circulant([1, 2, 3])
    assert c.row == (1, 2, 3) and c.n == 3 and len(c) == 3
    with pytest.raises(Exception):
        c.row = (4,)
