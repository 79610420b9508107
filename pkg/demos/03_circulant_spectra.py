# Circulant spectra through the DFT, checked against a dense eigensolver.
import numpy as np

import circnorm as cn

c = cn.Circulant.from_family("B7", 5)
print("first row:", c.row)
print(cn.materialize(c))

lam = cn.eigenvalues(c).values
dense = np.linalg.eigvals(cn.materialize(c))
print("DFT eigenvalues  :", np.sort_complex(lam))
print("dense eigenvalues:", np.sort_complex(dense))

# Nonnegative row: the all-ones vector gives the Perron value, the row sum,
# and that is also the spectral norm and the maximum column sum.
print("spectral norm:", cn.spectral_norm(c))
print("row sum      :", cn.perron_row_sum(c))
print("one norm     :", cn.one_norm(c))
print("2-norm (SVD) :", np.linalg.norm(cn.materialize(c), 2))

# Matrix-vector products: O(n^2) definition vs transform route.
rng = np.random.default_rng(1)
row = rng.integers(-5, 6, 1000)
v = rng.standard_normal(1000)
gap = np.abs(cn.matvec(row, v, "naive") - cn.matvec(row, v, "convolution")).max()
print("naive vs convolution matvec gap:", gap)

# Entries past 2**53 are refused unless rounding is explicitly allowed.
big = cn.Circulant.from_family("B3", 60)
try:
    cn.spectral_norm(big)
except cn.FloatCapacityError as exc:
    print("refused:", exc)
print(cn.spectral_norm(big, allow_rounding=True) / cn.perron_row_sum(big))
