"""Numerical tolerances shared by the library, the CLI and the tests."""

from dataclasses import dataclass, replace

__all__ = ["DEFAULT_TOLERANCES", "Tolerances"]


@dataclass(frozen=True)
class Tolerances:
    #: relative agreement between the floating spectral norm and the exact row sum
    spectral_rtol: float = 1e-9
    #: relative agreement between the direct DFT and the fast transform
    dft_rtol: float = 1e-10
    #: absolute eigenvalue match against a dense solver, scaled by 1 + sum|a_k|
    dense_atol: float = 1e-8
    #: normality residual, scaled by (sum|a_k|)**2
    normality_rtol: float = 1e-9
    #: Naive vs convolution matvec, scaled by sum|a_k| * max|v|
    matvec_rtol: float = 1e-9
    #: largest exact entry magnitude allowed into floating point
    float_entry_cap: int = 2**53
    #: orders up to which the direct O(n^2) transform is used by default
    direct_dft_max: int = 1024

    def with_overrides(self, **overrides):
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_TOLERANCES = Tolerances()
