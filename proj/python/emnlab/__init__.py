"""Entropy-mixing random number generator and randomness evaluation toolkit."""

from ._core import (
    Block256,
    EmnGenerator,
    Mt19937,
    autocorrelation,
    chi_squared_sf,
    chi_squared_test,
    gamma_q,
    mt_bytes,
    os_entropy,
    power_spectrum,
    predictability,
    runs_test,
    sha256_hex,
    shannon_entropy,
)

__all__ = [
    "Block256",
    "EmnGenerator",
    "Mt19937",
    "autocorrelation",
    "chi_squared_sf",
    "chi_squared_test",
    "gamma_q",
    "mt_bytes",
    "os_entropy",
    "power_spectrum",
    "predictability",
    "runs_test",
    "sha256_hex",
    "shannon_entropy",
]

__version__ = "0.1.0"
