"""Symmetric Boolean functions and their reduced Walsh spectra.

An n-variable symmetric Boolean function is the (n+1)-bit simplified value
vector [f_0, ..., f_n], f_i being the output on inputs of Hamming weight i.
Its Walsh spectrum depends only on wt(omega), so it reduces to n+1 exact
integers rw_f(k) = sum_i (-1)^{f_i} K_i(k, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .krawtchouk import abs_column_sum, column

__all__ = [
    "ReducedWalshSpectrum",
    "SymmetricBooleanFunction",
    "c_of_n",
    "c_profile",
    "optimal_function",
    "reduced_walsh_spectrum",
    "spectrum_value",
]


@dataclass(frozen=True)
class SymmetricBooleanFunction:
    """Simplified value vector of a symmetric Boolean function on n variables."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n={self.n} must be non-negative")
        if len(self.bits) != self.n + 1:
            raise ValueError(f"bits has length {len(self.bits)}, expected n+1={self.n + 1}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must all be 0 or 1")

    @classmethod
    def from_value(cls, n: int, value: int) -> "SymmetricBooleanFunction":
        """Decode the integer whose bit i is f_i (f_0 least significant)."""
        if not 0 <= value < 1 << (n + 1):
            raise ValueError(f"value={value} out of range for n={n}")
        return cls(n=n, bits=tuple((value >> i) & 1 for i in range(n + 1)))

    @classmethod
    def from_hex(cls, n: int, code: str) -> "SymmetricBooleanFunction":
        """Decode the hex rendering of the bit string f_n f_{n-1} ... f_1 f_0."""
        return cls.from_value(n, int(code, 16))

    @property
    def value(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    def to_hex(self) -> str:
        """Uppercase hex of the bit string f_n ... f_0, no leading zeros."""
        return format(self.value, "X")

    def signs(self) -> tuple[int, ...]:
        """(-1)^{f_i} for each weight i."""
        return tuple(1 - 2 * b for b in self.bits)


@dataclass(frozen=True)
class ReducedWalshSpectrum:
    """values[k] = rw_f(k); Parseval: sum_k C(n,k) rw_f(k)^2 = 2^(2n)."""

    n: int
    values: tuple[int, ...]


def spectrum_value(f: SymmetricBooleanFunction, k: int) -> int:
    """rw_f(k) = sum_i (-1)^{f_i} K_i(k, n), exact."""
    col = column(k, f.n)
    return sum(s * v for s, v in zip(f.signs(), col.values))


def reduced_walsh_spectrum(f: SymmetricBooleanFunction) -> ReducedWalshSpectrum:
    return ReducedWalshSpectrum(
        n=f.n, values=tuple(spectrum_value(f, k) for k in range(f.n + 1))
    )


def optimal_function(n: int, w: int) -> SymmetricBooleanFunction:
    """The sign-rule function maximizing |rw_f(w)|.

    f_i = 0 where K_i(w, n) > 0 and 1 where K_i(w, n) < 0, which aligns every
    term of rw_f(w) so the spectrum value reaches sum_i |K_i(w, n)|.  Zero
    entries of the column leave f_i free; we fix those to 0 so the output is
    deterministic.
    """
    if not 0 <= w <= n:
        raise ValueError(f"w={w} out of range [0, {n}]")
    col = column(w, n)
    return SymmetricBooleanFunction(n=n, bits=tuple(1 if v < 0 else 0 for v in col.values))


def _c_term(n: int, w: int, s: int) -> float:
    # C(n,w) * s^2 / 2^(2n) as one exact integer ratio (correctly rounded by
    # CPython's big-int true division), then the sqrt(n) scale.
    return (comb(n, w) * s * s) / (1 << (2 * n)) * math.sqrt(n)


def c_profile(n: int) -> list[float]:
    """C(n,w) rw_f(w)^2 sqrt(n) / 2^(2n) for the per-w optimal f, all w.

    Mirror symmetry K_i(n-k, n) = (-1)^i K_i(k, n) makes the w and n-w values
    identical, so only the lower half is computed.
    """
    if n < 1:
        raise ValueError(f"n={n} must be positive")
    out = [0.0] * (n + 1)
    for w in range(n // 2 + 1):
        val = _c_term(n, w, abs_column_sum(w, n))
        out[w] = val
        out[n - w] = val
    return out


def c_of_n(n: int) -> float:
    """min_w C(n,w) rw_f(w)^2 sqrt(n) / 2^(2n) over the sign-rule functions."""
    return min(c_profile(n))
