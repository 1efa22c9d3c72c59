"""Exact representation-function profiles.

r2[n] counts unordered pairs a < a' with a + a' = n drawn from one set;
rab[n] counts ordered pairs (a, b), a in A, b in B, with a + b = n.
Three interchangeable engines are provided and must agree bit for bit:

* naive:       the defining double loop (ground-truth oracle, slow);
* bitpar:      word-parallel AND of the indicator with its reversal,
               popcounted per target n;
* conv:        exact integer self-convolution (indicator packed into
               32-bit fields of one big integer, then squared), no
               floating point anywhere.

All counts are exact integers; profiles use int64 storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

import numpy as np

from .sets import SarkozySet

__all__ = [
    "Method",
    "RepProfile",
    "CrossProfile",
    "r2_naive",
    "r2_bitparallel",
    "r2_profile",
    "cross_profile",
    "cross_naive",
    "symmetric_cross",
    "indicator_of",
]

IndicatorLike = Union[SarkozySet, np.ndarray, Sequence[int]]

# The defining double loop is kept as a reference oracle only; above this
# horizon the word-parallel or convolution engines must be used.
NAIVE_HORIZON = 10_000


class Method(Enum):
    NAIVE = "naive"
    BITPARALLEL = "bitpar"
    CONVOLUTION = "conv"


@dataclass(frozen=True)
class RepProfile:
    """r2 values on [0, n_max] for one set, tagged with the engine used."""

    n_max: int
    r2: np.ndarray
    method: Method

    def __post_init__(self) -> None:
        if len(self.r2) != self.n_max + 1:
            raise ValueError("r2 array must cover [0, n_max]")


@dataclass(frozen=True)
class CrossProfile:
    """Ordered-pair counts rab on [0, n_max] for a pair of sets."""

    n_max: int
    rab: np.ndarray


def indicator_of(s: IndicatorLike, n_max: int) -> np.ndarray:
    """Indicator vector on [0, n_max] from a set or an explicit vector."""
    if isinstance(s, SarkozySet):
        return s.enumerate(n_max)
    arr = np.asarray(s, dtype=np.uint8)
    if len(arr) < n_max + 1:
        raise ValueError(f"indicator too short: {len(arr)} < {n_max + 1}")
    return arr[: n_max + 1]


def r2_naive(indicator: IndicatorLike, n: int) -> int:
    """Ground-truth double loop over a < n - a."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ind = bytes(indicator_of(indicator, n))
    count = 0
    for a in range((n + 1) // 2):
        if ind[a] and ind[n - a]:
            count += 1
    return count


def _pack_bits(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def r2_bitparallel(indicator: IndicatorLike, n: int) -> int:
    """r2 at a single n by popcounting indicator AND reversed indicator."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ind = indicator_of(indicator, n)
    half = (n + 1) // 2
    if half == 0:
        return 0
    lo = _pack_bits(ind[:half])
    hi = _pack_bits(ind[n - half + 1 : n + 1][::-1])  # bit a = ind[n - a]
    return (lo & hi).bit_count()


def _r2_profile_bitparallel(ind: np.ndarray, n_max: int) -> np.ndarray:
    fwd = _pack_bits(ind)
    rev = _pack_bits(ind[::-1])
    out = np.zeros(n_max + 1, dtype=np.int64)
    mask = 0
    masked_to = 0
    for n in range(n_max + 1):
        half = (n + 1) // 2
        if masked_to < half:
            mask |= ((1 << (half - masked_to)) - 1) << masked_to
            masked_to = half
        out[n] = (fwd & (rev >> (n_max - n)) & mask).bit_count()
    return out


def _r2_profile_naive(ind: np.ndarray, n_max: int) -> np.ndarray:
    if n_max > NAIVE_HORIZON:
        raise ValueError(
            f"naive method is a reference oracle; use bitpar or conv above n={NAIVE_HORIZON}"
        )
    buf = bytes(ind)
    out = np.zeros(n_max + 1, dtype=np.int64)
    for n in range(n_max + 1):
        c = 0
        for a in range((n + 1) // 2):
            if buf[a] and buf[n - a]:
                c += 1
        out[n] = c
    return out


def _ordered_self_convolution(ind: np.ndarray, n_max: int) -> np.ndarray:
    """c[n] = number of ordered pairs (a, a') with a + a' = n, both set.

    Kronecker packing: the indicator becomes one integer with 32 bits
    per coefficient; squaring convolves exactly.  Coefficients stay
    below 2**32 because c[n] <= n + 1.
    """
    if n_max + 1 >= 1 << 32:
        raise ValueError("convolution packing supports n_max < 2**32 - 1")
    x = int.from_bytes(ind.astype("<u4").tobytes(), "little")
    sq = x * x
    nfields = 2 * n_max + 1
    buf = sq.to_bytes(4 * nfields + 4, "little")
    return np.frombuffer(buf, dtype="<u4", count=nfields).astype(np.int64)


def _r2_profile_convolution(ind: np.ndarray, n_max: int) -> np.ndarray:
    c = _ordered_self_convolution(ind, n_max)[: n_max + 1]
    diag = np.zeros(n_max + 1, dtype=np.int64)
    diag[0::2] = ind[: (n_max // 2) + 1]
    return (c - diag) // 2


def r2_profile(
    s: IndicatorLike, n_max: int, method: Method = Method.BITPARALLEL
) -> RepProfile:
    """r2[n] for every n in [0, n_max] with the chosen engine."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    ind = indicator_of(s, n_max)
    if method is Method.BITPARALLEL:
        r2 = _r2_profile_bitparallel(ind, n_max)
    elif method is Method.CONVOLUTION:
        r2 = _r2_profile_convolution(ind, n_max)
    elif method is Method.NAIVE:
        r2 = _r2_profile_naive(ind, n_max)
    else:
        raise ValueError(f"unknown method {method!r}")
    r2.flags.writeable = False
    return RepProfile(n_max, r2, method)


def cross_profile(sa: IndicatorLike, sb: IndicatorLike, n_max: int) -> CrossProfile:
    """Ordered-pair convolution of the two indicators (exact integers)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    ia = indicator_of(sa, n_max)
    ib = indicator_of(sb, n_max)
    if n_max + 1 >= 1 << 32:
        raise ValueError("convolution packing supports n_max < 2**32 - 1")
    xa = int.from_bytes(ia.astype("<u4").tobytes(), "little")
    xb = int.from_bytes(ib.astype("<u4").tobytes(), "little")
    prod = xa * xb
    nfields = 2 * n_max + 1
    buf = prod.to_bytes(4 * nfields + 4, "little")
    rab = np.frombuffer(buf, dtype="<u4", count=nfields).astype(np.int64)[: n_max + 1]
    rab.flags.writeable = False
    return CrossProfile(n_max, rab)


def cross_naive(sa: IndicatorLike, sb: IndicatorLike, n: int) -> int:
    """Ground-truth ordered-pair count at a single n."""
    ia = bytes(indicator_of(sa, n))
    ib = bytes(indicator_of(sb, n))
    return sum(1 for a in range(n + 1) if ia[a] and ib[n - a])


def symmetric_cross(s: SarkozySet, n_max: int) -> np.ndarray:
    """Ordered pairs of a set with its complement, counted in both orders.

    This is the quantity that completes the pair-accounting identity
    sym_cross[n] + 2*r2_A[n] + 2*r2_comp[n] + (1 if n even) == n + 1,
    since each mixed pair (a, n-a) appears under both orderings.
    """
    comp = s.complement()
    one_way = cross_profile(s, comp, n_max).rab
    other_way = cross_profile(comp, s, n_max).rab
    return one_way + other_way
