"""Binary digit sums and the even/odd digit-sum partition of the nonnegative integers.

The two classes of the partition are called A0 (even number of one bits,
the "evil" numbers) and B0 (odd number of one bits, the "odious" numbers).
Everything else in this package reduces membership questions to these two
oracles plus a finite prefix, so the functions here are kept branch-free
and allocation-free where possible.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "digit_sum",
    "bit_parity",
    "in_A0",
    "in_B0",
    "enumerate_A0",
    "enumerate_B0",
    "parity_vector",
    "a0_indicator",
]


def digit_sum(a: int) -> int:
    """Number of ones in the binary representation of ``a`` (0 for 0)."""
    if a < 0:
        raise ValueError("digit_sum is defined on nonnegative integers")
    return a.bit_count()


def bit_parity(a: int) -> int:
    """Parity of the binary digit sum: 0 if even, 1 if odd.

    Satisfies bit_parity(2a) == bit_parity(a) and
    bit_parity(2a+1) == 1 - bit_parity(a).
    """
    return digit_sum(a) & 1


def in_A0(a: int) -> bool:
    """True iff ``a`` has an even binary digit sum."""
    return bit_parity(a) == 0


def in_B0(a: int) -> bool:
    """True iff ``a`` has an odd binary digit sum."""
    return bit_parity(a) == 1


def enumerate_A0(limit: int) -> list[int]:
    """Sorted list of all members of A0 that are <= limit."""
    return _enumerate(limit, 0)


def enumerate_B0(limit: int) -> list[int]:
    """Sorted list of all members of B0 that are <= limit."""
    return _enumerate(limit, 1)


def _enumerate(limit: int, want_parity: int) -> list[int]:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    par = parity_vector(limit + 1)
    return np.flatnonzero(par == want_parity).tolist()


def parity_vector(size: int) -> np.ndarray:
    """uint8 array p of length ``size`` with p[a] = bit_parity(a).

    Built by doubling: the parity sequence on [0, 2L) is the sequence on
    [0, L) interleaved with its complement.
    """
    if size <= 0:
        return np.zeros(0, dtype=np.uint8)
    out = np.zeros(1, dtype=np.uint8)
    while len(out) < size:
        ext = np.empty(2 * len(out), dtype=np.uint8)
        ext[0::2] = out
        ext[1::2] = out ^ 1
        out = ext
    return out[:size]


def a0_indicator(limit: int) -> np.ndarray:
    """Indicator vector of A0 on [0, limit] (uint8, 1 = member)."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return parity_vector(limit + 1) ^ 1
