"""Explicit extremal prefixes.

Each constructor returns a balanced doubling-closed set witnessing one of
the package's catalogued claims:

* thm1_set(N):  digit-sum-even numbers in [2, 2N-3] plus the top pair
  {2N-2, 2N-1}; its r2 stays below (n+1) / (4 * 2^floor(log2(N-1)))
  along n = 2^(2m+1) - 1.
* thm2_set(k):  the quadrupling family C_k with N_k = 3*4^k, built from
  C_0 = {0,3,4} on [0,5] by C_k = (4*C_{k-1} + {0,3}) u (4*comp + {1,2});
  r2 vanishes at 14*4^k - 1.
* thm3_set(N):  odd (resp. even) numbers below N-1 plus a solid block up
  to roughly 3N/2; r2 vanishes at 3N - 1.
* cor3_set(k):  thm1_set at N = 2^k + 1, where the thm1 denominator is
  exactly 4*(N-1).
"""

from __future__ import annotations

from .digits import in_A0
from .sets import SarkozySet, SetSpec, make_set

__all__ = [
    "thm1_set",
    "thm2_set",
    "thm3_set",
    "cor3_set",
    "thm2_contains_direct",
    "THM2_MAX_PREFIX_BITS",
]

# thm2_set materializes the full prefix (2 * 3 * 4^k bits).
THM2_MAX_PREFIX_BITS = 1 << 30


def thm1_set(N: int) -> SarkozySet:
    """Balanced prefix (A0 n [2, 2N-3]) u {2N-2, 2N-1} on [0, 2N-1]."""
    if N < 2:
        raise ValueError("thm1_set requires N >= 2")
    elements = [a for a in range(2, 2 * N - 2) if in_A0(a)]
    elements += [2 * N - 2, 2 * N - 1]
    return make_set(SetSpec(N, tuple(elements)))


def thm2_set(k: int) -> SarkozySet:
    """Quadrupling family member C_k with N = 3 * 4^k."""
    if k < 0:
        raise ValueError("thm2_set requires k >= 0")
    n_k = 3 * 4**k
    if 2 * n_k > THM2_MAX_PREFIX_BITS:
        raise ValueError(f"prefix of length {2 * n_k} exceeds the materialization cap")
    bits = 0b011001  # {0, 3, 4} on [0, 5]
    n_prev = 3
    for _ in range(k):
        new = 0
        for c in range(2 * n_prev):
            if bits >> c & 1:
                new |= 0b1001 << (4 * c)  # 4c and 4c+3
            else:
                new |= 0b0110 << (4 * c)  # 4c+1 and 4c+2
        bits = new
        n_prev *= 4
    return SarkozySet(n_k, bits)


_C0 = SarkozySet(3, 0b011001)


def thm2_contains_direct(k: int, x: int) -> bool:
    """Membership in C_k straight from the quadrupling recursion.

    Independent of the prefix + doubling-rule representation; used to
    cross-check thm2_set.
    """
    if k < 0 or x < 0:
        raise ValueError("k and x must be nonnegative")
    inside = True  # tracking C_j vs its complement while descending
    for _ in range(k):
        r = x & 3
        x >>= 2
        if r in (1, 2):
            inside = not inside
    return _C0.contains(x) == inside


def thm3_set(N: int) -> SarkozySet:
    """Parity-split prefix: small odds (evens) plus a block around N.

    Odd N:  {1, 3, ..., N-2} u {N, N+1, ..., (3N-1)/2}
    Even N: {0, 2, ..., N-2} u {N, N+1, ..., 3N/2 - 1}
    """
    if N < 3:
        raise ValueError("thm3_set requires N >= 3")
    if N % 2 == 1:
        elements = list(range(1, N - 1, 2)) + list(range(N, (3 * N - 1) // 2 + 1))
    else:
        elements = list(range(0, N - 1, 2)) + list(range(N, 3 * N // 2))
    return make_set(SetSpec(N, tuple(elements)))


def cor3_set(k: int) -> SarkozySet:
    """thm1_set at N = 2^k + 1 (power-of-two gap below the top pair)."""
    if k < 0:
        raise ValueError("cor3_set requires k >= 0")
    return thm1_set(2**k + 1)
