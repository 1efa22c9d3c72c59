"""Doubling-closed integer sets determined by a balanced prefix.

A SarkozySet is given by a threshold N and a bit vector on [0, 2N-1];
membership above the prefix is forced by the doubling rule

    2m in A  <=>  m in A        (m >= N)
    2m+1 in A  <=>  m not in A

Sets of this shape are exactly the ones whose representation function
agrees with that of their complement from 2N-1 on, provided the prefix
is balanced (contains exactly N elements).  Two membership algorithms
are implemented and cross-checked:

* closed form: strip low bits of x until the quotient k lands in
  [N, 2N-1], then the answer is prefix[k] XOR parity(digit_sum(i))
  where i is the stripped remainder;
* recurrence pass: one forward sweep filling an indicator vector, each
  position x >= 2N reading position x // 2.

The even/odd digit-sum classes A0 and B0 are the N=1 instances with
prefix {0} and {1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from .digits import a0_indicator, bit_parity

__all__ = [
    "SetSpec",
    "SarkozySet",
    "Likeness",
    "make_set",
    "parse_spec",
    "format_spec",
    "A0_SET",
    "B0_SET",
]


class Likeness(Enum):
    """Relation of a balanced set to the two digit-sum classes."""

    IS_A0 = "IsA0"
    IS_B0 = "IsB0"
    NEITHER = "Neither"


@dataclass(frozen=True)
class SetSpec:
    """Serializable description: threshold N plus the prefix elements.

    ``elements`` lists the members of the set within [0, 2N-1], strictly
    increasing.  A balanced spec has exactly N of them.
    """

    N: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("N must be >= 1")
        object.__setattr__(self, "elements", tuple(self.elements))
        prev = -1
        for e in self.elements:
            if not 0 <= e <= 2 * self.N - 1:
                raise ValueError(f"element {e} outside [0, {2 * self.N - 1}]")
            if e <= prev:
                raise ValueError("elements must be strictly increasing (no duplicates)")
            prev = e

    @property
    def balanced(self) -> bool:
        return len(self.elements) == self.N


_SPEC_RE = re.compile(r"^\s*N\s*=\s*(\d+)\s*;\s*P\s*=\s*(\d+(?:\s*,\s*\d+)*)\s*$")


def parse_spec(text: str) -> SetSpec:
    """Parse the text form ``N=<int>;P=<e1>,<e2>,...`` (whitespace tolerated)."""
    m = _SPEC_RE.match(text)
    if m is None:
        raise ValueError(f"malformed set spec: {text!r}")
    n = int(m.group(1))
    elements = tuple(int(tok) for tok in m.group(2).split(","))
    return SetSpec(n, elements)


def format_spec(spec: SetSpec) -> str:
    """Inverse of parse_spec: ``N=3;P=0,3,4``."""
    return f"N={spec.N};P=" + ",".join(str(e) for e in spec.elements)


class SarkozySet:
    """Immutable doubling-closed set; see the module docstring.

    Construct through :func:`make_set` (validating) or
    :meth:`SarkozySet.unchecked` (negative-testing path that tolerates
    unbalanced prefixes).
    """

    __slots__ = ("N", "prefix_bits", "balanced")

    N: int
    prefix_bits: int
    balanced: bool

    def __init__(self, N: int, prefix_bits: int, *, _unchecked: bool = False) -> None:
        if N < 1:
            raise ValueError("N must be >= 1")
        if prefix_bits < 0 or prefix_bits >> (2 * N):
            raise ValueError("prefix bits outside [0, 2N-1]")
        balanced = prefix_bits.bit_count() == N
        if not balanced and not _unchecked:
            raise ValueError(
                f"unbalanced prefix: {prefix_bits.bit_count()} elements, expected {N} "
                "(use SarkozySet.unchecked for deliberate violations)"
            )
        self._set("N", N)
        self._set("prefix_bits", prefix_bits)
        self._set("balanced", balanced)

    def _set(self, name: str, value) -> None:
        object.__setattr__(self, name, value)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("SarkozySet is immutable")

    @classmethod
    def unchecked(cls, N: int, elements) -> "SarkozySet":
        """Build without the balance check (converse/negative tests only)."""
        bits = 0
        for e in elements:
            if not 0 <= e <= 2 * N - 1:
                raise ValueError(f"element {e} outside [0, {2 * N - 1}]")
            if bits >> e & 1:
                raise ValueError(f"duplicate element {e}")
            bits |= 1 << e
        return cls(N, bits, _unchecked=True)

    # -- queries ---------------------------------------------------------

    def contains(self, x: int) -> bool:
        """Closed-form membership, O(1) word operations per query."""
        if x < 0:
            return False
        two_n = 2 * self.N
        if x < two_n:
            return bool(self.prefix_bits >> x & 1)
        # Strip low bits until the quotient lands in [N, 2N-1].  The
        # quotient halves each step, so it cannot skip the window.
        shift = x.bit_length() - two_n.bit_length()
        k = x >> shift
        if k >= two_n:
            shift += 1
            k >>= 1
        i = x & ((1 << shift) - 1)
        return bool((self.prefix_bits >> k & 1) ^ bit_parity(i))

    __contains__ = contains

    def complement(self) -> "SarkozySet":
        """Same N, prefix bitwise negated; complements the whole set."""
        mask = (1 << (2 * self.N)) - 1
        return SarkozySet(self.N, self.prefix_bits ^ mask, _unchecked=True)

    def enumerate(self, limit: int) -> np.ndarray:
        """Indicator vector of the set on [0, limit] (uint8).

        Computed by the recurrence pass: the block [L, 2L) is the block
        [L/2, L) interleaved with its complement, applied repeatedly
        from the prefix.  This is the batch oracle the closed form is
        checked against.
        """
        if limit < 0:
            raise ValueError("limit must be nonnegative")
        two_n = 2 * self.N
        cur = self.prefix_vector()
        if limit + 1 <= two_n:
            return cur[: limit + 1].copy()
        while len(cur) < limit + 1:
            half = cur[len(cur) // 2 :]
            ext = np.empty(len(cur), dtype=np.uint8)
            ext[0::2] = half
            ext[1::2] = half ^ 1
            cur = np.concatenate([cur, ext])
        return cur[: limit + 1]

    def prefix_vector(self) -> np.ndarray:
        """Indicator of the prefix on [0, 2N-1] (uint8 copy)."""
        two_n = 2 * self.N
        raw = self.prefix_bits.to_bytes((two_n + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits[:two_n].copy()

    def elements(self) -> list[int]:
        """Sorted prefix members (the set intersected with [0, 2N-1])."""
        return np.flatnonzero(self.prefix_vector()).tolist()

    def spec(self) -> SetSpec:
        return SetSpec(self.N, tuple(self.elements()))

    def thue_morse_likeness(self) -> Likeness:
        """Whether the set is exactly A0, exactly B0, or neither.

        Prefix equality is enough: the doubling rule then forces the
        tails to coincide.
        """
        if not self.balanced:
            raise ValueError("likeness is defined for balanced sets")
        a0 = a0_indicator(2 * self.N - 1)
        mine = self.prefix_vector()
        if np.array_equal(mine, a0):
            return Likeness.IS_A0
        if np.array_equal(mine, a0 ^ 1):
            return Likeness.IS_B0
        return Likeness.NEITHER

    def intersects_infinitely(self, which: str) -> bool:
        """Exact decision whether the set meets A0 (or B0) infinitely often.

        Every x >= 2N sits in a unique block x = 2^l * k + i with
        k in [N, 2N-1], i < 2^l, where membership is prefix[k] XOR
        parity(i) and the digit-sum class of x is decided by
        parity(k) XOR parity(i).  Block k therefore contributes
        infinitely many members of the intersection with A0 exactly
        when prefix[k] == in_A0(k), and with B0 when they differ.
        """
        if which not in ("A0", "B0"):
            raise ValueError("which must be 'A0' or 'B0'")
        if not self.balanced:
            raise ValueError("intersects_infinitely is defined for balanced sets")
        want_equal = which == "A0"
        for k in range(self.N, 2 * self.N):
            in_self = bool(self.prefix_bits >> k & 1)
            in_a0 = bit_parity(k) == 0
            if (in_self == in_a0) == want_equal:
                return True
        return False

    # -- plumbing ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SarkozySet):
            return NotImplemented
        return self.N == other.N and self.prefix_bits == other.prefix_bits

    def __hash__(self) -> int:
        return hash((self.N, self.prefix_bits))

    def __repr__(self) -> str:
        tag = "" if self.balanced else ", unbalanced"
        return f"SarkozySet({format_spec_unchecked(self)}{tag})"

    def __iter__(self) -> Iterator[int]:
        """Members in increasing order, unbounded; islice to taste."""
        x = 0
        while True:
            if self.contains(x):
                yield x
            x += 1


def format_spec_unchecked(s: SarkozySet) -> str:
    els = ",".join(str(e) for e in s.elements())
    return f"N={s.N};P={els}"


def make_set(spec: SetSpec, *, unchecked: bool = False) -> SarkozySet:
    """Build the unique doubling-closed set with the given prefix.

    Rejects unbalanced prefixes unless ``unchecked`` is passed; range and
    duplicate violations are rejected by SetSpec itself.
    """
    bits = 0
    for e in spec.elements:
        bits |= 1 << e
    return SarkozySet(spec.N, bits, _unchecked=unchecked)


A0_SET = SarkozySet(1, 0b01)
B0_SET = SarkozySet(1, 0b10)
