"""Shared brute-force oracles and hypothesis strategies.

The oracles here are deliberately naive re-implementations (plain loops,
no bit packing, no numpy) so the package's fast paths are checked
against something independent.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from repfn.sets import SetSpec


def oracle_enumerate(n_threshold: int, elements, limit: int) -> list[int]:
    """Forward recurrence pass as a plain Python loop."""
    bits = [0] * max(limit + 1, 2 * n_threshold)
    for e in elements:
        bits[e] = 1
    for x in range(2 * n_threshold, limit + 1):
        bits[x] = bits[x // 2] if x % 2 == 0 else 1 - bits[x // 2]
    return bits[: limit + 1]


def oracle_r2(bits, n: int) -> int:
    """Defining double loop over unordered pairs."""
    count = 0
    for a in range((n + 1) // 2):
        if bits[a] and bits[n - a]:
            count += 1
    return count


def oracle_cross(bits_a, bits_b, n: int) -> int:
    """Defining loop over ordered pairs."""
    return sum(1 for a in range(n + 1) if bits_a[a] and bits_b[n - a])


def seeded_balanced_specs(count: int, max_n: int = 8, seed: int = 20240607) -> list[SetSpec]:
    """Deterministic list of balanced specs for the fixed-seed suites."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        elements = tuple(sorted(rng.sample(range(2 * n), n)))
        out.append(SetSpec(n, elements))
    return out


@st.composite
def balanced_specs(draw, min_n: int = 1, max_n: int = 16) -> SetSpec:
    n = draw(st.integers(min_n, max_n))
    elements = draw(
        st.sets(st.integers(0, 2 * n - 1), min_size=n, max_size=n)
    )
    return SetSpec(n, tuple(sorted(elements)))
