"""Executable checkers for the catalogued identities and bounds.

Every checker returns a BoundReport: pass/fail over an explicit n range,
with the worst witness and its margin.  All inequality and equality
comparisons are exact (integer cross-multiplication or Fraction); the
only real-valued arithmetic in the package lives in empirical_density,
where the float threshold is rounded upward so a rounding error can
never manufacture a violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from .constructions import thm2_set, thm3_set
from .digits import parity_vector
from .profiles import Method, cross_profile, r2_bitparallel, r2_profile
from .sets import A0_SET, Likeness, SarkozySet, SetSpec

__all__ = [
    "TheoremId",
    "BoundReport",
    "check_theorem_a",
    "check_dombi",
    "check_lemma1",
    "check_thm1_upper",
    "check_thm2_zero",
    "check_thm3_zero",
    "check_lower_bounds",
    "empirical_density",
    "DensityResult",
    "ratio_sequence",
    "theta_upper_limit",
    "qualifying_heights",
]


class TheoremId(Enum):
    THM_A = "ThmA"
    DOMBI = "Dombi"
    LEMMA1 = "Lemma1"
    THM1 = "Thm1"
    THM2 = "Thm2"
    THM3 = "Thm3"
    THM_B = "ThmB"
    THM_E = "ThmE"
    THM_F = "ThmF"
    THM_D_DENSITY = "ThmD_density"
    COR3 = "Cor3"


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one checker over one set and one n range.

    worst_margin is the checked quantity's slack at the tightest n
    (negative means violation); for equality checks it is minus the
    absolute difference at the worst n.
    """

    theorem_id: TheoremId
    set_spec: SetSpec
    n_range: tuple[int, int]
    passed: bool
    worst_n: Optional[int] = None
    worst_margin: Optional[Fraction] = None


# ---------------------------------------------------------------------------
# equality checks


def _equality_report(
    theorem_id: TheoremId,
    spec: SetSpec,
    lhs: np.ndarray,
    rhs: np.ndarray,
    n_lo: int,
    n_hi: int,
) -> BoundReport:
    window_l = lhs[n_lo : n_hi + 1]
    window_r = rhs[n_lo : n_hi + 1]
    diffs = np.flatnonzero(window_l != window_r)
    if len(diffs) == 0:
        return BoundReport(theorem_id, spec, (n_lo, n_hi), True, None, Fraction(0))
    first = int(diffs[0]) + n_lo
    gap = int(abs(int(window_l[diffs[0]]) - int(window_r[diffs[0]])))
    return BoundReport(theorem_id, spec, (n_lo, n_hi), False, first, Fraction(-gap))


def check_theorem_a(
    s: SarkozySet, n_max: int, method: Method = Method.BITPARALLEL
) -> BoundReport:
    """r2 of the set equals r2 of its complement for all n in [2N-1, n_max].

    This is an iff: feeding an unbalanced prefix (built unchecked) is
    expected to surface a violating n, reported as the worst witness.
    """
    n_lo = max(0, 2 * s.N - 1)
    if n_max < n_lo:
        raise ValueError(f"n_max must be at least 2N-1 = {n_lo}")
    r_a = r2_profile(s, n_max, method).r2
    r_c = r2_profile(s.complement(), n_max, method).r2
    return _equality_report(TheoremId.THM_A, s.spec(), r_a, r_c, n_lo, n_max)


def check_dombi(n_max: int, method: Method = Method.BITPARALLEL) -> BoundReport:
    """The two digit-sum classes share one representation function on [0, n_max]."""
    r_a0 = r2_profile(A0_SET, n_max, method).r2
    r_b0 = r2_profile(A0_SET.complement(), n_max, method).r2
    return _equality_report(TheoremId.DOMBI, A0_SET.spec(), r_a0, r_b0, 0, n_max)


def check_lemma1(s: SarkozySet, k_max: int, l_max: int) -> BoundReport:
    """Block transport of membership.

    For every k in [N, k_max], l in [0, l_max], i in [0, 2^l):
    membership of 2^l * k + i equals membership of k when i has an even
    digit sum, and is opposite when odd.  worst_n reports the composite
    value 2^l * k + i of the first violation, if any.
    """
    if not s.balanced:
        raise ValueError("check_lemma1 expects a balanced set")
    if k_max < s.N:
        raise ValueError("k_max must be at least N")
    if l_max < 0:
        raise ValueError("l_max must be nonnegative")
    top = (k_max << l_max) + ((1 << l_max) - 1)
    ind = s.enumerate(top)
    parity = parity_vector(1 << l_max)
    for k in range(s.N, k_max + 1):
        base_bit = ind[k]
        for l in range(l_max + 1):
            width = 1 << l
            block = ind[k << l : (k << l) + width]
            expected = base_bit ^ parity[:width]
            bad = np.flatnonzero(block != expected)
            if len(bad) > 0:
                i = int(bad[0])
                return BoundReport(
                    TheoremId.LEMMA1,
                    s.spec(),
                    (s.N, k_max),
                    False,
                    (k << l) + i,
                    Fraction(-1),
                )
    return BoundReport(TheoremId.LEMMA1, s.spec(), (s.N, k_max), True, None, Fraction(0))


# ---------------------------------------------------------------------------
# zero and upper-bound checks


def qualifying_heights(threshold: int, n_cap: int) -> list[int]:
    """Exponents m with 4^m > threshold - 1 and 2^(2m+1) <= n_cap."""
    out = []
    m = 0
    while 2 ** (2 * m + 1) <= n_cap:
        if 4**m > threshold - 1:
            out.append(m)
        m += 1
    return out


def check_thm1_upper(s: SarkozySet, m_max: int) -> BoundReport:
    """Sparse upper bound along n = 2^(2m+1) - 1.

    For each m with 4^m > N-1 and m <= m_max, checks
    r2[n] * 4 * 2^floor(log2(N-1)) <= n + 1 as an exact integer
    comparison.  Margin is the bound minus r2 at the tightest m.
    """
    n = s.N
    if n < 2:
        raise ValueError("the sparse upper bound needs N >= 2")
    denom = 4 * (1 << ((n - 1).bit_length() - 1))  # 4 * 2^floor(log2(N-1))
    ms = [m for m in range(m_max + 1) if 4**m > n - 1]
    if not ms:
        raise ValueError(f"no qualifying m <= {m_max} for N={n}")
    top = 2 ** (2 * ms[-1] + 1) - 1
    ind = s.enumerate(top)
    passed = True
    worst_n = None
    worst_margin: Optional[Fraction] = None
    for m in ms:
        target = 2 ** (2 * m + 1) - 1
        r2 = r2_bitparallel(ind, target)
        margin = Fraction(target + 1, denom) - r2
        if worst_margin is None or margin < worst_margin:
            worst_margin = margin
            worst_n = target
        if r2 * denom > target + 1:
            passed = False
    lo = 2 ** (2 * ms[0] + 1) - 1
    return BoundReport(TheoremId.THM1, s.spec(), (lo, top), passed, worst_n, worst_margin)


def _zero_report(
    theorem_id: TheoremId, s: SarkozySet, target: int
) -> BoundReport:
    """r2 vanishes at the named target and the complement-equality holds up to it."""
    n_max = max(target, 2 * s.N - 1)
    equality = check_theorem_a(s, n_max)
    r2 = int(r2_profile(s, target).r2[target])
    passed = r2 == 0 and equality.passed
    worst_n = None if passed else (target if r2 != 0 else equality.worst_n)
    margin = Fraction(-r2) if r2 != 0 else (Fraction(0) if passed else equality.worst_margin)
    return BoundReport(theorem_id, s.spec(), (0, n_max), passed, worst_n, margin)


def check_thm2_zero(k: int) -> BoundReport:
    """r2 of the quadrupling set vanishes at 14 * 4^k - 1."""
    s = thm2_set(k)
    return _zero_report(TheoremId.THM2, s, 14 * 4**k - 1)


def check_thm3_zero(n: int) -> BoundReport:
    """r2 of the parity-split set vanishes at 3N - 1."""
    s = thm3_set(n)
    return _zero_report(TheoremId.THM3, s, 3 * n - 1)


# ---------------------------------------------------------------------------
# lower bounds


def check_lower_bounds(s: SarkozySet, n_max: int) -> list[BoundReport]:
    """The three lower-bound families, checked exactly on [1, n_max].

    Returns one report per family:

    * ThmE: (56N-52)(r2[n]+1) >= n+3 and (28N-26)(rab[n]+1) >= n+3,
      requiring infinite intersection with both digit-sum classes;
    * ThmB: 40N(N+1)(r2[n]+1) >= n, same hypothesis;
    * ThmF: r2[n] >= 1 for n >= 14(N-1), requiring the set to be
      neither digit-sum class (skipped, trivially passed, when the
      window is empty).

    All comparisons are cross-multiplied integers; margins are exact
    Fractions in units of pair counts.
    """
    n = s.N
    if n < 2:
        raise ValueError("lower bounds are stated for N >= 2")
    if not s.balanced:
        raise ValueError("check_lower_bounds expects a balanced set")
    if not (s.intersects_infinitely("A0") and s.intersects_infinitely("B0")):
        raise ValueError(
            "lower bounds require infinite intersection with both digit-sum classes"
        )
    spec = s.spec()
    r2 = r2_profile(s, n_max).r2
    rab = cross_profile(s, s.complement(), n_max).rab
    ns = np.arange(n_max + 1, dtype=np.int64)

    reports = []

    # ThmE: two inequalities, one report; margin in count units.
    e_den_r2 = 56 * n - 52
    e_den_cross = 28 * n - 26
    slack_r2 = e_den_r2 * (r2 + 1) - (ns + 3)
    slack_cross = e_den_cross * (rab + 1) - (ns + 3)
    worst: tuple[Fraction, int] | None = None
    for slack, den in ((slack_r2, e_den_r2), (slack_cross, e_den_cross)):
        idx = int(np.argmin(slack[1:])) + 1
        margin = Fraction(int(slack[idx]), den)
        if worst is None or margin < worst[0]:
            worst = (margin, idx)
    assert worst is not None
    passed_e = bool(np.all(slack_r2[1:] >= 0)) and bool(np.all(slack_cross[1:] >= 0))
    reports.append(
        BoundReport(TheoremId.THM_E, spec, (1, n_max), passed_e, worst[1], worst[0])
    )

    # ThmB
    b_den = 40 * n * (n + 1)
    slack_b = b_den * (r2 + 1) - ns
    idx = int(np.argmin(slack_b[1:])) + 1
    passed_b = bool(np.all(slack_b[1:] >= 0))
    reports.append(
        BoundReport(
            TheoremId.THM_B,
            spec,
            (1, n_max),
            passed_b,
            idx,
            Fraction(int(slack_b[idx]), b_den),
        )
    )

    # ThmF; infinite intersection with both classes already rules out
    # the set being either class itself.
    assert s.thue_morse_likeness() is Likeness.NEITHER
    f_lo = 14 * (n - 1)
    if f_lo > n_max:
        reports.append(BoundReport(TheoremId.THM_F, spec, (f_lo, n_max), True, None, None))
    else:
        window = r2[f_lo:]
        idx = int(np.argmin(window)) + f_lo
        min_r2 = int(r2[idx])
        reports.append(
            BoundReport(
                TheoremId.THM_F,
                spec,
                (f_lo, n_max),
                min_r2 >= 1,
                idx,
                Fraction(min_r2 - 1),
            )
        )
    return reports


# ---------------------------------------------------------------------------
# density and ratio exploration


def theta_upper_limit() -> float:
    """Supremum of admissible density exponents: (2log2-log3)/(42log2-9log3)."""
    return (2 * math.log(2) - math.log(3)) / (42 * math.log(2) - 9 * math.log(3))


@dataclass(frozen=True)
class DensityResult:
    n_max: int
    theta: float
    c: float
    density: Fraction
    histogram: np.ndarray  # counts of r2[n]/n in buckets of width 1/64
    bucket_width: Fraction


def empirical_density(
    s: SarkozySet,
    n_max: int,
    theta: float,
    c: float = 1.0,
    profile: Optional[np.ndarray] = None,
) -> DensityResult:
    """Fraction of n in [1, n_max] with |r2[n] - n/8| <= c * n^(1-theta).

    Exploratory only: the asymptotic statement says this fraction tends
    to one, which a finite horizon cannot certify.  The float threshold
    is rounded toward +inf before comparing against the exact integer
    deviation |8*r2[n] - n| / 8, so rounding can only admit, never
    reject, a borderline n.  Histogram buckets r2[n]/n with width 1/64.
    """
    if not s.balanced:
        raise ValueError("empirical_density expects a balanced set")
    if not 0 < theta < theta_upper_limit():
        raise ValueError(
            f"theta must lie strictly between 0 and {theta_upper_limit():.6f}"
        )
    if c < 0:
        raise ValueError("c must be nonnegative")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    r2 = profile if profile is not None else r2_profile(s, n_max).r2
    if len(r2) < n_max + 1:
        raise ValueError("profile too short for n_max")
    good = 0
    hist = np.zeros(66, dtype=np.int64)  # r2/n <= ~1/2; generous headroom
    for n in range(1, n_max + 1):
        deviation = abs(8 * int(r2[n]) - n)  # 8 * |r2 - n/8|, exact
        threshold = math.nextafter(8.0 * c * math.pow(n, 1.0 - theta), math.inf)
        if deviation <= threshold:
            good += 1
        bucket = min(int((int(r2[n]) * 64) // n), 65)
        hist[bucket] += 1
    total = n_max  # qualifying n are 1..n_max
    density = Fraction(1) if total == 0 else Fraction(good, total)
    return DensityResult(n_max, theta, c, density, hist, Fraction(1, 64))


def ratio_sequence(
    s: SarkozySet,
    sequence: str = "pow",
    count: int = 8,
    step: int = 1,
) -> list[tuple[int, int, Fraction]]:
    """(n, r2[n], r2[n]/n) along a sparse or arithmetic test sequence.

    sequence "pow" walks n = 2^(2m+1) - 1 for m = 0..count-1 (the sparse
    sequence where the thm1 family provably dips); "arith" walks
    multiples of ``step``.  Purely exploratory output: whether some
    sequence keeps the ratio away from 1/8 is an open question.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return []
    if sequence == "pow":
        targets = [2 ** (2 * m + 1) - 1 for m in range(count)]
    elif sequence == "arith":
        if step < 1:
            raise ValueError("step must be positive")
        targets = [step * (j + 1) for j in range(count)]
    else:
        raise ValueError("sequence must be 'pow' or 'arith'")
    ind = s.enumerate(targets[-1])
    out = []
    for n in targets:
        r2 = r2_bitparallel(ind, n)
        out.append((n, r2, Fraction(r2, n) if n else Fraction(0)))
    return out
