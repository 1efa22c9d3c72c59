import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import balanced_specs, oracle_enumerate
from repfn.digits import digit_sum, enumerate_A0, in_A0
from repfn.sets import (
    A0_SET,
    B0_SET,
    Likeness,
    SarkozySet,
    SetSpec,
    format_spec,
    make_set,
    parse_spec,
)

C0_SPEC = SetSpec(3, (0, 3, 4))


# -- construction and validation ------------------------------------------


def test_make_set_c0():
    s = make_set(C0_SPEC)
    assert s.N == 3
    assert s.elements() == [0, 3, 4]
    assert s.balanced


def test_make_set_n1_gives_a0():
    s = make_set(SetSpec(1, (0,)))
    for x in range(10_000):
        assert s.contains(x) == in_A0(x)


def test_make_set_rejects_unbalanced():
    with pytest.raises(ValueError, match="unbalanced"):
        make_set(SetSpec(2, (0, 1, 2)))


def test_setspec_rejects_out_of_range_and_duplicates():
    with pytest.raises(ValueError):
        SetSpec(2, (0, 5))
    with pytest.raises(ValueError):
        SetSpec(2, (1, 1))
    with pytest.raises(ValueError):
        SetSpec(0, ())


def test_unchecked_allows_unbalanced():
    s = SarkozySet.unchecked(2, (0, 1, 2))
    assert not s.balanced
    assert s.elements() == [0, 1, 2]


# -- membership -------------------------------------------------------------


def test_contains_prefix_region():
    s = make_set(C0_SPEC)
    assert [x for x in range(6) if s.contains(x)] == [0, 3, 4]
    assert s.contains(4)


def test_contains_thm3_recurrence_witness():
    s = make_set(SetSpec(5, (1, 3, 5, 6, 7)))
    assert s.contains(14)  # 7 in the prefix forces 14


def test_enumerate_c0_frozen():
    # frozen from the forward-recurrence oracle
    s = make_set(C0_SPEC)
    assert np.flatnonzero(s.enumerate(11)).tolist() == [0, 3, 4, 6, 8, 11]


def test_enumerate_a0_instance():
    assert np.flatnonzero(A0_SET.enumerate(10)).tolist() == enumerate_A0(10)


def test_enumerate_limit_zero():
    assert A0_SET.enumerate(0).tolist() == [1]
    assert B0_SET.enumerate(0).tolist() == [0]


@given(balanced_specs(), st.integers(0, 2000))
@settings(max_examples=150)
def test_closed_form_agrees_with_recurrence_pass(spec, limit):
    s = make_set(spec)
    ind = s.enumerate(limit)
    oracle = oracle_enumerate(spec.N, spec.elements, limit)
    assert ind.tolist() == oracle
    probe = range(limit + 1) if limit < 64 else list(range(32)) + [limit // 2, limit]
    for x in probe:
        assert s.contains(x) == bool(oracle[x])


def test_closed_form_deep_horizon():
    s = make_set(C0_SPEC)
    ind = s.enumerate(100_000)
    for x in range(0, 100_001, 317):
        assert s.contains(x) == bool(ind[x])


@given(balanced_specs(max_n=8))
@settings(max_examples=60)
def test_lemma1_transport(spec):
    s = make_set(spec)
    n = spec.N
    ind = s.enumerate((4 * n << 12) + (1 << 12))
    for k in range(n, 4 * n + 1):
        for l in (0, 1, 3, 7, 12):
            for i in (0, 1, (1 << l) - 1, 5 % (1 << l)):
                x = (k << l) + i
                if digit_sum(i) % 2 == 0:
                    assert bool(ind[x]) == bool(ind[k])
                else:
                    assert bool(ind[x]) != bool(ind[k])


@given(balanced_specs(max_n=10), st.integers(1, 10))
@settings(max_examples=60)
def test_balance_propagates(spec, l):
    s = make_set(spec)
    top = (1 << l) * 2 * spec.N - 1
    assert int(s.enumerate(top).sum()) == (1 << l) * spec.N


# -- complement --------------------------------------------------------------


def test_complement_of_a0_is_b0():
    assert A0_SET.complement() == B0_SET


def test_complement_is_involution():
    s = make_set(C0_SPEC)
    assert s.complement().complement() == s


def test_complement_c0_prefix():
    assert make_set(C0_SPEC).complement().elements() == [1, 2, 5]


@given(balanced_specs(), st.integers(0, 3000))
@settings(max_examples=80)
def test_complement_commutes_with_enumerate(spec, limit):
    s = make_set(spec)
    assert np.array_equal(s.complement().enumerate(limit), s.enumerate(limit) ^ 1)


# -- likeness and infinite intersection --------------------------------------


def test_likeness_a0_as_n4():
    s = make_set(SetSpec(4, (0, 3, 5, 6)))
    assert s.thue_morse_likeness() is Likeness.IS_A0
    assert s.complement().thue_morse_likeness() is Likeness.IS_B0


def test_likeness_c0_neither():
    assert make_set(C0_SPEC).thue_morse_likeness() is Likeness.NEITHER


def test_intersections_of_a0_instance():
    assert A0_SET.intersects_infinitely("A0")
    assert not A0_SET.intersects_infinitely("B0")
    assert B0_SET.intersects_infinitely("B0")
    assert not B0_SET.intersects_infinitely("A0")


def test_intersects_rejects_bad_class_name():
    with pytest.raises(ValueError):
        A0_SET.intersects_infinitely("C0")


@given(balanced_specs())
@settings(max_examples=100)
def test_intersection_predicate_matches_block_window(spec):
    # the blocks over [N, 2N-1] decide it: infinite intersection with a
    # digit-sum class is equivalent to meeting it somewhere in [2N, 4N)
    s = make_set(spec)
    ind = s.enumerate(4 * spec.N - 1)
    a0 = np.array([1 if in_A0(x) else 0 for x in range(4 * spec.N)], dtype=np.uint8)
    window = slice(2 * spec.N, 4 * spec.N)
    assert s.intersects_infinitely("A0") == bool(np.any(ind[window] & a0[window]))
    assert s.intersects_infinitely("B0") == bool(np.any(ind[window] & (a0[window] ^ 1)))


def test_intersection_cross_validated_deep():
    # spot-check the finite/infinite split against a 2^20 enumeration
    finite_a0 = make_set(SetSpec(2, (0, 2)))  # disagrees with A0 on all of [2, 3]
    assert not finite_a0.intersects_infinitely("A0")
    assert finite_a0.intersects_infinitely("B0")
    ind = finite_a0.enumerate(1 << 20)
    a0 = np.array([1 if in_A0(x) else 0 for x in range(4)], dtype=np.uint8)
    hits = [x for x in np.flatnonzero(ind).tolist() if in_A0(x) and x >= 4]
    assert hits == []
    s = make_set(C0_SPEC)
    assert s.intersects_infinitely("A0") and s.intersects_infinitely("B0")
    ind2 = s.enumerate(1 << 20)
    deep_a0 = [x for x in np.flatnonzero(ind2).tolist() if x > 1 << 19 and in_A0(x)]
    deep_b0 = [x for x in np.flatnonzero(ind2).tolist() if x > 1 << 19 and not in_A0(x)]
    assert deep_a0 and deep_b0


def test_neither_does_not_imply_infinite_intersection():
    # likeness NEITHER and the two-sided intersection hypothesis are
    # genuinely different conditions
    s = make_set(SetSpec(2, (0, 2)))
    assert s.thue_morse_likeness() is Likeness.NEITHER
    assert not (s.intersects_infinitely("A0") and s.intersects_infinitely("B0"))


# -- serialization ------------------------------------------------------------


def test_parse_spec_c0():
    assert parse_spec("N=3;P=0,3,4") == C0_SPEC
    assert parse_spec(" N = 3 ; P = 0 , 3 , 4 ") == C0_SPEC


def test_parse_spec_errors():
    with pytest.raises(ValueError):
        parse_spec("N=2;P=0,5")
    with pytest.raises(ValueError):
        parse_spec("n=2,P=1")
    with pytest.raises(ValueError):
        parse_spec("N=2;P=")


@given(balanced_specs())
def test_round_trip(spec):
    assert parse_spec(format_spec(spec)) == spec


def test_format_spec_example():
    assert format_spec(C0_SPEC) == "N=3;P=0,3,4"


# -- misc ---------------------------------------------------------------------


def test_sets_are_immutable():
    s = make_set(C0_SPEC)
    with pytest.raises(AttributeError):
        s.N = 5


def test_iteration_yields_sorted_members():
    from itertools import islice

    s = make_set(C0_SPEC)
    assert list(islice(iter(s), 6)) == [0, 3, 4, 6, 8, 11]
