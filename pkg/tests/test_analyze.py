import pytest

from condorcet.analyze import (
    AXIS_SEARCH_N_CAP,
    MAXIMALITY_N_CAP,
    check_bipartition,
    classify,
    condition_table,
    find_bipartition,
    find_midpoint_bipartition,
    has_maximal_width,
    is_ample,
    is_arrow_single_peaked,
    is_condorcet,
    is_connected,
    is_copious,
    is_dual_arrow,
    is_maximal,
    is_peak_pit,
    is_unitary,
)
from condorcet.generate import generate_domain
from condorcet.model import Domain, ResourceGuardError
from condorcet.schemes import fishburn_scheme, named_set, set_alternating_scheme

CYCLE3 = Domain([(1, 2, 3), (2, 3, 1), (3, 1, 2)])
# 2 never in the middle of the restriction, nothing else holds
NEVER_MIDDLE = Domain([(2, 1, 3), (2, 3, 1), (1, 3, 2), (3, 1, 2)])


def test_is_condorcet():
    assert not is_condorcet(CYCLE3)
    assert is_condorcet(NEVER_MIDDLE)
    assert is_condorcet(Domain([(1, 2, 3)]))


def test_condition_table_lists_what_holds():
    t = condition_table(NEVER_MIDDLE)
    kinds = {str(c) for c in t[(1, 2, 3)]}
    assert kinds == {"2N2"}


def test_peak_pit():
    assert not is_peak_pit(NEVER_MIDDLE)  # only a never-middle condition
    d = generate_domain(set_alternating_scheme([2, 3], 5))
    assert is_peak_pit(d)


def test_copious_and_ample(even6, fixture19):
    assert is_copious(even6)
    assert is_ample(even6)
    assert is_copious(fixture19)
    # two orders only realize two patterns on some triple
    assert not is_copious(Domain([(1, 2, 3, 4), (4, 3, 2, 1)]))


def test_arrow_single_peaked():
    # every triple never-bottom: exactly the classic single-peaked situation
    full = generate_domain(set_alternating_scheme([2, 3, 4], 5))
    assert is_arrow_single_peaked(full)
    assert len(full) == 2 ** 4
    assert not is_dual_arrow(full)
    empty = generate_domain(set_alternating_scheme([], 5))
    assert is_dual_arrow(empty)
    assert not is_arrow_single_peaked(empty)
    mixed = generate_domain(set_alternating_scheme([2], 5))
    assert not is_arrow_single_peaked(mixed)
    assert not is_dual_arrow(mixed)


def test_connected(even6):
    assert is_connected(even6)
    assert not is_connected(Domain([(1, 2, 3), (3, 2, 1)]))
    assert is_connected(Domain([(1, 2, 3)]))


def test_maximal_width(even6, fixture19):
    assert has_maximal_width(fixture19)  # 123456 and 654321 both present
    assert not has_maximal_width(even6)


def test_unitary(even6, fixture19, single_crossing):
    assert is_unitary(even6)
    assert is_unitary(fixture19)
    assert not is_unitary(single_crossing)


def test_is_maximal(even6, single_crossing):
    assert is_maximal(even6)
    assert is_maximal(single_crossing)
    smaller = Domain(even6.orders()[1:])
    assert not is_maximal(smaller)
    assert not is_maximal(CYCLE3)  # not even Condorcet


def test_is_maximal_cap():
    d = generate_domain(set_alternating_scheme([2], MAXIMALITY_N_CAP + 1))
    with pytest.raises(ResourceGuardError):
        is_maximal(d)


def test_check_bipartition(even6):
    assert check_bipartition(even6, {1, 2, 3})
    # the two sides play different roles, so the complement need not work
    assert not check_bipartition(even6, {4, 5, 6})
    assert not check_bipartition(even6, {1, 5})
    with pytest.raises(ValueError):
        check_bipartition(even6, {1, 2, 9})
    with pytest.raises(ValueError):
        check_bipartition(NEVER_MIDDLE, {1})  # not peak-pit


def test_find_bipartition_prefers_lexicographic(even6):
    assert find_bipartition(even6) == frozenset({1, 2, 3})


def test_find_bipartition_fishburn8(fishburn8):
    # the even elements split this domain; the search itself settles on
    # the lexicographically first valid set, which swaps 8 for the inert 1
    assert check_bipartition(fishburn8, {2, 4, 6, 8})
    assert find_bipartition(fishburn8) == frozenset({1, 2, 4, 6})


def test_find_bipartition_none(fixture19):
    assert find_bipartition(fixture19) is None


def test_midpoint_bipartition_even6(even6):
    got = find_midpoint_bipartition(even6)
    assert got is not None
    axis, part = got
    assert axis == (1, 2, 3, 4, 5, 6)
    assert part == {2, 4}


def test_midpoint_bipartition_fixed_axis(even6):
    axis = tuple(range(1, 7))
    assert find_midpoint_bipartition(even6, axis=axis) == (axis, frozenset({2, 4}))
    # swapping the tail breaks the consistent flag assignment
    assert find_midpoint_bipartition(even6, axis=(1, 2, 3, 5, 4, 6)) is None
    with pytest.raises(ValueError):
        find_midpoint_bipartition(even6, axis=(1, 2, 3))


def test_midpoint_bipartition_negative(fixture19, single_crossing):
    assert find_midpoint_bipartition(fixture19) is None
    assert find_midpoint_bipartition(single_crossing) is None


def test_axis_search_cap():
    d = generate_domain(set_alternating_scheme([2], AXIS_SEARCH_N_CAP + 1))
    with pytest.raises(ResourceGuardError):
        find_midpoint_bipartition(d)
    # an explicit axis stays usable above the cap
    axis = tuple(range(1, AXIS_SEARCH_N_CAP + 2))
    got = find_midpoint_bipartition(d, axis=axis)
    assert got == (axis, frozenset({2}))


def test_classify_fixture19(fixture19):
    r = classify(fixture19)
    assert r.n == 6 and r.size == 19
    assert r.is_condorcet and r.is_peak_pit and r.is_connected
    assert r.has_maximal_width and r.is_unitary and r.is_maximal
    assert r.bipartition is None
    assert r.midpoint_bipartition is None
    assert not r.is_arrow_single_peaked and not r.is_dual_arrow
    assert r.skipped == {}


def test_classify_report_formats(even6):
    r = classify(even6)
    d = r.as_dict()
    assert d["size"] == 42 and d["is_maximal"] is True
    assert d["bipartition"] == [1, 2, 3]
    text = r.format_text()
    assert "bipartition" in text and "42" in text


def test_classify_skips_above_caps():
    d = generate_domain(set_alternating_scheme([2], 10))
    r = classify(d)
    assert r.is_maximal is None
    assert "is_maximal" in r.skipped
    assert "midpoint_bipartition" in r.skipped
