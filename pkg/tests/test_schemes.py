import pytest

from condorcet.model import NeverCondition
from condorcet.schemes import (
    NAMED_SET_KINDS,
    fishburn_scheme,
    make_scheme,
    named_set,
    read_scheme,
    set_alternating_scheme,
    write_scheme,
)

NB = NeverCondition(1, 3)
NT = NeverCondition(3, 1)


def test_make_scheme_validates_triples():
    make_scheme(3, {(1, 2, 3): (NB,)})
    with pytest.raises(ValueError):
        make_scheme(3, {(2, 1, 3): (NB,)})  # not ascending
    with pytest.raises(ValueError):
        make_scheme(3, {(1, 2, 4): (NB,)})  # 4 out of range
    with pytest.raises(ValueError):
        make_scheme(4, {(1, 2, 3): (NB,)})  # three triples missing
    with pytest.raises(ValueError):
        make_scheme(3, {(1, 2, 3): ()})  # empty condition set


def test_scheme_accessors():
    s = set_alternating_scheme([2], 4)
    assert s.triples() == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert s.conditions((1, 2, 3)) == frozenset({NB})
    assert s.conditions((1, 3, 4)) == frozenset({NT})
    assert "set-alternating" in repr(s)


def test_set_alternating_is_keyed_on_midpoints():
    s = set_alternating_scheme([3], 5)
    for i, j, k in s.triples():
        want = NB if j == 3 else NT
        assert s.conditions((i, j, k)) == frozenset({want})


def test_set_alternating_normalizes_inert_members():
    # 1 and n are never midpoints, so they change nothing
    a = set_alternating_scheme([2], 5)
    b = set_alternating_scheme([1, 2, 5], 5)
    assert a.assignment == b.assignment


def test_named_set_values():
    assert named_set("odd", 4) == {2}
    assert named_set("odd", 5) == {2, 3}
    assert named_set("odd", 8) == {2, 3, 5}
    assert named_set("odd", 9) == {2, 3, 5, 7}
    assert named_set("even", 4) == {2}
    assert named_set("even", 8) == {2, 4, 6}
    assert named_set("even", 9) == {2, 4, 6, 8}
    assert named_set("truncated-even", 4) == frozenset()
    assert named_set("truncated-even", 8) == {2, 4}
    assert named_set("truncated-even", 9) == {2, 4, 6}


def test_named_set_rejects():
    with pytest.raises(ValueError):
        named_set("odd", 3)
    with pytest.raises(ValueError):
        named_set("prime", 6)
    assert set(NAMED_SET_KINDS) == {"odd", "even", "truncated-even"}


def test_fishburn_variants_differ():
    a = fishburn_scheme(5, "even")
    b = fishburn_scheme(5, "odd")
    assert a.assignment != b.assignment
    # midpoint 2 is even: never-bottom under the even variant
    assert a.conditions((1, 2, 3)) == frozenset({NeverCondition(2, 3)})
    assert b.conditions((1, 2, 3)) == frozenset({NeverCondition(2, 1)})
    with pytest.raises(ValueError):
        fishburn_scheme(5, "both")
    with pytest.raises(ValueError):
        fishburn_scheme(2)


def test_write_read_round_trip():
    mixed = make_scheme(4, {
        (1, 2, 3): (NB, NT),
        (1, 2, 4): (NeverCondition(2, 2),),
        (1, 3, 4): (NB,),
        (2, 3, 4): (NT,),
    })
    for s in (set_alternating_scheme([2, 4], 6), fishburn_scheme(5, "odd"), mixed):
        again = read_scheme(write_scheme(s))
        assert again.n == s.n
        assert again.assignment == s.assignment


def test_read_scheme_macros():
    s = read_scheme("n 6\nset-alternating 2,4\n")
    assert s.assignment == set_alternating_scheme([2, 4], 6).assignment
    f = read_scheme("# comment\nn 5\nfishburn odd\n")
    assert f.assignment == fishburn_scheme(5, "odd").assignment


def test_read_scheme_explicit_lines():
    s = read_scheme("n 3\n1 2 3 1N3\n")
    assert s.conditions((1, 2, 3)) == frozenset({NB})
    merged = read_scheme("n 3\n1 2 3 1N3\n1 2 3 3N1\n")
    assert merged.conditions((1, 2, 3)) == frozenset({NB, NT})


@pytest.mark.parametrize("text", [
    "set-alternating 2\n",          # missing header
    "n x\nset-alternating 2\n",     # bad n
    "n 4\nset-alternating two\n",   # unparsable set
    "n 4\n1 2 3\n",                 # no condition
    "n 4\n1 2 5 1N3\n",             # element out of range
    "n 4\nfishburn both\n",         # unknown variant
])
def test_read_scheme_rejects(text):
    with pytest.raises(ValueError):
        read_scheme(text)
