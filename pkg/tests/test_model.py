import numpy as np
import pytest

from condorcet.model import (
    Domain,
    NeverCondition,
    all_triples,
    as_triple,
    dual_domain,
    dump_domain,
    load_domain,
    normalize_generating_set,
    order_string,
    parse_order,
    restrict_domain,
    restrict_order,
    reverse_complement,
    satisfied_conditions,
)


def test_never_condition_parse_and_str():
    c = NeverCondition.parse("1N3")
    assert (c.pos, c.rank) == (1, 3)
    assert str(c) == "1N3"
    assert NeverCondition.parse("2n1") == NeverCondition(2, 1)


@pytest.mark.parametrize("bad", ["0N3", "4N1", "1N0", "1N4", "N3", "13", "xNy"])
def test_never_condition_rejects(bad):
    with pytest.raises(ValueError):
        NeverCondition.parse(bad)


def test_never_condition_kind():
    assert NeverCondition(1, 3).kind == "never-bottom"
    assert NeverCondition(3, 1).kind == "never-top"
    assert NeverCondition(2, 2).kind == "never-middle"


def test_element_of():
    assert NeverCondition(2, 3).element_of((4, 7, 9)) == 7
    assert NeverCondition(1, 1).element_of((4, 7, 9)) == 4


def test_as_triple_validates():
    assert as_triple((2, 5, 9)) == (2, 5, 9)
    with pytest.raises(ValueError):
        as_triple((5, 2, 9))  # must already be ascending
    with pytest.raises(ValueError):
        as_triple((1, 1, 2))


def test_all_triples_count():
    assert len(list(all_triples(5))) == 10
    assert list(all_triples([3, 1, 7])) == [(1, 3, 7)]


def test_parse_order_forms():
    assert parse_order("652314") == (6, 5, 2, 3, 1, 4)
    assert parse_order("6 5 2 3 1 4") == (6, 5, 2, 3, 1, 4)
    assert parse_order("12 1 3") == (12, 1, 3)


def test_order_string_round_trip():
    for o in [(1, 2, 3), (10, 2, 1, 3, 4, 5, 6, 7, 8, 9)]:
        assert parse_order(order_string(o)) == o


def test_domain_dedupes_and_sorts():
    d = Domain([(2, 1, 3), (1, 2, 3), (2, 1, 3)])
    assert len(d) == 2
    assert d.orders() == [(1, 2, 3), (2, 1, 3)]
    assert (2, 1, 3) in d
    assert (3, 2, 1) not in d


def test_domain_rejects_non_permutations():
    with pytest.raises(ValueError):
        Domain([(1, 1, 2)])
    with pytest.raises(ValueError):
        Domain([(1, 2), (1, 2, 3)])


def test_domain_equality_and_hash():
    a = Domain([(1, 2, 3), (2, 1, 3)])
    b = Domain([(2, 1, 3), (1, 2, 3)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Domain([(1, 2, 3)])


def test_ranks_matches_matrix():
    d = Domain([(3, 1, 2)])
    # 0-based: alternative 3 is ranked first, 1 second, 2 third
    r = d.ranks()
    assert r[0, d.column_of(3)] == 0
    assert r[0, d.column_of(1)] == 1
    assert r[0, d.column_of(2)] == 2


def test_restrict_order():
    assert restrict_order((6, 5, 2, 3, 1, 4), [2, 5, 4]) == (5, 2, 4)


def test_restrict_domain_collapses_duplicates():
    d = Domain([(1, 2, 3, 4), (1, 2, 4, 3)])
    r = restrict_domain(d, [1, 2])
    assert r.orders() == [(1, 2)]
    assert r.alternatives == (1, 2)


def test_restrict_domain_empty_raises():
    d = Domain([(1, 2, 3)])
    with pytest.raises(ValueError):
        restrict_domain(d, [])


def test_dual_domain_is_involution():
    d = Domain([(1, 2, 3), (1, 3, 2), (3, 1, 2)])
    dd = dual_domain(d)
    assert dd.orders() == [(2, 1, 3), (2, 3, 1), (3, 2, 1)]
    assert dual_domain(dd) == d


def test_relabel():
    d = Domain([(1, 2, 3)])
    r = d.relabel({1: 3, 2: 2, 3: 1})
    assert r.orders() == [(3, 2, 1)]
    with pytest.raises(ValueError):
        d.relabel({1: 1, 2: 1, 3: 3})


def test_reverse_complement():
    assert reverse_complement([2], 4, normalize=True) == frozenset({2})
    assert reverse_complement([2, 3], 5, normalize=True) == frozenset({2})
    assert reverse_complement([], 4, normalize=True) == frozenset({2, 3})
    with pytest.raises(ValueError):
        reverse_complement([0], 4)


def test_normalize_generating_set():
    assert normalize_generating_set([1, 2, 5, 6, 9], 6) == frozenset({2, 5})


def test_satisfied_conditions():
    # 2 never sits between 1 and 3 here
    d = Domain([(2, 1, 3), (1, 3, 2)])
    got = satisfied_conditions(d, (1, 2, 3))
    assert NeverCondition(2, 2) in got
    assert NeverCondition(1, 3) in got  # 1 is never last either
    full = satisfied_conditions(Domain([(1, 2, 3)]), (1, 2, 3))
    assert len(full) == 6  # a single order leaves two cells per row free


def test_load_dump_round_trip(even6):
    text = dump_domain(even6)
    assert text.startswith("n 6\n")
    assert load_domain(text) == even6


def test_load_domain_comments_and_errors():
    d = load_domain("# hi\nn 3\n1 2 3   # identity\n\n3 2 1\n")
    assert d.orders() == [(1, 2, 3), (3, 2, 1)]
    with pytest.raises(ValueError):
        load_domain("1 2 3\n")
    with pytest.raises(ValueError):
        load_domain("n 3\n1 2\n")
    with pytest.raises(ValueError):
        load_domain("")


def test_matrix_is_read_only(even6):
    with pytest.raises(ValueError):
        even6.matrix[0, 0] = 9
    assert even6.matrix.dtype == np.uint8
