import pytest

from condorcet.dyck import (
    dyck_words,
    is_dyck_word,
    marked_elements,
    mu,
    mu_inverse,
    part_index,
    part_size_table,
    split_parts,
)
from condorcet.generate import generate_domain
from condorcet.schemes import fishburn_scheme, named_set, set_alternating_scheme
from condorcet.sizes import catalan, even_scheme_size

PINNED = {
    (1, 3, 2, 4): "ududud",
    (1, 3, 4, 2): "uduudd",
    (3, 1, 2, 4): "uuddud",
    (3, 1, 4, 2): "uududd",
    (3, 4, 1, 2): "uuuddd",
}


def test_is_dyck_word():
    assert is_dyck_word("ud")
    assert is_dyck_word("uudd")
    assert is_dyck_word("ududud")
    assert not is_dyck_word("du")
    assert not is_dyck_word("uudddu")
    assert not is_dyck_word("uud")       # unbalanced
    assert not is_dyck_word("uxud")      # foreign letter
    assert not is_dyck_word("")


def test_dyck_words_are_counted_by_catalan():
    for k in range(1, 7):
        words = list(dyck_words(k))
        assert len(words) == catalan(k)
        assert len(set(words)) == len(words)
        assert all(is_dyck_word(w) and len(w) == 2 * k for w in words)


def test_marked_elements():
    assert marked_elements(1) == {1}
    assert marked_elements(2) == {1, 2}
    assert marked_elements(3) == {1, 2, 4}
    assert marked_elements(4) == {1, 2, 4, 6}


def test_part_index():
    assert part_index((2, 1, 4, 3, 6, 5)) == 1
    assert part_index((3, 1, 4, 2, 6, 5)) == 2
    assert part_index((5, 3, 1, 2, 4, 6)) == 3
    with pytest.raises(ValueError):
        part_index((1, 3, 2))  # no prefix closes


def test_split_parts_even6(even6):
    parts = split_parts(even6)
    assert {k: len(v) for k, v in parts.items()} == {1: 18, 2: 10, 3: 14}
    assert sum(len(v) for v in parts.values()) == 42
    # part 2 holds exactly the five pinned prefixes
    prefixes = {o[:4] for o in parts[2].orders()}
    assert prefixes == set(PINNED)


def test_split_parts_rejects_foreign_domains(fixture19):
    with pytest.raises(ValueError):
        split_parts(fixture19)  # right n, wrong domain
    odd9 = generate_domain(set_alternating_scheme(named_set("odd", 9), 9))
    with pytest.raises(ValueError):
        split_parts(odd9)  # odd n
    f6 = generate_domain(fishburn_scheme(6))
    with pytest.raises(ValueError):
        split_parts(f6)


def test_part_size_law():
    for n in range(4, 15, 2):
        d = generate_domain(set_alternating_scheme(named_set("even", n), n))
        actual = {k: len(v) for k, v in split_parts(d).items()}
        assert actual == dict(part_size_table(n))


def test_part_size_table_formula():
    a = even_scheme_size
    assert part_size_table(6) == [(1, catalan(2) * a(4)), (2, catalan(3) * a(2)),
                                  (3, catalan(4) * 1)]


def test_mu_pinned_pairs():
    for prefix, word in PINNED.items():
        assert mu(prefix, 2) == word
        assert mu("".join(str(x) for x in prefix), 2) == word
        assert mu_inverse(word) == prefix


def test_mu_rejects():
    with pytest.raises(ValueError):
        mu((1, 2, 3), 2)        # not a permutation of 1..4
    with pytest.raises(ValueError):
        mu((1, 2, 3, 4), 2)     # letter sequence dips below the diagonal
    with pytest.raises(ValueError):
        mu_inverse("uddu")
    with pytest.raises(ValueError):
        mu_inverse("udx")


def test_bijection_round_trips():
    # words of length 2k+2 pair with the top segments of part k
    for k in range(0, 6):
        words = list(dyck_words(k + 1))
        prefixes = {mu_inverse(w) for w in words}
        assert len(prefixes) == catalan(k + 1)
        for w in words:
            assert mu(mu_inverse(w), k) == w


def test_part_prefixes_biject_with_words(even6):
    # part k contributes exactly the words of length 2k+2, both ways round
    parts = split_parts(even6)
    for k, part in parts.items():
        prefixes = {o[: 2 * k] for o in part.orders()}
        assert {mu(p, k) for p in prefixes} == set(dyck_words(k + 1))
        assert {mu_inverse(w) for w in dyck_words(k + 1)} == prefixes
