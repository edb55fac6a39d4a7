from itertools import permutations

from hecketrace.symgroup import (
    all_perms, compose, embed_perm, identity, inverse, jones_normal_form, last_strand_factor,
    reduced_word, simple, tail_word, transposition, word_to_perm,
)


def brute_compose(v, w):
    # apply v, then w
    return tuple(w[v[i] - 1] for i in range(len(v)))


def test_compose_matches_brute_force_table():
    S3 = list(permutations((1, 2, 3)))
    for v in S3:
        for w in S3:
            assert compose(v, w) == brute_compose(v, w)
    e = identity(3)
    assert compose(e, (2, 3, 1)) == (2, 3, 1)
    assert compose(simple(1, 3), simple(1, 3)) == e


def test_last_strand_factor():
    assert last_strand_factor(identity(3)) == (identity(3), None)
    assert last_strand_factor(simple(2, 3)) == (identity(3), 2)
    for w in all_perms(3):
        wp, i = last_strand_factor(w)
        assert wp[2] == 3
        tail = identity(3) if i is None else word_to_perm(tail_word(3, i), 3)
        assert compose(wp, tail) == w


def test_jones_normal_form():
    assert jones_normal_form(identity(3)) == []
    assert jones_normal_form(word_to_perm([2, 1], 3)) == [(2, 1)]
    for w in all_perms(4):
        runs = jones_normal_form(w)
        tops = [r[0] for r in runs]
        assert tops == sorted(set(tops))
        for r in runs:
            assert list(r) == list(range(r[0], r[0] - len(r), -1))
        assert word_to_perm([i for r in runs for i in r], 4) == w


def test_transpositions_and_words():
    assert transposition(1, 2, 2) == simple(1, 2)
    assert transposition(1, 3, 3) == word_to_perm([2, 1, 2], 3)
    t = transposition(2, 4, 4)
    assert compose(t, t) == identity(4)
    for w in all_perms(4):
        assert word_to_perm(reduced_word(w), 4) == w
        assert compose(w, inverse(w)) == identity(4)
    assert embed_perm((2, 1), 3) == (2, 1, 3)
