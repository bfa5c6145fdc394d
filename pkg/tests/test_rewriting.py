import random

import pytest

from vslinks.diagram import BraidWord, parse_word
from vslinks.rewriting import (
    RELATIONS,
    RelationMismatch,
    apply_relation,
    matches,
    random_equivalent,
    random_rewrite,
    random_word,
    replay,
)


def w(text):
    return parse_word(text)


def test_relation_examples():
    assert apply_relation(w("n=2 t1 t1"), "tau_square", 0) == BraidWord(2)
    assert apply_relation(w("s1 s2 s1"), "sigma_braid", 0) == w("s2 s1 s2")
    assert apply_relation(w("s1 t2 t1"), "mixed", 0) == w("n=3 t2 t1 s2")


def test_relations_read_both_ways():
    assert apply_relation(w("s2 s1 s2"), "sigma_braid", 0) == w("s1 s2 s1")
    assert apply_relation(w("n=3 t2 t1 s2"), "mixed", 0) == w("s1 t2 t1")
    assert apply_relation(w("S1 S2 S1"), "sigma_braid", 0) == w("S2 S1 S2")
    assert apply_relation(w("s1 s3"), "sigma_far", 0) == w("n=4 s3 s1")
    assert apply_relation(w("t1 t3"), "tau_far", 0) == w("n=4 t3 t1")
    assert apply_relation(w("t1 t2 t1"), "tau_braid", 0) == w("t2 t1 t2")
    assert apply_relation(w("s1 t3"), "mixed_far", 0) == w("n=4 t3 s1")
    assert apply_relation(w("S1 s1"), "inverse_pair", 0) == BraidWord(2)
    assert apply_relation(w("f1 f1"), "inverse_pair", 0) == BraidWord(2)
    assert apply_relation(w("f1 t2 t1"), "mixed", 0) == w("n=3 t2 t1 f2")


def test_insertions():
    assert apply_relation(BraidWord(2), "tau_square", 0, index=1) == w("t1 t1")
    assert apply_relation(w("t1"), "inverse_pair", 1, index=1, inverse=True) == w("t1 S1 s1")
    assert apply_relation(BraidWord(3), "inverse_pair", 0, index=2, kind="f") == w("n=3 f2 f2")


def test_mismatch():
    with pytest.raises(RelationMismatch):
        apply_relation(w("s1 s2"), "sigma_braid", 0)
    with pytest.raises(RelationMismatch):
        apply_relation(w("s1 s2"), "sigma_far", 0)
    with pytest.raises(ValueError):
        apply_relation(w("s1"), "no_such_relation", 0)


def test_matches_are_applicable():
    rng = random.Random(9)
    for _ in range(100):
        word = random_word(rng, 4, 8, "sStf"[: rng.choice([3, 4])])
        for step in matches(word):
            assert step.relation in RELATIONS
            out = apply_relation(word, step.relation, step.position)
            assert out.n == word.n


def test_random_equivalent_basics():
    word = w("n=3 s1 t2 S1")
    assert random_equivalent(word, 0, 1) == word
    a = random_equivalent(word, 20, 5)
    assert a == random_equivalent(word, 20, 5)
    assert a.n == 3
    out, trace = random_rewrite(word, 20, 5)
    assert replay(word, trace) == out


def test_flat_rewrites_stay_flat():
    rng = random.Random(1)
    for seed in range(50):
        word = random_word(rng, 3, 5, "t")
        out, _ = random_rewrite(word, 15, seed, flat=True)
        assert out.is_flat
