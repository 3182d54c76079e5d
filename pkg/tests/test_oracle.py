import pytest

from condec import (
    AlphabetFamily,
    EnumerationLimitError,
    cd_by_definition,
    enumerate_words,
    make_generator,
    minimize,
    prefix_tree,
    word,
)
from condec.sampling import random_generator


def test_enumerate_epsilon_language():
    g = prefix_tree([""], "a")
    assert enumerate_words(g, 0).words == {()}


def test_enumerate_reference_language_depths():
    g = prefix_tree(["b a", "c d b", "d c b"], "a b c d")
    assert enumerate_words(g, 3).words == {word("b a"), word("c d b"), word("d c b")}
    assert enumerate_words(g, 2).words == {word("b a")}


def test_enumerate_agrees_with_minimized_form(rng):
    for _ in range(20):
        g = random_generator(rng, 5, "a b c", density=0.4, marked_prob=0.4)
        for depth in (0, 3, 8):
            assert enumerate_words(g, depth).words == enumerate_words(minimize(g), depth).words


def test_enumeration_guard_trips():
    g = make_generator(
        "a b", ["q0"], "q0", ["q0"], [("q0", "a", "q0"), ("q0", "b", "q0")]
    )
    with pytest.raises(EnumerationLimitError):
        enumerate_words(g, 40, limit=10_000)


def test_enumerate_rejects_negative_depth():
    with pytest.raises(ValueError):
        enumerate_words(prefix_tree([""], "a"), -1)


def test_cd_by_definition_reference_case():
    g = prefix_tree(["b a", "c d b", "d c b"], "a b c d")
    assert cd_by_definition(g, AlphabetFamily(["a b c", "a b d"], "a b")).decomposable


def test_cd_by_definition_shuffle_witness():
    g = prefix_tree(["a b"], "a b")
    v = cd_by_definition(g, AlphabetFamily(["a", "b"], ""))
    assert not v.decomposable
    assert v.witness == word("b a")


def test_cd_by_definition_epsilon_language():
    g = prefix_tree([""], "a b")
    assert cd_by_definition(g, AlphabetFamily(["a", "b"], "")).decomposable
