import random

import pytest

from condec import Alphabet, accepts_projected, enumerate_words, erase, trim


@pytest.fixture
def rng():
    return random.Random(12345)


def words_upto(alphabet, depth):
    """Every word over the alphabet up to the given length."""
    alpha = Alphabet.of(alphabet)
    out = [()]
    frontier = [()]
    for _ in range(depth):
        frontier = [w + (e,) for w in frontier for e in alpha]
        out.extend(frontier)
    return out


def bounded_words(g, depth):
    return set(enumerate_words(g, depth).words)


def same_language_bounded(g1, g2, depth):
    return bounded_words(g1, depth) == bounded_words(g2, depth)


def is_observer_violation(g, ek, s, t):
    """Definition-level check that (s, t) refutes the observer property for
    the marked language of ``g`` and the projection onto ``ek``."""
    ek = Alphabet.of(ek)
    tg = trim(g)
    q = tg.run(s)
    if q is None:  # s must lie in the prefix closure
        return False
    if not accepts_projected(g, ek, t):  # t must lie in the projected language
        return False
    ps = erase(s, ek)
    if ps != t[: len(ps)]:  # the projection of s must be a prefix of t
        return False
    # a matching continuation u with su marked and P(su) = t must NOT exist
    return not accepts_projected(tg.reroot(q), ek, t[len(ps):])
