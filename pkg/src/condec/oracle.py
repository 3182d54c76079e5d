"""Brute-force reference implementations used for cross-checking.

The decomposability oracle follows the definition directly: project onto
every coordinator-augmented alphabet, compose the projections, and compare
languages.  It never touches the renamed-copy construction used by the
fast check, so the two routes fail independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from .events import Alphabet, AlphabetFamily
from .generator import Generator, Word, erase
from .ops import (
    compose_all,
    language_subset,
    minimize,
    project,
    trim,
)
from .cdcheck import CdVerdict


class EnumerationLimitError(RuntimeError):
    """Raised when bounded enumeration would visit too many words."""


@dataclass(frozen=True)
class BoundedLanguage:
    """The exact set of marked words up to a length bound."""

    words: frozenset[Word]
    depth: int

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __len__(self) -> int:
        return len(self.words)


def enumerate_words(g: Generator, depth: int, limit: int = 2_000_000) -> BoundedLanguage:
    """All marked words of length at most ``depth``, by exhaustive traversal.

    ``limit`` caps the number of paths visited; exceeding it raises
    EnumerationLimitError rather than thrashing.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    adj = g.adjacency()
    words: set[Word] = set()
    visited = 0
    stack: list[tuple[int, Word]] = [(g.initial, ())]
    while stack:
        q, w = stack.pop()
        visited += 1
        if visited > limit:
            raise EnumerationLimitError(f"more than {limit} paths up to depth {depth}")
        if q in g.marked:
            words.add(w)
        if len(w) < depth:
            for e, t in adj[q]:
                stack.append((t, w + (e,)))
    return BoundedLanguage(frozenset(words), depth)


def prefixes(w: Word) -> set[Word]:
    return {w[:i] for i in range(len(w) + 1)}


def closure_words(words) -> set[Word]:
    """All prefixes of all words of a finite set."""
    out: set[Word] = set()
    for w in words:
        out |= prefixes(w)
    return out


def projected_words(words, keep: Alphabet) -> set[Word]:
    return {erase(w, keep) for w in words}


def cd_by_definition(g: Generator, family: AlphabetFamily) -> CdVerdict:
    """Definition-level decomposability: compose the projections and compare.

    Only the composition-inside-language direction can fail; the converse
    inclusion always holds and is asserted.
    """
    family.validate()
    if g.alphabet != family.union():
        raise ValueError("generator alphabet must equal the union of the local alphabets")
    g0 = minimize(trim(g))
    parts = [project(g0, local | family.coordinator) for local in family.locals]
    composed = compose_all(parts)
    violation = language_subset(composed, g0)
    if violation is None:
        assert language_subset(g0, composed) is None
        return CdVerdict(True, None, None)
    w = violation.word
    assert not g.accepts(w)
    return CdVerdict(False, w, None)
