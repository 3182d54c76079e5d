"""Generators: partial deterministic finite automata with marked states."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence, Union

from .events import Alphabet, Event

Word = tuple[Event, ...]

EPSILON: Word = ()


def word(text: Union[str, Iterable[Union[Event, str]]]) -> Word:
    """Build a word from space-separated event tokens (or an iterable)."""
    if isinstance(text, str):
        return tuple(Event.of(tok) for tok in text.split())
    return tuple(Event.of(e) for e in text)


def render_word(w: Word) -> str:
    return " ".join(e.render() for e in w)


def erase(w: Word, keep: Alphabet) -> Word:
    """Natural projection of a word: drop every event outside ``keep``."""
    return tuple(e for e in w if e in keep)


def strip_tilde(w: Word) -> Word:
    """Drop every tilde-tagged event from a word."""
    return tuple(e for e in w if not e.tilde)


@dataclass(frozen=True)
class Generator:
    """A partial deterministic finite automaton with marked states.

    ``delta`` maps ``(state, event)`` to a state and may be undefined for
    some pairs.  The generated language is every word with a run from the
    initial state; the marked language is every word whose run ends in a
    marked state.  Instances are immutable: every operation returns a new
    generator.
    """

    alphabet: Alphabet
    state_names: tuple[str, ...]
    delta: dict[tuple[int, Event], int]
    initial: int
    marked: frozenset[int]
    name: str = "G"

    def __post_init__(self) -> None:
        n = len(self.state_names)
        if n == 0:
            raise ValueError("a generator needs at least one state")
        if len(set(self.state_names)) != n:
            raise ValueError("duplicate state names")
        if not (0 <= self.initial < n):
            raise ValueError("initial state out of range")
        if not all(0 <= q < n for q in self.marked):
            raise ValueError("marked state out of range")
        for (q, e), t in self.delta.items():
            if not (0 <= q < n and 0 <= t < n):
                raise ValueError(f"transition ({q},{e},{t}) uses an unknown state")
            if e not in self.alphabet:
                raise ValueError(f"transition event {e} is not in the alphabet")

    @property
    def n_states(self) -> int:
        return len(self.state_names)

    def step(self, state: int, event: Event) -> Optional[int]:
        return self.delta.get((state, event))

    def run(self, w: Word, start: Optional[int] = None) -> Optional[int]:
        """State reached by ``w`` from ``start`` (default initial), or None."""
        q = self.initial if start is None else start
        for e in w:
            nxt = self.delta.get((q, e))
            if nxt is None:
                return None
            q = nxt
        return q

    def accepts(self, w: Word) -> bool:
        q = self.run(w)
        return q is not None and q in self.marked

    def generates(self, w: Word) -> bool:
        return self.run(w) is not None

    def adjacency(self) -> list[list[tuple[Event, int]]]:
        """Per-state outgoing transitions, events in canonical order."""
        adj: list[list[tuple[Event, int]]] = [[] for _ in range(self.n_states)]
        for (q, e), t in self.delta.items():
            adj[q].append((e, t))
        for row in adj:
            row.sort(key=lambda et: et[0].key)
        return adj

    def defined_events(self, state: int) -> list[Event]:
        return sorted((e for (q, e) in self.delta if q == state), key=lambda e: e.key)

    def is_total(self) -> bool:
        return all((q, e) in self.delta for q in range(self.n_states) for e in self.alphabet)

    def reroot(self, new_initial: int) -> "Generator":
        return replace(self, initial=new_initial)

    def with_marked(self, marked: Iterable[int]) -> "Generator":
        return replace(self, marked=frozenset(marked))

    def with_alphabet(self, wider: Alphabet) -> "Generator":
        """Same structure over a wider alphabet (new events stay blocked)."""
        if not self.alphabet.issubset(wider):
            raise ValueError("with_alphabet only widens the alphabet")
        return replace(self, alphabet=wider)

    def with_name(self, name: str) -> "Generator":
        return replace(self, name=name)


def make_generator(
    alphabet: Union[Alphabet, str, Iterable],
    states: Sequence[str],
    initial: str,
    marked: Iterable[str],
    transitions: Iterable[tuple[str, Union[Event, str], str]] = (),
    name: str = "G",
) -> Generator:
    """Convenience builder from state names and string event tokens."""
    alpha = Alphabet.of(alphabet)
    names = tuple(states)
    index = {s: i for i, s in enumerate(names)}
    delta: dict[tuple[int, Event], int] = {}
    for src, ev, dst in transitions:
        e = Event.of(ev)
        key = (index[src], e)
        if key in delta:
            raise ValueError(f"duplicate transition on ({src}, {e})")
        delta[key] = index[dst]
    return Generator(
        alphabet=alpha,
        state_names=names,
        delta=delta,
        initial=index[initial],
        marked=frozenset(index[s] for s in marked),
        name=name,
    )


def prefix_tree(
    words: Iterable[Union[str, Word]],
    alphabet: Union[Alphabet, str, Iterable, None] = None,
    name: str = "T",
) -> Generator:
    """Generator marking exactly the given finite set of words."""
    ws = [word(w) if isinstance(w, str) else tuple(w) for w in words]
    events = {e for w in ws for e in w}
    alpha = Alphabet(events) if alphabet is None else Alphabet.of(alphabet)
    names = ["q0"]
    delta: dict[tuple[int, Event], int] = {}
    marked: set[int] = set()
    for w in ws:
        q = 0
        for e in w:
            if e not in alpha:
                raise ValueError(f"word event {e} is not in the alphabet")
            nxt = delta.get((q, e))
            if nxt is None:
                nxt = len(names)
                names.append(f"q{nxt}")
                delta[(q, e)] = nxt
            q = nxt
        marked.add(q)
    return Generator(
        alphabet=alpha,
        state_names=tuple(names),
        delta=delta,
        initial=0,
        marked=frozenset(marked),
        name=name,
    )
