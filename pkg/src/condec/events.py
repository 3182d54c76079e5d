"""Event symbols, alphabets, and coordinator alphabet families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

TILDE_MARK = "~"


class FamilyError(ValueError):
    """An alphabet family violates one of its inclusion constraints."""


@dataclass(frozen=True, slots=True)
class Event:
    """A named event symbol, optionally tagged as a renamed copy.

    The renamed copy of ``a`` renders as ``~a`` and is a symbol distinct
    from ``a`` itself.
    """

    base: str
    tilde: bool = False

    def __post_init__(self) -> None:
        if not self.base:
            raise ValueError("event name must be nonempty")
        if any(c.isspace() for c in self.base):
            raise ValueError(f"event name {self.base!r} contains whitespace")
        if self.base.startswith(TILDE_MARK):
            raise ValueError(f"event name {self.base!r} starts with {TILDE_MARK!r}")

    @staticmethod
    def of(value: Union["Event", str]) -> "Event":
        """Coerce a string token (``a`` or ``~a``) to an event."""
        if isinstance(value, Event):
            return value
        if value.startswith(TILDE_MARK):
            return Event(value[len(TILDE_MARK):], tilde=True)
        return Event(value)

    @property
    def key(self) -> tuple[bool, str]:
        """Canonical sort key: untagged events first, then by name."""
        return (self.tilde, self.base)

    def tag(self) -> "Event":
        """The tilde-tagged copy of this untagged event."""
        if self.tilde:
            raise ValueError(f"event {self} is already tagged")
        return Event(self.base, tilde=True)

    def render(self) -> str:
        return TILDE_MARK + self.base if self.tilde else self.base

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Event({self.render()!r})"


class Alphabet:
    """A finite set of events with a deterministic iteration order.

    Events iterate in canonical order: untagged before tagged, then
    lexicographically by name.  Alphabets are immutable and hashable.
    """

    __slots__ = ("events", "_set")

    def __init__(self, events: Iterable[Union[Event, str]] = ()):
        evs = {Event.of(e) for e in events}
        self.events: tuple[Event, ...]
        object.__setattr__(self, "events", tuple(sorted(evs, key=lambda e: e.key)))
        object.__setattr__(self, "_set", frozenset(evs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Alphabet is immutable")

    @staticmethod
    def of(spec: Union["Alphabet", str, Iterable[Union[Event, str]]]) -> "Alphabet":
        """Coerce from an alphabet, an ``a,b c``-style string, or an iterable."""
        if isinstance(spec, Alphabet):
            return spec
        if isinstance(spec, str):
            tokens = spec.replace(",", " ").split()
            return Alphabet(tokens)
        return Alphabet(spec)

    @staticmethod
    def union(parts: Iterable["Alphabet"]) -> "Alphabet":
        out: set[Event] = set()
        for p in parts:
            out.update(p.events)
        return Alphabet(out)

    def __contains__(self, item: Union[Event, str]) -> bool:
        return Event.of(item) in self._set

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def __bool__(self) -> bool:
        return bool(self.events)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.events == other.events

    def __hash__(self) -> int:
        return hash(self.events)

    def __or__(self, other) -> "Alphabet":
        return Alphabet(self._set | Alphabet.of(other)._set)

    def __and__(self, other) -> "Alphabet":
        return Alphabet(self._set & Alphabet.of(other)._set)

    def __sub__(self, other) -> "Alphabet":
        return Alphabet(self._set - Alphabet.of(other)._set)

    def issubset(self, other: "Alphabet") -> bool:
        return self._set <= Alphabet.of(other)._set

    def isdisjoint(self, other: "Alphabet") -> bool:
        return self._set.isdisjoint(Alphabet.of(other)._set)

    def has_tilde(self) -> bool:
        return any(e.tilde for e in self.events)

    def render(self) -> str:
        return " ".join(e.render() for e in self.events)

    def __repr__(self) -> str:
        return f"Alphabet({self.render()!r})"


@dataclass(frozen=True)
class AlphabetFamily:
    """Local alphabets plus a coordinator alphabet.

    The coordinator must contain every event shared by two or more local
    alphabets, and must not reach outside their union.
    """

    locals: tuple[Alphabet, ...]
    coordinator: Alphabet

    def __init__(self, locals: Iterable, coordinator) -> None:
        locs = tuple(Alphabet.of(a) for a in locals)
        coord = Alphabet.of(coordinator)
        object.__setattr__(self, "locals", locs)
        object.__setattr__(self, "coordinator", coord)
        self.validate()

    @property
    def n(self) -> int:
        return len(self.locals)

    def union(self) -> Alphabet:
        return Alphabet.union(self.locals)

    def shared(self) -> Alphabet:
        """Events belonging to two or more local alphabets."""
        out: set[Event] = set()
        for i, a in enumerate(self.locals):
            for b in self.locals[i + 1:]:
                out.update((a & b).events)
        return Alphabet(out)

    def validate(self) -> None:
        if len(self.locals) < 2:
            raise FamilyError("at least two local alphabets are required")
        for a in (*self.locals, self.coordinator):
            if a.has_tilde():
                raise FamilyError(f"tilde-tagged events are not allowed in a family: {a.render()}")
        shared = self.shared()
        if not shared.issubset(self.coordinator):
            missing = shared - self.coordinator
            raise FamilyError(
                "shared events must be in the coordinator alphabet: "
                f"{{{missing.render()}}} are shared but not coordinated"
            )
        total = self.union()
        if not self.coordinator.issubset(total):
            extra = self.coordinator - total
            raise FamilyError(
                "coordinator alphabet must stay inside the union of the local alphabets: "
                f"{{{extra.render()}}} are not local events"
            )

    def rest(self, i: int) -> Alphabet:
        """Union of all local alphabets except the ``i``-th (0-based)."""
        return Alphabet.union(a for j, a in enumerate(self.locals) if j != i)
