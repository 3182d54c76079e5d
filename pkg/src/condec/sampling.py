"""Seeded random generators, alphabet families, and coordinated systems.

Used by the test suites for statistical cross-validation and by the
benchmark workloads.  Everything is driven by an explicit
``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from typing import Optional

from .events import Alphabet, AlphabetFamily, Event
from .generator import Generator
from .nonblocking import CoordinatedSystem
from .ops import minimize, trim

EVENT_POOL = ("a", "b", "c", "d", "e", "f", "g", "h")


def random_generator(
    rng: random.Random,
    n_states: int,
    alphabet,
    density: float = 0.35,
    marked_prob: float = 0.35,
    name: str = "R",
) -> Generator:
    """A random partial deterministic generator."""
    alpha = Alphabet.of(alphabet)
    names = tuple(f"s{i}" for i in range(n_states))
    delta: dict[tuple[int, Event], int] = {}
    for q in range(n_states):
        for e in alpha:
            if rng.random() < density:
                delta[(q, e)] = rng.randrange(n_states)
    marked = frozenset(q for q in range(n_states) if rng.random() < marked_prob)
    return Generator(
        alphabet=alpha,
        state_names=names,
        delta=delta,
        initial=0,
        marked=marked,
        name=name,
    )


def random_trim_generator(
    rng: random.Random,
    n_states: int,
    alphabet,
    density: float = 0.4,
    marked_prob: float = 0.4,
    name: str = "R",
    attempts: int = 20,
) -> Generator:
    """A random nonblocking generator with a nonempty marked language."""
    alpha = Alphabet.of(alphabet)
    for _ in range(attempts):
        g = trim(random_generator(rng, n_states, alpha, density, marked_prob, name))
        if g.marked:
            return g
    # fall back to marking the initial state so the language is at least {eps}
    g = random_generator(rng, n_states, alpha, density, 0.0, name)
    return trim(g.with_marked({g.initial}))


def random_family(rng: random.Random, events, n: int) -> AlphabetFamily:
    """A valid family over the given events: every event lands in at least
    one local alphabet, and the coordinator gets all shared events plus a
    few extras."""
    evs = [Event.of(e) for e in Alphabet.of(events)]
    buckets: list[set[Event]] = [set() for _ in range(n)]
    for e in evs:
        owners = [i for i in range(n) if rng.random() < 0.5]
        if not owners:
            owners = [rng.randrange(n)]
        for i in owners:
            buckets[i].add(e)
    for i in range(n):
        if not buckets[i]:
            buckets[i].add(rng.choice(evs))
    locals_ = [Alphabet(b) for b in buckets]
    shared: set[Event] = set()
    for i in range(n):
        for j in range(i + 1, n):
            shared.update((locals_[i] & locals_[j]).events)
    ek = set(shared)
    for e in evs:
        if e not in ek and rng.random() < 0.25:
            ek.add(e)
    return AlphabetFamily(locals_, Alphabet(ek))


def random_instance(
    rng: random.Random,
    max_states: int = 6,
    max_events: int = 5,
    n: Optional[int] = None,
) -> tuple[Generator, AlphabetFamily]:
    """A random generator together with a valid family covering its alphabet."""
    n = n if n is not None else rng.choice((2, 3))
    n_events = rng.randint(2, max_events)
    events = EVENT_POOL[:n_events]
    family = random_family(rng, events, n)
    g = random_generator(
        rng,
        rng.randint(1, max_states),
        family.union(),
        density=rng.uniform(0.25, 0.6),
        marked_prob=rng.uniform(0.2, 0.6),
    )
    return g, family


def random_coordinated_system(
    rng: random.Random,
    n_components: Optional[int] = None,
    max_states: int = 5,
    max_events: int = 6,
) -> CoordinatedSystem:
    """A random coordinated system with nonblocking components and
    coordinator (the corollary premises need nonblocking parts)."""
    n = n_components if n_components is not None else rng.choice((2, 3))
    n_events = rng.randint(2, max_events)
    evs = [Event.of(e) for e in EVENT_POOL[:n_events]]
    buckets: list[set[Event]] = [set() for _ in range(n)]
    for e in evs:
        owners = [i for i in range(n) if rng.random() < 0.55]
        if not owners:
            owners = [rng.randrange(n)]
        for i in owners:
            buckets[i].add(e)
    for i in range(n):
        if not buckets[i]:
            buckets[i].add(rng.choice(evs))
    alphas = [Alphabet(b) for b in buckets]
    shared: set[Event] = set()
    for i in range(n):
        for j in range(i + 1, n):
            shared.update((alphas[i] & alphas[j]).events)
    ek = set(shared)
    for e in evs:
        if e not in ek and rng.random() < 0.2:
            ek.add(e)
    covered = set()
    for a in alphas:
        covered.update(a.events)
    ek &= covered
    if not ek:
        ek = {rng.choice(sorted(covered, key=lambda e: e.key))}
    ek_alpha = Alphabet(ek)
    components = [
        random_trim_generator(
            rng,
            rng.randint(1, max_states),
            alphas[i],
            density=rng.uniform(0.3, 0.7),
            marked_prob=rng.uniform(0.3, 0.7),
            name=f"G{i + 1}",
        )
        for i in range(n)
    ]
    if rng.random() < 0.3:
        # permissive coordinator: one marked state looping on its alphabet
        coordinator = Generator(
            alphabet=ek_alpha,
            state_names=("k0",),
            delta={(0, e): 0 for e in ek_alpha},
            initial=0,
            marked=frozenset({0}),
            name="Gk",
        )
    else:
        coordinator = random_trim_generator(
            rng,
            rng.randint(1, max_states),
            ek_alpha,
            density=rng.uniform(0.4, 0.8),
            marked_prob=rng.uniform(0.4, 0.8),
            name="Gk",
        )
    return CoordinatedSystem(components, coordinator)


def padded_family_instance(
    rng: random.Random,
    n: int,
    base_events=("a", "b", "c", "d"),
    base_states: int = 30,
) -> tuple[Generator, AlphabetFamily]:
    """A fixed-size base generator padded with one private event per
    component, each looping on the initial state only, so the work per
    component stays flat as ``n`` grows."""
    base = Alphabet.of(base_events)
    g = random_trim_generator(rng, base_states, base, density=0.5, marked_prob=0.3)
    g = minimize(g)
    pads = [Event.of(f"p{i}") for i in range(n)]
    delta = dict(g.delta)
    for p in pads:
        delta[(g.initial, p)] = g.initial
    g = Generator(
        alphabet=g.alphabet | Alphabet(pads),
        state_names=g.state_names,
        delta=delta,
        initial=g.initial,
        marked=g.marked,
        name=g.name,
    )
    locals_ = [base | Alphabet([pads[i]]) for i in range(n)]
    family = AlphabetFamily(locals_, base)
    return g, family
