"""Language-level operations on generators.

Everything here is a pure function: trim, completion, complement,
synchronous composition, natural projection (as a generator operation),
inverse projection via self-loops, renaming, minimization, emptiness,
nonblockingness, and language inclusion.  Witnesses are shortest words,
with ties broken by the canonical event order, and are re-verified by
direct simulation before they are returned.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

from .events import Alphabet, Event
from .generator import Generator, Word


class WitnessKind(enum.Enum):
    IN_COMPOSITION_NOT_IN_K = "InCompositionNotInK"
    BLOCKING_STRING = "BlockingString"
    INCLUSION_VIOLATION = "InclusionViolation"


@dataclass(frozen=True)
class Witness:
    """A shortest word witnessing a property violation (or nonemptiness)."""

    word: Word
    explanation: Optional[WitnessKind] = None


# ---------------------------------------------------------------------------
# reachability helpers


def _reachable(g: Generator) -> set[int]:
    seen = {g.initial}
    stack = [g.initial]
    adj = g.adjacency()
    while stack:
        q = stack.pop()
        for _, t in adj[q]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def _coreachable(g: Generator) -> set[int]:
    rev: list[list[int]] = [[] for _ in range(g.n_states)]
    for (q, _), t in g.delta.items():
        rev[t].append(q)
    seen = set(g.marked)
    stack = list(g.marked)
    while stack:
        q = stack.pop()
        for p in rev[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _restrict(g: Generator, keep: set[int], name: Optional[str] = None) -> Generator:
    """Sub-generator induced by ``keep`` (must contain the initial state)."""
    order = sorted(keep)
    remap = {old: new for new, old in enumerate(order)}
    delta = {
        (remap[q], e): remap[t]
        for (q, e), t in g.delta.items()
        if q in keep and t in keep
    }
    return Generator(
        alphabet=g.alphabet,
        state_names=tuple(g.state_names[q] for q in order),
        delta=delta,
        initial=remap[g.initial],
        marked=frozenset(remap[q] for q in g.marked if q in keep),
        name=g.name if name is None else name,
    )


# ---------------------------------------------------------------------------
# core operations


def trim(g: Generator) -> Generator:
    """Restrict to states that are reachable and co-reachable.

    The result is nonblocking and marks the same language.  If the marked
    language is empty, the result is a single unmarked initial state with
    no transitions.
    """
    keep = _reachable(g) & _coreachable(g)
    if g.initial not in keep:
        return Generator(
            alphabet=g.alphabet,
            state_names=(g.state_names[g.initial],),
            delta={},
            initial=0,
            marked=frozenset(),
            name=g.name,
        )
    return _restrict(g, keep)


def _fresh_name(taken: Iterable[str], base: str) -> str:
    used = set(taken)
    cand = base
    i = 1
    while cand in used:
        i += 1
        cand = f"{base}{i}"
    return cand


def complete(g: Generator, over: Optional[Alphabet] = None) -> Generator:
    """Make the transition function total over ``over`` (default: own alphabet).

    Adds at most one unmarked sink state; an already-complete generator is
    returned unchanged.
    """
    over = g.alphabet if over is None else Alphabet.of(over)
    if not g.alphabet.issubset(over):
        raise ValueError("completion alphabet must contain the generator's alphabet")
    missing = [
        (q, e) for q in range(g.n_states) for e in over if (q, e) not in g.delta
    ]
    if not missing:
        return g if over == g.alphabet else g.with_alphabet(over)
    sink = g.n_states
    delta = dict(g.delta)
    for q, e in missing:
        delta[(q, e)] = sink
    for e in over:
        delta[(sink, e)] = sink
    return Generator(
        alphabet=over,
        state_names=g.state_names + (_fresh_name(g.state_names, "sink"),),
        delta=delta,
        initial=g.initial,
        marked=g.marked,
        name=g.name,
    )


def complement(g: Generator) -> Generator:
    """Swap marked and unmarked states; requires a total transition function."""
    if not g.is_total():
        raise ValueError("complement requires a complete transition function; apply complete() first")
    return g.with_marked(set(range(g.n_states)) - set(g.marked))


def parallel(g1: Generator, g2: Generator) -> Generator:
    """Synchronous composition: shared events move both sides, private events
    interleave.  Returns the accessible part with canonical ``(p,q)`` state names."""
    a1, a2 = g1.alphabet, g2.alphabet
    adj1, adj2 = g1.adjacency(), g2.adjacency()
    d1, d2 = g1.delta, g2.delta
    start = (g1.initial, g2.initial)
    index: dict[tuple[int, int], int] = {start: 0}
    order = [start]
    delta: dict[tuple[int, Event], int] = {}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        src = index[(x, y)]
        candidates = {e for e, _ in adj1[x]} | {e for e, _ in adj2[y]}
        for e in sorted(candidates, key=lambda ev: ev.key):
            in1, in2 = e in a1, e in a2
            if in1 and in2:
                tx, ty = d1.get((x, e)), d2.get((y, e))
                if tx is None or ty is None:
                    continue
                nxt = (tx, ty)
            elif in1:
                tx = d1.get((x, e))
                if tx is None:
                    continue
                nxt = (tx, y)
            else:
                ty = d2.get((y, e))
                if ty is None:
                    continue
                nxt = (x, ty)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            delta[(src, e)] = index[nxt]
    marked = frozenset(
        i for i, (x, y) in enumerate(order) if x in g1.marked and y in g2.marked
    )
    names = tuple(
        f"({g1.state_names[x]},{g2.state_names[y]})" for x, y in order
    )
    return Generator(
        alphabet=a1 | a2,
        state_names=names,
        delta=delta,
        initial=0,
        marked=marked,
        name=f"({g1.name}||{g2.name})",
    )


def compose_all(gens: Iterable[Generator]) -> Generator:
    """Left fold of the synchronous composition over two or more generators."""
    gens = list(gens)
    if not gens:
        raise ValueError("compose_all needs at least one generator")
    return reduce(parallel, gens)


def lift_selfloops(g: Generator, extra: Alphabet) -> Generator:
    """Add a self-loop on every state for each event of ``extra``.

    Realizes the inverse projection of the marked and generated languages
    with respect to erasing ``extra``.
    """
    extra = Alphabet.of(extra)
    if not g.alphabet.isdisjoint(extra):
        overlap = g.alphabet & extra
        raise ValueError(f"self-loop events already in the alphabet: {overlap.render()}")
    if not extra:
        return g
    delta = dict(g.delta)
    for q in range(g.n_states):
        for e in extra:
            delta[(q, e)] = q
    return Generator(
        alphabet=g.alphabet | extra,
        state_names=g.state_names,
        delta=delta,
        initial=g.initial,
        marked=g.marked,
        name=g.name,
    )


def rename_tilde(g: Generator, keep: Alphabet) -> Generator:
    """Relabel every event outside ``keep`` with its tilde-tagged copy.

    The result is isomorphic to ``g``; transitions on kept events are
    unchanged.
    """
    keep = Alphabet.of(keep)
    if g.alphabet.has_tilde():
        raise ValueError("rename_tilde expects an untagged input alphabet")
    if not keep.issubset(g.alphabet):
        raise ValueError("keep must be a subset of the alphabet")
    fmap = {e: (e if e in keep else e.tag()) for e in g.alphabet}
    delta = {(q, fmap[e]): t for (q, e), t in g.delta.items()}
    return Generator(
        alphabet=Alphabet(fmap.values()),
        state_names=g.state_names,
        delta=delta,
        initial=g.initial,
        marked=g.marked,
        name=g.name,
    )


def minimize(g: Generator) -> Generator:
    """Minimal partial automaton preserving both the generated and the marked
    language.

    Works on the completed automaton: partition refinement with the sink
    kept apart from genuine dead states, then the sink class is deleted
    again and only reachable classes are kept.
    """
    c = complete(g)
    sink = c.n_states - 1 if c.n_states > g.n_states else None
    n = c.n_states
    events = c.alphabet.events
    # initial partition: (marked?, is-sink?)
    key0 = [(q in c.marked, q == sink) for q in range(n)]
    cls = _partition_ids([key0[q] for q in range(n)])
    while True:
        sig = [
            (cls[q], tuple(cls[c.delta[(q, e)]] for e in events))
            for q in range(n)
        ]
        new = _partition_ids(sig)
        if new == cls:
            break
        cls = new
    sink_cls = cls[sink] if sink is not None else None
    # quotient over the surviving classes, accessible part only
    reps: dict[int, int] = {}
    for q in range(n):
        if cls[q] != sink_cls and cls[q] not in reps:
            reps[cls[q]] = q
    members: dict[int, list[int]] = {}
    for q in range(n):
        if cls[q] != sink_cls:
            members.setdefault(cls[q], []).append(q)
    start_cls = cls[c.initial]
    index: dict[int, int] = {start_cls: 0}
    order = [start_cls]
    queue = deque([start_cls])
    delta: dict[tuple[int, Event], int] = {}
    while queue:
        cc = queue.popleft()
        rep = reps[cc]
        for e in events:
            t = cls[c.delta[(rep, e)]]
            if t == sink_cls:
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            delta[(index[cc], e)] = index[t]
    names = tuple(min(c.state_names[q] for q in members[cc]) for cc in order)
    marked = frozenset(
        i for i, cc in enumerate(order) if reps[cc] in c.marked
    )
    return Generator(
        alphabet=g.alphabet,
        state_names=names,
        delta=delta,
        initial=0,
        marked=marked,
        name=g.name,
    )


def _partition_ids(keys: list) -> list[int]:
    """Dense class ids for equal keys; ids ordered by first occurrence."""
    ids: dict = {}
    out = []
    for k in keys:
        if k not in ids:
            ids[k] = len(ids)
        out.append(ids[k])
    return out


def project(g: Generator, target: Alphabet) -> Generator:
    """Deterministic generator for the projection onto ``target``.

    Closure under non-target events followed by the subset construction on
    reachable subsets (a subset is marked iff it contains a marked state),
    then minimized.  Preserves both the generated and the marked language
    images under the projection.
    """
    target = Alphabet.of(target)
    if not target.issubset(g.alphabet):
        extra = target - g.alphabet
        raise ValueError(f"projection target has events outside the alphabet: {extra.render()}")
    silent: dict[int, list[int]] = {q: [] for q in range(g.n_states)}
    moves: dict[int, list[tuple[Event, int]]] = {q: [] for q in range(g.n_states)}
    for (q, e), t in g.delta.items():
        if e in target:
            moves[q].append((e, t))
        else:
            silent[q].append(t)

    def closure(states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for t in silent[q]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    start = closure([g.initial])
    index: dict[frozenset[int], int] = {start: 0}
    order = [start]
    queue = deque([start])
    delta: dict[tuple[int, Event], int] = {}
    while queue:
        s = queue.popleft()
        src = index[s]
        for e in target:
            step = {g.delta[(q, e)] for q in s if (q, e) in g.delta}
            if not step:
                continue
            nxt = closure(step)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            delta[(src, e)] = index[nxt]
    marked = frozenset(i for i, s in enumerate(order) if s & g.marked)
    subset = Generator(
        alphabet=target,
        state_names=tuple(f"S{i}" for i in range(len(order))),
        delta=delta,
        initial=0,
        marked=marked,
        name=g.name,
    )
    small = minimize(subset)
    return Generator(
        alphabet=small.alphabet,
        state_names=tuple(f"p{i}" for i in range(small.n_states)),
        delta=small.delta,
        initial=small.initial,
        marked=small.marked,
        name=g.name,
    )


def closure_generator(g: Generator) -> Generator:
    """Generator marking the prefix closure of the marked language of ``g``."""
    t = trim(g)
    if not t.marked:
        return t
    return t.with_marked(range(t.n_states))


# ---------------------------------------------------------------------------
# decision operations


def _bfs_shortest(g: Generator, goal: set[int]) -> Optional[Word]:
    """Shortest word from the initial state into ``goal`` (canonical ties)."""
    if g.initial in goal:
        return ()
    adj = g.adjacency()
    parent: dict[int, tuple[int, Event]] = {}
    seen = {g.initial}
    queue = deque([g.initial])
    while queue:
        q = queue.popleft()
        for e, t in adj[q]:
            if t in seen:
                continue
            seen.add(t)
            parent[t] = (q, e)
            if t in goal:
                path = []
                cur = t
                while cur != g.initial:
                    p, ev = parent[cur]
                    path.append(ev)
                    cur = p
                return tuple(reversed(path))
            queue.append(t)
    return None


def is_empty(g: Generator) -> Optional[Witness]:
    """None iff the marked language is empty; otherwise a shortest marked word."""
    w = _bfs_shortest(g, set(g.marked))
    if w is None:
        return None
    assert g.accepts(w)
    return Witness(w)


def is_nonblocking(g: Generator) -> tuple[bool, Optional[Witness]]:
    """True iff every reachable state is co-reachable.

    On failure, returns a shortest word reaching a state from which no
    marked state can be reached.  The canonical empty generator (nothing
    marked, nothing to run) counts as nonblocking, so trimming always
    yields a nonblocking generator; an empty marked language with any
    reachable transition is blocking, witnessed by a shortest nonempty
    generated word.
    """
    reach = _reachable(g)
    if not g.marked:
        if not any(q in reach for (q, _) in g.delta):
            return True, None
        # any nonempty generated word is evidence; pick the canonical one
        first = min((e for (q, e) in g.delta if q == g.initial), key=lambda e: e.key)
        return False, Witness((first,), WitnessKind.BLOCKING_STRING)
    co = _coreachable(g)
    dead = reach - co
    if not dead:
        return True, None
    w = _bfs_shortest(g, dead)
    assert w is not None
    q = g.run(w)
    assert q is not None and q not in co
    return False, Witness(w, WitnessKind.BLOCKING_STRING)


def language_subset(g1: Generator, g2: Generator) -> Optional[Witness]:
    """None iff the marked language of ``g1`` is included in that of ``g2``.

    Otherwise a shortest word marked by ``g1`` but not by ``g2``.  Both
    generators must share one alphabet; computed by intersecting ``g1``
    with the complement of the completed ``g2``.
    """
    if g1.alphabet != g2.alphabet:
        raise ValueError("language_subset requires equal alphabets")
    co = complement(complete(g2))
    hit = is_empty(parallel(g1, co))
    if hit is None:
        return None
    w = hit.word
    assert g1.accepts(w) and not g2.accepts(w)
    return Witness(w, WitnessKind.INCLUSION_VIOLATION)


def language_equal(g1: Generator, g2: Generator) -> bool:
    return language_subset(g1, g2) is None and language_subset(g2, g1) is None


def accepts_projected(g: Generator, target: Alphabet, w: Word) -> bool:
    """Membership of ``w`` in the projection of the marked language of ``g``
    onto ``target``, by on-the-fly subset simulation."""
    target = Alphabet.of(target)
    if not target.issubset(g.alphabet):
        raise ValueError("projection target has events outside the alphabet")
    silent: dict[int, list[int]] = {q: [] for q in range(g.n_states)}
    for (q, e), t in g.delta.items():
        if e not in target:
            silent[q].append(t)

    def closure(states: set[int]) -> set[int]:
        stack = list(states)
        while stack:
            q = stack.pop()
            for t in silent[q]:
                if t not in states:
                    states.add(t)
                    stack.append(t)
        return states

    current = closure({g.initial})
    for e in w:
        if e not in target:
            return False
        current = closure({g.delta[(q, e)] for q in current if (q, e) in g.delta})
        if not current:
            return False
    return bool(current & g.marked)
