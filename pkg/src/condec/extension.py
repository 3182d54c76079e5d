"""Growing the coordinator alphabet until the language decomposes.

The exploration walks the product of the trimmed renamed-copy composition
with the original generator.  Whenever the composition can take a plain
uncoordinated event that the original generator cannot, that event joins
the coordinator alphabet and the whole exploration restarts (the renaming
changes with the coordinator alphabet, so nothing can be repaired
incrementally).  Two further rules cover violations the plain rule cannot
fix: if the blocked event is already coordinated, or if the composition
marks a word whose erasure the generator does not mark, then the first
divergence-causing event on the offending path (its first tagged event,
or failing that its first uncoordinated plain event) joins the
coordinator alphabet instead; a fully coordinated path keeps the copies
and the generator in lockstep, so such an event always exists.  When a
full exploration finishes without additions, the decomposability
inclusion holds outright.

The result depends on the exploration order; both the breadth-first
order and the within-state event order (tagged events first, each group
in canonical order) are fixed, so the outcome is a pure function of the
input.  The extension is sound but not always minimum-cardinality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .events import Alphabet, AlphabetFamily, Event
from .generator import Generator, Word
from .cdcheck import build_tilde, is_cd
from .ops import minimize, trim


@dataclass(frozen=True)
class ExtensionTrace:
    """Events added to the coordinator alphabet, in order of addition."""

    added: tuple[Event, ...]
    restarts: int
    final_ek: Alphabet
    verified: bool


def _blocked_event(t: Generator, g: Generator, ek: Alphabet) -> Optional[Event]:
    """First event whose addition the exploration of ``t || g`` demands.

    ``t`` is the trimmed renamed-copy composition, ``g`` the normalized
    generator.  Returns None when the exploration completes cleanly, which
    certifies decomposability for the current coordinator alphabet.
    """
    adj: list[list[tuple[Event, int]]] = [[] for _ in range(t.n_states)]
    for (q, e), dst in t.delta.items():
        adj[q].append((e, dst))
    for row in adj:
        # tagged events are examined before plain ones
        row.sort(key=lambda et: (not et[0].tilde, et[0].key))

    start = (t.initial, g.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], Event]] = {}
    seen = {start}
    queue = deque([start])

    def path_to(pair: tuple[int, int]) -> Word:
        out: list[Event] = []
        cur = pair
        while cur != start:
            prev, ev = parent[cur]
            out.append(ev)
            cur = prev
        return tuple(reversed(out))

    def divergence_event(w: Word) -> Event:
        # an uncoordinated event on the path let the copies run away from
        # the generator; coordinating the first one removes the divergence
        for e in w:
            if e.tilde:
                return Event(e.base)
        for e in w:
            if not e.tilde and e not in ek:
                return e
        raise AssertionError("violating path is fully coordinated")

    while queue:
        pair = queue.popleft()
        tq, q = pair
        if tq in t.marked and q not in g.marked:
            return divergence_event(path_to(pair))
        for e, tt in adj[tq]:
            if e.tilde:
                nxt = (tt, q)
            else:
                gq = g.delta.get((q, e))
                if gq is None:
                    if e not in ek:
                        return e
                    # the blocked event is already coordinated: coordinate
                    # whatever made the copies diverge instead
                    return divergence_event(path_to(pair) + (e,))
                nxt = (tt, gq)
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = (pair, e)
                queue.append(nxt)
    return None


def _extend_pair(
    g0: Generator, e1: Alphabet, e2: Alphabet, ek: Alphabet
) -> tuple[Alphabet, list[Event], int]:
    cur = ek
    added: list[Event] = []
    restarts = 0
    while True:
        ts = build_tilde(g0, e1, e2, cur)
        t = trim(ts.g_tilde)
        ev = _blocked_event(t, g0, cur)
        if ev is None:
            return cur, added, restarts
        assert not ev.tilde and ev in g0.alphabet and ev not in cur
        cur = cur | Alphabet([ev])
        added.append(ev)
        restarts += 1


def extend2(g: Generator, e1, e2, ek) -> ExtensionTrace:
    """Extend the coordinator alphabet for two local alphabets.

    Returns the ordered additions, the restart count, and the final
    coordinator alphabet, which is verified to make the language
    decomposable before returning.
    """
    e1, e2, ek = Alphabet.of(e1), Alphabet.of(e2), Alphabet.of(ek)
    AlphabetFamily([e1, e2], ek)
    if g.alphabet != e1 | e2:
        raise ValueError("generator alphabet must equal the union of the two local alphabets")
    g0 = minimize(trim(g))
    final, added, restarts = _extend_pair(g0, e1, e2, ek)
    verdict = is_cd(g0, AlphabetFamily([e1, e2], final))
    assert verdict.decomposable, "extension finished on a non-decomposable alphabet"
    return ExtensionTrace(tuple(added), restarts, final, True)


def extend_n(g: Generator, family: AlphabetFamily) -> ExtensionTrace:
    """Extend the coordinator alphabet for any number of local alphabets.

    Sweeps the components in ascending order, extending pairwise against
    the union of the others, and repeats until a full sweep adds nothing.
    """
    family.validate()
    if g.alphabet != family.union():
        raise ValueError("generator alphabet must equal the union of the local alphabets")
    g0 = minimize(trim(g))
    cur = family.coordinator
    added: list[Event] = []
    restarts = 0
    changed = True
    while changed:
        changed = False
        for i, local in enumerate(family.locals):
            cur, add_i, r_i = _extend_pair(g0, local, family.rest(i), cur)
            added.extend(add_i)
            restarts += r_i
            if add_i:
                changed = True
    verdict = is_cd(g0, AlphabetFamily(family.locals, cur))
    assert verdict.decomposable, "extension finished on a non-decomposable alphabet"
    return ExtensionTrace(tuple(added), restarts, cur, True)
