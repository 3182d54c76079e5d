"""Polynomial-time conditional decomposability check.

A language marked by ``g`` over two local alphabets plus a coordinator
alphabet is decomposable iff the composition of two renamed copies of
``g`` (each copy hides the other side's private events behind fresh
tilde-tagged symbols) marks only words whose tilde-erasure is again
marked by ``g``.  That inclusion is decided as an emptiness check on an
on-the-fly product with the complement, with early exit on the first
marked pair.  The check for n local alphabets runs the two-alphabet
check once per component against the union of the others.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .events import Alphabet, AlphabetFamily, Event
from .generator import Generator, Word, erase, strip_tilde
from .ops import accepts_projected, minimize, parallel, rename_tilde, trim


@dataclass(frozen=True)
class TildeSystem:
    """Composition of the two renamed copies, plus its erasure data."""

    g_tilde: Generator
    tilde_events: Alphabet
    base_alphabet: Alphabet

    def erase(self, w: Word) -> Word:
        return strip_tilde(w)


@dataclass(frozen=True)
class CdVerdict:
    """Outcome of a decomposability check.

    On failure, ``witness`` is a word in the composition of the projected
    languages that the original language does not contain.  For the n-ary
    check, ``failing_index`` is the 1-based index of the first local
    alphabet whose run failed.
    """

    decomposable: bool
    witness: Optional[Word]
    failing_index: Optional[int] = None


def _check_pair(e1: Alphabet, e2: Alphabet, ek: Alphabet) -> AlphabetFamily:
    return AlphabetFamily([e1, e2], ek)


def build_tilde(g: Generator, e1, e2, ek) -> TildeSystem:
    """Compose the two renamed copies of ``g``.

    One copy keeps ``e1 | ek`` and tags the rest; the other keeps
    ``e2 | ek``.  The tilde-erasure of the result's marked language equals
    the composition of the two projected marked languages.
    """
    e1, e2, ek = Alphabet.of(e1), Alphabet.of(e2), Alphabet.of(ek)
    _check_pair(e1, e2, ek)
    if g.alphabet != e1 | e2:
        raise ValueError("generator alphabet must equal the union of the two local alphabets")
    f1 = rename_tilde(g, keep=e1 | ek)
    f2 = rename_tilde(g, keep=e2 | ek)
    g_tilde = parallel(f1, f2)
    tilde_events = Alphabet(e for e in g_tilde.alphabet if e.tilde)
    return TildeSystem(g_tilde=g_tilde, tilde_events=tilde_events, base_alphabet=g.alphabet)


def _inclusion_witness(g_tilde: Generator, g: Generator) -> Optional[Word]:
    """Shortest word marked by ``g_tilde`` whose erasure ``g`` does not mark.

    BFS over the product of ``g_tilde`` with the (implicit) complement of
    the completed, self-looped copy of ``g``; stops at the first marked
    pair.  Returns the un-erased product word, or None if the inclusion
    holds.
    """
    events = g_tilde.alphabet.events
    eid = {e: i for i, e in enumerate(events)}
    n = g.n_states
    sink = n
    # complement side: tilde events self-loop, missing plain moves go to the
    # sink, and marking is inverted (sink included).
    comp_next: list[list[int]] = []
    for q in range(n + 1):
        row = []
        for e in events:
            if e.tilde or q == sink:
                row.append(q)
            else:
                row.append(g.delta.get((q, e), sink))
        comp_next.append(row)
    comp_marked = [q == sink or q not in g.marked for q in range(n + 1)]

    adj: list[list[tuple[int, int]]] = [[] for _ in range(g_tilde.n_states)]
    for (q, e), t in g_tilde.delta.items():
        adj[q].append((eid[e], t))
    for row in adj:
        row.sort()
    t_marked = bytearray(g_tilde.n_states)
    for q in g_tilde.marked:
        t_marked[q] = 1

    width = n + 1
    total = g_tilde.n_states * width
    visited = bytearray(total)
    parent = array("i", [-1]) * total
    pevent = array("i", [-1]) * total

    start = g_tilde.initial * width + g.initial
    if t_marked[g_tilde.initial] and comp_marked[g.initial]:
        return ()

    def rebuild(pid: int) -> Word:
        path: list[Event] = []
        cur = pid
        while cur != start:
            path.append(events[pevent[cur]])
            cur = parent[cur]
        return tuple(reversed(path))

    visited[start] = 1
    queue = deque([start])
    while queue:
        pid = queue.popleft()
        tq, cq = divmod(pid, width)
        row = comp_next[cq]
        for ei, tt in adj[tq]:
            cc = row[ei]
            np = tt * width + cc
            if visited[np]:
                continue
            visited[np] = 1
            parent[np] = pid
            pevent[np] = ei
            if t_marked[tt] and comp_marked[cc]:
                return rebuild(np)
            queue.append(np)
    return None


def is_cd2(g: Generator, e1, e2, ek, *, normalize: bool = True) -> CdVerdict:
    """Decomposability with respect to two local alphabets and a coordinator.

    ``g`` is trimmed and minimized first unless ``normalize`` is False.
    A failed check carries a verified witness: a word every projection of
    which lies in the corresponding projected language, yet the word
    itself is not marked by ``g``.
    """
    e1, e2, ek = Alphabet.of(e1), Alphabet.of(e2), Alphabet.of(ek)
    _check_pair(e1, e2, ek)
    if g.alphabet != e1 | e2:
        raise ValueError("generator alphabet must equal the union of the two local alphabets")
    g0 = minimize(trim(g)) if normalize else g
    ts = build_tilde(g0, e1, e2, ek)
    raw = _inclusion_witness(ts.g_tilde, g0)
    if raw is None:
        return CdVerdict(True, None, None)
    w = strip_tilde(raw)
    _verify_cd_witness(g, (e1, e2), ek, w)
    return CdVerdict(False, w, None)


def _verify_cd_witness(g: Generator, locals_, ek: Alphabet, w: Word) -> None:
    assert not g.accepts(w), "witness unexpectedly marked by the generator"
    for local in locals_:
        aug = local | ek
        assert accepts_projected(g, aug, erase(w, aug)), (
            "witness projection escapes the projected language"
        )


def is_cd(g: Generator, family: AlphabetFamily) -> CdVerdict:
    """Decomposability for any number of local alphabets.

    Runs the two-alphabet check once per component ``i`` with the union of
    the remaining locals as the second side; reports the first failing
    component (ascending, 1-based) with its witness.
    """
    family.validate()
    if g.alphabet != family.union():
        raise ValueError("generator alphabet must equal the union of the local alphabets")
    g0 = minimize(trim(g))
    for i, local in enumerate(family.locals):
        v = is_cd2(g0, local, family.rest(i), family.coordinator, normalize=False)
        if not v.decomposable:
            _verify_cd_witness(g, family.locals, family.coordinator, v.witness)
            return CdVerdict(False, v.witness, i + 1)
    return CdVerdict(True, None, None)
