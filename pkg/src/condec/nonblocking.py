"""Nonblockingness of coordinated modular systems.

A coordinated system is a composition of component generators with a
coordinator generator whose alphabet covers every shared event.  The
system is nonblocking iff (1) each component composed with the
coordinator and the coordinator-projections of the other components is
nonblocking, and (2) the prefix closure of the system's marked language
is conditionally decomposable with respect to the component alphabets
and the coordinator alphabet.  Two coordinator choices simplify
condition 1 to per-component checks; their premises are verified here,
never assumed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .events import Alphabet, AlphabetFamily, Event
from .generator import Generator, Word, erase
from .cdcheck import CdVerdict, is_cd
from .ops import (
    Witness,
    closure_generator,
    compose_all,
    is_nonblocking,
    language_subset,
    parallel,
    project,
    trim,
)


class PremiseError(ValueError):
    """A corollary premise failed; carries a witness word when available."""

    def __init__(self, message: str, witness: Optional[Word] = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CoordinatedSystem:
    """Component generators plus a coordinator generator."""

    components: tuple[Generator, ...]
    coordinator: Generator

    def __init__(self, components: Iterable[Generator], coordinator: Generator):
        object.__setattr__(self, "components", tuple(components))
        object.__setattr__(self, "coordinator", coordinator)
        self.validate()

    def validate(self) -> None:
        if len(self.components) < 2:
            raise ValueError("a coordinated system needs at least two components")
        family_union = Alphabet.union(g.alphabet for g in self.components)
        shared: set[Event] = set()
        comps = self.components
        for i, a in enumerate(comps):
            for b in comps[i + 1:]:
                shared.update((a.alphabet & b.alphabet).events)
        ek = self.coordinator.alphabet
        missing = Alphabet(shared) - ek
        if missing:
            raise ValueError(
                f"coordinator alphabet must contain all shared events; missing {{{missing.render()}}}"
            )
        if not ek.issubset(family_union):
            extra = ek - family_union
            raise ValueError(
                f"coordinator alphabet must stay inside the component alphabets; extra {{{extra.render()}}}"
            )

    def family(self) -> AlphabetFamily:
        return AlphabetFamily(
            [g.alphabet for g in self.components], self.coordinator.alphabet
        )

    def full_composition(self) -> Generator:
        return compose_all([*self.components, self.coordinator])


@dataclass(frozen=True)
class NonblockingReport:
    """Both conditions of the nonblocking characterization, plus the verdict.

    ``direct`` holds the ground-truth full-composition answer when it was
    computed; the characterization guarantees it equals ``overall``.
    """

    condition1: tuple[bool, ...]
    condition1_witnesses: tuple[Optional[Witness], ...]
    condition2: CdVerdict
    overall: bool
    direct: Optional[bool] = None
    direct_witness: Optional[Witness] = None


def _coordinator_view(g: Generator, ek: Alphabet) -> Generator:
    """Projection of a component onto the coordinator alphabet."""
    return project(g, g.alphabet & ek)


def coordinated_nonblocking(
    sys: CoordinatedSystem, compute_direct: bool = False
) -> NonblockingReport:
    """Evaluate the two-condition nonblocking characterization.

    Condition 1 composes each component with the coordinator and the
    coordinator-projections of the other components; condition 2 checks
    decomposability of the prefix closure of the system's marked language.
    With ``compute_direct`` the full composition is checked as well and
    the equivalence is asserted.
    """
    sys.validate()
    ek = sys.coordinator.alphabet
    cond1: list[bool] = []
    wits: list[Optional[Witness]] = []
    for i, gi in enumerate(sys.components):
        others = [
            _coordinator_view(gj, ek)
            for j, gj in enumerate(sys.components)
            if j != i
        ]
        sub = compose_all([gi, sys.coordinator, *others])
        ok, w = is_nonblocking(sub)
        cond1.append(ok)
        wits.append(w)
    full = sys.full_composition()
    cond2 = is_cd(closure_generator(full), sys.family())
    overall = all(cond1) and cond2.decomposable
    direct = None
    direct_witness = None
    if compute_direct:
        direct, direct_witness = is_nonblocking(full)
        assert direct == overall, "characterization disagrees with the direct check"
    return NonblockingReport(
        condition1=tuple(cond1),
        condition1_witnesses=tuple(wits),
        condition2=cond2,
        overall=overall,
        direct=direct,
        direct_witness=direct_witness,
    )


def intersection_coordinator(components: Iterable[Generator], ek) -> Generator:
    """Coordinator marking the intersection of the components' projections.

    Each projection is widened to the full coordinator alphabet before
    composing, so the composition is a plain language intersection; the
    result is trimmed, hence nonblocking.
    """
    ek = Alphabet.of(ek)
    comps = list(components)
    views = [_coordinator_view(g, ek).with_alphabet(ek) for g in comps]
    gk = trim(compose_all(views)).with_name("Gk")
    return gk


def corollary_coordinator(
    components: Iterable[Generator],
    ek,
    mode: str,
    coordinator: Optional[Generator] = None,
    compute_direct: bool = False,
) -> NonblockingReport:
    """Simplified nonblocking check for the two special coordinator choices.

    ``mode='intersection'`` builds the coordinator as the intersection of
    the projected components; condition 2 then concerns the closure of the
    plain component composition.  ``mode='subset-supplied'`` takes the
    given coordinator after verifying that its marked language is included
    in every projected component language (a violation raises
    PremiseError with a witness word).  Components (and a supplied
    coordinator) must be nonblocking; that premise is verified too.
    """
    comps = list(components)
    ek = Alphabet.of(ek)
    if len(comps) < 2:
        raise ValueError("at least two components are required")
    union = Alphabet.union(g.alphabet for g in comps)
    shared: set[Event] = set()
    for i, a in enumerate(comps):
        for b in comps[i + 1:]:
            shared.update((a.alphabet & b.alphabet).events)
    if not Alphabet(shared).issubset(ek):
        raise ValueError("coordinator alphabet must contain all shared events")
    if not ek.issubset(union):
        raise ValueError("coordinator alphabet must stay inside the component alphabets")
    for g in comps:
        ok, w = is_nonblocking(g)
        if not ok:
            raise PremiseError(f"component {g.name} is blocking", w.word if w else None)

    if mode == "intersection":
        gk = intersection_coordinator(comps, ek)
    elif mode == "subset-supplied":
        if coordinator is None:
            raise ValueError("subset-supplied mode needs a coordinator generator")
        if coordinator.alphabet != ek:
            raise ValueError("supplied coordinator must be over the coordinator alphabet")
        ok, w = is_nonblocking(coordinator)
        if not ok:
            raise PremiseError("supplied coordinator is blocking", w.word if w else None)
        inter = intersection_coordinator(comps, ek)
        bad = language_subset(coordinator, inter)
        if bad is not None:
            raise PremiseError(
                "coordinator marks a word outside the intersection of the projected components",
                bad.word,
            )
        gk = coordinator
    else:
        raise ValueError(f"unknown coordinator mode {mode!r}")

    cond1: list[bool] = []
    wits: list[Optional[Witness]] = []
    for gi in comps:
        ok, w = is_nonblocking(parallel(gi, gk))
        cond1.append(ok)
        wits.append(w)
    family = AlphabetFamily([g.alphabet for g in comps], ek)
    if mode == "intersection":
        closure_target = compose_all(comps)
    else:
        closure_target = compose_all([*comps, gk])
    cond2 = is_cd(closure_generator(closure_target), family)
    overall = all(cond1) and cond2.decomposable
    direct = None
    direct_witness = None
    if compute_direct:
        direct, direct_witness = is_nonblocking(compose_all([*comps, gk]))
        assert direct == overall, "corollary check disagrees with the direct check"
    return NonblockingReport(
        condition1=tuple(cond1),
        condition1_witnesses=tuple(wits),
        condition2=cond2,
        overall=overall,
        direct=direct,
        direct_witness=direct_witness,
    )


def observer_check(
    g: Generator, ek
) -> tuple[bool, Optional[tuple[Word, Word]]]:
    """Decide whether projecting onto ``ek`` is an observer for the marked
    language of ``g``.

    The projection is an observer iff every projected continuation that
    stays inside the projected language can be matched by a continuation
    inside the language itself.  Checked per reachable pair (generator
    state, projection-automaton state): the projection automaton's
    residual language must be included in the projection of the
    generator's residual language (the converse inclusion always holds).
    On failure returns ``(s, t)``: a word ``s`` in the prefix closure and
    a projected word ``t`` extending the projection of ``s`` that no
    continuation of ``s`` can match.
    """
    ek = Alphabet.of(ek)
    if not ek.issubset(g.alphabet):
        raise ValueError("observer alphabet must be a subset of the generator alphabet")
    t = trim(g)
    d = project(t, ek)
    adj = t.adjacency()

    start = (t.initial, d.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], Event]] = {}
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        tq, dq = pair
        for e, tt in adj[tq]:
            if e in ek:
                dd = d.delta.get((dq, e))
                assert dd is not None, "projection automaton lost a live continuation"
                nxt = (tt, dd)
            else:
                nxt = (tt, dq)
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = (pair, e)
                order.append(nxt)
                queue.append(nxt)

    def path_to(pair: tuple[int, int]) -> Word:
        out: list[Event] = []
        cur = pair
        while cur != start:
            prev, ev = parent[cur]
            out.append(ev)
            cur = prev
        return tuple(reversed(out))

    residual_cache: dict[int, Generator] = {}
    for pair in order:
        tq, dq = pair
        if tq not in residual_cache:
            residual_cache[tq] = project(t.reroot(tq), ek)
        matched = residual_cache[tq]
        gap = language_subset(d.reroot(dq), matched)
        if gap is not None:
            s = path_to(pair)
            t_word = erase(s, ek) + gap.word
            return False, (s, t_word)
    return True, None


def nonconflicting(
    g1: Generator, g2: Generator
) -> tuple[bool, Optional[Witness]]:
    """Whether the prefix closures of the two marked languages compose to the
    closure of their composition.

    Equivalent to nonblockingness of the composition of the trimmed
    generators; the witness is a shortest conflicting word.
    """
    ok, w = is_nonblocking(parallel(trim(g1), trim(g2)))
    return ok, w
