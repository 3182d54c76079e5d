import pytest

from condec import (
    Alphabet,
    AlphabetFamily,
    CoordinatedSystem,
    PremiseError,
    cd_by_definition,
    closure_generator,
    coordinated_nonblocking,
    corollary_coordinator,
    intersection_coordinator,
    is_cd,
    language_equal,
    make_generator,
    nonconflicting,
    observer_check,
    prefix_tree,
    project,
    trim,
    word,
)
from condec.sampling import random_coordinated_system, random_trim_generator

from conftest import is_observer_violation


def _loop_coordinator(events, name="Gk"):
    alpha = Alphabet.of(events)
    return make_generator(
        alpha, ["k0"], "k0", ["k0"], [("k0", e.render(), "k0") for e in alpha], name
    )


def test_identical_alphabets_collapse_to_direct_check():
    g1 = prefix_tree(["a b"], "a b").with_name("G1")
    g2 = prefix_tree(["a b", "a"], "a b").with_name("G2")
    sys = CoordinatedSystem([g1, g2], _loop_coordinator("a b"))
    rep = coordinated_nonblocking(sys, compute_direct=True)
    assert rep.overall == rep.direct
    # all alphabets equal: condition 1 is the full product per component
    assert rep.condition1 == (True, True)
    assert rep.overall


def test_blocking_pair_detected():
    # after the shared event a the two components insist on different
    # shared continuations and deadlock unmarked
    g1 = make_generator("a b c", ["x0", "x1", "x2"], "x0", ["x2"],
                        [("x0", "a", "x1"), ("x1", "b", "x2")])
    g2 = make_generator("a b c", ["y0", "y1", "y2"], "y0", ["y2"],
                        [("y0", "a", "y1"), ("y1", "c", "y2")])
    sys = CoordinatedSystem([g1, g2], _loop_coordinator("a b c"))
    rep = coordinated_nonblocking(sys, compute_direct=True)
    assert not rep.overall and rep.direct is False
    assert not all(rep.condition1)
    assert rep.direct_witness.word == word("a")
    # everything is shared, so the closure always decomposes: only
    # condition 1 can fail here, showing decomposability is the weaker half
    assert rep.condition2.decomposable


def test_random_systems_match_direct(rng):
    for _ in range(40):
        sys = random_coordinated_system(rng)
        rep = coordinated_nonblocking(sys, compute_direct=True)
        assert rep.overall == rep.direct


def test_non_decomposable_closure_system():
    # hand-built system whose closure fails the decomposability condition:
    # after the joint prefix the components insist on different shared
    # events, so the recombined word has no live continuation
    g1 = prefix_tree(["a b d", "a a d"], "a b d").with_name("G1")
    g2 = prefix_tree(["c a d", "c a c a d"], "a c d").with_name("G2")
    gk = _loop_coordinator("a d")
    sys = CoordinatedSystem([g1, g2], gk)
    rep = coordinated_nonblocking(sys, compute_direct=True)
    assert not rep.condition2.decomposable
    assert rep.direct is False and not rep.overall
    # the oracle confirms the closure verdict independently
    full = sys.full_composition()
    assert not cd_by_definition(closure_generator(full), sys.family()).decomposable


def test_corollary_intersection_identical_components():
    g = trim(prefix_tree(["a b", "a"], "a b"))
    rep = corollary_coordinator([g.with_name("G1"), g.with_name("G2")], "a b", "intersection",
                                compute_direct=True)
    assert rep.overall == rep.direct
    gk = intersection_coordinator([g, g], Alphabet.of("a b"))
    assert language_equal(gk, project(g, Alphabet.of("a b")))


def test_corollary_random_equivalence(rng):
    for _ in range(25):
        sys = random_coordinated_system(rng)
        rep = corollary_coordinator(
            sys.components, sys.coordinator.alphabet, "intersection", compute_direct=True
        )
        full = coordinated_nonblocking(
            CoordinatedSystem(
                sys.components,
                intersection_coordinator(sys.components, sys.coordinator.alphabet),
            ),
            compute_direct=True,
        )
        assert rep.overall == rep.direct == full.overall


def test_corollary_subset_premise_verified():
    g1 = trim(prefix_tree(["a b"], "a b")).with_name("G1")
    g2 = trim(prefix_tree(["a"], "a")).with_name("G2")
    ek = Alphabet.of("a")
    good = trim(prefix_tree(["a"], "a")).with_name("Gk")
    rep = corollary_coordinator([g1, g2], ek, "subset-supplied", coordinator=good,
                                compute_direct=True)
    assert rep.overall == rep.direct
    # a coordinator marking a word outside the intersection is rejected
    bad = trim(prefix_tree(["a", "a a"], "a")).with_name("Gk")
    with pytest.raises(PremiseError) as err:
        corollary_coordinator([g1, g2], ek, "subset-supplied", coordinator=bad)
    assert err.value.witness == word("a a")


def test_corollary_rejects_blocking_component():
    blocking = make_generator("a", ["q0", "q1"], "q0", [], [("q0", "a", "q1")])
    healthy = trim(prefix_tree(["a"], "a"))
    with pytest.raises(PremiseError):
        corollary_coordinator([blocking, healthy], "a", "intersection")


# ---------------------------------------------------------------------------
# observer property


def test_observer_identity_projection_always_holds():
    g = prefix_tree(["b a", "c b"], "a b c")
    ok, ce = observer_check(g, g.alphabet)
    assert ok and ce is None


def test_observer_fails_for_first_projected_reference_language():
    g = prefix_tree(["b a", "c b"], "a b c")
    ok, ce = observer_check(g, "a b")
    assert not ok
    assert is_observer_violation(g, "a b", ce[0], ce[1])
    # the classical counterexample pair is a genuine violation as well
    assert is_observer_violation(g, "a b", word("c b"), word("b a"))


def test_observer_fails_for_second_projected_reference_language():
    g = prefix_tree(["b a", "d b"], "a b d")
    ok, ce = observer_check(g, "a b")
    assert not ok
    assert is_observer_violation(g, "a b", ce[0], ce[1])
    assert is_observer_violation(g, "a b", word("d b"), word("b a"))


def test_observer_holds_for_plain_prefix_language():
    g = prefix_tree(["a b", "a"], "a b c")
    ok, ce = observer_check(g, "a b")
    assert ok


def test_observer_empty_language_is_vacuous():
    g = make_generator("a b", ["q0"], "q0", [], [])
    ok, _ = observer_check(g, "a")
    assert ok


def test_observer_implies_closure_decomposability(rng):
    # whenever all coordinator projections are observers for the projected
    # system languages, the closure decomposes
    hits = 0
    tries = 0
    while hits < 8 and tries < 200:
        tries += 1
        sys = random_coordinated_system(rng)
        full = sys.full_composition()
        ek = sys.coordinator.alphabet
        all_observers = all(
            observer_check(project(full, gi.alphabet | ek), ek)[0]
            for gi in sys.components
        )
        if not all_observers:
            continue
        hits += 1
        rep = coordinated_nonblocking(sys)
        assert rep.condition2.decomposable
    assert hits >= 8


def test_reference_language_is_decomposable_but_not_observer():
    # decomposability holds while the observer property fails, so the
    # observer route is sufficient but not necessary
    g = prefix_tree(["b a", "c d b", "d c b"], "a b c d")
    assert is_cd(g, AlphabetFamily(["a b c", "a b d"], "a b")).decomposable
    for target in ("a b c", "a b d"):
        ok, _ = observer_check(project(g, Alphabet.of(target)), "a b")
        assert not ok


# ---------------------------------------------------------------------------
# nonconflictness


def test_nonconflicting_identical_trim_generators():
    g = trim(prefix_tree(["a b"], "a b"))
    ok, wit = nonconflicting(g, g)
    assert ok and wit is None


def test_conflicting_languages_share_a_doomed_prefix():
    g1 = prefix_tree(["a b"], "a b c")
    g2 = prefix_tree(["a c"], "a b c")
    ok, wit = nonconflicting(g1, g2)
    assert not ok
    assert wit.word == word("a")


def test_disjoint_alphabets_never_conflict(rng):
    for _ in range(10):
        g1 = random_trim_generator(rng, 3, "a b")
        g2 = random_trim_generator(rng, 3, "c d")
        ok, _ = nonconflicting(g1, g2)
        assert ok
