import pytest

from helpers import m, system
from oracles import NaiveSystem, to_mask
from topodyn import fixtures
from topodyn.deciders import (
    LATTICE,
    LatticeViolation,
    PropertyProfile,
    classify,
    has_closed_invariant_subset,
    hypercyclic_points,
    is_hypercyclic,
    is_hypermixing,
    is_hypertransitive,
    is_mixing,
    is_strongly_topologically_transitive,
    is_strongly_transitive_finite,
    is_supermixing,
    is_topologically_transitive,
    jmix,
    jmix_of_set,
    lattice_errors,
)
from topodyn.dynamics import DynSystem, SelfMap
from topodyn.topology import discrete, indiscrete
from topodyn.zoo import enumerate_systems

A1, A2, A3, A4 = (fixtures.example_a1(), fixtures.example_a2(),
                  fixtures.example_a3(), fixtures.example_a4())
C1 = fixtures.hypertransitive_not_mixing()
C2 = fixtures.supermixing_not_hypertransitive()
ID_INDISCRETE = DynSystem(indiscrete(3), SelfMap.identity(3))

UNIVERSE_3 = [s for n in (1, 2, 3) for s in enumerate_systems(n)]


def test_hypercyclic_points_examples():
    assert hypercyclic_points(C1) == m("abc")
    assert hypercyclic_points(ID_INDISCRETE) == m("abc")
    # frozen from the brute-force oracle
    assert hypercyclic_points(C2) == m("a")
    assert hypercyclic_points(C2) == to_mask(NaiveSystem(C2).hypercyclic_points())


def test_hypercyclic_and_hypertransitive():
    assert is_hypertransitive(C1)
    assert not is_hypertransitive(C2)
    assert not is_hypercyclic(DynSystem(discrete(2), SelfMap.identity(2)))


def test_transitivity_examples():
    assert is_topologically_transitive(A2)
    assert is_topologically_transitive(ID_INDISCRETE)
    s = system(3, ("ab",), "abc")
    # every pair of nonempty opens already meets at n = 0
    assert is_topologically_transitive(s) == NaiveSystem(s).top_transitive() is True
    s = system(3, ("a", "bc"), "abc")
    assert not is_topologically_transitive(s)


def test_strong_transitivity_examples():
    assert is_strongly_topologically_transitive(A1)
    assert not is_strongly_topologically_transitive(A2)
    assert is_strongly_topologically_transitive(ID_INDISCRETE)


def test_finite_union_bounds():
    assert is_strongly_transitive_finite(A1) == (True, 1)
    assert is_strongly_transitive_finite(A2) == (False, None)
    assert is_strongly_transitive_finite(ID_INDISCRETE) == (True, 0)


def test_mixing_examples():
    assert is_mixing(A2)
    assert not is_mixing(A1)
    assert is_mixing(A3)


def test_supermixing_examples():
    assert is_supermixing(A4)
    assert not is_supermixing(A3)
    assert is_supermixing(C2)


def test_hypermixing_examples():
    assert not is_hypermixing(A4)
    assert is_hypermixing(ID_INDISCRETE)


def test_jmix_examples():
    assert jmix(C1, 0) == 0
    for x in range(3):
        assert jmix(A4, x) == m("abc")
        assert jmix(ID_INDISCRETE, x) == m("abc")
    one = DynSystem(indiscrete(1), SelfMap.identity(1))
    assert jmix(one, 0) == 1


def test_jmix_of_set_examples():
    assert jmix_of_set(A4, 0) == 0
    assert jmix_of_set(A4, m("abc")) == m("abc")
    assert jmix_of_set(C1, hypercyclic_points(C1)) == 0
    naive = NaiveSystem(C1)
    assert all(not naive.jmix(x) for x in range(3))


def test_closed_invariant_examples():
    assert has_closed_invariant_subset(C2) == (True, m("c"))
    assert has_closed_invariant_subset(C1) == (False, None)
    s = system(3, ("ab",), "abc")
    assert has_closed_invariant_subset(s) == (True, m("c"))


def test_classify_fixtures():
    p = classify(A1)
    assert p.strongly_top_transitive and not p.mixing
    p = classify(A4)
    assert p.supermixing and not p.hypermixing
    p = classify(C2)
    assert p.supermixing and not p.hypertransitive and p.continuous


def test_classify_witnesses():
    p = classify(A1)
    assert p.witness["mixing"] == (m("ab"), m("ab"))
    assert p.witness["strongly_transitive_finite"] == 1
    assert p.witness["surjective"] == 0
    assert p.witness["has_closed_invariant_subset"] == m("c")


def test_lattice_violation_is_raised():
    bad = PropertyProfile(*([False] * 13))
    bad.hypermixing = True
    assert lattice_errors(bad)
    with pytest.raises(LatticeViolation) as err:
        raise LatticeViolation("; ".join(lattice_errors(bad)), A1)
    assert '"points"' in str(err.value)


@pytest.mark.parametrize("name", ["top_transitive", "strongly_top_transitive", "mixing",
                                  "supermixing", "hypermixing", "continuous",
                                  "has_closed_invariant_subset"])
def test_deciders_agree_with_naive_on_small_universe(name):
    for s in UNIVERSE_3:
        p = classify(s)
        naive = NaiveSystem(s)
        expected = {
            "top_transitive": naive.top_transitive,
            "strongly_top_transitive": naive.strongly_top_transitive,
            "mixing": naive.mixing,
            "supermixing": naive.supermixing,
            "hypermixing": naive.hypermixing,
            "continuous": naive.continuous,
            "has_closed_invariant_subset": naive.closed_invariant,
        }[name]()
        assert getattr(p, name) == expected, s


def test_hypercyclic_points_agree_with_naive():
    for s in UNIVERSE_3:
        assert hypercyclic_points(s) == to_mask(NaiveSystem(s).hypercyclic_points())


def test_jmix_agrees_with_naive():
    for s in UNIVERSE_3:
        naive = NaiveSystem(s)
        for x in range(s.n):
            assert jmix(s, x) == to_mask(naive.jmix(x))


def test_lattice_holds_on_small_universe():
    for s in UNIVERSE_3:
        p = classify(s)
        for a, b in LATTICE:
            assert not getattr(p, a) or getattr(p, b)


def test_classify_is_deterministic():
    assert classify(A3) == classify(A3)
    assert classify(A3).witness == classify(A3).witness
