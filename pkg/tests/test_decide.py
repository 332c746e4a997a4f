from fractions import Fraction

import pytest

from semizn.algebra import ModulePresentation
from semizn.decide import (Budget, HypothesisError, decide_group, decide_identity,
                           decide_inverse, decide_subset, locr_refute, oracle_bfs,
                           procedure_a, sample_points, verify_witness)
from semizn.ggraph import graph_of_word
from semizn.group import GeneratorSet, GroupElement, evaluate_word
from semizn.laurent import LaurentPoly

from conftest import free_presentation, inverse_pair


def one_way():
    pres = free_presentation(1)
    return GeneratorSet(pres, [GroupElement(pres, [LaurentPoly.zero(1)], (1,))])


def test_decide_group_inverse_pair():
    v = decide_group(inverse_pair(), Budget())
    assert v.kind == "yes"
    assert v.witness["word"] == [1, 2]
    assert verify_witness(v.witness["word"], inverse_pair())


def test_decide_group_one_way_no():
    v = decide_group(one_way(), Budget())
    assert v.kind == "no"
    assert v.certificate["sample"] == ["1"]


def test_decide_group_hypothesis_violation():
    pres = free_presentation(1)
    gens = GeneratorSet(pres, [GroupElement(pres, [LaurentPoly.one(1)], (2,))])
    with pytest.raises(HypothesisError) as e:
        decide_group(gens, Budget())
    assert e.value.sublattice_basis == [[2]]


def test_exhausted_budget_unknown():
    v = decide_group(one_way(), Budget(degree=0, height=1, samples=0))
    assert v.kind == "unknown"
    assert v.budget_report["samples"] == 0


def test_procedure_a_alone():
    v = procedure_a(inverse_pair(), Budget())
    assert v.kind == "yes"
    # single non-invertible generator with zero step: empty relation module
    pres = free_presentation(1)
    gens = GeneratorSet(pres, [GroupElement(pres, [LaurentPoly.one(1)], (0,))])
    assert procedure_a(gens, Budget()).kind == "unknown"
    assert locr_refute(gens, Budget()).kind == "no"


def test_locr_refute_alone():
    assert locr_refute(one_way(), Budget()).kind == "no"
    assert locr_refute(inverse_pair(), Budget()).kind == "unknown"  # indeed a group


def test_sample_schedule_deterministic():
    a = list(sample_points(2, 10, seed=0))
    b = list(sample_points(2, 10, seed=0))
    assert a == b
    assert a[0] == (Fraction(1), Fraction(1))
    assert len(set(a)) == 10
    assert all(x > 0 for pt in a for x in pt)
    assert list(sample_points(0, 5, seed=0)) == [()]


def test_verify_witness_examples():
    gens = inverse_pair()
    assert verify_witness([1, 2], gens)
    assert not verify_witness([1], gens)
    assert not verify_witness([], gens)
    assert not verify_witness([1, 1, 2], gens)  # not neutral
    # graph witness: figure trace with zero module parts
    pres = free_presentation(2)
    els = [GroupElement(pres, [LaurentPoly.zero(2)], a) for a in [(-2, 3), (2, 0), (0, -2)]]
    g3 = GeneratorSet(pres, els)
    graph = graph_of_word(g3, [1, 2, 2, 3, 3, 1, 3])
    assert verify_witness(graph, g3)


def test_oracle_bfs_examples():
    assert oracle_bfs(inverse_pair(), 2) == [1, 2]
    assert oracle_bfs(one_way(), 8) is None
    assert oracle_bfs(inverse_pair(), 0) is None


def test_determinism_of_verdicts():
    runs = [decide_group(inverse_pair(), Budget(seed=3)) for _ in range(2)]
    assert runs[0].kind == runs[1].kind == "yes"
    assert runs[0].witness["word"] == runs[1].witness["word"]
    nos = [decide_group(one_way(), Budget(seed=3)) for _ in range(2)]
    assert nos[0].certificate == nos[1].certificate


def test_decide_identity_examples():
    # {g, g^-1, h}: identity via the inverse-pair subset
    pres = free_presentation(1)
    g = GroupElement(pres, [LaurentPoly.one(1)], (1,))
    ginv = g.inverse()
    h = GroupElement(pres, [LaurentPoly.zero(1)], (1,))
    gens = GeneratorSet(pres, [g, GroupElement(pres, list(ginv.y), ginv.a), h])
    v = decide_identity(gens, Budget(samples=8))
    assert v.kind == "yes"
    assert v.witness["subset"] == [1, 2]
    # single one-way generator: identity No
    v2 = decide_identity(one_way(), Budget())
    assert v2.kind == "no"
    assert v2.certificate["subsets"][0]["subset"] == [1]


def test_decide_inverse_examples():
    gens = inverse_pair()
    v = decide_inverse(gens, 1, Budget())
    assert v.kind == "yes"
    v2 = decide_inverse(one_way(), 1, Budget())
    assert v2.kind == "no"
    with pytest.raises(ValueError):
        decide_inverse(gens, 5, Budget())


def test_decide_subset_sublattice_repose():
    # steps {2, -2}: proper sublattice 2Z, re-posed over one variable
    pres = free_presentation(1)
    g = GroupElement(pres, [LaurentPoly.one(1)], (2,))
    ginv = g.inverse()
    gens = GeneratorSet(pres, [g, GroupElement(pres, list(ginv.y), ginv.a)])
    v = decide_subset(gens, [1, 2], Budget())
    assert v.kind == "yes"
    assert evaluate_word(gens, v.witness["word_in_original_letters"]).is_neutral()
    # same steps but a genuine obstruction: g twice
    gens2 = GeneratorSet(pres, [g, GroupElement(pres, list(g.y), g.a)])
    v2 = decide_subset(gens2, [1, 2], Budget())
    assert v2.kind == "no"


def test_decide_subset_constants_route():
    pres = free_presentation(1)
    b1 = GroupElement(pres, [LaurentPoly.one(1)], (0,))
    b2 = GroupElement(pres, [LaurentPoly.constant(1, -1)], (0,))
    gens = GeneratorSet(pres, [b1, b2])
    v = decide_subset(gens, [1, 2], Budget())
    assert v.kind == "yes" and v.witness["counts"] == [1, 1]
    gens2 = GeneratorSet(pres, [b1, GroupElement(pres, [LaurentPoly.one(1)], (0,))])
    assert decide_subset(gens2, [1, 2], Budget()).kind == "no"


def test_identity_replay_consistency():
    """decide_identity(G) is Yes iff decide_subset says Yes for some subset."""
    pres = free_presentation(1)
    g = GroupElement(pres, [LaurentPoly.one(1)], (1,))
    ginv = g.inverse()
    h = GroupElement(pres, [LaurentPoly.zero(1)], (1,))
    gens = GeneratorSet(pres, [g, GroupElement(pres, list(ginv.y), ginv.a), h])
    budget = Budget(samples=8)
    overall = decide_identity(gens, budget)
    per_subset = {}
    import itertools
    for size in range(1, 4):
        for sub in itertools.combinations([1, 2, 3], size):
            per_subset[sub] = decide_subset(gens, list(sub), budget).kind
    assert (overall.kind == "yes") == any(k == "yes" for k in per_subset.values())


def test_n0_degeneration():
    pres = ModulePresentation(n=0, d=1, rels_N=[])
    plus = GroupElement(pres, [LaurentPoly.one(0)], ())
    minus = GroupElement(pres, [LaurentPoly.constant(0, -1)], ())
    assert decide_group(GeneratorSet(pres, [plus, minus]), Budget()).kind == "yes"
    assert decide_group(GeneratorSet(pres, [plus]), Budget()).kind == "no"
