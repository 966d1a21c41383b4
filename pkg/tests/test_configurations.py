"""Classification of six-line configurations and the cubic-pencil sequence."""

from __future__ import annotations

import random

import pytest

from deepnest.configurations import (
    BASE_CONFIGURATIONS,
    EXCLUSION_TEMPLATES,
    EXPECTED_WITNESSES,
    REFERENCE_SEQUENCES,
    classify_configuration,
    configuration_kind,
    cyclic_equal,
    find_witness,
    perturb_configuration,
    reducible_cubic_sequence,
    sample_configuration,
    sigma_shift,
    verify_witness,
)


def test_base_configurations_classify_canonically():
    regions = {}
    for case in (1, 2, 3):
        cl = classify_configuration(BASE_CONFIGURATIONS[case])
        assert cl.verdict == "case"
        assert cl.case == case
        assert cl.relabel_shift == 0
        assert configuration_kind(cl) == f"case{case}"
        regions[case] = cl.region
    assert regions[1] is None
    assert regions[2] == "T4"
    assert regions[3] == "T3"


def test_relabelled_configurations_report_the_inverse_shift():
    for k in range(5):
        for case in (2, 3):
            cl = classify_configuration(sigma_shift(BASE_CONFIGURATIONS[case], k))
            assert cl.case == case
            assert (cl.relabel_shift + k) % 5 == 0
        # the convex case is invariant under relabelling
        cl = classify_configuration(sigma_shift(BASE_CONFIGURATIONS[1], k))
        assert (cl.case, cl.relabel_shift) == (1, 0)


def test_sequences_match_reference():
    for case in (1, 2, 3):
        rep = reducible_cubic_sequence(BASE_CONFIGURATIONS[case])
        assert rep.matches_reference
        assert len(rep.events) == 5
        assert cyclic_equal(list(rep.events), REFERENCE_SEQUENCES[case])


def test_sequences_survive_relabelling_and_perturbation():
    rng = random.Random(11)
    for case in (1, 2, 3):
        for _ in range(10):
            cfg = sigma_shift(BASE_CONFIGURATIONS[case], rng.randrange(5))
            cfg = perturb_configuration(cfg, rng)
            rep = reducible_cubic_sequence(cfg)
            assert rep.classification.case == case
            assert rep.matches_reference


def test_sampler_produces_requested_kind():
    rng = random.Random(3)
    for kind in ("case1", "case2", "case3"):
        for _ in range(5):
            cfg = sample_configuration(kind, rng)
            assert configuration_kind(classify_configuration(cfg)) == kind


def test_excluded_orderings_yield_witnessed_contradictions():
    rng = random.Random(20)
    for kind, template in EXCLUSION_TEMPLATES.items():
        cl = classify_configuration(template)
        assert cl.verdict == "contradiction", kind
        assert configuration_kind(cl) == kind
        assert cl.witness is not None
        assert cl.witness.text in EXPECTED_WITNESSES[kind]
        assert verify_witness(template, cl.witness)
        # a sampled neighbour keeps the same obstruction
        cfg = sample_configuration(kind, rng)
        cl2 = classify_configuration(cfg)
        assert cl2.verdict == "contradiction"
        assert cl2.witness.text in EXPECTED_WITNESSES[kind]


def test_witnesses_are_checkable_and_exclusive():
    for case in (1, 2, 3):
        assert find_witness(BASE_CONFIGURATIONS[case]) is None
    w = classify_configuration(EXCLUSION_TEMPLATES["convex-23465"]).witness
    assert w.kind in ("segment", "vertex", "empty")
    assert not verify_witness(BASE_CONFIGURATIONS[1], w)


def test_valid_cases_never_raise_contradiction():
    rng = random.Random(7)
    for _ in range(30):
        kind = rng.choice(["case1", "case2", "case3"])
        cfg = sample_configuration(kind, rng)
        cl = classify_configuration(cfg)
        assert cl.verdict == "case"
        assert cl.witness is None


def test_cyclic_equal():
    assert cyclic_equal([1, 2, 3], [2, 3, 1])
    assert not cyclic_equal([1, 2, 3], [2, 1, 3])
    assert not cyclic_equal([1, 2], [1, 2, 3])
    assert cyclic_equal([], [])


def test_sampler_rejects_unknown_kind():
    with pytest.raises(KeyError):
        sample_configuration("case9", random.Random(0))
