"""Scenario case analysis for the depth-3 nest of the 28-oval degree-9 curve."""

from __future__ import annotations

import pytest

from deepnest.cases import (
    BETA_ZERO,
    InfeasibleOrientationError,
    NO_JUMPS_EVEN_GAMMA,
    NO_JUMPS_ODD_GAMMA,
    Scenario,
    SignCase,
    WITH_O1_JUMPS,
    beta_zero_contradiction,
    deep_nest_scheme,
    emit_complex_scheme,
    make_scenario,
    orevkov_case_residuals,
    orevkov_filter,
    prohibit,
    rm_case_residual,
    solve_scenario,
    theorem1_report,
    theorem2_report,
)
from deepnest.orientations import (
    check_orevkov,
    check_rokhlin_mishachev,
    print_signed,
)
from deepnest.schemes import parse_scheme

JUMP_SOLUTIONS = {
    "literal": {(-1, -1, 1, 6), (-1, 1, 1, 3), (1, -1, -1, 3), (1, 1, -1, 4)},
    "uniform": {(-1, -1, 1, 6), (1, 1, -1, 4), (1, -1, 1, 3), (-1, 1, -1, 3)},
}
JUMP_SURVIVORS = {(-1, -1, 1, 6), (1, 1, -1, 4)}

EVEN_GAMMA_SOLUTIONS = {
    "literal": {(-1, -1, 1, 4), (1, -1, 1, 2)},
    "uniform": {(-1, -1, 1, 4), (-1, 1, 1, 2)},
}
EVEN_GAMMA_SURVIVOR = (-1, -1, 1, 4)


def tuples(cases):
    return {c.as_tuple() for c in cases}


@pytest.mark.parametrize("mode", ["uniform", "literal"])
def test_jump_scenario_solutions(mode):
    sc = Scenario(WITH_O1_JUMPS)  # median parity left open
    sols = solve_scenario(sc, mode)
    assert tuples(sols) == JUMP_SOLUTIONS[mode]
    assert tuples(orevkov_filter(sols)) == JUMP_SURVIVORS


@pytest.mark.parametrize("mode", ["uniform", "literal"])
def test_no_jump_scenarios(mode):
    even = solve_scenario(Scenario(NO_JUMPS_EVEN_GAMMA, parity=0), mode)
    assert tuples(even) == EVEN_GAMMA_SOLUTIONS[mode]
    assert tuples(orevkov_filter(even)) == {EVEN_GAMMA_SURVIVOR}
    odd = solve_scenario(Scenario(NO_JUMPS_ODD_GAMMA, parity=1), mode)
    assert odd == []


def test_survivors_do_not_depend_on_pairing_mode():
    for kind, parity in [(WITH_O1_JUMPS, 0), (WITH_O1_JUMPS, 1),
                         (NO_JUMPS_EVEN_GAMMA, 0), (NO_JUMPS_ODD_GAMMA, 1)]:
        sc = Scenario(kind, parity=parity)
        survivors = {
            mode: tuples(orevkov_filter(solve_scenario(sc, mode)))
            for mode in ("uniform", "literal")
        }
        assert survivors["uniform"] == survivors["literal"]


def test_case_residuals_vanish_on_solutions():
    sc = Scenario(WITH_O1_JUMPS)
    for mode in ("uniform", "literal"):
        for case in solve_scenario(sc, mode):
            assert rm_case_residual(case, mode) == 0
    for case in orevkov_filter(solve_scenario(sc, "uniform")):
        assert orevkov_case_residuals(case) == (0, 0)


def test_scenario_validation():
    with pytest.raises(ValueError):
        Scenario(WITH_O1_JUMPS, beta=3, gamma=20)     # sizes must total 26
    with pytest.raises(ValueError):
        Scenario(NO_JUMPS_EVEN_GAMMA, beta=3, gamma=23)  # inner count odd
    with pytest.raises(ValueError):
        Scenario(WITH_O1_JUMPS, beta=4, parity=1)     # parity contradicts size
    with pytest.raises(ValueError):
        Scenario("imaginary-case")
    sc = make_scenario(NO_JUMPS_ODD_GAMMA, beta=3)
    assert (sc.beta, sc.gamma) == (3, 23)


def test_admits_n_budgets():
    jump = Scenario(WITH_O1_JUMPS, parity=0)
    assert not jump.admits_n(0)       # at least one jump by definition
    assert jump.admits_n(2) and jump.admits_n(26)
    assert not jump.admits_n(3)       # parity mismatch
    no_jump = Scenario(NO_JUMPS_EVEN_GAMMA, parity=0)
    assert no_jump.admits_n(0) and no_jump.admits_n(4)
    assert not no_jump.admits_n(6)    # beyond the three-jump chain budget
    sized = Scenario(NO_JUMPS_EVEN_GAMMA, beta=2, gamma=24)
    # a two-oval chain with an odd jump budget realizes only imbalance 2
    assert sized.admits_n(2)
    assert not sized.admits_n(0) and not sized.admits_n(4)
    zero = Scenario(BETA_ZERO, beta=0, gamma=26)
    assert zero.admits_n(0) and not zero.admits_n(1)


# --- emission --------------------------------------------------------------

def emit_text(tup, beta, scenario=WITH_O1_JUMPS, eps4=None):
    case = SignCase(scenario, *tup[:3], tup[3], eps4)
    return print_signed(emit_complex_scheme(case, beta))


def test_emitted_schemes_for_twelve_medians():
    assert emit_text((-1, -1, 1, 6), 12) == \
        "<J + 1_-<3_+ + 9_- + 1_-<10_+ + 4_->>>"
    assert emit_text((1, 1, -1, 4), 12) == \
        "<J + 1_+<8_+ + 4_- + 1_+<5_+ + 9_->>>"


def test_emitted_schemes_for_four_medians():
    assert emit_text((1, 1, -1, 4), 4) == \
        "<J + 1_+<4_+ + 0_- + 1_+<9_+ + 13_->>>"
    case = SignCase(NO_JUMPS_EVEN_GAMMA, -1, -1, 1, 4)
    assert print_signed(emit_complex_scheme(case, 4)) == \
        "<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>"


def test_emitted_schemes_pass_full_checks():
    for beta in (4, 6, 8, 10, 12):
        for tup in JUMP_SURVIVORS:
            if tup[3] > min(beta, 26 - beta):
                continue
            s = emit_complex_scheme(SignCase(WITH_O1_JUMPS, *tup), beta)
            for mode in ("uniform", "literal"):
                assert check_rokhlin_mishachev(s, mode) == 0
            assert check_orevkov(s) == (0, 0)


def test_emission_rejects_out_of_range():
    with pytest.raises(InfeasibleOrientationError):
        emit_text((-1, -1, 1, 6), 4)   # needs six jumps, only four medians
    with pytest.raises(InfeasibleOrientationError):
        emit_text((-1, -1, 1, 6), 13)  # odd sizes cannot split the imbalance
    with pytest.raises(InfeasibleOrientationError):
        emit_complex_scheme(SignCase(NO_JUMPS_EVEN_GAMMA, -1, -1, 1, 4), 2)


# --- headline reports ------------------------------------------------------

def test_odd_median_counts_are_prohibited():
    for beta in (1, 3, 9, 25):
        report = prohibit(deep_nest_scheme(beta), known=(1, 3, 25))
        assert report.verdict == "PROHIBITED"
        assert report.new is (beta not in (1, 3, 25))
        assert all(not r.survivors for r in report.results)
        assert report.feasible == ()


def test_even_median_counts_stay_open():
    report = prohibit(deep_nest_scheme(12))
    assert report.verdict == "OPEN"
    assert report.new is None
    assert not report.real_scheme_forbidden
    assert {f.case.as_tuple()[:4] for f in report.feasible} >= JUMP_SURVIVORS
    for f in report.feasible:
        assert f.rm_residual == 0 and f.orevkov_residuals == (0, 0)


def test_two_medians_open_but_unrealizable():
    report = prohibit(deep_nest_scheme(2))
    assert report.verdict == "OPEN"
    assert report.real_scheme_forbidden
    assert report.feasible == ()


def test_prohibit_validates_input():
    with pytest.raises(ValueError):
        prohibit(parse_scheme("<J + 27>", 9))          # not an M-curve
    with pytest.raises(ValueError):
        prohibit(parse_scheme("<J + 28>", 9))          # no depth-3 nest
    with pytest.raises(ValueError):
        prohibit(parse_scheme("<J + 2 + 1<2 + 1<22>>>", 9))  # outer ovals


def test_theorem1_rows():
    rows = theorem1_report()
    assert len(rows) == 13
    assert [r.beta for r in rows] == list(range(1, 26, 2))
    assert all(r.verdict == "PROHIBITED" for r in rows)
    assert sum(r.new for r in rows) == 10
    assert {r.beta for r in rows if not r.new} == {1, 3, 25}
    assert all(r.beta + r.gamma == 26 for r in rows)


def test_theorem2_rows():
    row = theorem2_report(12)
    texts = {f.scheme for f in row.schemes}
    assert "<J + 1_-<3_+ + 9_- + 1_-<10_+ + 4_->>>" in texts
    assert "<J + 1_+<8_+ + 4_- + 1_+<5_+ + 9_->>>" in texts
    assert all(f.rm_residual == 0 for f in row.schemes)
    assert all(f.orevkov_residuals == (0, 0) for f in row.schemes)
    row4 = theorem2_report(4)
    assert any(c.n == 6 for c in row4.skipped)    # six jumps need beta >= 6
    assert {f.scheme for f in row4.schemes} >= {
        "<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>",
        "<J + 1_+<4_+ + 0_- + 1_+<9_+ + 13_->>>",
    }
    with pytest.raises(ValueError):
        theorem2_report(3)


def test_beta_zero_report():
    rep = beta_zero_contradiction()
    assert set(rep.lhs_values) == {-4, 0, 2}
    assert rep.max_abs_lhs == 4
    assert rep.rhs == 8
    assert rep.contradiction
    assert rep.comparison_components == 21
    assert rep.comparison_rhs == 0
    assert not rep.comparison_contradiction
