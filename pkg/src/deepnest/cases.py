"""Sign-case analysis for the two-oval deep nest in degree 9.

The schemes under study have 28 ovals: an outer/inner nest pair, beta empty
ovals between them ("medians") and gamma = 26 - beta empty ovals inside the
inner one ("inners").  A complex orientation assigns every oval a sign, and
two independent counting identities constrain the signed census:

  * the signed-pair identity (2*(pair imbalance) + oval imbalance = 8 for a
    29-component degree-9 curve), and
  * two pair-table identities relating counts of (non-empty oval, enclosed
    empty oval) pairs to the numbers of non-empty ovals of each sign.

The census of any candidate orientation is determined up to four or five
sign unknowns once one fixes how sign alternation propagates along the
fibers of a line pencil.  Three scenarios cover the possibilities for
beta >= 1 (plus a degenerate one for beta = 0):

  with-o1-jumps        alternation breaks at the outer oval n >= 1 times;
                       medians pick up imbalance -n*eps3, inners +n*eps3.
  no-jumps-even-gamma  alternation never breaks at the outer oval; the
                       median chain carries imbalance n*eps3 where n is a
                       feasible chain imbalance, inners balance exactly.
  no-jumps-odd-gamma   as above with gamma odd, so the inners leave a
                       leftover sign eps4.
  beta-zero            no medians; the inner chain closes up and must
                       balance, leaving only the two nest-oval signs free.

Solving an identity that is linear in n for each sign pattern yields the
admissible cases; the pair-table identities then act as a second filter.
Scenario domains for n are *parity-generic*: they use the parity of beta
(and the jump-budget bound for no-jump chains) but not its size.  Size
constraints enter only when a concrete scheme is emitted, so a verdict of
PROHIBITED always certifies the full parity class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .orientations import (
    OrientationParityError,
    SignedEmpties,
    SignedOval,
    SignedScheme,
    chain_imbalance_magnitudes,
    check_orevkov,
    check_rokhlin_mishachev,
    compute_stats,
    print_signed,
    rm_rhs,
)
from .schemes import RealScheme, classify_deep_nest, is_m_curve, parse_scheme

WITH_O1_JUMPS = "with-o1-jumps"
NO_JUMPS_EVEN_GAMMA = "no-jumps-even-gamma"
NO_JUMPS_ODD_GAMMA = "no-jumps-odd-gamma"
BETA_ZERO = "beta-zero"
SCENARIO_KINDS = (WITH_O1_JUMPS, NO_JUMPS_EVEN_GAMMA, NO_JUMPS_ODD_GAMMA,
                  BETA_ZERO)

# the no-jump median chain can break alternation at the one-sided component
# at most 3 times, an odd number of them (a pencil sweep has odd total
# parity); these are the resulting imbalance magnitudes by chain parity
_NO_JUMP_N_EVEN = frozenset({0, 2, 4})
_NO_JUMP_N_ODD = frozenset({1, 3})
_CHAIN_JUMP_BUDGET = 3

TOTAL_EMPTIES = 26
DEGREE = 9
_RHS = rm_rhs(DEGREE, TOTAL_EMPTIES + 3)  # 28 ovals + one-sided = 29


class InfeasibleOrientationError(ValueError):
    """A sign case admits no concrete signed scheme at the given beta."""


@dataclass(frozen=True)
class SignCase:
    scenario: str
    eps1: int                  # outer nest oval sign
    eps2: int                  # inner nest oval sign
    eps3: Optional[int]        # sign carried by the n-fold imbalance
    n: int
    eps4: Optional[int] = None  # leftover inner sign when gamma is odd

    def as_tuple(self) -> tuple[int, ...]:
        if self.eps4 is None:
            return (self.eps1, self.eps2, self.eps3 or 0, self.n)
        return (self.eps1, self.eps2, self.eps3 or 0, self.eps4, self.n)

    def sort_key(self):
        return (self.eps1, self.eps2, self.eps3 or 0, self.eps4 or 0, self.n)

    def imbalances(self) -> tuple[int, int]:
        """(median imbalance, inner imbalance) of the census."""
        if self.scenario == WITH_O1_JUMPS:
            return -self.n * self.eps3, self.n * self.eps3
        if self.scenario == NO_JUMPS_EVEN_GAMMA:
            return self.n * self.eps3, 0
        if self.scenario == NO_JUMPS_ODD_GAMMA:
            return self.n * self.eps3, self.eps4
        return 0, 0


@dataclass(frozen=True)
class Scenario:
    kind: str
    beta: Optional[int] = None
    gamma: Optional[int] = None
    parity: Optional[int] = None  # beta's parity when its size is left open

    def __post_init__(self):
        if self.kind not in SCENARIO_KINDS:
            raise ValueError(f"unknown scenario {self.kind!r}")
        b, g = self.beta, self.gamma
        if b is not None and g is not None and b + g != TOTAL_EMPTIES:
            raise ValueError("beta + gamma must be %d" % TOTAL_EMPTIES)
        if self.kind == BETA_ZERO and b not in (None, 0):
            raise ValueError("beta-zero scenario requires beta = 0")
        if self.kind == NO_JUMPS_EVEN_GAMMA and g is not None and g % 2:
            raise ValueError("gamma must be even here")
        if self.kind == NO_JUMPS_ODD_GAMMA and g is not None and g % 2 == 0:
            raise ValueError("gamma must be odd here")
        if self.parity is not None and b is not None and b % 2 != self.parity:
            raise ValueError("parity contradicts beta")

    def beta_parity(self) -> Optional[int]:
        if self.beta is not None:
            return self.beta % 2
        if self.gamma is not None:
            return self.gamma % 2  # beta = 26 - gamma
        if self.parity is not None:
            return self.parity
        if self.kind == NO_JUMPS_EVEN_GAMMA:
            return 0
        if self.kind == NO_JUMPS_ODD_GAMMA:
            return 1
        if self.kind == BETA_ZERO:
            return 0
        return None

    def admits_n(self, n: int) -> bool:
        if self.kind == BETA_ZERO:
            return n == 0
        parity = self.beta_parity()
        if self.kind == WITH_O1_JUMPS:
            if n < 1:
                return False
            return parity is None or n % 2 == parity
        # no-jump kinds: n is a median-chain imbalance magnitude
        if self.beta is not None:
            return n in chain_imbalance_magnitudes(
                self.beta, _CHAIN_JUMP_BUDGET, "odd")
        if parity == 0:
            return n in _NO_JUMP_N_EVEN
        return n in _NO_JUMP_N_ODD

    def has_eps4(self) -> bool:
        return self.kind == NO_JUMPS_ODD_GAMMA

    def has_eps3(self) -> bool:
        return self.kind != BETA_ZERO


def make_scenario(kind: str, beta: Optional[int] = None,
                  gamma: Optional[int] = None) -> Scenario:
    if kind == BETA_ZERO and beta is None:
        beta = 0
    if beta is not None and gamma is None:
        gamma = TOTAL_EMPTIES - beta
    if gamma is not None and beta is None:
        beta = TOTAL_EMPTIES - gamma
    return Scenario(kind, beta, gamma)


# ---------------------------------------------------------------------------
# the linear identity per sign case

def _signs(case: SignCase) -> tuple[int, int, int, int, int]:
    e1, e2 = case.eps1, case.eps2
    e3 = case.eps3 if case.eps3 is not None else 1
    e4 = case.eps4 if case.eps4 is not None else 0
    return e1, e2, e3, e4, case.n


def rm_lhs(case: SignCase, mode: str = "uniform") -> int:
    """Left-hand side of the signed-pair identity for the case's census."""
    e1, e2, _, _, _ = _signs(case)
    m_imb, i_imb = case.imbalances()
    if mode == "uniform":
        pair_diff = -e1 * e2 - e1 * (m_imb + i_imb) - e2 * i_imb
    elif mode == "literal":
        pair_diff = -e1 * e2 - e2 * (m_imb + i_imb) - e1 * i_imb
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return 2 * pair_diff + (e1 + e2 + m_imb + i_imb)


def rm_case_residual(case: SignCase, mode: str = "uniform") -> int:
    return rm_lhs(case, mode) - _RHS


def solve_scenario(scenario: Scenario, mode: str = "uniform") -> list[SignCase]:
    """All sign cases of the scenario satisfying the signed-pair identity,
    in deterministic order.  n is solved for exactly: the identity is linear
    in n with nonzero slope for every sign pattern."""
    out: list[SignCase] = []
    eps4_values: tuple[Optional[int], ...] = (
        (1, -1) if scenario.has_eps4() else (None,))
    eps3_values: tuple[Optional[int], ...] = (
        (1, -1) if scenario.has_eps3() else (None,))
    for e1 in (1, -1):
        for e2 in (1, -1):
            for e3 in eps3_values:
                for e4 in eps4_values:
                    if scenario.kind == BETA_ZERO:
                        case = SignCase(scenario.kind, e1, e2, e3, 0, e4)
                        if rm_case_residual(case, mode) == 0:
                            out.append(case)
                        continue
                    at0 = rm_case_residual(
                        SignCase(scenario.kind, e1, e2, e3, 0, e4), mode)
                    at1 = rm_case_residual(
                        SignCase(scenario.kind, e1, e2, e3, 1, e4), mode)
                    slope = at1 - at0
                    assert slope != 0
                    n = Fraction(-at0, slope)
                    if n.denominator != 1 or not scenario.admits_n(int(n)):
                        continue
                    out.append(SignCase(scenario.kind, e1, e2, e3, int(n), e4))
    out.sort(key=SignCase.sort_key)
    return out


# ---------------------------------------------------------------------------
# pair-table filter

def orevkov_case_residuals(case: SignCase) -> tuple[int, int]:
    """The two pair-table residuals computed from the case's census alone.

    Only sign imbalances enter, so the result is independent of the
    concrete beta.  Raises OrientationParityError when the empty-oval
    imbalance is odd (no concrete scheme could realize the census)."""
    e1, e2, _, _, _ = _signs(case)
    m_imb, i_imb = case.imbalances()
    lam = m_imb + i_imb
    if lam % 2:
        raise OrientationParityError(
            "empty-oval sign imbalance must be even, got %d" % lam)
    # signed content of each non-empty oval: outer holds all empties,
    # inner holds the inners
    d_plus = (m_imb + i_imb) * (e1 > 0) + i_imb * (e2 > 0)
    d_minus = (m_imb + i_imb) * (e1 < 0) + i_imb * (e2 < 0)
    l_plus = (e1 > 0) + (e2 > 0)
    l_minus = (e1 < 0) + (e2 < 0)
    r1 = -d_plus - l_plus * l_plus
    r2 = d_minus + lam // 2 - l_minus * l_minus - l_minus
    return r1, r2


def orevkov_filter(cases: Iterable[SignCase]) -> list[SignCase]:
    out = []
    for case in cases:
        try:
            if orevkov_case_residuals(case) == (0, 0):
                out.append(case)
        except OrientationParityError:
            continue
    return out


# ---------------------------------------------------------------------------
# concrete signed schemes

def emit_complex_scheme(case: SignCase, beta: int,
                        gamma: Optional[int] = None) -> SignedScheme:
    """Concrete signed scheme carrying the case's census at the given beta.

    Raises InfeasibleOrientationError when the census does not fit: a group
    count would be negative, fractional, or the imbalance exceeds what the
    scenario's n-domain allows at this size.
    """
    if gamma is None:
        gamma = TOTAL_EMPTIES - beta
    scenario = make_scenario(case.scenario, beta, gamma)
    if not scenario.admits_n(case.n):
        raise InfeasibleOrientationError(
            f"n={case.n} is not admissible at beta={beta}")
    m_imb, i_imb = case.imbalances()
    if case.scenario == WITH_O1_JUMPS and case.n > min(beta, gamma):
        raise InfeasibleOrientationError(
            f"n={case.n} exceeds the available ovals at beta={beta}")
    groups = []
    for total, imb in ((beta, m_imb), (gamma, i_imb)):
        if (total + imb) % 2:
            raise InfeasibleOrientationError(
                f"imbalance {imb} has the wrong parity for {total} ovals")
        plus, minus = (total + imb) // 2, (total - imb) // 2
        if plus < 0 or minus < 0:
            raise InfeasibleOrientationError(
                f"imbalance {imb} does not fit in {total} ovals")
        groups.append(SignedEmpties(plus, minus))
    medians, inners = groups
    inner_oval = SignedOval(case.eps2, inners)
    outer_oval = SignedOval(case.eps1, medians, (inner_oval,))
    return SignedScheme(DEGREE, True, SignedEmpties(0, 0), (outer_oval,))


# ---------------------------------------------------------------------------
# prohibition verdicts

@dataclass(frozen=True)
class ScenarioResult:
    scenario: Scenario
    solutions: tuple[SignCase, ...]
    survivors: tuple[SignCase, ...]


@dataclass(frozen=True)
class FeasibleScheme:
    case: SignCase
    scheme: str
    rm_residual: int
    orevkov_residuals: tuple[int, int]


@dataclass(frozen=True)
class ProhibitReport:
    scheme: str
    beta: int
    gamma: int
    mode: str
    results: tuple[ScenarioResult, ...]
    verdict: str                 # "PROHIBITED" or "OPEN"
    new: Optional[bool]          # set when PROHIBITED
    real_scheme_forbidden: bool  # OPEN, yet no survivor fits this beta
    feasible: tuple[FeasibleScheme, ...]


def deep_nest_scheme(beta: int, gamma: Optional[int] = None,
                     alpha: int = 0) -> RealScheme:
    if gamma is None:
        gamma = TOTAL_EMPTIES - beta
    prefix = f"{alpha} + " if alpha else ""
    return parse_scheme(f"<J + {prefix}1<{beta} + 1<{gamma}>>>", DEGREE)


def prohibit(scheme: RealScheme, known: Iterable[int] = (),
             mode: str = "uniform") -> ProhibitReport:
    """Run the full prohibition argument against a deep-nest scheme.

    The verdict is parity-generic: PROHIBITED means no sign case of any
    scenario for beta's parity passes both identities, which rules out the
    entire parity class.  Concrete size information is reported separately:
    `feasible` lists the survivors realizable at this exact beta, and
    `real_scheme_forbidden` is set when the verdict is OPEN only on behalf
    of other sizes in the parity class.
    """
    if not is_m_curve(scheme):
        raise ValueError("prohibition argument applies to schemes with the "
                         "maximal number of components")
    profile = classify_deep_nest(scheme)
    if profile is None:
        raise ValueError("scheme has no depth-3 nest")
    if profile.alpha != 0:
        raise ValueError("prohibition argument requires all empty ovals "
                         "inside the nest")
    beta, gamma = profile.beta, profile.gamma

    results = []
    survivors_all: list[SignCase] = []
    if beta == 0:
        scenarios = [make_scenario(BETA_ZERO)]
    else:
        gamma_kind = (NO_JUMPS_ODD_GAMMA if gamma % 2
                      else NO_JUMPS_EVEN_GAMMA)
        # parity-generic: pin beta's parity but not its size
        scenarios = [Scenario(WITH_O1_JUMPS, parity=beta % 2),
                     Scenario(gamma_kind)]
    for scn in scenarios:
        sols = solve_scenario(scn, mode)
        surv = orevkov_filter(sols)
        results.append(ScenarioResult(scn, tuple(sols), tuple(surv)))
        survivors_all.extend(surv)

    feasible: list[FeasibleScheme] = []
    for case in survivors_all:
        try:
            signed = emit_complex_scheme(case, beta, gamma)
        except InfeasibleOrientationError:
            continue
        rm = check_rokhlin_mishachev(signed, "uniform")
        orv = check_orevkov(signed)
        feasible.append(FeasibleScheme(case, print_signed(signed), rm, orv))

    verdict = "PROHIBITED" if not survivors_all else "OPEN"
    return ProhibitReport(
        scheme=f"<J + 1<{beta} + 1<{gamma}>>>",
        beta=beta, gamma=gamma, mode=mode,
        results=tuple(results),
        verdict=verdict,
        new=(beta not in set(known)) if verdict == "PROHIBITED" else None,
        real_scheme_forbidden=(verdict == "OPEN" and not feasible),
        feasible=tuple(feasible),
    )


# ---------------------------------------------------------------------------
# the two theorem tables

@dataclass(frozen=True)
class TheoremOneRow:
    beta: int
    gamma: int
    verdict: str
    new: bool
    solution_count: int


def theorem1_report(known: Iterable[int] = (1, 3, 25)) -> list[TheoremOneRow]:
    """Prohibition table over all odd beta."""
    known = set(known)
    rows = []
    for beta in range(1, TOTAL_EMPTIES, 2):
        rep = prohibit(deep_nest_scheme(beta), known)
        rows.append(TheoremOneRow(
            beta=beta, gamma=TOTAL_EMPTIES - beta,
            verdict=rep.verdict,
            new=bool(rep.new),
            solution_count=sum(len(r.solutions) for r in rep.results),
        ))
    return rows


@dataclass(frozen=True)
class TheoremTwoRow:
    beta: int
    gamma: int
    schemes: tuple[FeasibleScheme, ...]
    skipped: tuple[SignCase, ...]   # survivors that do not fit this beta


def theorem2_report(beta: int, gamma: Optional[int] = None) -> TheoremTwoRow:
    """Candidate signed schemes at an even beta: every parity-generic
    survivor that fits, re-verified through the full census machinery."""
    if beta % 2:
        raise ValueError("this table covers even beta")
    if gamma is None:
        gamma = TOTAL_EMPTIES - beta
    rep = prohibit(deep_nest_scheme(beta, gamma))
    skipped = []
    for result in rep.results:
        for case in result.survivors:
            if not any(f.case == case for f in rep.feasible):
                skipped.append(case)
    return TheoremTwoRow(beta=beta, gamma=gamma,
                         schemes=rep.feasible, skipped=tuple(skipped))


# ---------------------------------------------------------------------------
# the degenerate nest

@dataclass(frozen=True)
class BetaZeroReport:
    lhs_values: tuple[int, ...]
    max_abs_lhs: int
    rhs: int
    contradiction: bool
    comparison_components: int
    comparison_rhs: int
    comparison_contradiction: bool


def beta_zero_contradiction() -> BetaZeroReport:
    """With no medians the inner chain closes up, forcing zero imbalance;
    the identity's left side then cannot reach the degree-9 value 8.  A
    21-component curve (right side 0) shows the census itself is fine."""
    lhs = sorted({rm_lhs(SignCase(BETA_ZERO, e1, e2, None, 0), "uniform")
                  for e1 in (1, -1) for e2 in (1, -1)})
    max_abs = max(abs(v) for v in lhs)
    comparison_rhs = rm_rhs(DEGREE, 21)
    return BetaZeroReport(
        lhs_values=tuple(lhs),
        max_abs_lhs=max_abs,
        rhs=_RHS,
        contradiction=max_abs < _RHS,
        comparison_components=21,
        comparison_rhs=comparison_rhs,
        comparison_contradiction=comparison_rhs not in lhs,
    )
