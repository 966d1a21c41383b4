"""Exact rational projective-plane kernel.

Points and lines are integer homogeneous triples, canonicalized to coprime
entries with the first nonzero entry positive.  All predicates are exact;
no tolerances anywhere.  Directions mod pi are compared on the circle via
the double-angle embedding (dx, dy) -> (dx^2 - dy^2, 2 dx dy), which is
injective on lines through the origin and turns "rotating pencil" questions
into ordinary circular-order questions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Triple = tuple[int, int, int]

J_STANDARD: Triple = (0, 0, 1)


class DegeneratePositionError(ValueError):
    """Raised when an input configuration violates a genericity precondition."""


# ---------------------------------------------------------------------------
# canonical homogeneous triples

def normalize(x: int, y: int, z: int) -> Triple:
    if x == 0 and y == 0 and z == 0:
        raise ValueError("zero triple is not a projective object")
    g = gcd(gcd(abs(x), abs(y)), abs(z))
    x, y, z = x // g, y // g, z // g
    for c in (x, y, z):
        if c != 0:
            if c < 0:
                x, y, z = -x, -y, -z
            break
    return (x, y, z)


def point(x, y) -> Triple:
    """Affine point with exact rational coordinates -> canonical triple."""
    fx, fy = Fraction(x), Fraction(y)
    den = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
    return normalize(int(fx * den), int(fy * den), den)


def cross(u: Triple, v: Triple) -> Triple:
    return normalize(
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def line_through(p: Triple, q: Triple) -> Triple:
    if p == q:
        raise ValueError("need two distinct points")
    return cross(p, q)


def meet(l1: Triple, l2: Triple) -> Triple:
    if l1 == l2:
        raise ValueError("lines coincide")
    return cross(l1, l2)


def incident(l: Triple, p: Triple) -> bool:
    return l[0] * p[0] + l[1] * p[1] + l[2] * p[2] == 0


def dot(l: Triple, p: Triple) -> int:
    return l[0] * p[0] + l[1] * p[1] + l[2] * p[2]


def det3(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def sign(v) -> int:
    return (v > 0) - (v < 0)


def orient(p: Triple, q: Triple, r: Triple) -> int:
    """Sign of the determinant of the canonical representatives.

    Anchored so that the affine unit triangle (0,0), (1,0), (0,1) is positive.
    """
    return sign(det3(normalize(*p), normalize(*q), normalize(*r)))


# ---------------------------------------------------------------------------
# charts: a distinguished line J plays "line at infinity"

def chart_rep(p: Triple, j: Triple) -> Triple:
    """Representative of p scaled so <j, p> > 0 (p must be off j)."""
    s = dot(j, p)
    if s == 0:
        raise DegeneratePositionError("point lies on the distinguished line")
    return p if s > 0 else (-p[0], -p[1], -p[2])


def chart_orient(p: Triple, q: Triple, r: Triple, j: Triple = J_STANDARD) -> int:
    """Affine orientation in the chart complementing j (+1 = counterclockwise)."""
    return sign(det3(chart_rep(p, j), chart_rep(q, j), chart_rep(r, j)))


def _chart_basis(j: Triple) -> tuple[Triple, Triple]:
    # Two coordinate axes completing j to a basis of the dual/space pairing:
    # pick the two standard basis vectors e_i with largest-index nonzero of j excluded.
    k = max(range(3), key=lambda i: abs(j[i]))
    rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    del rows[k]
    return rows[0], rows[1]


def chart_direction(frm: Triple, to: Triple, j: Triple = J_STANDARD) -> tuple[int, int]:
    """Direction (2-vector, exact) from `frm` to `to` in the chart complementing j."""
    a = chart_rep(frm, j)
    b = chart_rep(to, j)
    # Affine difference: b/<j,b> - a/<j,a>, cleared of denominators (positive factor).
    wa, wb = dot(j, a), dot(j, b)
    d = tuple(b[i] * wa - a[i] * wb for i in range(3))
    u, v = _chart_basis(j)
    dx = d[0] * u[0] + d[1] * u[1] + d[2] * u[2]
    dy = d[0] * v[0] + d[1] * v[1] + d[2] * v[2]
    if dx == 0 and dy == 0:
        raise ValueError("coincident points have no direction")
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g)


def double_angle(d: tuple[int, int]) -> tuple[int, int]:
    """Map a direction mod pi to a full-circle direction: angle doubling."""
    dx, dy = d
    return (dx * dx - dy * dy, 2 * dx * dy)


def _half(v: tuple[int, int]) -> int:
    # 0 for upper half-circle (y>0 or (y==0, x>0)), 1 for lower
    if v[1] != 0:
        return 0 if v[1] > 0 else 1
    return 0 if v[0] > 0 else 1


def circle_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Strict counterclockwise order from angle 0 on full-circle vectors."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha < hb
    c = a[0] * b[1] - a[1] * b[0]
    if c == 0:
        raise DegeneratePositionError("equal circular positions")
    return c > 0


def circle_sort(items: list, key) -> list:
    """Sort by circular position starting at angle 0 (exact comparisons)."""
    import functools

    def cmp(x, y):
        kx, ky = key(x), key(y)
        if kx == ky:
            raise DegeneratePositionError("equal circular positions")
        return -1 if circle_less(kx, ky) else 1

    return sorted(items, key=functools.cmp_to_key(cmp))


def inside_ccw_arc(a: tuple[int, int], b: tuple[int, int], m: tuple[int, int]) -> bool:
    """Is m strictly inside the counterclockwise arc from a to b (full circle)?"""
    cab = a[0] * b[1] - a[1] * b[0]
    cam = a[0] * m[1] - a[1] * m[0]
    cmb = m[0] * b[1] - m[1] * b[0]
    if cab == 0:
        if a == b:
            return False
        # arc of half turn: m inside iff strictly left of a
        return cam > 0
    if cab > 0:
        return cam > 0 and cmb > 0
    return cam > 0 or cmb > 0


# ---------------------------------------------------------------------------
# principal segments

@dataclass(frozen=True)
class PrincipalSegment:
    """The two arcs of line XY, split by X and Y, relative to the line j.

    The `even` arc avoids j entirely (0 crossings); the `odd` arc (written
    [XY]' in reports) meets j in exactly one point.
    """

    x: Triple
    y: Triple
    j: Triple
    j_point: Triple  # where line XY meets j

    def classify(self, p: Triple) -> str:
        """'even', 'odd', or 'endpoint' for a point p on line XY."""
        if not incident(line_through(self.x, self.y), p):
            raise ValueError("point not on the segment's line")
        lx = chart_rep(self.x, self.j)
        ly = chart_rep(self.y, self.j)
        lam, mu = _decompose(p, lx, ly)
        if lam == 0 or mu == 0:
            return "endpoint"
        return "even" if lam * mu > 0 else "odd"


def _decompose(p: Triple, a: Triple, b: Triple) -> tuple[int, int]:
    """Integers (lam, mu) with p ~ lam*a + mu*b, for p on line ab."""
    for i, j in ((0, 1), (0, 2), (1, 2)):
        d = a[i] * b[j] - a[j] * b[i]
        if d != 0:
            lam = p[i] * b[j] - p[j] * b[i]
            mu = a[i] * p[j] - a[j] * p[i]
            # sanity: p ~ lam*a + mu*b up to the common factor d
            return (lam * sign(d), mu * sign(d))
    raise ValueError("points do not span a line")


def principal_segment(x: Triple, y: Triple, j: Triple = J_STANDARD) -> PrincipalSegment:
    if dot(j, x) == 0 or dot(j, y) == 0:
        raise DegeneratePositionError("endpoint on the distinguished line")
    l = line_through(x, y)
    w = meet(l, j)
    return PrincipalSegment(x=x, y=y, j=j, j_point=w)


# ---------------------------------------------------------------------------
# convex position

@dataclass(frozen=True)
class NotConvex:
    witness: object  # label of the interior point
    triangle: tuple  # labels of three points surrounding it


def in_triangle(p: Triple, a: Triple, b: Triple, c: Triple, j: Triple = J_STANDARD) -> bool:
    """Strict interior test in the chart complementing j."""
    s1 = chart_orient(a, b, p, j)
    s2 = chart_orient(b, c, p, j)
    s3 = chart_orient(c, a, p, j)
    return s1 == s2 == s3 and s1 != 0


def convex_position(labeled: dict, j: Triple = J_STANDARD):
    """Positive (counterclockwise) cyclic order of labels, or NotConvex.

    `labeled` maps label -> point; all points must avoid j and be distinct.
    """
    labs = list(labeled)
    if len(labs) < 3:
        raise ValueError("need at least 3 points")
    pts = {k: chart_rep(labeled[k], j) for k in labs}
    hull, interior = _hull_cycle(pts, j)
    if interior:
        w = interior[0]
        for t in _triangles(hull):
            if in_triangle(labeled[w], labeled[t[0]], labeled[t[1]], labeled[t[2]], j):
                return NotConvex(witness=w, triangle=t)
        return NotConvex(witness=w, triangle=tuple(hull[:3]))
    return hull


def _triangles(labels: Sequence):
    n = len(labels)
    for i in range(n):
        for k in range(i + 1, n):
            for m in range(k + 1, n):
                yield (labels[i], labels[k], labels[m])


def _hull_cycle(pts: dict, j: Triple):
    """Counterclockwise hull label cycle + interior labels (exact, small n)."""
    labs = list(pts)
    for a in range(len(labs)):
        for b in range(a + 1, len(labs)):
            for c in range(b + 1, len(labs)):
                if chart_orient(pts[labs[a]], pts[labs[b]], pts[labs[c]], j) == 0:
                    raise DegeneratePositionError(
                        f"collinear triple {labs[a]},{labs[b]},{labs[c]}")
    hull = []
    interior = []
    for k in labs:
        others = [o for o in labs if o != k]
        inside = False
        for t in _triangles(others):
            if in_triangle(pts[k], pts[t[0]], pts[t[1]], pts[t[2]], j):
                inside = True
                break
        (interior if inside else hull).append(k)
    if len(hull) < 3:
        raise DegeneratePositionError("degenerate hull")
    # order hull counterclockwise around its own centroid (exact)
    center = _chart_centroid({k: pts[k] for k in hull}, j)
    ordered = circle_sort(hull, key=lambda k: chart_direction(center, pts[k], j))
    return ordered, interior


def _chart_centroid(reps: dict, j: Triple) -> Triple:
    """Exact centroid (in the j-chart) of canonical points, as a triple."""
    u, v = _chart_basis(j)
    xs = []
    ys = []
    for p in reps.values():
        w = dot(j, p)
        xs.append(Fraction(dot(u, p), w))
        ys.append(Fraction(dot(v, p), w))
    cx = sum(xs) / len(xs)
    cy = sum(ys) / len(ys)
    # rebuild a triple: c = cx*u + cy*v + ? ; solve on the affine patch <j,c>=1
    den = (cx.denominator * cy.denominator) // gcd(cx.denominator, cy.denominator)
    ix, iy = int(cx * den), int(cy * den)
    # coordinates in the (u, v, j)-frame, then convert back via the dual basis
    m = _frame_matrix(j)
    c = (
        ix * m[0][0] + iy * m[0][1] + den * m[0][2],
        ix * m[1][0] + iy * m[1][1] + den * m[1][2],
        ix * m[2][0] + iy * m[2][1] + den * m[2][2],
    )
    return normalize(*c)


def _raw_cross(u: Sequence[int], v: Sequence[int]) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _frame_matrix(j: Triple):
    """Inverse (up to positive scale) of the matrix with rows (u, v, j):
    its columns map chart coordinates back to homogeneous triples."""
    u, v = _chart_basis(j)
    rows = (u, v, j)
    d = det3(*rows)
    cols = [_raw_cross(rows[(r + 1) % 3], rows[(r + 2) % 3]) for r in range(3)]
    s = sign(d)
    return [[cols[c][k] * s for c in range(3)] for k in range(3)]


# ---------------------------------------------------------------------------
# rotating line pencils and J-jumps

def line_pencil_sweep(base: Triple, targets: dict, direction: str = "+",
                      j: Triple = J_STANDARD):
    """Cyclic order in which a line rotating about `base` meets the targets,
    with a flag per consecutive step: True iff the swept sector's segment of
    the two targets' line is the one crossing j (a J-jump).

    Returns (order, flags): order is the label cycle (counterclockwise for
    direction '+'), flags[i] covers the step order[i] -> order[(i+1) % n].
    """
    if direction not in ("+", "-"):
        raise ValueError("direction must be '+' or '-'")
    labs = list(targets)
    if len(labs) < 2:
        raise ValueError("need at least 2 targets")
    if dot(j, base) == 0:
        raise DegeneratePositionError("pencil base on the distinguished line")
    keyed = []
    for k in labs:
        if targets[k] == base:
            raise ValueError("target equals base")
        keyed.append((k, double_angle(chart_direction(base, targets[k], j))))
    try:
        ordered = circle_sort(keyed, key=lambda it: it[1])
    except DegeneratePositionError:
        raise DegeneratePositionError("two targets collinear with the base")
    order = [k for k, _ in ordered]
    if direction == "-":
        order = order[::-1]
    flags = []
    n = len(order)
    for i in range(n):
        x, y = order[i], order[(i + 1) % n]
        flags.append(step_is_j_jump(base, targets[x], targets[y], direction, j))
    return order, flags


def step_is_j_jump(base: Triple, px: Triple, py: Triple, direction: str = "+",
                   j: Triple = J_STANDARD) -> bool:
    """Does the pencil at `base`, rotating from the line through px to the line
    through py (consecutively), sweep the segment of line(px,py) that meets j?

    Exact criterion: the swept sector covers exactly one of the two segments;
    it covers the j-crossing one iff the direction of line(px,py) lies in the
    swept arc of directions.
    """
    a = double_angle(chart_direction(base, px, j))
    b = double_angle(chart_direction(base, py, j))
    m = double_angle(chart_direction(px, py, j))
    if direction == "+":
        return inside_ccw_arc(a, b, m)
    return inside_ccw_arc(b, a, m)


def sweep_cycle(base: Triple, targets: dict, j: Triple = J_STANDARD) -> list:
    order, _ = line_pencil_sweep(base, targets, "+", j)
    return order
