"""Upper half-plane geometry: points, geodesics, isometries, strips.

Everything lives in the upper half-plane model.  Ideal boundary points are
plain floats, with ``math.inf`` standing for the point at infinity.  A
geodesic is stored by its two ideal endpoints, which makes it either a
vertical Euclidean ray (one endpoint infinite) or a Euclidean half-circle
centered on the real axis.  Isometries are real 2x2 matrices of determinant
one acting by Mobius transformations; a matrix and its negative act the same
way.

All operations are pure; every value type is immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    NonPositiveWidthError,
    NotHyperbolicError,
    NotHyperparallelError,
    NotPerpendicularError,
)

INFINITY = math.inf

#: default tolerance for metric comparisons
TOL = 1e-9
#: tolerance for incidence checks (point on geodesic, endpoint matching)
INCIDENCE_TOL = 1e-8
#: tolerance below which a strip crossing is reported as tangent
TANGENT_TOL = 1e-8


def _is_inf(t: float) -> bool:
    return math.isinf(t)


@dataclass(frozen=True)
class Point:
    """A point x + iy of the upper half-plane (y > 0)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")
        if self.y <= 0.0:
            raise ValueError(f"point must lie in the open upper half-plane, got y={self.y}")


def dist(p: Point, q: Point) -> float:
    """Hyperbolic distance: cosh d = 1 + (|dx|^2 + |dy|^2) / (2 y_p y_q)."""
    dx = p.x - q.x
    dy = p.y - q.y
    ch = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y)
    return math.acosh(max(1.0, ch))


@dataclass(frozen=True)
class Geodesic:
    """Oriented geodesic given by ideal endpoints u -> v.

    The two endpoints must be distinct; at most one may be infinite.
    """

    u: float
    v: float

    def __post_init__(self):
        u, v = self.u, self.v
        # the ideal boundary has a single point at infinity
        if u == -INFINITY:
            object.__setattr__(self, "u", INFINITY)
            u = INFINITY
        if v == -INFINITY:
            object.__setattr__(self, "v", INFINITY)
            v = INFINITY
        if _is_inf(u) and _is_inf(v):
            raise ValueError("geodesic endpoints must be distinct")
        if u == v:
            raise ValueError(f"geodesic endpoints must be distinct, got {u!r} twice")

    @property
    def is_vertical(self) -> bool:
        return _is_inf(self.u) or _is_inf(self.v)

    @property
    def foot(self) -> float:
        """The finite endpoint of a vertical geodesic."""
        return self.v if _is_inf(self.u) else self.u

    @property
    def center(self) -> float:
        if self.is_vertical:
            raise ValueError("vertical geodesic has no Euclidean center")
        return 0.5 * (self.u + self.v)

    @property
    def radius(self) -> float:
        if self.is_vertical:
            raise ValueError("vertical geodesic has no Euclidean radius")
        return 0.5 * abs(self.v - self.u)

    def reversed(self) -> "Geodesic":
        return Geodesic(self.v, self.u)

    def contains(self, p: Point, tol: float = INCIDENCE_TOL) -> bool:
        if self.is_vertical:
            return abs(p.x - self.foot) <= tol * max(1.0, abs(self.foot), p.y)
        r = self.radius
        d = math.hypot(p.x - self.center, p.y)
        return abs(d - r) <= tol * max(1.0, r)


@dataclass(frozen=True)
class Segment:
    """A geodesic segment [a, b] on an explicit carrier geodesic."""

    carrier: Geodesic
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("segment endpoints must be distinct")
        for p in (self.a, self.b):
            if not self.carrier.contains(p):
                raise ValueError(f"segment endpoint {p} does not lie on carrier {self.carrier}")

    def length(self) -> float:
        return dist(self.a, self.b)

    def midpoint(self) -> Point:
        frame = vertical_to(self.carrier)
        inv = frame.inverse()
        ya = inv.apply(self.a).y
        yb = inv.apply(self.b).y
        return frame.apply(Point(0.0, math.sqrt(ya * yb)))


class Isometry:
    """Orientation-preserving isometry of the upper half-plane.

    Stored as a 2x2 real matrix with determinant one; the matrix is only
    determined up to sign.  Construction normalizes the determinant and
    rejects orientation-reversing input.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: float, b: float, c: float, d: float):
        det = a * d - b * c
        if not math.isfinite(det) or det <= 0.0:
            raise ValueError(f"matrix must have positive determinant, got {det}")
        s = math.sqrt(det)
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)
        object.__setattr__(self, "d", d / s)

    def __setattr__(self, name, value):
        raise AttributeError("Isometry is immutable")

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1.0, 0.0, 0.0, 1.0)

    def __repr__(self):
        return f"Isometry({self.a:.12g}, {self.b:.12g}, {self.c:.12g}, {self.d:.12g})"

    def trace(self) -> float:
        return self.a + self.d

    def is_hyperbolic(self, tol: float = 1e-12) -> bool:
        return abs(self.trace()) > 2.0 + tol

    def classify(self, tol: float = 1e-12) -> str:
        t = abs(self.trace())
        if t > 2.0 + tol:
            return "hyperbolic"
        if t < 2.0 - tol:
            return "elliptic"
        return "parabolic"

    def translation_length(self) -> float:
        t = abs(self.trace())
        if t <= 2.0:
            raise NotHyperbolicError(f"|trace| = {t} <= 2")
        return 2.0 * math.acosh(t / 2.0)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Isometry":
        return Isometry(self.d, -self.b, -self.c, self.a)

    def apply(self, p: Point) -> Point:
        # Im(Mz) = y / |cz+d|^2 keeps the image in the upper half-plane exactly
        cx_d = self.c * p.x + self.d
        den = cx_d * cx_d + (self.c * p.y) ** 2
        x = ((self.a * p.x + self.b) * cx_d + self.a * self.c * p.y * p.y) / den
        y = p.y / den
        return Point(x, y)

    def apply_ideal(self, t: float) -> float:
        if _is_inf(t):
            if self.c == 0.0:
                return INFINITY
            return self.a / self.c
        den = self.c * t + self.d
        if den == 0.0:
            return INFINITY
        return (self.a * t + self.b) / den

    def apply_geodesic(self, g: Geodesic) -> Geodesic:
        return Geodesic(self.apply_ideal(g.u), self.apply_ideal(g.v))

    def apply_segment(self, s: Segment) -> Segment:
        return Segment(self.apply_geodesic(s.carrier), self.apply(s.a), self.apply(s.b))

    def apply_strip(self, strip: "Strip") -> "Strip":
        return Strip(self.apply_geodesic(strip.axis), self.apply(strip.center), strip.width)

    def approx_eq(self, other: "Isometry", tol: float = TOL) -> bool:
        """Equality as Mobius maps, i.e. up to a global sign."""
        same = max(abs(self.a - other.a), abs(self.b - other.b),
                   abs(self.c - other.c), abs(self.d - other.d))
        flip = max(abs(self.a + other.a), abs(self.b + other.b),
                   abs(self.c + other.c), abs(self.d + other.d))
        return min(same, flip) <= tol


def vertical_to(g: Geodesic) -> Isometry:
    """An isometry sending the upward vertical axis (0 -> inf) to g (u -> v)."""
    u, v = g.u, g.v
    if _is_inf(u):
        return Isometry(-v, 1.0, -1.0, 0.0)
    if _is_inf(v):
        return Isometry(1.0, u, 0.0, 1.0)
    if v > u:
        return Isometry(v, u, 1.0, 1.0)
    return Isometry(v, -u, 1.0, -1.0)


def geodesic_through(p: Point, q: Point) -> Geodesic:
    """The geodesic through two distinct points, oriented from p toward q."""
    if p == q:
        raise ValueError("need two distinct points")
    dx = q.x - p.x
    if abs(dx) <= 1e-14 * max(1.0, abs(p.x), abs(q.x)):
        foot = 0.5 * (p.x + q.x)
        return Geodesic(foot, INFINITY) if q.y > p.y else Geodesic(INFINITY, foot)
    c = ((q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y)) / (2.0 * dx)
    r = math.hypot(p.x - c, p.y)
    return Geodesic(c - r, c + r) if p.x < q.x else Geodesic(c + r, c - r)


def point_at(L: Geodesic, s: float) -> Point:
    """The point of L at signed arclength s from its frame origin."""
    return vertical_to(L).apply(Point(0.0, math.exp(s)))


def point_along(L: Geodesic, p: Point, t: float) -> Point:
    """From a point p on L, move hyperbolic distance t in the direction of L.v."""
    frame = vertical_to(L)
    w = frame.inverse().apply(p)
    return frame.apply(Point(0.0, w.y * math.exp(t)))


def perpendicular_at(L: Geodesic, p: Point) -> Geodesic:
    """The geodesic through a point p of L perpendicular to L."""
    frame = vertical_to(L)
    w = frame.inverse().apply(p)
    return frame.apply_geodesic(Geodesic(-w.y, w.y))


def axis_of(M: Isometry) -> tuple[Geodesic, float]:
    """Axis and translation length of a hyperbolic isometry.

    The axis is oriented from the repelling toward the attracting fixed
    point, so translation by the returned length moves points toward v.
    """
    tr = M.trace()
    if abs(tr) <= 2.0 + 1e-12:
        raise NotHyperbolicError(f"|trace| = {abs(tr)} <= 2, no axis")
    length = 2.0 * math.acosh(abs(tr) / 2.0)
    sq = math.sqrt(tr * tr - 4.0)
    lam_att = (tr + math.copysign(sq, tr)) / 2.0
    lam_rep = 1.0 / lam_att
    scale = abs(M.a) + abs(M.b) + abs(M.c) + abs(M.d)
    if abs(M.c) <= 1e-15 * scale:
        att = INFINITY if abs(M.a) > abs(M.d) else M.b / (M.d - M.a)
        rep = M.b / (M.d - M.a) if _is_inf(att) else INFINITY
        return Geodesic(rep, att), length
    att = (lam_att - M.d) / M.c
    rep = (lam_rep - M.d) / M.c
    return Geodesic(rep, att), length


def translation_along(L: Geodesic, t: float) -> Isometry:
    """Translation along L by signed distance t (toward L.v for t > 0)."""
    if not math.isfinite(t):
        raise ValueError("translation distance must be finite")
    e = math.exp(t / 2.0)
    frame = vertical_to(L)
    return frame @ Isometry(e, 0.0, 0.0, 1.0 / e) @ frame.inverse()


def common_perpendicular(g1: Geodesic, g2: Geodesic) -> Segment:
    """The unique segment meeting two hyperparallel geodesics at right angles.

    Raises NotHyperparallelError when the geodesics intersect or share an
    ideal endpoint.
    """
    frame = vertical_to(g1)
    inv = frame.inverse()
    p = inv.apply_ideal(g2.u)
    q = inv.apply_ideal(g2.v)
    if _is_inf(p) or _is_inf(q):
        raise NotHyperparallelError("geodesics share an ideal endpoint")
    scale = max(1.0, abs(p), abs(q))
    if abs(p) <= 1e-12 * scale or abs(q) <= 1e-12 * scale:
        raise NotHyperparallelError("geodesics share an ideal endpoint")
    if p * q < 0.0:
        raise NotHyperparallelError("geodesics intersect")
    r = math.sqrt(p * q)
    # foot on g2, on the half-circle with endpoints p, q
    x2 = 2.0 * p * q / (p + q)
    y2 = r * abs(p - q) / abs(p + q)
    foot1 = frame.apply(Point(0.0, r))
    foot2 = frame.apply(Point(x2, y2))
    sign = 1.0 if p > 0 else -1.0
    carrier = frame.apply_geodesic(Geodesic(-sign * r, sign * r))
    return Segment(carrier, foot1, foot2)


def equidistant_project(L: Geodesic, g0: Geodesic, p: Point) -> Point:
    """Project p onto g0 along the curves equidistant from L.

    g0 must be perpendicular to L.  In the frame where L is the vertical
    axis the equidistant curves are Euclidean rays from the origin and the
    projection is z -> r z/|z| with r the frame radius of g0.
    """
    frame = vertical_to(L)
    inv = frame.inverse()
    a = inv.apply_ideal(g0.u)
    b = inv.apply_ideal(g0.v)
    if _is_inf(a) or _is_inf(b) or abs(a + b) > INCIDENCE_TOL * max(1.0, abs(a), abs(b)):
        raise NotPerpendicularError(f"geodesic with frame endpoints ({a}, {b}) is not perpendicular to L")
    r = 0.5 * (abs(a) + abs(b))
    w = inv.apply(p)
    m = math.hypot(w.x, w.y)
    return frame.apply(Point(r * w.x / m, r * w.y / m))


class Crossing(Enum):
    DISJOINT = "disjoint"
    CROSSES = "crosses"
    TANGENT = "tangent"


class Strip:
    """An eps-strip: the band between two hyperparallel geodesics.

    The strip is described by its axis L (the geodesic containing the core),
    the core midpoint m on L, and the width eps.  The bounding geodesics
    h1, h2 are perpendicular to L at distance eps/2 on either side of m; the
    core is the piece of L between them and has length eps.

    The normalized frame puts the axis on the vertical line and m at i.
    There the band is e^{-eps/2} <= |z| <= e^{eps/2}, the foliation by arcs
    equidistant from the core is by Euclidean rays from the origin, and the
    geodesics perpendicular to the axis are the half-circles |z| = const.
    """

    __slots__ = ("axis", "center", "width", "frame", "frame_inv", "h1", "h2")

    def __init__(self, axis: Geodesic, center: Point, width: float):
        if not (width > 0.0) or not math.isfinite(width):
            raise NonPositiveWidthError(f"strip width must be positive, got {width}")
        base = vertical_to(axis)
        w = base.inverse().apply(center)
        if abs(w.x) > INCIDENCE_TOL * max(1.0, w.y):
            raise ValueError("strip center must lie on the axis")
        s = math.sqrt(w.y)
        frame = base @ Isometry(s, 0.0, 0.0, 1.0 / s)
        r1 = math.exp(-width / 2.0)
        r2 = math.exp(width / 2.0)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "frame_inv", frame.inverse())
        object.__setattr__(self, "h1", frame.apply_geodesic(Geodesic(-r1, r1)))
        object.__setattr__(self, "h2", frame.apply_geodesic(Geodesic(-r2, r2)))

    def __setattr__(self, name, value):
        raise AttributeError("Strip is immutable")

    def __repr__(self):
        return f"Strip(axis={self.axis!r}, center={self.center!r}, width={self.width:.6g})"

    def core(self) -> Segment:
        lo = self.frame.apply(Point(0.0, math.exp(-self.width / 2.0)))
        hi = self.frame.apply(Point(0.0, math.exp(self.width / 2.0)))
        return Segment(self.axis, lo, hi)

    def radial(self, p: Point) -> float:
        """Signed leaf coordinate log|z| in the normalized frame.

        Zero on the middle leaf (the geodesic perpendicular to the axis at
        the center); |radial| = eps/2 on the bounding geodesics.
        """
        w = self.frame_inv.apply(p)
        return 0.5 * math.log(w.x * w.x + w.y * w.y)

    def _radial_ideal(self, t: float) -> float:
        s = self.frame_inv.apply_ideal(t)
        if _is_inf(s):
            return INFINITY
        if s == 0.0:
            return -INFINITY
        return math.log(abs(s))

    def radial_range(self, obj) -> tuple[float, float]:
        """Range of the leaf coordinate over a Segment or Geodesic.

        The leaf coordinate is monotone along any geodesic, so the range is
        the interval between the endpoint values.
        """
        if isinstance(obj, Segment):
            ua = self.radial(obj.a)
            ub = self.radial(obj.b)
        elif isinstance(obj, Geodesic):
            ua = self._radial_ideal(obj.u)
            ub = self._radial_ideal(obj.v)
        else:
            raise TypeError(f"expected Segment or Geodesic, got {type(obj).__name__}")
        return (ua, ub) if ua <= ub else (ub, ua)

    def collapse(self, p: Point) -> Point:
        """Collapse the strip along its equidistant leaves.

        Fixes the near side (|z| <= e^{-eps/2} in the frame), translates the
        far side by e^{-eps}, and sends each leaf arc inside the band to its
        endpoint on h1.  Continuous and 1-Lipschitz.
        """
        w = self.frame_inv.apply(p)
        r = math.hypot(w.x, w.y)
        half = self.width / 2.0
        u = math.log(r)
        if u <= -half:
            return p
        if u >= half:
            s = math.exp(-self.width)
            return self.frame.apply(Point(s * w.x, s * w.y))
        s = math.exp(-half) / r
        return self.frame.apply(Point(s * w.x, s * w.y))

    def crossing(self, obj, tol: float = TANGENT_TOL) -> Crossing:
        """Classify a segment or geodesic against the strip band.

        CROSSES when the object meets both open complementary half-planes;
        TANGENT when an endpoint value of the leaf coordinate sits on a
        bounding geodesic within tolerance; DISJOINT otherwise.
        """
        lo, hi = self.radial_range(obj)
        half = self.width / 2.0
        for val in (lo, hi):
            if abs(val - half) <= tol or abs(val + half) <= tol:
                return Crossing.TANGENT
        if lo < -half and hi > half:
            return Crossing.CROSSES
        return Crossing.DISJOINT

    def ideal_data(self) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
        """Ideal traces of the band: two boundary arcs, each (end, witness, end).

        The witness is an interior point of the arc (an ideal endpoint of
        the middle leaf), which pins down which arc of the circle is meant.
        """
        r1 = math.exp(-self.width / 2.0)
        r2 = math.exp(self.width / 2.0)
        f = self.frame.apply_ideal
        return ((f(r1), f(1.0), f(r2)), (f(-r1), f(-1.0), f(-r2)))


def strip_around(alpha: Segment, eps: float) -> Strip:
    """The eps-strip whose core crosses alpha perpendicularly at its midpoint."""
    if not (eps > 0.0) or not math.isfinite(eps):
        raise NonPositiveWidthError(f"strip width must be positive, got {eps}")
    m = alpha.midpoint()
    axis = perpendicular_at(alpha.carrier, m)
    return Strip(axis, m, eps)


def strip_collapse(strip: Strip, p: Point) -> Point:
    return strip.collapse(p)


def crossing(strip: Strip, obj) -> Crossing:
    return strip.crossing(obj)


def _circle_angle(t: float) -> float:
    """Angle coordinate on the ideal circle: 2*atan on R, pi at infinity."""
    if _is_inf(t):
        return math.pi
    return 2.0 * math.atan(t)


def _in_gap(theta: float, ga: float, gb: float, margin: float = 1e-12) -> bool:
    """Whether theta lies strictly inside the ccw arc from ga to gb."""
    span = (gb - ga) % (2.0 * math.pi)
    pos = (theta - ga) % (2.0 * math.pi)
    return margin < pos < span - margin


def strips_disjoint(s1: Strip, s2: Strip) -> bool:
    """Exact disjointness test for two strip bands.

    A band is the convex hull of its two ideal boundary arcs.  Two such
    hulls are disjoint iff the six ideal markers of one band (arc endpoints
    plus witnesses) fit strictly inside a single complementary gap of the
    other band's ideal trace.
    """
    (a1, w1, a2), (b1, w2, b2) = s1.ideal_data()
    # complementary gaps of s1: between the two arcs, on either side
    g1 = (_circle_angle(a1), _circle_angle(b1))
    g2 = (_circle_angle(b2), _circle_angle(a2))
    pts = []
    for arc in s2.ideal_data():
        pts.extend(_circle_angle(t) for t in arc)
    # traversal direction of each gap is pinned by the arcs on either side:
    # gap interiors are the arcs not containing the band's own witnesses
    own = (_circle_angle(w1), _circle_angle(w2))
    for ga, gb in (g1, g2):
        for orient in ((ga, gb), (gb, ga)):
            if any(_in_gap(t, *orient) for t in own):
                continue
            if all(_in_gap(t, *orient) for t in pts):
                return True
    return False
