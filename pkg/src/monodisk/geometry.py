"""Planar primitives: points, rigid motions, line/arc segments, closed contours.

Conventions used throughout the package:

* angles in radians, counterclockwise positive;
* an arc is stored as (center, radius, start angle, signed sweep) so that
  rotating it is exact parameter arithmetic;
* a contour is a closed chain of segments, normally traversed
  counterclockwise (positive signed area);
* tolerances are relative to the contour diameter ("scale"):
  1e-9 for geometric coincidence, 1e-12 for algebraic identities and
  1e-7 for signature quantization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotClosed

TWO_PI = 2.0 * math.pi

GEOM_REL_TOL = 1e-9
ALGEBRA_REL_TOL = 1e-12
SIGNATURE_REL_TOL = 1e-7


def _principal(angle: float) -> float:
    """Map an angle to (-pi, pi]."""
    a = math.fmod(angle, TWO_PI)
    if a <= -math.pi:
        a += TWO_PI
    elif a > math.pi:
        a -= TWO_PI
    return a


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)


def from_polar(r: float, angle: float, center: Point = Point(0.0, 0.0)) -> Point:
    return Point(center.x + r * math.cos(angle), center.y + r * math.sin(angle))


# ---------------------------------------------------------------------------
# isometries (and similarities, needed for unit-disk normalization)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Isometry:
    """Affine orthogonal map x -> M x + t with M = [[a, b], [c, d]].

    ``det`` is +1 for direct motions (rotations, translations) and -1 for
    reflections.  Constructed via the classmethods below; ``compose`` keeps
    the family closed.
    """

    a: float
    b: float
    c: float
    d: float
    tx: float
    ty: float

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @classmethod
    def rotation(cls, center: Point, angle: float) -> "Isometry":
        ca, sa = math.cos(angle), math.sin(angle)
        # t = c - M c
        tx = center.x - (ca * center.x - sa * center.y)
        ty = center.y - (sa * center.x + ca * center.y)
        return cls(ca, -sa, sa, ca, tx, ty)

    @classmethod
    def translation(cls, dx: float, dy: float) -> "Isometry":
        return cls(1.0, 0.0, 0.0, 1.0, dx, dy)

    @classmethod
    def reflection(cls, axis_point: Point, axis_angle: float) -> "Isometry":
        """Reflection across the line through ``axis_point`` at ``axis_angle``."""
        c2, s2 = math.cos(2.0 * axis_angle), math.sin(2.0 * axis_angle)
        px, py = axis_point.x, axis_point.y
        tx = px - (c2 * px + s2 * py)
        ty = py - (s2 * px - c2 * py)
        return cls(c2, s2, s2, -c2, tx, ty)

    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def is_direct(self) -> bool:
        return self.det() > 0.0

    @property
    def kind(self) -> str:
        if self.det() < 0.0:
            return "reflection"
        if abs(self.a - 1.0) < 1e-15 and abs(self.b) < 1e-15:
            if self.tx == 0.0 and self.ty == 0.0:
                return "identity"
            return "translation"
        return "rotation"

    def rotation_angle(self) -> float:
        """Rotation angle for direct isometries (0 for translations)."""
        return math.atan2(self.c, self.a)

    def __call__(self, p: Point) -> Point:
        return Point(self.a * p.x + self.b * p.y + self.tx,
                     self.c * p.x + self.d * p.y + self.ty)

    def apply_vector(self, v: Point) -> Point:
        return Point(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def compose(self, inner: "Isometry") -> "Isometry":
        """Return self o inner (apply ``inner`` first)."""
        a = self.a * inner.a + self.b * inner.c
        b = self.a * inner.b + self.b * inner.d
        c = self.c * inner.a + self.d * inner.c
        d = self.c * inner.b + self.d * inner.d
        tx = self.a * inner.tx + self.b * inner.ty + self.tx
        ty = self.c * inner.tx + self.d * inner.ty + self.ty
        return Isometry(a, b, c, d, tx, ty)

    def inverse(self) -> "Isometry":
        det = self.det()
        ia, ib, ic, id_ = self.d / det, -self.b / det, -self.c / det, self.a / det
        return Isometry(ia, ib, ic, id_,
                        -(ia * self.tx + ib * self.ty),
                        -(ic * self.tx + id_ * self.ty))


# ---------------------------------------------------------------------------
# segments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Line:
    p0: Point
    p1: Point

    def start(self) -> Point:
        return self.p0

    def end(self) -> Point:
        return self.p1

    def length(self) -> float:
        return self.p0.dist(self.p1)

    def reversed(self) -> "Line":
        return Line(self.p1, self.p0)

    def point_at(self, t: float) -> Point:
        return Point(self.p0.x + t * (self.p1.x - self.p0.x),
                     self.p0.y + t * (self.p1.y - self.p0.y))

    def tangent_start(self) -> float:
        return (self.p1 - self.p0).angle()

    def tangent_end(self) -> float:
        return (self.p1 - self.p0).angle()

    def transformed(self, g: Isometry) -> "Line":
        return Line(g(self.p0), g(self.p1))

    def scaled(self, factor: float, about: Point = Point(0.0, 0.0)) -> "Line":
        return Line(about + (self.p0 - about) * factor,
                    about + (self.p1 - about) * factor)

    def split_at(self, t: float) -> tuple["Line", "Line"]:
        mid = self.point_at(t)
        return Line(self.p0, mid), Line(mid, self.p1)


@dataclass(frozen=True)
class Arc:
    center: Point
    radius: float
    start_angle: float
    sweep: float  # signed, 0 < |sweep| < 2*pi

    def start(self) -> Point:
        return from_polar(self.radius, self.start_angle, self.center)

    def end(self) -> Point:
        return from_polar(self.radius, self.start_angle + self.sweep, self.center)

    def length(self) -> float:
        return abs(self.sweep) * self.radius

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.start_angle + self.sweep, -self.sweep)

    def point_at(self, t: float) -> Point:
        return from_polar(self.radius, self.start_angle + t * self.sweep, self.center)

    def angle_at(self, t: float) -> float:
        return self.start_angle + t * self.sweep

    def tangent_start(self) -> float:
        return self.start_angle + math.copysign(math.pi / 2.0, self.sweep)

    def tangent_end(self) -> float:
        return self.start_angle + self.sweep + math.copysign(math.pi / 2.0, self.sweep)

    def contains_angle(self, phi: float, angular_tol: float = 0.0) -> bool:
        """Whether the ray angle ``phi`` falls inside the swept range."""
        rel = (phi - self.start_angle) * math.copysign(1.0, self.sweep)
        rel = rel % TWO_PI
        if rel > TWO_PI - angular_tol:
            rel -= TWO_PI
        return -angular_tol <= rel <= abs(self.sweep) + angular_tol

    def param_of_angle(self, phi: float) -> float:
        rel = (phi - self.start_angle) * math.copysign(1.0, self.sweep)
        rel = rel % TWO_PI
        return rel / abs(self.sweep)

    def transformed(self, g: Isometry) -> "Arc":
        center = g(self.center)
        new_start_pt = g(self.start())
        start_angle = (new_start_pt - center).angle()
        sweep = self.sweep if g.is_direct() else -self.sweep
        return Arc(center, self.radius, start_angle, sweep)

    def scaled(self, factor: float, about: Point = Point(0.0, 0.0)) -> "Arc":
        return Arc(about + (self.center - about) * factor,
                   self.radius * factor, self.start_angle, self.sweep)

    def split_at(self, t: float) -> tuple["Arc", "Arc"]:
        w = self.sweep
        return (Arc(self.center, self.radius, self.start_angle, t * w),
                Arc(self.center, self.radius, self.start_angle + t * w, (1.0 - t) * w))


PathSegment = Line | Arc


def validate_segment(seg: PathSegment, scale: float = 1.0) -> None:
    if isinstance(seg, Line):
        if seg.length() <= 1e-12 * max(scale, 1.0):
            raise ValueError("degenerate line segment")
    else:
        if seg.radius <= 0.0:
            raise ValueError("arc radius must be positive")
        if not (0.0 < abs(seg.sweep) < TWO_PI):
            raise ValueError("arc sweep must satisfy 0 < |sweep| < 2*pi")


# ---------------------------------------------------------------------------
# segment intersections
# ---------------------------------------------------------------------------

def _dedupe(points: list[Point], tol: float) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if all(p.dist(q) > tol for q in out):
            out.append(p)
    return out


def _line_line(l1: Line, l2: Line, tol: float) -> list[Point]:
    u = l1.p1 - l1.p0
    v = l2.p1 - l2.p0
    w = l2.p0 - l1.p0
    denom = u.cross(v)
    lu, lv = u.norm(), v.norm()
    if abs(denom) <= tol * max(lu * lv, 1e-300):
        # parallel; collinear overlap reported via its endpoints
        if abs(w.cross(u)) > tol * max(lu, 1e-300):
            return []
        t0 = w.dot(u) / (lu * lu)
        t1 = (l2.p1 - l1.p0).dot(u) / (lu * lu)
        lo = max(0.0, min(t0, t1))
        hi = min(1.0, max(t0, t1))
        if hi < lo - tol / lu:
            return []
        pts = [l1.point_at(min(1.0, max(0.0, lo)))]
        if (hi - lo) * lu > tol:
            pts.append(l1.point_at(hi))
        return pts
    t = w.cross(v) / denom
    s = w.cross(u) / denom
    eps_t = tol / max(lu, 1e-300)
    eps_s = tol / max(lv, 1e-300)
    if -eps_t <= t <= 1.0 + eps_t and -eps_s <= s <= 1.0 + eps_s:
        return [l1.point_at(min(1.0, max(0.0, t)))]
    return []


def _line_arc(line: Line, arc: Arc, tol: float) -> list[Point]:
    u = line.p1 - line.p0
    w = line.p0 - arc.center
    a = u.dot(u)
    b = 2.0 * u.dot(w)
    c = w.dot(w) - arc.radius * arc.radius
    disc = b * b - 4.0 * a * c
    lu = math.sqrt(a)
    # tangency threshold in the discriminant's units
    tang = 4.0 * a * arc.radius * tol
    if disc < -tang:
        return []
    if disc <= tang:
        roots = [-b / (2.0 * a)]
    else:
        sq = math.sqrt(disc)
        roots = [(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
    eps_t = tol / max(lu, 1e-300)
    ang_tol = tol / arc.radius
    out = []
    for t in roots:
        if not (-eps_t <= t <= 1.0 + eps_t):
            continue
        pt = line.point_at(min(1.0, max(0.0, t)))
        phi = (pt - arc.center).angle()
        if arc.contains_angle(phi, ang_tol):
            out.append(pt)
    return _dedupe(out, tol)


def _arc_arc(a1: Arc, a2: Arc, tol: float) -> list[Point]:
    d = a1.center.dist(a2.center)
    if d <= tol and abs(a1.radius - a2.radius) <= tol:
        # same supporting circle: overlap endpoints, or isolated touch
        r = a1.radius
        ang_tol = tol / r
        pts = []
        for t in (0.0, 1.0):
            p = a1.point_at(t)
            if a2.contains_angle((p - a2.center).angle(), ang_tol):
                pts.append(p)
        for t in (0.0, 1.0):
            p = a2.point_at(t)
            if a1.contains_angle((p - a1.center).angle(), ang_tol):
                pts.append(p)
        return _dedupe(pts, tol)
    if d <= tol:
        return []
    r1, r2 = a1.radius, a2.radius
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    axis = (a2.center - a1.center) * (1.0 / d)
    perp = Point(-axis.y, axis.x)
    base = a1.center + axis * a
    if h2 <= max(r1, r2) * tol:
        candidates = [base]
    else:
        h = math.sqrt(h2)
        candidates = [base + perp * h, base - perp * h]
    out = []
    for pt in candidates:
        ok1 = a1.contains_angle((pt - a1.center).angle(), tol / r1)
        ok2 = a2.contains_angle((pt - a2.center).angle(), tol / r2)
        if ok1 and ok2:
            out.append(pt)
    return _dedupe(out, tol)


def segment_intersections(s1: PathSegment, s2: PathSegment,
                          tol: float = 1e-9) -> list[Point]:
    """All intersection points of two segments; a tangential touch once."""
    if isinstance(s1, Line) and isinstance(s2, Line):
        return _line_line(s1, s2, tol)
    if isinstance(s1, Line):
        return _line_arc(s1, s2, tol)
    if isinstance(s2, Line):
        return _line_arc(s2, s1, tol)
    return _arc_arc(s1, s2, tol)


def point_segment_distance(p: Point, seg: PathSegment) -> float:
    if isinstance(seg, Line):
        u = seg.p1 - seg.p0
        L2 = u.dot(u)
        if L2 == 0.0:
            return p.dist(seg.p0)
        t = (p - seg.p0).dot(u) / L2
        t = min(1.0, max(0.0, t))
        return p.dist(seg.point_at(t))
    d = p.dist(seg.center)
    phi = (p - seg.center).angle()
    if seg.contains_angle(phi):
        return abs(d - seg.radius)
    return min(p.dist(seg.start()), p.dist(seg.end()))


# ---------------------------------------------------------------------------
# contours
# ---------------------------------------------------------------------------

class Contour:
    """A closed chain of segments (each segment's end is the next one's start)."""

    __slots__ = ("segments", "_scale")

    def __init__(self, segments: Sequence[PathSegment]):
        if not segments:
            raise ValueError("contour needs at least one segment")
        self.segments: tuple[PathSegment, ...] = tuple(segments)
        self._scale: float | None = None

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    # -- basic metrics ------------------------------------------------------

    def scale(self) -> float:
        """Diameter estimate (bounding-box diagonal), cached."""
        if self._scale is None:
            xs, ys = [], []
            for seg in self.segments:
                for p in (seg.start(), seg.end()):
                    xs.append(p.x)
                    ys.append(p.y)
                if isinstance(seg, Arc):
                    for quad in range(4):
                        phi = quad * math.pi / 2.0
                        if seg.contains_angle(phi):
                            p = from_polar(seg.radius, phi, seg.center)
                            xs.append(p.x)
                            ys.append(p.y)
            self._scale = math.hypot(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
        return self._scale

    def perimeter(self) -> float:
        return sum(seg.length() for seg in self.segments)

    def vertices(self) -> list[Point]:
        return [seg.start() for seg in self.segments]

    def is_closed(self, rel_tol: float = GEOM_REL_TOL) -> bool:
        tol = rel_tol * self.scale()
        n = len(self.segments)
        return all(self.segments[i].end().dist(self.segments[(i + 1) % n].start()) <= tol
                   for i in range(n))

    def require_closed(self) -> None:
        if not self.is_closed():
            raise NotClosed("contour is not closed")

    # -- structural transforms ----------------------------------------------

    def reversed(self) -> "Contour":
        return Contour([seg.reversed() for seg in reversed(self.segments)])

    def transformed(self, g: Isometry) -> "Contour":
        return Contour([seg.transformed(g) for seg in self.segments])

    def scaled(self, factor: float, about: Point = Point(0.0, 0.0)) -> "Contour":
        return Contour([seg.scaled(factor, about) for seg in self.segments])

    def oriented_ccw(self) -> "Contour":
        return self if contour_area(self) >= 0.0 else self.reversed()

    def sample_points(self, per_segment: int = 16) -> list[Point]:
        pts = []
        for seg in self.segments:
            for i in range(per_segment):
                pts.append(seg.point_at(i / per_segment))
        return pts


def apply_isometry(g: Isometry, c: Contour) -> Contour:
    """Image of a contour under an isometry (reflection negates arc sweeps)."""
    return c.transformed(g)


def contour_area(c: Contour) -> float:
    """Signed area; positive for counterclockwise traversal.

    Green's theorem with a closed form per segment: the polygon shoelace
    term of the chord plus, for arcs, the circular-segment correction
    r^2 (sweep - sin sweep) / 2.
    """
    c.require_closed()
    total = 0.0
    for seg in c.segments:
        a, b = seg.start(), seg.end()
        total += 0.5 * (a.x * b.y - b.x * a.y)
        if isinstance(seg, Arc):
            total += 0.5 * seg.radius * seg.radius * (seg.sweep - math.sin(seg.sweep))
    return total


def contour_is_simple(c: Contour, tol: float | None = None) -> tuple[bool, Point | None]:
    """Check that no two non-adjacent segments meet and that adjacent ones
    meet only at their shared endpoint.  Returns (ok, first violation point).
    """
    c.require_closed()
    if tol is None:
        tol = GEOM_REL_TOL * c.scale()
    segs = c.segments
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            pts = segment_intersections(segs[i], segs[j], tol)
            if not pts:
                continue
            shared = []
            if j == i + 1:
                shared.append(segs[i].end())
            if i == 0 and j == n - 1:
                shared.append(segs[j].end())
            if j == i + 1 or (i == 0 and j == n - 1):
                # two-segment contours share both endpoints
                if n == 2:
                    shared = [segs[0].start(), segs[0].end()]
                for p in pts:
                    if all(p.dist(s) > 3.0 * tol for s in shared):
                        return False, p
            else:
                return False, pts[0]
    return True, None


class Location:
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _winding_increment(seg: PathSegment, pt: Point) -> float:
    """Continuous change of arg(z - pt) along the segment (pt off the segment)."""
    a, b = seg.start(), seg.end()
    va, vb = a - pt, b - pt
    if isinstance(seg, Line):
        return math.atan2(va.cross(vb), va.dot(vb))
    d = pt.dist(seg.center)
    delta = vb.angle() - va.angle()
    if d >= seg.radius:
        # the whole circle subtends < pi from an exterior point
        return _principal(delta)
    # interior point: arg moves monotonically with the sweep direction
    if seg.sweep > 0.0:
        return delta % TWO_PI
    return -((-delta) % TWO_PI)


def winding_number(c: Contour, pt: Point) -> int:
    total = sum(_winding_increment(seg, pt) for seg in c.segments)
    return round(total / TWO_PI)


def point_location(pt: Point, c: Contour, band_rel: float = GEOM_REL_TOL) -> str:
    """Classify a point against a closed simple contour by winding number.

    Points within ``band_rel * scale`` of the boundary report Boundary.
    """
    c.require_closed()
    band = band_rel * c.scale()
    if min(point_segment_distance(pt, seg) for seg in c.segments) <= band:
        return Location.BOUNDARY
    return Location.INSIDE if winding_number(c, pt) != 0 else Location.OUTSIDE


# ---------------------------------------------------------------------------
# signatures and congruence
# ---------------------------------------------------------------------------

def _segment_token(seg: PathSegment) -> tuple:
    if isinstance(seg, Line):
        return ("L", seg.length(), 0.0, 0)
    return ("A", seg.radius, abs(seg.sweep), 1 if seg.sweep > 0 else -1)


def _turn_angles(c: Contour) -> list[float]:
    n = len(c.segments)
    turns = []
    for i in range(n):
        t_out = c.segments[(i + 1) % n].tangent_start()
        t_in = c.segments[i].tangent_end()
        turns.append(_principal(t_out - t_in))
    return turns


def _signature_sequences(c: Contour) -> list[list[tuple]]:
    """The four traversal/mirror variants of the token sequence.

    Entry i of a sequence is (kind, length_or_radius, |sweep|, sweep_sign, turn)
    for segment i followed by the turn into segment i+1.
    """
    tokens = [_segment_token(seg) for seg in c.segments]
    turns = _turn_angles(c)
    n = len(tokens)

    def flip(tok: tuple) -> tuple:
        return (tok[0], tok[1], tok[2], -tok[3])

    fwd = [tokens[i] + (turns[i],) for i in range(n)]
    mir = [flip(tokens[i]) + (-turns[i],) for i in range(n)]
    bwd = [flip(tokens[n - 1 - j]) + (-turns[(n - 2 - j) % n],) for j in range(n)]
    bwd_mir = [tokens[n - 1 - j] + (turns[(n - 2 - j) % n],) for j in range(n)]
    return [fwd, mir, bwd, bwd_mir]


def _quantize_sequence(seq: list[tuple], scale: float) -> tuple:
    q_len = SIGNATURE_REL_TOL * scale
    q_ang = SIGNATURE_REL_TOL
    out = []
    for kind, metric, asweep, sign, turn in seq:
        out.append((kind, round(metric / q_len), round(asweep / q_ang),
                    sign, round(turn / q_ang)))
    return tuple(out)


def contour_signature(c: Contour) -> tuple:
    """Canonical congruence-invariant signature.

    Invariant under rotation, translation, reflection, traversal reversal
    and cyclic relabeling; quantized at 1e-7 relative for hashing.
    """
    c.require_closed()
    # perimeter is exactly isometry-invariant, unlike the bounding box
    scale = c.perimeter()
    best = None
    for seq in _signature_sequences(c):
        q = _quantize_sequence(seq, scale)
        n = len(q)
        for s in range(n):
            cand = q[s:] + q[:s]
            if best is None or cand < best:
                best = cand
    return best


def _match_sequences(seq1: list[tuple], seq2: list[tuple], shift: int,
                     len_tol: float, ang_tol: float) -> bool:
    n = len(seq1)
    for i in range(n):
        k1, m1, w1, s1, t1 = seq1[i]
        k2, m2, w2, s2, t2 = seq2[(i + shift) % n]
        if k1 != k2 or s1 != s2:
            return False
        if abs(m1 - m2) > len_tol or abs(w1 - w2) > ang_tol or abs(t1 - t2) > ang_tol:
            return False
    return True


def _fit_direct_isometry(src: list[Point], dst: list[Point]) -> Isometry:
    """Least-squares rotation+translation taking src onto dst (2-D Procrustes)."""
    n = len(src)
    sx = sum(p.x for p in src) / n
    sy = sum(p.y for p in src) / n
    dx = sum(p.x for p in dst) / n
    dy = sum(p.y for p in dst) / n
    num = den = 0.0
    for p, q in zip(src, dst):
        px, py = p.x - sx, p.y - sy
        qx, qy = q.x - dx, q.y - dy
        num += px * qy - py * qx
        den += px * qx + py * qy
    theta = math.atan2(num, den)
    rot = Isometry.rotation(Point(0.0, 0.0), theta)
    moved = rot(Point(sx, sy))
    return Isometry.translation(dx - moved.x, dy - moved.y).compose(rot)


def _correspondence_points(c: Contour) -> list[Point]:
    pts = []
    for seg in c.segments:
        pts.append(seg.start())
        pts.append(seg.point_at(0.5))
    return pts


def congruent(c1: Contour, c2: Contour,
              direct_only: bool = False) -> tuple[bool, Isometry | None]:
    """Decide congruence (reflections included unless ``direct_only``).

    Signature alignment proposes a vertex correspondence; an explicit
    best-fit isometry then has to reproduce ``c2`` from ``c1`` with max
    deviation below 1e-7 * scale.  Returns the witnessing isometry.
    """
    c1.require_closed()
    c2.require_closed()
    if len(c1) != len(c2):
        return False, None
    scale = max(c1.scale(), c2.scale())
    if abs(abs(contour_area(c1)) - abs(contour_area(c2))) > 1e-6 * scale * scale:
        return False, None
    a = c1.oriented_ccw()
    len_tol = 1e-6 * scale
    ang_tol = 1e-6
    verify_tol = SIGNATURE_REL_TOL * scale
    n = len(a)
    seq_a = _signature_sequences(a)[0]

    candidates = [(c2.oriented_ccw(), False)]
    if not direct_only:
        mirror = Isometry.reflection(Point(0.0, 0.0), 0.0)
        candidates.append((c2.transformed(mirror).oriented_ccw(), True))

    for b, mirrored in candidates:
        seq_b = _signature_sequences(b)[0]
        pts_b = _correspondence_points(b)
        pts_a = _correspondence_points(a)
        for shift in range(n):
            if not _match_sequences(seq_a, seq_b, shift, len_tol, ang_tol):
                continue
            dst = [pts_b[(2 * shift + i) % (2 * n)] for i in range(2 * n)]
            g = _fit_direct_isometry(pts_a, dst)
            if max(g(p).dist(q) for p, q in zip(pts_a, dst)) <= verify_tol:
                witness = g
                if mirrored:
                    witness = Isometry.reflection(Point(0.0, 0.0), 0.0).compose(g)
                # orientation fixes may have reversed the stored traversals;
                # the witness maps c1's points onto c2's either way
                if _maps_onto(c1, c2, witness, verify_tol):
                    return True, witness
    return False, None


def _maps_onto(c1: Contour, c2: Contour, g: Isometry, tol: float) -> bool:
    image = c1.transformed(g)
    for p in image.sample_points(per_segment=4):
        if min(point_segment_distance(p, seg) for seg in c2.segments) > tol:
            return False
    return True


def contours_coincide(c1: Contour, c2: Contour, tol: float,
                      per_segment: int = 8) -> bool:
    """Whether two contours describe the same point set (in place)."""
    if abs(abs(contour_area(c1)) - abs(contour_area(c2))) > tol * max(c1.scale(), 1.0):
        return False
    for p in c1.sample_points(per_segment):
        if min(point_segment_distance(p, seg) for seg in c2.segments) > tol:
            return False
    for p in c2.sample_points(per_segment):
        if min(point_segment_distance(p, seg) for seg in c1.segments) > tol:
            return False
    return True


def contour_centroid(c: Contour, per_segment: int = 64) -> Point:
    """Boundary-sampled polygon centroid.

    Parameter-uniform sampling makes the estimate exactly equivariant under
    isometries, which is all the tile-matching code needs.
    """
    pts = c.sample_points(per_segment)
    n = len(pts)
    a_sum = cx = cy = 0.0
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        w = p.x * q.y - q.x * p.y
        a_sum += w
        cx += (p.x + q.x) * w
        cy += (p.y + q.y) * w
    if abs(a_sum) < 1e-300:
        return Point(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)
    return Point(cx / (3.0 * a_sum), cy / (3.0 * a_sum))


# ---------------------------------------------------------------------------
# vectorized helpers (validation plumbing)
# ---------------------------------------------------------------------------

def batch_segment_distance(seg: PathSegment, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    if isinstance(seg, Line):
        ux, uy = seg.p1.x - seg.p0.x, seg.p1.y - seg.p0.y
        L2 = ux * ux + uy * uy
        t = ((xs - seg.p0.x) * ux + (ys - seg.p0.y) * uy) / L2
        t = np.clip(t, 0.0, 1.0)
        return np.hypot(xs - (seg.p0.x + t * ux), ys - (seg.p0.y + t * uy))
    dx, dy = xs - seg.center.x, ys - seg.center.y
    d = np.hypot(dx, dy)
    phi = np.arctan2(dy, dx)
    rel = (phi - seg.start_angle) * math.copysign(1.0, seg.sweep)
    rel = np.mod(rel, TWO_PI)
    on_arc = rel <= abs(seg.sweep)
    ring = np.abs(d - seg.radius)
    s, e = seg.start(), seg.end()
    ends = np.minimum(np.hypot(xs - s.x, ys - s.y), np.hypot(xs - e.x, ys - e.y))
    return np.where(on_arc, ring, ends)


def batch_boundary_distance(c: Contour, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    dist = batch_segment_distance(c.segments[0], xs, ys)
    for seg in c.segments[1:]:
        np.minimum(dist, batch_segment_distance(seg, xs, ys), out=dist)
    return dist


def batch_winding(c: Contour, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Winding numbers for many points at once (points assumed off-boundary)."""
    total = np.zeros_like(xs)
    for seg in c.segments:
        a, b = seg.start(), seg.end()
        vax, vay = a.x - xs, a.y - ys
        vbx, vby = b.x - xs, b.y - ys
        if isinstance(seg, Line):
            total += np.arctan2(vax * vby - vay * vbx, vax * vbx + vay * vby)
            continue
        d = np.hypot(xs - seg.center.x, ys - seg.center.y)
        delta = np.arctan2(vby, vbx) - np.arctan2(vay, vax)
        outside = np.arctan2(np.sin(delta), np.cos(delta))
        if seg.sweep > 0.0:
            inside = np.mod(delta, TWO_PI)
        else:
            inside = -np.mod(-delta, TWO_PI)
        total += np.where(d >= seg.radius, outside, inside)
    return np.rint(total / TWO_PI).astype(int)
