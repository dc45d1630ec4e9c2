"""Construction and verification of n-wedges.

An n-wedge (n odd, >= 3) is a tile generated at two of its vertices at once:
rotating one of its sides by pi/n about either generator reproduces the
other side, so 2n copies tile a disk around each generator.  In canonical
coordinates the generators sit at p = (-1, 0) and q = (1, 0).

The boundary is assembled from an orbit construction.  With
``alpha_p`` / ``beta_q`` the counterclockwise rotations by pi/n about p / q,
the base unit

    E0 = [q -> r_p] + outer arc about p (sweep pi/n) + [alpha_p(r_p) -> alpha_p(q)]

is swept along the alternating-rotation orbit of q, giving the side path

    eta = [r_p -> q] + sum_j (beta_q o alpha_p)^j o beta_q (E0),

which runs from the groove tip r_p through the vertex chain to p.  The
closed boundary is eta, its image alpha_p(eta), and the outer arc rho_p.
Straight groove legs degenerate to nothing at groove length zero; custom
(asymmetric) grooves replace them with an arbitrary simple path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    GrooveOutOfRange,
    InadmissibleEndpoint,
    InvalidN,
    NotSymmetric,
    PathCollision,
    SelfIntersection,
    SubdivisionCollision,
)
from .geometry import (
    Arc,
    Contour,
    Isometry,
    Line,
    PathSegment,
    Point,
    contour_area,
    contour_is_simple,
    congruent,
    point_segment_distance,
    segment_intersections,
)

P_CANON = Point(-1.0, 0.0)
Q_CANON = Point(1.0, 0.0)


def _require_odd_n(n: int) -> None:
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidN(f"need an odd integer n >= 3, got {n!r}")


# ---------------------------------------------------------------------------
# vertex chain and critical locus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexConfiguration:
    """Orbit data for the two generators of an n-wedge.

    ``chain`` is the alternating-rotation orbit of q ending at p
    (apply alpha_p first, then beta_q, repeatedly); ``mirror_chain`` is its
    image under alpha_p.  Each orbit lies on a circle of radius
    1/cos(pi/2n) through p and q; the two circle centers are c_minus and
    c_plus = (0, tan(pi/2n)) respectively.
    """

    n: int
    p: Point
    q: Point
    alpha: float
    chain: tuple[Point, ...]
    mirror_chain: tuple[Point, ...]
    c_plus: Point
    c_minus: Point

    @property
    def m(self) -> int:
        return (self.n - 1) // 2


def vertex_chain(n: int) -> VertexConfiguration:
    _require_odd_n(n)
    alpha = math.pi / n
    alpha_p = Isometry.rotation(P_CANON, alpha)
    beta_q = Isometry.rotation(Q_CANON, alpha)
    step = beta_q.compose(alpha_p)
    m = (n - 1) // 2
    chain = [Q_CANON]
    for _ in range(m):
        chain.append(step(chain[-1]))
    mirror = [alpha_p(w) for w in chain]
    cy = math.sin(alpha) / (math.cos(alpha) + 1.0)  # == tan(pi/2n)
    return VertexConfiguration(n=n, p=P_CANON, q=Q_CANON, alpha=alpha,
                               chain=tuple(chain), mirror_chain=tuple(mirror),
                               c_plus=Point(0.0, cy), c_minus=Point(0.0, -cy))


@dataclass(frozen=True)
class CriticalLocus:
    """Admissible region for the groove tip attached to q.

    The region is an open circular sector slice: inside the cone of
    half-angle pi/2n around the outward ray from q, and closer to p than
    the critical radius R = 2*sqrt(5 - 4*cos(pi/n)).  On the symmetric ray
    the admissible groove length is t in [0, R - 2).
    """

    n: int
    ray_angle: float
    R: float
    t_max_symmetric: float

    def admissible(self, candidate: Point) -> bool:
        v = candidate - Q_CANON
        if v.norm() == 0.0:
            return True  # zero groove
        if abs(v.angle()) >= self.ray_angle:
            return False
        return candidate.dist(P_CANON) < self.R


def critical_locus(n: int) -> CriticalLocus:
    _require_odd_n(n)
    # |alpha_q(p) - alpha_p(q)| = |2 - 4 e^{i pi/n}| = 2 sqrt(5 - 4 cos(pi/n))
    R = 2.0 * math.sqrt(5.0 - 4.0 * math.cos(math.pi / n))
    return CriticalLocus(n=n, ray_angle=math.pi / (2 * n), R=R,
                         t_max_symmetric=R - 2.0)


# ---------------------------------------------------------------------------
# groove profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetricGroove:
    """Straight groove along the p-q axis, length t_normalized * t_max."""

    t_normalized: float
    length: float = 0.0  # absolute, filled in by the builder


@dataclass(frozen=True)
class CustomGroove:
    """Free-form groove: a simple open path from q out to the groove tip r_p."""

    path: tuple[PathSegment, ...]
    length: float = 0.0  # |r_p - q|, filled in by the builder

    def endpoint(self) -> Point:
        return self.path[-1].end()


GrooveProfile = SymmetricGroove | CustomGroove


# ---------------------------------------------------------------------------
# the wedge itself
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Wedge:
    config: VertexConfiguration
    groove: GrooveProfile
    boundary: Contour
    eta: tuple[PathSegment, ...]  # side path, r_p -> p
    disk_radius: float
    groove_tip: Point = field(default=Q_CANON)

    @property
    def n(self) -> int:
        return self.config.n

    def is_symmetric(self) -> bool:
        return isinstance(self.groove, SymmetricGroove)


def _path_transformed(path: list[PathSegment], g: Isometry) -> list[PathSegment]:
    return [seg.transformed(g) for seg in path]


def _path_reversed(path: list[PathSegment]) -> list[PathSegment]:
    return [seg.reversed() for seg in reversed(path)]


def _build_wedge(n: int, groove_path: list[PathSegment], groove: GrooveProfile,
                 validate: bool) -> Wedge:
    """Shared orbit construction.  ``groove_path`` runs q -> r_p (may be empty)."""
    config = vertex_chain(n)
    alpha = config.alpha
    alpha_p = Isometry.rotation(P_CANON, alpha)
    beta_q = Isometry.rotation(Q_CANON, alpha)

    r_p = groove_path[-1].end() if groove_path else Q_CANON
    disk_radius = r_p.dist(P_CANON)
    rho_start = (r_p - P_CANON).angle()
    rho_p = Arc(P_CANON, disk_radius, rho_start, alpha)

    e0: list[PathSegment] = list(groove_path) + [rho_p] + \
        _path_transformed(_path_reversed(groove_path), alpha_p)

    eta: list[PathSegment] = _path_reversed(groove_path)
    g = beta_q
    step = beta_q.compose(alpha_p)
    for _ in range(config.m):
        eta.extend(_path_transformed(e0, g))
        g = step.compose(g)

    boundary = Contour([rho_p]
                       + _path_transformed(eta, alpha_p)
                       + _path_reversed(eta))

    wedge = Wedge(config=config, groove=groove, boundary=boundary,
                  eta=tuple(eta), disk_radius=disk_radius, groove_tip=r_p)

    if validate:
        if not boundary.is_closed():
            raise SelfIntersection("wedge boundary failed to close")
        ok, witness = contour_is_simple(boundary)
        if not ok:
            raise SelfIntersection(f"wedge boundary self-intersects near {witness}")
        expect = math.pi * disk_radius * disk_radius / (2 * n)
        if abs(contour_area(boundary) - expect) > 1e-9 * expect:
            raise SelfIntersection("wedge area deviates from disk_area/2n")
    return wedge


def build_symmetric_wedge(n: int, t_normalized: float, validate: bool = True) -> Wedge:
    """Canonical symmetric n-wedge with groove length t_normalized * t_max."""
    _require_odd_n(n)
    if validate and not (0.0 <= t_normalized < 1.0):
        raise GrooveOutOfRange(f"t_normalized must lie in [0, 1), got {t_normalized}")
    locus = critical_locus(n)
    t = t_normalized * locus.t_max_symmetric
    groove_path: list[PathSegment] = []
    if t > 0.0:
        groove_path.append(Line(Q_CANON, Point(1.0 + t, 0.0)))
    groove = SymmetricGroove(t_normalized=t_normalized, length=t)
    return _build_wedge(n, groove_path, groove, validate)


def _segments_coincide(s1: PathSegment, s2: PathSegment, tol: float) -> bool:
    """Same unoriented curve?"""
    if isinstance(s1, Line) != isinstance(s2, Line):
        return False
    a1, b1 = s1.start(), s1.end()
    a2, b2 = s2.start(), s2.end()
    ends_match = (a1.dist(a2) <= tol and b1.dist(b2) <= tol) or \
                 (a1.dist(b2) <= tol and b1.dist(a2) <= tol)
    if not ends_match:
        return False
    if isinstance(s1, Arc):
        return (s1.center.dist(s2.center) <= tol
                and abs(s1.radius - s2.radius) <= tol
                and abs(abs(s1.sweep) - abs(s2.sweep)) <= tol / max(s1.radius, 1e-12))
    return True


def _copies_interior_disjoint(boundary: Contour, center: Point, step_angle: float,
                              copies: int, tol: float) -> Point | None:
    """Check the rotational orbit of ``boundary`` for transversal crossings.

    Contact along coinciding whole segments and isolated vertex-vertex
    touches is what a valid tiling produces; anything else is returned as
    a witness point.
    """
    segs = list(boundary.segments)
    verts = [s.start() for s in segs] + [s.end() for s in segs]
    for j in range(1, copies):
        g = Isometry.rotation(center, j * step_angle)
        other = [s.transformed(g) for s in segs]
        overts = [g(v) for v in verts]
        for s1 in segs:
            for s2 in other:
                pts = segment_intersections(s1, s2, tol)
                if not pts:
                    continue
                if _segments_coincide(s1, s2, tol):
                    continue
                for pt in pts:
                    near_v1 = any(pt.dist(v) <= 3 * tol for v in verts)
                    near_v2 = any(pt.dist(v) <= 3 * tol for v in overts)
                    if not (near_v1 and near_v2):
                        return pt
    return None


def build_asymmetric_wedge(n: int, groove: CustomGroove, validate: bool = True) -> Wedge:
    """n-wedge whose groove follows a caller-supplied simple path from q."""
    _require_odd_n(n)
    path = list(groove.path)
    if not path:
        raise InadmissibleEndpoint("custom groove path is empty")
    tol = 1e-9 * max(4.0, max(seg.length() for seg in path) * 4)
    if path[0].start().dist(Q_CANON) > tol:
        raise InadmissibleEndpoint("custom groove must start at q = (1, 0)")
    for a, b in zip(path, path[1:]):
        if a.end().dist(b.start()) > tol:
            raise InadmissibleEndpoint("custom groove path is not connected")
    tip = path[-1].end()
    locus = critical_locus(n)
    if not locus.admissible(tip):
        raise InadmissibleEndpoint(
            f"groove tip {tip} outside the admissible cone/radius for n={n}")
    # the path itself must be simple
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            pts = segment_intersections(path[i], path[j], tol)
            allowed = [path[i].end()] if j == i + 1 else []
            for pt in pts:
                if all(pt.dist(al) > 3 * tol for al in allowed):
                    raise InadmissibleEndpoint("custom groove path self-intersects")

    groove = CustomGroove(path=tuple(path), length=tip.dist(Q_CANON))
    wedge = _build_wedge(n, path, groove, validate=False)
    if validate:
        if not wedge.boundary.is_closed():
            raise PathCollision("wedge boundary failed to close")
        ok, witness = contour_is_simple(wedge.boundary)
        if not ok:
            raise PathCollision(f"groove images collide near {witness}")
        bad = _copies_interior_disjoint(wedge.boundary, P_CANON, math.pi / n, 2 * n,
                                        1e-9 * wedge.boundary.scale())
        if bad is not None:
            raise PathCollision(f"rotated copies overlap near {bad}")
    return wedge


# ---------------------------------------------------------------------------
# radial-generation verification
# ---------------------------------------------------------------------------

def _paths_equal(path1: list[PathSegment], path2: list[PathSegment],
                 tol: float, samples: int = 64) -> bool:
    """Pointwise equality of two open paths (either traversal direction)."""
    def probe(path, reverse):
        pts = []
        seq = list(reversed(path)) if reverse else path
        for seg in seq:
            for i in range(samples + 1):
                t = i / samples
                pts.append(seg.point_at(1.0 - t if reverse else t))
        return pts

    base = probe(path1, False)
    for reverse in (False, True):
        cand = probe(path2, reverse)
        if len(cand) != len(base):
            continue
        if all(p.dist(q) <= tol for p, q in zip(base, cand)):
            return True
    return False


def radially_generated_about(contour: Contour, center: Point, angle: float,
                             tol_rel: float = 1e-9) -> bool:
    """Does ``contour`` decompose as side + rotated side + arc about ``center``?

    Finds the boundary arc centered at ``center``, splits the remaining
    path at ``center`` and checks that rotating one half by ``angle``
    (either direction) reproduces the other, sampled pointwise.
    """
    scale = contour.scale()
    tol = tol_rel * scale * 10
    segs = list(contour.segments)
    arc_idx = [i for i, s in enumerate(segs)
               if isinstance(s, Arc) and s.center.dist(center) <= tol]
    if len(arc_idx) != 1:
        return False
    i = arc_idx[0]
    rest = segs[i + 1:] + segs[:i]  # open path from arc end to arc start
    split = None
    for j, seg in enumerate(rest):
        if seg.start().dist(center) <= tol:
            split = j
            break
    if split is None or split == 0:
        return False
    side_a = rest[:split]     # arc end -> center
    side_b = rest[split:]     # center -> arc start
    for direction in (angle, -angle):
        g = Isometry.rotation(center, direction)
        if _paths_equal([s.transformed(g) for s in side_a], side_b, tol):
            return True
    return False


def verify_radial_generation(w: Wedge) -> dict[str, bool]:
    """Report whether the wedge is radially generated about each generator."""
    return {
        "about_p": radially_generated_about(w.boundary, w.config.p, w.config.alpha),
        "about_q": radially_generated_about(w.boundary, w.config.q, w.config.alpha),
    }


# ---------------------------------------------------------------------------
# splitting and subdividing
# ---------------------------------------------------------------------------

def _axis_crossings(boundary: Contour, tol: float) -> list[tuple[int, float, Point]]:
    """Crossings of the boundary with the axis x = 0: (segment index, param, point)."""
    top = boundary.scale() * 2.0
    axis = Line(Point(0.0, -top), Point(0.0, top))
    hits: list[tuple[int, float, Point]] = []
    for i, seg in enumerate(boundary.segments):
        for pt in segment_intersections(seg, axis, tol):
            if isinstance(seg, Line):
                u = seg.p1 - seg.p0
                t = (pt - seg.p0).dot(u) / u.dot(u)
            else:
                t = seg.param_of_angle((pt - seg.center).angle())
            hits.append((i, min(1.0, max(0.0, t)), pt))
    return hits


def _split_contour_at(boundary: Contour, cut_a: tuple[int, float, Point],
                      cut_b: tuple[int, float, Point],
                      bridge: bool) -> tuple[Contour, Contour]:
    """Split a closed contour at two boundary points.

    When ``bridge`` is set the halves are closed with straight segments
    between the cut points; otherwise the points must coincide (pinch).
    """
    segs = list(boundary.segments)
    n = len(segs)
    (ia, ta, pa), (ib, tb, pb) = cut_a, cut_b
    if (ib, tb) < (ia, ta):
        (ia, ta, pa), (ib, tb, pb) = (ib, tb, pb), (ia, ta, pa)

    eps = 1e-12

    def piece(i0, t0, i1, t1) -> list[PathSegment]:
        """Walk forward from (i0, t0) to (i1, t1)."""
        out: list[PathSegment] = []
        if i0 == i1 and t0 <= t1:
            if t1 - t0 > eps:
                seg = segs[i0]
                if t0 > eps:
                    seg = seg.split_at(t0)[1]
                    t1 = (t1 - t0) / (1.0 - t0)
                if t1 < 1.0 - eps:
                    seg = seg.split_at(t1)[0]
                out.append(seg)
            return out
        first = segs[i0]
        if t0 < 1.0 - eps:
            out.append(first.split_at(t0)[1] if t0 > eps else first)
        i = (i0 + 1) % n
        while i != i1:
            out.append(segs[i])
            i = (i + 1) % n
        last = segs[i1]
        if t1 > eps:
            out.append(last.split_at(t1)[0] if t1 < 1.0 - eps else last)
        return out

    half1 = piece(ia, ta, ib, tb)
    half2 = piece(ib, tb, ia, ta)
    if bridge:
        half1.append(Line(pb, pa))
        half2.append(Line(pa, pb))
    return Contour(half1), Contour(half2)


def split_wedge_symmetric(w: Wedge) -> tuple[Contour, Contour]:
    """Halve a symmetric wedge along its (unique) symmetry axis x = 0.

    The cut runs from the on-axis notch vertex to the crossing of the axis
    with the opposite side; the halves are mirror congruent.
    """
    if not w.is_symmetric():
        raise NotSymmetric("split requires a symmetric groove")
    tol = 1e-9 * w.boundary.scale() * 4
    hits = _axis_crossings(w.boundary, tol)
    # cluster coordinates
    distinct: list[tuple[int, float, Point]] = []
    for h in hits:
        if all(h[2].dist(d[2]) > 10 * tol for d in distinct):
            distinct.append(h)
    if len(distinct) == 1:
        # pinch limit: the notch apex rests on the opposite side, so the
        # touch point occurs twice along the contour (as the apex junction
        # and as an interior point of the far segment); split between the
        # two parametric positions, no bridging cut needed
        pinch = distinct[0][2]
        cluster = [h for h in hits if h[2].dist(pinch) <= 10 * tol]
        interior = [h for h in cluster if 1e-6 < h[1] < 1.0 - 1e-6]
        vertex = [h for h in cluster if h[1] <= 1e-6 or h[1] >= 1.0 - 1e-6]
        if not interior or not vertex:
            raise NotSymmetric("degenerate axis crossing without a pinch")
        iv, tv, pv = vertex[0]
        if tv >= 1.0 - 1e-6:
            iv, tv = (iv + 1) % len(w.boundary.segments), 0.0
        h1, h2 = _split_contour_at(w.boundary, (iv, tv, pv), interior[0],
                                   bridge=False)
        return h1, h2
    if len(distinct) != 2:
        raise NotSymmetric(f"expected 2 axis crossings, found {len(distinct)}")
    # prefer junction-vertex representation for the notch apex: pick, per
    # cluster, the hit lying at a segment boundary if one exists
    reps = []
    for d in distinct:
        cluster = [h for h in hits if h[2].dist(d[2]) <= 10 * tol]
        interior = [h for h in cluster if 1e-6 < h[1] < 1.0 - 1e-6]
        reps.append(interior[0] if len(interior) == len(cluster) else
                    min(cluster, key=lambda h: min(h[1], 1.0 - h[1])))
    a, b = reps
    # normalize vertex hits onto segment starts
    def as_start(h):
        i, t, pt = h
        if t > 1.0 - 1e-6:
            return ((i + 1) % len(w.boundary.segments), 0.0, pt)
        return h
    h1, h2 = _split_contour_at(w.boundary, as_start(a), as_start(b), bridge=True)
    return h1, h2


def subdivide_wedge(w: Wedge, k: int) -> list[Contour]:
    """Cut a wedge into k congruent sub-wedges fanning from p.

    Fails with SubdivisionCollision when an intermediate image of the side
    path hits the boundary (groove too long for this k).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return [w.boundary]
    n = w.n
    step = math.pi / (n * k)
    p = w.config.p
    tol = 1e-9 * w.boundary.scale() * 4

    sides: list[list[PathSegment]] = []
    for j in range(k + 1):
        g = Isometry.rotation(p, j * step)
        sides.append([seg.transformed(g) for seg in w.eta])

    # pairwise side collisions: only the shared apex p is allowed
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            for s1 in sides[i]:
                for s2 in sides[j]:
                    for pt in segment_intersections(s1, s2, tol):
                        if pt.dist(p) > 3 * tol:
                            raise SubdivisionCollision(
                                f"fan sides {i} and {j} collide near {pt}")

    rho_start = (w.groove_tip - p).angle()
    subtiles = []
    for j in range(k):
        sub_arc = Arc(p, w.disk_radius, rho_start + j * step, step)
        segs = [sub_arc] + sides[j + 1] + _path_reversed(sides[j])
        subtiles.append(Contour(segs))
    return subtiles


def mirror_halves_congruent(h1: Contour, h2: Contour) -> bool:
    ok, witness = congruent(h1, h2)
    return ok
