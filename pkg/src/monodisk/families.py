"""Assembly and validation of complete monohedral disk tilings.

Families built here (counts in parentheses):

* plain radial fans from one generator path (n tiles);
* ``D``: halved symmetric wedges, 2n wedges x 2 halves (4n tiles), plus the
  pinch-limit ``D31`` where the halving cut degenerates to a point;
* ``C``: symmetric wedges subdivided into k radial subtiles, with any set
  of non-overlapping k-slot windows flipped across their wedge axis
  (2nk tiles), addressed by a cyclic edge word over {L, S};
* ``Ctilde``: the same subdivision applied to an asymmetric wedge, tiled
  about either generator (2nk tiles).

Every constructor returns a tiling normalized to the unit disk at the
origin.  ``validate_tiling`` re-derives everything it reports from the
geometry alone: area conservation, sampled edge matching, seeded
Monte Carlo coverage, pairwise congruence and the touch/symmetry counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InvalidN,
    NotCFamily,
    RotationOverlap,
    SideSelfIntersects,
    UnrecognizedSpan,
    WordInvalid,
)
from .geometry import (
    Arc,
    Contour,
    Isometry,
    Line,
    PathSegment,
    Point,
    batch_boundary_distance,
    batch_winding,
    congruent,
    contour_area,
    contour_centroid,
    contour_is_simple,
    contours_coincide,
    point_segment_distance,
    segment_intersections,
)
from .wedge import (
    CustomGroove,
    Wedge,
    build_asymmetric_wedge,
    build_symmetric_wedge,
    split_wedge_symmetric,
    subdivide_wedge,
)
from .words import EdgeWord, all_short

DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 42


class Orientation:
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @staticmethod
    def flipped(o: str) -> str:
        return Orientation.NEGATIVE if o == Orientation.POSITIVE else Orientation.POSITIVE


@dataclass(frozen=True)
class PlacedTile:
    id: int
    contour: Contour
    orientation: str


@dataclass
class Tiling:
    center: Point
    radius: float
    tiles: list[PlacedTile]
    meta: dict = field(default_factory=dict)

    @property
    def tile_count(self) -> int:
        return len(self.tiles)

    def contours(self) -> list[Contour]:
        return [t.contour for t in self.tiles]


@dataclass
class TilingReport:
    valid: bool
    monohedral: bool
    tile_count: int
    center_touch_count: int
    boundary_touch_count: int
    cyclic_symmetry_order: int
    has_mirror_symmetry: bool
    uncovered_count: int
    multi_covered_count: int
    samples: int
    seed: int
    failures: list[str]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "monohedral": self.monohedral,
            "tile_count": self.tile_count,
            "center_touch_count": self.center_touch_count,
            "boundary_touch_count": self.boundary_touch_count,
            "cyclic_symmetry_order": self.cyclic_symmetry_order,
            "has_mirror_symmetry": self.has_mirror_symmetry,
            "uncovered_count": self.uncovered_count,
            "multi_covered_count": self.multi_covered_count,
            "samples": self.samples,
            "seed": self.seed,
            "failures": self.failures,
        }


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------

def _ccw(c: Contour) -> Contour:
    return c.oriented_ccw()


def _normalize(tiles: list[tuple[Contour, str]], center: Point, radius: float,
               meta: dict) -> Tiling:
    shift = Isometry.translation(-center.x, -center.y)
    placed = []
    for i, (contour, orientation) in enumerate(tiles):
        c = _ccw(contour.transformed(shift).scaled(1.0 / radius))
        placed.append(PlacedTile(id=i, contour=c, orientation=orientation))
    return Tiling(center=Point(0.0, 0.0), radius=1.0, tiles=placed, meta=meta)


def mirror_tiling(t: Tiling) -> Tiling:
    """Mirror image across the x axis (orientation tags flip)."""
    g = Isometry.reflection(t.center, 0.0)
    tiles = [PlacedTile(id=pt.id, contour=_ccw(pt.contour.transformed(g)),
                        orientation=Orientation.flipped(pt.orientation))
             for pt in t.tiles]
    meta = dict(t.meta)
    if meta.get("chirality") in ("A", "B"):
        meta["chirality"] = "B" if meta["chirality"] == "A" else "A"
    return Tiling(center=t.center, radius=t.radius, tiles=tiles, meta=meta)


def _maybe_mirror(t: Tiling, chirality: str) -> Tiling:
    if chirality == "A":
        return t
    if chirality == "B":
        m = mirror_tiling(t)
        m.meta["chirality"] = "B"
        return m
    raise ValueError(f"chirality must be 'A' or 'B', got {chirality!r}")


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------

def tile_disk_radial(side: list[PathSegment], n: int) -> Tiling:
    """Fan of n congruent radially generated tiles around the side's start."""
    if not isinstance(n, int) or n < 2:
        raise InvalidN(f"radial tilings need an integer n >= 2, got {n!r}")
    if not side:
        raise SideSelfIntersects("side path is empty")
    center = side[0].start()
    rim = side[-1].end()
    radius = rim.dist(center)
    if radius <= 0.0:
        raise SideSelfIntersects("side path has zero extent")
    tol = 1e-9 * radius * 4
    for a, b in zip(side, side[1:]):
        if a.end().dist(b.start()) > tol:
            raise SideSelfIntersects("side path is not connected")
    for i in range(len(side)):
        for j in range(i + 1, len(side)):
            allowed = [side[i].end()] if j == i + 1 else []
            for pt in segment_intersections(side[i], side[j], tol):
                if all(pt.dist(al) > 3 * tol for al in allowed):
                    raise SideSelfIntersects(f"side path self-intersects near {pt}")
    step = Isometry.rotation(center, 2.0 * math.pi / n)
    rotated = [seg.transformed(step) for seg in side]
    for s1 in side:
        for s2 in rotated:
            for pt in segment_intersections(s1, s2, tol):
                if pt.dist(center) > 3 * tol and pt.dist(rim) > 3 * tol:
                    raise RotationOverlap(f"side collides with its image near {pt}")

    arc = Arc(center, radius, (rim - center).angle(), 2.0 * math.pi / n)
    base = Contour(list(side) + [arc] + [seg.reversed() for seg in reversed(rotated)])
    tiles = []
    for j in range(n):
        g = Isometry.rotation(center, j * 2.0 * math.pi / n)
        tiles.append((base.transformed(g), Orientation.POSITIVE))
    return _normalize(tiles, center, radius,
                      meta={"family": "symradial" if all(isinstance(s, Line) for s in side)
                            else "radgen", "n": n})


def _wedge_fan_about_p(w: Wedge) -> list[Contour]:
    """2n rotated wedge copies tiling the disk about p."""
    n = w.n
    out = []
    for j in range(2 * n):
        g = Isometry.rotation(w.config.p, j * math.pi / n)
        out.append(w.boundary.transformed(g))
    return out


def build_D(n: int, t_normalized: float, chirality: str = "A") -> Tiling:
    """Halved-wedge family: 4n tiles from splitting each of 2n symmetric wedges."""
    w = build_symmetric_wedge(n, t_normalized)
    h1, h2 = split_wedge_symmetric(w)
    tiles: list[tuple[Contour, str]] = []
    for j in range(2 * n):
        g = Isometry.rotation(w.config.p, j * math.pi / n)
        tiles.append((h1.transformed(g), Orientation.POSITIVE))
        tiles.append((h2.transformed(g), Orientation.NEGATIVE))
    meta = {"family": "D", "n": n, "t": t_normalized, "chirality": "A"}
    return _maybe_mirror(_normalize(tiles, w.config.p, w.disk_radius, meta), chirality)


def build_D31(chirality: str = "A") -> Tiling:
    """Pinch-limit tiling: groove length at the critical value for n = 3.

    The halving cut of the D family shrinks to a point (the notch apex
    rests on the opposite side), so each pinched wedge falls apart into two
    congruent opposite-orientation tiles without any cut.
    """
    w = build_symmetric_wedge(3, 1.0, validate=False)
    h1, h2 = split_wedge_symmetric(w)
    tiles: list[tuple[Contour, str]] = []
    for j in range(6):
        g = Isometry.rotation(w.config.p, j * math.pi / 3)
        tiles.append((h1.transformed(g), Orientation.POSITIVE))
        tiles.append((h2.transformed(g), Orientation.NEGATIVE))
    meta = {"family": "D31", "n": 3, "t": 1.0, "chirality": "A"}
    return _maybe_mirror(_normalize(tiles, w.config.p, w.disk_radius, meta), chirality)


def build_C(n: int, k: int, t_normalized: float, word: EdgeWord | str | None = None,
            chirality: str = "A") -> Tiling:
    """Subdivided symmetric family member addressed by a cyclic edge word.

    Starts from the all-short fan of 2nk subtiles about the wedge apex;
    every ``L`` in the word flips the next k consecutive subtiles across
    the symmetry axis of the wedge they form.  Flipped tiles are tagged
    with negative orientation.
    """
    if word is None:
        word = all_short(n, k)
    elif isinstance(word, str):
        word = EdgeWord(word, n, k)
    elif (word.n, word.k) != (n, k):
        raise WordInvalid(f"word context {(word.n, word.k)} does not match ({n}, {k})")

    w = build_symmetric_wedge(n, t_normalized)
    subtiles = subdivide_wedge(w, k)
    base = subtiles[0]
    p = w.config.p
    step_angle = math.pi / (n * k)
    slots = 2 * n * k
    fan = []
    for s in range(slots):
        fan.append(base.transformed(Isometry.rotation(p, s * step_angle)))

    axis0 = Isometry.reflection(Point(0.0, 0.0), math.pi / 2.0)  # x = 0
    tiles: list[tuple[Contour, str]] = []
    cursor = 0
    for letter in word.letters:
        if letter == "S":
            tiles.append((fan[cursor], Orientation.POSITIVE))
            cursor += 1
        else:
            rot = Isometry.rotation(p, cursor * step_angle)
            flip = rot.compose(axis0).compose(rot.inverse())
            for j in range(k):
                tiles.append((fan[cursor + j].transformed(flip), Orientation.NEGATIVE))
            cursor += k
    assert cursor == slots

    meta = {"family": "C", "n": n, "k": k, "t": t_normalized,
            "word": word.letters, "chirality": "A"}
    return _maybe_mirror(_normalize(tiles, p, w.disk_radius, meta), chirality)


def build_Ctilde(n: int, k: int, groove: CustomGroove,
                 about: str = "P", chirality: str = "A") -> Tiling:
    """Subdivided asymmetric family: tile about either generator.

    ``about="P"`` is the plain fan of 2nk subtiles around p; ``about="Q"``
    places 2n whole-wedge blocks (each carrying its k subtiles) around q.
    With the mirror images that makes the four members of the family.
    """
    if about not in ("P", "Q"):
        raise ValueError(f"about must be 'P' or 'Q', got {about!r}")
    w = build_asymmetric_wedge(n, groove)
    subtiles = subdivide_wedge(w, k)
    tiles: list[tuple[Contour, str]] = []
    if about == "P":
        p = w.config.p
        step_angle = math.pi / (n * k)
        for s in range(2 * n * k):
            g = Isometry.rotation(p, s * step_angle)
            tiles.append((subtiles[0].transformed(g), Orientation.POSITIVE))
        center = p
    else:
        q = w.config.q
        for j in range(2 * n):
            g = Isometry.rotation(q, j * math.pi / n)
            for sub in subtiles:
                tiles.append((sub.transformed(g), Orientation.POSITIVE))
        center = q
    meta = {"family": "Ctilde", "n": n, "k": k, "t": w.groove.length,
            "about": about, "chirality": "A"}
    return _maybe_mirror(_normalize(tiles, center, w.disk_radius, meta), chirality)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _tile_touches_point(c: Contour, pt: Point, tol: float) -> bool:
    return min(point_segment_distance(pt, seg) for seg in c.segments) <= tol


def _max_dist_from(c: Contour, origin: Point) -> float:
    best = 0.0
    for seg in c.segments:
        best = max(best, seg.start().dist(origin), seg.end().dist(origin))
        if isinstance(seg, Arc):
            d = seg.center.dist(origin)
            if d <= 1e-12:
                best = max(best, seg.radius)
            elif seg.contains_angle((seg.center - origin).angle()):
                best = max(best, d + seg.radius)
    return best


def _on_disk_circle(seg: PathSegment, center: Point, radius: float, tol: float) -> bool:
    return (isinstance(seg, Arc)
            and seg.center.dist(center) <= tol
            and abs(seg.radius - radius) <= tol)


def _match_in_place(contours: list[Contour], centroids: list[Point],
                    g: Isometry, tol: float) -> bool:
    """Does the isometry map the tile multiset onto itself?"""
    for c, ctr in zip(contours, centroids):
        target = g(ctr)
        candidates = [j for j, other in enumerate(centroids)
                      if other.dist(target) <= 1e-4]
        moved = c.transformed(g)
        if not any(contours_coincide(moved, contours[j], tol) for j in candidates):
            return False
    return True


def _cyclic_symmetry_order(contours: list[Contour], centroids: list[Point],
                           center: Point, tol: float) -> int:
    for d in range(len(contours), 1, -1):
        g = Isometry.rotation(center, 2.0 * math.pi / d)
        if _match_in_place(contours, centroids, g, tol):
            return d
    return 1


def _has_mirror_symmetry(contours: list[Contour], centroids: list[Point],
                         center: Point, radius: float, tol: float) -> bool:
    angles = []
    for c in contours:
        for v in c.vertices():
            if abs(v.dist(center) - radius) <= tol:
                angles.append((v - center).angle())
    if not angles:
        return False
    uniq: list[float] = []
    for a in sorted(angles):
        if not uniq or a - uniq[-1] > 1e-7:
            uniq.append(a)
    base = uniq[0]
    tried = set()
    for a in uniq:
        theta = (base + a) / 2.0
        for cand in (theta, theta + math.pi / 2.0):
            key = round(cand % math.pi, 9)
            if key in tried:
                continue
            tried.add(key)
            g = Isometry.reflection(center, cand)
            if _match_in_place(contours, centroids, g, tol):
                return True
    return False


def validate_tiling(t: Tiling, samples: int = DEFAULT_SAMPLES,
                    seed: int = DEFAULT_SEED) -> TilingReport:
    """Check a tiling and derive its combinatorial statistics.

    Checks: per-tile closure and simplicity, containment in the disk, area
    conservation, sampled edge matching (every non-rim boundary point is
    shared with exactly one other tile), and seeded Monte Carlo coverage
    (each interior sample away from boundaries lies in exactly one tile).
    """
    failures: list[str] = []
    R = t.radius
    center = t.center
    tol = 1e-9 * (2.0 * R)
    touch_tol = 1e-6 * R
    contours = t.contours()
    n_tiles = len(contours)

    for pt in t.tiles:
        c = pt.contour
        if not c.is_closed():
            failures.append(f"tile {pt.id}: contour not closed")
            continue
        ok, witness = contour_is_simple(c)
        if not ok:
            failures.append(f"tile {pt.id}: self-intersection near {witness}")
        if _max_dist_from(c, center) > R + 1e-6 * R:
            failures.append(f"tile {pt.id}: extends outside the disk")

    total_area = sum(abs(contour_area(c)) for c in contours)
    disk_area = math.pi * R * R
    if abs(total_area - disk_area) > 1e-9 * disk_area:
        failures.append(f"area sum {total_area} != disk area {disk_area}")

    # sampled edge matching
    structural_ok = not failures
    if structural_ok:
        for i, c in enumerate(contours):
            for seg in c.segments:
                if _on_disk_circle(seg, center, R, touch_tol):
                    continue
                for s in range(8):
                    probe = seg.point_at((s + 0.5) / 8.0)
                    owners = 0
                    for j, other in enumerate(contours):
                        if j == i:
                            continue
                        if _tile_touches_point(other, probe, 10 * tol):
                            owners += 1
                    if owners != 1:
                        failures.append(
                            f"tile {i}: edge point {probe} shared by {owners} "
                            f"other tiles (expected 1)")
                        break
                else:
                    continue
                break

    # Monte Carlo coverage
    uncovered = multi = 0
    if structural_ok:
        rng = np.random.default_rng(seed)
        u = rng.random(samples)
        v = rng.random(samples)
        rr = R * np.sqrt(u)
        th = 2.0 * math.pi * v
        xs = center.x + rr * np.cos(th)
        ys = center.y + rr * np.sin(th)
        band = 1e-6 * R
        near = rr >= R - band
        counts = np.zeros(samples, dtype=int)
        for c in contours:
            dist = batch_boundary_distance(c, xs, ys)
            near |= dist <= band
            counts += (batch_winding(c, xs, ys) != 0)
        active = ~near
        uncovered = int(np.sum(active & (counts == 0)))
        multi = int(np.sum(active & (counts > 1)))
        if uncovered:
            failures.append(f"{uncovered} interior sample(s) covered by no tile")
        if multi:
            failures.append(f"{multi} interior sample(s) covered by several tiles")

    monohedral = True
    if structural_ok:
        ref = contours[0]
        for i, c in enumerate(contours[1:], start=1):
            ok, _ = congruent(ref, c)
            if not ok:
                monohedral = False
                failures.append(f"tile {i} not congruent to tile 0")
                break
    else:
        monohedral = False

    center_touch = sum(_tile_touches_point(c, center, touch_tol) for c in contours)
    boundary_touch = sum(_max_dist_from(c, center) >= R - touch_tol for c in contours)

    centroids = [contour_centroid(c) for c in contours]
    sym_tol = 1e-6 * R
    cyclic = _cyclic_symmetry_order(contours, centroids, center, sym_tol)
    mirror = _has_mirror_symmetry(contours, centroids, center, R, sym_tol)

    return TilingReport(
        valid=not failures,
        monohedral=monohedral,
        tile_count=n_tiles,
        center_touch_count=center_touch,
        boundary_touch_count=boundary_touch,
        cyclic_symmetry_order=cyclic,
        has_mirror_symmetry=mirror,
        uncovered_count=uncovered,
        multi_covered_count=multi,
        samples=samples,
        seed=seed,
        failures=failures,
    )


# ---------------------------------------------------------------------------
# edge-word readback and tiling comparison
# ---------------------------------------------------------------------------

def edge_word_of(t: Tiling) -> EdgeWord:
    """Read the boundary edge word of a C-family tiling back from geometry."""
    fam = t.meta.get("family")
    if fam != "C":
        raise NotCFamily(f"edge words are defined for family C, not {fam!r}")
    n, k = t.meta["n"], t.meta["k"]
    R, center = t.radius, t.center
    tol = 1e-6 * R
    edges = []
    for pt in t.tiles:
        for seg in pt.contour.segments:
            if _on_disk_circle(seg, center, R, tol):
                start = seg.start_angle if seg.sweep > 0 else seg.start_angle + seg.sweep
                edges.append((start % (2.0 * math.pi), abs(seg.sweep)))
    edges.sort()
    if abs(sum(span for _, span in edges) - 2.0 * math.pi) > 1e-6:
        raise UnrecognizedSpan("boundary arcs do not cover the circle")
    long_span = math.pi / n
    short_span = math.pi / (n * k)
    letters = []
    for _, span in edges:
        if k > 1 and abs(span - long_span) <= 1e-6:
            letters.append("L")
        elif abs(span - short_span) <= 1e-6:
            letters.append("S")
        else:
            raise UnrecognizedSpan(f"arc span {span} matches neither "
                                   f"{long_span} nor {short_span}")
    return EdgeWord("".join(letters), n, k)


def same_tiling(t1: Tiling, t2: Tiling, tol: float = 1e-6) -> bool:
    """Equality up to rotation (both tilings normalized to the unit disk)."""
    if t1.tile_count != t2.tile_count:
        return False
    c1 = t1.contours()
    c2 = t2.contours()
    cent2 = [contour_centroid(c) for c in c2]

    def rim_angles(contours):
        out = []
        for c in contours:
            for v in c.vertices():
                if abs(v.norm() - 1.0) <= tol:
                    out.append(v.angle())
        return sorted(set(round(a, 9) for a in out))

    a1 = rim_angles(c1)
    a2 = rim_angles(c2)
    if not a1 or len(a1) != len(a2):
        return False
    for b in a2:
        phi = b - a1[0]
        g = Isometry.rotation(Point(0.0, 0.0), phi)
        ok = True
        for c in c1:
            moved = c.transformed(g)
            ctr = contour_centroid(moved)
            cand = [j for j, other in enumerate(cent2) if other.dist(ctr) <= 1e-4]
            if not any(contours_coincide(moved, c2[j], tol) for j in cand):
                ok = False
                break
        if ok:
            return True
    return False
