"""Pascal lines, the 60-line census, involutive and ricochet configurations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import DegenerateGeometryError, TheoremViolationError
from .forms import form_from_roots, transvectant
from .geometry import (
    ConicPoint,
    LineByPole,
    Mobius,
    PlanePoint,
    chord,
    incident,
    involution_from_point,
    is_harmonic_ordered,
    join,
    meet,
    mobius_through,
    other_conic_point,
    second_intersection,
    veronese,
)
from .scalars import Scalar


class SexArray:
    """Six distinct conic points in a 2x3 array [[A, B, C], [F, E, D]].

    Two arrays define the same Pascal line exactly when they differ by a row
    swap and/or a column permutation, giving 6!/(2*6) = 60 classes.
    """

    __slots__ = ("top", "bottom")

    def __init__(self, top, bottom) -> None:
        top, bottom = tuple(top), tuple(bottom)
        if len(top) != 3 or len(bottom) != 3:
            raise DegenerateGeometryError("array must be 2x3")
        pts = top + bottom
        for i in range(6):
            for j in range(i + 1, 6):
                if pts[i] == pts[j]:
                    raise DegenerateGeometryError(
                        f"invalid array: entries {i} and {j} coincide"
                    )
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, name, value):
        raise AttributeError("SexArray is immutable")

    def variants(self):
        """All 12 arrays defining the same Pascal line."""
        for rows in ((self.top, self.bottom), (self.bottom, self.top)):
            for perm in permutations(range(3)):
                yield SexArray(
                    tuple(rows[0][i] for i in perm), tuple(rows[1][i] for i in perm)
                )


@dataclass(frozen=True)
class PascalLine:
    """A Pascal line together with the three cross-hair points defining it."""

    line: LineByPole
    crosshairs: tuple[PlanePoint, PlanePoint, PlanePoint]

    def __post_init__(self):
        for x in self.crosshairs:
            if not incident(x, self.line):
                raise TheoremViolationError("cross-hair point off its Pascal line")

    def __eq__(self, other):
        if not isinstance(other, PascalLine):
            return NotImplemented
        return self.line == other.line

    def __hash__(self):
        return hash(self.line)


def pascal(arr: SexArray) -> PascalLine:
    """The Pascal line of the array: the three cross-hair meets are collinear.

    Collinearity is asserted exactly; a failure would falsify the theorem and
    therefore raises TheoremViolationError (an internal bug, never bad input).
    """
    a, b, c = arr.top
    f, e, d = arr.bottom
    x1 = meet(chord(a, e), chord(b, f))
    x2 = meet(chord(b, d), chord(c, e))
    x3 = meet(chord(a, d), chord(c, f))
    if x1 != x2:
        line = join(x1, x2)
        odd = x3
    elif x1 != x3:
        line = join(x1, x3)
        odd = x2
    else:
        raise DegenerateGeometryError("all three cross-hair points coincide")
    if not incident(odd, line):
        raise TheoremViolationError("Pascal cross-hairs failed to be collinear")
    return PascalLine(line, (x1, x2, x3))


@dataclass(frozen=True)
class PascalCensus:
    """All 60 Pascal classes of a sextuple, grouped by coincident lines.

    `classes` maps the canonical index array (lexicographically least among
    its 12 equivalents, entries indexing the input points) to its line;
    `groups` collects canonical arrays whose lines are projectively equal.
    """

    points: tuple[ConicPoint, ...]
    classes: dict[tuple[int, ...], PascalLine]
    groups: list[list[tuple[int, ...]]]

    @property
    def distinct_line_count(self) -> int:
        return len(self.groups)


def canonical_array_key(indices: tuple[int, ...]) -> tuple[int, ...]:
    """Least representative of (a, b, c, f, e, d) under row/column symmetry."""
    top, bottom = indices[:3], indices[3:]
    best = None
    for t, bo in ((top, bottom), (bottom, top)):
        for perm in permutations(range(3)):
            cand = tuple(t[i] for i in perm) + tuple(bo[i] for i in perm)
            if best is None or cand < best:
                best = cand
    return best


def all_pascals(points) -> PascalCensus:
    """The census of all 60 notionally distinct Pascals of six points."""
    pts = tuple(points)
    if len(pts) != 6:
        raise DegenerateGeometryError("need exactly six points")
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError(
                    f"invalid sextuple: points {i} and {j} coincide"
                )
    classes: dict[tuple[int, ...], PascalLine] = {}
    for perm in permutations(range(6)):
        key = canonical_array_key(perm)
        if key in classes:
            continue
        arr = SexArray(tuple(pts[i] for i in key[:3]), tuple(pts[i] for i in key[3:]))
        classes[key] = pascal(arr)
    by_line: dict[tuple, list[tuple[int, ...]]] = {}
    for key in sorted(classes):
        by_line.setdefault(classes[key].line.key(), []).append(key)
    groups = sorted(by_line.values())
    return PascalCensus(pts, classes, groups)


# ---------------------------------------------------------------------------
# the involutive configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvolutiveSextuple:
    """Six points cut out by three concurrent chords through a center point.

    Letters pair as (A, F), (B, E), (C, D) across the involution, so the four
    column-switched arrays of [[A, B, C], [F, E, D]] share one Pascal line,
    namely the polar of the center.
    """

    center: PlanePoint
    points: tuple[ConicPoint, ...]  # letter order A, B, C, D, E, F

    def base_array(self) -> SexArray:
        a, b, c, d, e, f = self.points
        return SexArray((a, b, c), (f, e, d))

    def column_switched_arrays(self) -> list[SexArray]:
        a, b, c, d, e, f = self.points
        return [
            SexArray((a, b, c), (f, e, d)),
            SexArray((f, b, c), (a, e, d)),
            SexArray((a, e, c), (f, b, d)),
            SexArray((a, b, d), (f, e, c)),
        ]

    def polar(self) -> LineByPole:
        return LineByPole(self.center)


def build_involutive(
    q: PlanePoint, t1: ConicPoint, t2: ConicPoint, t3: ConicPoint
) -> InvolutiveSextuple:
    """Label the six intersections of three chords through q with the conic."""
    if q.on_conic():
        raise DegenerateGeometryError("degenerate involutive: center on the conic")
    sigma = involution_from_point(q)
    halves = (t1, t2, t3)
    for i in range(3):
        for j in range(i + 1, 3):
            if halves[i] == halves[j]:
                raise DegenerateGeometryError("degenerate involutive: repeated seed point")
    images = tuple(sigma.apply(t) for t in halves)
    a, b, c = halves
    f, e, d = images
    pts = (a, b, c, d, e, f)
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError(
                    "degenerate involutive: tangent chord or shared chord"
                )
    return InvolutiveSextuple(q, pts)


# ---------------------------------------------------------------------------
# the ricochet configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RicoConfig:
    """The full ricochet construction record.

    Conic points a..f and the bounce point z; the tangent intersection v, the
    chord point w and u = AD meet CF; the common Pascal line through u, v, w;
    and the modulus t once (a, c, d) are sent to (0, infinity, 1).
    """

    a: ConicPoint
    b: ConicPoint
    c: ConicPoint
    d: ConicPoint
    e: ConicPoint
    f: ConicPoint
    z: ConicPoint
    u: PlanePoint
    v: PlanePoint
    w: PlanePoint
    pline: LineByPole
    t: Scalar

    def points(self) -> tuple[ConicPoint, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def sextic(self):
        return form_from_roots(self.points())


_RICO_LETTERS = ("A", "B", "C", "D", "E", "F")


def build_ricochet(
    a: ConicPoint, c: ConicPoint, d: ConicPoint, b: ConicPoint
) -> RicoConfig:
    """Run the two-bounce construction from the free points (A, C, D, B)."""
    seeds = (a, c, d, b)
    names = ("A", "C", "D", "B")
    for i in range(4):
        for j in range(i + 1, 4):
            if seeds[i] == seeds[j]:
                raise DegenerateGeometryError(
                    f"degenerate ricochet: {names[i]} = {names[j]}"
                )
    v = meet(chord(a, a), chord(c, c))  # pole of chord AC
    f = second_intersection(v, d)
    w = meet(chord(a, f), chord(c, d))
    z = second_intersection(v, b)
    e = second_intersection(w, z)
    u = meet(chord(a, d), chord(c, f))
    pts = (a, b, c, d, e, f)
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError(
                    "degenerate ricochet: "
                    f"{_RICO_LETTERS[i]} = {_RICO_LETTERS[j]}"
                )
    pline = join(v, w)
    # construction-time sanity: these identities are theorems
    if not is_harmonic_ordered(a, c, d, f):
        raise TheoremViolationError("A, C, D, F failed to be harmonic")
    if not (incident(u, pline) and incident(v, pline) and incident(w, pline)):
        raise TheoremViolationError("U, V, W failed to be collinear")
    mu = mobius_through(
        (a, c, d),
        (ConicPoint(0, 1), ConicPoint.infinity(), ConicPoint(1, 1)),
    )
    t = mu.apply(b).affine_value()
    return RicoConfig(a, b, c, d, e, f, z, u, v, w, pline, t)


def psi(cfg: RicoConfig) -> Mobius:
    """The conic automorphism carrying B to E: both bounce compositions agree.

    Returns the composite (involution at W) after (involution at V) and
    asserts it equals (involution at V) after (involution at U) exactly.
    """
    sv = involution_from_point(cfg.v)
    sw = involution_from_point(cfg.w)
    su = involution_from_point(cfg.u)
    m = sw * sv
    if m != sv * su:
        raise TheoremViolationError("the two double-involution composites differ")
    for src, dst in ((cfg.a, cfg.f), (cfg.c, cfg.d), (cfg.d, cfg.a)):
        if m.apply(src) != dst:
            raise TheoremViolationError("double involution moved A, C, D wrongly")
    return m


def omega(cfg: RicoConfig, b0: ConicPoint) -> ConicPoint:
    """The pivot construction: where the Pascal through b0 meets the moving row.

    Both routes (chord b0-F against the common line, then back through A; and
    chord b0-D, then back through C) are computed and must agree.  Total on
    the conic: chords through coincident points degrade to tangents.
    """
    h1 = meet(chord(b0, cfg.f), cfg.pline)
    line_a = join(veronese(cfg.a), h1) if h1 != veronese(cfg.a) else None
    if line_a is None:
        raise DegenerateGeometryError("pivot collapsed onto A")
    out1 = other_conic_point(line_a, cfg.a)
    h2 = meet(chord(b0, cfg.d), cfg.pline)
    line_c = join(veronese(cfg.c), h2) if h2 != veronese(cfg.c) else None
    if line_c is None:
        raise DegenerateGeometryError("pivot collapsed onto C")
    out2 = other_conic_point(line_c, cfg.c)
    if out1 != out2:
        raise TheoremViolationError("the two pivot constructions disagree")
    return out1


@dataclass(frozen=True)
class RicochetWitness:
    """Outcome of checking the coincident-Pascal theorem on one configuration."""

    common_line: LineByPole
    array_one: SexArray
    array_two: SexArray
    pascal_one: PascalLine
    pascal_two: PascalLine


def verify_ricochet_theorem(cfg: RicoConfig) -> RicochetWitness:
    """Check pasc(A,B,C;F,E,D) = pasc(A,E,C;D,B,F) = the line VW, exactly."""
    arr1 = SexArray((cfg.a, cfg.b, cfg.c), (cfg.f, cfg.e, cfg.d))
    arr2 = SexArray((cfg.a, cfg.e, cfg.c), (cfg.d, cfg.b, cfg.f))
    p1 = pascal(arr1)
    p2 = pascal(arr2)
    if p1.line != p2.line:
        raise TheoremViolationError("the two ricochet Pascals differ")
    if p1.line != cfg.pline:
        raise TheoremViolationError("common Pascal is not the line VW")
    return RicochetWitness(cfg.pline, arr1, arr2, p1, p2)
