"""Shuffle symmetries of the reference row and the degree-60 point count.

A letter permutation belongs to the shuffle group of modulus t when
relabelling the reference sextuple by it still admits a labelled alignment.
Generically that group is dihedral of order 8, generated by the four-cycle
u = (A D C F) and v = (A D)(B E)(C F); the enumeration below uses it to count
the ricochet configurations through four general conic points: 60.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .errors import DegenerateGeometryError
from .forms import form_from_roots, quartic_invariants
from .geometry import ConicPoint, Mobius, mobius_through
from .linalg import primitive_ints
from .rico import (
    HARMONIC_LETTERS,
    HARMONIC_SLOTS,
    LETTERS,
    _check_labelled,
    bounce_map,
    sigma_sextuple,
)
from .scalars import Poly, RatFunc, Scalar, quadext


class LetterPerm:
    """A permutation of the six letters A..F, stored as an image tuple."""

    __slots__ = ("mapping",)

    def __init__(self, mapping) -> None:
        mapping = tuple(mapping)
        if sorted(mapping) != list(range(6)):
            raise ValueError(f"not a permutation of 0..5: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    def __setattr__(self, name, value):
        raise AttributeError("LetterPerm is immutable")

    @classmethod
    def identity(cls) -> LetterPerm:
        return cls(range(6))

    @classmethod
    def from_cycles(cls, cycles: str) -> LetterPerm:
        """Parse cycle notation like "(A D C F)" or "(A D)(B E)(C F)"."""
        mapping = list(range(6))
        body = cycles.replace(" ", "")
        if body in ("", "()", "e"):
            return cls(mapping)
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad cycle notation: {cycles!r}")
        for cyc in body[1:-1].split(")("):
            idx = [LETTERS.index(ch) for ch in cyc]
            for k, i in enumerate(idx):
                mapping[i] = idx[(k + 1) % len(idx)]
        return cls(mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __mul__(self, other: LetterPerm) -> LetterPerm:
        """Composition: (self * other)(i) = self(other(i))."""
        if not isinstance(other, LetterPerm):
            return NotImplemented
        return LetterPerm(tuple(self.mapping[other.mapping[i]] for i in range(6)))

    def inverse(self) -> LetterPerm:
        inv = [0] * 6
        for i, m in enumerate(self.mapping):
            inv[m] = i
        return LetterPerm(inv)

    def __eq__(self, other):
        if not isinstance(other, LetterPerm):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __lt__(self, other: LetterPerm):
        return self.mapping < other.mapping

    def is_identity(self) -> bool:
        return self.mapping == (0, 1, 2, 3, 4, 5)

    def preserves_harmonic_letters(self) -> bool:
        return {self.mapping[i] for i in HARMONIC_LETTERS} == set(HARMONIC_LETTERS)

    def restrict_harmonic(self) -> tuple[int, ...]:
        """Induced permutation of (A, C, D, F), as images within that subset."""
        if not self.preserves_harmonic_letters():
            raise ValueError("does not preserve the harmonic letters")
        return tuple(HARMONIC_LETTERS.index(self.mapping[i]) for i in HARMONIC_LETTERS)

    def cycle_string(self) -> str:
        seen = [False] * 6
        parts = []
        for i in range(6):
            if seen[i] or self.mapping[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.mapping[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.mapping[j]
            parts.append("(" + " ".join(LETTERS[k] for k in cyc) + ")")
        return "".join(parts) if parts else "e"

    def __repr__(self):
        return f"LetterPerm({self.mapping})"

    def __str__(self):
        return self.cycle_string()


def shuffle_u() -> LetterPerm:
    return LetterPerm.from_cycles("(A D C F)")


def shuffle_v() -> LetterPerm:
    return LetterPerm.from_cycles("(A D)(B E)(C F)")


@dataclass(frozen=True)
class ShuffleCheck:
    """Outcome of testing one letter permutation against one modulus."""

    member: bool
    witness: Mobius | None = None
    modulus: Scalar | None = None

    def __bool__(self):
        return self.member


def shuffle_membership(z: LetterPerm, t) -> ShuffleCheck:
    """Whether relabelling the reference row by z is again an alignment.

    The witness carries the permuted row back onto the reference row; the
    modulus is the new t value it lands on.
    """
    points = sigma_sextuple(t)
    permuted = tuple(points[z(i)] for i in range(6))
    hit = _check_labelled(permuted)
    if hit is None:
        return ShuffleCheck(False)
    return ShuffleCheck(True, hit[0], hit[1])


@dataclass(frozen=True)
class ShuffleGroup:
    """The group of letter permutations preserving alignment at one modulus."""

    t: Scalar
    elements: tuple[LetterPerm, ...]
    checks: dict = field(hash=False, compare=False, default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, z: LetterPerm) -> bool:
        return z in set(self.elements)


def shuffle_group(t=None) -> ShuffleGroup:
    """Filter all 720 letter permutations through the alignment test.

    With t omitted the test runs symbolically over the rational functions in
    t, which yields the generic group: the 8-element dihedral group generated
    by u = (A D C F) and v = (A D)(B E)(C F).
    """
    if t is None:
        t = RatFunc.t()
    elements = []
    checks = {}
    for mapping in permutations(range(6)):
        z = LetterPerm(mapping)
        chk = shuffle_membership(z, t)
        if chk.member:
            elements.append(z)
            checks[z] = chk
    return ShuffleGroup(t, tuple(sorted(elements)), checks)


def dihedral_from_generators() -> set[LetterPerm]:
    """The subgroup generated by u and v (closure by saturation)."""
    gens = (shuffle_u(), shuffle_v())
    group = {LetterPerm.identity()}
    frontier = set(gens)
    while frontier:
        group |= frontier
        frontier = {
            g * h for g in group for h in gens if g * h not in group
        } | {h * g for g in group for h in gens if h * g not in group}
        frontier -= group
    return group


# ---------------------------------------------------------------------------
# assignments of four marked points and their extensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Assignment:
    """An injective placement of four marked points into four letters.

    The type is the number of harmonic letters (A, C, D, F) used; it controls
    the number of completions to a full ricochet sextuple: 2, 1 or 0 for
    types 2, 3, 4.
    """

    letters: tuple[int, ...]  # sorted letter indices, length 4
    points: tuple[ConicPoint, ...]  # the point at each letter, same order

    @property
    def type(self) -> int:
        return len(set(self.letters) & set(HARMONIC_LETTERS))

    def mapping(self) -> dict[int, ConicPoint]:
        return dict(zip(self.letters, self.points))

    def act(self, z: LetterPerm) -> Assignment:
        """The relabelled assignment L -> point(z(L))."""
        inv_positions = sorted(
            (z.inverse()(letter), pt) for letter, pt in zip(self.letters, self.points)
        )
        return Assignment(
            tuple(i for i, _ in inv_positions), tuple(p for _, p in inv_positions)
        )

    def describe(self) -> str:
        return ", ".join(
            f"{LETTERS[i]}->{pt}" for i, pt in zip(self.letters, self.points)
        )


def enumerate_assignments(z_points) -> list[Assignment]:
    """All 360 assignments of four distinct points into four letters."""
    pts = tuple(z_points)
    if len(pts) != 4:
        raise DegenerateGeometryError("need exactly four points")
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError(
                    f"invalid quadruple: points {i} and {j} coincide"
                )
    out = []
    for letters in combinations(range(6), 4):
        for perm in permutations(pts):
            out.append(Assignment(letters, perm))
    return out


@dataclass(frozen=True)
class Extension:
    """One completion of an assignment to a full ricochet sextuple."""

    assignment: Assignment
    points: tuple[ConicPoint, ...]  # in letter order A..F
    t: Scalar
    field_d: int  # 0 for rational coordinates, else the squarefree radicand


@dataclass(frozen=True)
class ExtendOutcome:
    """Extensions of one assignment plus any genericity violations hit.

    For type-2 assignments `quadratic` records the primitive integer
    coefficients (descending) of the induced equation for the first missing
    harmonic letter.
    """

    assignment: Assignment
    extensions: tuple[Extension, ...]
    violations: tuple[str, ...]
    quadratic: tuple[int, int, int] | None = None


def _slot_point(letter: int, t) -> ConicPoint:
    """Reference parameter of a letter at modulus t (B -> t, E -> ff(t))."""
    if letter in HARMONIC_SLOTS:
        return ConicPoint(*HARMONIC_SLOTS[letter])
    if letter == 1:
        return t if isinstance(t, ConicPoint) else ConicPoint(t, 1)
    bt = t if isinstance(t, ConicPoint) else ConicPoint(t, 1)
    return bounce_map().apply(bt)


def _validate_extension(assignment: Assignment, mapping: dict[int, ConicPoint], t, d: int):
    """Distinctness plus a final labelled alignment check; None if invalid."""
    pts = tuple(mapping[i] for i in range(6))
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                return None
    if _check_labelled(pts) is None:
        return None
    return Extension(assignment, pts, t, d)


def extend(assignment: Assignment) -> ExtendOutcome:
    """All completions of an assignment to an R-sextuple containing it.

    Type 3 transports the one free modulus through the interpolating map;
    type 2 leaves one harmonic letter symbolic, solves the induced quadratic,
    and completes over Q or Q(sqrt(disc)); type 4 is overdetermined and has
    no completion unless the four points happen to be harmonic, which is
    reported as a genericity violation instead of being counted.
    """
    mapping = assignment.mapping()
    letters = set(assignment.letters)
    missing_h = sorted(set(HARMONIC_LETTERS) - letters)
    atype = assignment.type

    if atype == 4:
        a, c, d, f = (mapping[i] for i in HARMONIC_LETTERS)
        mu = mobius_through(
            tuple(ConicPoint(*HARMONIC_SLOTS[i]) for i in (0, 2, 3)), (a, c, d)
        )
        if mu.apply(ConicPoint(-1, 1)) == f:
            return ExtendOutcome(
                assignment,
                (),
                ("type-4 assignment with harmonic points admits a pencil of extensions",),
            )
        return ExtendOutcome(assignment, (), ())

    if atype == 3:
        known_h = sorted(letters & set(HARMONIC_LETTERS))
        moving = next(iter(letters - set(HARMONIC_LETTERS)))  # B or E
        mu = mobius_through(
            tuple(ConicPoint(*HARMONIC_SLOTS[i]) for i in known_h),
            tuple(mapping[i] for i in known_h),
        )
        t_pair = mu.inverse().apply(mapping[moving])
        if moving == 4:  # E carries ff(t), so pull back through the bounce map
            t_pair = bounce_map().inverse().apply(t_pair)
        full = dict(mapping)
        full[missing_h[0]] = mu.apply(ConicPoint(*HARMONIC_SLOTS[missing_h[0]]))
        other_moving = 4 if moving == 1 else 1
        full[other_moving] = mu.apply(_slot_point(other_moving, t_pair))
        if t_pair.is_infinite:
            return ExtendOutcome(
                assignment, (), ("type-3 modulus escaped to infinity",)
            )
        ext = _validate_extension(assignment, full, t_pair.affine_value(), 0)
        if ext is None:
            return ExtendOutcome(
                assignment, (), ("type-3 completion collided with the marked points",)
            )
        return ExtendOutcome(assignment, (ext,), ())

    # type 2: both B and E are marked, two harmonic letters are free
    known_h = sorted(letters & set(HARMONIC_LETTERS))
    sym_letter, other_letter = missing_h
    c_sym = ConicPoint(RatFunc.t(), RatFunc(1))
    nu = mobius_through(
        (mapping[known_h[0]], mapping[known_h[1]], c_sym),
        tuple(
            ConicPoint(*HARMONIC_SLOTS[i]) for i in (known_h[0], known_h[1], sym_letter)
        ),
    )
    lhs = bounce_map().apply(nu.apply(mapping[1]))  # ff(t) from B's image
    rhs = nu.apply(mapping[4])  # E's image
    eq = lhs.p * rhs.q - rhs.p * lhs.q
    num = eq.num if isinstance(eq, RatFunc) else Poly.const(eq)
    coeffs = primitive_ints(list(num.coeffs) + [0] * (3 - len(num.coeffs)))
    quadratic = tuple(reversed(coeffs[:3]))
    if num.degree != 2:
        return ExtendOutcome(
            assignment,
            (),
            (f"type-2 equation degenerated to degree {num.degree}",),
            quadratic,
        )
    qa, qb, qc = quadratic
    disc = qb * qb - 4 * qa * qc
    if disc == 0:
        return ExtendOutcome(
            assignment, (), ("type-2 quadratic has a repeated root",), quadratic
        )
    roots = _quadratic_roots(qa, qb, disc)
    extensions = []
    violations = []
    for root, d in roots:
        nu0 = mobius_through(
            (mapping[known_h[0]], mapping[known_h[1]], ConicPoint(root, 1)),
            tuple(
                ConicPoint(*HARMONIC_SLOTS[i])
                for i in (known_h[0], known_h[1], sym_letter)
            ),
        )
        full = dict(mapping)
        full[sym_letter] = ConicPoint(root, 1)
        full[other_letter] = nu0.inverse().apply(ConicPoint(*HARMONIC_SLOTS[other_letter]))
        t_pair = nu0.apply(mapping[1])
        if t_pair.is_infinite:
            violations.append("type-2 modulus escaped to infinity")
            continue
        ext = _validate_extension(assignment, full, t_pair.affine_value(), d)
        if ext is None:
            violations.append("type-2 completion collided with the marked points")
            continue
        extensions.append(ext)
    return ExtendOutcome(assignment, tuple(extensions), tuple(violations), quadratic)


def _quadratic_roots(qa: int, qb: int, disc: int):
    """Exact roots of qa*x^2 + qb*x + qc given the discriminant; pairs (root, d)."""
    from .scalars import squarefree_split

    s, d = squarefree_split(disc)
    if d == 1:
        return [
            (Fraction(-qb + s, 2 * qa), 0),
            (Fraction(-qb - s, 2 * qa), 0),
        ]
    half = Fraction(1, 2 * qa)
    return [
        (quadext(-qb * half, s * half, d), d),
        (quadext(-qb * half, -s * half, d), d),
    ]


# ---------------------------------------------------------------------------
# the experiment: count R-sextuples through four general points
# ---------------------------------------------------------------------------


def _sextuple_key(ext: Extension) -> tuple:
    coords = []
    for pt in ext.points:
        if pt.is_infinite:
            coords.append("inf")
        else:
            coords.append(str(pt.affine_value()))
    return (ext.field_d, tuple(sorted(coords)))


@dataclass(frozen=True)
class ConfigurationRecord:
    """One distinct R-sextuple found by the experiment."""

    key: tuple
    field_d: int
    points: tuple[ConicPoint, ...]
    hit_count: int  # number of (assignment, extension) pairs landing here


@dataclass(frozen=True)
class ExperimentReport:
    """Census of ricochet sextuples through a marked quadruple.

    When `violations` is nonempty the quadruple failed a genericity check and
    no count is claimed (`distinct_count` is None).
    """

    z_points: tuple[ConicPoint, ...]
    type_counts: dict
    extension_counts: dict
    configurations: tuple[ConfigurationRecord, ...]
    distinct_count: int | None
    orbit_sizes: dict
    violations: tuple[str, ...]


def run_experiment(z_points) -> ExperimentReport:
    """Extend all 360 assignments of the quadruple and deduplicate exactly."""
    pts = tuple(z_points)
    assignments = enumerate_assignments(pts)
    violations: list[str] = []
    _, j3 = quartic_invariants(form_from_roots(pts))
    if j3 == 0:
        violations.append("marked quadruple is harmonic")
    type_counts = {2: 0, 3: 0, 4: 0}
    extension_counts = {2: 0, 3: 0, 4: 0}
    hits: dict[tuple, list[Extension]] = {}
    for assignment in assignments:
        type_counts[assignment.type] += 1
        outcome = extend(assignment)
        violations.extend(
            f"{v} [{assignment.describe()}]" for v in outcome.violations
        )
        extension_counts[assignment.type] += len(outcome.extensions)
        for ext in outcome.extensions:
            hits.setdefault(_sextuple_key(ext), []).append(ext)
    configurations = tuple(
        ConfigurationRecord(key, key[0], exts[0].points, len(exts))
        for key, exts in sorted(hits.items())
    )
    orbit_sizes: dict[int, int] = {}
    for rec in configurations:
        orbit_sizes[rec.hit_count] = orbit_sizes.get(rec.hit_count, 0) + 1
    distinct = None if violations else len(configurations)
    return ExperimentReport(
        pts,
        type_counts,
        extension_counts,
        configurations,
        distinct,
        orbit_sizes,
        tuple(violations),
    )
