"""Algebraic side of the ricochet configuration.

The reference sextuple for modulus t is

    (0,  t,  infinity,  1,  (t-1)/(t+1),  -1)

in letter order A..F; a sextuple is in R-configuration when some labelling of
it maps onto that row under a fractional linear transformation.  This module
provides that alignment search, the invariant theory of the associated binary
sextics, and the derivation plus evaluation of the two defining invariants of
degrees 6 and 10 whose common vanishing characterizes the configuration.

Invariant recipes (degree 6 sextic f, with i = (f,f)_4 and l = (f,i)_4):

    I2 = (f,f)_6,  I4 = (i,i)_4,  I6 = (l,l)_2,  I10 = (f, l^3)_6.

Restricted to the reference sextic these reproduce the classical closed forms
in delta02 and beta12 with constant 1, so no rescaling is applied anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import DegenerateGeometryError, DerivationError
from .forms import BinaryForm, form_from_roots, is_squarefree, transvectant, transvectant_scalar
from .geometry import ConicPoint, Mobius, is_harmonic_ordered, mobius_through
from .linalg import in_span, nullspace, primitive_ints
from .scalars import Poly, Scalar

LETTERS = ("A", "B", "C", "D", "E", "F")

#: positions of the fixed harmonic quadruple within the letter order
HARMONIC_LETTERS = (0, 2, 3, 5)  # A, C, D, F

#: reference parameters of the harmonic letters: A->0, C->inf, D->1, F->-1
HARMONIC_SLOTS = {
    0: (Fraction(0), Fraction(1)),
    2: (Fraction(1), Fraction(0)),
    3: (Fraction(1), Fraction(1)),
    5: (Fraction(-1), Fraction(1)),
}


def bounce_map() -> Mobius:
    """The map s -> (s-1)/(s+1) carrying B's parameter to E's."""
    return Mobius(1, -1, 1, 1)


def sigma_sextuple(t) -> tuple[ConicPoint, ...]:
    """The reference sextuple (0, t, inf, 1, (t-1)/(t+1), -1) in letter order."""
    bt = ConicPoint(t, 1)
    pts = (
        ConicPoint(0, 1),
        bt,
        ConicPoint.infinity(),
        ConicPoint(1, 1),
        bounce_map().apply(bt),
        ConicPoint(-1, 1),
    )
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError(
                    f"degenerate reference sextuple: {LETTERS[i]} = {LETTERS[j]} at t = {t}"
                )
    return pts


@dataclass(frozen=True)
class Alignment:
    """A labelling of six points that lands on the reference row.

    `order` gives, per letter A..F, the index of the point it labels;
    `witness` carries the labelled points onto (0, t, inf, 1, ff(t), -1).
    """

    order: tuple[int, ...]
    witness: Mobius
    t: Scalar

    def labelled(self, points) -> tuple[ConicPoint, ...]:
        pts = tuple(points)
        return tuple(pts[i] for i in self.order)


def _check_labelled(pts) -> tuple[Mobius, Scalar] | None:
    """Alignment test for a fixed labelling (A..F order); None when it fails."""
    a, b, c, d, e, f = pts
    mu = mobius_through(
        (a, c, d), (ConicPoint(0, 1), ConicPoint.infinity(), ConicPoint(1, 1))
    )
    if mu.apply(f) != ConicPoint(-1, 1):
        return None
    bt = mu.apply(b)
    if mu.apply(e) != bounce_map().apply(bt):
        return None
    return mu, bt.affine_value()


def alignment_search(points) -> list[Alignment]:
    """All labellings of a sextuple that realize it as a ricochet row.

    Brute force over the 720 bijections, with a cheap harmonicity pre-filter
    on the (A, C, D, F) slots.  Empty exactly when the sextuple is not in
    R-configuration over its field of definition.
    """
    pts = tuple(points)
    if len(pts) != 6:
        raise DegenerateGeometryError("need exactly six points")
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError(
                    f"invalid sextuple: points {i} and {j} coincide"
                )
    out = []
    for order in permutations(range(6)):
        a, b, c, d, e, f = (pts[i] for i in order)
        if not is_harmonic_ordered(a, c, d, f):
            continue
        hit = _check_labelled((a, b, c, d, e, f))
        if hit is not None:
            out.append(Alignment(order, hit[0], hit[1]))
    return out


# ---------------------------------------------------------------------------
# invariants of a quartic/quadratic pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairInvariants:
    """Individual and joint invariants of a quartic Q and quadratic D pair.

    theta20 = (Q,Q)_4, theta30 = (Q,(Q,Q)_2)_4, delta02 = (D,D)_2,
    beta12 = (Q,D^2)_4, beta22 = (H,D^2)_4, beta33 = (T,D^3)_6
    with H = (Q,Q)_2 and T = (Q,H)_1.
    """

    theta20: Scalar
    theta30: Scalar
    delta02: Scalar
    beta12: Scalar
    beta22: Scalar
    beta33: Scalar


def pair_invariants(quartic: BinaryForm, quadratic: BinaryForm) -> PairInvariants:
    if quartic.degree != 4 or quartic.is_zero():
        raise DegenerateGeometryError("need a nonzero quartic")
    if quadratic.degree != 2 or quadratic.is_zero():
        raise DegenerateGeometryError("need a nonzero quadratic")
    h = transvectant(quartic, quartic, 2)
    tt = transvectant(quartic, h, 1)
    d2 = quadratic * quadratic
    return PairInvariants(
        theta20=transvectant_scalar(quartic, quartic, 4),
        theta30=transvectant_scalar(quartic, h, 4),
        delta02=transvectant_scalar(quadratic, quadratic, 2),
        beta12=transvectant_scalar(quartic, d2, 4),
        beta22=transvectant_scalar(h, d2, 4),
        beta33=transvectant_scalar(tt, d2 * quadratic, 6),
    )


# ---------------------------------------------------------------------------
# invariants of binary sextics
# ---------------------------------------------------------------------------

RECIPES = (
    "I2 = (f,f)_6",
    "I4 = (i,i)_4 with i = (f,f)_4",
    "I6 = (l,l)_2 with l = (f,i)_4",
    "I10 = (f, l^3)_6",
)


@dataclass(frozen=True)
class SexticInvariants:
    """The degree 2, 4, 6, 10 invariants of a binary sextic.

    `recipes` records the transvectant compound used for each value; the
    normalization matches the classical tables with constant 1.
    """

    i2: Scalar
    i4: Scalar
    i6: Scalar
    i10: Scalar
    recipes: tuple[str, ...] = RECIPES


def sextic_invariants(f: BinaryForm) -> SexticInvariants:
    if f.degree != 6:
        raise DegenerateGeometryError(f"need a sextic, got degree {f.degree}")
    if f.is_zero():
        raise DegenerateGeometryError("need a nonzero sextic")
    i = transvectant(f, f, 4)
    l = transvectant(f, i, 4)
    return SexticInvariants(
        i2=transvectant_scalar(f, f, 6),
        i4=transvectant_scalar(i, i, 4),
        i6=transvectant_scalar(l, l, 2),
        i10=transvectant_scalar(f, l * l * l, 6),
    )


def sextic_i6_alternate(f: BinaryForm) -> Scalar:
    """A second, independent degree-6 invariant: (i, (i,i)_2)_4.

    Not proportional to I6 (it has components along I2^3 and I2*I4); used to
    confirm that the derived degree-6 relation is basis-independent.
    """
    i = transvectant(f, f, 4)
    return transvectant_scalar(i, transvectant(i, i, 2), 4)


# ---------------------------------------------------------------------------
# reference sextic over Q[t] and the kernel derivations
# ---------------------------------------------------------------------------


def reference_sextic_scaled() -> BinaryForm:
    """(t+1) times the reference sextic, with polynomial coefficients.

    Clearing the single denominator keeps every invariant a polynomial in t;
    since invariants are homogeneous in the coefficients, all products of one
    degree scale by the same power of (t+1) and kernels are unchanged.
    """
    one = Poly.const(1)
    return form_from_roots(
        [
            (Poly(), one),
            (one, Poly()),
            (one, one),
            (Poly.const(-1), one),
            (Poly.x(), one),
            (Poly((-1, 1)), Poly((1, 1))),
        ]
    )


_DEGREE_BASES = {
    2: ("I2",),
    4: ("I2^2", "I4"),
    6: ("I2^3", "I2*I4", "I6"),
    8: ("I2^4", "I2^2*I4", "I4^2", "I2*I6"),
    10: ("I2^5", "I2^3*I4", "I2*I4^2", "I2^2*I6", "I4*I6", "I10"),
}


def _basis_values(inv: SexticInvariants, degree: int) -> list:
    i2, i4, i6, i10 = inv.i2, inv.i4, inv.i6, inv.i10
    if degree == 2:
        return [i2]
    if degree == 4:
        return [i2 * i2, i4]
    if degree == 6:
        return [i2**3, i2 * i4, i6]
    if degree == 8:
        return [i2**4, i2 * i2 * i4, i4 * i4, i2 * i6]
    if degree == 10:
        return [i2**5, i2**3 * i4, i2 * i4 * i4, i2 * i2 * i6, i4 * i6, i10]
    raise ValueError(f"no invariant basis recorded for degree {degree}")


@lru_cache(maxsize=None)
def invariant_kernel(degree: int, alternate_i6: bool = False) -> tuple[tuple[int, ...], ...]:
    """Integer basis of the relations among degree-d invariant products on the
    reference sextic, by clearing denominators and fraction-free elimination."""
    g = reference_sextic_scaled()
    inv = sextic_invariants(g)
    if alternate_i6:
        alt = sextic_i6_alternate(g)
        inv = SexticInvariants(inv.i2, inv.i4, alt, inv.i10, recipes=())
    values = _basis_values(inv, degree)
    polys = [v if isinstance(v, Poly) else Poly.const(v) for v in values]
    nrows = max(p.degree for p in polys) + 1
    rows = [
        primitive_ints(
            [p.coeffs[k] if k <= p.degree else Fraction(0) for p in polys]
        )
        for k in range(nrows)
    ]
    return tuple(tuple(v) for v in nullspace(rows))


def derive_u6(alternate_i6: bool = False) -> tuple[int, int, int]:
    """The unique degree-6 relation on the reference family, as coprime
    integers over the basis (I2^3, I2*I4, I6), positive leading entry."""
    kernel = invariant_kernel(6, alternate_i6)
    if len(kernel) != 1:
        raise DerivationError(
            f"degree-6 kernel has dimension {len(kernel)}, expected 1"
        )
    return kernel[0]


def derive_u10(alternate_i6: bool = False) -> tuple[int, ...]:
    """The degree-10 relation independent of multiples of the degree-6 one.

    The kernel over (I2^5, I2^3*I4, I2*I4^2, I2^2*I6, I4*I6, I10) must have
    dimension exactly 3 and contain the images of U6*I2^2 and U6*I4; those two
    are triangular on the first two coordinates, so reducing any complement
    against them leaves the unique kernel direction with zeros there.
    """
    u6 = derive_u6(alternate_i6)
    kernel = invariant_kernel(10, alternate_i6)
    if len(kernel) != 3:
        raise DerivationError(
            f"degree-10 kernel has dimension {len(kernel)}, expected 3"
        )
    k1 = [u6[0], u6[1], 0, u6[2], 0, 0]  # U6 * I2^2
    k2 = [0, u6[0], u6[1], 0, u6[2], 0]  # U6 * I4
    basis = [list(v) for v in kernel]
    if not (in_span(basis, k1) and in_span(basis, k2)):
        raise DerivationError("degree-10 kernel does not contain the U6 multiples")
    for cand in basis:
        w = [Fraction(v) for v in cand]
        if w[0] != 0:
            ratio = w[0] / k1[0]
            w = [wi - ratio * ki for wi, ki in zip(w, k1)]
        if w[1] != 0:
            ratio = w[1] / k2[1]
            w = [wi - ratio * ki for wi, ki in zip(w, k2)]
        if any(w):
            return tuple(primitive_ints(w))
    raise DerivationError("degree-10 kernel is spanned by U6 multiples")


def evaluate_u6(f: BinaryForm) -> Scalar:
    """U6 of a sextic: the derived combination of I2^3, I2*I4, I6."""
    c = derive_u6()
    inv = sextic_invariants(f)
    return c[0] * inv.i2**3 + c[1] * inv.i2 * inv.i4 + c[2] * inv.i6


def evaluate_u10(f: BinaryForm) -> Scalar:
    """U10 of a sextic: the derived degree-10 combination."""
    c = derive_u10()
    inv = sextic_invariants(f)
    basis = _basis_values(inv, 10)
    acc = c[0] * basis[0]
    for coef, val in zip(c[1:], basis[1:]):
        acc = acc + coef * val
    return acc


# ---------------------------------------------------------------------------
# membership: synthetic and algebraic routes, cross-checked
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipReport:
    """Both membership routes on one sextuple, with their agreement flag."""

    is_rico: bool
    u6: Scalar
    u10: Scalar
    alignments: tuple[Alignment, ...]
    agreement: bool
    invariants: SexticInvariants


def membership(points) -> MembershipReport:
    """Decide R-configuration membership synthetically and algebraically.

    The synthetic route searches for an alignment; the algebraic route tests
    the vanishing of the two defining invariants on the root sextic.  The two
    verdicts are reported together and must agree on every valid input.
    """
    pts = tuple(points)
    f = form_from_roots(pts)
    if not is_squarefree(f):
        raise DegenerateGeometryError("invalid sextuple: repeated points")
    inv = sextic_invariants(f)
    c6 = derive_u6()
    u6 = c6[0] * inv.i2**3 + c6[1] * inv.i2 * inv.i4 + c6[2] * inv.i6
    c10 = derive_u10()
    basis = _basis_values(inv, 10)
    u10 = c10[0] * basis[0]
    for coef, val in zip(c10[1:], basis[1:]):
        u10 = u10 + coef * val
    aligns = tuple(alignment_search(pts))
    algebraic = u6 == 0 and u10 == 0
    return MembershipReport(
        is_rico=algebraic,
        u6=u6,
        u10=u10,
        alignments=aligns,
        agreement=algebraic == bool(aligns),
        invariants=inv,
    )
