"""The P(S2) model of the plane: conic, polarity, cross-ratio, involutions.

Points of the conic are parameters [p, q] on the projective line ([a, 1] is
the affine parameter a, [1, 0] is infinity); the Veronese square of the
corresponding linear form embeds them into the plane of quadratic forms,
where the conic is a1^2 = 4*a0*a2.  Lines are stored by their poles, which
turns joins, meets and incidence into first and second transvectants.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateGeometryError, MalformedPointError
from .forms import BinaryForm, transvectant
from .scalars import Scalar, as_scalar

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ConicPoint:
    """A point of the conic, stored as a projective parameter [p, q]."""

    __slots__ = ("p", "q")

    def __init__(self, p, q=_ONE) -> None:
        p, q = as_scalar(p), as_scalar(q)
        if p == 0 and q == 0:
            raise MalformedPointError("projective pair [0, 0] is not a point")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("ConicPoint is immutable")

    @classmethod
    def affine(cls, value) -> ConicPoint:
        return cls(as_scalar(value), _ONE)

    @classmethod
    def infinity(cls) -> ConicPoint:
        return cls(_ONE, _ZERO)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def affine_value(self) -> Scalar:
        if self.is_infinite:
            raise MalformedPointError("the point at infinity has no affine value")
        return self.p / self.q

    def linear_form(self) -> BinaryForm:
        """The linear form q*x1 - p*x2 whose root this parameter is."""
        return BinaryForm((self.q, -self.p), 1)

    def __iter__(self):
        yield self.p
        yield self.q

    def __eq__(self, other):
        if not isinstance(other, ConicPoint):
            return NotImplemented
        return self.p * other.q == other.p * self.q

    def __hash__(self):
        if self.q == 0:
            return hash(("inf",))
        return hash(("aff", self.p / self.q))

    def __repr__(self):
        return f"ConicPoint({self.p!r}, {self.q!r})"

    def __str__(self):
        return "inf" if self.is_infinite else str(self.affine_value())


class PlanePoint:
    """A point of the plane P(S2): a nonzero quadratic form up to scale."""

    __slots__ = ("form",)

    def __init__(self, form) -> None:
        if not isinstance(form, BinaryForm):
            form = BinaryForm(tuple(form), 2)
        if form.degree != 2:
            raise MalformedPointError("a plane point is a degree-2 form")
        if form.is_zero():
            raise MalformedPointError("the zero form is not a point")
        object.__setattr__(self, "form", form)

    def __setattr__(self, name, value):
        raise AttributeError("PlanePoint is immutable")

    @property
    def coeffs(self):
        return self.form.coeffs

    def on_conic(self) -> bool:
        a0, a1, a2 = self.form.coeffs
        return a1 * a1 == 4 * a0 * a2

    def __eq__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        return self.form.proportional_to(other.form)

    def key(self) -> tuple:
        """Canonical projective representative (first nonzero coefficient 1)."""
        cs = self.form.coeffs
        lead = next(c for c in cs if c != 0)
        return tuple(c / lead for c in cs)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PlanePoint({list(self.form.coeffs)!r})"

    def __str__(self):
        return str(self.form)


class LineByPole:
    """A line of the plane, stored as its pole with respect to the conic."""

    __slots__ = ("pole",)

    def __init__(self, pole: PlanePoint) -> None:
        if not isinstance(pole, PlanePoint):
            pole = PlanePoint(pole)
        object.__setattr__(self, "pole", pole)

    def __setattr__(self, name, value):
        raise AttributeError("LineByPole is immutable")

    def __eq__(self, other):
        if not isinstance(other, LineByPole):
            return NotImplemented
        return self.pole == other.pole

    def key(self) -> tuple:
        return self.pole.key()

    def __hash__(self):
        return hash(("line", self.key()))

    def __repr__(self):
        return f"LineByPole({list(self.pole.form.coeffs)!r})"


class Mobius:
    """A fractional linear map [p, q] -> [a*p + b*q, c*p + d*q] up to scale.

    Equivalently s -> (a*s + b)/(c*s + d) on affine parameters.  The entries
    may live in any one scalar domain; the determinant must not vanish.
    """

    __slots__ = ("m",)

    def __init__(self, a, b, c, d) -> None:
        a, b, c, d = (as_scalar(v) for v in (a, b, c, d))
        if a * d - b * c == 0:
            raise DegenerateGeometryError("singular matrix does not define a map")
        object.__setattr__(self, "m", (a, b, c, d))

    def __setattr__(self, name, value):
        raise AttributeError("Mobius is immutable")

    @classmethod
    def identity(cls) -> Mobius:
        return cls(1, 0, 0, 1)

    def apply(self, pt: ConicPoint) -> ConicPoint:
        a, b, c, d = self.m
        return ConicPoint(a * pt.p + b * pt.q, c * pt.p + d * pt.q)

    def __call__(self, pt: ConicPoint) -> ConicPoint:
        return self.apply(pt)

    def __mul__(self, other: Mobius) -> Mobius:
        """Composition: (self * other) applies `other` first."""
        if not isinstance(other, Mobius):
            return NotImplemented
        a, b, c, d = self.m
        e, f, g, h = other.m
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> Mobius:
        a, b, c, d = self.m
        return Mobius(d, -b, -c, a)

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        s, o = self.m, other.m
        return all(
            s[i] * o[j] == s[j] * o[i] for i in range(4) for j in range(i + 1, 4)
        )

    def key(self) -> tuple:
        lead = next(v for v in self.m if v != 0)
        return tuple(v / lead for v in self.m)

    def __hash__(self):
        return hash(self.key())

    def is_identity(self) -> bool:
        a, b, c, d = self.m
        return b == 0 and c == 0 and a == d

    def is_involution(self) -> bool:
        sq = self * self
        a, b, c, d = sq.m
        return b == 0 and c == 0 and a == d

    def on_form(self, form: BinaryForm) -> BinaryForm:
        """Induced substitution action on binary forms of any degree.

        Chosen so that for degree-1 forms it matches `apply` on parameters:
        the image of the linear form of [p, q] is the linear form of the
        image point, up to scale.
        """
        a, b, c, d = self.m
        return form.substitute(d, -b, -c, a)

    def __repr__(self):
        return f"Mobius{self.m!r}"

    def to_str(self, var: str = "s") -> str:
        a, b, c, d = self.m
        num = _affine_str(a, b, var)
        den = _affine_str(c, d, var)
        return f"({num})/({den})" if den != "1" else num


def _affine_str(u, v, var: str) -> str:
    if u == 0:
        return str(v)
    if u == 1:
        head = var
    elif u == -1:
        head = f"-{var}"
    else:
        head = f"{u}*{var}"
    if v == 0:
        return head
    vs = str(v)
    return f"{head}{vs}" if vs.startswith("-") else f"{head}+{vs}"


# ---------------------------------------------------------------------------
# polarity dictionary: joins, meets, incidence
# ---------------------------------------------------------------------------


def pairing(p: PlanePoint, r: PlanePoint):
    """The polarity pairing (p, r)_2 = a0*b2 + a2*b0 - a1*b1/2."""
    a0, a1, a2 = p.form.coeffs
    b0, b1, b2 = r.form.coeffs
    return a0 * b2 + a2 * b0 - a1 * b1 / 2


def veronese(t: ConicPoint) -> PlanePoint:
    """Veronese image: the square of the point's linear form; lies on the conic."""
    lf = t.linear_form()
    return PlanePoint(lf * lf)


def join(p1: PlanePoint, p2: PlanePoint) -> LineByPole:
    """Line through two distinct points, as its pole (p1, p2)_1."""
    j = transvectant(p1.form, p2.form, 1)
    if j.is_zero():
        raise DegenerateGeometryError("join of equal points is undefined")
    return LineByPole(PlanePoint(j))


def meet(l1: LineByPole, l2: LineByPole) -> PlanePoint:
    """Intersection point of two distinct lines, via the poles' transvectant."""
    j = transvectant(l1.pole.form, l2.pole.form, 1)
    if j.is_zero():
        raise DegenerateGeometryError("meet of equal lines is undefined")
    return PlanePoint(j)


def incident(p: PlanePoint, line: LineByPole) -> bool:
    """Whether the point lies on the line: the pairing with the pole vanishes."""
    return pairing(p, line.pole) == 0


def collinear(p1: PlanePoint, p2: PlanePoint, p3: PlanePoint) -> bool:
    """Whether three plane points lie on one line (any two may coincide)."""
    if p1 == p2 or p1 == p3 or p2 == p3:
        return True
    return incident(p3, join(p1, p2))


def chord(t1: ConicPoint, t2: ConicPoint) -> LineByPole:
    """Line through two conic points; the tangent when they coincide.

    The pole is the product of the two linear forms, which equals the join of
    the Veronese images up to scale but stays valid in the tangent case.
    """
    return LineByPole(PlanePoint(t1.linear_form() * t2.linear_form()))


def tangent(t: ConicPoint) -> LineByPole:
    return chord(t, t)


def other_conic_point(line: LineByPole, known: ConicPoint) -> ConicPoint:
    """Second intersection of a line with the conic, given one intersection.

    The conic points on a line are the roots of its pole read as a binary
    quadratic, so this is one exact deflation of that quadratic.
    """
    r0, r1, r2 = line.pole.form.coeffs
    p, q = known.p, known.q
    # divide r0*x1^2 + r1*x1*x2 + r2*x2^2 by the linear form q*x1 - p*x2
    if q != 0:
        c0 = r0 / q
        c1 = (r1 + p * c0) / q
        if -p * c1 != r2:
            raise DegenerateGeometryError("known point does not lie on the line")
    else:
        if r0 != 0:
            raise DegenerateGeometryError("known point does not lie on the line")
        c0, c1 = r1 / (-p), r2 / (-p)
    return ConicPoint(-c1, c0)


# ---------------------------------------------------------------------------
# cross-ratio and interpolation
# ---------------------------------------------------------------------------


def _det(x: ConicPoint, y: ConicPoint):
    return x.p * y.q - y.p * x.q


def cross_ratio(a: ConicPoint, b: ConicPoint, c: ConicPoint, d: ConicPoint) -> Scalar:
    """The cross-ratio ((a-c)(b-d)) / ((a-d)(b-c)), evaluated projectively."""
    pts = (a, b, c, d)
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateGeometryError("cross-ratio needs four distinct points")
    return (_det(a, c) * _det(b, d)) / (_det(a, d) * _det(b, c))


def is_harmonic_ordered(a: ConicPoint, c: ConicPoint, d: ConicPoint, f: ConicPoint) -> bool:
    """Whether the cross-ratio <a, c, d, f> equals -1, multiplication only."""
    return _det(a, d) * _det(c, f) + _det(a, f) * _det(c, d) == 0


def _to_standard(p1: ConicPoint, p2: ConicPoint, p3: ConicPoint) -> Mobius:
    """The map sending p1, p2, p3 to 0, infinity, 1."""
    k1 = _det(p2, p3)
    k2 = _det(p1, p3)
    return Mobius(k1 * p1.q, -k1 * p1.p, k2 * p2.q, -k2 * p2.p)


def mobius_through(sources, targets) -> Mobius:
    """The unique map carrying three distinct sources to three distinct targets."""
    s1, s2, s3 = sources
    t1, t2, t3 = targets
    if s1 == s2 or s1 == s3 or s2 == s3:
        raise DegenerateGeometryError("no unique map: repeated source point")
    if t1 == t2 or t1 == t3 or t2 == t3:
        raise DegenerateGeometryError("no unique map: repeated target point")
    return _to_standard(t1, t2, t3).inverse() * _to_standard(s1, s2, s3)


# ---------------------------------------------------------------------------
# involutions from a point
# ---------------------------------------------------------------------------


def involution_from_point(q: PlanePoint) -> Mobius:
    """The involution of the conic swapping the intersections of lines through q.

    On parameters it is the matrix [[-a1, -2*a2], [2*a0, a1]]; its fixed points
    are exactly the contact points of the tangents from q, i.e. the conic
    points on the polar of q.
    """
    if q.on_conic():
        raise DegenerateGeometryError("involution center must lie off the conic")
    a0, a1, a2 = q.form.coeffs
    return Mobius(-a1, -2 * a2, 2 * a0, a1)


def second_intersection(q: PlanePoint, t: ConicPoint) -> ConicPoint:
    """The other intersection of the line q-t with the conic (t if tangent)."""
    return involution_from_point(q).apply(t)


def mobius_on_plane(m: Mobius, obj):
    """Symmetric-square action of a parameter map on plane points and lines."""
    if isinstance(obj, PlanePoint):
        return PlanePoint(m.on_form(obj.form))
    if isinstance(obj, LineByPole):
        return LineByPole(PlanePoint(m.on_form(obj.pole.form)))
    raise TypeError(f"cannot act on {type(obj).__name__}")
