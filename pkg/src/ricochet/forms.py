"""Binary forms with exact coefficients, transvectants, quartic covariants.

A degree-m form is stored as the coefficient list c_0..c_m of

    sum_k  c_k * x1^(m-k) * x2^k,

matching the classical a0*x1^4 + a1*x1^3*x2 + ... reading order.  Coefficients
may be Fractions, quadratic-extension or rational-function scalars, or even
polynomial ring elements (which support everything except division).

The transvectant here carries the classical factorial normalization

    (A, B)_r = (m-r)!(n-r)!/(m!n!) * sum_k (-1)^k C(r,k)
               * d^r A / dx1^(r-k) dx2^k  *  d^r B / dx1^k dx2^(r-k).

This exact scaling is load-bearing: it reproduces (x1^2, x2^2)_1 = x1*x2, the
Hessian coefficient (1/3)a0*a2 - (1/8)a1^2, and the quartic-pair value 1/2 on
x1*x2*(x1-x2)*(x1+x2).  Do not change it without re-pinning those values.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import FormDegreeError, MalformedPointError, ZeroFormError
from .multipoly import MultiPoly
from .scalars import Poly, QuadExt, RatFunc, as_scalar

_ZERO = Fraction(0)

_COEFF_TYPES = (Fraction, QuadExt, RatFunc, Poly, MultiPoly)


def _coeff(c):
    if isinstance(c, _COEFF_TYPES):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return as_scalar(c)


class BinaryForm:
    """Homogeneous form of fixed degree in x1, x2 with exact coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs, degree: int | None = None) -> None:
        cs = tuple(_coeff(c) for c in coeffs)
        if degree is None:
            if not cs:
                raise FormDegreeError("empty coefficient list")
            degree = len(cs) - 1
        elif len(cs) != degree + 1:
            raise FormDegreeError(
                f"degree {degree} needs {degree + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @classmethod
    def zero(cls, degree: int) -> BinaryForm:
        return cls((_ZERO,) * (degree + 1), degree)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise FormDegreeError("cannot add forms of different degrees")
        return BinaryForm(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.degree
        )

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> BinaryForm:
        return BinaryForm(tuple(-c for c in self.coeffs), self.degree)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [_ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(tuple(out), self.degree + other.degree)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> BinaryForm:
        return BinaryForm(tuple(c * s for c in self.coeffs), self.degree)

    def __pow__(self, n: int) -> BinaryForm:
        out = BinaryForm((Fraction(1),), 0)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def proportional_to(self, other: BinaryForm) -> bool:
        """Projective equality: equal up to a nonzero scalar."""
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        i = next(k for k, c in enumerate(self.coeffs) if c != 0)
        if other.coeffs[i] == 0:
            return False
        return all(
            a * other.coeffs[i] == b * self.coeffs[i]
            for a, b in zip(self.coeffs, other.coeffs)
        )

    # -- calculus -------------------------------------------------------------

    def dx1(self) -> BinaryForm:
        if self.degree == 0:
            raise FormDegreeError("cannot differentiate a constant form")
        return BinaryForm(
            tuple(c * (self.degree - k) for k, c in enumerate(self.coeffs[:-1])),
            self.degree - 1,
        )

    def dx2(self) -> BinaryForm:
        if self.degree == 0:
            raise FormDegreeError("cannot differentiate a constant form")
        return BinaryForm(
            tuple(c * k for k, c in enumerate(self.coeffs[1:], start=1)),
            self.degree - 1,
        )

    def diff(self, i: int, j: int) -> BinaryForm:
        """Iterated partial derivative d^(i+j) / dx1^i dx2^j."""
        out = self
        for _ in range(i):
            out = out.dx1()
        for _ in range(j):
            out = out.dx2()
        return out

    # -- substitution and evaluation -------------------------------------------

    def substitute(self, a, b, c, d) -> BinaryForm:
        """The form f(a*x1 + b*x2, c*x1 + d*x2)."""
        a, b, c, d = (_coeff(v) for v in (a, b, c, d))
        m = self.degree
        one = BinaryForm((Fraction(1),), 0)
        lin1 = BinaryForm((a, b), 1)
        lin2 = BinaryForm((c, d), 1)
        pow1 = [one]
        pow2 = [one]
        for _ in range(m):
            pow1.append(pow1[-1] * lin1)
            pow2.append(pow2[-1] * lin2)
        out = BinaryForm.zero(m)
        for k, coef in enumerate(self.coeffs):
            if coef == 0:
                continue
            out = out + (pow1[m - k] * pow2[k]).scale(coef)
        return out

    def evaluate(self, p, q):
        """Value at (x1, x2) = (p, q)."""
        acc = _ZERO
        for k, coef in enumerate(self.coeffs):
            term = coef
            for _ in range(self.degree - k):
                term = term * p
            for _ in range(k):
                term = term * q
            acc = acc + term
        return acc

    def __repr__(self):
        return f"BinaryForm({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        m = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e1, e2 = m - k, k
            mono = "*".join(
                ([f"x1^{e1}"] if e1 > 1 else ["x1"] if e1 == 1 else [])
                + ([f"x2^{e2}"] if e2 > 1 else ["x2"] if e2 == 1 else [])
            )
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:] or "/" in cs:
                cs = f"({cs})"
            part = f"{cs}*{mono}" if mono else cs
            if parts and not part.startswith("-"):
                parts.append("+")
            parts.append(part)
        return "".join(parts)


def transvectant(a: BinaryForm, b: BinaryForm, r: int) -> BinaryForm:
    """The classically normalized r-th transvectant (a, b)_r."""
    m, n = a.degree, b.degree
    if r < 0 or r > min(m, n):
        raise FormDegreeError(f"transvectant order {r} out of range for degrees {m}, {n}")
    factor = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    out = BinaryForm.zero(m + n - 2 * r)
    for k in range(r + 1):
        term = a.diff(r - k, k) * b.diff(k, r - k)
        sign = -comb(r, k) if k % 2 else comb(r, k)
        out = out + term.scale(Fraction(sign))
    return out.scale(factor)


def transvectant_scalar(a: BinaryForm, b: BinaryForm, r: int):
    """A transvectant that lands in degree 0, unwrapped to a scalar."""
    out = transvectant(a, b, r)
    if out.degree != 0:
        raise FormDegreeError("transvectant is not a scalar")
    return out.coeffs[0]


def hessian(f: BinaryForm) -> BinaryForm:
    """Hessian covariant (f, f)_2 of a binary quartic."""
    if f.degree != 4:
        raise FormDegreeError(f"hessian is defined for quartics, got degree {f.degree}")
    if f.is_zero():
        raise ZeroFormError("hessian of the zero form")
    return transvectant(f, f, 2)


def quartic_invariants(f: BinaryForm):
    """The fundamental invariants (j2, j3) = ((f,f)_4, (f,(f,f)_2)_4) of a quartic.

    j3 vanishes exactly when the four roots form a harmonic quadruple.
    """
    if f.degree != 4:
        raise FormDegreeError(f"expected a quartic, got degree {f.degree}")
    if f.is_zero():
        raise ZeroFormError("invariants of the zero form")
    j2 = transvectant_scalar(f, f, 4)
    j3 = transvectant_scalar(f, transvectant(f, f, 2), 4)
    return j2, j3


def form_from_roots(points) -> BinaryForm:
    """Product of the linear forms q*x1 - p*x2 over projective parameters [p, q].

    Accepts ConicPoint instances or raw (p, q) pairs; the parameter [p, q]
    contributes the factor whose root it is, so 0 -> x1 and infinity -> x2.
    """
    pts = list(points)
    if not pts:
        raise MalformedPointError("need at least one root")
    out = BinaryForm((Fraction(1),), 0)
    for pt in pts:
        p, q = pt
        if p == 0 and q == 0:
            raise MalformedPointError("projective pair [0, 0] is not a point")
        out = out * BinaryForm((q, -p), 1)
    return out


def is_squarefree(f: BinaryForm) -> bool:
    """Whether f has no repeated linear factor over the algebraic closure.

    Computed from the gcd of the dehomogenization with its derivative, plus
    the multiplicity of the root at infinity (leading zero coefficients).
    """
    if f.is_zero():
        raise ZeroFormError("the zero form is not squarefree")
    lead_zeros = 0
    while f.coeffs[lead_zeros] == 0:
        lead_zeros += 1
    if lead_zeros >= 2:
        return False
    # u(x) = f(x, 1) with ascending coefficients c_m .. c_(lead_zeros)
    u = Poly(tuple(reversed(f.coeffs[lead_zeros:])))
    if u.degree <= 0:
        return True
    return Poly.gcd(u, u.derivative()).degree == 0
