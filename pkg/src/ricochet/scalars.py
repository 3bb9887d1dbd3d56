"""Exact scalar arithmetic: rationals, quadratic extensions, rational functions.

Three scalar domains cover everything downstream:

* plain `fractions.Fraction` for rational values,
* `QuadExt` for elements a + b*sqrt(d) of a quadratic field (d squarefree),
* `RatFunc` for quotients of univariate polynomials over the rationals.

All values are immutable and canonical on construction, so `==` is the exact
projective-free equality used everywhere else.  Mixing a quadratic extension
with a rational function (or two extensions with different d) raises
`DomainMismatchError`; rationals coerce freely into either domain.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Union

from .errors import DomainMismatchError, EvaluationPoleError, MalformedScalarError

Scalar = Union[Fraction, "QuadExt", "RatFunc"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# integer helpers: deterministic Miller-Rabin + Pollard rho, squarefree split
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's variant; n must be odd composite, not a prime power of 2.
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _int_gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as an exponent dict (1 -> {})."""
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n = s*s*d with d squarefree (the sign stays on d); return (s, d)."""
    if n == 0:
        return 1, 0
    s, d = 1, 1 if n > 0 else -1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


# ---------------------------------------------------------------------------
# quadratic extensions
# ---------------------------------------------------------------------------


def quadext(a, b=0, d: int = 0) -> Scalar:
    """Canonical a + b*sqrt(d); collapses to a plain Fraction when b*sqrt(d)
    is rational (b = 0, or d a perfect square).  This collapse is what makes
    equality across different d labels decidable."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return a
    s, d0 = squarefree_split(d)
    if d0 == 0:
        return a
    if d0 == 1:
        return a + b * s
    return QuadExt(a, b * s, d0)


class QuadExt:
    """An element a + b*sqrt(d) of a quadratic field, d a squarefree integer.

    Instances always have b != 0: purely rational values are plain Fractions
    (use the `quadext` factory, which collapses them).  Arithmetic is closed
    for a fixed d; rationals coerce in, anything else is a domain mismatch.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int) -> None:
        a, b = Fraction(a), Fraction(b)
        if not isinstance(d, int):
            raise MalformedScalarError(f"radicand must be an integer, got {d!r}")
        s, d0 = squarefree_split(d)
        b = b * s
        if d0 in (0, 1) or b == 0:
            raise MalformedScalarError(
                "value is rational; use the quadext() factory, which collapses it"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d0)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("QuadExt is immutable")

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> tuple[Fraction, Fraction] | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainMismatchError(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) values"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), _ZERO
        if isinstance(other, (RatFunc, Poly)):
            raise DomainMismatchError(
                "cannot mix quadratic-extension and rational-function scalars"
            )
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        ab = self._coerce(other)
        if ab is None:
            return NotImplemented
        return quadext(self.a + ab[0], self.b + ab[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        ab = self._coerce(other)
        if ab is None:
            return NotImplemented
        return quadext(self.a - ab[0], self.b - ab[1], self.d)

    def __rsub__(self, other):
        ab = self._coerce(other)
        if ab is None:
            return NotImplemented
        return quadext(ab[0] - self.a, ab[1] - self.b, self.d)

    def __mul__(self, other):
        ab = self._coerce(other)
        if ab is None:
            return NotImplemented
        a2, b2 = ab
        return quadext(self.a * a2 + self.b * b2 * self.d, self.a * b2 + self.b * a2, self.d)

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        n = self.norm()
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        ab = self._coerce(other)
        if ab is None:
            return NotImplemented
        a2, b2 = ab
        if a2 == 0 and b2 == 0:
            raise ZeroDivisionError("division by zero")
        n = a2 * a2 - b2 * b2 * self.d
        return self * quadext(a2 / n, -b2 / n, self.d)

    def __rtruediv__(self, other):
        ab = self._coerce(other)
        if ab is None:
            return NotImplemented
        return quadext(ab[0], ab[1], self.d) * self.inverse()

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out: Scalar = _ONE
        base: Scalar = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2*d; never zero since d is not a square."""
        return self.a * self.a - self.b * self.b * self.d

    # -- comparison / formatting ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 by construction
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True  # b != 0 implies a + b*sqrt(d) != 0

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        root = f"sqrt({self.d})"
        if self.b == 1:
            bpart = root
        elif self.b == -1:
            bpart = "-" + root
        else:
            bpart = f"{self.b}*{root}"
        if self.a == 0:
            return bpart
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{bpart}"


# ---------------------------------------------------------------------------
# dense univariate polynomials over an exact field
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial, ascending coefficients, exact field scalars.

    Coefficients are Fractions by default but may live in any of the scalar
    domains (the division-based routines then work over that field).  The zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, QuadExt, RatFunc)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        if isinstance(other, (int, Fraction, QuadExt, RatFunc)):
            return Poly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not isinstance(other, Poly):
            other = Poly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = 1 / other.lead
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [_ZERO] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c != 0:
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * oc
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = 1 / self.lead
        return Poly(tuple(c * inv for c in self.coeffs))

    @staticmethod
    def gcd(a: Poly, b: Poly) -> Poly:
        while not b.is_zero():
            a, b = b, (a % b).monic()
        return a.monic()

    def derivative(self) -> Poly:
        return Poly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def eval(self, x0):
        acc: Scalar = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadExt)):
            if not self.coeffs:
                return other == 0
            return self.degree == 0 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if not self.coeffs:
            return hash(_ZERO)
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_str("t")

    def to_str(self, var: str) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"{c}*{mono}"
            else:
                term = str(c)
            if parts and not term.startswith("-"):
                parts.append("+")
            parts.append(term)
        return "".join(parts)


# ---------------------------------------------------------------------------
# rational functions over the rationals
# ---------------------------------------------------------------------------


def _as_qpoly(v, what: str) -> Poly:
    if isinstance(v, Poly):
        bad = [c for c in v.coeffs if not isinstance(c, Fraction)]
        if bad:
            raise DomainMismatchError(f"{what} must have rational coefficients")
        return v
    if isinstance(v, (int, Fraction)):
        return Poly((v,))
    if isinstance(v, (tuple, list)):
        return _as_qpoly(Poly(v), what)
    raise DomainMismatchError(f"{what} must be a rational polynomial, got {type(v).__name__}")


class RatFunc:
    """A rational function num/den in one indeterminate t over the rationals.

    Canonical form: gcd(num, den) = 1, den monic, zero is 0/1.  Equality and
    hashing agree with plain Fractions on constant functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1) -> None:
        n = _as_qpoly(num, "numerator")
        d = _as_qpoly(den, "denominator")
        if d.is_zero():
            raise MalformedScalarError("zero denominator in rational function")
        if n.is_zero():
            d = Poly.const(1)
        else:
            g = Poly.gcd(n, d)
            if g.degree > 0:
                n, d = n // g, d // g
            lead = d.lead
            if lead != 1:
                inv = 1 / lead
                n, d = n * inv, d * inv
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def t(cls) -> RatFunc:
        """The indeterminate itself."""
        return cls(Poly.x())

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(other)
        if isinstance(other, QuadExt):
            raise DomainMismatchError(
                "cannot mix rational-function and quadratic-extension scalars"
            )
        return None

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (RatFunc(1) / self) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    # -- evaluation -----------------------------------------------------------

    def eval(self, t0):
        """Exact value at t0 (any scalar domain); EvaluationPoleError at poles."""
        dv = self.den.eval(t0)
        if dv == 0:
            raise EvaluationPoleError(f"pole at t = {t0}")
        return self.num.eval(t0) / dv

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise MalformedScalarError(f"{self} is not constant")
        if self.num.is_zero():
            return _ZERO
        return self.num.coeffs[0]

    # -- comparison / formatting ----------------------------------------------

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.as_fraction() == Fraction(other)
        if isinstance(other, Poly):
            return self.den.degree == 0 and self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant:
            return hash(self.as_fraction())
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return self.to_str("t")

    def to_str(self, var: str) -> str:
        if self.den == 1:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"


# ---------------------------------------------------------------------------
# parsing / formatting / coercion helpers
# ---------------------------------------------------------------------------

_RAT_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")
_ROOT_RE = re.compile(r"^sqrt\((-?\d+)\)$")


def _parse_rational(s: str) -> Fraction:
    if not _RAT_RE.match(s):
        raise MalformedScalarError(f"bad rational literal {s!r}")
    return Fraction(s)


def parse_scalar(s: str) -> Scalar:
    """Parse "7", "-95/31", "sqrt(-3)", "1/2+3*sqrt(5)", "2-sqrt(7)" etc."""
    s = s.strip().replace(" ", "")
    if not s:
        raise MalformedScalarError("empty scalar literal")
    i = s.find("sqrt")
    if i < 0:
        return _parse_rational(s)
    m = _ROOT_RE.match(s[i:])
    if not m:
        raise MalformedScalarError(f"bad radical in {s!r}")
    d = int(m.group(1))
    prefix = s[:i]
    a, b = _ZERO, _ONE
    if prefix in ("", "+"):
        pass
    elif prefix == "-":
        b = -_ONE
    else:
        if prefix.endswith("*"):
            coef_start = max(prefix.rfind("+", 1), prefix.rfind("-", 1))
            coef = prefix[coef_start if coef_start > 0 else 0 : -1]
            a_str = prefix[: coef_start if coef_start > 0 else 0]
            b = _parse_rational(coef)
            if a_str:
                a = _parse_rational(a_str)
        else:
            # forms "a+" / "a-"
            if prefix.endswith("+"):
                a, b = _parse_rational(prefix[:-1]), _ONE
            elif prefix.endswith("-"):
                a, b = _parse_rational(prefix[:-1]), -_ONE
            else:
                raise MalformedScalarError(f"bad scalar literal {s!r}")
    return quadext(a, b, d)


def format_scalar(x: Scalar | int) -> str:
    """Exact textual form; round-trips through parse_scalar for Q and Q(sqrt d)."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (Fraction, QuadExt, RatFunc)):
        return str(x)
    raise MalformedScalarError(f"not a scalar: {x!r}")


def as_scalar(x) -> Scalar:
    """Coerce an int, string or scalar into canonical scalar form."""
    if isinstance(x, bool) or not isinstance(x, (int, str, Fraction, QuadExt, RatFunc)):
        raise MalformedScalarError(f"not a scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    return x


def canonicalize(x) -> Scalar:
    """Canonical form of a raw field element (idempotent)."""
    return as_scalar(x)
