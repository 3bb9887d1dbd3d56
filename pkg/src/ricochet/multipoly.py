"""Sparse multivariate polynomials over the rationals.

Used as a coefficient domain for binary forms when an identity has to be
checked symbolically in the form's coefficients (Hessian coefficient formulas,
the degree-3 quartic invariant, expanded invariant combinations for sextics).
Only ring operations are provided; there is no division.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


class MultiPoly:
    """Polynomial in n variables: dict from exponent tuples to Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None) -> None:
        clean = {}
        for mono, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef != 0:
                if len(mono) != nvars:
                    raise ValueError("exponent tuple of wrong length")
                clean[tuple(mono)] = coef
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def const(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def gens(cls, nvars: int) -> list[MultiPoly]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(nvars, {tuple(e): Fraction(1)}))
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixing polynomials in different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coef in o.terms.items():
            out[mono] = out.get(mono, _ZERO) + coef
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixing polynomials in different variable sets")
            out: dict[tuple, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    out[m] = out.get(m, _ZERO) + c1 * c2
            return MultiPoly(self.nvars, out)
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not self.terms:
                return other == 0
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def lead_term(self) -> tuple[tuple, Fraction]:
        """Lexicographically largest monomial and its coefficient."""
        mono = max(self.terms)
        return mono, self.terms[mono]

    def proportional_to(self, other: MultiPoly) -> bool:
        """True iff self = c * other for some nonzero rational c."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        m, c = self.lead_term()
        if m not in other.terms:
            return False
        return self * other.terms[m] == other * c

    def subs(self, values):
        """Evaluate at the given scalars (one per variable)."""
        acc = _ZERO
        for mono, coef in sorted(self.terms.items()):
            term = coef
            for v, e in zip(values, mono):
                for _ in range(e):
                    term = term * v
            acc = acc + term
        return acc

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            coef = self.terms[mono]
            vars_part = "*".join(
                f"a{i}" if e == 1 else f"a{i}^{e}" for i, e in enumerate(mono) if e
            )
            if not vars_part:
                part = str(coef)
            elif coef == 1:
                part = vars_part
            elif coef == -1:
                part = "-" + vars_part
            else:
                part = f"{coef}*{vars_part}"
            if parts and not part.startswith("-"):
                parts.append("+")
            parts.append(part)
        return "".join(parts)
