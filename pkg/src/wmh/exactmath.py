"""Exact arithmetic substrate: rationals, dense univariate polynomials and
truncated integer power series.

Everything here is exact. Polynomial coefficients are `fractions.Fraction`
(arbitrary precision, always reduced, positive denominator), series
coefficients are Python ints. No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

# Exact rational numbers. Fraction already maintains the invariants we need:
# reduced form, denominator > 0, zero stored as 0/1.
Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial in t with Fraction coefficients.

    ``coeffs`` is stored in ascending powers with no trailing zeros; the zero
    polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def constant(cls, value) -> "UniPoly":
        return cls((value,))

    @classmethod
    def t(cls) -> "UniPoly":
        """The polynomial t."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, m: int) -> Fraction:
        """Coefficient of t^m (0 beyond the degree)."""
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return UniPoly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor) -> "UniPoly":
        f = _as_fraction(factor)
        return UniPoly(tuple(c * f for c in self.coeffs))

    def __call__(self, point) -> Fraction:
        """Evaluate at ``point`` by Horner's rule, exactly."""
        x = _as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def int_scaled(self, factor: int) -> tuple[int, ...]:
        """Coefficients of ``factor * self``, which must all be integers."""
        out = []
        for c in self.coeffs:
            v = c * factor
            if v.denominator != 1:
                raise ValueError(f"{factor} * {c} is not an integer")
            out.append(v.numerator)
        return tuple(out)

    def pretty(self, var: str = "t") -> str:
        """Human-readable form, highest power first, e.g. '1/2 t^2 + 3/2 t + 1'."""
        if not self.coeffs:
            return "0"
        parts = []
        for m in range(self.degree, -1, -1):
            c = self.coeffs[m]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if m == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag} "
                body = f"{head}{var}" if m == 1 else f"{head}{var}^{m}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.pretty()


def binomial_poly(linear: UniPoly, d: int) -> UniPoly:
    """C(linear(t), d) as a polynomial in t.

    Expands linear(t) * (linear(t)-1) * ... * (linear(t)-d+1) / d! exactly, so
    evaluating at any integer point matches the generalized binomial
    coefficient of the evaluated argument.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if linear.degree > 1:
        raise ValueError("argument must have degree <= 1")
    prod = UniPoly.constant(1)
    for j in range(d):
        prod = prod * (linear - UniPoly.constant(j))
    return prod.scale(Fraction(1, factorial(d)))


def lagrange_interpolate(points: Sequence[tuple[int, int]]) -> UniPoly:
    """Unique polynomial of degree < len(points) through the given points.

    Uses Newton's divided differences over Fractions. Abscissae must be
    pairwise distinct.
    """
    if not points:
        raise ValueError("at least one point required")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation points")
    dd = [Fraction(y) for _, y in points]
    npts = len(points)
    # dd[i] becomes the i-th order divided difference f[x_0..x_i]
    for order in range(1, npts):
        for i in range(npts - 1, order - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - order])
    poly = UniPoly.zero()
    basis = UniPoly.constant(1)
    for i in range(npts):
        poly = poly + basis.scale(dd[i])
        basis = basis * (UniPoly.t() - UniPoly.constant(xs[i]))
    return poly


@dataclass(frozen=True)
class TruncSeries:
    """Integer power series in x truncated at a fixed degree bound.

    ``coeffs`` always has length ``bound + 1`` (coefficients of x^0..x^bound).
    """

    bound: int
    coeffs: tuple[int, ...]

    def __init__(self, bound: int, coeffs: Iterable[int]):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        cs = list(coeffs)
        if len(cs) > bound + 1:
            raise ValueError("too many coefficients for bound")
        cs.extend(0 for _ in range(bound + 1 - len(cs)))
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def geometric(cls, top_degree: int, bound: int) -> "TruncSeries":
        """1 + x + ... + x^top_degree, truncated at the bound."""
        return cls(bound, tuple(1 if j <= top_degree else 0 for j in range(bound + 1)))

    def coefficient(self, j: int) -> int:
        if 0 <= j <= self.bound:
            return self.coeffs[j]
        raise IndexError(f"coefficient {j} beyond bound {self.bound}")

    def mul(self, other: "TruncSeries") -> "TruncSeries":
        if self.bound != other.bound:
            raise ValueError("mismatched series bounds")
        b = self.bound
        out = [0] * (b + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(b + 1 - i):
                c = other.coeffs[j]
                if c:
                    out[i + j] += a * c
        return TruncSeries(b, out)

    def derivative(self) -> "TruncSeries":
        # Shifts down and multiplies; the bound is kept, so the top
        # coefficient of the result is 0 (it is no longer determined).
        out = [(j + 1) * self.coeffs[j + 1] for j in range(self.bound)]
        out.append(0)
        return TruncSeries(self.bound, out)

    def scale(self, factor: int) -> "TruncSeries":
        return TruncSeries(self.bound, tuple(factor * c for c in self.coeffs))

    def exact_div(self, divisor: int) -> "TruncSeries":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, divisor)
            if r:
                raise ValueError(f"coefficient {c} not divisible by {divisor}")
            out.append(q)
        return TruncSeries(self.bound, out)

    def truncate(self, new_bound: int) -> "TruncSeries":
        if new_bound > self.bound:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(new_bound, self.coeffs[: new_bound + 1])
