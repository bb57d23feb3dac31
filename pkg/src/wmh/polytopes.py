"""Weighted multi-hypersimplex specifications and the four Ehrhart
computation paths.

A spec (k, a, c) describes the polytope of nonnegative real vectors with
coordinate sum k whose i-th block of a_i consecutive coordinates sums to at
most c_i.  The t-th dilate count is computed four ways that must agree:

* brute-force lattice counting over block totals (with a raw-vector oracle),
* coefficient extraction from a truncated generating-function product,
* the classical alternating binomial formula for hypersimplices,
* closed coefficient formulas for the [0,c_i]-box slice and for the
  (1,...,1,2)-block family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinatorics import elem_sym_range, rho
from .exactmath import TruncSeries, UniPoly, binomial_poly, lagrange_interpolate

METHOD_BRUTE_INTERP = "brute_interp"
METHOD_GENFUN_INTERP = "genfun_interp"
METHOD_CLOSED_HYPERSIMPLEX = "closed_hypersimplex"
METHOD_CLOSED_RKC = "closed_rkc"
METHOD_CLOSED_PAN5TERM = "closed_pan5term"


class EmptyPolytopeError(ValueError):
    """Raised by closed forms when the requested polytope has no points."""


def _check_positive_tuple(name: str, values: tuple[int, ...]) -> None:
    if not values or any((not isinstance(v, int)) or v < 1 for v in values):
        raise ValueError(f"{name} must be a nonempty tuple of positive integers")


@dataclass(frozen=True)
class PolytopeSpec:
    """The triple (k, a, c): total sum k, block sizes a, block caps c."""

    k: int
    a: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError("k must be a positive integer")
        _check_positive_tuple("a", self.a)
        _check_positive_tuple("c", self.c)
        if len(self.a) != len(self.c):
            raise ValueError("a and c must have the same length")

    @property
    def n(self) -> int:
        """Ambient dimension (number of coordinates)."""
        return sum(self.a)

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def capacity(self) -> int:
        return sum(self.c)

    @classmethod
    def hypersimplex(cls, k: int, n: int) -> "PolytopeSpec":
        """0/1-cube slice at coordinate sum k."""
        return cls(k, (1,) * n, (1,) * n)

    @classmethod
    def r_kc(cls, k: int, c: tuple[int, ...]) -> "PolytopeSpec":
        """Box [0,c_1] x ... x [0,c_n] sliced at coordinate sum k."""
        return cls(k, (1,) * len(c), tuple(c))

    @classmethod
    def panhandle(cls, k: int, r: int, n: int) -> "PolytopeSpec":
        """Cube slice with tail-sum constraint: coordinates r+1..n sum to <= 1."""
        if not 1 <= r < n:
            raise ValueError("need 1 <= r < n")
        return cls(k, (1,) * r + (n - r,), (1,) * r + (1,))

    @classmethod
    def pan_target(cls, k: int, n: int, cprime: tuple[int, ...]) -> "PolytopeSpec":
        """The (1^(n-2), 2) block family with caps (cprime, 1)."""
        if len(cprime) != n - 2:
            raise ValueError("cprime must have length n - 2")
        return cls(k, (1,) * (n - 2) + (2,), tuple(cprime) + (1,))


@dataclass(frozen=True)
class EhrhartResult:
    """An Ehrhart polynomial together with the method that produced it.

    ``poly`` is None exactly when the polytope is empty.
    """

    poly: UniPoly | None
    method: str

    @property
    def empty(self) -> bool:
        return self.poly is None

    def scaled_coeffs(self, n: int) -> tuple[int, ...]:
        """Integer coefficients of (n-1)! * ehr, padded to length n."""
        if self.poly is None:
            raise EmptyPolytopeError("empty polytope has no Ehrhart polynomial")
        scaled = self.poly.int_scaled(factorial(n - 1))
        return scaled + (0,) * (n - len(scaled))


def lattice_count(spec: PolytopeSpec, t: int) -> int:
    """Number of lattice points in the t-th dilate.

    Enumerates block totals u_i in [0, c_i*t] summing to k*t, weighting each
    block by the stars-and-bars count C(u_i + a_i - 1, a_i - 1).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    total = spec.k * t
    table = {0: 1}
    for a_i, c_i in zip(spec.a, spec.c):
        cap = c_i * t
        new: dict[int, int] = {}
        for s, ways in table.items():
            for u in range(min(cap, total - s) + 1):
                weight = comb(u + a_i - 1, a_i - 1)
                key = s + u
                new[key] = new.get(key, 0) + ways * weight
        table = new
    return table.get(total, 0)


def lattice_count_raw(spec: PolytopeSpec, t: int) -> int:
    """Slow oracle: enumerate raw coordinate vectors (guarded by n*t <= 24)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if spec.n * t > 24:
        raise ValueError("raw-vector oracle restricted to n*t <= 24")
    caps = []
    for a_i, c_i in zip(spec.a, spec.c):
        caps.extend([(c_i * t, a_i, j) for j in range(a_i)])
    total = spec.k * t

    def rec(idx: int, rem: int, block_used: int) -> int:
        if idx == spec.n:
            return 1 if rem == 0 else 0
        cap, _, j = caps[idx]
        used = block_used if j else 0
        count = 0
        for v in range(min(cap - used, rem) + 1):
            count += rec(idx + 1, rem - v, used + v)
        return count

    return rec(0, total, 0)


def genfun_factor(a_i: int, c_i: int, t: int, bound: int) -> TruncSeries:
    """Block factor sum_{j=0}^{c_i*t} C(j + a_i - 1, a_i - 1) x^j, truncated."""
    top = c_i * t
    coeffs = tuple(
        comb(j + a_i - 1, a_i - 1) if j <= top else 0 for j in range(bound + 1)
    )
    return TruncSeries(bound, coeffs)


def genfun_factor_derivative_form(a_i: int, c_i: int, t: int, bound: int) -> TruncSeries:
    """The same block factor built literally as the scaled (a_i-1)-th
    derivative of the geometric sum (1 - x^(c_i*t + a_i)) / (1 - x).

    Verification path only: each derivative loses one known coefficient, so
    the geometric sum is padded by a_i - 1 degrees before differentiating.
    """
    padded = bound + a_i - 1
    series = TruncSeries.geometric(c_i * t + a_i - 1, padded)
    for _ in range(a_i - 1):
        series = series.derivative()
    return series.exact_div(factorial(a_i - 1)).truncate(bound)


def ehrhart_genfun_count(spec: PolytopeSpec, t: int, verify_factors: bool = False) -> int:
    """Dilate count read off as the x^(k*t) coefficient of the factor product."""
    if t < 1:
        raise ValueError("t must be >= 1")
    bound = spec.k * t
    product = TruncSeries(bound, (1,))
    for a_i, c_i in zip(spec.a, spec.c):
        factor = genfun_factor(a_i, c_i, t, bound)
        if verify_factors:
            alt = genfun_factor_derivative_form(a_i, c_i, t, bound)
            if factor != alt:
                raise AssertionError(
                    f"derivative-form factor disagrees for a_i={a_i}, c_i={c_i}, t={t}"
                )
        product = product.mul(factor)
    return product.coefficient(bound)


_COUNTERS = {"brute": lattice_count, "genfun": ehrhart_genfun_count}


def ehrhart_interpolated(spec: PolytopeSpec, counter: str = "brute") -> EhrhartResult:
    """Recover the Ehrhart polynomial from dilate counts.

    Interpolates through t = 0..n-1 (with the t = 0 value fixed to 1) and
    checks the result against a fresh count at t = n.  Empty polytopes give a
    distinguished empty result.
    """
    try:
        count = _COUNTERS[counter]
    except KeyError:
        raise ValueError(f"unknown counter {counter!r}") from None
    method = METHOD_BRUTE_INTERP if counter == "brute" else METHOD_GENFUN_INTERP
    if count(spec, 1) == 0:
        return EhrhartResult(None, method)
    n = spec.n
    points = [(0, 1)] + [(t, count(spec, t)) for t in range(1, n)]
    poly = lagrange_interpolate(points)
    check = count(spec, n)
    if poly(n) != check:
        raise AssertionError(
            f"interpolation failed over-determination check at t={n}: "
            f"poly gives {poly(n)}, count gives {check}"
        )
    if poly(0) != 1 or poly.coeffs[-1] <= 0:
        raise AssertionError("Ehrhart invariants violated (constant 1, positive leading)")
    return EhrhartResult(poly, method)


def _ipow(base: int, exp: int) -> int:
    # 0**0 == 1, matching the empty-product convention the formulas rely on.
    return base ** exp


def ehrhart_hypersimplex_closed(k: int, n: int) -> EhrhartResult:
    """Closed form for the cube slice at sum k, computed two ways.

    The alternating binomial sum
        sum_{i=0}^{k-1} (-1)^i C(n,i) C((k-i)t - i + n-1, n-1)
    and its coefficient expansion through elementary symmetric range sums are
    both evaluated and must agree.
    """
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    poly = UniPoly.zero()
    for i in range(k):
        linear = UniPoly((n - 1 - i, k - i))
        term = binomial_poly(linear, n - 1).scale(comb(n, i))
        poly = poly + (term if i % 2 == 0 else -term)

    coeffs = []
    for m in range(n):
        total = sum(
            (-1) ** i
            * comb(n, i)
            * _ipow(k - i, m)
            * elem_sym_range(n - 1 - m, -i + 1, n - 1 - i)
            for i in range(k)
        )
        coeffs.append(Fraction(total, factorial(n - 1)))
    alt = UniPoly(coeffs)
    if poly != alt:
        raise AssertionError(f"hypersimplex closed forms disagree for k={k}, n={n}")
    return EhrhartResult(poly, METHOD_CLOSED_HYPERSIMPLEX)


def ehrhart_rkc_closed(k: int, c: tuple[int, ...]) -> EhrhartResult:
    """Closed form for the box slice sum x_i = k, 0 <= x_i <= c_i.

    Both the binomial form (over subset-sum counts rho) and the
    per-coefficient form are computed and must agree.
    """
    c = tuple(c)
    _check_positive_tuple("c", c)
    n = len(c)
    if not 1 <= k < sum(c):
        raise EmptyPolytopeError("need 1 <= k < sum(c)")
    poly = UniPoly.zero()
    for i in range(min(k, n + 1)):
        for v in range(k):
            r = rho(c, i, v)
            if r == 0:
                continue
            linear = UniPoly((n - 1 - i, k - v))
            term = binomial_poly(linear, n - 1).scale(r)
            poly = poly + (term if i % 2 == 0 else -term)

    coeffs = []
    for m in range(n):
        total = 0
        for v in range(k + 1):
            for i in range(n + 1):
                r = rho(c, i, v)
                if r:
                    total += (
                        (-1) ** i
                        * _ipow(k - v, m)
                        * elem_sym_range(n - 1 - m, -i + 1, n - 1 - i)
                        * r
                    )
        coeffs.append(Fraction(total, factorial(n - 1)))
    alt = UniPoly(coeffs)
    if poly != alt:
        raise AssertionError(f"box-slice closed forms disagree for k={k}, c={c}")
    return EhrhartResult(poly, METHOD_CLOSED_RKC)


def pan5term_scaled_coeff(k: int, c: tuple[int, ...], m: int) -> int:
    """Coefficient of t^m in (n-1)! * ehr for the (1^(n-2), 2) family.

    Five-term formula: the plain t^m sums contribute directly, the two
    t^(m+1) sums contribute through the m-1 shift.  c has length n-1 and its
    last entry is the cap of the doubled block.
    """
    n = len(c) + 1
    cprime = c[:-1]
    c_last = c[-1]

    def term1(mm: int) -> int:
        return sum(
            (-1) ** i
            * _ipow(k - v, mm)
            * elem_sym_range(n - 1 - mm, -i + 1, n - 1 - i)
            * rho(cprime, i, v)
            for i in range(min(k, n - 1))
            for v in range(k)
        )

    def term2(mm: int) -> int:
        return sum(
            (-1) ** i
            * _ipow(k - v - c_last, mm)
            * elem_sym_range(n - 1 - mm, -i, n - 2 - i)
            * rho(cprime, i, v)
            for i in range(min(k, n - 1))
            for v in range(k - c_last)
        )

    def term3(mm: int) -> int:
        return sum(
            (-1) ** i
            * _ipow(k - v - c_last, mm)
            * elem_sym_range(n - 1 - mm, -i - 1, n - 3 - i)
            * rho(cprime, i, v)
            for i in range(min(k, n - 1))
            for v in range(k - c_last)
        )

    value = term1(m) - 2 * term2(m) + term3(m)
    if m >= 1:
        value += c_last * (term3(m - 1) - term2(m - 1))
    return value


def ehrhart_pan5term_closed(k: int, c: tuple[int, ...]) -> EhrhartResult:
    """Closed form for the (1^(n-2), 2) block family with caps c (length n-1)."""
    c = tuple(c)
    _check_positive_tuple("c", c)
    n = len(c) + 1
    if n < 3:
        raise ValueError("need at least one singleton block (n >= 3)")
    if k > sum(c):
        raise EmptyPolytopeError("k exceeds total capacity")
    coeffs = [
        Fraction(pan5term_scaled_coeff(k, c, m), factorial(n - 1)) for m in range(n)
    ]
    return EhrhartResult(UniPoly(coeffs), METHOD_CLOSED_PAN5TERM)


@lru_cache(maxsize=None)
def _cached_scaled_coeffs(k: int, n: int) -> tuple[int, ...]:
    return ehrhart_hypersimplex_closed(k, n).scaled_coeffs(n)


def hypersimplex_scaled_coeff(k: int, n: int, m: int) -> int:
    """Coefficient of t^m in (n-1)! * ehr of the cube slice, cached."""
    return _cached_scaled_coeffs(k, n)[m]
