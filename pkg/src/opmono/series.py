"""Truncated one-variable formal power series with exact rational
coefficients, plus solvers for the generating-function equations of the four
regimes.

The series route is independent of the counting recurrences: quadratic
functional equations are solved by fixpoint iteration (each pass raises the
guaranteed-correct order) or by Newton's method on the quadratic, and the
commutative-product regimes go through the exp-log multiset construction.
Exponentials and logarithms divide by integers, so coefficients are held as
Fractions internally; announced outputs are asserted to be integral.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .counting import SelfCheckError
from .monomial import Regime


class Series:
    """Power series truncated at ``order`` (inclusive); immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def term(cls, order: int, k: int, c=1) -> "Series":
        """The single term c * z^k (zero if k exceeds the order)."""
        coeffs = [0] * (order + 1)
        if k <= order:
            coeffs[k] = c
        return cls(coeffs, order)

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order+1 for the zero series)."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Series) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"

    def _same_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError("mixed truncation orders")

    def __add__(self, other: "Series") -> "Series":
        self._same_order(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "Series") -> "Series":
        self._same_order(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs], self.order)

    def scaled(self, c) -> "Series":
        c = Fraction(c)
        return Series([c * a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scaled(other)
        self._same_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out, n)

    __rmul__ = __mul__

    def shifted(self, k: int) -> "Series":
        """Multiply by z^k."""
        return Series([0] * k + list(self.coeffs), self.order)

    def substitute_power(self, k: int) -> "Series":
        """Substitute z -> z^k (k >= 1)."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        out = [Fraction(0)] * (self.order + 1)
        for n, c in enumerate(self.coeffs):
            if n * k > self.order:
                break
            out[n * k] = c
        return Series(out, self.order)

    def power(self, k: int) -> "Series":
        if k < 0:
            raise ValueError("negative power; use inverse() first")
        out = Series.term(self.order, 0, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Series":
        f0 = self.coeffs[0]
        if f0 == 0:
            raise ValueError("series with zero constant term has no inverse")
        n = self.order
        g = [Fraction(0)] * (n + 1)
        g[0] = 1 / f0
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * g[m - k]
            g[m] = -g[0] * acc
        return Series(g, n)

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.inverse()

    def exp(self) -> "Series":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term")
        n = self.order
        e = [Fraction(0)] * (n + 1)
        e[0] = Fraction(1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc += k * self.coeffs[k] * e[m - k]
            e[m] = acc / m
        return Series(e, n)

    def log(self) -> "Series":
        """log of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        l = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m):
                if l[k] and self.coeffs[m - k]:
                    acc += k * l[k] * self.coeffs[m - k]
            l[m] = self.coeffs[m] - acc / m
        return Series(l, n)

    def integer_coeffs(self) -> list[int]:
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise SelfCheckError(f"coefficient of z^{n} is not an integer: {c}")
            out.append(c.numerator)
        return out


def unary_layer_series(regime: Regime, d: int, order: int) -> Series:
    """Generating weight of one layer of unary labels in the length grading:
    d*z^2 when the operators are free, 1 - (1-z^2)^d when they commute."""
    if regime.unary_commute:
        one = Series.term(order, 0, 1)
        base = one - Series.term(order, 2, 1)
        return one - base.power(d)
    return Series.term(order, 2, d)


def solve_quadratic_fe(regime: Regime, d: int, ell: int, order: int) -> Series:
    """Unique zero-constant-term solution of
    B = z^ell + z^ell*B + w*(B + B^2), where w is the unary-layer weight of
    ``regime`` (FREE or COMM_UNARY).  Fixpoint iteration; each pass raises
    the guaranteed-correct order by at least one."""
    if regime not in (Regime.FREE, Regime.COMM_UNARY):
        raise ValueError("quadratic functional equation applies to the "
                         "noncommutative-product regimes only")
    if order < ell:
        raise ValueError("order must be at least ell")
    zl = Series.term(order, ell)
    w = unary_layer_series(regime, d, order)
    b = Series.zero(order)
    for _ in range(order + 2):
        nxt = zl + zl * b + w * (b + b * b)
        if nxt == b:
            return b
        b = nxt
    raise SelfCheckError("fixpoint iteration did not converge")


def closed_form_free(d: int, ell: int, order: int) -> Series:
    """The free-regime series via Newton iteration on its quadratic
    d*z^2*B^2 - (1 - z^ell - d*z^2)*B + z^ell = 0.  Agrees with
    :func:`solve_quadratic_fe` coefficient for coefficient."""
    if order < ell:
        raise ValueError("order must be at least ell")
    one = Series.term(order, 0, 1)
    zl = Series.term(order, ell)
    w = Series.term(order, 2, d)
    lin = one - zl - w
    b = Series.zero(order)
    for _ in range(order.bit_length() + 3):
        q = w * b * b - lin * b + zl
        dq = w * b * 2 - lin
        nxt = b - q / dq
        if nxt == b:
            return b
        b = nxt
    raise SelfCheckError("Newton iteration did not converge")


def euler_exp_log(atom_series: Callable[[Series], Series], ell: int,
                  order: int) -> Series:
    """Fixpoint B of the multiset construction
    1 + B = exp(sum_{j>=1} Bbar(z^j)/j), with Bbar = atom_series(B).

    ``atom_series`` must map B to a series with valuation >= 1.  All
    coefficients of the result must come out integral (checked)."""
    one = Series.term(order, 0, 1)
    b = Series.zero(order)
    for _ in range(order + 2):
        bbar = atom_series(b)
        if bbar.valuation() < 1:
            raise ValueError("atom series must have zero constant term")
        acc = Series.zero(order)
        for j in range(1, order + 1):
            if j * bbar.valuation() > order:
                break
            acc = acc + bbar.substitute_power(j).scaled(Fraction(1, j))
        nxt = acc.exp() - one
        if nxt == b:
            b.integer_coeffs()
            return b
        b = nxt
    raise SelfCheckError("exp-log fixpoint iteration did not converge")


def euler_series(regime: Regime, d: int, ell: int, order: int) -> Series:
    """Length-graded series for the commutative-product regimes via the
    exp-log construction."""
    if regime not in (Regime.COMM_MULT, Regime.COMM_BOTH):
        raise ValueError("the exp-log construction applies to the "
                         "commutative-product regimes only")
    zl = Series.term(order, ell)
    w = unary_layer_series(regime, d, order)
    return euler_exp_log(lambda b: zl + w * b, ell, order)


def series_for(regime: Regime, d: int, ell: int, order: int) -> Series:
    if regime in (Regime.FREE, Regime.COMM_UNARY):
        return solve_quadratic_fe(regime, d, ell, order)
    return euler_series(regime, d, ell, order)


def check_symmetry_a1(order: int) -> bool:
    """Coefficient symmetry of the one-operator bivariate count: the count
    at degree r with k operator slots equals the count at degree k+1 with
    r-1 slots.  Checked over all total orders r + k <= order."""
    from .counting import narayana

    if order < 2:
        raise ValueError("order must be >= 2")
    for r in range(1, order + 1):
        for k in range(0, order - r + 1):
            if narayana(r + k, k) != narayana(r + k, r - 1):
                return False
    return True
