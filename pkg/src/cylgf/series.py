"""Exact truncated power series in q, plus q-Pochhammer product constructors.

All coefficients are exact rationals (plain ints whenever possible); there is
no floating point anywhere in this package.  A series of order N stores the
coefficients of q^0 .. q^N and every binary operation demands equal orders,
so precision is never lost silently.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Coeff = int | Fraction

#: Sentinel for an infinite Pochhammer product (a; q^t)_oo.
UNBOUNDED = None


class OrderMismatchError(ValueError):
    """Binary operation on series of different truncation orders."""


class NotAUnitError(ValueError):
    """Inversion of a series whose constant coefficient is zero."""


class PochSpecError(ValueError):
    """Rejected Pochhammer specification."""


def _norm(x: Coeff) -> Coeff:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class Series:
    """Truncated power series: coeffs[n] is the coefficient of q^n, n <= order."""

    order: int
    coeffs: tuple[Coeff, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"negative order {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"order {self.order} requires {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs) -> Series:
        coeffs = tuple(_norm(c) for c in coeffs)
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls(order, (1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Coeff = 1) -> Series:
        if exponent > order:
            return cls.zero(order)
        c = [0] * (order + 1)
        c[exponent] = _norm(coeff)
        return cls(order, tuple(c))

    def _check_order(self, other: Series):
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: Series) -> Series:
        self._check_order(other)
        return Series.from_coeffs(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: Series) -> Series:
        self._check_order(other)
        return Series.from_coeffs(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: Series) -> Series:
        self._check_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return Series.from_coeffs(out)

    def __neg__(self) -> Series:
        return Series.from_coeffs(-c for c in self.coeffs)

    def scale(self, factor: Coeff) -> Series:
        return Series.from_coeffs(factor * c for c in self.coeffs)

    def shift(self, exponent: int) -> Series:
        """Multiply by q^exponent at fixed order."""
        if exponent == 0:
            return self
        out = [0] * (self.order + 1)
        for n, c in enumerate(self.coeffs):
            if c != 0 and n + exponent <= self.order:
                out[n + exponent] = c
        return Series.from_coeffs(out)

    def invert(self) -> Series:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NotAUnitError("constant coefficient is zero")
        if c0 == 1:
            b0: Coeff = 1
        elif c0 == -1:
            b0 = -1
        else:
            b0 = Fraction(1, 1) / c0
        n = self.order
        a = self.coeffs
        b = [0] * (n + 1)
        b[0] = b0
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                if a[i] != 0:
                    acc += a[i] * b[k - i]
            if acc != 0:
                b[k] = -b0 * acc
        return Series.from_coeffs(b)

    def truncate(self, order: int) -> Series:
        """Shorten to a smaller (or equal) order."""
        if order > self.order:
            raise OrderMismatchError(
                f"cannot extend order {self.order} to {order}"
            )
        return Series(order, self.coeffs[: order + 1])

    def is_nonneg_integral(self) -> bool:
        """True iff every coefficient is a nonnegative integer (counting series)."""
        return all(
            (isinstance(c, int) or c.denominator == 1) and c >= 0
            for c in self.coeffs
        )

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def to_json_dict(self) -> dict:
        # str(Fraction(1, 2)) == "1/2"; integers stay bare decimal strings
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> Series:
        coeffs = [Fraction(c) for c in data["coeffs"]]
        s = cls.from_coeffs(coeffs)
        if s.order != data["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return s


def combine(lhs: Series, rhs: Series, op: str) -> Series:
    """Coefficient-wise add/sub at equal order."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    raise ValueError(f"unknown op {op!r}")


def mul(lhs: Series, rhs: Series) -> Series:
    return lhs * rhs


def invert(s: Series) -> Series:
    return s.invert()


def first_mismatch(a: Series, b: Series):
    """Earliest degree where the two series differ, or None if equal."""
    a._check_order(b)
    for n, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
        if ca != cb:
            return (n, ca, cb)
    return None


@dataclass(frozen=True)
class PochSpec:
    """One factor group prod_k (1 - sign * q^(start + k*step)).

    count=UNBOUNDED means the infinite product; at truncation N only the
    factors with exponent <= N contribute.
    """

    sign: int
    start: int
    step: int
    count: int | None = UNBOUNDED

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PochSpecError(f"sign must be +1 or -1, got {self.sign}")
        if self.start < 0:
            raise PochSpecError(f"start must be >= 0, got {self.start}")
        if self.step < 1:
            raise PochSpecError(f"step must be >= 1, got {self.step}")
        if self.count is not UNBOUNDED and self.count < 0:
            raise PochSpecError(f"count must be >= 0, got {self.count}")
        if self.count is UNBOUNDED and self.start == 0 and self.sign == 1:
            raise PochSpecError(
                "unbounded product with a leading (1 - q^0) factor vanishes"
            )


def pochhammer(spec: PochSpec, order: int) -> Series:
    """Expand the product described by spec, truncated at the given order."""
    out = [0] * (order + 1)
    out[0] = 1
    k = 0
    while True:
        if spec.count is not UNBOUNDED and k >= spec.count:
            break
        e = spec.start + k * spec.step
        if e > order:
            if spec.count is UNBOUNDED:
                break
            # bounded factors beyond the truncation are 1 up to order
            k += 1
            continue
        if e == 0:
            c = 1 - spec.sign
            for n in range(order + 1):
                out[n] *= c
        else:
            for n in range(order, e - 1, -1):
                if out[n - e] != 0:
                    out[n] -= spec.sign * out[n - e]
        k += 1
    return Series.from_coeffs(out)


def product_expr(
    numerator: list[PochSpec], denominator: list[PochSpec], order: int
) -> Series:
    """prod(numerators) * prod(1 / denominators) at the given order."""
    acc = Series.one(order)
    for spec in numerator:
        acc = acc * pochhammer(spec, order)
    den = Series.one(order)
    for spec in denominator:
        d = pochhammer(spec, order)
        if d.coeffs[0] == 0:
            raise NotAUnitError(f"denominator {spec} is not a unit")
        den = den * d
    return acc * den.invert()
