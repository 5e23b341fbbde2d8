"""Three independent routes to the same generating functions.

* borodin: the closed-form infinite product for F_c(1, q).
* chain_series: the slice-chain DP, refined by the largest-part statistic
  (z-degree) and the size (q-degree).
* catalog_sides: a named catalog of series identities, each expanded on
  both sides so they can be compared coefficient by coefficient.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import lemmas
from .cylindric import Profile
from .series import PochSpec, Series, first_mismatch, pochhammer, product_expr
from .slices import contains, iter_slices


class FormulaError(ValueError):
    """A product factor came out with a nonpositive exponent (indexing bug)."""


class UnknownIdentityError(ValueError):
    """Identity tag not in the catalog, or parameters out of range."""


def borodin_specs(profile: Profile) -> list[PochSpec]:
    """Denominator factor list of the closed-form product for F_c(1, q).

    One factor (q^t; q^t) plus, for every admissible (i, j, m) in the two
    triple products, a factor (q^e; q^t) whose exponent e is checked to be
    at least 1; empty partial sums s(i, j) with i > j contribute 0.
    """
    c = profile.parts
    r = profile.rank
    t = profile.t
    s = profile.partial_sum
    exps = [t]
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            inner = s(i + 1, j) if i + 1 <= j else 0
            for m in range(1, c[i - 1] + 1):
                exps.append(m + j - i + inner)
    for i in range(2, r + 1):
        for j in range(2, i + 1):
            for m in range(1, c[i - 1] + 1):
                exps.append(t - m + j - i - s(j, i - 1))
    for e in exps:
        if e < 1:
            raise FormulaError(
                f"factor exponent {e} < 1 for profile {profile} (t={t})"
            )
    return [PochSpec(1, e, t) for e in exps]


def borodin(profile: Profile, order: int) -> Series:
    """F_c(1, q) from the closed-form product, truncated at the order."""
    return product_expr([], borodin_specs(profile), order)


@dataclass(frozen=True)
class ChainGF:
    """table[m][n] = coefficient of z^m q^n in the chain generating function."""

    profile: Profile
    order: int
    distinct: bool
    table: tuple[tuple[int, ...], ...]

    def marginal(self) -> Series:
        """Specialization z = 1."""
        n = self.order
        return Series.from_coeffs(
            sum(self.table[m][k] for m in range(n + 1)) for k in range(n + 1)
        )


def chain_series(profile: Profile, order: int, distinct: bool = False) -> ChainGF:
    """Sum over strict containment chains of non-empty slices.

    A chain element of weight w contributes z*q^w once (distinct=True) or
    with arbitrary positive multiplicity j, giving z^j q^{j*w}
    (distinct=False).  The multiplicity j counts repeated levels, so the
    z-degree of a chain is its total number of levels, which is the largest
    part of the recomposed cylindric partition.

    Slices are processed in (weight, white) order; strict containment only
    ever points from strictly lighter slices, so a single pass suffices.
    g(s) collects all chains whose largest (bottom) slice is s.
    """
    n = order
    nodes = list(iter_slices(profile, n))
    g: list[list[list[int]]] = []

    def fresh():
        return [[0] * (n + 1) for _ in range(n + 1)]

    for idx, s in enumerate(nodes):
        inner = fresh()
        inner[0][0] = 1
        for jdx in range(idx):
            s2 = nodes[jdx]
            if s2.weight < s.weight and contains(s2, s):
                prev = g[jdx]
                for m in range(n + 1):
                    row = prev[m]
                    dst = inner[m]
                    for k in range(n + 1):
                        if row[k]:
                            dst[k] += row[k]
        w = s.weight
        cur = fresh()
        reps = 1 if distinct else n // w
        for j in range(1, reps + 1):
            dz, dq = j, j * w
            if dq > n:
                break
            for m in range(n + 1 - dz):
                row = inner[m]
                dst = cur[m + dz]
                for k in range(n + 1 - dq):
                    if row[k]:
                        dst[k + dq] += row[k]
        g.append(cur)

    total = fresh()
    total[0][0] = 1
    for cur in g:
        for m in range(n + 1):
            row = cur[m]
            dst = total[m]
            for k in range(n + 1):
                if row[k]:
                    dst[k] += row[k]
    return ChainGF(profile, n, distinct, tuple(tuple(r) for r in total))


# --- identity catalog ------------------------------------------------------

def _sum_series(order, degree, numerator=(), denominator=(), coeff=1, start=0):
    """sum_{n >= start} coeff(n) * q^{degree(n)} * prod num_n / prod den_n.

    numerator/denominator are functions n -> list of PochSpec; the sum stops
    at the first n whose minimal degree degree(n) exceeds the order (degree
    is strictly increasing in n for every catalog entry).
    """
    acc = Series.zero(order)
    n = start
    while degree(n) <= order:
        term = Series.monomial(degree(n), order)
        for spec in numerator(n) if callable(numerator) else numerator:
            term = term * pochhammer(spec, order)
        for spec in denominator(n) if callable(denominator) else denominator:
            term = term * pochhammer(spec, order).invert()
        c = coeff(n) if callable(coeff) else coeff
        if c != 1:
            term = term.scale(c)
        acc = acc + term
        n += 1
    return acc


def _inf(sign, start, step):
    return PochSpec(sign, start, step)


def _fin(sign, start, step, count):
    return PochSpec(sign, start, step, count)


def _lhs_with_factor(sum_part: Series, order: int, num, den) -> Series:
    return sum_part * product_expr(num, den, order)


def catalog_sides(tag: str, order: int, z_power: int | None = None):
    """(lhs, rhs) of a named series identity, both truncated at the order.

    Tags: "1.2".."1.8" (profile generating functions), "A1"/"A2"
    (auxiliary sums), "gasper" with z specialized to q^z_power.
    """
    N = order
    if tag == "1.2":
        lhs = product_expr([_inf(-1, 1, 2)], [_inf(1, 1, 1)], N)
        rhs = product_expr(
            [], [_inf(1, 4, 4), _inf(1, 1, 4), _inf(1, 1, 4),
                 _inf(1, 3, 4), _inf(1, 3, 4)], N)
        return lhs, rhs
    if tag == "1.3":
        lhs = product_expr([_inf(-1, 2, 2)], [_inf(1, 1, 1)], N)
        rhs = product_expr([], [_inf(1, 1, 1), _inf(1, 2, 4)], N)
        return lhs, rhs
    if tag == "1.4":
        s = _sum_series(N, lambda n: n * n,
                        denominator=lambda n: [_fin(1, 4, 4, n)])
        lhs = _lhs_with_factor(s, N, [_inf(-1, 2, 2)], [_inf(1, 1, 1)])
        rhs = product_expr([], [_inf(1, 1, 1), _inf(1, 1, 5), _inf(1, 4, 5)], N)
        return lhs, rhs
    if tag == "1.5":
        s = _sum_series(N, lambda n: n * n + 2 * n,
                        denominator=lambda n: [_fin(1, 4, 4, n)])
        lhs = _lhs_with_factor(s, N, [_inf(-1, 2, 2)], [_inf(1, 1, 1)])
        rhs = product_expr([], [_inf(1, 1, 1), _inf(1, 2, 5), _inf(1, 3, 5)], N)
        return lhs, rhs
    if tag == "1.6":
        s = _sum_series(N, lambda n: n * (n + 1),
                        numerator=lambda n: [_fin(-1, 2, 2, n)],
                        denominator=lambda n: [_fin(-1, 3, 2, n), _fin(1, 2, 2, n)])
        lhs = _lhs_with_factor(s, N, [_inf(-1, 3, 2)], [_inf(1, 1, 1)])
        rhs = product_expr(
            [], [_inf(1, 1, 1), _inf(1, 2, 6), _inf(1, 3, 6), _inf(1, 4, 6)], N)
        return lhs, rhs
    if tag == "1.7":
        s = Series.one(N) + _sum_series(
            N, lambda n: n * (n + 1),
            numerator=lambda n: [_fin(-1, 2, 2, n - 1)],
            denominator=lambda n: [_fin(1, 2, 2, n), _fin(-1, 1, 2, n)],
            coeff=2, start=1)
        lhs = _lhs_with_factor(s, N, [_inf(-1, 1, 2)], [_inf(1, 1, 1)])
        rhs = product_expr(
            [], [_inf(1, 6, 6),
                 _inf(1, 1, 6), _inf(1, 1, 6), _inf(1, 2, 6), _inf(1, 2, 6),
                 _inf(1, 4, 6), _inf(1, 4, 6), _inf(1, 5, 6), _inf(1, 5, 6)], N)
        return lhs, rhs
    if tag == "1.8":
        s = _sum_series(N, lambda n: n * n,
                        denominator=lambda n: [_fin(1, 2, 2, n)])
        lhs = _lhs_with_factor(s, N, [_inf(-1, 2, 2)], [_inf(1, 1, 1)])
        rhs = product_expr(
            [], [_inf(1, 1, 1), _inf(1, 1, 6), _inf(1, 3, 6), _inf(1, 5, 6)], N)
        return lhs, rhs
    if tag == "A1":
        lhs = _sum_series(N, lambda n: n * n,
                          denominator=lambda n: [_fin(1, 4, 4, n)])
        rhs = product_expr([], [_inf(-1, 2, 2), _inf(1, 1, 5), _inf(1, 4, 5)], N)
        return lhs, rhs
    if tag == "A2":
        lhs = _sum_series(N, lambda n: n * n + 2 * n,
                          denominator=lambda n: [_fin(1, 4, 4, n)])
        rhs = product_expr([], [_inf(-1, 2, 2), _inf(1, 2, 5), _inf(1, 3, 5)], N)
        return lhs, rhs
    if tag == "gasper":
        j = z_power
        if j is None or j < 1:
            raise UnknownIdentityError("gasper needs z_power >= 1")
        lhs = _sum_series(N, lambda n: n * (n - 1) // 2 + j * n,
                          denominator=lambda n: [_fin(1, 1, 1, n)])
        rhs = pochhammer(_inf(-1, j, 1), N)
        return lhs, rhs
    raise UnknownIdentityError(f"unknown identity tag {tag!r}")


IDENTITY_TAGS = ("1.2", "1.3", "1.4", "1.5", "1.6", "1.7", "1.8", "A1", "A2")

#: profile -> identity tag whose left-hand side is its generating function
PROFILE_IDENTITIES = {
    (1, 1): "1.2",
    (2, 0): "1.3",
    (2, 1): "1.4",
    (1, 1, 0): "1.4",
    (3, 0): "1.5",
    (2, 0, 0): "1.5",
    (4, 0): "1.6",
    (2, 0, 0, 0): "1.6",
    (2, 2): "1.7",
    (1, 0, 1, 0): "1.7",
    (3, 1): "1.8",
    (1, 1, 0, 0): "1.8",
}

#: profiles sharing one generating function under rank-level duality
DUALITY_PAIRS = (
    ((2, 1), (1, 1, 0)),
    ((3, 0), (2, 0, 0)),
    ((4, 0), (2, 0, 0, 0)),
    ((2, 2), (1, 0, 1, 0)),
    ((3, 1), (1, 1, 0, 0)),
)


@dataclass(frozen=True)
class Mismatch:
    degree: int
    lhs: object
    rhs: object


def verify_equal(a: Series, b: Series) -> Mismatch | None:
    """None when equal; otherwise the earliest differing degree and values."""
    bad = first_mismatch(a, b)
    return None if bad is None else Mismatch(*bad)


def verify_identity(tag: str, order: int, z_power: int | None = None):
    """Route a catalog or lemma tag to its evaluator; None means PASS."""
    if tag.startswith("L"):
        for spec in lemmas_for_tag(tag):
            bad = lemmas.verify_lemma(spec, order)
            if bad is not None:
                return Mismatch(*bad)
        return None
    lhs, rhs = catalog_sides(tag, order, z_power)
    return verify_equal(lhs, rhs)


def lemmas_for_tag(tag: str) -> list:
    """Parse "L4.2(2)", "L4.3(1,2)", "L4.1(3)" style lemma tags.

    L4.x map to family A, L5.2-L5.4 to family B, L5.5 to family C; L4.1 and
    L5.1 are the fixed-k variants (block length defaults to 1..3).
    """
    m = re.fullmatch(r"L([45])\.([1-5])\((\d+(?:,\d+)*)\)", tag)
    if not m:
        raise UnknownIdentityError(f"cannot parse lemma tag {tag!r}")
    group, number = int(m.group(1)), int(m.group(2))
    args = tuple(int(x) for x in m.group(3).split(","))
    if group == 4 and number == 5:
        raise UnknownIdentityError(f"unknown lemma tag {tag!r}")
    family = "A" if group == 4 else ("C" if number == 5 else "B")
    if number == 1:
        k = args[0]
        ms = [args[1]] if len(args) > 1 else [1, 2, 3]
        return [lemmas.NestedSumSpec(family, (mm,), fixed_k=k) for mm in ms]
    expected = {2: 1, 3: 2}.get(number)
    if expected is not None and len(args) != expected:
        raise UnknownIdentityError(
            f"{tag}: expected {expected} parameter(s), got {len(args)}")
    return [lemmas.NestedSumSpec(family, args)]
