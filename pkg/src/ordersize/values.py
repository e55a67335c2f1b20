"""Exact distinct-value counting for the cubic forms, and the g_r table.

All evaluation is exact: integer vectors, rational parameters scaled to a
common denominator so that distinct-value sets are sets of integers.
Enumeration runs over positive compositions only; dropping zero coordinates
(order preserved) never changes any of the basis sums, so nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, lcm
from typing import Iterator, Sequence

from .blowups import build_pair_family, build_type_family

DEFAULT_COMPOSITION_CAP = 24


# --- the recursive complete multipartite maximum -------------------------------


def _partitions_exact(m: int, parts: int, low: int = 1) -> Iterator[tuple[int, ...]]:
    """Partitions of m into exactly ``parts`` parts, each >= low, nondecreasing."""
    if parts == 1:
        if m >= low:
            yield (m,)
        return
    for first in range(low, m // parts + 1):
        for rest in _partitions_exact(m - first, parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def g_r(r: int, m: int) -> int:
    """Maximum edge count of the recursive complete r-partite construction.

    Zero for m <= r-1; otherwise the best over partitions into r positive
    parts of the part product plus the recursive values inside the parts.
    Positive parts suffice: a zero part kills the product and the remaining
    recursion never beats splitting the same vertices r ways.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if m < 0:
        raise ValueError("m must be >= 0")
    if m <= r - 1:
        return 0
    best = 0
    for p in _partitions_exact(m, r):
        prod = 1
        for x in p:
            prod *= x
        best = max(best, prod + sum(g_r(r, x) for x in p))
    return best


# --- parameter records ----------------------------------------------------------


@dataclass(frozen=True)
class CubicParams:
    """Coefficients (a, b, c, d, e) of the five-sum cubic form."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __init__(self, a, b, c, d, e):
        for name, v in zip("abcde", (a, b, c, d, e)):
            object.__setattr__(self, name, Fraction(v))

    @property
    def symmetric_degenerate(self) -> bool:
        """a = b = c/3: the value collapses to a function of the square sum."""
        return self.a == self.b == self.c / 3

    @property
    def antisymmetric_degenerate(self) -> bool:
        return self.a == -self.b and self.c == 0

    @property
    def admissible(self) -> bool:
        return not (self.symmetric_degenerate or self.antisymmetric_degenerate)

    def astuple(self):
        return (self.a, self.b, self.c, self.d, self.e)


@dataclass(frozen=True)
class GeneralParams:
    """Coefficients (A, B, C, D, E) of the reduced form."""

    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction

    def __init__(self, A, B, C, D, E):
        for name, v in zip("ABCDE", (A, B, C, D, E)):
            object.__setattr__(self, name, Fraction(v))

    @property
    def admissible(self) -> bool:
        """B nonzero, or both A and C nonzero."""
        return self.B != 0 or (self.A != 0 and self.C != 0)


@dataclass(frozen=True)
class ValueCountReport:
    m: int
    params: tuple
    count: int
    mode: str
    min_value: Fraction
    max_value: Fraction
    min_witness: tuple[int, ...]
    max_witness: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "params": [str(p) for p in self.params],
            "count": self.count,
            "mode": self.mode,
            "min_value": str(self.min_value),
            "max_value": str(self.max_value),
            "min_witness": list(self.min_witness),
            "max_witness": list(self.max_witness),
        }

    def to_csv_row(self) -> str:
        ps = ";".join(str(p) for p in self.params)
        return f"{self.m},{ps},{self.count}"


# --- form evaluation -------------------------------------------------------------


def cubic_basis(x: Sequence[int]) -> tuple[int, int, int, int, int]:
    """(Ta, Tb, Tc, Td, Te): the five order-aware sums of the cubic form."""
    p1 = p2 = e2 = ta = tb = tc = td = 0
    for v in x:
        ta += v * v * p1
        tb += v * p2
        tc += v * e2
        td += v * v
        e2 += v * p1
        p1 += v
        p2 += v * v
    return ta, tb, tc, td, e2


def cubic_form(p: CubicParams, x: Sequence[int]) -> Fraction:
    """a*sum x_i x_j^2 + b*sum x_i^2 x_j + c*sum x_i x_j x_k (i<j<k)
    + d*sum x_i^2 + e*sum x_i x_j, all pairs ordered i < j."""
    if any(v < 0 for v in x):
        raise ValueError("coordinates must be nonnegative")
    ta, tb, tc, td, te = cubic_basis(x)
    return p.a * ta + p.b * tb + p.c * tc + p.d * td + p.e * te


def general_form(g: GeneralParams, m: int, x: Sequence[int]) -> Fraction:
    """(A*m + D) * sum x_i^2 + B * sum x_i^3 + C * sum x_i x_j (x_i - x_j) + E."""
    if any(v < 0 for v in x):
        raise ValueError("coordinates must be nonnegative")
    ta, tb, _tc, td, _te = cubic_basis(x)
    t3 = sum(v * v * v for v in x)
    return (g.A * m + g.D) * td + g.B * t3 + g.C * (tb - ta) + g.E


def transform_params(p: CubicParams, m: int) -> GeneralParams:
    """Rewrite the cubic form into the reduced shape, valid on sum(x) = m."""
    return GeneralParams(
        A=(p.a + p.b - p.c) / 2,
        B=p.c / 3 - (p.a + p.b) / 2,
        C=(p.b - p.a) / 2,
        D=p.d - p.e / 2,
        E=p.c / 6 * m**3 + p.e / 2 * m**2,
    )


# --- distinct-value counters -------------------------------------------------------


def _count_form_values(
    m: int,
    coeffs: tuple[int, int, int, int, int, int],
    const: int,
) -> tuple[set[int], tuple, tuple]:
    """Scaled distinct values of coeffs . (Ta, Tb, Tc, Td, T3, E2) + const over
    positive compositions of m, plus min and max witnesses."""
    ca, cb, cc, cd, c3, ce = coeffs
    values: set[int] = set()
    best = {"min": None, "max": None}
    path: list[int] = []

    def rec(rem: int, p1: int, p2: int, e2: int, ta: int, tb: int, tc: int, td: int, t3: int):
        if rem == 0:
            val = ca * ta + cb * tb + cc * tc + cd * td + c3 * t3 + ce * e2 + const
            values.add(val)
            if best["min"] is None or val < best["min"][0]:
                best["min"] = (val, tuple(path))
            if best["max"] is None or val > best["max"][0]:
                best["max"] = (val, tuple(path))
            return
        for v in range(1, rem + 1):
            path.append(v)
            rec(
                rem - v,
                p1 + v,
                p2 + v * v,
                e2 + v * p1,
                ta + v * v * p1,
                tb + v * p2,
                tc + v * e2,
                td + v * v,
                t3 + v * v * v,
            )
            path.pop()

    rec(m, 0, 0, 0, 0, 0, 0, 0, 0)
    return values, best["min"], best["max"]


def _scaled_int_coeffs(fracs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * den) for f in fracs], den


def count_cubic_values(
    p: CubicParams, m: int, cap: int = DEFAULT_COMPOSITION_CAP
) -> ValueCountReport:
    """Distinct values of the cubic form over nonnegative integer vectors
    summing to m, enumerated over the 2^(m-1) positive compositions."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > cap:
        raise ValueError(f"m={m} above the enumeration cap {cap}")
    ints, den = _scaled_int_coeffs(p.astuple())
    ca, cb, cc, cd, ce = ints
    values, vmin, vmax = _count_form_values(m, (ca, cb, cc, cd, 0, ce), 0)
    return ValueCountReport(
        m,
        p.astuple(),
        len(values),
        "positive-compositions",
        Fraction(vmin[0], den),
        Fraction(vmax[0], den),
        vmin[1],
        vmax[1],
    )


def count_general_values(
    g: GeneralParams, m: int, cap: int = DEFAULT_COMPOSITION_CAP
) -> ValueCountReport:
    """Distinct values of the reduced form over vectors summing to m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > cap:
        raise ValueError(f"m={m} above the enumeration cap {cap}")
    am_d = g.A * m + g.D
    ints, den = _scaled_int_coeffs([-g.C, g.C, Fraction(0), am_d, g.B, Fraction(0), g.E])
    ca, cb, cc, cd, c3, ce, e0 = ints
    values, vmin, vmax = _count_form_values(m, (ca, cb, cc, cd, c3, ce), e0)
    return ValueCountReport(
        m,
        (g.A, g.B, g.C, g.D, g.E),
        len(values),
        "positive-compositions",
        Fraction(vmin[0], den),
        Fraction(vmax[0], den),
        vmin[1],
        vmax[1],
    )


def pair_form(avec: Sequence[int], bvec: Sequence[int]) -> int:
    """(sum a) * sum_{i<j} b_i b_j + (sum b) * sum_{i<j} a_i a_j."""
    if any(v < 0 for v in avec) or any(v < 0 for v in bvec):
        raise ValueError("coordinates must be nonnegative")
    sa, sb = sum(avec), sum(bvec)
    pa = (sa * sa - sum(v * v for v in avec)) // 2
    pb = (sb * sb - sum(v * v for v in bvec)) // 2
    return sa * pb + sb * pa


@lru_cache(maxsize=None)
def _square_sums(total: int) -> frozenset[int]:
    """Achievable values of sum(parts^2) over partitions of ``total``."""
    if total == 0:
        return frozenset([0])
    out = set()
    for first in range(1, total + 1):
        for s in _square_sums(total - first):
            out.add(first * first + s)
    return frozenset(out)


def count_pair_form_values(m: int) -> ValueCountReport:
    """Distinct pair-form values over all splits of mass m between the two
    coordinate families.

    The form depends only on (A, sum a_i^2, B, sum b_i^2) with A + B = m, so
    the count runs over reachable square-sum states instead of vectors.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    values: set[int] = set()
    best_min = best_max = None
    for a_total in range(m + 1):
        b_total = m - a_total
        for sa in _square_sums(a_total):
            pa = (a_total * a_total - sa) // 2
            for sb in _square_sums(b_total):
                pb = (b_total * b_total - sb) // 2
                val = a_total * pb + b_total * pa
                values.add(val)
                if best_min is None or val < best_min[0]:
                    best_min = (val, (a_total, sa, b_total, sb))
                if best_max is None or val > best_max[0]:
                    best_max = (val, (a_total, sa, b_total, sb))
    return ValueCountReport(
        m,
        ("pair-form",),
        len(values),
        "square-sum-states",
        Fraction(best_min[0]),
        Fraction(best_max[0]),
        best_min[1],
        best_max[1],
    )


# --- blow-up edge counts, two ways --------------------------------------------------


def blowup_edge_count(
    a: int, b: int, c: int, part_sizes: Sequence[int], x: Sequence[int]
) -> tuple[int, int]:
    """Edges induced by picking x_i vertices from part i of a type blow-up
    with densities (a, b, c, 0): the closed form and a direct count.

    Closed form: a*sum x_i C(x_j,2) + b*sum C(x_i,2) x_j + c*sum x_i x_j x_k.
    """
    if len(x) != len(part_sizes):
        raise ValueError("x must have one entry per part")
    if any(xi > s for xi, s in zip(x, part_sizes)):
        raise ValueError("selection exceeds a part size")
    m = len(x)
    closed = 0
    for i in range(m):
        for j in range(i + 1, m):
            closed += a * x[i] * comb(x[j], 2) + b * comb(x[i], 2) * x[j]
    for i, j, k in combinations(range(m), 3):
        closed += c * x[i] * x[j] * x[k]
    h, parts = build_type_family(list(part_sizes), a, b, c, 0)
    chosen = [v for part, xi in zip(parts, x) for v in part[:xi]]
    return closed, h.edge_count(chosen)


def blowup_edge_count_mixed(
    b1: int,
    b2: int,
    cs: tuple[int, int, int, int, int, int],
    part_size: int,
    x: Sequence[int],
    eps: int,
) -> tuple[int, int]:
    """Edges induced by the paired selection: x_i vertices from each of A_i
    and B_i, plus eps extra vertices from one further A part. Dual-evaluates
    the mixed closed form against a direct count on the built family.
    """
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    t = len(x)
    if any(xi > part_size for xi in x):
        raise ValueError("selection exceeds the part size")
    b = b1 + b2
    c = sum(cs)
    closed = 0
    for i in range(t):
        for j in range(i + 1, t):
            closed += 2 * x[i] * x[j] * x[j] + b * x[i] * x[i] * x[j]
            closed += eps * (cs[1] + cs[3] + cs[5]) * x[i] * x[j]
    for i, j, k in combinations(range(t), 3):
        closed += c * x[i] * x[j] * x[k]
    closed += eps * b1 * sum(xi * xi for xi in x)
    h, a_parts, b_parts = build_pair_family(t + eps, part_size, 1, 1, b1, b2, cs)
    chosen = []
    for i in range(t):
        chosen.extend(a_parts[i][: x[i]])
        chosen.extend(b_parts[i][: x[i]])
    if eps:
        chosen.extend(a_parts[t][:1])
    return closed, h.edge_count(chosen)


def gr_table(r_values: Sequence[int]) -> list[dict]:
    """Rows (r, 2r, g_r(2r), 2^r) for the doubling identity."""
    rows = []
    for r in r_values:
        rows.append({"r": r, "m": 2 * r, "g": g_r(r, 2 * r), "power": 2**r})
    return rows
