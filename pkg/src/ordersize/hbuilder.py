"""Base-case ordered graphs of prescribed weighted total, with certificates.

For uniformity r and m vertices, the graph lives on the L = m-r+2 weighted
positions with pair weights w_j = C(m-j, r-2) (split 1). The backward degree
sequence d_1..d_L is chosen greedily maximal subject to sum(d_i * w_i) <= f;
realizing those backward degrees by a clique prefix, a monotone star forest,
and a nested star forest gives a graph of total weight exactly f whose
substitution certificate over empty graphs, cliques, and the three-vertex
pattern F0 (single edge 13) witnesses the ordered Erdos-Hajnal property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import OrderedGraph
from .errors import SearchFailed


class BuildError(SearchFailed):
    pass


# --- exact logarithm bounds ---------------------------------------------------


def ln_bounds(x: int | Fraction, terms: int = 60) -> tuple[Fraction, Fraction]:
    """Exact rational lower and upper bounds on ln(x) for x > 1.

    Uses ln x = 2 * atanh((x-1)/(x+1)) with an explicit tail bound, so all
    threshold comparisons stay in integer arithmetic.
    """
    x = Fraction(x)
    if x <= 1:
        raise ValueError("ln_bounds needs x > 1")
    z = (x - 1) / (x + 1)
    z2 = z * z
    term = z
    partial = Fraction(0)
    for j in range(terms):
        partial += term / (2 * j + 1)
        term *= z2
    lower = 2 * partial
    tail = 2 * term / ((2 * terms + 1) * (1 - z2))
    return lower, lower + tail


# --- degree sequences -----------------------------------------------------------


@dataclass(frozen=True)
class DSequence:
    """Greedy-maximal backward degree sequence for (r, m, f).

    ``d[i-1]`` holds the value at 1-based position i. ``i_star`` is the first
    position from 2 on where the degree drops below its cap i-1; ``gap`` is a
    zero run (k, l) located by the structural checks; ``tail_degree_sum`` is
    the degree mass on the last r-3 positions.
    """

    r: int
    m: int
    f: int
    d: tuple[int, ...]
    i_star: int | None
    gap: tuple[int, int] | None
    tail_degree_sum: int

    def at(self, i: int) -> int:
        return self.d[i - 1]

    @property
    def length(self) -> int:
        return len(self.d)

    def weighted_sum(self) -> int:
        return sum(di * comb(self.m - i, self.r - 2) for i, di in enumerate(self.d, start=1))


def position_weight(r: int, m: int, i: int) -> int:
    """Weight of any pair whose larger position is i (split 1)."""
    return comb(m - i, r - 2)


def _zero_runs(d: tuple[int, ...], i_star: int, m: int, r: int) -> list[tuple[int, int]]:
    """Maximal runs of zero positions usable as gap interiors.

    A gap (k, l) needs i_star <= k < l <= m-2r+5 with zeros strictly between,
    so interiors live in positions [i_star+1, m-2r+4]. Returns (a, b) runs,
    inclusive."""
    lo, hi = i_star + 1, m - 2 * r + 4
    runs: list[tuple[int, int]] = []
    p = lo
    while p <= hi:
        if d[p - 1] != 0:
            p += 1
            continue
        q = p
        while q + 1 <= hi and d[q] == 0:
            q += 1
        runs.append((p, q))
        p = q + 1
    return runs


def _find_gap(d: tuple[int, ...], i_star: int, m: int, r: int, min_len: int) -> tuple[int, int] | None:
    """First (k, l) gap of length at least min_len (k = run start - 1)."""
    for a, b in _zero_runs(d, i_star, m, r):
        if (b - a + 2) >= min_len:
            return (a - 1, b + 1)
    return None


def _best_gap(d: tuple[int, ...], i_star: int, m: int, r: int) -> tuple[int, int] | None:
    """Longest gap (first such on ties)."""
    best = None
    for a, b in _zero_runs(d, i_star, m, r):
        if best is None or (b - a) > (best[1] - best[0]):
            best = (a, b)
    if best is None:
        return None
    return (best[0] - 1, best[1] + 1)


def d_sequence(r: int, m: int, f: int) -> DSequence:
    """Greedy-maximal degrees: d_i is the largest value in [0, i-1] keeping
    the running weighted sum at most f."""
    if r < 3:
        raise ValueError("r must be >= 3")
    if m < r + 1:
        raise ValueError("m must be at least r+1")
    if not 0 <= 2 * f <= comb(m, r):
        raise ValueError(f"f={f} out of range [0, {comb(m, r) // 2}]; complement first")
    length = m - r + 2
    d: list[int] = [0]
    running = 0
    for i in range(2, length + 1):
        w = position_weight(r, m, i)
        di = min(i - 1, (f - running) // w)
        d.append(di)
        running += di * w
    i_star = next((i for i in range(2, length + 1) if d[i - 1] <= i - 2), None)
    tail_sum = sum(d[i - 1] for i in range(m - 2 * r + 6, length + 1)) if r >= 4 else 0
    gap = _find_gap(tuple(d), i_star, m, r, tail_sum + 2) if (i_star and r >= 4) else None
    return DSequence(r, m, f, tuple(d), i_star, gap, tail_sum)


@dataclass(frozen=True)
class ClaimReport:
    items: dict[str, bool]
    advisory: bool
    gap: tuple[int, int] | None
    details: dict

    @property
    def all_pass(self) -> bool:
        return all(self.items.values())


def verify_claim_d(seq: DSequence) -> ClaimReport:
    """Check the four structural properties of a greedy degree sequence:

    (a) i_star is at most (m+r)/2;
    (b) beyond i_star, d_i < (r-2)/(m-r+3-i) + 1 and d_i <= i-2 (so d_i <= 1
        up to position m-2r+5);
    (c) the weighted sum hits f exactly;
    (d) some zero run (k, l) with k >= i_star, l <= m-2r+5 has length at
        least 2(r-2)ln(2(r-2)).

    Outside the regime r >= 4, m >= 5r^2 the report is flagged advisory and
    the items are still evaluated.
    """
    r, m, f, d = seq.r, seq.m, seq.f, seq.d
    advisory = not (r >= 4 and m >= 5 * r * r)
    details: dict = {}
    items: dict[str, bool] = {}

    items["a"] = seq.i_star is not None and 2 * seq.i_star <= m + r
    details["i_star"] = seq.i_star

    ok_b = seq.i_star is not None
    if seq.i_star is not None:
        for i in range(seq.i_star + 1, seq.length + 1):
            di = seq.at(i)
            # d_i < (r-2)/(m-r+3-i) + 1, exactly in rationals
            if not (Fraction(di) < Fraction(r - 2, m - r + 3 - i) + 1):
                ok_b = False
                details.setdefault("b_violations", []).append(i)
            if di > i - 2:
                ok_b = False
                details.setdefault("b_violations", []).append(i)
            if i <= m - 2 * r + 5 and di > 1:
                ok_b = False
                details.setdefault("b_violations", []).append(i)
    items["b"] = ok_b

    items["c"] = seq.weighted_sum() == f
    details["weighted_sum"] = seq.weighted_sum()

    if seq.i_star is not None:
        _, ln_up = ln_bounds(2 * (r - 2))
        threshold = 2 * (r - 2) * ln_up
        gap = _best_gap(d, seq.i_star, m, r)
        items["d"] = gap is not None and Fraction(gap[1] - gap[0]) >= threshold
        details["gap"] = gap
        details["gap_threshold"] = float(threshold)
    else:
        gap = None
        items["d"] = False
        details["gap"] = None
    return ClaimReport(items, advisory, gap, details)


# --- substitution certificates ---------------------------------------------------


@dataclass(frozen=True)
class CertNode:
    """A substitution-tree node.

    ``kind`` is empty, clique, or f0. A node with no children is a leaf of
    ``size`` vertices (3 for f0, which is the ordered pattern with the single
    edge 13). A node with children substitutes them, in order, into the host
    graph of that kind: between two children the bipartite graph is complete
    exactly when the host pair is an edge.
    """

    kind: str
    size: int = 0
    children: tuple["CertNode", ...] = ()

    def __post_init__(self):
        if self.kind not in ("empty", "clique", "f0"):
            raise ValueError(f"unknown node kind {self.kind!r}")
        if self.children:
            arity = 3 if self.kind == "f0" else self.size
            if len(self.children) != arity:
                raise ValueError(f"host of kind {self.kind} needs {arity} children")
        else:
            if self.kind == "f0":
                if self.size != 3:
                    raise ValueError("an f0 leaf has exactly 3 vertices")
            elif self.size < 1:
                raise ValueError("leaves must have at least one vertex")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def total_size(self) -> int:
        if self.is_leaf:
            return self.size
        return sum(c.total_size() for c in self.children)

    def leaf_kinds(self) -> set[str]:
        if self.is_leaf:
            return {self.kind}
        return {self.kind} | set().union(*(c.leaf_kinds() for c in self.children))

    def to_json_obj(self):
        if self.is_leaf:
            return {"kind": self.kind, "size": self.size}
        return {"kind": self.kind, "children": [c.to_json_obj() for c in self.children]}


def empty_node(t: int) -> CertNode:
    return CertNode("empty", t)


def clique_node(t: int) -> CertNode:
    return CertNode("clique", t)


def f0_node() -> CertNode:
    return CertNode("f0", 3)


def _single() -> CertNode:
    return CertNode("empty", 1)


def _is_plain(node: CertNode, kind: str) -> bool:
    return node.is_leaf and (node.kind == kind or node.size == 1)


def _merge_run(children: list[CertNode], kind: str) -> list[CertNode]:
    merged: list[CertNode] = []
    for c in children:
        if _is_plain(c, kind) and merged and _is_plain(merged[-1], kind):
            merged[-1] = CertNode(kind, merged[-1].size + c.size)
        else:
            merged.append(c)
    return merged


def cert_disjoint(children) -> CertNode | None:
    """Disjoint union, flattening nested unions and merging empty runs."""
    kids: list[CertNode] = []
    for c in children:
        if c is None:
            continue
        if not c.is_leaf and c.kind == "empty":
            kids.extend(c.children)
        else:
            kids.append(c)
    kids = _merge_run(kids, "empty")
    if not kids:
        return None
    if len(kids) == 1:
        return kids[0]
    return CertNode("empty", len(kids), tuple(kids))


def cert_join(children) -> CertNode | None:
    """Sequential join: consecutive blocks completely adjacent."""
    kids: list[CertNode] = []
    for c in children:
        if c is None:
            continue
        if not c.is_leaf and c.kind == "clique":
            kids.extend(c.children)
        else:
            kids.append(c)
    kids = _merge_run(kids, "clique")
    if not kids:
        return None
    if len(kids) == 1:
        return kids[0]
    return CertNode("clique", len(kids), tuple(kids))


def cert_f0(a: CertNode | None, b: CertNode | None, c: CertNode | None) -> CertNode | None:
    """Substitute into the three slots of F0 (edge between slots 1 and 3)."""
    if a is None:
        return cert_disjoint([b, c])
    if b is None:
        return cert_join([a, c])
    if c is None:
        return cert_disjoint([a, b])
    return CertNode("f0", 3, (a, b, c))


def expand_certificate(node: CertNode) -> OrderedGraph:
    """Recursive expansion of a substitution tree into an ordered graph."""
    if node.is_leaf:
        if node.kind == "empty":
            return OrderedGraph(node.size, ())
        if node.kind == "clique":
            return OrderedGraph(node.size, combinations(range(node.size), 2))
        return OrderedGraph(3, [(0, 2)])
    if node.kind == "f0":
        host = OrderedGraph(3, [(0, 2)])
    elif node.kind == "clique":
        host = OrderedGraph(len(node.children), combinations(range(len(node.children)), 2))
    else:
        host = OrderedGraph(len(node.children), ())
    blocks = [expand_certificate(c) for c in node.children]
    offsets = []
    total = 0
    for b in blocks:
        offsets.append(total)
        total += b.n
    edges: list[tuple[int, int]] = []
    for bi, b in enumerate(blocks):
        edges.extend((offsets[bi] + x, offsets[bi] + y) for x, y in b.edges)
    for bi in range(len(blocks)):
        for bj in range(bi + 1, len(blocks)):
            if host.has_edge(bi, bj):
                edges.extend(
                    (offsets[bi] + x, offsets[bj] + y)
                    for x in range(blocks[bi].n)
                    for y in range(blocks[bj].n)
                )
    return OrderedGraph(total, edges)


def _monotone_star(leaves: int) -> CertNode:
    if leaves == 0:
        return _single()
    return cert_join([_single(), empty_node(leaves)])


def _nested_tree(leaf_sizes: list[int], middle: CertNode | None) -> CertNode | None:
    """Nested star forest L_1 < ... < L_t < c_t < ... < c_1, with an optional
    extra block sitting isolated between L_t and c_t."""
    if not leaf_sizes:
        return middle
    first, rest = leaf_sizes[0], leaf_sizes[1:]
    inner = _nested_tree(rest, middle)
    return cert_f0(empty_node(first) if first > 0 else None, inner, _single())


def certify_star_forests(kind: str, shape: list[int]) -> CertNode:
    """Certificates for the two forest shapes.

    ``monotone``: shape lists leaf counts of consecutive stars, each star a
    center followed by its leaves. ``nested``: shape lists leaf block sizes
    L_1..L_t, blocks first in order, then the centers in reverse.
    """
    if not shape:
        raise ValueError("shape must be nonempty")
    if kind == "monotone":
        node = cert_disjoint([_monotone_star(t) for t in shape])
    elif kind == "nested":
        node = _nested_tree(list(shape), None)
    else:
        raise ValueError(f"unknown forest kind {kind!r}")
    assert node is not None
    return node


# --- the construction -------------------------------------------------------------


@dataclass(frozen=True)
class HConstruction:
    r: int
    m: int
    f: int
    d: DSequence
    graph: OrderedGraph
    cert: CertNode
    complemented: bool

    @property
    def realized_weight(self) -> int:
        """Weighted total of the built graph; the complement flag means the
        graph realizes C(m, r) - f and is meant for the complement side."""
        return self.f if not self.complemented else comb(self.m, self.r) - self.f

    def backward_degrees(self) -> tuple[int, ...]:
        degs = [0] * self.graph.n
        for a, b in self.graph.edges:
            degs[b] += 1
        return tuple(degs)

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "f": self.f,
            "d": list(self.d.d),
            "edges": sorted([list(e) for e in self.graph.edges]),
            "cert": self.cert.to_json_obj(),
            "complemented": self.complemented,
        }


def build_H(r: int, m: int, f: int, strict: bool = False) -> HConstruction:
    """Ordered graph on the m-r+2 weighted positions with total weight f.

    Backward degrees follow the greedy sequence: a clique prefix up to
    i_star - 1, the i_star vertex wired to the first d_{i_star} vertices, a
    monotone star forest on the middle, and the last r-3 positions wired into
    a zero run as a nested star forest. Values of f above half the range are
    complemented (flagged) first. ``strict`` enforces m >= 5r^2; without it
    the builder attempts any m and raises BuildError when the structure does
    not fit.
    """
    if r < 4:
        raise ValueError("the base construction needs r >= 4")
    if m < r + 2:
        raise ValueError("m too small")
    if not 0 <= f <= comb(m, r):
        raise ValueError(f"f={f} out of range")
    if strict and m < 5 * r * r:
        raise ValueError(f"m={m} below the guarantee threshold {5 * r * r}")
    complemented = 2 * f > comb(m, r)
    ftarget = comb(m, r) - f if complemented else f
    seq = d_sequence(r, m, ftarget)
    if seq.i_star is None:
        raise BuildError(
            "no position with a degree drop; m is too small for this f",
            reason="no i_star",
        )
    length = seq.length
    i_star = seq.i_star
    d = seq.at
    edges: list[tuple[int, int]] = []

    def add(i: int, j: int) -> None:
        # positions are 1-based; vertices 0-based
        edges.append((i - 1, j - 1))

    for j in range(2, i_star):
        for i in range(1, j):
            add(i, j)
    for i in range(1, d(i_star) + 1):
        add(i, i_star)

    zeros_seen = [1]  # position 1 always has degree 0
    mid_hi = min(m - 2 * r + 5, length)
    for i in range(i_star, mid_hi + 1):
        if d(i) == 0:
            zeros_seen.append(i)
        elif i > i_star:
            if d(i) != 1:
                raise BuildError(
                    f"middle position {i} has degree {d(i)} > 1",
                    reason="degree pattern violated",
                )
            add(zeros_seen[-1], i)

    tail_lo = m - 2 * r + 6
    big_d = seq.tail_degree_sum
    if tail_lo <= length:
        gap = _find_gap(seq.d, i_star, m, r, big_d + 2)
        if gap is None:
            raise BuildError(
                "no zero run long enough to host the tail leaves",
                reason="gap not found",
                detail={"needed": big_d + 2},
            )
        k, _l = gap
        pos = k + 1
        for i in range(length, tail_lo - 1, -1):
            for b in range(d(i)):
                add(pos, i)
                pos += 1
    else:
        gap = None
        k = None

    graph = OrderedGraph(length, edges)

    degs = [0] * length
    for a, b in edges:
        degs[b] += 1
    if tuple(degs) != seq.d:
        raise BuildError("backward degrees do not match the sequence", reason="internal")
    weight = sum(position_weight(r, m, j + 1) for _a, j in edges)
    if weight != ftarget:
        raise BuildError(
            f"total weight {weight} != target {ftarget}", reason="internal"
        )

    cert = _build_certificate(seq, i_star, k, mid_hi, tail_lo)
    expanded = expand_certificate(cert)
    if expanded.n != length or expanded.edges != graph.edges:
        raise BuildError("certificate does not expand to the built graph", reason="internal")

    return HConstruction(r, m, f, seq, graph, cert, complemented)


def _build_certificate(
    seq: DSequence, i_star: int, k: int | None, mid_hi: int, tail_lo: int
) -> CertNode:
    d = seq.at
    length = seq.length

    # i1: first position >= i_star with degree zero
    i1 = next(i for i in range(i_star, length + 1) if d(i) == 0)

    # V1 = positions 1..i1-1
    if i1 == i_star:
        cert_v1: CertNode | None = clique_node(i_star - 1)
    else:
        a = d(i_star)
        inner = cert_disjoint(
            [clique_node(i_star - 1 - a) if i_star - 1 - a > 0 else None, _single()]
        )
        cert_x = cert_join([clique_node(a - 1) if a - 1 > 0 else None, inner])
        pend = empty_node(i1 - 1 - i_star) if i1 - 1 - i_star > 0 else None
        cert_v1 = cert_join([_single(), cert_disjoint([cert_x, pend])])

    if k is None:
        # no tail block: everything after V1 is a monotone star forest
        stars = _star_shape(seq, i1, length)
        cert_v2 = cert_disjoint([_monotone_star(t) for t in stars]) if stars else None
        return _finish_cert(cert_v1, cert_v2, None)

    stars_v2 = _star_shape(seq, i1, k)
    cert_v2 = cert_disjoint([_monotone_star(t) for t in stars_v2]) if stars_v2 else None

    big_d = seq.tail_degree_sum
    stars_u2 = _star_shape(seq, k + big_d + 1, mid_hi)
    cert_u2 = cert_disjoint([_monotone_star(t) for t in stars_u2]) if stars_u2 else None
    leaf_sizes = [d(i) for i in range(length, tail_lo - 1, -1)]
    cert_v3 = _nested_tree(leaf_sizes, cert_u2)
    return _finish_cert(cert_v1, cert_v2, cert_v3)


def _star_shape(seq: DSequence, lo: int, hi: int) -> list[int]:
    """Leaf counts of the consecutive stars covering positions lo..hi."""
    stars: list[int] = []
    for i in range(lo, hi + 1):
        if seq.at(i) == 0:
            stars.append(0)
        else:
            stars[-1] += 1
    return stars


def _finish_cert(*parts: CertNode | None) -> CertNode:
    node = cert_disjoint(list(parts))
    assert node is not None
    return node
