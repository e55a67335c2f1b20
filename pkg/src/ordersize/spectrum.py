"""Size spectra, (m,f)-subset search, and weighted (m,f)-subset machinery.

A weighted (m,f)-subset lives in the stepped-down ordered graph: a set U of
m-r+2 vertices whose weighted edge sum equals f, where the weight of the pair
at positions (i, j) is the number of r-subsets of an m-set in which that pair
forms the first two elements. Appending a tail of r-2 later vertices turns U
into an honest (m,f)-subset of the original r-graph; ``verify_lift`` checks
that identity on concrete data.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .core import (
    Hypergraph,
    OrderedGraph,
    bits_of,
    iter_combinations_from,
    mask_of,
)
from .errors import BudgetExhausted, FactorizationError, SearchFailed
from .rng import SeededRNG
from .search import HomogeneousWitness, greedy_forward_clique

DEFAULT_EXHAUSTIVE_CAP = 10**8


# --- weight frames ----------------------------------------------------------


@dataclass(frozen=True)
class WeightFrame:
    """Pair weights for an m-set under an r-uniform split at position k.

    Positions are 1-based: the weighted pairs are k <= i < j <= m-r+k+1, and
    w(i, j) = C(i-1, k-1) * C(m-j, r-k-1). For the default split k=1 this is
    C(m-j, r-2), and for r=3 simply m-j.
    """

    r: int
    m: int
    k: int = 1

    def __post_init__(self):
        if self.r < 3 or self.m < self.r or not 1 <= self.k <= self.r - 1:
            raise ValueError(f"bad weight frame (r={self.r}, m={self.m}, k={self.k})")

    @property
    def size(self) -> int:
        """Number of weighted positions."""
        return self.m - self.r + 2

    @property
    def positions(self) -> range:
        return range(self.k, self.m - self.r + self.k + 2)

    def weight(self, i: int, j: int) -> int:
        if not (self.k <= i < j <= self.m - self.r + self.k + 1):
            raise ValueError(f"pair ({i}, {j}) outside the weighted positions")
        return comb(i - 1, self.k - 1) * comb(self.m - j, self.r - self.k - 1)

    def table(self) -> dict[tuple[int, int], int]:
        ps = list(self.positions)
        return {(i, j): self.weight(i, j) for i, j in combinations(ps, 2)}

    def total(self) -> int:
        """Sum of the full table; each r-subset of [m] is counted once."""
        return sum(self.table().values())


def weighted_total(g: OrderedGraph, u: Sequence[int], frame: WeightFrame) -> int:
    """Sum of w(i, j) over the edges of g among the vertices of u.

    u lists the vertices occupying the frame's weighted positions, in
    increasing order; its length must equal the frame size.
    """
    u = list(u)
    if len(u) != frame.size:
        raise ValueError(f"need {frame.size} vertices, got {len(u)}")
    if any(u[a] >= u[a + 1] for a in range(len(u) - 1)):
        raise ValueError("vertices must be strictly increasing")
    ps = list(frame.positions)
    total = 0
    for a in range(len(u)):
        for b in range(a + 1, len(u)):
            if g.has_edge(u[a], u[b]):
                total += frame.weight(ps[a], ps[b])
    return total


@dataclass(frozen=True)
class WeightedWitness:
    """A verified weighted (m,f)-subset of an ordered graph."""

    vertices: tuple[int, ...]
    r: int
    m: int
    f: int
    k: int = 1

    def verify(self, g: OrderedGraph) -> bool:
        frame = WeightFrame(self.r, self.m, self.k)
        return weighted_total(g, self.vertices, frame) == self.f


# --- size spectrum ----------------------------------------------------------


@dataclass
class SpectrumReport:
    m: int
    achieved: list[int]
    witnesses: dict[int, tuple[int, ...]]
    mode: str  # "exhaustive" | "sampled"
    subsets_examined: int
    seed: int | None = None
    samples: int | None = None

    @property
    def s(self) -> int:
        """Number of distinct induced sizes found."""
        return len(self.achieved)

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "achieved": list(self.achieved),
            "witnesses": {str(f): list(w) for f, w in sorted(self.witnesses.items())},
            "mode": self.mode,
            "subsets_examined": self.subsets_examined,
            "seed": self.seed,
            "samples": self.samples,
        }


def _scan_chunk(h: Hypergraph, m: int, start: int, count: int) -> tuple[dict[int, tuple[int, ...]], int]:
    witnesses: dict[int, tuple[int, ...]] = {}
    examined = 0
    for subset in iter_combinations_from(start, count, h.n, m):
        f = h.edge_count_mask(mask_of(subset))
        examined += 1
        if f not in witnesses:
            witnesses[f] = subset
    return witnesses, examined


def _scan_parallel(h: Hypergraph, m: int, total: int, threads: int):
    import multiprocessing as mp

    chunk = (total + threads - 1) // threads
    jobs = []
    start = 0
    while start < total:
        jobs.append((h, m, start, min(chunk, total - start)))
        start += chunk
    with mp.Pool(threads) as pool:
        parts = pool.starmap(_scan_chunk, jobs)
    witnesses: dict[int, tuple[int, ...]] = {}
    examined = 0
    # chunks arrive in rank order, so first-witness-by-rank is preserved
    for wit, ex in parts:
        examined += ex
        for f, w in wit.items():
            if f not in witnesses:
                witnesses[f] = w
    return witnesses, examined


def size_spectrum(
    h: Hypergraph,
    m: int,
    mode: str = "exhaustive",
    samples: int = 100_000,
    seed: int = 0,
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    threads: int = 1,
) -> SpectrumReport:
    """Achieved induced edge counts over m-vertex subsets, with witnesses.

    Exhaustive mode scans all C(n, m) subsets and refuses above ``cap``;
    sampled mode draws seeded uniform subsets. One witness is stored per
    achieved value, the first in scan order.
    """
    if not h.r <= m <= h.n:
        raise ValueError(f"m={m} out of range [{h.r}, {h.n}]")
    total = comb(h.n, m)
    if mode == "exhaustive":
        if total > cap:
            raise ValueError(
                f"exhaustive scan of {total} subsets exceeds the cap {cap}; use sampled mode"
            )
        if threads > 1:
            witnesses, examined = _scan_parallel(h, m, total, threads)
        else:
            witnesses, examined = _scan_chunk(h, m, 0, total)
        return SpectrumReport(m, sorted(witnesses), witnesses, "exhaustive", examined)
    if mode == "sampled":
        rng = SeededRNG(seed)
        witnesses = {}
        for _ in range(samples):
            subset = rng.sorted_sample(h.n, m)
            f = h.edge_count_mask(mask_of(subset))
            if f not in witnesses:
                witnesses[f] = subset
        return SpectrumReport(m, sorted(witnesses), witnesses, "sampled", samples, seed, samples)
    raise ValueError(f"unknown mode {mode!r}")


def find_mf_subset(
    h: Hypergraph,
    m: int,
    f: int,
    budget: int | None = None,
    seed: int = 0,
    random_restarts: int = 0,
) -> tuple[int, ...] | None:
    """Search for an m-set spanning exactly f edges.

    Scans subsets lexicographically (then seeded random draws if requested),
    spending one budget unit per subset. Returns a witness, or None when the
    lexicographic scan completed without finding one (absence proven). Raises
    BudgetExhausted when the budget ran out first.
    """
    if not 0 <= f <= comb(m, h.r):
        raise ValueError(f"f={f} out of range")
    if not h.r <= m <= h.n:
        raise ValueError(f"m={m} out of range")
    examined = 0
    for subset in combinations(range(h.n), m):
        if budget is not None and examined >= budget:
            raise BudgetExhausted("subset budget exhausted before completing the scan", examined)
        examined += 1
        if h.edge_count_mask(mask_of(subset)) == f:
            return subset
    if random_restarts:
        rng = SeededRNG(seed)
        for _ in range(random_restarts):
            if budget is not None and examined >= budget:
                raise BudgetExhausted("subset budget exhausted", examined)
            examined += 1
            subset = rng.sorted_sample(h.n, m)
            if h.edge_count_mask(mask_of(subset)) == f:
                return subset
    return None


# --- the lift identity --------------------------------------------------------


def chi_from_hypergraph(h: Hypergraph, x: Sequence[int]) -> OrderedGraph:
    """Derive the pair coloring of an ordered subset X from an r-graph.

    chi(x_a, x_b) is read off by completing the pair with the last r-2
    elements of X; the factorization of the full coloring through chi is then
    checked over every increasing r-tuple of X. Raises FactorizationError
    with the first offending tuple.
    """
    x = list(x)
    r = h.r
    if len(x) < r:
        raise ValueError("X must have at least r vertices")
    if any(x[a] >= x[a + 1] for a in range(len(x) - 1)):
        raise ValueError("X must be strictly increasing")
    tail = x[len(x) - (r - 2):]
    top = len(x) - (r - 2)
    edges = []
    for a in range(top):
        for b in range(a + 1, top):
            if h.has_edge((x[a], x[b], *tail)):
                edges.append((a, b))
    g = OrderedGraph(top, edges)
    for tup in combinations(range(len(x)), r):
        a, b = tup[0], tup[1]  # b < top always: r-2 tuple elements follow it
        want = g.has_edge(a, b)
        got = h.has_edge(tuple(x[i] for i in tup))
        if want != got:
            raise FactorizationError(
                "coloring does not factor through the pair coloring on X",
                tuple(x[i] for i in tup),
            )
    return g


def verify_lift(
    h: Hypergraph,
    x: Sequence[int],
    u: Sequence[int],
    tail: Sequence[int],
) -> bool:
    """Check that the induced count of U + tail equals the weighted total of U.

    X must carry a pair coloring through which the r-graph factors (verified
    first). U is drawn from the first |X| - (r-2) elements of X and tail is
    any r-2 elements of X after max(U).
    """
    r = h.r
    x = list(x)
    u = sorted(u)
    tail = sorted(tail)
    if len(tail) != r - 2:
        raise ValueError(f"tail must have r-2 = {r - 2} vertices")
    if any(t <= u[-1] for t in tail):
        raise ValueError("tail vertices must come after all of U")
    if not set(u) <= set(x) or not set(tail) <= set(x):
        raise ValueError("U and tail must be subsets of X")
    g = chi_from_hypergraph(h, x)  # raises FactorizationError if violated
    pos = {v: i for i, v in enumerate(x)}
    top = len(x) - (r - 2)
    if any(pos[v] >= top for v in u):
        raise ValueError("U must avoid the last r-2 positions of X")
    m = len(u) + r - 2
    frame = WeightFrame(r, m, 1)
    total = weighted_total(g, [pos[v] for v in u], frame)
    return h.edge_count(tuple(u) + tuple(tail)) == total


# --- weighted (m,f)-subset search (3-uniform constructive recursion) ----------


def _flip_kind(w: HomogeneousWitness) -> HomogeneousWitness:
    kind = "independent" if w.kind == "clique" else "clique"
    return HomogeneousWitness(w.set, kind, w.exact)


def _greedy_clique_mask(g: OrderedGraph, mask: int, forward: bool) -> tuple[int, ...]:
    chosen: list[int] = []
    remaining = mask
    while remaining:
        if forward:
            v = (remaining & -remaining).bit_length() - 1
        else:
            v = remaining.bit_length() - 1
        chosen.append(v)
        remaining &= ~(1 << v)
        if forward:
            remaining &= ~g.forward_non_neighbors(v, remaining)
        else:
            remaining &= ~g.backward_non_neighbors(v, remaining)
    return tuple(sorted(chosen))


def _greedy_independent_forward(g: OrderedGraph, mask: int) -> tuple[int, ...]:
    chosen: list[int] = []
    remaining = mask
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        chosen.append(v)
        remaining &= ~(1 << v)
        above = remaining & ~((1 << (v + 1)) - 1)
        remaining &= ~(above & g.adj[v])  # drop forward neighbors
    return tuple(sorted(chosen))


def _first_edge_in(g: OrderedGraph, mask: int) -> tuple[int, int] | None:
    verts = bits_of(mask)
    for a_i, a in enumerate(verts):
        for b in verts[a_i + 1:]:
            if g.has_edge(a, b):
                return (a, b)
    return None


def _first_nonedge_in(g: OrderedGraph, mask: int) -> tuple[int, int] | None:
    verts = bits_of(mask)
    for a_i, a in enumerate(verts):
        for b in verts[a_i + 1:]:
            if not g.has_edge(a, b):
                return (a, b)
    return None


def find_weighted_mf_subset(
    g: OrderedGraph,
    r: int,
    m: int,
    f: int,
    h: int,
    budget: int | None = None,
) -> WeightedWitness | HomogeneousWitness:
    """Constructive search for a weighted (m,f)-subset or homogeneous h-set.

    For r=3 this follows the inductive construction: recurse into the forward
    non-neighborhood of a vertex with many forward non-neighbors (prepending a
    vertex with no back-edges keeps the weighted total), with dedicated
    constructions for the two exceptional targets (m=4, f=2) and (m=5, f=5).
    Success is guaranteed when |V(g)| >= h^(m-2). Values of f above half the
    range are complemented internally and mapped back.

    For r >= 4 the same recursion applies above m = 5r^2; at that base the
    target pattern comes from the degree-sequence builder and is searched for
    as an induced ordered subgraph under the budget. Smaller m falls back to a
    budgeted direct scan. Failure raises SearchFailed with the reason.
    """
    if not 0 <= f <= comb(m, r):
        raise ValueError(f"f={f} out of range [0, {comb(m, r)}]")
    if h <= 1:
        if g.n < 1:
            raise ValueError("empty graph")
        return HomogeneousWitness((0,), "clique", True)
    if r == 3:
        if m < 3:
            raise ValueError("m must be at least 3")
        out = _weighted_r3(g, (1 << g.n) - 1, m, f, h)
    elif r >= 4:
        out = _weighted_general(g, 5 * r * r, r, m, f, h, budget)
    else:
        raise ValueError("r must be >= 3")
    if isinstance(out, WeightedWitness):
        assert out.verify(g), "weighted witness failed re-verification"
    else:
        gg = g if out.kind == "clique" else g.complement()
        assert gg.is_clique(out.set), "homogeneous witness failed re-verification"
        if len(out.set) < h:
            raise SearchFailed(
                "homogeneous witness smaller than the target",
                reason="guarantee precondition unmet",
                detail={"size": len(out.set), "h": h},
            )
    return out


def _weighted_r3(
    g: OrderedGraph, mask: int, m: int, f: int, h: int
) -> WeightedWitness | HomogeneousWitness:
    """Recursive search; results are stated relative to the graph g passed in."""
    total = comb(m, 3)
    if 2 * f > total:
        out = _weighted_r3(g.complement(), mask, m, total - f, h)
        if isinstance(out, WeightedWitness):
            # same vertex set; weighted totals of a set in g and its
            # complement always sum to C(m, 3)
            return WeightedWitness(out.vertices, 3, m, f)
        return _flip_kind(out)

    nverts = mask.bit_count()

    if m == 3:  # normalized f is 0 here
        ne = _first_nonedge_in(g, mask)
        if ne is not None:
            return WeightedWitness(ne, 3, 3, 0)
        clique = bits_of(mask)
        if len(clique) >= h:
            return HomogeneousWitness(clique, "clique", True)
        raise SearchFailed(
            "complete graph below the homogeneous target",
            reason="guarantee precondition unmet",
            detail={"m": m, "f": f, "h": h, "vertices": nverts},
        )

    if (m, f) == (4, 2):
        return _weighted_r3_m4f2(g, mask, h)
    if (m, f) == (5, 5):
        return _weighted_r3_m5f5(g, mask, h)

    need = h ** (m - 3)
    for v in bits_of(mask):
        fnn = g.forward_non_neighbors(v, mask)
        if fnn.bit_count() >= need:
            sub = _weighted_r3(g, fnn, m - 1, f, h)
            if isinstance(sub, WeightedWitness):
                # v precedes and is non-adjacent to everything in the witness,
                # so positions shift by one and weights are unchanged
                return WeightedWitness((v,) + sub.vertices, 3, m, f)
            return sub
    clique = _greedy_clique_mask(g, mask, forward=True)
    if len(clique) >= h:
        return HomogeneousWitness(clique, "clique", True)
    raise SearchFailed(
        "no vertex has a large forward non-neighborhood and the greedy clique is small",
        reason="guarantee precondition unmet",
        detail={"m": m, "f": f, "h": h, "vertices": nverts},
    )


def _weighted_r3_m4f2(g: OrderedGraph, mask: int, h: int):
    # backward non-neighborhood of some vertex holds an edge u1u2; then
    # {u1, u2, v} spans only that edge, of weight 2
    for v in sorted(bits_of(mask), reverse=True):
        bnn = g.backward_non_neighbors(v, mask)
        if bnn.bit_count() >= h:
            edge = _first_edge_in(g, bnn)
            if edge is None:
                return HomogeneousWitness(bits_of(bnn), "independent", True)
            u1, u2 = edge
            return WeightedWitness((u1, u2, v), 3, 4, 2)
    clique = _greedy_clique_mask(g, mask, forward=False)
    if len(clique) >= h:
        return HomogeneousWitness(clique, "clique", True)
    raise SearchFailed(
        "m=4, f=2: no large backward non-neighborhood and greedy clique too small",
        reason="guarantee precondition unmet",
        detail={"m": 4, "f": 2, "h": h},
    )


def _weighted_r3_m5f5(g: OrderedGraph, mask: int, h: int):
    # v' with forward neighbors u1, u2 (a non-edge), all inside the backward
    # non-neighborhood of v: edges v'u1, v'u2 weigh 3 + 2 = 5
    for v in sorted(bits_of(mask), reverse=True):
        bnn = g.backward_non_neighbors(v, mask)
        if bnn.bit_count() >= h * h:
            for vp in bits_of(bnn):
                above = bnn & ~((1 << (vp + 1)) - 1)
                np_mask = above & g.adj[vp]
                if np_mask.bit_count() >= h:
                    ne = _first_nonedge_in(g, np_mask)
                    if ne is None:
                        return HomogeneousWitness(bits_of(np_mask), "clique", True)
                    u1, u2 = ne
                    return WeightedWitness((vp, u1, u2, v), 3, 5, 5)
            ind = _greedy_independent_forward(g, bnn)
            if len(ind) >= h:
                return HomogeneousWitness(ind, "independent", True)
            raise SearchFailed(
                "m=5, f=5: inner stage produced neither structure",
                reason="guarantee precondition unmet",
                detail={"m": 5, "f": 5, "h": h},
            )
    clique = _greedy_clique_mask(g, mask, forward=False)
    if len(clique) >= h:
        return HomogeneousWitness(clique, "clique", True)
    raise SearchFailed(
        "m=5, f=5: no large backward non-neighborhood and greedy clique too small",
        reason="guarantee precondition unmet",
        detail={"m": 5, "f": 5, "h": h},
    )


def _weighted_general(g: OrderedGraph, m0: int, r: int, m: int, f: int, h: int, budget):
    total = comb(m, r)
    if 2 * f > total:
        out = _weighted_general(g.complement(), m0, r, m, total - f, h, budget)
        if isinstance(out, WeightedWitness):
            return WeightedWitness(out.vertices, r, m, f)
        return _flip_kind(out)
    if m > m0:
        # descend into forward non-neighborhoods big enough to host the next
        # level, backtracking across candidate vertices; the lemma's size
        # threshold involves untracked constants, so progress is best-effort
        # and the returned postconditions carry the guarantee
        needed = max((m - 1) - r + 2, 1)
        for v in range(g.n):
            fnn = g.forward_non_neighbors(v)
            if fnn.bit_count() >= needed:
                sub_vertices = bits_of(fnn)
                try:
                    sub = _weighted_general(g.induced(sub_vertices), m0, r, m - 1, f, h, budget)
                except SearchFailed:
                    continue
                if isinstance(sub, WeightedWitness):
                    mapped = (v,) + tuple(sub_vertices[i] for i in sub.vertices)
                    return WeightedWitness(mapped, r, m, f)
                return HomogeneousWitness(
                    tuple(sub_vertices[i] for i in sub.set), sub.kind, sub.exact
                )
        clique = greedy_forward_clique(g)
        if len(clique) >= h:
            return HomogeneousWitness(clique, "clique", True)
        raise SearchFailed(
            "induction step found no structure",
            reason="guarantee precondition unmet",
            detail={"r": r, "m": m, "f": f, "h": h},
        )
    if m == m0:
        from .hbuilder import build_H

        hc = build_H(r, m, f)
        target = g if not hc.complemented else g.complement()
        hit = find_induced_ordered_copy(target, hc.graph, budget)
        if hit is not None:
            return WeightedWitness(hit, r, m, f)
    else:
        size = m - r + 2
        frame = WeightFrame(r, m, 1)
        examined = 0
        for u in combinations(range(g.n), size):
            if budget is not None and examined >= budget:
                break
            examined += 1
            if weighted_total(g, u, frame) == f:
                return WeightedWitness(u, r, m, f)
    clique = _greedy_clique_mask(g, (1 << g.n) - 1, forward=True)
    ind = _greedy_independent_forward(g, (1 << g.n) - 1)
    best, kind = (clique, "clique") if len(clique) >= len(ind) else (ind, "independent")
    if len(best) >= h:
        return HomogeneousWitness(best, kind, False)
    raise SearchFailed(
        "base-case pattern not found and no large homogeneous set",
        reason="guarantee precondition unmet or budget exhausted",
        detail={"r": r, "m": m, "f": f, "h": h},
    )


def find_induced_ordered_copy(
    g: OrderedGraph, pattern: OrderedGraph, budget: int | None = None
) -> tuple[int, ...] | None:
    """Order-respecting induced embedding of ``pattern`` into ``g``.

    Backtracking over pattern positions in order; the partial map must match
    adjacency exactly. Returns the image vertices, or None; None proves
    absence only when the budget was not exhausted (exhaustion raises).
    """
    k, n = pattern.n, g.n
    if k > n:
        return None
    steps = 0
    image: list[int] = []

    def extend(pos: int, start: int) -> tuple[int, ...] | None:
        nonlocal steps
        if pos == k:
            return tuple(image)
        for v in range(start, n - (k - pos) + 1):
            steps += 1
            if budget is not None and steps > budget:
                raise BudgetExhausted("embedding budget exhausted", steps)
            ok = all(
                g.has_edge(image[q], v) == pattern.has_edge(q, pos) for q in range(pos)
            )
            if ok:
                image.append(v)
                hit = extend(pos + 1, v + 1)
                if hit is not None:
                    return hit
                image.pop()
        return None

    return extend(0, 0)


# --- the m = r+1 realization ---------------------------------------------------


@dataclass(frozen=True)
class RealizeResult:
    witness: tuple[int, ...] | None
    pattern_found: bool
    complemented: bool
    k: int
    x: tuple[int, ...]

    @property
    def absent(self) -> bool:
        return not self.pattern_found


def realize_r_plus_1(h: Hypergraph, f: int, ell: int | None = None) -> RealizeResult:
    """Find an (r+1, f)-subset through stepping down with split k = f.

    Values f > floor((r+1)/2) are complemented first. After stepping the
    coloring down to a pair coloring at positions (k, k+1), the op looks for
    positions i < j < l with the first two pairs absent and the third present
    (an independent triple when f = 0); the witness is the pattern plus the
    forced head and tail vertices, re-verified by a direct edge count.
    """
    from .stepdown import step_to_pairs

    r = h.r
    if not 0 <= f <= r + 1:
        raise ValueError(f"f={f} out of range [0, {r + 1}]")
    complemented = False
    work, ftarget = h, f
    if f > (r + 1) // 2:
        work, ftarget, complemented = h.complement(), r + 1 - f, True
    k = ftarget if ftarget >= 1 else 1
    step = step_to_pairs(work, k, ell)
    x = step.x
    if len(x) < r + 2:
        raise SearchFailed(
            f"stepped-down set has only {len(x)} vertices; need at least {r + 2}",
            reason="stepped-down input too short",
        )
    chi = step.chi
    ell_got = len(x)
    lo = k
    hi = ell_got - r + k + 1  # last admissible 1-based position

    def pair_color(a: int, b: int) -> int:
        return chi[(x[a - 1], x[b - 1])]

    want_last = 1 if ftarget >= 1 else 0
    found = None
    for i in range(lo, hi - 1):
        for j in range(i + 1, hi):
            if pair_color(i, j) != 0:
                continue
            for l in range(j + 1, hi + 1):
                if pair_color(i, l) == 0 and pair_color(j, l) == want_last:
                    found = (i, j, l)
                    break
            if found:
                break
        if found:
            break
    if found is None:
        return RealizeResult(None, False, complemented, k, x)
    i, j, l = found
    head = [x[a] for a in range(k - 1)]
    tail_count = r - k - 1
    tail = [x[a] for a in range(ell_got - tail_count, ell_got)]
    u = tuple(sorted(head + [x[i - 1], x[j - 1], x[l - 1]] + tail))
    if len(u) != r + 1:
        raise SearchFailed("assembled witness has the wrong size", reason="internal")
    count = h.edge_count(u)
    if count != f:
        raise SearchFailed(
            f"assembled subset spans {count} edges, expected {f}",
            reason="internal verification failure",
            detail={"witness": list(u)},
        )
    return RealizeResult(u, True, complemented, k, x)


# --- ordered-pattern weight existence (small exhaustive check) -----------------


def pattern_weight_exists(r: int, m: int, f: int, k: int) -> bool:
    """Is there an ordered graph on the m-r+2 weighted positions whose
    weighted total equals f, for the split-k weight table?"""
    frame = WeightFrame(r, m, k)
    ps = list(frame.positions)
    weights = [frame.weight(ps[a], ps[b]) for a, b in combinations(range(len(ps)), 2)]
    npairs = len(weights)
    for pick in range(1 << npairs):
        total = 0
        x = pick
        while x:
            low = x & -x
            total += weights[low.bit_length() - 1]
            x ^= low
        if total == f:
            return True
    return False


def pattern_weight_exists_any_split(r: int, m: int, f: int, k_max: int | None = None) -> dict[int, bool]:
    """Existence per split k; k and r-k give mirror-image weight tables."""
    top = k_max if k_max is not None else r // 2
    return {k: pattern_weight_exists(r, m, f, k) for k in range(1, top + 1)}
