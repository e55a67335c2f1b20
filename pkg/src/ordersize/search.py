"""Homogeneous-set, star, and link-graph search primitives.

Every witness returned here is re-verified against the source graph by direct
edge queries before it leaves the function. Tie-breaking is by smallest vertex
index throughout, so all searches are deterministic given the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil, comb

from .core import Hypergraph, OrderedGraph, bits_of, mask_of
from .rng import SeededRNG

DEFAULT_EXACT_LIMIT = 40


@dataclass(frozen=True)
class HomogeneousWitness:
    set: tuple[int, ...]
    kind: str  # "clique" | "independent"
    exact: bool

    def size(self) -> int:
        return len(self.set)

    def verify(self, h: Hypergraph) -> bool:
        if self.kind == "clique":
            return h.is_clique(self.set)
        return h.is_independent(self.set)


@dataclass(frozen=True)
class Star:
    """(center, leaves) with every leaf pair forming an edge with the center.

    ``anti`` flips all conditions to the complement; ``induced`` additionally
    requires the leaf set to span no edges (all edges for an antistar).
    """

    center: int
    leaves: tuple[int, ...]
    induced: bool
    anti: bool

    def verify(self, h: Hypergraph) -> bool:
        if self.center in self.leaves:
            return False
        want = not self.anti
        for pair in combinations(self.leaves, 2):
            if h.has_edge(pair + (self.center,)) != want:
                return False
        if self.induced:
            inner = not self.anti  # star: no inner edges; antistar: all inner
            for triple in combinations(self.leaves, 3):
                if h.has_edge(triple) == inner:
                    return False
        return True


@dataclass(frozen=True)
class StarSearchResult:
    stars: tuple[Star, ...]
    complete: bool
    examined: int


@dataclass(frozen=True)
class SpencerResult:
    set: tuple[int, ...]
    target: int
    trials: int
    met_target: bool


@dataclass(frozen=True)
class CountReport:
    value: int
    exact: bool
    examined: int


def _pair_links(h: Hypergraph) -> list[list[int]]:
    """pair_links[a][b] = bitmask of w with {a, b, w} an edge (3-uniform)."""
    links = [[0] * h.n for _ in range(h.n)]
    for e in h.edges:
        a, b, c = e
        links[a][b] |= 1 << c
        links[b][a] |= 1 << c
        links[a][c] |= 1 << b
        links[c][a] |= 1 << b
        links[b][c] |= 1 << a
        links[c][b] |= 1 << a
    return links


def _max_clique_3graph(h: Hypergraph, within: int | None = None) -> tuple[int, ...]:
    """Exact maximum clique of a 3-graph by branch and bound over bitmasks.

    A set is a clique when every triple inside it is an edge; any pair is
    trivially a clique. Lexicographically first optimum is returned.
    """
    scope = bits_of(within) if within is not None else tuple(range(h.n))
    if len(scope) <= 2:
        return tuple(scope)
    links = _pair_links(h)
    full = mask_of(scope)
    best: list = [list(scope[:2])]

    def extend(chosen: list[int], cand: int) -> None:
        if len(chosen) > len(best[0]):
            best[0] = chosen.copy()
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if len(chosen) + 1 + rest.bit_count() <= len(best[0]):
                return  # taking v plus all later candidates cannot beat best
            new_cand = rest
            for a in chosen:
                new_cand &= links[a][v]
            chosen.append(v)
            extend(chosen, new_cand)
            chosen.pop()

    extend([], full)
    return tuple(best[0])


def _greedy_clique_3graph(h: Hypergraph) -> tuple[int, ...]:
    links = _pair_links(h)
    chosen: list[int] = []
    for v in range(h.n):
        ok = all(links[a][b] >> v & 1 for a, b in combinations(chosen, 2))
        if ok:
            chosen.append(v)
    return tuple(chosen)


def max_homogeneous(h: Hypergraph, exact_limit: int = DEFAULT_EXACT_LIMIT) -> HomogeneousWitness:
    """Largest clique or independent set; exact up to ``exact_limit`` vertices.

    Above the limit a deterministic greedy lower bound is returned with
    ``exact=False``. Ties between the clique and independent sides go to the
    clique.
    """
    if h.r != 3:
        raise ValueError("max_homogeneous currently supports 3-graphs")
    exact = h.n <= exact_limit
    if exact:
        cl = _max_clique_3graph(h)
        ind = _max_clique_3graph(h.complement())
    else:
        cl = _greedy_clique_3graph(h)
        ind = _greedy_clique_3graph(h.complement())
    if len(cl) >= len(ind):
        w = HomogeneousWitness(cl, "clique", exact)
    else:
        w = HomogeneousWitness(ind, "independent", exact)
    assert w.verify(h)
    return w


def link_graph(h: Hypergraph, v: int) -> OrderedGraph:
    """For a 3-graph: the graph on V minus v with edges {xy : xyv in E}."""
    if h.r != 3:
        raise ValueError("link graphs are defined for 3-uniform hypergraphs")
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range")
    others = [u for u in range(h.n) if u != v]
    relabel = {u: i for i, u in enumerate(others)}
    edges = [
        (relabel[a], relabel[b])
        for e in h.edges
        if v in e
        for a, b in [tuple(u for u in e if u != v)]
    ]
    return OrderedGraph(h.n - 1, edges)


def _enumerate_cliques(g: OrderedGraph, size: int, budget: list[int]) -> tuple[list[tuple[int, ...]], bool]:
    """All cliques of a given size in an ordered 2-graph, lexicographic.

    ``budget[0]`` counts down extension steps; on exhaustion the partial list
    is returned with a False flag.
    """
    out: list[tuple[int, ...]] = []
    full = (1 << g.n) - 1

    def extend(chosen: list[int], cand: int) -> bool:
        if len(chosen) == size:
            out.append(tuple(chosen))
            return True
        need = size - len(chosen)
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if 1 + rest.bit_count() < need:
                return True  # too few candidates left on this branch
            if budget[0] <= 0:
                return False
            budget[0] -= 1
            chosen.append(v)
            if not extend(chosen, rest & g.adj[v]):
                chosen.pop()
                return False
            chosen.pop()
        return True

    complete = extend([], full)
    return out, complete


def find_stars(
    h: Hypergraph,
    s: int,
    want_induced: bool = False,
    want_anti: bool = False,
    budget: int | None = None,
) -> StarSearchResult:
    """Enumerate stars (or antistars) of size s, optionally induced.

    Exhaustive over centers and leaf sets within budget; otherwise a truncated
    list flagged partial. Leaf sets are s-cliques of the center's link graph
    (independent sets for antistars).
    """
    if h.r != 3:
        raise ValueError("find_stars is defined for 3-uniform hypergraphs")
    limit = [budget if budget is not None else 1 << 62]
    start = limit[0]
    stars: list[Star] = []
    complete = True
    for v in range(h.n):
        lg = link_graph(h, v)
        target = lg if not want_anti else lg.complement()
        leafsets, done = _enumerate_cliques(target, s, limit)
        others = [u for u in range(h.n) if u != v]
        for ls in leafsets:
            leaves = tuple(others[i] for i in ls)
            st = Star(v, leaves, want_induced, want_anti)
            if want_induced:
                if not st.verify(h):
                    continue
            stars.append(st)
        if not done:
            complete = False
            break
    if complete:
        for st in stars:
            assert st.verify(h)
    return StarSearchResult(tuple(stars), complete, start - limit[0])


def spencer_independent(h: Hypergraph, trials: int, seed: int) -> SpencerResult:
    """Randomized deletion heuristic for independent sets in k-graphs.

    Keeps each vertex with probability d^(-1/(k-1)) for average degree d, then
    deletes one vertex from every surviving edge. Reports the best set over
    the trials next to the target ceil((1 - 1/k) * n / d^(1/(k-1))). Output is
    independent on every run; the target may or may not be met.
    """
    k, n = h.r, h.n
    if n == 0:
        return SpencerResult((), 0, trials, True)
    if not h.edges:
        return SpencerResult(tuple(range(n)), n, trials, True)
    d = k * len(h.edges) / n
    p = min(1.0, d ** (-1.0 / (k - 1)))
    target = ceil((1 - 1 / k) * n / d ** (1 / (k - 1)))
    rng = SeededRNG(seed)
    den = 1 << 30
    num = int(p * den)
    best: tuple[int, ...] = ()
    edges = sorted(h.edges)
    for _ in range(max(1, trials)):
        kept = set(v for v in range(n) if rng.chance(num, den))
        for e in edges:
            if all(v in kept for v in e):
                kept.discard(max(e))
        if len(kept) > len(best):
            best = tuple(sorted(kept))
    assert h.is_independent(best)
    return SpencerResult(best, target, trials, len(best) >= target)


def greedy_forward_clique(g: OrderedGraph, k: int | None = None) -> tuple[int, ...]:
    """Greedy clique: take the smallest remaining vertex, drop its forward
    non-neighbors. If every forward non-neighborhood has size < k this yields
    a clique of size >= ceil(n/k); k plays no role in the procedure itself.
    """
    remaining = (1 << g.n) - 1
    chosen: list[int] = []
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        chosen.append(v)
        remaining ^= low
        remaining &= ~g.forward_non_neighbors(v)
    assert g.is_clique(chosen)
    return tuple(chosen)


def greedy_backward_clique(g: OrderedGraph) -> tuple[int, ...]:
    """Mirror of greedy_forward_clique from the top of the order down."""
    remaining = (1 << g.n) - 1
    chosen: list[int] = []
    while remaining:
        v = remaining.bit_length() - 1
        chosen.append(v)
        remaining ^= 1 << v
        remaining &= ~g.backward_non_neighbors(v)
    assert g.is_clique(chosen)
    return tuple(sorted(chosen))


def max_clique(g: OrderedGraph) -> tuple[int, ...]:
    """Exact maximum clique of a 2-graph; lexicographically first optimum."""
    best: list[list[int]] = [[]]

    def extend(chosen: list[int], cand: int) -> None:
        if len(chosen) > len(best[0]):
            best[0] = chosen.copy()
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if len(chosen) + 1 + rest.bit_count() <= len(best[0]):
                return
            chosen.append(v)
            extend(chosen, rest & g.adj[v])
            chosen.pop()

    extend([], (1 << g.n) - 1)
    return tuple(best[0])


def max_independent_set(g: OrderedGraph) -> tuple[int, ...]:
    return max_clique(g.complement())


def _independent_tsets(g: OrderedGraph, t: int, within: int | None = None) -> list[int]:
    """Bitmasks of all independent t-sets, lexicographic by vertex list."""
    out: list[int] = []

    def extend(mask: int, count: int, cand: int) -> None:
        if count == t:
            out.append(mask)
            return
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if count + 1 + rest.bit_count() < t:
                return
            extend(mask | low, count + 1, rest & ~g.adj[v])

    extend(0, 0, ((1 << g.n) - 1) if within is None else within)
    return out


def count_independent_tsets(g: OrderedGraph, t: int) -> int:
    """Exact number of independent t-sets."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return len(_independent_tsets(g, t))


def _is_complete_between(g: OrderedGraph, amask: int, bmask: int) -> bool:
    for a in bits_of(amask):
        if bmask & ~g.adj[a]:
            return False
    return True


def _ktt_partners(g: OrderedGraph, amask: int, t: int) -> list[int]:
    """Independent t-sets inside the common neighborhood of A.

    Such a set is automatically disjoint from A and completely joined to it,
    so (A, partner) is an induced K_{t,t}.
    """
    common = (1 << g.n) - 1
    for a in bits_of(amask):
        common &= g.adj[a]
    if common.bit_count() < t:
        return []
    return _independent_tsets(g, t, within=common)


def count_induced_ktt(
    g: OrderedGraph, t: int, budget: int | None = None, seed: int = 0
) -> CountReport:
    """Count unordered pairs of disjoint independent t-sets that are complete
    bipartite to each other. Exact within budget, else a sampled estimate
    (flagged by ``exact=False``), seeded for replay.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    tsets = _independent_tsets(g, t)
    total_pairs = len(tsets) * (len(tsets) - 1) // 2
    if budget is None or total_pairs <= budget:
        count = 0
        for amask in tsets:
            count += sum(1 for b in _ktt_partners(g, amask, t) if b > amask)
        return CountReport(count, True, total_pairs)
    rng = SeededRNG(seed)
    hits = 0
    samples = budget
    for _ in range(samples):
        i = rng.randrange(len(tsets))
        j = rng.randrange(len(tsets))
        if i == j:
            continue
        a, b = tsets[i], tsets[j]
        if a & b:
            continue
        if _is_complete_between(g, a, b):
            hits += 1
    ordered_total = len(tsets) * (len(tsets) - 1)
    est = round(hits / samples * ordered_total / 2)
    return CountReport(est, False, samples)


def enumerate_induced_ktt(g: OrderedGraph, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All unordered induced K_{t,t} part pairs, each as (A, B) with A lex-first."""
    out = []
    for amask in _independent_tsets(g, t):
        for bmask in _ktt_partners(g, amask, t):
            if bmask > amask:
                out.append((bits_of(amask), bits_of(bmask)))
    return out


def exhaustive_max_homogeneous(h: Hypergraph) -> int:
    """Independent oracle: top-down scan of all subsets for the largest
    homogeneous set. Only sensible for small n."""
    for size in range(h.n, 1, -1):
        want = comb(size, h.r)
        for s in combinations(range(h.n), size):
            c = h.edge_count(s)
            if c == 0 or c == want:
                return size
    return min(h.n, 1)
