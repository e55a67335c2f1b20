"""Core value types: uniform hypergraphs, ordered graphs, colorings, densities.

Everything here is immutable after construction and safe to share across
threads. Counts use Python's arbitrary-precision integers; densities are exact
``fractions.Fraction`` values. Edge membership and induced counts run on
per-edge bitmasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ShapeError

Edge = tuple[int, ...]


def vertex_set(indices: Iterable[int], n: int) -> tuple[int, ...]:
    """Normalize to a strictly increasing tuple, bounds-checked against n."""
    s = tuple(sorted(set(int(i) for i in indices)))
    if s and (s[0] < 0 or s[-1] >= n):
        raise ValueError(f"vertex set {s} out of range [0, {n})")
    return s


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def pair_rank(i: int, j: int, n: int) -> int:
    """Rank of the pair (i, j), i < j, in lexicographic order over [0, n)."""
    if not 0 <= i < j < n:
        raise ValueError(f"bad pair ({i}, {j}) for n={n}")
    return comb(n, 2) - comb(n - i, 2) + (j - i - 1)


@dataclass(frozen=True)
class Hypergraph:
    """r-uniform hypergraph on vertices 0..n-1.

    Edges are canonical strictly increasing r-tuples. Doubles as a {0,1}
    coloring of the complete r-graph (edge present = color 1).
    """

    r: int
    n: int
    edges: frozenset[Edge]

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()):
        if r < 2:
            raise ValueError("uniformity r must be >= 2")
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for e in edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"edge {t} is not a set of {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {t} out of range [0, {n})")
            canon.add(t)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def _edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in sorted(self.edges))

    @cached_property
    def _sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edges

    def complement(self) -> "Hypergraph":
        """Edge present in the output iff absent in the input."""
        all_edges = combinations(range(self.n), self.r)
        return Hypergraph(self.r, self.n, (e for e in all_edges if e not in self.edges))

    def induced(self, subset: Iterable[int]) -> "Hypergraph":
        """Subgraph on ``subset``, relabeled by the order-preserving map."""
        s = vertex_set(subset, self.n)
        relabel = {v: i for i, v in enumerate(s)}
        smask = mask_of(s)
        kept = [
            tuple(relabel[v] for v in e)
            for e, m in zip(self._sorted_edges, self._edge_masks)
            if m & ~smask == 0
        ]
        return Hypergraph(self.r, len(s), kept)

    def edge_count(self, subset: Iterable[int]) -> int:
        """Number of edges contained in ``subset``."""
        smask = mask_of(vertex_set(subset, self.n))
        return sum(1 for m in self._edge_masks if m & ~smask == 0)

    def edge_count_mask(self, smask: int) -> int:
        return sum(1 for m in self._edge_masks if m & ~smask == 0)

    def is_clique(self, subset: Iterable[int]) -> bool:
        s = vertex_set(subset, self.n)
        return self.edge_count(s) == comb(len(s), self.r)

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self.edge_count(subset) == 0

    def to_json_obj(self) -> dict:
        return {"r": self.r, "n": self.n, "edges": [list(e) for e in self._sorted_edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Hypergraph":
        return cls(int(obj["r"]), int(obj["n"]), obj["edges"])


def complete_hypergraph(r: int, n: int) -> Hypergraph:
    return Hypergraph(r, n, combinations(range(n), r))


def empty_hypergraph(r: int, n: int) -> Hypergraph:
    return Hypergraph(r, n, ())


@dataclass(frozen=True)
class OrderedGraph:
    """Graph on vertices 0 < 1 < ... < n-1; the order is part of the object."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        canon = set()
        for e in edges:
            a, b = sorted(int(v) for v in e)
            if a == b:
                raise ValueError("self-loops are not allowed")
            if a < 0 or b >= n:
                raise ValueError(f"edge ({a}, {b}) out of range [0, {n})")
            canon.add((a, b))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmask per vertex."""
        rows = [0] * self.n
        for a, b in self.edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return tuple(rows)

    def has_edge(self, a: int, b: int) -> bool:
        if a == b:
            return False
        return (min(a, b), max(a, b)) in self.edges

    def complement(self) -> "OrderedGraph":
        return OrderedGraph(
            self.n,
            (p for p in combinations(range(self.n), 2) if p not in self.edges),
        )

    def induced(self, subset: Iterable[int]) -> "OrderedGraph":
        s = vertex_set(subset, self.n)
        relabel = {v: i for i, v in enumerate(s)}
        kept = [
            (relabel[a], relabel[b])
            for a, b in self.edges
            if a in relabel and b in relabel
        ]
        return OrderedGraph(len(s), kept)

    def forward_non_neighbors(self, v: int, within: int | None = None) -> int:
        """Bitmask of u > v with uv not an edge, optionally restricted."""
        scope = ((1 << self.n) - 1) if within is None else within
        above = scope & ~((1 << (v + 1)) - 1)
        return above & ~self.adj[v]

    def backward_non_neighbors(self, v: int, within: int | None = None) -> int:
        scope = ((1 << self.n) - 1) if within is None else within
        below = scope & ((1 << v) - 1)
        return below & ~self.adj[v]

    def is_clique(self, subset: Iterable[int]) -> bool:
        s = vertex_set(subset, self.n)
        return all(self.has_edge(a, b) for a, b in combinations(s, 2))

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = vertex_set(subset, self.n)
        return all(not self.has_edge(a, b) for a, b in combinations(s, 2))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": sorted([list(e) for e in self.edges])}


@dataclass(frozen=True)
class PalettedColoring:
    """Total coloring of the pairs of [0, n) with a fixed palette size."""

    n: int
    palette: int
    colors: tuple[int, ...]

    def __init__(self, n: int, palette: int, colors: Sequence[int]):
        if len(colors) != comb(n, 2):
            raise ValueError(f"need {comb(n, 2)} pair colors, got {len(colors)}")
        cc = tuple(int(c) for c in colors)
        if any(c < 0 or c >= palette for c in cc):
            raise ValueError("palette index out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "palette", palette)
        object.__setattr__(self, "colors", cc)

    def color(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.colors[pair_rank(i, j, self.n)]

    @classmethod
    def from_map(cls, n: int, palette: int, mapping) -> "PalettedColoring":
        """Build from a callable or dict over pairs (i < j)."""
        get = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        colors = [get((i, j)) if isinstance(mapping, dict) else get(i, j)
                  for i, j in combinations(range(n), 2)]
        return cls(n, palette, colors)


@dataclass(frozen=True)
class Tournament:
    """Orientation of the complete graph on [0, n)."""

    n: int
    forward: tuple[bool, ...]  # per pair rank: True iff i -> j for i < j

    def __init__(self, n: int, forward: Sequence[bool]):
        if len(forward) != comb(n, 2):
            raise ValueError(f"need {comb(n, 2)} orientations, got {len(forward)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "forward", tuple(bool(b) for b in forward))

    def beats(self, a: int, b: int) -> bool:
        """True iff the arc goes a -> b."""
        if a == b:
            raise ValueError("no self-arcs")
        if a < b:
            return self.forward[pair_rank(a, b, self.n)]
        return not self.forward[pair_rank(b, a, self.n)]

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        return cls(n, [True] * comb(n, 2))


# --- densities -------------------------------------------------------------


def density(h: Hypergraph, x: Iterable[int], y: Iterable[int], z: Iterable[int]) -> Fraction:
    """Exact edge density among three vertex sets of a 3-graph.

    Supported shapes (in any argument order): three pairwise disjoint sets,
    two equal sets disjoint from the third, or three equal sets. Partially
    overlapping sets and empty denominators are rejected.
    """
    if h.r != 3:
        raise ShapeError("density is defined for 3-uniform hypergraphs")
    xs = vertex_set(x, h.n)
    ys = vertex_set(y, h.n)
    zs = vertex_set(z, h.n)
    sets = [xs, ys, zs]

    if xs == ys == zs:
        denom = comb(len(xs), 3)
        if denom == 0:
            raise ShapeError("density denominator is empty (|X| < 3)")
        return Fraction(h.edge_count(xs), denom)

    # Two equal, one different: normalize so the doubled set comes first.
    for a in range(3):
        for b in range(a + 1, 3):
            if sets[a] == sets[b]:
                dbl = sets[a]
                single = sets[3 - a - b]
                if set(dbl) & set(single):
                    raise ShapeError("equal pair must be disjoint from the third set")
                denom = comb(len(dbl), 2) * len(single)
                if denom == 0:
                    raise ShapeError("density denominator is empty")
                dm, sm = mask_of(dbl), mask_of(single)
                count = 0
                for em in h._edge_masks:
                    if (em & dm).bit_count() == 2 and (em & sm).bit_count() == 1:
                        count += 1
                return Fraction(count, denom)

    union = set(xs) | set(ys) | set(zs)
    if len(union) != len(xs) + len(ys) + len(zs):
        raise ShapeError("sets overlap partially; unsupported shape")
    denom = len(xs) * len(ys) * len(zs)
    if denom == 0:
        raise ShapeError("density denominator is empty")
    xm, ym, zm = mask_of(xs), mask_of(ys), mask_of(zs)
    count = 0
    for em in h._edge_masks:
        if (em & xm) and (em & ym) and (em & zm):
            count += 1
    return Fraction(count, denom)


# --- file formats ----------------------------------------------------------


def write_hg_text(h: Hypergraph) -> str:
    """Canonical .hg text: header line 'r n', then lexicographic edge lines."""
    lines = [f"{h.r} {h.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in h._sorted_edges)
    return "\n".join(lines) + "\n"


def read_hg_text(text: str) -> Hypergraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty .hg input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}, expected 'r n'")
    r, n = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        vs = [int(t) for t in ln.split()]
        if len(vs) != r:
            raise ValueError(f"edge line {ln!r} does not have {r} entries")
        if any(vs[i] >= vs[i + 1] for i in range(len(vs) - 1)):
            raise ValueError(f"edge line {ln!r} is not strictly increasing")
        edges.append(tuple(vs))
    return Hypergraph(r, n, edges)


def save_hypergraph(h: Hypergraph, path: str) -> None:
    with open(path, "w") as f:
        if path.endswith(".json"):
            json.dump(h.to_json_obj(), f, indent=2, sort_keys=True)
            f.write("\n")
        else:
            f.write(write_hg_text(h))


def load_hypergraph(path: str) -> Hypergraph:
    with open(path) as f:
        text = f.read()
    if path.endswith(".json"):
        return Hypergraph.from_json_obj(json.loads(text))
    return read_hg_text(text)


# --- combination ranking (used by the parallel spectrum scan) ---------------


def unrank_combination(rank: int, n: int, k: int) -> tuple[int, ...]:
    """The rank-th k-combination of [0, n) in lexicographic order."""
    if not 0 <= rank < comb(n, k):
        raise ValueError("rank out of range")
    out = []
    x = 0
    for slot in range(k, 0, -1):
        while True:
            block = comb(n - x - 1, slot - 1)
            if rank < block:
                out.append(x)
                x += 1
                break
            rank -= block
            x += 1
    return tuple(out)


def iter_combinations_from(rank: int, count: int, n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield ``count`` consecutive lexicographic k-combinations starting at rank."""
    if count <= 0:
        return
    cur = list(unrank_combination(rank, n, k))
    yield tuple(cur)
    for _ in range(count - 1):
        # lexicographic successor
        i = k - 1
        while i >= 0 and cur[i] == n - k + i:
            i -= 1
        if i < 0:
            return
        cur[i] += 1
        for j in range(i + 1, k):
            cur[j] = cur[j - 1] + 1
        yield tuple(cur)
