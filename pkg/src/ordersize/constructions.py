"""Lower-bound constructions and their empirical verifiers.

The pattern-colored construction: color the pairs of a transitive tournament
with C(r, 2) colors named c_{p,q} (1 <= p < q <= r); an increasing r-tuple is
an edge exactly when every pair sits on its pattern color. Random colorings
of this kind only admit small homogeneous sets, and their m-vertex subsets
never exceed g_r(m) edges; the scanner checks the counts empirically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .core import Hypergraph, PalettedColoring, Tournament, pair_rank
from .rng import SeededRNG
from .values import g_r

DEFAULT_MATERIALIZE_CAP = 10**8


def random_tournament(n: int, seed: int) -> Tournament:
    rng = SeededRNG(seed)
    return Tournament(n, [bool(rng.coin()) for _ in range(comb(n, 2))])


def cyclic_triangles(t: Tournament) -> Hypergraph:
    """3-graph whose edges are the cyclically oriented triples."""
    edges = []
    for a, b, c in combinations(range(t.n), 3):
        ab, bc, ca = t.beats(a, b), t.beats(b, c), t.beats(c, a)
        if ab == bc == ca:
            edges.append((a, b, c))
    return Hypergraph(3, t.n, edges)


def cyclic_triangle_3graph(n: int, seed: int) -> Hypergraph:
    """Cyclic triangles of a seeded uniform random tournament."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return cyclic_triangles(random_tournament(n, seed))


def cyclic_triangle_cap(m: int) -> int:
    """Largest possible cyclic-triangle count among m tournament vertices."""
    return m * (m * m - 1) // 24


# --- the pattern construction ---------------------------------------------------


def pattern_color_index(p: int, q: int, r: int) -> int:
    """Index of the pattern color c_{p,q} (1-based pair of [r])."""
    return pair_rank(p - 1, q - 1, r)


@dataclass
class GrInstance:
    """A pair coloring plus the r-graph of its pattern copies.

    ``graph`` is materialized only when the number of r-tuples is within the
    cap; otherwise membership stays implicit through ``is_edge``.
    """

    r: int
    n: int
    coloring: PalettedColoring
    seed: int | None = None
    graph: Hypergraph | None = field(default=None)

    def is_edge(self, tup: tuple[int, ...]) -> bool:
        """Membership readout straight from the pair colors."""
        ts = tuple(sorted(tup))
        if len(ts) != self.r:
            raise ValueError(f"need an {self.r}-tuple")
        for a, b in combinations(range(self.r), 2):
            if self.coloring.color(ts[a], ts[b]) != pattern_color_index(a + 1, b + 1, self.r):
                return False
        return True

    def count_in_subset(self, subset: tuple[int, ...]) -> int:
        """Edges inside a vertex subset, by color-pruned backtracking."""
        verts = sorted(subset)
        r = self.r
        color = self.coloring.color
        count = 0
        chosen: list[int] = []

        def extend(start: int) -> None:
            nonlocal count
            depth = len(chosen)
            if depth == r:
                count += 1
                return
            for idx in range(start, len(verts) - (r - depth) + 1):
                v = verts[idx]
                ok = True
                for a, prev in enumerate(chosen):
                    if color(prev, v) != pattern_color_index(a + 1, depth + 1, r):
                        ok = False
                        break
                if ok:
                    chosen.append(v)
                    extend(idx + 1)
                    chosen.pop()

        extend(0)
        return count


def build_gr(
    n: int, r: int, seed: int, materialize_cap: int = DEFAULT_MATERIALIZE_CAP
) -> GrInstance:
    """Uniform random pair coloring over C(r, 2) colors, with the pattern
    r-graph materialized when C(n, r) is within the cap."""
    if n < r:
        raise ValueError("n must be at least r")
    rng = SeededRNG(seed)
    palette = comb(r, 2)
    colors = [rng.randrange(palette) for _ in range(comb(n, 2))]
    coloring = PalettedColoring(n, palette, colors)
    inst = GrInstance(r, n, coloring, seed)
    if comb(n, r) <= materialize_cap:
        inst.graph = materialize(inst)
    return inst


def materialize(inst: GrInstance) -> Hypergraph:
    """Scan all increasing r-tuples by backtracking on the pattern colors."""
    edges = []
    r, n = inst.r, inst.n
    color = inst.coloring.color
    chosen: list[int] = []

    def extend(start: int) -> None:
        depth = len(chosen)
        if depth == r:
            edges.append(tuple(chosen))
            return
        for v in range(start, n - (r - depth) + 1):
            ok = True
            for a, prev in enumerate(chosen):
                if color(prev, v) != pattern_color_index(a + 1, depth + 1, r):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                extend(v + 1)
                chosen.pop()

    extend(0)
    return Hypergraph(r, n, edges)


@dataclass
class SubsetScanReport:
    r: int
    n: int
    m: int
    mode: str  # "exhaustive" | "sampled"
    samples: int
    seed: int | None
    histogram: dict[int, int]
    max_edges: int
    target: int
    violations: list[dict]
    advisory: bool = False  # uniformity below the guarantee; nothing asserted

    @property
    def ok(self) -> bool:
        return self.advisory or not self.violations

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "m": self.m,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "max": self.max_edges,
            "target": self.target,
            "violations": self.violations,
            "advisory": self.advisory,
        }


def check_fact_gr(
    inst: GrInstance,
    m: int,
    mode: str = "auto",
    samples: int = 100_000,
    seed: int = 0,
    exhaustive_cap: int = 10**6,
) -> SubsetScanReport:
    """Scan m-subsets for edge counts above g_r(m).

    The bound is a theorem for r >= 4; at r = 3 the scan runs but the report
    is flagged advisory and exceedances are informational. Exhaustive below
    the cap (or when forced), sampled otherwise; any count above the bound is
    recorded with its witness subset.
    """
    target = g_r(inst.r, m)
    total = comb(inst.n, m)
    advisory = inst.r < 4
    if mode == "auto":
        mode = "exhaustive" if total <= exhaustive_cap else "sampled"
    histogram: dict[int, int] = {}
    violations: list[dict] = []
    max_edges = 0

    def record(subset: tuple[int, ...]) -> None:
        nonlocal max_edges
        c = inst.count_in_subset(subset)
        histogram[c] = histogram.get(c, 0) + 1
        if c > max_edges:
            max_edges = c
        if c > target:
            violations.append({"subset": list(subset), "edges": c})

    if mode == "exhaustive":
        for subset in combinations(range(inst.n), m):
            record(subset)
        return SubsetScanReport(
            inst.r, inst.n, m, "exhaustive", total, None, histogram, max_edges,
            target, violations, advisory,
        )
    rng = SeededRNG(seed)
    for _ in range(samples):
        record(rng.sorted_sample(inst.n, m))
    return SubsetScanReport(
        inst.r, inst.n, m, "sampled", samples, seed, histogram, max_edges,
        target, violations, advisory,
    )


def scan_counterexample(
    inst: GrInstance, samples: int = 100_000, seed: int = 0, exhaustive_cap: int = 10**6
) -> SubsetScanReport:
    """Look for 2r vertices spanning exactly 2^r - 1 edges.

    For r >= 5 no such subset exists; a hit is recorded as a violation with
    its witness count, as is anything above 2^r = g_r(2r). Runs at r <= 4 are
    flagged advisory (the r = 4 case needs its own analysis, and r = 3
    genuinely reaches 7 edges on 6 vertices). Sampled runs prove nothing
    about absence and say so through the mode field.
    """
    r = inst.r
    m = 2 * r
    forbidden = 2**r - 1
    report = check_fact_gr(inst, m, mode="auto", samples=samples, seed=seed,
                           exhaustive_cap=exhaustive_cap)
    hits = report.histogram.get(forbidden, 0)
    violations = list(report.violations)
    if hits:
        violations.append({"count": forbidden, "subsets": hits})
    return SubsetScanReport(
        r, inst.n, m, report.mode, report.samples, report.seed,
        report.histogram, report.max_edges, report.target, violations,
        advisory=r < 5,
    )


def footnote_example_r3() -> GrInstance:
    """The explicit 6-vertex pattern coloring with seven induced edges.

    Vertices split as {0,1,2}, {3,4}, {5}: pairs across the first two blocks
    get c_{1,2}; first block to 5 gets c_{1,3}; second block to 5 gets
    c_{2,3}; pairs inside {0,1,2} get their own c_{i,j}. The one pair (3,4)
    is immaterial to the count and fixed to c_{1,2} for determinism.
    """
    n = 6
    c12 = pattern_color_index(1, 2, 3)
    c13 = pattern_color_index(1, 3, 3)
    c23 = pattern_color_index(2, 3, 3)
    colors = {}
    for i, j in combinations(range(3), 2):
        colors[(i, j)] = pattern_color_index(i + 1, j + 1, 3)
    for i in range(3):
        for j in (3, 4):
            colors[(i, j)] = c12
        colors[(i, 5)] = c13
    for j in (3, 4):
        colors[(j, 5)] = c23
    colors[(3, 4)] = c12
    coloring = PalettedColoring.from_map(n, 3, colors)
    inst = GrInstance(3, n, coloring, None)
    inst.graph = materialize(inst)
    return inst


def random_hypergraph(r: int, n: int, density_pct: int, seed: int) -> Hypergraph:
    """Each r-subset kept independently with probability density_pct / 100."""
    if not 0 <= density_pct <= 100:
        raise ValueError("density is a percentage")
    rng = SeededRNG(seed)
    edges = [e for e in combinations(range(n), r) if rng.chance(density_pct, 100)]
    return Hypergraph(r, n, edges)


def random_ordered_graph(n: int, density_pct: int, seed: int):
    from .core import OrderedGraph

    rng = SeededRNG(seed)
    edges = [p for p in combinations(range(n), 2) if rng.chance(density_pct, 100)]
    return OrderedGraph(n, edges)
