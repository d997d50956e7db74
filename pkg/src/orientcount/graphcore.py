"""Small-graph oracles: orientation enumeration and chromatic polynomials.

Everything here is deliberately brute force. These routines exist to
cross-check the closed-form counters on desk-scale graphs, so they stay
simple: one bitmask per orientation, iterative in-degree peeling for
acyclicity, and memoized deletion-contraction for chromatic polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

# Guards against accidentally exponential jobs, not tunables.
MAX_ENUM_EDGES = 24
MAX_CHROMATIC_VERTICES = 16

__all__ = [
    "MAX_ENUM_EDGES",
    "MAX_CHROMATIC_VERTICES",
    "Graph",
    "Orientation",
    "ChromaticPolynomial",
    "complete_bipartite",
    "with_edge_added_in_block1",
    "with_edge_removed",
    "bipartite_blocks",
    "is_acyclic",
    "count_acyclic_bruteforce",
    "flippable_count_bruteforce",
    "chromatic_polynomial",
    "stanley_count",
    "path_graph",
    "cycle_graph",
    "complete_graph",
]


class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored sorted with each pair as (low, high), so edge index i
    is canonical and orientation bitmasks are reproducible.
    """

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.vertex_count = vertex_count
        self.edges = tuple(canon)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph({self.vertex_count}, {list(self.edges)})"


class Orientation:
    """One direction bit per edge of a graph.

    Bit i set means edge i points from its lower-labeled endpoint to its
    higher-labeled one.
    """

    __slots__ = ("graph", "bits")

    def __init__(self, graph: Graph, bits: int):
        if not 0 <= bits < (1 << len(graph.edges)):
            raise ValueError("direction bits out of range for this edge count")
        self.graph = graph
        self.bits = bits

    def __eq__(self, other):
        return (
            isinstance(other, Orientation)
            and self.graph == other.graph
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.graph, self.bits))

    def __repr__(self):
        return f"Orientation({self.graph!r}, {self.bits:#x})"


@dataclass(frozen=True)
class ChromaticPolynomial:
    """Exact chromatic polynomial; coefficients[i] is the coefficient of x^i."""

    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


# ---------------------------------------------------------------------------
# Graph builders


def complete_bipartite(n1: int, n2: int) -> Graph:
    """K_{n1,n2}: vertices 0..n1-1 are block A, n1..n1+n2-1 are block B."""
    if n1 < 0 or n2 < 0:
        raise ValueError("block sizes must be non-negative")
    edges = [(a, n1 + b) for a in range(n1) for b in range(n2)]
    return Graph(n1 + n2, edges)


def with_edge_added_in_block1(g: Graph, n1: int) -> Graph:
    """Add the edge {0,1} inside block A of a complete bipartite graph."""
    if n1 < 2:
        raise ValueError("need n1 >= 2 to join two block-1 vertices")
    if g.vertex_count < n1 or g != complete_bipartite(n1, g.vertex_count - n1):
        raise ValueError("graph is not complete bipartite with block-1 size n1")
    return Graph(g.vertex_count, g.edges + ((0, 1),))


def with_edge_removed(g: Graph) -> Graph:
    """Delete the edge {0, n1} from a complete bipartite graph.

    Symmetry of K_{n1,n2} makes the choice of edge irrelevant, so the first
    A-to-B edge is used.
    """
    if not g.edges:
        raise ValueError("graph has no edge to remove")
    n1, _ = bipartite_blocks(g)
    return Graph(g.vertex_count, [e for e in g.edges if e != (0, n1)])


def bipartite_blocks(g: Graph) -> tuple:
    """Recover (n1, n2) from a graph built by complete_bipartite.

    Needs at least one edge, otherwise the split is ambiguous.
    """
    if not g.edges:
        raise ValueError("cannot infer the bipartition of an edgeless graph")
    n1 = min(v for _, v in g.edges)
    n2 = g.vertex_count - n1
    if g != complete_bipartite(n1, n2):
        raise ValueError("graph is not a complete bipartite graph")
    return n1, n2


def path_graph(n: int) -> Graph:
    """Path on n vertices."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """K_n."""
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# Orientation enumeration


def is_acyclic(o: Orientation) -> bool:
    """True iff the directed graph induced by the direction bits has no
    directed cycle. Decided by repeatedly removing in-degree-0 vertices."""
    return _bits_acyclic(o.graph.vertex_count, o.graph.edges, o.bits)


def _bits_acyclic(n: int, edges, bits: int) -> bool:
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        if (bits >> i) & 1:
            out[u].append(v)
            indeg[v] += 1
        else:
            out[v].append(u)
            indeg[u] += 1
    stack = [w for w in range(n) if indeg[w] == 0]
    remaining = n
    while stack:
        w = stack.pop()
        remaining -= 1
        for t in out[w]:
            indeg[t] -= 1
            if indeg[t] == 0:
                stack.append(t)
    return remaining == 0


def _check_enum_cap(g: Graph) -> int:
    m = len(g.edges)
    if m > MAX_ENUM_EDGES:
        raise ValueError(
            f"{m} edges means 2^{m} orientations; enumeration is capped at "
            f"{MAX_ENUM_EDGES} edges"
        )
    return m


def count_acyclic_bruteforce(g: Graph) -> int:
    """Count acyclic orientations by testing every direction bitmask."""
    m = _check_enum_cap(g)
    n = g.vertex_count
    edges = g.edges
    acyclic = _bits_acyclic
    return sum(1 for bits in range(1 << m) if acyclic(n, edges, bits))


def flippable_count_bruteforce(g: Graph, edge_index: int) -> int:
    """Count acyclic orientations that stay acyclic when one edge flips."""
    m = _check_enum_cap(g)
    if not 0 <= edge_index < m:
        raise ValueError(f"edge index {edge_index} out of range")
    n = g.vertex_count
    edges = g.edges
    acyclic = _bits_acyclic
    flags = bytearray(1 << m)
    for bits in range(1 << m):
        if acyclic(n, edges, bits):
            flags[bits] = 1
    flip = 1 << edge_index
    return sum(1 for bits in range(1 << m) if flags[bits] and flags[bits ^ flip])


# ---------------------------------------------------------------------------
# Chromatic polynomial via deletion-contraction


def chromatic_polynomial(g: Graph) -> ChromaticPolynomial:
    """Exact chromatic polynomial by P(G) = P(G-e) - P(G/e).

    Contraction merges the two endpoints and collapses parallel edges to
    one; a loop would force P = 0, but loops cannot arise when contracting
    a simple graph with parallels collapsed. Intermediate graphs are
    memoized under a relabeling-canonicalized edge signature; dict lookup
    compares full keys, so hash collisions cannot cross-contaminate.
    """
    if g.vertex_count > MAX_CHROMATIC_VERTICES:
        raise ValueError(
            f"deletion-contraction is capped at {MAX_CHROMATIC_VERTICES} vertices"
        )
    memo = {}
    coeffs = _chrom(g.vertex_count, frozenset(g.edges), memo)
    return ChromaticPolynomial(coefficients=coeffs)


def _chrom(n: int, edges: frozenset, memo: dict) -> tuple:
    if not edges:
        return (0,) * n + (1,)  # x^n
    key = _canonical_signature(n, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached
    e = min(edges)
    deleted = _chrom(n, edges - {e}, memo)
    contracted = _chrom(n - 1, _contract(edges, e), memo)
    coeffs = tuple(
        a - b for a, b in zip(deleted, contracted + (0,) * (n + 1 - len(contracted)))
    )
    memo[key] = coeffs
    return coeffs


def _contract(edges: frozenset, e) -> frozenset:
    """Merge v into u for e = (u, v); vertices above v shift down by one.

    Parallel edges produced by the merge collapse because the result is a
    set of unordered pairs.
    """
    u, v = e
    out = set()
    for a, b in edges:
        if (a, b) == e:
            continue
        a2 = u if a == v else (a - 1 if a > v else a)
        b2 = u if b == v else (b - 1 if b > v else b)
        out.add((a2, b2) if a2 < b2 else (b2, a2))
    return frozenset(out)


def _canonical_signature(n: int, edges: frozenset) -> tuple:
    """Memo key: the edge set relabeled by a degree-refined vertex order.

    Equal signatures imply isomorphic graphs (the relabeling is a
    bijection), which is all memoization soundness needs; isomorphic graphs
    that happen to get different signatures just miss the cache.
    """
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    colors = tuple(len(adj[v]) for v in range(n))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        dense = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = tuple(dense[s] for s in sigs)
        if refined == colors:
            break
        colors = refined
    order = sorted(range(n), key=lambda v: (colors[v], v))
    relabel = {old: new for new, old in enumerate(order)}
    sig_edges = sorted(
        (relabel[u], relabel[v]) if relabel[u] < relabel[v] else (relabel[v], relabel[u])
        for u, v in edges
    )
    return n, tuple(sig_edges)


def stanley_count(g: Graph) -> int:
    """Number of acyclic orientations via (-1)^n P_G(-1)."""
    p = chromatic_polynomial(g)
    signed = p.evaluate(-1)
    if g.vertex_count % 2 == 1:
        signed = -signed
    if signed < 0:
        raise ArithmeticError(
            f"(-1)^n P(-1) = {signed} is negative; chromatic polynomial is broken"
        )
    return signed
