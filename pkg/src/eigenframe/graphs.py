"""Graph type, graph6 codec, and the graph families used throughout.

Vertices are 0..n-1 and adjacency is stored as one neighbour bitmask per
vertex. Graphs are immutable; every operation returns a new Graph. Edges may
optionally carry tensegrity labels (bar, cable, strut); an unlabeled graph is
read as all-struts wherever labels matter.

Canonical vertex orders are part of the contract: r-subsets are listed in
colex order, r-subspaces in lex order of their reduced-echelon basis
matrices, and Cayley graphs on Z_2^n use the integer encoding of the group
elements.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import Graph6Error, InternalCheckError, ResourceLimitError, UnsupportedInputError
from .modular import gaussian_binomial, gf2_span, rank_mod_q, rref_mod_q, subspaces_mod_q

BAR = "bar"
CABLE = "cable"
STRUT = "strut"
_LABELS = (BAR, CABLE, STRUT)

VERTEX_CAP = 10**6


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    nbr: tuple  # bitmask of neighbours per vertex
    edge_labels: dict | None = field(default=None)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.nbr) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for i, mask in enumerate(self.nbr):
            if mask >> self.n:
                raise ValueError(f"neighbour mask of vertex {i} leaves the vertex range")
            if mask >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.nbr[i] >> j & 1) != (self.nbr[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        if self.edge_labels is not None:
            edges = set(self.edges())
            if set(self.edge_labels) != edges:
                raise ValueError("edge labels must cover exactly the edge set")
            for e, lab in self.edge_labels.items():
                if lab not in _LABELS:
                    raise ValueError(f"unknown edge label {lab!r} at {e}")

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.nbr == other.nbr
            and self.edge_labels == other.edge_labels
        )

    def __hash__(self):
        labels = None if self.edge_labels is None else tuple(sorted(self.edge_labels.items()))
        return hash((self.n, self.nbr, labels))

    def edges(self):
        out = []
        for i in range(self.n):
            m = self.nbr[i] >> (i + 1) << (i + 1)
            while m:
                j = (m & -m).bit_length() - 1
                out.append((i, j))
                m &= m - 1
        return out

    def num_edges(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    def has_edge(self, i, j) -> bool:
        return bool(self.nbr[i] >> j & 1)

    def degree(self, i) -> int:
        return self.nbr[i].bit_count()

    def neighbours(self, i):
        m = self.nbr[i]
        while m:
            j = (m & -m).bit_length() - 1
            yield j
            m &= m - 1

    def label_of(self, i, j) -> str:
        if not self.has_edge(i, j):
            raise ValueError(f"({i}, {j}) is not an edge")
        if self.edge_labels is None:
            return STRUT
        return self.edge_labels[(min(i, j), max(i, j))]

    def has_cables(self) -> bool:
        return self.edge_labels is not None and CABLE in self.edge_labels.values()

    def adjacency_rows(self):
        return [[self.nbr[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                nxt |= self.nbr[v]
                m &= m - 1
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def relabel(self, perm):
        """Image under the vertex permutation i -> perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertices")
        nbr = [0] * self.n
        for i in range(self.n):
            m = self.nbr[i]
            while m:
                j = (m & -m).bit_length() - 1
                nbr[perm[i]] |= 1 << perm[j]
                m &= m - 1
        labels = None
        if self.edge_labels is not None:
            labels = {
                (min(perm[i], perm[j]), max(perm[i], perm[j])): lab
                for (i, j), lab in self.edge_labels.items()
            }
        return Graph(self.n, tuple(nbr), labels)

    def with_labels(self, labels):
        return Graph(self.n, self.nbr, dict(labels))


def from_edges(n, edges, labels=None) -> Graph:
    nbr = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) outside vertex range")
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    if labels is not None:
        labels = {(min(i, j), max(i, j)): lab for (i, j), lab in labels.items()}
    return Graph(n, tuple(nbr), labels)


@dataclass(frozen=True)
class CayleySpec:
    """Connection set for a Cayley graph on Z_2^n, elements as bit vectors."""

    n: int
    connection_set: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("group rank must be at least 1")
        object.__setattr__(self, "connection_set", frozenset(self.connection_set))
        for c in self.connection_set:
            if not 0 < c < (1 << self.n):
                raise ValueError(f"connection element {c} outside Z_2^{self.n} minus zero")

    def spans(self) -> bool:
        return len(gf2_span(self.connection_set)) == (1 << self.n)


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_read_n(data, pos):
    if pos >= len(data):
        raise Graph6Error("missing vertex count", pos)
    b = data[pos]
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte {b} outside graph6 range", pos)
    if b < 126:
        return b - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk, start = data[pos + 2 : pos + 8], pos + 2
        width = 6
    else:
        chunk, start = data[pos + 1 : pos + 4], pos + 1
        width = 3
    if len(chunk) < width:
        raise Graph6Error("truncated extended vertex count", len(data))
    n = 0
    for k, byte in enumerate(chunk):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range", start + k)
        n = n << 6 | (byte - 63)
    return n, start + width


def parse_graph6(s) -> Graph:
    """Decode one graph6 string (optionally prefixed by the standard header)."""
    if isinstance(s, bytes):
        data = s
    else:
        data = s.encode("ascii", errors="replace")
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(_G6_HEADER.encode()):
        pos = len(_G6_HEADER)
    n, pos = _g6_read_n(data, pos)
    if n > VERTEX_CAP:
        raise ResourceLimitError(f"graph6 declares {n} vertices, cap is {VERTEX_CAP}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(data) - pos}", pos
        )
    bits = []
    for k in range(nbytes):
        byte = data[pos + k]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range", pos + k)
        group = byte - 63
        bits.extend(group >> t & 1 for t in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    nbr = [0] * n
    it = iter(bits)
    # bits run through columns j = 1..n-1, rows i = 0..j-1
    for j in range(1, n):
        for i in range(j):
            if next(it):
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    return Graph(n, tuple(nbr))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a header-less graph6 string."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        out = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    group, filled = 0, 0
    for j in range(1, n):
        for i in range(j):
            group = group << 1 | (g.nbr[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group, filled = 0, 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


# -- generators --------------------------------------------------------------


def cycle(n) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    if n > VERTEX_CAP:
        raise ResourceLimitError(f"{n} vertices exceeds the cap of {VERTEX_CAP}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _colex_subsets(n, r):
    return sorted(itertools.combinations(range(n), r), key=lambda s: tuple(reversed(s)))


def kneser(n, r) -> Graph:
    """Kneser graph: r-subsets of an n-set, adjacent when disjoint.

    Vertices come in colex order of the subsets.
    """
    if r < 1 or n < r:
        raise ValueError("need 1 <= r <= n")
    if math.comb(n, r) > VERTEX_CAP:
        raise ResourceLimitError(f"{math.comb(n, r)} vertices exceeds the cap of {VERTEX_CAP}")
    verts = [frozenset(s) for s in _colex_subsets(n, r)]
    edges = [
        (a, b)
        for a in range(len(verts))
        for b in range(a + 1, len(verts))
        if not (verts[a] & verts[b])
    ]
    return from_edges(len(verts), edges)


def kneser_vertices(n, r):
    """The colex-ordered subset labels matching kneser(n, r)'s vertex ids."""
    return _colex_subsets(n, r)


def _is_prime(q):
    if q < 2:
        return False
    for d in range(2, int(q**0.5) + 1):
        if q % d == 0:
            return False
    return True


def q_kneser(q, n, r) -> Graph:
    """q-Kneser graph: r-subspaces of F_q^n, adjacent on trivial intersection.

    Vertices are sorted lex by their reduced-echelon basis matrices.
    """
    if not _is_prime(q):
        raise UnsupportedInputError(f"q must be prime, got {q}")
    if r < 1 or n < r:
        raise ValueError("need 1 <= r <= n")
    count = gaussian_binomial(n, r, q)
    if count > VERTEX_CAP:
        raise ResourceLimitError(f"{count} vertices exceeds the cap of {VERTEX_CAP}")
    verts = sorted(subspaces_mod_q(q, n, r))
    edges = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            stacked = list(verts[a]) + list(verts[b])
            if rank_mod_q(stacked, q) == 2 * r:
                edges.append((a, b))
    return from_edges(len(verts), edges)


def q_kneser_vertices(q, n, r):
    """The lex-ordered RREF basis matrices matching q_kneser(q, n, r)."""
    return sorted(subspaces_mod_q(q, n, r))


def cayley_z2(spec: CayleySpec) -> Graph:
    """Cayley graph of Z_2^n with the given connection set."""
    if spec.n > 19:
        raise ResourceLimitError(f"2^{spec.n} vertices exceeds the cap of {VERTEX_CAP}")
    n_verts = 1 << spec.n
    nbr = [0] * n_verts
    for v in range(n_verts):
        for c in spec.connection_set:
            nbr[v] |= 1 << (v ^ c)
    return Graph(n_verts, tuple(nbr))


# -- operations --------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~m & ~(1 << i)) for i, m in enumerate(g.nbr)))


def induced_subgraph(g: Graph, keep) -> Graph:
    keep = sorted(keep)
    index = {v: i for i, v in enumerate(keep)}
    nbr = [0] * len(keep)
    for v in keep:
        m = g.nbr[v]
        while m:
            w = (m & -m).bit_length() - 1
            if w in index:
                nbr[index[v]] |= 1 << index[w]
            m &= m - 1
    return Graph(len(keep), tuple(nbr))


def induced_delete_closed_nbhd(g: Graph, v) -> Graph:
    """Induced subgraph on the vertices outside the closed neighbourhood of v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    closed = g.nbr[v] | (1 << v)
    return induced_subgraph(g, [w for w in range(g.n) if not closed >> w & 1])


def is_split(g: Graph):
    """Degree-sequence split test.

    Returns (True, (clique, independent_set)) or (False, None). The witness
    partition is verified before being returned.
    """
    order = sorted(range(g.n), key=g.degree, reverse=True)
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, g.n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    if lhs != rhs:
        return False, None
    clique, indep = order[:m], order[m:]
    for a, b in itertools.combinations(clique, 2):
        if not g.has_edge(a, b):
            raise InternalCheckError("split witness clique is not a clique")
    for a, b in itertools.combinations(indep, 2):
        if g.has_edge(a, b):
            raise InternalCheckError("split witness independent set has an edge")
    return True, (clique, indep)


def maximal_cliques(g: Graph):
    """All maximal cliques as vertex lists (Bron-Kerbosch with pivoting)."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append([v for v in range(g.n) if r >> v & 1])
            return
        pivot_pool = p | x
        pivot = max(
            (v for v in range(g.n) if pivot_pool >> v & 1),
            key=lambda v: (p & g.nbr[v]).bit_count(),
        )
        cand = p & ~g.nbr[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            expand(r | bit, p & g.nbr[v], x & g.nbr[v])
            p &= ~bit
            x |= bit
            cand &= cand - 1

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return out
