"""Ordered multigraphs with self-loops, minors, and graph surgery.

Edges are stored as a tuple of vertex pairs (u, v) with u <= v; the position
of an edge in the tuple is its Schwinger index (1-based), which names the
polynomial variable attached to it.  Vertices are labelled 1..vertex_count.

Contracting a self-loop yields the distinguished ZERO graph, on which every
polynomial construction downstream is the zero polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple
    is_zero: bool = False

    def __post_init__(self):
        if self.is_zero:
            return
        norm = tuple((u, v) if u <= v else (v, u) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        for u, v in norm:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u},{v}) outside 1..{self.vertex_count}")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Vertex degree; a self-loop contributes 2."""
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def edges_at(self, v: int) -> list:
        """1-based indices of edges incident to v."""
        return [i + 1 for i, (a, b) in enumerate(self.edges) if a == v or b == v]

    def other_end(self, edge_index: int, v: int) -> int:
        a, b = self.edges[edge_index - 1]
        assert v in (a, b)
        return b if v == a else a

    def __repr__(self):
        if self.is_zero:
            return "Graph(ZERO)"
        return f"Graph(V={self.vertex_count}, E={list(self.edges)})"


ZERO = Graph(0, (), is_zero=True)


def from_edges(edges, vertex_count=None) -> Graph:
    edges = tuple(tuple(e) for e in edges)
    if vertex_count is None:
        vertex_count = max((max(e) for e in edges), default=0)
    return Graph(vertex_count, edges)


# -- connectivity -------------------------------------------------------------


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra  # lower label wins
        return True


def component_count(g: Graph) -> int:
    assert not g.is_zero
    if g.vertex_count == 0:
        return 0
    dsu = _DSU(g.vertex_count)
    for u, v in g.edges:
        dsu.union(u, v)
    return len({dsu.find(v) for v in range(1, g.vertex_count + 1)})


def is_connected(g: Graph) -> bool:
    return not g.is_zero and component_count(g) <= 1


def loop_number(g: Graph) -> int:
    """First Betti number N - V + #components."""
    if g.is_zero:
        raise ValueError("zero graph")
    return g.n_edges - g.vertex_count + component_count(g)


# -- minors -------------------------------------------------------------------


def minor(g: Graph, delete=(), contract=()):
    """Delete and contract edges by 1-based index.

    Contraction identifies endpoints, the lower vertex label winning; labels
    are compacted at the end.  Contracting a self-loop (also one created by
    earlier contractions, processed in increasing index order) gives ZERO.
    Returns (graph, edge_map) where edge_map sends old indices to new ones
    (None for removed edges).
    """
    if g.is_zero:
        raise ValueError("zero graph")
    delete = frozenset(delete)
    contract = frozenset(contract)
    if delete & contract:
        raise ValueError("delete and contract overlap")
    for i in delete | contract:
        if not (1 <= i <= g.n_edges):
            raise ValueError(f"edge index {i} out of range")
    dsu = _DSU(g.vertex_count)
    for i in sorted(contract):
        u, v = g.edges[i - 1]
        if dsu.find(u) == dsu.find(v):
            return ZERO, {j: None for j in range(1, g.n_edges + 1)}
        dsu.union(u, v)
    roots = sorted({dsu.find(v) for v in range(1, g.vertex_count + 1)})
    relabel = {r: k + 1 for k, r in enumerate(roots)}
    new_edges = []
    edge_map = {}
    for i, (u, v) in enumerate(g.edges, start=1):
        if i in delete or i in contract:
            edge_map[i] = None
            continue
        edge_map[i] = len(new_edges) + 1
        new_edges.append((relabel[dsu.find(u)], relabel[dsu.find(v)]))
    return Graph(len(roots), tuple(new_edges)), edge_map


def delete_edges(g: Graph, indices) -> Graph:
    return minor(g, delete=indices)[0]


def contract_edges(g: Graph, indices) -> Graph:
    return minor(g, contract=indices)[0]


# -- spanning trees (enumeration; the oracle side of the matrix-tree pair) ----


def spanning_trees(g: Graph) -> int:
    """Count spanning trees by explicit enumeration of edge subsets."""
    assert is_connected(g)
    n = g.n_edges
    k = g.vertex_count - 1
    count = 0
    for subset in itertools.combinations(range(n), k):
        dsu = _DSU(g.vertex_count)
        ok = True
        for i in subset:
            u, v = g.edges[i]
            if not dsu.union(u, v):
                ok = False
                break
        if ok:
            count += 1
    return count


def spanning_tree_sets(g: Graph):
    """Yield spanning trees as frozensets of 1-based edge indices."""
    assert is_connected(g)
    n = g.n_edges
    k = g.vertex_count - 1
    for subset in itertools.combinations(range(n), k):
        dsu = _DSU(g.vertex_count)
        ok = True
        for i in subset:
            u, v = g.edges[i]
            if not dsu.union(u, v):
                ok = False
                break
        if ok:
            yield frozenset(i + 1 for i in subset)


# -- divergence ---------------------------------------------------------------


def is_primitive_divergent(g: Graph) -> bool:
    """N = 2h with every strict subgraph strictly convergent.

    A subgraph is a nonempty proper subset of edges taken with the vertices
    it meets.  Checked by exhaustive subset scan; refuses N > 20.
    """
    assert is_connected(g) and not g.is_zero
    n = g.n_edges
    if n > 20:
        raise ValueError("subgraph scan too large")
    if n != 2 * loop_number(g):
        return False
    edges = g.edges
    for mask in range(1, (1 << n) - 1):
        sub = [edges[i] for i in range(n) if mask >> i & 1]
        verts = {x for e in sub for x in e}
        dsu = _DSU(g.vertex_count)
        comps = len(verts)
        for u, v in sub:
            if dsu.union(u, v):
                comps -= 1
        h = len(sub) - len(verts) + comps
        if len(sub) <= 2 * h:
            return False
    return True


# -- vertex width --------------------------------------------------------------


def ordering_frontiers(g: Graph, ordering) -> list:
    """Frontier sizes |vertices(G_i) ∩ vertices(G \\ G_i)| for i = 1..N-1."""
    n = g.n_edges
    assert sorted(ordering) == list(range(1, n + 1))
    seen: set = set()
    sizes = []
    remaining = [0] * (g.vertex_count + 1)
    for u, v in g.edges:
        remaining[u] += 1
        remaining[v] += 1
    for pos, idx in enumerate(ordering):
        u, v = g.edges[idx - 1]
        for x in {u, v}:
            remaining[x] -= 2 if u == v else 1
        seen.update((u, v))
        if pos == n - 1:
            break
        sizes.append(sum(1 for x in seen if remaining[x] > 0))
    return sizes


def vertex_width(g: Graph, bound: int):
    """An edge ordering with every frontier <= bound, or None.

    Exact branch-and-bound over edge prefixes, states keyed by the chosen
    edge subset so permutations of a prefix are explored once.
    """
    assert is_connected(g)
    n = g.n_edges
    if n > 20:
        raise ValueError("vertex width search too large")
    vmask = [0] * (g.vertex_count + 1)
    for i, (u, v) in enumerate(g.edges):
        vmask[u] |= 1 << i
        vmask[v] |= 1 << i
    full = (1 << n) - 1
    masks = vmask[1:]

    def frontier_size(s: int) -> int:
        t = full & ~s
        return sum(1 for m in masks if (m & s) and (m & t))

    dead: set = set()
    order: list = []

    def extend(s: int) -> bool:
        if s == full:
            return True
        if s in dead:
            return False
        cands = []
        for i in range(n):
            if s >> i & 1:
                continue
            s2 = s | 1 << i
            f = frontier_size(s2)
            if f <= bound:
                cands.append((f, i))
        cands.sort()
        for _, i in cands:
            order.append(i + 1)
            if extend(s | 1 << i):
                return True
            order.pop()
        dead.add(s)
        return False

    if extend(0):
        return tuple(order)
    return None


# -- double triangle reduction --------------------------------------------------


def find_double_triangle(g: Graph, edge_indices):
    """Match the 7-edge double-triangle configuration.

    Returns (x, y, A, B, C, D) vertex labels where x, y are the interior
    vertices of the shared edge, B and C the two triangle apexes, and A, D
    the outer attachment ends.  Raises ValueError naming the failed check.
    """
    idx = tuple(edge_indices)
    if len(idx) != 7 or len(set(idx)) != 7:
        raise ValueError("need 7 distinct edge indices")
    for i in idx:
        if not (1 <= i <= g.n_edges):
            raise ValueError(f"edge index {i} out of range")
    edges = {i: g.edges[i - 1] for i in idx}
    if any(u == v for u, v in edges.values()):
        raise ValueError("configuration contains a self-loop")

    for m in idx:
        x, y = edges[m]
        rest = [i for i in idx if i != m]
        # apexes: vertices joined to both x and y by edges of the configuration
        to_x = {}
        to_y = {}
        for i in rest:
            u, v = edges[i]
            if x in (u, v):
                to_x.setdefault(u + v - x, []).append(i)
            if y in (u, v):
                to_y.setdefault(u + v - y, []).append(i)
        apexes = [w for w in to_x if w in to_y and w not in (x, y)]
        for b, c in itertools.permutations(apexes, 2):
            if b >= c:
                continue
            tri = {to_x[b][0], to_y[b][0], to_x[c][0], to_y[c][0]}
            if len(tri) != 4:
                continue
            outer = [i for i in rest if i not in tri]
            if len(outer) != 2:
                continue
            ends = []
            for i in outer:
                u, v = edges[i]
                if u in (x, y):
                    ends.append((u, v))
                elif v in (x, y):
                    ends.append((v, u))
                else:
                    ends = None
                    break
            if not ends:
                continue
            (p1, a), (p2, d) = ends
            if {p1, p2} != {x, y}:
                continue
            if p1 == y:
                (p1, a), (p2, d) = (p2, d), (p1, a)
            if len({a, d, b, c, x, y}) != 6:
                continue
            # interior vertices must have no edges outside the configuration
            if set(g.edges_at(x)) - set(idx) or set(g.edges_at(y)) - set(idx):
                continue
            if g.degree(x) != 4 or g.degree(y) != 4:
                continue
            return x, y, a, b, c, d
    raise ValueError("edges do not form a double-triangle configuration")


def double_triangle_reduce(g: Graph, edge_indices) -> Graph:
    """Replace the 7-edge double triangle by the 5-edge reduced form.

    The two interior vertices collapse to one new vertex z adjacent to the
    attachment vertices A, B, C, D, and the apexes B, C become adjacent.
    Surviving edges keep their relative order; the 5 new edges are appended
    as (A,z), (B,z), (C,z), (D,z), (B,C).
    """
    x, y, a, b, c, d = find_double_triangle(g, edge_indices)
    drop = set(edge_indices)
    kept = [e for i, e in enumerate(g.edges, start=1) if i not in drop]
    old_labels = [v for v in range(1, g.vertex_count + 1) if v not in (x, y)]
    relabel = {v: k + 1 for k, v in enumerate(old_labels)}
    z = len(old_labels) + 1
    new_edges = [(relabel[u], relabel[v]) for u, v in kept]
    new_edges += [(relabel[a], z), (relabel[b], z), (relabel[c], z),
                  (relabel[d], z), (relabel[b], relabel[c])]
    return Graph(z, tuple(new_edges))


# -- completion ------------------------------------------------------------------


def completion(g: Graph) -> Graph:
    """4-regular completion: join a new vertex to the four 3-valent vertices."""
    assert is_connected(g)
    three = [v for v in range(1, g.vertex_count + 1) if g.degree(v) == 3]
    four = [v for v in range(1, g.vertex_count + 1) if g.degree(v) == 4]
    if len(three) != 4 or len(three) + len(four) != g.vertex_count:
        raise ValueError(
            f"degree census {sorted(g.degree(v) for v in range(1, g.vertex_count + 1))} "
            "does not match four 3-valent vertices with the rest 4-valent")
    w = g.vertex_count + 1
    return Graph(w, g.edges + tuple((v, w) for v in three))


# -- graph files -------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Text format: '#' comments, optional 'V <count>', one 'u v' per line."""
    vertex_count = None
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0].upper() == "V":
            vertex_count = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(edges, vertex_count)


def graph_to_text(g: Graph) -> str:
    lines = [f"V {g.vertex_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# -- built-in families ----------------------------------------------------------------


def wheel(n: int) -> Graph:
    """Wheel with n spokes; hub is vertex n+1.

    The edge order alternates rim and spoke so that every prefix has at
    most three frontier vertices (the class algorithms rely on this).
    """
    assert n >= 1
    hub = n + 1
    if n == 1:
        return Graph(2, ((1, 2), (1, 1)))
    if n == 2:
        return Graph(3, ((1, 2), (2, 3), (1, 2), (1, 3)))
    edges = [(1, 2)]
    for k in range(2, n):
        edges.append((k, hub))
        edges.append((k, k + 1))
    edges += [(n, hub), (n, 1), (1, hub)]
    return Graph(hub, tuple(edges))


def zigzag(n: int) -> Graph:
    """Zig-zag graph with n loops on vertices 1..n+1.

    Built as a closed chain of triangles: path edges (k, k+1), chords
    (k, k+2), and the closing edge (1, n+1), ordered triangle by triangle.
    """
    assert n >= 1
    if n == 1:
        return Graph(2, ((1, 2), (1, 2)))
    edges = [(1, 2)]
    for k in range(1, n):
        edges.append((k, k + 2))
        edges.append((k + 1, k + 2))
    edges.append((1, n + 1))
    return Graph(n + 1, tuple(edges))


def b_family(n: int) -> Graph:
    """Wheel with one spoke contracted (n vertices on the outer circle)."""
    assert n >= 1
    if n == 1:
        return Graph(1, ((1, 1),))
    w = wheel(n)
    spoke1 = w.n_edges  # the hub-1 spoke is last in the wheel ordering
    g, _ = minor(w, contract={spoke1})
    return g


def zb_family(n: int) -> Graph:
    """Open chain of triangles with both end edges doubled (n vertices)."""
    assert n >= 1
    if n == 1:
        return Graph(1, ((1, 1),))
    if n == 2:
        return Graph(2, ((1, 2), (1, 2), (1, 2)))
    edges = [(1, 2), (1, 2)]
    edges += [(k, k + 2) for k in range(1, n - 1)]
    edges += [(k, k + 1) for k in range(2, n - 1)]
    edges += [(n - 1, n), (n - 1, n)]
    return Graph(n, tuple(edges))


G8_EDGES = ((3, 4), (1, 4), (1, 3), (1, 2), (2, 7), (2, 5), (5, 8), (7, 8),
            (8, 9), (5, 9), (4, 9), (4, 7), (3, 5), (3, 6), (6, 7), (6, 9))


def g8() -> Graph:
    """The 8-loop 16-edge counter-example graph."""
    return Graph(9, G8_EDGES)


def named_graph(name: str) -> Graph:
    s = name.strip().upper()
    if s == "G8":
        return g8()
    for prefix, builder in (("ZB", zb_family), ("W", wheel), ("Z", zigzag),
                            ("B", b_family)):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return builder(int(s[len(prefix):]))
    raise ValueError(f"unknown graph name {name!r}")


def load_graph(source: str) -> Graph:
    """Built-in name, or a path to a graph file."""
    try:
        return named_graph(source)
    except ValueError:
        pass
    with open(source) as fh:
        return parse_graph(fh.read())


# -- canonical forms (memoization keys) -------------------------------------------


_CANON_LIMIT = 50000


def _refine_colors(g: Graph):
    colors = {}
    for v in range(1, g.vertex_count + 1):
        loops = sum(1 for u, w in g.edges if u == w == v)
        colors[v] = (g.degree(v), loops)
    while True:
        sig = {}
        for v in range(1, g.vertex_count + 1):
            nb = []
            for u, w in g.edges:
                if u == v and w != v:
                    nb.append(colors[w])
                elif w == v and u != v:
                    nb.append(colors[u])
            sig[v] = (colors[v], tuple(sorted(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in sig}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def canonical_key(g: Graph):
    """Isomorphism-invariant key: the minimal relabelled edge multiset.

    Exact minimization over permutations compatible with an iterated degree
    refinement; falls back to the labelled key when the symmetry class is
    too large for exhaustive search.
    """
    if g.is_zero:
        return ("ZERO",)
    colors = _refine_colors(g)
    classes: dict = {}
    for v, c in colors.items():
        classes.setdefault(c, []).append(v)
    size = 1
    for vs in classes.values():
        size *= factorial(len(vs))
        if size > _CANON_LIMIT:
            return (g.vertex_count, tuple(sorted(g.edges)), "labelled")
    best = None
    class_list = [classes[c] for c in sorted(classes)]
    for perm_parts in itertools.product(*[itertools.permutations(vs) for vs in class_list]):
        relabel = {}
        next_label = 1
        for part in perm_parts:
            for v in part:
                relabel[v] = next_label
                next_label += 1
        key = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return (g.vertex_count, best)
