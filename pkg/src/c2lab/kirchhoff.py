"""Expanded incidence matrices, graph polynomials, and Dodgson polynomials.

For a connected graph with N edges and v vertices the matrix is the
(N + v - 1) x (N + v - 1) block matrix

        [ A   E ]
        [-E^T 0 ]

with A = diag(alpha_e) and E the signed incidence matrix (edge (u, v) with
u < v is oriented u -> v; self-loops give a zero row).  The row and column
of the highest-numbered vertex are deleted.  Its determinant is the graph
polynomial; deleting edge rows I, edge columns J and setting alpha_e = 0
for e in K gives the Dodgson polynomial, whose sign is pinned by this fixed
matrix once and for all.

Determinants are computed by fraction-free (Bareiss) elimination over the
integer polynomial ring, with a pivot rule that consumes unit incidence
entries first.  Since every variable occurs in exactly one matrix entry,
all minors are multilinear; entries are held in a packed representation
(two bits per variable) during elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, is_connected, minor
from .poly import MultiPoly

# -- packed polynomials: {key: coeff} with 2 bits per variable ----------------


def _pp_mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            s = get(k, 0) + c1 * c2
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def _pp_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _pp_divexact(p: dict, g: dict) -> dict:
    """Exact division; the integer order on packed keys is a monomial order."""
    if not p:
        return {}
    kg = max(g)
    cg = g[kg]
    rem = dict(p)
    quot: dict = {}
    while rem:
        kr = max(rem)
        cr = rem[kr]
        kq = kr - kg
        assert kq >= 0, "inexact packed division (monomial)"
        cq, r = divmod(cr, cg)
        assert r == 0, "inexact packed division (coefficient)"
        quot[kq] = cq
        for k2, c2 in g.items():
            k = kq + k2
            s = rem.get(k, 0) - cq * c2
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return quot


def _pp_to_multipoly(p: dict, nvars: int) -> MultiPoly:
    terms = {}
    for key, c in p.items():
        t = []
        k = key
        v = 1
        while k:
            e = k & 3
            if e:
                t.append((v, e))
            k >>= 2
            v += 1
        terms[tuple(t)] = c
    return MultiPoly(terms)


def _bareiss_det(m: list) -> dict:
    """Fraction-free determinant of a square matrix of packed polynomials."""
    n = len(m)
    if n == 0:
        return {0: 1}
    m = [row[:] for row in m]
    sign = 1
    prev: dict = {0: 1}
    for k in range(n):
        # pivot rule: unit constants first, then minimal Markowitz fill
        # (nonzeros in row - 1) * (nonzeros in col - 1); deterministic ties
        row_nz = [sum(1 for j in range(k, n) if m[i][j]) for i in range(k, n)]
        col_nz = [sum(1 for i in range(k, n) if m[i][j]) for j in range(k, n)]
        best = None
        for i in range(k, n):
            if row_nz[i - k] == 0:
                return {}
            for j in range(k, n):
                e = m[i][j]
                if not e:
                    continue
                is_unit = 0 if (len(e) == 1 and 0 in e and abs(e[0]) == 1) else 1
                fill = (row_nz[i - k] - 1) * (col_nz[j - k] - 1)
                score = (is_unit, fill, len(e), i, j)
                if best is None or score < best[0]:
                    best = (score, i, j)
        if best is None:
            return {}
        _, r, c = best
        if r != k:
            m[k], m[r] = m[r], m[k]
            sign = -sign
        if c != k:
            for row in m:
                row[k], row[c] = row[c], row[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            if mik:
                for j in range(k + 1, n):
                    num = _pp_sub(_pp_mul(m[i][j], piv), _pp_mul(mik, m[k][j]))
                    m[i][j] = _pp_divexact(num, prev) if num else {}
                m[i][k] = {}
            else:
                for j in range(k + 1, n):
                    if m[i][j]:
                        m[i][j] = _pp_divexact(_pp_mul(m[i][j], piv), prev)
        prev = piv
    det = m[n - 1][n - 1]
    if sign < 0:
        det = {k: -c for k, c in det.items()}
    return det


# -- the graph matrix ----------------------------------------------------------


@dataclass(frozen=True)
class GraphMatrix:
    graph: Graph
    size: int
    deleted_vertex: int
    rows: tuple  # ("edge", i) or ("vertex", v) labels in matrix order
    entries: tuple  # tuple of tuples of MultiPoly

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]


def _incidence(g: Graph):
    """inc[e][w] over kept vertices; +1 at the lower endpoint, -1 at the upper."""
    n = g.n_edges
    keep = g.vertex_count - 1
    inc = [[0] * keep for _ in range(n)]
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        if u <= keep:
            inc[e][u - 1] = 1
        if v <= keep:
            inc[e][v - 1] = -1
    return inc


def _packed_matrix(g: Graph, drop_rows=(), drop_cols=(), zero_alpha=()):
    n = g.n_edges
    keep = g.vertex_count - 1
    inc = _incidence(g)
    zero_alpha = set(zero_alpha)
    rows = [("edge", e + 1) for e in range(n) if e + 1 not in drop_rows]
    rows += [("vertex", w) for w in range(1, keep + 1)]
    cols = [("edge", e + 1) for e in range(n) if e + 1 not in drop_cols]
    cols += [("vertex", w) for w in range(1, keep + 1)]
    m = []
    for kind_r, r in rows:
        row = []
        for kind_c, c in cols:
            if kind_r == "edge" and kind_c == "edge":
                if r == c and r not in zero_alpha:
                    row.append({1 << (2 * (r - 1)): 1})
                else:
                    row.append({})
            elif kind_r == "edge":
                val = inc[r - 1][c - 1]
                row.append({0: val} if val else {})
            elif kind_c == "edge":
                val = -inc[c - 1][r - 1]
                row.append({0: val} if val else {})
            else:
                row.append({})
        m.append(row)
    return m


def build_matrix(g: Graph) -> GraphMatrix:
    if g.is_zero or not is_connected(g):
        raise ValueError("matrix requires a connected non-zero graph")
    n = g.n_edges
    keep = g.vertex_count - 1
    m = _packed_matrix(g)
    size = n + keep
    rows = tuple([("edge", e) for e in range(1, n + 1)] +
                 [("vertex", w) for w in range(1, keep + 1)])
    entries = tuple(tuple(_pp_to_multipoly(m[i][j], n) for j in range(size))
                    for i in range(size))
    return GraphMatrix(g, size, g.vertex_count, rows, entries)


# -- graph and Dodgson polynomials ----------------------------------------------


@lru_cache(maxsize=None)
def graph_polynomial(g: Graph) -> MultiPoly:
    """Kirchhoff polynomial via fraction-free elimination on the graph matrix.

    Zero for the ZERO graph and for disconnected graphs.
    """
    if g.is_zero or not is_connected(g):
        return MultiPoly.zero()
    det = _bareiss_det(_packed_matrix(g))
    return _pp_to_multipoly(det, g.n_edges)


@lru_cache(maxsize=None)
def _dodgson_cached(g: Graph, i_set: tuple, j_set: tuple, k_set: tuple) -> MultiPoly:
    det = _bareiss_det(_packed_matrix(g, drop_rows=set(i_set),
                                      drop_cols=set(j_set), zero_alpha=k_set))
    return _pp_to_multipoly(det, g.n_edges)


def dodgson(g: Graph, i_set, j_set, k_set=()) -> MultiPoly:
    """det of the graph matrix with edge rows I and columns J removed and
    alpha_e = 0 on K.  Requires |I| = |J| and K disjoint from I and J."""
    if g.is_zero or not is_connected(g):
        return MultiPoly.zero()
    i_t = tuple(sorted(set(i_set)))
    j_t = tuple(sorted(set(j_set)))
    k_t = tuple(sorted(set(k_set)))
    if len(i_t) != len(j_t):
        raise ValueError("|I| != |J|")
    if set(k_t) & (set(i_t) | set(j_t)):
        raise ValueError("K overlaps I or J")
    for e in i_t + j_t + k_t:
        if not (1 <= e <= g.n_edges):
            raise ValueError(f"edge index {e} out of range")
    return _dodgson_cached(g, i_t, j_t, k_t)


# -- three-valent vertex structure ------------------------------------------------


def three_valent_structure(g: Graph, v: int):
    """The five structure polynomials (f0, f1, f2, f3, f123) at a 3-valent
    vertex, extracted from the graph polynomial so the sign choices satisfy

        Psi = f0 (a1 a2 + a1 a3 + a2 a3) + (f1+f2) a3 + (f1+f3) a2
              + (f2+f3) a1 + f123            and    f0 f123 = f1 f2 + f1 f3 + f2 f3

    where a1, a2, a3 are the variables of the three edges at v in index order.
    """
    es = g.edges_at(v)
    if len(es) != 3 or g.degree(v) != 3:
        raise ValueError(f"vertex {v} is not 3-valent")
    if any(g.edges[e - 1][0] == g.edges[e - 1][1] for e in es):
        raise ValueError(f"vertex {v} carries a self-loop")
    e1, e2, e3 = es
    psi = graph_polynomial(g)

    def coeff(var_on, vars_off):
        p = psi
        for w in var_on:
            p = p.coefficient_of(w, 1)
        for w in vars_off:
            p = p.substitute(w, 0)
        return p

    f0 = coeff([e1, e2], [e3])
    f0b = coeff([e1, e3], [e2])
    f0c = coeff([e2, e3], [e1])
    if not (f0 == f0b == f0c):
        raise AssertionError("three-valent structure: quadratic part mismatch")
    c1 = coeff([e1], [e2, e3])
    c2 = coeff([e2], [e1, e3])
    c3 = coeff([e3], [e1, e2])
    f123 = coeff([], [e1, e2, e3])
    two_f1 = c2 + c3 - c1
    two_f2 = c1 + c3 - c2
    two_f3 = c1 + c2 - c3
    f1 = two_f1.divexact_int(2)
    f2 = two_f2.divexact_int(2)
    f3 = two_f3.divexact_int(2)
    a1, a2, a3 = (MultiPoly.var(e) for e in es)
    rebuilt = (f0 * (a1 * a2 + a1 * a3 + a2 * a3) + (f1 + f2) * a3
               + (f1 + f3) * a2 + (f2 + f3) * a1 + f123)
    if rebuilt != psi:
        raise AssertionError("three-valent structure: reconstruction failed")
    if f0 * f123 != f1 * f2 + f1 * f3 + f2 * f3:
        raise AssertionError("three-valent structure: product identity failed")
    return f0, f1, f2, f3, f123


def structure_minors_check(g: Graph, v: int) -> bool:
    """Cross-check f0 and f123 against the corresponding minors."""
    e1, e2, e3 = g.edges_at(v)
    f0, f1, f2, f3, f123 = three_valent_structure(g, v)
    m0, emap = minor(g, delete={e1, e2}, contract={e3})
    back = {new: old for old, new in emap.items() if new is not None}
    if graph_polynomial(m0).rename(back) != f0:
        return False
    m123, emap = minor(g, contract={e1, e2, e3})
    back = {new: old for old, new in emap.items() if new is not None}
    if graph_polynomial(m123).rename(back) != f123:
        return False
    d3 = dodgson(g, (e1,), (e2,), (e3,))
    return d3 == f3 or d3 == -f3
