"""Five-invariants and the denominator reduction.

The reduction step writes the current polynomial as A x^2 + B x + C in the
next edge variable and asks whether the discriminant B^2 - 4AC is an exact
polynomial square.  When it is, its square root equals (up to sign) the
resultant ad - bc of the two linear factors (a x + b)(c x + d), because
(ad - bc)^2 = (ad + bc)^2 - 4abcd; so a single exact square root decides
reducibility and produces the next polynomial at the same time.  A vanishing
discriminant means the resultant vanishes: weight drop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph, is_connected
from .kirchhoff import dodgson
from .poly import MultiPoly

FULLY_REDUCED = "FULLY_REDUCED"
WEIGHT_DROP = "WEIGHT_DROP"


def five_invariant(g: Graph, edges) -> MultiPoly:
    """2x2 determinant of Dodgson polynomials attached to five distinct edges,
    sign-normalized so the leading canonical term is positive."""
    es = tuple(edges)
    if len(es) != 5 or len(set(es)) != 5:
        raise ValueError("need five distinct edges")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    i, j, k, l, m = es
    a = dodgson(g, (i, j), (k, l), (m,))
    b = dodgson(g, (i, k), (j, l), (m,))
    c = dodgson(g, (i, j, m), (k, l, m))
    d = dodgson(g, (i, k, m), (j, l, m))
    return (a * d - b * c).sign_normalized()


def denom_step(d: MultiPoly, var: int):
    """One reduction step in `var`.

    Returns the next polynomial (sign-normalized), the zero polynomial when
    the resultant vanishes (weight drop), or None when the discriminant is
    not an exact square (reduction stops).  Also returns the witnesses
    (A, B, C, sqrt_disc) used by the step.
    """
    if d.degree_in(var) > 2:
        raise ValueError(f"degree > 2 in x{var}")
    a = d.coefficient_of(var, 2)
    b = d.coefficient_of(var, 1)
    c = d.coefficient_of(var, 0)
    if a.is_zero() or c.is_zero():
        # linear case (or a bare factor of the variable): disc = B^2
        root = b.sign_normalized()
        return root, (a, b, c, root)
    disc = b * b - 4 * a * c
    if disc.is_zero():
        return MultiPoly.zero(), (a, b, c, MultiPoly.zero())
    root = disc.sqrt()
    if root is None:
        return None, (a, b, c, None)
    return root.sign_normalized(), (a, b, c, root)


@dataclass
class ReductionTrace:
    """Record of a denominator reduction run.

    polys[i] is the stage-(5+i) polynomial; step_vars[i] is the edge
    variable eliminated to produce polys[i+1].  status is FULLY_REDUCED,
    WEIGHT_DROP, or "IRREDUCIBLE_AT(n)".
    """

    graph: Graph
    order: tuple
    polys: list
    step_vars: list
    witnesses: list
    status: str

    @property
    def steps_completed(self) -> int:
        """The stage n of the last polynomial D^n in the trace."""
        return 4 + len(self.polys)

    @property
    def last(self) -> MultiPoly:
        return self.polys[-1]

    def stage(self, n: int) -> MultiPoly:
        """The polynomial D^n (n >= 5)."""
        return self.polys[n - 5]

    def to_json(self) -> str:
        data = {
            "edges": [list(e) for e in self.graph.edges],
            "order": list(self.order),
            "status": self.status,
            "stages": [
                {
                    "n": 5 + i,
                    "eliminated": self.step_vars[i - 1] if i else None,
                    "terms": p.num_terms(),
                    "poly": p.to_text(),
                }
                for i, p in enumerate(self.polys)
            ],
        }
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


def denominator_reduce(g: Graph, order=None, auto: bool = False) -> ReductionTrace:
    """Seed with the 5-invariant of the first five edges of `order` and
    iterate reduction steps over the subsequent edges.

    With auto=True the designated next variable is ignored and the first
    remaining variable (lowest edge index) for which the step succeeds is
    used instead.
    """
    n = g.n_edges
    if n < 5:
        raise ValueError("need at least five edges")
    if order is None:
        order = tuple(range(1, n + 1))
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("order must be a permutation of all edge indices")
    d = five_invariant(g, order[:5])
    polys = [d]
    step_vars: list = []
    witnesses: list = []
    used = set(order[:5])
    pos = 5
    while len(used) < n - 1:
        if d.is_zero():
            return ReductionTrace(g, order, polys, step_vars, witnesses, WEIGHT_DROP)
        if auto:
            candidates = [v for v in range(1, n + 1) if v not in used]
        else:
            candidates = [order[pos]]
        nxt = None
        for var in candidates:
            res, wit = denom_step(d, var)
            if res is not None:
                nxt = (var, res, wit)
                break
        if nxt is None:
            status = f"IRREDUCIBLE_AT({4 + len(polys)})"
            return ReductionTrace(g, order, polys, step_vars, witnesses, status)
        var, d, wit = nxt
        polys.append(d)
        step_vars.append(var)
        witnesses.append(wit)
        used.add(var)
        pos += 1
    status = WEIGHT_DROP if d.is_zero() else FULLY_REDUCED
    return ReductionTrace(g, order, polys, step_vars, witnesses, status)
