"""Position polynomials of a step graph and the polynomial-side versions of
its structural predicates.

The i-th position polynomial sums X^{s(e)} over the label-i edges, with
multiplicity, so a graph is equivalent data to a K-tuple of Laurent
polynomials with nonnegative integer coefficients.  Symmetry, full-image,
face-accessibility and neutrality all become exact polynomial conditions;
the universal "for every direction" condition is discharged on the finitely
many representatives of a refined normal fan.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from semizn import geometry
from semizn.algebra import ModulePresentation
from semizn.ggraph import StepGraph
from semizn.laurent import NEG_INF, LaurentPoly, as_direction


def position_polynomials(graph: StepGraph) -> list[LaurentPoly]:
    terms = [dict() for _ in range(graph.K)]
    for s, label in graph.edges:
        t = terms[label - 1]
        t[s] = t.get(s, 0) + 1
    return [LaurentPoly(graph.n, t) for t in terms]


def graph_from_positions(fs: Sequence[LaurentPoly], steps) -> StepGraph:
    """Inverse of position_polynomials: one parallel edge per unit of each
    coefficient.  Requires nonnegative integer coefficients."""
    edges = []
    for i, f in enumerate(fs):
        for e, c in f.terms.items():
            if not isinstance(c, int) or c < 0:
                raise ValueError("position polynomials need coefficients in N")
            edges.extend([(e, i + 1)] * c)
    if not edges:
        raise ValueError("all position polynomials are zero")
    return StepGraph(steps, edges)


# ---------------------------------------------------------------------------
# Index sets
# ---------------------------------------------------------------------------

def leading_indices(subset, fs: Sequence[LaurentPoly], v) -> frozenset:
    """Indices of `subset` whose v-weighted degree is maximal.

    Zero entries have degree -inf and never attain a maximum against a
    nonzero entry; if every entry of the subset is zero, the whole subset is
    returned (all attain -inf)."""
    subset = sorted(subset)
    if not subset:
        raise ValueError("empty index subset")
    n = fs[0].n
    v = as_direction(v, n)
    degs = {i: fs[i - 1].weighted_degree(v) for i in subset}
    top = max(degs.values())
    if top == NEG_INF:
        return frozenset(subset)
    return frozenset(i for i in subset if degs[i] == top)


def crossing_indices(steps, v) -> frozenset:
    """Indices whose step vector is not orthogonal to v."""
    out = set()
    for i, a in enumerate(steps, start=1):
        if sum(Fraction(x) * y for x, y in zip(v, a)) != 0:
            out.add(i)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Structural checks (polynomial side)
# ---------------------------------------------------------------------------

def check_full_image(fs: Sequence[LaurentPoly]) -> bool:
    return all(not f.is_zero() for f in fs)


def check_symmetry(fs: Sequence[LaurentPoly], steps) -> bool:
    n = fs[0].n
    acc = LaurentPoly.zero(n)
    for f, a in zip(fs, steps):
        acc = acc + f * (LaurentPoly.monomial(tuple(a)) - LaurentPoly.one(n))
    return acc.is_zero()


def check_neutral(fs: Sequence[LaurentPoly], presentation: ModulePresentation,
                  ys, steps) -> bool:
    """Whether the graph of `fs` represents the neutral element; only
    meaningful (and only accepted) for symmetric tuples."""
    if not check_symmetry(fs, steps):
        raise ValueError("neutrality test requires a symmetric tuple")
    acc = presentation.zero_vector()
    for f, y in zip(fs, ys):
        for j in range(presentation.d):
            acc[j] = acc[j] + f * y[j]
    return presentation.is_zero(acc)


def check_escape_condition(fs: Sequence[LaurentPoly], subset, out_labels, steps,
                           want_cells: bool = False):
    """The universal escape condition: for every nonzero direction v, some
    index of maximal v-degree within `subset` either crosses v's hyperplane
    or belongs to `out_labels`.

    Discharged on the refined fan over the hull of the union of the subset's
    supports and the hyperplanes a_i^⊥.  Returns (ok, violating_direction,
    cells) where cells is a per-representative profile when requested.
    Rejects the degenerate all-zero subset explicitly.
    """
    subset = sorted(subset)
    out_labels = frozenset(out_labels)
    support = set()
    for i in subset:
        support |= fs[i - 1].support()
    if not support:
        raise ValueError("escape condition undefined: all polynomials of the subset are zero")
    fan = geometry.refined_fan([list(support)], steps)
    violating: Optional[tuple] = None
    cells = []
    ok = True
    for cell in fan:
        v = cell.direction
        M = leading_indices(subset, fs, v)
        O = crossing_indices(steps, v)
        hit = bool((O | out_labels) & M)
        if want_cells:
            cells.append({
                "direction": list(v),
                "leading": sorted(M),
                "crossing": sorted(O),
                "ok": hit,
            })
        if not hit and ok:
            ok = False
            violating = v
        if not hit and not want_cells:
            break
    return ok, violating, cells
