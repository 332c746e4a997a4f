"""Finitely presented modules over the integer Laurent ring.

A presentation is a quotient M/N of submodules of the free module of rank d
over Z[X_1^±, ..., X_n^±].  Elements are coset representatives in the free
module.  Laurent problems are reduced to polynomial ones by clearing
denominator monomials (units, harmless for membership and syzygies) and, for
membership only, saturating with respect to the product of the variables via
a fresh eliminated variable; syzygy modules localize as-is.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from semizn import groebner
from semizn.laurent import LaurentPoly

PolyVec = list  # list[LaurentPoly]


# ---------------------------------------------------------------------------
# Raw <-> Laurent conversion and clearing
# ---------------------------------------------------------------------------

def _require_integral(vec: Sequence[LaurentPoly]):
    for p in vec:
        if not p.is_integral():
            raise ValueError("module computations require integer coefficients")


def vector_min_exponents(vec: Sequence[LaurentPoly], n: int) -> tuple:
    mins = [0] * n
    for p in vec:
        for e in p.terms:
            for i, v in enumerate(e):
                mins[i] = min(mins[i], v)
    return tuple(mins)


def clear_vector(vec: Sequence[LaurentPoly], n: int):
    """Shift a Laurent vector by a monomial unit to nonnegative exponents.

    Returns (raw dict over (pos, mono), shift) with cleared = X^shift * vec.
    """
    mins = vector_min_exponents(vec, n)
    shift = tuple(-m for m in mins)
    raw = {}
    for pos, p in enumerate(vec):
        for e, c in p.terms.items():
            raw[(pos, tuple(a + b for a, b in zip(e, shift)))] = c
    return raw, shift


def raw_to_vector(raw: dict, p: int, n: int) -> list[LaurentPoly]:
    polys = [dict() for _ in range(p)]
    for (pos, mono), c in raw.items():
        polys[pos][mono] = c
    return [LaurentPoly(n, t) for t in polys]


def normalize_unit(vec: Sequence[LaurentPoly], n: int) -> list[LaurentPoly]:
    """Canonical unit multiple: shift so the componentwise minimum exponent
    across the whole vector is zero, and the first nonzero leading
    coefficient is positive."""
    if all(p.is_zero() for p in vec):
        return list(vec)
    mins = [None] * n
    for p in vec:
        for e in p.terms:
            for i, v in enumerate(e):
                mins[i] = v if mins[i] is None else min(mins[i], v)
    shift = tuple(-(m or 0) for m in mins)
    out = [p.shift(shift) for p in vec]
    for p in out:
        if not p.is_zero():
            lead = max(p.terms.items(), key=lambda t: (sum(t[0]), t[0]))
            if lead[1] < 0:
                out = [q.scale(-1) for q in out]
            break
    return out


# ---------------------------------------------------------------------------
# Submodules of the free Laurent module
# ---------------------------------------------------------------------------

class LaurentSubmodule:
    """Submodule of Z[X^±]^d given by generators; supports exact membership
    via a saturated strong Groebner basis (computed lazily, cached)."""

    def __init__(self, d: int, n: int, generators: Sequence[Sequence[LaurentPoly]]):
        self.d = d
        self.n = n
        self.generators = [list(g) for g in generators]
        for g in self.generators:
            if len(g) != d:
                raise ValueError("generator has wrong rank")
            _require_integral(g)
        self._basis = None
        self._order = None

    def _membership_basis(self, deadline=None):
        if self._basis is None:
            cols = [clear_vector(g, self.n)[0] for g in self.generators]
            cols = [c for c in cols if c]
            basis, order = groebner.saturated_basis(cols, self.d, self.n, deadline=deadline)
            self._basis = basis
            self._order = order
        return self._basis, self._order

    def contains(self, vec: Sequence[LaurentPoly], deadline=None) -> bool:
        _require_integral(vec)
        raw, _ = clear_vector(vec, self.n)
        if not raw:
            return True
        basis, order = self._membership_basis(deadline=deadline)
        return groebner.is_member(raw, basis, order)

    def reduced_basis(self) -> list[list[LaurentPoly]]:
        """The saturated strong basis, as Laurent vectors (unit-normalized)."""
        basis, _ = self._membership_basis()
        return [normalize_unit(raw_to_vector(e.vec, self.d, self.n), self.n) for e in basis]


def strong_groebner(generators: Sequence[Sequence[LaurentPoly]], d: int, n: int) -> LaurentSubmodule:
    """Membership-ready basis object for the Laurent span of `generators`."""
    return LaurentSubmodule(d, n, generators)


def laurent_syzygies(columns: Sequence[Sequence[LaurentPoly]], p: int, n: int,
                     deadline=None) -> list[list[LaurentPoly]]:
    """Generators of the syzygy module {h : sum_i h_i * columns[i] = 0} over
    the Laurent ring.

    Columns are cleared to polynomials per column (a unit multiple), the
    polynomial syzygies are computed, and the clearing is undone on the
    result; localization flatness makes the polynomial generators generate
    the Laurent syzygy module.
    """
    cleared = []
    shifts = []
    for col in columns:
        _require_integral(col)
        raw, shift = clear_vector(col, n)
        cleared.append(raw)
        shifts.append(shift)
    raw_syz = groebner.syzygy_generators(cleared, p, n, deadline=deadline)
    out = []
    for s in raw_syz:
        vec = raw_to_vector(s, len(columns), n)
        vec = [f.shift(shifts[i]) for i, f in enumerate(vec)]
        out.append(normalize_unit(vec, n))
    return out


# ---------------------------------------------------------------------------
# Presentations and elements
# ---------------------------------------------------------------------------

@dataclass
class ModulePresentation:
    """Y = M/N over Z[X_1^±..X_n^±]; gens_M defaults to the standard basis."""

    n: int
    d: int
    rels_N: list = field(default_factory=list)
    gens_M: Optional[list] = None

    def __post_init__(self):
        for r in self.rels_N:
            if len(r) != self.d:
                raise ValueError("relation vector has wrong rank")
            _require_integral(r)
        if self.gens_M is not None:
            for g in self.gens_M:
                if len(g) != self.d:
                    raise ValueError("gens_M vector has wrong rank")
                _require_integral(g)
        self._N = LaurentSubmodule(self.d, self.n, self.rels_N)

    def zero_vector(self) -> list[LaurentPoly]:
        return [LaurentPoly.zero(self.n) for _ in range(self.d)]

    def is_zero(self, rep: Sequence[LaurentPoly]) -> bool:
        """rep lies in N, i.e. represents 0 in Y."""
        return self._N.contains(rep)

    def element(self, rep: Sequence[LaurentPoly]) -> "ModuleElement":
        return ModuleElement(self, list(rep))

    def validate_strict(self, extra_vectors: Sequence[Sequence[LaurentPoly]] = ()):
        """Check rels_N (and any extra vectors) lie in span(gens_M).

        Costs a Groebner run; off by default per the strictness flag.
        """
        if self.gens_M is None:
            return  # M is the full free module
        M = LaurentSubmodule(self.d, self.n, self.gens_M)
        for r in list(self.rels_N) + [list(v) for v in extra_vectors]:
            if not M.contains(r):
                raise ValueError("vector outside span(gens_M)")


class ModuleElement:
    """Coset representative in the free module of rank d."""

    __slots__ = ("presentation", "rep")

    def __init__(self, presentation: ModulePresentation, rep: Sequence[LaurentPoly]):
        if len(rep) != presentation.d:
            raise ValueError("representative has wrong rank")
        self.presentation = presentation
        self.rep = tuple(rep)

    def is_zero(self) -> bool:
        return self.presentation.is_zero(list(self.rep))

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._same(other)
        return ModuleElement(self.presentation, [a + b for a, b in zip(self.rep, other.rep)])

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.presentation, [-a for a in self.rep])

    def __sub__(self, other):
        return self + (-other)

    def act(self, poly: LaurentPoly) -> "ModuleElement":
        return ModuleElement(self.presentation, [poly * a for a in self.rep])

    def shift(self, z: Sequence[int]) -> "ModuleElement":
        return ModuleElement(self.presentation, [a.shift(z) for a in self.rep])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        self._same(other)
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("ModuleElement is unhashable (equality is coset equality)")

    def _same(self, other: "ModuleElement"):
        if self.presentation is not other.presentation:
            raise ValueError("elements of different presentations")

    def __repr__(self):
        return f"ModuleElement({list(self.rep)!r})"


# ---------------------------------------------------------------------------
# The relation module of a generating set (symmetry + neutrality equations)
# ---------------------------------------------------------------------------

@dataclass
class SyzygyBasis:
    """Generators of the module of K-vectors f with
    sum_i f_i (X^{a_i} - 1) = 0 and sum_i f_i y_i = 0 in Y."""

    generators: list  # list[list[LaurentPoly]], each of length K
    K: int
    n: int


def stacked_columns(presentation: ModulePresentation, ys: Sequence[Sequence[LaurentPoly]],
                    steps: Sequence[Sequence[int]]):
    """Columns of the combined system from the appendix reduction: for each
    generator the vector (y_i stacked over X^{a_i} - 1), and for each module
    relation the vector (-n_j stacked over 0)."""
    n, d = presentation.n, presentation.d
    cols = []
    for y, a in zip(ys, steps):
        sym = LaurentPoly.monomial(tuple(a)) - LaurentPoly.one(n)
        cols.append(list(y) + [sym])
    for rel in presentation.rels_N:
        cols.append([-r for r in rel] + [LaurentPoly.zero(n)])
    return cols, d + 1


def syzygy_basis(presentation: ModulePresentation, ys, steps, deadline=None) -> SyzygyBasis:
    """Finite generating set of the relation module, via syzygies of the
    stacked system projected to the first K coordinates."""
    K = len(ys)
    cols, p = stacked_columns(presentation, ys, steps)
    syz = laurent_syzygies(cols, p, presentation.n, deadline=deadline)
    gens = []
    seen = set()
    for s in syz:
        f = normalize_unit(s[:K], presentation.n)
        if all(q.is_zero() for q in f):
            continue
        key = tuple(frozenset(q.terms.items()) for q in f)
        if key not in seen:
            seen.add(key)
            gens.append(f)
    return SyzygyBasis(generators=gens, K=K, n=presentation.n)


def residual(f: Sequence[LaurentPoly], presentation: ModulePresentation, ys, steps):
    """(symmetry residual, neutrality residual) of a candidate K-vector;
    f is in the relation module iff the first is zero and the second is zero
    in Y."""
    n = presentation.n
    sym = LaurentPoly.zero(n)
    neu = presentation.zero_vector()
    for fi, y, a in zip(f, ys, steps):
        if n:
            sym = sym + fi * (LaurentPoly.monomial(tuple(a)) - LaurentPoly.one(n))
        for j in range(presentation.d):
            neu[j] = neu[j] + fi * y[j]
    return sym, presentation.element(neu)
