"""Strong Groebner bases over Z for submodules of free modules Z[x]^p.

This is the computational core behind relation-module membership and syzygy
extraction.  Coefficients stay in Z throughout (Buchberger over a PID: the
pair set contains both S-vectors and GCD-vectors, the latter built from
Bezout coefficients).  Module vectors are dicts mapping (position, exponent
tuple) to a nonzero int; exponents are nonnegative here, Laurent clearing
happens in the callers.

Term orders are block orders: variables are grouped into blocks compared
left to right, graded-lex inside each block.  A block consisting of a single
fresh variable placed first gives an elimination order for saturation; a
count of leading "eliminated" module positions that dominate every term in
the remaining positions gives the syzygy/elimination order on positions.

A strong basis guarantees that every member of the module reduces to zero,
and (with the canonical nonnegative-remainder convention used here) that
normal forms are unique coset representatives.
"""
from __future__ import annotations

import heapq
import time
from math import gcd

from semizn.kernels import axpy_terms


class GroebnerBudgetError(Exception):
    """Raised when a Groebner run exceeds its deadline."""


class TermOrder:
    def __init__(self, nvars: int, blocks=None, elim_positions: int = 0):
        self.nvars = nvars
        if blocks is None:
            blocks = [tuple(range(nvars))]
        self.blocks = [tuple(b) for b in blocks]
        covered = sorted(i for b in self.blocks for i in b)
        if covered != list(range(nvars)):
            raise ValueError("blocks must partition the variables")
        self.elim_positions = elim_positions

    def key(self, pos: int, mono: tuple):
        parts = [1 if pos < self.elim_positions else 0]
        for block in self.blocks:
            sub = tuple(mono[i] for i in block)
            parts.append((sum(sub), sub))
        parts.append(-pos)
        return tuple(parts)


def _ext_gcd(a: int, b: int):
    """g, s, t with s*a + t*b = g = gcd(a, b), g > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class _Entry:
    __slots__ = ("vec", "pos", "mono", "coef", "key")

    def __init__(self, vec: dict, order: TermOrder):
        self.vec = vec
        self.pos, self.mono = max(vec, key=lambda k: order.key(*k))
        self.coef = vec[(self.pos, self.mono)]
        self.key = order.key(self.pos, self.mono)


def _normalize_sign(vec: dict, order: TermOrder) -> dict:
    pos, mono = max(vec, key=lambda k: order.key(*k))
    if vec[(pos, mono)] < 0:
        return {k: -c for k, c in vec.items()}
    return vec


def normal_form(vec: dict, basis: list[_Entry], order: TermOrder, record=None) -> dict:
    """Strong normal form with canonical remainders (0 <= r < |lc|).

    With a strong basis this is a unique coset representative; membership is
    normal_form == {}.  When `record` is a list, every reduction step appends
    (q, shift, basis_index) meaning q * X^shift * basis[index] was
    subtracted, so vec = remainder + sum of recorded multiples.
    """
    work = dict(vec)
    out = {}
    while work:
        pos, mono = max(work, key=lambda k: order.key(*k))
        c = work[(pos, mono)]
        best = None
        for idx, g in enumerate(basis):
            if g.pos != pos or len(g.mono) != len(mono):
                continue
            if all(a <= b for a, b in zip(g.mono, mono)):
                cand = (abs(g.coef), idx)
                if best is None or cand < best:
                    best = cand
        if best is not None:
            g = basis[best[1]]
            r = c % abs(g.coef)
            q = (c - r) // g.coef
            if q:
                shift = tuple(b - a for a, b in zip(g.mono, mono))
                axpy_terms(work, -q, shift, g.vec)
                if record is not None:
                    record.append((q, shift, best[1]))
                if r:
                    # the reduced term is now irreducible: park it
                    del work[(pos, mono)]
                    out[(pos, mono)] = r
                continue
        del work[(pos, mono)]
        out[(pos, mono)] = c
    return out


def buchberger(gens: list[dict], order: TermOrder, deadline=None) -> list[_Entry]:
    """Strong Groebner basis of the module generated by `gens`.

    Processes S-vectors and GCD-vectors by the normal strategy (smallest lcm
    term first); deterministic for a fixed input order.
    """
    basis: list[_Entry] = []
    for g in gens:
        if g:
            basis.append(_Entry(_normalize_sign(dict(g), order), order))

    pending: list = []
    counter = 0

    def push_pairs(new_idx: int):
        nonlocal counter
        gnew = basis[new_idx]
        for i in range(new_idx):
            gi = basis[i]
            if gi.pos != gnew.pos:
                continue
            lcm_mono = tuple(max(a, b) for a, b in zip(gi.mono, gnew.mono))
            counter += 1
            heapq.heappush(pending, (order.key(gi.pos, lcm_mono), counter, i, new_idx))

    for idx in range(len(basis)):
        push_pairs(idx)

    while pending:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerBudgetError("groebner deadline exceeded")
        _, _, i, j = heapq.heappop(pending)
        gi, gj = basis[i], basis[j]
        lcm_mono = tuple(max(a, b) for a, b in zip(gi.mono, gj.mono))
        si = tuple(l - a for l, a in zip(lcm_mono, gi.mono))
        sj = tuple(l - a for l, a in zip(lcm_mono, gj.mono))
        ci, cj = gi.coef, gj.coef
        l = abs(ci * cj) // gcd(abs(ci), abs(cj))
        candidates = []
        s_vec: dict = {}
        axpy_terms(s_vec, l // ci, si, gi.vec)
        axpy_terms(s_vec, -(l // cj), sj, gj.vec)
        candidates.append(s_vec)
        if ci % cj != 0 and cj % ci != 0:
            _, s, t = _ext_gcd(ci, cj)
            g_vec: dict = {}
            axpy_terms(g_vec, s, si, gi.vec)
            axpy_terms(g_vec, t, sj, gj.vec)
            candidates.append(g_vec)
        for cand in candidates:
            rem = normal_form(cand, basis, order)
            if rem:
                basis.append(_Entry(_normalize_sign(rem, order), order))
                push_pairs(len(basis) - 1)
    return _reduce_basis(basis, order)


def _reduce_basis(basis: list[_Entry], order: TermOrder) -> list[_Entry]:
    """Minimalize (drop entries whose leading term is a multiple of another's)
    and tail-reduce, in a deterministic order."""
    entries = sorted(basis, key=lambda e: (e.key, abs(e.coef)))
    kept: list[_Entry] = []
    for e in entries:
        redundant = False
        for h in kept:
            if (
                h.pos == e.pos
                and all(a <= b for a, b in zip(h.mono, e.mono))
                and e.coef % h.coef == 0
            ):
                redundant = True
                break
        if not redundant:
            kept.append(e)
    reduced = []
    for e in kept:
        tail = dict(e.vec)
        del tail[(e.pos, e.mono)]
        others = [h for h in kept if h is not e]
        nf_tail = normal_form(tail, others, order)
        nf_tail[(e.pos, e.mono)] = e.coef
        reduced.append(_Entry(nf_tail, order))
    reduced.sort(key=lambda e: e.key)
    return reduced


def is_member(vec: dict, basis: list[_Entry], order: TermOrder) -> bool:
    return not normal_form(vec, basis, order)


# ---------------------------------------------------------------------------
# Derived computations
# ---------------------------------------------------------------------------

def _buchberger_raw(gens: list[dict], order: TermOrder, deadline=None):
    """Incremental strong-basis run that records, per raw element, a one-level
    recipe: ("gen", j, sign) for (sign-normalized) input j, or
    ("comb", [(coef, shift, raw_idx), ...]) meaning the signed sum of shifted
    earlier raw elements.  Returns (raw entries, recipes)."""
    basis: list[_Entry] = []
    recipes: list = []
    for j, g in enumerate(gens):
        if not g:
            continue
        vec = dict(g)
        pos, mono = max(vec, key=lambda k: order.key(*k))
        sign = -1 if vec[(pos, mono)] < 0 else 1
        if sign < 0:
            vec = {k: -c for k, c in vec.items()}
        basis.append(_Entry(vec, order))
        recipes.append(("gen", j, sign))

    pending: list = []
    counter = 0

    def push_pairs(new_idx: int):
        nonlocal counter
        gnew = basis[new_idx]
        for i in range(new_idx):
            gi = basis[i]
            if gi.pos != gnew.pos:
                continue
            lcm_mono = tuple(max(a, b) for a, b in zip(gi.mono, gnew.mono))
            counter += 1
            heapq.heappush(pending, (order.key(gi.pos, lcm_mono), counter, i, new_idx))

    for idx in range(len(basis)):
        push_pairs(idx)

    while pending:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerBudgetError("groebner deadline exceeded")
        _, _, i, j = heapq.heappop(pending)
        gi, gj = basis[i], basis[j]
        lcm_mono = tuple(max(a, b) for a, b in zip(gi.mono, gj.mono))
        si = tuple(l - a for l, a in zip(lcm_mono, gi.mono))
        sj = tuple(l - a for l, a in zip(lcm_mono, gj.mono))
        ci, cj = gi.coef, gj.coef
        l = abs(ci * cj) // gcd(abs(ci), abs(cj))
        seeds = [[(l // ci, si, i), (-(l // cj), sj, j)]]
        if ci % cj != 0 and cj % ci != 0:
            _, s, t = _ext_gcd(ci, cj)
            seeds.append([(s, si, i), (t, sj, j)])
        for seed in seeds:
            vec: dict = {}
            for coef, shift, idx in seed:
                axpy_terms(vec, coef, shift, basis[idx].vec)
            rec: list = []
            rem = normal_form(vec, basis, order, record=rec)
            if not rem:
                continue
            comb = list(seed) + [(-qq, shift, m) for qq, shift, m in rec]
            pos, mono = max(rem, key=lambda k: order.key(*k))
            if rem[(pos, mono)] < 0:
                rem = {k: -c for k, c in rem.items()}
                comb = [(-c, s2, m) for c, s2, m in comb]
            basis.append(_Entry(rem, order))
            recipes.append(("comb", comb))
            push_pairs(len(basis) - 1)
    return basis, recipes


def syzygy_generators(columns: list[dict], p: int, nvars: int, deadline=None) -> list[dict]:
    """Generators of {h in Z[x]^q : sum_i h_i * columns[i] = 0}.

    Extended-basis (lifting) route in three matrices: a fast untracked
    strong basis G of the column module with per-element recipes, the
    representation A with G = A * columns (recipes composed lazily), the
    representation B with columns = B * G (recorded reductions), and the
    syzygies of G itself read off the S- and GCD-pair reductions of the
    final basis (over a PID the pairwise S-syzygies generate the term
    syzygies, by the Bezout induction).  The output is
    {sigma * A} + rows(I - B * A), every row verified exactly against the
    columns before being returned.
    """
    q = len(columns)
    zero = (0,) * nvars
    order = TermOrder(nvars, elim_positions=p)
    raw, recipes = _buchberger_raw(columns, order, deadline=deadline)

    # minimalize, then tail-reduce against the pre-reduction survivors
    order_idx = sorted(range(len(raw)), key=lambda t: (raw[t].key, abs(raw[t].coef)))
    kept_idx: list[int] = []
    for t in order_idx:
        e = raw[t]
        redundant = any(
            raw[k].pos == e.pos
            and all(a <= b for a, b in zip(raw[k].mono, e.mono))
            and e.coef % raw[k].coef == 0
            for k in kept_idx
        )
        if not redundant:
            kept_idx.append(t)
    final_entries: list[_Entry] = []
    final_recipes: list = []
    for t in kept_idx:
        e = raw[t]
        others = [raw[k] for k in kept_idx if k != t]
        tail = dict(e.vec)
        del tail[(e.pos, e.mono)]
        rec: list = []
        nf_tail = normal_form(tail, others, order, record=rec)
        nf_tail[(e.pos, e.mono)] = e.coef
        final_entries.append(_Entry(nf_tail, order))
        comb = [(1, zero, t)]
        remap = [k for k in kept_idx if k != t]
        comb += [(-qq, shift, remap[m]) for qq, shift, m in rec]
        final_recipes.append(("comb", comb))

    # A: each final element as a combination of the original columns
    memo: dict = {}

    def a_row(raw_idx: int) -> dict:
        if raw_idx in memo:
            return memo[raw_idx]
        kind = recipes[raw_idx]
        if kind[0] == "gen":
            row = {(kind[1], zero): kind[2]}
        else:
            row = {}
            for coef, shift, m in kind[1]:
                axpy_terms(row, coef, shift, a_row(m))
        memo[raw_idx] = row
        return row

    def compose(coeff_vec: dict, rows: list) -> dict:
        out: dict = {}
        for (k, mono), c in coeff_vec.items():
            axpy_terms(out, c, mono, rows[k])
        return out

    a_final = []
    for rec_f in final_recipes:
        row = {}
        for coef, shift, m in rec_f[1]:
            axpy_terms(row, coef, shift, a_row(m))
        a_final.append(row)

    # B: each column reduced to zero by the final strong basis
    b_rows = []
    for col in columns:
        rec = []
        rem = normal_form(dict(col), final_entries, order, record=rec)
        if rem:
            raise AssertionError("column failed to reduce by its own strong basis")
        row: dict = {}
        for qq, shift, k in rec:
            row[(k, shift)] = row.get((k, shift), 0) + qq
        b_rows.append({k: c for k, c in row.items() if c})

    # syzygies of the final basis from its S- and GCD-pairs
    candidates: list[dict] = []
    t_count = len(final_entries)
    for i in range(t_count):
        for j in range(i + 1, t_count):
            gi, gj = final_entries[i], final_entries[j]
            if gi.pos != gj.pos:
                continue
            lcm_mono = tuple(max(a, b) for a, b in zip(gi.mono, gj.mono))
            si = tuple(l - a for l, a in zip(lcm_mono, gi.mono))
            sj = tuple(l - a for l, a in zip(lcm_mono, gj.mono))
            ci, cj = gi.coef, gj.coef
            l = abs(ci * cj) // gcd(abs(ci), abs(cj))
            seeds = [[(l // ci, si, i), (-(l // cj), sj, j)]]
            if ci % cj != 0 and cj % ci != 0:
                _, s, t = _ext_gcd(ci, cj)
                seeds.append([(s, si, i), (t, sj, j)])
            for seed in seeds:
                vec: dict = {}
                for coef, shift, idx in seed:
                    axpy_terms(vec, coef, shift, final_entries[idx].vec)
                rec = []
                rem = normal_form(vec, final_entries, order, record=rec)
                if rem:
                    raise AssertionError("pair of a strong basis failed to reduce to zero")
                sigma: dict = {}
                for coef, shift, idx in seed:
                    sigma[(idx, shift)] = sigma.get((idx, shift), 0) + coef
                for qq, shift, m in rec:
                    sigma[(m, shift)] = sigma.get((m, shift), 0) - qq
                sigma = {k: c for k, c in sigma.items() if c}
                if sigma:
                    candidates.append(compose(sigma, a_final))

    # rows of I - B*A
    for i in range(q):
        row = {(i, zero): 1}
        ba = compose(b_rows[i], a_final)
        for k, c in ba.items():
            row[k] = row.get(k, 0) - c
        row = {k: c for k, c in row.items() if c}
        if row:
            candidates.append(row)

    out = []
    seen = set()
    for cand in candidates:
        if not cand:
            continue
        check: dict = {}
        for (j, mono), c in cand.items():
            axpy_terms(check, c, mono, columns[j])
        if check:
            raise AssertionError("produced vector is not a syzygy of the columns")
        key = frozenset(cand.items())
        if key not in seen:
            seen.add(key)
            out.append(cand)
    return out


def saturated_basis(columns: list[dict], p: int, nvars: int, deadline=None, var_blocks=None):
    """Strong basis of the saturation of <columns> w.r.t. the product of all
    variables, restricted to the original ring.

    A fresh variable u (index 0 after remapping) is adjoined with the
    relations (u*x_1*...*x_n - 1) * e_j, and eliminated by a block order.
    Returns (basis_entries, order) over the original nvars variables; the
    basis supports membership tests of u-free vectors, hence of the Laurent
    span of the columns.  `var_blocks` optionally block-orders the original
    variables (first block dominant), e.g. to further eliminate a variable
    group from the u-free part.
    """
    def lift(mono):
        return (0,) + mono

    ext_cols = [{(pos, lift(mono)): c for (pos, mono), c in col.items()} for col in columns]
    all_ones = (1,) + (1,) * nvars
    zero = (0,) + (0,) * nvars
    for j in range(p):
        ext_cols.append({(j, all_ones): 1, (j, zero): -1})
    if var_blocks is None:
        var_blocks = [tuple(range(nvars))]
    lifted_blocks = [(0,)] + [tuple(i + 1 for i in b) for b in var_blocks]
    order = TermOrder(nvars + 1, blocks=lifted_blocks)
    gb = buchberger(ext_cols, order, deadline=deadline)
    base_order = TermOrder(nvars, blocks=[tuple(b) for b in var_blocks])
    kept = []
    for e in gb:
        if all(mono[0] == 0 for _, mono in e.vec):
            kept.append(
                _Entry({(pos, mono[1:]): c for (pos, mono), c in e.vec.items()}, base_order)
            )
    kept.sort(key=lambda e: e.key)
    return kept, base_order
