"""Exact rational linear algebra: Gaussian elimination, a two-phase simplex
with Bland's rule, Fourier-Motzkin elimination, and integer lattice normal
forms (Smith, Hermite).  Everything runs on Fractions / ints; no floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = list
Mat = list


def frac_vec(v: Iterable) -> list[Fraction]:
    return [Fraction(x) for x in v]


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def primitive_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, preserving direction."""
    fracs = frac_vec(v)
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# Gaussian elimination over Q
# ---------------------------------------------------------------------------

def solve_linear(rows: Mat, rhs: Vec):
    """One exact solution of rows * x = rhs, or None if inconsistent."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [frac_vec(r) + [Fraction(v)] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def nullspace(rows: Mat, n: int) -> list[list[Fraction]]:
    """Basis of {x : rows * x = 0} over Q."""
    m = len(rows)
    a = [frac_vec(r) for r in rows]
    pivots = {}
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots[c] = r
        r += 1
        if r == m:
            break
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for pc, pr in pivots.items():
            v[pc] = -a[pr][fc]
        basis.append(v)
    return basis


def rank(rows: Mat, n: int) -> int:
    return n - len(nullspace(rows, n)) if rows else 0


# ---------------------------------------------------------------------------
# Simplex (exact, Bland's rule)
# ---------------------------------------------------------------------------

class _Tableau:
    """min c.x  s.t.  A x = b, x >= 0, with b >= 0 assumed."""

    def __init__(self, A: Mat, b: Vec, c: Vec, basis: list[int]):
        self.A = A
        self.b = b
        self.c = c
        self.basis = basis
        self.m = len(A)
        self.n = len(c)

    def _reduced_costs(self):
        # y solves y B = c_B via the current tableau being in canonical form:
        # we keep A in canonical form (basis columns = identity), so reduced
        # costs are c_j - sum_i c_basis[i] * A[i][j].
        cb = [self.c[j] for j in self.basis]
        red = list(self.c)
        for i in range(self.m):
            if cb[i] == 0:
                continue
            row = self.A[i]
            for j in range(self.n):
                if row[j]:
                    red[j] -= cb[i] * row[j]
        return red

    def _pivot(self, pr: int, pc: int):
        pv = self.A[pr][pc]
        self.A[pr] = [x / pv for x in self.A[pr]]
        self.b[pr] /= pv
        for i in range(self.m):
            if i != pr and self.A[i][pc] != 0:
                f = self.A[i][pc]
                self.A[i] = [x - f * y for x, y in zip(self.A[i], self.A[pr])]
                self.b[i] -= f * self.b[pr]
        self.basis[pr] = pc

    def run(self):
        """Returns 'optimal' or 'unbounded'; tableau left at the final basis.

        Entering variable: most negative reduced cost for the first pivots
        (fast in practice), then Bland's smallest-index rule, which
        guarantees termination; the switchover point is fixed, so runs stay
        deterministic."""
        pivots = 0
        while True:
            red = self._reduced_costs()
            if pivots < 500:
                pc = None
                for j in range(self.n):
                    if red[j] < 0 and (pc is None or red[j] < red[pc]):
                        pc = j
            else:
                pc = next((j for j in range(self.n) if red[j] < 0), None)
            if pc is None:
                return "optimal"
            best = None
            for i in range(self.m):
                if self.A[i][pc] > 0:
                    ratio = self.b[i] / self.A[i][pc]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self._pivot(best[1], pc)
            pivots += 1

    def solution(self):
        x = [Fraction(0)] * self.n
        for i, j in enumerate(self.basis):
            x[j] = self.b[i]
        return x

    def objective(self):
        return dot(self.c, self.solution())


def simplex(A: Mat, b: Vec, c: Vec):
    """min c.x s.t. A x = b, x >= 0.  Returns (status, x) with status in
    {'optimal', 'infeasible', 'unbounded'}."""
    m = len(A)
    n = len(c)
    A = [frac_vec(row) for row in A]
    b = frac_vec(b)
    c = frac_vec(c)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # phase 1
    art = list(range(n, n + m))
    A1 = [row + [Fraction(int(i == k)) for k in range(m)] for i, row in enumerate(A)]
    c1 = [Fraction(0)] * n + [Fraction(1)] * m
    t = _Tableau(A1, b, c1, list(art))
    t.run()
    if t.objective() != 0:
        return "infeasible", None
    # drive artificials out of the basis where possible
    for i in range(m):
        if t.basis[i] >= n:
            pc = next((j for j in range(n) if t.A[i][j] != 0), None)
            if pc is not None:
                t._pivot(i, pc)
    keep = [i for i in range(m) if t.basis[i] < n]  # rows with artificial basis are redundant
    A2 = [t.A[i][:n] for i in keep]
    b2 = [t.b[i] for i in keep]
    basis2 = [t.basis[i] for i in keep]
    t2 = _Tableau(A2, b2, list(c), basis2)
    status = t2.run()
    if status == "unbounded":
        return "unbounded", None
    return "optimal", t2.solution()


def lp_feasible_point(constraints, num_vars: int):
    """Feasible point of a system over free rational variables, or None.

    `constraints` is a list of (coeffs, sense, rhs) with sense in
    {'<=', '>=', '=='}.  Free variables are split into positive parts
    internally.
    """
    A, b = [], []
    for coeffs, sense, rhs in constraints:
        row = frac_vec(coeffs)
        row = [x for c in row for x in (c, -c)]  # x = x+ - x-
        rhs = Fraction(rhs)
        if sense == "<=":
            A.append(row + [Fraction(1)])
            b.append(rhs)
        elif sense == ">=":
            A.append(row + [Fraction(-1)])
            b.append(rhs)
        elif sense == "==":
            A.append(row + [Fraction(0)])
            b.append(rhs)
        else:
            raise ValueError(f"bad sense {sense!r}")
    if not A:
        return [Fraction(0)] * num_vars
    # one slack column per constraint
    m = len(A)
    full = []
    for i, row in enumerate(A):
        slack = row[-1]
        base = row[:-1]
        srow = [Fraction(0)] * m
        srow[i] = slack
        full.append(base + srow)
    status, x = simplex(full, b, [Fraction(0)] * (2 * num_vars + m))
    if status != "optimal":
        return None
    return [x[2 * j] - x[2 * j + 1] for j in range(num_vars)]


# ---------------------------------------------------------------------------
# Strict positive combinations (Gordan pair), plus an independent checker
# ---------------------------------------------------------------------------

def strict_positive_combination(columns: list[Sequence]):
    """Decide whether some real combination of `columns` is strictly positive.

    Columns are rational K-vectors.  Returns ('feasible', x) with a rational
    witness, or ('infeasible', lam) with a Gordan certificate: lam >= 0,
    lam != 0, and sum_i lam_i * columns[j][i] = 0 for every j.
    """
    if not columns:
        lam = None
    else:
        K = len(columns[0])
        m = len(columns)
        # max t  s.t.  sum_j x_j col_j[i] - t >= 0,  -1 <= x_j <= 1,  t <= 1
        cons = []
        for i in range(K):
            cons.append(([Fraction(columns[j][i]) for j in range(m)] + [Fraction(-1)], ">=", 0))
        for j in range(m):
            e = [Fraction(0)] * (m + 1)
            e[j] = Fraction(1)
            cons.append((list(e), "<=", 1))
            cons.append((list(e), ">=", -1))
        tcol = [Fraction(0)] * (m + 1)
        tcol[m] = Fraction(1)
        cons.append((tcol, "<=", 1))
        point = _maximize_last(cons, m + 1)
        if point is not None and point[m] > 0:
            return "feasible", point[:m]
        lam = None
    # Gordan alternative: lam >= 0, sum lam = 1, lam . col_j = 0 for all j
    K = len(columns[0]) if columns else 0
    if K == 0:
        raise ValueError("need at least one coordinate")
    cons = [([Fraction(1)] * K, "==", 1)]
    for j, col in enumerate(columns):
        cons.append((frac_vec(col), "==", 0))
    for i in range(K):
        e = [Fraction(0)] * K
        e[i] = Fraction(1)
        cons.append((e, ">=", 0))
    lam = lp_feasible_point(cons, K)
    if lam is None:
        raise AssertionError("Gordan alternative failed on both sides")
    return "infeasible", lam


def lp_optimize(constraints, num_vars: int, objective):
    """max objective.x over free rational variables; returns a maximizing
    point, or None if infeasible ('unbounded' raises: callers bound their
    objectives)."""
    A, b = [], []
    m = len(constraints)
    for idx, (coeffs, sense, rhs) in enumerate(constraints):
        row = frac_vec(coeffs)
        row = [x for c in row for x in (c, -c)]
        srow = [Fraction(0)] * m
        if sense == "<=":
            srow[idx] = Fraction(1)
        elif sense == ">=":
            srow[idx] = Fraction(-1)
        elif sense != "==":
            raise ValueError(f"bad sense {sense!r}")
        A.append(row + srow)
        b.append(Fraction(rhs))
    c = [Fraction(0)] * (2 * num_vars + m)
    for j, val in enumerate(frac_vec(objective)):
        c[2 * j] = -val
        c[2 * j + 1] = val
    status, x = simplex(A, b, c)
    if status == "infeasible" or x is None:
        return None
    if status == "unbounded":
        raise ValueError("unbounded objective")
    return [x[2 * j] - x[2 * j + 1] for j in range(num_vars)]


def _maximize_last(constraints, num_vars: int):
    obj = [Fraction(0)] * num_vars
    obj[num_vars - 1] = Fraction(1)
    return lp_optimize(constraints, num_vars, obj)


def fm_strictly_feasible(columns: list[Sequence]) -> bool:
    """Fourier-Motzkin decision of the same system as
    strict_positive_combination; independent of the simplex path."""
    if not columns:
        return False
    K = len(columns[0])
    m = len(columns)
    rows = []
    for i in range(K):
        rows.append(tuple(Fraction(columns[j][i]) for j in range(m)))
    rows = {primitive_vector(r) for r in rows}
    for var in range(m):
        pos = [r for r in rows if r[var] > 0]
        neg = [r for r in rows if r[var] < 0]
        zero = [r for r in rows if r[var] == 0]
        if pos and neg:
            new = set(zero)
            for p in pos:
                for q in neg:
                    comb = tuple(
                        Fraction(pc) * -q[var] + Fraction(qc) * p[var]
                        for pc, qc in zip(p, q)
                    )
                    new.add(primitive_vector(comb))
            rows = new
        else:
            rows = set(zero)  # one-signed rows satisfied by pushing x_var
    return not any(all(x == 0 for x in r) for r in rows)


# ---------------------------------------------------------------------------
# Integer lattices
# ---------------------------------------------------------------------------

def smith_normal_form(A: Mat):
    """Smith normal form: returns (D, U, V) with U*A*V = D, U, V unimodular,
    D diagonal with d_1 | d_2 | ...  All matrices are lists of int lists."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        D[dst] = [a + f * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for row in D:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        # locate minimal nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, m):
            if D[i][t]:
                add_row(t, i, -(D[i][t] // D[t][t]))
                if D[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if D[t][j]:
                add_col(t, j, -(D[t][j] // D[t][t]))
                if D[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility fix-up: D[t][t] must divide everything below-right
        viol = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t]:
                    viol = i
                    break
            if viol is not None:
                break
        if viol is not None:
            add_row(viol, t, 1)
            continue
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


def lattice_rank_and_full(vectors: list[Sequence[int]], n: int):
    """Rank of the lattice generated by `vectors` in Z^n, and whether it is
    all of Z^n.  Returns (rank, is_full)."""
    if n == 0:
        return 0, True
    if not vectors:
        return 0, False
    D, _, _ = smith_normal_form([list(v) for v in vectors])
    diag = [D[i][i] for i in range(min(len(D), n))]
    r = sum(1 for d in diag if d != 0)
    return r, r == n and all(abs(d) == 1 for d in diag[:r])


def hermite_row_basis(vectors: list[Sequence[int]]) -> list[list[int]]:
    """Basis of the row lattice of `vectors` (integer row echelon form)."""
    rows = [list(map(int, v)) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    col = 0
    while col < n and rows:
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            reduced = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                nr = [a - q * b for a, b in zip(r, p)]
                if nr[col] != 0:
                    reduced.append(nr)
                elif any(nr):
                    rest.append(nr)
            live = reduced
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        rows = [r for r in rest if any(r)]
        col += 1
    # reduce entries above pivots for determinism
    for i in range(len(basis) - 1, -1, -1):
        pc = next(j for j in range(n) if basis[i][j] != 0)
        for k in range(i):
            q = basis[k][pc] // basis[i][pc]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def lattice_coordinates(basis_rows: list[Sequence[int]], target: Sequence[int]):
    """Integer coordinates of `target` in the lattice basis, or None."""
    if not basis_rows:
        return [] if not any(target) else None
    cols = [[Fraction(row[j]) for row in basis_rows] for j in range(len(target))]
    sol = solve_linear(cols, [Fraction(t) for t in target])
    if sol is None:
        return None
    if any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]
