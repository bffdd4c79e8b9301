"""Exact dense linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Dimensions here are desk scale
(at most a few thousand), so plain Gaussian elimination with exact
rationals is both fast enough and trivially correct.  lin_solve verifies
its own answer by back-substitution on every call.
"""

from fractions import Fraction


class ReducedMatrix:
    """Result bundle of mat_reduce: rank, pivot columns, RREF, kernel basis."""

    def __init__(self, rank, pivots, rref, kernel):
        self.rank = rank
        self.pivots = pivots
        self.rref = rref
        self.kernel = kernel


def mat_reduce(rows, ncols=None):
    """Reduced row echelon form with pivot bookkeeping and kernel basis.

    rows: list of rows (lists of Fraction-coercible values).  ncols must be
    given when rows is empty.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        if not m:
            raise ValueError('ncols required for an empty matrix')
        ncols = len(m[0])
    for row in m:
        if len(row) != ncols:
            raise ValueError('ragged matrix')
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    rref = m[:rank]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        kernel.append(vec)
    return ReducedMatrix(rank, pivots, rref, kernel)


class SolveResult:

    def __init__(self, solution, kernel):
        self.solution = solution      # None when inconsistent
        self.kernel = kernel

    @property
    def consistent(self):
        return self.solution is not None

    @property
    def unique(self):
        return self.solution is not None and not self.kernel


def lin_solve(rows, rhs, ncols=None):
    """Solve m x = rhs exactly.

    Returns a SolveResult with one solution (or None if inconsistent) and a
    kernel basis.  The solution is verified by exact back-substitution.
    """
    rows = [list(row) for row in rows]
    rhs = [Fraction(x) for x in rhs]
    if len(rhs) != len(rows):
        raise ValueError('rhs length does not match row count')
    if ncols is None:
        if not rows:
            raise ValueError('ncols required for an empty matrix')
        ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red = mat_reduce(aug, ncols + 1)
    if ncols in red.pivots:
        return SolveResult(None, mat_reduce(rows, ncols).kernel)
    sol = [Fraction(0)] * ncols
    for r, pc in enumerate(red.pivots):
        sol[pc] = red.rref[r][ncols]
    for row, b in zip(rows, rhs):
        acc = sum((Fraction(a) * s for a, s in zip(row, sol)), Fraction(0))
        if acc != b:
            raise AssertionError('back-substitution check failed')
    kernel = [vec[:ncols] for vec in red.kernel if vec[ncols] == 0]
    return SolveResult(sol, kernel)


# ---------------------------------------------------------------------------
# Dict-keyed vectors.  Much of the library works with sparse vectors keyed by
# monomials or operator terms; these helpers translate to dense matrices.

def _key_index(vectors):
    keys = sorted({k for v in vectors for k in v})
    return keys, {k: i for i, k in enumerate(keys)}


def dict_vectors_rank(vectors):
    keys, idx = _key_index(vectors)
    if not keys:
        return 0
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(keys)
        for k, c in v.items():
            row[idx[k]] = Fraction(c)
        rows.append(row)
    return mat_reduce(rows, len(keys)).rank


def dict_vectors_basis(vectors):
    """Subset of the input vectors forming a basis of their span
    (greedy, in input order)."""
    basis = []
    for v in vectors:
        if not v:
            continue
        if dict_vectors_rank(basis + [v]) > len(basis):
            basis.append(v)
    return basis


def solve_in_span(vectors, target):
    """Coefficients c with sum c_i vectors_i = target, or None."""
    keys, idx = _key_index(list(vectors) + [target])
    n = len(vectors)
    rows = [[Fraction(0)] * n for _ in keys]
    rhs = [Fraction(0)] * len(keys)
    for j, v in enumerate(vectors):
        for k, c in v.items():
            rows[idx[k]][j] = Fraction(c)
    for k, c in target.items():
        rhs[idx[k]] = Fraction(c)
    if not keys:
        return [Fraction(0)] * n
    res = lin_solve(rows, rhs, n)
    return res.solution
