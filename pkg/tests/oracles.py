"""Independent brute-force oracles for the LP and constant computations.

Everything here avoids the package's simplex and vertex-enumeration code
paths on purpose: linear systems go through a local elimination routine,
minimal fillings come from exhaustive basic-solution enumeration, and the
unit-ball sections of a boundary image are cut out in ambient coordinates by
cokernel equations.  Slow but written to be obviously correct on the small
fixtures the tests use.
"""

from fractions import Fraction
from itertools import combinations


def solve_unique(rows, rhs, nvars):
    """Solve rows . x = rhs exactly; return x only if it exists and is unique."""
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    rank = 0
    for col in range(nvars):
        piv = next((i for i in range(rank, len(aug)) if aug[i][col] != 0),
                   None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = Fraction(1) / aug[rank][col]
        aug[rank] = [v * inv for v in aug[rank]]
        for i in range(len(aug)):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(aug)):
        if aug[i][nvars] != 0:
            return None  # inconsistent
    if rank < nvars:
        return None  # underdetermined
    x = [Fraction(0)] * nvars
    for i, col in enumerate(pivots):
        x[col] = aug[i][nvars]
    return x


def rank_of(rows, nvars):
    work = [list(r) for r in rows]
    rank = 0
    for col in range(nvars):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0),
                   None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = Fraction(1) / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def kernel_basis(rows, nvars):
    """Basis of the nullspace of the row system, as dense vectors."""
    work = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(nvars):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0),
                   None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = Fraction(1) / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nvars
        v[f] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -work[i][f]
        basis.append(v)
    return basis


def bf_min_l1(dense, b):
    """min |c|_1 with D c = b by enumerating independent column subsets.

    dense is row-major.  Returns the optimal value or None when infeasible.
    An optimal vertex of the split-variable LP uses an independent column
    set of size at most rank(D), so the scan is complete.
    """
    m = len(dense)
    n = len(dense[0]) if m else 0
    cols = [[dense[i][j] for i in range(m)] for j in range(n)]
    full = rank_of(dense, n)
    aug_rank = rank_of([row + [bv] for row, bv in zip(dense, b)], n + 1) \
        if m else 0
    if m and aug_rank > full:
        return None
    if all(v == 0 for v in b):
        return Fraction(0)
    best = None
    for size in range(1, full + 1):
        for subset in combinations(range(n), size):
            rows = [[cols[j][i] for j in subset] for i in range(m)]
            x = solve_unique(rows, b, size)
            if x is None:
                continue
            val = sum(abs(v) for v in x)
            if best is None or val < best:
                best = val
    return best


def bf_min_linf(dense, b):
    """min |c|_inf with D c = b by enumerating vertices of the lifted
    polyhedron {(c, t) : D c = b, -t <= c_j <= t}.

    A vertex is pinned by the equalities plus enough active bound rows;
    every subset of bound rows with a unique joint solution is tried.
    Returns the optimal value or None when infeasible.
    """
    m = len(dense)
    n = len(dense[0]) if m else 0
    aug_rank = rank_of([row + [bv] for row, bv in zip(dense, b)], n + 1) \
        if m else 0
    if m and aug_rank > rank_of(dense, n):
        return None
    if all(v == 0 for v in b):
        return Fraction(0)
    d = rank_of(dense, n)
    need = n + 1 - d  # active bounds at a vertex of the lifted polyhedron
    best = None
    for subset in combinations(range(n), min(need, n)):
        for bits in range(1 << len(subset)):
            rows = [list(r) + [Fraction(0)] for r in dense]
            rhs = list(b)
            for pos, j in enumerate(subset):
                row = [Fraction(0)] * (n + 1)
                row[j] = Fraction(1)
                row[n] = Fraction(1) if (bits >> pos) & 1 else Fraction(-1)
                rows.append(row)
                rhs.append(Fraction(0))
            x = solve_unique(rows, rhs, n + 1)
            if x is None:
                continue
            t = x[n]
            if t < 0 or any(abs(v) > t for v in x[:n]):
                continue
            if best is None or t < best:
                best = t
    return best


def _cokernel(image_dense):
    """Rows cutting out the span of the given dense column vectors."""
    d = len(image_dense)
    n = len(image_dense[0]) if d else 0
    # x in span  <=>  u . x = 0 for every u with u . M_j = 0 for all j
    rows = [[image_dense[j][i] for i in range(n)] for j in range(d)]
    return kernel_basis(rows, n)


def bf_l1_section_vertices(image_dense):
    """Vertices of {x in span : |x|_1 <= 1}, one per +- pair, by scanning
    supports: a vertex spans the unique direction supported inside its
    support set."""
    d = len(image_dense)
    n = len(image_dense[0]) if d else 0
    if d == 0:
        return []
    coker = _cokernel(image_dense)
    found = {}
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            outside = [j for j in range(n) if j not in support]
            rows = [list(r) for r in coker]
            for j in outside:
                row = [Fraction(0)] * n
                row[j] = Fraction(1)
                rows.append(row)
            kern = kernel_basis(rows, n)
            if len(kern) != 1:
                continue
            x = kern[0]
            if any(x[j] == 0 for j in support):
                continue  # support not exact: smaller circuit exists
            norm = sum(abs(v) for v in x)
            x = [v / norm for v in x]
            lead = next(v for v in x if v != 0)
            if lead < 0:
                x = [-v for v in x]
            found[tuple(x)] = x
    return [found[k] for k in sorted(found)]


def bf_linf_section_vertices(image_dense):
    """Vertices of {x in span : |x|_inf <= 1}, one per +- pair, pinned in
    ambient coordinates by the cokernel equations plus active bounds."""
    d = len(image_dense)
    n = len(image_dense[0]) if d else 0
    if d == 0:
        return []
    coker = _cokernel(image_dense)
    found = {}
    for subset in combinations(range(n), d):
        for bits in range(1 << d):
            rows = [list(r) for r in coker]
            rhs = [Fraction(0)] * len(coker)
            for pos, j in enumerate(subset):
                row = [Fraction(0)] * n
                row[j] = Fraction(1)
                rows.append(row)
                rhs.append(Fraction(1) if (bits >> pos) & 1 else Fraction(-1))
            x = solve_unique(rows, rhs, n)
            if x is None:
                continue
            if any(abs(v) > 1 for v in x):
                continue
            lead = next((v for v in x if v != 0), None)
            if lead is None:
                continue
            if lead < 0:
                x = [-v for v in x]
            found[tuple(x)] = x
    return [found[k] for k in sorted(found)]


def bf_ubc(dense, flavor):
    """Optimal filling constant of the boundary matrix, brute force:
    max over unit-ball section vertices of the brute-force fill."""
    m = len(dense)
    n = len(dense[0]) if m else 0
    # image basis: pivot columns of the column echelon
    pivots = []
    work = [list(r) for r in dense]
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = Fraction(1) / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for i in range(m):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    image = [[dense[i][j] for i in range(m)] for j in pivots]
    if flavor == "l1":
        vertices = bf_l1_section_vertices(image)
        fill = bf_min_l1
    else:
        vertices = bf_linf_section_vertices(image)
        fill = bf_min_linf
    best = Fraction(0)
    for x in vertices:
        val = fill(dense, x)
        assert val is not None
        if val > best:
            best = val
    return best
