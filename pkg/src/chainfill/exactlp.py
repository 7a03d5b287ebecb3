"""Exact rational sparse vectors/matrices and norm-minimizing LP solves.

Everything here is exact: coefficients are `fractions.Fraction`, the simplex
solver pivots over rationals (gmpy2.mpq internally when available, same exact
semantics), and every answer ships with a certificate that is re-verified
before it is returned.  There is no floating point anywhere in this module.

The two entry points mirror the two norms:

* solve_min_l1(D, b): minimize |c|_1 subject to D c = b, via the split
  c = c+ - c- and a two-phase primal simplex.  Optimal results carry an exact
  dual y with y^T b = objective and |D^T y|_inf <= 1; infeasible results carry
  a Farkas row u with u^T D = 0 and u^T b != 0.
* solve_min_linf(D, b): minimize |c|_inf via one bound variable t and one
  inequality row per column.  Optimal duals satisfy y^T b = objective and
  |D^T y|_1 <= 1.

Pivoting uses Bland's anti-cycling rule; among eligible columns the lowest
label lexicographically enters, so solves are bit-for-bit reproducible.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError, InternalInvariantError

try:  # exact fast path; Fraction fallback keeps identical results
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Rational = Fraction

_RAT_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


def rat(value) -> Fraction:
    """Coerce an int, string, or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_str(value)
    raise InputError(f"not an exact rational: {value!r}")


def rational_from_str(s: str) -> Fraction:
    """Parse canonical 'p' or 'p/q' (lowest terms, q > 1); reject anything else."""
    m = _RAT_RE.fullmatch(s)
    if m is None:
        raise InputError(f"malformed rational {s!r}")
    p_txt, q_txt = m.group(1), m.group(2)
    p = int(p_txt)
    if p_txt != str(p):  # catches -0 and leading zeros
        raise InputError(f"non-canonical rational {s!r}")
    if q_txt is None:
        return Fraction(p)
    q = int(q_txt)
    if q_txt != str(q) or q <= 1:
        raise InputError(f"non-canonical rational {s!r}")
    if math.gcd(abs(p), q) != 1:
        raise InputError(f"rational {s!r} is not in lowest terms")
    return Fraction(p, q)


def rational_to_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SparseVec:
    """Finitely supported rational vector keyed by labels; zeros are never stored."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data = {}
        for label, value in items:
            v = rat(value)
            if v != 0:
                data[label] = v
        self.entries = data

    @classmethod
    def zero(cls) -> "SparseVec":
        return cls()

    def get(self, label) -> Fraction:
        return self.entries.get(label, Fraction(0))

    def support(self):
        return set(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def items_sorted(self):
        return sorted(self.entries.items(), key=lambda kv: str(kv[0]))

    def __add__(self, other: "SparseVec") -> "SparseVec":
        data = dict(self.entries)
        for label, v in other.entries.items():
            w = data.get(label, Fraction(0)) + v
            if w == 0:
                data.pop(label, None)
            else:
                data[label] = w
        out = SparseVec.__new__(SparseVec)
        out.entries = data
        return out

    def __neg__(self) -> "SparseVec":
        out = SparseVec.__new__(SparseVec)
        out.entries = {k: -v for k, v in self.entries.items()}
        return out

    def __sub__(self, other: "SparseVec") -> "SparseVec":
        return self + (-other)

    def scale(self, factor) -> "SparseVec":
        f = rat(factor)
        if f == 0:
            return SparseVec()
        out = SparseVec.__new__(SparseVec)
        out.entries = {k: f * v for k, v in self.entries.items()}
        return out

    def dot(self, other: "SparseVec") -> Fraction:
        small, big = self.entries, other.entries
        if len(big) < len(small):
            small, big = big, small
        return sum((v * big[k] for k, v in small.items() if k in big),
                   Fraction(0))

    def l1_norm(self) -> Fraction:
        return sum((abs(v) for v in self.entries.values()), Fraction(0))

    def linf_norm(self) -> Fraction:
        return max((abs(v) for v in self.entries.values()), default=Fraction(0))

    def restrict(self, labels) -> "SparseVec":
        out = SparseVec.__new__(SparseVec)
        out.entries = {k: v for k, v in self.entries.items() if k in labels}
        return out

    def relabel(self, fn) -> "SparseVec":
        """Push through a label map; colliding images are summed (quotient-safe)."""
        out = SparseVec()
        data = out.entries
        for label, v in self.entries.items():
            new = fn(label)
            w = data.get(new, Fraction(0)) + v
            if w == 0:
                data.pop(new, None)
            else:
                data[new] = w
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseVec) and self.entries == other.entries

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {rational_to_str(v)}"
                         for k, v in self.items_sorted())
        return f"SparseVec({{{body}}})"


class SparseMat:
    """Rational matrix with labeled rows/columns, stored column-major and sparse."""

    __slots__ = ("row_labels", "col_labels", "cols", "_rowset")

    def __init__(self, row_labels, col_labels, cols: Mapping):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        if len(set(self.row_labels)) != len(self.row_labels):
            raise InputError("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise InputError("duplicate column labels")
        self._rowset = frozenset(self.row_labels)
        colset = set(self.col_labels)
        out = {}
        for c, column in cols.items():
            if c not in colset:
                raise InputError(f"entry in undeclared column {c!r}")
            clean = {}
            for r, v in column.items():
                if r not in self._rowset:
                    raise InputError(f"entry in undeclared row {r!r}")
                w = rat(v)
                if w != 0:
                    clean[r] = w
            if clean:
                out[c] = clean
        self.cols = out

    @classmethod
    def from_entries(cls, row_labels, col_labels, entries) -> "SparseMat":
        cols: dict = {}
        for r, c, v in entries:
            cols.setdefault(c, {})
            if r in cols[c]:
                raise InputError(f"duplicate entry at ({r}, {c})")
            cols[c][r] = v
        return cls(row_labels, col_labels, cols)

    @classmethod
    def zero(cls, row_labels, col_labels) -> "SparseMat":
        return cls(row_labels, col_labels, {})

    @classmethod
    def identity(cls, labels) -> "SparseMat":
        return cls(labels, labels, {l: {l: Fraction(1)} for l in labels})

    def entry(self, r, c) -> Fraction:
        return self.cols.get(c, {}).get(r, Fraction(0))

    def column(self, c) -> SparseVec:
        if c not in self.col_labels:
            raise InputError(f"no column {c!r}")
        return SparseVec(self.cols.get(c, {}))

    def apply(self, vec: SparseVec) -> SparseVec:
        """Matrix-vector product; vec must live on (a subset of) the columns."""
        acc: dict = {}
        for c, coeff in vec.entries.items():
            col = self.cols.get(c)
            if col is None:
                if c not in self.col_labels:
                    raise InputError(f"vector entry on unknown column {c!r}")
                continue
            for r, v in col.items():
                w = acc.get(r, Fraction(0)) + coeff * v
                if w == 0:
                    acc.pop(r, None)
                else:
                    acc[r] = w
        out = SparseVec.__new__(SparseVec)
        out.entries = acc
        return out

    def transpose(self) -> "SparseMat":
        cols: dict = {}
        for c, column in self.cols.items():
            for r, v in column.items():
                cols.setdefault(r, {})[c] = v
        return SparseMat(self.col_labels, self.row_labels, cols)

    def compose(self, other: "SparseMat") -> "SparseMat":
        """self o other; requires matching inner bases (exact label order)."""
        if self.col_labels != other.row_labels:
            raise InputError("composition shape mismatch")
        cols: dict = {}
        for c in other.cols:
            image = self.apply(other.column(c))
            if not image.is_zero():
                cols[c] = dict(image.entries)
        return SparseMat(self.row_labels, other.col_labels, cols)

    def __add__(self, other: "SparseMat") -> "SparseMat":
        if (self.row_labels != other.row_labels
                or self.col_labels != other.col_labels):
            raise InputError("matrix sum shape mismatch")
        cols: dict = {}
        for c in set(self.cols) | set(other.cols):
            acc = dict(self.cols.get(c, {}))
            for r, v in other.cols.get(c, {}).items():
                w = acc.get(r, Fraction(0)) + v
                if w == 0:
                    acc.pop(r, None)
                else:
                    acc[r] = w
            if acc:
                cols[c] = acc
        return SparseMat(self.row_labels, self.col_labels, cols)

    def scale(self, factor) -> "SparseMat":
        f = rat(factor)
        if f == 0:
            return SparseMat.zero(self.row_labels, self.col_labels)
        return SparseMat(self.row_labels, self.col_labels,
                         {c: {r: f * v for r, v in col.items()}
                          for c, col in self.cols.items()})

    def is_zero(self) -> bool:
        return not self.cols

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def to_dense_rows(self) -> list[list[Fraction]]:
        idx = {r: i for i, r in enumerate(self.row_labels)}
        rows = [[Fraction(0)] * len(self.col_labels)
                for _ in range(len(self.row_labels))]
        for j, c in enumerate(self.col_labels):
            for r, v in self.cols.get(c, {}).items():
                rows[idx[r]][j] = v
        return rows

    def rank(self) -> int:
        return gauss_rank(self.to_dense_rows())

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMat)
                and self.row_labels == other.row_labels
                and self.col_labels == other.col_labels
                and self.cols == other.cols)

    def __repr__(self) -> str:
        return (f"SparseMat({len(self.row_labels)}x{len(self.col_labels)}, "
                f"nnz={self.nnz()})")


# ---------------------------------------------------------------------------
# dense exact elimination helpers (small systems only)

def gauss_rank(rows: list[list[Fraction]]) -> int:
    return _echelon([row[:] for row in rows])[0]


def _echelon(rows):
    """In-place row echelon; returns (rank, pivot column indices)."""
    if not rows:
        return 0, []
    ncols = len(rows[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0),
                   None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots


def solve_square(a_rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve A x = rhs for square A; None when A is singular."""
    n = len(a_rows)
    aug = [a_rows[i][:] + [rhs[i]] for i in range(n)]
    rank, pivots = _echelon(aug)
    if rank < n or pivots[:n] != list(range(n)):
        return None
    return [aug[i][n] for i in range(n)]


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the given rows (vectors of length ncols)."""
    work = [row[:] for row in rows]
    rank, pivots = _echelon(work)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -work[i][f]
        basis.append(vec)
    return basis


def column_space_basis(mat: SparseMat) -> list[list[Fraction]]:
    """Columns of mat forming a basis of its image, as dense row-indexed vectors."""
    rows = mat.to_dense_rows()
    if not rows:
        return []
    _, pivots = _echelon([row[:] for row in rows])
    dense_cols = list(zip(*rows)) if rows else []
    return [list(dense_cols[j]) for j in pivots]


# ---------------------------------------------------------------------------
# revised two-phase primal simplex, exact arithmetic

def _simplex_standard(columns, costs, rhs):
    """min c^T x s.t. A x = rhs, x >= 0, columns already in Bland label order.

    columns: list of (label, {row_index: Fraction}); costs parallel list.
    Returns ("optimal", x: dict label->Fraction, y: list per row) with
    y = c_B^T B^{-1}, or ("infeasible", {}, u) where u is the phase-1 dual:
    u^T A <= 0 columnwise and u^T rhs > 0.
    """
    m = len(rhs)
    n = len(columns)
    sign = [1 if v >= 0 else -1 for v in rhs]
    cols_sc = []
    for _, col in columns:
        cols_sc.append({i: _Q(v.numerator, v.denominator) * sign[i]
                        for i, v in col.items()})
    zero = _Q(0)
    one = _Q(1)
    xb = [_Q(v.numerator, v.denominator) * sign[i]
          for i, v in enumerate(rhs)]
    binv = [[one if i == j else zero for j in range(m)] for i in range(m)]
    basis = [n + i for i in range(m)]  # artificials fill the initial basis
    in_basis = set(basis)
    cost2 = [_Q(c.numerator, c.denominator) for c in costs]

    def column_of(j):
        if j < n:
            return cols_sc[j]
        return {j - n: one}

    def price_and_pivot(cost, allow_artificial):
        while True:
            y = [zero] * m
            for r in range(m):
                cb = cost[basis[r]] if basis[r] < n else (
                    one if allow_artificial else zero)
                if cb != 0:
                    brow = binv[r]
                    for i in range(m):
                        if brow[i] != 0:
                            y[i] += cb * brow[i]
            entering = -1
            limit = n + m if allow_artificial else n
            for j in range(limit):
                if j in in_basis:
                    continue
                cj = cost[j] if j < n else one
                red = cj
                for i, v in column_of(j).items():
                    if y[i] != 0:
                        red -= y[i] * v
                if red < 0:
                    entering = j
                    break
            if entering < 0:
                return y
            w = [zero] * m
            for i, v in column_of(entering).items():
                for r in range(m):
                    if binv[r][i] != 0:
                        w[r] += binv[r][i] * v
            leave = -1
            best = None
            for r in range(m):
                if w[r] > 0:
                    ratio = xb[r] / w[r]
                    if best is None or ratio < best or (
                            ratio == best and basis[r] < basis[leave]):
                        best = ratio
                        leave = r
            if leave < 0:
                raise InternalInvariantError(
                    "unbounded direction in a norm LP; encoding bug")
            piv = w[leave]
            binv[leave] = [v / piv for v in binv[leave]]
            xb[leave] = xb[leave] / piv
            for r in range(m):
                if r != leave and w[r] != 0:
                    f = w[r]
                    brow, prow = binv[r], binv[leave]
                    binv[r] = [a - f * b for a, b in zip(brow, prow)]
                    xb[r] -= f * xb[leave]
            in_basis.discard(basis[leave])
            in_basis.add(entering)
            basis[leave] = entering

    # phase 1: drive the artificial total to zero
    cost1 = [zero] * n
    y1 = price_and_pivot(cost1, allow_artificial=True)
    infeas = sum((xb[r] for r in range(m) if basis[r] >= n), zero)
    if infeas > 0:
        u = [Fraction(int((y1[i] * sign[i]).numerator),
                      int((y1[i] * sign[i]).denominator))
             for i in range(m)]
        return "infeasible", {}, u

    # phase 2: artificials stay banned from entering
    y2 = price_and_pivot(cost2, allow_artificial=False)
    x: dict = {}
    for r in range(m):
        if basis[r] < n and xb[r] != 0:
            x[columns[basis[r]][0]] = Fraction(int(xb[r].numerator),
                                               int(xb[r].denominator))
    y = [Fraction(int((y2[i] * sign[i]).numerator),
                  int((y2[i] * sign[i]).denominator)) for i in range(m)]
    return "optimal", x, y


@dataclass(frozen=True)
class FillResult:
    """Outcome of a norm-minimizing fill; exactly one certificate is present."""

    status: str                      # "Optimal" | "Infeasible"
    objective: Fraction | None
    solution: SparseVec | None       # over the matrix's column labels
    dual_certificate: SparseVec | None
    farkas_certificate: SparseVec | None


def _check_labels(mat: SparseMat, b: SparseVec):
    missing = b.support() - set(mat.row_labels)
    if missing:
        raise InputError(f"rhs entries outside the row space: {sorted(map(str, missing))}")


def _verify_farkas(mat: SparseMat, b: SparseVec, u: SparseVec):
    for c in mat.col_labels:
        if u.dot(mat.column(c)) != 0:
            raise InternalInvariantError("Farkas row does not annihilate D")
    if u.dot(b) == 0:
        raise InternalInvariantError("Farkas row orthogonal to b")


def solve_min_l1(mat: SparseMat, b: SparseVec) -> FillResult:
    """Minimize |c|_1 over D c = b, with exact optimality/Farkas certificates."""
    _check_labels(mat, b)
    row_order = list(mat.row_labels)
    ridx = {r: i for i, r in enumerate(row_order)}
    sorted_cols = sorted(mat.col_labels)
    columns = []
    costs = []
    for s in ("+", "-"):
        flip = 1 if s == "+" else -1
        for c in sorted_cols:
            col = {ridx[r]: flip * v for r, v in mat.cols.get(c, {}).items()}
            columns.append(((s, c), col))
            costs.append(Fraction(1))
    rhs = [b.get(r) for r in row_order]
    status, x, y = _simplex_standard(columns, costs, rhs)
    if status == "infeasible":
        u = SparseVec({row_order[i]: y[i] for i in range(len(row_order))})
        _verify_farkas(mat, b, u)
        return FillResult("Infeasible", None, None, None, u)
    sol = SparseVec()
    for (s, c), v in x.items():
        sol.entries[c] = sol.entries.get(c, Fraction(0)) + (v if s == "+" else -v)
    sol = SparseVec(sol.entries)
    objective = sum(x.values(), Fraction(0))
    dual = SparseVec({row_order[i]: y[i] for i in range(len(row_order))})
    if mat.apply(sol) != b:
        raise InternalInvariantError("primal solution does not satisfy D c = b")
    if sol.l1_norm() != objective:
        raise InternalInvariantError("objective drifted from |c|_1")
    if dual.dot(b) != objective:
        raise InternalInvariantError("strong duality failed")
    for c in mat.col_labels:
        if abs(dual.dot(mat.column(c))) > 1:
            raise InternalInvariantError("dual certificate violates |D^T y| <= 1")
    return FillResult("Optimal", objective, sol, dual, None)


def solve_min_linf(mat: SparseMat, b: SparseVec) -> FillResult:
    """Minimize |c|_inf over D c = b; one bound variable t, one row per column."""
    _check_labels(mat, b)
    eq_rows = [("eq", r) for r in mat.row_labels]
    bd_rows = [("bd", c) for c in sorted(mat.col_labels)]
    row_order = eq_rows + bd_rows
    ridx = {r: i for i, r in enumerate(row_order)}
    sorted_cols = sorted(mat.col_labels)
    columns = []
    costs = []
    for s in ("+", "-"):
        flip = 1 if s == "+" else -1
        for c in sorted_cols:
            col = {ridx[("eq", r)]: flip * v
                   for r, v in mat.cols.get(c, {}).items()}
            col[ridx[("bd", c)]] = Fraction(1)
            columns.append(((s, c), col))
            costs.append(Fraction(0))
    for c in sorted_cols:
        columns.append((("s", c), {ridx[("bd", c)]: Fraction(1)}))
        costs.append(Fraction(0))
    columns.append((("t",), {ridx[("bd", c)]: Fraction(-1)
                             for c in sorted_cols}))
    costs.append(Fraction(1))
    rhs = [b.get(r) if kind == "eq" else Fraction(0)
           for kind, r in row_order]
    status, x, y = _simplex_standard(columns, costs, rhs)
    if status == "infeasible":
        u = SparseVec({r: y[ridx[("eq", r)]] for r in mat.row_labels})
        _verify_farkas(mat, b, u)
        return FillResult("Infeasible", None, None, None, u)
    sol = SparseVec()
    for key, v in x.items():
        if key[0] == "+":
            sol.entries[key[1]] = sol.entries.get(key[1], Fraction(0)) + v
        elif key[0] == "-":
            sol.entries[key[1]] = sol.entries.get(key[1], Fraction(0)) - v
    sol = SparseVec(sol.entries)
    objective = x.get(("t",), Fraction(0))
    dual = SparseVec({r: y[ridx[("eq", r)]] for r in mat.row_labels})
    if mat.apply(sol) != b:
        raise InternalInvariantError("primal solution does not satisfy D c = b")
    if sol.linf_norm() != objective:
        raise InternalInvariantError("objective drifted from |c|_inf")
    if dual.dot(b) != objective:
        raise InternalInvariantError("strong duality failed")
    weight = sum((abs(dual.dot(mat.column(c))) for c in mat.col_labels),
                 Fraction(0))
    if weight > 1:
        raise InternalInvariantError("dual certificate violates |D^T y|_1 <= 1")
    return FillResult("Optimal", objective, sol, dual, None)


@dataclass(frozen=True)
class RegressionResult:
    """Best approximation of z from the image of D, with an exact certificate."""

    objective: Fraction
    coefficients: SparseVec      # c attaining the minimum
    residual: SparseVec          # z - D c
    certificate: SparseVec       # u with D^T u = 0, u^T z = objective


def solve_l1_regression(mat: SparseMat, z: SparseVec) -> RegressionResult:
    """Minimize |z - D c|_1 over all c (always feasible).

    Certificate: u with D^T u = 0, |u|_inf <= 1 and u^T z = objective, which
    proves the minimum exactly (it lower-bounds every residual).
    """
    _check_labels(mat, z)
    row_order = list(mat.row_labels)
    ridx = {r: i for i, r in enumerate(row_order)}
    sorted_cols = sorted(mat.col_labels)
    columns = []
    costs = []
    for s in ("+", "-"):
        flip = 1 if s == "+" else -1
        for c in sorted_cols:
            col = {ridx[r]: flip * v for r, v in mat.cols.get(c, {}).items()}
            columns.append(((s, "x", c), col))
            costs.append(Fraction(0))
        for r in row_order:
            columns.append(((s, "w", r), {ridx[r]: Fraction(flip)}))
            costs.append(Fraction(1))
    rhs = [z.get(r) for r in row_order]
    status, x, y = _simplex_standard(columns, costs, rhs)
    if status != "optimal":
        raise InternalInvariantError("regression LP cannot be infeasible")
    coeff = SparseVec()
    for key, v in x.items():
        if key[1] == "x":
            c = key[2]
            coeff.entries[c] = coeff.entries.get(c, Fraction(0)) + (
                v if key[0] == "+" else -v)
    coeff = SparseVec(coeff.entries)
    residual = z - mat.apply(coeff)
    objective = sum((v for key, v in x.items() if key[1] == "w"), Fraction(0))
    u = SparseVec({row_order[i]: y[i] for i in range(len(row_order))})
    if residual.l1_norm() != objective:
        raise InternalInvariantError("objective drifted from |z - D c|_1")
    if u.dot(z) != objective or u.linf_norm() > 1:
        raise InternalInvariantError("regression certificate failed")
    for c in mat.col_labels:
        if u.dot(mat.column(c)) != 0:
            raise InternalInvariantError("regression certificate not in ker D^T")
    return RegressionResult(objective, coeff, residual, u)


def solve_linf_regression(mat: SparseMat, z: SparseVec) -> RegressionResult:
    """Minimize |z - D c|_inf over all c (always feasible).

    Certificate: u with D^T u = 0, |u|_1 <= 1 and u^T z = objective.
    """
    _check_labels(mat, z)
    up_rows = [("up", r) for r in mat.row_labels]
    lo_rows = [("lo", r) for r in mat.row_labels]
    row_order = up_rows + lo_rows
    ridx = {r: i for i, r in enumerate(row_order)}
    sorted_cols = sorted(mat.col_labels)
    columns = []
    costs = []
    for s in ("+", "-"):
        flip = 1 if s == "+" else -1
        for c in sorted_cols:
            col = {}
            for r, v in mat.cols.get(c, {}).items():
                col[ridx[("up", r)]] = flip * v
                col[ridx[("lo", r)]] = flip * v
            columns.append(((s, "x", c), col))
            costs.append(Fraction(0))
    for r in mat.row_labels:
        columns.append((("s", "up", r), {ridx[("up", r)]: Fraction(-1)}))
        costs.append(Fraction(0))
        columns.append((("s", "lo", r), {ridx[("lo", r)]: Fraction(1)}))
        costs.append(Fraction(0))
    columns.append((("t",), {**{ridx[("up", r)]: Fraction(1)
                                for r in mat.row_labels},
                             **{ridx[("lo", r)]: Fraction(-1)
                                for r in mat.row_labels}}))
    costs.append(Fraction(1))
    rhs = [z.get(r) for kind, r in row_order]
    status, x, y = _simplex_standard(columns, costs, rhs)
    if status != "optimal":
        raise InternalInvariantError("regression LP cannot be infeasible")
    coeff = SparseVec()
    for key, v in x.items():
        if key[0] in ("+", "-") and key[1] == "x":
            c = key[2]
            coeff.entries[c] = coeff.entries.get(c, Fraction(0)) + (
                v if key[0] == "+" else -v)
    coeff = SparseVec(coeff.entries)
    residual = z - mat.apply(coeff)
    objective = x.get(("t",), Fraction(0))
    u = SparseVec({r: y[ridx[("up", r)]] + y[ridx[("lo", r)]]
                   for r in mat.row_labels})
    if residual.linf_norm() != objective:
        raise InternalInvariantError("objective drifted from |z - D c|_inf")
    if u.dot(z) != objective or u.l1_norm() > 1:
        raise InternalInvariantError("regression certificate failed")
    for c in mat.col_labels:
        if u.dot(mat.column(c)) != 0:
            raise InternalInvariantError("regression certificate not in ker D^T")
    return RegressionResult(objective, coeff, residual, u)


def operator_norm(mat: SparseMat, kind: str) -> Fraction:
    """Exact operator norm: 'l1_to_l1' = max column l1, 'linf_to_linf' = max row l1."""
    if kind == "l1_to_l1":
        return max((sum((abs(v) for v in col.values()), Fraction(0))
                    for col in mat.cols.values()), default=Fraction(0))
    if kind == "linf_to_linf":
        acc: dict = {}
        for col in mat.cols.values():
            for r, v in col.items():
                acc[r] = acc.get(r, Fraction(0)) + abs(v)
        return max(acc.values(), default=Fraction(0))
    raise InputError(f"unknown operator norm kind {kind!r}")
