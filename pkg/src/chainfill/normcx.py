"""Finite normed (co)chain complexes with exact norm computations.

A complex stores one ordered label basis per degree and one sparse rational
matrix per source degree (chain complexes map degree k to k-1, cochain
complexes to k+1).  Everything downstream of the boundary maps is exact:
validation checks the composite of consecutive maps entry by entry, filling
norms and homology seminorms are LP solves from `exactlp`, and the optimal
boundary-condition constants in exact mode come from a provably complete
vertex enumeration of the unit-ball slice of the boundary image.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .detrand import XorShift64Star
from .errors import InputError, InternalInvariantError, NonComplexError, NotACycleError
from .exactlp import (
    FillResult,
    SparseMat,
    SparseVec,
    column_space_basis,
    nullspace,
    operator_norm,
    rat,
    solve_l1_regression,
    solve_linf_regression,
    solve_min_l1,
    solve_min_linf,
    solve_square,
)

DIRECTIONS = ("chain", "cochain")
FLAVORS = ("l1", "linf")

_LABEL_RE = re.compile(r"[A-Za-z0-9_|.\-]+")

EXACT_MODE = "ExactOnFiniteComplex"
SAMPLED_MODE = "SampledLowerBound"

# hard cap on the boundary-image dimension handled by exact enumeration
EXACT_DIM_CAP = 8
_ENUM_BUDGET = 5_000_000


def _check_label(label: str):
    if not isinstance(label, str) or _LABEL_RE.fullmatch(label) is None:
        raise InputError(f"bad basis label {label!r}")


@dataclass
class NormedComplex:
    """Labeled bases per degree plus boundary maps, with a fixed norm flavor."""

    name: str
    direction: str
    norm_flavor: str
    basis: dict[int, tuple[str, ...]]
    maps: dict[int, SparseMat]
    _validated: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise InputError(f"direction must be one of {DIRECTIONS}")
        if self.norm_flavor not in FLAVORS:
            raise InputError(f"norm flavor must be one of {FLAVORS}")
        self.basis = {int(k): tuple(v) for k, v in self.basis.items()}
        for k, labels in self.basis.items():
            for l in labels:
                _check_label(l)
            if len(set(labels)) != len(labels):
                raise InputError(f"duplicate labels in degree {k}")
        for k, mat in self.maps.items():
            if k not in self.basis:
                raise InputError(f"map out of undeclared degree {k}")
            t = self.target_degree(k)
            if t not in self.basis:
                raise InputError(f"map out of degree {k} lands in undeclared "
                                 f"degree {t}")
            if mat.col_labels != self.basis[k]:
                raise InputError(f"map out of degree {k} has wrong columns")
            if mat.row_labels != self.basis[t]:
                raise InputError(f"map out of degree {k} has wrong rows")

    def target_degree(self, k: int) -> int:
        return k - 1 if self.direction == "chain" else k + 1

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, k: int) -> int:
        return len(self.basis.get(k, ()))

    def boundary_out(self, k: int) -> SparseMat | None:
        return self.maps.get(k)

    def boundary_into(self, k: int) -> SparseMat | None:
        """The map whose image lives in degree k (the fill direction)."""
        src = k + 1 if self.direction == "chain" else k - 1
        return self.maps.get(src)

    def chain_norm(self, vec: SparseVec) -> Fraction:
        return vec.l1_norm() if self.norm_flavor == "l1" else vec.linf_norm()


def validate_complex(cx: NormedComplex):
    """Exact check that consecutive boundary maps compose to zero."""
    if cx._validated:
        return
    for k, mat in cx.maps.items():
        t = cx.target_degree(k)
        nxt = cx.maps.get(t)
        if nxt is None:
            continue
        comp = nxt.compose(mat)
        if not comp.is_zero():
            col = sorted(comp.cols)[0]
            row = sorted(comp.cols[col])[0]
            raise NonComplexError(k, (row, col, comp.cols[col][row]))
    cx._validated = True


def _fill_matrix(cx: NormedComplex, k: int) -> SparseMat:
    if k not in cx.basis:
        raise InputError(f"complex has no degree {k}")
    mat = cx.boundary_into(k)
    if mat is None:
        return SparseMat.zero(cx.basis[k], ())
    return mat


def fill_norm(cx: NormedComplex, k: int, b: SparseVec) -> FillResult:
    """Minimal-norm filling of b by a chain one step up the fill direction."""
    validate_complex(cx)
    if not b.support() <= set(cx.basis.get(k, ())):
        raise InputError(f"chain is not supported in degree {k}")
    mat = _fill_matrix(cx, k)
    solve = solve_min_l1 if cx.norm_flavor == "l1" else solve_min_linf
    return solve(mat, b)


def homology_seminorm(cx: NormedComplex, k: int, z: SparseVec) -> Fraction:
    """Exact distance of the cycle z from the boundaries in degree k."""
    validate_complex(cx)
    if not z.support() <= set(cx.basis.get(k, ())):
        raise InputError(f"chain is not supported in degree {k}")
    out = cx.boundary_out(k)
    if out is not None:
        dz = out.apply(z)
        if not dz.is_zero():
            raise NotACycleError(k, dz.items_sorted()[0])
    mat = _fill_matrix(cx, k)
    if cx.norm_flavor == "l1":
        return solve_l1_regression(mat, z).objective
    return solve_linf_regression(mat, z).objective


@dataclass(frozen=True)
class ConstantEstimate:
    """A boundary-condition constant: exact value or sampled lower bound."""

    value: Fraction
    mode: str
    witnesses: tuple  # pairs (b, fill_norm) with value attained on one of them


def _image_ball_vertices_l1(dense_basis: list[list[Fraction]]):
    """Vertices of {x in im D : |x|_1 <= 1}, one representative per +- pair.

    These are exactly the normalized minimal-support vectors of the image:
    at a vertex the active face of the cross-polytope must pin the point,
    which forces dim(im D restricted to the support) = 1, and conversely.
    Every such vector shows up as the kernel of d-1 independent coordinate
    rows, so scanning row subsets is complete.
    """
    d = len(dense_basis)
    n = len(dense_basis[0]) if d else 0
    if d == 0:
        return []
    rows = [[dense_basis[j][i] for j in range(d)] for i in range(n)]
    if math.comb(n, d - 1) > _ENUM_BUDGET:
        raise InputError("exact enumeration too large; use sampled mode")
    seen = {}
    for subset in combinations(range(n), d - 1):
        kernel = nullspace([rows[i] for i in subset], d)
        if len(kernel) != 1:
            continue
        t = kernel[0]
        x = [sum(rows[i][j] * t[j] for j in range(d)) for i in range(n)]
        norm = sum(abs(v) for v in x)
        if norm == 0:
            raise InternalInvariantError("zero vector from a rank-(d-1) kernel")
        x = [v / norm for v in x]
        lead = next(v for v in x if v != 0)
        if lead < 0:
            x = [-v for v in x]
        seen[tuple(x)] = x
    return [seen[key] for key in sorted(seen)]


def _image_ball_vertices_linf(dense_basis: list[list[Fraction]]):
    """Vertices of {x in im D : |x|_inf <= 1}, one representative per +- pair.

    A vertex is pinned by d linearly independent active bound rows, so it
    solves M_T t = s for some d-subset T of rows and sign pattern s; scanning
    all such systems and keeping the feasible solutions is complete.
    """
    d = len(dense_basis)
    n = len(dense_basis[0]) if d else 0
    if d == 0:
        return []
    rows = [[dense_basis[j][i] for j in range(d)] for i in range(n)]
    if math.comb(n, d) * (1 << max(d - 1, 0)) > _ENUM_BUDGET:
        raise InputError("exact enumeration too large; use sampled mode")
    seen = {}
    for subset in combinations(range(n), d):
        sub = [rows[i] for i in subset]
        for bits in range(1 << (d - 1)):
            signs = [Fraction(1)]
            signs += [Fraction(1) if (bits >> i) & 1 == 0 else Fraction(-1)
                      for i in range(d - 1)]
            t = solve_square(sub, signs)
            if t is None:
                break  # singular for one sign pattern means singular for all
            x = [sum(rows[i][j] * t[j] for j in range(d)) for i in range(n)]
            if any(abs(v) > 1 for v in x):
                continue
            lead = next((v for v in x if v != 0), None)
            if lead is None:
                continue
            if lead < 0:
                x = [-v for v in x]
            seen[tuple(x)] = x
    return [seen[key] for key in sorted(seen)]


def ubc_constant(cx: NormedComplex, k: int, mode: str = "auto",
                 samples: int = 200, seed: int = 0,
                 support: int = 8) -> ConstantEstimate:
    """Optimal constant K with: every boundary b in degree k admits a filling
    c with |c| <= K |b|.  Exact mode maximizes the fill norm over the vertices
    of the unit-ball slice of the boundary image (complete for image dimension
    <= EXACT_DIM_CAP); sampled mode reports the best ratio over pseudorandom
    boundaries and is only a lower bound.
    """
    validate_complex(cx)
    if k not in cx.basis:
        raise InputError(f"complex has no degree {k}")
    if mode not in ("exact", "sampled", "auto"):
        raise InputError("mode must be exact, sampled, or auto")
    mat = cx.boundary_into(k)
    if mat is None or not mat.cols:
        return ConstantEstimate(Fraction(0), EXACT_MODE, ())

    if mode in ("exact", "auto"):
        basis_cols = column_space_basis(mat)
        d = len(basis_cols)
        if d <= EXACT_DIM_CAP:
            return _ubc_exact(cx, k, mat, basis_cols)
        if mode == "exact":
            raise InputError(
                f"boundary image has dimension {d} > {EXACT_DIM_CAP}; "
                "exact enumeration refused, use sampled mode")
    return _ubc_sampled(cx, k, mat, samples, seed, support)


def _ubc_exact(cx, k, mat, basis_cols) -> ConstantEstimate:
    if cx.norm_flavor == "l1":
        vertices = _image_ball_vertices_l1(basis_cols)
    else:
        vertices = _image_ball_vertices_linf(basis_cols)
    best = Fraction(0)
    witnesses = []
    rows = mat.row_labels
    for x in vertices:
        b = SparseVec({rows[i]: v for i, v in enumerate(x)})
        res = fill_norm(cx, k, b)
        if res.status != "Optimal":
            raise InternalInvariantError("image vertex failed to fill")
        witnesses.append((b, res.objective))
        if res.objective > best:
            best = res.objective
    witnesses.sort(key=lambda w: (-w[1], str(sorted(w[0].entries))))
    return ConstantEstimate(best, EXACT_MODE, tuple(witnesses))


def _ubc_sampled(cx, k, mat, samples, seed, support) -> ConstantEstimate:
    fill_basis = mat.col_labels
    if not fill_basis:
        return ConstantEstimate(Fraction(0), EXACT_MODE, ())
    rng = XorShift64Star(seed)
    coeffs = (Fraction(-3), Fraction(-2), Fraction(-1),
              Fraction(1), Fraction(2), Fraction(3))
    best = Fraction(0)
    witness = None
    for _ in range(samples):
        size = min(support, len(fill_basis))
        idx = rng.sample_distinct(len(fill_basis), size)
        c = SparseVec({fill_basis[i]: coeffs[rng.below(6)] for i in idx})
        b = mat.apply(c)
        if b.is_zero():
            continue
        res = fill_norm(cx, k, b)
        if res.status != "Optimal":
            raise InternalInvariantError("boundary of a chain failed to fill")
        ratio = res.objective / cx.chain_norm(b)
        if witness is None or ratio > best:
            best = ratio
            witness = (b, res.objective)
    return ConstantEstimate(best, SAMPLED_MODE,
                            (witness,) if witness is not None else ())


def uubc_constant(family, k: int, mode: str = "auto", samples: int = 200,
                  seed: int = 0) -> ConstantEstimate:
    """Uniform constant over a finite collection: the max of the members'."""
    members = list(family)
    if not members:
        raise InputError("uniform constant of an empty collection")
    best = None
    all_exact = True
    for cx in members:
        est = ubc_constant(cx, k, mode=mode, samples=samples, seed=seed)
        all_exact = all_exact and est.mode == EXACT_MODE
        if best is None or est.value > best.value:
            best = est
    return ConstantEstimate(best.value,
                            EXACT_MODE if all_exact else SAMPLED_MODE,
                            best.witnesses)


def inherited_ubc_constant(constant: Fraction, f_norm, g_norm,
                           h_norm) -> Fraction:
    """Constant transported through a homotopy equivalence with known norms."""
    k, f, g, h = rat(constant), rat(f_norm), rat(g_norm), rat(h_norm)
    for v in (k, f, g, h):
        if v < 0:
            raise InputError("norms and constants must be nonnegative")
    return f * g * k + h


@dataclass
class CochainMap:
    """Degree-wise map between complexes; shift 0 means it must commute with
    the boundaries, shift +-1 is reserved for homotopy components."""

    name: str
    source: NormedComplex
    target: NormedComplex
    components: dict[int, SparseMat]
    shift: int = 0

    def __post_init__(self):
        for k, mat in self.components.items():
            tk = k + self.shift
            if k not in self.source.basis or tk not in self.target.basis:
                raise InputError(f"component at degree {k} out of range")
            if mat.col_labels != self.source.basis[k]:
                raise InputError(f"component {k} has wrong columns")
            if mat.row_labels != self.target.basis[tk]:
                raise InputError(f"component {k} has wrong rows")

    def apply(self, k: int, vec: SparseVec) -> SparseVec:
        mat = self.components.get(k)
        if mat is None:
            raise InputError(f"no component in degree {k}")
        return mat.apply(vec)

    def norm(self) -> Fraction:
        kind = "l1_to_l1" if self.source.norm_flavor == "l1" else "linf_to_linf"
        return max((operator_norm(m, kind) for m in self.components.values()),
                   default=Fraction(0))


def validate_cochain_map(f: CochainMap):
    """For shift-0 maps, check the commuting squares exactly."""
    if f.shift != 0:
        return
    if f.source.direction != f.target.direction:
        raise InputError("map between complexes of different directions")
    for k, comp in f.components.items():
        src_map = f.source.maps.get(k)
        tk = f.source.target_degree(k)
        nxt = f.components.get(tk)
        if src_map is None or nxt is None:
            continue
        tgt_map = f.target.maps.get(k)
        if tgt_map is None:
            raise InputError(f"target lacks the map out of degree {k}")
        if tgt_map.compose(comp) != nxt.compose(src_map):
            raise InternalInvariantError(
                f"{f.name}: square at degree {k} does not commute")


def bounded_product(family, name: str = "product") -> NormedComplex:
    """Degree-wise product of a finite family with the sup-combined norm.

    All members must share a direction.  The sup of l1 norms over several
    blocks is not an l1 or linf basis norm, so multi-member families are
    required to be linf; a singleton keeps its own flavor.
    """
    members = list(family)
    if not members:
        raise InputError("bounded product of an empty family")
    direction = members[0].direction
    if any(m.direction != direction for m in members):
        raise InputError("bounded product members must share a direction")
    if len(members) == 1:
        flavor = members[0].norm_flavor
    else:
        if any(m.norm_flavor != "linf" for m in members):
            raise InputError("multi-member bounded products need linf members "
                             "(sup of l1 blocks is not a basis norm)")
        flavor = "linf"
    for m in members:
        validate_complex(m)
    degrees = sorted({k for m in members for k in m.basis})
    basis = {}
    for k in degrees:
        labels = []
        for i, m in enumerate(members):
            labels.extend(f"{i}.{l}" for l in m.basis.get(k, ()))
        basis[k] = tuple(labels)
    maps = {}
    for k in degrees:
        t = k - 1 if direction == "chain" else k + 1
        if t not in basis:
            continue
        entries = []
        has_map = False
        for i, m in enumerate(members):
            mat = m.maps.get(k)
            if mat is None:
                continue
            has_map = True
            for c, col in mat.cols.items():
                for r, v in col.items():
                    entries.append((f"{i}.{r}", f"{i}.{c}", v))
        if has_map:
            maps[k] = SparseMat.from_entries(basis[t], basis[k], entries)
    cx = NormedComplex(name, direction, flavor, basis, maps)
    validate_complex(cx)
    return cx


def dual_complex(cx: NormedComplex) -> NormedComplex:
    """Transpose all boundary maps and swap (chain, l1) with (cochain, linf)."""
    validate_complex(cx)
    direction = "cochain" if cx.direction == "chain" else "chain"
    flavor = "linf" if cx.norm_flavor == "l1" else "l1"
    maps = {}
    for k, mat in cx.maps.items():
        maps[cx.target_degree(k)] = mat.transpose()
    out = NormedComplex(f"{cx.name}.dual", direction, flavor,
                        dict(cx.basis), maps)
    validate_complex(out)
    return out


def betti(cx: NormedComplex, k: int) -> int:
    """Dimension of (co)homology in degree k: dim ker - dim im, exactly."""
    validate_complex(cx)
    n = cx.dim(k)
    if n == 0:
        return 0
    out = cx.boundary_out(k)
    into = cx.boundary_into(k)
    rank_out = out.rank() if out is not None else 0
    rank_in = into.rank() if into is not None else 0
    return n - rank_out - rank_in


# ---------------------------------------------------------------------------
# simplicial chain complexes and the cylinder/prism construction

def simplex_label(verts) -> str:
    return "|".join(verts)


def parse_simplex_label(label: str) -> tuple[str, ...]:
    return tuple(label.split("|"))


def simplicial_chain_complex(simplices, vertex_order=None,
                             name: str = "simplicial") -> NormedComplex:
    """Chain complex of a finite simplicial complex.

    Simplices are vertex tuples; the input is closed under faces here.  Basis
    labels are 'v0|v1|...' with vertices ascending in the complex's vertex
    order, and the boundary alternates signs over deleted positions.
    """
    gens = [tuple(s) for s in simplices]
    verts = set()
    for s in gens:
        if len(set(s)) != len(s):
            raise InputError(f"repeated vertex in simplex {s}")
        verts.update(s)
    if vertex_order is None:
        order = sorted(verts)
    else:
        order = list(vertex_order)
        if len(set(order)) != len(order):
            raise InputError("duplicate vertex in vertex order")
        if not verts <= set(order):
            raise InputError("vertex order misses some vertices")
    for v in order:
        if "|" in v:
            raise InputError(f"vertex label {v!r} may not contain '|'")
        _check_label(v)
    pos = {v: i for i, v in enumerate(order)}

    closed: set[tuple[str, ...]] = set()
    stack = [tuple(sorted(s, key=pos.__getitem__)) for s in gens]
    while stack:
        s = stack.pop()
        if s in closed or not s:
            continue
        closed.add(s)
        if len(s) > 1:
            for i in range(len(s)):
                stack.append(s[:i] + s[i + 1:])

    by_dim: dict[int, list[tuple[str, ...]]] = {}
    for s in closed:
        by_dim.setdefault(len(s) - 1, []).append(s)
    basis = {}
    for d, items in by_dim.items():
        items.sort(key=lambda s: tuple(pos[v] for v in s))
        basis[d] = tuple(simplex_label(s) for s in items)
    maps = {}
    for d in sorted(by_dim):
        if d == 0:
            continue
        entries = []
        for s in by_dim[d]:
            lab = simplex_label(s)
            acc: dict[str, Fraction] = {}
            for i in range(len(s)):
                face = simplex_label(s[:i] + s[i + 1:])
                sign = Fraction(1) if i % 2 == 0 else Fraction(-1)
                acc[face] = acc.get(face, Fraction(0)) + sign
            entries.extend((r, lab, v) for r, v in acc.items() if v != 0)
        maps[d] = SparseMat.from_entries(basis[d - 1], basis[d], entries)
    cx = NormedComplex(name, "chain", "l1", basis, maps)
    validate_complex(cx)
    return cx


def _simplicial_vertices(cx: NormedComplex) -> list[str]:
    if 0 not in cx.basis:
        raise InputError("simplicial complex needs degree 0 (its vertices)")
    return list(cx.basis[0])


def cylinder_inclusion(c: SparseVec, end: int) -> SparseVec:
    """Push a chain into the bottom (end=0) or top (end=1) of the cylinder."""
    if end not in (0, 1):
        raise InputError("cylinder end must be 0 or 1")
    return c.relabel(lambda lab: simplex_label(
        tuple(f"{v}.{end}" for v in parse_simplex_label(lab))))


def prism(c: SparseVec, n: int, cx: NormedComplex):
    """Prism chain over a degree-(n-1) chain c of a simplicial complex.

    Returns (P(c), cylinder) where the cylinder is the product complex of cx
    with a segment; over each simplex [v0..v_{n-1}] the prism is the signed
    sum of the n simplices [v0.0 .. vi.0 vi.1 .. v_{n-1}.1].  The defining
    identity is boundary(P(c)) = top(c) - bottom(c) - P(boundary(c)).
    """
    validate_complex(cx)
    if cx.direction != "chain":
        raise InputError("prism needs a chain complex")
    if n < 1:
        raise InputError("prism degree must be >= 1")
    if n - 1 not in cx.basis:
        raise InputError(f"complex has no degree {n - 1}")
    if not c.support() <= set(cx.basis[n - 1]):
        raise InputError(f"chain is not supported in degree {n - 1}")
    order = _simplicial_vertices(cx)
    pos = {v: i for i, v in enumerate(order)}

    source_simplices = []
    for d in range(0, n):
        for lab in cx.basis.get(d, ()):
            s = parse_simplex_label(lab)
            ranks = [pos.get(v) for v in s]
            if None in ranks or any(a >= b for a, b in zip(ranks, ranks[1:])):
                raise InputError(f"label {lab!r} is not an ordered simplex")
            source_simplices.append(s)

    prod_simplices = set()
    for s in source_simplices:
        m = len(s)
        for bot_mask in range(1 << m):
            bot = [i for i in range(m) if (bot_mask >> i) & 1]
            for top_mask in range(1 << m):
                top = [i for i in range(m) if (top_mask >> i) & 1]
                if not bot and not top:
                    continue
                if len(bot) + len(top) > n + 1:
                    continue
                if bot and top and bot[-1] > top[0]:
                    continue  # monotone chains only
                prod_simplices.add(tuple([f"{s[i]}.0" for i in bot]
                                         + [f"{s[i]}.1" for i in top]))
    prod_order = []
    for v in order:
        prod_order.append(f"{v}.0")
        prod_order.append(f"{v}.1")
    cylinder = simplicial_chain_complex(prod_simplices, vertex_order=prod_order,
                                        name=f"{cx.name}.cyl")
    top_labels = set(cylinder.basis.get(n, ()))
    acc: dict[str, Fraction] = {}
    for lab, coeff in c.entries.items():
        s = parse_simplex_label(lab)
        for i in range(len(s)):
            plab = simplex_label(tuple([f"{v}.0" for v in s[:i + 1]]
                                       + [f"{v}.1" for v in s[i:]]))
            if plab not in top_labels:
                raise InternalInvariantError("prism simplex missing from cylinder")
            sign = Fraction(1) if i % 2 == 0 else Fraction(-1)
            w = acc.get(plab, Fraction(0)) + sign * coeff
            if w == 0:
                acc.pop(plab, None)
            else:
                acc[plab] = w
    return SparseVec(acc), cylinder
