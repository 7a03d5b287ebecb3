"""Group-flavored complexes: bar resolutions of free groups with truncated
bases, pseudorandom filling experiments, and invariant bounded cochains of
finite group actions with explicit averaging maps.

Free-group words are tuples of nonzero ints (+i is the i-th generator, -i its
inverse), rendered as letters (a..z, inverses uppercase, identity "1").  The
truncated bar basis in degree k keeps the tuples of nonidentity words all of
whose consecutive-run products stay inside the radius-L ball; that family is
closed under the bar faces, so the truncated boundary is everywhere defined.

Finite group machinery is exact and table-driven: multiplication tables are
validated in full (identity, inverses, associativity), actions are validated
as homomorphisms to permutations, and the invariant cochain complexes use
lexicographically minimal orbit representatives as basis labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .detrand import XorShift64Star
from .errors import InputError, InternalInvariantError
from .exactlp import SparseMat, SparseVec, operator_norm, solve_min_l1
from .normcx import CochainMap, NormedComplex, validate_cochain_map, validate_complex

Word = tuple[int, ...]

MAX_RANK = 26


def _check_rank(rank: int):
    if not 1 <= rank <= MAX_RANK:
        raise InputError(f"free group rank must be in 1..{MAX_RANK}")


def reduce_word(word) -> Word:
    """Freely reduce a tuple of nonzero letters."""
    out: list[int] = []
    for x in word:
        if x == 0:
            raise InputError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def multiply_words(u: Word, v: Word) -> Word:
    """Product of two already reduced words (cancellation at the seam only)."""
    i = len(u)
    j = 0
    while i > 0 and j < len(v) and u[i - 1] == -v[j]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def invert_word(u: Word) -> Word:
    return tuple(-x for x in reversed(u))


def _letter_rank(x: int) -> int:
    # a < A < b < B < ...
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


def word_string(w: Word) -> str:
    if not w:
        return "1"
    out = []
    for x in w:
        if not 1 <= abs(x) <= MAX_RANK:
            raise InputError(f"letter {x} out of range")
        c = chr(ord("a") + abs(x) - 1)
        out.append(c if x > 0 else c.upper())
    return "".join(out)


def parse_word(s: str, rank: int) -> Word:
    _check_rank(rank)
    if s == "1":
        return ()
    word = []
    for c in s:
        if "a" <= c <= "z":
            x = ord(c) - ord("a") + 1
        elif "A" <= c <= "Z":
            x = -(ord(c) - ord("A") + 1)
        else:
            raise InputError(f"bad letter {c!r} in word {s!r}")
        if abs(x) > rank:
            raise InputError(f"letter {c!r} exceeds rank {rank}")
        word.append(x)
    w = tuple(word)
    if reduce_word(w) != w:
        raise InputError(f"word {s!r} is not freely reduced")
    return w


def shortlex_key(w: Word):
    return (len(w), tuple(_letter_rank(x) for x in w))


def _ball_tuples(rank: int, radius: int) -> list[Word]:
    _check_rank(rank)
    if radius < 0:
        raise InputError("radius must be >= 0")
    letters = sorted((x for i in range(1, rank + 1) for x in (i, -i)),
                     key=_letter_rank)
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        out.extend(nxt)
        frontier = nxt
    return out


def ball(rank: int, radius: int) -> list[str]:
    """Freely reduced words of length <= radius, in shortlex order."""
    return [word_string(w) for w in _ball_tuples(rank, radius)]


def _bar_tuples(rank: int, degree: int, radius: int) -> list[tuple[Word, ...]]:
    """Degree-k truncated bar basis: tuples of nonidentity words whose
    consecutive-run products all lie in the radius ball, shortlex-ordered
    position by position."""
    if degree < 0:
        raise InputError("degree must be >= 0")
    if radius < 1:
        raise InputError("radius must be >= 1")
    if degree == 0:
        return [()]
    words = [w for w in _ball_tuples(rank, radius) if w]
    # carry the suffix products so each extension only checks the new runs
    level = [((w,), (w,)) for w in words]
    for _ in range(degree - 1):
        nxt = []
        for tup, suffixes in level:
            for w in words:
                new_suffixes = []
                ok = True
                for p in suffixes:
                    q = multiply_words(p, w)
                    if len(q) > radius:
                        ok = False
                        break
                    new_suffixes.append(q)
                if ok:
                    nxt.append((tup + (w,), tuple(new_suffixes) + (w,)))
        level = nxt
    return [tup for tup, _ in level]


def bar_label(tup: tuple[Word, ...]) -> str:
    return "|".join(word_string(w) for w in tup) if tup else "1"


def bar_basis(rank: int, degree: int, radius: int) -> list[str]:
    return [bar_label(t) for t in _bar_tuples(rank, degree, radius)]


def bar_complex(rank: int, k_max: int, radius: int,
                name: str | None = None) -> NormedComplex:
    """Truncated bar chain complex of a free group, with exact boundaries.

    Degree 0 is the single label "1"; the map out of degree 1 is zero.  In
    higher degrees the boundary drops the first word, merges each adjacent
    pair (faces that merge to the identity vanish), and drops the last word.
    Run-boundedness of the basis keeps every surviving face inside the basis;
    a face escaping it would be a construction bug, not an input condition.
    """
    _check_rank(rank)
    if k_max < 0:
        raise InputError("k_max must be >= 0")
    if name is None:
        name = f"bar.f{rank}.L{radius}"
    tuples = {k: _bar_tuples(rank, k, radius) for k in range(k_max + 1)}
    basis = {k: tuple(bar_label(t) for t in tuples[k]) for k in tuples}
    labels = {k: set(basis[k]) for k in basis}
    maps: dict[int, SparseMat] = {}
    if k_max >= 1:
        maps[1] = SparseMat.zero(basis[0], basis[1])
    for k in range(2, k_max + 1):
        entries = []
        for tup in tuples[k]:
            col = bar_label(tup)
            acc: dict[str, Fraction] = {}

            def put(face: tuple[Word, ...], sign: int):
                lab = bar_label(face)
                if lab not in labels[k - 1]:
                    raise InternalInvariantError(
                        f"bar face {lab!r} escaped the degree-{k - 1} basis")
                acc[lab] = acc.get(lab, Fraction(0)) + sign

            put(tup[1:], 1)
            for i in range(k - 1):
                merged = multiply_words(tup[i], tup[i + 1])
                if merged:
                    put(tup[:i] + (merged,) + tup[i + 2:],
                        -1 if i % 2 == 0 else 1)
            put(tup[:-1], 1 if k % 2 == 0 else -1)
            entries.extend((r, col, v) for r, v in acc.items() if v != 0)
        maps[k] = SparseMat.from_entries(basis[k - 1], basis[k], entries)
    cx = NormedComplex(name, "chain", "l1", basis, maps)
    validate_complex(cx)
    return cx


# ---------------------------------------------------------------------------
# pseudorandom filling experiment on the rank-2 bar complex

@dataclass(frozen=True)
class ExperimentConfig:
    seed: int
    degree: int
    l_cycle: int
    l_fill: int
    trials: int
    support: int = 8

    def __post_init__(self):
        if self.degree < 1:
            raise InputError("experiment degree must be >= 1")
        if not 1 <= self.l_cycle <= self.l_fill:
            raise InputError("need 1 <= l_cycle <= l_fill")
        if self.trials < 0 or self.support < 1:
            raise InputError("trials must be >= 0 and support >= 1")


@dataclass(frozen=True)
class ExperimentRecord:
    seed: int
    trial: int
    degree: int
    l_cycle: int
    l_fill: int
    boundary_norm: Fraction
    fill_norm: Fraction
    ratio: Fraction | None
    status: str
    certificate_ok: bool


def f2_experiment(config: ExperimentConfig) -> list[ExperimentRecord]:
    """Fill boundaries of pseudorandom small-radius bar chains of the rank-2
    free group inside a larger-radius basis, with certified exact LP solves.

    Chains are drawn in the given degree over the radius-l_cycle basis
    (support-many distinct labels, coefficients in +-{1,2,3}); their
    boundaries are filled over the radius-l_fill basis.  The draw sequence is
    fully determined by the seed.
    """
    cx = bar_complex(2, config.degree, config.l_fill)
    mat = cx.maps[config.degree]
    small = bar_basis(2, config.degree, config.l_cycle)
    missing = set(small) - set(mat.col_labels)
    if missing:
        raise InternalInvariantError("small basis escaped the fill basis")
    rng = XorShift64Star(config.seed)
    coeffs = (Fraction(-3), Fraction(-2), Fraction(-1),
              Fraction(1), Fraction(2), Fraction(3))
    records = []
    for trial in range(config.trials):
        size = min(config.support, len(small))
        idx = rng.sample_distinct(len(small), size)
        c = SparseVec({small[i]: coeffs[rng.below(6)] for i in idx})
        b = mat.apply(c)
        res = solve_min_l1(mat, b)
        if res.status != "Optimal":
            raise InternalInvariantError("boundary of a chain failed to fill")
        cert_ok = _recheck_l1_certificate(mat, b, res)
        bnorm = b.l1_norm()
        records.append(ExperimentRecord(
            seed=config.seed, trial=trial, degree=config.degree,
            l_cycle=config.l_cycle, l_fill=config.l_fill,
            boundary_norm=bnorm, fill_norm=res.objective,
            ratio=res.objective / bnorm if bnorm != 0 else None,
            status=res.status, certificate_ok=cert_ok))
    return records


def _recheck_l1_certificate(mat: SparseMat, b: SparseVec, res) -> bool:
    y = res.dual_certificate
    if y is None:
        return False
    if y.dot(b) != res.objective:
        return False
    for c in mat.col_labels:
        col = mat.cols.get(c, {})
        v = sum((y.get(r) * w for r, w in col.items()), Fraction(0))
        if abs(v) > 1:
            return False
    sol = res.solution
    if mat.apply(sol) != b or sol.l1_norm() != res.objective:
        return False
    return True


# ---------------------------------------------------------------------------
# finite groups, actions, invariant cochains

@dataclass(frozen=True)
class FiniteGroupData:
    """A finite group as labels plus a fully validated multiplication table."""

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise InputError("a group needs at least the identity")
        if len(set(self.elements)) != n:
            raise InputError("duplicate element labels")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InputError("multiplication table has wrong shape")
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise InputError("table entry out of range")
        e = self.identity
        if not 0 <= e < n:
            raise InputError("identity index out of range")
        for a in range(n):
            if self.table[e][a] != a or self.table[a][e] != a:
                raise InputError("identity row or column is wrong")
        for a in range(n):
            if e not in self.table[a]:
                raise InputError(f"{self.elements[a]!r} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise InputError("multiplication is not associative")

    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def index_of(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise InputError(f"no element labeled {label!r}") from None


def cyclic_group(m: int) -> FiniteGroupData:
    if m < 1:
        raise InputError("cyclic group order must be >= 1")
    return FiniteGroupData(tuple(str(i) for i in range(m)),
                           tuple(tuple((i + j) % m for j in range(m))
                                 for i in range(m)), 0)


def trivial_group() -> FiniteGroupData:
    return cyclic_group(1)


def symmetric_group(n: int) -> FiniteGroupData:
    """Permutations of 0..n-1 labeled by their one-line form, e.g. "102"."""
    if not 1 <= n <= 6:
        raise InputError("symmetric group supported for 1 <= n <= 6")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[tuple(p[q[x]] for x in range(n))]
                        for q in perms) for p in perms)
    labels = tuple("".join(str(x) for x in p) for p in perms)
    return FiniteGroupData(labels, table, index[tuple(range(n))])


def subgroup_data(group: FiniteGroupData, labels) -> FiniteGroupData:
    """The subgroup on the given element labels, order inherited from the
    ambient group; closure, identity, and inverses are checked."""
    idx = sorted({group.index_of(l) for l in labels})
    if group.identity not in idx:
        raise InputError("subgroup must contain the identity")
    pos = {g: i for i, g in enumerate(idx)}
    for a in idx:
        if group.inv(a) not in pos:
            raise InputError("subgroup is not closed under inverses")
        for b in idx:
            if group.mul(a, b) not in pos:
                raise InputError("subgroup is not closed under products")
    table = tuple(tuple(pos[group.mul(a, b)] for b in idx) for a in idx)
    return FiniteGroupData(tuple(group.elements[g] for g in idx), table,
                           pos[group.identity])


@dataclass(frozen=True)
class GroupAction:
    """A validated left action: table[g][p] is the image point index."""

    group: FiniteGroupData
    points: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.group.order()
        s = len(self.points)
        if len(set(self.points)) != s:
            raise InputError("duplicate point labels")
        if len(self.table) != n or any(len(r) != s for r in self.table):
            raise InputError("action table has wrong shape")
        for row in self.table:
            if sorted(row) != list(range(s)):
                raise InputError("group element does not act by a permutation")
        e = self.group.identity
        if any(self.table[e][p] != p for p in range(s)):
            raise InputError("identity does not act trivially")
        for g in range(n):
            for h in range(n):
                gh = self.group.mul(g, h)
                for p in range(s):
                    if self.table[g][self.table[h][p]] != self.table[gh][p]:
                        raise InputError("action is not a homomorphism")


def left_translation_action(group: FiniteGroupData) -> GroupAction:
    return GroupAction(group, group.elements, group.table)


@dataclass
class InvariantCochains:
    """Invariant bounded cochains of an action, with orbit bookkeeping."""

    action: GroupAction
    k_max: int
    complex: NormedComplex
    reps: dict[int, tuple[tuple[int, ...], ...]]

    def canon(self, tup: tuple[int, ...]) -> tuple[int, ...]:
        return min(tuple(self.action.table[g][p] for p in tup)
                   for g in range(self.action.group.order()))

    def label(self, tup: tuple[int, ...]) -> str:
        return "|".join(self.action.points[p] for p in self.canon(tup))


def invariant_cochain_complex(action: GroupAction, k_max: int,
                              name: str) -> InvariantCochains:
    """Cochain complex of invariant functions on tuples of points, with the
    sup norm; the basis in degree k is the set of orbit representatives of
    (k+1)-tuples (lex-least in point indices) and the differential is the
    usual alternating sum over deleted positions, pushed to representatives.
    """
    if k_max < 0:
        raise InputError("k_max must be >= 0")
    s = len(action.points)
    if s == 0:
        raise InputError("action on an empty point set")
    n = action.group.order()

    def canon(tup):
        return min(tuple(action.table[g][p] for p in tup) for g in range(n))

    reps: dict[int, tuple[tuple[int, ...], ...]] = {}
    for k in range(k_max + 1):
        seen = set()
        stack = [()]
        for _ in range(k + 1):
            stack = [t + (p,) for t in stack for p in range(s)]
        for t in stack:
            seen.add(canon(t))
        reps[k] = tuple(sorted(seen))

    def label(t):
        return "|".join(action.points[p] for p in t)

    basis = {k: tuple(label(t) for t in reps[k]) for k in reps}
    maps = {}
    for k in range(k_max):
        entries: dict[tuple[str, str], Fraction] = {}
        for tau in reps[k + 1]:
            row = label(tau)
            for i in range(len(tau)):
                col = label(canon(tau[:i] + tau[i + 1:]))
                sign = Fraction(1) if i % 2 == 0 else Fraction(-1)
                key = (row, col)
                entries[key] = entries.get(key, Fraction(0)) + sign
        maps[k] = SparseMat.from_entries(
            basis[k + 1], basis[k],
            [(r, c, v) for (r, c), v in entries.items() if v != 0])
    cx = NormedComplex(name, "cochain", "linf", basis, maps)
    validate_complex(cx)
    holder = InvariantCochains(action, k_max, cx, reps)
    return holder


def finite_group_bounded_cochains(group: FiniteGroupData,
                                  k_max: int) -> NormedComplex:
    """Invariant bounded cochains of the left translation action on itself."""
    return invariant_cochain_complex(left_translation_action(group), k_max,
                                     f"Cb.{group.order()}").complex


def _check_subgroup_embedding(group: FiniteGroupData, sub: FiniteGroupData):
    gi = [group.index_of(l) for l in sub.elements]
    if gi[sub.identity] != group.identity:
        raise InputError("subgroup identity must be the ambient identity")
    for a in range(sub.order()):
        for b in range(sub.order()):
            if group.mul(gi[a], gi[b]) != gi[sub.table[a][b]]:
                raise InputError("subgroup table disagrees with the ambient "
                                 "group")
    return gi


def _right_coset_reps(group: FiniteGroupData, sub_in_g: list[int]) -> list[int]:
    """One representative per right coset Hg: the identity for its own coset,
    the label-least element otherwise; identity's coset comes first."""
    seen = set()
    reps = []
    for g in sorted(range(group.order()), key=lambda i: group.elements[i]):
        if g in seen:
            continue
        coset = sorted(group.mul(h, g) for h in sub_in_g)
        for x in coset:
            seen.add(x)
        if group.identity in coset:
            reps.insert(0, group.identity)
        else:
            reps.append(min(coset, key=lambda i: group.elements[i]))
    return reps


@dataclass
class ShapiroMaps:
    """Restriction, extension, and the explicit homotopy between the invariant
    cochains of a subgroup on itself and on a product with its coset reps."""

    group_complex: NormedComplex
    induced_complex: NormedComplex
    phi: CochainMap
    psi: CochainMap
    homotopy: CochainMap
    coset_count: int
    phi_norm: Fraction
    psi_norm: Fraction
    homotopy_norms: dict[int, Fraction]


def shapiro_maps(group: FiniteGroupData, sub: FiniteGroupData,
                 k_max: int) -> ShapiroMaps:
    """Explicit cochain homotopy equivalence realizing induction along a
    subgroup inclusion (embedding given by element labels).

    The subgroup H acts on itself and on J x H (J = right coset reps of H in
    the ambient group, identity first) by translation in the H slot.  phi
    pulls back along the projection to H, psi restricts to the identity slice,
    and the homotopy h interpolates slot by slot; the identities
    psi o phi = id and  delta h + h delta = phi o psi - id  are checked
    exactly in all degrees <= k_max, along with the norm bounds
    |phi|, |psi| <= 1 and |h^k| <= k.
    """
    if k_max < 0:
        raise InputError("k_max must be >= 0")
    gi = _check_subgroup_embedding(group, sub)
    reps_g = _right_coset_reps(group, gi)
    nh = sub.order()
    nj = len(reps_g)

    ch_holder = invariant_cochain_complex(left_translation_action(sub),
                                          k_max + 1, "Cb.H")
    points = tuple(f"{group.elements[r]}.{lab}"
                   for r in reps_g for lab in sub.elements)
    table = tuple(tuple(j * nh + sub.table[h][x]
                        for j in range(nj) for x in range(nh))
                  for h in range(nh))
    cs_holder = invariant_cochain_complex(
        GroupAction(sub, points, table), k_max + 1, "Cb.JxH")

    ch, cs = ch_holder.complex, cs_holder.complex

    def h_slot(p: int) -> int:
        return p % nh

    def base_point(x: int) -> int:
        return x  # j = 0 block sits first

    phi_parts, psi_parts, h_parts = {}, {}, {}
    for k in range(k_max + 2):
        phi_entries = []
        for tau in cs_holder.reps[k]:
            row = "|".join(points[p] for p in tau)
            col = ch_holder.label(tuple(h_slot(p) for p in tau))
            phi_entries.append((row, col, Fraction(1)))
        phi_parts[k] = SparseMat.from_entries(cs.basis[k], ch.basis[k],
                                              phi_entries)
        psi_entries = []
        for sigma in ch_holder.reps[k]:
            row = "|".join(sub.elements[x] for x in sigma)
            col = cs_holder.label(tuple(base_point(x) for x in sigma))
            psi_entries.append((row, col, Fraction(1)))
        psi_parts[k] = SparseMat.from_entries(ch.basis[k], cs.basis[k],
                                              psi_entries)
    for k in range(1, k_max + 2):
        entries: dict[tuple[str, str], Fraction] = {}
        for tau in cs_holder.reps[k - 1]:
            # tau has k points; each expansion has k+1
            row = "|".join(points[p] for p in tau)
            for a in range(k):
                expanded = (tau[:a + 1]
                            + (base_point(h_slot(tau[a])),)
                            + tuple(base_point(h_slot(p))
                                    for p in tau[a + 1:]))
                col = cs_holder.label(expanded)
                sign = Fraction(1) if a % 2 == 0 else Fraction(-1)
                key = (row, col)
                entries[key] = entries.get(key, Fraction(0)) + sign
        h_parts[k] = SparseMat.from_entries(
            cs.basis[k - 1], cs.basis[k],
            [(r, c, v) for (r, c), v in entries.items() if v != 0])

    phi = CochainMap("phi", ch, cs, phi_parts)
    psi = CochainMap("psi", cs, ch, psi_parts)
    homotopy = CochainMap("h", cs, cs, h_parts, shift=-1)
    validate_cochain_map(phi)
    validate_cochain_map(psi)

    for k in range(k_max + 2):
        if psi_parts[k].compose(phi_parts[k]) != SparseMat.identity(ch.basis[k]):
            raise InternalInvariantError("psi o phi is not the identity")
    for k in range(k_max + 1):
        lhs = h_parts[k + 1].compose(cs.maps[k])
        if k >= 1:
            lhs = lhs + cs.maps[k - 1].compose(h_parts[k])
        rhs = phi_parts[k].compose(psi_parts[k]) + \
            SparseMat.identity(cs.basis[k]).scale(Fraction(-1))
        if lhs != rhs:
            raise InternalInvariantError(
                f"homotopy identity fails in degree {k}")

    h_norms = {}
    for k in range(1, k_max + 2):
        nrm = operator_norm(h_parts[k], "linf_to_linf")
        if nrm > k:
            raise InternalInvariantError(f"homotopy norm exceeds {k}")
        h_norms[k] = nrm
    phi_norm = phi.norm()
    psi_norm = psi.norm()
    if phi_norm > 1 or psi_norm > 1:
        raise InternalInvariantError("averaging maps must be contractions")
    return ShapiroMaps(ch, cs, phi, psi, homotopy, nj,
                       phi_norm, psi_norm, h_norms)


def alternating_projection(s_size: int, k: int) -> CochainMap:
    """Signed symmetrization of bounded cochains on tuples from a finite set,
    as a cochain self-map in degrees 0..k (built over degrees 0..k+1 so the
    top commuting square is visible to callers that extend it).

    In degree j the matrix averages f(t o sigma) sign(sigma) over all
    permutations of the j+1 slots; it is idempotent, commutes with the
    differential, and has sup-norm at most 1.
    """
    if s_size < 1:
        raise InputError("need at least one point")
    if k < 0:
        raise InputError("degree must be >= 0")
    action = GroupAction(trivial_group(),
                         tuple(str(i) for i in range(s_size)),
                         (tuple(range(s_size)),))
    holder = invariant_cochain_complex(action, k + 1, f"full.{s_size}")
    cx = holder.complex
    comps = {}
    for j in range(k + 1):
        fact = 1
        for i in range(2, j + 2):
            fact *= i
        entries: dict[tuple[str, str], Fraction] = {}
        for t in holder.reps[j]:
            row = "|".join(action.points[p] for p in t)
            for sigma in permutations(range(j + 1)):
                inv = sum(1 for a in range(j + 1) for b in range(a + 1, j + 1)
                          if sigma[a] > sigma[b])
                sign = Fraction(1, fact) if inv % 2 == 0 else Fraction(-1, fact)
                col = holder.label(tuple(t[sigma[i]] for i in range(j + 1)))
                key = (row, col)
                entries[key] = entries.get(key, Fraction(0)) + sign
        comps[j] = SparseMat.from_entries(
            cx.basis[j], cx.basis[j],
            [(r, c, v) for (r, c), v in entries.items() if v != 0])
    out = CochainMap(f"alt.{s_size}", cx, cx, comps)
    validate_cochain_map(out)
    return out
