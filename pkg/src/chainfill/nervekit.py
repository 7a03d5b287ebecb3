"""Nerves of covers of finite simplicial complexes, with a marked subspace.

A cover assigns to each member a vertex set; the nerve records which members
meet (nonempty intersection of vertex sets), the relative nerve is the part
of the nerve whose intersections touch the marked subspace, and the two
multiplicities count how many members can meet at once anywhere versus away
from the subspace.  Connectivity throughout means connectivity of induced
subcomplexes in the 1-skeleton; the empty set counts as connected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalInvariantError
from .normcx import NormedComplex, _check_label, simplicial_chain_complex


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite simplicial complex: ordered vertices plus face-closed simplices
    stored as tuples ascending in the vertex order (every vertex is a 0-simplex)."""

    vertices: tuple[str, ...]
    simplices: frozenset

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertices")
        pos = {v: i for i, v in enumerate(self.vertices)}
        for v in self.vertices:
            if "|" in v:
                raise InputError(f"vertex label {v!r} may not contain '|'")
            _check_label(v)
            if (v,) not in self.simplices:
                raise InputError(f"vertex {v!r} missing as a 0-simplex")
        for s in self.simplices:
            if not s or any(v not in pos for v in s):
                raise InputError(f"bad simplex {s!r}")
            ranks = [pos[v] for v in s]
            if any(a >= b for a, b in zip(ranks, ranks[1:])):
                raise InputError(f"simplex {s!r} is not ascending")
            if len(s) > 1:
                for i in range(len(s)):
                    if s[:i] + s[i + 1:] not in self.simplices:
                        raise InputError(f"missing face of {s!r}")

    @classmethod
    def from_simplices(cls, simplices, vertices=None) -> "SimplicialComplex":
        gens = [tuple(s) for s in simplices]
        verts = set()
        for s in gens:
            if len(set(s)) != len(s):
                raise InputError(f"repeated vertex in simplex {s!r}")
            verts.update(s)
        if vertices is None:
            order = tuple(sorted(verts))
        else:
            order = tuple(vertices)
            if not verts <= set(order):
                raise InputError("vertex list misses some simplex vertices")
        pos = {v: i for i, v in enumerate(order)}
        closed = {(v,) for v in order}
        stack = [tuple(sorted(s, key=pos.__getitem__)) for s in gens]
        while stack:
            s = stack.pop()
            if not s or s in closed:
                continue
            closed.add(s)
            if len(s) > 1:
                stack.extend(s[:i] + s[i + 1:] for i in range(len(s)))
        return cls(order, frozenset(closed))

    def dim(self) -> int:
        return max(len(s) for s in self.simplices) - 1 if self.simplices else -1

    def edges(self):
        return sorted(s for s in self.simplices if len(s) == 2)

    def maximal_simplices(self):
        out = [s for s in self.simplices
               if not any(set(s) < set(t) for t in self.simplices)]
        pos = {v: i for i, v in enumerate(self.vertices)}
        return sorted(out, key=lambda s: tuple(pos[v] for v in s))

    def induced(self, subset) -> "SimplicialComplex":
        keep = set(subset)
        if not keep <= set(self.vertices):
            raise InputError("induced subset has unknown vertices")
        order = tuple(v for v in self.vertices if v in keep)
        simp = frozenset(s for s in self.simplices if set(s) <= keep)
        return SimplicialComplex(order, simp)

    def chain_complex(self, name: str = "simplicial") -> NormedComplex:
        return simplicial_chain_complex(self.simplices,
                                        vertex_order=self.vertices, name=name)


def components(sc: SimplicialComplex, subset=None):
    """Connected components of the induced subcomplex (1-skeleton walk),
    each sorted in vertex order, listed by their least vertex."""
    verts = list(sc.vertices) if subset is None else \
        [v for v in sc.vertices if v in set(subset)]
    if subset is not None and not set(subset) <= set(sc.vertices):
        raise InputError("component subset has unknown vertices")
    keep = set(verts)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in sc.edges():
        if a in keep and b in keep:
            parent[find(a)] = find(b)
    groups: dict[str, list[str]] = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(g) for g in sorted(groups.values()))


def is_connected(sc: SimplicialComplex, subset=None) -> bool:
    return len(components(sc, subset)) <= 1


@dataclass(frozen=True)
class CoverData:
    """A cover of a space by named vertex sets, with a marked subspace."""

    space: SimplicialComplex
    subspace: tuple[str, ...]
    members: tuple  # pairs (name, vertex tuple), sorted by name


def cover_data(space: SimplicialComplex, subspace, members) -> CoverData:
    """Validated cover: members are nonempty connected vertex sets that
    jointly contain every simplex; the subspace is a vertex subset."""
    if not set(subspace) <= set(space.vertices):
        raise InputError("subspace has unknown vertices")
    sub = sorted(set(subspace),
                 key={v: i for i, v in enumerate(space.vertices)}.get)
    items = sorted(members.items()) if hasattr(members, "items") \
        else sorted((n, vs) for n, vs in members)
    names = [n for n, _ in items]
    if len(set(names)) != len(names):
        raise InputError("duplicate member names")
    pos = {v: i for i, v in enumerate(space.vertices)}
    norm_members = []
    for n, vs in items:
        _check_label(n)
        vset = set(vs)
        if not vset:
            raise InputError(f"member {n!r} is empty")
        if not vset <= set(space.vertices):
            raise InputError(f"member {n!r} has unknown vertices")
        if not is_connected(space, vset):
            raise InputError(f"member {n!r} is not connected")
        norm_members.append((n, tuple(sorted(vset, key=pos.get))))
    for s in space.maximal_simplices():
        if not any(set(s) <= set(vs) for _, vs in norm_members):
            raise InputError(f"simplex {s!r} is contained in no member")
    return CoverData(space, tuple(sub), tuple(norm_members))


def _nonempty_intersections(cover: CoverData):
    """All member subsets with nonempty vertex intersection, with pruning."""
    members = [(n, frozenset(vs)) for n, vs in cover.members]
    out = []

    def rec(start, names, inter):
        for i in range(start, len(members)):
            nm, vs = members[i]
            ni = (inter & vs) if names else vs
            if not ni:
                continue
            out.append((names + (nm,), ni))
            rec(i + 1, names + (nm,), ni)

    rec(0, (), frozenset())
    return out


@dataclass(frozen=True)
class NervePair:
    """Nerve of a cover together with the subcomplex meeting the subspace.

    multiplicity - 1 is the nerve dimension; relative_multiplicity counts the
    largest family meeting away from the subspace (0 when none does), so the
    simplices outside the relative nerve have dimension at most
    relative_multiplicity - 1; boundary_multiplicity counts the largest
    family whose common intersection touches the subspace.
    """

    nerve: SimplicialComplex
    relative_nerve: SimplicialComplex
    multiplicity: int
    relative_multiplicity: int
    boundary_multiplicity: int


def nerve_pair(cover: CoverData) -> NervePair:
    inters = _nonempty_intersections(cover)
    if not inters:
        raise InputError("cover has no members")
    sub = set(cover.subspace)
    names = tuple(n for n, _ in cover.members)
    mult = max(len(s) for s, _ in inters)
    rel_simplices = [s for s, i in inters if i & sub]
    away = [s for s, i in inters if not (i & sub)]
    rel_mult = max((len(s) for s in away), default=0)
    bd_mult = max((len(s) for s in rel_simplices), default=0)
    nerve = SimplicialComplex.from_simplices([s for s, _ in inters],
                                             vertices=names)
    rel_vertices = tuple(n for n in names if any(s == (n,)
                                                 for s in rel_simplices))
    relative = SimplicialComplex.from_simplices(rel_simplices,
                                                vertices=rel_vertices) \
        if rel_simplices else SimplicialComplex((), frozenset())
    if nerve.dim() != mult - 1:
        raise InternalInvariantError("nerve dimension disagrees with "
                                     "multiplicity")
    out_dim = max((len(s) - 1 for s, i in inters if not (i & sub)),
                  default=-1)
    if out_dim != rel_mult - 1:
        raise InternalInvariantError("relative multiplicity disagrees with "
                                     "the part away from the subspace")
    return NervePair(nerve, relative, mult, rel_mult, bd_mult)


@dataclass(frozen=True)
class CoverReport:
    """Connectivity diagnostics for a cover with a marked subspace.

    rc1: every member meeting the subspace meets it in a connected set.
    weakly_convex: in every nonempty intersection that touches the subspace,
    each component touches it.  convex: every nonempty intersection is
    connected.  Witnesses name the offending members and vertex sets; the
    rc2 flag is a caller assertion passed through, never computed here.
    """

    rc1: bool
    weakly_convex: bool
    convex: bool
    rc1_witness: tuple | None
    weakly_convex_witness: tuple | None
    convex_witness: tuple | None
    rc2_user_asserted: bool


def check_relative_cover(cover: CoverData,
                         rc2_user_asserted: bool = False) -> CoverReport:
    space = cover.space
    sub = set(cover.subspace)
    rc1, rc1_wit = True, None
    for n, vs in cover.members:
        meet = set(vs) & sub
        if meet and rc1:
            comps = components(space, meet)
            if len(comps) > 1:
                rc1, rc1_wit = False, (n, comps)
    weak, weak_wit = True, None
    conv, conv_wit = True, None
    for names, inter in _nonempty_intersections(cover):
        comps = components(space, inter)
        if conv and len(comps) > 1:
            conv, conv_wit = False, (names, comps)
        if weak and inter & sub:
            for comp in comps:
                if not set(comp) & sub:
                    weak, weak_wit = False, (names, comp)
                    break
    return CoverReport(rc1, weak, conv, rc1_wit, weak_wit, conv_wit,
                       rc2_user_asserted)


def collar_multiplicity_bound(multiplicity: int,
                              boundary_multiplicity: int) -> int:
    """Multiplicity bound for a collared extension of a relative cover."""
    if multiplicity < 0 or boundary_multiplicity < 0:
        raise InputError("multiplicities must be nonnegative")
    return max(multiplicity, boundary_multiplicity + 1)
