"""End-to-end acceptance checks, one per shipped guarantee.

Each test prints a single PASS line on success (visible with -s; under -v the
test name itself serves as the pass/fail line).  Every comparison is exact
rational arithmetic; the only tolerances are wall-clock budgets.
"""

import time
from fractions import Fraction
from itertools import product

from chainfill.detrand import XorShift64Star
from chainfill.exactlp import SparseMat, SparseVec, operator_norm, solve_min_l1
from chainfill.gluecalc import glue_cycle, glue_piece, glue_upper_bound, glueing_instance
from chainfill.groupcx import (
    ExperimentConfig,
    cyclic_group,
    f2_experiment,
    finite_group_bounded_cochains,
    shapiro_maps,
    subgroup_data,
    symmetric_group,
)
from chainfill.nervekit import SimplicialComplex, cover_data, nerve_pair
from chainfill.normcx import (
    EXACT_MODE,
    NormedComplex,
    betti,
    bounded_product,
    cylinder_inclusion,
    dual_complex,
    inherited_ubc_constant,
    prism,
    simplicial_chain_complex,
    ubc_constant,
    uubc_constant,
    validate_complex,
)
from chainfill import formats

from oracles import bf_min_l1

F = Fraction


def _report(n: int, detail: str):
    print(f"criterion {n}: PASS  {detail}")


# --------------------------------------------------------------------------
# 1. the l1 LP agrees with brute-force basic-solution enumeration


def test_criterion_01_lp_matches_bruteforce_oracle():
    start = time.monotonic()
    rng = XorShift64Star(0)
    checked = 0
    for i in range(100):
        nrows = 1 + rng.below(6)
        ncols = 1 + rng.below(8)
        rows = [f"r{t}" for t in range(nrows)]
        cols = [f"c{t}" for t in range(ncols)]
        dense = [[F(rng.below(7) - 3) for _ in cols] for _ in rows]
        d = SparseMat.from_entries(
            rows, cols, [(r, c, dense[i][j]) for i, r in enumerate(rows)
                         for j, c in enumerate(cols) if dense[i][j]])
        if i % 2 == 0:
            combo = SparseVec({c: F(rng.below(5) - 2) for c in cols})
            b = d.apply(combo)
        else:
            b = SparseVec({r: F(rng.below(7) - 3) for r in rows})
        res = solve_min_l1(d, b)
        expect = bf_min_l1(dense, [b.get(r) for r in rows])
        if expect is None:
            assert res.status == "Infeasible"
        else:
            assert res.status == "Optimal"
            assert res.objective == expect
        checked += 1
    elapsed = time.monotonic() - start
    assert checked == 100
    assert elapsed < 10.0
    _report(1, f"100/100 instances agree exactly in {elapsed:.2f}s")


# --------------------------------------------------------------------------
# 2. bounded cochains of small cyclic groups have filling constant <= 1


def test_criterion_02_amenable_groups_have_constant_at_most_one():
    start = time.monotonic()
    complexes = []
    for m in (2, 3):
        cx = finite_group_bounded_cochains(cyclic_group(m), 2)
        complexes.append(cx)
        for k in (1, 2):
            est = ubc_constant(cx, k)
            assert est.mode == EXACT_MODE
            assert est.value <= 1
    family = uubc_constant(complexes, 2)
    assert family.mode == EXACT_MODE
    assert family.value <= 1
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    _report(2, f"Z/2 and Z/3 constants <= 1 at k = 1, 2, exact, in {elapsed:.2f}s")


# --------------------------------------------------------------------------
# 3. induction/restriction maps: exact identities and norm bounds


def test_criterion_03_shapiro_identities_and_norms():
    pairs = [
        (cyclic_group(4), ["0", "2"]),
        (symmetric_group(3), ["012", "120", "201"]),
    ]
    for group, labels in pairs:
        sub = subgroup_data(group, labels)
        sh = shapiro_maps(group, sub, 3)
        assert sh.phi_norm <= 1 and sh.psi_norm <= 1
        for k in (1, 2, 3):
            assert sh.homotopy_norms[k] <= k
        gcx, ind = sh.group_complex, sh.induced_complex
        for k in (0, 1, 2, 3):
            comp = sh.psi.components[k].compose(sh.phi.components[k])
            assert comp == SparseMat.identity(gcx.basis[k])
            lhs = sh.homotopy.components[k + 1].compose(ind.maps[k])
            if k >= 1:
                lhs = lhs + ind.maps[k - 1].compose(sh.homotopy.components[k])
            rhs = sh.phi.components[k].compose(sh.psi.components[k]) + \
                SparseMat.identity(ind.basis[k]).scale(-1)
            assert lhs == rhs
    _report(3, "(Z/4, Z/2) and (S3, Z/3): identities exact to degree 3, "
               "|phi|,|psi| <= 1, |h^k| <= k")


# --------------------------------------------------------------------------
# 4. prism operator: boundary identity, norm bound, simplex count


def test_criterion_04_prism_identity_norm_and_count():
    # single simplices through dimension 3
    for n in (1, 2, 3, 4):
        verts = tuple("abcd"[:n])
        cx = simplicial_chain_complex([verts])
        c = SparseVec({"|".join(verts): 1})
        p, cyl = prism(c, n, cx)
        assert len(p.entries) == n
        assert all(abs(v) == 1 for v in p.entries.values())
        assert p.l1_norm() == n * c.l1_norm()
        dc = cx.maps[n - 1].apply(c) if n >= 2 else SparseVec()
        p_dc = prism(dc, n - 1, cx)[0] if n >= 2 else SparseVec()
        assert cyl.maps[n].apply(p) == \
            cylinder_inclusion(c, 1) - cylinder_inclusion(c, 0) - p_dc
    # 50 random chains in the full 4-simplex
    cx = simplicial_chain_complex([("a", "b", "c", "d", "e")], name="d4")
    rng = XorShift64Star(7)
    for t in range(50):
        deg = 1 + rng.below(4)
        c = SparseVec({lab: F(rng.below(9) - 4) for lab in cx.basis[deg]})
        n = deg + 1
        p, cyl = prism(c, n, cx)
        p_dc = prism(cx.maps[deg].apply(c), n - 1, cx)[0]
        assert cyl.maps[n].apply(p) == \
            cylinder_inclusion(c, 1) - cylinder_inclusion(c, 0) - p_dc
        assert p.l1_norm() <= n * c.l1_norm()
    _report(4, "identity and |P(c)| <= n|c| exact for n <= 4 and 50 random "
               "chains; prism of a simplex has n top cells")


# --------------------------------------------------------------------------
# 5. nerve pairs: hexagon cover and a fully-touching cover


def test_criterion_05_nerve_pair_examples():
    hexagon = SimplicialComplex.from_simplices(
        [("h0", "h1"), ("h1", "h2"), ("h2", "h3"),
         ("h3", "h4"), ("h4", "h5"), ("h0", "h5")])
    cov = cover_data(hexagon, [], [
        ("U", ["h0", "h1", "h2"]),
        ("V", ["h2", "h3", "h4"]),
        ("W", ["h4", "h5", "h0"]),
    ])
    pair = nerve_pair(cov)
    nerve = pair.nerve
    assert set(nerve.vertices) == {"U", "V", "W"}
    assert nerve.edges() == [("U", "V"), ("U", "W"), ("V", "W")]
    assert ("U", "V", "W") not in nerve.simplices
    assert pair.multiplicity == 2
    assert nerve.dim() == pair.multiplicity - 1

    square = SimplicialComplex.from_simplices(
        [("a", "b", "c"), ("a", "c", "d")])
    touching = cover_data(square, ["a"], [
        ("U1", ["a", "b", "c"]),
        ("U2", ["a", "c", "d"]),
    ])
    rel = nerve_pair(touching)
    assert rel.relative_multiplicity == 0
    assert rel.boundary_multiplicity == 2
    _report(5, "hexagon nerve is the boundary of a triangle (mult 2); "
               "fully-touching cover has relative multiplicity 0")


# --------------------------------------------------------------------------
# 6. glueing arithmetic with handlebody volumes


def test_criterion_06_glue_bound_arithmetic():
    genus = 2
    vols = [3 * (genus - 1)] * 2
    assert glue_upper_bound(1, 3, vols) == 30
    assert glue_upper_bound(1, 3, [0, 0]) == 0
    _report(6, "glue_upper_bound(1, 3, [3, 3]) = 30 and vanishes on zero "
               "volumes")


# --------------------------------------------------------------------------
# 7. constructive glueing of two annuli along a circle


def test_criterion_07_constructive_glueing_bound():
    triangles = [
        ("i0", "o0", "o1"), ("i0", "i1", "o1"), ("i1", "o1", "o2"),
        ("i1", "i2", "o2"), ("i2", "o0", "o2"), ("i0", "i2", "o0"),
    ]
    outer = ("o0|o1", "o0|o2", "o1|o2")
    inner = ("i0|i1", "i0|i2", "i1|i2")
    cx = simplicial_chain_complex(triangles, name="annulus")
    boundary_edges = set(outer) | set(inner)
    z = next(SparseVec(dict(zip(cx.basis[2], signs)))
             for signs in product((1, -1), repeat=6)
             if cx.maps[2].apply(SparseVec(dict(zip(cx.basis[2], signs))))
             .support() <= boundary_edges)
    pieces = [glue_piece("A", cx, z, outer, inner),
              glue_piece("B", cx, z, outer, inner)]
    inst = glueing_instance(2, pieces, [(("A", l), ("B", l)) for l in outer])
    glued, c, report = glue_cycle(inst)
    assert report.status == "Optimal"
    assert report.boundary_supported_ok
    free = {f"{p.name}.{l}" for p in inst.pieces for l in p.free_labels}
    total_boundary = SparseVec(
        {f"{p.name}.{lab}": v for p in inst.pieces
         for lab, v in p.complex.maps[2].apply(p.cycle).entries.items()
         if f"{p.name}.{lab}" in free})
    assert total_boundary.support() <= free

    # exact constant of the merged 3-edge circle: no 2-cells, so zero
    circle = simplicial_chain_complex(
        [("m0", "m1"), ("m1", "m2"), ("m0", "m2")], name="locus")
    k_n = ubc_constant(circle, 1)
    assert k_n.mode == EXACT_MODE and k_n.value == 0
    n = inst.degree
    piece_total = sum(norm for _, norm in report.piece_cycle_norms)
    assert c.l1_norm() <= k_n.value * (n + 1) * piece_total
    assert report.bound_ok
    _report(7, "glued annuli: boundary on free circles, correction norm "
               "within the exact locus constant bound")


# --------------------------------------------------------------------------
# 8. measured constants of homotopy-equivalent complexes obey inheritance


def _with_elementary_summand(base: NormedComplex, k: int, lam: Fraction):
    """base directsum (0 -> Q -w-> Q -> 0) in degrees k+1, k with d(w) = lam u."""
    basis = {d: tuple(labs) for d, labs in base.basis.items()}
    basis[k] = basis.get(k, ()) + ("u",)
    basis[k + 1] = basis.get(k + 1, ()) + ("w",)
    maps = {}
    for d in sorted(basis):
        if d - 1 not in basis:
            continue
        src = base.maps.get(d)
        entries = [(r, c, v) for c in (src.col_labels if src else ())
                   for r, v in src.cols.get(c, {}).items()] if src else []
        if d == k + 1:
            entries.append(("u", "w", lam))
        maps[d] = SparseMat.from_entries(basis[d - 1], basis[d], entries)
    out = NormedComplex(f"{base.name}.plus", "chain", "l1", basis, maps)
    validate_complex(out)
    return out


def _rescaled(base: NormedComplex, scales: dict[int, Fraction]):
    """Conjugate every boundary map by a diagonal positive change of basis."""
    def s(d):
        return scales.get(d, F(1))
    maps = {}
    for d, m in base.maps.items():
        td = base.target_degree(d)
        entries = [(r, c, v * s(td) / s(d))
                   for c in m.col_labels for r, v in m.cols.get(c, {}).items()]
        maps[d] = SparseMat.from_entries(m.row_labels, m.col_labels, entries)
    out = NormedComplex(f"{base.name}.scaled", base.direction,
                        base.norm_flavor, dict(base.basis), maps)
    validate_complex(out)
    return out


def test_criterion_08_homotopy_inheritance_bound():
    triangle = simplicial_chain_complex([("a", "b", "c")], name="tri")
    col = NormedComplex("half", "chain", "l1", {0: ("r",), 1: ("c",)},
                        {1: SparseMat.from_entries(["r"], ["c"],
                                                   [("r", "c", F(1, 2))])})
    bases = [(triangle, 1), (col, 0)]
    lambdas = [F(1, 3), F(1, 2), F(1), F(3, 2), F(3)]
    scale_pairs = [(F(1), F(2)), (F(2), F(1)), (F(1), F(3)),
                   (F(3), F(2)), (F(5), F(7))]
    checked = 0
    for base, k in bases:
        k_base = ubc_constant(base, k).value
        for lam in lambdas:
            d_cx = _with_elementary_summand(base, k, lam)
            measured = ubc_constant(d_cx, k).value
            # inclusion and projection are isometric; h sends u to -w/lam
            bound = inherited_ubc_constant(k_base, 1, 1, 1 / lam)
            assert measured <= bound
            assert measured == max(k_base, 1 / lam)
            checked += 1
        for sk, sk1 in scale_pairs:
            scales = {k: sk, k + 1: sk1}
            d_cx = _rescaled(base, scales)
            f_comp = {d: SparseMat.from_entries(
                base.basis[d], base.basis[d],
                [(l, l, scales.get(d, F(1))) for l in base.basis[d]])
                for d in base.basis}
            g_comp = {d: SparseMat.from_entries(
                base.basis[d], base.basis[d],
                [(l, l, 1 / scales.get(d, F(1))) for l in base.basis[d]])
                for d in base.basis}
            f_norm = operator_norm(f_comp[k + 1], "l1_to_l1")
            g_norm = operator_norm(g_comp[k], "l1_to_l1")
            measured = ubc_constant(d_cx, k).value
            bound = inherited_ubc_constant(k_base, f_norm, g_norm, 0)
            assert measured <= bound
            checked += 1
    assert checked == 20
    _report(8, "20 homotopy-equivalent pairs: measured exact constant within "
               "|f||g|K + |h| every time")


# --------------------------------------------------------------------------
# 9. the filling experiment is deterministic and certified


def test_criterion_09_experiment_determinism_and_certificates():
    start = time.monotonic()
    cfg = ExperimentConfig(seed=0, degree=2, l_cycle=2, l_fill=3, trials=50)
    first = f2_experiment(cfg)
    second = f2_experiment(cfg)
    elapsed = time.monotonic() - start
    assert formats.experiment_csv(first).encode() == \
        formats.experiment_csv(second).encode()
    assert len(first) == 50
    for rec in first:
        assert rec.status == "Optimal"
        assert rec.certificate_ok
    ratios = [r.ratio for r in first if r.ratio is not None]
    assert max(ratios) == F(12, 25)
    assert elapsed < 300.0
    _report(9, f"two runs byte-identical, 50/50 certificates verify, "
               f"max ratio 12/25, in {elapsed:.1f}s")


# --------------------------------------------------------------------------
# 10. bounded products add cohomology degree-wise


def test_criterion_10_bounded_product_cohomology():
    members = [
        dual_complex(simplicial_chain_complex([("a", "b", "c")], name="tri")),
        dual_complex(simplicial_chain_complex(
            [("a", "b"), ("b", "c"), ("a", "c")], name="circ")),
        dual_complex(simplicial_chain_complex([("p", "q")], name="seg")),
    ]
    prod = bounded_product(members)
    degrees = sorted({d for m in members for d in m.basis})
    for k in degrees:
        assert prod.dim(k) == sum(m.dim(k) for m in members)
        assert betti(prod, k) == \
            sum(betti(m, k) for m in members if k in m.basis)
    _report(10, "three-member product: per-degree cohomology dimensions add "
                "exactly")
