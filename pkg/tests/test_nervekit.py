"""Covers, nerves, relative multiplicities, and connectivity diagnostics."""

import pytest

from chainfill.errors import InputError
from chainfill.nervekit import (
    CoverData,
    SimplicialComplex,
    check_relative_cover,
    collar_multiplicity_bound,
    components,
    cover_data,
    is_connected,
    nerve_pair,
)
from chainfill.normcx import betti


def hexagon():
    edges = [("h0", "h1"), ("h1", "h2"), ("h2", "h3"),
             ("h3", "h4"), ("h4", "h5"), ("h0", "h5")]
    return SimplicialComplex.from_simplices(edges)


def hexagon_cover():
    return cover_data(hexagon(), [], [
        ("U", ["h0", "h1", "h2"]),
        ("V", ["h2", "h3", "h4"]),
        ("W", ["h4", "h5", "h0"]),
    ])


def square_with_diagonal():
    return SimplicialComplex.from_simplices([("a", "b", "c"), ("a", "c", "d")])


def theta_graph():
    # two arcs u-x-v and u-y-v plus the chord u-v
    return SimplicialComplex.from_simplices(
        [("u", "x"), ("v", "x"), ("u", "y"), ("v", "y"), ("u", "v")])


def four_cycle():
    # the same two arcs without the chord; u and v are not adjacent
    return SimplicialComplex.from_simplices(
        [("u", "x"), ("v", "x"), ("u", "y"), ("v", "y")])


# ------------------------------------------------------ simplicial complex


def test_from_simplices_closes_faces():
    sc = square_with_diagonal()
    assert sc.dim() == 2
    assert ("a", "c") in sc.simplices
    assert ("a",) in sc.simplices
    assert sc.maximal_simplices() == [("a", "b", "c"), ("a", "c", "d")]
    assert betti(sc.chain_complex(), 1) == 0


def test_direct_construction_is_validated():
    with pytest.raises(InputError):
        SimplicialComplex(("a", "b"), frozenset({("a",), ("b",), ("a", "b"),
                                                 ("a", "b", "c")}))
    with pytest.raises(InputError):
        SimplicialComplex(("a", "b"), frozenset({("a",), ("b",), ("b", "a")}))
    with pytest.raises(InputError):
        SimplicialComplex(("a",), frozenset())
    with pytest.raises(InputError):
        SimplicialComplex(("a|b",), frozenset({("a|b",)}))


def test_induced_subcomplex():
    sc = theta_graph()
    ind = sc.induced({"u", "v", "x"})
    assert ind.edges() == [("u", "v"), ("u", "x"), ("v", "x")]
    with pytest.raises(InputError):
        sc.induced({"zz"})


def test_components_and_connectivity():
    sc = theta_graph()
    assert is_connected(sc)
    assert components(sc, {"x", "y"}) == (("x",), ("y",))
    assert is_connected(sc, {"u", "x", "v"})
    assert is_connected(SimplicialComplex((), frozenset()))


# ------------------------------------------------------------- cover data


def test_cover_data_validation():
    sc = hexagon()
    with pytest.raises(InputError):
        cover_data(sc, ["zz"], [("U", sc.vertices)])
    with pytest.raises(InputError):
        cover_data(sc, [], [("U", sc.vertices), ("U", sc.vertices)])
    with pytest.raises(InputError):
        cover_data(sc, [], [("U", [])])
    with pytest.raises(InputError):
        cover_data(sc, [], [("U", ["h0", "zz"])])
    with pytest.raises(InputError):
        # h0 and h3 are antipodal, so this member is disconnected
        cover_data(sc, [], [("U", ["h0", "h3"]), ("V", sc.vertices)])
    with pytest.raises(InputError):
        # edge h3-h4 is in no member
        cover_data(sc, [], [("U", ["h0", "h1", "h2", "h3"])])


def test_cover_members_are_canonically_ordered():
    sc = hexagon()
    cov = cover_data(sc, ["h2", "h0"], [
        ("B", ["h2", "h3", "h4"]),
        ("A", ["h0", "h1", "h2"]),
        ("C", ["h4", "h5", "h0"]),
    ])
    assert [n for n, _ in cov.members] == ["A", "B", "C"]
    assert cov.subspace == ("h0", "h2")


# ------------------------------------------------------------- nerve pair


def test_hexagon_nerve_is_boundary_of_a_triangle():
    pair = nerve_pair(hexagon_cover())
    nerve = pair.nerve
    assert set(nerve.vertices) == {"U", "V", "W"}
    assert nerve.edges() == [("U", "V"), ("U", "W"), ("V", "W")]
    assert nerve.dim() == 1
    assert ("U", "V", "W") not in nerve.simplices
    assert pair.multiplicity == 2
    assert nerve.dim() == pair.multiplicity - 1
    circle = nerve.chain_complex()
    assert betti(circle, 1) == 1


def test_hexagon_relative_parts_with_empty_subspace():
    pair = nerve_pair(hexagon_cover())
    assert pair.relative_multiplicity == 2
    assert pair.boundary_multiplicity == 0
    assert pair.relative_nerve.simplices == frozenset()


def test_every_intersection_meeting_subspace_kills_relative_multiplicity():
    sc = square_with_diagonal()
    cov = cover_data(sc, ["a"], [
        ("U1", ["a", "b", "c"]),
        ("U2", ["a", "c", "d"]),
    ])
    pair = nerve_pair(cov)
    assert pair.multiplicity == 2
    assert pair.relative_multiplicity == 0
    assert pair.boundary_multiplicity == 2
    assert pair.relative_nerve.simplices == pair.nerve.simplices


def test_relative_nerve_is_strict_subcomplex_when_a_pair_misses():
    sc = square_with_diagonal()
    cov = cover_data(sc, ["b", "d"], [
        ("U1", ["a", "b", "c"]),
        ("U2", ["a", "c", "d"]),
    ])
    pair = nerve_pair(cov)
    # U1 and U2 intersect in the diagonal {a, c}, away from the subspace
    assert pair.relative_multiplicity == 2
    assert pair.boundary_multiplicity == 1
    assert ("U1", "U2") in pair.nerve.simplices
    assert ("U1", "U2") not in pair.relative_nerve.simplices
    assert set(pair.relative_nerve.vertices) == {"U1", "U2"}


# ---------------------------------------------------- cover condition checks


def test_four_cycle_cover_is_rc1_but_not_weakly_convex():
    sc = four_cycle()
    cov = cover_data(sc, ["u"], [
        ("X", ["u", "x", "v"]),
        ("Y", ["u", "y", "v"]),
    ])
    rep = check_relative_cover(cov)
    assert rep.rc1 and rep.rc1_witness is None
    assert not rep.weakly_convex
    names, stray = rep.weakly_convex_witness
    assert names == ("X", "Y")
    assert stray == ("v",)
    assert not rep.convex
    assert not rep.rc2_user_asserted


def test_four_cycle_cover_with_everything_marked_is_weakly_convex():
    # both components of X & Y meet the subspace, but X & Y stays disconnected
    sc = four_cycle()
    cov = cover_data(sc, ["u", "v", "x", "y"], [
        ("X", ["u", "x", "v"]),
        ("Y", ["u", "y", "v"]),
    ])
    rep = check_relative_cover(cov, rc2_user_asserted=True)
    assert rep.rc1
    assert rep.weakly_convex
    assert not rep.convex
    assert rep.convex_witness == (("X", "Y"), (("u",), ("v",)))
    assert rep.rc2_user_asserted


def test_rc1_fails_on_disconnected_subspace_trace():
    sc = four_cycle()
    cov = cover_data(sc, ["x", "y"], [("M", ["u", "v", "x", "y"])])
    rep = check_relative_cover(cov)
    assert not rep.rc1
    name, comps = rep.rc1_witness
    assert name == "M"
    assert comps == (("x",), ("y",))


def test_convex_cover_passes_all_checks():
    sc = square_with_diagonal()
    cov = cover_data(sc, ["a"], [
        ("U1", ["a", "b", "c"]),
        ("U2", ["a", "c", "d"]),
    ])
    rep = check_relative_cover(cov)
    assert rep.rc1 and rep.weakly_convex and rep.convex
    assert rep.convex_witness is None


# ------------------------------------------------------------ collar bound


def test_collar_multiplicity_bound():
    assert collar_multiplicity_bound(2, 2) == 3
    assert collar_multiplicity_bound(5, 1) == 5
    assert collar_multiplicity_bound(0, 0) == 1
    with pytest.raises(InputError):
        collar_multiplicity_bound(-1, 0)


def test_collar_bound_matches_nerve_pair_outputs():
    pair = nerve_pair(hexagon_cover())
    assert collar_multiplicity_bound(
        pair.multiplicity, pair.boundary_multiplicity) == 2
