"""Glueing relative cycles along identified boundary faces, with exact norms.

Pieces carry a top-degree chain whose boundary lives on declared glue and
free faces.  Identifications pair up glue faces two by two; the paired face
keeps the first piece's label and orientation, and the second piece's copy
enters with a flipped sign, so boundaries of matching pieces cancel.  The
glue locus complex has those merged faces in degree n-1 and nothing in
degree n, which makes the correction fill trivial: a nonzero merged boundary
is certified infeasible, a zero one assembles the cycle with no correction.
Upper-bound arithmetic for the assembled norm is exposed separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .exactlp import SparseMat, SparseVec, rat
from .normcx import (
    NormedComplex,
    _check_label,
    fill_norm,
    ubc_constant,
    validate_complex,
)


def glue_upper_bound(constant, degree: int, volumes) -> Fraction:
    """Norm bound for a cycle glued from relative pieces: each piece
    contributes its own mass plus the filled correction of its boundary,
    |z| <= (1 + K (n+1)) * sum of piece norms."""
    k = rat(constant)
    vols = [rat(v) for v in volumes]
    if k < 0 or degree < 1 or any(v < 0 for v in vols):
        raise InputError("need constant >= 0, degree >= 1, volumes >= 0")
    return (1 + k * (degree + 1)) * sum(vols, Fraction(0))


def interior_bound(constant, degree: int, volume) -> Fraction:
    """Single-piece version of the glueing bound."""
    return glue_upper_bound(constant, degree, [volume])


@dataclass(frozen=True)
class GluePiece:
    """A named chain-l1 complex with a top chain and marked boundary faces."""

    name: str
    complex: NormedComplex
    cycle: SparseVec
    glue_labels: tuple[str, ...]
    free_labels: tuple[str, ...]


@dataclass(frozen=True)
class GlueingInstance:
    degree: int
    pieces: tuple[GluePiece, ...]
    identifications: tuple  # pairs ((piece, label), (piece, label))


def glue_piece(name: str, cx: NormedComplex, cycle: SparseVec,
               glue_labels, free_labels) -> GluePiece:
    _check_label(name)
    validate_complex(cx)
    if cx.direction != "chain" or cx.norm_flavor != "l1":
        raise InputError(f"piece {name!r} must be a chain complex with the "
                         "l1 norm")
    if cx.name != name:
        # the stored complex carries the piece's name, so several pieces may
        # share one complex object and the text form stays invertible
        cx = NormedComplex(name, cx.direction, cx.norm_flavor,
                           dict(cx.basis), dict(cx.maps))
        validate_complex(cx)
    return GluePiece(name, cx, cycle, tuple(sorted(set(glue_labels))),
                     tuple(sorted(set(free_labels))))


def glueing_instance(degree: int, pieces, identifications) -> GlueingInstance:
    """Validated glueing data.

    Checks: distinct piece names; each piece has the two top degrees, its
    chain lives in degree n, its marked faces in degree n-1, glue and free
    faces are disjoint, and the chain's boundary is supported on marked
    faces; identifications pair distinct glue slots, each glue face of each
    piece exactly once.
    """
    n = degree
    if n < 1:
        raise InputError("glueing degree must be >= 1")
    plist = tuple(pieces)
    names = [p.name for p in plist]
    if len(set(names)) != len(names):
        raise InputError("duplicate piece names")
    by_name = {p.name: p for p in plist}
    for p in plist:
        if n not in p.complex.basis or n - 1 not in p.complex.basis:
            raise InputError(f"piece {p.name!r} lacks degree {n} or {n - 1}")
        if not p.cycle.support() <= set(p.complex.basis[n]):
            raise InputError(f"piece {p.name!r}: chain not in degree {n}")
        faces = set(p.complex.basis[n - 1])
        if not set(p.glue_labels) <= faces or not set(p.free_labels) <= faces:
            raise InputError(f"piece {p.name!r}: marked faces not in degree "
                             f"{n - 1}")
        if set(p.glue_labels) & set(p.free_labels):
            raise InputError(f"piece {p.name!r}: glue and free faces overlap")
        out = p.complex.maps.get(n)
        bd = out.apply(p.cycle) if out is not None else SparseVec()
        stray = bd.support() - set(p.glue_labels) - set(p.free_labels)
        if stray:
            raise InputError(f"piece {p.name!r}: boundary touches unmarked "
                             f"face {sorted(stray)[0]!r}")
    used = set()
    idents = []
    for pair in identifications:
        (pa, la), (pb, lb) = pair
        for pn, l in ((pa, la), (pb, lb)):
            if pn not in by_name:
                raise InputError(f"identification names unknown piece {pn!r}")
            if l not in by_name[pn].glue_labels:
                raise InputError(f"{l!r} is not a glue face of {pn!r}")
            if (pn, l) in used:
                raise InputError(f"glue face {pn}:{l} identified twice")
            used.add((pn, l))
        if (pa, la) == (pb, lb):
            raise InputError("a face cannot be glued to itself")
        idents.append(((pa, la), (pb, lb)))
    for p in plist:
        for l in p.glue_labels:
            if (p.name, l) not in used:
                raise InputError(f"glue face {p.name}:{l} is never identified")
    # canonical order: pieces by name, identifications lexicographically
    return GlueingInstance(n, tuple(sorted(plist, key=lambda p: p.name)),
                           tuple(sorted(idents)))


@dataclass(frozen=True)
class GlueReport:
    degree: int
    piece_cycle_norms: tuple
    assembled_norm: Fraction
    boundary_norm: Fraction
    status: str
    fill_norm: Fraction | None
    declared_constant: Fraction | None
    declared_bound_ok: bool | None
    bound_value: Fraction
    bound_ok: bool | None
    boundary_supported_ok: bool
    farkas_certificate: SparseVec | None


def glue_cycle(instance: GlueingInstance, declared_constant=None):
    """Assemble the pieces' chains into one chain on the disjoint union with
    glue faces merged, filling the merged boundary inside the glue locus.

    Returns (z, c, report): z the assembled chain over 'piece.label' cells,
    c the correction chain on the locus (None when the merged boundary is
    certified infeasible), and the exact norm report.
    """
    n = instance.degree
    quotient = {}
    merged_labels = []
    for (pa, la), (pb, lb) in instance.identifications:
        merged = f"{pa}.{la}"
        quotient[(pa, la)] = (Fraction(1), merged)
        quotient[(pb, lb)] = (Fraction(-1), merged)
        merged_labels.append(merged)
    merged_labels.sort()

    locus = NormedComplex("gluelocus", "chain", "l1",
                          {n: (), n - 1: tuple(merged_labels)},
                          {n: SparseMat.zero(tuple(merged_labels), ())})

    b_acc: dict[str, Fraction] = {}
    z_acc: dict[str, Fraction] = {}
    bd_acc: dict[str, Fraction] = {}
    norms = []
    for p in instance.pieces:
        norms.append((p.name, p.cycle.l1_norm()))
        for l, v in p.cycle.entries.items():
            z_acc[f"{p.name}.{l}"] = z_acc.get(f"{p.name}.{l}", Fraction(0)) + v
        out = p.complex.maps.get(n)
        bd = out.apply(p.cycle) if out is not None else SparseVec()
        for l, v in bd.entries.items():
            key = (p.name, l)
            if key in quotient:
                sign, merged = quotient[key]
                b_acc[merged] = b_acc.get(merged, Fraction(0)) + sign * v
                bd_acc[merged] = bd_acc.get(merged, Fraction(0)) + sign * v
            else:
                lab = f"{p.name}.{l}"
                bd_acc[lab] = bd_acc.get(lab, Fraction(0)) + v
    b = SparseVec(b_acc)
    z = SparseVec(z_acc)
    boundary_glued = SparseVec(bd_acc)

    res = fill_norm(locus, n - 1, b)
    free_cells = {f"{p.name}.{l}" for p in instance.pieces
                  for l in p.free_labels}
    supported = boundary_glued.support() <= free_cells

    declared = rat(declared_constant) if declared_constant is not None else None
    if declared is not None and declared < 0:
        raise InputError("declared constant must be nonnegative")
    used_constant = declared if declared is not None \
        else ubc_constant(locus, n - 1).value
    bound_value = glue_upper_bound(used_constant, n,
                                   [v for _, v in norms])
    assembled = z.l1_norm()
    if res.status == "Optimal":
        c = res.solution
        fill = res.objective
        declared_ok = (fill <= declared * b.l1_norm()) \
            if declared is not None else None
        bound_ok = assembled + fill <= bound_value
        farkas = None
    else:
        c = None
        fill = None
        declared_ok = None
        bound_ok = None
        farkas = res.farkas_certificate
    report = GlueReport(
        degree=n, piece_cycle_norms=tuple(norms), assembled_norm=assembled,
        boundary_norm=b.l1_norm(), status=res.status, fill_norm=fill,
        declared_constant=declared, declared_bound_ok=declared_ok,
        bound_value=bound_value, bound_ok=bound_ok,
        boundary_supported_ok=supported, farkas_certificate=farkas)
    return z, c, report
