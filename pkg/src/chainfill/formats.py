"""Plain-text formats for complexes, chains, covers, and glueing instances.

Every format is line-based: blank lines and '#' comments are skipped, tokens
are whitespace-separated, and rationals use the canonical 'p' or 'p/q' form
(lowest terms, positive denominator, never 'x/1' or '-0').  Parsing accepts
any line order inside a file; serialization is canonical (sorted lines,
ascending degrees, LF endings), so parse(serialize(x)) == x and serialized
output is byte-stable.

Complex files:        complex <name> <chain|cochain> <l1|linf>
                      degree <k>: <labels...>
                      map <k>: <row> <col> <p/q>     (one entry per line)
Chain files:          <label> <p/q>                  (one entry per line)
Cover files:          vertices <v...> / simplex <v...> / subspace: <v...>
                      member <name>: <v...>
Glueing files:        glueing <n>, embedded complex blocks, then
                      cycle <piece>: <label> <p/q>, glue/free <piece>: <...>,
                      identify <pieceA>:<label> <pieceB>:<label>
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .exactlp import SparseMat, SparseVec, rational_from_str, rational_to_str
from .gluecalc import GlueingInstance, glue_piece, glueing_instance
from .groupcx import ExperimentRecord
from .nervekit import CoverData, SimplicialComplex, cover_data
from .normcx import NormedComplex, validate_complex


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line.split()


def _degree_token(tok: str, lineno: int) -> int:
    if not tok.endswith(":"):
        raise InputError(f"line {lineno}: expected '<degree>:', got {tok!r}")
    try:
        return int(tok[:-1])
    except ValueError:
        raise InputError(f"line {lineno}: bad degree {tok[:-1]!r}") from None


def _rat(tok: str, lineno: int) -> Fraction:
    try:
        return rational_from_str(tok)
    except InputError as e:
        raise InputError(f"line {lineno}: {e}") from None


# ---------------------------------------------------------------------------
# complexes

def _parse_complex_lines(lines) -> NormedComplex:
    header = None
    degrees: dict[int, tuple[str, ...]] = {}
    entries: dict[int, list] = {}
    for lineno, toks in lines:
        if toks[0] == "complex":
            if header is not None:
                raise InputError(f"line {lineno}: second complex header")
            if len(toks) != 4:
                raise InputError(f"line {lineno}: complex header needs "
                                 "'complex <name> <direction> <flavor>'")
            header = (lineno, toks[1], toks[2], toks[3])
        elif toks[0] == "degree":
            if len(toks) < 2:
                raise InputError(f"line {lineno}: degree line needs '<k>:'")
            k = _degree_token(toks[1], lineno)
            if k in degrees:
                raise InputError(f"line {lineno}: degree {k} given twice")
            degrees[k] = tuple(toks[2:])
        elif toks[0] == "map":
            if len(toks) != 5:
                raise InputError(f"line {lineno}: map line needs "
                                 "'map <k>: <row> <col> <p/q>'")
            k = _degree_token(toks[1], lineno)
            entries.setdefault(k, []).append(
                (lineno, toks[2], toks[3], _rat(toks[4], lineno)))
        else:
            raise InputError(f"line {lineno}: unknown keyword {toks[0]!r}")
    if header is None:
        raise InputError("missing 'complex' header line")
    lineno, name, direction, flavor = header
    maps = {}
    for k, ents in entries.items():
        if k not in degrees:
            raise InputError(f"line {ents[0][0]}: map out of unknown degree "
                             f"{k}")
        target = k - 1 if direction == "chain" else k + 1
        if target not in degrees:
            raise InputError(f"line {ents[0][0]}: map out of degree {k} needs "
                             f"degree {target}")
        seen = set()
        for ln, r, c, _ in ents:
            if (r, c) in seen:
                raise InputError(f"line {ln}: duplicate map entry ({r}, {c})")
            seen.add((r, c))
        try:
            maps[k] = SparseMat.from_entries(
                degrees[target], degrees[k],
                [(r, c, v) for _, r, c, v in ents])
        except InputError as e:
            raise InputError(f"line {ents[0][0]}: {e}") from None
    cx = NormedComplex(name, direction, flavor, degrees, maps)
    validate_complex(cx)
    return cx


def parse_complex(text: str) -> NormedComplex:
    return _parse_complex_lines(list(_lines(text)))


def serialize_complex(cx: NormedComplex) -> str:
    out = [f"complex {cx.name} {cx.direction} {cx.norm_flavor}"]
    for k in sorted(cx.basis):
        out.append(" ".join(["degree", f"{k}:"] + list(cx.basis[k])).rstrip())
    for k in sorted(cx.maps):
        mat = cx.maps[k]
        rpos = {r: i for i, r in enumerate(mat.row_labels)}
        cpos = {c: i for i, c in enumerate(mat.col_labels)}
        cells = [(cpos[c], rpos[r], r, c, v)
                 for c, col in mat.cols.items() for r, v in col.items()]
        for _, _, r, c, v in sorted(cells):
            out.append(f"map {k}: {r} {c} {rational_to_str(v)}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# chains

def parse_chain(text: str) -> SparseVec:
    acc: dict[str, Fraction] = {}
    for lineno, toks in _lines(text):
        if len(toks) != 2:
            raise InputError(f"line {lineno}: chain line needs "
                             "'<label> <p/q>'")
        if toks[0] in acc:
            raise InputError(f"line {lineno}: duplicate label {toks[0]!r}")
        acc[toks[0]] = _rat(toks[1], lineno)
    return SparseVec(acc)


def serialize_chain(vec: SparseVec) -> str:
    lines = [f"{l} {rational_to_str(v)}" for l, v in vec.items_sorted()]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# covers

def parse_cover(text: str) -> CoverData:
    vertices = None
    simplices = []
    subspace: list[str] = []
    saw_subspace = False
    members: list[tuple[str, tuple[str, ...]]] = []
    for lineno, toks in _lines(text):
        if toks[0] == "vertices":
            if vertices is not None:
                raise InputError(f"line {lineno}: second vertices line")
            vertices = tuple(toks[1:])
        elif toks[0] == "simplex":
            if len(toks) < 2:
                raise InputError(f"line {lineno}: empty simplex")
            simplices.append(tuple(toks[1:]))
        elif toks[0] == "subspace:":
            if saw_subspace:
                raise InputError(f"line {lineno}: second subspace line")
            saw_subspace = True
            subspace = list(toks[1:])
        elif toks[0] == "member":
            if len(toks) < 3 or not toks[1].endswith(":"):
                raise InputError(f"line {lineno}: member line needs "
                                 "'member <name>: <vertices...>'")
            members.append((toks[1][:-1], tuple(toks[2:])))
        else:
            raise InputError(f"line {lineno}: unknown keyword {toks[0]!r}")
    if vertices is None:
        raise InputError("missing 'vertices' line")
    try:
        space = SimplicialComplex.from_simplices(simplices, vertices=vertices)
        return cover_data(space, subspace, members)
    except InputError as e:
        raise InputError(f"cover: {e}") from None


def serialize_cover(cover: CoverData) -> str:
    out = ["vertices " + " ".join(cover.space.vertices)]
    for s in cover.space.maximal_simplices():
        out.append("simplex " + " ".join(s))
    if cover.subspace:
        out.append("subspace: " + " ".join(cover.subspace))
    for n, vs in cover.members:
        out.append(f"member {n}: " + " ".join(vs))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# glueing instances

_GLUE_KEYWORDS = {"complex", "cycle", "glue", "free", "identify"}


def parse_glueing(text: str) -> GlueingInstance:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "glueing":
        raise InputError("missing 'glueing <n>' header line")
    lineno, toks = lines[0]
    if len(toks) != 2:
        raise InputError(f"line {lineno}: glueing header needs one degree")
    try:
        degree = int(toks[1])
    except ValueError:
        raise InputError(f"line {lineno}: bad degree {toks[1]!r}") from None

    blocks: list[list] = []
    rest = []
    current = None
    for lineno, toks in lines[1:]:
        if toks[0] == "complex":
            current = [(lineno, toks)]
            blocks.append(current)
        elif toks[0] in ("degree", "map"):
            if current is None:
                raise InputError(f"line {lineno}: {toks[0]} line outside a "
                                 "complex block")
            current.append((lineno, toks))
        elif toks[0] in _GLUE_KEYWORDS:
            current = None
            rest.append((lineno, toks))
        else:
            raise InputError(f"line {lineno}: unknown keyword {toks[0]!r}")

    complexes = {}
    for block in blocks:
        cx = _parse_complex_lines(block)
        if cx.name in complexes:
            raise InputError(f"line {block[0][0]}: duplicate piece "
                             f"{cx.name!r}")
        complexes[cx.name] = cx

    cycles: dict[str, dict[str, Fraction]] = {}
    glue: dict[str, list[str]] = {}
    free: dict[str, list[str]] = {}
    idents = []

    def piece_token(tok: str, lineno: int) -> str:
        if not tok.endswith(":"):
            raise InputError(f"line {lineno}: expected '<piece>:', got "
                             f"{tok!r}")
        name = tok[:-1]
        if name not in complexes:
            raise InputError(f"line {lineno}: unknown piece {name!r}")
        return name

    for lineno, toks in rest:
        if toks[0] == "cycle":
            if len(toks) != 4:
                raise InputError(f"line {lineno}: cycle line needs "
                                 "'cycle <piece>: <label> <p/q>'")
            name = piece_token(toks[1], lineno)
            ent = cycles.setdefault(name, {})
            if toks[2] in ent:
                raise InputError(f"line {lineno}: duplicate cycle entry "
                                 f"{toks[2]!r}")
            ent[toks[2]] = _rat(toks[3], lineno)
        elif toks[0] in ("glue", "free"):
            if len(toks) < 2:
                raise InputError(f"line {lineno}: {toks[0]} line needs "
                                 "'<piece>:'")
            name = piece_token(toks[1], lineno)
            store = glue if toks[0] == "glue" else free
            if name in store:
                raise InputError(f"line {lineno}: second {toks[0]} line for "
                                 f"{name!r}")
            store[name] = list(toks[2:])
        elif toks[0] == "identify":
            if len(toks) != 3:
                raise InputError(f"line {lineno}: identify line needs two "
                                 "'<piece>:<label>' slots")
            slots = []
            for tok in toks[1:]:
                parts = tok.split(":")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise InputError(f"line {lineno}: bad slot {tok!r}")
                slots.append((parts[0], parts[1]))
            idents.append(tuple(slots))

    pieces = []
    for name in sorted(complexes):
        pieces.append(glue_piece(name, complexes[name],
                                 SparseVec(cycles.get(name, {})),
                                 glue.get(name, ()), free.get(name, ())))
    return glueing_instance(degree, pieces, idents)


def serialize_glueing(instance: GlueingInstance) -> str:
    out = [f"glueing {instance.degree}"]
    for p in sorted(instance.pieces, key=lambda p: p.name):
        out.append(serialize_complex(p.complex).rstrip("\n"))
        for l, v in p.cycle.items_sorted():
            out.append(f"cycle {p.name}: {l} {rational_to_str(v)}")
        if p.glue_labels:
            out.append(f"glue {p.name}: " + " ".join(p.glue_labels))
        if p.free_labels:
            out.append(f"free {p.name}: " + " ".join(p.free_labels))
    for (pa, la), (pb, lb) in sorted(instance.identifications):
        out.append(f"identify {pa}:{la} {pb}:{lb}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# experiment output

CSV_HEADER = "seed,trial,k,L_cycle,L_fill,boundary_norm,fill_norm,ratio,status"


def experiment_csv(records: list[ExperimentRecord]) -> str:
    rows = [CSV_HEADER]
    for r in records:
        rows.append(",".join([
            str(r.seed), str(r.trial), str(r.degree), str(r.l_cycle),
            str(r.l_fill), rational_to_str(r.boundary_norm),
            rational_to_str(r.fill_norm),
            rational_to_str(r.ratio) if r.ratio is not None else "",
            r.status]))
    return "\n".join(rows) + "\n"
