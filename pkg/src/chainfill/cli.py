"""Command-line interface.

Exit codes: 0 on success, 1 when the mathematics answers no (infeasible
filling, failed validation or cover conditions, violated glueing bound),
2 on malformed input or flags.  Results are printed as 'key value' lines;
the pure arithmetic commands print just the value.  Machine-readable outputs
(chains, certificates, CSV) go under --out when given.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError, NonComplexError, NotACycleError
from .exactlp import rational_from_str, rational_to_str
from . import formats
from .gluecalc import glue_cycle, glue_upper_bound, interior_bound
from .groupcx import (
    ExperimentConfig,
    cyclic_group,
    f2_experiment,
    shapiro_maps,
    subgroup_data,
    symmetric_group,
)
from .nervekit import check_relative_cover, collar_multiplicity_bound, nerve_pair
from .normcx import (
    fill_norm,
    homology_seminorm,
    ubc_constant,
    uubc_constant,
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None


def _out_dir(args) -> Path | None:
    if getattr(args, "out", None) is None:
        return None
    p = Path(args.out)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _volumes(s: str):
    return [rational_from_str(tok) for tok in s.split(",") if tok]


def cmd_validate(args) -> int:
    # parse_complex validates; a failure surfaces through the shared handler
    cx = formats.parse_complex(_read(args.complex))
    dims = " ".join(f"{k}:{cx.dim(k)}" for k in cx.degrees())
    print(f"ok {cx.name} {cx.direction} {cx.norm_flavor}")
    print(f"dims {dims}")
    return 0


def cmd_fill(args) -> int:
    cx = formats.parse_complex(_read(args.complex))
    b = formats.parse_chain(_read(args.cycle))
    res = fill_norm(cx, args.degree, b)
    out = _out_dir(args)
    print(f"status {res.status}")
    if res.status == "Optimal":
        print(f"objective {rational_to_str(res.objective)}")
        print(f"support {len(res.solution.entries)}")
        if out is not None:
            (out / "fill.chain").write_text(
                formats.serialize_chain(res.solution))
            (out / "dual.chain").write_text(
                formats.serialize_chain(res.dual_certificate))
        return 0
    print(f"farkas_support {len(res.farkas_certificate.entries)}")
    if out is not None:
        (out / "farkas.chain").write_text(
            formats.serialize_chain(res.farkas_certificate))
    return 1


def cmd_seminorm(args) -> int:
    cx = formats.parse_complex(_read(args.complex))
    z = formats.parse_chain(_read(args.cycle))
    value = homology_seminorm(cx, args.degree, z)
    print(f"seminorm {rational_to_str(value)}")
    return 0


def _print_estimate(est, out, stem: str):
    print(f"K = {rational_to_str(est.value)}")
    print(f"mode {est.mode}")
    print(f"witnesses {len(est.witnesses)}")
    if out is not None and est.witnesses:
        b, fill = est.witnesses[0]
        (out / f"{stem}_witness.chain").write_text(formats.serialize_chain(b))
        (out / f"{stem}_witness.txt").write_text(
            f"fill_norm {rational_to_str(fill)}\n")


def cmd_ubc(args) -> int:
    cx = formats.parse_complex(_read(args.complex))
    est = ubc_constant(cx, args.degree, mode=args.mode,
                       samples=args.samples, seed=args.seed)
    _print_estimate(est, _out_dir(args), "ubc")
    return 0


def cmd_uubc(args) -> int:
    family = [formats.parse_complex(_read(p)) for p in args.complexes]
    est = uubc_constant(family, args.degree, mode=args.mode,
                        samples=args.samples, seed=args.seed)
    _print_estimate(est, _out_dir(args), "uubc")
    return 0


def cmd_nerve(args) -> int:
    cover = formats.parse_cover(_read(args.cover))
    pair = nerve_pair(cover)
    print(f"multiplicity {pair.multiplicity}")
    print(f"relative_multiplicity {pair.relative_multiplicity}")
    print(f"boundary_multiplicity {pair.boundary_multiplicity}")
    print(f"nerve_dim {pair.nerve.dim()}")
    print(f"relative_nerve_dim {pair.relative_nerve.dim()}")
    out = _out_dir(args)
    if out is not None:
        for stem, sc in (("nerve", pair.nerve),
                         ("relative_nerve", pair.relative_nerve)):
            lines = ["vertices " + " ".join(sc.vertices)]
            lines += ["simplex " + " ".join(s)
                      for s in sc.maximal_simplices()]
            (out / f"{stem}.txt").write_text("\n".join(lines) + "\n")
    return 0


def cmd_check_cover(args) -> int:
    cover = formats.parse_cover(_read(args.cover))
    report = check_relative_cover(cover, rc2_user_asserted=args.rc2_asserted)
    print(f"rc1 {_bool(report.rc1)}")
    print(f"weakly_convex {_bool(report.weakly_convex)}")
    print(f"convex {_bool(report.convex)}")
    print(f"rc2_user_asserted {_bool(report.rc2_user_asserted)}")
    for key, wit in (("rc1_witness", report.rc1_witness),
                     ("weakly_convex_witness", report.weakly_convex_witness),
                     ("convex_witness", report.convex_witness)):
        if wit is not None:
            print(f"{key} {wit}")
    return 0 if report.rc1 and report.weakly_convex else 1


def cmd_collar_bound(args) -> int:
    print(collar_multiplicity_bound(args.mult, args.boundary_mult))
    return 0


def cmd_glue_bound(args) -> int:
    print(rational_to_str(glue_upper_bound(args.K, args.n,
                                           _volumes(args.volumes))))
    return 0


def cmd_interior_bound(args) -> int:
    print(rational_to_str(interior_bound(args.K, args.n, args.volume)))
    return 0


def cmd_glue_cycle(args) -> int:
    instance = formats.parse_glueing(_read(args.glueing))
    z, c, report = glue_cycle(instance, declared_constant=args.K)
    print(f"status {report.status}")
    print(f"assembled_norm {rational_to_str(report.assembled_norm)}")
    print(f"boundary_norm {rational_to_str(report.boundary_norm)}")
    if report.fill_norm is not None:
        print(f"fill_norm {rational_to_str(report.fill_norm)}")
    print(f"bound {rational_to_str(report.bound_value)}")
    if report.bound_ok is not None:
        print(f"bound_ok {_bool(report.bound_ok)}")
    if report.declared_bound_ok is not None:
        print(f"declared_bound_ok {_bool(report.declared_bound_ok)}")
    print(f"boundary_supported {_bool(report.boundary_supported_ok)}")
    out = _out_dir(args)
    if out is not None:
        (out / "glued.chain").write_text(formats.serialize_chain(z))
        if c is not None:
            (out / "correction.chain").write_text(formats.serialize_chain(c))
        if report.farkas_certificate is not None:
            (out / "farkas.chain").write_text(
                formats.serialize_chain(report.farkas_certificate))
    ok = (report.status == "Optimal" and report.boundary_supported_ok
          and report.bound_ok and report.declared_bound_ok in (None, True))
    return 0 if ok else 1


def cmd_f2_experiment(args) -> int:
    config = ExperimentConfig(seed=args.seed, degree=args.k,
                              l_cycle=args.l_cycle, l_fill=args.l_fill,
                              trials=args.trials, support=args.support)
    records = f2_experiment(config)
    csv = formats.experiment_csv(records)
    out = _out_dir(args)
    name = (f"f2_seed{config.seed}_k{config.degree}"
            f"_lc{config.l_cycle}_lf{config.l_fill}_t{config.trials}.csv")
    if out is not None:
        (out / name).write_text(csv)
        print(f"wrote {out / name}")
    else:
        sys.stdout.write(csv)
    ratios = [r.ratio for r in records if r.ratio is not None]
    print(f"trials {len(records)}")
    print(f"max_ratio {rational_to_str(max(ratios)) if ratios else ''}")
    print(f"certificates_ok {_bool(all(r.certificate_ok for r in records))}")
    return 0


def _parse_group(spec: str):
    if spec.startswith("Z/"):
        spec = "Z" + spec[2:]
    if spec.startswith("Z") and spec[1:].isdigit():
        return cyclic_group(int(spec[1:]))
    if spec.startswith("S") and spec[1:].isdigit():
        return symmetric_group(int(spec[1:]))
    raise InputError(f"unknown group spec {spec!r} (use Z<m> or S<n>)")


def cmd_shapiro(args) -> int:
    group = _parse_group(args.group)
    sub = subgroup_data(group, [t for t in args.subgroup.split(",") if t])
    maps = shapiro_maps(group, sub, args.kmax)
    print(f"cosets {maps.coset_count}")
    print(f"phi_norm {rational_to_str(maps.phi_norm)}")
    print(f"psi_norm {rational_to_str(maps.psi_norm)}")
    for k in sorted(maps.homotopy_norms):
        print(f"h_norm {k}: {rational_to_str(maps.homotopy_norms[k])}")
    print("identities ok")
    out = _out_dir(args)
    if out is not None:
        (out / "group.cx").write_text(
            formats.serialize_complex(maps.group_complex))
        (out / "induced.cx").write_text(
            formats.serialize_complex(maps.induced_complex))
    return 0


def _rational_flag(s: str):
    return rational_from_str(s)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chainfill",
        description="Exact minimal fillings, norm constants, nerves, and "
                    "glueings for finite normed chain complexes.")
    sub = p.add_subparsers(dest="command", metavar="command")

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("validate", cmd_validate, "check a complex file")
    sp.add_argument("complex")

    sp = add("fill", cmd_fill, "minimal-norm filling of a boundary")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--cycle", required=True, metavar="CHAINFILE")
    sp.add_argument("--out")
    sp.add_argument("complex")

    sp = add("seminorm", cmd_seminorm, "norm of a cycle modulo boundaries")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--cycle", required=True, metavar="CHAINFILE")
    sp.add_argument("complex")

    for name, fn in (("ubc", cmd_ubc), ("uubc", cmd_uubc)):
        sp = add(name, fn, "optimal boundary-filling constant"
                 + (" over a family" if name == "uubc" else ""))
        sp.add_argument("--degree", type=int, required=True)
        grp = sp.add_mutually_exclusive_group()
        grp.add_argument("--exact", dest="mode", action="store_const",
                         const="exact", default="auto")
        grp.add_argument("--sampled", dest="mode", action="store_const",
                         const="sampled")
        sp.add_argument("--samples", type=int, default=200)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out")
        if name == "ubc":
            sp.add_argument("complex")
        else:
            sp.add_argument("complexes", nargs="+")

    sp = add("nerve", cmd_nerve, "nerve pair and multiplicities of a cover")
    sp.add_argument("--out")
    sp.add_argument("cover")

    sp = add("check-cover", cmd_check_cover,
             "connectivity conditions of a relative cover")
    sp.add_argument("--rc2-asserted", action="store_true")
    sp.add_argument("cover")

    sp = add("collar-bound", cmd_collar_bound,
             "multiplicity bound after attaching a collar")
    sp.add_argument("--mult", type=int, required=True)
    sp.add_argument("--boundary-mult", type=int, required=True)

    sp = add("glue-bound", cmd_glue_bound,
             "norm bound for a cycle glued from pieces")
    sp.add_argument("--K", type=_rational_flag, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--volumes", required=True,
                    help="comma-separated piece norms")

    sp = add("interior-bound", cmd_interior_bound,
             "single-piece glueing bound")
    sp.add_argument("--K", type=_rational_flag, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--volume", type=_rational_flag, required=True)

    sp = add("glue-cycle", cmd_glue_cycle,
             "assemble relative cycles along identified faces")
    sp.add_argument("--K", type=_rational_flag, default=None,
                    help="declared filling constant of the glue locus")
    sp.add_argument("--out")
    sp.add_argument("glueing")

    sp = add("f2-experiment", cmd_f2_experiment,
             "pseudorandom fillings in truncated rank-2 bar bases")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l-cycle", type=int, required=True)
    sp.add_argument("--l-fill", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--support", type=int, default=8)
    sp.add_argument("--out")

    sp = add("shapiro", cmd_shapiro,
             "averaging maps between invariant cochain complexes")
    sp.add_argument("--group", required=True, help="Z<m> or S<n>")
    sp.add_argument("--subgroup", required=True,
                    help="comma-separated element labels")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--out")

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is None:
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NotACycleError as e:
        label, value = e.witness
        print(f"not a cycle: boundary has entry {rational_to_str(value)} "
              f"at {label} (degree {e.degree})", file=sys.stderr)
        return 1
    except NonComplexError as e:
        r, c, v = e.witness
        print(f"not a complex: composite out of degree {e.degree} has entry "
              f"{rational_to_str(v)} at ({r}, {c})", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
