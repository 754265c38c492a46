"""Command-line front end.

    gmacheck verify [IDS... | all] [--coeff zz|qq|fp:P] [--max-degree D]
                    [--report json|text] [--out FILE] [--cache DIR]
                    [--jobs N] [--witnesses]
    gmacheck list
    gmacheck gb FILE
    gmacheck homology FILE --complex NAME --at I

``verify`` runs built-in scenarios and prints a report (exit 0 all pass,
1 any failure, 2 bad input).  ``gb`` prints the reduced Groebner basis of
the relation ideal of the ring declared in an ad-hoc ``.gma`` file, one
element per line.  ``homology`` reports the homology of a declared complex
at one position, either certifying it zero or describing a presentation.
"""

import argparse
import sys

from .gma import GmaError, parse_gma
from .groebner import groebner_basis
from .modules import (
    ChainComplex,
    FreeModule,
    ModuleMap,
    homology_is_zero,
    homology_presentation,
)
from .report import RunConfig, run
from .scenarios import list_scenarios


def _build_parser():
    top = argparse.ArgumentParser(prog="gmacheck", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run built-in verification scenarios")
    v.add_argument("ids", nargs="*", default=["all"],
                   help="scenario ids, or 'all' (default)")
    v.add_argument("--coeff", default=None,
                   help="coefficient override: zz, qq, or fp:P (odd prime P >= 5)")
    v.add_argument("--max-degree", type=int, default=None,
                   help="degree bound for graded dimension checks")
    v.add_argument("--report", choices=["json", "text"], default="json")
    v.add_argument("--out", default=None, help="also write the report to this file")
    v.add_argument("--cache", default=None,
                   help="persistent Groebner cache directory (overrides GMACHECK_CACHE)")
    v.add_argument("--jobs", type=int, default=1, help="worker pool width")
    v.add_argument("--witnesses", action="store_true",
                   help="include witness data for passing claims too")

    sub.add_parser("list", help="list built-in scenarios")

    g = sub.add_parser("gb", help="Groebner basis of the relation ideal in a .gma file")
    g.add_argument("file")

    h = sub.add_parser("homology", help="homology of a complex declared in a .gma file")
    h.add_argument("file")
    h.add_argument("--complex", required=True, dest="complex_name")
    h.add_argument("--at", required=True, type=int, dest="position")
    return top


def _cmd_verify(args):
    config = RunConfig(
        ids=args.ids or ["all"],
        coeff=args.coeff,
        max_degree=args.max_degree,
        witnesses=args.witnesses,
        fmt=args.report,
        out=args.out,
        cache_dir=args.cache,
        jobs=args.jobs,
    )
    code, rendered = run(config)
    sys.stdout.write(rendered)
    return code


def _cmd_list(_args):
    for sid, ref, n in list_scenarios():
        print("%-26s %2d claims  %s" % (sid, n, ref))
    return 0


def _load_scenario(path):
    with open(path) as fh:
        return parse_gma(fh.read())


def _cmd_gb(args):
    scenario = _load_scenario(args.file)
    rname, coeff, _, _, relations = scenario.decl["ring"]
    ring = scenario.build(coeff)[rname]
    if not relations:
        return 0
    basis = groebner_basis([ring.parse(r) for r in relations], ring=ring, rank=1)
    for p in basis.scalar_elements():
        print(p)
    return 0


def _cmd_homology(args):
    scenario = _load_scenario(args.file)
    coeff = scenario.decl["ring"][1]
    env = scenario.build(coeff)
    name = args.complex_name
    declared = dict(scenario.decl.get("complexes", []))
    if name not in declared:
        print("error: no complex %r in %s (have: %s)"
              % (name, args.file, ", ".join(sorted(declared)) or "none"),
              file=sys.stderr)
        return 2
    C = env[name]
    i = args.position
    if not 0 <= i <= len(C.maps):
        print("error: position %d out of range 0..%d" % (i, len(C.maps)),
              file=sys.stderr)
        return 2
    # pad with rank-0 ends so the boundary positions become interior
    zero = FreeModule(C.ring, [])
    maps = [ModuleMap.zero(C.maps[0].target, zero)]
    maps += list(C.maps)
    maps.append(ModuleMap.zero(zero, C.maps[-1].source))
    pres = C.presentations
    use = [None] + list(pres) + [None] if any(p is not None for p in pres) else None
    C = ChainComplex(maps, presentations=use)
    cert = homology_is_zero(C, i + 1)
    if cert.ok:
        print("H_%d(%s) = 0  (certified by lifting)" % (i, name))
        return 0
    H = homology_presentation(C, i + 1)
    gens = H.generators()
    degrees = sorted(d for _, d in gens)
    print("H_%d(%s) != 0: %d generator(s), degrees %s, %d relation row(s)"
          % (i, name, len(gens), degrees, len(H.rels)))
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handler = {
        "verify": _cmd_verify,
        "list": _cmd_list,
        "gb": _cmd_gb,
        "homology": _cmd_homology,
    }[args.command]
    try:
        return handler(args)
    except (GmaError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
