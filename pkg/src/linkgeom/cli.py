"""Command-line interface.

Reports go to stdout as JSON, a one-line human summary goes to stderr.
Exit codes: 0 success, 1 theorem violation, 2 invalid input, 3 budget or
search exhausted.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from .constructions import (ProductGrid, cone, cylinder_grid, grid_from_json, grid_to_json,
                            hexagon_helix6, k4n_grid_r4, moment_curve, rational_helix,
                            simplex_plus_interior, torus_k3n)
from .errors import (BudgetExceeded, InvalidInput, LinkGeomError, PerturbExhausted,
                     SearchExhausted)
from .kernel import (Configuration, configuration_from_json, configuration_to_json,
                     derive_seed, random_configuration)
from .partitions import hulls_common_point, radon_partition, tverberg_counterexample, tverberg_search
from .realizability import is_linear_realization, load_hypergraph
from .scalar import format_scalar
from .trials import aggregate, run_trials
from .verifiers import REGISTRY, verify

EXIT_OK, EXIT_VIOLATED, EXIT_INVALID, EXIT_EXHAUSTED = 0, 1, 2, 3

CONSTRUCTIONS = ("moment-curve", "hexagon-helix", "rational-helix", "simplex-plus-interior",
                 "cone", "cylinder-grid", "torus-k3xN", "k4n-grid", "tverberg-counterexample")


class UsageError(InvalidInput):
    pass


def _need(args, name):
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"this construction needs --{name.replace('_', '-')}")
    return val


def build_construction(name: str, args):
    """Configuration or ProductGrid for a construction name."""
    if name == "moment-curve":
        return moment_curve(_need(args, "n"), _need(args, "d"))
    if name == "hexagon-helix":
        return hexagon_helix6()
    if name == "rational-helix":
        return rational_helix(args.n or 6)
    if name == "simplex-plus-interior":
        return simplex_plus_interior(_need(args, "d"))
    if name == "cone":
        base = _load_any(_need(args, "input"))
        if isinstance(base, ProductGrid):
            base = base.config
        apex = [Fraction(c) for c in _need(args, "apex").split(",")]
        return cone(apex, base)
    if name == "cylinder-grid":
        return cylinder_grid(_need(args, "n"))
    m = re.fullmatch(r"torus-k3x(\d+)", name)
    if m or name == "torus-k3xN":
        return torus_k3n(int(m.group(1)) if m else _need(args, "n"))
    if name == "k4n-grid":
        return k4n_grid_r4(_need(args, "n"))
    if name == "tverberg-counterexample":
        return tverberg_counterexample(_need(args, "d"), args.r or 3)
    raise UsageError(f"unknown construction {name!r}; known: {', '.join(CONSTRUCTIONS)}")


def _load_any(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: not valid JSON ({e.msg})") from None
    if isinstance(doc, dict) and "shape" in doc:
        return grid_from_json(doc)
    return configuration_from_json(doc)


def _subject(args, want_grid=False):
    if args.input:
        obj = _load_any(args.input)
    elif args.construct:
        obj = build_construction(args.construct, args)
    else:
        raise UsageError("give --input PATH, --construct NAME or --random")
    if want_grid and not isinstance(obj, ProductGrid):
        raise UsageError("this command needs a product grid file (with 'shape')")
    if not want_grid and isinstance(obj, ProductGrid):
        obj = obj.config
    return obj


def _jsonable(obj):
    if isinstance(obj, ProductGrid):
        return grid_to_json(obj)
    if isinstance(obj, Configuration):
        return configuration_to_json(obj)
    return obj


def _certificate_json(cert, cfg):
    if cert is None:
        return None
    f = cfg.field
    return {
        "blocks": [list(b) for b in cert.blocks],
        "block_labels": [[cfg.labels[i] for i in b] for b in cert.blocks],
        "common_point": [format_scalar(c, f) for c in cert.common_point],
        "coefficients": [[format_scalar(c, f) for c in lam] for lam in cert.coefficients],
    }


def _verify_kwargs(args, theorem):
    if theorem == "stat-il":
        return {"max_n": args.max_n}
    if theorem == "deleted-face":
        return {"variant": args.variant}
    return {}


def cmd_verify(args):
    theorem = args.theorem
    if theorem not in REGISTRY:
        raise UsageError(f"unknown theorem id {theorem!r}; known: {', '.join(sorted(REGISTRY))}")
    if args.random:
        shape = tuple(args.shape) if args.shape else None
        results = run_trials(theorem, args.trials, args.seed, args.bits, args.workers,
                             n=args.n, shape=shape, variant=args.variant, max_n=args.max_n)
        trials = [{"seed": s, "report": r.to_json()} for s, r in results]
        reports = [r for _, r in results]
    else:
        subject = _subject(args, want_grid=theorem == "product")
        rep = verify(theorem, subject, **_verify_kwargs(args, theorem))
        trials = [{"seed": None, "report": rep.to_json()}]
        reports = [rep]
    agg = aggregate(reports)
    out = {"seed": args.seed if args.random else None, "trials": trials, "aggregate": agg.to_json()}
    summary = (f"{theorem}: {agg.trials} trial(s), {agg.confirmed} confirmed, "
               f"{agg.degenerate} degenerate, {agg.violated} violated")
    return out, summary, EXIT_VIOLATED if agg.violated else EXIT_OK


def cmd_construct(args):
    obj = build_construction(args.name, args)
    doc = _jsonable(obj)
    cfg = obj.config if isinstance(obj, ProductGrid) else obj
    return doc, f"{args.name}: {len(cfg)} points in R^{cfg.dimension} ({cfg.field})", EXIT_OK


def _partition_subject(args):
    if args.random:
        n = _need(args, "n")
        return random_configuration(n, _need(args, "d"), derive_seed(args.seed, 0), args.bits)
    return _subject(args)


def cmd_radon(args):
    cfg = _partition_subject(args)
    cert = radon_partition(cfg)
    check = hulls_common_point(cfg, cert.blocks)
    valid = cert.validate(cfg) and check.feasible
    out = {"mode": "radon", "certificate": _certificate_json(cert, cfg), "validated": valid}
    return out, f"radon: blocks {[list(b) for b in cert.blocks]}", EXIT_OK if valid else EXIT_VIOLATED


def cmd_tverberg(args):
    cfg = _partition_subject(args)
    res = tverberg_search(cfg, args.r or 3)
    out = {
        "mode": "tverberg",
        "r": args.r or 3,
        "certificate": _certificate_json(res.certificate, cfg),
        "partitions_total": res.partitions_total,
        "partitions_covered": res.partitions_covered,
        "lp_calls": res.lp_calls,
        "certified_absence": res.certificate is None and res.partitions_covered == res.partitions_total,
    }
    if res.certificate is None:
        summary = f"tverberg: no partition into {out['r']} blocks ({res.partitions_covered} partitions covered)"
    else:
        summary = f"tverberg: blocks {[list(b) for b in res.certificate.blocks]}"
    status = EXIT_OK
    if res.certificate is not None and not res.certificate.validate(cfg):
        status = EXIT_VIOLATED
    return out, summary, status


def cmd_partition(args):
    return cmd_radon(args) if args.mode == "radon" else cmd_tverberg(args)


def cmd_check(args):
    hg = load_hypergraph(args.hypergraph)
    cfg = _subject(args)
    ok, bad = is_linear_realization(hg, cfg)
    out = {"check": "embedding", "embedded": ok,
           "witness": [list(bad[0]), list(bad[1])] if bad else None}
    return out, "embedded" if ok else f"not embedded: {bad[0]} meets {bad[1]}", EXIT_OK


def _add_source(p, random=True):
    p.add_argument("--input", metavar="PATH", help="point file (or grid file)")
    p.add_argument("--construct", metavar="NAME", help="named construction")
    if random:
        p.add_argument("--random", action="store_true", help="seeded random instances")
    p.add_argument("-n", type=int, help="size parameter (points, grid columns, stat-il dimension)")
    p.add_argument("-d", type=int, help="dimension parameter")
    p.add_argument("-r", type=int, help="number of Tverberg blocks")
    p.add_argument("--apex", help="comma-separated apex coordinates for 'cone'")


def _add_common(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bits", type=int, default=16, help="random coordinates are p/2^bits")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here instead of stdout")
    p.add_argument("--quiet", action="store_true", help="no summary on stderr")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linkgeom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a parity/existence verifier")
    v.add_argument("theorem", help="one of: " + ", ".join(sorted(REGISTRY)))
    _add_source(v)
    _add_common(v)
    v.add_argument("--trials", type=int, default=1)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--max-n", type=int, default=8, help="dimension cap for stat-il")
    v.add_argument("--shape", type=int, nargs=3, metavar=("M", "N", "D"), help="random product grid shape")
    v.add_argument("--variant", default="a", choices=["a", "b", "c", "r4a"], help="deleted-face family")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="write a named configuration")
    c.add_argument("name", help="one of: " + ", ".join(CONSTRUCTIONS))
    c.add_argument("-n", type=int)
    c.add_argument("-d", type=int)
    c.add_argument("-r", type=int)
    c.add_argument("--apex")
    c.add_argument("--input", metavar="PATH", help="base configuration for 'cone'")
    _add_common(c)
    c.set_defaults(func=cmd_construct)

    for name, fn in (("radon", cmd_radon), ("tverberg", cmd_tverberg)):
        p = sub.add_parser(name, help=f"{name} partition")
        _add_source(p)
        _add_common(p)
        p.set_defaults(func=fn)

    pp = sub.add_parser("partition", help="radon or tverberg partition")
    pp.add_argument("mode", choices=["radon", "tverberg"])
    _add_source(pp)
    _add_common(pp)
    pp.set_defaults(func=cmd_partition)

    ch = sub.add_parser("check", help="linear realizability check")
    ch.add_argument("what", choices=["embedding"])
    ch.add_argument("--hypergraph", required=True, metavar="PATH")
    _add_source(ch, random=False)
    _add_common(ch)
    ch.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    start = time.perf_counter()
    try:
        out, summary, status = args.func(args)
    except InvalidInput as e:
        return _fail(args, argv, "invalid_input", e, EXIT_INVALID)
    except (BudgetExceeded, SearchExhausted, PerturbExhausted) as e:
        return _fail(args, argv, "exhausted", e, EXIT_EXHAUSTED)
    except LinkGeomError as e:
        return _fail(args, argv, "degenerate_input", e, EXIT_INVALID)
    report = {"command": argv, **out, "wall_time": round(time.perf_counter() - start, 3)}
    _emit(args, report)
    if not args.quiet:
        print(summary, file=sys.stderr)
    return status


def _emit(args, report):
    text = json.dumps(report, indent=1, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(args, argv, kind, exc, code):
    _emit(args, {"command": argv, "error": kind, "message": str(exc)})
    if not args.quiet:
        print(f"error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
