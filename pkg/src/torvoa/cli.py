"""Batch front-end: build spaces, run suites, emit reports.

Configs are TOML (or JSON) files with a [rep] table carrying RepConfig
fields; command-line flags override file keys.  Exit codes: 0 all checks
passed, 1 a verification failed (or a negative control failed to fire),
2 configuration error.  Reports are deterministic given (config, seed,
version); the worker count (TORVOA_WORKERS or --workers) only changes
the schedule, never the merged report.
"""

import argparse
import dataclasses
import json
import os
import sys

from .scalars import Q, parse_q
from .rep.config import RepConfig, ConfigError
from .rep import verify_suite, rho_embedding_check, negative_controls
from .report import emit
from . import __version__


def load_config(path):
    if path is None:
        return {}
    with open(path, "rb") as fh:
        if path.endswith(".json"):
            return json.load(fh)
        try:
            import tomllib
        except ImportError:
            import tomli as tomllib
        return tomllib.load(fh)


def build_rep_config(args, target):
    data = load_config(args.config)
    rep = dict(data.get("rep", {}))
    rep["target"] = target
    for key in ("N", "algebra", "c", "c_1", "c_I", "c_L", "c_LI", "cbar_L",
                "max_degree", "mode_window", "charge_window",
                "state_charge_window", "active_coords", "base_mode_window",
                "base_max_degree", "pairs_per_class"):
        val = getattr(args, key, None)
        if val is not None:
            rep[key] = val
    try:
        cfg = RepConfig(**rep)
    except (TypeError, ConfigError) as exc:
        raise ConfigError(str(exc))
    return cfg


def add_rep_flags(p):
    p.add_argument("--config", help="TOML or JSON configuration file")
    p.add_argument("--N", type=int)
    p.add_argument("--algebra")
    for flag in ("c", "c-1", "c-I", "c-L", "c-LI", "cbar-L"):
        p.add_argument("--" + flag, dest=flag.replace("-", "_"))
    for flag in ("max-degree", "mode-window", "charge-window",
                 "state-charge-window", "active-coords", "base-mode-window",
                 "base-max-degree", "pairs-per-class"):
        p.add_argument("--" + flag, dest=flag.replace("-", "_"), type=int)
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("TORVOA_WORKERS", "1")))
    p.add_argument("--negative-controls", action="store_true",
                   help="run the deliberate-failure grid instead")
    p.add_argument("--force", action="store_true",
                   help="run the suite even when the parameter constraints "
                        "fail (expect nonzero residuals and exit code 1)")
    add_output_flags(p)


def add_output_flags(p):
    p.add_argument("--json", help="write the machine report here")
    p.add_argument("--text", help="write the text report here")
    p.add_argument("--csv", help="write CSV rows here (characters)")


def _config_echo(cfg, extra=None):
    out = {}
    for k, v in dataclasses.asdict(cfg).items():
        out[k] = str(v) if hasattr(v, "denominator") else v
    if extra:
        out.update(extra)
    return out


def cmd_verify(args, target):
    cfg = build_rep_config(args, target)
    if args.negative_controls:
        results = negative_controls(cfg)
        results.setdefault("pass", False)
        text = emit(args, "negative-controls", _config_echo(cfg), results)
        sys.stdout.write(text)
        return 0 if results["pass"] else 1
    ctx = cfg.build(enforce=not args.force)
    results = verify_suite(ctx, workers=max(1, args.workers))
    if args.force:
        results["constraint_violations"] = cfg.validate()
    if target == "gdiv":
        # the embedding that produces this picture: Verma weight -1/2 and
        # mixed central charge cbar_L - 12 shift back to cbar_L exactly
        results["embedding"] = rho_embedding_check(
            Q(1, cfg.N), cfg.cbar_L - 12, Q(cfg.N, 2), h=Q(-1, 2),
            mode_window=3, max_degree=4)
        results["pass"] = results["pass"] and results["embedding"]["pass"]
    command = "verify-" + ("toroidal" if target == "full" else target)
    text = emit(args, command, _config_echo(cfg), results)
    sys.stdout.write(text)
    return 0 if results["pass"] else 1


def cmd_characters(args):
    from .characters import (hyp_plus_character_report,
                             hvir_vacuum_character_report,
                             verma_quotient_character_report,
                             d0_spectrum_report)
    space = args.space
    if space == "hyp-plus":
        results = hyp_plus_character_report(args.N or 12, args.max_degree)
        if args.with_spectrum:
            cfg = RepConfig(target="exceptional", N=args.N or 12,
                            active_coords=args.active_coords or 2)
            ctx = cfg.build()
            results["spectrum_check"] = d0_spectrum_report(
                ctx, min(args.max_degree, 2))
            results["pass"] = (results["pass"]
                               and results["spectrum_check"]["pass"])
        config = {"space": space, "N": args.N or 12,
                  "max_degree": args.max_degree}
    elif space == "hvir-vacuum":
        from .voa.hvir import HVirSpace
        sp = HVirSpace(parse_q(args.c_L or 9), parse_q(args.c_LI or "1/2"), 0)
        results = hvir_vacuum_character_report(sp, args.max_degree)
        config = {"space": space, "c_L": str(sp.c_L), "c_LI": str(sp.c_LI),
                  "max_degree": args.max_degree}
    elif space == "hvir-verma":
        from .voa.hvir import HVirSpace
        ratio = parse_q(args.ratio)
        n = abs(int(ratio - 1)) if (ratio - 1).denominator == 1 else None
        if n is None or n == 0:
            raise ConfigError("ratio must give a positive integer level")
        sp = HVirSpace(parse_q(args.c_L or 9), 1, 0, mode="verma",
                       h=parse_q(args.h or 0), h_I=ratio)
        results = verma_quotient_character_report(sp, n, args.max_degree)
        config = {"space": space, "ratio": str(ratio),
                  "max_degree": args.max_degree}
    else:
        raise ConfigError("unknown space %r" % (space,))
    text = emit(args, "characters", config, results)
    sys.stdout.write(text)
    return 0 if results["pass"] else 1


def cmd_lie_check(args):
    from .liealg.check import lie_check
    results = lie_check(args.N, parse_q(args.mu), parse_q(args.nu),
                        algebra=args.algebra or "sl2", samples=args.samples,
                        seed=args.seed, window=args.window,
                        block_window=args.block_window)
    config = {k: results[k] for k in ("N", "mu", "nu", "algebra",
                                      "samples", "seed")}
    text = emit(args, "lie-check", config, results)
    sys.stdout.write(text)
    return 0 if results["pass"] else 1


def cmd_axioms(args):
    from .voa.axioms import check_axioms
    from .liealg.simple import preset
    from .voa.hvir import HVirSpace
    from .voa.affine import AffineSpace
    from .voa.lattice import LatticePlusSpace
    from .voa.tensor import TensorSpace

    def hvir():
        return HVirSpace(parse_q(args.c_L or 9), parse_q(args.c_LI or "1/2"), 0)

    def affine():
        return AffineSpace(preset(args.algebra or "sl2"), parse_q(args.c or 1))

    def lattice():
        return LatticePlusSpace(args.N or 1)

    builders = {"hvir": hvir, "affine": affine, "lattice": lattice,
                "tor": lambda: TensorSpace([affine(), lattice(), hvir()])}
    if args.space not in builders:
        raise ConfigError("unknown space %r" % (args.space,))
    rep = check_axioms(builders[args.space](), args.max_degree,
                       samples=args.samples, seed=args.seed)
    results = {"checks": rep.summary(), "pass": rep.passed}
    config = {"space": args.space, "max_degree": args.max_degree,
              "samples": args.samples, "seed": args.seed}
    text = emit(args, "axioms", config, results)
    sys.stdout.write(text)
    for name in sorted(results["checks"]):
        e = results["checks"][name]
        sys.stdout.write("  %-28s cases=%-6d failures=%d\n"
                         % (name, e["cases"], e["failure_count"]))
    return 0 if results["pass"] else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="torvoa",
        description="exact verification suites for toroidal current "
                    "algebras and their vertex-operator dictionaries")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    for target, name in [("full", "verify-toroidal"), ("gstar", "verify-gstar"),
                         ("gdiv", "verify-gdiv"),
                         ("exceptional", "verify-exceptional")]:
        p = sub.add_parser(name)
        add_rep_flags(p)
        p.set_defaults(func=lambda a, t=target: cmd_verify(a, t))

    p = sub.add_parser("characters")
    p.add_argument("--space", required=True,
                   choices=["hyp-plus", "hvir-vacuum", "hvir-verma"])
    p.add_argument("--N", type=int)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=6)
    p.add_argument("--c-L", dest="c_L")
    p.add_argument("--c-LI", dest="c_LI")
    p.add_argument("--ratio", help="h_I/c_LI for the Verma quotient")
    p.add_argument("--h")
    p.add_argument("--with-spectrum", action="store_true",
                   help="also check the grading-operator spectrum")
    p.add_argument("--active-coords", dest="active_coords", type=int)
    add_output_flags(p)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("lie-check")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--mu", default="1")
    p.add_argument("--nu", default="0")
    p.add_argument("--algebra")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--block-window", dest="block_window", type=int, default=2)
    add_output_flags(p)
    p.set_defaults(func=cmd_lie_check)

    p = sub.add_parser("axioms")
    p.add_argument("--space", required=True)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=4)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--N", type=int)
    p.add_argument("--algebra")
    p.add_argument("--c")
    p.add_argument("--c-L", dest="c_L")
    p.add_argument("--c-LI", dest="c_LI")
    add_output_flags(p)
    p.set_defaults(func=cmd_axioms)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        sys.stderr.write("configuration error: %s\n" % (exc,))
        return 2


if __name__ == "__main__":
    sys.exit(main())
