"""Command-line surface: one binary, seven subcommands.

    rfgrowth detect    --family free2 --word "[x,y]" --prop nil
    rfgrowth growth    --family z --nmax 20
    rfgrowth reproduce claim2
    rfgrowth catalog   --bound 16
    rfgrowth magnus    --word "[x,y]" | --nmax 3
    rfgrowth gauss     [--level 2 | --matrix "[[(1,0),(2,0)],[(0,0),(1,0)]]"]
    rfgrowth wreath    --n 3 --p 2

Configuration precedence: flags beat the environment, which beats the
--config file (JSON), which beats defaults.  The only environment
override is RFGROWTH_CACHE_DIR.  Exit codes: 0 success, 1 a check
failed, 2 usage or parse error, 3 resource ceiling or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields

from .catalog import DEFAULT_BOUND, HARD_MAX_BOUND, catalog_cache_path, ensure_catalog
from .detect import DETECT_FORMAT_VERSION, Detector, PropertyClass
from .errors import BudgetError
from .families import get_family
from .gaussian import (
    fuchsian_reduction_check,
    g_level,
    kernel_2group_check,
    nil_detect_upper,
    parse_gauss_matrix,
)
from .growth import growth_table, table_export
from .magnus import depth_doubling_check, lcs_depth
from .reproduce import CLAIM_IDS, run_claim
from .wreath import (
    build_ap_matrix,
    kernel_mod_p,
    small_integer_kernel,
    wreath_word_length,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENV_CACHE_DIR = "RFGROWTH_CACHE_DIR"


@dataclass
class RunConfig:
    """Resolved knobs for one invocation; recorded in every table output."""

    bound: int = DEFAULT_BOUND
    magnus_cap: int = 8
    ball_budget: int = 200_000
    word_budget: int = 6
    level_cap: int = 8
    format: str = "csv"
    cache_dir: str | None = None
    seed: int = 0
    jobs: int = 1

    def validate(self) -> None:
        for name in ("bound", "magnus_cap", "ball_budget", "word_budget", "level_cap", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError("%s must be positive, got %r" % (name, getattr(self, name)))
        if self.seed < 0:
            raise ValueError("seed must be >= 0")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json, got %r" % self.format)
        if self.bound > HARD_MAX_BOUND:
            raise ValueError("bound %d exceeds the supported maximum %d" % (self.bound, HARD_MAX_BOUND))

    def snapshot(self) -> dict:
        return {
            "bound": self.bound,
            "magnus_cap": self.magnus_cap,
            "ball_budget": self.ball_budget,
            "word_budget": self.word_budget,
            "level_cap": self.level_cap,
            "format": self.format,
            "cache_dir": self.cache_dir,
            "seed": self.seed,
            "jobs": self.jobs,
        }


_CONFIG_KEYS = {f.name for f in fields(RunConfig)}


def load_config_file(path: str) -> dict:
    with open(path) as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ValueError("unknown config keys: %s" % ", ".join(sorted(unknown)))
    return data


def resolve_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if getattr(args, "config", None):
        for key, value in load_config_file(args.config).items():
            setattr(config, key, value)
    env_cache = os.environ.get(ENV_CACHE_DIR)
    if env_cache:
        config.cache_dir = env_cache
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            setattr(config, key, flag)
    config.validate()
    return config


def _make_detector(config: RunConfig):
    catalog, _ = ensure_catalog(config.bound, config.cache_dir, maximum=max(config.bound, DEFAULT_BOUND))
    cache_path = None
    if config.cache_dir:
        cache_path = os.path.join(
            config.cache_dir, "detect-b%d-v%d.json" % (config.bound, DETECT_FORMAT_VERSION)
        )
    return catalog, Detector(catalog, cache_path)


# -- subcommand handlers ---------------------------------------------------------------


def cmd_detect(args: argparse.Namespace, config: RunConfig) -> int:
    family = get_family(args.family)
    element = family.parse_element(args.word)
    prop = PropertyClass.parse(args.prop)
    catalog, detector = _make_detector(config)
    result = detector.detect(family, element, prop)
    detector.save()
    print(result.describe())
    return EXIT_PASS if result.resolved else EXIT_RESOURCE


def cmd_growth(args: argparse.Namespace, config: RunConfig) -> int:
    family = get_family(args.family)
    prop = PropertyClass.parse(args.prop)
    catalog, detector = _make_detector(config)
    table = growth_table(
        family, prop, args.nmax, catalog, detector,
        jobs=config.jobs, seed=config.seed,
        extra_config={"run_config": config.snapshot()},
    )
    detector.save()
    text = table_export(table, config.format)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
        print("wrote %d rows to %s" % (len(table.rows), args.out))
    else:
        sys.stdout.write(text)
    if any(not r.exact for r in table.rows):
        return EXIT_RESOURCE
    return EXIT_PASS


def cmd_reproduce(args: argparse.Namespace, config: RunConfig) -> int:
    kwargs: dict = {}
    if args.claim == "example1":
        if args.n is not None:
            kwargs["n"] = args.n
        if args.p is not None:
            kwargs["p"] = args.p
    if args.claim == "ineq3" and args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if args.claim == "claim2":
        kwargs["seed"] = config.seed
    if args.claim == "claim1":
        kwargs["cap"] = config.magnus_cap
        kwargs["nmax"] = min(args.nmax, config.word_budget) if args.nmax is not None else 3
    catalog = detector = None
    if args.claim in ("claim1", "example1", "ineq3"):
        catalog, detector = _make_detector(config)
    outcome = run_claim(args.claim, catalog, detector, **kwargs)
    if detector is not None:
        detector.save()
    print(json.dumps(outcome, indent=2, sort_keys=True))
    if outcome["inconclusive"]:
        return EXIT_RESOURCE
    return EXIT_PASS if outcome["passed"] else EXIT_FAIL


def cmd_catalog(args: argparse.Namespace, config: RunConfig) -> int:
    catalog, source = ensure_catalog(config.bound, config.cache_dir,
                                     maximum=max(config.bound, DEFAULT_BOUND))
    counts = catalog.counts()
    print("catalog bound %d (%s): %d groups" % (catalog.bound, source, len(catalog.groups)))
    for order in sorted(counts):
        print("  order %2d: %d" % (order, counts[order]))
    if config.cache_dir:
        print("cache: %s" % catalog_cache_path(config.cache_dir, config.bound))
    return EXIT_PASS


def cmd_magnus(args: argparse.Namespace, config: RunConfig) -> int:
    if args.word is None and args.nmax is None:
        raise ValueError("magnus needs --word or --nmax")
    if args.word is not None:
        family = get_family(args.family)
        w = family.parse_element(args.word) if args.family.startswith("free") else None
        if w is None:
            raise ValueError("magnus expansion applies to free families")
        report = lcs_depth(w, args.cap or config.magnus_cap,
                           cap_budget=max(config.magnus_cap, args.cap or 0))
        print(report.describe())
        return EXIT_PASS if report.depth is not None else EXIT_RESOURCE
    doubling = depth_doubling_check(args.nmax, cap=args.cap or config.magnus_cap)
    for rep in doubling.reports:
        print(rep.describe())
    print("doubling outcome: %s" % doubling.outcome)
    if doubling.outcome == "pass":
        return EXIT_PASS
    return EXIT_FAIL if doubling.outcome == "fail" else EXIT_RESOURCE


def cmd_gauss(args: argparse.Namespace, config: RunConfig) -> int:
    if args.level is not None:
        report = kernel_2group_check(args.level)
        print(report.describe())
        return EXIT_PASS if report.within_bound and report.is_two_group else EXIT_FAIL
    if args.matrix is not None:
        mat = parse_gauss_matrix(args.matrix)
        level = g_level(mat, config.level_cap)
        if level is None:
            print("level: at least %d (projectively trivial to that depth)" % config.level_cap)
            return EXIT_RESOURCE
        print("level: %d" % level)
        if level >= 1:
            print(nil_detect_upper(mat, config.level_cap).describe())
        return EXIT_PASS
    report = fuchsian_reduction_check()
    print(report.describe())
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_wreath(args: argparse.Namespace, config: RunConfig) -> int:
    matrix = build_ap_matrix(args.n)
    print("progression matrix (%d x %d):" % matrix.shape)
    for row in matrix:
        print("  " + "".join(str(int(v)) for v in row))
    if args.p == 0:
        candidate = small_integer_kernel(matrix, args.n)
        kind = "integer lamps"
    else:
        candidate = kernel_mod_p(matrix, args.p, args.n)
        kind = "lamps mod %d" % args.p
    element = candidate.element()
    print("kernel candidate (%s): %s" % (kind, element))
    print("vector: %s" % (list(candidate.vector),))
    print("word length: %d" % wreath_word_length(element))
    return EXIT_PASS


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfgrowth",
        description="Detection growth in groups: catalogs, quotients, and growth tables.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--bound", type=int, default=None, help="catalog order bound (default 16)")
    shared.add_argument("--jobs", type=int, default=None, help="worker threads (default 1)")
    shared.add_argument("--seed", type=int, default=None, help="random seed for sampled checks")
    shared.add_argument("--format", choices=("csv", "json"), default=None, help="table format")
    shared.add_argument("--cache-dir", dest="cache_dir", default=None,
                        help="directory for catalog/result caches (env %s)" % ENV_CACHE_DIR)
    shared.add_argument("--config", default=None, help="JSON config file")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[shared], help="smallest detecting quotient of one element")
    p.add_argument("--family", required=True, help="free<k>, surface, z, lamp<p>, lampz")
    p.add_argument("--word", required=True, help="element (word expression, or integer for z)")
    p.add_argument("--prop", default="any", help="any, sol, nil, or p<prime>")
    p.set_defaults(handler=cmd_detect)

    p = sub.add_parser("growth", parents=[shared], help="growth table F(1..nmax)")
    p.add_argument("--family", required=True)
    p.add_argument("--prop", default="any")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", default=None, help="write the table to this file")
    p.set_defaults(handler=cmd_growth)

    p = sub.add_parser("reproduce", parents=[shared], help="run one scripted verification")
    p.add_argument("claim", choices=CLAIM_IDS)
    p.add_argument("--n", type=int, default=None, help="target order floor (example1)")
    p.add_argument("--p", type=int, default=None, help="lamp modulus (example1)")
    p.add_argument("--nmax", type=int, default=None, help="row limit (ineq3, claim1)")
    p.set_defaults(handler=cmd_reproduce)

    p = sub.add_parser("catalog", parents=[shared], help="build or load the group catalog")
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("magnus", parents=[shared], help="series depth of a free-group word")
    p.add_argument("--word", default=None, help="word expression over the free family")
    p.add_argument("--family", default="free2")
    p.add_argument("--nmax", type=int, default=None, help="run the doubling check up to this index")
    p.add_argument("--cap", type=int, default=None, help="truncation degree")
    p.set_defaults(handler=cmd_magnus)

    p = sub.add_parser("gauss", parents=[shared], help="congruence levels and kernel checks")
    p.add_argument("--level", type=int, default=None, help="enumerate the level-k kernel")
    p.add_argument("--matrix", default=None, help="matrix as [[(re,im),...],[...]]")
    p.set_defaults(handler=cmd_gauss)

    p = sub.add_parser("wreath", parents=[shared], help="progression matrices and kernel candidates")
    p.add_argument("--n", type=int, required=True, help="progression moduli go up to n")
    p.add_argument("--p", type=int, default=2, help="lamp modulus (0 for integer lamps)")
    p.set_defaults(handler=cmd_wreath)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = resolve_config(args)
        return args.handler(args, config)
    except BudgetError as err:
        print("resource limit: %s" % err, file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print("io error: %s" % err, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
