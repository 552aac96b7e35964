"""Command line front end.  Every command prints one JSON document.

Exit status is 0 when the run produced no errors and no verification
failures, 1 on verification failures and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .deformation import fiber_dimension_check, verify_commuting_square
from .exactlinalg import ExactMatrix, jordan_type, rank_sequence
from .fibergraph import (
    FiberConfig,
    apply_flop,
    builtin_fixtures,
    builtin_transitions,
    default_transition,
    is_isomorphic,
)
from .orbits import parse_descriptor, uniqueness_report
from .partitions import Partition, dual
from .polarizations import enumerate_polarizations, polarization_summary
from .quotientgroup import dihedral_example
from .springer import generic_jordan_check

SCHEMA_VERSION = 1
SEED_ENV = "ORBITRES_SEED"


class UsageError(Exception):
    pass


def resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _partition_arg(text: str) -> Partition:
    return Partition.parse(text) if text.strip() else Partition()


# commands return (result, failed)

def cmd_analyze(args) -> tuple[dict, bool]:
    return uniqueness_report(parse_descriptor(args.descriptor)).to_json(), False


def cmd_polarizations(args) -> tuple[dict, bool]:
    o = parse_descriptor(args.descriptor)
    if o.family != "A":
        raise UsageError("polarizations are enumerated for sl(n) only")
    return polarization_summary(o.partition, o.size), False


def cmd_deform_verify(args) -> tuple[dict, bool]:
    d = _partition_arg(args.partition)
    n = d.n if args.n is None else args.n
    if d.n != n:
        raise UsageError(f"partition {d} sums to {d.n}, not n={n}")
    if args.samples < 0:
        raise UsageError("samples must be >= 0")
    if args.bound < 1:
        raise UsageError("bound must be >= 1")
    reports = []
    if args.samples > 0:
        for f in enumerate_polarizations(d, n):
            rep = verify_commuting_square(f, args.samples, args.seed, args.bound)
            rep["fiber_dimensions"] = fiber_dimension_check(f, args.seed, args.bound)
            reports.append(rep)
    failed = any(r["failures"] or not r["fiber_dimensions"]["ok"] for r in reports)
    return {
        "dual": list(dual(d).parts),
        "orderings": len(reports),
        "total_failures": sum(r["failures"] for r in reports),
        "reports": reports,
    }, failed


def cmd_jordan_check(args) -> tuple[dict, bool]:
    if args.matrix is not None:
        m = ExactMatrix.parse(args.matrix)
        jt = jordan_type(m)
        return {"matrix": m.format(), "jordan_type": list(jt.parts),
                "rank_sequence": rank_sequence(m)}, False
    if args.partition is None:
        raise UsageError("give --partition or --matrix")
    if args.trials < 1:
        raise UsageError("trials must be >= 1")
    d = _partition_arg(args.partition)
    reports = [generic_jordan_check(f, args.trials, args.seed, args.bound)
               for f in enumerate_polarizations(d, d.n)]
    failed = any(r["not_dominated"] for r in reports)
    return {"partition": list(d.parts), "reports": reports}, failed


def cmd_group_example(args) -> tuple[dict, bool]:
    result = dihedral_example()
    return result, not (result["intertwiner"]["all_hold"] and result["form_preserved"])


def _load_config(ref: str) -> FiberConfig:
    fixtures = builtin_fixtures()
    if ref in fixtures:
        return fixtures[ref]
    path = Path(ref)
    if not path.exists():
        raise UsageError(f"{ref!r} is neither a fixture ({', '.join(sorted(fixtures))}) nor a file")
    return FiberConfig.load(path)


def cmd_fiber(args) -> tuple[dict, bool]:
    if args.fiber_command == "check":
        before = args.before or args.first
        after = args.after or args.second
        if before is None or after is None:
            raise UsageError("fiber check needs two configurations")
        iso = is_isomorphic(_load_config(before), _load_config(after))
        return {"before": before, "after": after, "isomorphic": iso,
                "verdict": "isomorphic" if iso else "not isomorphic"}, False
    if args.transition is not None:
        transitions = builtin_transitions()
        if args.transition not in transitions:
            raise UsageError(f"unknown transition {args.transition!r}")
        fixture, t = transitions[args.transition]
        config_ref = args.config or fixture
        config = _load_config(config_ref)
    else:
        if args.config is None or args.at is None:
            raise UsageError("fiber flop needs a configuration and --at, or --transition")
        config_ref = args.config
        config = _load_config(config_ref)
        t = default_transition(config, args.at)
    result = apply_flop(config, t)
    matches = sorted(name for name, fx in builtin_fixtures().items() if is_isomorphic(result, fx))
    return {"config": config_ref, "center": t.center, "result": result.to_json(),
            "isomorphic_fixtures": matches}, False


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitres", description=__doc__)
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="uniqueness verdict for an orbit descriptor")
    a.add_argument("descriptor", help='e.g. "sl(6):[3,2,1]"')
    a.set_defaults(func=cmd_analyze)

    a = sub.add_parser("polarizations", help="polarizations of an sl(n) orbit")
    a.add_argument("descriptor")
    a.set_defaults(func=cmd_polarizations)

    a = sub.add_parser("deform-verify", help="check ch o s = pi o eta on sampled fibers")
    a.add_argument("--partition", required=True)
    a.add_argument("--n", type=int)
    a.add_argument("--samples", type=int, default=25)
    a.add_argument("--seed", type=int)
    a.add_argument("--bound", type=int, default=10)
    a.set_defaults(func=cmd_deform_verify)

    a = sub.add_parser("jordan-check", help="Jordan types of sampled nilradical elements")
    a.add_argument("--partition")
    a.add_argument("--matrix", help='literal such as "0,1;0,0"')
    a.add_argument("--trials", type=int, default=10)
    a.add_argument("--seed", type=int)
    a.add_argument("--bound", type=int, default=10)
    a.set_defaults(func=cmd_jordan_check)

    a = sub.add_parser("group-example", help="dihedral group of order 8 on C^4")
    a.set_defaults(func=cmd_group_example)

    a = sub.add_parser("fiber", help="central fiber configurations")
    fsub = a.add_subparsers(dest="fiber_command", required=True)
    c = fsub.add_parser("check", help="are two configurations isomorphic")
    c.add_argument("first", nargs="?")
    c.add_argument("second", nargs="?")
    c.add_argument("--before")
    c.add_argument("--after")
    c = fsub.add_parser("flop", help="flop a configuration at a projective plane")
    c.add_argument("config", nargs="?")
    c.add_argument("--at")
    c.add_argument("--transition", help="named built-in flop")
    a.set_defaults(func=cmd_fiber)
    return p


def _echo_config(args) -> dict:
    skip = {"func", "pretty"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: list[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command}
    status = 0
    try:
        if hasattr(args, "seed"):
            args.seed = resolve_seed(args.seed)
        doc["config"] = _echo_config(args)
        result, failed = args.func(args)
        doc["result"] = result
        status = 1 if failed else 0
    except (UsageError, ValueError) as exc:
        doc["config"] = _echo_config(args)
        doc["error"] = str(exc)
        status = 2
    text = json.dumps(doc, sort_keys=True, indent=2 if args.pretty else None)
    return status, text


def main(argv: list[str] | None = None) -> int:
    status, text = run(argv)
    sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
