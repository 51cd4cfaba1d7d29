"""Command line entry point: ``springer-extremal <command> ...``."""
from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import sweeps
from .extremal import bar_with_trace, dominance_rank, lambda_max, lambda_min, mult_pair, mult_table
from .pab import IndexedPair, Params, p_bracket, p_constrained_set, p_set
from .springer import k_of, order_from_pair, springer_to_pair
from .textio import (
    dumps,
    marked_to_json,
    parse_marked,
    parse_order,
    parse_partition,
    parse_rat,
    render_epsilon,
    render_partition,
    report,
)

# Checks indexed by the size bound; the others run at fixed sizes and are opt-in.
SIZED_SWEEPS = ("max", "min", "bar", "k", "half-sequences", "bijection", "dominance-transfer", "half-step")


class UsageError(Exception):
    pass


def _marked_args(p: argparse.ArgumentParser, prefix: str = "", required: bool = True) -> None:
    dest = prefix.replace("-", "_")
    p.add_argument(f"--{prefix}lambda", dest=f"{dest}lam", required=required, help="partition, e.g. 4,2,2")
    p.add_argument(f"--{prefix}epsilon", dest=f"{dest}eps", default="", help="signs on even parts, e.g. 4:+,2:-")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="springer-extremal", description=__doc__)
    parser.add_argument("--out", help="write the payload to this file instead of stdout")
    parser.add_argument("--timings", action="store_true", help="include wall-clock timings in JSON reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("springer", help="pair of partitions attached to a marked partition")
    _marked_args(p)
    p.add_argument("--r", type=int, help="working rank (default N)")

    for name, what in (("max", "largest"), ("min", "smallest")):
        p = sub.add_parser(name, help=f"{what} constituent")
        _marked_args(p)

    p = sub.add_parser("mult", help="multiplicities of constituents")
    _marked_args(p)
    _marked_args(p, "target-", required=False)
    p.add_argument("--all", action="store_true", help="emit the whole table")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--r", type=int, help="working rank (default N)")

    p = sub.add_parser("pset", help="reduction set, or its constrained version when A, B, s are given")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--order", required=True, help="word over A/B, e.g. ABA")
    p.add_argument("--A", dest="big_a")
    p.add_argument("--B", dest="big_b")
    p.add_argument("--s", dest="step")
    p.add_argument("--N", dest="big_n", type=int)
    p.add_argument("--M", dest="big_m", type=int)

    p = sub.add_parser("verify", help="run exhaustive checks up to a size bound")
    p.add_argument("--max-2n", dest="max_two_n", type=int, required=True)
    p.add_argument(
        "--theorem",
        action="append",
        choices=sorted(sweeps.ALL_SWEEPS) + ["all"],
        help="restrict to these checks (repeatable); 'all' adds the fixed-size pair checks",
    )
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _trace_json(trace) -> list:
    return [
        {
            "frak_s": list(step.frak_s),
            "j_a": sorted(step.j_a),
            "j_b": sorted(step.j_b),
            "bar_first": step.bar_first,
            "derived": marked_to_json(step.derived),
        }
        for step in trace
    ]


def _cmd_springer(args):
    ms = parse_marked(args.lam, args.eps)
    sd = springer_to_pair(ms, args.r)
    k, alpha, beta = sd.trimmed()
    out = {"k": k, "alpha": list(alpha), "beta": list(beta), "r": sd.r}
    if ms.is_even():
        out["order"] = order_from_pair(sd)
    return 0, report("springer", {"lambda": list(ms.lam), "epsilon": marked_to_json(ms)["epsilon"]}, out)


def _cmd_extremal(args):
    ms = parse_marked(args.lam, args.eps)
    top = lambda_max(ms)
    _, trace = bar_with_trace(ms)
    out = {"lambda_max": list(top.lam), "epsilon_max": marked_to_json(top)["epsilon"]}
    if args.command == "min":
        low = lambda_min(ms)
        out = {"lambda_min": list(low.lam), "epsilon_min": marked_to_json(low)["epsilon"], **out}
    out["trace"] = _trace_json(trace)
    return 0, report(args.command, marked_to_json(ms), out)


def _cmd_mult(args):
    ms = parse_marked(args.lam, args.eps)
    if args.all:
        table = mult_table(ms)
        ranks = dominance_rank(table)
        rows = sorted(table.entries.items(), key=lambda kv: (ranks[kv[0]], kv[0].lam, kv[0].eps))
        if args.format == "tsv":
            lines = ["lambda\tepsilon\tmult\tdominance-rank"]
            lines += [
                f"{render_partition(t.lam)}\t{render_epsilon(t.eps)}\t{v}\t{ranks[t]}" for t, v in rows
            ]
            return 0, "\n".join(lines)
        entries = [{**marked_to_json(t), "mult": v, "dominance_rank": ranks[t]} for t, v in rows]
        return 0, report("mult", marked_to_json(ms), {"k": k_of(ms), "entries": entries})
    if args.target_lam is None:
        raise UsageError("mult needs --all or --target-lambda")
    target = parse_marked(args.target_lam, args.target_eps)
    value = mult_pair(ms, target, args.r)
    if args.format == "tsv":
        return 0, f"{render_partition(target.lam)}\t{render_epsilon(target.eps)}\t{value}"
    inputs = {"source": marked_to_json(ms), "target": marked_to_json(target)}
    return 0, report("mult", inputs, {"mult": value})


def _cmd_pset(args):
    pair = IndexedPair(parse_partition(args.alpha), parse_partition(args.beta), parse_order(args.order))
    inputs = {"alpha": list(pair.alpha), "beta": list(pair.beta), "order": pair.order}
    given = [x is not None for x in (args.big_a, args.big_b, args.step)]
    if any(given) and not all(given):
        raise UsageError("--A, --B and --s go together")
    if not any(given):
        elements = sorted(p_set(pair), reverse=True)
        return 0, report("pset", inputs, {"elements": [[list(nu), list(mu)] for nu, mu in elements]})
    params = Params(
        pair.n if args.big_n is None else args.big_n,
        pair.m if args.big_m is None else args.big_m,
        parse_rat(args.big_a),
        parse_rat(args.big_b),
        parse_rat(args.step),
    )
    inputs.update({"N": params.N, "M": params.M, "A": params.A, "B": params.B, "s": params.s})
    elements = sorted(p_constrained_set(pair, params), reverse=True)
    out = {"elements": [[list(nu), list(mu)] for nu, mu in elements], "merged_symbol": list(p_bracket(pair, params))}
    return 0, report("pset", inputs, out)


def _run_sweep(job):
    name, bound = job
    fn = sweeps.ALL_SWEEPS[name]
    return fn(bound) if name in SIZED_SWEEPS else fn()


def _cmd_verify(args):
    if args.max_two_n < 0 or args.max_two_n % 2:
        raise UsageError("--max-2n must be a non-negative even integer")
    chosen = args.theorem or list(SIZED_SWEEPS)
    if "all" in chosen:
        chosen = list(sweeps.ALL_SWEEPS)
    jobs = [(name, args.max_two_n) for name in chosen]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_sweep, jobs))
    else:
        results = [_run_sweep(job) for job in jobs]
    lines = []
    for name, res in zip(chosen, results):
        lines.append(f"{name}\t{res.line()}")
        lines += [f"  witness: {w!r}" for w in res.failures]
    return (0 if all(r.passed for r in results) else 1), "\n".join(lines)


COMMANDS = {
    "springer": _cmd_springer,
    "max": _cmd_extremal,
    "min": _cmd_extremal,
    "mult": _cmd_mult,
    "pset": _cmd_pset,
    "verify": _cmd_verify,
}


def execute(args: argparse.Namespace) -> tuple[int, str]:
    started = time.perf_counter()
    try:
        code, payload = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        return 2, f"error: {exc}"
    if isinstance(payload, dict):
        if args.timings:
            payload["timings"] = {"seconds": f"{time.perf_counter() - started:.6f}"}
        payload = dumps(payload)
    return code, payload


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns the exit code and the payload text."""
    return execute(build_parser().parse_args(argv))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code, payload = execute(args)
    if code == 2:
        print(payload, file=sys.stderr)
    elif args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return code

if __name__ == "__main__":
    sys.exit(main())
