"""Command-line interface.

    superstring solve   --input reads.txt --algo gamma [--json]
    superstring compare --input reads.txt [--algo naive,tau,gamma,greedy,opt]
    superstring verify  --input reads.txt [--candidate superstring.txt]
    superstring bounds  --r-min 6 --r-max 9 [--levels 2,3,4] [--step 0.01] [--out curves.csv]
    superstring gen     --n 7 --r 5 --alphabet 4 [--seed 1] [--reference-length 30]

Exit codes: 0 success, 2 domain or validation error, 64 usage error, 74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from superstring import bounds
from superstring.core import Instance, SuperstringSolution, is_superstring, naive_concat
from superstring.errors import SuperstringError
from superstring.graphs import build_debruijn, build_generalized_spectrum, extract_contigs
from superstring.euler import min_euler_completion
from superstring.hierarchy import solve_gamma, solve_hierarchical, solve_tau
from superstring.instances import (
    DEFAULT_SEED,
    format_lines,
    generate_reads,
    generate_uniform,
    parse_input,
)
from superstring.oracles import (
    DEFAULT_OPT_CAP,
    greedy_scs,
    heldkarp_opt,
    opt_solution,
    overlap_usage,
)

log = logging.getLogger("superstring")

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_IO = 74

TEXT_ELIDE = 10_000
DEFAULT_COMPARE = "naive,tau,gamma,greedy,opt"
OPT_CAP_ENV = "SUPERSTRING_OPT_CAP"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    algorithms: tuple[str, ...] = ()
    input: str | None = None
    input_format: str = "lines"
    json: bool = False
    seed: int = DEFAULT_SEED
    opt_cap: int = DEFAULT_OPT_CAP


def parse_algorithm(name: str) -> str:
    name = name.strip()
    if name in ("naive", "greedy", "tau", "gamma", "opt"):
        return name
    if name.startswith("hier:"):
        try:
            levels = int(name[5:])
        except ValueError:
            raise UsageError(f"bad level count in {name!r}") from None
        if levels < 1:
            raise UsageError(f"level count must be >= 1 in {name!r}")
        return f"hier:{levels}"
    raise UsageError(f"unknown algorithm {name!r}")


def run_algorithm(name: str, inst: Instance, opt_cap: int) -> SuperstringSolution:
    solvers: dict[str, Callable[[Instance], SuperstringSolution]] = {
        "naive": naive_concat,
        "greedy": greedy_scs,
        "tau": solve_tau,
        "gamma": solve_gamma,
        "opt": lambda i: opt_solution(i, opt_cap),
    }
    if name.startswith("hier:"):
        return solve_hierarchical(inst, int(name[5:]))
    return solvers[name](inst)


def resolve_opt_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(OPT_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{OPT_CAP_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_OPT_CAP


def _text(b: bytes) -> str:
    return b.decode("utf-8", errors="backslashreplace")


def _report(sol: SuperstringSolution, opt_length: int | None) -> dict:
    return {
        "algorithm": sol.algorithm,
        "n": sol.n,
        "r": sol.r,
        "superstring": _text(sol.text),
        "length": sol.length,
        "compression": sol.compression,
        "opt_length": opt_length,
        "ratio_vs_opt": None if opt_length is None else sol.length / opt_length,
    }


def _opt_length(inst: Instance, cap: int) -> int | None:
    if inst.n > cap:
        return None
    return heldkarp_opt(inst, cap).opt_length


def _load(cfg: RunConfig) -> Instance:
    if cfg.input is None:
        raise UsageError("--input is required")
    return parse_input(cfg.input, cfg.input_format)


def cmd_solve(cfg: RunConfig, out=sys.stdout, dump_graph: str | None = None) -> int:
    inst = _load(cfg)
    name = cfg.algorithms[0] if cfg.algorithms else "gamma"
    t0 = time.perf_counter()
    sol = run_algorithm(name, inst, cfg.opt_cap)
    log.info("%s on n=%d r=%d took %.3fs", name, inst.n, inst.r, time.perf_counter() - t0)
    opt = sol.length if name == "opt" else _opt_length(inst, cfg.opt_cap)
    report = _report(sol, opt)
    if dump_graph:
        _dump_graphs(inst, name, dump_graph)
    if cfg.json:
        out.write(json.dumps(report) + "\n")
    else:
        for key, value in report.items():
            if key == "superstring" and len(value) > TEXT_ELIDE:
                value = f"{value[:60]}... ({len(value)} characters, use --json for the full string)"
            out.write(f"{key}: {'NA' if value is None else value}\n")
    return EXIT_OK


def _dump_graphs(inst: Instance, name: str, path: str) -> None:
    """Write each level's spectrum graph as ``src dst label origin`` lines."""
    levels = {"tau": 1, "gamma": 2}.get(name)
    if name.startswith("hier:"):
        levels = int(name[5:])
    if levels is None:
        levels = 1
    chunks = []
    labels = inst.strings
    for level in range(1, levels + 1):
        k = inst.r - level
        g = build_debruijn(inst) if level == 1 else build_generalized_spectrum(labels, k)
        chunks.append(f"# level {level} k={k}\n" + g.to_text())
        labels = extract_contigs(min_euler_completion(g), k).contigs
    Path(path).write_text("".join(chunks))


def cmd_compare(cfg: RunConfig, out=sys.stdout) -> int:
    inst = _load(cfg)
    names = cfg.algorithms or tuple(parse_algorithm(a) for a in DEFAULT_COMPARE.split(","))
    opt = _opt_length(inst, cfg.opt_cap)
    rows = []
    for name in names:
        if name == "opt" and opt is None:
            rows.append({"algorithm": "opt", "n": inst.n, "r": inst.r, "superstring": None,
                         "length": None, "compression": None, "opt_length": None,
                         "ratio_vs_opt": None})
            continue
        rows.append(_report(run_algorithm(name, inst, cfg.opt_cap), opt))
    if cfg.json:
        out.write(json.dumps(rows) + "\n")
        return EXIT_OK
    out.write("algorithm\tlength\tcompression\tratio_vs_opt\n")
    for row in rows:
        ratio = row["ratio_vs_opt"]
        cells = [row["algorithm"],
                 "NA" if row["length"] is None else str(row["length"]),
                 "NA" if row["compression"] is None else str(row["compression"]),
                 "NA" if ratio is None else f"{ratio:.6f}"]
        out.write("\t".join(cells) + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out=sys.stdout, candidate: str | None = None) -> int:
    """Check solver invariants on one instance, plus an optional candidate string.

    The heavy-overlap count comparison is printed as a claim and never changes
    the exit status.
    """
    inst = _load(cfg)
    checks: list[tuple[str, bool]] = []
    tau, gamma = solve_tau(inst), solve_gamma(inst)
    greedy, naive = greedy_scs(inst), naive_concat(inst)
    for sol in (naive, greedy, tau, gamma):
        checks.append((f"{sol.algorithm} is a superstring", is_superstring(sol.text, inst.strings)))
    checks.append(("gamma <= tau <= naive", gamma.length <= tau.length <= naive.length))
    claims: list[tuple[str, bool]] = []
    if inst.n <= cfg.opt_cap:
        h = heldkarp_opt(inst, cfg.opt_cap)
        n, r = inst.n, inst.r
        checks.append(("opt <= gamma", h.opt_length <= gamma.length))
        checks.append(("opt <= greedy", h.opt_length <= greedy.length))
        checks.append(("gamma within the two-level length bound",
                       2 * gamma.length <= 4 * n + (r - 2) * ((r - 1) * n - h.weight)))
        usage = overlap_usage(gamma, inst, h)
        checks.append(("gamma keeps as many (r-1) overlaps as H", usage.t1 >= usage.vbar1))
        claims.append((f"heavy overlaps t={usage.t} >= vbar={usage.vbar}", usage.holds))
    if candidate is not None:
        text = Path(candidate).read_bytes().strip()
        checks.append(("candidate is a superstring", is_superstring(text, inst.strings)))
    for label, ok in checks:
        out.write(f"{'PASS' if ok else 'FAIL'}\t{label}\n")
    for label, ok in claims:
        out.write(f"{'HOLDS' if ok else 'VIOLATED'}\t{label}\n")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_DOMAIN


def cmd_bounds(r_min: int, r_max: int, levels: Sequence[int], step: float,
               out_path: str | None, as_json: bool, out=sys.stdout) -> int:
    if r_min > r_max or r_min < 3:
        raise UsageError(f"need 3 <= --r-min <= --r-max, got {r_min}, {r_max}")
    if step <= 0:
        raise UsageError("--step must be positive")
    curves = bounds.emit_curves(r_min, r_max, levels, step)
    csv_text = bounds.curves_to_csv(curves)
    summary = []
    for r in range(r_min, r_max + 1):
        rep = bounds.bound_report(r)
        summary.append({"r": r, "alpha": rep.alpha, "beta": rep.beta,
                        "argmax_x_alpha": rep.argmax_x_alpha,
                        "argmax_x_beta": rep.argmax_x_beta,
                        "general_bound": rep.general_bound})
    if out_path:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(csv_text)
        summary_out = out
    else:
        out.write(csv_text)
        summary_out = sys.stderr
    if as_json:
        summary_out.write(json.dumps(summary) + "\n")
    else:
        summary_out.write("r\talpha\tbeta\tgeneral_bound\n")
        for row in summary:
            summary_out.write(f"{row['r']}\t{row['alpha']:.9f}\t{row['beta']:.9f}\t"
                              f"{row['general_bound']:.9f}\n")
    return EXIT_OK


def cmd_gen(n: int, r: int, alphabet_size: int, seed: int,
            reference_length: int | None, out_path: str | None, out=sys.stdout) -> int:
    if reference_length is None:
        inst = generate_uniform(n, r, alphabet_size, seed)
    else:
        inst = generate_reads(n, r, alphabet_size, reference_length, seed)
    data = format_lines(inst)
    if out_path:
        Path(out_path).write_bytes(data)
    else:
        out.write(data.decode())
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superstring", description="Approximate shortest common superstrings of equal-length strings.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log timings to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_args(p, algo_help):
        p.add_argument("--input", required=True)
        p.add_argument("--format", choices=("lines", "fasta"), default="lines")
        p.add_argument("--algo", default=None, help=algo_help)
        p.add_argument("--json", action="store_true")
        p.add_argument("--opt-cap", type=int, default=None,
                       help=f"largest n solved exactly (default {DEFAULT_OPT_CAP}, env {OPT_CAP_ENV})")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    solve = sub.add_parser("solve", help="run one algorithm")
    instance_args(solve, "naive|greedy|tau|gamma|hier:L|opt (default gamma)")
    solve.add_argument("--dump-graph", default=None, help="write the spectrum graphs of each level")

    compare = sub.add_parser("compare", help="run several algorithms side by side")
    instance_args(compare, f"comma-separated list (default {DEFAULT_COMPARE})")

    verify = sub.add_parser("verify", help="check solver invariants on an instance")
    instance_args(verify, "ignored")
    verify.add_argument("--candidate", default=None, help="file holding a superstring to check")

    bnd = sub.add_parser("bounds", help="export ratio curves as CSV")
    bnd.add_argument("--r-min", type=int, default=6)
    bnd.add_argument("--r-max", type=int, default=9)
    bnd.add_argument("--levels", type=_int_list, default=[2])
    bnd.add_argument("--step", type=float, default=0.01)
    bnd.add_argument("--out", default=None)
    bnd.add_argument("--json", action="store_true")

    gen = sub.add_parser("gen", help="generate a random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--r", type=int, required=True)
    gen.add_argument("--alphabet", type=int, default=4)
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--reference-length", type=int, default=None,
                     help="sample substrings of a random reference of this length")
    gen.add_argument("--out", default=None)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        if args.command == "bounds":
            return cmd_bounds(args.r_min, args.r_max, args.levels, args.step,
                              args.out, args.json, out)
        if args.command == "gen":
            return cmd_gen(args.n, args.r, args.alphabet, args.seed,
                           args.reference_length, args.out, out)
        algos = ()
        if args.algo:
            algos = tuple(parse_algorithm(a) for a in args.algo.split(",") if a.strip())
        cfg = RunConfig(args.command, algos, args.input, args.format, args.json,
                        args.seed, resolve_opt_cap(args.opt_cap))
        if args.command == "solve":
            if len(algos) > 1:
                raise UsageError("solve takes a single --algo")
            return cmd_solve(cfg, out, args.dump_graph)
        if args.command == "compare":
            return cmd_compare(cfg, out)
        return cmd_verify(cfg, out, args.candidate)
    except UsageError as exc:
        print(f"superstring: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SuperstringError as exc:
        print(f"superstring: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"superstring: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
