"""Command-line front end: generate instances, solve, run the oracle,
cross-check LexMax, sweep benchmarks to CSV, and verify solver against
oracle over a seed range.

Exit codes: 0 ok, 1 verification/agreement failure, 2 input or instance
error, 3 path-enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import statistics
import sys
import time
from dataclasses import dataclass

from . import generate as gen
from . import lexmax as lm
from .errors import CapExceededError, OrdPathsError, TimeoutExceededError
from .graph import Dag, read_instance, write_instance
from .labeling import Variant, solve
from .oracle import count_efficient_paths, enumerate_paths, one_sided_front
from .ordinal import sorted_from_freq

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CAP = 3

CSV_COLUMNS = ["family", "n", "m", "k", "p", "seed", "variant", "status",
               "wall_secs", "front_size", "peak_labels", "iterations"]
CSV_SCHEMA_COMMENT = "# ordpaths bench CSV schema v1: " + ",".join(CSV_COLUMNS)


def vector_str(v) -> str:
    return ",".join(str(x) for x in v)


def freq_str(f) -> str:
    return "|".join(str(x) for x in f)


def _fmt_secs(secs: float, paper_style: bool = False) -> str:
    if paper_style and secs < 0.1:
        return "0.1*"
    return f"{secs:.3f}"


# ---------------------------------------------------------------------------
# generate

def build_instance(args) -> Dag:
    if args.family == "random-dag":
        return gen.gen_random_dag(args.n, args.p, args.k, args.seed)
    if args.family == "grid":
        return gen.gen_grid(args.width, args.height, args.k, args.seed)
    if args.family == "exponential":
        return gen.gen_exponential_instance(args.n, args.level)
    if args.family == "fixture":
        if args.fixture == "bellman":
            return gen.gen_bellman_fixture()
        if args.fixture == "antisymmetry":
            return gen.gen_antisymmetry_fixture(args.level, args.k)
        if args.fixture == "detour":
            return gen.gen_detour_fixture()
        raise ValueError(f"unknown fixture: {args.fixture}")
    raise ValueError(f"unknown family: {args.family}")


def cmd_generate(args) -> int:
    try:
        g = build_instance(args)
    except (OrdPathsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = write_instance(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {g.n} nodes, {g.m} arcs, K={g.k} to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# solve / oracle / lexmax

def _load(path: str) -> Dag:
    with open(path) as fh:
        return read_instance(fh.read())


def cmd_solve(args) -> int:
    try:
        g = _load(args.instance)
        result = solve(g, Variant(args.variant), timeout_secs=args.timeout_secs)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OrdPathsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for vec in sorted(result.front):
        path = result.representatives[vec]
        print(f"{vector_str(vec)}  path={'-'.join(str(v + 1) for v in path)}")
    stats = result.stats
    print(f"front_size={len(result.front)} iterations={stats.iterations} "
          f"peak_labels={stats.max_peak_labels} "
          f"wall_secs={_fmt_secs(stats.wall_secs)}")
    if args.out:
        rec = RunRecord(family="file", n=g.n, m=g.m, k=g.k, p=None,
                        seed=None, variant=args.variant, status="ok",
                        wall_secs=stats.wall_secs,
                        front_size=len(result.front),
                        peak_labels=stats.max_peak_labels,
                        iterations=stats.iterations)
        with open(args.out, "w", newline="") as fh:
            fh.write(CSV_SCHEMA_COMMENT + "\n")
            writer = csv.DictWriter(fh, CSV_COLUMNS)
            writer.writeheader()
            writer.writerow(rec.as_row())
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        g = _load(args.instance)
        records = enumerate_paths(g, cap=args.cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FileNotFoundError, OrdPathsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    front = one_sided_front(r.sorted for r in records)
    efficient = sum(1 for r in records if r.sorted in front)
    for vec in sorted(front):
        print(vector_str(vec))
    print(f"paths={len(records)} front_size={len(front)} "
          f"efficient_paths={efficient}")
    return EXIT_OK


def cmd_lexmax(args) -> int:
    try:
        g = _load(args.instance)
        dp_vec, dp_path = lm.lexmax_dp(g)
        lp_vec, lp_path = lm.lexmax_longest_path(g)
    except (FileNotFoundError, OrdPathsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"freq={freq_str(dp_vec)} sorted={vector_str(sorted_from_freq(dp_vec))} "
          f"path={'-'.join(str(v + 1) for v in dp_path)}")
    if lp_vec != dp_vec:
        print(f"error: longest-path reduction disagrees: {freq_str(lp_vec)}",
              file=sys.stderr)
        return EXIT_MISMATCH
    print("longest-path reduction agrees")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench

@dataclass
class ExperimentSpec:
    family: str
    ns: tuple[int, ...] = ()
    widths: tuple[int, ...] = ()
    heights: tuple[int, ...] = ()
    ks: tuple[int, ...] = (2,)
    ps: tuple[float, ...] = ()
    seeds: int = 10
    seed0: int = 0
    variants: tuple[str, ...] = ("mod1", "mod2")
    timeout_secs: float = 300.0
    level: int = 1


@dataclass
class RunRecord:
    family: str
    n: int | None
    m: int | None
    k: int | None
    p: float | None
    seed: int | None
    variant: str
    status: str
    wall_secs: float | None = None
    front_size: int | None = None
    peak_labels: int | None = None
    iterations: int | None = None

    def as_row(self, paper_style: bool = False) -> dict:
        row = {c: getattr(self, c) for c in CSV_COLUMNS}
        if self.wall_secs is not None:
            row["wall_secs"] = _fmt_secs(self.wall_secs, paper_style)
        return {c: ("" if v is None else v) for c, v in row.items()}


def _instances(spec: ExperimentSpec):
    """Yield (triple key, seed, Dag). Random-dag samples that have no
    s-t path are resampled with the next free seed offset."""
    if spec.family == "random-dag":
        for n in spec.ns:
            for k in spec.ks:
                for p in spec.ps:
                    offset = 0
                    for i in range(spec.seeds):
                        while True:
                            seed = spec.seed0 + i + offset
                            try:
                                g = gen.gen_random_dag(n, p, k, seed)
                                break
                            except OrdPathsError:
                                offset += spec.seeds
                        yield (n, k, p), seed, g
    elif spec.family == "grid":
        for w, h in zip(spec.widths, spec.heights):
            for k in spec.ks:
                for i in range(spec.seeds):
                    seed = spec.seed0 + i
                    yield (w * h, k, None), seed, gen.gen_grid(w, h, k, seed)
    elif spec.family == "exponential":
        for n in spec.ns:
            yield (n, spec.level, None), 0, gen.gen_exponential_instance(
                n, spec.level)
    else:
        raise ValueError(f"unsupported bench family: {spec.family}")


def run_bench(spec: ExperimentSpec) -> list[RunRecord]:
    """One data row per (instance, variant), then min/mean/max summary
    rows of the ok wall times per parameter triple."""
    rows: list[RunRecord] = []
    by_triple: dict[tuple, list[float]] = {}
    for (n, k, p), seed, g in _instances(spec):
        for variant in spec.variants:
            rec = RunRecord(family=spec.family, n=g.n, m=g.m, k=g.k, p=p,
                            seed=seed, variant=variant, status="ok")
            try:
                result = solve(g, Variant(variant),
                               timeout_secs=spec.timeout_secs,
                               validate_input=False)
            except TimeoutExceededError:
                rec.status = "timeout"
            except OrdPathsError:
                rec.status = "no-path"
            else:
                rec.wall_secs = result.stats.wall_secs
                rec.front_size = len(result.front)
                rec.peak_labels = result.stats.max_peak_labels
                rec.iterations = result.stats.iterations
                by_triple.setdefault((n, k, p, variant), []).append(
                    result.stats.wall_secs)
            rows.append(rec)
    for (n, k, p, variant), times in sorted(
            by_triple.items(), key=lambda kv: str(kv[0])):
        for status, value in (("min", min(times)),
                              ("mean", statistics.mean(times)),
                              ("max", max(times))):
            rows.append(RunRecord(family=spec.family, n=n, m=None, k=k, p=p,
                                  seed=None, variant=variant,
                                  status=f"summary-{status}",
                                  wall_secs=value))
    return rows


def write_csv(rows: list[RunRecord], fh, paper_style: bool = False) -> None:
    fh.write(CSV_SCHEMA_COMMENT + "\n")
    writer = csv.DictWriter(fh, CSV_COLUMNS)
    writer.writeheader()
    for rec in rows:
        writer.writerow(rec.as_row(paper_style))


def _spec_from_args(args) -> ExperimentSpec:
    return ExperimentSpec(
        family=args.family,
        ns=tuple(args.n or ()),
        widths=tuple(args.width or ()),
        heights=tuple(args.height or ()),
        ks=tuple(args.k or (2,)),
        ps=tuple(args.p or ()),
        seeds=args.seeds,
        seed0=args.seed0,
        variants=tuple(args.variants),
        timeout_secs=args.timeout_secs,
        level=args.level,
    )


def cmd_bench(args) -> int:
    spec = _spec_from_args(args)
    try:
        rows = run_bench(spec)
    except (OrdPathsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    buf = io.StringIO()
    write_csv(rows, buf, paper_style=args.paper_style)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def _solver_front(g: Dag, variant: Variant) -> frozenset:
    # Separate hook so the test harness can inject a corrupted solver.
    return solve(g, variant, validate_input=False).front


def _verify_one(g: Dag, cap: int, check_lexmax: bool = True):
    """Compare all solver variants (and LexMax) against the oracle on one
    instance; returns a list of mismatch descriptions."""
    problems = []
    records = enumerate_paths(g, cap=cap)
    oracle = one_sided_front(r.sorted for r in records)
    fronts = {}
    for variant in Variant:
        front = _solver_front(g, variant)
        fronts[variant] = front
        if set(front) != oracle:
            problems.append(
                f"{variant.value} front != oracle front "
                f"({len(front)} vs {len(oracle)} vectors)")
    if len(set(map(frozenset, fronts.values()))) > 1:
        problems.append("variants disagree among themselves")
    if check_lexmax and not problems:
        dp_vec, _ = lm.lexmax_dp(g)
        lp_vec, _ = lm.lexmax_longest_path(g)
        if dp_vec != lp_vec:
            problems.append("lexmax DP and longest-path reduction disagree")
    return problems


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    checked = 0
    t0 = time.monotonic()
    try:
        for triple, seed, g in _instances(spec):
            if spec.family == "exponential":
                n = triple[0]
                expected = 2 ** ((n - 1) // 3)
                count = count_efficient_paths(g, cap=args.cap)
                front = _solver_front(g, Variant.MOD2)
                if count != expected or len(front) != 1:
                    print(f"MISMATCH exponential n={n}: "
                          f"count={count} expected={expected} "
                          f"front_size={len(front)}")
                    return EXIT_MISMATCH
                checked += 1
                continue
            problems = _verify_one(g, cap=args.cap)
            if problems:
                repro = f"verify_fail_{spec.family}_{triple}_{seed}.txt"
                repro = repro.replace(" ", "").replace(",", "_")
                with open(repro, "w") as fh:
                    fh.write(write_instance(g))
                print(f"MISMATCH on {spec.family} {triple} seed={seed}: "
                      f"{'; '.join(problems)}")
                print(f"repro instance written to {repro}")
                return EXIT_MISMATCH
            checked += 1
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OrdPathsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"verify: {checked} instances ok "
          f"({_fmt_secs(time.monotonic() - t0)} s)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _add_family_opts(p, include_seed=True):
    p.add_argument("--family", required=True,
                   choices=["random-dag", "grid", "exponential", "fixture"])
    p.add_argument("--n", type=int)
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--fixture",
                   choices=["bellman", "antisymmetry", "detour"])
    if include_seed:
        p.add_argument("--seed", type=int, default=0)


def _add_sweep_opts(p):
    p.add_argument("--family", required=True,
                   choices=["random-dag", "grid", "exponential"])
    p.add_argument("--n", type=int, nargs="*")
    p.add_argument("--width", type=int, nargs="*")
    p.add_argument("--height", type=int, nargs="*")
    p.add_argument("--k", type=int, nargs="*")
    p.add_argument("--p", type=float, nargs="*")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--seed0", type=int, default=0)
    p.add_argument("--variants", nargs="*",
                   choices=["base", "mod1", "mod2"],
                   default=["base", "mod1", "mod2"])
    p.add_argument("--timeout-secs", type=float, default=300.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordpaths",
        description="Ordinal shortest paths on DAGs: solver and benchmarks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write an instance file")
    _add_family_opts(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--variant", choices=["base", "mod1", "mod2"],
                   default="mod2")
    p.add_argument("--timeout-secs", type=float, default=300.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force front and path counts")
    p.add_argument("instance")
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lexmax", help="lexicographically maximal path")
    p.add_argument("instance")
    p.set_defaults(func=cmd_lexmax)

    p = sub.add_parser("bench", help="run a benchmark sweep to CSV")
    _add_sweep_opts(p)
    p.add_argument("--out")
    p.add_argument("--paper-style", action="store_true",
                   help="mask wall times below 0.1 s as `0.1*`")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="cross-check solver against oracle")
    _add_sweep_opts(p)
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
