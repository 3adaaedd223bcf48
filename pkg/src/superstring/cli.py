"""Command line front end.

Solve an instance from a file, from inline strings, or from the seeded
random generator; optionally reconstruct and verify a witness, cross-check
the answer against the brute-force reference, emit JSON, and report the
per-phase iteration counters against their closed-form bounds.

Exit codes: 0 success, 2 invalid input (substring violation, empty input,
bad parameters), 3 oracle limits exceeded, 4 solver/oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from .instance import (
    Instance,
    InstanceError,
    make_instance,
    parse_instance,
    validate,
)
from .oracle import OracleLimitError, brute_force_min_length
from .solver import solve, verify_solution

# drawing this many candidates without completing an instance means the
# requested shape is (practically) unsatisfiable
GENERATOR_DRAW_LIMIT_PER_STRING = 500


@dataclass
class GeneratorParams:
    count: int
    min_len: int
    max_len: int
    alphabet: int


@dataclass
class RunConfig:
    k: int
    input_path: str | None = None
    strings: list[str] | None = None
    gen: GeneratorParams | None = None
    seed: int = 0
    threads: int | None = None
    reconstruct: bool = False
    verify: bool = False
    oracle_check: bool = False
    json_output: bool = False
    counters: bool = False


def generate_instance(params: GeneratorParams, seed: int, k: int) -> Instance:
    """Draw a valid instance using a Mersenne Twister seeded with `seed`.

    Strings are drawn uniformly over the first `alphabet` lowercase letters
    and the given length range; draws that would create a containment pair
    (or a duplicate) are rejected and retried.  The seed fully determines the
    result.
    """
    if params.alphabet < 2:
        raise InstanceError("alphabet size must be at least 2")
    if params.min_len < 1 or params.min_len > params.max_len:
        raise InstanceError("length range is empty")
    if params.count < 1:
        raise InstanceError("no strings")
    rng = random.Random(seed)
    letters = "abcdefghijklmnopqrstuvwxyz"[: params.alphabet]
    strings: list[str] = []
    budget = GENERATOR_DRAW_LIMIT_PER_STRING * params.count
    while len(strings) < params.count:
        if budget == 0:
            raise InstanceError(
                f"generation infeasible: draw limit reached with "
                f"{len(strings)}/{params.count} strings"
            )
        budget -= 1
        size = rng.randint(params.min_len, params.max_len)
        candidate = "".join(rng.choice(letters) for _ in range(size))
        if any(candidate in s or s in candidate for s in strings):
            continue
        strings.append(candidate)
    return make_instance(strings, k)


def _parse_gen_spec(text: str) -> GeneratorParams:
    fields = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    try:
        lo, _, hi = fields["len"].partition("..")
        return GeneratorParams(
            count=int(fields["n"]),
            min_len=int(lo),
            max_len=int(hi) if hi else int(lo),
            alphabet=int(fields["alphabet"]),
        )
    except (KeyError, ValueError) as exc:
        raise InstanceError(f"bad --gen spec {text!r}: expected n=<int>,len=<a>..<b>,alphabet=<int>") from exc


def _load_instance(config: RunConfig) -> Instance:
    if config.gen is not None:
        return generate_instance(config.gen, config.seed, config.k)
    if config.strings is not None:
        return make_instance(config.strings, config.k)
    assert config.input_path is not None
    with open(config.input_path, encoding="utf-8") as handle:
        return parse_instance(handle.read(), config.k)


def run(config: RunConfig, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr

    try:
        instance = _load_instance(config)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2

    report = validate(instance)
    if not report.ok:
        for kind, a, b in report.violations:
            if kind == "substring":
                print(
                    f"error: substring violation: strings[{a}]={instance.strings[a]!r} "
                    f"occurs in strings[{b}]={instance.strings[b]!r}",
                    file=err,
                )
            else:
                print(f"error: {kind} violation at string {a}", file=err)
        return 2

    threads = config.threads if config.threads is not None else (os.cpu_count() or 1)
    solution = solve(instance, reconstruct=config.reconstruct, threads=threads)

    if config.verify and solution.witness is not None:
        problems = verify_solution(instance, solution)
        if problems:
            for problem in problems:
                print(f"error: verification failed: {problem}", file=err)
            return 1

    counter_report = None
    if config.counters:
        counter_report = solution.counters.report(instance.n, instance.c)
        over = solution.counters.violations(instance.n, instance.c)
        if over:
            for line in over:
                print(f"error: counter bound exceeded: {line}", file=err)
            return 1

    if config.oracle_check:
        try:
            reference = brute_force_min_length(instance)
        except OracleLimitError as exc:
            print(f"error: {exc}", file=err)
            return 3
        if reference.length != solution.length:
            print(
                f"error: solver/oracle disagreement: solver={solution.length} "
                f"oracle={reference.length}",
                file=err,
            )
            return 4

    if config.json_output:
        payload = {
            "n": instance.n,
            "k": instance.k,
            "length": solution.length,
            "mistake_string_index": solution.mistake_index,
            "witness": solution.witness,
            "offsets": solution.offsets,
            "mismatch_positions": solution.mismatch_positions,
            "counters": counter_report,
        }
        print(json.dumps(payload), file=out)
    else:
        print(f"length={solution.length} m={solution.mistake_index}", file=out)
        if solution.witness is not None:
            print(f"witness={solution.witness}", file=out)
            print("offsets=" + ",".join(str(at) for at in solution.offsets), file=out)
            print(
                "mismatch_positions="
                + ",".join(str(p) for p in solution.mismatch_positions),
                file=out,
            )
        if counter_report is not None:
            for name, cell in counter_report.items():
                print(f"counter {name}={cell['count']} bound={cell['bound']}", file=out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superstring",
        description=(
            "Exact minimal-length superstring where one input string may "
            "mismatch in at most k positions."
        ),
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="path to an instance file (one string per line)")
    source.add_argument("--strings", help="comma-separated inline strings")
    source.add_argument(
        "--gen",
        help="generate a random instance: n=<int>,len=<a>..<b>,alphabet=<int>",
    )
    parser.add_argument("--k", type=int, default=0, help="mismatch budget (default 0)")
    parser.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    parser.add_argument("--reconstruct", action="store_true", help="emit a witness superstring")
    parser.add_argument("--verify", action="store_true", help="re-check the witness before emitting")
    parser.add_argument("--oracle-check", action="store_true", help="cross-check against the brute-force reference")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--counters", action="store_true", help="report per-phase iteration counters")
    return parser


def config_from_args(argv=None) -> RunConfig:
    args = _build_parser().parse_args(argv)
    return RunConfig(
        k=args.k,
        input_path=args.input,
        strings=args.strings.split(",") if args.strings is not None else None,
        gen=_parse_gen_spec(args.gen) if args.gen is not None else None,
        seed=args.seed,
        threads=args.threads,
        reconstruct=args.reconstruct or args.verify,
        verify=args.verify,
        oracle_check=args.oracle_check,
        json_output=args.json,
        counters=args.counters,
    )


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
