"""Command line front end: ``grover-phase {sweep,trajectory,threshold,verify}``.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
"""
from __future__ import annotations

import argparse
import contextlib
import math
import sys

from .errors import DomainError
from .experiments import (
    SweepSpec,
    sweep,
    threshold_table,
    trajectory,
    verify_sweep,
    write_csv,
)
from .optimizer import OptimizerConfig

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _grid(text: str) -> tuple[int, int]:
    try:
        a, t = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <alpha>x<theta>, got {text!r}") from None
    return a, t


def _add_size(p: argparse.ArgumentParser, many: bool = False) -> None:
    g = p.add_mutually_exclusive_group()
    nargs = "+" if many else None
    g.add_argument("--n", type=int, nargs=nargs, help="database size N (default 1024)")
    g.add_argument("--qubits", type=int, nargs=nargs, help="qubit count n with N = 2**n")


def _add_optimizer(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scan-points", type=int, default=1024)
    p.add_argument("--tol", type=float, default=1e-10, help="objective tolerance")


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grover-phase", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sweep", help="optimal phase over an alpha x theta grid")
    _add_size(p)
    p.add_argument("--grid", type=_grid, default=(100, 100), help="<alpha points>x<theta points>")
    _add_optimizer(p)
    _add_out(p)

    p = sub.add_parser("trajectory", help="iterate from the uniform state")
    _add_size(p)
    p.add_argument("--strategy", default="optimal", help="classical | optimal | rough | fixed:<phi>")
    p.add_argument("--steps", type=int, default=None, help="max iterations (default 2*floor(pi/4*sqrt(N)))")
    _add_optimizer(p)
    _add_out(p)

    p = sub.add_parser("threshold", help="region boundaries and threshold probability per N")
    _add_size(p, many=True)
    _add_out(p)

    p = sub.add_parser("verify", help="full statevector check of the reduced map")
    p.add_argument("--qubits", type=int, default=10, help="largest qubit count checked")
    p.add_argument("--samples", type=int, default=100, help="random samples per qubit count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--phi", type=float, default=None, help="force this phase in every sample")
    _add_out(p)
    return parser


def _size(args) -> int:
    if args.qubits is not None:
        if args.qubits < 1:
            raise DomainError("--qubits must be positive")
        return 2**args.qubits
    return 2**10 if args.n is None else args.n


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh


def _run(args) -> int:
    cmd = args.command
    if cmd == "verify":
        if not 2 <= args.qubits <= 14:
            raise DomainError("--qubits must lie in [2, 14]")
        with _open_out(args.out) as out:
            run = verify_sweep(args.qubits, args.samples, args.seed, args.phi)
            out.write(run.report())
        return EXIT_OK if run.passed else EXIT_VERIFY

    if cmd == "threshold":
        if args.qubits is not None:
            sizes = [2**q for q in args.qubits]
        else:
            sizes = args.n or [2**10]
        rows = threshold_table(sizes)
        with _open_out(args.out) as out:
            write_csv(rows, out)
        return EXIT_OK

    cfg = OptimizerConfig(scan_points=args.scan_points, tol=args.tol)
    n = _size(args)
    if cmd == "sweep":
        spec = SweepSpec(n, args.grid[0], args.grid[1], cfg)
        rows = sweep(spec)
    else:
        steps = args.steps if args.steps is not None else max(1, 2 * math.floor(math.pi / 4 * math.sqrt(n)))
        rows = trajectory(n, args.strategy, steps, cfg)
        # surface strategy/step errors before touching the output file
        rows = iter(list(rows))
    with _open_out(args.out) as out:
        write_csv(rows, out)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except DomainError as exc:
        print(f"grover-phase: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"grover-phase: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
