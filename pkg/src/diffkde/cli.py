"""Command-line interface: estimate a density from a sample file or a seeded draw.

Outputs are plain CSV with full-precision floats so runs can be diffed
byte-for-byte and plotted with any external tool.

Exit codes: 0 success, 1 numerical failure, 2 usage error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .assembly import BcKind, assemble_mass
from .errors import NumericalError, OutOfDomainError, SampleFormatError
from .mesh import build_mesh
from .sample import DataSample, generate_uniform, histogram, load_sample, project_deltas
from .solver import SolverConfig, Trajectory, run


def _fmt(value: float) -> str:
    """Render a float with 17 significant digits (lossless round-trip)."""
    return format(float(value), ".17g")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffkde",
        description=(
            "Estimate a continuous probability density from 1D sample points "
            "by diffusion smoothing with conservation-aware boundary conditions."
        ),
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="PATH", help="sample file, one value per line")
    source.add_argument(
        "--generate",
        type=int,
        metavar="N",
        help="draw N uniform points instead of reading a file (requires --seed)",
    )
    parser.add_argument("--seed", type=int, help="seed for --generate")
    parser.add_argument(
        "--domain",
        type=float,
        nargs=2,
        default=(0.0, 10.0),
        metavar=("A", "B"),
        help="estimation interval (default: 0 10)",
    )
    parser.add_argument(
        "--elements", type=int, default=5000, metavar="M",
        help="number of mesh elements (default: 5000)",
    )
    parser.add_argument(
        "--dt", type=float, default=1e-3, help="time step (default: 1e-3)",
    )
    parser.add_argument(
        "--t-final", type=float, default=0.1,
        help="diffusion time / bandwidth (default: 0.1)",
    )
    parser.add_argument(
        "--bc",
        required=True,
        choices=[kind.value for kind in BcKind],
        help="boundary condition",
    )
    parser.add_argument("--density-out", metavar="PATH", help="write final density CSV (x,u)")
    parser.add_argument(
        "--diagnostics-out", metavar="PATH",
        help="write per-step CSV (t,mass,mean,min,delta_mass,delta_mean)",
    )
    parser.add_argument(
        "--histogram-bins", type=int, default=50, metavar="K",
        help="bins for --histogram-out (default: 50)",
    )
    parser.add_argument("--histogram-out", metavar="PATH", help="write histogram CSV (bin_left,count)")
    parser.add_argument(
        "--snapshot-stride", type=int, metavar="K",
        help="also keep every K-th intermediate state; each one is written "
        "next to --density-out with a .stepNNNNNN suffix (default: final only)",
    )
    parser.add_argument("--manifest-out", metavar="PATH", help="write key=value run manifest")
    return parser


def parse_args(argv) -> argparse.Namespace:
    """Parse and semantically validate `argv` (exits with code 2 on errors)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.generate is not None:
        if args.seed is None:
            parser.error("--generate requires --seed")
        if args.generate < 1:
            parser.error("--generate must be >= 1")
    elif args.seed is not None:
        parser.error("--seed is only valid with --generate")
    a, b = args.domain
    if not b > a:
        parser.error(f"--domain must satisfy A < B, got {a} {b}")
    if args.elements < 1:
        parser.error("--elements must be >= 1")
    if args.dt <= 0.0:
        parser.error("--dt must be > 0")
    if args.t_final <= 0.0:
        parser.error("--t-final must be > 0")
    if args.dt > args.t_final:
        parser.error("--dt must not exceed --t-final")
    if args.histogram_bins < 1:
        parser.error("--histogram-bins must be >= 1")
    if args.snapshot_stride is not None and args.snapshot_stride < 1:
        parser.error("--snapshot-stride must be >= 1")
    return args


def _write_density(path: str, nodes, values) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,u\n")
        for x, u in zip(nodes, values):
            fh.write(f"{_fmt(x)},{_fmt(u)}\n")


def _write_diagnostics(path: str, trajectory: Trajectory) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t,mass,mean,min,delta_mass,delta_mean\n")
        for rec in trajectory.diagnostics:
            fh.write(
                f"{_fmt(rec.time)},{_fmt(rec.mass)},{_fmt(rec.mean)},"
                f"{_fmt(rec.min_value)},{_fmt(rec.delta_mass)},{_fmt(rec.delta_mean)}\n"
            )


def _write_histogram(path: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("bin_left,count\n")
        for left, count in rows:
            fh.write(f"{_fmt(left)},{count}\n")


def _snapshot_path(density_out: str, step: int) -> str:
    stem, dot, suffix = density_out.rpartition(".")
    if not dot:
        return f"{density_out}.step{step:06d}"
    return f"{stem}.step{step:06d}.{suffix}"


def _write_manifest(path: str, args, duration: float) -> None:
    lines = [f"version={__version__}"]
    if args.input is not None:
        lines.append(f"input={args.input}")
    else:
        lines.append(f"generate={args.generate}")
        lines.append(f"seed={args.seed}")
    lines += [
        f"domain_a={_fmt(args.domain[0])}",
        f"domain_b={_fmt(args.domain[1])}",
        f"elements={args.elements}",
        f"dt={_fmt(args.dt)}",
        f"t_final={_fmt(args.t_final)}",
        f"bc={args.bc}",
    ]
    if args.histogram_out:
        lines.append(f"histogram_bins={args.histogram_bins}")
    if args.snapshot_stride is not None:
        lines.append(f"snapshot_stride={args.snapshot_stride}")
    for key in ("density_out", "diagnostics_out", "histogram_out", "manifest_out"):
        value = getattr(args, key)
        if value:
            lines.append(f"{key}={value}")
    lines.append(f"duration_seconds={_fmt(duration)}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def run_pipeline(args: argparse.Namespace) -> int:
    """Execute one estimation run; returns the process exit code."""
    started = time.perf_counter()
    a, b = args.domain
    try:
        if args.input is not None:
            sample = load_sample(args.input, a, b)
        else:
            sample = generate_uniform(args.generate, a, b, args.seed)
    except (OSError, SampleFormatError, OutOfDomainError) as exc:
        print(f"diffkde: input error: {exc}", file=sys.stderr)
        return 3

    mesh = build_mesh(a, b, args.elements)
    mass = assemble_mass(mesh)
    u0 = project_deltas(sample, mesh, mass)
    config = SolverConfig(
        dt=args.dt,
        t_final=args.t_final,
        bc=BcKind(args.bc),
        snapshot_stride=args.snapshot_stride,
    )
    try:
        trajectory = run(mesh, u0, config)
    except NumericalError as exc:
        print(f"diffkde: numerical failure: {exc}", file=sys.stderr)
        return 1

    try:
        if args.density_out:
            _write_density(args.density_out, mesh.nodes, trajectory.final_density)
            if args.snapshot_stride is not None:
                # Intermediate states (the final one already went to the
                # requested path) go to deterministic sibling files.
                for t, snap in zip(
                    trajectory.snapshot_times[:-1], trajectory.snapshots[:-1]
                ):
                    step = int(round(t / args.dt))
                    _write_density(
                        _snapshot_path(args.density_out, step), mesh.nodes, snap
                    )
        if args.diagnostics_out:
            _write_diagnostics(args.diagnostics_out, trajectory)
        if args.histogram_out:
            _write_histogram(args.histogram_out, histogram(sample, args.histogram_bins))
        if args.manifest_out:
            _write_manifest(args.manifest_out, args, time.perf_counter() - started)
    except OSError as exc:
        print(f"diffkde: output error: {exc}", file=sys.stderr)
        return 3
    return 0


def main(argv=None) -> int:
    return run_pipeline(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
