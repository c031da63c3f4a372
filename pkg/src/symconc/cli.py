"""Command-line front end: CSV parameter sweeps and oracle verification.

    symconc sweep --family dicke --n 15 --out fig1.csv
    symconc sweep --family twist --n 3 --n 7 --grid 0:2pi:201
    symconc sweep --family thermal-aniso --delta 0 --n 2 --n 25 --grid -5:5:201
    symconc verify --level quick

Exit codes: 0 success, 1 invalid arguments, 2 verification failure.
"""

from __future__ import annotations

import argparse
import io
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__
from .collective import MAX_QUBITS, moments_of_vector
from .concurrence import (
    concurrence_xu_form,
    dicke_concurrence,
    entanglement_of_formation,
    pair_entanglement,
)
from .epr import epr_concurrence, epr_pair_matrix
from .pair import pair_from_moments
from .states import dicke_state, spin_coherent, twist_moments
from .thermal import ThermalModel, thermal_concurrence, thermal_pair
from .verify import run_verification

FAMILIES = ("dicke", "coherent", "twist", "thermal-iso", "thermal-aniso", "epr")
PARAM_COLUMNS = {
    "dicke": ("m",),
    "coherent": ("eta",),
    "twist": ("mu",),
    "thermal-iso": ("x",),
    "thermal-aniso": ("delta", "x"),
    "epr": (),
}
PAIR_COLUMNS = ("concurrence", "eof", "v_plus", "v_minus", "w", "y", "re_u", "im_u")


class SpecError(ValueError):
    """Invalid sweep specification; ``field`` names the offending flag."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass
class SweepSpec:
    family: str
    n_qubits: list[int]
    grid: list[float] | None = None
    grid_text: str | None = None
    delta: float | None = None
    eta: float | None = None
    output: str | None = None


def parse_number(token: str) -> float:
    """Float, optionally a multiple of pi: '1.5', 'pi', '2pi', '-0.5*pi'."""
    token = token.strip()
    if token.endswith("pi"):
        coeff = token[:-2].rstrip("*")
        scale = 1.0 if coeff in ("", "+") else -1.0 if coeff == "-" else float(coeff)
        return scale * math.pi
    return float(token)


def parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise SpecError("--grid", f"expected start:stop:steps, got {text!r}")
    try:
        start, stop = parse_number(parts[0]), parse_number(parts[1])
        steps = int(parts[2])
    except ValueError as exc:
        raise SpecError("--grid", str(exc)) from None
    if steps < 1:
        raise SpecError("--grid", "steps must be at least 1")
    return list(np.linspace(start, stop, steps)) if steps > 1 else [start]


def parse_values(text: str) -> list[float]:
    try:
        values = [parse_number(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise SpecError("--values", str(exc)) from None
    if not values:
        raise SpecError("--values", "empty value list")
    return values


def build_spec(args) -> SweepSpec:
    family = args.family
    if not args.n:
        raise SpecError("--n", "at least one qubit number is required")
    if any(n < 1 or n > MAX_QUBITS for n in args.n):
        raise SpecError("--n", f"qubit numbers must lie in [1, {MAX_QUBITS}]")
    if family != "epr" and any(n < 2 for n in args.n):
        raise SpecError("--n", f"family {family} needs N >= 2")
    if args.grid is not None and args.values is not None:
        raise SpecError("--grid", "use either --grid or --values, not both")
    grid, grid_text = None, None
    if args.grid is not None:
        grid, grid_text = parse_grid(args.grid), f"grid {args.grid}"
    elif args.values is not None:
        grid, grid_text = parse_values(args.values), f"values {args.values}"

    if args.delta is not None and family != "thermal-aniso":
        raise SpecError("--delta", f"not used by family {family}")
    if args.eta is not None and family != "coherent":
        raise SpecError("--eta", f"not used by family {family}")
    if family == "epr" and grid is not None:
        raise SpecError("--grid", "family epr sweeps over --n only")
    if family == "coherent":
        if grid is None and args.eta is None:
            raise SpecError("--eta", "family coherent needs --eta or a --grid/--values of eta")
        if grid is not None and args.eta is not None:
            raise SpecError("--eta", "give eta either with --eta or with --grid/--values")
        if grid is None:
            grid, grid_text = [args.eta], f"eta {args.eta}"
    if family == "dicke" and grid is not None:
        for n in args.n:
            for m in grid:
                frac = Fraction(m).limit_denominator(2)
                if abs(float(frac) - m) > 1e-9 or abs(frac) > Fraction(n, 2) or (Fraction(n, 2) - frac).denominator != 1:
                    raise SpecError("--values" if args.values is not None else "--grid",
                                    f"M={m} is not a valid magnetic number for N={n}")
    if family in ("twist", "thermal-iso", "thermal-aniso") and grid is None:
        grid_text = "grid 0:2pi:101" if family == "twist" else "grid -5:5:101"
        grid = parse_grid(grid_text.split()[1])
    delta = args.delta if args.delta is not None else (0.0 if family == "thermal-aniso" else None)
    for name, value in (("--delta", delta), ("--eta", args.eta)):
        if value is not None and not math.isfinite(value):
            raise SpecError(name, "must be finite")
    if grid is not None and not all(math.isfinite(g) for g in grid):
        raise SpecError("--grid", "grid values must be finite")
    return SweepSpec(family, list(args.n), grid, grid_text, delta, args.eta, args.out)


def _points(spec: SweepSpec):
    for n in spec.n_qubits:
        if spec.family == "epr":
            yield (n,)
        elif spec.family == "dicke" and spec.grid is None:
            for k in range(n + 1):
                yield (n, k - n / 2)
        elif spec.family == "thermal-aniso":
            for x in spec.grid:
                yield (n, spec.delta, x)
        else:
            for value in spec.grid:
                yield (n, value)


def evaluate_point(family: str, point: tuple) -> tuple:
    """(concurrence, pair matrix) for one grid point."""
    if family == "dicke":
        n, m = point
        p = pair_from_moments(moments_of_vector(dicke_state(n, m)))
        return dicke_concurrence(n, m), p
    if family == "coherent":
        n, eta = point
        p = pair_from_moments(moments_of_vector(spin_coherent(n, eta)))
        return pair_entanglement(p).concurrence, p
    if family == "twist":
        n, mu = point
        p = pair_from_moments(twist_moments(n, mu))
        return concurrence_xu_form(p.v_plus, p.v_minus, p.w, p.u), p
    if family in ("thermal-iso", "thermal-aniso"):
        n, *rest = point
        delta, x = (1.0, rest[0]) if family == "thermal-iso" else rest
        model = ThermalModel.from_x(n, x, delta)
        return thermal_concurrence(model), thermal_pair(model)
    if family == "epr":
        (n,) = point
        e = epr_pair_matrix(n)
        return epr_concurrence(e), e.as_pair_matrix()
    raise ValueError(f"unknown family {family!r}")


def _fmt(value: float) -> str:
    # round-off residue such as 1e-17 would make otherwise identical rows differ
    if abs(value) < 1e-14:
        value = 0.0
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


def thread_count() -> int:
    raw = os.environ.get("SYMCONC_THREADS", "0").strip() or "0"
    try:
        count = int(raw)
    except ValueError:
        raise SpecError("SYMCONC_THREADS", f"expected an integer, got {raw!r}") from None
    if count < 0:
        raise SpecError("SYMCONC_THREADS", "must be >= 0")
    return count or (os.cpu_count() or 1)


def run_sweep(spec: SweepSpec) -> str:
    """Evaluate every grid point and return the CSV text (header and metadata included)."""
    points = list(_points(spec))
    if not points:
        raise SpecError("--grid", "empty grid")
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        results = list(pool.map(lambda pt: evaluate_point(spec.family, pt), points))

    buf = io.StringIO()
    buf.write(f"# symconc {__version__}\n")
    buf.write(f"# family: {spec.family}\n")
    buf.write(f"# n: {','.join(str(n) for n in spec.n_qubits)}\n")
    if spec.grid_text:
        buf.write(f"# {spec.grid_text}\n")
    if spec.delta is not None:
        buf.write(f"# delta: {_fmt(spec.delta)}\n")
    buf.write(",".join(("n",) + PARAM_COLUMNS[spec.family] + PAIR_COLUMNS) + "\n")
    for point, (conc, p) in zip(points, results):
        u = complex(p.u)
        row = [str(point[0])] + [_fmt(float(v)) for v in point[1:]]
        row += [_fmt(v) for v in (conc, entanglement_of_formation(conc), p.v_plus, p.v_minus,
                                   p.w, complex(p.y).real, u.real, u.imag)]
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symconc", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"symconc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="write a CSV parameter sweep")
    sweep.add_argument("--family", required=True, choices=FAMILIES)
    sweep.add_argument("--n", type=int, action="append", help="qubit number (repeatable)")
    sweep.add_argument("--grid", help="start:stop:steps, inclusive; 'pi' multiples allowed")
    sweep.add_argument("--values", help="comma-separated list of sweep values")
    sweep.add_argument("--delta", type=float, help="anisotropy for thermal-aniso (default 0, the XX model)")
    sweep.add_argument("--eta", type=float, help="coherent-state parameter")
    sweep.add_argument("--out", help="output path (default: standard output)")

    verify = sub.add_parser("verify", help="run the brute-force oracle suites")
    verify.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    """Let '--grid -5:5:101' through; argparse would read '-5:5:101' as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--grid", "--values") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = make_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; usage errors are validation errors here
        return 0 if exc.code == 0 else 1

    if args.command == "verify":
        report = run_verification(args.level)
        print("\n".join(report.lines()))
        return 0 if report.passed else 2

    try:
        text = run_sweep(build_spec(args))
    except SpecError as exc:
        print(f"symconc: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
