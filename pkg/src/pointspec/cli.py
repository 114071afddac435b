"""Command-line front end.

Subcommands: solve, sweep, figure, resonances, threshold, window, ionize,
oracle.  Data goes to stdout or --output; diagnostics go to stderr only,
at a level set by the PS_LOG environment variable (quiet, info, debug).

Exit codes: 0 success (an empty spectrum is a success), 1 usage or
configuration error, 2 validation failure (the oracle subcommand found
the closed form and the spectral sum in disagreement).
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import math
import os
import sys
from typing import Optional, Sequence

from .config import RunConfig, load_config
from .models import Coupling, Free, Harmonic, LinearField, PotentialModel, SquareWell
from .oracle import spectral_A
from .report import (
    format_float,
    render_sweep_png,
    roots_to_json,
    sweep_to_json,
    write_oracle_json,
    write_roots_csv,
    write_sweep_csv,
)
from .solver import (
    ScanWindow,
    default_window,
    find_real_roots,
    find_resonances,
    ionization_field,
    oscillator_threshold,
    squarewell_negative_window,
    sweep,
)

__all__ = ["main"]

log = logging.getLogger("pointspec.cli")

_LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging() -> None:
    level = _LOG_LEVELS.get(os.environ.get("PS_LOG", "info"), logging.INFO)
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def _pick(*values):
    for v in values:
        if v is not None:
            return v
    return None


def _linspace(lo: float, hi: float, count: int) -> list[float]:
    if count < 1:
        raise ValueError("grid count must be >= 1")
    if count == 1:
        return [lo]
    return [lo + i * (hi - lo) / (count - 1) for i in range(count)]


@contextlib.contextmanager
def _out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _load(args) -> RunConfig:
    if getattr(args, "config", None):
        return load_config(args.config)
    return RunConfig()


def _potential(
    name: str, F: Optional[float], k: Optional[float], c: Optional[float]
) -> PotentialModel:
    if name == "free":
        return Free()
    if name == "linear":
        if F is None:
            raise ValueError("model 'linear' needs --F")
        return LinearField(F)
    if name == "harmonic":
        if k is None:
            raise ValueError("model 'harmonic' needs --k")
        return Harmonic(k)
    if name == "well":
        if c is None:
            raise ValueError("model 'well' needs --c")
        return SquareWell(c)
    raise ValueError(f"unknown model {name!r}")


def _window_from(args, cfg: RunConfig, model, coupling) -> ScanWindow:
    e_min = _pick(args.e_min, cfg.e_min)
    e_max = _pick(args.e_max, cfg.e_max)
    step = _pick(args.step, cfg.step)
    if e_min is None and e_max is None and step is None:
        return default_window(model, coupling)
    if e_min is None or e_max is None:
        raise ValueError("give both --e-min and --e-max, or neither")
    if step is None:
        step = (e_max - e_min) / 1600.0
    return ScanWindow(e_min, e_max, step)


def _model_args(p: argparse.ArgumentParser, with_model: bool = True) -> None:
    if with_model:
        p.add_argument("--model", choices=("free", "linear", "harmonic", "well"))
    p.add_argument("--F", type=float, help="field strength (linear model)")
    p.add_argument("--k", type=float, help="oscillator stiffness (harmonic model)")
    p.add_argument("--c", type=float, help="half-width (well model)")
    p.add_argument("--a", type=float, help="delta strength")
    p.add_argument("--b", type=float, help="delta-prime strength")


def _window_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--e-min", type=float)
    p.add_argument("--e-max", type=float)
    p.add_argument("--step", type=float)


def _io_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key-value config file")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output", help="output path (default: stdout)")
    p.add_argument("--green-convention", choices=("paper", "spectral"))


def _coupling_of(args, cfg: RunConfig) -> Coupling:
    a = _pick(args.a, cfg.a, 0.0)
    b = _pick(args.b, cfg.b, 0.0)
    return Coupling(a, b)


def _write_roots(args, cfg: RunConfig, roots) -> None:
    fmt = _pick(args.format, cfg.format, "csv")
    path = _pick(args.output, cfg.output)
    with _out(path) as fh:
        if fmt == "json":
            fh.write(roots_to_json(roots))
        else:
            write_roots_csv(fh, roots)


def cmd_solve(args) -> int:
    cfg = _load(args)
    name = _pick(args.model, cfg.model)
    if name is None:
        raise ValueError("solve needs --model (or a config with one)")
    coupling = _coupling_of(args, cfg)
    model = _potential(name, _pick(args.F, cfg.F), _pick(args.k, cfg.k), _pick(args.c, cfg.c))
    if name == "well" and coupling.a == 0.0 and coupling.b != 0.0:
        raise ValueError(
            "a = 0 is degenerate for the square well: the secular condition "
            "divides by a; give a nonzero delta strength"
        )
    convention = _pick(args.green_convention, cfg.green_convention, "paper")
    window = _window_from(args, cfg, model, coupling)
    roots = find_real_roots(model, coupling, window, convention)
    log.info("solve: %d roots in [%g, %g]", len(roots), window.e_min, window.e_max)
    _write_roots(args, cfg, roots)
    return 0


_VARY_NEEDS = {"F": "linear", "k": "harmonic", "c": "well"}


def cmd_sweep(args) -> int:
    cfg = _load(args)
    name = _pick(args.model, cfg.model)
    if name is None:
        raise ValueError("sweep needs --model")
    vary = _pick(args.vary, cfg.vary)
    if vary is None:
        raise ValueError("sweep needs --vary")
    lo = _pick(args.vary_from, cfg.vary_from)
    hi = _pick(args.vary_to, cfg.vary_to)
    count = _pick(args.vary_count, cfg.vary_count)
    if lo is None or hi is None or count is None:
        raise ValueError("sweep needs --vary-from, --vary-to and --vary-count")
    if vary in _VARY_NEEDS and name != _VARY_NEEDS[vary]:
        raise ValueError(f"--vary {vary} applies to the {_VARY_NEEDS[vary]} model only")
    F, k, c = _pick(args.F, cfg.F), _pick(args.k, cfg.k), _pick(args.c, cfg.c)
    a = _pick(args.a, cfg.a, 0.0)
    b = _pick(args.b, cfg.b, 0.0)
    convention = _pick(args.green_convention, cfg.green_convention, "paper")
    cases = []
    for v in _linspace(lo, hi, int(count)):
        Fv, kv, cv, av, bv = F, k, c, a, b
        if vary == "F":
            Fv = v
        elif vary == "k":
            kv = v
        elif vary == "c":
            cv = v
        elif vary == "a":
            av = v
        elif vary == "b":
            bv = v
        cases.append((v, _potential(name, Fv, kv, cv), Coupling(av, bv)))
    window = _window_from(args, cfg, cases[0][1], cases[0][2])
    result = sweep(vary, cases, window, convention)
    log.info("sweep: %d branches over %d %s values", len(result.branches), len(cases), vary)
    fmt = _pick(args.format, cfg.format, "csv")
    path = _pick(args.output, cfg.output)
    with _out(path) as fh:
        if fmt == "json":
            fh.write(sweep_to_json(result))
        else:
            write_sweep_csv(fh, result)
    return 0


def _figure_families(n: int):
    """Grids and windows reproducing the published level diagrams."""
    if n == 1:
        a_grid = _linspace(0.2, 6.0, 30)
        window = ScanWindow(-10.5, 8.0, 18.5 / 1200.0)
        fams = [
            (f"b={b:g}", f"b{b:g}", [(a, LinearField(1.0), Coupling(a, b)) for a in a_grid])
            for b in (-1.0, 0.0, 1.0)
        ]
        return fams, window, "a"
    if n == 2:
        f_grid = _linspace(0.002, 0.12, 40)
        window = ScanWindow(-0.5, 0.6, 1.1 / 900.0)
        fams = [("a=b=1", "", [(F, LinearField(F), Coupling(1.0, 1.0)) for F in f_grid])]
        return fams, window, "F"
    if n == 3:
        b_grid = _linspace(-3.0, 3.0, 37)
        window = ScanWindow(-2.0, 12.0, 14.0 / 1000.0)
        fams = [
            (f"a={a:g}", f"a{a:g}", [(b, Harmonic(1.0), Coupling(a, b)) for b in b_grid])
            for a in (1.0, 2.0, 4.0)
        ]
        return fams, window, "b"
    if n == 4:
        a_grid = _linspace(0.25, 8.0, 32)
        window = ScanWindow(-2.0, 12.0, 14.0 / 1000.0)
        fams = [
            (f"b={b:g}", f"b{b:g}", [(a, Harmonic(1.0), Coupling(a, b)) for a in a_grid])
            for b in (0.0, 1.0, 3.0)
        ]
        return fams, window, "a"
    if n == 5:
        b_grid = _linspace(-4.0, 4.0, 33)
        window = ScanWindow(-40.0, 120.0, 160.0 / 1300.0)
        fams = [
            (f"a={a:g}", f"a{a:g}", [(b, SquareWell(1.0), Coupling(a, b)) for b in b_grid])
            for a in (1.0, 5.0, 10.0)
        ]
        return fams, window, "b"
    if n == 6:
        a_grid = _linspace(0.25, 10.0, 40)
        window = ScanWindow(-40.0, 120.0, 160.0 / 1300.0)
        fams = [
            (f"b={b:g}", f"b{b:g}", [(a, SquareWell(1.0), Coupling(a, b)) for a in a_grid])
            for b in (1.0, 5.0, 10.0)
        ]
        return fams, window, "a"
    raise ValueError(f"figure number must be 1..6, got {n}")


def cmd_figure(args) -> int:
    n = args.which
    fams, window, xlabel = _figure_families(n)
    outdir = args.outdir
    os.makedirs(outdir, exist_ok=True)
    labeled = []
    for label, tag, cases in fams:
        result = sweep(xlabel, cases, window)
        labeled.append((label, result))
        stem = f"fig{n}_{tag}" if tag else f"fig{n}"
        path = os.path.join(outdir, stem + ".csv")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write_sweep_csv(fh, result)
        log.info("figure %d: wrote %s (%d branches)", n, path, len(result.branches))
    if args.plot:
        png = os.path.join(outdir, f"fig{n}.png")
        render_sweep_png(png, labeled, f"figure {n}", xlabel)
        log.info("figure %d: wrote %s", n, png)
    return 0


def cmd_resonances(args) -> int:
    cfg = _load(args)
    k = _pick(args.k, cfg.k)
    if k is None:
        raise ValueError("resonances needs --k")
    coupling = _coupling_of(args, cfg)
    convention = _pick(args.green_convention, cfg.green_convention, "paper")
    roots = find_resonances(Harmonic(k), coupling, args.pairs, convention)
    log.info("resonances: %d roots (%d pairs)", len(roots), args.pairs)
    _write_roots(args, cfg, roots)
    return 0


def cmd_threshold(args) -> int:
    cfg = _load(args)
    k = _pick(args.k, cfg.k)
    a = _pick(args.a, cfg.a)
    if k is None or a is None:
        raise ValueError("threshold needs --k and --a")
    print(format_float(oscillator_threshold(Harmonic(k), a)))
    return 0


def cmd_window(args) -> int:
    cfg = _load(args)
    c = _pick(args.c, cfg.c)
    a = _pick(args.a, cfg.a)
    if c is None or a is None:
        raise ValueError("window needs --c and --a")
    convention = _pick(args.green_convention, cfg.green_convention, "paper")
    lo, hi = squarewell_negative_window(SquareWell(c), a, convention)
    print(f"{format_float(lo)} {format_float(hi)}")
    return 0


def cmd_ionize(args) -> int:
    cfg = _load(args)
    coupling = _coupling_of(args, cfg)
    f_tol = _pick(args.f_tol, cfg.f_tol, 1e-7)
    field = ionization_field(coupling, args.f_lo, args.f_hi, f_tol)
    print(format_float(field))
    return 0


def cmd_oracle(args) -> int:
    cfg = _load(args)
    name = _pick(args.model, cfg.model)
    if name not in ("harmonic", "well"):
        raise ValueError("oracle needs --model harmonic or --model well")
    model = _potential(name, None, _pick(args.k, cfg.k), _pick(args.c, cfg.c))
    convention = _pick(args.green_convention, cfg.green_convention, "paper")
    tol = _pick(args.tol, cfg.oracle_tol, 1e-6)
    energies = _linspace(args.e_from, args.e_to, args.e_count)
    reports = [spectral_A(model, e, args.n_terms, convention) for e in energies]
    path = _pick(args.output, cfg.output)
    with _out(path) as fh:
        write_oracle_json(fh, reports)
    expected = 1.0 / math.pi if (name == "well" and convention == "paper") else 1.0
    bad = [r for r in reports if abs(r.ratio - expected) > tol * abs(expected)]
    if bad:
        print(
            f"validation failure: {len(bad)} of {len(reports)} energies deviate "
            f"from the expected closed-form/sum ratio {expected:.12g} beyond {tol:g}",
            file=sys.stderr,
        )
        return 2
    log.info("oracle: %d energies agree with ratio %.12g", len(reports), expected)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointspec",
        description="Spectra of point interactions over solvable one-dimensional backgrounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="real secular roots in an energy window")
    _model_args(p)
    _window_args(p)
    _io_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="root branches along a parameter grid")
    _model_args(p)
    p.add_argument("--vary", choices=("a", "b", "F", "k", "c"))
    p.add_argument("--vary-from", type=float)
    p.add_argument("--vary-to", type=float)
    p.add_argument("--vary-count", type=int)
    _window_args(p)
    _io_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="reproduce a published level diagram")
    p.add_argument("--which", type=int, required=True, help="figure number 1..6")
    p.add_argument("--outdir", default=".")
    plot = p.add_mutually_exclusive_group()
    plot.add_argument("--plot", dest="plot", action="store_true", default=True)
    plot.add_argument("--no-plot", dest="plot", action="store_false")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("resonances", help="complex-conjugate pairs of the oscillator")
    _model_args(p, with_model=False)
    p.add_argument("--pairs", type=int, default=3)
    _io_args(p)
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("threshold", help="oscillator coupling where real roots vanish")
    p.add_argument("--k", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--config")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("window", help="square-well b interval with a negative-energy state")
    p.add_argument("--c", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--config")
    p.add_argument("--green-convention", choices=("paper", "spectral"))
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("ionize", help="field strength where the last real root vanishes")
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--f-lo", type=float)
    p.add_argument("--f-hi", type=float)
    p.add_argument("--f-tol", type=float)
    p.add_argument("--config")
    p.set_defaults(func=cmd_ionize)

    p = sub.add_parser("oracle", help="spectral-sum cross-check of the Green coefficient")
    p.add_argument("--model", choices=("harmonic", "well"))
    p.add_argument("--k", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--e-from", type=float, default=-2.1)
    p.add_argument("--e-to", type=float, default=9.9)
    p.add_argument("--e-count", type=int, default=20)
    p.add_argument("--n-terms", type=int, default=1000)
    p.add_argument("--tol", type=float)
    p.add_argument("--config")
    p.add_argument("--output")
    p.add_argument("--green-convention", choices=("paper", "spectral"))
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    _setup_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        # argparse signals usage problems with code 2; here 2 is reserved
        # for validation failures, so usage maps to the config-error code
        return 1 if code == 2 else int(code)
    try:
        return args.func(args)
    except (ValueError, TypeError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
