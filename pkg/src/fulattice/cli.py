"""Command-line entry point: ``fulattice <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import catalog
from .gf2code import (
    BinaryCode,
    CodeError,
    WeightEnumerator,
    classify,
    classify_enumerator,
    dual_code,
    is_formally_self_dual,
    macwilliams,
    min_distance,
    weight_enumerator,
)
from .gleason import gleason_coefficients, theorem4_condition
from .secrecy import (
    secrecy_function,
    secrecy_gain,
    t_of_tau,
    verify_symmetry,
    weak_secrecy_gain,
)
from .tailbiting import (
    ConvolutionalSpec,
    isodual_check,
    tailbiting_generator,
    trellis_enumerator,
)
from .theta import MIN_TAU

MAX_TAU = 1e3


class UsageError(Exception):
    pass


def fmt(value) -> str:
    """12 significant digits for reals, p/q for fractions."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _emit(pairs, fmt_name: str, out) -> None:
    if fmt_name == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "value"])
        for key, value in pairs:
            w.writerow([key, fmt(value)])
    else:
        for key, value in pairs:
            out.write(f"{key}: {fmt(value)}\n")


def _emit_enumerator(we: WeightEnumerator, fmt_name: str, out) -> None:
    if fmt_name == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["w", "A_w"])
        w.writerows(we.support())
    else:
        out.write(we.to_text())


# --- sources ---------------------------------------------------------------


@dataclass
class Source:
    label: str
    code: BinaryCode | None = None
    we: WeightEnumerator | None = None
    k: int | None = None

    def enumerator(self) -> WeightEnumerator:
        # enumeration limits surface here, after parsing, as domain errors
        if self.we is None:
            self.we = weight_enumerator(self.code)
        return self.we

    def dimension(self) -> int:
        if self.k is None:
            self.k = self.code.k if self.code is not None else self.enumerator().dimension
        return self.k


def _is_code_text(lines: list[str]) -> bool:
    if len(lines) >= 2:
        return set(lines[1]) <= {"0", "1"}
    parts = lines[0].split() if lines else []
    return len(parts) == 2 and parts[1] == "0"


def load_source(arg: str) -> Source:
    path = Path(arg)
    if not path.is_file():
        try:
            e = catalog.get_entry(arg)
        except KeyError:
            raise UsageError(f"{arg!r} is neither a file nor a catalog entry") from None
        return Source(e.name, we=e.we, k=e.k)
    text = path.read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        if _is_code_text(lines):
            return Source(arg, code=BinaryCode.from_text(text))
        return Source(arg, we=WeightEnumerator.from_text(text))
    except CodeError as exc:
        raise UsageError(str(exc)) from None


# --- commands --------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    src = load_source(args.code_file)
    if src.code is None:
        raise UsageError("enumerate expects a code file")
    we = src.enumerator()
    _emit_enumerator(we, args.format, out)
    d = min_distance(we)
    print(
        f"n={src.code.n} k={src.code.k} d={fmt(d)} class={classify(src.code, we).value}",
        file=sys.stderr,
    )
    return 0


def cmd_macwilliams(args, out) -> int:
    src = load_source(args.source)
    if src.code is not None:
        dual = weight_enumerator(dual_code(src.code))
    else:
        dual = macwilliams(src.enumerator(), src.dimension())
    _emit_enumerator(dual, args.format, out)
    return 0


def cmd_classify(args, out) -> int:
    src = load_source(args.source)
    we = src.enumerator()
    cls = classify(src.code, we) if src.code is not None else classify_enumerator(we)
    _emit([("class", cls.value), ("n", we.n), ("k", src.dimension()), ("d", min_distance(we))],
          args.format, out)
    return 0


def _gleason_pairs(we: WeightEnumerator) -> list[tuple[str, object]]:
    dec = gleason_coefficients(we)
    cond = theorem4_condition(dec)
    pairs: list[tuple[str, object]] = [(f"a{r}", a) for r, a in enumerate(dec.coeffs)]
    pairs.append(("condition", cond))
    pairs.append(("condition_positive", cond > 0))
    return pairs


def _secrecy_pairs(we: WeightEnumerator, k: int, tolerance: float) -> list[tuple[str, object]]:
    rep = secrecy_gain(we)
    dev = verify_symmetry(we, k)
    pairs: list[tuple[str, object]] = [
        ("n", rep.n),
        ("xi", rep.xi),
        ("xi_rounded", f"{rep.xi:.3f}"),
        ("weak_gain", rep.weak_gain),
        ("t_star", rep.t_star),
        ("tau_star", rep.tau_star),
        ("sign_changes", rep.sign_changes),
        ("method", rep.method.value),
        ("conjecture_verified", rep.conjecture_verified),
        ("symmetry_deviation", dev),
        ("symmetric", dev <= tolerance),
    ]
    if we.is_even:
        pairs += _gleason_pairs(we)
    return pairs


def cmd_secrecy(args, out) -> int:
    src = load_source(args.source)
    we, k = src.enumerator(), src.dimension()
    if args.weak_only:
        _emit([("n", we.n), ("k", k), ("weak_gain", weak_secrecy_gain(we, k))], args.format, out)
        return 0
    if not (2 * k == we.n and is_formally_self_dual(we)):
        print("error: source is not formally self-dual; use --weak-only", file=sys.stderr)
        return 1
    _emit(_secrecy_pairs(we, k, args.tolerance), args.format, out)
    return 0


def cmd_gleason(args, out) -> int:
    src = load_source(args.source)
    _emit(_gleason_pairs(src.enumerator()), args.format, out)
    return 0


TABLE_FIELDS = ("name", "n", "kind", "d", "xi_computed", "xi_paper", "match")


def cmd_table(args, out) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(TABLE_FIELDS)
    ok = True
    for e in catalog.load_catalog():
        xi = secrecy_gain(e.we).xi
        match = catalog.gain_matches(xi, e.printed_gain)
        ok &= match
        w.writerow([e.name, e.n, e.kind.value, e.d, fmt(xi), e.printed_gain, fmt(match)])
    return 0 if ok else 1


def tau_grid(tau_min: float, tau_max: float, points: int) -> np.ndarray:
    grid = np.exp(np.linspace(math.log(tau_min), math.log(tau_max), points))
    # pin the ends so rounding never leaves the valid range
    grid[0] = tau_min
    if points > 1:
        grid[-1] = tau_max
    return grid


def cmd_plot_data(args, out) -> int:
    if not (MIN_TAU <= args.tau_min < args.tau_max <= MAX_TAU) or args.points < 1:
        raise UsageError(
            f"need {MIN_TAU:g} <= tau_min < tau_max <= {MAX_TAU:g} and points >= 1"
        )
    src = load_source(args.source)
    we, k = src.enumerator(), src.dimension()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["tau", "t", "xi"])
    for tau in tau_grid(args.tau_min, args.tau_max, args.points):
        tau = float(tau)
        w.writerow([fmt(tau), fmt(t_of_tau(tau)), fmt(secrecy_function(we, k, tau))])
    return 0


def cmd_tailbite(args, out) -> int:
    try:
        spec = ConvolutionalSpec.from_octal(args.g1, args.g2)
    except CodeError as exc:
        raise UsageError(str(exc)) from None
    code = tailbiting_generator(spec, args.k)
    we = trellis_enumerator(spec, args.k)
    if args.format == "text":
        out.write("generator:\n")
        for row in code.generator:
            out.write("".join(map(str, row)) + "\n")
        out.write("enumerator:\n")
        _emit_enumerator(we, "text", out)
    pairs: list[tuple[str, object]] = [
        ("m", spec.m),
        ("k", args.k),
        ("isodual", isodual_check(spec, args.k)),
    ]
    _emit(pairs + _secrecy_pairs(we, args.k, args.tolerance), args.format, out)
    return 0


def cmd_validate_catalog(args, out) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["name", "size_ok", "fsd_ok", "distance_ok", "parity_ok", "passed"])
    ok = True
    for c in catalog.validate_catalog():
        ok &= c.passed
        w.writerow([c.name] + [fmt(v) for v in (c.size_ok, c.fsd_ok, c.distance_ok, c.parity_ok, c.passed)])
    return 0 if ok else 1


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fulattice", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--tolerance", type=float, default=1e-9,
                   help="pass threshold for numerical symmetry checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="weight enumerator of a code file")
    s.add_argument("code_file")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("macwilliams", help="enumerator of the dual code")
    s.add_argument("source")
    s.set_defaults(func=cmd_macwilliams)

    s = sub.add_parser("classify", help="self-dual / formally self-dual classification")
    s.add_argument("source")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("secrecy", help="secrecy gain report")
    s.add_argument("source", help="catalog name, code file or enumerator file")
    s.add_argument("--weak-only", action="store_true")
    s.set_defaults(func=cmd_secrecy)

    s = sub.add_parser("gleason", help="exact Gleason coefficients of an even fsd enumerator")
    s.add_argument("source")
    s.set_defaults(func=cmd_gleason)

    s = sub.add_parser("table", help="recompute every catalog gain as CSV")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("plot-data", help="secrecy function on a log-spaced tau grid")
    s.add_argument("source")
    s.add_argument("--tau-min", type=float, default=0.1)
    s.add_argument("--tau-max", type=float, default=10.0)
    s.add_argument("--points", type=int, default=101)
    s.set_defaults(func=cmd_plot_data)

    s = sub.add_parser("tailbite", help="isodual tailbiting code from octal generators")
    s.add_argument("g1", help="octal, leading binary digit is the D^0 coefficient")
    s.add_argument("g2")
    s.add_argument("-k", "--k", type=int, required=True)
    s.set_defaults(func=cmd_tailbite)

    s = sub.add_parser("validate-catalog", help="structural checks on every catalog entry")
    s.set_defaults(func=cmd_validate_catalog)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
