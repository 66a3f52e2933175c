"""Command-line front end: curvature tables, torus spectra, reference
comparisons, magic aspect ratios, and operator self-checks.

Exit codes: 0 success, 1 domain or parameter error, 2 usage error.
Data goes to standard output (or --output), diagnostics to standard error.
Numeric flags accept exact fractions ("--alpha 1/3").
"""

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import geometry, operators, torus
from .shapes import parse_shape

_DEFAULT_DIGITS = 4


class UsageError(Exception):
    pass


def _fraction(text):
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number or fraction: {text!r}") from None


def _round(x, digits):
    r = round(float(x), digits)
    return 0.0 if r == 0.0 else r


def _sig(x):
    """Residual-style value kept in scientific precision regardless of --digits."""
    return float(f"{float(x):.6e}")


def emit(payload, fmt, digits=_DEFAULT_DIGITS):
    """Serialize a payload deterministically.

    JSON payloads are dicts (insertion order preserved); CSV and table
    payloads are (header, rows) pairs with a fixed column order.  The same
    payload always yields byte-identical text.
    """
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    header, rows = payload
    if fmt == "csv":
        out = [",".join(header)]
        for row in rows:
            out.append(",".join(_cell(v, digits) for v in row))
        return "\n".join(out) + "\n"
    if fmt == "table":
        cells = [list(header)] + [[_cell(v, digits) for v in row] for row in rows]
        widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _cell(value, digits):
    if isinstance(value, float):
        text = f"{value:.{digits}f}"
        return "0." + "0" * digits if text == "-0." + "0" * digits else text
    return str(value)


# -- subcommands ---------------------------------------------------------------

def _cmd_curvature(ns, cfg):
    digits = _opt(ns, cfg, "digits", _DEFAULT_DIGITS)
    fmt = _opt(ns, cfg, "format", "csv")
    q = _opt(ns, cfg, "q", 0.0)
    points = _opt(ns, cfg, "points", 100)
    wmin = _opt(ns, cfg, "wmin", None)
    wmax = _opt(ns, cfg, "wmax", None)

    if ns.torus is not None:
        big, small = ns.torus
        patch = geometry.torus_metric_patch(big, small)
        if wmin is None and wmax is None:
            grid = np.linspace(0.0, 2.0 * math.pi, points, endpoint=False)
        elif wmin is None or wmax is None:
            raise UsageError("give both --wmin and --wmax, or neither")
        else:
            grid = np.linspace(wmin, wmax, points)
    else:
        if ns.shape is not None:
            src = ns.shape
        elif ns.shape_file is not None:
            with open(ns.shape_file, encoding="utf-8") as fh:
                src = fh.read().strip()
        else:
            raise UsageError("one of --shape, --shape-file or --torus is required")
        expr = parse_shape(src)
        print(f"shape: {expr}", file=sys.stderr)
        if wmin is None or wmax is None:
            raise UsageError("--wmin and --wmax are required for a shape-function surface")
        patch = geometry.graph_metric_patch(expr, (wmin, wmax))
        grid = np.linspace(wmin, wmax, points)

    header = ["w", "Z", "k1", "k2", "h", "k", "V_C", "F"]
    rows = []
    for w in grid:
        s = geometry.curvature_sample(patch, float(w), q)
        rows.append([s.w, s.z, s.k1, s.k2, s.h, s.k, s.vc, s.f])
    if fmt == "json":
        payload = {
            "q": _round(q, digits),
            "samples": [
                {key: _round(val, digits) for key, val in zip(header, row)} for row in rows
            ],
        }
        return emit(payload, "json", digits)
    return emit((header, rows), fmt, digits)


def _cmd_spectrum(ns, cfg):
    digits = _opt(ns, cfg, "digits", _DEFAULT_DIGITS)
    fmt = _opt(ns, cfg, "format", "json")
    n_states = _opt(ns, cfg, "states", 8)
    problem = torus.TorusProblem(
        alpha=ns.alpha,
        nu=_opt(ns, cfg, "nu", 0),
        formulation=_opt(ns, cfg, "formulation", "laplacian"),
        n_max=_opt(ns, cfg, "nmax", 24),
        n_quad=_opt(ns, cfg, "nquad", 128),
    )
    result = torus.solve_spectrum(problem)
    entries = result.entries[:n_states]
    if fmt == "csv":
        width = max(len(e.coeffs) for e in entries)
        header = ["beta", "parity"] + [f"c{i}" for i in range(width)]
        rows = []
        for e in entries:
            coeffs = list(e.coeffs) + [0.0] * (width - len(e.coeffs))
            rows.append([e.beta, e.parity] + coeffs)
        return emit((header, rows), "csv", digits)
    payload = {
        "alpha": _round(problem.alpha, 12),
        "nu": problem.nu,
        "formulation": problem.formulation,
        "n_max": problem.n_max,
        "n_quad": problem.n_quad,
        "states": [
            {
                "beta": _round(e.beta, digits),
                "parity": e.parity,
                "coeffs": [_round(c, digits) for c in e.coeffs],
            }
            for e in entries
        ],
    }
    return emit(payload, "json", digits)


def _cmd_compare(ns, cfg):
    digits = _opt(ns, cfg, "digits", _DEFAULT_DIGITS)
    fmt = _opt(ns, cfg, "format", "table")
    n_max = _opt(ns, cfg, "nmax", 24)
    n_quad = _opt(ns, cfg, "nquad", 128)
    try:
        alpha = float(Fraction(ns.alpha))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a number or fraction: {ns.alpha!r}") from None
    header = ["beta", "nu", "parity", "basis", "b1", "b2", "b3"]
    blocks = []
    for formulation in torus.FORMULATIONS:
        rows = []
        for st in torus.table_states(alpha, formulation, n_max=n_max, n_quad=n_quad):
            lead = [float(c) for c in st.coeffs[:3]]
            lead += [0.0] * (3 - len(lead))
            rows.append([st.beta, st.nu, st.parity, st.basis] + lead)
        blocks.append((formulation, rows))
    if fmt == "csv":
        flat = [[form] + row for form, rows in blocks for row in rows]
        return emit((["formulation"] + header, flat), "csv", digits)
    out = [f"alpha = {ns.alpha} ({alpha:.{digits}f})"]
    for formulation, rows in blocks:
        out.append("")
        out.append(formulation)
        out.append(emit((header, rows), "table", digits).rstrip("\n"))
    return "\n".join(out) + "\n"


def _cmd_magic(ns, cfg):
    digits = _opt(ns, cfg, "digits", _DEFAULT_DIGITS)
    payload = {
        "nu": ns.nu,
        "laplacian": _round(torus.magic_alpha(ns.nu, "laplacian"), digits),
        "hermitian": _round(torus.magic_alpha(ns.nu, "hermitian"), digits),
    }
    return emit(payload, "json", digits)


def _polynomial_source(rng):
    c0, c1, c2, c3 = (float(c) for c in rng.uniform(-1.0, 1.0, size=4))
    return f"{c0!r}+{c1!r}*rho+{c2!r}*rho^2+{c3!r}*rho^3"


_SMOOTH_SOURCES = (
    "1.5+0.2*sin(rho)",
    "sqrt(4-rho^2)",
    "exp(0.3*rho)",
    "cosh(rho/2)",
    "ln(1+rho)*0.7",
)


def check_cancellation(samples, seed):
    """Max residual of the curvature-term cancellation over random shapes and points."""
    rng = np.random.default_rng(seed)
    worst_limit = 0.0
    worst_full = 0.0
    for i in range(samples):
        src = _SMOOTH_SOURCES[i % len(_SMOOTH_SOURCES)] if i % 4 == 0 else _polynomial_source(rng)
        patch = geometry.graph_metric_patch(parse_shape(src), (0.3, 1.7))
        w = float(rng.uniform(0.4, 1.6))
        sample = geometry.curvature_sample(patch, w)
        worst_limit = max(worst_limit, operators.cancellation_residual(sample.h, sample.k))
        scale = max(abs(sample.k1), abs(sample.k2), 1.0)
        q = float(rng.uniform(-0.4, 0.4)) / scale
        worst_full = max(worst_full, operators.cancellation_residual(sample.h, sample.k, q))
    return worst_limit, worst_full


def _fd_derivative(fn, w, step=1e-5):
    return (fn(w - 2 * step) - 8 * fn(w - step) + 8 * fn(w + step) - fn(w + 2 * step)) / (12 * step)


def selfadjointness_defect(coeffs, grid):
    """max |(c2 w)' - c1 w| over a grid, derivative by high-order differences."""
    def c2w(w):
        return coeffs.c2(w) * coeffs.weight(w)

    return max(abs(_fd_derivative(c2w, w) - coeffs.c1(w) * coeffs.weight(w)) for w in grid)


def _cmd_check(ns, cfg):
    samples = _opt(ns, cfg, "samples", 100)
    seed = _opt(ns, cfg, "seed", 7)
    alpha = _opt(ns, cfg, "alpha", 0.5)

    worst_limit, worst_full = check_cancellation(samples, seed)

    patch = geometry.torus_metric_patch(1.0 / alpha, 1.0)
    p_theta, p_phi, _ = operators.hermitian_momenta(patch)
    trig = [parse_shape(s) for s in ("1", "sin(rho)", "cos(rho)", "sin(2*rho)", "cos(2*rho)")]
    constructed = max(
        operators.hermiticity_residual(p_theta, patch, f, g) for f in trig for g in trig
    )
    azimuthal = operators.hermiticity_residual(p_phi, patch, trig[1], trig[2])
    naive = operators.MomentumOp(patch.label, lambda w: 0.0)
    stripped = operators.hermiticity_residual(naive, patch, trig[0], trig[1])

    graph = geometry.graph_metric_patch(parse_shape("sqrt(4-rho^2)"), (0.2, 1.8))
    grid = np.linspace(0.3, 1.7, 29)
    defects = {
        ordering: _sig(
            selfadjointness_defect(operators.surface_operator(graph, "hermitian", 0, ordering), grid)
        )
        for ordering in operators.ORDERINGS
    }

    payload = {
        "cancellation": {
            "samples": samples,
            "seed": seed,
            "max_limit_residual": _sig(worst_limit),
            "max_full_q_residual": _sig(worst_full),
        },
        "hermiticity": {
            "alpha": alpha,
            "constructed_momentum_max_residual": _sig(constructed),
            "azimuthal_momentum_residual": _sig(azimuthal),
            "naive_momentum_residual": _sig(stripped),
            "ordering_selfadjointness_defect": defects,
        },
    }
    return emit(payload, "json", _opt(ns, cfg, "digits", _DEFAULT_DIGITS))


# -- argument plumbing ----------------------------------------------------------

def _opt(ns, cfg, name, default):
    value = getattr(ns, name, None)
    if value is not None:
        return value
    if cfg and name in cfg:
        return cfg[name]
    return default


def _add_common(sub, formats):
    sub.add_argument("--format", choices=formats, default=None)
    sub.add_argument("--digits", type=int, default=None)
    sub.add_argument("-o", "--output", default=None)
    sub.add_argument("--config", default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvedq",
        description="Curvature potentials, Hermitian momenta and toroidal spectra "
        "for a particle confined to a surface of revolution.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    cur = subs.add_parser("curvature", help="curvature and V_C samples on a grid (CSV)")
    src = cur.add_mutually_exclusive_group()
    src.add_argument("--shape", default=None, help="shape function S(rho), e.g. 'sqrt(4-rho^2)'")
    src.add_argument("--shape-file", default=None, help="file containing the shape function")
    src.add_argument("--torus", nargs=2, type=_fraction, metavar=("R", "A"), default=None)
    cur.add_argument("--wmin", type=_fraction, default=None)
    cur.add_argument("--wmax", type=_fraction, default=None)
    cur.add_argument("--points", type=int, default=None)
    cur.add_argument("--q", type=_fraction, default=None, help="normal offset (default 0)")
    _add_common(cur, ("csv", "json", "table"))

    spec = subs.add_parser("spectrum", help="torus eigenvalues and wave functions")
    spec.add_argument("--alpha", type=_fraction, required=True)
    spec.add_argument("--nu", type=int, default=None)
    spec.add_argument("--formulation", choices=torus.FORMULATIONS, default=None)
    spec.add_argument("--nmax", type=int, default=None)
    spec.add_argument("--nquad", type=int, default=None)
    spec.add_argument("--states", type=int, default=None)
    _add_common(spec, ("json", "csv"))

    cmp_ = subs.add_parser("compare", help="three lowest states per formulation")
    cmp_.add_argument("--alpha", required=True, help="aspect ratio a/R, fraction or decimal")
    cmp_.add_argument("--nmax", type=int, default=None)
    cmp_.add_argument("--nquad", type=int, default=None)
    _add_common(cmp_, ("table", "csv"))

    mag = subs.add_parser("magic", help="aspect ratios cancelling the azimuthal term")
    mag.add_argument("--nu", type=int, required=True)
    _add_common(mag, ("json",))

    chk = subs.add_parser("check", help="cancellation and Hermiticity residuals")
    chk.add_argument("--alpha", type=_fraction, default=None)
    chk.add_argument("--samples", type=int, default=None)
    chk.add_argument("--seed", type=int, default=None)
    _add_common(chk, ("json",))

    return parser


_HANDLERS = {
    "curvature": _cmd_curvature,
    "spectrum": _cmd_spectrum,
    "compare": _cmd_compare,
    "magic": _cmd_magic,
    "check": _cmd_check,
}


def run(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2

    cfg = {}
    if getattr(ns, "config", None):
        try:
            with open(ns.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 1

    try:
        text = _HANDLERS[ns.command](ns, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError, RuntimeError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    output = getattr(ns, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
