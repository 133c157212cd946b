"""Command line entry point.

    higherdet eval FUNCTION [name=value ...] [--point P ...]
    higherdet table FUNCTION [name=value ...] --re START STOP COUNT [--im START STOP COUNT]
    higherdet verify {combinatorics,hurwitz,multigamma,gammafactor,selberg,all}
    higherdet spectrum-info PATH

Exit codes: 0 success, 1 verification failure, 2 usage error or failed
rows, 3 crash, 4 unwritable output, 5 spectrum parse error.
"""

import argparse
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from . import gammafactor as gf
from . import hurwitz as hz
from . import multigamma as mg
from . import numkernel as nk
from . import selberg as sb
from . import verify as vf
from .errors import DomainError, HDetError
from .spectrum import LengthSpectrum, SpectrumFormatError, TruncationPolicy, bundled_names, bundled_spectrum, load

EXIT_OK, EXIT_VERIFY_FAIL, EXIT_ROWS, EXIT_CRASH, EXIT_UNWRITABLE, EXIT_SPECTRUM = 0, 1, 2, 3, 4, 5

CSV_HEADER = ("re_s", "im_s", "re_val", "im_val", "err_bound", "status")


class _CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


@dataclass
class Context:
    cfg: nk.ToleranceConfig = nk.DEFAULT_TOL
    pol: TruncationPolicy = sb.DEFAULT_POLICY
    spectrum: LengthSpectrum = None
    spectrum_source: str = ""

    def get_spectrum(self):
        if self.spectrum is None:
            self.spectrum = bundled_spectrum()
            self.spectrum_source = "bundled:synthetic.json"
        return self.spectrum


@dataclass(frozen=True)
class FunctionEntry:
    """One evaluable function: integer parameters, optional text parameters,
    and a callable (params, point, ctx) -> (value, error bound or None)."""

    call: object
    ints: tuple = ()
    texts: dict = field(default_factory=dict)
    point: str = "s"
    doc: str = ""


def _plain(fn):
    return lambda p, x, c: (fn(x), None)


def _selberg(fn):
    def run(p, x, c):
        v = fn(p, x, c.get_spectrum(), c.pol)
        return v.value, v.tail_bound
    return run


REGISTRY = {
    "log_phi": FunctionEntry(lambda p, s, c: (gf.log_phi(p["r"], s, p["form"]), None),
                             ("r",), {"form": "barnes"}, "s", "log phi_r(s), Re(s) > 0"),
    "phi_fe_residual": FunctionEntry(lambda p, s, c: (gf.phi_fe_residual(p["r"], s, p["form"]), None),
                                     ("r",), {"form": "barnes"}, "s", "functional-equation residual of phi_r"),
    "hurwitz_zeta": FunctionEntry(lambda p, z, c: (hz.hurwitz_zeta(p["w"], z), None),
                                  (), {"w": None}, "z", "zeta(w, z)"),
    "hurwitz_zeta_dw": FunctionEntry(lambda p, z, c: (hz.hurwitz_zeta_dw(p["w"], z), None),
                                     (), {"w": None}, "z", "d/dw zeta(w, z)"),
    "barnes_zeta": FunctionEntry(lambda p, z, c: (mg.barnes_zeta(p["n"], p["w"], z), None),
                                 ("n",), {"w": None}, "z", "Barnes zeta_n(w, z)"),
    "log_multigamma": FunctionEntry(lambda p, z, c: (mg.log_multigamma(p["n"], p["r"], z), None),
                                    ("n", "r"), {}, "z", "log Gamma_{n,r}(z)"),
    "log_barnes_gamma": FunctionEntry(lambda p, z, c: (mg.log_barnes_gamma(p["n"], z), None),
                                      ("n",), {}, "z", "log Gamma_n(z)"),
    "log_milnor_gamma": FunctionEntry(lambda p, z, c: (mg.log_milnor_gamma(p["r"], z), None),
                                      ("r",), {}, "z", "log of the Milnor gamma of depth r"),
    "log_vigneras_G": FunctionEntry(lambda p, z, c: (mg.log_vigneras_G(p["n"], z), None),
                                    ("n",), {}, "z", "log G_n(z)"),
    "log_mult_sine": FunctionEntry(lambda p, z, c: (mg.log_mult_sine(p["n"], z), None),
                                   ("n",), {}, "z", "log S_n(z), 0 < Re(z) < n"),
    "log_basic_sine": FunctionEntry(lambda p, x, c: (mg.log_basic_sine(p["n"], _real(x), c.cfg), None),
                                    ("n",), {}, "x", "log of the basic multiple sine, real |x| < 1"),
    "log_basic_cosine": FunctionEntry(lambda p, x, c: (mg.log_basic_cosine(p["n"], _real(x), c.cfg), None),
                                      ("n",), {}, "x", "log of the basic multiple cosine, real |x| < 1/2"),
    "digamma": FunctionEntry(_plain(nk.digamma), (), {}, "z", "psi(z)"),
    "polylog": FunctionEntry(lambda p, z, c: sb.polylog(p["m"], z, full_output=True),
                             ("m",), {}, "z", "Li_m(z), |z| < 1"),
    "log_poly_selberg": FunctionEntry(_selberg(lambda p, s, sp, pol: sb.log_poly_selberg(
        p["m"], s, sp, pol, full_output=True, method=p["method"])),
        ("m",), {"method": "classes"}, "s", "log Z^(m)(s), Re(s) > 1"),
    "log_milnor_selberg": FunctionEntry(_selberg(lambda p, s, sp, pol: sb.log_milnor_selberg(
        p["r"], s, sp, pol, full_output=True)), ("r",), {}, "s", "log Z_{G,r}(s), Re(s) > 1"),
    "log_higher_det": FunctionEntry(_selberg(lambda p, s, sp, pol: sb.log_higher_det_geom(
        p["r"], s, sp, pol, full_output=True)), ("r",), {}, "s", "(g-1) log phi_r(s) + log Z_{G,r}(s)"),
    "log_complete_ms": FunctionEntry(_selberg(lambda p, s, sp, pol: sb.log_complete_MS(
        p["r"], s, sp, pol, full_output=True)), ("r",), {}, "s", "log Xi_{G,r}(s), Re(s) > 1"),
}


def _real(x):
    x = complex(x)
    if x.imag != 0:
        raise DomainError(f"expected a real argument, got {x}")
    return x.real


_IMAG_UNIT = re.compile(r"(?<![0-9.eEj])([ij])")


def parse_complex(text):
    """Parse '2', '0.5-1.5i', '3j', 'i' or '-i' into a complex number."""
    t = text.strip().replace(" ", "").replace("I", "i").replace("J", "j")
    t = _IMAG_UNIT.sub(r"1\1", t).replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _fmt(x):
    return format(float(x), ".17g")


def _json_num(x):
    x = float(x)
    return x if math.isfinite(x) else str(x)


def _positive(text):
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return v


# ---------------------------------------------------------------------------
# parameters and rows

def bind_params(name, assignments, points):
    """Split name=value tokens into parameters and evaluation points."""
    if name not in REGISTRY:
        raise _CliError(f"unknown function {name!r}; available: {', '.join(sorted(REGISTRY))}", EXIT_ROWS)
    entry = REGISTRY[name]
    params = dict(entry.texts)
    spectrum_path = None
    for token in assignments:
        if "=" not in token:
            raise _CliError(f"expected name=value, got {token!r}", EXIT_ROWS)
        key, value = token.split("=", 1)
        if key == entry.point:
            points.append(parse_complex(value))
        elif key in entry.ints:
            try:
                params[key] = int(value)
            except ValueError:
                raise _CliError(f"{key} must be an integer, got {value!r}", EXIT_ROWS) from None
        elif key == "w" and "w" in entry.texts:
            params["w"] = parse_complex(value)
        elif key in entry.texts:
            params[key] = value
        elif key == "spectrum":
            spectrum_path = value
        else:
            raise _CliError(f"{name} has no parameter {key!r}", EXIT_ROWS)
    missing = [k for k in entry.ints if k not in params] + [k for k, v in params.items() if v is None]
    if missing:
        raise _CliError(f"{name} needs parameters: {', '.join(missing)}", EXIT_ROWS)
    return params, spectrum_path


def evaluate_rows(name, params, points, ctx):
    """One row per point; failures become error rows instead of aborting."""
    entry = REGISTRY[name]
    rows = []
    for x in points:
        row = {"re_s": x.real, "im_s": x.imag, "re_val": None, "im_val": None, "err_bound": None}
        try:
            value, bound = entry.call(params, x, ctx)
            value = complex(value)
            row.update(re_val=value.real, im_val=value.imag, err_bound=bound, status="ok")
        except (HDetError, ValueError, ZeroDivisionError, ArithmeticError, OverflowError) as exc:
            row["status"] = f"error: {type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def render(rows, fmt, meta=None):
    if fmt == "json":
        out = []
        for row in rows:
            out.append({k: (None if row[k] is None else _json_num(row[k])) if k != "status" else row[k]
                        for k in CSV_HEADER})
        doc = {"meta": meta or {}, "rows": out}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    buf.write(",".join(CSV_HEADER) + "\n")
    for row in rows:
        cells = ["" if row[k] is None else _fmt(row[k]) for k in CSV_HEADER[:5]]
        status = row["status"]
        if any(ch in status for ch in ',"\n'):
            status = '"' + status.replace('"', '""').replace("\n", " ") + '"'
        buf.write(",".join(cells + [status]) + "\n")
    return buf.getvalue()


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _CliError(f"cannot write {out_path}: {exc}", EXIT_UNWRITABLE) from None


def _check_writable(out_path):
    """Fail early, before any long computation, when --out cannot be written."""
    if out_path is None:
        return
    parent = os.path.dirname(os.path.abspath(out_path)) or "."
    if os.path.isdir(out_path) or not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise _CliError(f"cannot write {out_path}", EXIT_UNWRITABLE)


def _load_spectrum(path):
    if path is None:
        return None
    if not os.path.exists(path) and path in bundled_names():
        return bundled_spectrum(path)
    try:
        return load(path)
    except SpectrumFormatError as exc:
        raise _CliError(f"spectrum parse error in {path}: {exc}", EXIT_SPECTRUM) from None
    except OSError as exc:
        raise _CliError(f"cannot read spectrum {path}: {exc}", EXIT_SPECTRUM) from None


def _context(args, spectrum_path=None):
    cfg_kw = {}
    if getattr(args, "tol", None) is not None:
        cfg_kw["quadrature_target"] = min(args.tol, nk.DEFAULT_TOL.quadrature_target)
    if getattr(args, "fd_step", None) is not None:
        cfg_kw["fd_step"] = args.fd_step
    cfg = nk.ToleranceConfig(**cfg_kw) if cfg_kw else nk.DEFAULT_TOL
    pol_kw = {}
    if getattr(args, "kmax", None) is not None:
        pol_kw["k_max"] = args.kmax
    if getattr(args, "nmax", None) is not None:
        pol_kw["n_max"] = args.nmax
    pol = TruncationPolicy(**pol_kw) if pol_kw else sb.DEFAULT_POLICY
    path = getattr(args, "spectrum", None) or spectrum_path
    spectrum = _load_spectrum(path)
    return Context(cfg, pol, spectrum, path or "")


def _meta(name, params, ctx):
    meta = {"function": name, "params": {k: str(v) for k, v in sorted(params.items())}}
    if name in ("log_poly_selberg", "log_milnor_selberg", "log_higher_det", "log_complete_ms"):
        ctx.get_spectrum()
        meta["spectrum"] = ctx.spectrum_source
    return meta


# ---------------------------------------------------------------------------
# commands

def cmd_eval(args):
    _check_writable(args.out)
    points = list(args.point or [])
    params, spec_path = bind_params(args.function, args.assignments, points)
    if not points:
        raise _CliError("no evaluation points given", EXIT_ROWS)
    ctx = _context(args, spec_path)
    rows = evaluate_rows(args.function, params, points, ctx)
    _emit(render(rows, args.format, _meta(args.function, params, ctx)), args.out)
    return EXIT_ROWS if any(r["status"] != "ok" for r in rows) else EXIT_OK


def grid_points(re_axis, im_axis):
    """Row-major grid: Re(s) is the outer (slow) index, Im(s) the inner one."""
    for start, stop, count in (re_axis, im_axis):
        if count < 1 or start > stop:
            raise _CliError("grid axes need count >= 1 and start <= stop", EXIT_ROWS)
    re_vals = np.linspace(re_axis[0], re_axis[1], int(re_axis[2]))
    im_vals = np.linspace(im_axis[0], im_axis[1], int(im_axis[2]))
    return [complex(float(x), float(y)) for x in re_vals for y in im_vals]


def cmd_table(args):
    _check_writable(args.out)
    points = grid_points(args.re, args.im)
    params, spec_path = bind_params(args.function, args.assignments, [])
    ctx = _context(args, spec_path)
    rows = evaluate_rows(args.function, params, points, ctx)
    _emit(render(rows, args.format, _meta(args.function, params, ctx)), args.out)
    return EXIT_ROWS if any(r["status"] != "ok" for r in rows) else EXIT_OK


def cmd_verify(args):
    _check_writable(args.out)
    ctx = _context(args)
    spectra = [ctx.spectrum] if ctx.spectrum is not None else None
    reports = vf.run(args.suite, tol=args.tol, cfg=ctx.cfg, spectra=spectra)
    text = vf.reports_to_json(reports) + "\n"
    sys.stdout.write(text)
    if args.out:
        _emit(text, args.out)
    if any(r.error is not None for r in reports):
        return EXIT_CRASH
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAIL


def cmd_spectrum_info(args):
    spec = _load_spectrum(args.path)
    info = {
        "label": spec.label,
        "genus": spec.genus,
        "primitives": len(spec.primitives),
        "total_multiplicity": sum(p.multiplicity for p in spec.primitives),
        "min_norm": spec.min_norm,
        "max_norm": spec.max_norm,
        "epsilon": spec.epsilon,
    }
    if args.format == "json":
        text = json.dumps({k: (_json_num(v) if isinstance(v, float) else v) for k, v in info.items()},
                          indent=2, sort_keys=True) + "\n"
    else:
        text = "".join(f"{k}: {_fmt(v) if isinstance(v, float) else v}\n" for k, v in info.items())
    _emit(text, args.out)
    return EXIT_OK


def cmd_list(args):
    width = max(map(len, REGISTRY))
    for name in sorted(REGISTRY):
        e = REGISTRY[name]
        params = list(e.ints) + [f"{k}={v}" if v else k for k, v in e.texts.items()]
        sys.stdout.write(f"{name:<{width}}  point={e.point}  params=[{', '.join(params)}]  {e.doc}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------

def _add_numeric_flags(p):
    p.add_argument("--tol", type=_positive, help="numerical tolerance")
    p.add_argument("--fd-step", type=_positive, help="finite-difference step (default 1e-4)")
    p.add_argument("--kmax", type=_positive_int, help="cap on powers per primitive")
    p.add_argument("--nmax", type=_positive_int, help="cap on the product index")
    p.add_argument("--spectrum", metavar="PATH", help="length-spectrum JSON (default: bundled synthetic)")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="higherdet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a function at points")
    p.add_argument("function")
    p.add_argument("assignments", nargs="*", metavar="name=value")
    p.add_argument("--point", action="append", type=parse_complex, help="evaluation point (repeatable)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_numeric_flags(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("table", help="evaluate a function on a rectangular grid")
    p.add_argument("function")
    p.add_argument("assignments", nargs="*", metavar="name=value")
    p.add_argument("--re", nargs=3, type=float, required=True, metavar=("START", "STOP", "COUNT"))
    p.add_argument("--im", nargs=3, type=float, default=(0.0, 0.0, 1), metavar=("START", "STOP", "COUNT"))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_numeric_flags(p)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=vf.SUITES + ("all",))
    _add_numeric_flags(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("spectrum-info", help="summarize a length-spectrum file")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(run=cmd_spectrum_info)

    p = sub.add_parser("list", help="list evaluable functions")
    p.set_defaults(run=cmd_list)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except _CliError as exc:
        sys.stderr.write(f"higherdet: {exc}\n")
        return exc.code
    except argparse.ArgumentTypeError as exc:
        sys.stderr.write(f"higherdet: {exc}\n")
        return EXIT_ROWS
    except Exception as exc:  # anything unexpected is a crash
        sys.stderr.write(f"higherdet: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_CRASH


if __name__ == "__main__":
    sys.exit(main())
