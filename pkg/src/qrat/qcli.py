"""Command line front end: ``qrat <subcommand> ...``.

Exit codes: 0 success, 2 domain error, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .braidcore import continued_normal_form, format_word, parse_word, word_matrix_q
from .contfrac import Rational, cf_value, format_cf, parse_cf, parse_rational, to_even_cf
from .hnauto import BASIC, apply_braid, basic_object, hom, object_of, occ
from .qboundary import classify_boundary_point
from .qfarey import generate, render_svg, svg_arcs
from .qknots import jones_abs
from .qpoly import format_laurent
from .qrationals import deform, deform_value
from .stabmass import (DEFAULT_PROBES, StdStabCond, basic_masses, boundary_limit, degeneracy_check,
                       gromov_of, mass_vector, random_std)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 2, 64
MAX_DEPTH = 12


class UsageError(Exception):
    pass


@dataclass
class Config:
    default_q: float = 0.5
    default_depth: int = 4
    output_format: str = "json"
    svg_scale: float = 5.0
    rng_seed: int = 0

    def validate(self) -> "Config":
        if not 0 < self.default_q < 1:
            raise UsageError(f"default_q must lie in (0, 1), got {self.default_q}")
        if not 1 <= self.default_depth <= MAX_DEPTH:
            raise UsageError(f"default_depth must be in 1..{MAX_DEPTH}")
        if self.output_format not in ("text", "json", "csv"):
            raise UsageError(f"unknown output_format {self.output_format!r}")
        return self


def load_config(path: Optional[str], env: Dict[str, str]) -> Config:
    cfg = Config()
    types = {f.name: f.type for f in fields(Config)}
    if path:
        try:
            with open(path) as fh:
                lines = fh.read().splitlines()
        except OSError as e:
            raise UsageError(f"cannot read config: {e}")
        for n, line in enumerate(lines, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep or key not in types:
                raise UsageError(f"{path}:{n}: bad config line {line!r}")
            conv = {"float": float, "int": int, "str": str}[types[key]]
            try:
                setattr(cfg, key, conv(value))
            except ValueError:
                raise UsageError(f"{path}:{n}: bad value for {key}")
    if "QRAT_SEED" in env:
        try:
            cfg.rng_seed = int(env["QRAT_SEED"])
        except ValueError:
            raise UsageError("QRAT_SEED must be an integer")
    return cfg.validate()


# formatting

def fmt_float(x: float) -> Any:
    """12 significant digits; non-finite values become strings for JSON."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(f"{x:.12g}")


def fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _clean(obj):
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        return _clean(obj.item())
    return obj


def emit(obj, fmt: str, out) -> None:
    obj = _clean(obj)
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    elif fmt == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        rows = [r if isinstance(r, dict) else {"value": r} for r in rows]
        keys = sorted({k for r in rows for k in r})
        w = csv.DictWriter(out, keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    else:
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                out.write(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}\n")
        elif isinstance(obj, list):
            for item in obj:
                out.write(json.dumps(item, sort_keys=True) + "\n")
        else:
            out.write(f"{obj}\n")


def parse_q(text: str):
    """Decimal or exact fraction; fractions stay exact."""
    try:
        q = Fraction(text.strip()) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad value for --q: {text!r}")
    return q


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"bad complex number {text!r}")


def _rational(text: str) -> Rational:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}")


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError as e:
        raise UsageError(str(e))


def _q_or_default(args, cfg: Config):
    return args.q if args.q is not None else cfg.default_q


# subcommands

def cmd_deform(args, cfg, out):
    x = _rational(args.x)
    sides = ("sharp", "flat") if args.side == "both" else (args.side,)
    result: Dict[str, Any] = {"x": str(x)}
    for side in sides:
        num, den = deform(x, side)
        entry = {"num": format_laurent(num), "den": format_laurent(den)}
        if args.q is not None or args.format == "float":
            entry["value"] = float(deform_value(x, _q_or_default(args, cfg), side))
        result[side] = entry
    if args.format == "json":
        emit(result, "json", out)
    elif args.format == "float":
        for side in sides:
            out.write(f"{side}: {fmt_float(result[side]['value'])}\n")
    else:
        for side in sides:
            e = result[side]
            out.write(f"{side}: ({e['num']})/({e['den']})\n")


def cmd_cf(args, cfg, out):
    if args.eval:
        try:
            digits = parse_cf(args.x)
        except ValueError as e:
            raise UsageError(str(e))
        out.write(f"{cf_value(digits)}\n")
    else:
        out.write(format_cf(to_even_cf(_rational(args.x))) + "\n")


def cmd_braid(args, cfg, out):
    w = _word(args.word)
    m = word_matrix_q(w)
    nf = continued_normal_form(w)
    result = {
        "word": format_word(w),
        "matrix": [format_laurent(e) for e in m.entries()],
        "label": str(object_of(w).label),
        "normal_form": {"form": nf.form, "digits": list(nf.digits), "M": nf.M, "N": nf.N,
                        "strict": nf.strict},
    }
    if args.q is not None:
        result["matrix_at_q"] = [float(v) for v in np.asarray(m.at(args.q), dtype=float).ravel()]
    emit(result, args.format or cfg.output_format, out)


def cmd_orbit(args, cfg, out):
    w = _word(args.braid)
    x = object_of(w)
    wanted = [s.strip() for s in args.emit.split(",") if s.strip()]
    unknown = set(wanted) - {"occ", "hom", "label", "vector"}
    if unknown:
        raise UsageError(f"unknown --emit fields {sorted(unknown)}")
    result: Dict[str, Any] = {"braid": format_word(w)}
    if "label" in wanted:
        result["label"] = str(x.label)
    if "vector" in wanted:
        result["vector"] = {name: format_laurent(c) for name, c in zip(BASIC, x.vector)}
    for key, fn in (("occ", occ), ("hom", hom)):
        if key in wanted:
            vals = {base: fn(base, x) for base in ("P1", "P2")}
            result[key] = {b: format_laurent(v) for b, v in vals.items()}
            if args.q is not None:
                result[key + "_at_q"] = {b: float(v(args.q)) for b, v in vals.items()}
    emit(result, args.format or cfg.output_format, out)


def cmd_jones(args, cfg, out):
    x = _rational(args.x)
    poly = jones_abs(x, args.route)
    coeffs = [poly.coeff(e) for e in range(0, poly.max_degree() + 1)]
    emit({"knot_fraction": str(x), "coefficients": coeffs, "polynomial": format_laurent(poly)},
         args.format or cfg.output_format, out)


def cmd_farey(args, cfg, out):
    q = float(_q_or_default(args, cfg))
    depth = args.depth if args.depth is not None else cfg.default_depth
    if not 1 <= depth <= MAX_DEPTH:
        raise UsageError(f"--depth must be in 1..{MAX_DEPTH}")
    scale = args.scale if args.scale is not None else cfg.svg_scale
    t = generate(args.half, depth)
    if args.svg:
        render_svg(t, q, args.svg, scale)
        out.write(f"wrote {args.svg}\n")
        return
    arcs = [{"x1": a, "x2": b, "width": w} for a, b, w in svg_arcs(t, q, scale)]
    emit(arcs, args.format or cfg.output_format, out)


def cmd_classify(args, cfg, out):
    q = _q_or_default(args, cfg)
    try:
        x = Fraction(args.x) if isinstance(q, Fraction) else float(args.x)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad value for --x: {args.x!r}")
    emit(classify_boundary_point(x, q, args.depth).to_json(), "json", out)


def _probes(text: Optional[str]) -> Sequence[str]:
    if not text:
        return DEFAULT_PROBES
    return [s.strip() for s in text.split(",") if s.strip()]


def cmd_stab(args, cfg, out):
    fmt = args.format or cfg.output_format
    q = float(_q_or_default(args, cfg))
    if args.stab_cmd == "gromov":
        tau = StdStabCond(parse_complex(args.z1), parse_complex(args.z2))
        kind, g = gromov_of(tau, q)
        bm = basic_masses(tau, q)
        report = degeneracy_check(tau, q)
        emit({"type": report.kind, "a": g.a, "b": g.b, "c": g.c,
              "masses": {"P1": bm.m1, "P2": bm.m2, "P12": bm.m12, "P21": bm.m21},
              "margins": list(report.margins), "strict": report.strict}, fmt, out)
    elif args.stab_cmd == "limit":
        rep = boundary_limit(_word(args.braid), q, _probes(args.probes), args.m_max)
        rows = [{"m": m + 1, "distance": d} for m, d in enumerate(rep.distances)]
        if fmt == "csv":
            emit(rows, "csv", out)
        else:
            emit({"probes": rep.probes, "target": rep.target, "final_distance": rep.distances[-1],
                  "distances": rep.distances}, fmt, out)
    else:
        rng = np.random.default_rng(cfg.rng_seed if args.seed is None else args.seed)
        rows = []
        probes = _probes(args.probes)
        for _ in range(args.count):
            tau = random_std(rng)
            rep = degeneracy_check(tau, q)
            row = {"z1": fmt_complex(tau.z1), "z2": fmt_complex(tau.z2), "type": rep.kind, "strict": rep.strict,
                   "min_margin": min(rep.margins)}
            if args.masses:
                row["masses"] = mass_vector(tau, q, probes)
            rows.append(row)
        emit(rows, fmt, out)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qrat", description="q-deformed rationals, braids and q-masses")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--config", help="key=value configuration file")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    fmt_choices = ("text", "json", "csv")

    s = sub.add_parser("deform", help="right/left q-deformation of a rational")
    s.add_argument("x")
    s.add_argument("--side", choices=("sharp", "flat", "both"), default="sharp")
    s.add_argument("--format", choices=("exact", "float", "json"), default="exact")
    s.add_argument("--q", type=parse_q)
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("cf", help="even continued fraction of a rational")
    s.add_argument("x")
    s.add_argument("--eval", action="store_true", help="evaluate a bracketed digit list instead")
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("braid", help="matrix and continued normal form of a braid word")
    s.add_argument("word")
    s.add_argument("--q", type=parse_q)
    s.add_argument("--format", choices=fmt_choices)
    s.set_defaults(func=cmd_braid)

    s = sub.add_parser("orbit", help="HN data of the spherical object beta P1")
    s.add_argument("--braid", required=True)
    s.add_argument("--q", type=parse_q)
    s.add_argument("--emit", default="occ,hom,label,vector")
    s.add_argument("--format", choices=fmt_choices)
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("jones", help="absolute Jones polynomial of a two-bridge knot")
    s.add_argument("x")
    s.add_argument("--route", choices=("closures", "flat", "both"), default="both")
    s.add_argument("--format", choices=fmt_choices)
    s.set_defaults(func=cmd_jones)

    s = sub.add_parser("farey", help="q-deformed Farey tessellation")
    s.add_argument("--q", type=parse_q)
    s.add_argument("--depth", type=int)
    s.add_argument("--half", choices=("positive", "negative"), default="positive")
    s.add_argument("--svg")
    s.add_argument("--scale", type=float)
    s.add_argument("--format", choices=fmt_choices)
    s.set_defaults(func=cmd_farey)

    s = sub.add_parser("classify", help="locate a real number among q-rational intervals")
    s.add_argument("--x", required=True)
    s.add_argument("--q", type=parse_q)
    s.add_argument("--depth", type=int, default=64)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("stab", help="q-mass numerics for standard stability conditions")
    stab = s.add_subparsers(dest="stab_cmd", required=True, parser_class=_Parser)
    g = stab.add_parser("gromov")
    g.add_argument("--z1", required=True)
    g.add_argument("--z2", required=True)
    lim = stab.add_parser("limit")
    lim.add_argument("--braid", default="")
    lim.add_argument("--m-max", type=int, default=60)
    lim.add_argument("--probes")
    smp = stab.add_parser("sample")
    smp.add_argument("--count", type=int, default=10)
    smp.add_argument("--seed", type=int)
    smp.add_argument("--probes")
    smp.add_argument("--masses", action="store_true")
    for sp in (g, lim, smp):
        sp.add_argument("--q", type=parse_q)
        sp.add_argument("--format", choices=fmt_choices)
    s.set_defaults(func=cmd_stab)
    return p


def main(argv: Optional[List[str]] = None, out=None, env=None) -> int:
    out = out if out is not None else sys.stdout
    env = os.environ if env is None else env
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(args.config, env)
        q = getattr(args, "q", None)
        if q is not None and not 0 < q < 1 and args.cmd != "braid" and args.cmd != "orbit":
            raise ValueError(f"q must lie in (0, 1), got {q}")
        args.func(args, cfg, out)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, ArithmeticError) as e:
        print(f"qrat: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
