"""Command line: ``lmp gen|verify|analyze|export``.

Exit codes: 0 success, 1 usage or parse error, 2 certification failure (or
an analysis that needs a measure-preserving map got one that is not).
Every command accepts ``--config FILE`` (JSON of option values; explicit
flags win) and ``--save-config FILE`` (writes the resolved options), so a
saved config reproduces a run byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from pathlib import Path

from .analysis import (
    UncertifiedMap,
    blowup_statistic,
    box_dimension,
    crookedness_check,
    dini_envelopes,
    find_witness,
    knot_fraction,
    density_identity_check,
    rokhlin_entropy,
    topological_entropy_lower,
)
from .constructions import (
    SeedSchedule,
    ci_besicovitch,
    conjugate,
    corpus,
    densify,
    seed,
)
from .core import (
    DenominatorOverflow,
    IntervalSet,
    NotCertifiable,
    PAMap,
    certify_preservation,
    format_rational,
    montecarlo_pushforward,
    parse_rational,
    sup_distance,
)
from .core.io import MapFormatError, atomic_write_text, dumps, load
from .core.rational import MPQ

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- rendering

_FLOAT_MARK = "\u0000F"


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _mark_floats(obj):
    if isinstance(obj, float):
        return _FLOAT_MARK + _fmt_float(obj) + "\u0000" if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _mark_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_mark_floats(v) for v in obj]
    return obj


def render_json(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    text = json.dumps(_mark_floats(obj), indent=2)
    return re.sub(r'"\\u0000F([^"\\]*)\\u0000"', r"\1", text) + "\n"


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else _fmt_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_intervals(text: str) -> IntervalSet:
    """``"lo:hi,lo:hi"`` with rational endpoints."""
    comps = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition(":")
        if not sep:
            raise UsageError(f"interval {part!r} must be written lo:hi")
        comps.append((parse_rational(lo), parse_rational(hi)))
    return IntervalSet(comps)


def _parse_exponents(text: str) -> list[int]:
    """``"a:b"`` (inclusive) or ``"a,b,c"``."""
    if ":" in text:
        a, b = text.split(":", 1)
        return list(range(int(a), int(b) + 1))
    return [int(p) for p in text.split(",") if p.strip()]


# ---------------------------------------------------------------- config

_INTERNAL = {"config", "save_config", "command", "func"}


def _resolved_config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _INTERNAL}


def _apply_config(parser: argparse.ArgumentParser, sub: argparse.ArgumentParser, argv) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args
    try:
        data = json.loads(Path(args.config).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    if data.get("command", args.command) != args.command:
        raise UsageError(f"config is for command {data['command']!r}, not {args.command!r}")
    params = dict(data.get("params", data))
    params.pop("command", None)
    known = {a.dest for a in sub._actions} | {"denom_guard"}
    unknown = set(params) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    if "denom_guard" in params:
        parser.set_defaults(denom_guard=params.pop("denom_guard"))
    sub.set_defaults(**{k: v for k, v in params.items() if k not in _INTERNAL})
    return parser.parse_args(argv)


# ---------------------------------------------------------------- commands


def _schedule(args) -> SeedSchedule:
    mult = args.multiplicity
    if isinstance(mult, list):
        mult = tuple(mult)
    return SeedSchedule(multiplicity=mult, max_level=max(args.max_level, args.seed_level or 0))


def _load_map(path) -> PAMap:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_gen(args) -> int:
    sources = [s for s in ("densify", "conjugate", "ci") if getattr(args, s)]
    if len(sources) > 1:
        raise UsageError("choose at most one of --densify, --conjugate, --ci")
    source = sources[0] if sources else "seed"
    out = sys.stdout if args.output else sys.stderr
    schedule = _schedule(args)
    density = None
    flagged = True  # output must preserve Lebesgue measure (or the pushed density)
    if source == "seed":
        if args.seed_level is None:
            raise UsageError("gen needs --seed-level, --densify, --conjugate or --ci")
        f = PAMap.from_function(seed(args.seed_level, schedule))
    elif source == "densify":
        if args.eps is None or args.seed_level is None:
            raise UsageError("--densify needs --eps and --seed-level")
        ell = _load_map(args.densify)
        try:
            f = densify(ell, args.eps, args.seed_level, schedule)
        except ValueError as exc:
            print(f"densify: {exc}", file=sys.stderr)
            return EXIT_FAIL
        dist = sup_distance(ell, f)
        ok = dist < args.eps / 2
        print(f"sup distance {format_rational(dist)} ({_fmt_float(float(dist))}) "
              f"{'<' if ok else '>='} eps/2 = {format_rational(args.eps / 2)}", file=out)
        if not ok:
            return EXIT_FAIL
    elif source == "conjugate":
        if not args.homeomorphism:
            raise UsageError("--conjugate needs --homeomorphism")
        try:
            res = conjugate(_load_map(args.conjugate), _load_map(args.homeomorphism))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        f, density = res.q, res.density
        print("invariant density (step): "
              + ", ".join(f"{format_rational(v)} on [{format_rational(a)}, {format_rational(b)}]"
                          for a, b, v in zip(density.breaks, density.breaks[1:], density.values)),
              file=out)
    else:
        if args.seed_level is None:
            raise UsageError("--ci needs --seed-level")
        slope, intercept, alpha, beta = args.ci
        try:
            f = ci_besicovitch((slope, intercept), alpha, beta, args.seed_level, schedule)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        flagged = False
    try:
        cert = certify_preservation(f, density)
        verdict = cert.summary()
        passed = cert.passed
    except NotCertifiable as exc:
        verdict, passed = f"not certifiable: {exc}", False
    print(f"certificate: {verdict}", file=out)
    if args.output:
        atomic_write_text(args.output, dumps(f))
    else:
        out.write(dumps(f))
    return EXIT_FAIL if flagged and not passed else EXIT_OK


def cmd_verify(args) -> int:
    f = _load_map(args.map)
    try:
        cert = certify_preservation(f)
    except NotCertifiable as exc:
        print(f"fail: {exc}")
        return EXIT_FAIL
    if cert.passed:
        print(f"pass ({len(cert.cells)} value cells)")
    else:
        print("fail")
        for cell in cert.failing_cells():
            print(f"  cell {cell.label()} deficiency {format_rational(cell.deficiency)}")
    report = {"map": str(args.map), "certificate": cert.to_json()}
    if args.montecarlo:
        samples, bins = args.montecarlo
        if samples < 1 or bins < 1:
            raise UsageError("--montecarlo needs positive SAMPLES and BINS")
        hist = montecarlo_pushforward(f, samples, bins, args.rng, method=args.sampling)
        within = hist.sup_deviation < hist.bound()
        print(f"montecarlo: samples {samples} bins {bins} rng {args.rng} ({args.sampling}) "
              f"sup deviation {_fmt_float(hist.sup_deviation)} at bin {hist.worst_bin}, "
              f"bound {_fmt_float(hist.bound())} {'ok' if within else 'EXCEEDED'}")
        report["montecarlo"] = {
            "samples": samples,
            "bins": bins,
            "rngSeed": args.rng,
            "method": args.sampling,
            "supDeviation": hist.sup_deviation,
            "worstBin": hist.worst_bin,
            "bound": hist.bound(),
            "withinBound": within,
        }
        if cert.passed and not within:
            if args.report:
                atomic_write_text(args.report, render_json(report))
            return EXIT_FAIL
    if args.report:
        atomic_write_text(args.report, render_json(report))
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_analyze(args) -> int:
    f = _load_map(args.map)
    out_dir = Path(args.out_dir)
    report: dict = {"map": Path(args.map).name}
    tables: dict[str, str] = {}
    try:
        if args.entropy:
            h = rokhlin_entropy(f)
            report["rokhlinEntropy"] = {**h.to_json(), "positive": h.is_positive()}
        if args.witness:
            w = find_witness(f)
            report["witness"] = None if w is None else w.to_json()
        if args.lemma2:
            res = density_identity_check(f, _parse_intervals(args.lemma2))
            report["densityIdentity"] = res.to_json()
    except UncertifiedMap as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.laps:
        tab = topological_entropy_lower(f, args.laps)
        report["laps"] = tab.to_json()
        tables["laps.csv"] = render_csv(["n", "laps", "estimate"], tab.rows)
        if not tab.complete:
            print(f"laps: stopped early: {tab.message}", file=sys.stderr)
    if args.dini:
        scales = _parse_exponents(args.dini_scales)
        envs = dini_envelopes(f, args.dini_grid, scales, args.dini_increments)
        rows = [r for e in envs for r in e.to_rows()]
        tables["dini.csv"] = render_csv(
            ["x", "exponent", "maxRight", "minRight", "maxLeft", "minLeft"], rows)
        report["dini"] = {
            "gridPoints": args.dini_grid,
            "increments": args.dini_increments,
            "blowup": [{"exponent": j, "minMaxAbsRightQuotient": float(blowup_statistic(envs, j))}
                       for j in sorted(set(scales))],
            "knotFraction": knot_fraction(envs, args.knot_threshold),
            "knotThreshold": format_rational(args.knot_threshold),
        }
    if args.boxdim:
        tab = box_dimension(f, _parse_exponents(args.box_scales))
        report["boxDimension"] = tab.to_json()
        tables["boxdim.csv"] = render_csv(["exponent", "boxes"], tab.rows)
    if args.crooked:
        delta_text, n_text = args.crooked
        delta = _rational(delta_text)
        try:
            n_max = int(n_text)
        except ValueError as exc:
            raise UsageError(f"--crooked N must be an integer: {n_text!r}") from exc
        try:
            rows = crookedness_check(f, delta, n_max)
        except DenominatorOverflow as exc:
            print(f"crooked: {exc}", file=sys.stderr)
            return EXIT_FAIL
        report["crooked"] = {"delta": format_rational(delta), "rows": [r.to_json() for r in rows]}
        tables["crooked.csv"] = render_csv(
            ["n", "crooked", "witnessA", "witnessB"],
            [[r.n, r.crooked, *(["", ""] if r.witness is None else [format_rational(v) for v in r.witness])]
             for r in rows])
    report["tables"] = sorted(tables)
    for name, text in tables.items():
        atomic_write_text(out_dir / name, text)
    atomic_write_text(out_dir / "report.json", render_json(report))
    print(f"wrote {out_dir / 'report.json'}" + (f" and {len(tables)} tables" if tables else ""))
    return EXIT_OK


def cmd_export(args) -> int:
    if args.corpus:
        out = Path(args.corpus)
        entries = corpus(args.size, args.corpus_seed)
        index = []
        for k, e in enumerate(entries):
            name = f"{k:03d}-{e.name}.json"
            atomic_write_text(out / name, dumps(e.map))
            index.append([k, e.name, name, e.map.n_segments, e.map.lap_count()])
        atomic_write_text(out / "index.csv", render_csv(["index", "name", "file", "segments", "laps"], index))
        print(f"wrote {len(entries)} maps to {out}")
        return EXIT_OK
    if not args.map:
        raise UsageError("export needs MAP or --corpus DIR")
    f = _load_map(args.map)
    rows = [[format_rational(x), format_rational(y), float(x), float(y)] for x, y in zip(f.xs, f.ys)]
    text = render_csv(["x", "y", "xFloat", "yFloat"], rows)
    if args.csv:
        atomic_write_text(args.csv, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = _Parser(prog="lmp", description=__doc__.splitlines()[0])
    parser.add_argument("--denom-guard", type=int, default=None,
                        help="denominator limit (default from LMP_DENOM_GUARD or 2**512)")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    subparsers = {}

    def common(p):
        p.add_argument("--config", help="JSON file of option values")
        p.add_argument("--save-config", help="write the resolved options to this file")

    p = subs.add_parser("gen", help="generate a map")
    common(p)
    p.add_argument("--seed-level", type=int)
    p.add_argument("--multiplicity", type=int, default=3, help="odd zigzag multiplicity of the seed")
    p.add_argument("--max-level", type=int, default=8)
    p.add_argument("--densify", metavar="IN", help="densify this map")
    p.add_argument("--eps", type=_rational)
    p.add_argument("--conjugate", metavar="IN", help="conjugate this map")
    p.add_argument("--homeomorphism", metavar="P", help="increasing PL map fixing 0 and 1")
    p.add_argument("--ci", nargs=4, type=_rational, metavar=("SLOPE", "INTERCEPT", "ALPHA", "BETA"),
                   help="affine map plus scaled seed bumps")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    subparsers["gen"] = p

    p = subs.add_parser("verify", help="certify Lebesgue preservation")
    common(p)
    p.add_argument("map")
    p.add_argument("--montecarlo", nargs=2, type=int, metavar=("SAMPLES", "BINS"))
    p.add_argument("--rng", type=int, default=0)
    p.add_argument("--sampling", choices=("stratified", "iid"), default="stratified")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_verify)
    subparsers["verify"] = p

    p = subs.add_parser("analyze", help="run analyses and write a report")
    common(p)
    p.add_argument("map")
    p.add_argument("--entropy", action="store_true")
    p.add_argument("--laps", type=int, metavar="N")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--dini", action="store_true")
    p.add_argument("--dini-grid", type=int, default=100)
    p.add_argument("--dini-scales", default="0:8", help="exponents j, as a:b or a,b,c")
    p.add_argument("--dini-increments", type=int, default=40)
    p.add_argument("--knot-threshold", type=_rational, default=parse_rational("100"))
    p.add_argument("--boxdim", action="store_true")
    p.add_argument("--box-scales", default="6:12")
    p.add_argument("--crooked", nargs=2, metavar=("DELTA", "N"))
    p.add_argument("--lemma2", metavar="A",
                   help="check the density-point identity on the interval set lo:hi,lo:hi")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_analyze)
    subparsers["analyze"] = p

    p = subs.add_parser("export", help="export breakpoints as CSV or write the corpus")
    common(p)
    p.add_argument("map", nargs="?")
    p.add_argument("--csv")
    p.add_argument("--corpus", metavar="DIR")
    p.add_argument("--size", type=int, default=250)
    p.add_argument("--corpus-seed", type=int, default=0)
    p.set_defaults(func=cmd_export)
    subparsers["export"] = p
    return parser, subparsers


def _jsonable(args):
    # configs store rationals as "p/q" strings
    for k, v in list(vars(args).items()):
        if isinstance(v, MPQ):
            setattr(args, k, format_rational(v))
        elif isinstance(v, list) and v and isinstance(v[0], MPQ):
            setattr(args, k, [format_rational(x) for x in v])


def _rationals_back(args):
    for k in ("eps", "knot_threshold"):
        v = getattr(args, k, None)
        if isinstance(v, str):
            setattr(args, k, parse_rational(v))
    if isinstance(getattr(args, "ci", None), list):
        args.ci = [parse_rational(v) if isinstance(v, str) else v for v in args.ci]


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser, subparsers = build_parser()
    try:
        first = parser.parse_args(argv)
        args = _apply_config(parser, subparsers[first.command], argv)
        _jsonable(args)
        if args.save_config:
            atomic_write_text(args.save_config,
                              render_json({"command": args.command, "params": _resolved_config(args)}))
        _rationals_back(args)
        if args.denom_guard is not None:
            if args.denom_guard < 2:
                raise UsageError("--denom-guard must be >= 2")
            os.environ["LMP_DENOM_GUARD"] = str(args.denom_guard)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (MapFormatError, ValueError) as exc:
        print(f"lmp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DenominatorOverflow as exc:
        print(f"lmp: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
