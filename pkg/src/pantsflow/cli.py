"""Command line interface.

Subcommands: reconstruct, casimirs, trace, flow, fixed-point,
level-set, verify.  Numeric flags are comma-separated lists of plain
floats.  Exit codes: 0 ok, 2 usage, 3 numerical failure, 4
verification failure, 5 domain error.  The flow and level-set
commands write a rendered PNG next to the CSV they produce and
optionally an SVG polyline at an explicit path.
"""

import argparse
import json
import os
import sys

from .coords import FGCoords, LeafPoint, LengthVector, casimirs
from .dynamics import (BelowMinimumError, detect_period, find_minimum,
                       integrate, level_set, level_set_csv, svg_polyline,
                       trajectory_csv)
from .holonomy import eigenvalue_ratio_report, peripheral_holonomies
from .traces import (CurveId, has_closed_form, trace_closed_form,
                     trace_matrix_oracle)
from .verify import SUITE_NAMES, run_suite


def _fmt(x):
    return "%.17g" % x


def _parse_floats(text, n, label):
    parts = text.split(",")
    if len(parts) != n:
        raise ValueError("%s takes %d comma-separated numbers" % (label, n))
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise ValueError("%s: not a number in %r" % (label, text))


def _parse_coords(text):
    vals = _parse_floats(text, 8, "--coords")
    return FGCoords(vals[:6], vals[6:])


def _parse_leaf(text):
    return LengthVector(_parse_floats(text, 6, "--leaf"))


def _parse_point(leaf, text):
    s1, t1 = _parse_floats(text, 2, "--point")
    return LeafPoint(leaf, s1, t1)


def _matrix_lines(name, m):
    cells = [[_fmt(x) for x in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    lines = ["%s =" % name]
    for row in cells:
        lines.append("  [ %s ]" % "  ".join(c.rjust(width) for c in row))
    return lines


def _render_png(points, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    ax.plot([p[0] for p in points], [p[1] for p in points], lw=1.0)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("sigma1")
    ax.set_ylabel("tau1")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def cmd_reconstruct(args):
    c = _parse_coords(args.coords)
    a, b, cm = peripheral_holonomies(c)
    report = eigenvalue_ratio_report(c)
    if args.json:
        payload = {
            "A": [list(row) for row in a],
            "B": [list(row) for row in b],
            "C": [list(row) for row in cm],
            "eigenvalues": {g: list(report[g]["eigenvalues"])
                            for g in ("a", "b", "c")},
            "predicted_ratios": {g: list(report[g]["predicted"])
                                 for g in ("a", "b", "c")},
            "ratio_errors": {g: list(report[g]["errors"])
                             for g in ("a", "b", "c")},
            "ok": report["ok"],
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    for name, m in (("A", a), ("B", b), ("C", cm)):
        for line in _matrix_lines(name, m):
            print(line)
    for name, g in (("A", "a"), ("B", "b"), ("C", "c")):
        print("eigenvalues %s: %s" % (
            name, ", ".join(_fmt(x) for x in report[g]["eigenvalues"])))
        print("predicted ratios %s: %s (worst error %s)" % (
            name, ", ".join(_fmt(x) for x in report[g]["predicted"]),
            _fmt(max(report[g]["errors"]))))
    return 0


def cmd_casimirs(args):
    c = _parse_coords(args.coords)
    values = casimirs(c)
    if args.json:
        names = ("alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2")
        print(json.dumps(dict(zip(names, values)), sort_keys=True))
        return 0
    print(", ".join(_fmt(v) for v in values))
    return 0


def cmd_trace(args):
    leaf = _parse_leaf(args.leaf)
    p = _parse_point(leaf, args.point)
    curve = CurveId.parse(args.curve)
    oracle = trace_matrix_oracle(p, curve)
    if has_closed_form(leaf, curve):
        closed = trace_closed_form(p, curve)
        print("%s, %s, %s" % (_fmt(closed), _fmt(oracle),
                              _fmt(abs(closed - oracle))))
    else:
        print("n/a, %s, n/a" % _fmt(oracle))
    return 0


def cmd_flow(args):
    leaf = _parse_leaf(args.leaf)
    p = _parse_point(leaf, args.point)
    curve = CurveId.parse(args.curve)
    traj = integrate(p, curve, args.tmax, rtol=args.rtol)
    try:
        period = detect_period(p, curve, rtol=args.rtol)
    except ArithmeticError:
        period = None
    text = trajectory_csv(traj)
    with open(args.out, "w") as fh:
        fh.write(text)
    print("wrote %s" % args.out)
    png = os.path.splitext(args.out)[0] + ".png"
    _render_png(traj.points(), png)
    print("wrote %s" % png)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(svg_polyline(traj.points()))
        print("wrote %s" % args.svg)
    print("samples %d; drift %s; period %s" % (
        len(traj), _fmt(traj.drift),
        "none" if period is None else _fmt(period)))
    return 0


def cmd_fixed_point(args):
    leaf = _parse_leaf(args.leaf)
    curve = CurveId.parse(args.curve)
    start = _parse_floats(args.start, 2, "--start")
    s1, t1, value = find_minimum(leaf, curve, start=start)
    if args.json:
        print(json.dumps({"sigma1": s1, "tau1": t1, "value": value},
                         sort_keys=True))
        return 0
    print("%s, %s" % (_fmt(s1), _fmt(t1)))
    return 0


def cmd_level_set(args):
    leaf = _parse_leaf(args.leaf)
    curve = CurveId.parse(args.curve)
    points = level_set(leaf, curve, args.level)
    with open(args.out, "w") as fh:
        fh.write(level_set_csv(points))
    print("wrote %s" % args.out)
    png = os.path.splitext(args.out)[0] + ".png"
    _render_png(points, png)
    print("wrote %s" % png)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(svg_polyline(points))
        print("wrote %s" % args.svg)
    print("vertices %d; level %s" % (len(points), _fmt(args.level)))
    return 0


def cmd_verify(args):
    if args.seed is not None:
        seed = args.seed
    else:
        seed = int(os.environ.get("PANTS_SEED", "42"))
    threads = args.threads if args.threads is not None else os.cpu_count()
    only = None if args.suite == "all" else args.suite
    reports = run_suite(seed=seed, samples=args.samples, threads=threads,
                        only=only)
    for report in reports:
        print(json.dumps(report, sort_keys=True))
    if any(report["failed"] for report in reports):
        return 4
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pants",
        description="Reconstruction, traces, flows, and verification for "
                    "framed projective structures on the pair of pants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reconstruct",
                       help="boundary holonomy matrices from coordinates")
    p.add_argument("--coords", required=True,
                   help="s1,s2,s3,s4,s5,s6,t1,t2 (positive)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_reconstruct)

    p = sub.add_parser("casimirs", help="six eigenvalue-ratio invariants")
    p.add_argument("--coords", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_casimirs)

    p = sub.add_parser("trace", help="curve trace, closed form and oracle")
    p.add_argument("--leaf", required=True, help="l_a1,l_a2,l_b1,l_b2,l_g1,l_g2")
    p.add_argument("--point", required=True, help="sigma1,tau1")
    p.add_argument("--curve", required=True,
                   help="fig8 | fig8_inv | fig8_sym | commutator | theta | "
                        "power:<k> | word:<tokens>")
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("flow", help="integrate a trace flow orbit to CSV")
    p.add_argument("--leaf", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--curve", required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--rtol", type=float, default=1e-10)
    p.add_argument("--svg", help="also write an SVG polyline here")
    p.set_defaults(fn=cmd_flow)

    p = sub.add_parser("fixed-point", help="minimum of the trace on a leaf")
    p.add_argument("--leaf", required=True)
    p.add_argument("--curve", required=True)
    p.add_argument("--start", default="1,1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fixed_point)

    p = sub.add_parser("level-set", help="closed level curve of the trace")
    p.add_argument("--leaf", required=True)
    p.add_argument("--curve", required=True)
    p.add_argument("--level", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--svg", help="also write an SVG polyline here")
    p.set_defaults(fn=cmd_level_set)

    p = sub.add_parser("verify", help="run the numerical verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BelowMinimumError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 5
    except ArithmeticError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
