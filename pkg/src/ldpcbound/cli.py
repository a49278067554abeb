"""Command-line interface.

    ldpcbound bound --q 8 --rho 30:1.0 --rate 0.9 --cw-bound composite
    ldpcbound table table2.spec --workers 4
    ldpcbound oracle --q 3 --ell 2 --n0 4 --N 16 --trials 5 --seed 7
    ldpcbound enumerator --spc 8:10

Numbers are printed with six decimals; domain errors exit with status 2
and a one-line message on stderr.
"""

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import kernels
from .bounds import gv_delta, invert_to_delta, rate_bound
from .cwbounds import REGISTRY
from .enumerators import WeightEnumerator, brute_force_enumerator, spc_enumerator
from .errors import DomainError, NoSolutionError
from .oracle import ParityCheckMatrix, ensemble_smoke
from .tablespec import COLUMNS, FORMATS, load_table_spec, parse_code


def fmt(x):
    return f"{x:.6f}"


def render(header, rows, style):
    if style == "markdown":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _code_from_args(args):
    if bool(args.rho) == bool(args.constituent):
        raise DomainError("give exactly one of --rho or --constituent")
    if args.rho:
        return f"rho:{args.rho}", parse_code(f"rho:{args.rho}", args.q)
    return args.constituent, parse_code(args.constituent, args.q)


def cmd_bound(args):
    label, code = _code_from_args(args)
    if args.delta is not None:
        res = rate_bound(args.q, code, args.delta, args.cw_bound)
        row = [str(args.q), label, "delta", fmt(args.delta), fmt(res.rate_bound), fmt(res.omega_star)]
    else:
        if not 0 < args.rate < 1:
            raise DomainError(f"--rate must lie in (0, 1), got {args.rate}")
        delta = invert_to_delta(args.q, code, args.rate, args.cw_bound)
        res = rate_bound(args.q, code, delta, args.cw_bound)
        row = [str(args.q), label, "rate", fmt(args.rate), fmt(delta), fmt(res.omega_star)]
    header = ["q", "code", "input", "delta_or_rate", "result", "omega_star"]
    sys.stdout.write(render(header, [row], args.format))


def compute_cell(cell, columns, base_dir):
    code = parse_code(cell.code, cell.q, base_dir)
    out = [cell.label, str(cell.q), cell.code, fmt(cell.rate)]
    for col in columns:
        cw = COLUMNS[col]
        if cw is None:
            value = gv_delta(cell.q, cell.rate)
        else:
            try:
                value = invert_to_delta(cell.q, code, cell.rate, cw)
            except NoSolutionError:
                # no positive distance is compatible with the rate
                value = 0.0
        out.append(fmt(value))
    return out


def _resolve_spec_path(path):
    if os.path.exists(path):
        return path
    name = path if path.endswith(".spec") else path + ".spec"
    packaged = resources.files("ldpcbound") / "tables" / name
    if packaged.is_file():
        return str(packaged)
    raise DomainError(f"table spec {path!r} not found")


def cmd_table(args):
    spec = load_table_spec(_resolve_spec_path(args.spec))
    style = args.format or spec.format
    header = ["label", "q", "code", "rate", *spec.columns]
    n = len(spec.cells)
    if args.workers > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(compute_cell, spec.cells, [spec.columns] * n, [spec.base_dir] * n))
    else:
        rows = [compute_cell(c, spec.columns, spec.base_dir) for c in spec.cells]
    sys.stdout.write(render(header, rows, style))


def cmd_oracle(args):
    rep = ensemble_smoke(args.q, args.ell, args.n0, args.N, args.trials, args.seed)
    lines = [f"# ensemble q={rep.q} ell={rep.ell} n0={rep.n0} N={rep.N} trials={args.trials} seed={rep.seed}"]
    lines.append("trial,d,d_over_N")
    lines += [f"{i},{d},{fmt(r)}" for i, (d, r) in enumerate(zip(rep.distances, rep.ratios), start=1)]
    lines += [f"summary,mean,{fmt(rep.mean)}", f"summary,min,{fmt(rep.min)}", f"summary,max,{fmt(rep.max)}"]
    lines.append(f"asymptotic,design_rate,{fmt(rep.design_rate)}")
    lines.append(f"asymptotic,gv,{fmt(rep.gv)}")
    for name in ("upper_composite", "upper_zero_floor"):
        value = getattr(rep, name)
        lines.append(f"asymptotic,{name},{'none' if value is None else fmt(value)}")
    sys.stdout.write("\n".join(lines) + "\n")


def cmd_enumerator(args):
    if bool(args.spc) == bool(args.parity_check):
        raise DomainError("give exactly one of --spc or --parity-check")
    if args.spc:
        try:
            q, n0 = (int(v) for v in args.spc.split(":"))
        except ValueError:
            raise DomainError("--spc expects <q>:<n0>") from None
        enum = spc_enumerator(q, n0)
    else:
        with open(args.parity_check) as fh:
            H = ParityCheckMatrix.loads(fh.read())
        q = H.q
        enum = brute_force_enumerator(H.rows, q)
    sys.stdout.write(enum.dumps(q))


def build_parser():
    parser = argparse.ArgumentParser(prog="ldpcbound", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", choices=sorted(kernels.BACKENDS), help="kernel implementation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="rate bound at a distance, or distance bound at a rate")
    p.add_argument("--q", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--delta", type=float)
    mode.add_argument("--rate", type=float)
    p.add_argument("--rho", help="row degree distribution i:frac,i:frac,...")
    p.add_argument("--constituent", help="spc:<n0> or file:<enumerator path>")
    p.add_argument("--cw-bound", default="composite", choices=sorted(REGISTRY))
    p.add_argument("--format", default="csv", choices=FORMATS)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="evaluate a table spec file")
    p.add_argument("spec", help="path to a .spec file, or the name of a packaged one (table1..table3)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, help="override the format in the spec file")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="exact minimum distances of a random regular ensemble")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("enumerator", help="print a weight enumerator file")
    p.add_argument("--spc", help="<q>:<n0> single parity-check code")
    p.add_argument("--parity-check", help="parity-check matrix file (exhaustive enumeration)")
    p.set_defaults(func=cmd_enumerator)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.backend:
        kernels.BACKEND = args.backend
    try:
        args.func(args)
    except DomainError as exc:
        print(f"ldpcbound: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ldpcbound: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
