"""Command line front end.

Subcommands:
    solve    integrate x' = A x and emit the trajectory with per-point error
    params   print the scheme parameters (psi, phi, theta) for one matrix/step
    bench    run an error table or a per-example benchmark sweep
    verify   randomized exactness sweep over matrix shapes

Exit codes: 0 on success, 1 on a numerical/domain failure, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bench import (
    example_records,
    records_csv,
    records_json,
    steps_for,
    table_records,
)
from .errors import Eds3Error
from .linalg import expm
from .params import SchemeKind, params_for
from .problems import parse_matrix
from .scheme import integrate, one_shot
from .spectrum import classify, eigenvalues3
from .verify import exactness_sweep, format_report

_KINDS = {"ieds": SchemeKind.IMPLICIT, "eeds": SchemeKind.EXPLICIT,
          "implicit": SchemeKind.IMPLICIT, "explicit": SchemeKind.EXPLICIT}


def _parse_vec(text: str) -> np.ndarray:
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated values, got {text!r}")
    return np.asarray(parts)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _cmd_solve(args) -> int:
    a, problem = parse_matrix(args.matrix, args.lam)
    if args.x0 is not None:
        x0 = _parse_vec(args.x0)
    elif problem is not None:
        x0 = problem.x0
    else:
        raise Eds3Error("--x0 is required unless the matrix is a named example")
    kind = _KINDS[args.scheme]
    t_final = args.T

    if args.one_shot:
        x = one_shot(a, x0, t_final, kind, args.cluster_tol)
        times = np.array([t_final])
        states = x.reshape(1, 3)
    else:
        if (args.h is None) == (args.N is None):
            raise Eds3Error("exactly one of --h / --N must be given")
        n = args.N if args.N is not None else steps_for(t_final, args.h)
        traj = integrate(a, x0, t_final, n, kind, args.cluster_tol)
        times, states = traj.times, traj.states

    if problem is not None:
        errs = [float(np.sum(np.abs(states[i] - problem.exact(float(t)))))
                for i, t in enumerate(times)]
    else:
        errs = []
        for i, t in enumerate(times):
            ref = expm(a, float(t)) @ x0 if t != 0.0 else x0
            errs.append(float(np.sum(np.abs(states[i] - ref))))

    if args.format == "json":
        rows = [
            {"t": float(t), "x1": float(states[i][0]), "x2": float(states[i][1]),
             "x3": float(states[i][2]), "err": errs[i]}
            for i, t in enumerate(times)
        ]
        _emit(json.dumps({"rows": rows}, indent=2) + "\n", args.out)
    else:
        lines = ["t,x1,x2,x3,err"]
        for i, t in enumerate(times):
            x1, x2, x3 = (float(v) for v in states[i])
            lines.append(f"{float(t)!r},{x1!r},{x2!r},{x3!r},{errs[i]!r}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_params(args) -> int:
    a, _ = parse_matrix(args.matrix, args.lam)
    if args.cluster_tol is None:
        spec = eigenvalues3(a)
    else:
        spec = eigenvalues3(a, args.cluster_tol)
    sc = classify(spec)
    p = params_for(sc, args.h, _KINDS[args.kind])
    if args.format == "json":
        payload = {"class": sc.case_name, "kind": p.kind.value, "h": p.h,
                   "psi": p.psi, "phi": p.phi, "theta": p.theta}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        text = (
            f"class  {sc.case_name}\n"
            f"kind   {p.kind.value}\n"
            f"h      {p.h!r}\n"
            f"psi    {p.psi!r}\n"
            f"phi    {p.phi!r}\n"
            f"theta  {p.theta!r}\n"
        )
        _emit(text, args.out)
    return 0


def _cmd_bench(args) -> int:
    if (args.table is None) == (args.example is None):
        raise Eds3Error("exactly one of --table / --example must be given")
    if args.table is not None:
        records = table_records(args.table)
    else:
        records = example_records(args.example)
    text = records_json(records) if args.format == "json" else records_csv(records)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    rep = exactness_sweep(seed=args.seed, random_cases=args.cases,
                          jordan_cases=max(6, args.cases // 5))
    if args.format == "json":
        payload = {
            "cases": rep.cases,
            "comparisons": rep.comparisons,
            "worst_rel": rep.worst_rel,
            "worst_label": rep.worst_label,
            "failures": list(rep.failures),
            "passed": rep.passed,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(format_report(rep) + "\n", args.out)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eds3",
        description="Exact finite-difference schemes for 3-D linear ODE systems",
    )
    parser.add_argument("--cluster-tol", type=float, default=None, dest="cluster_tol",
                        help="relative eigenvalue clustering tolerance")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")

    # The same options are accepted after the subcommand; SUPPRESS keeps a
    # subparser with no explicit flag from clobbering a value parsed above.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cluster-tol", type=float, dest="cluster_tol",
                        default=argparse.SUPPRESS,
                        help="relative eigenvalue clustering tolerance")
    common.add_argument("--format", choices=("csv", "json"),
                        default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", parents=[common],
                             help="integrate and emit a trajectory")
    p_solve.add_argument("--matrix", required=True,
                         help="example1..example4, zero, 'a,b,c;...', or JSON path")
    p_solve.add_argument("--lambda", type=float, default=None, dest="lam",
                         help="free eigenvalue for example3")
    p_solve.add_argument("--x0", default=None, help="initial state 'a,b,c'")
    p_solve.add_argument("--scheme", choices=("ieds", "eeds"), default="ieds")
    p_solve.add_argument("--T", type=float, required=True, help="final time")
    p_solve.add_argument("--h", type=float, default=None, help="step size")
    p_solve.add_argument("--N", type=int, default=None, help="step count")
    p_solve.add_argument("--one-shot", action="store_true", dest="one_shot",
                         help="reach T in a single step of size T")
    p_solve.add_argument("--out", default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_params = sub.add_parser("params", parents=[common],
                              help="print scheme parameters")
    p_params.add_argument("--matrix", required=True)
    p_params.add_argument("--lambda", type=float, default=None, dest="lam")
    p_params.add_argument("--h", type=float, required=True)
    p_params.add_argument("--kind", choices=("implicit", "explicit"),
                          default="implicit")
    p_params.add_argument("--out", default=None)
    p_params.set_defaults(func=_cmd_params)

    p_bench = sub.add_parser("bench", parents=[common],
                             help="error tables and example sweeps")
    p_bench.add_argument("--table", type=int, choices=(3, 4), default=None)
    p_bench.add_argument("--example", type=int, choices=(1, 2, 3, 4, 5),
                         default=None)
    p_bench.add_argument("--out", default=None)
    p_bench.set_defaults(func=_cmd_bench)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="randomized exactness sweep")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=500,
                          help="number of dense random matrices")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Eds3Error, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
