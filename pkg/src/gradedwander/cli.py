"""Command line entry point: ``gradedwander COMMAND [PROBLEM] [options]``."""
from __future__ import annotations

import argparse
import sys
import time

from .expr import format_polynomial, format_vector
from .gradedmod import hilbert_function
from .innerprod import InnerKernel
from .koszul import euler_index, koszul_betti_check, koszul_homology_table
from .problem import ProblemError, ProblemFile, load_problem
from .report import Report
from .resolve import (check_exactness, check_minimality, fredholm_index,
                      minimal_resolution)
from .wander import (ORTHOGONAL, SUBSET, betti_counts, minimize_generators,
                     verify_minimal_orthogonality)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_UNCERTIFIED = 3

COMMANDS = ("minimize", "betti", "resolve", "koszul", "hilbert", "verify")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gradedwander",
                                 description="Minimal generators, Betti numbers and free resolutions "
                                             "of graded polynomial modules.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", nargs="?", default="-", help="problem file (default: standard input)")
    ap.add_argument("--kernel", choices=("hardy", "da"), default="hardy")
    ap.add_argument("--mode", choices=(ORTHOGONAL, SUBSET), default=ORTHOGONAL)
    ap.add_argument("--max-degree", type=int, default=None,
                    help="truncation degree for resolutions and Koszul scans")
    ap.add_argument("--up-to", type=int, default=None, help="last degree for betti / hilbert")
    ap.add_argument("--degree-bound", type=int, default=None,
                    help="known bound on all syzygy degrees, used to certify resolutions")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--require-certified", action="store_true",
                    help="exit with status 3 if a resolution is not certified complete")
    return ap


def _vec(v, problem):
    return format_vector(v.components, problem.variables)


def _resolution_results(res, problem):
    variables = problem.variables
    return {
        "pi0": [_vec(v, problem) for v in res.pi0],
        "degrees": res.degree_lists(),
        "maps": [[[format_polynomial(f, variables) for f in row] for row in step.phi] for step in res.steps],
        "dims": list(res.dims()),
        "length": res.length,
        "truncation_degree": res.truncation_degree,
    }


def _certification(res):
    return {"certified_complete": res.certified_complete,
            "certification": res.certification,
            "diagnostics": list(res.diagnostics)}


def run(args, problem: ProblemFile):
    m = problem.module()
    kernel = InnerKernel.from_name(args.kernel)
    results, cert, status = {}, {}, EXIT_OK
    top = m.max_generator_degree()

    if args.command == "minimize":
        mg = minimize_generators(m.generators, args.mode, kernel, m.relations)
        results = {"generators": [_vec(v, problem) for v in mg.vectors],
                   "degrees": list(mg.degrees), "sources": list(mg.sources),
                   "counts": mg.counts(), "mode": mg.mode, "kernel": str(kernel)}
    elif args.command == "betti":
        up_to = args.up_to if args.up_to is not None else top
        results = {"betti": betti_counts(m, up_to) if up_to is not None else {}, "up_to": up_to}
    elif args.command == "hilbert":
        up_to = args.up_to if args.up_to is not None else (top or 0) + 2 * max(problem.weights)
        results = {"hilbert": [hilbert_function(m, k) for k in range(up_to + 1)], "up_to": up_to}
    elif args.command == "resolve":
        res = minimal_resolution(m, args.max_degree, kernel, args.degree_bound)
        results = _resolution_results(res, problem)
        results["minimal"] = check_minimality(res).ok
        if res.certified_complete:
            results["fredholm_index"] = fredholm_index(res)
        cert = _certification(res)
        if args.require_certified and not res.certified_complete:
            status = EXIT_UNCERTIFIED
    elif args.command == "koszul":
        k_max = args.max_degree if args.max_degree is not None else m.default_max_degree()
        table = koszul_homology_table(m, k_max)
        results = {"homology": table, "totals": [sum(r.values()) for _, r in sorted(table.items())],
                   "euler_index": euler_index(m, k_max), "scanned_up_to": k_max}
    elif args.command == "verify":
        mg = minimize_generators(m.generators, ORTHOGONAL, kernel, m.relations)
        sub = minimize_generators(m.generators, SUBSET, kernel, m.relations)
        oracle = betti_counts(m)
        orth = verify_minimal_orthogonality(mg)
        res = minimal_resolution(m, args.max_degree, kernel, args.degree_bound)
        exact = check_exactness(res)
        minimal = check_minimality(res)
        checks = {
            "counts_match_oracle": mg.counts() == oracle and sub.counts() == oracle,
            "orthogonality": orth.ok,
            "resolution_minimal": minimal.ok,
            "resolution_exact": exact.ok,
        }
        if res.certified_complete:
            kb = koszul_betti_check(m, res)
            checks["koszul_matches_resolution"] = kb.ok
            checks["index_agrees"] = euler_index(m, res.truncation_degree) == fredholm_index(res)
        results = {"betti": oracle, "checks": checks, "ok": all(checks.values())}
        if orth.violation:
            results["orthogonality_violation"] = orth.violation
        cert = _certification(res)
        if not results["ok"]:
            status = EXIT_VERIFY_FAILED
        elif args.require_certified and not res.certified_complete:
            status = EXIT_UNCERTIFIED
    return results, cert, status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.problem == "-":
            text = sys.stdin.read()
        else:
            with open(args.problem, encoding="utf-8") as fh:
                text = fh.read()
        problem = load_problem(text)
        digest = problem.digest()
        start = time.perf_counter()
        results, cert, status = run(args, problem)
    except (OSError, ProblemError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    options = {k: v for k, v in vars(args).items() if k not in ("command", "problem", "format")}
    report = Report(args.command, options, digest, results, cert,
                    {"seconds": round(time.perf_counter() - start, 6)})
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return status


if __name__ == "__main__":
    sys.exit(main())
