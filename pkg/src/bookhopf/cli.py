"""Command-line front end: verify Hopf axioms, classify modular pairs.

Three subcommands share a small option surface:

    bookhopf verify   --p P (--s S | --all-s) [--permissive] [--seed N]
                      [--sample-size N] [--exhaustive] [--format text|json]
    bookhopf classify --p P (--s S | --all-s) [--permissive] [--format text|json]
    bookhopf table    --p P [--format text|json]

Exit codes: 0 = all checks pass / classification consistent, 1 = an axiom
violation or a brute-force/closed-form disagreement, 2 = usage error.  The
text and JSON renderings of a run carry the same data.
"""

import argparse
import json
import sys

from .axioms import DEFAULT_SAMPLE_SIZE, DEFAULT_SEED, negative_control_matches, run_all
from .hopf import BookAlgebra, is_odd_prime
from .mpi import ConsistencyError, classify


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="bookhopf",
        description="Exact verifier and modular-pair classifier for the Hopf algebras H(p, s).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_s, with_sampling):
        sp.add_argument("--p", type=int, required=True, help="odd prime p")
        if with_s:
            group = sp.add_mutually_exclusive_group(required=True)
            group.add_argument("--s", type=int, help="twist parameter s, 0 <= s < p")
            group.add_argument(
                "--all-s", action="store_true", help="run every s in 1..p-1"
            )
            sp.add_argument(
                "--permissive",
                action="store_true",
                help="allow s = 0 (H(p, 0) is kept as a negative control)",
            )
        if with_sampling:
            sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
            sp.add_argument(
                "--sample-size",
                type=int,
                default=DEFAULT_SAMPLE_SIZE,
                help="draws per sampled check (domains at most this size run exhaustively)",
            )
            sp.add_argument(
                "--exhaustive",
                action="store_true",
                help="force exhaustive checks regardless of domain size",
            )
        sp.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    add_common(sub.add_parser("verify", help="run the Hopf-axiom suite"), True, True)
    add_common(sub.add_parser("classify", help="classify modular pairs in involution"), True, False)
    add_common(sub.add_parser("table", help="summary of the classification across s"), False, False)
    return parser


def _check_p(p):
    if not is_odd_prime(p):
        raise ValueError(f"p must be prime and odd; got {p}")


def _s_values(args):
    if args.all_s:
        return list(range(1, args.p))
    return [args.s]


# -- verify ---------------------------------------------------------------------


def _verify_one(args, s):
    algebra = BookAlgebra(args.p, s, permissive=args.permissive)
    report = run_all(
        algebra,
        seed=args.seed,
        sample_size=args.sample_size,
        exhaustive=args.exhaustive,
    )
    run = {
        "s": s,
        "permissive": args.permissive,
        "axioms": report.to_payload(),
    }
    if s == 0:
        run["negative_control_matches"] = negative_control_matches(report, args.p)
        run["passed"] = run["negative_control_matches"]
    else:
        run["passed"] = report.passed
    return run


def _render_verify_text(payload, out):
    for run in payload["runs"]:
        print(f"verify H({payload['p']}, {run['s']})", file=out)
        for r in run["axioms"]:
            print(
                f"  {r['axiom']:<16} {r['status']:<4} checked={r['checked']}"
                f" mode={r['mode']} elapsed={r['elapsed_ms']}ms",
                file=out,
            )
            for v in r["violations"]:
                print(f"    violated at {v['at']}: lhs={v['lhs']} rhs={v['rhs']}", file=out)
        if "negative_control_matches" in run:
            verdict = "yes" if run["negative_control_matches"] else "NO"
            print(f"  negative control matches the predicted failure: {verdict}", file=out)
        print(f"  passed: {'yes' if run['passed'] else 'NO'}", file=out)
    print(f"overall: {'pass' if payload['passed'] else 'FAIL'}", file=out)


def cmd_verify(args, out):
    _check_p(args.p)
    runs = [_verify_one(args, s) for s in _s_values(args)]
    payload = {
        "command": "verify",
        "p": args.p,
        "runs": runs,
        "passed": all(run["passed"] for run in runs),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        _render_verify_text(payload, out)
    return 0 if payload["passed"] else 1


# -- classify ---------------------------------------------------------------------


def _render_classify_text(payload, out):
    for run in payload["runs"]:
        p, s = payload["p"], run["s"]
        print(f"classify H({p}, {s})", file=out)
        for row in run["pairs"]:
            flags = []
            if row["implements_s2"]:
                flags.append("implements S^2")
            if row["stable"]:
                flags.append("stable")
            tag = ", ".join(flags) if flags else "-"
            print(
                f"  (i={row['i']}, j={row['j']}) beta(l)={row['beta_l']} {tag}",
                file=out,
            )
        mpi = ", ".join(f"(i={d['i']}, j={d['j']})" for d in run["mpi"]) or "none"
        imp = ", ".join(f"(i={d['i']}, j={d['j']})" for d in run["implements"]) or "none"
        print(f"  MPI: {mpi}", file=out)
        print(f"  implements S^2: {imp}", file=out)


def cmd_classify(args, out):
    _check_p(args.p)
    runs = []
    for s in _s_values(args):
        algebra = BookAlgebra(args.p, s, permissive=args.permissive)
        runs.append(classify(algebra).to_dict())
    payload = {"command": "classify", "p": args.p, "runs": runs}
    if args.format == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        _render_classify_text(payload, out)
    return 0


# -- table ---------------------------------------------------------------------


def cmd_table(args, out):
    _check_p(args.p)
    rows = []
    for s in range(1, args.p):
        result = classify(BookAlgebra(args.p, s))
        beta_l = {
            f"(i={r.i}, j={r.j})": r.stability_value.render()
            for r in result.pairs
            if r.implements_s2
        }
        rows.append(
            {
                "s": s,
                "has_mpi": bool(result.mpi),
                "mpi": [{"i": i, "j": j} for (i, j) in result.mpi],
                "implements": [{"i": i, "j": j} for (i, j) in result.implements],
                "beta_l": beta_l,
            }
        )
    payload = {"command": "table", "p": args.p, "rows": rows}
    if args.format == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(f"modular pairs in involution for H({args.p}, s)", file=out)
        for row in rows:
            parts = []
            for d in row["implements"]:
                key = f"(i={d['i']}, j={d['j']})"
                parts.append(f"{key} beta(l)={row['beta_l'][key]}")
            flag = "yes" if row["has_mpi"] else "no "
            print(f"  s={row['s']}: MPI {flag} implements {', '.join(parts)}", file=out)
    return 0


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = _build_parser().parse_args(argv)
    handlers = {"verify": cmd_verify, "classify": cmd_classify, "table": cmd_table}
    try:
        return handlers[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
