"""Command-line interface.

Exit codes: 0 success, 1 the pair is not a condition-K pair, 2 bad input,
3 a theorem violation (certificate on stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .cycle_matroid import truncated_cycle_matroid
from .errors import ConfigurationError, DomainError, Graph6Error, PreconditionError, TheoremViolation
from .graph6 import parse_graph6
from .matroid import to_json

EXIT_OK, EXIT_NOT_K, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3


def _graph(text):
    return parse_graph6(text)


def _apply_bijection(F, text):
    if text is None:
        return F
    try:
        labels = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"--bijection must be comma-separated integers, got {text!r}") from None
    if len(labels) != F.m or len(set(labels)) != F.m:
        raise DomainError(f"--bijection needs {F.m} distinct labels")
    return F.relabeled(dict(zip(F.labels, labels)))


def _emit(args, payload, text=None):
    text = text if text is not None else json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def cmd_truncate(args):
    G = _graph(args.graph)
    _emit(args, None, to_json(truncated_cycle_matroid(G)))
    return EXIT_OK


def cmd_compare(args):
    from .pairs import check_condition_K

    G = _graph(args.first)
    F = _apply_bijection(_graph(args.second), args.bijection)
    report = check_condition_K(G, F)
    _emit(args, report.to_dict())
    return EXIT_OK if report.satisfied else EXIT_NOT_K


def cmd_classify(args):
    from .harness import realize_pairs
    from .pairs import check_condition_K, classify_pair

    G = _graph(args.first)
    F = _apply_bijection(_graph(args.second), args.bijection)
    if args.bijection is None and not check_condition_K(G, F).satisfied_except_b0:
        found = next(realize_pairs(G, F), None)
        if found is None:
            print("no edge bijection makes this a condition-K pair", file=sys.stderr)
            return EXIT_NOT_K
        F = found[0]
    try:
        cls = classify_pair(G, F)
    except PreconditionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOT_K
    _emit(args, {"first": G.to_dict(), "second": F.to_dict(), "classification": cls.to_dict()})
    return EXIT_OK


def cmd_search(args):
    from .harness import search_K_pairs

    report = search_K_pairs(args.n, jobs=args.jobs, bound=args.bound)
    report.scope["seed"] = args.seed
    _emit(args, None, report.to_json())
    if args.out:
        Path(args.out).with_suffix(".csv").write_text(report.to_csv())
    if report.claim_failures:
        print(json.dumps(report.claim_failures, indent=2), file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args):
    from . import harness

    if args.suite == "claims":
        report = harness.search_K_pairs(args.n, jobs=args.jobs, bound=args.bound)
        payload = {"suite": "claims", "scope": report.scope, "pairs": len(report.pairs_found),
                   "failures": report.claim_failures}
        ok = not report.claim_failures
    elif args.suite == "disconnected":
        check = harness.verify_disconnected_case(args.n, jobs=args.jobs, bound=args.bound)
        payload, ok = {"suite": "disconnected", **check.to_dict()}, check.passed
    else:
        verdicts = harness.verify_three_connected_uniqueness(args.m)
        flagged = [v for v in verdicts if not v.unique]
        # only K4 may fail, and only through an isomorphic partner
        ok = len(flagged) == 1 and flagged[0].graph.n == 4 and flagged[0].graph.m == 6 and flagged[0].partner_isomorphic
        payload = {"suite": "uniqueness", "m_max": args.m, "verdicts": [v.to_dict() for v in verdicts]}
    payload["passed"] = ok
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="recorded in reports; the searches are exhaustive")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for pair search")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="truncmatroid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("truncate", parents=[common], help="truncated cycle matroid of a graph6 graph as JSON")
    s.add_argument("graph")
    s.set_defaults(func=cmd_truncate)

    for name, func, help_ in (
        ("compare", cmd_compare, "condition-K report for two graphs"),
        ("classify", cmd_classify, "classify a condition-K pair"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("first")
        s.add_argument("second")
        s.add_argument("--bijection", help="labels for the second graph's edges, in graph6 edge order")
        s.set_defaults(func=func)

    s = sub.add_parser("search", parents=[common], help="exhaustive pair search")
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--bound", type=int, default=6)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=["claims", "uniqueness", "disconnected"], required=True)
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--m", type=int, default=9)
    s.add_argument("--bound", type=int, default=6)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"graph6 parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        print(json.dumps(exc.certificate, indent=2), file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
