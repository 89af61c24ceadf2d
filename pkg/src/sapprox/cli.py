"""Command-line surface.

Exit codes: 0 success, 1 negative verification verdict (for example a
space that is not smc where the command requires one), 2 input error,
3 capacity error.  ``--porcelain`` switches every command to one
machine-readable record per line with a stable field order.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import (CapacityError, ContractViolationError, DocumentError,
                     DomainError, SApproxError, TheoremHypothesisError)
from .approx import s_lower, s_upper, verify_sm_properties
from .classify import census, partition_count
from .document import format_space, format_subset, parse_space
from .relation import count_smc_relations, is_minimizing, left_slice
from .sets import Mask
from .topology import build_topology, degree_profile, is_clopen_topology
from . import classify, selftest

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    return parse_space(text)


def _fmt_bool(value: Optional[bool]) -> str:
    if value is None:
        return "undetermined"
    return "true" if value else "false"


def _cmd_check(args) -> int:
    g = _load(args.file)
    verdicts = g.verdicts()
    porcelain = args.porcelain
    for a in g.w.subsets(include_empty=False):
        minimizing = is_minimizing(left_slice(g.s, a))
        name = format_subset(g.w, a)
        if porcelain:
            print("slice %s minimizing %s" % (name, _fmt_bool(minimizing)))
        else:
            print("slice %s: %s" % (name,
                                    "minimizing" if minimizing
                                    else "not minimizing"))
    for key in ("s_min", "complement_closed", "smc"):
        if porcelain:
            print("verdict %s %s" % (key, _fmt_bool(verdicts[key])))
        else:
            print("%s: %s" % (key, _fmt_bool(verdicts[key])))
    report = verify_sm_properties(g)
    for number in sorted(report.items):
        item = report.items[number]
        status = "pass" if item.passed else "fail"
        if porcelain:
            print("property %d %s checked %d skipped %d"
                  % (number, status, item.checked, item.skipped))
        else:
            line = ("property %d: %s (%d checked, %d skipped)"
                    % (number, status, item.checked, item.skipped))
            if item.violations:
                line += " e.g. " + item.violations[0]
            print(line)
    return EXIT_OK


def _cmd_approx(args) -> int:
    g = _load(args.file)
    labels = [part for part in args.set.split(",") if part]
    try:
        x = g.w.mask(labels)
    except KeyError as exc:
        raise DocumentError(str(exc.args[0]))
    lower = ",".join(g.u.labels_of(s_lower(g, x)))
    upper = ",".join(g.u.labels_of(s_upper(g, x)))
    if args.porcelain:
        print("lower [%s]" % lower)
        print("upper [%s]" % upper)
    else:
        print("lower: [%s]" % lower)
        print("upper: [%s]" % upper)
    return EXIT_OK


def _cmd_topology(args) -> int:
    g = _load(args.file)
    topo = build_topology(g)  # ContractViolationError when not smc
    for o in topo.opens:
        if args.porcelain:
            print("open %s" % format_subset(g.u, o))
        else:
            print("open: %s" % format_subset(g.u, o))
    axioms = topo.axioms_verified
    clopen = is_clopen_topology(topo)
    if args.porcelain:
        print("axioms %s" % _fmt_bool(axioms))
        print("clopen %s" % _fmt_bool(clopen))
    else:
        print("axioms: %s" % ("pass" if axioms else "fail"))
        print("clopen: %s" % ("pass" if clopen else "fail"))
    return EXIT_OK if axioms and clopen else EXIT_NEGATIVE


def _cmd_profile(args) -> int:
    g = _load(args.file)
    profile = degree_profile(g)  # ContractViolationError when not smc
    for i, label in enumerate(g.w.labels):
        if args.porcelain:
            print("degree %s %d" % (label, profile.degrees[i]))
        else:
            print("degree %s: %d" % (label, profile.degrees[i]))
    for value in sorted(profile.bucket_sizes):
        if args.porcelain:
            print("bucket %d %d" % (value, profile.bucket_sizes[value]))
        else:
            print("elements of degree %d: %d"
                  % (value, profile.bucket_sizes[value]))
    signature = ",".join(str(d) for d in profile.signature)
    if args.porcelain:
        print("signature [%s]" % signature)
    else:
        print("signature: [%s]" % signature)
    return EXIT_OK


def _cmd_homeo(args) -> int:
    g1 = _load(args.file1)
    g2 = _load(args.file2)
    verdict = classify.homeo_by_profile(g1, g2)
    if args.porcelain:
        print("homeomorphic %s" % _fmt_bool(verdict))
    else:
        print("homeomorphic (by degree signature): %s" % _fmt_bool(verdict))
    if args.oracle:
        witness = classify.homeo_bruteforce(build_topology(g1),
                                            build_topology(g2))
        if witness is None:
            print("witness none" if args.porcelain else "witness: none")
        else:
            pairs = ",".join("%s->%s" % (g1.u.label_of(i),
                                         g2.u.label_of(j))
                             for i, j in enumerate(witness.forward))
            if args.porcelain:
                print("witness %s" % pairs)
            else:
                print("witness: %s" % pairs)
        if verdict != (witness is not None):
            print("oracle disagreement", file=sys.stderr)
            return EXIT_NEGATIVE
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _cmd_count_classes(args) -> int:
    print(partition_count(args.m, args.n))
    return EXIT_OK


def _cmd_count_s(args) -> int:
    print(count_smc_relations(args.n))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    first = True
    for partition in classify.enumerate_partitions(args.m, args.n):
        if not first:
            print("---")
        first = False
        g = classify.canonical_space(partition, args.m, args.n)
        sys.stdout.write(format_space(g))
    return EXIT_OK


def _cmd_census(args) -> int:
    report = census(args.m, args.n, sample=args.sample, seed=args.seed)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.agreement else EXIT_NEGATIVE


def _cmd_selftest(args) -> int:
    ok = selftest.run_all(emit=print)
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sapprox",
        description="Finite-universe engine for subset-relation "
                    "approximation spaces and their clopen topologies.")
    parser.add_argument("--porcelain", action="store_true",
                        help="machine-readable one-record-per-line output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classification verdicts and the "
                                     "nine-item property report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("approx", help="lower/upper approximation of a subset")
    p.add_argument("file")
    p.add_argument("--set", required=True,
                   help="comma-separated W labels (empty string for the "
                        "empty set)")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("topology", help="induced open sets and axiom checks")
    p.add_argument("file")
    p.set_defaults(func=_cmd_topology)

    p = sub.add_parser("profile", help="element degrees and signature")
    p.add_argument("file")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("homeo", help="homeomorphism verdict for two spaces")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--oracle", action="store_true",
                   help="also run the factorial-time bijection search")
    p.set_defaults(func=_cmd_homeo)

    p = sub.add_parser("count-classes", help="number of homeomorphism "
                                             "classes p(M, N)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_count_classes)

    p = sub.add_parser("count-s", help="number of admissible relations "
                                       "N^(2^N - 1)")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_count_s)

    p = sub.add_parser("enumerate", help="canonical space document per "
                                         "partition of M into <= N parts")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("census", help="class census against p(M, N)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--sample", type=int, default=None,
                   help="sample size for parameters above the exhaustive "
                        "tier")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print("capacity error: %s" % exc, file=sys.stderr)
        return EXIT_CAPACITY
    except (DocumentError, TheoremHypothesisError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ContractViolationError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return EXIT_NEGATIVE
    except DomainError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except SApproxError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
