"""Command line front end.

Reports are plain text, one fact per line.  Exit codes: 0 everything
passed (or EQUIVALENT), 1 some check failed (or NOT EQUIVALENT), 2 usage
or parse error, 3 a budget ran out before the check was conclusive.
"""
from __future__ import annotations

import argparse
import sys

from .axioms import DEFAULT_SAMPLES, Verdict, check_all, check_lemmas
from .enumeration import DEFAULT_BUDGET, MAX_SIZE, SearchSpec, enumerate_toags, independence_report
from .errors import ToagError
from .extension import check_p_laws, verify_embedding
from .presburger import DEFAULT_NMAX, elementarily_equivalent, is_presburger_toag, type_signature
from .structure import dump_table, parse_structure
from .valuation import ResidueRing, check_valuation_laws, value_toag

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _exit_code(verdicts):
    verdicts = list(verdicts)
    if any(v is Verdict.FAIL for v in verdicts):
        return EXIT_FAIL
    if any(v is Verdict.EXHAUSTED for v in verdicts):
        return EXIT_BUDGET
    return EXIT_OK


def _structure(text):
    try:
        return parse_structure(text)
    except (ValueError, ToagError) as exc:
        raise _UsageError(str(exc)) from None


def _ids(text):
    if text is None:
        return frozenset()
    if text.strip() == "all":
        return frozenset(range(1, 17))
    out = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, dash, hi = part.partition("-")
        try:
            if dash:
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(part))
        except ValueError:
            raise _UsageError(f"bad axiom id list {text!r}") from None
    return frozenset(out)


def cmd_check(args, out):
    T = _structure(args.structure)
    print(f"STRUCTURE {args.structure} seed={args.seed}", file=out)
    reports = (check_all(T, budget=args.budget, samples=args.samples, seed=args.seed)
               + check_lemmas(T, budget=args.budget, samples=args.samples, seed=args.seed))
    for r in reports:
        print(r.render(T), file=out)
    return _exit_code(r.verdict for r in reports)


def cmd_embed(args, out):
    T = _structure(args.structure)
    print(f"STRUCTURE {args.structure} kmax={args.kmax} seed={args.seed}", file=out)
    emb = verify_embedding(T, budget=args.budget, samples=args.samples, seed=args.seed)
    print(emb.render(T), file=out)
    laws = check_p_laws(T, kmax=args.kmax, samples=args.samples, seed=args.seed)
    print(laws.render(), file=out)
    return _exit_code([emb.verdict] + [r.verdict for r in laws.laws])


def cmd_classify(args, out):
    T = _structure(args.structure)
    print(f"STRUCTURE {args.structure} nmax={args.nmax} seed={args.seed}", file=out)
    check = is_presburger_toag(T, n_max=args.nmax, seed=args.seed)
    print(check.render(T), file=out)
    if not check.passed:
        return EXIT_FAIL
    sig = type_signature(T, n_max=args.nmax, seed=args.seed)
    print(f"SIGNATURE {sig.render()}", file=out)
    return EXIT_OK


def cmd_compare(args, out):
    T1, T2 = _structure(args.left), _structure(args.right)
    print(f"COMPARE {args.left} {args.right} nmax={args.nmax}", file=out)
    for spec, T in ((args.left, T1), (args.right, T2)):
        check = is_presburger_toag(T, n_max=args.nmax)
        if not check.passed:
            print(f"PRECONDITION FAIL {spec} is not a Presburger TOAG ({check.reason})",
                  file=out)
            return EXIT_FAIL
    verdict = elementarily_equivalent(T1, T2, n_max=args.nmax)
    print(f"SIGNATURE {args.left} {verdict.left.render()}", file=out)
    print(f"SIGNATURE {args.right} {verdict.right.render()}", file=out)
    print(verdict.render(), file=out)
    return EXIT_OK if verdict.equivalent else EXIT_FAIL


def cmd_enumerate(args, out):
    require = _ids(args.require) if args.require is not None else frozenset(range(1, 17))
    try:
        spec = SearchSpec(args.size, require, _ids(args.negate), args.budget)
    except ToagError as exc:
        raise _UsageError(str(exc)) from None
    result = enumerate_toags(spec)
    st = result.stats
    for i, T in enumerate(result.tables):
        if i:
            print(file=out)
        out.write(dump_table(T, comment=f"model {i + 1} of {len(result.tables)}"))
    print(f"# tables={len(result.tables)} nodes={st.nodes} leaves={st.leaves} "
          f"exhausted={'true' if st.exhausted else 'false'}", file=out)
    return EXIT_BUDGET if st.exhausted else EXIT_OK


def cmd_independence(args, out):
    try:
        report = independence_report(args.size_max, args.budget)
    except ToagError as exc:
        raise _UsageError(str(exc)) from None
    exhausted = False
    for entry in report.values():
        print(entry.render(), file=out)
        for n, T in entry.witnesses[:1]:
            out.write(dump_table(T, comment=f"fails axiom {entry.axiom}, N={n}"))
        exhausted |= entry.exhausted
    return EXIT_BUDGET if exhausted else EXIT_OK


def cmd_valuation(args, out):
    try:
        R = ResidueRing(args.p, args.k)
    except ToagError as exc:
        raise _UsageError(str(exc)) from None
    reports = check_valuation_laws(R)
    for r in reports:
        print(r.render(), file=out)
    T = value_toag(R)
    axioms = check_all(T) + check_lemmas(T)
    for r in axioms:
        print(r.render(T), file=out)
    return _exit_code([r.verdict for r in reports] + [r.verdict for r in axioms])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toag", description="Truncated ordered abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    spec_help = ("Z:tau=<int>, Q:tau=<rat>, ZZ:tau=(a,b), QZ:tau=(q,b), "
                 "or a path to a TOAG1 file")

    def sampling(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("check", help="axiom suite and lemma report")
    p.add_argument("structure", help=spec_help)
    sampling(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("embed", help="embedding into P and the laws of P")
    p.add_argument("structure", help=spec_help)
    p.add_argument("--kmax", type=int, default=3)
    sampling(p)
    p.set_defaults(func=cmd_embed, samples=20_000)

    p = sub.add_parser("classify", help="Presburger test and type signature")
    p.add_argument("structure", help=spec_help)
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compare", help="elementary equivalence of two Presburger TOAGs")
    p.add_argument("left", help=spec_help)
    p.add_argument("right", help=spec_help)
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("enumerate", help="finite TOAG tables by axiom profile")
    p.add_argument("--size", type=int, required=True, help=f"N in 1..{MAX_SIZE}")
    p.add_argument("--require", default=None, help="'all' or ids, e.g. 1-9,11")
    p.add_argument("--negate", default=None, help="ids to violate")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("independence", help="search for models separating axioms 10-16")
    p.add_argument("--size-max", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("valuation", help="truncated valuation on Z/p^k")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_valuation)
    return parser


def run(argv, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))
