"""Command-line interface: ``nal <command> ...``.

Exit codes: 0 success / holds / member, 1 fails / not a member,
2 usage, parse or input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import linalg
from ..freealgebra import MultiDegree, enumerate_monomials, monomial_str
from ..leibniz_nf import normal_form
from ..linearization import differential_substitution, full_multilinearize
from ..table_algebra import satisfies_identity, satisfies_variety
from ..tideal import TIdeal, default_threads
from ..varieties import get_variety, list_varieties
from .algebra_doc import DocumentError, load_algebra
from .parser import ParseError, parse_expression, parse_vector_expression

__all__ = ["build_parser", "main", "run"]


class UsageError(Exception):
    pass


def _read_axioms(path: str) -> list:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    polys = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            polys.append(parse_expression(line))
        except ParseError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from None
    if not polys:
        raise UsageError(f"{path}: no identities found")
    return polys


def _algebra(path: str):
    try:
        return load_algebra(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_eval(args, out) -> int:
    alg = _algebra(args.algebra)
    print(parse_vector_expression(args.expr, alg), file=out)
    return 0


def cmd_check(args, out) -> int:
    alg = _algebra(args.algebra)
    if args.variety:
        verdict = satisfies_variety(alg, args.variety)
    else:
        verdict = satisfies_identity(alg, parse_expression(args.identity), args.identity)
    if verdict.holds:
        print("holds", file=out)
        return 0
    print("fails", file=out)
    print(f"witness: {verdict.witness}", file=out)
    return 1


def cmd_member(args, out) -> int:
    target = parse_expression(args.target)
    gens = get_variety(args.variety).polys if args.variety else _read_axioms(args.axioms)
    if not target:
        print("member (target is zero)", file=out)
        return 0
    ideal = TIdeal(gens, method=args.method)
    verdict = ideal.check(target)
    print(verdict.summary(), file=out)
    return 0 if verdict.member else 1


def cmd_linearize(args, out) -> int:
    p = parse_expression(args.expr)
    if args.delta:
        if args.to is None:
            raise UsageError("--delta needs --to")
        print(differential_substitution(p, args.delta, parse_expression(args.to)), file=out)
        return 0
    family = full_multilinearize(p)
    for md in sorted(family.components):
        ren = family.renamings[md]
        copies = ", ".join(f"{k}={src}#{i}" for k, (src, i) in sorted(ren.items()))
        print(f"{md}: {family.components[md]}", file=out)
        print(f"  copies: {copies}", file=out)
    return 0


def cmd_nf(args, out) -> int:
    print(normal_form(parse_expression(args.expr)), file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    try:
        md = MultiDegree.parse(args.multidegree)
    except ValueError as exc:
        raise UsageError(f"--multidegree: {exc}") from None
    monos = enumerate_monomials(md)
    if args.count:
        print(len(monos), file=out)
    else:
        for m in monos:
            print(monomial_str(m), file=out)
    return 0


def cmd_verify(args, out) -> int:
    from ..verify import run_all

    report = run_all(args.max_degree_unary, args.max_degree_binary, args.eq13_degree, args.threads)
    out.write(report.to_json(args.timings) if args.json else report.to_text(args.timings))
    return 0 if report.ok else 1


def cmd_varieties(args, out) -> int:
    for name in list_varieties():
        spec = get_variety(name)
        print(f"{name}: {spec.display}", file=out)
        for (label, poly), note in zip(spec.identities, spec.provenance):
            suffix = f"  [{note}]" if note != "primary" else ""
            print(f"  {label}: {poly}{suffix}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nal", description="Identity checking for nonassociative algebras.")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads for elimination (default: NAL_THREADS or 1)")
    p.add_argument("--backend", choices=("compiled", "python"), default=None,
                   help="elimination kernel (default: compiled when available)")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("eval", help="evaluate an expression in an algebra")
    s.add_argument("--algebra", required=True, help="*.alg file or builtin name (A, B, AplusB, C, D)")
    s.add_argument("--expr", required=True)
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("check", help="test an identity or a variety on an algebra")
    s.add_argument("--algebra", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity")
    g.add_argument("--variety")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("member", help="T-ideal membership")
    s.add_argument("--target", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--variety")
    g.add_argument("--axioms", help="file with one identity per line ('#' comments)")
    s.add_argument("--method", choices=("modular", "exact"), default="modular")
    s.set_defaults(fn=cmd_member)

    s = sub.add_parser("linearize", help="full multilinearization, or one substitution with --delta")
    s.add_argument("--expr", required=True)
    s.add_argument("--delta", metavar="VAR", help="variable whose occurrences are replaced one at a time")
    s.add_argument("--to", metavar="EXPR", help="replacement for --delta")
    s.set_defaults(fn=cmd_linearize)

    s = sub.add_parser("nf", help="left-Leibniz normal form")
    s.add_argument("--expr", required=True)
    s.set_defaults(fn=cmd_nf)

    s = sub.add_parser("enumerate", help="list the monomials of a multidegree")
    s.add_argument("--multidegree", required=True, help="e.g. x=2,y=1")
    s.add_argument("--count", action="store_true", help="print only the number of monomials")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("verify-paper", help="run the full verification suite")
    s.add_argument("--max-degree-unary", type=int, default=8)
    s.add_argument("--max-degree-binary", type=int, default=7)
    s.add_argument("--eq13-degree", type=int, default=6,
                   help="total degree bound for the (D(u)+uy)v = 2(uy)v sweep")
    s.add_argument("--json", action="store_true")
    s.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("varieties", help="list the registered varieties")
    s.set_defaults(fn=cmd_varieties)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is None:
        args.threads = default_threads()
    elif args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    if args.backend:
        try:
            linalg.set_backend(args.backend)
        except (ValueError, RuntimeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.fn(args, out)
    except (ParseError, DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
