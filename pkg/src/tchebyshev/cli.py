"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
3 domain error (e.g. no cd-index), 4 precondition error (e.g. rank 0).
The default seed for ``verify`` and ``gen`` is read from TCHEB_SEED.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import abpoly as ab
from . import poset as po
from . import qsym as qs
from . import spectral, transforms as tr, verify
from .errors import (
    BadParameter,
    DomainError,
    PolyParseError,
    PosetFormatError,
    PreconditionError,
    UnknownCheck,
)

SEED_ENV = "TCHEB_SEED"


class _Usage(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "").strip()
    if not raw:
        return verify.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise _Usage(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _load_poset(path: str) -> po.Poset:
    return po.parse_poset(_read(path))


def cmd_index(args) -> int:
    P = _load_poset(args.file)
    if args.basis == "qsym":
        print(qs.F(P))
    elif args.basis == "bqsym":
        print(qs.F_B(P))
    else:
        u = ab.ab_index(P)
        print(ab.to_cd(u) if args.basis == "cd" else u)
    return 0


def cmd_transform(args) -> int:
    if (args.file is None) == (args.poly is None):
        raise _Usage("give exactly one of FILE or --poly")
    level = args.level or ("poset" if args.file else "poly")
    if level == "poset":
        if args.file is None:
            raise _Usage("--level poset needs a poset FILE")
        if args.kind != "first":
            raise BadParameter("only the first-kind transform acts on posets")
        sys.stdout.write(po.emit_poset(po.tchebyshev_poset(_load_poset(args.file))))
        return 0
    if args.poly is not None:
        u = ab.parse_poly(args.poly)
        if isinstance(u, ab.CdPoly):
            u = ab.cd_to_ab(u)
    else:
        u = ab.ab_index(_load_poset(args.file))
    print(tr.tcheb_T(u) if args.kind == "first" else tr.tcheb_U(u))
    return 0


def cmd_verify(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    reports = verify.run_check(args.check, max_rank=args.max_rank, seed=seed, degree=args.degree)
    failed = [r for r in reports if not r.ok]
    if args.json:
        print(json.dumps([r.as_dict() for r in reports], indent=1))
    else:
        for r in reports:
            line = f"{r.status.upper():4} {r.check:22} {r.instance} ({r.ms:.1f} ms)"
            print(line if r.ok else f"{line}\n     witness: {r.witness}")
        print(f"{len(reports) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


def cmd_gen(args) -> int:
    n = args.n
    if args.family == "boolean":
        if n < 0:
            raise BadParameter("boolean needs n >= 0")
        P = po.boolean_algebra(n)
    elif args.family == "chain":
        if n < 0:
            raise BadParameter("chain needs n >= 0")
        P = po.chain(n)
    elif args.family == "ladder":
        if n < 0:
            raise BadParameter("ladder needs n >= 0")
        P = po.ladder(n)
    elif args.family == "crosspolytope":
        if n < 1:
            raise BadParameter("crosspolytope needs n >= 1")
        P = po.crosspolytope(n)
    else:
        if n < 1 or args.width < 1:
            raise BadParameter("random needs n >= 1 and width >= 1")
        seed = _default_seed() if args.seed is None else args.seed
        P = po.random_graded_poset(n, args.width, seed)
    sys.stdout.write(po.emit_poset(P))
    return 0


def cmd_spectrum(args) -> int:
    n = args.degree
    if n < 0 or n > args.max_degree:
        raise BadParameter(f"degree must lie in 0..{args.max_degree}")
    if args.matrix:
        for row in spectral.u_matrix(n):
            print(" ".join(map(str, row)))
        return 0
    rep = spectral.verify_spectrum(n, max_degree=args.max_degree)
    if args.json:
        out = rep.as_dict()
        out["eigenvectors"] = [
            {"eigenvalue": v.eigenvalue, "construction": list(v.construction), "vector": str(v.vector)}
            for v in spectral.eigenbasis(n)
        ]
        print(json.dumps(out, indent=1))
    else:
        for lam, mult in sorted(rep.multiplicities.items()):
            print(f"{lam}:{mult}")
        if args.vectors:
            for v in spectral.eigenbasis(n):
                print(f"{v.eigenvalue} {'.'.join(v.construction) or '1'} {v.vector}")
        if not rep.ok:
            for f in rep.failures:
                print(f"FAIL {f}", file=sys.stderr)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tcheb", description="Tchebyshev transforms of posets and ab-polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("index", help="ab-index, cd-index, F or F_B of a poset file")
    s.add_argument("file")
    s.add_argument("--basis", choices=("ab", "cd", "qsym", "bqsym"), default="ab")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("transform", help="Tchebyshev transform of a poset or polynomial")
    s.add_argument("file", nargs="?")
    s.add_argument("--poly", help="polynomial text such as '1*ab + 2*ba' or '1*cc + 1*d'")
    s.add_argument("--kind", choices=("first", "second"), default="first")
    s.add_argument("--level", choices=("poset", "poly"))
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("verify", help="run a named verification suite")
    s.add_argument("--check", default="all", help=", ".join([*verify.CHECKS, "all"]))
    s.add_argument("--max-rank", type=int, default=verify.DEFAULT_MAX_RANK)
    s.add_argument("--degree", type=int, default=verify.DEFAULT_DEGREE)
    s.add_argument("--seed", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="emit a poset from a standard family")
    s.add_argument("--family", choices=("boolean", "ladder", "chain", "crosspolytope", "random"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--width", type=int, default=3)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("spectrum", help="eigenvalues of U on degree N")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--max-degree", type=int, default=8)
    s.add_argument("--json", action="store_true")
    s.add_argument("--vectors", action="store_true")
    s.add_argument("--matrix", action="store_true", help="dump the matrix of U instead")
    s.set_defaults(func=cmd_spectrum)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_Usage, PosetFormatError, PolyParseError, UnknownCheck) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
