"""Command-line workflows: construct, bound, families, search, verify.

Exit codes: 0 success, 1 verification/validation failure, 2 usage error,
3 retryable budget exhaustion, 4 certificate digest mismatch.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import bounds as bnd
from . import constructions as cons
from . import search as srch
from .design import (
    Design,
    DesignError,
    DigestMismatchError,
    NonincidenceCertificate,
    certificate_violations,
    is_subsystem,
    validate_design,
    verify_certificate,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DIGEST = 4

log = logging.getLogger("nonincidence")


def _default_cert_path(out: str) -> Path:
    p = Path(out)
    return p.with_name(p.stem + ".cert.json")


def _load_design(path: str) -> Design:
    return Design.from_json(Path(path).read_text())


def cmd_construct(args) -> int:
    v = args.order
    if v % 6 not in (1, 3) or v < 1:
        print(f"error: order {v} is inadmissible (need 1 or 3 mod 6)",
              file=sys.stderr)
        return EXIT_USAGE
    cert = None
    try:
        if args.double_from is not None:
            w = args.double_from
            if 2 * w + 1 != v:
                print(f"error: doubling STS({w}) gives order {2 * w + 1}, not {v}",
                      file=sys.stderr)
                return EXIT_USAGE
            sub = cons.build_sts(w, seed=args.seed)
            design, arc = cons.doubling(sub)
            _, interior = is_subsystem(design, range(w))
            cert = NonincidenceCertificate.build(
                design, arc, interior,
                meta={"construction": "doubling", "w": w, "arc": True},
            )
        elif args.sub is not None:
            emb = cons.embed_subsystem(
                args.sub, v, seed=args.seed, move_budget=args.budget
            )
            design = emb.design
            cert = cons.subsystem_complement_certificate(emb)
        else:
            design = cons.build_sts(v, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cons.BudgetExhausted as exc:
        print(f"error: {exc} (retry with another seed)", file=sys.stderr)
        return EXIT_BUDGET
    Path(args.out).write_text(design.to_json())
    log.info("wrote design order %d to %s", v, args.out)
    if cert is not None:
        cert_path = args.cert_out or _default_cert_path(args.out)
        Path(cert_path).write_text(cert.to_json())
        log.info("wrote certificate |Y|=%d |C|=%d to %s",
                 len(cert.Y), len(cert.C), cert_path)
    return EXIT_OK


def cmd_bound(args) -> int:
    try:
        s = bnd.nonincidence_upper_bound(args.order)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.curve:
        sys.stdout.write(bnd.intersection_curve_data(args.order).to_csv())
    else:
        print(s)
    return EXIT_OK


def cmd_families(args) -> int:
    if args.classify is not None:
        rec = bnd.classify_equality_order(args.classify)
        if rec is None:
            print("none")
        else:
            import json
            print(json.dumps(rec.to_json_obj(), sort_keys=True))
        return EXIT_OK
    import json
    for rec in bnd.enumerate_equality_orders(args.zmax):
        print(json.dumps(rec.to_json_obj(), sort_keys=True))
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        d = _load_design(args.design)
    except (OSError, DesignError, ValueError) as exc:
        print(f"error: cannot read design: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report_validity = validate_design(d)
    if not report_validity.ok:
        print("error: design file is not a valid STS:", file=sys.stderr)
        for problem in report_validity.problems():
            print(f"  - {problem}", file=sys.stderr)
        return EXIT_FAIL
    if args.greedy:
        rep = srch.greedy_max_nonincident(d, seed=args.seed)
    else:
        rep = srch.exact_max_nonincident(
            d, node_budget=args.budget, workers=args.threads
        )
    Path(args.out).write_text(rep.to_json())
    print(f"best_s={rep.best_s} exact={rep.exact} bound={rep.bound_used} "
          f"nodes={rep.nodes_visited}")
    if not args.greedy and not rep.exact:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        d = _load_design(args.design)
        cert = NonincidenceCertificate.from_json(Path(args.cert).read_text())
    except (OSError, DesignError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    try:
        ok = verify_certificate(d, cert, require_square=args.require_square)
    except DigestMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIGEST
    s = len(cert.Y)
    t = len(cert.C)
    ceiling = bnd.disjoint_block_bound(d.v, s) if s <= d.v else None
    fv = bnd.nonincidence_upper_bound(d.v) if d.v % 6 in (1, 3) else None
    if ok:
        print(f"OK: s={s} blocks={t} disjoint-block ceiling={ceiling} "
              f"square-bound={fv}")
        return EXIT_OK
    bad = certificate_violations(d, cert)
    if bad:
        p, i = bad[0]
        print(f"FAIL: point {p} lies on block {i} {d.blocks[i]} "
              f"({len(bad)} incidences total)")
    elif args.require_square and s != t:
        print(f"FAIL: claim is not square (|Y|={s}, |C|={t})")
    else:
        print("FAIL: empty certificate")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nonincidence",
        description="Construct, bound, search and verify nonincident "
                    "point/block sets in Steiner triple systems.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an STS and optional certificate")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--sub", type=int, help="embed a sub-STS of this order")
    c.add_argument("--double-from", type=int,
                   help="double an STS of this order (order must be 2w+1)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int, default=cons.DEFAULT_MOVE_BUDGET,
                   help="hill-climbing move budget")
    c.add_argument("--out", required=True)
    c.add_argument("--cert-out")
    c.set_defaults(func=cmd_construct)

    b = sub.add_parser("bound", help="print the square-nonincidence upper bound")
    b.add_argument("--order", type=int, required=True)
    b.add_argument("--curve", action="store_true",
                   help="emit the bound-vs-diagonal CSV instead")
    b.set_defaults(func=cmd_bound)

    f = sub.add_parser("families", help="orders where the bound is attained")
    g = f.add_mutually_exclusive_group(required=True)
    g.add_argument("--zmax", type=int)
    g.add_argument("--classify", type=int)
    f.set_defaults(func=cmd_families)

    s = sub.add_parser("search", help="search a design for nonincident sets")
    s.add_argument("--design", required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", action="store_true")
    s.add_argument("--budget", type=int, default=srch.DEFAULT_NODE_BUDGET)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_search)

    vf = sub.add_parser("verify", help="check a certificate against a design")
    vf.add_argument("--design", required=True)
    vf.add_argument("--cert", required=True)
    vf.add_argument("--require-square", action="store_true")
    vf.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    level = os.environ.get("NONINCIDENCE_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
