"""Command-line front end.

Exit codes: 0 success or VERIFIED, 1 REFUTED or FAIL, 2 usage error,
3 INCONCLUSIVE, UNSUPPORTED or an exceeded computational cap.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Optional

from . import __version__
from .acceptance import DEFAULT_SEED, compare_star_with_fusion, run_all
from .alcove import AlcoveError, make_alcove
from .charring import set_cache_dir, weight_multiplicities, weyl_dimension
from .comb import CombError, nc_schur_A, nc_schur_C, omega_to_eps, eps_to_omega, sl_reduce
from .fusion import (DEFAULT_TABLE_CAP, AlcoveDomainError, basis, fuse, iter_fusion_table,
                     table_records, tsv_lines)
from .ideals import (DEFAULT_COLUMN_CAP, PresetError, Status, canonical_generators, default_bound,
                     default_preset, g2_recursion_check, image_zero_check, minimal_excluded,
                     preset_generators, presentations_equivalent)
from .rootsys import RootSystemError, build_root_system, parse_weight

log = logging.getLogger("fusionring")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3
_STATUS_EXIT = {Status.VERIFIED: EXIT_OK, Status.REFUTED: EXIT_FAIL,
                Status.INCONCLUSIVE: EXIT_UNDECIDED, Status.UNSUPPORTED: EXIT_UNDECIDED}


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


# -- argument parsing -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_", help="root system type: A, B, C, D or G2")
    common.add_argument("--rank", type=int, help="rank; for type A the matrix size N of gl_N / sl_N")
    common.add_argument("--ell", type=int, help="order of the root of unity")
    common.add_argument("--sl", action="store_true", help="type A: work with sl_N instead of gl_N")
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--out", help="write the output to this file instead of stdout")
    common.add_argument("--cache-dir", help="directory for the weight-multiplicity cache")
    common.add_argument("--bound", type=int, help="multiplier degree bound for ideal membership")
    common.add_argument("--cap", type=int, help="size cap (table entries or lattice columns)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    common.add_argument("--quick", action="store_true", help="selftest: run the reduced suite")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="fusionring", description="Fusion rings of quantum groups at roots of unity.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("alcove", parents=[common], help="level, wall data and basis of the alcove")
    s = sub.add_parser("mult", parents=[common], help="weight multiplicities of an irreducible module")
    s.add_argument("weight")
    for name, helptext in (("product", "fusion product [LAMBDA] * [MU]"),
                           ("nc-product", "combinatorial product LAMBDA * MU (types A and C)")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("lam", metavar="LAMBDA")
        s.add_argument("mu", metavar="MU")
    sub.add_parser("table", parents=[common], help="all structure constants")
    s = sub.add_parser("compare", parents=[common], help="compare the combinatorial ring with the fusion ring")
    s.add_argument("--against", choices=("fusion",), default="fusion")
    sub.add_parser("ideal-min", parents=[common], help="minimal weights outside the alcove")
    for name in ("ideal-gens", "ideal-verify"):
        s = sub.add_parser(name, parents=[common], help="preset generators" if name == "ideal-gens"
                           else "verify a preset presentation of the fusion ideal")
        s.add_argument("--preset", help="preset label (default: the one matching the regime)")
    sub.add_parser("g2-check", parents=[common], help="check the G2 product recursions")
    sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    return p


def _system(args, for_ideals: bool = False):
    if not args.type_:
        raise UsageError("--type", "required")
    t = args.type_.upper()
    if t == "G2":
        rank = 2
    elif args.rank is None:
        raise UsageError("--rank", f"required for type {t}")
    else:
        rank = args.rank
    try:
        if t == "A":
            if args.sl or for_ideals:
                if rank < 2:
                    raise UsageError("--rank", "sl_N needs N >= 2")
                return build_root_system("A", rank - 1)
            return build_root_system("gl", rank)
        return build_root_system(t, rank)
    except RootSystemError as exc:
        raise UsageError("--type/--rank", str(exc)) from None


def _alcove(args, for_ideals: bool = False):
    R = _system(args, for_ideals)
    if args.ell is None:
        raise UsageError("--ell", "required")
    try:
        return make_alcove(R, args.ell)
    except AlcoveError as exc:
        raise UsageError("--ell", str(exc)) from None


def _weight(R, text: str, flag: str):
    try:
        return parse_weight(R, text)
    except (RootSystemError, ValueError) as exc:
        raise UsageError(flag, str(exc)) from None


# -- output -------------------------------------------------------------------------------

def _config(args, alcove=None) -> dict:
    cfg = {"command": args.command, "seed": args.seed}
    if alcove is not None:
        cfg.update({"type": alcove.system.type, "rank": alcove.system.rank, "name": alcove.system.name,
                    "ell": alcove.ell, "sl": bool(args.sl)})
    return cfg


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


@contextmanager
def _sink(args) -> Iterator:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            yield fh
    else:
        yield sys.stdout


def _emit(args, payload: dict, text: str) -> None:
    with _sink(args) as fh:
        fh.write(dumps(payload) if args.format == "json" else text.rstrip("\n") + "\n")


def _fmt(w) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def _terms_text(terms) -> str:
    if not terms:
        return "0"
    return " + ".join(f"{c}*[{_fmt(w)}]" if c != 1 else f"[{_fmt(w)}]" for w, c in sorted(terms))


# -- commands ---------------------------------------------------------------------------------

def cmd_alcove(args) -> int:
    a = _alcove(args)
    B = basis(a)
    payload = {"config": _config(args, a), "k": a.level, "regime": a.regime, "theta": list(a.theta),
               "theta_coroot": list(a.theta_coroot), "wall": a.wall, "size": len(B),
               "transversal": a.system.type == "gl", "basis": [list(w) for w in B]}
    text = [f"{a}", f"theta = {_fmt(a.theta)}, theta coroot = {_fmt(a.theta_coroot)}, L = {a.wall}",
            f"{len(B)} basis weights" + (" (l_n = 0 transversal)" if payload["transversal"] else "")]
    text += ["  " + _fmt(w) for w in B]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_mult(args) -> int:
    R = _system(args)
    lam = _weight(R, args.weight, "WEIGHT")
    if not R.is_dominant(lam):
        raise UsageError("WEIGHT", f"{lam} is not dominant")
    ws = weight_multiplicities(R, lam)
    dom = sorted(ws.dominant.items())
    payload = {"config": _config(args) | {"type": R.type, "rank": R.rank}, "lambda": list(lam),
               "dimension": weyl_dimension(R, lam), "total": ws.total(),
               "dominant": [{"weight": list(w), "mult": m} for w, m in dom]}
    if args.format == "tsv":
        with _sink(args) as fh:
            for w, m in sorted(ws.items()):
                fh.write(f"{','.join(map(str, w))}\t{m}\n")
        return EXIT_OK
    text = [f"L{_fmt(lam)} of {R.name}: dimension {payload['dimension']}"]
    text += [f"  {_fmt(w)}  x{m}  (orbit size {len(R.orbit(w))})" for w, m in dom]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def _product_payload(args, a, lam, mu, terms) -> dict:
    return {"config": _config(args, a), "lambda": list(lam), "mu": list(mu),
            "terms": [{"nu": list(w), "coeff": c} for w, c in sorted(terms)]}


def cmd_product(args) -> int:
    a = _alcove(args)
    lam, mu = _weight(a.system, args.lam, "LAMBDA"), _weight(a.system, args.mu, "MU")
    try:
        prod = fuse(lam, mu, a)
    except AlcoveDomainError as exc:
        raise UsageError("LAMBDA/MU", str(exc)) from None
    _emit(args, _product_payload(args, a, lam, mu, prod.items()),
          f"[{_fmt(lam)}] * [{_fmt(mu)}] = {_terms_text(prod.items())}")
    return EXIT_OK


def _nc(a, lam, mu):
    t = a.system.type
    if t == "C":
        return nc_schur_C(lam, mu, a).items()
    if t == "gl":
        return nc_schur_A(lam, mu, a).items()
    if t == "A":
        n = a.system.rank + 1
        ga = make_alcove(build_root_system("gl", n), a.ell)
        v = sl_reduce(nc_schur_A(omega_to_eps(lam), omega_to_eps(mu), ga))
        return [(eps_to_omega(w), c) for w, c in v.items()]
    raise CombError(f"no combinatorial model for {a.system.name}")


def cmd_nc_product(args) -> int:
    a = _alcove(args)
    lam, mu = _weight(a.system, args.lam, "LAMBDA"), _weight(a.system, args.mu, "MU")
    for w, flag in ((lam, "LAMBDA"), (mu, "MU")):
        if not a.contains(w):
            raise UsageError(flag, f"{w} is not in the alcove of {a}")
    try:
        terms = _nc(a, lam, mu)
    except CombError as exc:
        raise UsageError("--type", str(exc)) from None
    _emit(args, _product_payload(args, a, lam, mu, terms), f"{_fmt(lam)} * {_fmt(mu)} = {_terms_text(terms)}")
    return EXIT_OK


def cmd_table(args) -> int:
    a = _alcove(args)
    if a.system.type == "gl" and not args.sl:
        log.info("gl_n table is taken over the l_n = 0 transversal")
    n = len(basis(a))
    cap = args.cap if args.cap is not None else DEFAULT_TABLE_CAP
    if n ** 3 > cap:
        log.warning("|alcove|^3 = %d exceeds the cap %d; streaming the table", n ** 3, cap)
    items = iter_fusion_table(a)
    with _sink(args) as fh:
        if args.format == "tsv":
            for line in tsv_lines(items, a):
                fh.write(line + "\n")
        elif args.format == "json":
            # streamed, but byte-identical to dumps() of the assembled object
            head = dumps({"config": _config(args, a), "entries": [], "size": n})
            pre, post = head.split('"entries": []')
            fh.write(pre + '"entries": [')
            first = True
            for rec in table_records(items):
                body = json.dumps(rec, sort_keys=True, indent=2).replace("\n", "\n    ")
                fh.write(("\n    " if first else ",\n    ") + body)
                first = False
            fh.write(("\n  ]" if not first else "]") + post)
        else:
            for lam, mu, prod in items:
                fh.write(f"[{_fmt(lam)}] * [{_fmt(mu)}] = {_terms_text(prod.items())}\n")
    return EXIT_OK


def cmd_compare(args) -> int:
    a = _alcove(args)
    if a.system.type == "A":
        a = make_alcove(build_root_system("gl", a.system.rank + 1), a.ell)
    if a.system.type not in ("gl", "C"):
        raise UsageError("--type", f"no combinatorial model for {a.system.name}")
    diff = compare_star_with_fusion(a)
    verdict = "PASS" if diff is None else "FAIL"
    payload = {"config": _config(args, a), "against": args.against, "verdict": verdict,
               "first_discrepancy": diff}
    _emit(args, payload, verdict + ("" if diff is None else f": {diff}"))
    return EXIT_OK if diff is None else EXIT_FAIL


def cmd_ideal_min(args) -> int:
    a = _alcove(args, for_ideals=True)
    ws = minimal_excluded(a)
    payload = {"config": _config(args, a), "k": a.level, "weights": [list(w) for w in ws]}
    _emit(args, payload, f"{len(ws)} minimal weights outside {a}:\n" + "\n".join("  " + _fmt(w) for w in ws))
    return EXIT_OK


def _preset(args, a):
    label = args.preset or default_preset(a)
    try:
        return preset_generators(label, a)
    except PresetError as exc:
        raise UsageError("--preset", str(exc)) from None


def cmd_ideal_gens(args) -> int:
    a = _alcove(args, for_ideals=True)
    G = _preset(args, a)
    payload = {"config": _config(args, a), "preset": G.label, "notes": G.notes,
               "unsupported": G.unsupported, "generators": G.as_records()}
    text = [f"{G.label} on {a}: {G.notes}"]
    text += ["  " + " + ".join(f"{c}*chi{_fmt(w)}" if c != 1 else f"chi{_fmt(w)}" for w, c in sorted(g.items()))
             for g in G.generators]
    if G.unsupported:
        text.append("UNSUPPORTED: " + G.unsupported)
    _emit(args, payload, "\n".join(text))
    return EXIT_UNDECIDED if G.unsupported else EXIT_OK


def cmd_ideal_verify(args) -> int:
    a = _alcove(args, for_ideals=True)
    G = _preset(args, a)
    bound = args.bound if args.bound is not None else default_bound(a)
    if bound < 0:
        raise UsageError("--bound", "must be nonnegative")
    cap = args.cap if args.cap is not None else DEFAULT_COLUMN_CAP
    image = image_zero_check(G)
    if image.status is Status.VERIFIED:
        result = presentations_equivalent(G, canonical_generators(a), bound, cap)
    else:
        result = image
    payload = {"config": _config(args, a), "preset": G.label, "image_check": image.status.value}
    payload.update(result.as_dict())
    if result.bound is None:
        payload["bound"] = bound
    text = f"{G.label} on {a}: {result.status.value}"
    if result.reason:
        text += f" ({result.reason})"
    _emit(args, payload, text)
    return _STATUS_EXIT[result.status]


def cmd_g2_check(args) -> int:
    args.type_ = "G2"
    a = _alcove(args)
    result = g2_recursion_check(a)
    payload = {"config": _config(args, a)}
    payload.update(result.as_dict())
    _emit(args, payload, f"{a}: {result.status.value}" + (f" ({result.reason})" if result.reason else ""))
    return _STATUS_EXIT[result.status]


def cmd_selftest(args) -> int:
    results = run_all(seed=args.seed, quick=args.quick)
    ok = all(r.passed for r in results)
    payload = {"config": _config(args), "quick": bool(args.quick), "passed": ok,
               "criteria": [r.as_dict() for r in results]}
    lines = []
    for r in results:
        lines.append(r.line())
        lines.extend("      " + d for d in r.details)
    lines.append("ALL PASS" if ok else "SOME CRITERIA FAILED")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "alcove": cmd_alcove, "mult": cmd_mult, "product": cmd_product, "nc-product": cmd_nc_product,
    "table": cmd_table, "compare": cmd_compare, "ideal-min": cmd_ideal_min, "ideal-gens": cmd_ideal_gens,
    "ideal-verify": cmd_ideal_verify, "g2-check": cmd_g2_check, "selftest": cmd_selftest,
}


def run(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.cache_dir:
        set_cache_dir(args.cache_dir)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fusionring {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError:
        print(f"fusionring {args.command}: error: out of memory; lower --bound or --cap", file=sys.stderr)
        return EXIT_UNDECIDED
    finally:
        if args.cache_dir:
            set_cache_dir(None)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
