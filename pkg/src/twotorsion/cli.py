"""Command-line front end.

Commands: classify, h2, feasibility, lambda, phi-bound, decompose,
family {ab1,ex2,mild}, richelot, verify-tables, search-pairs.

Tables go to stdout; errors go to stderr as ``error: CODE: message``
with a stable code and a nonzero exit status.  Parallel runs (--jobs)
sort after the map, so output is byte-identical to a serial run.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time

from . import classgroup, curves, modules, primes, serialize, tables
from .classgroup import CacheError, H2Cache
from .curves import HypothesisViolation
from .primes import CapacityError, PrimeClass


class CliError(Exception):
    def __init__(self, code: str, message: str, status: int = 2):
        super().__init__(message)
        self.code = code
        self.status = status


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise CliError("DOMAIN", f"range must be LO:HI, got {text!r}") from None


_PRIME_BOUND_CAP = 10**7


def _primes_1mod8(lo: int, hi: int) -> list[int]:
    if hi > _PRIME_BOUND_CAP:
        raise CliError("CAPACITY", f"prime bound {hi} exceeds {_PRIME_BOUND_CAP}")
    return [p for p in primes.primes_below(hi + 1) if p >= lo and p % 8 == 1]


def _pool_map(fn, items, jobs: int):
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))


def _profile_payload(p: int) -> dict:
    return serialize.profile_to_dict(primes.classify(p))


def cmd_classify(args) -> int:
    if args.range:
        lo, hi = _parse_range(args.range)
    elif args.bound is not None:
        lo, hi = 2, args.bound
    else:
        raise CliError("DOMAIN", "classify needs --bound or --range")
    ps = _primes_1mod8(lo, hi)
    dicts = sorted(_pool_map(_profile_payload, ps, args.jobs), key=lambda d: d["p"])
    rows = [[d["p"], d["a"], d["b"], d["label"], d["p1star"]] for d in dicts]
    print(serialize.emit(args.emit, "classify", serialize.PROFILE_COLUMNS, rows,
                         dict_rows=dicts, seed=args.seed))
    return 0


def _h2_payload(p: int) -> dict:
    h = classgroup.class_number(-4 * p)
    return {"p": p, "h": h, "h2": h & -h}


def cmd_h2(args) -> int:
    if args.range:
        lo, hi = _parse_range(args.range)
        ps = _primes_1mod8(lo, hi)
    else:
        ps = []
        for p in args.p:
            if not primes.is_prime(p) or p % 8 != 1:
                raise CliError("DOMAIN", f"{p} is not a prime = 1 mod 8")
            ps.append(p)
    cache = H2Cache(args.cache)
    dicts = []
    todo = []
    for p in sorted(ps):
        hit = cache.get(p)
        if hit is not None:
            dicts.append({"p": p, "h": hit[0], "h2": hit[1]})
        else:
            todo.append(p)
    for d in _pool_map(_h2_payload, todo, args.jobs):
        cache.put(d["p"], d["h"], d["h2"])
        dicts.append(d)
    cache.save()
    dicts.sort(key=lambda d: d["p"])
    rows = [[d["p"], d["h"], d["h2"]] for d in dicts]
    print(serialize.emit(args.emit, "h2", ("p", "h", "h2"), rows, dict_rows=dicts))
    return 0


def cmd_feasibility(args) -> int:
    if args.range:
        lo, hi = _parse_range(args.range)
        ps = _primes_1mod8(lo, hi)
    else:
        ps = args.p
        for p in ps:
            if not primes.is_prime(p):
                raise CliError("DOMAIN", f"{p} is not prime")
            if p % 8 != 1:
                raise CliError(
                    "DOMAIN",
                    f"no such variety: bad at one prime forces p = 1 mod 8 and "
                    f"conductor p^g, but {p} = {p % 8} mod 8",
                )
    cache = H2Cache(args.cache)
    dicts = []
    for p in sorted(ps):
        part = classgroup.h2(p, cache)
        profile = primes.classify(p)
        d = {
            "p": p,
            "label": profile.label.value,
            "h2": part,
            "max_g": part // 2 - 1,
            "p1star": profile.in_p1_star,
        }
        if args.g is not None:
            rep = classgroup.rm_feasibility(p, args.g, cache)
            d.update(serialize.feasibility_to_dict(rep))
        dicts.append(d)
    cache.save()
    columns = list(dicts[0].keys()) if dicts else ["p"]
    rows = [[d[c] for c in columns] for d in dicts]
    note = "bad at one prime: conductor is p^g with p = 1 mod 8"
    print(serialize.emit(args.emit, "feasibility", columns, rows,
                         dict_rows=dicts, note=note))
    return 0


def cmd_lambda(args) -> int:
    lam = modules.build_lambda(args.k, args.e)
    if lam is None:
        print(f"DOES_NOT_EXIST: k = {args.k} exceeds 2^(e+1) = {1 << (args.e + 1)}")
        return 0
    info = {
        "k": lam.k,
        "e": lam.e,
        "faithful": lam.faithful,
        "t_order": lam.t_order(),
    }
    if args.emit == "json":
        info["s1"] = list(lam.s1)
        info["s2"] = list(lam.s2)
        print(serialize.emit_json("lambda", [info]))
    else:
        for key, val in info.items():
            print(f"{key}: {val}")
        print("s1:")
        print(modules.render_matrix(lam.s1, lam.k))
        print("s2:")
        print(modules.render_matrix(lam.s2, lam.k))
    return 0


def cmd_phi_bound(args) -> int:
    ds = [args.d] if args.d is not None else list(range(1, 17))
    h2s = [args.h2] if args.h2 is not None else [4, 8, 16, 32]
    rows = []
    dicts = []
    for h2v in h2s:
        for d in ds:
            passed = modules.phi_bloc_obstruction(d, h2v)
            rows.append([d, h2v, "PASS" if passed else "FAIL"])
            dicts.append({"d": d, "h2": h2v, "status": "PASS" if passed else "FAIL"})
    print(serialize.emit(args.emit, "phi-bound", ("d", "h2", "status"), rows,
                         dict_rows=dicts))
    return 0


def cmd_decompose(args) -> int:
    if args.module == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.module, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    mod = modules.module_from_dict(data)
    blocs = modules.decompose_phi_blocs(mod)
    if args.emit == "pretty":
        print("Sv:")
        print(modules.render_matrix(mod.sv, mod.dim))
        print("Sl:")
        print(modules.render_matrix(mod.sl, mod.dim))
    if blocs is None:
        result = {"result": "NOT_BALANCED"}
        print("NOT_BALANCED" if args.emit != "json"
              else serialize.emit_json("decompose", [result]))
        return 0
    sizes = [b.d for b in blocs]
    if args.emit == "json":
        print(serialize.emit_json("decompose", [{"blocs": sizes}]))
    else:
        print("blocs:", " ".join(str(d) for d in sizes))
    return 0


def cmd_family(args) -> int:
    try:
        inst = curves.instance(args.name, (args.x, args.y))
    except HypothesisViolation as exc:
        raise CliError("HYPOTHESIS", str(exc), status=5) from exc
    rows = [serialize.instance_row(inst)]
    print(serialize.emit(args.emit, "family", serialize.INSTANCE_COLUMNS, rows,
                         dict_rows=[serialize.instance_to_dict(inst)]))
    return 0


def cmd_richelot(args) -> int:
    if args.curve == "1797":
        model = curves.curve_1797()
        stated = curves.stated_partner_1797()
        label = "1797"
    elif args.family:
        params = tuple(int(v) for v in args.params.split(","))
        inst = curves.instance(args.family, params)
        model = inst.model
        stated = curves.stated_partner(inst)
        label = f"{args.family}{params}"
    else:
        raise CliError("DOMAIN", "richelot needs --curve 1797 or --family/--params")
    pair = curves.richelot_of_model(model)
    from .invariants import same_curve_over_closure

    iso = same_curve_over_closure(pair.target_F, stated.F)
    payload = {
        "curve": label,
        "source_F": serialize.poly_to_json(pair.source_F),
        "target_F": serialize.poly_to_json(pair.target_F),
        "twist": pair.twist,
        "companion_isomorphic_over_closure": iso,
        "companion_delta": str(stated.delta),
    }
    if args.emit == "json":
        print(serialize.emit_json("richelot", [payload]))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")
    if not iso:
        raise CliError("MISMATCH", f"Richelot companion mismatch for {label}", status=1)
    return 0


def cmd_verify_tables(args) -> int:
    cache = H2Cache(args.cache)
    t0 = time.time()
    checks = tables.verify_tables(cache)
    cache.save()
    elapsed = time.time() - t0
    rows = [
        [c.table, " ".join(str(k) for k in c.key), c.field, c.expected, c.got,
         "ok" if c.ok else "MISMATCH"]
        for c in checks
    ]
    columns = ("table", "key", "field", "expected", "got", "status")
    dicts = [dict(zip(columns, row)) for row in rows]
    bad = sum(not c.ok for c in checks)
    print(serialize.emit(args.emit, "verify-tables", columns, rows, dict_rows=dicts,
                         mismatches=bad, seconds=round(elapsed, 3)))
    if args.emit != "json":
        print(f"checked {len(checks)} fields, {bad} mismatches, {elapsed:.2f}s")
    return 1 if bad else 0


def _search_worker(job) -> dict | None:
    family, params = job
    try:
        inst = curves.instance(family, params)
    except HypothesisViolation:
        return None
    if not inst.prime_pair:
        return None
    return serialize.instance_to_dict(inst)


def cmd_search_pairs(args) -> int:
    grid = curves.family_grid(args.family, _parse_range(args.range1),
                              _parse_range(args.range2))
    jobs = [(args.family, params) for params in grid]
    hits = [d for d in _pool_map(_search_worker, jobs, args.jobs) if d is not None]
    hits.sort(key=lambda d: (d["conductor"], d["params"]))
    rows = [
        [d["family"], " ".join(str(v) for v in d["params"]), d["m"], d["n"],
         d["conductor"], d["prime_pair"], d["delta_C"]]
        for d in hits
    ]
    print(serialize.emit(args.emit, "search-pairs", serialize.INSTANCE_COLUMNS, rows,
                         dict_rows=hits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twotorsion",
        description="exact arithmetic for prime classification, class-group "
        "2-parts, F2 dihedral modules and genus-2 families bad at one prime",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("csv", "json", "pretty"), default="pretty")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0,
                        help="recorded for reproducibility of randomized runs")
    common.add_argument("--cache", default=None, help="path of the h2 cache file")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="P1/P3/P1* classification of primes = 1 mod 8")
    p.add_argument("--bound", type=int)
    p.add_argument("--range")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("h2", parents=[common],
                       help="class number and its 2-part for disc -4p")
    p.add_argument("p", type=int, nargs="*")
    p.add_argument("--range")
    p.set_defaults(func=cmd_h2)

    p = sub.add_parser("feasibility", parents=[common],
                       help="dimension bounds from h2 and the P1* gate")
    p.add_argument("p", type=int, nargs="*")
    p.add_argument("--range")
    p.add_argument("--g", type=int, default=None)
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("lambda", parents=[common], help="cyclic dihedral chain module")
    p.add_argument("k", type=int)
    p.add_argument("e", type=int)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("phi-bound", parents=[common],
                       help="bloc obstruction sweep: PASS iff 2d+2 <= h2")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--h2", type=int, default=None)
    p.set_defaults(func=cmd_phi_bound)

    p = sub.add_parser("decompose", parents=[common],
                       help="phi-bloc decomposition of a module JSON file")
    p.add_argument("module", help="path of a module JSON file, or - for stdin")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("family", parents=[common], help="build one family instance")
    p.add_argument("name", choices=("ab1", "ex2", "mild"))
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("richelot", parents=[common],
                       help="Richelot transform and companion verification")
    p.add_argument("--curve", choices=("1797",))
    p.add_argument("--family", choices=("ab1", "ex2", "mild"))
    p.add_argument("--params", help="comma-separated family parameters")
    p.set_defaults(func=cmd_richelot)

    p = sub.add_parser("verify-tables", parents=[common],
                       help="recompute every golden table row")
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("search-pairs", parents=[common],
                       help="prime-pair instances over a parameter box")
    p.add_argument("--family", required=True, choices=("ab1", "ex2", "mild"))
    p.add_argument("--range1", required=True, help="first parameter range LO:HI")
    p.add_argument("--range2", required=True, help="second parameter range LO:HI")
    p.set_defaults(func=cmd_search_pairs)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.status
    except CacheError as exc:
        print(f"error: CORRUPT_CACHE: {exc}", file=sys.stderr)
        return 4
    except CapacityError as exc:
        print(f"error: CAPACITY: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: DOMAIN: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
