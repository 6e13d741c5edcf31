"""Batch verification harness.

``verify <identity>`` enumerates a parameter grid in lexicographic order,
runs the corresponding checker on every tuple and streams one report per
case, buffered so the output order never depends on scheduling.  ``ct``
prints a single kernel coefficient.  ``list`` names the known identities.

Exit status: 0 when every case agreed, 1 on any mismatch, 2 on usage
errors.  Timed-out cases (with --budget-ms) are reported with a distinct
status and do not count as mismatches.

The text format is byte-deterministic for a fixed configuration and seed,
independent of --jobs.  The json format additionally carries the per-case
wall time in ``millis``, which is the one field that varies from run to
run; strip it if byte-stable json is needed.
"""

from __future__ import annotations

import argparse
import itertools
import json
import multiprocessing
import os
import random
import sys
import time
from dataclasses import dataclass

from . import identities as ids
from .combi import (
    Permutation, Tournament, ZeroOneMatrix, all_compositions, all_pairsets,
    all_zero_one_matrices, ell_stats, is_strict, reverse, sort_desc,
)
from .interp import (
    closed_eval, dyson_coeff_interpolated, sills_coeff_interpolated,
)
from .mpoly import (
    MPoly, dyson_kernel, table_x, tkernel, tournament_kernel,
    bg_alternating_kernel, tzero_kernel,
)
from .qpoly import IntPoly
from .symfun import key_poly, keyhat_poly, scalar_product, schur_principal

JOBS_ENV = "DYSONCT_JOBS"


@dataclass
class RunConfig:
    identity: str
    n: int = 3
    a_max: int = 2
    m_max: int = 2
    t_mode: str = "symbolic"
    jobs: int = 1
    fmt: str = "text"
    seed: int = 0
    budget_ms: int | None = None
    sum_max: int | None = None


# -- per-identity enumerators and runners ------------------------------------------

def _apos(cfg):
    for a in itertools.product(range(1, cfg.a_max + 1), repeat=cfg.n):
        if cfg.sum_max is None or sum(a) <= cfg.sum_max:
            yield a


def _annn(cfg):
    for a in itertools.product(range(0, cfg.a_max + 1), repeat=cfg.n):
        if cfg.sum_max is None or sum(a) <= cfg.sum_max:
            yield a


def _enum_qdyson(cfg):
    return [{"a": list(a)} for a in _annn(cfg)]


def _run_qdyson(p):
    return ids.verify_qdyson(tuple(p["a"]))


def _enum_poincare(cfg):
    return [{"a": list(a)} for a in _apos(cfg)]


def _run_poincare(p):
    return ids.verify_poincare(tuple(p["a"]))


def _enum_poincare_equal(cfg):
    return [{"n": cfg.n, "k": k} for k in range(1, cfg.a_max + 1)]


def _run_poincare_equal(p):
    return ids.verify_equal_collapse(p["n"], p["k"])


def _enum_wtd(cfg):
    return [{"n": n} for n in range(1, cfg.n + 1)]


def _run_wtd(p):
    return ids.verify_wtd(p["n"])


def _enum_bg_general(cfg):
    out = []
    for a in _apos(cfg):
        for size in range(cfg.n + 1):
            for I in itertools.combinations(range(1, cfg.n + 1), size):
                out.append({"a": list(a), "I": list(I)})
    return out


def _run_bg_general(p):
    return ids.verify_bg_general(tuple(p["a"]), set(p["I"]))


def _enum_bg_alternating(cfg):
    return [{"a": list(a)} for a in _apos(cfg)]


def _run_bg_alternating(p):
    return ids.verify_bg_alternating(tuple(p["a"]))


def _enum_tournament(cfg):
    out = []
    for a in _apos(cfg):
        for S in sorted(all_pairsets(cfg.n), key=sorted):
            out.append({"a": list(a), "S": sorted(S)})
    return out


def _run_tournament(p):
    t = Tournament.from_pairset(frozenset(map(tuple, p["S"])), len(p["a"]))
    return ids.verify_tournament(t, tuple(p["a"]))


def _enum_kadell(cfg):
    out = []
    for a in _annn(cfg):
        for m in range(1, cfg.m_max + 1):
            for v in all_compositions(m, cfg.n):
                out.append({"a": list(a), "v": list(v)})
    return out


def _run_kadell(p):
    return ids.verify_kadell(tuple(p["v"]), tuple(p["a"]))


def _enum_kadell_t(cfg):
    out = []
    for a in _apos(cfg):
        for m in range(1, cfg.m_max + 1):
            for k in range(1, cfg.n + 1):
                out.append({"a": list(a), "m": m, "k": k})
    return out


def _run_kadell_t(p):
    return ids.verify_kadell_t(p["k"], p["m"], tuple(p["a"]))


def _enum_strict(cfg):
    out = []
    lams = [lam for lam in itertools.product(range(cfg.m_max + 1), repeat=cfg.n)
            if is_strict(lam)]
    for a in _apos(cfg):
        for lam in lams:
            for w in Permutation.all_perms(cfg.n):
                out.append({"a": list(a), "lam": list(lam),
                            "w": w.serialize()})
    return out


def _run_strict(p):
    return ids.verify_strict(tuple(p["lam"]), tuple(p["a"]),
                             Permutation.parse(p["w"]))


def _enum_usum(cfg):
    out = [{"n": n, "k": 0} for n in range(1, cfg.n + 1)]
    for n in range(1, cfg.n + 1):
        out += [{"n": n, "k": k} for k in range(1, n + 1)]
    return out


def _run_usum(p):
    if p["k"] == 0:
        return ids.verify_usum(p["n"])
    return ids.verify_usum_k(p["n"], p["k"])


def _enum_prop_kappa(cfg):
    out = []
    m = cfg.m_max
    for a in _apos(cfg):
        for kappa in all_zero_one_matrices(cfg.n, m):
            for lam, w in ids.solve_column_relation(kappa, m):
                out.append({"a": list(a), "kappa": kappa.serialize(),
                            "lam": list(lam), "w": w.serialize()})
    return out


def _run_prop_kappa(p):
    return ids.verify_prop_kappa(ZeroOneMatrix.parse(p["kappa"]),
                                 tuple(p["lam"]), Permutation.parse(p["w"]),
                                 tuple(p["a"]))


def _enum_prop_zero(cfg):
    out = []
    m = cfg.m_max
    for a in _apos(cfg):
        for kappa in all_zero_one_matrices(cfg.n, m):
            if kappa.is_left_justified():
                continue
            for lam, _ in ids.solve_column_relation(kappa, m):
                out.append({"a": list(a), "kappa": kappa.serialize(),
                            "lam": list(lam)})
    return out


def _run_prop_zero(p):
    return ids.verify_prop_zero(ZeroOneMatrix.parse(p["kappa"]),
                                tuple(p["lam"]), tuple(p["a"]))


def _enum_prop_vnu(cfg):
    out = []
    m = cfg.m_max
    for a in _apos(cfg):
        for v in itertools.product(range(m + 1), repeat=cfg.n):
            out.append({"a": list(a), "v": list(v), "m": m})
    return out


def _run_prop_vnu(p):
    return ids.verify_prop_vnu(tuple(p["v"]), tuple(p["a"]), p["m"])


def _enum_sills(cfg):
    out = []
    for a in _annn(cfg):
        for r, s in itertools.permutations(range(1, cfg.n + 1), 2):
            out.append({"a": list(a), "r": r, "s": s})
    return out


def _run_sills(p):
    return ids.verify_sills(tuple(p["a"]), p["r"], p["s"])


def _lxz_vs(n):
    """All v with |v| = 0, max(v) <= 1 and v_1 = 1, lexicographically."""
    out = []
    for tail in itertools.product(range(-n, 2), repeat=n - 1):
        v = (1,) + tail
        if sum(v) == 0 and max(v) <= 1:
            out.append(v)
    return out


def _enum_lxz(cfg):
    out = []
    for a in _annn(cfg):
        for v in _lxz_vs(cfg.n):
            out.append({"a": list(a), "v": list(v)})
    return out


def _run_lxz(p):
    return ids.verify_lxz(tuple(p["v"]), tuple(p["a"]))


def _enum_interp_dyson(cfg):
    out = []
    rng = random.Random(cfg.seed)
    all_s = sorted(all_pairsets(cfg.n), key=sorted)
    for a in _apos(cfg):
        if cfg.n <= 3:
            chosen = all_s
        else:
            chosen = sorted(rng.sample(all_s, min(30, len(all_s))), key=sorted)
        for S in chosen:
            out.append({"a": list(a), "S": sorted(S)})
    return out


def _run_interp_dyson(p):
    start = time.perf_counter()
    a = tuple(p["a"])
    S = frozenset(map(tuple, p["S"]))
    n = len(a)
    value, _, pi = dyson_coeff_interpolated(a, S)
    d_in = [0] * (n + 1)
    e_out = [0] * (n + 1)
    for i, j in S:
        d_in[j] += 1
        e_out[i] += 1
    v = tuple(e_out[i] - d_in[i] for i in range(1, n + 1))
    brute = tzero_kernel(a).coeff_x(v).to_intpoly() * ((-1) ** len(S))
    _, _, _, K = ell_stats(S, n)
    lhs = str(value)
    if (K == n) != (not value.is_zero):
        lhs += " [K-dichotomy violated]"
    return ids._report("interp-dyson", dict(p), lhs, str(brute), start)


def _enum_interp_closed(cfg):
    out = []
    for a in _apos(cfg):
        for w in Permutation.all_perms(cfg.n):
            out.append({"a": list(a), "w": w.serialize()})
    return out


def _run_interp_closed(p):
    start = time.perf_counter()
    a = tuple(p["a"])
    w = Permutation.parse(p["w"])
    try:
        value = closed_eval(a, w)
    except AssertionError as exc:
        return ids._report("interp-closed", dict(p), f"error: {exc}",
                           str(ids.c_w(a, w)), start)
    return ids._report("interp-closed", dict(p), str(value),
                       str(ids.c_w(a, w)), start)


def _enum_interp_sills(cfg):
    out = []
    for a in _apos(cfg):
        for r in range(2, cfg.n + 1):
            out.append({"a": list(a), "r": r})
    return out


def _run_interp_sills(p):
    start = time.perf_counter()
    a = tuple(p["a"])
    try:
        value, _ = sills_coeff_interpolated(a, p["r"])
        lhs = str(value)
    except AssertionError as exc:
        lhs = f"error: {exc}"
    return ids._report("interp-sills", dict(p), lhs,
                       str(ids.rhs_sills(a, p["r"], 1)), start)


def _enum_scalar_kkhat(cfg):
    comps = list(itertools.product(range(cfg.a_max + 1), repeat=cfg.n))
    return [{"v": list(v), "w": list(w)} for v in comps for w in comps]


def _run_scalar_kkhat(p):
    start = time.perf_counter()
    v, w = tuple(p["v"]), tuple(p["w"])
    t = table_x(len(v))
    got = scalar_product(key_poly(v, t), keyhat_poly(w, t))
    want = IntPoly.const(1 if v == reverse(w) else 0)
    return ids._report("scalar-kkhat", dict(p), str(got), str(want), start)


def _enum_schur_monomial(cfg):
    out = []
    lams = [lam for lam in itertools.product(range(cfg.m_max + 1), repeat=cfg.n)
            if sort_desc(lam) == lam]
    for lam in lams:
        for v in all_compositions(sum(lam), cfg.n):
            out.append({"lam": list(lam), "v": list(v)})
    return out


def _run_schur_monomial(p):
    start = time.perf_counter()
    lam, v = tuple(p["lam"]), tuple(p["v"])
    n = len(lam)
    t = table_x(n)
    got = scalar_product(
        schur_principal(lam, (1,) * n, t),
        MPoly.monomial(t, {t.x_index(i + 1): e for i, e in enumerate(v) if e}))
    delta = tuple(range(n - 1, -1, -1))
    u = tuple(x + d for x, d in zip(v, delta))
    ref = tuple(x + d for x, d in zip(lam, delta))
    if sorted(u, reverse=True) == list(ref) and len(set(u)) == n:
        w = Permutation(tuple(ref.index(x) + 1 for x in u))
        want = IntPoly.const(w.sign())
    else:
        want = IntPoly()
    return ids._report("schur-monomial", dict(p), str(got), str(want), start)


def _enum_hook_content(cfg):
    from dysonct.combi import partitions_upto
    out = []
    for a in range(cfg.a_max + 1):
        for lam in partitions_upto(cfg.m_max, cfg.n):
            out.append({"lam": list(lam), "a": a})
    return out


def _run_hook_content(p):
    return ids.verify_hook_content(tuple(p["lam"]), p["a"])


REGISTRY = {
    "q-dyson": (_enum_qdyson, _run_qdyson),
    "poincare": (_enum_poincare, _run_poincare),
    "poincare-equal": (_enum_poincare_equal, _run_poincare_equal),
    "wtd": (_enum_wtd, _run_wtd),
    "bg-general": (_enum_bg_general, _run_bg_general),
    "bg-alternating": (_enum_bg_alternating, _run_bg_alternating),
    "tournament": (_enum_tournament, _run_tournament),
    "kadell": (_enum_kadell, _run_kadell),
    "kadell-t": (_enum_kadell_t, _run_kadell_t),
    "strict": (_enum_strict, _run_strict),
    "usum": (_enum_usum, _run_usum),
    "prop-kappa": (_enum_prop_kappa, _run_prop_kappa),
    "prop-zero": (_enum_prop_zero, _run_prop_zero),
    "prop-vnu": (_enum_prop_vnu, _run_prop_vnu),
    "sills": (_enum_sills, _run_sills),
    "lxz": (_enum_lxz, _run_lxz),
    "interp-dyson": (_enum_interp_dyson, _run_interp_dyson),
    "interp-closed": (_enum_interp_closed, _run_interp_closed),
    "interp-sills": (_enum_interp_sills, _run_interp_sills),
    "scalar-kkhat": (_enum_scalar_kkhat, _run_scalar_kkhat),
    "schur-monomial": (_enum_schur_monomial, _run_schur_monomial),
    "hook-content": (_enum_hook_content, _run_hook_content),
}


# -- execution ----------------------------------------------------------------------

def _execute(task):
    identity, params_json = task
    params = json.loads(params_json)
    try:
        report = REGISTRY[identity][1](params)
    except Exception as exc:  # an internal assertion is a failed case
        return {"identity": identity, "params": params,
                "lhs": f"error: {exc}", "rhs": "", "equal": False,
                "millis": None, "status": "error"}
    return {"identity": report.identity, "params": report.params,
            "lhs": report.lhs, "rhs": report.rhs, "equal": report.equal,
            "millis": report.millis, "status": "ok"}


def _timeout_record(identity, params):
    return {"identity": identity, "params": params, "lhs": "", "rhs": "",
            "equal": None, "millis": None, "status": "timeout"}


def _budget_worker(task, queue):
    queue.put(_execute(task))


def _run_with_budget(tasks, jobs, budget_ms):
    ctx = multiprocessing.get_context()
    results = [None] * len(tasks)
    idx = 0
    while idx < len(tasks):
        wave = tasks[idx:idx + jobs]
        procs = []
        for off, task in enumerate(wave):
            queue = ctx.SimpleQueue()
            proc = ctx.Process(target=_budget_worker, args=(task, queue))
            proc.start()
            procs.append((proc, queue, idx + off))
        for proc, queue, i in procs:
            proc.join(budget_ms / 1000.0)
            identity, params_json = tasks[i]
            if proc.is_alive():
                proc.terminate()
                proc.join()
                results[i] = _timeout_record(identity, json.loads(params_json))
            elif queue.empty():
                record = _timeout_record(identity, json.loads(params_json))
                record["status"] = "error"
                results[i] = record
            else:
                results[i] = queue.get()
        idx += jobs
    return results


def run(config: RunConfig):
    """Run a verification grid; returns (exit_code, list of record dicts)."""
    if config.identity not in REGISTRY:
        return 2, []
    enum, _ = REGISTRY[config.identity]
    params_list = enum(config)
    tasks = [(config.identity, json.dumps(p, sort_keys=True))
             for p in params_list]
    if config.budget_ms:
        records = _run_with_budget(tasks, max(config.jobs, 1), config.budget_ms)
    elif config.jobs > 1:
        with multiprocessing.Pool(config.jobs) as pool:
            records = pool.map(_execute, tasks)
    else:
        records = [_execute(t) for t in tasks]
    bad = any(r["status"] != "timeout" and not r["equal"] for r in records)
    return (1 if bad else 0), records


def _record_text_line(r):
    params = " ".join(f"{k}={v}" for k, v in sorted(r["params"].items()))
    if r["status"] == "timeout":
        return f"TIMEOUT {r['identity']} {params}"
    status = "PASS" if r["equal"] else "FAIL"
    return f"{status} {r['identity']} {params} | lhs={r['lhs']} rhs={r['rhs']}"


def _emit(records, fmt, out):
    for r in records:
        if fmt == "json":
            payload = {k: r[k] for k in
                       ("identity", "params", "lhs", "rhs", "equal", "millis")}
            out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            out.write(_record_text_line(r) + "\n")


# -- the ct subcommand ----------------------------------------------------------------

def _parse_int_vector(text):
    return tuple(int(v) for v in text.split(","))


def _ct_command(args, out):
    a = _parse_int_vector(args.a)
    v = _parse_int_vector(args.v)
    n = len(a)
    if len(v) != n:
        print(f"coefficient vector must have length {n}", file=sys.stderr)
        return 2
    if args.kernel == "dyson":
        kern = dyson_kernel(a)
    elif args.kernel == "tkernel":
        kern = tkernel(a)
        if args.t_mode == "qa":
            powers = {(i, j): a[j - 1] for i in range(1, n)
                      for j in range(i + 1, n + 1)}
            kern = kern.subst_t_qpowers(powers)
        elif args.t_mode == "zero":
            kern = kern.subst_t_zero()
    elif args.kernel == "alternating":
        kern = bg_alternating_kernel(a)
    elif args.kernel == "tournament":
        if not args.edges:
            print("tournament kernel needs --edges", file=sys.stderr)
            return 2
        edges = set()
        for part in args.edges.replace(",", " ").split():
            i, j = part.split(">")
            edges.add((int(i), int(j)))
        kern = tournament_kernel(Tournament(n, edges), a)
    else:
        print(f"unknown kernel {args.kernel!r}", file=sys.stderr)
        return 2
    out.write(str(kern.coeff_x(v)) + "\n")
    return 0


# -- entry point -----------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="dysonct",
        description="exact constant-term identity verification")
    sub = parser.add_subparsers(dest="command")

    pv = sub.add_parser("verify", help="run an identity over a parameter grid")
    pv.add_argument("identity")
    pv.add_argument("--n", type=int, default=3)
    pv.add_argument("--a-max", type=int, default=2)
    pv.add_argument("--m-max", type=int, default=2)
    pv.add_argument("--sum-max", type=int, default=None,
                    help="skip tuples whose entries sum beyond this bound")
    pv.add_argument("--t-mode", choices=["symbolic", "qa", "zero"],
                    default="symbolic")
    pv.add_argument("--jobs", type=int, default=None)
    pv.add_argument("--format", choices=["text", "json"], default="text")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--budget-ms", type=int, default=None)

    pc = sub.add_parser("ct", help="print one kernel coefficient")
    pc.add_argument("kernel",
                    choices=["dyson", "tkernel", "tournament", "alternating"])
    pc.add_argument("--a", required=True, help="comma-separated sequence")
    pc.add_argument("--v", required=True, help="comma-separated exponents")
    pc.add_argument("--t-mode", choices=["symbolic", "qa", "zero"],
                    default="symbolic")
    pc.add_argument("--edges", help="tournament edges, e.g. '1>2 2>3 1>3'")

    sub.add_parser("list", help="list known identities")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    if args.command == "list":
        for name in sorted(REGISTRY):
            out.write(name + "\n")
        return 0
    if args.command == "ct":
        try:
            return _ct_command(args, out)
        except (ValueError, KeyError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if args.command == "verify":
        if args.identity not in REGISTRY:
            print(f"unknown identity {args.identity!r}; known identities:",
                  file=sys.stderr)
            for name in sorted(REGISTRY):
                print(f"  {name}", file=sys.stderr)
            return 2
        jobs = args.jobs
        if jobs is None:
            jobs = int(os.environ.get(JOBS_ENV, "1"))
        config = RunConfig(identity=args.identity, n=args.n, a_max=args.a_max,
                           m_max=args.m_max, t_mode=args.t_mode, jobs=jobs,
                           fmt=args.format, seed=args.seed,
                           budget_ms=args.budget_ms, sum_max=args.sum_max)
        code, records = run(config)
        _emit(records, args.format, out)
        return code
    parser.print_usage(sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
