"""Command-line surface: generate, analyze, spectrum, verify, scan, bench.

Exit codes: 0 all requested checks pass, 1 at least one check failed,
2 usage error.  Output formats: text (default), json, csv; JSON payloads
carry a schema_version field.  SEQLAB_SEED is reserved; no core path
uses randomness.
"""

import argparse
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .adic import gcd_structure, lower_bound_verdict, two_adic_complexity
from .attack import attack_report
from .cyclotomy import build_params, build_tables
from .numtheory import decimal_str, factorize
from .sequence import (
    generate_modified_jacobi,
    generate_via_legendre,
    load_sequence,
    save_sequence,
)
from .spectral import ORACLE_LIMIT, circulant_det_exact, classify_case, gauss_periods_numeric
from .verify import SCAN_CHECKS, VerifyConfig, prime_pairs, run_checks

SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    q: int | None = None
    scan: bool = False
    max_pq: int = 3000
    fmt: str = "text"
    out: str | None = None
    tolerance: float | None = None
    oracle_max_n: int = ORACLE_LIMIT
    jobs: int = 1
    only: str | None = None
    infile: str | None = None
    attack: bool = False
    ladder: tuple[int, ...] = (15, 143, 1763, 10403)
    repeat: int = 3


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _json_payload(cfg: RunConfig, body: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "command": cfg.command, **body},
                      indent=2)


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[("" if v is None else str(v)) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
             for row in cells]
    return "\n".join(lines)


def _require_pair(cfg: RunConfig) -> tuple[int, int]:
    if cfg.p is None or cfg.q is None:
        raise UsageError("this command needs --p and --q")
    return cfg.p, cfg.q


class UsageError(Exception):
    pass


def cmd_gen(cfg: RunConfig) -> int:
    p, q = _require_pair(cfg)
    params = build_params(p, q)
    seq = generate_modified_jacobi(params)
    if cfg.fmt == "json":
        body = {
            "p": p,
            "q": q,
            "n": params.n,
            "bits": seq.to01(),
            "params": {
                "d": params.d, "f": params.f, "fprime": params.fprime,
                "g": params.g, "x": params.x, "class_size": params.class_size,
            },
        }
        _emit(cfg, _json_payload(cfg, body))
    elif cfg.out:
        save_sequence(seq, cfg.out)
    else:
        print(f"{p} {q}")
        print(seq.to01())
    return 0


def _load_input(cfg: RunConfig):
    if cfg.infile:
        seq = load_sequence(cfg.infile)
        return seq, seq.params
    p, q = _require_pair(cfg)
    params = build_params(p, q)
    return generate_via_legendre(params), params


def cmd_analyze(cfg: RunConfig) -> int:
    seq, params = _load_input(cfg)
    report = two_adic_complexity(seq, params)
    body: dict = {"adic": report.to_json_dict()}
    rows = [
        ["N", report.n],
        ["S(2)", decimal_str(report.s2)],
        ["gcd(S(2), 2^N-1)", decimal_str(report.g)],
        ["phi2", report.phi2],
        ["maximal", report.maximal],
        ["degenerate", report.degenerate],
    ]
    if params is not None:
        verdict = lower_bound_verdict(params, report)
        diag = gcd_structure(params, report)
        body["bound"] = {
            "bound": verdict.bound,
            "holds": verdict.holds,
            "twin_prime_maximal": verdict.twin_prime_maximal,
        }
        body["gcd_structure"] = diag.to_json_dict()
        rows += [
            ["lower bound pq-p-q-1", verdict.bound],
            ["bound holds", verdict.holds],
            ["twin-prime maximal", verdict.twin_prime_maximal],
            ["gcd split", f"{decimal_str(diag.split_p)} * {decimal_str(diag.split_q)}"],
            ["gcd | (2^p-1)(2^q-1)", diag.divides_product],
        ]
    if cfg.attack:
        ar = attack_report(seq, params)
        body["attack"] = ar.to_json_dict()
        rows += [
            ["linear complexity", ar.linear_complexity],
            ["fraction recovered", ar.recovered],
            ["min prefix", ar.min_prefix],
            ["phi2 >= N/2", ar.phi2_pass],
            ["LC >= N/2", ar.lc_pass],
        ]
    if cfg.fmt == "json":
        _emit(cfg, _json_payload(cfg, body))
    else:
        _emit(cfg, _table(["quantity", "value"], rows))
    return 0


def cmd_spectrum(cfg: RunConfig) -> int:
    p, q = _require_pair(cfg)
    params = build_params(p, q)
    tables = build_tables(params)
    profile = gauss_periods_numeric(tables)
    body = profile.to_json_dict()
    if params.n <= cfg.oracle_max_n:
        seq = generate_modified_jacobi(params, tables)
        body["det_exact"] = str(circulant_det_exact(seq, cfg.oracle_max_n))
        body["det_match"] = body["det_exact"] == body["det_closed"]
    if cfg.fmt == "json":
        _emit(cfg, _json_payload(cfg, body))
    else:
        rows = [["case", profile.case],
                ["omega0", f"{profile.omega0:.6f}"],
                ["omega1", f"{profile.omega1:.6f}"],
                ["omega0*omega1 exact", profile.omega_product_exact],
                ["det closed form", decimal_str(profile.det_closed)]]
        if "det_exact" in body:
            rows.append(["det exact oracle", body["det_exact"]])
            rows.append(["det match", body["det_match"]])
        for label in ("R", "D0*", "D1*", "P", "Q"):
            v = profile.spectrum[label]
            rows.append([f"spectrum {label}",
                         f"{complex(v):.6f}" if isinstance(v, complex) else v])
        _emit(cfg, _table(["quantity", "value"], rows))
    return 0


def _scan_row(pair: tuple[int, int]) -> dict:
    p, q = pair
    params = build_params(p, q)
    seq = generate_via_legendre(params)
    report = two_adic_complexity(seq, params)
    verdict = lower_bound_verdict(params, report)
    diag = gcd_structure(params, report)
    return {
        "p": p,
        "q": q,
        "n": params.n,
        "d": params.d,
        "case": classify_case(params),
        "phi2": report.phi2,
        "bound": verdict.bound,
        "holds": verdict.holds,
        "gcd": decimal_str(report.g),
        "maximal": report.maximal,
        "twin_prime_maximal": verdict.twin_prime_maximal,
        "gcd_divides_product": diag.divides_product and diag.cofactor_gcd == 1,
    }


def _scan_rows(cfg: RunConfig) -> list[dict]:
    pairs = prime_pairs(cfg.max_pq)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_scan_row, pairs, chunksize=16))
    else:
        rows = [_scan_row(pair) for pair in pairs]
    rows.sort(key=lambda r: (r["p"], r["q"]))
    return rows


_SCAN_COLUMNS = ["p", "q", "n", "d", "case", "phi2", "bound", "holds",
                 "gcd", "maximal", "twin_prime_maximal", "gcd_divides_product"]


def _render_rows(cfg: RunConfig, rows: list[dict], extra: dict) -> str:
    if cfg.fmt == "json":
        return _json_payload(cfg, {**extra, "rows": rows})
    if cfg.fmt == "csv":
        lines = [",".join(_SCAN_COLUMNS)]
        for r in rows:
            lines.append(",".join("" if r[c] is None else str(r[c])
                                  for c in _SCAN_COLUMNS))
        return "\n".join(lines)
    return _table(_SCAN_COLUMNS, [[r[c] for c in _SCAN_COLUMNS] for r in rows])


def cmd_scan(cfg: RunConfig) -> int:
    rows = _scan_rows(cfg)
    violations = [r for r in rows if not r["holds"]
                  or r["twin_prime_maximal"] is False
                  or not r["gcd_divides_product"]]
    summary = {"pairs": len(rows), "violations": len(violations)}
    _emit(cfg, _render_rows(cfg, rows, summary))
    return 1 if violations else 0


def cmd_verify(cfg: RunConfig) -> int:
    vcfg = VerifyConfig(tolerance=cfg.tolerance, oracle_max_n=cfg.oracle_max_n)
    if cfg.scan:
        rows = _scan_rows(cfg)
        failures = 0
        lines = []
        for r in rows:
            for name in SCAN_CHECKS:
                if name == "adic-bound":
                    ok = r["holds"]
                elif name == "twin-prime-maximal":
                    ok = r["twin_prime_maximal"]
                else:
                    ok = r["gcd_divides_product"]
                if ok is None:
                    continue
                if not ok:
                    failures += 1
                    lines.append(f"FAIL  ({r['p']},{r['q']})  {name}")
        header = (f"scanned {len(rows)} pairs up to pq <= {cfg.max_pq}: "
                  f"{failures} violation(s)")
        if cfg.fmt == "json":
            _emit(cfg, _json_payload(cfg, {
                "pairs": len(rows), "violations": failures, "rows": rows}))
        elif cfg.fmt == "csv":
            _emit(cfg, _render_rows(cfg, rows, {}))
        else:
            _emit(cfg, "\n".join([header] + lines + [
                _table(_SCAN_COLUMNS, [[r[c] for c in _SCAN_COLUMNS] for r in rows])]))
        return 1 if failures else 0
    p, q = _require_pair(cfg)
    try:
        results = run_checks(p, q, only=cfg.only, cfg=vcfg)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    failures = sum(1 for r in results if r.passed is False)
    if cfg.fmt == "json":
        _emit(cfg, _json_payload(cfg, {
            "p": p, "q": q,
            "results": [{"name": r.name, "status": r.status, "detail": r.detail}
                        for r in results],
            "failures": failures,
        }))
    else:
        lines = [f"{r.status:4}  {r.name:22}  {r.detail}" for r in results]
        lines.append(f"{len(results)} check(s), {failures} failure(s)")
        _emit(cfg, "\n".join(lines))
    return 1 if failures else 0


def _bench_pair_for(n: int) -> tuple[int, int]:
    fac = factorize(n)
    if len(fac) != 2 or set(fac.values()) != {1}:
        raise UsageError(f"ladder entry {n} is not a product of two distinct primes")
    p, q = sorted(fac)
    if p == 2:
        raise UsageError(f"ladder entry {n} has an even prime factor")
    return p, q


def cmd_bench(cfg: RunConfig) -> int:
    rows = []
    for n in cfg.ladder:
        p, q = _bench_pair_for(n)
        params = build_params(p, q)
        build_times = []
        gcd_times = []
        for _ in range(max(1, cfg.repeat)):
            t0 = time.perf_counter()
            seq = generate_via_legendre(params)
            s2 = seq.to_int()
            t1 = time.perf_counter()
            math.gcd(s2, (1 << params.n) - 1)
            t2 = time.perf_counter()
            build_times.append((t1 - t0) * 1e3)
            gcd_times.append((t2 - t1) * 1e3)
        def mean(xs):
            return sum(xs) / len(xs)
        def var(xs):
            m = mean(xs)
            return sum((x - m) ** 2 for x in xs) / len(xs)
        rows.append({
            "N": params.n,
            "build_ms": round(mean(build_times), 4),
            "gcd_ms": round(mean(gcd_times), 4),
            "build_ms_var": round(var(build_times), 6),
            "gcd_ms_var": round(var(gcd_times), 6),
        })
    cols = ["N", "build_ms", "gcd_ms", "build_ms_var", "gcd_ms_var"]
    if cfg.fmt == "json":
        _emit(cfg, _json_payload(cfg, {"repeat": cfg.repeat, "rows": rows}))
    else:
        lines = [",".join(cols)]
        for r in rows:
            lines.append(",".join(str(r[c]) for c in cols))
        _emit(cfg, "\n".join(lines))
    return 0


_COMMANDS = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, pair=True):
        if pair:
            sp.add_argument("--p", type=int)
            sp.add_argument("--q", type=int)
        sp.add_argument("--format", dest="fmt", default="text",
                        choices=["text", "json", "csv"])
        sp.add_argument("--out", default=None, help="write output to this path")

    sp = sub.add_parser("gen", help="generate a sequence file")
    common(sp)

    sp = sub.add_parser("analyze", help="2-adic report for a pair or a file")
    common(sp)
    sp.add_argument("--in", dest="infile", default=None,
                    help="read a sequence file instead of generating")
    sp.add_argument("--attack", action="store_true",
                    help="also run the synthesis instruments")

    sp = sub.add_parser("spectrum", help="Gauss periods and determinant data")
    common(sp)
    sp.add_argument("--oracle-max-n", type=int, default=ORACLE_LIMIT)

    sp = sub.add_parser("verify", help="run the identity suite")
    common(sp)
    sp.add_argument("--scan", action="store_true")
    sp.add_argument("--max-pq", type=int, default=3000)
    sp.add_argument("--only", default=None, help="run a single named check")
    sp.add_argument("--tolerance", type=float, default=None)
    sp.add_argument("--oracle-max-n", type=int, default=ORACLE_LIMIT)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("scan", help="bound table over a parameter range")
    common(sp, pair=False)
    sp.add_argument("--max-pq", type=int, default=3000)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("bench", help="S(2) build and gcd timings")
    common(sp, pair=False)
    sp.add_argument("--ladder", default="15,143,1763,10403",
                    help="comma-separated periods, each a product of two odd primes")
    sp.add_argument("--repeat", type=int, default=3)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    kwargs = dict(
        command=args.command,
        fmt=getattr(args, "fmt", "text"),
        out=getattr(args, "out", None),
        p=getattr(args, "p", None),
        q=getattr(args, "q", None),
        scan=getattr(args, "scan", False),
        max_pq=getattr(args, "max_pq", 3000),
        tolerance=getattr(args, "tolerance", None),
        oracle_max_n=getattr(args, "oracle_max_n", ORACLE_LIMIT),
        jobs=getattr(args, "jobs", 1),
        only=getattr(args, "only", None),
        infile=getattr(args, "infile", None),
        attack=getattr(args, "attack", False),
        repeat=getattr(args, "repeat", 3),
    )
    if hasattr(args, "ladder"):
        try:
            kwargs["ladder"] = tuple(int(v) for v in args.ladder.split(",") if v)
        except ValueError:
            print("seqlab: ladder must be comma-separated integers", file=sys.stderr)
            return 2
    cfg = RunConfig(**kwargs)
    try:
        return _COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        print(f"seqlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
