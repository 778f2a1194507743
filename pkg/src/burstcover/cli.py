"""Command-line surface: radius, bounds, cover, table1, lfsr-stats, verify.

Exit codes: 0 all assertions pass, 2 bound violation, 3 fixture
mismatch, 4 budget exceeded.  JSON output is deterministic for a fixed
configuration and seed (keys sorted, no timestamps).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import gf2poly
from .codes import (
    load_descriptor,
    make_bch,
    make_cyclic_code,
    make_melas,
    parity_check_matrix,
)
from .corpus import build_corpus, exact_two_primitive_cases, mixed_degree_entries
from .covering import ThresholdError, burst_cover, verify_certificate
from .charsums import (
    gcd_power_inequality_check,
    laurent_family_check,
    niederreiter_check,
    pattern_theorem_check,
    wcu_family_check,
)
from .field import primitive_moduli
from .gf2poly import parse_poly, to_hex, to_terms
from .lfsr import LfsrSpec, lfsr_sequence, max_zero_run, orbit_representatives, pattern_count
from .radius import (
    BudgetError,
    bounds_report,
    cyclic_burst_radius,
    geometric_is_covering,
    matrix_burst_radius,
)

EXIT_OK = 0
EXIT_BOUND_VIOLATION = 2
EXIT_FIXTURE_MISMATCH = 3
EXIT_BUDGET = 4

# Expected exact radii and floored upper bounds for the two families,
# m = 6..11; regression fixture for the table1 command.
TABLE1_FIXTURE = {
    6: (9, 10, 10),
    7: (11, 11, 11),
    8: (12, 12, 13),
    9: (13, 14, 14),
    10: (14, 15, 16),
    11: (16, 16, 17),
}


def compute_table1(m_min: int = 6, m_max: int = 11, modulus=None,
                   sensitivity: bool = False) -> list[dict]:
    """Radii of BCH(2,m) and Melas(m) with the floored upper bound.

    With the default modulus, any fixture mismatch triggers a sweep over
    every primitive-modulus class of that degree; the row then reports
    which classes attain the fixture value and flags the dependence.
    """
    rows = []
    for m in range(m_min, m_max + 1):
        bch_code = make_bch(2, m, modulus)
        melas_code = make_melas(m, modulus)
        row = {
            "m": m,
            "bch": cyclic_burst_radius(bch_code).b,
            "melas": cyclic_burst_radius(melas_code).b,
            "upper": bounds_report(bch_code).entry("bch_upper").value,
            "modulus_hex": to_hex(bch_code.factors[0].ctx.modulus),
        }
        fixture = TABLE1_FIXTURE.get(m)
        if fixture is not None:
            row["fixture"] = {"bch": fixture[0], "melas": fixture[1], "upper": fixture[2]}
            mismatch = (row["bch"], row["melas"], row["upper"]) != fixture
            row["matches_fixture"] = not mismatch
            if mismatch or sensitivity:
                row["sensitivity"] = _modulus_sweep(m)
                attained = any(
                    (c["bch"], c["melas"]) == fixture[:2] for c in row["sensitivity"]
                )
                row["fixture_attained_by_some_class"] = attained
                if mismatch:
                    row["modulus_dependent"] = True
        rows.append(row)
    return rows


def _modulus_sweep(m: int) -> list[dict]:
    out = []
    for p in primitive_moduli(m):
        out.append({
            "modulus_hex": to_hex(p),
            "bch": cyclic_burst_radius(make_bch(2, m, p)).b,
            "melas": cyclic_burst_radius(make_melas(m, p)).b,
        })
    return out


def _table1_exit(rows: list[dict]) -> int:
    for row in rows:
        if "matches_fixture" not in row:
            continue
        if row["matches_fixture"]:
            continue
        if not row.get("fixture_attained_by_some_class"):
            return EXIT_FIXTURE_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing

def _add_code_args(p: argparse.ArgumentParser):
    p.add_argument("--code", help="path to a code descriptor JSON file")
    p.add_argument("--family", choices=["bch", "melas", "generic"])
    p.add_argument("--e", type=int, help="BCH designed-distance parameter")
    p.add_argument("--m", type=int, help="extension degree")
    p.add_argument("--n", type=int, help="code length (generic family)")
    p.add_argument("--g", help="generator polynomial (generic family)")
    p.add_argument("--modulus", help="field modulus override (primitive)")


def _resolve_code(args):
    sources = [args.code is not None, args.family is not None]
    if sum(sources) != 1:
        raise SystemExit("specify exactly one code source: --code or --family")
    if args.code:
        return load_descriptor(args.code)
    if args.family == "bch":
        if args.e is None or args.m is None:
            raise SystemExit("--family bch needs --e and --m")
        return make_bch(args.e, args.m, args.modulus)
    if args.family == "melas":
        if args.m is None:
            raise SystemExit("--family melas needs --m")
        return make_melas(args.m, args.modulus)
    if args.n is None or args.g is None:
        raise SystemExit("--family generic needs --n and --g")
    return make_cyclic_code(args.n, parse_poly(args.g), args.modulus)


def _emit(payload, fmt: str, plain_renderer=None) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2)
    if fmt == "csv":
        return _to_csv(payload)
    if plain_renderer is not None:
        return plain_renderer(payload)
    return json.dumps(payload, sort_keys=True, indent=2)


def _to_csv(payload) -> str:
    rows = payload if isinstance(payload, list) else [payload]
    flat = []
    for row in rows:
        flat.append({
            k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v
            for k, v in row.items()
        })
    keys = sorted({k for row in flat for k in row})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat)
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_radius(args) -> int:
    code = _resolve_code(args)
    if args.dump_matrix:
        for line in parity_check_matrix(code).hex_rows():
            print(line)
        return EXIT_OK
    cyclic = not args.linear
    if args.method == "orbit":
        if not cyclic:
            raise SystemExit("the orbit method computes the cyclic radius")
        result = cyclic_burst_radius(code)
    elif args.method == "matrix":
        result = matrix_burst_radius(parity_check_matrix(code), cyclic=cyclic,
                                     max_r=args.max_r)
    else:
        b = 1
        while not geometric_is_covering(code, b):
            b += 1
        from .radius import RadiusResult
        result = RadiusResult(b=b, method="geometric", witness=0, cyclic=True,
                              n=code.n, r=code.r)
    payload = {"code": code.describe(), **result.to_json()}
    print(_emit(payload, args.emit,
                lambda p: f"{p['code']}: burst-covering radius {p['b']} ({p['method']})"))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    code = _resolve_code(args)
    report = bounds_report(code)
    payload = report.to_json()
    rc = EXIT_OK
    if args.with_radius:
        b = cyclic_burst_radius(code).b
        payload["radius"] = b
        payload["violations"] = report.validate(b)
        if payload["violations"]:
            rc = EXIT_BOUND_VIOLATION

    def render(p):
        lines = [f"bounds for {p['code']} (n={p['n']}, r={p['r']})"]
        for ent in p["bounds"]:
            if not ent["applicable"]:
                continue
            raw = f" (raw {ent['raw']:.3f})" if ent.get("raw") is not None else ""
            lines.append(f"  {ent['name']:32s} {ent['kind']:5s} {ent['value']}{raw}")
        if "radius" in p:
            lines.append(f"  computed radius: {p['radius']}")
            for v in p["violations"]:
                lines.append(f"  VIOLATION: {v}")
        return "\n".join(lines)

    print(_emit(payload, args.emit if args.emit != "csv" else "json", render))
    return rc


def _cmd_cover(args) -> int:
    code = _resolve_code(args)
    x = int(args.syndrome, 16)
    b_prime = args.bprime if args.bprime is not None else cyclic_burst_radius(code).b
    cert = burst_cover(code, x, b_prime, debug=args.debug)
    ok = verify_certificate(code, x, cert, b_prime)
    payload = {**cert.to_json(), "verified": ok, "syndrome_hex": format(x, "#X").replace("0X", "0x"),
               "b_prime": b_prime}
    print(_emit(payload, args.emit,
                lambda p: f"window start {p['i']}, pattern {p['f_hex']} "
                          f"({to_terms(cert.f)}), width {p['width']}, verified={p['verified']}"))
    return EXIT_OK if ok else EXIT_BOUND_VIOLATION


def _cmd_table1(args) -> int:
    if not 6 <= args.m_min <= args.m_max <= 11:
        raise SystemExit("table1 covers 6 <= m <= 11")
    rows = compute_table1(args.m_min, args.m_max, args.modulus, args.sensitivity)

    def render(rows):
        lines = ["  m  BCH  Melas  Upper"]
        for row in rows:
            flag = ""
            if not row.get("matches_fixture", True):
                flag = "  [modulus-dependent]" if row.get(
                    "fixture_attained_by_some_class") else "  [MISMATCH]"
            lines.append(f"{row['m']:3d}  {row['bch']:3d}  {row['melas']:5d}"
                         f"  {row['upper']:5d}{flag}")
        return "\n".join(lines)

    if args.emit == "csv":
        slim = [{k: row[k] for k in ("m", "bch", "melas", "upper")} for row in rows]
        print(_to_csv(slim))
    else:
        print(_emit(rows, args.emit, render))
    return EXIT_OK if args.no_assert else _table1_exit(rows)


def _cmd_lfsr_stats(args) -> int:
    g = parse_poly(args.g)
    r = g.bit_length() - 1
    if args.init:
        inits = [tuple(int(b) for b in args.init.replace(",", ""))]
    elif args.orbit_reps:
        from .lfsr import LfsrSpec as _S
        inits = [tuple(lfsr_sequence(_S.from_galois(g, rep), r)) for rep in orbit_representatives(g)]
    else:
        raise SystemExit("give --init bits or --orbit-reps")
    rc = EXIT_OK
    for init in inits:
        spec = LfsrSpec(g, init)
        init_hex = to_hex(sum(b << i for i, b in enumerate(init)))
        if args.pattern:
            stats = pattern_count(spec, [int(b) for b in args.pattern],
                                  args.window or ((1 << r) - 1))
            print(json.dumps({"init": init_hex, **stats.to_json()}, sort_keys=True))
        else:
            bits = lfsr_sequence(spec, args.len or (1 << r) - 1)
            line = f"{init_hex} : {''.join(str(b) for b in bits)}"
            if args.zero_runs:
                line += f"  Z={max_zero_run(spec)}"
            print(line)
    return rc


def _cmd_verify(args) -> int:
    which = args.suite
    if which == "appendix":
        return _verify_appendix(args)
    if which == "equivalence":
        return _verify_equivalence(args)
    if which == "bounds":
        return _verify_bounds(args)
    if which == "patterns":
        return _verify_patterns(args)
    if which == "charsums":
        return _verify_charsums(args)
    raise SystemExit(f"unknown suite {which!r}")


def _print_report(payload, fmt):
    print(_emit(payload, fmt, lambda p: json.dumps(p, sort_keys=True, indent=2)))


def _verify_appendix(args) -> int:
    limit = args.max or 40
    failures = [(a, b) for a in range(1, limit + 1) for b in range(1, limit + 1)
                if not gcd_power_inequality_check(a, b)]
    payload = {
        "theorem": "power-gap inequality",
        "hypotheses": {"a_max": limit, "b_max": limit},
        "cases_checked": limit * limit,
        "violations": failures,
    }
    _print_report(payload, args.emit)
    return EXIT_OK if not failures else EXIT_BOUND_VIOLATION


def _verify_equivalence(args) -> int:
    nmax = args.nmax or 63
    mismatches = []
    checked = 0
    for entry in build_corpus():
        if entry.code.n > nmax:
            continue
        checked += 1
        b_orbit = cyclic_burst_radius(entry.code).b
        b_matrix = matrix_burst_radius(parity_check_matrix(entry.code)).b
        if b_orbit != b_matrix:
            mismatches.append({"code": entry.name, "orbit": b_orbit, "matrix": b_matrix})
        if entry.code.n <= 16:
            if not geometric_is_covering(entry.code, b_orbit) or (
                b_orbit > 1 and geometric_is_covering(entry.code, b_orbit - 1)
            ):
                mismatches.append({"code": entry.name, "geometric": "threshold mismatch"})
    payload = {
        "theorem": "radius method equivalence",
        "hypotheses": {"n_max": nmax},
        "cases_checked": checked,
        "violations": mismatches,
    }
    _print_report(payload, args.emit)
    return EXIT_OK if not mismatches else EXIT_BOUND_VIOLATION


def _verify_bounds(args) -> int:
    violations = []
    candidates = []
    checked = 0
    entries = build_corpus() + exact_two_primitive_cases()
    for entry in entries:
        code = entry.code
        b = cyclic_burst_radius(code).b
        report = bounds_report(code)
        checked += 1
        for msg in report.validate(b):
            violations.append({"code": entry.name, "violation": msg})
        # two-primitive products outside the exact-value hypotheses that
        # nevertheless attain the minimum are recorded, never asserted
        if len(code.factors) == 2:
            d1, d2 = sorted(f.degree for f in code.factors)
            both_prim = all(gf2poly.is_primitive(f.poly) for f in code.factors)
            ent = next((x for x in report.entries if x.name == "two_primitive_exact"), None)
            if (ent is not None and not ent.applicable and both_prim
                    and d1 < d2 and b == d2 + 1):
                candidates.append({"code": entry.name, "b": b})
    payload = {
        "theorem": "bound sandwich",
        "hypotheses": {"codes": checked},
        "cases_checked": checked,
        "violations": violations,
        "exactness_candidates_outside_hypotheses": candidates,
    }
    _print_report(payload, args.emit)
    return EXIT_OK if not violations else EXIT_BOUND_VIOLATION


def _verify_patterns(args) -> int:
    reports = []
    rc = EXIT_OK
    family = args.family or "bch"
    if family in ("bch", "melas"):
        m = args.m or 6
        code = make_bch(2, m) if family == "bch" else make_melas(m)
        variant = "equal_degree" if family == "bch" else "melas_mixed"
        s_max = args.s_max or m
        for s in range(1, s_max + 1):
            rep = pattern_theorem_check(code, variant, s)
            reports.append(rep.to_json())
            if rep.applicable and not rep.ok:
                rc = EXIT_BOUND_VIOLATION
        if args.find_avoidance:
            from .charsums import find_avoidance_witness

            hit = find_avoidance_witness(code, args.find_avoidance)
            reports.append({
                "avoidance_search": {"s": args.find_avoidance},
                "witness": None if hit is None else
                {"load_hex": to_hex(hit[0]), "pattern": hit[1]},
                "ok": True,  # informational: nothing is asserted
            })
        cases = sum(r.get("cases_checked", 0) for r in reports)
    else:  # mixed: the classical per-period bound on the mixed-degree corpus
        cases = 0
        for entry in mixed_degree_entries():
            dmin = min(f.degree for f in entry.code.factors)
            for rep_load in orbit_representatives(entry.code.g):
                spec = LfsrSpec.from_galois(entry.code.g, rep_load)
                for s in range(1, dmin + 1):
                    rep = niederreiter_check(spec, s)
                    if not rep.applicable:
                        continue
                    cases += rep.cases_checked
                    if rep.violations:
                        reports.append({"code": entry.name, "load": rep_load,
                                        **rep.to_json()})
                        rc = EXIT_BOUND_VIOLATION
    payload = {
        "theorem": f"pattern frequencies ({family})",
        "hypotheses": {"family": family, "m": args.m, "s_max": args.s_max},
        "cases_checked": cases,
        "violations": [r for r in reports if not r.get("ok", True)],
        "reports": reports,
    }
    _print_report(payload, args.emit)
    return rc


def _verify_charsums(args) -> int:
    m_max = args.m_max or 8
    draws = args.draws or 200
    seed = args.seed if args.seed is not None else 0
    reports = []
    rc = EXIT_OK
    for m in range(2, m_max + 1):
        rep = wcu_family_check(m)
        reports.append(rep.to_json())
        if not rep.ok:
            rc = EXIT_BOUND_VIOLATION
    cases = sum(r["cases_checked"] for r in reports)
    for m in range(2, (args.laurent_m_max or 10) + 1):
        for t in (1, 3, 5):
            for u in (1, 3, 5):
                rep = laurent_family_check(m, t, u, draws, seed)
                cases += rep.cases_checked
                if not rep.ok:
                    reports.append(rep.to_json())
                    rc = EXIT_BOUND_VIOLATION
    payload = {
        "theorem": "character-sum bounds",
        "hypotheses": {"m_max": m_max, "draws": draws, "seed": seed,
                       "laurent_violations_only": True},
        "cases_checked": cases,
        "violations": [r for r in reports if not r.get("ok", True)],
        "reports": reports,
    }
    _print_report(payload, args.emit)
    return rc


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burstcover",
        description="burst-covering radius toolkit for binary cyclic codes",
    )
    parser.add_argument("--workers", type=int,
                        default=int(os.environ.get("BURSTCOVER_WORKERS", "1")),
                        help="worker budget (accepted for compatibility; "
                             "computation is single-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="compute the burst-covering radius")
    _add_code_args(p)
    p.add_argument("--method", choices=["orbit", "matrix", "geometric"], default="orbit")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--cyclic", action="store_true", help="cyclic windows (default)")
    grp.add_argument("--linear", action="store_true", help="non-cyclic windows")
    p.add_argument("--max-r", type=int, default=24)
    p.add_argument("--dump-matrix", action="store_true",
                   help="print the parity-check matrix, one hex row per line")
    p.add_argument("--emit", choices=["json", "csv", "plain"], default="plain")

    p = sub.add_parser("bounds", help="evaluate every applicable bound")
    _add_code_args(p)
    p.add_argument("--with-radius", action="store_true")
    p.add_argument("--emit", choices=["json", "csv", "plain"], default="plain")

    p = sub.add_parser("cover", help="produce a covering certificate")
    _add_code_args(p)
    p.add_argument("--syndrome", required=True, help="hex syndrome")
    p.add_argument("--bprime", type=int)
    p.add_argument("--debug", action="store_true")
    p.add_argument("--emit", choices=["json", "csv", "plain"], default="plain")

    p = sub.add_parser("table1", help="radii of BCH(2,m) and Melas(m), m=6..11")
    p.add_argument("--m-min", type=int, default=6)
    p.add_argument("--m-max", type=int, default=11)
    p.add_argument("--modulus")
    p.add_argument("--sensitivity", action="store_true",
                   help="sweep every primitive-modulus class")
    p.add_argument("--no-assert", action="store_true")
    p.add_argument("--emit", choices=["json", "csv", "plain"], default="plain")

    p = sub.add_parser("lfsr-stats", help="dump sequences and pattern counts")
    p.add_argument("--g", required=True)
    p.add_argument("--init", help="initial bits, e.g. 1,0,0")
    p.add_argument("--orbit-reps", action="store_true",
                   help="one sequence per shift-orbit")
    p.add_argument("--len", type=int)
    p.add_argument("--pattern", help="bit string to count")
    p.add_argument("--window", type=int)
    p.add_argument("--zero-runs", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["bounds", "patterns", "charsums",
                                     "appendix", "equivalence"])
    p.add_argument("--max", type=int, help="appendix: max a, b")
    p.add_argument("--nmax", type=int, help="equivalence: max code length")
    p.add_argument("--family", choices=["bch", "melas", "mixed"])
    p.add_argument("--m", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--find-avoidance", type=int, metavar="S",
                   help="also search for a sequence missing some length-S "
                        "pattern (informational)")
    p.add_argument("--m-max", type=int)
    p.add_argument("--laurent-m-max", type=int)
    p.add_argument("--draws", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--emit", choices=["json", "csv", "plain"], default="json")

    return parser


_DISPATCH = {
    "radius": _cmd_radius,
    "bounds": _cmd_bounds,
    "cover": _cmd_cover,
    "table1": _cmd_table1,
    "lfsr-stats": _cmd_lfsr_stats,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers < 1:
        raise SystemExit("--workers must be >= 1")
    try:
        return _DISPATCH[args.command](args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ThresholdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
