#!/usr/bin/env python3
"""Tabulate the built-in corpus: parameters, exact radius, bound window.

Useful for eyeballing how tight the individual bounds are across
structurally different codes.
"""

from burstcover.corpus import build_corpus, exact_two_primitive_cases
from burstcover.radius import bounds_report, cyclic_burst_radius


def main():
    print(f"{'code':18s} {'n':>5s} {'r':>3s} {'b':>3s}  lower..upper  tight")
    for entry in build_corpus() + exact_two_primitive_cases():
        code = entry.code
        b = cyclic_burst_radius(code).b
        report = bounds_report(code)
        lowers = [e.value for e in report.entries
                  if e.applicable and e.kind == "lower" and b >= e.assumes_b_at_least]
        uppers = [e.value for e in report.entries
                  if e.applicable and e.kind in ("upper", "exact")]
        lo, up = max(lowers), min(uppers)
        tight = "=" if lo == b == up else ("lo" if lo == b else ("up" if up == b else ""))
        assert lo <= b <= up, entry.name
        print(f"{entry.name:18s} {code.n:5d} {code.r:3d} {b:3d}  {lo:5d}..{up:<5d}  {tight}")


if __name__ == "__main__":
    main()
