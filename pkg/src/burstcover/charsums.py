"""Exponential sums over GF(2^m) and empirical checks of frequency bounds.

The canonical additive character is chi(v) = (-1)^Tr(v).  Every verdict
here is computed in exact integer arithmetic: a bound of the shape
|S| <= c * 2^(m/2) is tested as S^2 <= c^2 * 2^m, so half-integer powers
of two never touch floating point.  Floats appear only in reports, for
human consumption.

Checked bounds:

* Weil-Carlitz-Uchiyama for odd-degree polynomials: (deg-1) * sqrt(q).
* Its rational-function extension for Laurent forms with odd positive
  and negative exponents: (t_top + u_top) * sqrt(q) over nonzero x.
* Niederreiter's pattern-frequency bound over one minimal period.
* The sharper pattern bounds for connection polynomials splitting into
  equal-degree factors (exponent labels all odd, or split into positive
  and negative groups), counted over windows of length 2^m - 1.
* The pattern-presence guarantees derived from those bounds.
* The exact power inequality supporting the two-primitive-factor case.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass

import numpy as np

from .codes import CyclicCode, make_cyclic_code
from .field import FieldContext, get_context, min_odd_coset_member
from .gf2poly import poly_order
from .lfsr import (
    LfsrSpec,
    fibonacci_to_galois,
    minimal_connection,
    orbit_representatives,
    window_histogram,
)


@dataclass(frozen=True)
class LaurentExponentForm:
    """sum(a_i x^(t_i)) + sum(b_j x^(-u_j)) with odd increasing exponents."""

    positive: tuple[tuple[int, int], ...]  # (coefficient mask, exponent)
    negative: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for terms in (self.positive, self.negative):
            exps = [t for _, t in terms]
            if any(t < 1 or t % 2 == 0 for t in exps):
                raise ValueError("exponents must be odd positive integers")
            if sorted(exps) != exps or len(set(exps)) != len(exps):
                raise ValueError("exponents must be strictly increasing")
            if any(c == 0 for c, _ in terms):
                raise ValueError("coefficients must be nonzero")

    @property
    def t_top(self) -> int:
        return self.positive[-1][1] if self.positive else 0

    @property
    def u_top(self) -> int:
        return self.negative[-1][1] if self.negative else 0


@functools.lru_cache(maxsize=None)
def _np_tables(ctx: FieldContext):
    exp = np.array(ctx.exp, dtype=np.int64)
    trace = np.zeros(ctx.n + 1, dtype=np.int8)
    for v in range(ctx.n + 1):
        trace[v] = ctx.trace(v)
    return exp, trace


def char_sum(ctx: FieldContext, form: LaurentExponentForm, domain: str = "nonzero") -> int:
    """Exact sum of chi(f(x)) over the field or its nonzero elements."""
    if domain not in ("all", "nonzero"):
        raise ValueError("domain is 'all' or 'nonzero'")
    if form.negative and domain == "all":
        raise ValueError("the form has a pole at zero; use domain='nonzero'")
    if any(c > ctx.n for c, _ in form.positive + form.negative):
        raise ValueError("coefficient mask out of range for the field")
    n = ctx.n
    exp_np, trace = _np_tables(ctx)
    k = np.arange(n, dtype=np.int64)
    vals = np.zeros(n, dtype=np.int64)
    for c, t in form.positive:
        vals ^= exp_np[(ctx.log[c] + t * k) % n]
    for c, u in form.negative:
        vals ^= exp_np[(ctx.log[c] - u * k) % n]
    s = int(n - 2 * trace[vals].sum())
    if domain == "all":
        s += 1  # f(0) = 0 for a polynomial form with positive exponents
    return s


def char_sum_poly(ctx: FieldContext, coeffs) -> int:
    """Sum of chi(f(x)) over all x, f given by field coefficients c_0..c_d."""
    total = 0
    for x in range(ctx.n + 1):
        acc = 0
        for c in reversed(list(coeffs)):
            acc = ctx.mul(acc, x) ^ c
        total += 1 - 2 * ctx.trace(acc)
    return total


@dataclass(frozen=True)
class SumCheck:
    sum: int
    bound: float
    ok: bool
    applicable: bool = True
    note: str = ""

    def to_json(self) -> dict:
        return dict(self.__dict__)


def wcu_check(ctx: FieldContext, coeffs) -> SumCheck:
    """Weil bound |sum chi(f(x))| <= (deg f - 1) sqrt(q) for odd deg f."""
    coeffs = list(coeffs)
    if any(not 0 <= c <= ctx.n for c in coeffs):
        raise ValueError("coefficient mask out of range for the field")
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1 or deg % 2 == 0:
        return SumCheck(0, 0.0, ok=True, applicable=False,
                        note="degree must be odd and positive in characteristic 2")
    s = char_sum_poly(ctx, coeffs)
    ok = s * s <= (deg - 1) ** 2 << ctx.m
    return SumCheck(s, (deg - 1) * math.sqrt(2**ctx.m), ok)


def laurent_weil_check(ctx: FieldContext, form: LaurentExponentForm) -> SumCheck:
    """Rational Weil bound |sum over nonzero x| <= (t_top + u_top) sqrt(q)."""
    if not form.negative:
        # no pole at zero: plain polynomial route
        coeffs = [0] * (form.t_top + 1)
        for c, t in form.positive:
            coeffs[t] = c
        return wcu_check(ctx, coeffs)
    if not form.positive:
        return SumCheck(0, 0.0, ok=True, applicable=False,
                        note="needs at least one positive-exponent term")
    s = char_sum(ctx, form, domain="nonzero")
    c = form.t_top + form.u_top
    ok = s * s <= c * c << ctx.m
    return SumCheck(s, c * math.sqrt(2**ctx.m), ok)


# ---------------------------------------------------------------------------
# pattern-frequency checks

@dataclass(frozen=True)
class FrequencyReport:
    name: str
    s: int
    window: int
    sequences_checked: int
    cases_checked: int
    violations: tuple
    vacuous: bool = False
    applicable: bool = True
    note: str = ""
    guaranteed_s: int | None = None
    corollary_misses: tuple = ()
    stronger_bound_sequences: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations and not self.corollary_misses

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def niederreiter_check(spec: LfsrSpec, s: int) -> FrequencyReport:
    """Frequency bound over one minimal period of the sequence.

    For every pattern y of length s <= (min factor degree of the minimal
    polynomial): |N - pi/2^s| <= (1 - 2^-s) * 2^(r/2).  The report flags
    the bound as vacuous when its lower bound on N is not positive.
    """
    from . import gf2poly

    gmin = minimal_connection(spec)
    if gmin == 1:
        raise ValueError("the all-zero sequence is excluded")
    rmin = gmin.bit_length() - 1
    min_factor_degree = min(d for _, d in gf2poly.classify(gmin).distinct_irreducible_factors)
    if s < 1 or s > min_factor_degree:
        return FrequencyReport(
            "niederreiter", s, 0, 0, 0, (), applicable=False,
            note=f"s must be in [1, {min_factor_degree}] for this sequence",
        )
    pi = poly_order(gmin)
    load = fibonacci_to_galois(spec.connection, spec.init)
    counts = window_histogram(spec.connection, load, s, pi)
    lhs_bound_sq = ((1 << s) - 1) ** 2 << rmin
    violations = []
    for y in range(1 << s):
        d = (counts[y] << s) - pi
        if d * d > lhs_bound_sq:
            violations.append((y, counts[y]))
    vacuous = pi * pi <= lhs_bound_sq
    return FrequencyReport(
        "niederreiter", s, pi, 1, 1 << s, tuple(violations), vacuous=vacuous,
        note=f"minimal polynomial degree {rmin}, period {pi}",
    )


def _positive_odd_exponents(code: CyclicCode) -> list[int]:
    n = code.factors[0].ctx.n
    out = []
    for f in code.factors:
        if f.exponent is None:
            raise ValueError("factor exponents unresolved")
        t = f.exponent
        out.append(t if t >= 1 and t % 2 == 1 else min_odd_coset_member(t, n))
    return out


def _as_code(code_or_g) -> CyclicCode:
    if isinstance(code_or_g, CyclicCode):
        return code_or_g
    g = code_or_g
    return make_cyclic_code(poly_order(g), g)


def pattern_theorem_check(code_or_g, variant: str, s: int,
                          check_corollary: bool = True,
                          all_loads: bool = False) -> FrequencyReport:
    """Sharper pattern bounds for equal-degree connection polynomials.

    Counts every length-s pattern in a window of 2^m - 1 terms of every
    nonzero sequence.  One orbit representative per cyclic shift class
    suffices because counts over a full window are shift invariant;
    all_loads=True disables that optimization and sweeps every nonzero
    initial load.

    variant "equal_degree" uses bound (1 - 2^-s)((max t - 1) 2^(m/2) + 1)
    with all root exponents made odd positive; it needs max t >= 3.
    variant "melas_mixed" uses (1 - 2^-s)(max t + max u) 2^(m/2) with the
    signed exponents split into positive t's and negated u's; it also
    reports how many sequences satisfy the positive-only bound, which is
    sharper whenever the negative-exponent components are inactive.
    """
    code = _as_code(code_or_g)
    degrees = {f.degree for f in code.factors}
    if len(degrees) != 1:
        return FrequencyReport(variant, s, 0, 0, 0, (), applicable=False,
                               note="factors must share one degree")
    m = degrees.pop()
    ctx = code.factors[0].ctx
    if not ctx.primitive or len({f.ctx for f in code.factors}) != 1:
        return FrequencyReport(variant, s, 0, 0, 0, (), applicable=False,
                               note="factors must share one primitive field context")
    if not 1 <= s <= m:
        return FrequencyReport(variant, s, 0, 0, 0, (), applicable=False,
                               note=f"s must be in [1, {m}]")
    window = (1 << m) - 1

    if variant == "equal_degree":
        ts = _positive_odd_exponents(code)
        t_max = max(ts)
        if t_max < 3:
            return FrequencyReport(variant, s, window, 0, 0, (), applicable=False,
                                   note="max exponent 1 gives a PN sequence; bound not needed")
        # |2^s N - (2^m - 1)| <= (2^s - 1)((t_max - 1) 2^(m/2) + 1)
        slack = (1 << s) - 1
        main_sq = (slack * (t_max - 1)) ** 2 << m
        guaranteed = _guaranteed_pattern_length(m, t_max - 1) if check_corollary else None

        def within(dev: int) -> bool:
            d = abs(dev) - slack
            return d <= 0 or d * d <= main_sq

        stronger = None
    elif variant == "melas_mixed":
        n = ctx.n
        ts = [f.exponent for f in code.factors if f.exponent is not None and f.exponent > 0]
        us = [-f.exponent for f in code.factors if f.exponent is not None and f.exponent < 0]
        if not ts or not us:
            return FrequencyReport(variant, s, window, 0, 0, (), applicable=False,
                                   note="needs both positive and negative exponents")
        if any(t % 2 == 0 for t in ts) or any(u % 2 == 0 for u in us):
            return FrequencyReport(variant, s, window, 0, 0, (), applicable=False,
                                   note="exponents must be odd")
        t_max, u_max = max(ts), max(us)
        slack = (1 << s) - 1
        main_sq = (slack * (t_max + u_max)) ** 2 << m
        guaranteed = _guaranteed_pattern_length(m, t_max + u_max) if check_corollary else None

        def within(dev: int) -> bool:
            return dev * dev <= main_sq

        # sharper positive-only bound, relevant when the negative parts idle
        st_max = max(ts)
        st_sq = (slack * (st_max - 1)) ** 2 << m

        def within_stronger(dev: int) -> bool:
            d = abs(dev) - slack
            return d <= 0 or d * d <= st_sq

        stronger = 0
    else:
        raise ValueError(f"unknown variant {variant!r}")

    if all_loads:
        reps = range(1, 1 << code.r)
    else:
        reps = orbit_representatives(code.g)
    violations = []
    misses = []
    cases = 0
    for rep in reps:
        counts = window_histogram(code.g, rep, s, window)
        seq_ok_stronger = True
        for y in range(1 << s):
            cases += 1
            dev = (counts[y] << s) - window
            if not within(dev):
                violations.append((rep, y, counts[y]))
            if stronger is not None and not within_stronger(dev):
                seq_ok_stronger = False
            if guaranteed is not None and s <= guaranteed and counts[y] == 0:
                misses.append((rep, y))
        if stronger is not None and seq_ok_stronger:
            stronger += 1
    return FrequencyReport(
        variant, s, window, len(reps), cases, tuple(violations),
        guaranteed_s=guaranteed, corollary_misses=tuple(misses),
        stronger_bound_sequences=stronger,
        note=f"m={m}, exponents={[f.exponent for f in code.factors]}",
    )


def _guaranteed_pattern_length(m: int, weight: int) -> int:
    """Largest s with s <= m/2 - log2(weight); 0 when none exists."""
    s = 0
    while (weight << (s + 1)) ** 2 <= 1 << m:
        s += 1
    return s


def find_avoidance_witness(code_or_g, s: int):
    """A nonzero sequence missing some length-s pattern, or None.

    Such witnesses bound how far the pattern-presence guarantee can be
    pushed; this only searches and asserts nothing about existence.
    Returns (initial load, pattern index) for the first missing pair.
    """
    code = _as_code(code_or_g)
    m = max(f.degree for f in code.factors)
    window = (1 << m) - 1
    for rep in orbit_representatives(code.g):
        counts = window_histogram(code.g, rep, s, window)
        for y in range(1 << s):
            if counts[y] == 0:
                return rep, y
    return None


def pattern_count_via_charsums(ctx: FieldContext, terms, y) -> int:
    """Occurrences of pattern y recomputed through the character expansion.

    terms is a list of (gamma mask, signed exponent t) describing the
    sequence a_k = sum_i Tr(gamma_i alpha^(t_i k)).  The count over a
    window of 2^m - 1 positions expands into 2^-s (2^m - 1 + a signed
    combination of character sums), which this evaluates exactly.
    """
    y = tuple(int(b) for b in y)
    s = len(y)
    n = ctx.n
    total = n  # the J = empty set term
    for J in range(1, 1 << s):
        sign = (-1) ** sum(y[j] for j in range(s) if J >> j & 1)
        coefs = []
        for gamma, t in terms:
            c = 0
            for j in range(s):
                if J >> j & 1:
                    c ^= ctx.alpha_pow(t * j)
            coefs.append((ctx.mul(gamma, c), t))
        inner = 0
        for x_log in range(n):
            acc = 0
            for c, t in coefs:
                acc ^= ctx.mul(c, ctx.alpha_pow(t * x_log))
            inner += 1 - 2 * ctx.trace(acc)
        total += sign * inner
    if total % (1 << s):
        raise AssertionError("character expansion did not yield an integer count")
    return total >> s


# ---------------------------------------------------------------------------
# exact power inequality

def gcd_power_inequality_check(a: int, b: int) -> bool:
    """1 + (2^a-1)(2^b-1) / ((2^c-1) 2^((a+b)/2)) > 2^((a+b)/2 - c), c = gcd(a,b).

    Cleared of denominators this is
    2^c (2^c-1) 2^((a+b)/2) + 2^(a+b) + 2^c > 2^(a+c) + 2^(b+c);
    an odd a+b leaves a single sqrt(2) factor, removed by squaring the
    positive parts, so the verdict is exact.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    c = math.gcd(a, b)
    h = a + b
    p = (1 << h) + (1 << c)
    rhs = (1 << (a + c)) + (1 << (b + c))
    q = ((1 << c) - 1) << (c + h // 2)
    if h % 2 == 0:
        return p + q > rhs
    if p >= rhs:
        return True
    gap = rhs - p
    return 2 * q * q > gap * gap


# ---------------------------------------------------------------------------
# exhaustive / sampled family checks used by the verification suites

@dataclass(frozen=True)
class FamilyCheckReport:
    name: str
    hypotheses: dict
    cases_checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def wcu_family_check(m: int) -> FamilyCheckReport:
    """Weil bound over every monic odd-degree polynomial of degree <= 5.

    Squaring maps chi(a x^(2k)) to chi(sqrt(a) x^k), so every monic
    polynomial of degree 1, 3 or 5 has the same absolute character sum
    as a reduced form x^5 + b x^3 + c x (or x^3 + c x, or x) for some
    field elements b, c, up to the sign contributed by the constant
    term.  Sweeping all (b, c) therefore covers the whole family, and
    the verdicts stay exact: sums are integer matrix products.
    """
    ctx = get_context(m)
    n = ctx.n
    exp_np, trace = _np_tables(ctx)
    k = np.arange(n, dtype=np.int64)

    def sign_rows(t: int) -> np.ndarray:
        """Row c: chi(c * x^t) over nonzero x; c = 0 then alpha^0..alpha^(n-1)."""
        rows = np.empty((n + 1, n), dtype=np.int64)
        rows[0] = 1
        idx = (np.arange(n, dtype=np.int64)[:, None] + t * k[None, :]) % n
        rows[1:] = 1 - 2 * trace[exp_np[idx]]
        return rows

    s1 = sign_rows(1)
    s3 = sign_rows(3)
    s5_monic = 1 - 2 * trace[exp_np[(5 * k) % n]].astype(np.int64)
    s3_monic = 1 - 2 * trace[exp_np[(3 * k) % n]].astype(np.int64)

    violations = []
    cases = 0

    # degree 1: x + c has sum 0 over the whole field
    sums1 = 1 + s1[1:].sum(axis=1)
    cases += n + 1
    if int(s1[0].sum()) + 1 != 1 << m or not (sums1 == 0).all():
        violations.append(("deg1", "nonzero sum"))

    # degree 3: x^3 + c x, bound (3-1)^2 * 2^m
    sums3 = 1 + s1 @ s3_monic
    cases += n + 1
    bad = np.flatnonzero(sums3 * sums3 > 4 << m)
    violations.extend(("deg3", int(i)) for i in bad)

    # degree 5: x^5 + b x^3 + c x, bound (5-1)^2 * 2^m
    weighted = s3 * s5_monic[None, :]
    sums5 = 1 + weighted @ s1.T
    cases += (n + 1) ** 2
    bad_b, bad_c = np.nonzero(sums5 * sums5 > 16 << m)
    violations.extend(("deg5", int(b), int(c)) for b, c in zip(bad_b, bad_c))

    return FamilyCheckReport(
        name="weil_polynomial_bound",
        hypotheses={"m": m, "degrees": [1, 3, 5], "reduced_forms": True},
        cases_checked=cases,
        violations=tuple(violations),
    )


def laurent_family_check(m: int, t: int, u: int, draws: int, seed: int) -> FamilyCheckReport:
    """Sampled check of the Laurent bound for forms a x^t + b x^(-u)."""
    ctx = get_context(m)
    n = ctx.n
    exp_np, trace = _np_tables(ctx)
    k = np.arange(n, dtype=np.int64)
    rng = random.Random(seed)
    bound_sq = (t + u) ** 2 << m
    violations = []
    for _ in range(draws):
        a = rng.randrange(1, n + 1)
        b = rng.randrange(1, n + 1)
        vals = exp_np[(ctx.log[a] + t * k) % n] ^ exp_np[(ctx.log[b] - u * k) % n]
        s = int(n - 2 * int(trace[vals].sum()))
        if s * s > bound_sq:
            violations.append((a, b, s))
    return FamilyCheckReport(
        name="laurent_weil_bound",
        hypotheses={"m": m, "t": t, "u": u, "draws": draws, "seed": seed},
        cases_checked=draws,
        violations=tuple(violations),
    )
