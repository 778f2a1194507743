"""LFSR sequences, Galois-mode state walks, zero runs and pattern counts.

A connection polynomial g = X^r + sum(m_i X^i) drives the recurrence
a_k = sum(m_i * a_{k-r+i}).  The same sequences arise as the top
coefficient of the Galois-mode state X^k * f mod g, where the initial
load f and the initial conditions (a_0..a_{r-1}) determine each other
through a triangular linear system.

Run lengths and pattern counts are taken over the periodic sequence:
one minimal period read cyclically, with window reads past the end
continuing into the next period.  The all-zero sequence is excluded
from every statistic (its zero run is unbounded).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2poly
from .field import FieldElement, find_root, get_context
from .gf2poly import gcd, is_square_free, poly_order, quot, shift_mod


@dataclass(frozen=True)
class LfsrSpec:
    """A connection polynomial with Fibonacci initial conditions."""

    connection: int
    init: tuple[int, ...]

    def __post_init__(self):
        r = self.connection.bit_length() - 1
        if r < 1:
            raise ValueError("connection polynomial must have degree >= 1")
        if len(self.init) != r:
            raise ValueError(f"need exactly {r} initial bits")
        if any(b not in (0, 1) for b in self.init):
            raise ValueError("initial conditions are bits")

    @property
    def order(self) -> int:
        return self.connection.bit_length() - 1

    @classmethod
    def from_galois(cls, g: int, f: int) -> "LfsrSpec":
        """Spec whose sequence equals the Galois-mode output for load f."""
        r = g.bit_length() - 1
        if f.bit_length() > r:
            raise ValueError("initial load must have degree < deg(g)")
        _, out = galois_run(g, f, r)
        return cls(g, tuple(out))


def lfsr_sequence(spec: LfsrSpec, length: int) -> list[int]:
    """First `length` terms of the sequence, as a list of bits."""
    r = spec.order
    taps = spec.connection & ((1 << r) - 1)
    out = list(spec.init[:length])
    state = 0
    for j, b in enumerate(spec.init):
        state |= b << j
    for _ in range(len(out), length):
        b = (state & taps).bit_count() & 1
        out.append(b)
        state = (state >> 1) | (b << (r - 1))
    return out


def galois_run(g: int, f: int, steps: int) -> tuple[list[int], list[int]]:
    """States X^k * f mod g and their top coefficients, k < steps."""
    r = g.bit_length() - 1
    if r < 1:
        raise ValueError("connection polynomial must have degree >= 1")
    if f.bit_length() > r:
        raise ValueError("initial load must have degree < deg(g)")
    states = []
    out = []
    top = r - 1
    for _ in range(steps):
        states.append(f)
        out.append(f >> top & 1)
        f = shift_mod(f, g)
    return states, out


def fibonacci_to_galois(g: int, init) -> int:
    """The Galois load whose output reproduces the given initial bits."""
    r = g.bit_length() - 1
    init = tuple(init)
    if len(init) != r:
        raise ValueError(f"need exactly {r} initial bits")
    f = 0
    for k in range(r):
        b = init[k]
        for j in range(k):
            if init[j] and g >> (r - k + j) & 1:
                b ^= 1
        if b:
            f |= 1 << (r - 1 - k)
    return f


def minimal_connection(spec: LfsrSpec) -> int:
    """Minimal connection polynomial of the sequence: g / gcd(load, g)."""
    if spec.connection & 1 == 0:
        raise ValueError("periodic statistics need a connection with g(0) = 1")
    f = fibonacci_to_galois(spec.connection, spec.init)
    if f == 0:
        return 1
    return quot(spec.connection, gcd(spec.connection, f))


def minimal_period(spec: LfsrSpec) -> int:
    """Minimal period of the sequence (init not all-zero)."""
    gmin = minimal_connection(spec)
    if gmin == 1:
        raise ValueError("the all-zero sequence has no period statistics")
    return poly_order(gmin)


def max_zero_run(spec: LfsrSpec) -> int:
    """Longest run of zeros in the periodic sequence, read cyclically."""
    pi = minimal_period(spec)
    bits = lfsr_sequence(spec, pi)
    best = cur = 0
    for b in bits:
        if b:
            cur = 0
        else:
            cur += 1
            if cur > best:
                best = cur
    if bits[0] == 0 and bits[-1] == 0 and best < pi:
        # wrap the trailing run into the leading one
        lead = next(i for i, b in enumerate(bits) if b)
        tail = next(i for i, b in enumerate(reversed(bits)) if b)
        best = max(best, lead + tail)
    return best


@dataclass(frozen=True)
class PatternStats:
    pattern: tuple[int, ...]
    window_length: int
    count: int
    positions: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {
            "pattern": "".join(str(b) for b in self.pattern),
            "window": self.window_length,
            "count": self.count,
        }


def pattern_count(spec: LfsrSpec, y, window_length: int, positions: bool = True) -> PatternStats:
    """Occurrences of pattern y at starts k < window_length.

    Reads continue past the window into the periodic sequence, so a
    window equal to one period counts cyclic occurrences.
    """
    y = tuple(int(b) for b in y)
    s = len(y)
    if s < 1:
        raise ValueError("pattern must be nonempty")
    if window_length < 1:
        raise ValueError("window length must be >= 1")
    if not any(spec.init):
        raise ValueError("the all-zero sequence is excluded")
    bits = lfsr_sequence(spec, window_length + s - 1)
    target = sum(b << j for j, b in enumerate(y))
    mask = (1 << s) - 1
    w = sum(bits[j] << j for j in range(s))
    hits = []
    for k in range(window_length):
        if w == target:
            hits.append(k)
        if k + 1 < window_length:
            w = (w >> 1) | (bits[k + s] << (s - 1))
    return PatternStats(y, window_length, len(hits), tuple(hits) if positions else None)


def window_histogram(g: int, load: int, s: int, window_length: int) -> list[int]:
    """Counts of every length-s pattern over the Galois output for `load`.

    Index j of the result counts the pattern whose bit i is (j >> i) & 1.
    One rolling pass, so checking all 2^s patterns costs one sequence
    generation instead of 2^s.
    """
    _, bits = galois_run(g, load, window_length + s - 1)
    counts = [0] * (1 << s)
    w = sum(bits[j] << j for j in range(s))
    for k in range(window_length):
        counts[w] += 1
        if k + 1 < window_length:
            w = (w >> 1) | (bits[k + s] << (s - 1))
    return counts


def orbit_representatives(g: int) -> list[int]:
    """One representative per orbit of nonzero loads under f -> X*f mod g.

    The representative is the smallest member as an integer.  Requires g
    square-free with g(0) = 1, so the shift map is a permutation.
    """
    if g & 1 == 0:
        raise ValueError("g must have nonzero constant term")
    if not is_square_free(g):
        raise ValueError("g must be square-free")
    r = g.bit_length() - 1
    size = 1 << r
    seen = bytearray(size)
    reps = []
    for start in range(1, size):
        if seen[start]:
            continue
        reps.append(start)
        f = start
        while True:
            seen[f] = 1
            f = shift_mod(f, g)
            if f == start:
                break
    return reps


def orbit_size(g: int, f: int) -> int:
    """Length of the orbit of load f: the order of g / gcd(f, g)."""
    if f == 0:
        return 1
    return poly_order(quot(g, gcd(g, f)))


def trace_representation(spec: LfsrSpec, verify: bool = True) -> list[tuple[int, FieldElement]]:
    """Coefficients gamma_i with a_k = sum_i Tr(gamma_i * beta_i^k).

    beta_i is a fixed root of the i-th irreducible factor of the
    connection polynomial, taken in the default field of its degree.
    The gamma_i are found by solving the r x r linear system given by
    the first r sequence terms, then checked by regenerating the first
    ord(g) + r terms.
    """
    g = spec.connection
    if not is_square_free(g):
        raise ValueError("trace form needs a square-free connection polynomial")
    if g & 1 == 0:
        raise ValueError("g must have nonzero constant term")
    r = spec.order
    parts = []  # (factor, ctx, root)
    for h, _ in gf2poly.factor(g):
        ctx = get_context(h.bit_length() - 1)
        parts.append((h, ctx, find_root(ctx, h)))

    # columns indexed by (factor, basis bit); rows by time step
    cols = []
    for _, ctx, beta in parts:
        pw = 1
        col_block = [[0] * r for _ in range(ctx.m)]
        for k in range(r):
            for l in range(ctx.m):
                col_block[l][k] = ctx.trace(ctx.mul(1 << l, pw))
            pw = ctx.mul(pw, beta)
        cols.extend(col_block)
    rows = []
    for k in range(r):
        mask = 0
        for j in range(r):
            mask |= cols[j][k] << j
        rows.append((mask, spec.init[k]))

    solution = _solve_gf2(rows, r)
    gammas = []
    pos = 0
    for h, ctx, beta in parts:
        gamma = 0
        for l in range(ctx.m):
            gamma |= ((solution >> pos) & 1) << l
            pos += 1
        gammas.append((h, FieldElement(ctx, gamma)))

    if verify:
        total = poly_order(g) + r
        regen = regenerate_from_trace(gammas, total)
        if regen != lfsr_sequence(spec, total):
            raise AssertionError("trace representation failed to regenerate")
    return gammas


def regenerate_from_trace(gammas, length: int) -> list[int]:
    """Sequence sum_i Tr(gamma_i * beta_i^k) for the factors' fixed roots."""
    parts = []
    for h, gamma in gammas:
        ctx = gamma.ctx
        parts.append((ctx, find_root(ctx, h), gamma.value))
    out = []
    powers = [1] * len(parts)
    for _ in range(length):
        b = 0
        for idx, (ctx, beta, gv) in enumerate(parts):
            b ^= ctx.trace(ctx.mul(gv, powers[idx]))
            powers[idx] = ctx.mul(powers[idx], beta)
        out.append(b)
    return out


def _solve_gf2(rows, width: int) -> int:
    """Solve row-masks * x = rhs over GF(2); rows are (mask, rhs) pairs."""
    rows = [list(t) for t in rows]
    pivots = []
    for col in range(width):
        pivot = None
        for i in range(len(pivots), len(rows)):
            if rows[i][0] >> col & 1:
                pivot = i
                break
        if pivot is None:
            raise ValueError("singular system")
        i = len(pivots)
        rows[i], rows[pivot] = rows[pivot], rows[i]
        for j in range(len(rows)):
            if j != i and rows[j][0] >> col & 1:
                rows[j][0] ^= rows[i][0]
                rows[j][1] ^= rows[i][1]
        pivots.append(col)
    x = 0
    for i, col in enumerate(pivots):
        if rows[i][1]:
            x |= 1 << col
    return x
