"""Binary cyclic codes: construction, parity checks, window combinations.

A code of length n is specified by a square-free generator polynomial g
dividing X^n - 1.  Each irreducible factor g_i of degree d_i contributes
d_i parity rows: the powers of a fixed root of g_i, expanded over the
polynomial basis of GF(2^(d_i)).

When all factors share one degree m they also share one field context,
and each factor is labelled with a signed exponent t_i such that
alpha^(t_i) is a root.  Exponents stay signed (the reciprocal factor of
a Melas code is labelled -1); they are reduced modulo 2^m - 1 only when
evaluated.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from . import gf2poly
from .bitmatrix import BinaryMatrix
from .field import (
    FieldContext,
    context_for_modulus,
    find_root,
    get_context,
    min_odd_coset_member,
    minimal_polynomial,
)
from .gf2poly import mul, parse_poly, reciprocal, rem, to_hex


@dataclass(frozen=True)
class CodeFactor:
    poly: int
    degree: int
    ctx: FieldContext
    root: int                 # raw mask of a root of poly in ctx
    exponent: int | None      # signed t with root = alpha^t, when known


@dataclass(frozen=True)
class CyclicCode:
    n: int
    g: int
    r: int
    factors: tuple[CodeFactor, ...]
    family: str = "generic"
    params: tuple[int, ...] = ()

    @property
    def min_factor_degree(self) -> int:
        return min(f.degree for f in self.factors)

    def describe(self) -> str:
        if self.family == "bch":
            return f"BCH(e={self.params[0]}, m={self.params[1]})"
        if self.family == "melas":
            return f"Melas(m={self.params[0]})"
        return f"cyclic[n={self.n}, g={to_hex(self.g)}]"


def _resolve_factors(factors: list[int], modulus: int | None) -> tuple[CodeFactor, ...]:
    degrees = [h.bit_length() - 1 for h in factors]
    shared_degree = degrees[0] if len(set(degrees)) == 1 else None
    out = []
    if shared_degree is not None:
        ctx = context_for_modulus(modulus) if modulus else get_context(shared_degree)
        if ctx.m != shared_degree:
            raise ValueError("modulus degree does not match the factor degree")
        for h in factors:
            root = find_root(ctx, h)
            exp = min_odd_coset_member(ctx.dlog(root), ctx.n) if ctx.primitive else None
            out.append(CodeFactor(h, shared_degree, ctx, root, exp))
    else:
        if modulus is not None:
            raise ValueError("a single modulus needs equal-degree factors")
        for h, d in zip(factors, degrees):
            ctx = get_context(d)
            root = find_root(ctx, h)
            out.append(CodeFactor(h, d, ctx, root, None))
    return tuple(out)


def make_cyclic_code(n: int, g, modulus=None) -> CyclicCode:
    """Cyclic code of odd length n with square-free generator g | X^n - 1."""
    g = parse_poly(g)
    if n < 1 or n % 2 == 0:
        raise ValueError("length must be odd (no repeated roots)")
    r = g.bit_length() - 1
    if r < 1 or r >= n:
        raise ValueError("generator degree must satisfy 1 <= deg(g) < n")
    if rem((1 << n) | 1, g) != 0:
        raise ValueError("generator does not divide X^n - 1")
    report = gf2poly.classify(g)
    if not report.square_free:
        raise ValueError("generator has repeated factors")
    factors = [h for h, _ in report.distinct_irreducible_factors]
    modulus = parse_poly(modulus) if modulus is not None else None
    return CyclicCode(n, g, r, _resolve_factors(factors, modulus))


def make_bch(e: int, m: int, modulus=None) -> CyclicCode:
    """Primitive BCH code of length 2^m - 1 with designed distance 2e + 1.

    Requires the long-code condition 2^ceil(m/2) > 2e - 1, which makes
    the e minimal polynomials M_1, M_3, ..., M_(2e-1) pairwise coprime
    and all of degree m, so the redundancy is exactly e*m.
    """
    if e < 1 or m < 2:
        raise ValueError("need e >= 1 and m >= 2")
    if not (1 << ((m + 1) // 2)) > 2 * e - 1:
        raise ValueError(
            f"long-code condition violated: 2^ceil(m/2) = {1 << ((m + 1) // 2)}"
            f" must exceed 2e-1 = {2 * e - 1}"
        )
    ctx = context_for_modulus(parse_poly(modulus)) if modulus else get_context(m)
    if not ctx.primitive or ctx.m != m:
        raise ValueError("modulus must be primitive of degree m")
    n = (1 << m) - 1
    g = 1
    factors = []
    for i in range(1, e + 1):
        t = 2 * i - 1
        h = minimal_polynomial(ctx, t)
        if h.bit_length() - 1 != m:
            raise AssertionError("minimal polynomial degree differs from m")
        g = mul(g, h)
        factors.append(CodeFactor(h, m, ctx, ctx.alpha_pow(t), t))
    code = CyclicCode(n, g, e * m, tuple(factors), family="bch", params=(e, m))
    if code.r != g.bit_length() - 1:
        raise AssertionError("factors were not coprime")
    return code


def make_melas(m: int, modulus=None) -> CyclicCode:
    """Melas code of length 2^m - 1: roots alpha and alpha^(-1), m >= 3."""
    if m < 3:
        raise ValueError("need m >= 3")
    ctx = context_for_modulus(parse_poly(modulus)) if modulus else get_context(m)
    if not ctx.primitive or ctx.m != m:
        raise ValueError("modulus must be primitive of degree m")
    m1 = ctx.modulus
    m1_rev = reciprocal(m1)
    if m1_rev == m1:
        raise ValueError("modulus is self-reciprocal: repeated roots")
    n = (1 << m) - 1
    factors = (
        CodeFactor(m1, m, ctx, ctx.alpha_pow(1), 1),
        CodeFactor(m1_rev, m, ctx, ctx.alpha_pow(-1), -1),
    )
    return CyclicCode(n, mul(m1, m1_rev), 2 * m, factors, family="melas", params=(m,))


@functools.lru_cache(maxsize=None)
def parity_check_matrix(code: CyclicCode) -> BinaryMatrix:
    """The r x n parity-check matrix with one d_i-row block per factor.

    Block i holds the powers root_i^j for j = 0..n-1, each expanded into
    its d_i coefficient bits over the polynomial basis.
    """
    masks = [0] * code.r
    base = 0
    for fac in code.factors:
        ctx = fac.ctx
        v = 1
        for j in range(code.n):
            for l in range(fac.degree):
                if v >> l & 1:
                    masks[base + l] |= 1 << j
            v = ctx.mul(v, fac.root)
        base += fac.degree
    H = BinaryMatrix(code.r, code.n, tuple(masks))
    if H.rank() != code.r:
        raise AssertionError("parity-check matrix is rank deficient")
    return H


@functools.lru_cache(maxsize=None)
def _columns(code: CyclicCode) -> tuple[int, ...]:
    return tuple(parity_check_matrix(code).columns())


def lc_eval(code: CyclicCode, i: int, f: int, debug: bool = False) -> int:
    """Syndrome of the window combination (i, f): sum of columns i+j, j in supp(f).

    Column indices wrap modulo n.  With debug=True the stacked field
    evaluations root^i * f(root) are computed independently and compared.
    """
    if not 0 <= i < code.n:
        raise ValueError("window start out of range")
    cols = _columns(code)
    s = 0
    j = 0
    ff = f
    while ff:
        if ff & 1:
            s ^= cols[(i + j) % code.n]
        ff >>= 1
        j += 1
    if debug:
        alt = 0
        base = 0
        for fac in code.factors:
            ctx = fac.ctx
            fx = 0
            for j in range(f.bit_length()):
                if f >> j & 1:
                    fx ^= ctx.pow(fac.root, j)
            v = ctx.mul(ctx.pow(fac.root, i), fx)
            alt |= v << base
            base += fac.degree
        if alt != s:
            raise AssertionError("column sum and field evaluation disagree")
    return s


def codewords(code: CyclicCode):
    """All codewords u*g, deg(u) <= n-r-1, as n-bit masks."""
    for u in range(1 << (code.n - code.r)):
        yield mul(u, code.g)


def dual_sequences(code: CyclicCode) -> set[tuple[int, ...]]:
    """All length-n LFSR outputs with connection g: the dual codewords."""
    from .lfsr import LfsrSpec, lfsr_sequence

    out = set()
    for load in range(1 << code.r):
        spec = LfsrSpec.from_galois(code.g, load)
        out.add(tuple(lfsr_sequence(spec, code.n)))
    return out


def code_to_descriptor(code: CyclicCode) -> dict:
    shared = code.factors[0].ctx if len({f.ctx for f in code.factors}) == 1 else None
    return {
        "family": code.family,
        "params": list(code.params),
        "n": code.n,
        "r": code.r,
        "g_hex": to_hex(code.g),
        "modulus_hex": to_hex(shared.modulus) if shared else None,
        "factors": [
            {
                "poly_hex": to_hex(f.poly),
                "degree": f.degree,
                "exponent": f.exponent,
                "modulus_hex": to_hex(f.ctx.modulus),
            }
            for f in code.factors
        ],
    }


def code_from_descriptor(desc: dict) -> CyclicCode:
    family = desc.get("family", "generic")
    modulus = desc.get("modulus_hex")
    if family == "bch":
        e, m = desc["params"]
        return make_bch(e, m, modulus)
    if family == "melas":
        (m,) = desc["params"]
        return make_melas(m, modulus)
    return make_cyclic_code(desc["n"], parse_poly(desc["g_hex"]), modulus)


def load_descriptor(path) -> CyclicCode:
    with open(path) as fh:
        return code_from_descriptor(json.load(fh))
