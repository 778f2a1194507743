"""GF(2^m) arithmetic in the polynomial basis {1, x, ..., x^(m-1)}.

A FieldContext wraps an irreducible modulus of degree m and exposes
table-driven multiplication: exp/log tables over a generator of the
multiplicative group, and a trace mask so that Tr(v) is the parity of
popcount(v & trace_mask).  Elements are plain ints (their coefficient
masks); FieldElement is a thin wrapper for API-level code.

The default modulus for each m is the lexicographically smallest
primitive polynomial of degree m, where coefficient strings compare as
integers.  This makes every derived object reproducible.
"""

from __future__ import annotations

import functools

from . import gf2poly
from .gf2poly import X, is_irreducible

_MAX_TABLE_M = 22


@functools.lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """Smallest primitive polynomial of degree m, as an integer mask."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    p = (1 << m) | 1
    while True:
        if is_irreducible(p) and gf2poly._order_irreducible(p) == (1 << m) - 1:
            return p
        p += 2


def primitive_moduli(m: int) -> list[int]:
    """All primitive polynomials of degree m, ascending."""
    out = []
    for p in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(p) and gf2poly._order_irreducible(p) == (1 << m) - 1:
            out.append(p)
    return out


class FieldContext:
    """GF(2^m) modulo a chosen irreducible polynomial."""

    def __init__(self, modulus: int):
        m = modulus.bit_length() - 1
        if m < 1 or not is_irreducible(modulus):
            raise ValueError("modulus must be irreducible of degree >= 1")
        if m > _MAX_TABLE_M:
            raise ValueError(f"field tables limited to degree {_MAX_TABLE_M}")
        self.m = m
        self.modulus = modulus
        self.n = (1 << m) - 1  # multiplicative group order
        self.primitive = gf2poly._order_irreducible(modulus) == self.n
        self._build_tables()

    def _build_tables(self):
        gen = X if self.primitive or self.m == 1 else self._find_generator()
        n = self.n
        exp = [1] * (2 * n)
        log = [0] * (n + 1)
        v = 1
        for k in range(n):
            exp[k] = v
            exp[k + n] = v
            log[v] = k
            v = self._mul_raw(v, gen)
        self.exp = exp
        self.log = log
        self.generator = gen
        mask = 0
        for l in range(self.m):
            if self._trace_raw(1 << l):
                mask |= 1 << l
        self.trace_mask = mask

    def _find_generator(self):
        from .mersenne import MERSENNE_FACTORS

        primes = MERSENNE_FACTORS[self.m]
        for g in range(2, 1 << self.m):
            if all(self._pow_raw(g, self.n // p) != 1 for p in primes):
                return g
        raise AssertionError("no generator found")  # unreachable

    def _mul_raw(self, a, b):
        r = 0
        top = 1 << (self.m - 1)
        for _ in range(self.m):
            if b & 1:
                r ^= a
            b >>= 1
            if a & top:
                a = (a << 1) ^ self.modulus
            else:
                a <<= 1
        return r

    def _pow_raw(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _trace_raw(self, a):
        t = a
        v = a
        for _ in range(self.m - 1):
            v = self._mul_raw(v, v)
            t ^= v
        if t not in (0, 1):
            raise AssertionError("trace left the prime field")
        return t

    # -- table-driven operations on raw masks ------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[self.n - self.log[a]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % self.n]

    def alpha_pow(self, k: int) -> int:
        """x^k mod modulus, exponent taken modulo 2^m - 1."""
        return self.pow(X if self.m > 1 else 1, k)

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def dlog(self, a: int) -> int:
        """Discrete log base the context generator (a nonzero)."""
        if a == 0:
            raise ValueError("zero has no discrete log")
        return self.log[a]

    def element(self, value) -> FieldElement:
        return FieldElement(self, gf2poly.parse_poly(value))

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, X if self.m > 1 else 1)

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("FieldContext", self.modulus))

    def __repr__(self):
        return f"FieldContext(m={self.m}, modulus={gf2poly.to_hex(self.modulus)})"


@functools.lru_cache(maxsize=None)
def get_context(m: int) -> FieldContext:
    """The cached default context for GF(2^m)."""
    return FieldContext(default_modulus(m))


@functools.lru_cache(maxsize=None)
def context_for_modulus(modulus: int) -> FieldContext:
    return FieldContext(modulus)


class FieldElement:
    """An element of a FieldContext, wrapping its coefficient mask."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        if not 0 <= value <= ctx.n:
            raise ValueError("element mask out of range for the field")
        self.ctx = ctx
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("elements from different fields")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.value ^ v)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.ctx.mul(self.value, v))

    __rmul__ = __mul__

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def trace(self) -> int:
        return self.ctx.trace(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.modulus, self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"<{gf2poly.to_terms(self.value)} in GF(2^{self.ctx.m})>"


def field_trace(x: FieldElement) -> int:
    """Trace of x down to GF(2), as a bit."""
    return x.trace()


def cyclotomic_coset(t: int, n: int) -> list[int]:
    """The orbit of t under doubling modulo n, starting from t mod n."""
    t %= n
    out = [t]
    c = t * 2 % n
    while c != t:
        out.append(c)
        c = c * 2 % n
    return out


def min_odd_coset_member(t: int, n: int) -> int:
    """Smallest odd member of the doubling coset of t modulo n (n odd)."""
    members = [c for c in cyclotomic_coset(t, n) if c & 1]
    if not members:
        raise ValueError("coset has no odd member")
    return min(members)


def minimal_polynomial(ctx: FieldContext, t: int, allow_one: bool = False) -> int:
    """Minimal polynomial of alpha^t over GF(2), alpha the context generator.

    t is reduced modulo 2^m - 1 and may be negative.  t = 0 names the
    element 1, whose minimal polynomial X+1 is only returned when the
    caller opts in.
    """
    if not ctx.primitive:
        raise ValueError("minimal polynomials need a primitive context")
    n = ctx.n
    t %= n
    if t == 0:
        if allow_one:
            return 0b11
        raise ValueError("t = 0 names the degenerate root 1")
    coeffs = [1]  # polynomial over the field, index = degree
    for c in cyclotomic_coset(t, n):
        root = ctx.alpha_pow(c)
        nxt = [0] * (len(coeffs) + 1)
        for i, v in enumerate(coeffs):
            nxt[i + 1] ^= v
            nxt[i] ^= ctx.mul(root, v)
        coeffs = nxt
    out = 0
    for i, v in enumerate(coeffs):
        if v not in (0, 1):
            raise AssertionError("conjugate product left the prime field")
        out |= v << i
    return out


def find_root(ctx: FieldContext, h: int) -> int:
    """A root of irreducible h in ctx, as a raw mask; the smallest one.

    deg(h) must divide m so that the roots exist in the field.
    """
    d = h.bit_length() - 1
    if d < 1 or ctx.m % d:
        raise ValueError("polynomial does not split in this field")
    for v in range(1, 1 << ctx.m):
        acc = 0
        for i in range(d, -1, -1):
            acc = ctx.mul(acc, v) ^ (h >> i & 1)
        if acc == 0:
            return v
    raise ValueError("no root found; is h irreducible?")
