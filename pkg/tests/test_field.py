import pytest
from hypothesis import given, settings, strategies as st

from burstcover import gf2poly
from burstcover.field import (
    FieldContext,
    cyclotomic_coset,
    default_modulus,
    field_trace,
    find_root,
    get_context,
    min_odd_coset_member,
    minimal_polynomial,
    primitive_moduli,
)
from burstcover.gf2poly import reciprocal


def test_default_moduli_are_smallest_primitive():
    assert default_modulus(1) == 0b11
    assert default_modulus(2) == 0b111
    assert default_modulus(3) == 0xB
    assert default_modulus(4) == 0x13
    assert default_modulus(8) == 0x11D  # 0x11B is irreducible but has order 51


def test_primitive_moduli_counts():
    # phi(2^m - 1) / m conjugate classes of primitive elements
    assert len(primitive_moduli(4)) == 2
    assert len(primitive_moduli(5)) == 6
    assert len(primitive_moduli(6)) == 6


def test_minimal_polynomial_examples():
    ctx = get_context(4)
    assert minimal_polynomial(ctx, 1) == 0x13
    assert minimal_polynomial(ctx, 3) == 0b11111
    assert minimal_polynomial(ctx, -1) == reciprocal(0x13)


def test_minimal_polynomial_degenerate_root():
    ctx = get_context(4)
    with pytest.raises(ValueError):
        minimal_polynomial(ctx, 0)
    assert minimal_polynomial(ctx, 0, allow_one=True) == 0b11
    assert minimal_polynomial(ctx, 15, allow_one=True) == 0b11  # 15 = 0 mod 15


@given(st.integers(min_value=2, max_value=10), st.integers(min_value=-500, max_value=500))
@settings(max_examples=80)
def test_minimal_polynomial_frobenius_invariance(m, t):
    ctx = get_context(m)
    if t % ctx.n == 0:
        return
    assert minimal_polynomial(ctx, t) == minimal_polynomial(ctx, 2 * t)


@given(st.integers(min_value=2, max_value=10), st.integers(min_value=1, max_value=500))
@settings(max_examples=80)
def test_minimal_polynomial_has_its_root(m, t):
    ctx = get_context(m)
    t %= ctx.n
    if t == 0:
        return
    h = minimal_polynomial(ctx, t)
    root = ctx.alpha_pow(t)
    acc = 0
    for i in range(h.bit_length() - 1, -1, -1):
        acc = ctx.mul(acc, root) ^ (h >> i & 1)
    assert acc == 0
    assert ctx.m % (h.bit_length() - 1) == 0


def test_trace_fixed_values():
    for m in range(1, 10):
        ctx = get_context(m)
        assert ctx.trace(0) == 0
        assert ctx.trace(1) == m % 2


@pytest.mark.parametrize("m", range(1, 13))
def test_trace_balance(m):
    ctx = get_context(m)
    zeros = sum(1 for v in range(1 << m) if ctx.trace(v) == 0)
    assert zeros == 1 << (m - 1)


@pytest.mark.parametrize("m", range(1, 9))
def test_trace_linearity_exhaustive(m):
    ctx = get_context(m)
    traces = [ctx.trace(v) for v in range(1 << m)]
    for x in range(1 << m):
        for y in range(1 << m):
            assert traces[x ^ y] == traces[x] ^ traces[y]


def test_trace_against_direct_power_sum():
    # independent oracle: Tr(x) = x + x^2 + ... + x^(2^(m-1)) via raw poly ops
    for m in (3, 5, 6):
        mod = default_modulus(m)
        ctx = get_context(m)
        for v in range(1 << m):
            acc, p = 0, v
            for _ in range(m):
                acc ^= p
                p = gf2poly.rem(gf2poly.mul(p, p), mod)
            assert acc in (0, 1)
            assert ctx.trace(v) == acc


def test_exp_log_tables():
    ctx = get_context(6)
    for k in range(ctx.n):
        assert ctx.log[ctx.exp[k]] == k
    a, b = 0b101, 0b11001
    assert ctx.mul(a, b) == gf2poly.rem(gf2poly.mul(a, b), ctx.modulus)
    assert ctx.mul(a, ctx.inv(a)) == 1


def test_field_element_ops():
    ctx = get_context(4)
    a = ctx.element(0b0011)
    b = ctx.element(0b0101)
    assert (a + b).value == 0b0110
    assert (a * b).value == ctx.mul(0b0011, 0b0101)
    assert (a ** 3).value == ctx.pow(0b0011, 3)
    assert (a * a.inverse()).value == 1
    assert field_trace(a) in (0, 1)
    with pytest.raises(ZeroDivisionError):
        ctx.element(0).inverse()


def test_non_primitive_context_still_works():
    ctx = FieldContext(0b11111)  # irreducible, order 5
    assert not ctx.primitive
    assert ctx.mul(ctx.alpha.value, ctx.inv(ctx.alpha.value)) == 1
    zeros = sum(1 for v in range(16) if ctx.trace(v) == 0)
    assert zeros == 8


def test_find_root():
    ctx = get_context(6)
    for h in (0xB, 0b1101, 0b111):  # degree-3 and degree-2 factors split in GF(2^6)
        v = find_root(ctx, h)
        acc = 0
        for i in range(h.bit_length() - 1, -1, -1):
            acc = ctx.mul(acc, v) ^ (h >> i & 1)
        assert acc == 0
    with pytest.raises(ValueError):
        find_root(ctx, 0x13)  # degree 4 does not divide 6


def test_cyclotomic_coset():
    assert cyclotomic_coset(1, 15) == [1, 2, 4, 8]
    assert sorted(cyclotomic_coset(3, 15)) == [3, 6, 9, 12]
    assert min_odd_coset_member(3, 15) == 3
    assert min_odd_coset_member(-1, 63) == 31
