"""Construction, the three text forms, and the arithmetic kernels."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f2rep import (
    BitCapExceeded,
    F2Poly,
    divrem,
    ell0,
    ell1,
    from_index,
    modpow_x,
    mul,
    parse_poly,
    reciprocal,
)
from f2rep.gf2poly import _divrem_school, _divrem_table, ensure_bits

from reference import bits_of, ref_divmod, ref_mul, ref_reciprocal, ref_xpow_mod

# Nonzero bit patterns; 600 bits is comfortably past any small-case special path.
nonzero_bits = st.integers(min_value=1, max_value=(1 << 600) - 1)
any_bits = st.integers(min_value=0, max_value=(1 << 600) - 1)


def to_set(p: F2Poly) -> set[int]:
    return set(p.exponents())


# ---------------------------------------------------------------- construction


@pytest.mark.parametrize(
    "n,text",
    [
        (11, "x^3 + x + 1"),
        (1, "1"),
        (6, "x^2 + x"),
        (0, "0"),
        (643, "x^9 + x^7 + x + 1"),
    ],
)
def test_from_index_examples(n, text):
    p = from_index(n)
    assert p.to_text() == text
    assert p.index == n


def test_from_index_round_trip():
    for n in range(1 << 12):
        assert from_index(n).index == n


def test_from_index_rejects_negative():
    with pytest.raises(ValueError):
        from_index(-1)


def test_from_exponents_cancels_repeats():
    assert F2Poly.from_exponents([0, 3, 3]) == F2Poly(1)
    assert F2Poly.from_exponents([]) == F2Poly(0)
    with pytest.raises(ValueError):
        F2Poly.from_exponents([-1])


def test_degree_and_coefficients():
    p = parse_poly("x^9 + x^7 + x + 1")
    assert p.degree == 9
    assert F2Poly(0).degree is None
    assert [p.coefficient(i) for i in range(11)] == [1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0]
    assert p.exponents() == [0, 1, 7, 9]
    with pytest.raises(ValueError):
        p.coefficient(-1)


def test_constructor_rejects_bad_bits():
    with pytest.raises(ValueError):
        F2Poly(-1)
    with pytest.raises(ValueError):
        F2Poly(True)


# ---------------------------------------------------------------- text forms


@pytest.mark.parametrize(
    "text,expect",
    [
        ("x^9 + x^7 + x + 1", 643),
        ("x^9+x^7+x+1", 643),
        ("  x ^ 9 + x^7+ x + 1 ", 643),  # whitespace-insensitive, even inside terms
        ("1", 1),
        ("x", 2),
        ("0", 0),
        ("0x283", 643),
        ("0X283", 643),
        ("@643", 643),
        ("@0", 0),
    ],
)
def test_parse_poly_forms(text, expect):
    assert parse_poly(text).bits == expect


@pytest.mark.parametrize(
    "text,message",
    [
        ("x^2 + y", "bad polynomial term 'y'"),
        ("x + x", "repeated term 'x'"),
        ("x^-3", "bad exponent in term 'x^-3'"),
        ("x^", "bad exponent in term 'x^'"),
        ("", "empty polynomial text"),
        ("x^2 + + 1", "bad polynomial term ''"),
        ("@12a", "bad polynomial index '@12a'"),
        ("0xg1", "bad hex coefficient string '0xg1'"),
    ],
)
def test_parse_poly_errors_name_the_token(text, message):
    with pytest.raises(ValueError) as exc:
        parse_poly(text)
    assert message in str(exc.value)


@given(any_bits)
def test_text_forms_round_trip(bits):
    p = F2Poly(bits)
    assert parse_poly(p.to_text()) == p
    assert parse_poly(p.to_hex()) == p
    assert parse_poly(f"@{p.index}") == p


def test_repr_compact_for_many_terms():
    assert repr(parse_poly("x^3 + x + 1")) == "F2Poly('x^3 + x + 1')"
    big = F2Poly((1 << 100) - 1)
    assert repr(big) == "F2Poly(degree=99, terms=100)"


# ---------------------------------------------------------------- multiplication


@pytest.mark.parametrize(
    "a,b,product",
    [
        ("x + 1", "x^2 + x + 1", "x^3 + 1"),
        ("x + 1", "x^8 + x^7 + 1", "x^9 + x^7 + x + 1"),
        ("0", "x^5 + 1", "0"),
        ("1", "x^5 + 1", "x^5 + 1"),
    ],
)
def test_mul_examples(a, b, product):
    assert mul(parse_poly(a), parse_poly(b)) == parse_poly(product)


@given(any_bits, any_bits)
def test_mul_matches_reference(a, b):
    pa, pb = F2Poly(a), F2Poly(b)
    assert to_set(mul(pa, pb)) == ref_mul(to_set(pa), to_set(pb))


@given(any_bits, any_bits, any_bits)
def test_mul_ring_laws(a, b, c):
    pa, pb, pc = F2Poly(a), F2Poly(b), F2Poly(c)
    assert mul(pa, pb) == mul(pb, pa)
    assert mul(pa, pb + pc) == mul(pa, pb) + mul(pa, pc)
    assert mul(mul(pa, pb), pc) == mul(pa, mul(pb, pc))


@given(nonzero_bits, nonzero_bits)
def test_mul_degree_and_weight(a, b):
    pa, pb = F2Poly(a), F2Poly(b)
    prod = mul(pa, pb)
    assert prod.degree == pa.degree + pb.degree
    assert ell1(prod) <= ell1(pa) * ell1(pb)


@given(any_bits)
def test_square_is_substitution(a):
    p = F2Poly(a)
    assert mul(p, p) == p.substitute_x2()


def test_square_spreads_bits():
    p = parse_poly("x^3 + x + 1")
    assert mul(p, p) == parse_poly("x^6 + x^2 + 1")


# ---------------------------------------------------------------- division


@pytest.mark.parametrize(
    "a,b,q,r",
    [
        ("x^3 + 1", "x^2 + x + 1", "x + 1", "0"),
        ("x^3 + x + 1", "x^3 + x + 1", "1", "0"),
        ("x^2 + x", "x^3 + 1", "0", "x^2 + x"),
        ("x^5 + x + 1", "x^2 + 1", "x^3 + x", "1"),
    ],
)
def test_divrem_examples(a, b, q, r):
    qq, rr = divrem(parse_poly(a), parse_poly(b))
    assert (qq, rr) == (parse_poly(q), parse_poly(r))


def test_divrem_extracts_the_worked_cofactor(f31):
    q, r = divrem(F2Poly(1 | (1 << 63)), f31)
    assert not r
    assert ell1(q) == 37


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(parse_poly("x + 1"), F2Poly(0))
    with pytest.raises(ZeroDivisionError):
        parse_poly("x + 1") % F2Poly(0)


@given(any_bits, nonzero_bits)
def test_divrem_matches_reference(a, b):
    pa, pb = F2Poly(a), F2Poly(b)
    q, r = divrem(pa, pb)
    rq, rr = ref_divmod(to_set(pa), to_set(pb))
    assert to_set(q) == rq and to_set(r) == rr


@given(any_bits, nonzero_bits)
def test_division_identity(a, b):
    pa, pb = F2Poly(a), F2Poly(b)
    q, r = divrem(pa, pb)
    assert mul(pb, q) + r == pa
    assert r.degree is None or r.degree < pb.degree
    assert pa // pb == q and pa % pb == r


@given(
    st.integers(min_value=1 << 900, max_value=(1 << 1400) - 1),
    st.integers(min_value=2, max_value=(1 << 40) - 1),
)
def test_school_and_table_division_agree(a, b):
    # Quotients this long take the byte-table path; both kernels must match.
    assert _divrem_school(a, b) == _divrem_table(a, b, True)
    assert _divrem_table(a, b, False)[1] == _divrem_school(a, b)[1]


# ---------------------------------------------------------------- modpow


def test_modpow_examples(f31):
    assert modpow_x(63, f31) == F2Poly(1)
    assert modpow_x(0, f31) == F2Poly(1)
    # 21 properly divides 63 yet x^21 is not 1: frozen residue from the
    # step-by-step oracle.
    assert modpow_x(21, f31) == F2Poly(0x1D4)
    assert to_set(modpow_x(21, f31)) == {2, 4, 6, 7, 8}


def test_modpow_rejects_bad_modulus():
    with pytest.raises(ValueError):
        modpow_x(5, parse_poly("x^2 + x"))  # constant term 0
    with pytest.raises(ValueError):
        modpow_x(5, parse_poly("1"))
    with pytest.raises(ValueError):
        modpow_x(-1, parse_poly("x + 1"))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=0, max_value=4096),
    st.integers(min_value=1, max_value=(1 << 14) - 1),
)
def test_modpow_matches_stepwise_oracle(e, m_high):
    m = (m_high << 1) | 1  # constant term 1, degree >= 1
    got = modpow_x(e, F2Poly(m))
    assert to_set(got) == ref_xpow_mod(e, set(F2Poly(m).exponents()))


# ---------------------------------------------------------------- reciprocal


@pytest.mark.parametrize(
    "f,rev",
    [
        ("x^9 + x^7 + x + 1", "x^9 + x^8 + x^2 + 1"),
        ("x + 1", "x + 1"),
        ("x^10 + x^8 + x + 1", "x^10 + x^9 + x^2 + 1"),
        ("x^3", "1"),
    ],
)
def test_reciprocal_examples(f, rev):
    assert reciprocal(parse_poly(f)) == parse_poly(rev)


def test_reciprocal_rejects_zero():
    with pytest.raises(ValueError):
        reciprocal(F2Poly(0))


@given(nonzero_bits)
def test_reciprocal_matches_reference(a):
    p = F2Poly(a)
    assert to_set(reciprocal(p)) == ref_reciprocal(to_set(p))


@given(st.integers(min_value=0, max_value=(1 << 600) - 1))
def test_reciprocal_involutive_with_constant_term(a):
    p = F2Poly((a << 1) | 1)
    assert reciprocal(reciprocal(p)) == p


# ---------------------------------------------------------------- weights


def test_ell_examples(f31):
    fstar = divrem(F2Poly(1 | (1 << 63)), f31)[0]
    assert ell1(fstar) == 37
    assert ell0(fstar, 62) == 26
    assert ell1(F2Poly(0)) == 0
    assert ell0(F2Poly(0), 4) == 5


def test_ell0_window_must_reach_degree():
    with pytest.raises(ValueError):
        ell0(parse_poly("x^5 + 1"), 4)


@given(nonzero_bits, st.integers(min_value=0, max_value=100))
def test_ell_partition_counts(a, extra):
    p = F2Poly(a)
    N = p.degree + extra
    assert ell1(p) + ell0(p, N) == N + 1


# ---------------------------------------------------------------- operators


def test_xor_add_sub_coincide():
    a, b = parse_poly("x^3 + x + 1"), parse_poly("x + 1")
    assert a + b == a - b == (a ^ b) == parse_poly("x^3")


def test_shift_multiplies_by_x():
    assert (parse_poly("x + 1") << 3) == parse_poly("x^4 + x^3")
    with pytest.raises(ValueError):
        parse_poly("x + 1") << -1


def test_hash_and_bool():
    assert hash(F2Poly(5)) == hash(parse_poly("x^2 + 1"))
    assert not F2Poly(0)
    assert F2Poly(1)
    assert len({F2Poly(5), parse_poly("x^2 + 1")}) == 1


# ---------------------------------------------------------------- memory guard


def test_bit_cap_env_override(monkeypatch):
    monkeypatch.setenv("F2REP_BIT_CAP", "1000")
    with pytest.raises(BitCapExceeded) as exc:
        ensure_bits(1001)
    assert "F2REP_BIT_CAP" in str(exc.value)
    ensure_bits(1000)  # at the cap is fine
