from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heffter.algebra import (
    Field,
    _make_field_cached,
    factorize,
    is_prime,
    make_field,
    parse_header,
    poly_is_irreducible,
    prime_power_split,
)


def brute_force_modulus(p: int, e: int) -> tuple[int, ...]:
    """Oracle: first monic degree-e polynomial without a root in Z_p, scanning
    with the constant term as the least significant digit.  Root-freeness is
    equivalent to irreducibility for degrees 2 and 3."""
    assert e in (2, 3)
    for k in range(p**e):
        coeffs = [(k // p**i) % p for i in range(e)] + [1]
        has_root = any(
            sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0 for x in range(p)
        )
        if not has_root:
            return tuple(coeffs)
    raise AssertionError


def brute_force_order(field: Field, x: int) -> int:
    power = x
    order = 1
    while power != 1:
        power = field.mul(power, x)
        order += 1
    return order


def test_z31_is_plain_modular_arithmetic(z31):
    assert (z31.p, z31.e, z31.q) == (31, 1, 31)
    assert z31.modulus == (0, 1)
    assert z31.add(16, 18) == 3
    assert z31.neg(2) == 29
    assert z31.mul(7, 9) == 63 % 31
    assert z31.sub(5, 20) == (5 - 20) % 31


def test_gf343_modulus_matches_scan_oracle(gf343):
    assert gf343.q == 343
    assert gf343.modulus == brute_force_modulus(7, 3)
    assert gf343.modulus == (2, 0, 0, 1)  # x^3 + 2; x^3 and x^3 + 1 have roots
    assert poly_is_irreducible((2, 0, 0, 1), 7)
    assert not poly_is_irreducible((1, 0, 0, 1), 7)


def test_gf25_modulus_matches_scan_oracle():
    field = make_field(5, 2)
    assert field.modulus == brute_force_modulus(5, 2)


def test_make_field_rejects_non_prime():
    with pytest.raises(ValueError, match="not a prime"):
        make_field(4, 1)


def test_make_field_rejects_overflow():
    with pytest.raises(ValueError, match="overflows"):
        make_field(2, 93)


def test_make_field_is_deterministic(gf343):
    fresh = _make_field_cached.__wrapped__(7, 3)
    assert fresh == gf343
    assert make_field(7, 3) == gf343


def test_header_round_trip(z31, gf343):
    assert z31.header() == "field p=31 e=1 poly=0,1"
    assert gf343.header() == "field p=7 e=3 poly=2,0,0,1"
    for field in (z31, gf343):
        assert parse_header(field.header()) == field


def test_parse_header_rejects_garbage():
    with pytest.raises(ValueError):
        parse_header("fields p=31")
    with pytest.raises(ValueError, match="non-canonical"):
        parse_header("field p=7 e=3 poly=3,0,0,1")


def test_gf343_multiplicative_identity(gf343):
    for a in range(343):
        assert gf343.mul(a, 1) == a
        assert gf343.add(a, 0) == a


def test_inverses(z31, gf343):
    for field in (z31, gf343):
        for a in range(1, field.q):
            assert field.mul(a, field.inv(a)) == 1
        with pytest.raises(ZeroDivisionError):
            field.inv(0)


def test_unit_group_exponent(z31, gf343):
    for field in (z31, gf343):
        for x in range(1, field.q):
            assert field.pow(x, field.q - 1) == 1


def test_element_order_reference_values(z31):
    assert z31.element_order(2) == 5
    assert z31.element_order(5) == 3
    assert z31.element_order(1) == 1
    with pytest.raises(ValueError):
        z31.element_order(0)


def test_element_order_matches_brute_force(z31, gf343):
    for field, sample in ((z31, range(1, 31)), (gf343, range(1, 343, 11))):
        for x in sample:
            assert field.element_order(x) == brute_force_order(field, x)


def test_element_of_order_smallest_encoding(z31):
    # oracle: ascending scan with the brute-force order
    for d, expected in ((5, 2), (3, 5), (15, 7)):
        oracle = next(x for x in range(1, 31) if brute_force_order(z31, x) == d)
        assert oracle == expected
        assert z31.element_of_order(d) == expected


def test_element_of_order_covers_all_divisors(z31, gf343):
    for field in (z31, gf343):
        divisors = [d for d in range(1, field.q) if (field.q - 1) % d == 0]
        for d in divisors:
            assert field.element_order(field.element_of_order(d)) == d


def test_element_of_order_rejects_non_divisor(z31):
    with pytest.raises(ValueError, match="does not divide"):
        z31.element_of_order(7)


def test_prime_power_split():
    assert prime_power_split(343) == (7, 3)
    assert prime_power_split(31) == (31, 1)
    assert prime_power_split(91) is None
    assert prime_power_split(1) is None


def test_factorize_and_is_prime():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert is_prime(2) and is_prime(199) and not is_prime(1) and not is_prime(91)


@given(st.integers(0, 342), st.integers(0, 342), st.integers(0, 342))
@settings(max_examples=60, deadline=None)
def test_gf343_ring_laws(a, b, c):
    field = make_field(7, 3)
    assert field.add(a, b) == field.add(b, a)
    assert field.mul(a, b) == field.mul(b, a)
    assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
    assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    assert field.add(a, field.neg(a)) == 0
