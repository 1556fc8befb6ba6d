import pytest
from fractions import Fraction

from cubesquare.fields import QQ, FieldError, PrimeField, is_prime


def test_primality_small():
    primes = [5, 7, 11, 13, 101, 1009, 2**61 - 1]
    for p in primes:
        assert is_prime(p)
    for n in [0, 1, 4, 9, 15, 49, 91, 1007, 2**61 + 1]:
        assert not is_prime(n)


def test_field_construction_guards():
    with pytest.raises(FieldError):
        PrimeField(2)
    with pytest.raises(FieldError):
        PrimeField(3)
    with pytest.raises(FieldError):
        PrimeField(15)
    with pytest.raises(FieldError):
        PrimeField(2**62 + 1)
    assert PrimeField(5).p == 5


def test_rational_arithmetic_and_sqrt():
    assert QQ.sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert QQ.sqrt(Fraction(2)) is None
    assert QQ.sqrt(Fraction(-4)) is None
    assert QQ.parse("3/7") == Fraction(3, 7)
    assert QQ.format(Fraction(-5, 3)) == "-5/3"
    assert QQ.format(Fraction(4)) == "4"


@pytest.mark.parametrize("p", [5, 7, 11, 13, 101, 1009, 10007])
def test_prime_field_sqrt_canonical(p):
    F = PrimeField(p)
    squares = {}
    for r in range(p):
        squares.setdefault(r * r % p, set()).add(r)
    for a in range(p):
        r = F.sqrt(a)
        if a in squares:
            assert r in squares[a]
            assert r == min(squares[a] & {r, p - r}) or r == 0
            assert r * r % p == a
            assert r <= p - r  # the smaller residue is canonical
        else:
            assert r is None


def test_prime_field_parse_fraction_strings():
    F = PrimeField(13)
    assert F.parse("1/2") == F.inv(2)
    assert F.parse("-1") == 12
    with pytest.raises(ZeroDivisionError):
        F.coerce(Fraction(1, 13))


def test_field_equality_and_coercion():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert QQ != PrimeField(7)
    assert PrimeField(7).coerce(Fraction(1, 2)) == 4  # 1/2 = 4 mod 7
