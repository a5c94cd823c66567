from fractions import Fraction

import pytest

from hyptorsion.fields import (ExtField, FieldError, InsufficientFieldError,
                               PrimeField, Rationals, field_make,
                               find_irreducible, is_prime, nth_roots_of_unity)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 67 - 1)


class TestRationals:
    F = Rationals()

    def test_arithmetic(self):
        F = self.F
        a, b = Fraction(3, 4), Fraction(-2, 5)
        assert F.add(a, b) == Fraction(7, 20)
        assert F.mul(a, F.inv(a)) == F.one
        assert F.div(a, b) == Fraction(-15, 8)

    def test_sqrt(self):
        assert self.F.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert self.F.sqrt(Fraction(2)) is None
        assert self.F.sqrt(Fraction(-1)) is None

    def test_json(self):
        assert self.F.elem_to_json(Fraction(-3, 7)) == "-3/7"
        assert self.F.elem_from_json("-3/7") == Fraction(-3, 7)
        assert field_make(self.F.to_json()) == self.F


class TestPrimeField:
    def test_rejects_bad_modulus(self):
        with pytest.raises(FieldError):
            PrimeField(2)
        with pytest.raises(FieldError):
            PrimeField(15)

    def test_arithmetic(self):
        F = PrimeField(11)
        assert F.add(7, 8) == 4
        assert F.mul(F.inv(3), 3) == 1
        assert F.pow_el(2, -1) == F.inv(2)

    def test_sqrt_all_elements(self):
        for p in (11, 13, 29):
            F = PrimeField(p)
            squares = {F.mul(a, a) for a in F.elements()}
            for a in F.elements():
                s = F.sqrt(a)
                if a in squares:
                    assert s is not None and F.mul(s, s) == a
                    assert s == F.canonical_min(s)
                else:
                    assert s is None

    def test_canonical_min(self):
        F = PrimeField(11)
        assert F.canonical_min(8) == 3
        assert F.canonical_min(3) == 3


class TestExtField:
    def test_modulus_validation(self):
        with pytest.raises(FieldError):
            ExtField(3, 2, modulus=[0, 0, 1])  # x^2 is reducible
        F = ExtField(3, 2)
        assert F.order == 9

    def test_arithmetic_and_inverse(self):
        F = ExtField(5, 3)
        for i in range(1, F.order):
            a = F.from_index(i)
            assert F.mul(a, F.inv(a)) == F.one

    def test_sqrt_all_elements(self):
        F = ExtField(3, 2)
        squares = {F.mul(a, a) for a in F.elements()}
        for a in F.elements():
            s = F.sqrt(a)
            if a in squares:
                assert s is not None and F.mul(s, s) == a
            else:
                assert s is None

    def test_index_roundtrip_and_json(self):
        F = ExtField(3, 3)
        for i in (0, 1, 5, 26):
            a = F.from_index(i)
            assert F.to_index(a) == i
            assert F.elem_from_json(F.elem_to_json(a)) == a
        assert field_make(F.to_json()) == F

    def test_embed_is_homomorphism(self):
        F = ExtField(7, 2)
        for a in range(7):
            for b in range(7):
                assert F.add(F.embed(a), F.embed(b)) == F.embed((a + b) % 7)
                assert F.mul(F.embed(a), F.embed(b)) == F.embed(a * b % 7)


def test_find_irreducible_deterministic():
    assert find_irreducible(5, 4, seed=1) == find_irreducible(5, 4, seed=1)
    assert len(find_irreducible(5, 4)) == 5


class TestRootsOfUnity:
    def test_gf11_order5(self):
        F = PrimeField(11)
        assert nth_roots_of_unity(F, 5) == [3, 9, 5, 4]

    def test_orders(self):
        F = ExtField(3, 4)
        roots = nth_roots_of_unity(F, 5)
        assert len(roots) == 4
        for z in roots:
            assert F.pow_el(z, 5) == F.one and z != F.one

    def test_insufficient_field_reports_degree(self):
        with pytest.raises(InsufficientFieldError) as exc:
            nth_roots_of_unity(PrimeField(29), 5)
        assert exc.value.extension_degree == 2
        with pytest.raises(InsufficientFieldError) as exc:
            nth_roots_of_unity(PrimeField(11), 7)
        assert exc.value.extension_degree == 3
        with pytest.raises(InsufficientFieldError) as exc:
            nth_roots_of_unity(Rationals(), 5)
        assert exc.value.extension_degree == 4  # phi(5)

    def test_char_divides_rejected(self):
        with pytest.raises(FieldError):
            nth_roots_of_unity(PrimeField(5), 15)
