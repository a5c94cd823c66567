import pytest

from hyptorsion.families import find_good_mu, nice_pairs_coprime
from hyptorsion.fields import ExtField, FieldError, PrimeField
from hyptorsion.pairing import (PairingInput, root_field, weil_closed,
                                weil_explicit, weil_result_json)
from hyptorsion.polyring import Poly
from hyptorsion.torsion import PairCert

F11 = PrimeField(11)


def _family_cert(F, g, I):
    for t in nice_pairs_coprime(F, g):
        if t.I == I:
            _, cert, _ = find_good_mu(F, g, t)
            return cert
    raise AssertionError("no such subset")


class TestClosedForm:
    def test_gf11_values(self):
        # canonical roots over GF(11) are [3, 9, 5, 4]; complement of {0,1}
        # is {2, 3}, so the closed form is 5 * 4 = 9
        assert weil_closed(F11, 2, (0, 1)) == 9
        assert weil_closed(F11, 2, (2, 3)) == F11.div(F11.one, F11.coerce(9))

    def test_complement_inverse(self):
        # closed(I) * closed(complement) = prod of all of M(n) = 1
        import itertools
        for I in itertools.combinations(range(4), 2):
            comp = tuple(i for i in range(4) if i not in I)
            assert F11.mul(weil_closed(F11, 2, I),
                           weil_closed(F11, 2, comp)) == F11.one


class TestExplicit:
    def test_agrees_with_closed(self):
        for I in ((0, 1), (0, 2), (1, 3)):
            cert = _family_cert(F11, 2, I)
            e = weil_explicit(F11, 2, cert)
            assert e == weil_closed(F11, 2, I)
            assert F11.pow_el(e, 5) == F11.one

    def test_swap_decoration_inverts(self):
        cert = _family_cert(F11, 2, (0, 1))
        swapped = PairCert(2, cert.a1, cert.a2, cert.u2, cert.u1)
        e = weil_explicit(F11, 2, cert)
        assert weil_explicit(F11, 2, swapped) == F11.inv(e)

    def test_balanced_subset_gives_trivial_pairing(self):
        # complement of I = (0, 3) is (1, 2): zeta^2 * zeta^3 = 1 always
        cert = _family_cert(F11, 2, (0, 3))
        assert weil_explicit(F11, 2, cert) == F11.one
        assert weil_closed(F11, 2, (0, 3)) == F11.one

    def test_extension_base_field(self):
        E = ExtField(29, 2)
        cert = _family_cert(E, 2, (0, 1))
        assert weil_explicit(E, 2, cert) == weil_closed(E, 2, (0, 1))

    def test_char_divides_rejected(self):
        # a valid order-15 certificate in characteristic 5 (5 divides 15)
        from hyptorsion.families import char_templates
        E = ExtField(5, 2)
        t = next(iter(char_templates(E, 5, 1, 1)))
        _, cert, _ = find_good_mu(E, 7, t)
        with pytest.raises(FieldError):
            weil_explicit(E, 7, cert)

    def test_result_json(self):
        cert = _family_cert(F11, 2, (0, 1))
        e = weil_explicit(F11, 2, cert)
        j = weil_result_json(F11, 2, (0, 1), e, weil_closed(F11, 2, (0, 1)))
        assert j["match"] and j["I"] == [0, 1]


class TestPairingInput:
    def test_rejects_non_root(self):
        cert = _family_cert(F11, 2, (0, 1))
        f = cert.curve_poly()
        w = next(a for a in F11.elements() if f(a) != F11.zero)
        with pytest.raises(ValueError):
            PairingInput(2, cert, w)


class TestRootField:
    def test_base_roots_found(self):
        x = Poly.x(F11)
        f = (x - Poly.const(F11, 3)) * (x - Poly.const(F11, 7))
        K, lift, roots = root_field(F11, f)
        assert K == F11 and roots == [3, 7] and lift(5) == 5

    def test_prime_base_extends(self):
        x = Poly.x(F11)
        f = x * x + Poly.const(F11, 1)  # irreducible: -1 is a non-residue
        K, lift, roots = root_field(F11, f)
        assert isinstance(K, ExtField) and K.order == 121
        for w in roots:
            assert K.add(K.mul(w, w), K.one) == K.zero
        # lift is a ring homomorphism on a sample
        for a in (2, 5, 9):
            for b in (3, 4):
                assert K.mul(lift(a), lift(b)) == lift(F11.mul(a, b))
                assert K.add(lift(a), lift(b)) == lift(F11.add(a, b))

    def test_ext_base_extends(self):
        E = ExtField(3, 2)
        x = Poly.x(E)
        # find an irreducible quadratic over GF(9) by scanning constants
        f = None
        for i in range(E.order):
            c = E.from_index(i)
            cand = x * x + Poly.const(E, c)
            if all(E.add(E.mul(a, a), c) != E.zero for a in E.elements()):
                f = cand
                break
        assert f is not None
        K, lift, roots = root_field(E, f)
        assert K.order == 81 and len(roots) == 2
        fK = Poly(K, [lift(c) for c in f.coeffs])
        for w in roots:
            assert fK(w) == K.zero
        for i in (2, 5, 7):
            for j in (3, 8):
                a, b = E.from_index(i), E.from_index(j)
                assert K.mul(lift(a), lift(b)) == lift(E.mul(a, b))
                assert K.add(lift(a), lift(b)) == lift(E.add(a, b))
