from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyptorsion.fields import ExtField, PrimeField, Rationals
from hyptorsion.polyring import (Poly, cyclotomic, diff_power, is_squarefree,
                                 poly_sqrt, reverse_scale)

F11 = PrimeField(11)
QQ = Rationals()

gf11_polys = st.lists(st.integers(0, 10), max_size=8).map(
    lambda cs: Poly(F11, cs))
q_fracs = st.tuples(st.integers(-30, 30), st.integers(1, 9)).map(
    lambda t: Fraction(t[0], t[1]))
q_polys = st.lists(q_fracs, max_size=6).map(lambda cs: Poly(QQ, cs))


class TestRing:
    @given(gf11_polys, gf11_polys, gf11_polys)
    def test_ring_axioms_gf(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Poly.zero(F11)

    @given(gf11_polys, gf11_polys)
    @settings(max_examples=60)
    def test_divmod_gf(self, a, b):
        if b.is_zero:
            with pytest.raises(ZeroDivisionError):
                divmod(a, b)
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree

    @given(q_polys, q_polys)
    @settings(max_examples=40)
    def test_divmod_q(self, a, b):
        if b.is_zero:
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree

    @given(gf11_polys, gf11_polys)
    @settings(max_examples=60)
    def test_xgcd(self, a, b):
        g, s, t = a.xgcd(b)
        assert s * a + t * b == g
        if not g.is_zero:
            assert g.is_monic
            assert (a % g).is_zero and (b % g).is_zero

    @given(q_polys, q_polys)
    @settings(max_examples=30)
    def test_gcd_q_divides(self, a, b):
        g = a.gcd(b)
        if g.is_zero:
            assert a.is_zero and b.is_zero
        else:
            assert (a % g).is_zero and (b % g).is_zero
            assert g.is_monic

    def test_gcd_q_known(self):
        x = Poly.x(QQ)
        one = Poly.const(QQ, Fraction(1))
        a = (x - one) ** 2 * (x + one)
        b = (x - one) * (x + one) ** 3
        assert a.gcd(b) == (x - one) * (x + one)

    @given(gf11_polys, gf11_polys)
    @settings(max_examples=40)
    def test_derivative_product_rule(self, a, b):
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    @given(gf11_polys, st.integers(0, 10), st.integers(1, 10))
    @settings(max_examples=40)
    def test_shift_scale_eval(self, a, c, s):
        x0 = 7
        assert a.shift(c)(x0) == a((x0 + c) % 11)
        assert a.scale_arg(s)(x0) == a(s * x0 % 11)


class TestSqrt:
    @given(gf11_polys)
    @settings(max_examples=80)
    def test_square_roundtrip(self, t):
        h = t * t
        r = poly_sqrt(h)
        assert r is not None and r * r == h
        if not t.is_zero:
            assert r.leading == F11.canonical_min(t.leading)

    def test_rejects_non_squares(self):
        x = Poly.x(F11)
        one = Poly.const(F11, 1)
        assert poly_sqrt(x) is None                      # odd valuation
        assert poly_sqrt(x * x * x) is None
        assert poly_sqrt(x * x + one) is None            # not a square
        two = Poly.const(F11, 2)                         # 2 is a non-residue mod 11
        assert poly_sqrt(two * (x + one) ** 2) is None

    def test_rational(self):
        t = Poly(QQ, [Fraction(1, 2), Fraction(-3), Fraction(2, 7)])
        assert poly_sqrt(t * t) == t


class TestSquarefree:
    def test_basic(self):
        x = Poly.x(QQ)
        one = Poly.const(QQ, Fraction(1))
        assert is_squarefree(x ** 5 + one)
        assert not is_squarefree((x - one) ** 2 * (x + one))

    def test_char_p_pth_power(self):
        F = PrimeField(5)
        x = Poly.x(F)
        assert not is_squarefree(x ** 5 + Poly.const(F, 1))  # (x+1)^5

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            is_squarefree(Poly.zero(QQ))

    def test_large_rational(self):
        # modular fast-accept path
        f = cyclotomic(105) * cyclotomic(5)
        assert is_squarefree(f)
        assert not is_squarefree(f * cyclotomic(5))


class TestReverseScale:
    def test_example(self):
        w = Poly(QQ, [Fraction(1), Fraction(2)])  # 2x + 1
        assert reverse_scale(w, Fraction(1)) == Poly(QQ, [Fraction(2), Fraction(1)])

    @given(q_polys, st.integers(1, 5))
    @settings(max_examples=30)
    def test_defining_identity(self, w, a_int):
        a = Fraction(a_int)
        if w.is_zero or w(QQ.zero) == 0:
            with pytest.raises(ValueError):
                reverse_scale(w, a)
            return
        wt = reverse_scale(w, a)
        g = w.degree
        # wt(a/x) = w(x)/x^g at sample points
        for x0 in (Fraction(1), Fraction(2), Fraction(-3), Fraction(5, 2)):
            assert wt(a / x0) == w(x0) / x0 ** g
        assert wt.degree == g and wt(QQ.zero) != 0

    def test_zero_scalar_rejected(self):
        w = Poly(QQ, [Fraction(1), Fraction(1)])
        with pytest.raises(ValueError):
            reverse_scale(w, Fraction(0))


class TestCyclotomic:
    def test_product_identity(self):
        from hyptorsion.numth import divisors
        for n in (1, 2, 6, 12, 15):
            x = Poly.x(QQ)
            prod = Poly.const(QQ, Fraction(1))
            for d in divisors(n):
                prod = prod * cyclotomic(d)
            assert prod == x ** n - Poly.const(QQ, Fraction(1))

    def test_degrees(self):
        from hyptorsion.numth import totient
        for n in (3, 5, 7, 105, 165):
            assert cyclotomic(n).degree == totient(n)


class TestDiffPower:
    def test_example(self):
        f = diff_power(F11, 0, 10, 5)  # (x+1)^5 - x^5 over GF(11)
        assert f == Poly(F11, [1, 5, 10, 10, 5])

    def test_validation(self):
        with pytest.raises(ValueError):
            diff_power(F11, 3, 3, 5)
        with pytest.raises(ValueError):
            diff_power(F11, 0, 1, 4)


class TestBackends:
    def test_pure_matches_compiled(self):
        import random

        from hyptorsion import _kernel_py, kernels
        if kernels.BACKEND != "compiled":
            pytest.skip("compiled backend unavailable")
        k = kernels.for_prime(10007)
        rng = random.Random(7)
        for _ in range(100):
            a = [rng.randrange(10007) for _ in range(rng.randrange(1, 12))]
            b = [rng.randrange(10007) for _ in range(rng.randrange(1, 12))]
            a, b = _kernel_py.ptrim(a), _kernel_py.ptrim(b)
            assert k.pmul(a, b, 10007) == _kernel_py.pmul(a, b, 10007)
            if b:
                assert k.pdivmod(a, b, 10007) == _kernel_py.pdivmod(a, b, 10007)
                assert k.pgcd(a, b, 10007) == _kernel_py.pgcd(a, b, 10007)
                assert k.pxgcd(a, b, 10007) == _kernel_py.pxgcd(a, b, 10007)
