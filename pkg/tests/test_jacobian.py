import random

import pytest

from hyptorsion.fields import PrimeField, Rationals
from hyptorsion.jacobian import (AffinePoint, Curve, DegreeError,
                                 MumfordDivisor, NotMonicError,
                                 NotSquarefreeError, cantor_add, embed,
                                 exact_order, identity, involution, neg,
                                 point_make, points_with_x, scalar_mul)
from hyptorsion.polyring import Poly

F11 = PrimeField(11)
C_X5_1 = Curve(F11, 2, Poly.from_ints(F11, [1, 0, 0, 0, 0, 1]))


class TestCurve:
    def test_distinguished_errors(self):
        QQ = Rationals()
        x = Poly.x(QQ)
        one = Poly.const(QQ, QQ.one)
        with pytest.raises(DegreeError):
            Curve(QQ, 2, x ** 3 + one)
        with pytest.raises(NotMonicError):
            Curve(QQ, 1, (x ** 3 + one).scale(QQ.coerce(2)))
        with pytest.raises(NotSquarefreeError):
            Curve(QQ, 1, (x - one) ** 2 * (x + one))

    def test_valid_examples(self):
        F5 = PrimeField(5)
        Curve(F5, 2, Poly.from_ints(F5, [1, 2, 1, 0, 0, 1]))  # x^5 + (x+1)^2


class TestPoints:
    def test_points_with_x(self):
        assert {(P.x, P.y) for P in points_with_x(C_X5_1, 0)} == {(0, 1), (0, 10)}
        assert [(P.x, P.y) for P in points_with_x(C_X5_1, 10)] == [(10, 0)]
        assert [(P.x, P.y) for P in points_with_x(C_X5_1, 2)] == [(2, 0)]  # 2^5+1=33

    def test_point_make_validates(self):
        with pytest.raises(Exception):
            point_make(C_X5_1, 0, 2)


class TestMumford:
    def test_embed_and_identity(self):
        D = embed(C_X5_1, AffinePoint(0, 1))
        assert D.u == Poly.from_ints(F11, [0, 1]) and D.v == Poly.from_ints(F11, [1])
        w = embed(C_X5_1, AffinePoint(10, 0))
        assert cantor_add(C_X5_1, w, w).is_identity  # Weierstrass has order 2
        assert neg(C_X5_1, w) == w

    def test_invariant_validation(self):
        with pytest.raises(Exception):
            MumfordDivisor(C_X5_1, Poly.from_ints(F11, [0, 1]),
                           Poly.from_ints(F11, [5]))

    def test_embed_involution_is_neg(self):
        for x0 in range(11):
            for P in points_with_x(C_X5_1, x0):
                D = embed(C_X5_1, P)
                Di = embed(C_X5_1, involution(P, F11))
                assert cantor_add(C_X5_1, D, Di).is_identity
                assert Di == neg(C_X5_1, D)

    def test_json_roundtrip(self):
        D = embed(C_X5_1, AffinePoint(0, 1))
        assert MumfordDivisor.from_json(C_X5_1, D.to_json()) == D


class TestGroupLaw:
    def test_example_order_5(self):
        D = embed(C_X5_1, AffinePoint(0, 1))
        assert scalar_mul(C_X5_1, 5, D).is_identity
        assert not scalar_mul(C_X5_1, 1, D).is_identity
        assert exact_order(C_X5_1, D, 5) == 5
        assert exact_order(C_X5_1, D, 3) is None
        assert exact_order(C_X5_1, identity(C_X5_1), 30) == 1

    def test_output_is_reduced_and_valid(self):
        rng = random.Random(3)
        pts = [P for x0 in range(11) for P in points_with_x(C_X5_1, x0)]
        for _ in range(100):
            D1 = embed(C_X5_1, pts[rng.randrange(len(pts))])
            D2 = embed(C_X5_1, pts[rng.randrange(len(pts))])
            D = cantor_add(C_X5_1, D1, D2)
            # re-validate all Mumford invariants from scratch
            MumfordDivisor(C_X5_1, D.u, D.v)
            assert D.u.degree <= 2


def _elliptic_add(F, a4, a6, P, Q):
    """Textbook chord-tangent law on y^2 = x^3 + a4 x + a6; None is infinity."""
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and F.add(y1, y2) == F.zero:
        return None
    if P == Q:
        lam = F.div(F.add(F.mul(F.coerce(3), F.mul(x1, x1)), a4),
                    F.mul(F.coerce(2), y1))
    else:
        lam = F.div(F.sub(y2, y1), F.sub(x2, x1))
    x3 = F.sub(F.sub(F.mul(lam, lam), x1), x2)
    y3 = F.sub(F.mul(lam, F.sub(x1, x3)), y1)
    return (x3, y3)


class TestGenusOneCrossCheck:
    def test_against_chord_tangent(self):
        F = PrimeField(13)
        a4, a6 = F.coerce(2), F.coerce(3)
        f = Poly.from_ints(F, [3, 2, 0, 1])
        C = Curve(F, 1, f)
        pts = [P for x0 in F.elements() for P in points_with_x(C, x0)]
        rng = random.Random(11)
        for _ in range(200):
            P = pts[rng.randrange(len(pts))]
            Q = pts[rng.randrange(len(pts))]
            expected = _elliptic_add(F, a4, a6, (P.x, P.y), (Q.x, Q.y))
            got = cantor_add(C, embed(C, P), embed(C, Q))
            if expected is None:
                assert got.is_identity
            else:
                assert got.u == Poly(F, [F.neg(expected[0]), F.one])
                assert got.v == Poly(F, [expected[1]])
