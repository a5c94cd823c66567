"""Mumford representation and Cantor's algorithm on odd-degree Jacobians.

This module is the independent oracle for every torsion claim: divisor
classes on y^2 = f(x) (deg f = 2g+1, monic, squarefree) are represented by
reduced Mumford pairs (u, v), composed via extended polynomial gcds, and
reduced until deg u <= g.  Orders are computed exactly by dividing out the
prime factors of a known multiple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numth import factorize
from .polyring import Poly, is_squarefree


class CurveError(ValueError):
    pass


class DegreeError(CurveError):
    pass


class NotMonicError(CurveError):
    pass


class NotSquarefreeError(CurveError):
    pass


class Curve:
    """y^2 = f(x) with f monic, squarefree, of odd degree 2g+1."""

    __slots__ = ("ctx", "g", "f")

    def __init__(self, ctx, g, f: Poly):
        if g < 1:
            raise CurveError(f"genus must be >= 1, got {g}")
        if f.degree != 2 * g + 1:
            raise DegreeError(f"deg f = {f.degree}, expected {2 * g + 1}")
        if not f.is_monic:
            raise NotMonicError("f must be monic")
        if not is_squarefree(f):
            raise NotSquarefreeError("f has a multiple root")
        self.ctx = ctx
        self.g = g
        self.f = f

    def __eq__(self, other):
        return (isinstance(other, Curve) and other.ctx == self.ctx
                and other.g == self.g and other.f == self.f)

    def __hash__(self):
        return hash((self.ctx, self.g, self.f))

    def __repr__(self):
        return f"Curve(g={self.g}, y^2 = {self.f!r})"

    def contains(self, x0, y0):
        return self.ctx.mul(y0, y0) == self.f(x0)

    def to_json(self):
        return {"field": self.ctx.to_json(), "g": self.g, "f": self.f.to_json()}


@dataclass(frozen=True)
class AffinePoint:
    x: object
    y: object

    def to_json(self, ctx):
        return {"x": ctx.elem_to_json(self.x), "y": ctx.elem_to_json(self.y)}

    @classmethod
    def from_json(cls, ctx, obj):
        return cls(ctx.elem_from_json(obj["x"]), ctx.elem_from_json(obj["y"]))


def point_make(C: Curve, x0, y0) -> AffinePoint:
    if not C.contains(x0, y0):
        raise CurveError(f"({x0}, {y0}) is not on the curve")
    return AffinePoint(x0, y0)


def involution(P: AffinePoint, ctx) -> AffinePoint:
    return AffinePoint(P.x, ctx.neg(P.y))


def points_with_x(C: Curve, x0):
    """The 0, 1 or 2 affine points of C with the given abscissa."""
    ctx = C.ctx
    y2 = C.f(x0)
    if y2 == ctx.zero:
        return [AffinePoint(x0, ctx.zero)]
    y = ctx.sqrt(y2)
    if y is None:
        return []
    return [AffinePoint(x0, y), AffinePoint(x0, ctx.neg(y))]


class MumfordDivisor:
    """Reduced Mumford pair (u, v): u monic, deg u <= g, deg v < deg u,
    u | v^2 - f.  The identity is (1, 0)."""

    __slots__ = ("u", "v")

    def __init__(self, C: Curve, u: Poly, v: Poly, _checked=False):
        if not _checked:
            if u.is_zero or not u.is_monic:
                raise CurveError("u must be monic and nonzero")
            if u.degree > C.g:
                raise CurveError(f"deg u = {u.degree} exceeds genus {C.g}")
            if not v.is_zero and v.degree >= u.degree:
                raise CurveError("deg v must be below deg u")
            if not ((v * v - C.f) % u).is_zero:
                raise CurveError("u does not divide v^2 - f")
        self.u = u
        self.v = v

    def __eq__(self, other):
        return (isinstance(other, MumfordDivisor)
                and other.u == self.u and other.v == self.v)

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"MumfordDivisor(u={self.u!r}, v={self.v!r})"

    @property
    def is_identity(self):
        return self.u.degree == 0

    def to_json(self):
        return {"u": self.u.to_json(), "v": self.v.to_json()}

    @classmethod
    def from_json(cls, C, obj):
        return cls(C, Poly.from_json(C.ctx, obj["u"]), Poly.from_json(C.ctx, obj["v"]))


def identity(C: Curve) -> MumfordDivisor:
    one = Poly.const(C.ctx, C.ctx.one)
    return MumfordDivisor(C, one, Poly.zero(C.ctx), _checked=True)


def embed(C: Curve, P: AffinePoint) -> MumfordDivisor:
    """Class of (P) - (infinity): the pair (x - x(P), y(P))."""
    ctx = C.ctx
    u = Poly(ctx, [ctx.neg(P.x), ctx.one])
    v = Poly.const(ctx, P.y)
    return MumfordDivisor(C, u, v)


def neg(C: Curve, D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(C, D.u, -D.v, _checked=True)


def _reduce(C: Curve, u: Poly, v: Poly) -> MumfordDivisor:
    """Cantor reduction of a semi-reduced pair until deg u <= g."""
    g = C.g
    steps = 0
    bound = (u.degree or 0) + 1
    while u.degree > g:
        u = ((C.f - v * v) // u).monic()
        v = (-v) % u if u.degree > 0 else Poly.zero(C.ctx)
        steps += 1
        assert steps <= bound, "reduction failed to terminate"
    return MumfordDivisor(C, u, v, _checked=True)


def cantor_add(C: Curve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Reduced representative of the class D1 + D2 (composition + reduction)."""
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    d1, e1, e2 = u1.xgcd(u2)
    d, c1, c2 = d1.xgcd(v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2) // (d * d)
    v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + C.f)) // d) % u
    return _reduce(C, u.monic(), v)


def scalar_mul(C: Curve, n: int, D: MumfordDivisor) -> MumfordDivisor:
    if n < 0:
        return scalar_mul(C, -n, neg(C, D))
    result = identity(C)
    base = D
    while n:
        if n & 1:
            result = cantor_add(C, result, base)
        base = cantor_add(C, base, base)
        n >>= 1
    return result


def exact_order(C: Curve, D: MumfordDivisor, n: int):
    """Exact order of D given a candidate multiple n, or None if ord(D) | n
    fails.  Divides each prime out of n as far as possible."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not scalar_mul(C, n, D).is_identity:
        return None
    order = n
    for p in factorize(n):
        while order % p == 0 and scalar_mul(C, order // p, D).is_identity:
            order //= p
    return order
