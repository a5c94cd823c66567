"""Exact field arithmetic: Q, GF(p) and GF(p^m) for odd primes p.

Field contexts are immutable and shareable; elements are plain canonical
values (Fraction for Q, int residues for GF(p), trimmed coefficient tuples
for GF(p^m)), so equality of elements is equality of representations.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import kernels


class FieldError(Exception):
    pass


class InsufficientFieldError(FieldError):
    """The field lacks a required root; carries the minimal extension degree."""

    def __init__(self, message, extension_degree):
        super().__init__(message)
        self.extension_degree = extension_degree


def is_prime(n):
    """Deterministic Miller-Rabin (valid far beyond 64 bits of desk scale)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n):
    """Sorted distinct prime factors by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class Field:
    """Common interface; all element operations are pure functions."""

    char: int
    is_finite: bool

    def coerce(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_el(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def canonical_min(self, a):
        """The canonically-smaller of {a, -a}; fixes signs reproducibly."""
        raise NotImplementedError

    def sqrt(self, a):
        """A square root of a with canonical sign, or None."""
        raise NotImplementedError

    def elem_to_json(self, a):
        raise NotImplementedError

    def elem_from_json(self, obj):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


class Rationals(Field):
    char = 0
    is_finite = False

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def canonical_min(self, a):
        return abs(a)

    def sqrt(self, a):
        if a < 0:
            return None
        num, den = a.numerator, a.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            return None
        return Fraction(rn, rd)

    def elem_to_json(self, a):
        return f"{a.numerator}/{a.denominator}"

    def elem_from_json(self, obj):
        if isinstance(obj, str):
            return Fraction(obj)
        if isinstance(obj, int):
            return Fraction(obj)
        raise ValueError(f"cannot parse rational from {obj!r}")

    def to_json(self):
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class FiniteFieldMixin:
    """Shared square-root / enumeration logic for GF(p) and GF(p^m)."""

    is_finite = True

    def elements(self):
        """All field elements in canonical order."""
        for i in range(self.order):
            yield self.from_index(i)

    def from_index(self, i):
        raise NotImplementedError

    def to_index(self, a):
        raise NotImplementedError

    def canonical_min(self, a):
        b = self.neg(a)
        return a if self.to_index(a) <= self.to_index(b) else b

    def is_square(self, a):
        if a == self.zero:
            return True
        return self.pow_el(a, (self.order - 1) // 2) == self.one

    def _nonresidue(self):
        for z in self.elements():
            if z != self.zero and not self.is_square(z):
                return z
        raise FieldError("no quadratic non-residue found")  # unreachable, q odd

    def sqrt(self, a):
        if a == self.zero:
            return a
        q = self.order
        if not self.is_square(a):
            return None
        if q % 4 == 3:
            s = self.pow_el(a, (q + 1) // 4)
        else:
            # Tonelli-Shanks over the multiplicative group of order q - 1.
            d, e = q - 1, 0
            while d % 2 == 0:
                d //= 2
                e += 1
            z = self._nonresidue()
            m, c = e, self.pow_el(z, d)
            t, r = self.pow_el(a, d), self.pow_el(a, (d + 1) // 2)
            while t != self.one:
                i, t2 = 0, t
                while t2 != self.one:
                    t2 = self.mul(t2, t2)
                    i += 1
                b = self.pow_el(c, 1 << (m - i - 1))
                m, c = i, self.mul(b, b)
                t, r = self.mul(t, c), self.mul(r, b)
            s = r
        return self.canonical_min(s)

    def multiplicative_order(self, a, n_divides=None):
        """Order of a in the unit group; n_divides caps the search."""
        if a == self.zero:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = n_divides if n_divides is not None else self.order - 1
        if self.pow_el(a, n) != self.one:
            return None
        order = n
        for r in _prime_factors(n):
            while order % r == 0 and self.pow_el(a, order // r) == self.one:
                order //= r
        return order


class PrimeField(FiniteFieldMixin, Field):
    """GF(p), p an odd prime; elements are least nonnegative residues."""

    def __init__(self, p):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not is_prime(p):
            raise FieldError(f"{p} is not an odd prime")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1
        self._k = kernels.for_prime(p)

    def coerce(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def pow_el(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_index(self, i):
        return i

    def to_index(self, a):
        return a

    def elem_to_json(self, a):
        return a

    def elem_from_json(self, obj):
        return int(obj) % self.p

    def to_json(self):
        return {"kind": "GF", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def _is_irreducible(modulus, p, k):
    """Irreducibility over GF(p) of a monic modulus, via Frobenius powers."""
    m = len(modulus) - 1
    if m <= 0:
        return False
    x = [0, 1]
    xq = k.ppowmod(x, p ** m, modulus, p)
    if k.psub(xq, x, p):
        return False
    for r in _prime_factors(m):
        xd = k.ppowmod(x, p ** (m // r), modulus, p)
        if k.pgcd(k.psub(xd, x, p), modulus, p) != [1]:
            return False
    return True


def find_irreducible(p, m, seed=0):
    """Seeded-deterministic monic irreducible of degree m over GF(p)."""
    k = kernels.for_prime(p)
    if m == 1:
        return [0, 1]
    rng = random.Random((seed, p, m).__repr__())
    while True:
        coeffs = [rng.randrange(p) for _ in range(m)] + [1]
        if _is_irreducible(coeffs, p, k):
            return coeffs


class ExtField(FiniteFieldMixin, Field):
    """GF(p^m); elements are trimmed ascending coefficient tuples mod p."""

    def __init__(self, p, m, modulus=None, seed=0):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not is_prime(p):
            raise FieldError(f"{p} is not an odd prime")
        if m < 1:
            raise FieldError(f"extension degree must be positive, got {m}")
        self.p = p
        self.m = m
        self.char = p
        self.order = p ** m
        self._k = kernels.for_prime(p)
        if modulus is None:
            modulus = find_irreducible(p, m, seed=seed)
        modulus = [c % p for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if not _is_irreducible(modulus, p, self._k):
            raise FieldError("modulus is reducible over GF(p)")
        self.modulus = tuple(modulus)
        self._mod_list = list(modulus)
        self.zero = ()
        self.one = (1,)

    def coerce(self, n):
        n %= self.p
        return (n,) if n else ()

    def add(self, a, b):
        return tuple(self._k.padd(list(a), list(b), self.p))

    def sub(self, a, b):
        return tuple(self._k.psub(list(a), list(b), self.p))

    def mul(self, a, b):
        return tuple(self._k.pmulmod(list(a), list(b), self._mod_list, self.p))

    def neg(self, a):
        return tuple(self._k.pneg(list(a), self.p))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0")
        return tuple(self._k.pinvmod(list(a), self._mod_list, self.p))

    def pow_el(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        return tuple(self._k.ppowmod(list(a), e, self._mod_list, self.p))

    def from_index(self, i):
        digits = []
        while i:
            digits.append(i % self.p)
            i //= self.p
        return tuple(digits)

    def to_index(self, a):
        acc = 0
        for c in reversed(a):
            acc = acc * self.p + c
        return acc

    def embed(self, a):
        """Constant embedding of a GF(p) residue into this field."""
        return self.coerce(a)

    def elem_to_json(self, a):
        return list(a) + [0] * (self.m - len(a))

    def elem_from_json(self, obj):
        coeffs = [int(c) % self.p for c in obj]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) > self.m:
            raise ValueError("element coefficient array longer than degree")
        return tuple(coeffs)

    def to_json(self):
        return {"kind": "GF", "p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("GF", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"


def field_make(spec, seed=0):
    """Build a field context from a JSON-style description.

    Accepts {"kind":"Q"} or {"kind":"GF","p":...[,"m":...,"modulus":[...]]}.
    """
    if isinstance(spec, Field):
        return spec
    kind = spec.get("kind")
    if kind == "Q":
        return Rationals()
    if kind == "GF":
        p = spec["p"]
        m = spec.get("m", 1)
        if m == 1 and "modulus" not in spec:
            return PrimeField(p)
        return ExtField(p, m, modulus=spec.get("modulus"), seed=seed)
    raise FieldError(f"unknown field kind {kind!r}")


def nth_roots_of_unity(F, n):
    """M(n): all n-th roots of unity except 1, ordered as powers of the
    least primitive one.  Raises InsufficientFieldError naming the minimal
    extension degree when the field lacks them.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if not F.is_finite:
        phi = n
        for r in _prime_factors(n):
            phi -= phi // r
        raise InsufficientFieldError(
            f"Q contains no nontrivial {n}-th roots of unity; "
            f"they live in a degree-{phi} extension", extension_degree=phi)
    if F.char and n % F.char == 0:
        raise FieldError(f"n = {n} is divisible by the characteristic {F.char}")
    q = F.order
    if (q - 1) % n != 0:
        # Minimal d with n | q^d - 1 is the order of q mod n.
        d, acc = 1, q % n
        while acc != 1:
            acc = acc * q % n
            d += 1
        raise InsufficientFieldError(
            f"{F!r} lacks {n}-th roots of unity; need extension of degree {d}",
            extension_degree=d)
    for z in F.elements():
        if z == F.zero:
            continue
        if F.multiplicative_order(z, n_divides=n) == n:
            zeta = z
            break
    else:  # pragma: no cover - cyclic unit group guarantees a generator
        raise FieldError("no primitive root found")
    roots, acc = [], F.one
    for _ in range(n - 1):
        acc = F.mul(acc, zeta)
        roots.append(acc)
    return roots


def elem_sqrt(F, a):
    return F.sqrt(a)
