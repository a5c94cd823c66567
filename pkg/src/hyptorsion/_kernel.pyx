# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomial arithmetic over GF(p), p < 2^31.

Same contract as hyptorsion._kernel_py: lists of ints in [0, p), ascending
degree, no trailing zeros, [] is zero.
"""

from libc.stdlib cimport malloc, free

IS_COMPILED = True

cdef unsigned long long _inv_mod(unsigned long long a, unsigned long long p):
    # Fermat inverse; p prime.
    cdef unsigned long long result = 1, base = a % p
    cdef unsigned long long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef long long* _to_buf(list a) except NULL:
    cdef Py_ssize_t n = len(a), i
    cdef long long* buf = <long long*> malloc(n * sizeof(long long) if n else sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _from_buf(long long* buf, Py_ssize_t n):
    # Trims trailing zeros.
    while n and buf[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return out


def ptrim(a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def padd(list a, list b, p):
    cdef unsigned long long pp = p
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = (<unsigned long long> out[i] + <unsigned long long> b[i]) % pp
    return ptrim(out)


def psub(list a, list b, p):
    cdef unsigned long long pp = p
    cdef Py_ssize_t n = max(len(a), len(b)), i
    cdef list out = [0] * n
    cdef unsigned long long av, bv
    for i in range(n):
        av = a[i] if i < len(a) else 0
        bv = b[i] if i < len(b) else 0
        out[i] = (av + pp - bv) % pp
    return ptrim(out)


def pneg(list a, p):
    cdef unsigned long long pp = p
    return [(pp - <unsigned long long> c) % pp for c in a]


def pscale(list a, c, p):
    cdef unsigned long long pp = p
    cdef unsigned long long cc = c % pp
    if cc == 0:
        return []
    return ptrim([(cc * <unsigned long long> v) % pp for v in a])


def pmul(list a, list b, p):
    if not a or not b:
        return []
    cdef unsigned long long pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long* ba = _to_buf(a)
    cdef long long* bb = _to_buf(b)
    cdef Py_ssize_t nout = na + nb - 1
    cdef long long* out = <long long*> malloc(nout * sizeof(long long))
    if out == NULL:
        free(ba); free(bb)
        raise MemoryError()
    cdef unsigned long long acc, av
    for i in range(nout):
        out[i] = 0
    for i in range(na):
        av = ba[i]
        if av == 0:
            continue
        for j in range(nb):
            out[i + j] = (<unsigned long long> out[i + j] + av * <unsigned long long> bb[j]) % pp
    result = _from_buf(out, nout)
    free(ba); free(bb); free(out)
    return result


def pdivmod(list a, list b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    cdef unsigned long long pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, db = nb - 1
    cdef long long* r = _to_buf(a)
    cdef long long* bb = _to_buf(b)
    cdef long long* q = <long long*> malloc((na - db) * sizeof(long long))
    if q == NULL:
        free(r); free(bb)
        raise MemoryError()
    for i in range(na - db):
        q[i] = 0
    cdef unsigned long long inv_lead = _inv_mod(bb[db], pp)
    cdef unsigned long long c, factor
    for i in range(na - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        factor = (c * inv_lead) % pp
        q[i - db] = factor
        for j in range(db + 1):
            r[i - db + j] = (<unsigned long long> r[i - db + j] + pp * pp
                             - factor * <unsigned long long> bb[j]) % pp
    qq = _from_buf(q, na - db)
    rr = _from_buf(r, db)
    free(r); free(bb); free(q)
    return qq, rr


def pmonic(list a, p):
    if not a:
        return []
    return pscale(a, _inv_mod(a[len(a) - 1], p), p)


def pgcd(list a, list b, p):
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


def pxgcd(list a, list b, p):
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = _inv_mod(r0[len(r0) - 1], p)
    return pscale(r0, inv, p), pscale(s0, inv, p), pscale(t0, inv, p)


def peval(list a, x, p):
    cdef unsigned long long pp = p
    cdef unsigned long long xx = x % pp
    cdef unsigned long long acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = (acc * xx + <unsigned long long> a[i]) % pp
    return acc


def pmulmod(list a, list b, list mod, p):
    return pdivmod(pmul(a, b, p), mod, p)[1]


def ppowmod(list a, e, list mod, p):
    result = [1]
    base = pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = pmulmod(result, base, mod, p)
        base = pmulmod(base, base, mod, p)
        e >>= 1
    return result


def pinvmod(list a, list mod, p):
    g, s, _ = pxgcd(a, mod, p)
    if g != [1]:
        raise ZeroDivisionError("element not invertible")
    return pdivmod(s, mod, p)[1]
