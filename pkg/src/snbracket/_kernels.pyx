# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels; same contract as ``_kernels_py``."""

from fractions import Fraction

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM


cdef object _Fraction = Fraction


cpdef object normalize(object c):
    if type(c) is _Fraction and c.denominator == 1:
        return c.numerator
    return c


cdef inline tuple _addexp(tuple a, tuple b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for k in range(n):
        v = <long>a[k] + <long>b[k]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, k, v)
    return out


cpdef dict add(dict a, dict b):
    cdef dict out
    cdef object m, c, s
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = normalize(s)
            else:
                del out[m]
    return out


cpdef dict sub(dict a, dict b):
    cdef dict out = a.copy()
    cdef object m, c, s
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = -c
        else:
            s = s - c
            if s:
                out[m] = normalize(s)
            else:
                del out[m]
    return out


cpdef dict scale(dict a, object c):
    cdef dict out
    cdef object m, v
    if not c:
        return {}
    if c == 1:
        return a.copy()
    out = {}
    for m, v in a.items():
        out[m] = normalize(v * c)
    return out


cpdef dict mul(dict a, dict b):
    cdef dict acc = {}
    cdef object ma, ca, mb, cb, m, s
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _addexp(<tuple>ma, <tuple>mb)
            s = acc.get(m)
            if s is None:
                acc[m] = ca * cb
            else:
                acc[m] = s + ca * cb
    return finalize(acc)


cpdef dict partial(dict a, Py_ssize_t i):
    cdef dict out = {}
    cdef object m, c
    cdef long e
    cdef list lst
    for m, c in a.items():
        e = (<tuple>m)[i]
        if e:
            lst = list(<tuple>m)
            lst[i] = e - 1
            out[tuple(lst)] = c * e
    return out


cpdef void add_into(dict acc, dict a, object c=1):
    cdef object m, v, s
    cdef bint unit = (c == 1)
    for m, v in a.items():
        if not unit:
            v = c * v
        s = acc.get(m)
        if s is None:
            acc[m] = v
        else:
            acc[m] = s + v


cpdef void addmul_into(dict acc, dict a, dict b, object c=1):
    cdef object ma, ca, mb, cb, m, s
    cdef bint unit = (c == 1)
    for ma, ca in a.items():
        if not unit:
            ca = ca * c
        for mb, cb in b.items():
            m = _addexp(<tuple>ma, <tuple>mb)
            s = acc.get(m)
            if s is None:
                acc[m] = ca * cb
            else:
                acc[m] = s + ca * cb


cpdef dict finalize(dict acc):
    cdef dict out = {}
    cdef object m, c
    for m, c in acc.items():
        if c:
            out[m] = normalize(c)
    return out


cpdef tuple merge_sign(tuple I, tuple J):
    cdef Py_ssize_t n = len(I)
    cdef Py_ssize_t p = 0
    cdef long inv = 0
    cdef long j
    cdef list out
    if not J:
        return (1, I)
    if not I:
        return (1, J)
    out = []
    for jo in J:
        j = jo
        while p < n and <long>I[p] < j:
            out.append(I[p])
            p += 1
        if p < n and <long>I[p] == j:
            return (0, None)
        inv += n - p
        out.append(jo)
    out.extend(I[p:])
    return ((-1 if inv & 1 else 1), tuple(out))
