"""Pure-Python sparse polynomial kernels.

A polynomial is a ``dict`` mapping exponent tuples to nonzero coefficients.
Coefficients are ``int`` whenever integral and ``Fraction`` otherwise, so the
common integer case never touches ``Fraction`` arithmetic.

The functions here are the reference for ``_kernels.pyx``; both must keep the
same signatures and results.
"""

from fractions import Fraction

__all__ = [
    "normalize",
    "add",
    "sub",
    "scale",
    "mul",
    "partial",
    "add_into",
    "addmul_into",
    "finalize",
    "merge_sign",
]


def normalize(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
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


def sub(a, b):
    out = dict(a)
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


def scale(a, c):
    if not c:
        return {}
    if c == 1:
        return dict(a)
    out = {}
    for m, v in a.items():
        out[m] = normalize(v * c)
    return out


def mul(a, b):
    acc = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple([x + y for x, y in zip(ma, mb)])
            acc[m] = acc.get(m, 0) + ca * cb
    return finalize(acc)


def partial(a, i):
    """Derivative with respect to the variable at 0-based position ``i``."""
    out = {}
    for m, c in a.items():
        e = m[i]
        if e:
            lst = list(m)
            lst[i] = e - 1
            out[tuple(lst)] = c * e
    return out


def add_into(acc, a, c=1):
    """``acc += c*a`` in place, without removing zeros."""
    get = acc.get
    if c == 1:
        for m, v in a.items():
            acc[m] = get(m, 0) + v
    else:
        for m, v in a.items():
            acc[m] = get(m, 0) + c * v


def addmul_into(acc, a, b, c=1):
    """``acc += c*a*b`` in place, without removing zeros."""
    get = acc.get
    for ma, ca in a.items():
        if c != 1:
            ca = ca * c
        for mb, cb in b.items():
            m = tuple([x + y for x, y in zip(ma, mb)])
            acc[m] = get(m, 0) + ca * cb


def finalize(acc):
    return {m: normalize(c) for m, c in acc.items() if c}


def merge_sign(I, J):
    """Sign and merged tuple for ``dx_I ^ dx_J`` on increasing index tuples.

    Returns ``(0, None)`` when the tuples share an index.
    """
    if not J:
        return 1, I
    if not I:
        return 1, J
    inv = 0
    out = []
    p = 0
    n = len(I)
    for j in J:
        while p < n and I[p] < j:
            out.append(I[p])
            p += 1
        if p < n and I[p] == j:
            return 0, None
        inv += n - p
        out.append(j)
    out.extend(I[p:])
    return (-1 if inv & 1 else 1), tuple(out)
