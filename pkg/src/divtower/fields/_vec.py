"""Coefficient-vector kernels for towers of quadratic extensions.

An element of F_k = F_{k-1}(sqrt r_k) is a list of 2**k base-field
coefficients; the first half is the F_{k-1} part, the second half the
coefficient of sqrt r_k.  ``rads[j]`` is the coefficient list of r_{j+1}
(length 2**j).
"""

from __future__ import annotations


def is_zero(v) -> bool:
    for c in v:
        if c:
            return False
    return True


def add(x, y):
    return [a + b for a, b in zip(x, y)]


def sub(x, y):
    return [a - b for a, b in zip(x, y)]


def neg(x):
    return [-a for a in x]


def scale(x, s):
    return [a * s for a in x]


def mul(x, y, rads, k):
    if k == 0:
        return [x[0] * y[0]]
    if k == 1:
        a, b = x
        c, d = y
        if not b:
            return [a * c, a * d] if d else [a * c, b]
        if not d:
            return [a * c, b * c]
        return [a * c + b * d * rads[0][0], a * d + b * c]
    h = 1 << (k - 1)
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    bz = is_zero(b)
    dz = is_zero(d)
    if bz and dz:
        return mul(a, c, rads, k - 1) + b
    if bz:
        if is_zero(a):
            return a + a
        return mul(a, c, rads, k - 1) + mul(a, d, rads, k - 1)
    if dz:
        if is_zero(c):
            return c + c
        return mul(a, c, rads, k - 1) + mul(b, c, rads, k - 1)
    if is_zero(a) and is_zero(c):
        return mul(mul(b, d, rads, k - 1), rads[k - 1], rads, k - 1) + a
    ac = mul(a, c, rads, k - 1)
    bd = mul(b, d, rads, k - 1)
    cross = mul(add(a, b), add(c, d), rads, k - 1)
    lo = add(ac, mul(bd, rads[k - 1], rads, k - 1))
    hi = [p - q - r for p, q, r in zip(cross, ac, bd)]
    return lo + hi


def square(x, rads, k):
    if k == 0:
        return [x[0] * x[0]]
    h = 1 << (k - 1)
    a, b = x[:h], x[h:]
    if is_zero(b):
        return square(a, rads, k - 1) + b
    b2 = square(b, rads, k - 1)
    if is_zero(a):
        return mul(b2, rads[k - 1], rads, k - 1) + a
    lo = add(square(a, rads, k - 1), mul(b2, rads[k - 1], rads, k - 1))
    ab = mul(a, b, rads, k - 1)
    return lo + add(ab, ab)


def norm_down(x, rads, k):
    """Relative norm from F_k to F_{k-1}: a^2 - b^2 r_k."""
    h = 1 << (k - 1)
    a, b = x[:h], x[h:]
    if is_zero(b):
        return square(a, rads, k - 1)
    return sub(square(a, rads, k - 1), mul(square(b, rads, k - 1), rads[k - 1], rads, k - 1))


def inverse(x, rads, k):
    if k == 0:
        return [1 / x[0]]
    h = 1 << (k - 1)
    a, b = x[:h], x[h:]
    if is_zero(b):
        return inverse(a, rads, k - 1) + b
    ninv = inverse(norm_down(x, rads, k), rads, k - 1)
    return mul(a, ninv, rads, k - 1) + neg(mul(b, ninv, rads, k - 1))


def base_norm(x, rads, k):
    """Norm from F_k down to the base field (a single base element)."""
    while k:
        x = norm_down(x, rads, k)
        k -= 1
    return x[0]


def sqrt(x, rads, k, base_sqrt, half):
    """A square root of ``x`` in F_k, or ``None`` if ``x`` is not a square.

    Recursive criterion for F(sqrt d): a + b sqrt d with b != 0 is a square
    iff a^2 - b^2 d = c^2 in F and (a + c)/2 or (a - c)/2 is a square s^2 in
    F; then the root is s + (b / 2s) sqrt d.  With b = 0, a is a square iff
    a or a*d is a square in F.
    """
    if k == 0:
        r = base_sqrt(x[0])
        return None if r is None else [r]
    h = 1 << (k - 1)
    a, b = x[:h], x[h:]
    if is_zero(b):
        if is_zero(a):
            return a + b
        r = sqrt(a, rads, k - 1, base_sqrt, half)
        if r is not None:
            return r + b
        rad = rads[k - 1]
        w = sqrt(mul(a, rad, rads, k - 1), rads, k - 1, base_sqrt, half)
        if w is None:
            return None
        # sqrt(a) = w / sqrt(rad) = (w / rad) sqrt(rad)
        return b + mul(w, inverse(rad, rads, k - 1), rads, k - 1)
    c = sqrt(norm_down(x, rads, k), rads, k - 1, base_sqrt, half)
    if c is None:
        return None
    for cc in (c, neg(c)):
        t = scale(add(a, cc), half)
        if is_zero(t):
            continue
        # cheap necessary condition before the full recursion
        if k > 1 and base_sqrt(base_norm(t, rads, k - 1)) is None:
            continue
        s = sqrt(t, rads, k - 1, base_sqrt, half)
        if s is None:
            continue
        y = mul(b, inverse(add(s, s), rads, k - 1), rads, k - 1)
        return s + y
    return None
