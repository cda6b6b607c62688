"""List-based arithmetic for F_q[X] with q an odd prime.

Polynomials are tuples of ints in [0, q), little-endian, with no trailing
zeros; the zero polynomial is the empty tuple.  Only used at desk scale
(the binary case has its own bit-packed kernel in _gf2).
"""


def trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def deg(a: tuple[int, ...]) -> int:
    return len(a) - 1


def add(a, b, q):
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] = (c[i] + x) % q
    return trim(c)


def sub(a, b, q):
    c = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        c[i] = (c[i] - x) % q
    return trim(c)


def neg(a, q):
    return tuple((-x) % q for x in a)


def scale(a, s, q):
    s %= q
    if s == 0:
        return ()
    return trim([(x * s) % q for x in a])


def mul(a, b, q):
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            c[i + j] = (c[i + j] + x * y) % q
    return trim(c)


def divmod_(a, b, q):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), trim(r)
    inv_lead = pow(b[-1], -1, q)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        c = (c * inv_lead) % q
        quot[k] = c
        for j in range(db + 1):
            r[k + j] = (r[k + j] - c * b[j]) % q
    return trim(quot), trim(r)


def mod(a, b, q):
    return divmod_(a, b, q)[1]


def monic(a, q):
    if not a or a[-1] == 1:
        return a
    return scale(a, pow(a[-1], -1, q), q)


def gcd(a, b, q):
    while b:
        a, b = b, mod(a, b, q)
    return monic(a, q)


def xgcd(a, b, q):
    """g, s, t with s*a + t*b = g and g monic (or zero)."""
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while b:
        quot, r = divmod_(a, b, q)
        a, b = b, r
        s0, s1 = s1, sub(s0, mul(quot, s1, q), q)
        t0, t1 = t1, sub(t0, mul(quot, t1, q), q)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, q)
        a, s0, t0 = scale(a, inv, q), scale(s0, inv, q), scale(t0, inv, q)
    return a, s0, t0


def eval_at(a, x, q):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % q
    return acc
