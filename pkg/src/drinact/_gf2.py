"""Bit-packed arithmetic for F_2[X].

A polynomial sum(c_i X^i) is the integer sum(c_i 2^i); bit i is the
coefficient of X^i.  The zero polynomial is 0 and deg(0) = -1.  These helpers
are free functions on plain ints so that both FqPolynomial and the binary
extension-field kernel can share them without object overhead.
"""

# spread byte b0..b7 -> b0 0 b1 0 ... b7 0 (squaring over F_2 interleaves zeros)
_SPREAD = [0] * 256
for _v in range(256):
    _s = 0
    for _j in range(8):
        if (_v >> _j) & 1:
            _s |= 1 << (2 * _j)
    _SPREAD[_v] = _s
del _v, _s, _j


def deg(a: int) -> int:
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product, 4-bit windows over a."""
    if a == 0 or b == 0:
        return 0
    if a.bit_length() < b.bit_length():
        a, b = b, a
    t2 = b << 1
    t4 = b << 2
    t6 = t4 ^ t2
    t8 = b << 3
    t12 = t8 ^ t4
    t14 = t12 ^ t2
    tab = (0, b, t2, t2 ^ b, t4, t4 ^ b, t6, t6 ^ b,
           t8, t8 ^ b, t8 ^ t2, t8 ^ t2 ^ b, t12, t12 ^ b, t14, t14 ^ b)
    acc = 0
    for k in range((a.bit_length() + 3) & ~3, -4, -4):
        acc = (acc << 4) ^ tab[(a >> k) & 0xF]
    return acc


def square(a: int) -> int:
    """Carry-less square: interleave zero bits."""
    s = 0
    pos = 0
    while a:
        s |= _SPREAD[a & 0xFF] << pos
        a >>= 8
        pos += 16
    return s


def divmod_(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while a and da >= db:
        sh = da - db
        a ^= b << sh
        q |= 1 << sh
        da = a.bit_length() - 1
    return q, a


def mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length() - 1
    da = a.bit_length() - 1
    while a and da >= db:
        a ^= b << (da - db)
        da = a.bit_length() - 1
    return a


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b = g = gcd(a, b)."""
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while b:
        q, r = divmod_(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ mul(q, s1)
        t0, t1 = t1, t0 ^ mul(q, t1)
    return a, s0, t0


def hex_encode(bits: int) -> str:
    """NTL-style hex: digit k carries the coefficients of X^(4k)..X^(4k+3).

    The digit sequence is little-endian by nibble, which is the reverse of
    the ordinary big-endian hex rendering of the integer.
    """
    return "0x" + format(bits, "x")[::-1]


def hex_decode(text: str) -> int:
    s = text.strip().lower()
    if not s.startswith("0x") or len(s) == 2:
        raise ValueError(f"expected 0x-prefixed hex digits, got {text!r}")
    body = s[2:]
    try:
        return int(body[::-1], 16)
    except ValueError:
        raise ValueError(f"invalid hex digits in {text!r}") from None
