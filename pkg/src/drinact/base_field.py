"""Prime fields F_q and their extensions L = F_q[X]/(p).

Representation of an element of L, little-endian by coefficient:

* q = 2:  a single int, bit i = coefficient of X^i (see _gf2);
* q > 2:  a tuple of d ints in [0, q).

The binary case is the production path (it must carry degree-521 extensions),
so ExtField precomputes byte-indexed XOR tables at construction: one set for
reduction modulo p, and one each for the Frobenius maps x -> x^2 and
x -> x^4.  A Frobenius application then costs ~d/8 table lookups instead of a
full modular squaring.  Fields with q > 2 only ever appear at desk scale and
use plain schoolbook arithmetic.

Textual encodings: over F_2 the NTL hex convention is used, in which digit k
of the string after "0x" carries the coefficients of X^(4k)..X^(4k+3) (bit j
of the digit is the coefficient of X^(4k+j)).  For q > 2 the encoding is a
comma-separated little-endian list of decimal residues.
"""

from __future__ import annotations

import random

from . import _gf2, _gfp
from .errors import (
    DivisionByZero,
    MalformedHex,
    MixedFields,
    WrongCharacteristic,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class PrimeField:
    """The prime field F_q, 2 <= q < 2^16.  Elements are ints in [0, q)."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if not isinstance(q, int) or not (2 <= q < 1 << 16) or not _is_prime(q):
            raise ValueError(f"q must be a prime in [2, 2^16), got {q!r}")
        self.q = q

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


def _byte_tables(images: list[int], width: int) -> list[list[int]]:
    """XOR tables for the F_2-linear map sending bit i to images[i].

    Table[pos][byte] is the image of the 8 bits at positions 8*pos..8*pos+7.
    """
    npos = (width + 7) // 8
    tables = []
    for pos in range(npos):
        row = [0] * 256
        base = pos * 8
        for v in range(1, 256):
            low = v & (-v)
            j = base + low.bit_length() - 1
            row[v] = row[v ^ low] ^ (images[j] if j < len(images) else 0)
        tables.append(row)
    return tables


def _apply_tables(tables: list[list[int]], v: int) -> int:
    acc = 0
    pos = 0
    while v:
        acc ^= tables[pos][v & 0xFF]
        v >>= 8
        pos += 1
    return acc


class ExtField:
    """L = F_q[X]/(p) for p monic irreducible of degree d >= 1."""

    __slots__ = ("base", "q", "d", "modulus", "_mval", "_mask",
                 "_red", "_f1", "_f2", "_gen", "_norm_exp")

    def __init__(self, modulus, check: bool = True):
        self.base = modulus.base
        self.q = self.base.q
        self.d = modulus.degree
        self.modulus = modulus
        if self.d < 1:
            raise ValueError("modulus must have degree >= 1")
        if not modulus.is_monic:
            raise ValueError("modulus must be monic")
        if check and not modulus.is_irreducible():
            raise ValueError(f"modulus {modulus!r} is not irreducible")
        self._mval = modulus.val
        self._gen = None
        self._norm_exp = None
        if self.q == 2:
            d = self.d
            self._mask = (1 << d) - 1
            tail = self._mval ^ (1 << d)
            # images of X^(d+k) for k = 0..d-2, enough for any product of
            # two reduced elements
            images = [tail]
            for _ in range(d - 2):
                v = images[-1] << 1
                if (v >> d) & 1:
                    v = (v ^ (1 << d)) ^ tail
                images.append(v)
            self._red = _byte_tables(images, max(d - 1, 1))
            basis1 = [self._reduce2(1 << (2 * i)) for i in range(d)]
            self._f1 = _byte_tables(basis1, d)
            basis2 = [_apply_tables(self._f1, b) for b in basis1]
            self._f2 = _byte_tables(basis2, d)
        else:
            self._mask = None
            self._red = self._f1 = self._f2 = None

    # -- value-level kernels (ints for q=2, tuples otherwise) --------------

    def _reduce2(self, v: int) -> int:
        low = v & self._mask
        v >>= self.d
        pos = 0
        while v:
            low ^= self._red[pos][v & 0xFF]
            v >>= 8
            pos += 1
        return low

    def _vadd(self, a, b):
        if self.q == 2:
            return a ^ b
        return tuple((x + y) % self.q for x, y in zip(a, b))

    def _vsub(self, a, b):
        if self.q == 2:
            return a ^ b
        return tuple((x - y) % self.q for x, y in zip(a, b))

    def _vneg(self, a):
        if self.q == 2:
            return a
        return tuple((-x) % self.q for x in a)

    def _vmul(self, a, b):
        if self.q == 2:
            return self._reduce2(_gf2.mul(a, b))
        prod = _gfp.mul(a, b, self.q)
        red = _gfp.mod(prod, self._mval, self.q)
        return red + (0,) * (self.d - len(red))

    def _vsq(self, a):
        if self.q == 2:
            return self._reduce2(_gf2.square(a))
        return self._vmul(a, a)

    def _vinv(self, a):
        if self.q == 2:
            if a == 0:
                raise DivisionByZero("inverse of zero")
            g, s, _ = _gf2.xgcd(a, self._mval)
            if g != 1:
                raise ArithmeticError("modulus is not irreducible")
            return self._reduce2(s)
        at = _gfp.trim(list(a))
        if not at:
            raise DivisionByZero("inverse of zero")
        g, s, _ = _gfp.xgcd(at, self._mval, self.q)
        if _gfp.deg(g) != 0:
            raise ArithmeticError("modulus is not irreducible")
        s = _gfp.scale(s, pow(g[0], -1, self.q), self.q)
        return s + (0,) * (self.d - len(s))

    def _vpow(self, a, e: int):
        if e < 0:
            return self._vpow(self._vinv(a), -e)
        acc = self._one_val()
        if e == 0:
            return acc
        for bit in bin(e)[2:]:
            acc = self._vsq(acc)
            if bit == "1":
                acc = self._vmul(acc, a)
        return acc

    def _vfrob(self, a, k: int):
        k %= self.d
        if k == 0:
            return a
        if self.q == 2:
            while k >= 2:
                a = _apply_tables(self._f2, a)
                k -= 2
            if k:
                a = _apply_tables(self._f1, a)
            return a
        for _ in range(k):
            a = self._vpow(a, self.q)
        return a

    def _zero_val(self):
        return 0 if self.q == 2 else (0,) * self.d

    def _one_val(self):
        return 1 if self.q == 2 else (1,) + (0,) * (self.d - 1)

    def _is_zero_val(self, a) -> bool:
        return a == 0 if self.q == 2 else not any(a)

    # -- element construction ----------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self._zero_val())

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self._one_val())

    @property
    def gen(self) -> FieldElement:
        """The residue class of X."""
        if self._gen is None:
            if self.q == 2:
                self._gen = FieldElement(self, self._reduce2(2) if self.d == 1 else 2)
            else:
                if self.d == 1:
                    c = (-self._mval[0]) % self.q
                    self._gen = FieldElement(self, (c,))
                else:
                    self._gen = FieldElement(self, (0, 1) + (0,) * (self.d - 2))
        return self._gen

    def element(self, coeffs) -> FieldElement:
        """Element with the given little-endian coefficient list (length <= d)."""
        coeffs = list(coeffs)
        if len(coeffs) > self.d:
            raise ValueError(f"at most {self.d} coefficients expected")
        if self.q == 2:
            v = 0
            for i, c in enumerate(coeffs):
                if c % 2:
                    v |= 1 << i
            return FieldElement(self, v)
        coeffs = [c % self.q for c in coeffs] + [0] * (self.d - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_const(self, c: int) -> FieldElement:
        """Embed a residue of F_q."""
        return self.element([c % self.q])

    def from_poly(self, poly) -> FieldElement:
        """Reduce an F_q[X] polynomial modulo the field modulus."""
        if poly.base != self.base:
            raise MixedFields("polynomial is over a different prime field")
        if self.q == 2:
            return FieldElement(self, _gf2.mod(poly.val, self._mval))
        red = _gfp.mod(poly.val, self._mval, self.q)
        return FieldElement(self, red + (0,) * (self.d - len(red)))

    def random_element(self, rng: random.Random, nonzero: bool = False) -> FieldElement:
        while True:
            if self.q == 2:
                val = rng.getrandbits(self.d)
            else:
                val = tuple(rng.randrange(self.q) for _ in range(self.d))
            if nonzero and self._is_zero_val(val):
                continue
            return FieldElement(self, val)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (self is other
                or (isinstance(other, ExtField)
                    and other.q == self.q
                    and other._mval == self._mval))

    def __hash__(self):
        return hash(("ExtField", self.q, self._mval))

    def __repr__(self):
        return f"ExtField(q={self.q}, d={self.d})"


class FieldElement:
    """Immutable element of an ExtField."""

    __slots__ = ("field", "val")

    def __init__(self, field: ExtField, val):
        self.field = field
        self.val = val

    def _same(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedFields("operands belong to different extension fields")
        return other

    @property
    def is_zero(self) -> bool:
        return self.field._is_zero_val(self.val)

    @property
    def is_one(self) -> bool:
        return self.val == self.field._one_val()

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._vadd(self.val, other.val))

    def __sub__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._vsub(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.field, self.field._vneg(self.val))

    def __mul__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._vmul(self.val, other.val))

    def __truediv__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._vmul(self.val, self.field._vinv(other.val)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._vinv(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._vpow(self.val, e))

    def square(self) -> "FieldElement":
        return FieldElement(self.field, self.field._vsq(self.val))

    def frobenius(self, k: int = 1) -> "FieldElement":
        """x^(q^k); k is taken mod d since Frobenius has order d."""
        if k < 0:
            raise ValueError("k must be non-negative")
        return FieldElement(self.field, self.field._vfrob(self.val, k))

    def norm(self) -> "FieldElement":
        """Norm to F_q, x^((q^d - 1)/(q - 1)), returned as a constant element."""
        fld = self.field
        if self.is_zero:
            return fld.zero
        if fld.q == 2:
            return fld.one
        if fld._norm_exp is None:
            fld._norm_exp = (fld.q ** fld.d - 1) // (fld.q - 1)
        return self ** fld._norm_exp

    def coeffs(self) -> list[int]:
        if self.field.q == 2:
            v = self.val
            return [(v >> i) & 1 for i in range(self.field.d)]
        return list(self.val)

    def constant(self) -> int:
        """The residue in F_q, for elements of the prime subfield."""
        cs = self.coeffs()
        if any(cs[1:]):
            raise ValueError("element does not lie in the prime subfield")
        return cs[0]

    def to_poly(self):
        """Canonical representative in F_q[X] of degree < d."""
        from .fq_poly import FqPolynomial
        return FqPolynomial.from_coeffs(self.field.base, self.coeffs())

    def encode(self) -> str:
        return encode_element(self)

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and other.field == self.field
                and other.val == self.val)

    def __hash__(self):
        return hash(("FieldElement", self.field.q, self.field._mval, self.val))

    def __repr__(self):
        return f"FieldElement({self.encode()!r})"


# -- textual encodings -------------------------------------------------------

def hex_encode(obj) -> str:
    """NTL hex string of an F_2[X] polynomial or F_2-extension element."""
    base = getattr(obj, "base", None) or getattr(obj, "field").base
    if base.q != 2:
        raise WrongCharacteristic("hex form only exists for q = 2")
    return _gf2.hex_encode(obj.val)


def hex_decode(text: str, base: PrimeField):
    """Parse an NTL hex string into an FqPolynomial over F_2."""
    from .fq_poly import FqPolynomial
    if base.q != 2:
        raise WrongCharacteristic("hex form only exists for q = 2")
    try:
        bits = _gf2.hex_decode(text)
    except ValueError as exc:
        raise MalformedHex(str(exc)) from None
    return FqPolynomial(base, bits)


def encode_poly(poly) -> str:
    """Hex for q = 2, comma-separated little-endian residues otherwise."""
    if poly.base.q == 2:
        return _gf2.hex_encode(poly.val)
    return ",".join(str(c) for c in poly.val) if poly.val else "0"


def decode_poly(text: str, base: PrimeField):
    from .fq_poly import FqPolynomial
    if base.q == 2:
        return hex_decode(text, base)
    try:
        coeffs = [int(part) for part in text.strip().split(",")]
    except ValueError:
        raise MalformedHex(f"invalid coefficient list {text!r}") from None
    if any(not (0 <= c < base.q) for c in coeffs):
        raise MalformedHex(f"coefficients out of range in {text!r}")
    return FqPolynomial.from_coeffs(base, coeffs)


def encode_element(elem: FieldElement) -> str:
    if elem.field.q == 2:
        return _gf2.hex_encode(elem.val)
    return ",".join(str(c) for c in elem.val)


def decode_element(text: str, field: ExtField) -> FieldElement:
    poly = decode_poly(text, field.base)
    if poly.degree >= field.d:
        raise MalformedHex(f"encoded element has degree {poly.degree} >= d = {field.d}")
    return field.from_poly(poly)
