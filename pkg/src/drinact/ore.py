"""The non-commutative ring L{tau} of Ore polynomials, tau*a = a^q*tau.

Coefficients are FieldElements of one ExtField, little-endian in tau with no
trailing zeros.  Multiplication composes the underlying F_q-linear maps:
(sum a_i tau^i)(sum b_j tau^j) has coefficient sum(a_i * b_j^(q^i)) at
tau^(i+j).  The ring is left-Euclidean; right_divmod, rgcd and exact right
division implement that structure.

The cost model matters here: right division with a large degree gap raises
the divisor's coefficients through consecutive Frobenius powers one step at
a time (never by binary exponentiation, which the twist makes impossible),
so a remainder of tau^d modulo a low-degree divisor costs O(gap * deg)
Frobenius steps and multiplications.
"""

from __future__ import annotations

from .base_field import ExtField, FieldElement, encode_element
from .errors import (
    BothZero,
    DivisionByZero,
    MixedFields,
    NotRightDivisible,
    ZeroPolynomial,
)


class OrePolynomial:
    """Immutable element of L{tau}."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs):
        n = len(coeffs)
        while n and coeffs[n - 1].is_zero:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: ExtField) -> "OrePolynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: ExtField) -> "OrePolynomial":
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, elem: FieldElement) -> "OrePolynomial":
        return cls(elem.field, (elem,))

    @classmethod
    def tau_power(cls, field: ExtField, k: int, coeff: FieldElement | None = None) -> "OrePolynomial":
        c = field.one if coeff is None else coeff
        return cls(field, (field.zero,) * k + (c,))

    @classmethod
    def from_coeffs(cls, field: ExtField, coeffs) -> "OrePolynomial":
        return cls(field, tuple(coeffs))

    # -- structure --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one

    @property
    def leading(self) -> FieldElement:
        if self.is_zero:
            raise ZeroPolynomial("zero Ore polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1].is_one

    def coeff(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def height(self) -> int:
        """Index of the lowest nonzero coefficient."""
        if self.is_zero:
            raise ZeroPolynomial("height of the zero Ore polynomial")
        for i, c in enumerate(self.coeffs):
            if not c.is_zero:
                return i
        raise AssertionError("unreachable")

    @property
    def is_separable(self) -> bool:
        """True when tau does not right-divide, i.e. the tau^0 coefficient is nonzero."""
        return bool(self.coeffs) and not self.coeffs[0].is_zero

    # -- additive structure --------------------------------------------------------

    def _same(self, other) -> "OrePolynomial":
        if not isinstance(other, OrePolynomial):
            raise TypeError(f"expected OrePolynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedFields("Ore polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OrePolynomial(self.field, out)

    def __sub__(self, other):
        other = self._same(other)
        out = list(self.coeffs) + [self.field.zero] * (len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return OrePolynomial(self.field, out)

    def __neg__(self):
        return OrePolynomial(self.field, tuple(-c for c in self.coeffs))

    # -- multiplicative structure -----------------------------------------------------

    def __mul__(self, other):
        other = self._same(other)
        if self.is_zero or other.is_zero:
            return OrePolynomial.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        twisted = [c.val for c in other.coeffs]
        fld = self.field
        for i, a in enumerate(self.coeffs):
            if i:
                twisted = [fld._vfrob(v, 1) for v in twisted]
            if a.is_zero:
                continue
            av = a.val
            for j, bv in enumerate(twisted):
                out[i + j] = FieldElement(fld, fld._vadd(out[i + j].val, fld._vmul(av, bv)))
        return OrePolynomial(self.field, out)

    def lscale(self, c: FieldElement) -> "OrePolynomial":
        """c * self: scales every coefficient by c on the left."""
        if c.is_zero:
            return OrePolynomial.zero(self.field)
        return OrePolynomial(self.field, tuple(c * a for a in self.coeffs))

    def rscale(self, c: FieldElement) -> "OrePolynomial":
        """self * c: coefficient i picks up c^(q^i)."""
        if c.is_zero:
            return OrePolynomial.zero(self.field)
        out = []
        ck = c
        for i, a in enumerate(self.coeffs):
            if i:
                ck = ck.frobenius()
            out.append(a * ck)
        return OrePolynomial(self.field, out)

    def shift(self, k: int) -> "OrePolynomial":
        """self * tau^k: coefficients move up unchanged."""
        if self.is_zero or k == 0:
            return self
        return OrePolynomial(self.field, (self.field.zero,) * k + self.coeffs)

    def monic(self) -> "OrePolynomial":
        if self.is_zero or self.coeffs[-1].is_one:
            return self
        return self.lscale(self.coeffs[-1].inverse())

    # -- Euclidean structure --------------------------------------------------------

    def right_divmod(self, divisor: "OrePolynomial", need_quotient: bool = True):
        """(Q, R) with self = Q * divisor + R and deg R < deg divisor.

        With need_quotient=False the quotient is not tracked and None is
        returned in its place.
        """
        divisor = self._same(divisor)
        if divisor.is_zero:
            raise DivisionByZero("right division by the zero Ore polynomial")
        fld = self.field
        n2 = divisor.degree
        if self.degree < n2:
            return (OrePolynomial.zero(fld) if need_quotient else None), self
        gap = self.degree - n2
        lead = divisor.coeffs[-1]
        if lead.is_one:
            linv = None
            dm = [c.val for c in divisor.coeffs[:-1]]
        else:
            linv = lead.inverse()
            dm = [(linv * c).val for c in divisor.coeffs[:-1]]
        # rows[k] = low coefficients of the monic divisor raised to frobenius^k
        rows = [dm]
        for _ in range(gap):
            dm = [fld._vfrob(v, 1) for v in dm]
            rows.append(dm)
        r = [c.val for c in self.coeffs]
        quot = [None] * (gap + 1) if need_quotient else None
        zero = fld._zero_val()
        for k in range(gap, -1, -1):
            c = r[k + n2]
            if fld._is_zero_val(c):
                if need_quotient:
                    quot[k] = zero
                continue
            if need_quotient:
                quot[k] = c
            row = rows[k]
            for j in range(n2):
                rv = row[j]
                if not fld._is_zero_val(rv):
                    r[k + j] = fld._vsub(r[k + j], fld._vmul(c, rv))
            r[k + n2] = zero
        rem = OrePolynomial(fld, tuple(FieldElement(fld, v) for v in r[:n2]))
        if not need_quotient:
            return None, rem
        if linv is not None:
            # computed against the monic divisor; fold the unit back in
            lv = linv.val
            fixed = []
            for k, qv in enumerate(quot):
                if k:
                    lv = fld._vfrob(lv, 1)
                fixed.append(fld._vmul(qv, lv))
            quot = fixed
        q_poly = OrePolynomial(fld, tuple(FieldElement(fld, v) for v in quot))
        return q_poly, rem

    def __mod__(self, other):
        return self.right_divmod(other, need_quotient=False)[1]

    def __floordiv__(self, other):
        return self.right_divmod(other)[0]

    # -- evaluation as an F_q-linear map ---------------------------------------------

    def apply(self, x: FieldElement) -> FieldElement:
        """Value of the associated endomorphism: sum(p_i * x^(q^i))."""
        if x.field != self.field:
            raise MixedFields("argument from a different field")
        acc = self.field.zero
        xi = x
        for i, c in enumerate(self.coeffs):
            if i:
                xi = xi.frobenius()
            if not c.is_zero:
                acc = acc + c * xi
        return acc

    # -- identity and text -------------------------------------------------------------

    def to_text(self) -> str:
        return "tau-coeffs: [" + "; ".join(encode_element(c) for c in self.coeffs) + "]"

    def __eq__(self, other):
        return (isinstance(other, OrePolynomial)
                and other.field == self.field
                and tuple(c.val for c in other.coeffs) == tuple(c.val for c in self.coeffs))

    def __hash__(self):
        return hash(("OrePolynomial", self.field, tuple(c.val for c in self.coeffs)))

    def __repr__(self):
        return f"OrePolynomial({self.to_text()})"


def rgcd(p1: OrePolynomial, p2: OrePolynomial) -> OrePolynomial:
    """Monic right-gcd: generator of the left ideal spanned by p1 and p2."""
    if p1.is_zero and p2.is_zero:
        raise BothZero("rgcd(0, 0) is undefined")
    a, b = p1, p2
    while not b.is_zero:
        r = a % b
        a, b = b, r.monic()
    return a.monic()


def rxgcd(p1: OrePolynomial, p2: OrePolynomial):
    """(g, a, b) with a*p1 + b*p2 = g = rgcd(p1, p2), g monic."""
    if p1.is_zero and p2.is_zero:
        raise BothZero("rgcd(0, 0) is undefined")
    fld = p1._same(p2).field
    r0, r1 = p1, p2
    s0, s1 = OrePolynomial.one(fld), OrePolynomial.zero(fld)
    t0, t1 = OrePolynomial.zero(fld), OrePolynomial.one(fld)
    while not r1.is_zero:
        q, r = r0.right_divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = r0.leading.inverse()
    return r0.lscale(c), s0.lscale(c), t0.lscale(c)


def exact_right_div(p: OrePolynomial, divisor: OrePolynomial) -> OrePolynomial:
    """Quotient of an exact right division; NotRightDivisible otherwise."""
    q, r = p.right_divmod(divisor)
    if not r.is_zero:
        raise NotRightDivisible(
            f"remainder of tau-degree {r.degree} is nonzero")
    return q
