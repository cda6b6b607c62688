"""Rank-2 Drinfeld F_q[X]-modules over a finite extension L.

A module phi is determined by phi_X = delta*tau^2 + g*tau + omega with
delta != 0, where omega is the image of X in L.  phi extends to all of
F_q[X] multiplicatively; `phi(a)` evaluates by Horner, left-multiplying by
phi_X, which costs two Frobenius steps and at most two multiplications per
coefficient and is the workhorse of everything built on top.

The Frobenius endomorphism tau_L = tau^d satisfies a unique quadratic
relation tau_L^2 + phi(h)*tau_L - phi(f) = 0 with deg f = d and
deg h <= (d-1)/2 for odd d.  `frobenius_charpoly` recovers (h, f) by linear
algebra over F_q: both sides of the relation are F_q-linear in the unknown
coefficients, so the pair is the unique combination of the flattened Ore
coefficient vectors hitting -tau^(2d).  `residual` checks a candidate pair
directly by Horner evaluation, which is how large fixed instances are
verified without touching the solver.
"""

from __future__ import annotations

from ._linalg import LinearCombiner
from .base_field import ExtField, FieldElement
from .errors import (
    EvenDegreeExtension,
    InconsistentSystem,
    MixedFields,
    NotAnIsogeny,
    NotSeparable,
)
from .fq_poly import FqPolynomial
from .ore import OrePolynomial


class CharPoly:
    """The pair (h, f) defining xi = Y^2 + h(X)*Y - f(X)."""

    __slots__ = ("h", "f")

    def __init__(self, h: FqPolynomial, f: FqPolynomial):
        if f.is_zero:
            raise ValueError("f must be nonzero")
        if h.base != f.base:
            raise ValueError("h and f over different prime fields")
        self.h = h
        self.f = f

    @property
    def d(self) -> int:
        return self.f.degree

    def xi_of(self, v: FqPolynomial) -> FqPolynomial:
        """xi(X, v) = v^2 + h*v - f as a polynomial in X."""
        return v * v + self.h * v - self.f

    def __eq__(self, other):
        return (isinstance(other, CharPoly)
                and other.h == self.h and other.f == self.f)

    def __hash__(self):
        return hash(("CharPoly", self.h, self.f))

    def __repr__(self):
        return f"CharPoly(h={self.h.to_text()}, f={self.f.to_text()})"


class DrinfeldModule:
    """phi with phi_X = delta*tau^2 + g*tau + omega, delta != 0."""

    __slots__ = ("field", "delta", "g", "omega")

    def __init__(self, delta: FieldElement, g: FieldElement, omega: FieldElement):
        if delta.field != g.field or delta.field != omega.field:
            raise MixedFields("coefficients from different fields")
        if delta.is_zero:
            raise ValueError("delta must be nonzero (rank 2)")
        self.field = delta.field
        self.delta = delta
        self.g = g
        self.omega = omega

    @classmethod
    def from_j(cls, j: FieldElement, omega: FieldElement) -> "DrinfeldModule":
        """The normalized module with the given j-invariant.

        j != 0 gives phi_X = j^(-1)*tau^2 + tau + omega; j = 0 gives
        tau^2 + omega.
        """
        fld = j.field
        if j.is_zero:
            return cls(fld.one, fld.zero, omega)
        return cls(j.inverse(), fld.one, omega)

    @property
    def phi_x(self) -> OrePolynomial:
        return OrePolynomial(self.field, (self.omega, self.g, self.delta))

    def j_invariant(self) -> FieldElement:
        """g^(q+1) / delta."""
        return (self.g.frobenius() * self.g) / self.delta

    # -- evaluation ------------------------------------------------------------

    def _lmul_phix_vals(self, vals: list) -> list:
        """Raw-value coefficients of phi_X * (sum vals[k] tau^k)."""
        if not vals:
            return []
        fld = self.field
        zero = fld._zero_val()
        out = [zero] * (len(vals) + 2)
        dv = self.delta.val
        gv = self.g.val
        g_zero = fld._is_zero_val(gv)
        g_one = gv == fld._one_val()
        wv = self.omega.val
        # multiplying by omega = X mod p is a single shift-and-reduce over F_2
        if fld.q == 2 and wv == 2:
            def wmul(v):
                return fld._reduce2(v << 1)
        else:
            def wmul(v):
                return fld._vmul(wv, v)
        for k, v in enumerate(vals):
            if fld._is_zero_val(v):
                continue
            vq = fld._vfrob(v, 1)
            out[k] = fld._vadd(out[k], wmul(v))
            if g_one:
                out[k + 1] = fld._vadd(out[k + 1], vq)
            elif not g_zero:
                out[k + 1] = fld._vadd(out[k + 1], fld._vmul(gv, vq))
            out[k + 2] = fld._vadd(out[k + 2], fld._vmul(dv, fld._vfrob(vq, 1)))
        return out

    def phi(self, a: FqPolynomial) -> OrePolynomial:
        """The image phi_a, of tau-degree 2*deg(a)."""
        if a.base != self.field.base:
            raise MixedFields("polynomial over a different prime field")
        fld = self.field
        vals: list = []
        for c in reversed(a.coeffs()):
            vals = self._lmul_phix_vals(vals)
            if c:
                cv = fld.from_const(c).val
                if vals:
                    vals[0] = fld._vadd(vals[0], cv)
                else:
                    vals = [cv]
        return OrePolynomial(fld, tuple(FieldElement(fld, v) for v in vals))

    def lmul_phix(self, p: OrePolynomial) -> OrePolynomial:
        """phi_X * p, cheaper than generic Ore multiplication."""
        fld = self.field
        vals = self._lmul_phix_vals([c.val for c in p.coeffs])
        return OrePolynomial(fld, tuple(FieldElement(fld, v) for v in vals))

    def phi_x_power_vals(self, n: int) -> list[list]:
        """Raw coefficient lists of phi_(X^i) for i = 0..n."""
        fld = self.field
        powers = [[fld._one_val()]]
        for _ in range(n):
            powers.append(self._lmul_phix_vals(powers[-1]))
        return powers

    # -- Frobenius characteristic polynomial -------------------------------------

    def frobenius_charpoly(self) -> CharPoly:
        """The unique (h, f) with tau_L^2 + phi(h)*tau_L - phi(f) = 0,
        deg f = d, deg h <= (d-1)/2.  Requires d odd."""
        fld = self.field
        d = fld.d
        if d % 2 == 0:
            raise EvenDegreeExtension("odd extension degree required")
        q = fld.q
        h_slots = (d - 1) // 2 + 1
        width = (2 * d + 1) * d

        def flatten(vals, shift=0):
            if q == 2:
                acc = 0
                for k, v in enumerate(vals):
                    acc |= v << ((k + shift) * d)
                return acc
            acc = [0] * width
            for k, v in enumerate(vals):
                acc[(k + shift) * d:(k + shift + 1) * d] = v
            return acc

        powers = self.phi_x_power_vals(d)
        comb = LinearCombiner(q)
        for i in range(h_slots):
            if comb.add(flatten(powers[i], shift=d)) is not None:
                raise InconsistentSystem("dependent column in charpoly system")
        for i in range(d + 1):
            vals = powers[i]
            if q != 2:
                vals = [tuple((-x) % q for x in v) for v in vals]
            if comb.add(flatten(vals)) is not None:
                raise InconsistentSystem("dependent column in charpoly system")
        if q == 2:
            target = 1 << (2 * d * d)
        else:
            target = [0] * width
            target[2 * d * d] = q - 1
        combo = comb.add(target)
        if combo is None:
            raise InconsistentSystem("no (h, f) satisfies the Frobenius relation")
        h = FqPolynomial.from_coeffs(fld.base, combo[:h_slots])
        f = FqPolynomial.from_coeffs(fld.base, combo[h_slots:h_slots + d + 1])
        if f.degree != d:
            raise InconsistentSystem("recovered f has wrong degree")
        return CharPoly(h, f)

    def residual(self, cp: CharPoly) -> OrePolynomial:
        """tau^(2d) + phi(h)*tau^d - phi(f); zero iff (h, f) is the charpoly."""
        d = self.field.d
        tau2d = OrePolynomial.tau_power(self.field, 2 * d)
        return tau2d + self.phi(cp.h).shift(d) - self.phi(cp.f)

    def satisfies_charpoly(self, cp: CharPoly) -> bool:
        return self.residual(cp).is_zero

    # -- identity ------------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, DrinfeldModule)
                and other.field == self.field
                and other.delta == self.delta
                and other.g == self.g
                and other.omega == self.omega)

    def __hash__(self):
        return hash(("DrinfeldModule", self.delta, self.g, self.omega))

    def __repr__(self):
        return (f"DrinfeldModule(delta={self.delta.encode()}, "
                f"g={self.g.encode()}, omega={self.omega.encode()})")


def is_ordinary(cp: CharPoly, p: FqPolynomial) -> bool:
    """Ordinary iff the characteristic prime p does not divide h."""
    return not (cp.h % p).is_zero


def velu_codomain(phi: DrinfeldModule, iota: OrePolynomial) -> DrinfeldModule:
    """The module psi with iota * phi_X = psi_X * iota, for separable iota.

    The three coefficients of psi_X follow from the low-order coefficients
    of the commutation identity:

        mu_i = iota_0^(-q^i) * (sum_{j<=i} iota_j * lam_{i-j}^(q^j)
                                - sum_{j<i} mu_j * iota_{i-j}^(q^j))

    with (lam_0, lam_1, lam_2) = (omega, g, delta).  The full identity is
    then verified exactly; NotAnIsogeny is raised if it fails (the kernel of
    iota is not stable under the module action in that case).
    """
    if iota.field != phi.field:
        raise MixedFields("iota over a different field")
    if iota.is_zero or not iota.is_separable:
        raise NotSeparable("iota must be separable (nonzero tau^0 coefficient)")
    lam = (phi.omega, phi.g, phi.delta)
    mu: list[FieldElement] = []
    i0k = iota.coeffs[0]
    for i in range(3):
        if i:
            i0k = i0k.frobenius()
        s = phi.field.zero
        for j in range(i + 1):
            c = iota.coeff(j)
            if not c.is_zero:
                s = s + c * lam[i - j].frobenius(j)
        for j in range(i):
            c = iota.coeff(i - j)
            if not c.is_zero:
                s = s - mu[j] * c.frobenius(j)
        mu.append(s / i0k)
    if mu[0] != phi.omega:
        raise NotAnIsogeny("codomain does not fix gamma")
    if mu[2].is_zero:
        raise NotAnIsogeny("codomain would not have rank 2")
    psi = DrinfeldModule(mu[2], mu[1], phi.omega)
    if iota * phi.phi_x != psi.phi_x * iota:
        raise NotAnIsogeny("iota * phi_X != psi_X * iota")
    return psi
