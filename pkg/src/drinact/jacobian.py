"""Imaginary hyperelliptic curves Y^2 + h(X)Y = f(X) and their Jacobians.

The model is imaginary: deg f odd (>= 5), deg h <= genus = (deg f - 1)/2,
h nonzero, and no affine singular point.  Divisor classes are reduced
Mumford pairs (u, v): u monic with deg u <= genus, deg v < deg u, and
u | v^2 + h*v - f.  The group law is Cantor's algorithm, composition
followed by the standard reduction loop; the identity is (1, 0) and
negation is v -> (-v - h) mod u.

f need not be monic: the leading coefficient rides along as curve metadata
and all formulas use xi = Y^2 + hY - f as given (over F_2 it is always 1).
"""

from __future__ import annotations

import random

from .base_field import ExtField, PrimeField
from ._linalg import LinearCombiner
from .errors import (
    DegreeConstraintViolated,
    DegreeTooLarge,
    DivisibilityFails,
    MixedCurves,
    NotMonic,
    SingularCurve,
    TooLarge,
    ZeroH,
)
from .fq_poly import FqPolynomial


class HyperCurve:
    """A smooth imaginary hyperelliptic curve, validated at construction."""

    __slots__ = ("base", "h", "f", "genus")

    def __init__(self, h: FqPolynomial, f: FqPolynomial):
        if h.base != f.base:
            raise ValueError("h and f over different prime fields")
        base = f.base
        if f.is_zero or f.degree % 2 == 0 or f.degree < 5:
            raise DegreeConstraintViolated(
                f"deg f must be odd and >= 5, got {f.degree}")
        genus = (f.degree - 1) // 2
        if h.is_zero:
            raise ZeroH("h must be nonzero")
        if h.degree > genus:
            raise DegreeConstraintViolated(
                f"deg h = {h.degree} exceeds the genus {genus}")
        self.base = base
        self.h = h
        self.f = f
        self.genus = genus
        self._check_smooth()

    def _check_smooth(self):
        h, f, q = self.h, self.f, self.base.q
        if q == 2:
            # eliminating Y from xi = xi_X = xi_Y = 0 leaves
            # h = 0 and f'^2 + f*h'^2 = 0
            df, dh = f.derivative(), h.derivative()
            w = df * df + f * dh * dh
            if h.gcd(w).degree != 0:
                raise SingularCurve("affine singular point over the closure")
        else:
            inv4 = pow(4, -1, q)
            w = f + (h * h).scale(inv4)
            if w.gcd(w.derivative()).degree != 0:
                raise SingularCurve("f + h^2/4 is not squarefree")

    def xi_of(self, v: FqPolynomial) -> FqPolynomial:
        """v^2 + h*v - f."""
        return v * v + self.h * v - self.f

    @property
    def identity(self) -> "MumfordDivisor":
        one = FqPolynomial.one(self.base)
        zero = FqPolynomial.zero(self.base)
        return MumfordDivisor(self, one, zero, _checked=True)

    def divisor(self, u: FqPolynomial, v: FqPolynomial) -> "MumfordDivisor":
        """Validated reduced divisor (v is reduced mod u first)."""
        return MumfordDivisor(self, u, v)

    def __eq__(self, other):
        return (isinstance(other, HyperCurve)
                and other.h == self.h and other.f == self.f)

    def __hash__(self):
        return hash(("HyperCurve", self.h, self.f))

    def __repr__(self):
        return (f"HyperCurve(genus={self.genus}, h={self.h.to_text()}, "
                f"f={self.f.to_text()})")


class MumfordDivisor:
    """Reduced Mumford pair (u, v) on a fixed curve."""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve: HyperCurve, u: FqPolynomial, v: FqPolynomial,
                 _checked: bool = False):
        if not _checked:
            if u.is_zero or not u.is_monic:
                raise NotMonic("u must be monic")
            if u.degree > curve.genus:
                raise DegreeTooLarge(
                    f"deg u = {u.degree} exceeds the genus {curve.genus}")
            v = v % u
            if not (curve.xi_of(v) % u).is_zero:
                raise DivisibilityFails("u does not divide v^2 + h*v - f")
        self.curve = curve
        self.u = u
        self.v = v

    @property
    def is_identity(self) -> bool:
        return self.u.is_one

    def _same(self, other) -> "MumfordDivisor":
        if not isinstance(other, MumfordDivisor):
            raise TypeError(f"expected MumfordDivisor, got {type(other).__name__}")
        if other.curve != self.curve:
            raise MixedCurves("divisors on different curves")
        return other

    def __add__(self, other):
        other = self._same(other)
        u, v = _cantor_compose(self.curve, self.u, self.v, other.u, other.v)
        u, v = _cantor_reduce(self.curve, u, v)
        return MumfordDivisor(self.curve, u, v, _checked=True)

    def __neg__(self):
        return MumfordDivisor(self.curve, self.u, (-self.v - self.curve.h) % self.u,
                              _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n: int):
        """Scalar multiple n*self by double-and-add (n of arbitrary size)."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-self) * (-n)
        acc = self.curve.identity
        if n == 0:
            return acc
        base = self
        for bit in bin(n)[2:]:
            acc = acc + acc
            if bit == "1":
                acc = acc + base
        return acc

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, MumfordDivisor)
                and other.curve == self.curve
                and other.u == self.u and other.v == self.v)

    def __hash__(self):
        return hash(("MumfordDivisor", self.u, self.v))

    def __repr__(self):
        return f"MumfordDivisor(u={self.u.to_text()}, v={self.v.to_text()})"


def _cantor_compose(curve, u1, v1, u2, v2):
    """Semi-reduced composition of two reduced pairs."""
    d1, e1, e2 = u1.xgcd(u2)
    w = v1 + v2 + curve.h
    if w.is_zero:
        d, c1, c2 = d1, FqPolynomial.one(curve.base), FqPolynomial.zero(curve.base)
    else:
        d, c1, c2 = d1.xgcd(w)
    s1 = c1 * e1
    s2 = c1 * e2
    s3 = c2
    u = (u1 * u2) // (d * d)
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + curve.f)
    v = (num // d) % u
    return u, v


def _cantor_reduce(curve, u, v):
    """Reduce a semi-reduced pair until deg u <= genus, then make u monic."""
    while u.degree > curve.genus:
        u = (curve.f - v * curve.h - v * v) // u
        v = (-curve.h - v) % u
    return u.monic(), v % u if u.degree > 0 else FqPolynomial.zero(curve.base)


def ideal_to_class(curve: HyperCurve, r: FqPolynomial, v: FqPolynomial) -> MumfordDivisor:
    """Reduced class of the ideal <r, Y - v>; r monic, r | v^2 + h*v - f."""
    if r.is_zero or not r.is_monic:
        raise NotMonic("r must be monic")
    v = v % r
    if not (curve.xi_of(v) % r).is_zero:
        raise DivisibilityFails("r does not divide v^2 + h*v - f")
    u, v = _cantor_reduce(curve, r, v)
    return MumfordDivisor(curve, u, v, _checked=True)


# -- root-finding for xi mod r and divisor sampling -----------------------------


def quad_roots_mod(curve: HyperCurve, r: FqPolynomial) -> list[FqPolynomial]:
    """All v with deg v < deg r and v^2 + h*v - f = 0 mod r, r irreducible.

    Over F_2 both the ramified branch (h = 0 mod r: one square root) and the
    Artin-Schreier branch (w^2 + w = f/h^2: zero or two roots) reduce to
    F_2-linear solves in the residue field.  For odd q the residue field is
    searched directly, which keeps this helper desk-scale there.
    """
    base = curve.base
    q = base.q
    k = r.degree
    ext = ExtField(r, check=False)
    hbar = ext.from_poly(curve.h % r)
    fbar = ext.from_poly(curve.f % r)
    roots = []
    if q == 2:
        if hbar.is_zero:
            w = _solve_linear(ext, [_basis_image_sq(ext, i) for i in range(k)], fbar)
            roots = [w]  # squaring is bijective, a root always exists
        else:
            c = fbar / (hbar * hbar)
            cols = []
            for i in range(k):
                e = _basis_elem(ext, i)
                cols.append(e.square() + e)
            w = _solve_linear(ext, cols, c, missing_ok=True)
            if w is not None:
                roots = [hbar * w, hbar * w + hbar]
    else:
        if q ** k > 1 << 16:
            raise TooLarge("odd-characteristic root search is desk-scale only")
        inv2 = ext.from_const(pow(2, -1, q))
        disc = hbar * hbar + fbar.field.from_const(4) * fbar
        if disc.is_zero:
            roots = [(-hbar) * inv2]
        else:
            s = _brute_sqrt(ext, disc)
            if s is not None:
                roots = [(-hbar + s) * inv2, (-hbar - s) * inv2]
    out = [rt.to_poly() % r for rt in roots]
    out.sort(key=FqPolynomial.sort_key)
    return out


def _basis_elem(ext, i):
    return ext.element([0] * i + [1])


def _basis_image_sq(ext, i):
    return _basis_elem(ext, i).square()


def _solve_linear(ext, cols, target, missing_ok: bool = False):
    """Solve sum(w_i * cols[i]) = target for w in the F_q vector space ext."""
    comb = LinearCombiner(ext.q)
    flat = (lambda e: e.val) if ext.q == 2 else (lambda e: list(e.val))
    for col in cols:
        comb.add(flat(col))
    combo = comb.add(flat(target))
    if combo is None:
        if missing_ok:
            return None
        raise ArithmeticError("linear map is not surjective onto the target")
    return ext.element(combo)


def _brute_sqrt(ext, a):
    for code in range(ext.q ** ext.d):
        digits = []
        c = code
        for _ in range(ext.d):
            digits.append(c % ext.q)
            c //= ext.q
        cand = ext.element(digits)
        if cand * cand == a:
            return cand
    return None


def random_prime_divisor(curve: HyperCurve, degree: int, rng: random.Random,
                         tries: int = 200) -> MumfordDivisor | None:
    """A divisor (r, v) with r a random monic irreducible of the given degree.

    Returns None when `tries` consecutive candidates turn out inert.
    """
    if not (1 <= degree <= curve.genus):
        raise ValueError(f"degree must lie in [1, {curve.genus}]")
    for _ in range(tries):
        r = FqPolynomial.random_irreducible(curve.base, degree, rng)
        roots = quad_roots_mod(curve, r)
        if roots:
            v = roots[0] if len(roots) == 1 else rng.choice(roots)
            return MumfordDivisor(curve, r, v, _checked=True)
    return None


def random_divisor(curve: HyperCurve, rng: random.Random, parts: int = 2,
                   max_part_degree: int | None = None) -> MumfordDivisor:
    """A pseudorandom reduced class: the sum of `parts` random prime divisors."""
    cap = max_part_degree or curve.genus
    acc = curve.identity
    for _ in range(parts):
        while True:
            deg = rng.randrange(1, cap + 1)
            div = random_prime_divisor(curve, deg, rng)
            if div is not None:
                break
        acc = acc + div
    return acc
