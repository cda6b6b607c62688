"""Univariate polynomials over F_q (q prime).

FqPolynomial wraps the packed representations of _gf2 / _gfp behind one
immutable value type: `val` is an int for q = 2 and a trimmed little-endian
tuple for q > 2.  Everything the class-group algorithms need on the
commutative side lives here: Euclidean arithmetic, gcds, irreducibility,
full factorization (squarefree decomposition, then distinct-degree, then
Cantor-Zassenhaus splitting) and seeded sampling of irreducibles.
"""

from __future__ import annotations

import random

from . import _gf2, _gfp
from .base_field import PrimeField, decode_poly, encode_poly
from .errors import DivisionByZero, GenerationFailed, ZeroPolynomial


class FqPolynomial:
    """Immutable element of F_q[X] in canonical (trimmed) form."""

    __slots__ = ("base", "val")

    def __init__(self, base: PrimeField, val):
        self.base = base
        if base.q == 2:
            self.val = int(val)
        else:
            self.val = _gfp.trim(list(val))

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_coeffs(cls, base: PrimeField, coeffs) -> "FqPolynomial":
        q = base.q
        coeffs = [c % q for c in coeffs]
        if q == 2:
            v = 0
            for i, c in enumerate(coeffs):
                if c:
                    v |= 1 << i
            return cls(base, v)
        return cls(base, coeffs)

    @classmethod
    def zero(cls, base: PrimeField) -> "FqPolynomial":
        return cls(base, 0 if base.q == 2 else ())

    @classmethod
    def one(cls, base: PrimeField) -> "FqPolynomial":
        return cls(base, 1 if base.q == 2 else (1,))

    @classmethod
    def x(cls, base: PrimeField) -> "FqPolynomial":
        return cls.monomial(base, 1)

    @classmethod
    def monomial(cls, base: PrimeField, k: int, c: int = 1) -> "FqPolynomial":
        c %= base.q
        if c == 0:
            return cls.zero(base)
        if base.q == 2:
            return cls(base, 1 << k)
        return cls(base, (0,) * k + (c,))

    @classmethod
    def random_monic(cls, base: PrimeField, degree: int, rng: random.Random) -> "FqPolynomial":
        if degree < 0:
            raise ValueError("degree must be >= 0")
        coeffs = [rng.randrange(base.q) for _ in range(degree)] + [1]
        return cls.from_coeffs(base, coeffs)

    @classmethod
    def random_irreducible(cls, base: PrimeField, degree: int, seed) -> "FqPolynomial":
        """Monic irreducible of exact degree, deterministic per seed.

        `seed` may be an int or a random.Random.  Gives up after 100*degree
        candidates, which is vanishingly unlikely for honest inputs.
        """
        if degree < 1:
            raise ValueError("degree must be >= 1")
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        for _ in range(100 * degree):
            cand = cls.random_monic(base, degree, rng)
            if degree > 1 and cand.coeff(0) == 0:
                continue  # divisible by X
            if cand.is_irreducible():
                return cand
        raise GenerationFailed(f"no irreducible of degree {degree} found")

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return _gf2.deg(self.val) if self.base.q == 2 else len(self.val) - 1

    @property
    def is_zero(self) -> bool:
        return self.val == 0 if self.base.q == 2 else not self.val

    @property
    def is_one(self) -> bool:
        return self.val == 1 if self.base.q == 2 else self.val == (1,)

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            return 0
        return 1 if self.base.q == 2 else self.val[-1]

    def coeff(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        if self.base.q == 2:
            return (self.val >> i) & 1
        return self.val[i] if i < len(self.val) else 0

    def coeffs(self) -> list[int]:
        if self.base.q == 2:
            return [(self.val >> i) & 1 for i in range(self.degree + 1)]
        return list(self.val)

    def sort_key(self):
        return (self.degree, tuple(self.coeffs()))

    # -- ring operations -------------------------------------------------------

    def _same(self, other) -> "FqPolynomial":
        if not isinstance(other, FqPolynomial):
            raise TypeError(f"expected FqPolynomial, got {type(other).__name__}")
        if other.base != self.base:
            raise ValueError("polynomials over different prime fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        if self.base.q == 2:
            return FqPolynomial(self.base, self.val ^ other.val)
        return FqPolynomial(self.base, _gfp.add(self.val, other.val, self.base.q))

    def __sub__(self, other):
        other = self._same(other)
        if self.base.q == 2:
            return FqPolynomial(self.base, self.val ^ other.val)
        return FqPolynomial(self.base, _gfp.sub(self.val, other.val, self.base.q))

    def __neg__(self):
        if self.base.q == 2:
            return self
        return FqPolynomial(self.base, _gfp.neg(self.val, self.base.q))

    def __mul__(self, other):
        other = self._same(other)
        if self.base.q == 2:
            return FqPolynomial(self.base, _gf2.mul(self.val, other.val))
        return FqPolynomial(self.base, _gfp.mul(self.val, other.val, self.base.q))

    def scale(self, c: int) -> "FqPolynomial":
        c %= self.base.q
        if self.base.q == 2:
            return self if c else FqPolynomial.zero(self.base)
        return FqPolynomial(self.base, _gfp.scale(self.val, c, self.base.q))

    def __divmod__(self, other):
        other = self._same(other)
        if other.is_zero:
            raise DivisionByZero("division by zero polynomial")
        if self.base.q == 2:
            q, r = _gf2.divmod_(self.val, other.val)
        else:
            q, r = _gfp.divmod_(self.val, other.val, self.base.q)
        return FqPolynomial(self.base, q), FqPolynomial(self.base, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._same(other)
        if other.is_zero:
            raise DivisionByZero("division by zero polynomial")
        if self.base.q == 2:
            return FqPolynomial(self.base, _gf2.mod(self.val, other.val))
        return FqPolynomial(self.base, _gfp.mod(self.val, other.val, self.base.q))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        acc = FqPolynomial.one(self.base)
        b = self
        while e:
            if e & 1:
                acc = acc * b
            e >>= 1
            if e:
                b = b * b
        return acc

    def shift(self, k: int) -> "FqPolynomial":
        """Multiply by X^k."""
        if self.is_zero or k == 0:
            return self
        if self.base.q == 2:
            return FqPolynomial(self.base, self.val << k)
        return FqPolynomial(self.base, (0,) * k + self.val)

    def monic(self) -> "FqPolynomial":
        if self.is_zero or self.leading == 1:
            return self
        return self.scale(pow(self.leading, -1, self.base.q))

    def gcd(self, other) -> "FqPolynomial":
        other = self._same(other)
        if self.base.q == 2:
            return FqPolynomial(self.base, _gf2.gcd(self.val, other.val))
        return FqPolynomial(self.base, _gfp.gcd(self.val, other.val, self.base.q))

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g, g monic (or zero)."""
        other = self._same(other)
        if self.base.q == 2:
            g, s, t = _gf2.xgcd(self.val, other.val)
        else:
            g, s, t = _gfp.xgcd(self.val, other.val, self.base.q)
        return (FqPolynomial(self.base, g),
                FqPolynomial(self.base, s),
                FqPolynomial(self.base, t))

    def derivative(self) -> "FqPolynomial":
        q = self.base.q
        return FqPolynomial.from_coeffs(
            self.base, [(i * c) % q for i, c in enumerate(self.coeffs())][1:])

    def pow_mod(self, e: int, modulus: "FqPolynomial") -> "FqPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        acc = FqPolynomial.one(self.base) % modulus
        b = self % modulus
        if e == 0:
            return acc
        for bit in bin(e)[2:]:
            acc = (acc * acc) % modulus
            if bit == "1":
                acc = (acc * b) % modulus
        return acc

    def evaluate(self, x: int) -> int:
        """Value at x in F_q."""
        if self.base.q == 2:
            if x % 2 == 0:
                return self.coeff(0)
            return bin(self.val).count("1") % 2
        return _gfp.eval_at(self.val, x, self.base.q)

    def evaluate_at(self, elem):
        """Horner evaluation at an extension-field element."""
        acc = elem.field.zero
        for c in reversed(self.coeffs()):
            acc = acc * elem
            if c:
                acc = acc + elem.field.from_const(c)
        return acc

    def multiplicity_of(self, r: "FqPolynomial") -> int:
        """Largest e with r^e dividing self (self nonzero, deg r >= 1)."""
        if self.is_zero:
            raise ZeroPolynomial("multiplicity in the zero polynomial")
        if r.degree < 1:
            raise ValueError("factor must be nonconstant")
        e = 0
        cur = self
        while True:
            quot, rem = divmod(cur, r)
            if not rem.is_zero:
                return e
            e += 1
            cur = quot

    # -- irreducibility and factorization ---------------------------------------

    def is_irreducible(self) -> bool:
        """Distinct-degree criterion: no factor of degree <= deg/2."""
        if self.is_zero:
            raise ZeroPolynomial("irreducibility of the zero polynomial")
        n = self.degree
        if n == 0:
            return False
        if n == 1:
            return True
        q = self.base.q
        h = FqPolynomial.x(self.base)
        x = h
        for _ in range(n // 2):
            h = h.pow_mod(q, self)
            if self.gcd(h - x).degree > 0:
                return False
        return True

    def factor(self, seed: int = 0) -> "Factorization":
        """Complete factorization into monic irreducibles.

        Equal-degree splitting is randomized; the seed makes the run (not
        the result, which is canonical) reproducible.
        """
        if self.is_zero:
            raise ZeroPolynomial("cannot factor the zero polynomial")
        rng = random.Random(seed)
        unit = self.leading
        w = self.monic()
        out: list[tuple[FqPolynomial, int]] = []
        for part, mult in _squarefree_decomposition(w):
            for k, prod in _distinct_degree(part):
                for irr in _equal_degree(prod, k, rng):
                    out.append((irr, mult))
        out.sort(key=lambda fm: fm[0].sort_key())
        return Factorization(unit, tuple(out))

    # -- encoding and identity ---------------------------------------------------

    def to_text(self) -> str:
        return encode_poly(self)

    @classmethod
    def from_text(cls, text: str, base: PrimeField) -> "FqPolynomial":
        return decode_poly(text, base)

    def __eq__(self, other):
        return (isinstance(other, FqPolynomial)
                and other.base == self.base
                and other.val == self.val)

    def __hash__(self):
        return hash(("FqPolynomial", self.base.q, self.val))

    def __repr__(self):
        return f"FqPolynomial(q={self.base.q}, {self.to_text()!r})"


class Factorization:
    """unit * prod(f_i ^ e_i) with distinct monic irreducible f_i, sorted."""

    __slots__ = ("unit", "factors")

    def __init__(self, unit: int, factors):
        self.unit = unit
        self.factors = tuple(factors)

    def expand(self) -> FqPolynomial:
        if not self.factors:
            base = None
        acc = None
        for f, e in self.factors:
            term = f ** e
            acc = term if acc is None else acc * term
        if acc is None:
            raise ValueError("empty factorization has no base field")
        return acc.scale(self.unit)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        return (isinstance(other, Factorization)
                and other.unit == self.unit
                and other.factors == self.factors)

    def __repr__(self):
        parts = ", ".join(f"({f.to_text()})^{e}" for f, e in self.factors)
        return f"Factorization(unit={self.unit}, [{parts}])"


def _pth_root(w: FqPolynomial) -> FqPolynomial:
    # w = g(X^p) with coefficients in F_p, so the root just decimates indices
    p = w.base.q
    cs = w.coeffs()
    return FqPolynomial.from_coeffs(w.base, [cs[i] for i in range(0, len(cs), p)])


def _squarefree_decomposition(w: FqPolynomial) -> list[tuple[FqPolynomial, int]]:
    """Monic w -> [(monic squarefree part, multiplicity)], multiplicities distinct."""
    p = w.base.q
    out = []
    n = 1
    while w.degree > 0:
        dw = w.derivative()
        if not dw.is_zero:
            g = w.gcd(dw)
            h = w // g
            i = 1
            while h.degree > 0:
                gg = g.gcd(h)
                part = h // gg
                if part.degree > 0:
                    out.append((part, i * n))
                g, h = g // gg, gg
                i += 1
            if g.degree == 0:
                break
            w = g
        w = _pth_root(w)
        n *= p
    return out


def _distinct_degree(f: FqPolynomial) -> list[tuple[int, FqPolynomial]]:
    """Monic squarefree f -> [(k, product of its degree-k irreducible factors)]."""
    q = f.base.q
    x = FqPolynomial.x(f.base)
    out = []
    h = x % f
    k = 0
    while f.degree >= 2 * (k + 1):
        k += 1
        h = h.pow_mod(q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((k, g))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.degree, f))
    return out


def _trace_poly(t: FqPolynomial, k: int, modulus: FqPolynomial) -> FqPolynomial:
    # t + t^2 + t^4 + ... + t^(2^(k-1)) mod modulus  (q = 2 only)
    acc = t
    cur = t
    for _ in range(k - 1):
        cur = cur.pow_mod(2, modulus)
        acc = acc + cur
    return acc


def _equal_degree(f: FqPolynomial, k: int, rng: random.Random) -> list[FqPolynomial]:
    """Split a product of distinct irreducibles of degree k (Cantor-Zassenhaus)."""
    if f.degree == k:
        return [f]
    q = f.base.q
    one = FqPolynomial.one(f.base)
    while True:
        t = FqPolynomial.from_coeffs(
            f.base, [rng.randrange(q) for _ in range(f.degree)])
        if t.degree < 1:
            continue
        if q == 2:
            s = _trace_poly(t, k, f)
        else:
            s = t.pow_mod((q ** k - 1) // 2, f) - one
        g = f.gcd(s)
        if 0 < g.degree < f.degree:
            return sorted(_equal_degree(g, k, rng) + _equal_degree(f // g, k, rng),
                          key=FqPolynomial.sort_key)
