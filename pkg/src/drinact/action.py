"""The class-group action on j-invariants and its inverse direction.

An Instance bundles L = F_q[X]/(p), the Frobenius characteristic pair
(h, f), the imaginary hyperelliptic curve Y^2 + hY = f they define, and a
starting j-invariant.  Divisor classes of the curve act on the set of
j-invariants sharing that characteristic pair:

* forward (group_action): evaluate u, v at the normalized module
  j^(-1)tau^2 + tau + omega, take iota = rgcd(phi_u, tau_L - phi_v), and
  read the new j-invariant off the two lowest coefficients of iota;

* inverse (isogeny_to_ideal): peel one prime factor r of a norm multiple u
  at a time, comparing iota against phi_r via rgcd to decide whether the
  prime contributes nothing, a principal factor <r>, or a prime ideal
  <r, Y - v> whose v is recovered by linear algebra on division remainders
  (prime_isogeny_to_prime_ideal).

ideal_class_reduce maps the recovered factorization back into the Jacobian,
closing the round trip: class -> isogeny -> ideal -> class.

Instances serialize as JSON {"q", "d", "p", "h", "f", "j", "order"?, "seed"?}
with hex strings over F_2 and coefficient lists otherwise; the bundled
paper_521.json carries the reference degree-521 instance over F_2.
"""

from __future__ import annotations

import json
from importlib import resources

from ._linalg import LinearCombiner
from .base_field import (
    ExtField,
    FieldElement,
    PrimeField,
    decode_element,
    decode_poly,
    encode_element,
    encode_poly,
)
from .drinfeld import CharPoly, DrinfeldModule, velu_codomain
from .errors import (
    CharpolyMismatch,
    InconsistentSystem,
    InputError,
    InvalidInstance,
    InvalidMumford,
    MixedFields,
    NoSolution,
    NotAnIsogeny,
    NotMonic,
    NotRightDivisible,
    NotSeparable,
    ZeroJInvariant,
)
from .fq_poly import FqPolynomial
from .jacobian import HyperCurve, MumfordDivisor, ideal_to_class
from .ore import OrePolynomial, exact_right_div, rgcd

#: strict precondition checks (full charpoly verification per call) are on
#: by default below this extension degree
STRICT_DEGREE_CUTOFF = 50


class Instance:
    """A consistent (L, h, f, curve, j) tuple; immutable once built."""

    __slots__ = ("field", "charpoly", "curve", "j", "order")

    def __init__(self, field: ExtField, charpoly: CharPoly, j: FieldElement,
                 order: int | None = None):
        d = field.d
        if d % 2 == 0 or d < 5:
            raise InvalidInstance(f"extension degree must be odd and >= 5, got {d}")
        if charpoly.f.monic() != field.modulus:
            raise InvalidInstance("monic(f) must equal the field modulus p")
        h = charpoly.h
        # p | h would make every module in the class supersingular
        if h.is_zero or (h % field.modulus).is_zero:
            raise InvalidInstance("h must be nonzero and not divisible by p")
        if h.degree > (d - 1) // 2:
            raise InvalidInstance(f"deg h = {h.degree} exceeds (d-1)/2")
        if j.field != field:
            raise MixedFields("j lives in a different field")
        if j.is_zero:
            raise ZeroJInvariant("the starting j-invariant must be nonzero")
        if order is not None and order < 1:
            raise InvalidInstance("order must be positive")
        self.field = field
        self.charpoly = charpoly
        self.curve = HyperCurve(charpoly.h, charpoly.f)
        self.j = j
        self.order = order

    # -- derived views ---------------------------------------------------------

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def d(self) -> int:
        return self.field.d

    @property
    def p(self) -> FqPolynomial:
        return self.field.modulus

    @property
    def omega(self) -> FieldElement:
        return self.field.gen

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def strict_default(self) -> bool:
        return self.d < STRICT_DEGREE_CUTOFF

    def drinfeld(self, j: FieldElement | None = None) -> DrinfeldModule:
        """The normalized module for j (default: the instance's own j)."""
        return DrinfeldModule.from_j(self.j if j is None else j, self.omega)

    def matches_charpoly(self, j: FieldElement) -> bool:
        """Exact residual check that from_j(j) has this instance's (h, f)."""
        return self.drinfeld(j).satisfies_charpoly(self.charpoly)

    # -- construction and serialization ------------------------------------------

    @classmethod
    def build(cls, q: int, h: FqPolynomial | str, f: FqPolynomial | str,
              j: str | FieldElement, order: int | None = None) -> "Instance":
        base = PrimeField(q)
        if isinstance(h, str):
            h = decode_poly(h, base)
        if isinstance(f, str):
            f = decode_poly(f, base)
        field = ExtField(f.monic())
        if isinstance(j, str):
            j = decode_element(j, field)
        return cls(field, CharPoly(h, f), j, order=order)

    @classmethod
    def from_dict(cls, data: dict) -> "Instance":
        try:
            q = int(data["q"])
            d = int(data["d"])
            p_text = data["p"]
            h_text = data["h"]
            f_text = data["f"]
            j_text = data["j"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed instance data: {exc}") from None
        base = PrimeField(q)
        p = decode_poly(p_text, base)
        f = decode_poly(f_text, base)
        if p.degree != d:
            raise InputError(f"p has degree {p.degree}, expected d = {d}")
        if f.monic() != p:
            raise InputError("instance p does not equal monic(f)")
        order = data.get("order")
        inst = cls.build(q, h_text, f, j_text,
                         order=int(order) if order is not None else None)
        return inst

    def to_dict(self) -> dict:
        data = {
            "q": self.q,
            "d": self.d,
            "p": encode_poly(self.p),
            "h": encode_poly(self.charpoly.h),
            "f": encode_poly(self.charpoly.f),
            "j": encode_element(self.j),
        }
        if self.order is not None:
            data["order"] = str(self.order)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def load(cls, path) -> "Instance":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    @classmethod
    def builtin(cls, name: str = "paper_521") -> "Instance":
        """Load a bundled instance file by bare name."""
        text = resources.files("drinact").joinpath(f"data/{name}.json").read_text()
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"Instance(q={self.q}, d={self.d}, genus={self.genus})"


class Isogeny:
    """A separable isogeny domain -> codomain given by its Ore polynomial.

    The commutation identity ore * phi_X = psi_X * ore is validated at
    construction.  Ideal-derived isogenies are monic; duals in general are
    not (their normalization is pinned by dual * iota = phi_a).
    """

    __slots__ = ("domain", "codomain", "ore")

    def __init__(self, domain: DrinfeldModule, codomain: DrinfeldModule,
                 ore: OrePolynomial, _checked: bool = False):
        if not _checked:
            if not ore.is_separable:
                raise NotSeparable("isogenies here must be separable")
            if ore * domain.phi_x != codomain.phi_x * ore:
                raise NotAnIsogeny("commutation identity fails")
        self.domain = domain
        self.codomain = codomain
        self.ore = ore

    @classmethod
    def build(cls, domain: DrinfeldModule, ore: OrePolynomial) -> "Isogeny":
        """Monicize, derive the codomain by the coefficient recurrence, verify."""
        ore = ore.monic()
        codomain = velu_codomain(domain, ore)
        return cls(domain, codomain, ore, _checked=True)

    @property
    def degree(self) -> int:
        return self.ore.degree

    def __repr__(self):
        return f"Isogeny(tau_degree={self.degree})"


class IdealFactor:
    """One factor: <r> when v is None, else the prime <r, Y - v>."""

    __slots__ = ("r", "v", "multiplicity")

    def __init__(self, r: FqPolynomial, v: FqPolynomial | None, multiplicity: int = 1):
        if not r.is_monic:
            raise NotMonic("r must be monic")
        if multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        self.r = r
        self.v = v
        self.multiplicity = multiplicity

    @property
    def is_principal(self) -> bool:
        return self.v is None

    def __eq__(self, other):
        return (isinstance(other, IdealFactor)
                and other.r == self.r and other.v == self.v
                and other.multiplicity == self.multiplicity)

    def __repr__(self):
        if self.is_principal:
            return f"<{self.r.to_text()}>^{self.multiplicity}"
        return f"<{self.r.to_text()}, Y - ({self.v.to_text()})>^{self.multiplicity}"


class IdealFactorization:
    """Sorted multiset of ideal factors; the empty product is the unit ideal."""

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        self.factors = tuple(factors)

    @classmethod
    def gather(cls, entries) -> "IdealFactorization":
        """Aggregate (r, v-or-None) pairs into sorted factors with multiplicities."""
        counts: dict = {}
        keys: dict = {}
        for r, v in entries:
            key = (r.sort_key(), v is not None, v.sort_key() if v is not None else ())
            counts[key] = counts.get(key, 0) + 1
            keys[key] = (r, v)
        factors = [IdealFactor(keys[k][0], keys[k][1], counts[k])
                   for k in sorted(counts)]
        return cls(factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        return (isinstance(other, IdealFactorization)
                and other.factors == self.factors)

    def __repr__(self):
        if self.is_unit:
            return "IdealFactorization(unit)"
        return "IdealFactorization(" + " * ".join(map(repr, self.factors)) + ")"


# -- forward action -------------------------------------------------------------


def _ideal_isogeny_ore(phi: DrinfeldModule, u: FqPolynomial,
                       v: FqPolynomial) -> OrePolynomial:
    """rgcd(phi_u, tau_L - phi_v), the monic generator attached to <u, Y - v>."""
    fld = phi.field
    ut = phi.phi(u)
    vt = phi.phi(v)
    coeffs = [-c for c in vt.coeffs] + [fld.zero] * (fld.d + 1 - len(vt.coeffs))
    coeffs[fld.d] = coeffs[fld.d] + fld.one
    tail = OrePolynomial(fld, coeffs)
    return rgcd(ut, tail)


def _check_action_inputs(inst: Instance, j: FieldElement, div: MumfordDivisor,
                         strict: bool | None) -> bool:
    if strict is None:
        strict = inst.strict_default
    if j.field != inst.field:
        raise MixedFields("j lives in a different field")
    if j.is_zero:
        raise ZeroJInvariant("the action is undefined at j = 0")
    if div.curve != inst.curve:
        raise InvalidMumford("divisor lives on a different curve")
    if strict and not inst.matches_charpoly(j):
        raise CharpolyMismatch("j is not in the instance's isogeny class")
    return strict


def group_action(inst: Instance, j: FieldElement, div: MumfordDivisor,
                 strict: bool | None = None) -> FieldElement:
    """The j-invariant of the class of <u, Y - v> acting on j.

    Reads the result off the two lowest coefficients of
    iota = rgcd(phi_u, tau_L - phi_v): with iota_1 = 0 when deg iota < 1,

        ghat = iota_0^(-q) * (iota_0 + iota_1 * (omega^q - omega)),
        dhat = j^(-q^deg(iota)),   result = ghat^(q+1) / dhat.
    """
    _check_action_inputs(inst, j, div, strict)
    phi = inst.drinfeld(j)
    iota = _ideal_isogeny_ore(phi, div.u, div.v)
    if not iota.is_separable:
        raise NotSeparable("rgcd is inseparable; inputs are inconsistent")
    i0 = iota.coeff(0)
    i1 = iota.coeff(1)
    w = inst.omega
    ghat = (i0 + i1 * (w.frobenius() - w)) / i0.frobenius()
    j_up = j.frobenius(iota.degree % inst.d)
    return ghat.frobenius() * ghat * j_up


def isogeny_from_ideal(inst: Instance, phi: DrinfeldModule, div: MumfordDivisor,
                       strict: bool | None = None) -> Isogeny:
    """The monic isogeny attached to the class <u, Y - v> with domain phi."""
    if strict is None:
        strict = inst.strict_default
    if div.curve != inst.curve:
        raise InvalidMumford("divisor lives on a different curve")
    if strict and not phi.satisfies_charpoly(inst.charpoly):
        raise CharpolyMismatch("phi is not in the instance's isogeny class")
    ore = _ideal_isogeny_ore(phi, div.u, div.v)
    return Isogeny.build(phi, ore)


# -- inverse direction -------------------------------------------------------------


def dual_isogeny(iota: Isogeny, a: FqPolynomial) -> Isogeny:
    """The dual with dual * iota = phi_a and iota * dual = psi_a."""
    phi_a = iota.domain.phi(a)
    dual_ore = exact_right_div(phi_a, iota.ore)
    if iota.ore * dual_ore != iota.codomain.phi(a):
        raise NotAnIsogeny("iota * dual != psi_a; a is not a norm multiple")
    return Isogeny(iota.codomain, iota.domain, dual_ore, _checked=True)


def _flatten_remainder(fld: ExtField, rem: OrePolynomial, slots: int):
    vals = [c.val for c in rem.coeffs]
    if fld.q == 2:
        acc = 0
        for k, v in enumerate(vals):
            acc |= v << (k * fld.d)
        return acc
    acc = [0] * (slots * fld.d)
    for k, v in enumerate(vals):
        acc[k * fld.d:(k + 1) * fld.d] = v
    return acc


def minimal_norm_poly(iota: Isogeny) -> FqPolynomial:
    """The monic u of least degree with iota right-dividing phi_u.

    Scans remainders of phi_(X^ell) modulo iota for the first linear
    relation; one exists by ell = deg_tau(iota).
    """
    phi = iota.domain
    ore = iota.ore
    if not ore.is_separable:
        raise NotSeparable("minimal norm needs a separable isogeny")
    n = ore.degree
    base = phi.field.base
    if n == 0:
        return FqPolynomial.one(base)
    fld = phi.field
    comb = LinearCombiner(fld.q)
    rem = OrePolynomial.one(fld)
    for _ in range(n + 1):
        combo = comb.add(_flatten_remainder(fld, rem, n))
        if combo is not None:
            coeffs = [(-c) % fld.q for c in combo] + [1]
            u = FqPolynomial.from_coeffs(base, coeffs)
            if not (phi.phi(u) % ore).is_zero:
                raise InconsistentSystem("recovered norm fails divisibility")
            return u
        rem = phi.lmul_phix(rem) % ore
    raise InconsistentSystem("no relation found by ell = deg iota")


def prime_isogeny_to_prime_ideal(iota: Isogeny, r: FqPolynomial,
                                 charpoly: CharPoly | None = None) -> FqPolynomial:
    """Recover v with <r, Y - v> generating the same left ideal as iota.

    Requires deg_tau(iota) = deg(r) with r monic irreducible.  Writes the
    remainder of tau_L modulo iota as an F_q-combination of the remainders
    of phi_(X^i), i < deg r; the combination is v's coefficient vector.
    """
    phi = iota.domain
    ore = iota.ore
    if not ore.is_separable:
        raise NotSeparable("iota must be separable")
    if not r.is_monic:
        raise NotMonic("r must be monic")
    n = r.degree
    if ore.degree != n:
        raise NoSolution(f"deg_tau(iota) = {ore.degree} != deg(r) = {n}")
    fld = phi.field
    y = OrePolynomial.tau_power(fld, fld.d) % ore
    comb = LinearCombiner(fld.q)
    rem = OrePolynomial.one(fld)
    for _ in range(n):
        if comb.add(_flatten_remainder(fld, rem, n)) is not None:
            raise NoSolution("power remainders are dependent; iota is not prime")
        rem = phi.lmul_phix(rem) % ore
    combo = comb.add(_flatten_remainder(fld, y, n))
    if combo is None:
        raise NoSolution("tau_L is independent of the power remainders")
    v = FqPolynomial.from_coeffs(fld.base, combo)
    if charpoly is not None and not (charpoly.xi_of(v) % r).is_zero:
        raise NoSolution("recovered v does not satisfy xi(X, v) = 0 mod r")
    return v


def isogeny_to_ideal(inst: Instance, iota: Isogeny,
                     u: FqPolynomial) -> IdealFactorization:
    """The prime factorization of the ideal attached to iota.

    u must be monic with iota right-dividing phi_u (any norm multiple, the
    minimal one or not).  Recurses over prime factors r of u, classifying
    rgcd(iota, phi_r) as trivial, all of phi_r, or a proper prime part.
    """
    if not u.is_monic:
        raise NotMonic("u must be monic")
    if not (iota.domain.phi(u) % iota.ore).is_zero:
        raise NotRightDivisible("iota does not right-divide phi_u")
    entries: list = []
    _isogeny_to_ideal_rec(inst, iota, u, entries)
    return IdealFactorization.gather(entries)


def _isogeny_to_ideal_rec(inst, iota, u, entries):
    if u.is_one:
        return
    r = u.factor().factors[0][0]
    phi = iota.domain
    phi_r = phi.phi(r)
    tilde = rgcd(iota.ore, phi_r)
    if tilde.is_one:
        e = u.multiplicity_of(r)
        _isogeny_to_ideal_rec(inst, iota, u // r ** e, entries)
    elif tilde.degree == phi_r.degree:
        # tilde is a unit multiple of phi_r: the ideal contains <r>
        nxt = Isogeny.build(phi, exact_right_div(iota.ore, phi_r))
        entries.append((r, None))
        _isogeny_to_ideal_rec(inst, nxt, u // r, entries)
    else:
        tilde_iso = Isogeny.build(phi, tilde)
        v = prime_isogeny_to_prime_ideal(tilde_iso, r, inst.charpoly)
        nxt = Isogeny.build(tilde_iso.codomain, exact_right_div(iota.ore, tilde))
        entries.append((r, v))
        _isogeny_to_ideal_rec(inst, nxt, u // r, entries)


def ideal_class_reduce(inst: Instance, fac: IdealFactorization) -> MumfordDivisor:
    """The reduced divisor class of the ideal product; principals vanish."""
    acc = inst.curve.identity
    for factor in fac:
        if factor.is_principal:
            continue
        cls = ideal_to_class(inst.curve, factor.r, factor.v)
        acc = acc + cls * factor.multiplicity
    return acc
