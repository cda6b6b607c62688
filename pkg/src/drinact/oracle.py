"""Brute-force reference computations for desk-scale instances.

Everything here enumerates: the full set of reduced divisors of a curve,
the full isogeny class of an instance (all j with the right characteristic
pair), the group order recomputed from affine point counts and the zeta
recurrence, and the end-to-end orbit check that the action is a bijection
from divisor classes onto the isogeny class.  A hard guard keeps these
routines away from anything bigger than q^d <= 2^20.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .action import Instance, group_action
from .base_field import ExtField, FieldElement
from .drinfeld import DrinfeldModule
from .errors import TooLarge
from .fq_poly import FqPolynomial
from .jacobian import HyperCurve, MumfordDivisor

ENUMERATION_GUARD = 1 << 20


def _guard(curve_or_inst_size: int):
    if curve_or_inst_size > ENUMERATION_GUARD:
        raise TooLarge(
            f"enumeration domain {curve_or_inst_size} exceeds 2^20")


def _polys_below(base, degree_bound: int):
    """All polynomials of degree < degree_bound, in code order."""
    q = base.q
    for code in range(q ** degree_bound):
        coeffs = []
        c = code
        for _ in range(degree_bound):
            coeffs.append(c % q)
            c //= q
        yield FqPolynomial.from_coeffs(base, coeffs)


def _monic_of_degree(base, degree: int):
    x_to_d = FqPolynomial.monomial(base, degree)
    for low in _polys_below(base, degree):
        yield x_to_d + low


def enumerate_jacobian(curve: HyperCurve) -> list[MumfordDivisor]:
    """Every reduced divisor (u, v), sorted canonically."""
    base = curve.base
    _guard(base.q ** (2 * curve.genus + 1))
    out = [curve.identity]
    for deg_u in range(1, curve.genus + 1):
        for u in _monic_of_degree(base, deg_u):
            for v in _polys_below(base, deg_u):
                if (curve.xi_of(v) % u).is_zero:
                    out.append(MumfordDivisor(curve, u, v, _checked=True))
    out.sort(key=lambda D: (D.u.sort_key(), D.v.sort_key()))
    return out


def enumerate_isogeny_class(inst: Instance) -> list[FieldElement]:
    """Every nonzero j whose normalized module has the instance's (h, f)."""
    field = inst.field
    _guard(field.q ** field.d)
    out = []
    for code in range(1, field.q ** field.d):
        coeffs = []
        c = code
        for _ in range(field.d):
            coeffs.append(c % field.q)
            c //= field.q
        j = field.element(coeffs)
        phi = DrinfeldModule.from_j(j, inst.omega)
        if phi.frobenius_charpoly() == inst.charpoly:
            out.append(j)
    out.sort(key=lambda e: tuple(e.coeffs()))
    return out


def jacobian_order_from_zeta(curve: HyperCurve) -> int:
    """|Pic^0| recomputed from affine point counts over F_(q^k), k <= genus.

    Counts points by exhaustive (x, y) scan, converts to power sums of the
    Frobenius eigenvalues, runs the Newton recurrence for the numerator
    L(T) of the zeta function, completes it by the functional equation and
    returns L(1).  Entirely independent of the Mumford machinery.
    """
    base = curve.base
    q = base.q
    g = curve.genus
    _guard(q ** (2 * g))
    power_sums = []
    for k in range(1, g + 1):
        ext = ExtField(FqPolynomial.random_irreducible(base, k, 12345), check=True) \
            if k > 1 else None
        count = 0
        if k == 1:
            for x in range(q):
                hx = curve.h.evaluate(x)
                fx = curve.f.evaluate(x)
                for y in range(q):
                    if (y * y + hx * y - fx) % q == 0:
                        count += 1
        else:
            elems = []
            for code in range(q ** k):
                coeffs = []
                c = code
                for _ in range(k):
                    coeffs.append(c % q)
                    c //= q
                elems.append(ext.element(coeffs))
            for x in elems:
                hx = curve.h.evaluate_at(x)
                fx = curve.f.evaluate_at(x)
                for y in elems:
                    if (y * y + hx * y - fx).is_zero:
                        count += 1
        n_k = count + 1  # one place at infinity
        power_sums.append(q ** k + 1 - n_k)
    # Newton: S_k + sum_{i<k} c_i S_(k-i) + k c_k = 0
    c = [1] + [0] * (2 * g)
    for k in range(1, g + 1):
        acc = power_sums[k - 1]
        for i in range(1, k):
            acc += c[i] * power_sums[k - i - 1]
        assert acc % k == 0
        c[k] = -acc // k
    for i in range(g + 1, 2 * g + 1):
        c[i] = q ** (i - g) * c[2 * g - i]
    return sum(c)


@dataclass
class OrbitReport:
    class_count: int
    isogeny_class_size: int
    bijective: bool
    identity_ok: bool
    compat_pairs_checked: int
    compat_failures: int

    @property
    def passed(self) -> bool:
        return (self.bijective and self.identity_ok
                and self.compat_failures == 0)

    def summary(self) -> str:
        lines = [
            f"classes={self.class_count}",
            f"isogeny_class={self.isogeny_class_size}",
            f"bijective={'yes' if self.bijective else 'no'}",
            f"identity={'ok' if self.identity_ok else 'FAIL'}",
            f"compat_pairs={self.compat_pairs_checked}",
            f"compat_failures={self.compat_failures}",
            f"verdict={'pass' if self.passed else 'FAIL'}",
        ]
        return "\n".join(lines)


def orbit_check(inst: Instance, seed: int = 0,
                full_pair_limit: int = 64, sampled_pairs: int = 200) -> OrbitReport:
    """Verify simple transitivity and compatibility on one instance.

    The action map c -> act(c, j0) must be a bijection from the enumerated
    divisor classes onto the enumerated isogeny class; compatibility
    act(c1 + c2, j) = act(c1, act(c2, j)) is checked on all pairs when the
    group is small, else on a seeded sample.
    """
    classes = enumerate_jacobian(inst.curve)
    isocls = enumerate_isogeny_class(inst)
    j0 = inst.j
    images = [group_action(inst, j0, c, strict=False) for c in classes]
    image_keys = {tuple(im.coeffs()) for im in images}
    target_keys = {tuple(j.coeffs()) for j in isocls}
    bijective = (len(image_keys) == len(images) and image_keys == target_keys)
    identity_ok = group_action(inst, j0, inst.curve.identity, strict=False) == j0
    n = len(classes)
    if n * n <= full_pair_limit * full_pair_limit:
        pairs = [(a, b) for a in classes for b in classes]
    else:
        rng = random.Random(("drinact-orbit", seed))
        pairs = [(rng.choice(classes), rng.choice(classes))
                 for _ in range(sampled_pairs)]
    failures = 0
    for c1, c2 in pairs:
        lhs = group_action(inst, j0, c1 + c2, strict=False)
        rhs = group_action(inst, group_action(inst, j0, c2, strict=False), c1,
                           strict=False)
        if lhs != rhs:
            failures += 1
    return OrbitReport(
        class_count=n,
        isogeny_class_size=len(isocls),
        bijective=bijective,
        identity_ok=identity_ok,
        compat_pairs_checked=len(pairs),
        compat_failures=failures,
    )
