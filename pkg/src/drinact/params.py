"""Instance generation.

gen_instance samples the module first and derives the curve from it: pick a
random irreducible p of degree d, a random nonzero j in L = F_q[X]/(p), and
compute the Frobenius characteristic pair (h, f) of the normalized module.
Accept when h is nonzero (ordinary) and Y^2 + hY = f is smooth.  This
guarantees every emitted instance is consistent by construction, with
monic(f) = p, at the cost of a few rejected draws.
"""

from __future__ import annotations

import random

from .action import Instance
from .base_field import ExtField, PrimeField
from .drinfeld import CharPoly, DrinfeldModule
from .errors import GenerationFailed, SingularCurve, ZeroH
from .fq_poly import FqPolynomial
from .jacobian import HyperCurve

MAX_ATTEMPTS = 1000


def gen_instance(q: int, d: int, seed: int) -> Instance:
    """A valid random instance, deterministic per (q, d, seed)."""
    base = PrimeField(q)
    if d % 2 == 0 or d < 5:
        raise ValueError(f"d must be odd and >= 5, got {d}")
    rng = random.Random(("drinact-gen", q, d, seed))
    for _ in range(MAX_ATTEMPTS):
        p = FqPolynomial.random_irreducible(base, d, rng)
        field = ExtField(p, check=False)
        j = field.random_element(rng, nonzero=True)
        phi = DrinfeldModule.from_j(j, field.gen)
        cp = phi.frobenius_charpoly()
        if cp.h.is_zero:
            continue  # supersingular draw
        try:
            HyperCurve(cp.h, cp.f)
        except (SingularCurve, ZeroH):
            continue
        return Instance(field, cp, j)
    raise GenerationFailed(
        f"no valid instance found for q={q}, d={d} in {MAX_ATTEMPTS} attempts")
