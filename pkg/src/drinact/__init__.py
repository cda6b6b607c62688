"""drinact: class-group actions on rank-2 Drinfeld modules.

The Jacobian of an imaginary hyperelliptic curve acts simply transitively
on the j-invariants of the ordinary rank-2 Drinfeld modules sharing the
curve's Frobenius characteristic pair.  This package implements the forward
action, the inverse isogeny-to-ideal direction, and all the supporting
algebra: binary/odd-prime field towers, F_q[X] factorization, Ore
polynomial arithmetic, Drinfeld module evaluation, and Cantor's algorithm
on Mumford divisors.
"""

from .action import (
    IdealFactor,
    IdealFactorization,
    Instance,
    Isogeny,
    dual_isogeny,
    group_action,
    ideal_class_reduce,
    isogeny_from_ideal,
    isogeny_to_ideal,
    minimal_norm_poly,
    prime_isogeny_to_prime_ideal,
)
from .base_field import (
    ExtField,
    FieldElement,
    PrimeField,
    decode_element,
    decode_poly,
    encode_element,
    encode_poly,
    hex_decode,
    hex_encode,
)
from .drinfeld import CharPoly, DrinfeldModule, is_ordinary, velu_codomain
from .fq_poly import Factorization, FqPolynomial
from .jacobian import (
    HyperCurve,
    MumfordDivisor,
    ideal_to_class,
    quad_roots_mod,
    random_divisor,
    random_prime_divisor,
)
from .ore import OrePolynomial, exact_right_div, rgcd, rxgcd
from .params import gen_instance

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "DrinfeldModule",
    "ExtField",
    "Factorization",
    "FieldElement",
    "FqPolynomial",
    "HyperCurve",
    "IdealFactor",
    "IdealFactorization",
    "Instance",
    "Isogeny",
    "MumfordDivisor",
    "OrePolynomial",
    "PrimeField",
    "decode_element",
    "decode_poly",
    "dual_isogeny",
    "encode_element",
    "encode_poly",
    "exact_right_div",
    "gen_instance",
    "group_action",
    "hex_decode",
    "hex_encode",
    "ideal_class_reduce",
    "ideal_to_class",
    "is_ordinary",
    "isogeny_from_ideal",
    "isogeny_to_ideal",
    "minimal_norm_poly",
    "prime_isogeny_to_prime_ideal",
    "quad_roots_mod",
    "random_divisor",
    "random_prime_divisor",
    "rgcd",
    "rxgcd",
    "velu_codomain",
]
