"""A demonstration codec on an odd-order curve over F_p.

Messages are packed into point x-coordinates with decimal padding, then
scrambled by the keyed fold Q -> 2Q + bit*P over the key bits.  Because
the group order is odd, doubling is a bijection, so the fold inverts
step by step: subtract bit*P, then halve, reading the key from the back.

This is a pedagogical object, not a secure cryptosystem: there is no
randomization and no security claim whatsoever.
"""

from .curves import INFINITY, Curve, Point
from .halving_fp import FpHalvingField
from .primefield import PrimeField, fp_sqrt


class CodecParams:
    """Curve, base point and odd group order driving the codec.

    The order m is trusted input, validated by m*P = infinity and by m
    being odd; oddness is what makes halves unique.  The right-hand cubic
    must have no roots mod p (no order-2 points), which is the same
    condition seen from the factorization side.
    """

    def __init__(self, p, a4, a6, base_x, base_y, order, pad=2):
        self.fp = PrimeField(p)
        self.p = p
        self.curve = Curve(self.fp(0), self.fp(a4), self.fp(a6)).validate()
        self.base = Point(self.fp(base_x), self.fp(base_y))
        self.curve.require_point(self.base)
        if order % 2 == 0:
            raise ValueError("group order must be odd")
        self.order = order
        if pad < 1:
            raise ValueError("padding must reserve at least one digit")
        self.pad = pad
        self.halver = FpHalvingField(p, self.curve)
        if self.halver.factor_degrees != (3,):
            raise ValueError("curve has points of order 2; halving would be ambiguous")
        if self.curve.scalar_mul(order, self.base) is not INFINITY:
            raise ValueError("claimed order does not annihilate the base point")


def _key_bits(key):
    if isinstance(key, int):
        if key < 0:
            raise ValueError("key must be nonnegative")
        return bin(key)[2:]
    if isinstance(key, str) and key and set(key) <= {"0", "1"}:
        return key
    if isinstance(key, str) and key == "":
        return ""
    raise ValueError("key must be a bit string or a nonnegative integer")


def encode_message(T, params):
    """Smallest point whose x-coordinate reads 10^pad * T + i for some i.

    Scans i = 0, 1, ... within the padding window for the first x whose
    right-hand side is a square; requires 10^pad * (T + 1) <= p so the
    window cannot run past the modulus.
    """
    scale = 10 ** params.pad
    if T < 0 or scale * (T + 1) > params.p:
        raise ValueError("message does not fit below the modulus with this padding")
    for i in range(scale):
        x = params.fp(scale * T + i)
        y = fp_sqrt(params.curve.rhs(x))
        if y is not None:
            return Point(x, y)
    raise ValueError("no encodable x-coordinate in the padding window")


def decode_message(Q, params):
    """Strip the padding digits from the point's x-coordinate."""
    if Q is INFINITY:
        raise ValueError("infinity carries no message")
    return int(Q.x) // 10 ** params.pad


def encrypt(Q, key, params):
    """Fold over the key bits, most significant first: Q -> 2Q + bit*P.

    Equivalent to 2^len(key) * Q + int(key, 2) * P, which pins the bit
    order down unambiguously.
    """
    curve = params.curve
    curve.require_point(Q)
    C = Q
    for b in _key_bits(key):
        C = curve._add_raw(C, C)
        if b == "1":
            C = curve._add_raw(C, params.base)
    return C


def decrypt(C, key, params):
    """Invert the fold: for each key bit from the back, subtract bit*P and halve.

    Each halving must yield exactly one point (odd order); anything else
    means the parameters are invalid or the ciphertext is corrupted.
    """
    curve = params.curve
    curve.require_point(C)
    for b in reversed(_key_bits(key)):
        if b == "1":
            C = curve._add_raw(C, curve.neg(params.base))
        halves = params.halver.halve(C)
        if len(halves) != 1:
            raise ArithmeticError(
                f"expected a unique half, got {len(halves)}; parameters violated"
            )
        C = halves[0]
    return C
