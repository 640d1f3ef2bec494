"""A toy message codec built on unique point halving.

On a curve whose group order is odd, doubling is a bijection: every point
has exactly one half.  That turns the keyed fold C -> 2C + bit*P into an
invertible scramble, decoded by reading the key backwards and halving at
every step.  Everything here is pedagogical; there is no security claim.
"""

import random

from halfpoint import (
    CodecParams,
    decode_message,
    decrypt,
    encode_message,
    encrypt,
)

# a 10-bit-ish playground: p = 10007, curve y^2 = x^3 + x + 1, base point
# (1, 1477) annihilated by the odd order 10065, two decimal padding digits
params = CodecParams(10007, 1, 1, 1, 1477, 10065, pad=2)
print(f"curve y^2 = x^3 + x + 1 over F_{params.p}, group order {params.order} (odd)")
print(f"factor degrees of the cubic: {params.halver.factor_degrees} "
      "(irreducible, so no 2-torsion and every halving is unique)")

# encoding: shift the message two decimal digits left and scan for an x
# that actually lies under the curve
message = 42
Q = encode_message(message, params)
print(f"\nmessage {message} encodes as the point ({int(Q.x)}, {int(Q.y)})")
print(f"the padding digits {int(Q.x) % 100:02d} absorbed the search; "
      f"decoding strips them: {decode_message(Q, params)}")

key = "1011001110001111"
C = encrypt(Q, key, params)
print(f"\nkey {key} (16 bits)")
print(f"ciphertext: ({int(C.x)}, {int(C.y)})")

R = decrypt(C, key, params)
print(f"decrypted:  ({int(R.x)}, {int(R.y)})  ->  message {decode_message(R, params)}")

# the fold has a closed form, which pins down the bit order: most
# significant bit first
lhs = encrypt(Q, key, params)
rhs = params.curve.add(
    params.curve.scalar_mul(2 ** len(key), Q),
    params.curve.scalar_mul(int(key, 2), params.base),
)
print(f"\nclosed form 2^16 * Q + {int(key, 2)} * P gives the same point: {lhs == rhs}")

# a wrong key still decrypts mechanically (halves always exist and are
# unique), it just lands on the wrong point
wrong = decrypt(C, "1011001110001110", params)
print(f"\nwrong key decodes to the point ({int(wrong.x)}, {int(wrong.y)}), "
      f"message {decode_message(wrong, params)}, not {message}")

# round-trips with random 64-bit keys
rng = random.Random(7)
trips = 0
for _ in range(25):
    k = format(rng.getrandbits(64), "064b")
    m = rng.randrange(100)
    Q = encode_message(m, params)
    trips += decode_message(decrypt(encrypt(Q, k, params), k, params), params) == m
print(f"\n{trips}/25 random (message, 64-bit key) round-trips succeeded")
