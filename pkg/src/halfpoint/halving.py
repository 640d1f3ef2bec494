"""Core point-halving machinery, generic over a field backend.

Given P = (x0, y0) on y^2 = x^3 + a2*x^2 + a4*x + a6, the x-coordinates
of every Q with 2Q = P are built from the roots e0, e1, e2 of the
right-hand cubic and from square roots of the three differences
x0 - e_i.  A backend supplies those roots and square roots (exact over
the rationals, extension-field over F_p, floating over the complex
numbers); everything in this module is pure algebra on top of that.
"""

from dataclasses import dataclass

from .curves import INFINITY, Point


@dataclass(frozen=True)
class RootTriple:
    """Roots of the 2-division cubic, plus the constant k = -(a4 + 3*e0^2).

    e0 is the distinguished root (the curve's order-2 x-coordinate that the
    candidate formulas are anchored to); d is just an alias for it.
    """

    e0: object
    e1: object
    e2: object
    k: object

    @property
    def d(self):
        return self.e0

    def differences(self, x0):
        return x0 - self.e0, x0 - self.e1, x0 - self.e2


@dataclass(frozen=True)
class SqrtTriple:
    """Square roots gamma, alpha, beta of x0-e0, x0-e1, x0-e2."""

    gamma: object
    alpha: object
    beta: object

    def flipped(self, s0, s1, s2):
        """The same triple with signs flipped per the +/-1 pattern given."""
        return SqrtTriple(s0 * self.gamma, s1 * self.alpha, s2 * self.beta)


@dataclass(frozen=True)
class ProductSqrtData:
    """Intermediates of the product route: w^2 = t = (x0-e1)(x0-e2)."""

    t: object
    w: object
    w1: object
    w2: object


def root_triple_from_roots(e0, e1, e2):
    """RootTriple from explicitly known roots; k comes out of Vieta."""
    a4 = e0 * e1 + e1 * e2 + e2 * e0
    return RootTriple(e0, e1, e2, -(a4 + 3 * e0 * e0))


def root_triple_a46(d, a4, sqrt_fn):
    """RootTriple for a curve with a2 = 0, from one known root d.

    The other two roots come from the quadratic formula: their sum is -d
    and their product is a4 + d^2.
    """
    k = -(a4 + 3 * d * d)
    s = sqrt_fn(9 * d * d + 4 * k)
    if s is None:
        raise ValueError("remaining quadratic does not split in this field")
    return RootTriple(d, (-d + s) / 2, (-d - s) / 2, k)


def root_triple_a24(a2, a4, sqrt_fn):
    """RootTriple for a curve with a6 = 0: e0 = 0 is already a root."""
    s = sqrt_fn(a2 * a2 - 4 * a4)
    if s is None:
        raise ValueError("remaining quadratic does not split in this field")
    zero = a2 * 0
    return RootTriple(zero, (-a2 + s) / 2, (-a2 - s) / 2, -a4)


def sqrt_triple(x0, roots, sqrt_fn):
    """Square roots of the three differences, or None if any is missing."""
    gamma = sqrt_fn(x0 - roots.e0)
    if gamma is None:
        return None
    alpha = sqrt_fn(x0 - roots.e1)
    if alpha is None:
        return None
    beta = sqrt_fn(x0 - roots.e2)
    if beta is None:
        return None
    return SqrtTriple(gamma, alpha, beta)


def candidate_xs(x0, sq):
    """The four candidate x-values, ordered as (x11, x12, x21, x22).

    The pairs {x11, x12} and {x21, x22} are meaningful: the chords through
    the corresponding points meet at the meeting point (see meeting_x).
    As a set the four values do not depend on the sign choices in sq.
    """
    ab = sq.alpha * sq.beta
    gs = sq.gamma * (sq.alpha + sq.beta)
    gd = sq.gamma * (sq.alpha - sq.beta)
    return (x0 + ab + gs, x0 + ab - gs, x0 - ab + gd, x0 - ab - gd)


def candidate_xs_products(x0, roots, sqrt_fn):
    """The same four candidates via square roots of products of differences.

    Only valid when a2 = 0 (so e0 + e1 + e2 = 0): then
    t = x0^2 + d*x0 - 2d^2 - k equals (x0-e1)(x0-e2), w = sqrt(t) is
    alpha*beta up to sign, and w1, w2 recover gamma*(alpha +/- beta).
    Returns (candidates, ProductSqrtData) or None when a root is missing.
    """
    d, k = roots.d, roots.k
    t = x0 * x0 + d * x0 - 2 * d * d - k
    w = sqrt_fn(t)
    if w is None:
        return None
    w1 = sqrt_fn((x0 - d) * (d + 2 * w + 2 * x0))
    if w1 is None:
        return None
    w2 = sqrt_fn((x0 - d) * (d - 2 * w + 2 * x0))
    if w2 is None:
        return None
    cands = (x0 + w + w1, x0 + w - w1, x0 - w + w2, x0 - w - w2)
    return cands, ProductSqrtData(t, w, w1, w2)


def meeting_x(x0, roots):
    """x-coordinate of the point where the two candidate-pair chords meet.

    Equals e0 + k/(e0 - x0), which is also the x-coordinate of the sum of
    either candidate pair under the group law (for curves with a2 = 0; for
    curves with a6 = 0 it reduces to a4/x0).  Undefined at x0 = e0.
    """
    den = roots.e0 - x0
    if not den:
        raise ValueError("meeting point undefined: x0 equals the distinguished root")
    return roots.e0 + roots.k / den


def recover_y(curve, x_half, P, sqrt_fn):
    """All points (x_half, y) that double exactly to P.

    Zero, one, or two points: a point of order 2 has its halves in +/- y
    pairs that share an x-coordinate, so both signs must be kept.
    """
    rhs = curve.rhs(x_half)
    y = sqrt_fn(rhs)
    if y is None:
        return []
    out = []
    for yc in (y, -y) if y else (y,):
        Q = Point(x_half, yc)
        if curve._add_raw(Q, Q) == P:
            out.append(Q)
    return out


def halve_point(curve, P, backend):
    """All Q in the backend's target field with 2Q = P, each verified by
    doubling.  For P at infinity: infinity itself plus the order-2 points."""
    curve.validate()
    if P is INFINITY:
        return [INFINITY] + backend.two_torsion(curve)
    P = curve._norm(P)
    curve.require_point(P)
    roots = backend.root_triple(curve)
    x0 = backend.lift(P.x)
    sq = sqrt_triple(x0, roots, backend.sqrt_total)
    if sq is None:
        return []
    halves = []
    seen = set()
    for xc in candidate_xs(x0, sq):
        xt = backend.retract(xc)
        if xt is None or xt in seen:
            continue
        seen.add(xt)
        halves += recover_y(curve, xt, P, backend.sqrt)
    return list(dict.fromkeys(halves))
