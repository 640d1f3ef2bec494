"""End-to-end halving of points on curves over F_p.

The right-hand cubic is factored over F_p; its roots live in an extension
F_{p^D} with D the lcm of the factor degrees (1, 2 or 3).  The halving
engine runs there, reaching into the quadratic tower F_{p^(2D)} when a
needed square root does not exist downstairs, and keeps exactly the
candidates that land back in F_p.  An exhaustive oracle and the odd-order
shortcut (P/2 = ((m+1)/2) * P) are provided for cross-checking.
"""

from math import lcm

from .curves import INFINITY, Curve, Point
from .extfield import ExtField, TowerElem, ext_sqrt, frobenius, project_to_fp, sqrt_in_tower
from .halving import candidate_xs, recover_y, root_triple_from_roots, sqrt_triple
from .primefield import FpElem, PrimeField, cubic_roots_fp, fp_sqrt, legendre

BRUTE_FORCE_LIMIT = 10 ** 4


def _coerce_curve(p, curve):
    fp = PrimeField(p)
    if isinstance(curve.a4, FpElem):
        if curve.a4.field.p != p:
            raise ValueError("curve coefficients use a different modulus")
        return fp, curve
    coeffs = (curve.a2, curve.a4, curve.a6)
    if any(getattr(c, "denominator", 1) != 1 for c in coeffs):
        raise ValueError("curve coefficients must be integers mod p")
    return fp, Curve(*(fp(int(c)) for c in coeffs))


class FpHalvingField:
    """Per-curve working data: cubic factorization, extension, lazy tower.

    Building one of these is the expensive step; halving individual points
    afterwards reuses it, which is what the decryption loop relies on.
    """

    def __init__(self, p, curve, seed=0):
        self.fp, self.curve = _coerce_curve(p, curve)
        self.curve.validate()
        self.p = p
        a2, a4, a6 = self.curve.a2, self.curve.a4, self.curve.a6
        fp_roots, degrees = cubic_roots_fp(a2, a4, a6, seed)
        self.fp_roots = fp_roots
        self.factor_degrees = degrees
        self.extension_degree = lcm(*degrees)
        self.tower_used = False

        if self.extension_degree == 1:
            ext = ExtField(self.fp, [0, 1])
            e0, e1, e2 = (ext(r) for r in fp_roots)
        elif self.extension_degree == 2:
            # deflate the cubic by its one rational root; the quotient is the
            # irreducible quadratic that defines the extension
            r = fp_roots[0]
            b = a2 + r
            c = a4 + r * b
            ext = ExtField(self.fp, [c.value, b.value, 1])
            e0 = ext(r)
            e1 = ext.gen()
            e2 = frobenius(e1)
        else:
            ext = ExtField(self.fp, [a6.value, a4.value, a2.value, 1])
            e0 = ext.gen()
            e1 = frobenius(e0)
            e2 = frobenius(e1)

        self.extension = ext
        self.roots = root_triple_from_roots(e0, e1, e2)
        # Vieta cross-check against the curve coefficients
        if e0 + e1 + e2 != -ext(a2) or e0 * e1 * e2 != -ext(a6):
            raise ArithmeticError("root embedding failed the Vieta identities")

    # -- backend protocol for the halving engine ------------------------------

    def root_triple(self, curve):
        return self.roots

    def lift(self, x):
        return self.extension(x)

    @staticmethod
    def retract(x):
        return project_to_fp(x)

    @staticmethod
    def sqrt(x):
        return fp_sqrt(x)

    def sqrt_total(self, x):
        if isinstance(x, TowerElem):
            if not x.v:
                x = x.u
            else:
                s = ext_sqrt(x)
                if s is None:
                    raise ArithmeticError("square root missing in the tower")
                return s
        s = ext_sqrt(x)
        if s is not None:
            return s
        self.tower_used = True
        return sqrt_in_tower(x)

    def two_torsion(self, curve=None):
        return [Point(r, self.fp(0)) for r in self.fp_roots]

    # -- halving ---------------------------------------------------------------

    def halve_with_info(self, P):
        """Halve P and report how: factor degrees, tower use, candidate fate."""
        self.tower_used = False
        info = {
            "factor_degrees": self.factor_degrees,
            "extension_degree": self.extension_degree,
        }
        if P is INFINITY:
            pts = [INFINITY] + self.two_torsion()
            info.update(candidates_in_base=None, tower_used=False)
            return pts, info
        P = self.curve._norm(P)
        self.curve.require_point(P)
        x0 = self.lift(P.x)
        sq = sqrt_triple(x0, self.roots, self.sqrt_total)
        cands = candidate_xs(x0, sq)
        in_base = [self.retract(xc) for xc in cands]
        halves, seen = [], set()
        for xt in in_base:
            if xt is None or xt in seen:
                continue
            seen.add(xt)
            halves += recover_y(self.curve, xt, P, fp_sqrt)
        halves = list(dict.fromkeys(halves))
        info.update(
            candidates_in_base=sum(x is not None for x in in_base),
            candidate_base_xs=[x for x in in_base if x is not None],
            tower_used=self.tower_used,
        )
        return halves, info

    def halve(self, P):
        return self.halve_with_info(P)[0]


def halve_over_fp(p, curve, P, seed=0):
    """All points Q in E(F_p) with 2Q = P, each verified by doubling."""
    return FpHalvingField(p, curve, seed).halve(P)


def enumerate_points(p, curve):
    """Every point of E(F_p) including infinity; p is budget-guarded."""
    if p > BRUTE_FORCE_LIMIT:
        raise ValueError(f"exhaustive enumeration capped at p <= {BRUTE_FORCE_LIMIT}")
    fp, curve = _coerce_curve(p, curve)
    pts = [INFINITY]
    for x in range(p):
        fx = fp(x)
        rhs = curve.rhs(fx)
        if not rhs:
            pts.append(Point(fx, fp(0)))
            continue
        y = fp_sqrt(rhs)
        if y is not None:
            pts.append(Point(fx, y))
            pts.append(Point(fx, -y))
    return pts


def brute_force_halves(p, curve, P):
    """Oracle: scan every point Q and keep those with 2Q = P."""
    fp, curve = _coerce_curve(p, curve)
    out = []
    for Q in enumerate_points(p, curve):
        D = INFINITY if Q is INFINITY else curve._add_raw(Q, Q)
        if D == P or (D is INFINITY and P is INFINITY):
            out.append(Q)
    return out


def group_order_bf(p, curve):
    """|E(F_p)| by the character sum over all x (budget-guarded)."""
    if p > BRUTE_FORCE_LIMIT:
        raise ValueError(f"exhaustive count capped at p <= {BRUTE_FORCE_LIMIT}")
    fp, curve = _coerce_curve(p, curve)
    total = p + 1
    for x in range(p):
        total += legendre(curve.rhs(fp(x)))
    return total


def halve_via_order(curve, P, m):
    """P/2 = ((m+1)/2) * P when the group order m is odd.

    The order is trusted input, validated only by m * P = infinity; for odd
    m this returns the unique half of P.
    """
    if m % 2 == 0:
        raise ValueError("group order must be odd for the doubling map to invert")
    if curve.scalar_mul(m, P) is not INFINITY:
        raise ValueError("claimed order does not annihilate the point")
    return curve.scalar_mul((m + 1) // 2, P)
