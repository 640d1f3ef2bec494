"""Extension fields F_{p^D} = F_p[X]/(g) for D in {1, 2, 3}, plus an
on-demand quadratic tower F_{p^(2D)} = F_{p^D}[Y]/(Y^2 - ns) that adjoins
square roots of non-residues.  Subfield membership goes through the
Frobenius map a -> a^p, whose fixed field is F_p.
"""

import random

from .primefield import (
    PrimeField,
    FpElem,
    cubic_roots_fp,
    legendre,
    tonelli_shanks,
    _pmul,
    _pmod,
)


class ExtField:
    """F_p[X]/(g) for a monic irreducible g of degree 1, 2 or 3.

    The modulus is given as an ascending coefficient list, e.g.
    ``[71, 17, 0, 1]`` for X^3 + 17X + 71.  Irreducibility is checked at
    construction.
    """

    __slots__ = ("base", "p", "degree", "modulus", "_tower", "_nonresidue")

    def __init__(self, base, modulus):
        if isinstance(base, int):
            base = PrimeField(base)
        self.base = base
        self.p = base.p
        modulus = [c % self.p for c in modulus]
        if not modulus or modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.degree = len(modulus) - 1
        if self.degree not in (1, 2, 3):
            raise ValueError("extension degree must be 1, 2 or 3")
        self.modulus = tuple(modulus)
        self._check_irreducible()
        self._tower = None
        self._nonresidue = None

    def _check_irreducible(self):
        d = self.degree
        if d == 1:
            return
        if d == 2:
            c, b = self.modulus[0], self.modulus[1]
            disc = self.base(b) * b - 4 * c
            if legendre(disc) != -1:
                raise ValueError("quadratic modulus is reducible")
        else:
            _, degrees = cubic_roots_fp(
                self.base(self.modulus[2]), self.base(self.modulus[1]), self.base(self.modulus[0])
            )
            if degrees != (3,):
                raise ValueError("cubic modulus is reducible")

    @property
    def order(self):
        return self.p ** self.degree

    def __call__(self, value):
        if isinstance(value, ExtElem):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, FpElem):
            if value.field.p != self.p:
                raise ValueError("mixed characteristics")
            value = value.value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.degree - 1)
        else:
            coeffs = [c % self.p for c in value]
            if len(coeffs) > self.degree:
                raise ValueError("coefficient vector longer than the degree")
            coeffs += [0] * (self.degree - len(coeffs))
        return ExtElem(self, tuple(coeffs))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        """The class of X (for degree 1 this is the constant 0 = X mod X)."""
        return self([0, 1][: self.degree] if self.degree > 1 else [0])

    def nonresidue(self):
        """First quadratic non-residue found by the deterministic scan."""
        if self._nonresidue is None:
            self._nonresidue = choose_nonresidue(self)
        return self._nonresidue

    def quadratic_tower(self):
        """The quadratic extension of this field, built once and cached."""
        if self._tower is None:
            self._tower = TowerField(self)
        return self._tower

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.p, self.modulus))

    def __repr__(self):
        return f"ExtField(p={self.p}, modulus={list(self.modulus)})"


class ExtElem:
    """Element of an ExtField, stored as coefficients on 1, X, ..., X^(D-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise ValueError("mixed extension fields")
            return other
        if isinstance(other, (int, FpElem)):
            return self.field(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return ExtElem(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return ExtElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return ExtElem(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        prod = _pmod(_pmul(list(self.coeffs), list(other.coeffs), p), list(self.field.modulus), p)
        prod += [0] * (self.field.degree - len(prod))
        return ExtElem(self.field, tuple(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in an extension field")
        return self ** (self.field.order - 2)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        d = self.field.degree
        if d == 1:
            return str(self.coeffs[0])
        terms = [f"{self.coeffs[i]}*X^{i}" if i > 1 else f"{self.coeffs[1]}*X" for i in range(d - 1, 0, -1)]
        return " + ".join(terms + [str(self.coeffs[0])])


class TowerField:
    """F_{p^D}[Y]/(Y^2 - ns) over an ExtField, ns a quadratic non-residue."""

    __slots__ = ("ext", "p", "ns", "_nonresidue")

    def __init__(self, ext, ns=None):
        self.ext = ext
        self.p = ext.p
        self.ns = ext.nonresidue() if ns is None else ext(ns)
        self._nonresidue = None

    @property
    def order(self):
        return self.ext.order ** 2

    def __call__(self, value):
        if isinstance(value, TowerElem):
            if value.field != self:
                raise ValueError("element belongs to a different tower")
            return value
        if isinstance(value, tuple):
            u, v = value
            return TowerElem(self, self.ext(u), self.ext(v))
        return TowerElem(self, self.ext(value), self.ext.zero())

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        return TowerElem(self, self.ext.zero(), self.ext.one())

    def nonresidue(self):
        if self._nonresidue is None:
            self._nonresidue = choose_nonresidue(self)
        return self._nonresidue

    def __eq__(self, other):
        return (
            isinstance(other, TowerField)
            and other.ext == self.ext
            and other.ns == self.ns
        )

    def __hash__(self):
        return hash(("TowerField", self.ext, self.ns))

    def __repr__(self):
        return f"TowerField(over={self.ext!r}, ns={self.ns!r})"


class TowerElem:
    """u + v*Y with u, v in the base extension and Y^2 = ns."""

    __slots__ = ("field", "u", "v")

    def __init__(self, field, u, v):
        self.field = field
        self.u = u
        self.v = v

    def _coerce(self, other):
        if isinstance(other, TowerElem):
            if other.field != self.field:
                raise ValueError("mixed towers")
            return other
        if isinstance(other, (int, FpElem, ExtElem)):
            return self.field(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TowerElem(self.field, self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.field, -self.u, -self.v)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TowerElem(self.field, self.u - other.u, self.v - other.v)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ns = self.field.ns
        return TowerElem(
            self.field,
            self.u * other.u + self.v * other.v * ns,
            self.u * other.v + self.v * other.u,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        # 1/(u + vY) = (u - vY) / (u^2 - v^2 ns)
        norm = self.u * self.u - self.v * self.v * self.field.ns
        if not norm:
            raise ZeroDivisionError("inverse of zero in the tower")
        inv = norm.inverse()
        return TowerElem(self.field, self.u * inv, -self.v * inv)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is None:
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.field.p, self.u, self.v))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __repr__(self):
        return f"({self.u!r}) + ({self.v!r})*Y"


# -- field-generic helpers ---------------------------------------------------

def _canon_key(a):
    # deterministic total order key; for D = 1 this is the integer itself
    if isinstance(a, TowerElem):
        return a.u.coeffs + a.v.coeffs
    return a.coeffs


def frobenius(a):
    """The map a -> a^p; applied D times (2D in the tower) it is the identity."""
    return a ** a.field.p


def in_base_field(a):
    """Whether a lies in F_p, decided by Frobenius fixation."""
    return frobenius(a) == a


def project_to_fp(a):
    """The element as an FpElem if its higher coordinates vanish, else None."""
    if isinstance(a, FpElem):
        return a
    if isinstance(a, TowerElem):
        if a.v:
            return None
        a = a.u
    if any(a.coeffs[1:]):
        return None
    return a.field.base(a.coeffs[0])


def choose_nonresidue(field, seed=0):
    """First quadratic non-residue of the field under a deterministic scan.

    Constants 2, 3, ... are tried first, then low-degree polynomials; a
    seeded random search takes over only if the capped scan runs dry.
    """
    q = field.order
    one = field.one()

    def is_nonresidue(a):
        return bool(a) and a ** ((q - 1) // 2) != one

    for c in range(2, min(field.p, 258)):
        a = field(c)
        if is_nonresidue(a):
            return a
    # linear (and for towers Y-linear) candidates with small coefficients
    if isinstance(field, TowerField):
        small = [field((c, 1)) for c in range(0, min(field.p, 258))]
    elif field.degree >= 2:
        small = [field([c, 1]) for c in range(0, min(field.p, 258))]
    else:
        small = []
    for a in small:
        if is_nonresidue(a):
            return a
    rng = random.Random(seed)
    while True:
        if isinstance(field, TowerField):
            a = field((rng.randrange(field.p), rng.randrange(field.p)))
        else:
            a = field([rng.randrange(field.p) for _ in range(field.degree)])
        if is_nonresidue(a):
            return a


def ext_sqrt(a):
    """Canonical square root in the element's own field, or None.

    Works for ExtElem and TowerElem alike.  For field order q = 3 mod 4 a
    single exponentiation a^((q+1)/4) is tried and verified by squaring;
    otherwise the Euler criterion gates a Tonelli-Shanks run.  The
    canonical root is the lexicographically smaller of r and -r on
    coefficient vectors.
    """
    if not a:
        return a
    field = a.field
    q = field.order
    if q % 4 == 3:
        r = a ** ((q + 1) // 4)
        if r * r != a:
            return None
    else:
        if a ** ((q - 1) // 2) != field.one():
            return None
        r = tonelli_shanks(a, q, field.nonresidue())
        if r * r != a:
            raise ArithmeticError("square root postcondition failed")
    return r if _canon_key(r) <= _canon_key(-r) else -r


def sqrt_in_tower(a):
    """A total square root: in the field itself when a is a residue, else in
    the quadratic tower (where a/ns is then a residue)."""
    tower = a.field.quadratic_tower()
    s = ext_sqrt(a)
    if s is not None:
        return tower(s)
    s = ext_sqrt(a / tower.ns)
    if s is None:
        raise ArithmeticError("non-residue quotient of non-residues")
    return TowerElem(tower, a.field.zero(), s)
