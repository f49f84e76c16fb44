"""Exact arithmetic in the Gaussian, Eisenstein and Hurwitz integers.

Three orders are supported, tagged by :class:`Ring`:

* ``Ring.GAUSS``       -- Z[i], elements stored as ``(a, b)`` meaning ``a + b*i``
* ``Ring.EISENSTEIN``  -- Z[w], elements stored as ``(a, b)`` meaning ``a + b*w``
  where ``w = (-1 + sqrt(-3)) / 2`` is a primitive cube root of unity
* ``Ring.HURWITZ``     -- the integral quaternions spanned by the 24 units,
  elements stored as doubled coordinates ``(A, B, C, D)`` meaning
  ``(A + B*i + C*j + D*k) / 2`` with all four integers of the same parity

Doubling keeps every Hurwitz computation in plain integers; denominators
only ever appear in :class:`RationalScalar`, whose coordinates are exact
``Fraction`` values over the undoubled basis (1, i), (1, w) or (1, i, j, k).
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Sequence


class Ring(enum.Enum):
    GAUSS = "G"
    EISENSTEIN = "E"
    HURWITZ = "H"

    @property
    def ncoords(self) -> int:
        return 4 if self is Ring.HURWITZ else 2

    @property
    def real_degree(self) -> int:
        """Rank of the order as a Z-module."""
        return 4 if self is Ring.HURWITZ else 2


class RingMismatch(ValueError):
    """Raised when two operands live over different orders."""


def _check_same_ring(x, y) -> None:
    if x.ring is not y.ring:
        raise RingMismatch(f"ring mismatch: {x.ring.value} vs {y.ring.value}")


def _quat_mul(a1, b1, c1, d1, a2, b2, c2, d2):
    # Hamilton product, works for int and Fraction components alike.
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


class RingElement:
    """An exact element of one of the three orders."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: Ring, coords: Sequence[int]):
        coords = tuple(int(c) for c in coords)
        if len(coords) != ring.ncoords:
            raise ValueError(f"{ring.value} elements need {ring.ncoords} coordinates")
        if ring is Ring.HURWITZ:
            p = coords[0] & 1
            if any((c & 1) != p for c in coords):
                raise ValueError("Hurwitz doubled coordinates must share parity")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *args):  # immutable
        raise AttributeError("RingElement is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: Ring) -> "RingElement":
        return RingElement(ring, (0,) * ring.ncoords)

    @staticmethod
    def one(ring: Ring) -> "RingElement":
        if ring is Ring.HURWITZ:
            return RingElement(ring, (2, 0, 0, 0))
        return RingElement(ring, (1, 0))

    @staticmethod
    def from_int(ring: Ring, n: int) -> "RingElement":
        if ring is Ring.HURWITZ:
            return RingElement(ring, (2 * n, 0, 0, 0))
        return RingElement(ring, (n, 0))

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring is other.ring
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.coords))

    def key(self) -> tuple[int, ...]:
        """Doubled-integer coordinates, the canonical sort key."""
        if self.ring is Ring.HURWITZ:
            return self.coords
        return (2 * self.coords[0], 2 * self.coords[1])

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RingElement") -> "RingElement":
        _check_same_ring(self, other)
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        _check_same_ring(self, other)
        return RingElement(self.ring, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, tuple(-a for a in self.coords))

    def __mul__(self, other: "RingElement") -> "RingElement":
        _check_same_ring(self, other)
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            c, d = other.coords
            return RingElement(r, (a * c - b * d, a * d + b * c))
        if r is Ring.EISENSTEIN:
            # (a + b*w)(c + d*w) with w^2 = -1 - w
            a, b = self.coords
            c, d = other.coords
            return RingElement(r, (a * c - b * d, a * d + b * c - b * d))
        prod = _quat_mul(*self.coords, *other.coords)
        if any(p & 1 for p in prod):
            raise ArithmeticError("non-integral Hurwitz product")
        return RingElement(r, tuple(p // 2 for p in prod))

    def conj(self) -> "RingElement":
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            return RingElement(r, (a, -b))
        if r is Ring.EISENSTEIN:
            # conj(a + b*w) = a + b*conj(w) = (a - b) - b*w
            a, b = self.coords
            return RingElement(r, (a - b, -b))
        a, b, c, d = self.coords
        return RingElement(r, (a, -b, -c, -d))

    def norm(self) -> int:
        """x * conj(x), always a nonnegative integer on these orders."""
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            return a * a + b * b
        if r is Ring.EISENSTEIN:
            a, b = self.coords
            return a * a - a * b + b * b
        a, b, c, d = self.coords
        q, rem = divmod(a * a + b * b + c * c + d * d, 4)
        if rem:
            raise ArithmeticError("non-integral Hurwitz norm")
        return q

    def two_re(self) -> int:
        """2 * Re(x) as an integer (trace of x)."""
        if self.ring is Ring.GAUSS:
            return 2 * self.coords[0]
        if self.ring is Ring.EISENSTEIN:
            return 2 * self.coords[0] - self.coords[1]
        return self.coords[0]

    def is_real(self) -> bool:
        return self == self.conj()

    def is_imaginary(self) -> bool:
        return self.two_re() == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def inv_unit(self) -> "RingElement":
        """Inverse of a unit (the conjugate)."""
        if not self.is_unit():
            raise ValueError("not a unit")
        return self.conj()

    def scalar_mul(self, n: int) -> "RingElement":
        return RingElement(self.ring, tuple(n * c for c in self.coords))

    def re_im(self) -> tuple["RationalScalar", "RationalScalar"]:
        """(Re x, Im x) as exact scalars with x = Re + Im."""
        s = self.to_scalar()
        re = s.re_scalar()
        return re, s - re

    # -- conversions -------------------------------------------------------

    def to_scalar(self) -> "RationalScalar":
        r = self.ring
        if r is Ring.HURWITZ:
            return RationalScalar(r, tuple(Fraction(c, 2) for c in self.coords))
        return RationalScalar(r, tuple(Fraction(c) for c in self.coords))

    def __repr__(self) -> str:
        return f"RingElement({self.ring.value}, {self.coords})"

    def __str__(self) -> str:
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            return f"{a}{b:+d}i"
        if r is Ring.EISENSTEIN:
            a, b = self.coords
            return f"{a}{b:+d}w"
        a, b, c, d = self.coords
        return f"({a}{b:+d}i{c:+d}j{d:+d}k)/2"


class RationalScalar:
    """An exact element of the ambient field K = R tensor Q(ring).

    Coordinates are Fractions over the basis (1, i) for Gauss, (1, w) for
    Eisenstein, and (1, i, j, k) for Hurwitz (undoubled).
    """

    __slots__ = ("ring", "coords")

    def __init__(self, ring: Ring, coords: Sequence[Fraction]):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != ring.ncoords:
            raise ValueError(f"{ring.value} scalars need {ring.ncoords} coordinates")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *args):
        raise AttributeError("RationalScalar is immutable")

    @staticmethod
    def zero(ring: Ring) -> "RationalScalar":
        return RationalScalar(ring, (Fraction(0),) * ring.ncoords)

    @staticmethod
    def one(ring: Ring) -> "RationalScalar":
        return RationalScalar(ring, (Fraction(1),) + (Fraction(0),) * (ring.ncoords - 1))

    @staticmethod
    def from_fraction(ring: Ring, q: Fraction) -> "RationalScalar":
        return RationalScalar(ring, (Fraction(q),) + (Fraction(0),) * (ring.ncoords - 1))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            other = other.to_scalar()
        return (
            isinstance(other, RationalScalar)
            and self.ring is other.ring
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.coords))

    def __add__(self, other) -> "RationalScalar":
        other = _as_scalar(other)
        _check_same_ring(self, other)
        return RationalScalar(self.ring, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other) -> "RationalScalar":
        other = _as_scalar(other)
        _check_same_ring(self, other)
        return RationalScalar(self.ring, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RationalScalar":
        return RationalScalar(self.ring, tuple(-a for a in self.coords))

    def __mul__(self, other) -> "RationalScalar":
        other = _as_scalar(other)
        _check_same_ring(self, other)
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            c, d = other.coords
            return RationalScalar(r, (a * c - b * d, a * d + b * c))
        if r is Ring.EISENSTEIN:
            a, b = self.coords
            c, d = other.coords
            return RationalScalar(r, (a * c - b * d, a * d + b * c - b * d))
        return RationalScalar(r, _quat_mul(*self.coords, *other.coords))

    def scale(self, q: Fraction) -> "RationalScalar":
        q = Fraction(q)
        return RationalScalar(self.ring, tuple(q * c for c in self.coords))

    def conj(self) -> "RationalScalar":
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            return RationalScalar(r, (a, -b))
        if r is Ring.EISENSTEIN:
            a, b = self.coords
            return RationalScalar(r, (a - b, -b))
        a, b, c, d = self.coords
        return RationalScalar(r, (a, -b, -c, -d))

    def norm(self) -> Fraction:
        r = self.ring
        if r is Ring.GAUSS:
            a, b = self.coords
            return a * a + b * b
        if r is Ring.EISENSTEIN:
            a, b = self.coords
            return a * a - a * b + b * b
        return sum(c * c for c in self.coords)

    def re(self) -> Fraction:
        if self.ring is Ring.EISENSTEIN:
            return self.coords[0] - self.coords[1] / 2
        return self.coords[0]

    def re_scalar(self) -> "RationalScalar":
        return RationalScalar.from_fraction(self.ring, self.re())

    def im_scalar(self) -> "RationalScalar":
        return self - self.re_scalar()

    def re_im(self) -> tuple["RationalScalar", "RationalScalar"]:
        re = self.re_scalar()
        return re, self - re

    def is_real(self) -> bool:
        return self.im_scalar().is_zero()

    def is_imaginary(self) -> bool:
        return self.re() == 0

    def inv(self) -> "RationalScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverting zero scalar")
        return self.conj().scale(Fraction(1) / n)

    def is_integral(self) -> bool:
        """Whether the scalar lies in the order."""
        if self.ring is Ring.HURWITZ:
            doubled = [2 * c for c in self.coords]
            if any(x.denominator != 1 for x in doubled):
                return False
            p = int(doubled[0]) & 1
            return all((int(x) & 1) == p for x in doubled)
        return all(c.denominator == 1 for c in self.coords)

    def to_ring(self) -> RingElement:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        if self.ring is Ring.HURWITZ:
            return RingElement(self.ring, tuple(int(2 * c) for c in self.coords))
        return RingElement(self.ring, tuple(int(c) for c in self.coords))

    def __repr__(self) -> str:
        return f"RationalScalar({self.ring.value}, {tuple(str(c) for c in self.coords)})"


def _as_scalar(x) -> RationalScalar:
    if isinstance(x, RationalScalar):
        return x
    if isinstance(x, RingElement):
        return x.to_scalar()
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalScalar")


# -- convenience constructors ------------------------------------------------

def gauss(a: int, b: int = 0) -> RingElement:
    return RingElement(Ring.GAUSS, (a, b))


def eisen(a: int, b: int = 0) -> RingElement:
    return RingElement(Ring.EISENSTEIN, (a, b))


def hurwitz(a: int, b: int = 0, c: int = 0, d: int = 0, *, half: bool = False) -> RingElement:
    """Hurwitz element a + b*i + c*j + d*k, or (a+b*i+c*j+d*k)/2 when half=True."""
    if half:
        return RingElement(Ring.HURWITZ, (a, b, c, d))
    return RingElement(Ring.HURWITZ, (2 * a, 2 * b, 2 * c, 2 * d))


def omega(ring: Ring = Ring.EISENSTEIN) -> RingElement:
    """A primitive cube root of unity in the requested order."""
    if ring is Ring.EISENSTEIN:
        return eisen(0, 1)
    if ring is Ring.HURWITZ:
        return hurwitz(-1, 1, 1, 1, half=True)
    raise ValueError("Gauss contains no cube root of unity")


def theta(ring: Ring = Ring.EISENSTEIN) -> RingElement:
    """theta = omega - conj(omega), a square root of -3."""
    w = omega(ring)
    return w - w.conj()


def imag_unit(ring: Ring = Ring.GAUSS) -> RingElement:
    if ring is Ring.GAUSS:
        return gauss(0, 1)
    if ring is Ring.HURWITZ:
        return hurwitz(0, 1, 0, 0)
    raise ValueError("Eisenstein integers contain no square root of -1")


_UNITS_CACHE: dict[Ring, tuple[RingElement, ...]] = {}


def units(ring: Ring) -> tuple[RingElement, ...]:
    """All norm-1 elements, in canonical (doubled-coordinate) order."""
    if ring not in _UNITS_CACHE:
        if ring is Ring.GAUSS:
            out = [gauss(1), gauss(-1), gauss(0, 1), gauss(0, -1)]
        elif ring is Ring.EISENSTEIN:
            w = omega()
            out = []
            for u in (eisen(1), w, w * w):
                out.extend([u, -u])
        else:
            out = []
            for pos in range(4):
                for s in (1, -1):
                    coords = [0, 0, 0, 0]
                    coords[pos] = 2 * s
                    out.append(RingElement(Ring.HURWITZ, coords))
            for a in (1, -1):
                for b in (1, -1):
                    for c in (1, -1):
                        for d in (1, -1):
                            out.append(RingElement(Ring.HURWITZ, (a, b, c, d)))
        _UNITS_CACHE[ring] = tuple(sorted(out, key=lambda u: u.key()))
    return _UNITS_CACHE[ring]


def embed_eisenstein_in_hurwitz(x: RingElement) -> RingElement:
    """Ring homomorphism E -> H determined by w |-> (-1+i+j+k)/2."""
    if x.ring is not Ring.EISENSTEIN:
        raise RingMismatch("expected an Eisenstein element")
    a, b = x.coords
    # a + b*w |-> a + b*(-1+i+j+k)/2, doubled: (2a - b, b, b, b)
    return RingElement(Ring.HURWITZ, (2 * a - b, b, b, b))


# -- division and gcd --------------------------------------------------------

def _nearest_ring(ring: Ring, s: RationalScalar) -> RingElement:
    """A ring element minimizing |s - x|; remainder norm is < 1 for all rings."""
    if ring is not Ring.HURWITZ:
        a, b = s.coords
        best = None
        best_n = None
        for da in _near_ints(a):
            for db in _near_ints(b):
                cand = RingElement(ring, (da, db))
                n = (s - cand.to_scalar()).norm()
                if best_n is None or n < best_n:
                    best, best_n = cand, n
        return best
    doubled = [2 * c for c in s.coords]
    best = None
    best_n = None
    for parity in (0, 1):
        cand_coords = []
        for x in doubled:
            cand_coords.append(_near_int_parity(x, parity))
        cand = RingElement(ring, tuple(cand_coords))
        n = (s - cand.to_scalar()).norm()
        if best_n is None or n < best_n:
            best, best_n = cand, n
    return best


def _near_ints(q: Fraction) -> tuple[int, ...]:
    f = q.numerator // q.denominator
    return (f, f + 1)


def _near_int_parity(q: Fraction, parity: int) -> int:
    """Nearest integer to q of the given parity."""
    f = q.numerator // q.denominator
    if (f & 1) == parity:
        cand = (f, f + 2)
    else:
        cand = (f - 1, f + 1)
    return min(cand, key=lambda n: abs(q - n))


def divmod_left(x: RingElement, y: RingElement) -> tuple[RingElement, RingElement]:
    """q, r with x = q*y + r and norm(r) < norm(y)."""
    _check_same_ring(x, y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero")
    q = _nearest_ring(x.ring, (x.to_scalar() * y.to_scalar().inv()))
    r = x - q * y
    return q, r


def divmod_right(x: RingElement, y: RingElement) -> tuple[RingElement, RingElement]:
    """q, r with x = y*q + r and norm(r) < norm(y)."""
    _check_same_ring(x, y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero")
    q = _nearest_ring(x.ring, (y.to_scalar().inv() * x.to_scalar()))
    r = x - y * q
    return q, r


def div_exact_right(x: RingElement, y: RingElement) -> RingElement:
    """x * y^{-1} when it lies in the order."""
    s = x.to_scalar() * y.to_scalar().inv()
    return s.to_ring()


def div_exact_left(x: RingElement, y: RingElement) -> RingElement:
    """y^{-1} * x when it lies in the order."""
    s = y.to_scalar().inv() * x.to_scalar()
    return s.to_ring()


def _normalize_assoc(x: RingElement) -> RingElement:
    """Canonical associate: minimal key among unit multiples (both sides)."""
    if x.is_zero():
        return x
    best = None
    for u in units(x.ring):
        for cand in (x * u, u * x):
            if best is None or cand.key() < best.key():
                best = cand
    return best


def gcd_right(elements: Iterable[RingElement], ring: Ring) -> RingElement:
    """Greatest common right divisor: g with each x = x' * g.

    Computed by the Euclidean algorithm with left quotients (x = q*y + r),
    so the result generates the left module sum(R * x_i).  For the two
    commutative rings this is the ordinary gcd.  The result is normalized
    to a canonical associate; gcd of no/zero elements is zero.
    """
    g = RingElement.zero(ring)
    for x in elements:
        if x.ring is not ring:
            raise RingMismatch("mixed rings in gcd")
        a, b = g, x
        while not b.is_zero():
            _, r = divmod_left(a, b)
            a, b = b, r
        g = a
    return _normalize_assoc(g)


def gcd_left(elements: Iterable[RingElement], ring: Ring) -> RingElement:
    """Greatest common left divisor: g with each x = g * x'."""
    g = RingElement.zero(ring)
    for x in elements:
        if x.ring is not ring:
            raise RingMismatch("mixed rings in gcd")
        a, b = g, x
        while not b.is_zero():
            _, r = divmod_right(a, b)
            a, b = b, r
        g = a
    return _normalize_assoc(g)


# -- residues ----------------------------------------------------------------

def residue_count(ring: Ring, m: RingElement) -> int:
    """|R / Rm|: norm(m) for the commutative rings, norm(m)^2 for Hurwitz."""
    n = m.norm()
    return n * n if ring is Ring.HURWITZ else n


def in_left_multiples(x: RingElement, m: RingElement) -> bool:
    """Whether x lies in Rm, i.e. x = r*m for some ring element r."""
    s = x.to_scalar() * m.to_scalar().inv()
    return s.is_integral()


_RESIDUES_CACHE: dict[tuple, tuple[RingElement, ...]] = {}
_RESIDUE_INDEX_CACHE: dict[tuple, dict[tuple[int, ...], int]] = {}


def residues_mod(ring: Ring, m: RingElement) -> tuple[RingElement, ...]:
    """Canonical representatives of the cosets x + Rm.

    Representatives are minimal in (norm, doubled-coordinate key) order, so
    the choice is deterministic and the reps are as small as possible.
    """
    if m.ring is not ring:
        raise RingMismatch("modulus from wrong ring")
    if m.is_zero():
        raise ZeroDivisionError("zero modulus")
    cache_key = (ring, m.coords)
    if cache_key in _RESIDUES_CACHE:
        return _RESIDUES_CACHE[cache_key]
    want = residue_count(ring, m)
    bound = 1
    while True:
        reps: list[RingElement] = []
        for cand in sorted(_elements_in_box(ring, bound), key=lambda x: (x.norm(), x.key())):
            if any(in_left_multiples(cand - r, m) for r in reps):
                continue
            reps.append(cand)
            if len(reps) == want:
                break
        if len(reps) == want:
            break
        bound += 1
    _RESIDUES_CACHE[cache_key] = tuple(reps)
    return _RESIDUES_CACHE[cache_key]


def _elements_in_box(ring: Ring, bound: int):
    """Ring elements with doubled coordinates in [-2*bound, 2*bound]."""
    lo, hi = -2 * bound, 2 * bound
    if ring is not Ring.HURWITZ:
        for a2 in range(lo, hi + 1, 2):
            for b2 in range(lo, hi + 1, 2):
                yield RingElement(ring, (a2 // 2, b2 // 2))
        return
    for a in range(lo, hi + 1):
        for b in range(lo, hi + 1):
            if (a ^ b) & 1:
                continue
            for c in range(lo, hi + 1):
                if (a ^ c) & 1:
                    continue
                for d in range(lo, hi + 1):
                    if (a ^ d) & 1:
                        continue
                    yield RingElement(ring, (a, b, c, d))


def residue_index(ring: Ring, m: RingElement) -> dict[tuple[int, ...], int]:
    """Lookup table: reduced element key -> residue class index.

    Covers every element with norm <= norm(m) (enough for remainders of
    nearest-element division, whose norm is < norm(m)).
    """
    cache_key = (ring, m.coords)
    if cache_key in _RESIDUE_INDEX_CACHE:
        return _RESIDUE_INDEX_CACHE[cache_key]
    reps = residues_mod(ring, m)
    table: dict[tuple[int, ...], int] = {}
    limit = int(m.norm())
    box = math.isqrt(limit) + 1
    for cand in _elements_in_box(ring, box):
        if cand.norm() > limit:
            continue
        for idx, r in enumerate(reps):
            if in_left_multiples(cand - r, m):
                table[cand.key()] = idx
                break
    _RESIDUE_INDEX_CACHE[cache_key] = table
    return table


def reduce_mod(x: RingElement, m: RingElement) -> RingElement:
    """A small representative of x + Rm (remainder of nearest division)."""
    q, r = divmod_left(x, m)
    return r


def ring_vec(x: RingElement) -> list[int]:
    """Z-basis coordinates of x over ring_z_basis(x.ring)."""
    if x.ring is Ring.HURWITZ:
        a, b, c, d = x.coords
        return [(a - d) // 2, (b - d) // 2, (c - d) // 2, d]
    return list(x.coords)


def ring_from_vec(ring: Ring, v: Sequence[int]) -> RingElement:
    if ring is Ring.HURWITZ:
        a, b, c, e = v
        return RingElement(ring, (2 * a + e, 2 * b + e, 2 * c + e, e))
    return RingElement(ring, tuple(v))


def residue_classifier(ring: Ring, m: RingElement):
    """(reps, classify) with classify(x) the index of x's class in R/Rm.

    classify reduces the Z-coordinates of x into the fundamental box of the
    HNF of Rm, so it costs a handful of integer operations per call.
    """
    from . import _intlinalg

    reps = residues_mod(ring, m)
    d = ring.real_degree
    rows = _intlinalg.hnf_rows([ring_vec(m * b) for b in ring_z_basis(ring)])
    if len(rows) != d:
        raise ZeroDivisionError("zero modulus")

    def canon(vec: Sequence[int]) -> tuple[int, ...]:
        v = list(vec)
        for i in range(d):
            p = rows[i][i]
            q = v[i] // p
            if q:
                for j in range(i, d):
                    v[j] -= q * rows[i][j]
        return tuple(v)

    table = {canon(ring_vec(r)): idx for idx, r in enumerate(reps)}
    if len(table) != len(reps):
        raise RuntimeError("residue classifier table collision")

    def classify(x: RingElement) -> int:
        return table[canon(ring_vec(x))]

    return reps, classify


# -- imaginary sublattices ----------------------------------------------------

def ring_z_basis(ring: Ring) -> tuple[RingElement, ...]:
    """Z-basis of the order: (1, i), (1, w) or (1, i, j, (1+i+j+k)/2)."""
    if ring is Ring.GAUSS:
        return (gauss(1), gauss(0, 1))
    if ring is Ring.EISENSTEIN:
        return (eisen(1), omega())
    return (
        hurwitz(1, 0, 0, 0),
        hurwitz(0, 1, 0, 0),
        hurwitz(0, 0, 1, 0),
        hurwitz(1, 1, 1, 1, half=True),
    )


def imaginary_sublattice(ring: Ring, h: RingElement) -> tuple[RingElement, ...]:
    """Z-basis of hR intersected with the imaginary subspace of K.

    The result spans the allowed central offsets when enumerating roots of
    height h; e.g. over Hurwitz with h = 1+i it is spanned by j+k, k+i and
    i-k (the quadruples b*i+c*j+d*k with b+c+d even).
    """
    if h.ring is not ring:
        raise RingMismatch("height from wrong ring")
    if h.is_zero():
        raise ZeroDivisionError("zero height")
    from . import _intlinalg

    gens = [h * b for b in ring_z_basis(ring)]
    # Z-module hR in doubled coordinates; cut by 2*Re = 0.
    rows = [list(g.key()) for g in gens]
    trace = {
        Ring.GAUSS: [2, 0],
        Ring.EISENSTEIN: [2, -1],
        Ring.HURWITZ: [1, 0, 0, 0],
    }[ring]
    # Solve for integer combinations of gens with zero trace.
    tr = [sum(t * r for t, r in zip(trace, row)) for row in rows]
    kernel = _intlinalg.kernel_basis([tr])
    basis_rows = []
    for comb in kernel:
        vec = [0] * ring.ncoords
        for c, row in zip(comb, rows):
            for idx in range(len(vec)):
                vec[idx] += c * row[idx]
        basis_rows.append(vec)
    basis_rows = _intlinalg.hnf_rows(basis_rows)
    out = []
    for row in basis_rows:
        if all(v == 0 for v in row):
            continue
        if ring is Ring.HURWITZ:
            out.append(RingElement(ring, tuple(row)))
        else:
            assert row[0] % 2 == 0 and row[1] % 2 == 0
            out.append(RingElement(ring, (row[0] // 2, row[1] // 2)))
    return tuple(out)
