"""Hermitian lattices over the three orders: Gram model plus exact search.

A lattice is its ring, rank and Gram matrix; vectors are coordinate tuples
in the implied basis.  Enumeration (shortest vectors, closest points) runs
over the real form: the same abelian group viewed as a Z-lattice of rank
2n or 4n, handed to the exact Fincke-Pohst machinery in ``_intlinalg``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from . import _intlinalg, _ringmat
from .rings import (
    RationalScalar,
    Ring,
    RingElement,
    gcd_right,
    residues_mod,
    residue_classifier,
    residue_count,
    ring_z_basis,
)


class LatticeError(ValueError):
    pass


class HermitianLattice:
    """ring tag + rank + Hermitian Gram matrix (+ optional catalog name)."""

    def __init__(self, ring: Ring, gram: Sequence[Sequence[RingElement]], name: str | None = None):
        self.ring = ring
        self.rank = len(gram)
        g = [list(row) for row in gram]
        for i in range(self.rank):
            for j in range(self.rank):
                if g[i][j].ring is not ring:
                    raise LatticeError("gram entry from wrong ring")
                if g[i][j].conj() != g[j][i]:
                    raise LatticeError("gram is not Hermitian")
            if not g[i][i].is_real():
                raise LatticeError("gram diagonal must be real")
        self.gram = tuple(tuple(row) for row in g)
        self.name = name
        self._real = None
        self._enum = None
        self._definite = None

    def __repr__(self) -> str:
        label = self.name or "?"
        return f"HermitianLattice({self.ring.value}, rank={self.rank}, name={label})"

    # -- vectors ------------------------------------------------------------

    def vector(self, coords: Sequence) -> "LatticeVector":
        out = []
        for c in coords:
            if isinstance(c, RingElement):
                out.append(c)
            elif isinstance(c, RationalScalar):
                out.append(c.to_ring())
            elif isinstance(c, int):
                out.append(RingElement.from_int(self.ring, c))
            else:
                raise TypeError(f"bad coordinate {c!r}")
        return LatticeVector(self, tuple(out))

    def point(self, coords: Sequence) -> "RationalPoint":
        out = []
        for c in coords:
            if isinstance(c, RationalScalar):
                out.append(c)
            elif isinstance(c, RingElement):
                out.append(c.to_scalar())
            elif isinstance(c, (int, Fraction)):
                out.append(RationalScalar.from_fraction(self.ring, Fraction(c)))
            else:
                raise TypeError(f"bad coordinate {c!r}")
        return RationalPoint(self, tuple(out))

    def zero(self) -> "LatticeVector":
        return self.vector([0] * self.rank)

    def basis_vector(self, i: int) -> "LatticeVector":
        coords = [0] * self.rank
        coords[i] = 1
        return self.vector(coords)

    # -- real form ----------------------------------------------------------

    def real_form(self) -> "RealForm":
        if self._real is None:
            self._real = RealForm(self)
        return self._real

    def is_definite(self) -> bool:
        if self._definite is None:
            pos, neg, zero = _intlinalg.symmetric_signature(self.real_form().gram)
            self._definite = neg == 0 and zero == 0
        return self._definite

    def signature(self) -> tuple[int, int]:
        """Hermitian signature (n_plus, n_minus); requires nonsingular form."""
        pos, neg, zero = _intlinalg.symmetric_signature(self.real_form().gram)
        if zero:
            raise LatticeError("singular lattice")
        d = self.ring.real_degree
        if pos % d or neg % d:
            raise LatticeError("real signature does not descend")
        return pos // d, neg // d

    def _enumerator(self) -> _intlinalg.QuadraticEnumerator:
        if self._enum is None:
            if not self.is_definite():
                raise LatticeError("indefinite lattice")
            rf = self.real_form()
            self._enum = _intlinalg.QuadraticEnumerator(rf.int_gram)
        return self._enum


class LatticeVector:
    """Element of a lattice, coordinates in the fixed basis."""

    __slots__ = ("lattice", "coords")

    def __init__(self, lattice: HermitianLattice, coords: tuple[RingElement, ...]):
        if len(coords) != lattice.rank:
            raise LatticeError("coordinate count != rank")
        self.lattice = lattice
        self.coords = coords

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticeVector)
            and self.lattice is other.lattice
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash(tuple(c.coords for c in self.coords))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _same_lattice(self, other)
        return LatticeVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _same_lattice(self, other)
        return LatticeVector(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(-a for a in self.coords))

    def times(self, alpha: RingElement) -> "LatticeVector":
        """Right scalar multiple v * alpha."""
        return LatticeVector(self.lattice, tuple(c * alpha for c in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def key(self) -> tuple:
        return tuple(c.key() for c in self.coords)

    def to_point(self) -> "RationalPoint":
        return RationalPoint(self.lattice, tuple(c.to_scalar() for c in self.coords))

    def norm(self) -> int:
        val = inner_product(self, self)
        assert val.is_real()
        n = val.two_re()
        assert n % 2 == 0
        return n // 2

    def __repr__(self) -> str:
        return f"LatticeVector({[str(c) for c in self.coords]})"


class RationalPoint:
    """Point of lattice tensor Q, exact rational coordinates."""

    __slots__ = ("lattice", "coords")

    def __init__(self, lattice: HermitianLattice, coords: tuple[RationalScalar, ...]):
        if len(coords) != lattice.rank:
            raise LatticeError("coordinate count != rank")
        self.lattice = lattice
        self.coords = coords

    def __eq__(self, other) -> bool:
        if isinstance(other, LatticeVector):
            other = other.to_point()
        return (
            isinstance(other, RationalPoint)
            and self.lattice is other.lattice
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash(tuple(c.coords for c in self.coords))

    def __add__(self, other) -> "RationalPoint":
        other = _as_point(other)
        _same_lattice(self, other)
        return RationalPoint(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other) -> "RationalPoint":
        other = _as_point(other)
        _same_lattice(self, other)
        return RationalPoint(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RationalPoint":
        return RationalPoint(self.lattice, tuple(-a for a in self.coords))

    def times(self, alpha) -> "RationalPoint":
        s = alpha.to_scalar() if isinstance(alpha, RingElement) else alpha
        return RationalPoint(self.lattice, tuple(c * s for c in self.coords))

    def is_lattice_point(self) -> bool:
        return all(c.is_integral() for c in self.coords)

    def to_vector(self) -> LatticeVector:
        return LatticeVector(self.lattice, tuple(c.to_ring() for c in self.coords))

    def norm(self) -> Fraction:
        return inner_product(self, self).re()

    def __repr__(self) -> str:
        return f"RationalPoint({[str(c) for c in self.coords]})"


def _same_lattice(x, y) -> None:
    if x.lattice is not y.lattice:
        raise LatticeError("vectors from different lattices")


def _as_point(x):
    return x.to_point() if isinstance(x, LatticeVector) else x


def inner_product(x, y):
    """<x|y> = sum conj(x_i) g_ij y_j; conjugate-linear in x, linear in y.

    Returns a RingElement when both arguments are lattice vectors, else a
    RationalScalar.
    """
    _same_lattice(x, y)
    lat = x.lattice
    integral = isinstance(x, LatticeVector) and isinstance(y, LatticeVector)
    xs = [c.to_scalar() for c in x.coords] if integral else [
        c.to_scalar() if isinstance(c, RingElement) else c for c in x.coords]
    ys = [c.to_scalar() for c in y.coords] if integral else [
        c.to_scalar() if isinstance(c, RingElement) else c for c in y.coords]
    acc = RationalScalar.zero(lat.ring)
    for i in range(lat.rank):
        xc = xs[i].conj()
        if xc.is_zero():
            continue
        for j in range(lat.rank):
            g = lat.gram[i][j]
            if g.is_zero() or ys[j].is_zero():
                continue
            acc = acc + xc * g.to_scalar() * ys[j]
    if integral:
        return acc.to_ring()
    return acc


def norm_of(x) -> Fraction:
    v = inner_product(x, x)
    if isinstance(v, RingElement):
        return Fraction(v.two_re(), 2)
    return v.re()


class RealForm:
    """Z-structure of a Hermitian lattice with maps in both directions."""

    def __init__(self, lattice: HermitianLattice):
        self.lattice = lattice
        ring = lattice.ring
        self.zbasis = ring_z_basis(ring)
        self.degree = ring.real_degree
        n, d = lattice.rank, self.degree
        self.rank = n * d
        gram = []
        for a in range(n):
            for u in range(d):
                row = []
                bu = self.zbasis[u].to_scalar().conj()
                for b in range(n):
                    gab = lattice.gram[a][b].to_scalar()
                    for v in range(d):
                        val = bu * gab * self.zbasis[v].to_scalar()
                        row.append(val.re())
                gram.append(row)
        self.gram = gram
        den = 1
        for row in gram:
            for x in row:
                if x.denominator == 2:
                    den = 2
                elif x.denominator > 2:
                    raise LatticeError("unexpected real-form denominator")
        self.scale = den
        self.int_gram = [[int(x * den) for x in row] for row in gram]

    # coordinate maps ------------------------------------------------------

    def to_real(self, v: LatticeVector) -> list[int]:
        out = []
        for c in v.coords:
            out.extend(self._elem_to_real(c))
        return out

    def _elem_to_real(self, c: RingElement) -> list[int]:
        if self.lattice.ring is Ring.HURWITZ:
            A, B, C, D = c.coords
            return [(A - D) // 2, (B - D) // 2, (C - D) // 2, D]
        return [c.coords[0], c.coords[1]]

    def point_to_real(self, p: RationalPoint) -> list[Fraction]:
        out = []
        for c in p.coords:
            if self.lattice.ring is Ring.HURWITZ:
                w, x, y, z = c.coords
                out.extend([w - z, x - z, y - z, 2 * z])
            else:
                out.extend([c.coords[0], c.coords[1]])
        return out

    def from_real(self, xs: Sequence[int]) -> LatticeVector:
        coords = []
        d = self.degree
        ring = self.lattice.ring
        for a in range(self.lattice.rank):
            chunk = xs[a * d:(a + 1) * d]
            if ring is Ring.HURWITZ:
                aa, bb, cc, ee = chunk
                coords.append(RingElement(ring, (2 * aa + ee, 2 * bb + ee, 2 * cc + ee, ee)))
            else:
                coords.append(RingElement(ring, tuple(chunk)))
        return LatticeVector(self.lattice, tuple(coords))


# -- enumeration ----------------------------------------------------------------

def short_vectors(lattice: HermitianLattice, max_norm) -> dict[Fraction, list[LatticeVector]]:
    """All lattice vectors of norm <= max_norm, grouped by norm, sorted.

    The zero vector is reported at norm 0; for every nonzero v, -v appears
    alongside v.
    """
    max_norm = Fraction(max_norm)
    if max_norm < 0:
        raise LatticeError("negative norm bound")
    en = lattice._enumerator()
    rf = lattice.real_form()
    bound = max_norm * rf.scale
    out: dict[Fraction, list[LatticeVector]] = {Fraction(0): [lattice.zero()]}
    for x, q in en.enumerate(bound, half=True):
        norm = q / rf.scale
        v = rf.from_real(list(x))
        out.setdefault(norm, []).append(v)
        out[norm].append(-v)
    for norm in out:
        out[norm].sort(key=lambda v: v.key())
    return dict(sorted(out.items()))


def vectors_within(lattice: HermitianLattice, target: RationalPoint, bound) -> list[tuple[LatticeVector, Fraction]]:
    """All lattice vectors v with |v - target|^2 <= bound, nearest first."""
    bound = Fraction(bound)
    if bound < 0:
        return []
    en = lattice._enumerator()
    rf = lattice.real_form()
    center = rf.point_to_real(target)
    found = []
    for x, q in en.enumerate(bound * rf.scale, center=center):
        found.append((rf.from_real(list(x)), q / rf.scale))
    found.sort(key=lambda t: (t[1], t[0].key()))
    return found


def closest_points(lattice: HermitianLattice, target: RationalPoint) -> tuple[Fraction, list[LatticeVector]]:
    """Exact minimal squared distance to the target and all nearest vectors."""
    rf = lattice.real_form()
    center = rf.point_to_real(target)
    guess = [round(c) for c in center]
    v0 = rf.from_real(guess)
    d0 = norm_of(v0.to_point() - target)
    hits = vectors_within(lattice, target, d0)
    best = hits[0][1]
    return best, [v for v, q in hits if q == best]


def theta_prefix(lattice: HermitianLattice, max_norm: int) -> list[int]:
    """Counts of vectors of norms 0..max_norm (integral lattices)."""
    sv = short_vectors(lattice, max_norm)
    out = []
    for k in range(max_norm + 1):
        out.append(len(sv.get(Fraction(k), [])))
    return out


# -- predicates ----------------------------------------------------------------

def is_selfdual(lattice: HermitianLattice) -> bool:
    """Whether the dual basis lies in the lattice (Gram inverse integral)."""
    try:
        inv = _ringmat.mat_inverse(lattice.gram)
    except ZeroDivisionError:
        raise LatticeError("singular Gram matrix")
    return _ringmat.matrix_is_integral(inv)


def dual_contains(lattice: HermitianLattice, p: RationalPoint) -> bool:
    """Whether p pairs integrally with every lattice vector."""
    for i in range(lattice.rank):
        acc = RationalScalar.zero(lattice.ring)
        for j in range(lattice.rank):
            acc = acc + lattice.gram[i][j].to_scalar() * p.coords[j]
        if not acc.is_integral():
            return False
    return True


def is_even(lattice: HermitianLattice) -> bool:
    """Whether every vector norm is even (checked on residues mod 2)."""
    ring = lattice.ring
    two = RingElement.from_int(ring, 2)
    res = residues_mod(ring, two)
    n = lattice.rank
    for i in range(n):
        gii = lattice.gram[i][i].two_re() // 2
        if gii % 2:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            gij = lattice.gram[i][j]
            if gij.is_zero():
                continue
            for c in res:
                for d in res:
                    cross = (c.conj() * gij * d).two_re()
                    if cross % 2:
                        return False
    return True


def is_primitive(v: LatticeVector) -> bool:
    """Whether v = w * alpha forces alpha to be a unit."""
    if v.is_zero():
        return False
    g = gcd_right([c for c in v.coords if not c.is_zero()], v.lattice.ring)
    return g.is_unit()


def vector_content(v: LatticeVector) -> RingElement:
    """Greatest common right divisor of the coordinates."""
    return gcd_right([c for c in v.coords if not c.is_zero()], v.lattice.ring)


def primitive_part(v: LatticeVector) -> LatticeVector:
    g = vector_content(v)
    if g.is_unit():
        return v
    ginv = g.to_scalar().inv()
    return LatticeVector(
        v.lattice, tuple((c.to_scalar() * ginv).to_ring() for c in v.coords)
    )


# -- residue census --------------------------------------------------------------

def residue_census(lattice: HermitianLattice, m: RingElement, max_norm: int
                   ) -> dict[tuple[int, ...], tuple[Fraction, LatticeVector]]:
    """Map each class of L/Lm seen below max_norm to (min norm, representative).

    Classes are indexed by tuples of per-coordinate residue indices.  The
    census streams vectors in increasing norm, so the recorded representative
    has minimal norm within its class among vectors of norm <= max_norm.
    """
    ring = lattice.ring
    _, classify = residue_classifier(ring, m)

    def class_of(v: LatticeVector) -> tuple[int, ...]:
        return tuple(classify(c) for c in v.coords)

    out: dict[tuple[int, ...], tuple[Fraction, LatticeVector]] = {}
    sv = short_vectors(lattice, max_norm)
    for norm in sorted(sv):
        for v in sv[norm]:
            cls = class_of(v)
            if cls not in out:
                out[cls] = (norm, v)
    return out


def full_residue_class_count(lattice: HermitianLattice, m: RingElement) -> int:
    return residue_count(lattice.ring, m) ** lattice.rank


# -- fingerprints ----------------------------------------------------------------

FINGERPRINT_NORM = 4


def fingerprint(lattice: HermitianLattice):
    """Equality surrogate: exact invariants, not an isometry test.

    Definite lattices: (ring, rank, vector counts to norm 4, real determinant).
    Indefinite: (ring, rank, signature, evenness, real determinant).
    Collisions are possible in principle and must be reported by callers,
    never silently merged.
    """
    det = _intlinalg.det_fraction(lattice.real_form().gram)
    if lattice.is_definite():
        counts = tuple(theta_prefix(lattice, FINGERPRINT_NORM))
        return ("definite", lattice.ring.value, lattice.rank, counts, det)
    pos, neg = lattice.signature()
    return ("indefinite", lattice.ring.value, lattice.rank, (pos, neg), is_even(lattice), det)


# -- quaternionic Barnes-Wall deep holes -----------------------------------------

def deep_hole_predicate_BW(t: RationalPoint) -> bool:
    """Whether t = lambda * (1+i)^{-1} for a lattice vector of odd norm."""
    lat = t.lattice
    if lat.ring is not Ring.HURWITZ:
        raise LatticeError("expected a Hurwitz lattice point")
    one_plus_i = RingElement(Ring.HURWITZ, (2, 2, 0, 0)).to_scalar()
    coords = [c * one_plus_i for c in t.coords]
    if not all(c.is_integral() for c in coords):
        return False
    lam = LatticeVector(lat, tuple(c.to_ring() for c in coords))
    return lam.norm() % 2 == 1
