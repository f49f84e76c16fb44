"""The Lorentzian model: base lattice plus a hyperbolic plane.

Vectors are written (lambda; mu, nu) with lambda in the base lattice and
mu, nu scalars; the pairing is

    <(l1;m1,n1)|(l2;m2,n2)> = <l1|l2> + conj(m1) n2 + conj(n1) m2.

The distinguished null vector rho = (0;0,1) defines heights (ht v = mu) and
the fibration of nonzero-height vectors over points lambda mu^{-1} of the
base.  Isometries are (n+2)x(n+2) matrices acting on the left of column
vectors and carry provenance words so that reduction runs can emit
replayable certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import _intlinalg, _ringmat
from .catalog import lorentz_lattice
from .lattices import (
    HermitianLattice,
    LatticeError,
    LatticeVector,
    RationalPoint,
    inner_product,
)
from .rings import (
    RationalScalar,
    Ring,
    RingElement,
    gcd_right,
    ring_from_vec,
    ring_vec,
    ring_z_basis,
    units,
)


class LorentzError(ValueError):
    pass


class LorentzModel:
    """Coordinates and constructors for base + hyperbolic plane."""

    def __init__(self, base: HermitianLattice):
        self.base = base
        self.ring = base.ring
        self.n = base.rank
        self.lattice = lorentz_lattice(base)
        self.dim = base.rank + 2

    def __repr__(self):
        return f"LorentzModel({self.base!r})"

    def vector(self, lam: Sequence, mu, nu) -> "LorentzVector":
        coords = list(lam) + [mu, nu]
        return LorentzVector(self, tuple(_scalarize(self.ring, c) for c in coords))

    def rho(self) -> "LorentzVector":
        return self.vector([0] * self.n, 0, 1)

    def sigma(self) -> "LorentzVector":
        return self.vector([0] * self.n, 1, 0)

    def base_vector(self, v: "LorentzVector") -> LatticeVector:
        return self.base.vector(list(v.lam))

    def base_point(self, v: "LorentzVector") -> RationalPoint:
        return self.base.point(list(v.lam))

    def identity(self) -> "Isometry":
        return Isometry(self, _ringmat.scalar_identity(self.ring, self.dim), ())


def _scalarize(ring: Ring, c) -> RationalScalar:
    if isinstance(c, RationalScalar):
        return c
    if isinstance(c, RingElement):
        return c.to_scalar()
    if isinstance(c, (int, Fraction)):
        return RationalScalar.from_fraction(ring, Fraction(c))
    raise TypeError(f"bad coordinate {c!r}")


class LorentzVector:
    """Element of (base + II) tensor Q in split coordinates."""

    __slots__ = ("model", "coords")

    def __init__(self, model: LorentzModel, coords: tuple[RationalScalar, ...]):
        if len(coords) != model.dim:
            raise LorentzError("coordinate count mismatch")
        self.model = model
        self.coords = coords

    @property
    def lam(self) -> tuple[RationalScalar, ...]:
        return self.coords[:self.model.n]

    @property
    def mu(self) -> RationalScalar:
        return self.coords[self.model.n]

    @property
    def nu(self) -> RationalScalar:
        return self.coords[self.model.n + 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LorentzVector)
            and self.model is other.model
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash(tuple(c.coords for c in self.coords))

    def __add__(self, other: "LorentzVector") -> "LorentzVector":
        return LorentzVector(self.model, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LorentzVector") -> "LorentzVector":
        return LorentzVector(self.model, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LorentzVector":
        return LorentzVector(self.model, tuple(-a for a in self.coords))

    def times(self, alpha) -> "LorentzVector":
        s = _scalarize(self.model.ring, alpha)
        return LorentzVector(self.model, tuple(c * s for c in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coords)

    def to_lattice_vector(self) -> LatticeVector:
        return self.model.lattice.vector([c.to_ring() for c in self.coords])

    def to_point(self) -> RationalPoint:
        return self.model.lattice.point(list(self.coords))

    def norm(self):
        return lorentz_ip(self, self).re()

    def is_null(self) -> bool:
        return lorentz_ip(self, self).is_zero()

    def content(self) -> RingElement:
        if not self.is_integral():
            raise LorentzError("content of a non-integral vector")
        elems = [c.to_ring() for c in self.coords if not c.is_zero()]
        return gcd_right(elems, self.model.ring)

    def is_primitive(self) -> bool:
        return self.is_integral() and not self.is_zero() and self.content().is_unit()

    def primitive_part(self) -> "LorentzVector":
        g = self.content()
        if g.is_unit():
            return self
        ginv = g.to_scalar().inv()
        return LorentzVector(self.model, tuple(c * ginv for c in self.coords))

    def key(self) -> tuple:
        return tuple(c.coords for c in self.coords)

    def __repr__(self) -> str:
        lam = [str(c) for c in self.lam]
        return f"({lam}; {self.mu}, {self.nu})"


def lorentz_ip(u: LorentzVector, v: LorentzVector) -> RationalScalar:
    """<u|v> in the Lorentzian form."""
    if u.model is not v.model:
        raise LorentzError("vectors from different models")
    model = u.model
    n = model.n
    acc = RationalScalar.zero(model.ring)
    for i in range(n):
        ci = u.coords[i].conj()
        if ci.is_zero():
            continue
        for j in range(n):
            g = model.base.gram[i][j]
            if g.is_zero() or v.coords[j].is_zero():
                continue
            acc = acc + ci * g.to_scalar() * v.coords[j]
    acc = acc + u.mu.conj() * v.nu + u.nu.conj() * v.mu
    return acc


def height(v: LorentzVector) -> RationalScalar:
    """<rho|v>, which is the mu component."""
    return v.mu


def lies_over(v: LorentzVector) -> RationalPoint:
    """The point lambda * mu^{-1} of the base under a nonzero-height vector."""
    if v.mu.is_zero():
        raise LorentzError("zero-height vector lies over nothing")
    mu_inv = v.mu.inv()
    return v.model.base.point([c * mu_inv for c in v.lam])


# -- isometries -----------------------------------------------------------------


class ReflectionSpec:
    """xi-reflection in a root: x |-> x - r (1-xi) <r|x> / r^2."""

    __slots__ = ("root", "xi")

    def __init__(self, root: LorentzVector, xi: RingElement):
        if not xi.is_unit():
            raise LorentzError("reflection scalar must be a unit")
        if xi == RingElement.one(xi.ring):
            raise LorentzError("xi = 1 is not a reflection")
        if lorentz_ip(root, root).is_zero():
            raise LorentzError("zero-norm root")
        self.root = root
        self.xi = xi

    def inverse(self) -> "ReflectionSpec":
        return ReflectionSpec(self.root, self.xi.conj())

    def to_json(self) -> dict:
        return {
            "type": "reflection",
            "root": [list(c.to_ring().coords) for c in self.root.coords],
            "xi": list(self.xi.coords),
        }


class TranslationSpec:
    """T_{x,z}: fixes rho, shifts the base by x, twists by imaginary z."""

    __slots__ = ("x", "z")

    def __init__(self, x: RationalPoint, z: RationalScalar):
        if not z.is_imaginary():
            raise LorentzError("translation parameter z must be imaginary")
        self.x = x
        self.z = z

    def inverse(self) -> "TranslationSpec":
        return TranslationSpec(-self.x, -self.z)

    def to_json(self) -> dict:
        return {
            "type": "translation",
            "x": [list(c.to_ring().coords) for c in self.x.coords],
            "z": [str(c) for c in self.z.coords],
        }


GenSpec = ReflectionSpec | TranslationSpec


class Isometry:
    """Matrix acting on the left of column vectors, with provenance word."""

    __slots__ = ("model", "matrix", "word")

    def __init__(self, model: LorentzModel, matrix, word: tuple = ()):
        self.model = model
        self.matrix = _ringmat.to_scalar_matrix(matrix)
        self.word = word

    def apply(self, v: LorentzVector) -> LorentzVector:
        return LorentzVector(self.model, tuple(_ringmat.mat_vec(self.matrix, list(v.coords))))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        """self o other (apply other first)."""
        return Isometry(self.model, _ringmat.mat_mul(self.matrix, other.matrix),
                        self.word + other.word)

    def inverse(self) -> "Isometry":
        inv = _ringmat.mat_inverse(self.matrix)
        word = tuple(spec.inverse() for spec in reversed(self.word))
        return Isometry(self.model, inv, word)

    def is_integral(self) -> bool:
        return _ringmat.matrix_is_integral(self.matrix)

    def preserves_lattice(self) -> bool:
        if not self.is_integral():
            return False
        return _ringmat.matrix_is_integral(_ringmat.mat_inverse(self.matrix))

    def preserves_form(self) -> bool:
        g = _gram_matrix(self.model)
        left = _ringmat.mat_mul(_ringmat.mat_mul(_ringmat.hermitian_transpose(self.matrix), g),
                                self.matrix)
        return _ringmat.mat_eq(left, g)

    def __eq__(self, other) -> bool:
        return isinstance(other, Isometry) and _ringmat.mat_eq(self.matrix, other.matrix)

    def __repr__(self) -> str:
        return f"Isometry(dim={self.model.dim}, word_len={len(self.word)})"


def _gram_matrix(model: LorentzModel):
    return _ringmat.to_scalar_matrix(model.lattice.gram)


def reflection(model: LorentzModel, spec: ReflectionSpec) -> Isometry:
    """The xi-reflection as a matrix isometry."""
    r = spec.root
    rnorm = lorentz_ip(r, r)
    scale = rnorm.inv()
    one = RationalScalar.one(model.ring)
    ximinus = one - spec.xi.to_scalar()
    cols = []
    for j in range(model.dim):
        basis = [RationalScalar.zero(model.ring)] * model.dim
        basis[j] = one
        e = LorentzVector(model, tuple(basis))
        coeff = ximinus * lorentz_ip(r, e) * scale
        col = [e.coords[i] - r.coords[i] * coeff for i in range(model.dim)]
        cols.append(col)
    matrix = [[cols[j][i] for j in range(model.dim)] for i in range(model.dim)]
    return Isometry(model, matrix, (spec,))


def translation(model: LorentzModel, spec: TranslationSpec) -> Isometry:
    """T_{x,z} as a matrix: [[I, x, 0], [0, 1, 0], [-x*, z - x^2/2, 1]]."""
    n = model.n
    x, z = spec.x, spec.z
    zero = RationalScalar.zero(model.ring)
    one = RationalScalar.one(model.ring)
    m = [[zero] * model.dim for _ in range(model.dim)]
    for i in range(n):
        m[i][i] = one
        m[i][n] = x.coords[i]
    m[n][n] = one
    m[n + 1][n + 1] = one
    for j in range(n):
        acc = zero
        for i in range(n):
            acc = acc + x.coords[i].conj() * model.base.gram[i][j].to_scalar()
        m[n + 1][j] = -acc
    xnorm = inner_product(x, x)
    m[n + 1][n] = z - xnorm.scale(Fraction(1, 2))
    return Isometry(model, m, (spec,))


def make_translation(model: LorentzModel, x, z) -> Isometry:
    """Convenience wrapper accepting base vectors/points and scalar z."""
    if isinstance(x, LatticeVector):
        x = x.to_point()
    if isinstance(z, RingElement):
        z = z.to_scalar()
    return translation(model, TranslationSpec(x, z))


def make_reflection(model: LorentzModel, root: LorentzVector, xi: RingElement) -> Isometry:
    return reflection(model, ReflectionSpec(root, xi))


def isometry_from_word(model: LorentzModel, word: Iterable[GenSpec]) -> Isometry:
    out = model.identity()
    for spec in word:
        if isinstance(spec, ReflectionSpec):
            gen = reflection(model, spec)
        else:
            gen = translation(model, spec)
        out = out @ gen
    return out


def embed_base_isometry(model: LorentzModel, s) -> Isometry:
    """Extend an isometry of the base (matrix over the ring) by I on the plane."""
    n = model.n
    zero = RationalScalar.zero(model.ring)
    one = RationalScalar.one(model.ring)
    s = _ringmat.to_scalar_matrix(s)
    m = [[zero] * model.dim for _ in range(model.dim)]
    for i in range(n):
        for j in range(n):
            m[i][j] = s[i][j]
    m[n][n] = one
    m[n + 1][n + 1] = one
    return Isometry(model, m, ())


def left_unit_scalar(model: LorentzModel, u: RingElement) -> Isometry:
    """(lambda; mu, nu) |-> (lambda; u mu, u nu); an isometry for any unit."""
    if not u.is_unit():
        raise LorentzError("left scalar must be a unit")
    n = model.n
    zero = RationalScalar.zero(model.ring)
    one = RationalScalar.one(model.ring)
    m = [[zero] * model.dim for _ in range(model.dim)]
    for i in range(n):
        m[i][i] = one
    m[n][n] = u.to_scalar()
    m[n + 1][n + 1] = u.to_scalar()
    return Isometry(model, m, ())


# -- Heisenberg relation checks ---------------------------------------------------


class HeisenbergReport:
    def __init__(self, product_ok, inverse_ok, commutator_ok, conjugation_ok):
        self.product_ok = product_ok
        self.inverse_ok = inverse_ok
        self.commutator_ok = commutator_ok
        self.conjugation_ok = conjugation_ok

    @property
    def all_ok(self) -> bool:
        checks = [self.product_ok, self.inverse_ok, self.commutator_ok]
        if self.conjugation_ok is not None:
            checks.append(self.conjugation_ok)
        return all(checks)

    def to_json(self) -> dict:
        return {
            "product": self.product_ok,
            "inverse": self.inverse_ok,
            "commutator": self.commutator_ok,
            "conjugation": self.conjugation_ok,
        }


def _im_ip(x: RationalPoint, y: RationalPoint) -> RationalScalar:
    return inner_product(x, y).im_scalar()


def verify_heisenberg(model: LorentzModel, x: RationalPoint, z: RationalScalar,
                      x2: RationalPoint, z2: RationalScalar, s=None) -> HeisenbergReport:
    """Exact checks of the translation composition, inverse, commutator and
    unitary-conjugation laws."""
    t1 = make_translation(model, x, z)
    t2 = make_translation(model, x2, z2)
    prod = t1 @ t2
    expect = make_translation(model, x + x2, z + z2 + _im_ip(x2, x))
    product_ok = prod == expect

    inverse_ok = t1.inverse() == make_translation(model, -x, -z)

    comm = t1.inverse() @ t2.inverse() @ t1 @ t2
    zero_pt = model.base.point([0] * model.n)
    expect_comm = make_translation(model, zero_pt, _im_ip(x2, x).scale(Fraction(2)))
    commutator_ok = comm == expect_comm

    conjugation_ok = None
    if s is not None:
        semb = embed_base_isometry(model, s)
        sx = model.base.point(_ringmat.mat_vec(s, list(x.coords)))
        conjugation_ok = (semb @ t1 @ semb.inverse()) == make_translation(model, sx, z)
    return HeisenbergReport(product_ok, inverse_ok, commutator_ok, conjugation_ok)


# -- root families -----------------------------------------------------------------

ROOT_NORMS = {"short": 1, "long": 2}


def imaginary_kernel_basis(ring: Ring, h: RingElement) -> list[RingElement]:
    """Z-basis of {z in R : Re(conj(h) z) = 0}, the allowed root offsets."""
    zb = ring_z_basis(ring)
    coeffs = [(h.conj() * b).two_re() for b in zb]
    kern = _intlinalg.kernel_basis([coeffs])
    out = []
    for comb in _intlinalg.hnf_rows(kern):
        if all(c == 0 for c in comb):
            continue
        acc = RingElement.zero(ring)
        for c, b in zip(comb, zb):
            acc = acc + b.scalar_mul(c)
        out.append(acc)
    return out


def root_nu_solution(ring: Ring, h: RingElement, target: int) -> RingElement | None:
    """Some nu in R with 2 Re(conj(h) nu) = target, or None."""
    zb = ring_z_basis(ring)
    coeffs = [(h.conj() * b).two_re() for b in zb]
    sol = _intlinalg.solve_int_linear(coeffs, target)
    if sol is None:
        return None
    acc = RingElement.zero(ring)
    for c, b in zip(sol, zb):
        acc = acc + b.scalar_mul(c)
    return acc


def roots_of_height(model: LorentzModel, h: RingElement, lam: LatticeVector,
                    length: str, window: int = 1) -> list[LorentzVector]:
    """Integral roots (lam; h, nu) of the requested length lying over lam h^{-1}.

    nu ranges over a finite window of offsets from one particular solution:
    all integer combinations of the imaginary-kernel basis with coefficients
    bounded by ``window``.  Returns [] when no root exists over lam.
    """
    if length not in ROOT_NORMS:
        raise LorentzError(f"unknown root length {length!r}")
    s = ROOT_NORMS[length]
    lam_norm = lam.norm()
    nu0 = root_nu_solution(model.ring, h, s - lam_norm)
    if nu0 is None:
        return []
    kern = imaginary_kernel_basis(model.ring, h)
    out = []
    offsets = _integer_box(len(kern), window)
    for t in offsets:
        nu = nu0
        for c, b in zip(t, kern):
            nu = nu + b.scalar_mul(c)
        out.append(model.vector(list(lam.coords), h, nu))
    for r in out:
        val = lorentz_ip(r, r)
        assert val.is_real() and val.re() == s
    out.sort(key=lambda r: r.key())
    return out


def _integer_box(dim: int, radius: int):
    if dim == 0:
        return [()]
    smaller = _integer_box(dim - 1, radius)
    return [t + (c,) for t in smaller for c in range(-radius, radius + 1)]
