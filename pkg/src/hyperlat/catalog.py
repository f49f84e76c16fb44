"""The lattice catalog: named constructions and the shipped data file.

Congruence-defined lattices (E8 forms, D-families, the rank-6 Eisenstein
and rank-4 Hurwitz selfdual lattices) are built by a fixed procedure: the
defining congruences are solved as a Z-lattice, the solution basis is
column-reduced over the order into an explicit module basis, and the Gram
matrix is computed from the ambient form, rescaled when the definition
divides by theta or 1+i.  The shipped JSON file caches bases, Grams and
fingerprints; ``build_catalog_data`` regenerates it from scratch.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from importlib import resources

from . import _intlinalg, _ringmat
from .lattices import HermitianLattice, LatticeError, fingerprint, is_even, is_selfdual
from .rings import (
    Ring,
    RingElement,
    eisen,
    gauss,
    hurwitz,
    ring_from_vec,
    ring_vec,
    ring_z_basis,
    theta,
)

CATALOG_ENV = "HYPERLAT_CATALOG"

FAMILY_NAMES = (
    "Rn", "E8_G", "E8_H", "D2n_G", "D3theta", "K12_E", "BW4_H",
    "I_n_m", "II_1_1", "II_4m+n_n_G",
)


def congruence_sublattice(ring: Ring, nrank: int,
                          conditions: list[tuple[list[RingElement], RingElement]]
                          ) -> list[list[RingElement]]:
    """Module basis (columns) of {x in R^n : sum_i c_i x_i in m R, each condition}.

    Conditions must cut out full-rank sublattices (they always do for
    nonzero moduli).  The returned columns are echelon over the order.
    """
    d = ring.real_degree
    zb = ring_z_basis(ring)
    nvars = nrank * d
    nslack = len(conditions) * d
    rows = [[0] * (nvars + nslack) for _ in range(len(conditions) * d)]
    for r, (coeffs, modulus) in enumerate(conditions):
        if len(coeffs) != nrank:
            raise LatticeError("condition width != rank")
        for a in range(nrank):
            for u in range(d):
                img = ring_vec(coeffs[a] * zb[u])
                for t in range(d):
                    rows[r * d + t][a * d + u] = img[t]
        for v in range(d):
            img = ring_vec(modulus * zb[v])
            for t in range(d):
                rows[r * d + t][nvars + r * d + v] = -img[t]
    kern = _intlinalg.kernel_basis(rows)
    sol_rows = _intlinalg.hnf_rows([k[:nvars] for k in kern])
    cols = []
    for row in sol_rows:
        if all(x == 0 for x in row):
            continue
        col = []
        for a in range(nrank):
            col.append(ring_from_vec(ring, row[a * d:(a + 1) * d]))
        cols.append(col)
    basis = _ringmat.column_reduce(ring, cols)
    if len(basis) != nrank:
        raise LatticeError("congruence conditions did not preserve rank")
    return basis


def _lattice_from_congruence(ring: Ring, nrank: int, conditions,
                             divisor: RingElement | None, name: str
                             ) -> tuple[HermitianLattice, list[list[RingElement]]]:
    basis = congruence_sublattice(ring, nrank, conditions)
    ident = _ringmat.ring_identity(ring, nrank)
    scale = Fraction(1)
    if divisor is not None:
        scale = Fraction(1, divisor.norm())
    gram_scal = _ringmat.gram_of_columns(ident, basis, scale)
    if not _ringmat.matrix_is_integral(gram_scal):
        raise LatticeError(f"{name}: non-integral Gram")
    gram = _ringmat.to_ring_matrix(gram_scal)
    return HermitianLattice(ring, gram, name=name), basis


def _diag_lattice(ring: Ring, diag: list[int], name: str) -> HermitianLattice:
    n = len(diag)
    zero = RingElement.zero(ring)
    gram = [[RingElement.from_int(ring, diag[i]) if i == j else zero for j in range(n)]
            for i in range(n)]
    return HermitianLattice(ring, gram, name=name)


def _hyperbolic_plane(ring: Ring, name: str) -> HermitianLattice:
    zero = RingElement.zero(ring)
    one = RingElement.one(ring)
    return HermitianLattice(ring, [[zero, one], [one, zero]], name=name)


def _direct_sum(ring: Ring, parts: list[HermitianLattice], name: str) -> HermitianLattice:
    n = sum(p.rank for p in parts)
    zero = RingElement.zero(ring)
    gram = [[zero] * n for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                gram[off + i][off + j] = p.gram[i][j]
        off += p.rank
    return HermitianLattice(ring, gram, name=name)


def catalog(name: str, *, ring: Ring | None = None, n: int | None = None,
            m: int | None = None) -> HermitianLattice:
    """Construct a catalog lattice by family name and parameters."""
    if name == "Rn":
        if ring is None or n is None:
            raise LatticeError("Rn needs ring and n")
        return _diag_lattice(ring, [1] * n, f"R{n}_{ring.value}")
    if name == "E8_G":
        one = gauss(1)
        conds = [
            ([one, -one, gauss(0), gauss(0)], gauss(1, 1)),
            ([gauss(0), one, -one, gauss(0)], gauss(1, 1)),
            ([gauss(0), gauss(0), one, -one], gauss(1, 1)),
            ([one, one, one, one], gauss(2)),
        ]
        lat, _ = _lattice_from_congruence(Ring.GAUSS, 4, conds, gauss(1, 1), "E8_G")
        return lat
    if name == "E8_H":
        one = hurwitz(1)
        conds = [([one, one], hurwitz(1, 1))]
        lat, _ = _lattice_from_congruence(Ring.HURWITZ, 2, conds, None, "E8_H")
        return lat
    if name == "D2n_G":
        if n is None:
            raise LatticeError("D2n_G needs n (rank over the ring)")
        conds = [([gauss(1)] * n, gauss(1, 1))]
        lat, _ = _lattice_from_congruence(Ring.GAUSS, n, conds, None, f"D{2 * n}_G")
        return lat
    if name == "D3theta":
        conds = [([eisen(1)] * 3, theta())]
        lat, _ = _lattice_from_congruence(Ring.EISENSTEIN, 3, conds, None, "D3theta")
        return lat
    if name == "K12_E":
        one = eisen(1)
        zero = eisen(0)
        conds = []
        for i in range(5):
            row = [zero] * 6
            row[i], row[i + 1] = one, -one
            conds.append((row, theta()))
        conds.append(([one] * 6, eisen(3)))
        lat, _ = _lattice_from_congruence(Ring.EISENSTEIN, 6, conds, theta(), "K12_E")
        return lat
    if name == "BW4_H":
        one = hurwitz(1)
        zero = hurwitz(0)
        conds = []
        for i in range(3):
            row = [zero] * 4
            row[i], row[i + 1] = one, -one
            conds.append((row, hurwitz(1, 1)))
        conds.append(([one] * 4, hurwitz(2)))
        lat, _ = _lattice_from_congruence(Ring.HURWITZ, 4, conds, hurwitz(1, 1), "BW4_H")
        return lat
    if name == "I_n_m":
        if ring is None or n is None or m is None:
            raise LatticeError("I_n_m needs ring, n and m")
        return _diag_lattice(ring, [1] * n + [-1] * m, f"I_{n}_{m}_{ring.value}")
    if name == "II_1_1":
        if ring is None:
            raise LatticeError("II_1_1 needs ring")
        return _hyperbolic_plane(ring, f"II_1_1_{ring.value}")
    if name == "II_4m+n_n_G":
        if n is None or m is None:
            raise LatticeError("II_4m+n_n_G needs m and n")
        parts = [catalog("E8_G") for _ in range(m)]
        parts += [_hyperbolic_plane(Ring.GAUSS, "II_1_1_G") for _ in range(n)]
        return _direct_sum(Ring.GAUSS, parts, f"II_{4 * m + n}_{n}_G")
    raise LatticeError(f"unknown catalog family {name!r}")


def lorentz_lattice(base: HermitianLattice, name: str | None = None) -> HermitianLattice:
    """base + hyperbolic plane, coordinates (lambda_1..lambda_n, mu, nu)."""
    hp = _hyperbolic_plane(base.ring, "II_1_1")
    label = name or f"{base.name or 'L'}+II_1_1"
    return _direct_sum(base.ring, [base, hp], label)


# -- concrete catalog entries and the data file --------------------------------

def standard_entries() -> list[tuple[str, dict]]:
    """(instance name, constructor kwargs) for the shipped catalog."""
    out = []
    for ring in (Ring.GAUSS, Ring.EISENSTEIN, Ring.HURWITZ):
        top = {"G": 3, "E": 3, "H": 2}[ring.value]
        for k in range(1, top + 1):
            out.append((f"R{k}_{ring.value}", dict(name="Rn", ring=ring, n=k)))
    out.append(("E8_G", dict(name="E8_G")))
    out.append(("E8_H", dict(name="E8_H")))
    out.append(("D4_G", dict(name="D2n_G", n=2)))
    out.append(("D6_G", dict(name="D2n_G", n=3)))
    out.append(("D3theta", dict(name="D3theta")))
    out.append(("K12_E", dict(name="K12_E")))
    out.append(("BW4_H", dict(name="BW4_H")))
    for ring in (Ring.GAUSS, Ring.EISENSTEIN, Ring.HURWITZ):
        out.append((f"I_1_1_{ring.value}", dict(name="I_n_m", ring=ring, n=1, m=1)))
        out.append((f"II_1_1_{ring.value}", dict(name="II_1_1", ring=ring)))
    out.append(("II_5_1_G", dict(name="II_4m+n_n_G", m=1, n=1)))
    return out


def instance(label: str) -> HermitianLattice:
    """Build a concrete catalog entry by its instance name."""
    for name, kwargs in standard_entries():
        if name == label:
            kw = dict(kwargs)
            fam = kw.pop("name")
            lat = catalog(fam, **kw)
            lat.name = label
            return lat
    raise LatticeError(f"unknown catalog entry {label!r}")


def _fingerprint_json(fp) -> dict:
    if fp[0] == "definite":
        return {"kind": "definite", "ring": fp[1], "rank": fp[2],
                "counts": list(fp[3]), "det": str(fp[4])}
    return {"kind": "indefinite", "ring": fp[1], "rank": fp[2],
            "signature": list(fp[3]), "even": fp[4], "det": str(fp[5])}


def _fingerprint_from_json(d: dict):
    det = Fraction(d["det"])
    if d["kind"] == "definite":
        return ("definite", d["ring"], d["rank"], tuple(d["counts"]), det)
    return ("indefinite", d["ring"], d["rank"], tuple(d["signature"]), d["even"], det)


def build_catalog_data(fingerprints: bool = True) -> dict:
    """Regenerate the catalog data structure (slow: enumerates theta prefixes)."""
    entries = []
    for label, kwargs in standard_entries():
        kw = dict(kwargs)
        fam = kw.pop("name")
        lat = catalog(fam, **kw)
        lat.name = label
        entry = {
            "name": label,
            "family": fam,
            "ring": lat.ring.value,
            "rank": lat.rank,
            "gram": [[list(x.coords) for x in row] for row in lat.gram],
            "selfdual": is_selfdual(lat),
            "even": is_even(lat),
        }
        if fingerprints:
            entry["fingerprint"] = _fingerprint_json(fingerprint(lat))
        entries.append(entry)
    return {"format": 1, "entries": entries}


def catalog_data_path() -> str:
    override = os.environ.get(CATALOG_ENV)
    if override:
        return override
    return str(resources.files("hyperlat").joinpath("data/catalog.json"))


def load_catalog_data() -> dict:
    with open(catalog_data_path(), "r", encoding="utf-8") as fh:
        return json.load(fh)


def lattice_from_entry(entry: dict) -> HermitianLattice:
    ring = Ring(entry["ring"])
    gram = [[RingElement(ring, tuple(c)) for c in row] for row in entry["gram"]]
    return HermitianLattice(ring, gram, name=entry["name"])
