"""Matrices and module bases over the three orders and their skew fields.

Conventions used throughout the package:

* lattice elements are column vectors; isometries multiply on the left;
* scalars multiply vectors on the right, so module column operations are
  ``col_k <- col_k + col_l * alpha``;
* everything noncommutative is handled by keeping the multiplication side
  explicit; nothing here assumes commutativity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rings import (
    RationalScalar,
    Ring,
    RingElement,
    divmod_left,
    divmod_right,
    units,
)

ScalarMatrix = list[list[RationalScalar]]
RingMatrix = list[list[RingElement]]


# -- conversions ---------------------------------------------------------------

def to_scalar_matrix(m: Sequence[Sequence]) -> ScalarMatrix:
    out = []
    for row in m:
        out.append([x.to_scalar() if isinstance(x, RingElement) else x for x in row])
    return out


def matrix_is_integral(m: Sequence[Sequence[RationalScalar]]) -> bool:
    return all(x.is_integral() for row in m for x in row)


def to_ring_matrix(m: Sequence[Sequence[RationalScalar]]) -> RingMatrix:
    return [[x.to_ring() for x in row] for row in m]


def scalar_identity(ring: Ring, n: int) -> ScalarMatrix:
    one = RationalScalar.one(ring)
    zero = RationalScalar.zero(ring)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def ring_identity(ring: Ring, n: int) -> RingMatrix:
    one = RingElement.one(ring)
    zero = RingElement.zero(ring)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


# -- arithmetic ----------------------------------------------------------------

def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]):
    """Matrix product; operands may mix RingElement and RationalScalar."""
    a = to_scalar_matrix(a)
    b = to_scalar_matrix(b)
    rows, inner, cols = len(a), len(b), len(b[0])
    ring = a[0][0].ring
    zero = RationalScalar.zero(ring)
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence):
    """Apply matrix to a column vector."""
    a = to_scalar_matrix(a)
    vs = [x.to_scalar() if isinstance(x, RingElement) else x for x in v]
    ring = vs[0].ring
    zero = RationalScalar.zero(ring)
    out = []
    for i in range(len(a)):
        acc = zero
        for k in range(len(vs)):
            acc = acc + a[i][k] * vs[k]
        out.append(acc)
    return out


def mat_eq(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    a = to_scalar_matrix(a)
    b = to_scalar_matrix(b)
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def hermitian_transpose(m: Sequence[Sequence]) -> ScalarMatrix:
    m = to_scalar_matrix(m)
    return [[m[j][i].conj() for j in range(len(m))] for i in range(len(m[0]))]


def mat_inverse(m: Sequence[Sequence]) -> ScalarMatrix:
    """Inverse over the skew field by Gauss-Jordan with left row operations."""
    a = to_scalar_matrix(m)
    n = len(a)
    ring = a[0][0].ring
    aug = [list(a[i]) + list(scalar_identity(ring, n)[i]) for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not aug[i][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix over the ring")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [inv * x for x in aug[col]]
        for i in range(n):
            if i != col and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def solve_columns(basis_cols: Sequence[Sequence], v: Sequence) -> list[RationalScalar]:
    """Coefficients x with sum basis_cols[k] * x_k = v (right combination)."""
    mat = [[basis_cols[k][i] for k in range(len(basis_cols))] for i in range(len(v))]
    sq = to_scalar_matrix(mat)
    if len(sq) != len(basis_cols):
        raise ValueError("solve_columns needs a square system")
    inv = mat_inverse(sq)
    return mat_vec(inv, v)


# -- module bases over the orders ----------------------------------------------

def column_reduce(ring: Ring, columns: Sequence[Sequence[RingElement]]) -> list[list[RingElement]]:
    """Basis (echelon columns) of the right module generated by the columns.

    Uses one-sided Euclidean reduction: columns combine as
    ``col_l <- col_l - col_k * q`` where ``a_l = a_k * q + r``, which is
    valid over all three orders.  Zero columns are dropped; the result is
    deterministic and its nonzero pivots sit at strictly increasing rows.
    """
    cols = [list(c) for c in columns]
    if not cols:
        return []
    nrows = len(cols[0])
    pivot = 0
    for row in range(nrows):
        if pivot >= len(cols):
            break
        while True:
            nz = [k for k in range(pivot, len(cols)) if not cols[k][row].is_zero()]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda k: (cols[k][row].norm(), cols[k][row].key()))
            base = nz[0]
            progressed = False
            for k in nz[1:]:
                q, _ = divmod_right(cols[k][row], cols[base][row])
                if not q.is_zero():
                    cols[k] = [x - y * q for x, y in zip(cols[k], cols[base])]
                    progressed = True
            if not progressed:
                # impossible for norm-Euclidean orders: the nearest quotient of
                # an entry by a minimal-norm entry is nonzero
                raise RuntimeError("column reduction stalled")
        nz = [k for k in range(pivot, len(cols)) if not cols[k][row].is_zero()]
        if not nz:
            continue
        best = min(nz, key=lambda k: (cols[k][row].norm(), cols[k][row].key()))
        cols[pivot], cols[best] = cols[best], cols[pivot]
        # canonical associate of the pivot entry via a right unit
        piv_entry = cols[pivot][row]
        best_u = min(units(ring), key=lambda u: (piv_entry * u).key())
        if best_u != RingElement.one(ring):
            cols[pivot] = [x * best_u for x in cols[pivot]]
        pivot += 1
    out = [c for c in cols[:pivot] if any(not x.is_zero() for x in c)]
    return out


def column_span_contains(ring: Ring, basis_cols: Sequence[Sequence[RingElement]],
                         v: Sequence[RingElement]) -> bool:
    """Whether v lies in the right module spanned by echelon basis columns."""
    rem = list(v)
    for col in basis_cols:
        row = next((i for i, x in enumerate(col) if not x.is_zero()), None)
        if row is None:
            continue
        if rem[row].is_zero():
            continue
        q, r = divmod_right(rem[row], col[row])
        if not r.is_zero():
            return False
        rem = [x - y * q for x, y in zip(rem, col)]
    return all(x.is_zero() for x in rem)


def extend_to_basis(ring: Ring, col: Sequence[RingElement]) -> RingMatrix:
    """A unimodular matrix over the order whose first column is ``col``.

    Requires the column to be primitive (entries with unit gcrd).  Works by
    reducing the column to e_1 * unit with elementary left operations, then
    inverting the transform.
    """
    n = len(col)
    c = list(col)
    ops: list[tuple] = []  # (i, j, alpha): row_i += alpha * row_j
    while True:
        nz = [i for i in range(n) if not c[i].is_zero()]
        if len(nz) == 1:
            break
        nz.sort(key=lambda i: (c[i].norm(), c[i].key()))
        base = nz[0]
        progressed = False
        for i in nz[1:]:
            q, r = divmod_left(c[i], c[base])
            if not q.is_zero():
                c[i] = r
                ops.append((i, base, -q))
                progressed = True
        if not progressed:
            break
    nz = [i for i in range(n) if not c[i].is_zero()]
    if len(nz) != 1 or not c[nz[0]].is_unit():
        raise ValueError("column is not primitive")
    idx = nz[0]
    unit = c[idx]
    # Build E as a ring matrix from the recorded ops, then first swap rows.
    e = ring_identity(ring, n)

    def apply_op(m, i, j, alpha):
        m[i] = [m[i][k] + alpha * m[j][k] for k in range(n)]

    for (i, j, alpha) in ops:
        apply_op(e, i, j, alpha)
    if idx != 0:
        e[0], e[idx] = e[idx], e[0]
    # E * col = e_1 * unit; we want U with U * e_1 = col * unit^{-1} ... rather
    # U = E^{-1} has first column col * unit^{-1}; fix the unit by scaling.
    einv = mat_inverse(e)
    u = to_ring_matrix(einv)
    for i in range(n):
        u[i][0] = u[i][0] * unit
    return u


def gram_of_columns(ambient_gram: Sequence[Sequence], cols: Sequence[Sequence],
                    scale: Fraction = Fraction(1)) -> ScalarMatrix:
    """Gram matrix <c_i | c_j> of columns under an ambient Hermitian form."""
    g = to_scalar_matrix(ambient_gram)
    cs = [[x.to_scalar() if isinstance(x, RingElement) else x for x in c] for c in cols]
    n = len(cs)
    ring = g[0][0].ring
    zero = RationalScalar.zero(ring)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for a in range(len(g)):
                ca = cs[i][a].conj()
                if ca.is_zero():
                    continue
                for b in range(len(g)):
                    if g[a][b].is_zero() or cs[j][b].is_zero():
                        continue
                    acc = acc + ca * g[a][b] * cs[j][b]
            row.append(acc.scale(scale))
        out.append(row)
    return out
