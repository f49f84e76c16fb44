"""Exact integer and rational linear algebra used across the package.

Everything here is over Z or Q (plain ints and Fractions).  Matrices are
lists of row lists.  The quadratic-form routines (LLL, Fincke-Pohst) work
on Gram matrices only, tracking unimodular row transforms, so callers never
hand us basis vectors.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence


# -- generic helpers ----------------------------------------------------------

def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        ai = a[i]
        row = []
        for j in range(cols):
            row.append(sum(ai[k] * b[k][j] for k in range(inner)))
        out.append(row)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


# -- Hermite normal form ------------------------------------------------------

def hnf_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF basis of the row span (zero rows dropped).

    Pivots are positive, entries above each pivot reduced to [0, pivot).
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        # Euclid on entries of this column at rows >= pivot_row.
        while True:
            nz = [i for i in range(pivot_row, len(m)) if m[i][col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(m[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = m[i][col] // m[base][col]
                m[i] = [x - q * y for x, y in zip(m[i], m[base])]
        nz = [i for i in range(pivot_row, len(m)) if m[i][col] != 0]
        if not nz:
            continue
        i = nz[0]
        m[pivot_row], m[i] = m[i], m[pivot_row]
        if m[pivot_row][col] < 0:
            m[pivot_row] = [-x for x in m[pivot_row]]
        p = m[pivot_row][col]
        for i in range(pivot_row):
            q = m[i][col] // p
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[pivot_row])]
        pivot_row += 1
    return [r for r in m[:pivot_row]]


def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """(H, U) with U unimodular, U * rows = H padded with zero rows."""
    m = [list(r) for r in rows]
    n = len(m)
    u = identity(n)
    if not m:
        return [], u
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(pivot_row, n) if m[i][col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(m[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = m[i][col] // m[base][col]
                m[i] = [x - q * y for x, y in zip(m[i], m[base])]
                u[i] = [x - q * y for x, y in zip(u[i], u[base])]
        nz = [i for i in range(pivot_row, n) if m[i][col] != 0]
        if not nz:
            continue
        i = nz[0]
        m[pivot_row], m[i] = m[i], m[pivot_row]
        u[pivot_row], u[i] = u[i], u[pivot_row]
        if m[pivot_row][col] < 0:
            m[pivot_row] = [-x for x in m[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        p = m[pivot_row][col]
        for i in range(pivot_row):
            q = m[i][col] // p
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return m, u


def kernel_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the integer right kernel {x : rows * x = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    aug = []
    cols = transpose(rows)
    for j in range(ncols):
        aug.append(list(cols[j]) + [1 if k == j else 0 for k in range(ncols)])
    h = hnf_rows(aug)
    nleft = len(rows)
    out = []
    for row in h:
        if all(x == 0 for x in row[:nleft]):
            out.append(row[nleft:])
    # Rows of an HNF with zero left block are themselves reduced.
    return out


def solve_int_combination(rows: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """c with sum c_i rows_i = target, or None if target is not in the span."""
    if not rows:
        return None if any(target) else []
    h, u = hnf_with_transform(rows)
    coeffs = [0] * len(rows)
    t = list(target)
    hr = [r for r in h if any(r)]
    for idx, row in enumerate(hr):
        col = next(j for j, x in enumerate(row) if x != 0)
        if t[col] % row[col] != 0:
            return None
        q = t[col] // row[col]
        t = [a - q * b for a, b in zip(t, row)]
        coeffs[idx] = q
    if any(t):
        return None
    # coeffs is in terms of h rows; convert back through u.
    out = [0] * len(rows)
    for idx, c in enumerate(coeffs):
        if c:
            for j in range(len(rows)):
                out[j] += c * u[idx][j]
    return out


def solve_int_linear(coeffs: Sequence[int], c: int) -> list[int] | None:
    """A particular integer solution of sum coeffs_i x_i = c, or None."""
    n = len(coeffs)
    if n == 0:
        return [] if c == 0 else None
    # Fold extended gcd.
    g = 0
    combo = [0] * n
    for idx, a in enumerate(coeffs):
        if a == 0:
            continue
        if g == 0:
            g = abs(a)
            combo = [0] * n
            combo[idx] = 1 if a > 0 else -1
            continue
        gg, s, t = _xgcd(g, a)
        combo = [s * x for x in combo]
        combo[idx] += t
        g = gg
    if g == 0:
        return [0] * n if c == 0 else None
    if c % g != 0:
        return None
    q = c // g
    return [q * x for x in combo]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def quotient_reps(h: Sequence[Sequence[int]]) -> Iterator[list[int]]:
    """Representatives of Z^r / rowspan(H) for a full-rank square HNF H."""
    r = len(h)
    diag = [h[i][i] for i in range(r)]
    idx = [0] * r

    def rec(level: int, acc: list[int]):
        if level == r:
            yield list(acc)
            return
        for t in range(diag[level]):
            acc[level] = t
            yield from rec(level + 1, acc)

    yield from rec(0, idx)


# -- determinants -------------------------------------------------------------

def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_fraction(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    den = 1
    for r in rows:
        for x in r:
            den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    m = [[int(Fraction(x) * den) for x in r] for r in rows]
    return Fraction(det_int(m), den ** n)


def frac_inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a rational matrix by Gauss-Jordan."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [r[n:] for r in m]


def frac_solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve A x = rhs for square nonsingular rational A."""
    inv = frac_inverse(rows)
    return [sum(inv[i][j] * Fraction(rhs[j]) for j in range(len(rhs))) for i in range(len(rows))]


def symmetric_signature(gram: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a rational symmetric matrix."""
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    idx = list(range(n))

    def swap(i, j):
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]

    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            offdiag = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if m[i][j] != 0:
                        offdiag = (i, j)
                        break
                if offdiag:
                    break
            if offdiag is None:
                zero += n - k
                break
            i, j = offdiag
            # row/col op: e_i += e_j makes the diagonal nonzero
            m[i] = [a + b for a, b in zip(m[i], m[j])]
            for row in m:
                row[i] = row[i] + row[j]
            continue
        if piv != k:
            swap(piv, k)
        d = m[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] / d
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
                for row in m:
                    row[i] = row[i] - f * row[k]
        k += 1
    del idx
    return pos, neg, zero


# -- LLL on Gram matrices -----------------------------------------------------

def lll_gram(gram: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)):
    """LLL-reduce an integer Gram matrix.

    Returns (reduced_gram, U, Uinv) with reduced = U * gram * U^T and
    U * Uinv = I.  Positive-definite input only.
    """
    n = len(gram)
    u = identity(n)
    uinv = identity(n)
    # Gram of the current basis, updated alongside the transforms.
    cur = [[Fraction(x) for x in row] for row in gram]

    def row_op(i, j, q):
        # b_i <- b_i - q b_j
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]
        for k in range(n):
            uinv[k][j] = uinv[k][j] + q * uinv[k][i]
        for k in range(n):
            cur[i][k] = cur[i][k] - q * cur[j][k]
        for k in range(n):
            cur[k][i] = cur[k][i] - q * cur[k][j]

    def row_swap(i, j):
        u[i], u[j] = u[j], u[i]
        for k in range(n):
            uinv[k][i], uinv[k][j] = uinv[k][j], uinv[k][i]
        cur[i], cur[j] = cur[j], cur[i]
        for k in range(n):
            cur[k][i], cur[k][j] = cur[k][j], cur[k][i]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            bstar[i] = cur[i][i]
            for j in range(i):
                mu[i][j] = (cur[i][j] - sum(mu[i][k] * mu[j][k] * bstar[k] for k in range(j))) / bstar[j]
                bstar[i] -= mu[i][j] ** 2 * bstar[j]
        return mu, bstar

    mu, bstar = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                row_op(k, j, q)
                for jp in range(j):
                    mu[k][jp] -= q * mu[j][jp]
                mu[k][j] -= q
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            row_swap(k, k - 1)
            mu, bstar = gso()
            k = max(k - 1, 1)
    return [[int(x) for x in row] for row in cur], u, uinv


# -- Fincke-Pohst enumeration -------------------------------------------------

class QuadraticEnumerator:
    """Exact enumeration of integer vectors of bounded value of a form.

    The form is given by an integer positive-definite Gram matrix; the
    enumerator finds all x in Z^n with Q(x - t) <= bound for rational
    targets t.  All comparisons are exact; the inner loop runs on plain
    integers by clearing denominators once per instance.
    """

    def __init__(self, gram: Sequence[Sequence[int]], reduce_basis: bool = True):
        self.n = len(gram)
        self.gram = [list(map(int, row)) for row in gram]
        if reduce_basis and self.n > 1:
            self.red, self.u, self.uinv = lll_gram(self.gram)
        else:
            self.red = self.gram
            self.u = identity(self.n)
            self.uinv = identity(self.n)
        # LDL of the reduced Gram: Q(y) = sum_i d_i (y_i + sum_{j>i} mu_ij y_j)^2
        n = self.n
        g = [[Fraction(x) for x in row] for row in self.red]
        d = [Fraction(0)] * n
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            d[i] = g[i][i] - sum(d[k] * mu[k][i] ** 2 for k in range(i))
            if d[i] <= 0:
                raise ValueError("form is not positive definite")
            for j in range(i + 1, n):
                mu[i][j] = (g[i][j] - sum(d[k] * mu[k][i] * mu[k][j] for k in range(i))) / d[i]
        self.d = d
        self.mu = mu

    def _prepared(self, center: Sequence[Fraction] | None):
        n = self.n
        if center is None:
            t = [Fraction(0)] * n
        else:
            # center in original coordinates -> reduced coordinates
            t = [sum(Fraction(center[j]) * Fraction(self.uinv[j][i]) for j in range(n))
                 for i in range(n)]
        tden = 1
        for x in t:
            tden = tden * x.denominator // math.gcd(tden, x.denominator)
        a = [int(x * tden) for x in t]
        mrow = []
        mnum = []
        for i in range(n):
            den = 1
            for j in range(i + 1, n):
                dj = self.mu[i][j].denominator
                den = den * dj // math.gcd(den, dj)
            mrow.append(den)
            mnum.append([int(self.mu[i][j] * den) if j > i else 0 for j in range(n)])
        # scale so every level contribution is integral
        scale = 1
        for i in range(n):
            lev = self.d[i].denominator * (mrow[i] * tden) ** 2
            scale = scale * lev // math.gcd(scale, lev)
        f = [self.d[i].numerator * (scale // (self.d[i].denominator * (mrow[i] * tden) ** 2))
             for i in range(n)]
        return t, tden, a, mrow, mnum, scale, f

    def enumerate(self, bound: Fraction, center: Sequence[Fraction] | None = None,
                  half: bool = False) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Yield (x, Q(x - center)) over all solutions, x in original coords.

        With half=True (center must be None) one of each +-x pair is
        produced and x = 0 is skipped.
        """
        bound = Fraction(bound)
        if bound < 0:
            return
        n = self.n
        t, tden, a, mrow, mnum, scale, f = self._prepared(center)
        half = half and center is None
        # remaining budget carried as integer against 'scale'
        bnum, bden = bound.numerator, bound.denominator
        # compare sum_i f_i N_i^2 <= bound * scale  (cross-multiplied by bden)
        total = bnum * scale
        fs = [fi * bden for fi in f]
        x = [0] * n
        w = [0] * n  # w_j = tden*x_j - a_j
        psum = [[0] * (n + 1) for _ in range(n)]  # psum[i][l] = sum_{j>=l} mnum[i][j]*w_j

        def rec(level: int, used: int, zero_above: bool):
            if level < 0:
                q = Fraction(used, bden * scale)
                yield (tuple(x), q)
                return
            m = mrow[level] * tden
            base = -mrow[level] * a[level] + psum[level][level + 1]
            rem = total - used
            if rem < 0:
                return
            fl = fs[level]
            # range of integer xv with fl * (m*xv + base)^2 <= rem
            lim = math.isqrt(rem // fl)
            lo_x = -((lim + base) // m)
            hi_x = (lim - base) // m
            start = lo_x
            if half and zero_above:
                start = max(0, lo_x)
            for xv in range(start, hi_x + 1):
                if half and zero_above and xv == 0 and level == 0:
                    continue
                nlev = m * xv + base
                used2 = used + fl * nlev * nlev
                if used2 > total:
                    continue
                x[level] = xv
                wl = tden * xv - a[level]
                w[level] = wl
                for i in range(level):
                    psum[i][level] = psum[i][level + 1] + mnum[i][level] * wl
                yield from rec(level - 1, used2, zero_above and xv == 0)
            x[level] = 0

        for sol, q in rec(n - 1, 0, True):
            # map back to original coordinates: rows of u are the reduced basis
            orig = [0] * n
            for i in range(n):
                if sol[i]:
                    ui = self.u[i]
                    for j in range(n):
                        orig[j] += sol[i] * ui[j]
            yield tuple(orig), q
